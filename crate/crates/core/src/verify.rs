//! The certification suite: every closed form, structural characterization,
//! bijection and symmetry checked against exhaustive enumeration.
//!
//! Checks are addressed by string ids and run independently, so callers can
//! filter them or spread them over threads. Each check covers a fixed range
//! of sizes, cut off at the caller's `max_n`.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::bijections::{verify_bijection, BijectionId};
use crate::error::{Error, Result};
use crate::formulas::{
    cardinality, divisor_count, formula_ids, table_sets, table_words, tau, FormulaId, FormulaValue,
};
use crate::partition::SetPartition;
use crate::patterns::{
    avoidance_class, avoids_all, characterizes, contains_partition, contains_rgf_subsequence, pi3,
    PatternSet,
};
use crate::poly::{distribution, VarSwap};
use crate::rgf::{enumerate_rgfs, Rgf};
use crate::stats::StatKind;
use crate::{Poly1, Poly4};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The corrected formula agrees with enumeration; the printed one does not.
    Corrected,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Corrected => "corrected",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

/// A formula whose printed form disagrees with enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub id: String,
    pub n: usize,
    pub printed: String,
    pub corrected: String,
    pub note: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifySuiteResult {
    pub max_n: usize,
    pub checks: Vec<CheckResult>,
    pub discrepancies: Vec<Discrepancy>,
}

impl VerifySuiteResult {
    /// True when no check failed; corrected entries count as passes.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }
}

const STRUCT_SETS: [&str; 7] = [
    "1/2/3",
    "1/23",
    "13/2",
    "12/3",
    "123",
    "14/2/3",
    "14/2/3,13/2/4",
];

const QT_EXTRA: [&str; 4] = ["1/2/3,1/23", "1/23,12/3", "1/23,123", "12/3,123"];
const RS_SETS: [&str; 2] = ["1/2/3,13/2", "1/23,12/3"];
/// `F(P; q,r,s,t) = F(Q; q,s,r,t)`.
const CROSS: [(&str, &str); 2] = [("1/23,13/2", "13/2,12/3"), ("1/23,123", "12/3,123")];

fn pset(s: &str) -> PatternSet {
    s.parse().expect("valid literal")
}

/// Every subset of the five patterns of `[3]` that contains `13/2`.
fn sets_with_13_2() -> Vec<PatternSet> {
    let others: Vec<SetPartition> = pi3()
        .into_iter()
        .filter(|p| p.to_string() != "13/2")
        .collect();
    (0..1u32 << others.len())
        .map(|mask| {
            let mut chosen = vec![pset("13/2").patterns()[0].clone()];
            chosen.extend(
                (0..others.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| others[i].clone()),
            );
            PatternSet::new(chosen).expect("nonempty")
        })
        .collect()
}

/// All check ids, in suite order.
pub fn check_ids() -> Vec<String> {
    let mut ids = Vec::new();
    for p in pi3() {
        ids.push(format!("card.{}", PatternSet::single(p).id()));
    }
    for f in formula_ids() {
        ids.push(format!("formula.{f}"));
    }
    for p in table_sets() {
        ids.push(format!("table.{}", p.id()));
    }
    for s in STRUCT_SETS {
        ids.push(format!("struct.{}", pset(s).id()));
    }
    for b in BijectionId::ALL {
        ids.push(b.id().to_string());
    }
    let mut qt: Vec<String> = sets_with_13_2().iter().map(|p| p.id()).collect();
    qt.extend(QT_EXTRA.iter().map(|s| pset(s).id()));
    for p in qt {
        ids.push(format!("sym.qt.{p}"));
    }
    for s in RS_SETS {
        ids.push(format!("sym.rs.{}", pset(s).id()));
    }
    for (a, b) in CROSS {
        ids.push(format!("sym.cross.{}~{}", pset(a).id(), pset(b).id()));
    }
    ids.push("sym.stat.1_23~12_3".into());
    ids.push("subseq.pi3".into());
    ids.push("divisors.lb.12_3".into());
    ids
}

fn class(n: usize, p: &PatternSet) -> Result<Vec<Rgf>> {
    Ok(avoidance_class(n, p)?.collect())
}

fn brute_full(n: usize, p: &PatternSet) -> Result<Poly4> {
    Ok(distribution(class(n, p)?))
}

fn brute_stat(n: usize, p: &PatternSet, kind: StatKind) -> Result<Poly1> {
    Ok(brute_full(n, p)?.specialize(kind))
}

fn sizes(lo: usize, hi: usize, max_n: usize) -> std::ops::RangeInclusive<usize> {
    lo..=hi.min(max_n)
}

fn range_text(r: &std::ops::RangeInclusive<usize>) -> String {
    if r.is_empty() {
        "no sizes in range".into()
    } else {
        format!("n = {}..={}", r.start(), r.end())
    }
}

/// Accumulates the outcome of one check.
struct Outcome {
    failures: Vec<String>,
    /// Sizes where the printed form disagrees.
    corrected: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            failures: Vec::new(),
            corrected: Vec::new(),
        }
    }

    fn fail(&mut self, msg: String) {
        if self.failures.len() < 5 {
            self.failures.push(msg);
        }
    }

    fn finish(self, id: &str, summary: String) -> CheckResult {
        let (status, detail) = if !self.failures.is_empty() {
            (Status::Fail, self.failures.join("; "))
        } else if !self.corrected.is_empty() {
            let first = &self.corrected[0];
            let k = self.corrected.len();
            (
                Status::Corrected,
                format!("{summary}; printed form differs at {k} sizes, first {first}"),
            )
        } else {
            (Status::Pass, summary)
        };
        CheckResult {
            id: id.to_string(),
            status,
            detail,
        }
    }
}

/// Runs one check on sizes up to `max_n`.
pub fn run_check(id: &str, max_n: usize) -> Result<CheckResult> {
    let unknown = || Error::UnknownId(id.to_string());
    let (kind, rest) = id.split_once('.').ok_or_else(unknown)?;
    match kind {
        "card" => check_cardinality(id, &PatternSet::from_id(rest)?, max_n),
        "formula" => check_formula(id, &rest.parse()?, max_n),
        "table" => check_table(id, &PatternSet::from_id(rest)?, max_n),
        "struct" => check_structure(id, &PatternSet::from_id(rest)?, max_n),
        "bij" => check_bijection(id, id.parse()?, max_n),
        "sym" => check_symmetry(id, rest, max_n),
        "subseq" if rest == "pi3" => check_subsequence(id, max_n),
        "divisors" if rest == "lb.12_3" => check_divisors(id, max_n),
        _ => Err(unknown()),
    }
}

/// Runs every check whose id contains `filter`.
pub fn run_suite(max_n: usize, filter: Option<&str>) -> Result<VerifySuiteResult> {
    let checks = check_ids()
        .into_iter()
        .filter(|id| filter.is_none_or(|f| id.contains(f)))
        .map(|id| run_check(&id, max_n))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifySuiteResult {
        max_n,
        checks,
        discrepancies: discrepancy_report(max_n)?,
    })
}

fn check_cardinality(id: &str, p: &PatternSet, max_n: usize) -> Result<CheckResult> {
    let mut out = Outcome::new();
    let r = sizes(0, 12, max_n);
    for n in r.clone() {
        let got = BigInt::from(avoidance_class(n, p)?.count());
        let want = cardinality(n, &p.patterns()[0])?;
        if got != want {
            out.fail(format!("n={n}: enumerated {got}, closed form {want}"));
        }
    }
    Ok(out.finish(id, range_text(&r)))
}

fn formula_range(f: &FormulaId) -> (usize, usize) {
    match f {
        FormulaId::Facts(_) => (3, 12),
        FormulaId::Full(p) if p.len() == 2 => (3, 10),
        FormulaId::Stat(StatKind::Ls, p) if p.id() == "123" => (0, 12),
        _ => (0, 10),
    }
}

fn check_formula(id: &str, f: &FormulaId, max_n: usize) -> Result<CheckResult> {
    let (lo, hi) = formula_range(f);
    let r = sizes(lo, hi, max_n);
    let mut out = Outcome::new();
    for n in r.clone() {
        match (f, f.evaluate(n)?) {
            (FormulaId::Full(p), FormulaValue::Full(c)) => {
                let brute = brute_full(n, p)?;
                if c.value != brute {
                    out.fail(format!(
                        "n={n}: closed form {} but enumeration gives {brute}",
                        c.value
                    ));
                } else if c.printed.is_some() {
                    out.corrected.push(format!("n={n}"));
                }
            }
            (FormulaId::Stat(kind, p), FormulaValue::Stat(c)) => {
                let brute = brute_stat(n, p, *kind)?;
                if c.value != brute {
                    out.fail(format!(
                        "n={n}: closed form {} but enumeration gives {brute}",
                        c.value
                    ));
                } else if c.printed.is_some() {
                    out.corrected.push(format!("n={n}"));
                }
            }
            (FormulaId::Facts(kind), FormulaValue::Facts(facts)) => {
                let brute = brute_stat(n, &pset(kind.patterns()), kind.stat())?;
                let bad = facts.mismatches(&brute);
                if !bad.is_empty() {
                    out.fail(format!("n={n}: {}", bad.join(", ")));
                }
            }
            _ => unreachable!("evaluate returns the matching variant"),
        }
    }
    Ok(out.finish(id, range_text(&r)))
}

fn check_table(id: &str, p: &PatternSet, max_n: usize) -> Result<CheckResult> {
    let r = sizes(3, 10, max_n);
    let mut out = Outcome::new();
    for n in r.clone() {
        let mut got = class(n, p)?;
        got.sort();
        let want = table_words(p, n)?;
        if got != want {
            let show = |v: &[Rgf]| {
                v.iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            out.fail(format!(
                "n={n}: enumerated [{}], listed [{}]",
                show(&got),
                show(&want)
            ));
        }
    }
    Ok(out.finish(id, range_text(&r)))
}

fn check_structure(id: &str, p: &PatternSet, max_n: usize) -> Result<CheckResult> {
    let r = sizes(0, 9, max_n);
    let mut out = Outcome::new();
    for n in r.clone() {
        for w in enumerate_rgfs(n)? {
            let oracle = avoids_all(&SetPartition::from_rgf(&w), p);
            if characterizes(&w, p)? != oracle {
                out.fail(format!(
                    "{w}: avoidance {oracle}, characterization {}",
                    !oracle
                ));
            }
        }
    }
    Ok(out.finish(id, format!("{}, all of R_n", range_text(&r))))
}

fn check_bijection(id: &str, b: BijectionId, max_n: usize) -> Result<CheckResult> {
    let r = sizes(0, 10, max_n);
    let mut out = Outcome::new();
    for n in r.clone() {
        let report = verify_bijection(b, n)?;
        for c in report.counterexamples {
            out.fail(format!("n={n}: {c}"));
        }
    }
    Ok(out.finish(id, range_text(&r)))
}

fn check_symmetry(id: &str, rest: &str, max_n: usize) -> Result<CheckResult> {
    let unknown = || Error::UnknownId(id.to_string());
    let (kind, body) = rest.split_once('.').ok_or_else(unknown)?;
    let mut out = Outcome::new();
    let r = match kind {
        "stat" => sizes(0, 10, max_n),
        _ => sizes(3, 9, max_n),
    };
    for n in r.clone() {
        match kind {
            "qt" | "rs" => {
                let swap = if kind == "qt" {
                    VarSwap::QT
                } else {
                    VarSwap::RS
                };
                let f = brute_full(n, &PatternSet::from_id(body)?)?;
                if f.swap_vars(swap) != f {
                    out.fail(format!("n={n}: {f} is not invariant"));
                }
            }
            "cross" => {
                let (a, b) = body.split_once('~').ok_or_else(unknown)?;
                let fa = brute_full(n, &PatternSet::from_id(a)?)?;
                let fb = brute_full(n, &PatternSet::from_id(b)?)?;
                if fa != fb.swap_vars(VarSwap::RS) {
                    out.fail(format!("n={n}: {fa} vs {fb} with r and s exchanged"));
                }
            }
            "stat" => {
                let (a, b) = body.split_once('~').ok_or_else(unknown)?;
                let fa = brute_full(n, &PatternSet::from_id(a)?)?;
                let fb = brute_full(n, &PatternSet::from_id(b)?)?;
                for (x, y) in [(StatKind::Lb, StatKind::Rs), (StatKind::Ls, StatKind::Rb)] {
                    if fa.specialize(x) != fb.specialize(y) {
                        out.fail(format!("n={n}: {x} over {a} differs from {y} over {b}"));
                    }
                }
            }
            _ => return Err(unknown()),
        }
    }
    Ok(out.finish(id, range_text(&r)))
}

fn check_subsequence(id: &str, max_n: usize) -> Result<CheckResult> {
    let r = sizes(0, 7, max_n);
    let mut out = Outcome::new();
    let mut witness = None;
    for n in r.clone() {
        for w in enumerate_rgfs(n)? {
            let sigma = SetPartition::from_rgf(&w);
            for pi in pi3() {
                let v: Vec<usize> = pi.to_rgf().letters().iter().map(|&x| x as usize).collect();
                let avoids = !contains_partition(&sigma, &pi);
                let sub = contains_rgf_subsequence(&w, &v);
                if avoids && sub {
                    out.fail(format!(
                        "{w} avoids {pi} but contains {} as a subsequence",
                        pi.to_rgf()
                    ));
                }
                if !avoids && !sub && witness.is_none() {
                    witness = Some(format!(
                        "converse fails: {w} contains {pi} yet has no subsequence order-isomorphic to {}",
                        pi.to_rgf()
                    ));
                }
            }
        }
    }
    let summary = match witness {
        Some(w) => format!("{}; {w}", range_text(&r)),
        None => format!("{}; no converse witness in range", range_text(&r)),
    };
    Ok(out.finish(id, summary))
}

fn check_divisors(id: &str, max_n: usize) -> Result<CheckResult> {
    let r = sizes(5, 12, max_n);
    let p = pset("12/3");
    let mut out = Outcome::new();
    for n in r.clone() {
        let lb = brute_stat(n, &p, StatKind::Lb)?;
        let top = ((n - 1) * (n - 1) / 4) as u64;
        for k in 1..=top {
            let d = divisor_count(n as u64, k)?;
            if lb.coefficient(k as u32) != BigInt::from(d) {
                out.fail(format!(
                    "n={n}, k={k}: coefficient {} but D_k = {d}",
                    lb.coefficient(k as u32)
                ));
            }
            let t = tau(k)?;
            if k + 2 <= n as u64 && d != t {
                out.fail(format!("n={n}, k={k}: D_k = {d} but tau(k) = {t}"));
            }
        }
    }
    Ok(out.finish(id, range_text(&r)))
}

/// Every registered formula whose printed form differs from the corrected
/// one, shown at the first size n >= 3 where they disagree. Sizes up to 6
/// are searched whatever `max_n` is.
pub fn discrepancy_report(max_n: usize) -> Result<Vec<Discrepancy>> {
    let mut out = Vec::new();
    for f in formula_ids() {
        let (lo, _) = formula_range(&f);
        for n in lo.max(3)..=max_n.max(6) {
            let found = match f.evaluate(n)? {
                FormulaValue::Full(c) => c
                    .printed
                    .map(|p| (p.to_string(), c.value.to_string(), c.note)),
                FormulaValue::Stat(c) => c
                    .printed
                    .map(|p| (p.to_string(), c.value.to_string(), c.note)),
                FormulaValue::Facts(_) => None,
            };
            if let Some((printed, corrected, note)) = found {
                out.push(Discrepancy {
                    id: f.to_string(),
                    n,
                    printed,
                    corrected,
                    note: note.unwrap_or_default().to_string(),
                });
                break;
            }
        }
    }
    Ok(out)
}
