use std::io::Write;

use pslab::bijections::{phi_layered, verify_bijection, BijectionId, BijectionReport};
use pslab::formulas::{formula_ids, FormulaId, FormulaValue};
use pslab::patterns::{shard_prefixes, AvoidanceClass, ClassOptions};
use pslab::rgf::{check_limit, RgfIter};
use pslab::verify::{check_ids, discrepancy_report, run_check, Status, VerifySuiteResult};
use pslab::{distribution as tally, PatternSet, Poly1, Poly4, Rgf, SetPartition, StatKind};
use rayon::prelude::*;
use serde_json::json;

use crate::{Failure, Format, Settings};

/// Shards are prefixes of this length.
const SHARD_DEPTH: usize = 5;

fn shard_prefixes_for(
    n: usize,
    avoid: Option<&PatternSet>,
    opts: ClassOptions,
) -> pslab::Result<Vec<Rgf>> {
    let depth = n.min(SHARD_DEPTH);
    match avoid {
        Some(p) => shard_prefixes(n, p, depth, opts),
        None => {
            check_limit(n, opts.limit)?;
            Ok(RgfIter::with_limit(depth, opts.limit)?.collect())
        }
    }
}

fn shard(
    n: usize,
    avoid: Option<&PatternSet>,
    prefix: &Rgf,
    opts: ClassOptions,
) -> pslab::Result<AvoidanceClass> {
    match avoid {
        Some(p) => AvoidanceClass::from_prefix(n, p, prefix, opts),
        None => AvoidanceClass::unrestricted(n, prefix, opts),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn json_line(out: &mut impl Write, value: &impl serde::Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

pub fn enumerate(
    s: &Settings,
    out: &mut impl Write,
    n: usize,
    avoid: Option<&PatternSet>,
    blocks: bool,
    prune: bool,
) -> Result<(), Failure> {
    let opts = ClassOptions {
        limit: s.limit,
        prune,
    };
    let prefixes = shard_prefixes_for(n, avoid, opts)?;
    let render = |w: &Rgf| {
        if blocks {
            SetPartition::from_rgf(w).to_string()
        } else {
            w.to_string()
        }
    };
    if s.format == Format::Csv {
        writeln!(out, "{}", if blocks { "blocks" } else { "rgf" })?;
    }
    let mut all = Vec::new();
    let mut count = 0usize;
    // ordered chunks keep memory bounded while the output stays deterministic
    for chunk in prefixes.chunks(s.jobs * 4) {
        let words: Vec<Vec<String>> = chunk
            .par_iter()
            .map(|p| Ok(shard(n, avoid, p, opts)?.map(|w| render(&w)).collect()))
            .collect::<pslab::Result<_>>()?;
        for w in words.into_iter().flatten() {
            count += 1;
            match s.format {
                Format::Json => all.push(w),
                Format::Text => writeln!(out, "{w}")?,
                Format::Csv => writeln!(out, "{}", csv_field(&w))?,
            }
        }
    }
    match s.format {
        Format::Json => json_line(
            out,
            &json!({
                "n": n,
                "avoid": avoid.map(|p| p.to_string()),
                "count": count,
                "words": all,
            }),
        )?,
        Format::Text => writeln!(out, "count: {count}")?,
        Format::Csv => {}
    }
    Ok(())
}

fn write_poly4(s: &Settings, out: &mut impl Write, p: &Poly4) -> Result<(), Failure> {
    match s.format {
        Format::Text => writeln!(out, "{p}")?,
        Format::Json => json_line(out, &p.to_json())?,
        Format::Csv => write!(out, "{}", p.to_csv())?,
    }
    Ok(())
}

fn write_poly1(s: &Settings, out: &mut impl Write, p: &Poly1) -> Result<(), Failure> {
    match s.format {
        Format::Text => writeln!(out, "{p}")?,
        Format::Json => json_line(out, &p.to_json())?,
        Format::Csv => write!(out, "{}", p.to_csv())?,
    }
    Ok(())
}

pub fn distribution_of(
    n: usize,
    avoid: Option<&PatternSet>,
    opts: ClassOptions,
) -> pslab::Result<Poly4> {
    let prefixes = shard_prefixes_for(n, avoid, opts)?;
    let parts: Vec<Poly4> = prefixes
        .par_iter()
        .map(|p| Ok(tally(shard(n, avoid, p, opts)?)))
        .collect::<pslab::Result<_>>()?;
    Ok(parts.into_iter().sum())
}

pub fn distribution(
    s: &Settings,
    out: &mut impl Write,
    n: usize,
    avoid: Option<&PatternSet>,
    stat: Option<StatKind>,
    prune: bool,
) -> Result<(), Failure> {
    let opts = ClassOptions {
        limit: s.limit,
        prune,
    };
    let f = distribution_of(n, avoid, opts)?;
    match stat {
        Some(k) => write_poly1(s, out, &f.specialize(k)),
        None => write_poly4(s, out, &f),
    }
}

pub fn list_formulas(s: &Settings, out: &mut impl Write) -> Result<(), Failure> {
    let ids: Vec<String> = formula_ids().iter().map(|f| f.to_string()).collect();
    match s.format {
        Format::Json => json_line(out, &ids)?,
        Format::Csv => {
            writeln!(out, "id")?;
            for id in ids {
                writeln!(out, "{id}")?;
            }
        }
        Format::Text => {
            for id in ids {
                writeln!(out, "{id}")?;
            }
        }
    }
    Ok(())
}

fn with_singletons(p: &PatternSet, t: usize) -> pslab::Result<PatternSet> {
    let mut all = p.patterns().to_vec();
    all.push(PatternSet::all_singletons(t));
    PatternSet::new(all)
}

pub fn formula(
    s: &Settings,
    out: &mut impl Write,
    id: &str,
    n: usize,
    t: Option<usize>,
) -> Result<(), Failure> {
    let mut id: FormulaId = id.parse()?;
    if let Some(t) = t {
        id = match id {
            FormulaId::Stat(k, p) => FormulaId::Stat(k, with_singletons(&p, t)?),
            _ => {
                return Err(Failure::Usage(
                    "--t applies to single-statistic formulas".into(),
                ))
            }
        };
    }
    match id.evaluate(n)? {
        FormulaValue::Full(c) => {
            write_corrected_note(s, &id, c.printed.as_ref().map(|p| p.to_string()), c.note);
            if s.format == Format::Json {
                json_line(
                    out,
                    &json!({
                        "id": id.to_string(),
                        "n": n,
                        "value": c.value.to_json(),
                        "printed": c.printed.map(|p| p.to_json()),
                        "note": c.note,
                    }),
                )?;
            } else {
                write_poly4(s, out, &c.value)?;
            }
        }
        FormulaValue::Stat(c) => {
            write_corrected_note(s, &id, c.printed.as_ref().map(|p| p.to_string()), c.note);
            if s.format == Format::Json {
                json_line(
                    out,
                    &json!({
                        "id": id.to_string(),
                        "n": n,
                        "value": c.value.to_json(),
                        "printed": c.printed.map(|p| p.to_json()),
                        "note": c.note,
                    }),
                )?;
            } else {
                write_poly1(s, out, &c.value)?;
            }
        }
        FormulaValue::Facts(f) => match s.format {
            Format::Json => json_line(out, &json!({"id": id.to_string(), "n": n, "facts": f}))?,
            Format::Csv => {
                writeln!(out, "degree,leading,constant,linear")?;
                writeln!(
                    out,
                    "{},{},{},{}",
                    f.degree,
                    f.leading,
                    show(&f.constant),
                    show(&f.linear)
                )?;
            }
            Format::Text => {
                writeln!(out, "degree: {}", f.degree)?;
                writeln!(out, "leading: {}", f.leading)?;
                writeln!(out, "constant: {}", show(&f.constant))?;
                writeln!(out, "linear: {}", show(&f.linear))?;
            }
        },
    }
    Ok(())
}

fn show<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or("-".to_string(), T::to_string)
}

/// Text and CSV keep stdout to the corrected value; the printed form goes to stderr.
fn write_corrected_note(s: &Settings, id: &FormulaId, printed: Option<String>, note: Option<&str>) {
    if let (Some(p), false) = (printed, s.format == Format::Json) {
        eprintln!("note: {id} corrected; printed form {p}");
        if let Some(note) = note {
            eprintln!("note: {note}");
        }
    }
}

pub fn bijection(
    s: &Settings,
    out: &mut impl Write,
    id: &str,
    word: Option<&str>,
    n: Option<usize>,
) -> Result<(), Failure> {
    let id: BijectionId = id.parse()?;
    if let Some(word) = word {
        let w: Rgf = word.parse()?;
        let image = match id {
            BijectionId::PhiLayered => phi_layered(&w)?.to_string(),
            other => other.apply(&w)?.to_string(),
        };
        match s.format {
            Format::Text => writeln!(out, "{image}")?,
            Format::Json => json_line(
                out,
                &json!({"id": id.id(), "word": w.to_string(), "image": image}),
            )?,
            Format::Csv => writeln!(
                out,
                "word,image\n{},{}",
                csv_field(&w.to_string()),
                csv_field(&image)
            )?,
        }
        return Ok(());
    }
    let n = n.expect("clap enforces --word or --n");
    check_limit(n, s.limit)?;
    let report = verify_bijection(id, n)?;
    write_report(s, out, &report)?;
    if report.success() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn write_report(s: &Settings, out: &mut impl Write, r: &BijectionReport) -> Result<(), Failure> {
    let involution = match r.involution {
        Some(b) => b.to_string(),
        None => "not claimed".to_string(),
    };
    let rows = [
        ("id", r.id.id().to_string()),
        ("n", r.n.to_string()),
        ("domain_size", r.domain_size.to_string()),
        ("codomain_size", r.codomain_size.to_string()),
        ("injective", r.injective.to_string()),
        ("surjective", r.surjective.to_string()),
        ("transfers_hold", r.transfers_hold.to_string()),
        ("involution", involution),
        (
            "result",
            if r.success() { "success" } else { "failure" }.to_string(),
        ),
    ];
    match s.format {
        Format::Json => json_line(out, &json!({"report": r, "success": r.success()}))?,
        Format::Csv => {
            writeln!(out, "key,value")?;
            for (k, v) in rows {
                writeln!(out, "{k},{}", csv_field(&v))?;
            }
            for c in &r.counterexamples {
                writeln!(out, "counterexample,{}", csv_field(c))?;
            }
        }
        Format::Text => {
            for (k, v) in rows {
                writeln!(out, "{k}: {v}")?;
            }
            for c in &r.counterexamples {
                writeln!(out, "counterexample: {c}")?;
            }
        }
    }
    Ok(())
}

pub fn verify(
    s: &Settings,
    out: &mut impl Write,
    max_n: usize,
    filter: Option<&str>,
) -> Result<(), Failure> {
    let ids: Vec<String> = check_ids()
        .into_iter()
        .filter(|id| filter.is_none_or(|f| id.contains(f)))
        .collect();
    if ids.is_empty() {
        return Err(Failure::Usage(format!(
            "no check id contains {:?}",
            filter.unwrap_or("")
        )));
    }
    let checks = ids
        .par_iter()
        .map(|id| run_check(id, max_n))
        .collect::<pslab::Result<Vec<_>>>()?;
    let suite = VerifySuiteResult {
        max_n,
        checks,
        discrepancies: discrepancy_report(max_n)?,
    };
    match s.format {
        Format::Json => json_line(out, &json!({"passed": suite.passed(), "suite": suite}))?,
        Format::Csv => {
            writeln!(out, "id,status,detail")?;
            for c in &suite.checks {
                writeln!(
                    out,
                    "{},{},{}",
                    csv_field(&c.id),
                    c.status,
                    csv_field(&c.detail)
                )?;
            }
            let mut err = std::io::stderr().lock();
            write_discrepancies(&mut err, &suite)?;
        }
        Format::Text => {
            let width = suite.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
            for c in &suite.checks {
                writeln!(
                    out,
                    "{:<9} {:<width$}  {}",
                    c.status.to_string(),
                    c.id,
                    c.detail
                )?;
            }
            writeln!(
                out,
                "summary: {} pass, {} corrected, {} fail (max n = {max_n})",
                suite.count(Status::Pass),
                suite.count(Status::Corrected),
                suite.count(Status::Fail)
            )?;
            write_discrepancies(out, &suite)?;
        }
    }
    if suite.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn write_discrepancies(out: &mut impl Write, suite: &VerifySuiteResult) -> std::io::Result<()> {
    writeln!(out, "discrepancies between printed and corrected formulas:")?;
    for d in &suite.discrepancies {
        writeln!(out, "  {} (first differs at n = {})", d.id, d.n)?;
        writeln!(out, "    printed:   {}", d.printed)?;
        writeln!(out, "    corrected: {}", d.corrected)?;
        writeln!(out, "    note: {}", d.note)?;
    }
    Ok(())
}
