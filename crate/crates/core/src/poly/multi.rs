use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use super::{Coefficient, MPoly1, Var, VarSwap};
use crate::stats::StatKind;

/// Exponent quadruple `(e_q, e_r, e_s, e_t)`, ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Exponents(pub [u32; 4]);

impl Exponents {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Exponents {
    type Output = Exponents;

    fn add(self, rhs: Exponents) -> Exponents {
        Exponents(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

/// Sparse polynomial in `q, r, s, t`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly4<C> {
    pub(super) terms: BTreeMap<Exponents, C>,
}

impl<C: Coefficient> Default for MPoly4<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> MPoly4<C> {
    pub fn zero() -> Self {
        MPoly4 {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial([0; 4], c)
    }

    /// `c · q^eq r^er s^es t^et`.
    pub fn monomial(e: [u32; 4], c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(Exponents(e), c);
        p
    }

    /// A single variable raised to `power`.
    pub fn var_pow(var: Var, power: u32) -> Self {
        let mut e = [0; 4];
        e[var.index()] = power;
        Self::monomial(e, C::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponents, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exponents, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(C::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (graded-lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: [u32; 4]) -> C {
        self.terms
            .get(&Exponents(e))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// Highest power of `var`; `None` for the zero polynomial.
    pub fn degree_in(&self, var: Var) -> Option<u32> {
        self.terms.keys().map(|e| e.0[var.index()]).max()
    }

    /// Value at `q = r = s = t = 1`.
    pub fn eval_ones(&self) -> C {
        let mut total = C::zero();
        for c in self.terms.values() {
            total += c.clone();
        }
        total
    }

    /// Transposes the exponents of a pair of variables.
    pub fn swap_vars(&self, swap: VarSwap) -> Self {
        let (a, b) = swap.pair();
        Self::from_terms(self.terms.iter().map(|(e, c)| {
            let mut e = *e;
            e.0.swap(a, b);
            (e, c.clone())
        }))
    }

    /// Substitutes 1 for each variable in `vars`.
    pub fn set_one(&self, vars: &[Var]) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| {
            let mut e = *e;
            for v in vars {
                e.0[v.index()] = 0;
            }
            (e, c.clone())
        }))
    }

    /// Keeps only the variable marking `keep` and sets the other three to 1.
    ///
    /// The result is written in `q`, following the single-variable convention
    /// `LB_n(P; q)`, `LS_n(P; q)`, and so on.
    pub fn specialize(&self, keep: StatKind) -> MPoly1<C> {
        MPoly1::from_terms(
            Var::Q,
            self.terms
                .iter()
                .map(|(e, c)| (e.0[keep.index()], c.clone())),
        )
    }
}

impl<C: Coefficient> Add for &MPoly4<C> {
    type Output = MPoly4<C>;

    fn add(self, rhs: &MPoly4<C>) -> MPoly4<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<C: Coefficient> Add for MPoly4<C> {
    type Output = MPoly4<C>;

    fn add(self, rhs: MPoly4<C>) -> MPoly4<C> {
        &self + &rhs
    }
}

impl<C: Coefficient> Mul for &MPoly4<C> {
    type Output = MPoly4<C>;

    fn mul(self, rhs: &MPoly4<C>) -> MPoly4<C> {
        let mut out = MPoly4::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(*ea + *eb, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Mul for MPoly4<C> {
    type Output = MPoly4<C>;

    fn mul(self, rhs: MPoly4<C>) -> MPoly4<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> std::iter::Sum for MPoly4<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}
