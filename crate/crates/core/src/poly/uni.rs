use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use super::{Coefficient, Var};

/// Sparse single-variable polynomial. The variable only affects rendering;
/// arithmetic between polynomials tagged with different variables panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly1<C> {
    pub(super) var: Var,
    pub(super) coeffs: BTreeMap<u32, C>,
}

impl<C: Coefficient> MPoly1<C> {
    pub fn zero(var: Var) -> Self {
        MPoly1 {
            var,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(var: Var, c: C) -> Self {
        Self::monomial(var, 0, c)
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, C::one())
    }

    pub fn monomial(var: Var, degree: u32, c: C) -> Self {
        let mut p = Self::zero(var);
        p.add_term(degree, c);
        p
    }

    pub fn from_terms(var: Var, terms: impl IntoIterator<Item = (u32, C)>) -> Self {
        let mut p = Self::zero(var);
        for (d, c) in terms {
            p.add_term(d, c);
        }
        p
    }

    pub fn add_term(&mut self, degree: u32, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(degree).or_insert_with(C::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading(&self) -> C {
        self.coeffs
            .values()
            .next_back()
            .cloned()
            .unwrap_or_else(C::zero)
    }

    pub fn coefficient(&self, degree: u32) -> C {
        self.coeffs.get(&degree).cloned().unwrap_or_else(C::zero)
    }

    /// `(degree, coefficient)` pairs in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &C)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn eval_one(&self) -> C {
        let mut total = C::zero();
        for c in self.coeffs.values() {
            total += c.clone();
        }
        total
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.var), |acc, _| &acc * self)
    }
}

impl<C: Coefficient> Add for &MPoly1<C> {
    type Output = MPoly1<C>;

    fn add(self, rhs: &MPoly1<C>) -> MPoly1<C> {
        assert_eq!(
            self.var, rhs.var,
            "adding polynomials in different variables"
        );
        let mut out = self.clone();
        for (d, c) in &rhs.coeffs {
            out.add_term(*d, c.clone());
        }
        out
    }
}

impl<C: Coefficient> Add for MPoly1<C> {
    type Output = MPoly1<C>;

    fn add(self, rhs: MPoly1<C>) -> MPoly1<C> {
        &self + &rhs
    }
}

impl<C: Coefficient> Mul for &MPoly1<C> {
    type Output = MPoly1<C>;

    fn mul(self, rhs: &MPoly1<C>) -> MPoly1<C> {
        assert_eq!(
            self.var, rhs.var,
            "multiplying polynomials in different variables"
        );
        let mut out = MPoly1::zero(self.var);
        for (da, ca) in &self.coeffs {
            for (db, cb) in &rhs.coeffs {
                out.add_term(da + db, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Mul for MPoly1<C> {
    type Output = MPoly1<C>;

    fn mul(self, rhs: MPoly1<C>) -> MPoly1<C> {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Poly1;
    use num_bigint::BigInt;

    #[test]
    fn basic_queries() {
        let p: Poly1 = "3 + q".parse().unwrap();
        assert_eq!(p.coefficient(1), BigInt::from(1));
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.leading(), BigInt::from(1));
        assert_eq!(Poly1::zero(Var::Q).degree(), None);
        assert_eq!(p.eval_one(), BigInt::from(4));
    }

    #[test]
    fn powers() {
        let p: Poly1 = "1 + q".parse().unwrap();
        assert_eq!(p.pow(3).to_string(), "1 + 3*q + 3*q^2 + q^3");
        assert_eq!(p.pow(0).to_string(), "1");
    }

    #[test]
    fn other_variables() {
        let p: Poly1 = "1 + 2*r^3".parse().unwrap();
        assert_eq!(p.var(), Var::R);
        assert_eq!(p.clone().with_var(Var::T).to_string(), "1 + 2*t^3");
        assert!("q + r".parse::<Poly1>().is_err());
    }

    #[test]
    #[should_panic(expected = "different variables")]
    fn mixing_variables_panics() {
        let _ = Poly1::one(Var::Q) + Poly1::one(Var::R);
    }
}
