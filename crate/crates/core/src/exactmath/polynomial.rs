//! Sparse multivariate polynomials over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::rational::{fmt_rational, Rational};
use crate::error::{Error, Result};

/// Exponent vector, one slot per ambient variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Writes the monomial with the given variable names, `1` for the unit.
    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(names)
            .filter(|(e, _)| **e > 0)
            .map(|(e, n)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Arithmetic selector for [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// A polynomial in the variables of its ring, stored without zero terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: Arc<[String]>) -> Self {
        Polynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Arc<[String]>, c: Rational) -> Self {
        let n = vars.len();
        let mut p = Polynomial::zero(vars);
        p.add_term(Monomial::one(n), c);
        p
    }

    pub fn one(vars: Arc<[String]>) -> Self {
        Polynomial::constant(vars, Rational::one())
    }

    pub fn var(vars: Arc<[String]>, index: usize) -> Self {
        let n = vars.len();
        let mut p = Polynomial::zero(vars);
        p.add_term(Monomial::var(n, index), Rational::one());
        p
    }

    pub fn from_terms(
        vars: Arc<[String]>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Polynomial::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one(self.nvars()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    /// Adds `c * m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.nvars(), self.nvars());
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.vars.clone());
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.vars.clone());
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        poly_arith(self, other, PolyOp::Add)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        poly_arith(self, other, PolyOp::Sub)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        poly_arith(self, other, PolyOp::Mul)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.vars.clone());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to variable `index`.
    pub fn derivative(&self, index: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[index];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[index] -= 1;
            out.add_term(Monomial(exps), c * Rational::from_integer(e.into()));
        }
        out
    }

    /// Substitutes `values[i]` for variable `i`; `values` live in a common target ring.
    pub fn substitute(&self, values: &[Polynomial], target: Arc<[String]>) -> Polynomial {
        assert_eq!(values.len(), self.nvars());
        let mut out = Polynomial::zero(target.clone());
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target.clone(), c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &values[i].pow(e);
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Re-embeds into a ring whose variables are a superset; `map[i]` is the
    /// target index of variable `i`.
    pub fn embed(&self, target: Arc<[String]>, map: &[usize]) -> Polynomial {
        let n = target.len();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; n];
            for (i, &x) in m.0.iter().enumerate() {
                e[map[i]] += x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Evaluates every variable at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Lex-leading term (variables ordered as declared).
    pub fn lex_leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / d` if `d` divides `self`, computed by lex division.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        assert!(self.same_ring(d));
        let (lm, lc) = d.lex_leading()?;
        let mut rem = self.clone();
        let mut quo = Polynomial::zero(self.vars.clone());
        while let Some((m, c)) = rem.lex_leading() {
            if !lm.divides(m) {
                return None;
            }
            let qm = m.div(lm);
            let qc = c / lc;
            rem = &rem - &d.mul_monomial(&qm, &qc);
            quo.add_term(qm, qc);
        }
        Some(quo)
    }

    /// Sorted support, descending by (total degree, lex).
    fn display_order(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            b.0.degree()
                .cmp(&a.0.degree())
                .then_with(|| b.0.cmp(a.0))
        });
        v
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.display_order() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{}", fmt_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{}", m.render(&self.vars))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&a), m.render(&self.vars))?;
            }
        }
        Ok(())
    }
}

/// Exact `a op b` in canonical form; fails if the rings differ.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: PolyOp) -> Result<Polynomial> {
    if !a.same_ring(b) {
        return Err(Error::usage(format!(
            "polynomial ring mismatch: [{}] vs [{}]",
            a.vars.join(","),
            b.vars.join(",")
        )));
    }
    Ok(match op {
        PolyOp::Add => {
            let mut out = a.clone();
            for (m, c) in &b.terms {
                out.add_term(m.clone(), c.clone());
            }
            out
        }
        PolyOp::Sub => {
            let mut out = a.clone();
            for (m, c) in &b.terms {
                out.add_term(m.clone(), -c.clone());
            }
            out
        }
        PolyOp::Mul => {
            let mut out = Polynomial::zero(a.vars.clone());
            for (ma, ca) in &a.terms {
                for (mb, cb) in &b.terms {
                    out.add_term(ma.mul(mb), ca * cb);
                }
            }
            out
        }
    })
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        poly_arith(self, rhs, PolyOp::Add).expect("ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        poly_arith(self, rhs, PolyOp::Sub).expect("ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        poly_arith(self, rhs, PolyOp::Mul).expect("ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

/// Shared variable list helper.
pub fn ring_vars<S: AsRef<str>>(names: &[S]) -> Arc<[String]> {
    names.iter().map(|s| s.as_ref().to_string()).collect::<Vec<_>>().into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{int, rat};

    fn xy() -> (Polynomial, Polynomial) {
        let v = ring_vars(&["x", "y"]);
        (Polynomial::var(v.clone(), 0), Polynomial::var(v, 1))
    }

    #[test]
    fn difference_of_squares() {
        let (x, y) = xy();
        let lhs = &(&x + &y) * &(&x - &y);
        let rhs = &(&x * &x) - &(&y * &y);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "x^2-y^2");
    }

    #[test]
    fn times_zero_is_zero() {
        let (x, y) = xy();
        let f = &(&x * &x) + &y.pow(3);
        let z = Polynomial::zero(f.vars().clone());
        assert!((&f * &z).is_zero());
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let (x, y) = xy();
        let f = &(&x * &x) + &y.pow(3);
        let g = &f + &(&x * &x).scale(&int(-1));
        assert_eq!(g, y.pow(3));
        assert_eq!(g.terms().len(), 1);
    }

    #[test]
    fn ring_mismatch_is_usage_error() {
        let (x, _) = xy();
        let z = Polynomial::var(ring_vars(&["z"]), 0);
        assert!(matches!(x.try_add(&z), Err(Error::Usage(_))));
    }

    #[test]
    fn exact_division() {
        let (x, y) = xy();
        let f = &(&x * &x) + &y.pow(3);
        let g = &f * &(&x + &y);
        assert_eq!(g.div_exact(&f), Some(&x + &y));
        assert_eq!((&g + &x).div_exact(&f), None);
    }

    #[test]
    fn derivative_and_display() {
        let (x, y) = xy();
        let f = &(&x * &x).scale(&rat(1, 2)) - &(&x * &y.pow(2));
        assert_eq!(f.derivative(0).to_string(), "-y^2+x");
        assert_eq!(f.to_string(), "-x*y^2+1/2*x^2");
    }
}
