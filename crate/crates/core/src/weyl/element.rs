use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::algebra::WeylAlgebra;
use super::ring::WeylRing;
use crate::error::{Error, Result};
use crate::exactmath::groebner::MonomialAlgebra;
use crate::exactmath::{Monomial, Polynomial, Rational};

/// A Weyl algebra element as a sum of normally ordered monomials
/// `c * x^a * d^b * p^e` (positions left of derivations).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    ring: Arc<WeylRing>,
    terms: BTreeMap<Monomial, Rational>,
}

impl WeylElement {
    pub fn zero(ring: &Arc<WeylRing>) -> Self {
        WeylElement {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<WeylRing>, c: Rational) -> Self {
        let mut e = WeylElement::zero(ring);
        e.add_term(Monomial::one(ring.nvars()), c);
        e
    }

    pub fn one(ring: &Arc<WeylRing>) -> Self {
        WeylElement::constant(ring, Rational::one())
    }

    /// The generator in exponent slot `index`.
    pub fn generator(ring: &Arc<WeylRing>, index: usize) -> Self {
        let mut e = WeylElement::zero(ring);
        e.add_term(Monomial::var(ring.nvars(), index), Rational::one());
        e
    }

    pub fn x(ring: &Arc<WeylRing>, i: usize) -> Self {
        WeylElement::generator(ring, ring.x_index(i))
    }

    pub fn d(ring: &Arc<WeylRing>, i: usize) -> Self {
        WeylElement::generator(ring, ring.d_index(i))
    }

    pub fn param(ring: &Arc<WeylRing>, j: usize) -> Self {
        WeylElement::generator(ring, ring.param_index(j))
    }

    pub fn from_terms(
        ring: &Arc<WeylRing>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut e = WeylElement::zero(ring);
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    /// Embeds a polynomial whose variables are position variables or
    /// parameters of `ring`.
    pub fn from_polynomial(ring: &Arc<WeylRing>, p: &Polynomial) -> Result<Self> {
        let mut map = Vec::with_capacity(p.nvars());
        for v in p.vars().iter() {
            let idx = ring
                .x_vars()
                .iter()
                .position(|x| x == v)
                .or_else(|| {
                    ring.params()
                        .iter()
                        .position(|s| s == v)
                        .map(|j| ring.param_index(j))
                })
                .ok_or_else(|| Error::usage(format!("variable {v} is not central or positional in the Weyl ring")))?;
            map.push(idx);
        }
        let n = ring.nvars();
        Ok(WeylElement::from_terms(
            ring,
            p.terms().iter().map(|(m, c)| {
                let mut e = vec![0; n];
                for (i, &k) in m.exponents().iter().enumerate() {
                    e[map[i]] += k;
                }
                (Monomial::new(e), c.clone())
            }),
        ))
    }

    pub fn ring(&self) -> &Arc<WeylRing> {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        assert_eq!(m.nvars(), self.ring.nvars(), "monomial does not fit the Weyl ring");
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

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return WeylElement::zero(&self.ring);
        }
        WeylElement {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    fn check(&self, other: &WeylElement) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::usage("Weyl elements live in different rings"))
        }
    }

    pub fn try_add(&self, other: &WeylElement) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &WeylElement) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Product in the Weyl algebra, returned in normal order.
    pub fn try_mul(&self, other: &WeylElement) -> Result<Self> {
        self.check(other)?;
        let alg = WeylAlgebra {
            n: self.ring.n(),
            nparams: self.ring.nparams(),
            homogenized: false,
        };
        let mut out = WeylElement::zero(&self.ring);
        let mut buf = Vec::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                buf.clear();
                alg.mul_monomials(ma.exponents(), mb.exponents(), &mut buf);
                let c = ca * cb;
                for (e, k) in buf.drain(..) {
                    out.add_term(Monomial::new(e), &c * Rational::from_integer(k));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = WeylElement::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Highest total degree of a term, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Whether no term contains a variable from `slots`.
    pub fn is_free_of(&self, slots: &[usize]) -> bool {
        self.terms
            .keys()
            .all(|m| slots.iter().all(|&i| m.exponents()[i] == 0))
    }

    /// Commutative polynomial in the parameters, if the element involves no
    /// position or derivation variables.
    pub fn as_param_polynomial(&self) -> Option<Polynomial> {
        let n = self.ring.n();
        let vars: Arc<[String]> = self.ring.params().to_vec().into();
        let mut p = Polynomial::zero(vars);
        for (m, c) in &self.terms {
            let e = m.exponents();
            if e[..2 * n].iter().any(|&k| k > 0) {
                return None;
            }
            p.add_term(Monomial::new(e[2 * n..].to_vec()), c.clone());
        }
        Some(p)
    }

    fn render_monomial(&self, m: &Monomial) -> String {
        let ring = &self.ring;
        let names = ring.names();
        let n = ring.n();
        let e = m.exponents();
        // Parameters first, then positions, then derivations.
        let order = (2 * n..ring.nvars()).chain(0..2 * n);
        let parts: Vec<String> = order
            .filter(|&i| e[i] > 0)
            .map(|i| {
                if e[i] == 1 {
                    names[i].clone()
                } else {
                    format!("{}^{}", names[i], e[i])
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| b.0.cmp(a.0)));
        for (i, (m, c)) in v.into_iter().enumerate() {
            let a = c.abs();
            if c.is_negative() {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let mono = self.render_monomial(m);
            if m.is_one() {
                write!(f, "{}", crate::exactmath::rational::fmt_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", crate::exactmath::rational::fmt_rational(&a))?;
            }
        }
        Ok(())
    }
}

impl Add for &WeylElement {
    type Output = WeylElement;
    fn add(self, rhs: &WeylElement) -> WeylElement {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: &WeylElement) -> WeylElement {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl Mul for &WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: &WeylElement) -> WeylElement {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        self.scale(&-Rational::one())
    }
}

/// Product of two elements in normal order.
pub fn normal_order_product(a: &WeylElement, b: &WeylElement) -> Result<WeylElement> {
    a.try_mul(b)
}
