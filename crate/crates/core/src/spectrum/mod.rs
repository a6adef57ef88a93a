//! Hodge spectra of quasi-homogeneous isolated singularities.
//!
//! With weights `w` making `f` weighted homogeneous of degree 1 and a
//! monomial basis `x^a` of the Milnor algebra, the spectrum is the multiset
//! `{ sum_i (a_i + 1) w_i }`.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::linalg::solve;
use crate::exactmath::{commutative_groebner, standard_monomials, Monomial, OrderSpec, Polynomial, Rational};
use crate::newton::inner::{inner_multiplicity_with_route, InnerRoute, InnerSubject};

/// Positive weights with `sum_i w_i x_i df/dx_i = f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    pub weights: Vec<Rational>,
}

impl WeightSystem {
    /// Weighted degree `sum_i a_i w_i`.
    pub fn degree(&self, m: &Monomial) -> Rational {
        m.exponents()
            .iter()
            .zip(&self.weights)
            .map(|(&a, w)| w * Rational::from_integer(a.into()))
            .sum()
    }
}

pub fn infer_weights(f: &Polynomial) -> Result<WeightSystem> {
    let n = f.nvars();
    if f.is_constant() {
        return Err(Error::usage("f must be nonconstant"));
    }
    let rows: Vec<Vec<Rational>> = f
        .terms()
        .keys()
        .map(|m| m.exponents().iter().map(|&e| Rational::from_integer(e.into())).collect())
        .collect();
    let rhs = vec![Rational::one(); rows.len()];
    let (w, kernel) = solve(&rows, &rhs)
        .ok_or_else(|| Error::usage("no positive weight system: f is not quasi-homogeneous"))?;
    if !kernel.is_empty() {
        return Err(Error::usage(
            "the weight system is not determined by the support of f",
        ));
    }
    if w.iter().any(|x| !x.is_positive()) || w.len() != n {
        return Err(Error::usage("no positive weight system: f is not quasi-homogeneous"));
    }
    Ok(WeightSystem { weights: w })
}

/// Standard monomials of the Jacobian ideal under grevlex.
pub fn milnor_basis(f: &Polynomial) -> Result<Vec<Monomial>> {
    if f.is_constant() {
        return Err(Error::usage("f must be nonconstant"));
    }
    let jac: Vec<Polynomial> = (0..f.nvars())
        .map(|i| f.derivative(i))
        .filter(|p| !p.is_zero())
        .collect();
    let gb = commutative_groebner(&jac, &OrderSpec::Grevlex)?;
    standard_monomials(&gb, &OrderSpec::Grevlex)?
        .ok_or_else(|| Error::usage("the Jacobian ideal is not zero-dimensional: the singularity is not isolated"))
}

/// Spectrum exponents with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumTable {
    pub nvars: usize,
    pub entries: BTreeMap<Rational, u64>,
}

impl SpectrumTable {
    pub fn multiplicity(&self, alpha: &Rational) -> u64 {
        self.entries.get(alpha).copied().unwrap_or(0)
    }

    /// The Milnor number.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Whether `mult(alpha) = mult(n - alpha)` everywhere.
    pub fn is_symmetric(&self) -> bool {
        let n = Rational::from_integer(self.nvars.into());
        self.entries
            .iter()
            .all(|(a, k)| self.multiplicity(&(&n - a)) == *k)
    }
}

pub fn hodge_spectrum(f: &Polynomial) -> Result<SpectrumTable> {
    let w = infer_weights(f)?;
    let basis = milnor_basis(f)?;
    let mut entries = BTreeMap::new();
    let shift: Rational = w.weights.iter().sum();
    for m in &basis {
        *entries.entry(&w.degree(m) + &shift).or_insert(0) += 1;
    }
    Ok(SpectrumTable {
        nvars: f.nvars(),
        entries,
    })
}

/// Both sides of `n_alpha(f) = n_alpha(Z)` at the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumCheck {
    pub alpha: Rational,
    pub spectrum: u64,
    pub inner: u64,
    pub inner_route: InnerRoute,
}

impl SpectrumCheck {
    pub fn agrees(&self) -> bool {
        self.spectrum == self.inner
    }
}

pub fn check_spectrum_vs_inner(f: &Polynomial, alpha: &Rational, degree_bound: u32) -> Result<SpectrumCheck> {
    if !alpha.is_positive() || *alpha > Rational::one() {
        return Err(Error::usage("the comparison holds for alpha in (0, 1]"));
    }
    let spec = hodge_spectrum(f)?;
    let (inner, route) = inner_multiplicity_with_route(&InnerSubject::Principal(f.clone()), alpha, degree_bound)?;
    Ok(SpectrumCheck {
        alpha: alpha.clone(),
        spectrum: spec.multiplicity(alpha),
        inner,
        inner_route: route,
    })
}

/// Verifies the Euler identity for a weight system.
pub fn is_weighted_homogeneous(f: &Polynomial, w: &WeightSystem) -> bool {
    let mut euler = Polynomial::zero(f.vars().clone());
    for (i, wi) in w.weights.iter().enumerate() {
        let xi = Polynomial::var(f.vars().clone(), i);
        euler = &euler + &(&xi * &f.derivative(i)).scale(wi);
    }
    (&euler - f).is_zero() && !w.weights.iter().any(Zero::is_zero)
}
