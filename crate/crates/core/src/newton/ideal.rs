use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactmath::{Monomial, Polynomial};

/// A monomial ideal given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    vars: Arc<[String]>,
    gens: Vec<Monomial>,
}

/// Sorts by (degree, exponent vector).
pub fn sort_monomials(ms: &mut [Monomial]) {
    ms.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
}

/// The members of `ms` not divisible by another member, sorted.
pub fn minimal_elements(ms: &[Monomial]) -> Vec<Monomial> {
    let mut v = ms.to_vec();
    sort_monomials(&mut v);
    v.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in v {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

impl MonomialIdeal {
    pub fn new(vars: Arc<[String]>, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
        if gens.is_empty() {
            return Err(Error::usage("a monomial ideal needs at least one generator"));
        }
        if gens.iter().any(|g| g.nvars() != vars.len()) {
            return Err(Error::usage("generator length does not match the variable count"));
        }
        Ok(MonomialIdeal {
            gens: minimal_elements(&gens),
            vars,
        })
    }

    /// The ideal generated by the terms of `f`.
    pub fn of_terms(f: &Polynomial) -> Result<MonomialIdeal> {
        MonomialIdeal::new(f.vars().clone(), f.terms().keys().cloned().collect())
    }

    /// The maximal ideal at the origin.
    pub fn maximal(vars: Arc<[String]>) -> MonomialIdeal {
        let n = vars.len();
        MonomialIdeal {
            gens: (0..n).map(|i| Monomial::var(n, i)).collect(),
            vars,
        }
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Whether the ideal is not the whole ring.
    pub fn is_proper(&self) -> bool {
        !self.gens.iter().any(Monomial::is_one)
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens: Vec<Monomial> = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.mul(b)))
            .collect();
        MonomialIdeal {
            vars: self.vars.clone(),
            gens: minimal_elements(&gens),
        }
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        m.render(&self.vars)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.render(&self.vars)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ring_vars;

    #[test]
    fn minimalizes() {
        let v = ring_vars(&["x", "y"]);
        let a = MonomialIdeal::new(
            v,
            vec![Monomial::new(vec![2, 1]), Monomial::new(vec![1, 0]), Monomial::new(vec![0, 3])],
        )
        .unwrap();
        assert_eq!(a.to_string(), "(x, y^3)");
        assert!(a.contains(&Monomial::new(vec![0, 4])));
        assert!(!a.contains(&Monomial::new(vec![0, 2])));
    }
}
