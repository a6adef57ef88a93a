//! Left Gröbner bases in the Weyl algebra.
//!
//! Orders with negative weights are not well-orders; those go through the
//! homogenized algebra (`d x = x d + h^2`) under `(w, total degree, grevlex)`
//! and the result is dehomogenized.

use std::sync::Arc;

use num_traits::Signed;

use super::algebra::WeylAlgebra;
use super::element::WeylElement;
use super::ring::WeylRing;
use crate::error::{Error, Result};
use crate::exactmath::groebner::{sort_basis, Engine, Vector};
use crate::exactmath::order::MatrixOrder;
use crate::exactmath::{Monomial, OrderSpec};

/// A module element: one Weyl element per component.
pub type WeylVector = Vec<WeylElement>;

struct Setup {
    alg: WeylAlgebra,
    order: MatrixOrder,
    ring: Arc<WeylRing>,
}

impl Setup {
    fn new(ring: &Arc<WeylRing>, spec: &OrderSpec) -> Result<Setup> {
        let homogenized = !spec.is_well_order();
        if let OrderSpec::Weighted(w) = spec {
            if w.len() != ring.nvars() {
                return Err(Error::usage(format!(
                    "weight vector has {} entries, Weyl ring has {} generators",
                    w.len(),
                    ring.nvars()
                )));
            }
            for i in 0..ring.n() {
                let (a, b) = ring.pair(i);
                if (&w[a] + &w[b]).is_negative() {
                    return Err(Error::usage(format!(
                        "weight of {} plus weight of {} must be nonnegative",
                        ring.x_vars()[i],
                        ring.d_vars()[i]
                    )));
                }
            }
        }
        let alg = WeylAlgebra {
            n: ring.n(),
            nparams: ring.nparams(),
            homogenized,
        };
        let order = MatrixOrder::compile(spec, ring.nvars(), usize::from(homogenized))?;
        Ok(Setup {
            alg,
            order,
            ring: ring.clone(),
        })
    }

    fn engine(&self) -> Engine<'_, WeylAlgebra> {
        Engine::new(&self.alg, &self.order)
    }

    fn to_vector(&self, v: &[WeylElement]) -> Vector {
        let extra = usize::from(self.alg.homogenized);
        let top = v.iter().filter_map(WeylElement::total_degree).max().unwrap_or(0);
        let mut terms = Vec::new();
        for (comp, e) in v.iter().enumerate() {
            for (m, c) in e.terms() {
                let mut exps = m.exponents().to_vec();
                if extra == 1 {
                    exps.push(top - m.degree());
                }
                terms.push((comp as u32, exps, c.clone()));
            }
        }
        Vector::from_terms(&self.order, terms)
    }

    fn decode(&self, v: &Vector, rank: usize) -> WeylVector {
        let nv = self.ring.nvars();
        let mut out = vec![WeylElement::zero(&self.ring); rank];
        for t in v.terms() {
            out[t.comp as usize].add_term(Monomial::new(t.exps[..nv].to_vec()), t.coef.clone());
        }
        out
    }
}

fn check_rank(gens: &[WeylVector]) -> Result<(Arc<WeylRing>, usize)> {
    let first = gens
        .iter()
        .flat_map(|v| v.first())
        .next()
        .ok_or_else(|| Error::usage("empty generator list"))?;
    let ring = first.ring().clone();
    let rank = gens[0].len();
    for v in gens {
        if v.len() != rank {
            return Err(Error::usage("module generators have different ranks"));
        }
        if v.iter().any(|e| **e.ring() != *ring) {
            return Err(Error::usage("generators live in different Weyl rings"));
        }
    }
    Ok((ring, rank))
}

/// Left Gröbner basis of a submodule of a free module, position over term
/// with component 0 largest.
///
/// For well-orders the basis is reduced. For mixed-sign weights the result
/// is the dehomogenized reduced basis of the homogenized module, made monic,
/// deduplicated and sorted.
pub fn left_groebner_module(gens: &[WeylVector], order: &OrderSpec) -> Result<Vec<WeylVector>> {
    let (ring, rank) = check_rank(gens)?;
    let setup = Setup::new(&ring, order)?;
    let engine = setup.engine();
    let vs: Vec<Vector> = gens.iter().map(|g| setup.to_vector(g)).collect();
    let gb = engine.groebner(&vs);
    if !setup.alg.homogenized {
        return Ok(gb.iter().map(|v| setup.decode(v, rank)).collect());
    }
    let plain = Setup::new(&ring, &OrderSpec::Grevlex)?;
    let target = MatrixOrder::compile(order, ring.nvars(), 0)?;
    let mut out: Vec<Vector> = Vec::new();
    for v in &gb {
        let back = setup.decode(v, rank);
        let dv = Vector::from_terms(
            &target,
            back.iter().enumerate().flat_map(|(comp, e)| {
                e.terms()
                    .iter()
                    .map(move |(m, c)| (comp as u32, m.exponents().to_vec(), c.clone()))
            }),
        )
        .monic();
        if !dv.is_zero() && !out.contains(&dv) {
            out.push(dv);
        }
    }
    sort_basis(&mut out);
    Ok(out.iter().map(|v| plain.decode(v, rank)).collect())
}

/// Left Gröbner basis of the left ideal generated by `gens`.
pub fn left_groebner(gens: &[WeylElement], order: &OrderSpec) -> Result<Vec<WeylElement>> {
    let vs: Vec<WeylVector> = gens.iter().map(|g| vec![g.clone()]).collect();
    Ok(left_groebner_module(&vs, order)?
        .into_iter()
        .map(|mut v| v.remove(0))
        .collect())
}

/// Remainder of left division of a module element by a Gröbner basis.
pub fn module_normal_form(p: &[WeylElement], gb: &[WeylVector], order: &OrderSpec) -> Result<WeylVector> {
    if !order.is_well_order() {
        return Err(Error::usage(
            "normal form needs a well-order; division is undefined for negative weights",
        ));
    }
    let ring = p
        .first()
        .ok_or_else(|| Error::usage("empty module element"))?
        .ring()
        .clone();
    let setup = Setup::new(&ring, order)?;
    let engine = setup.engine();
    let basis: Vec<Vector> = gb.iter().map(|g| setup.to_vector(g)).collect();
    let r = engine.reduce(&setup.to_vector(p), &basis, true);
    Ok(setup.decode(&r, p.len()))
}

/// Remainder of left division by a Gröbner basis of a left ideal.
pub fn normal_form(p: &WeylElement, gb: &[WeylElement], order: &OrderSpec) -> Result<WeylElement> {
    let basis: Vec<WeylVector> = gb.iter().map(|g| vec![g.clone()]).collect();
    Ok(module_normal_form(std::slice::from_ref(p), &basis, order)?.remove(0))
}

/// Validates an elimination set: a position variable and its derivation
/// must be eliminated together; parameters may be eliminated alone.
pub fn check_elimination_set(ring: &WeylRing, kill: &[usize]) -> Result<()> {
    for &k in kill {
        if k >= ring.nvars() {
            return Err(Error::usage(format!("elimination index {k} out of range")));
        }
    }
    for i in 0..ring.n() {
        let (a, b) = ring.pair(i);
        if kill.contains(&a) != kill.contains(&b) {
            return Err(Error::usage(format!(
                "{} and {} must be eliminated together",
                ring.x_vars()[i],
                ring.d_vars()[i]
            )));
        }
    }
    Ok(())
}

/// Generators of `I ∩ (subalgebra without the `kill` generators)`, as the
/// members of a reduced elimination Gröbner basis that avoid `kill`.
pub fn eliminate(gens: &[WeylElement], kill: &[usize]) -> Result<Vec<WeylElement>> {
    let ring = gens
        .first()
        .ok_or_else(|| Error::usage("empty generator list"))?
        .ring()
        .clone();
    check_elimination_set(&ring, kill)?;
    let gb = left_groebner(gens, &OrderSpec::Elimination(kill.to_vec()))?;
    Ok(gb.into_iter().filter(|g| g.is_free_of(kill)).collect())
}
