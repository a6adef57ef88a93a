//! Multiplier ideals of monomial ideals:
//! `J(alpha * a) = < x^v : v + 1 in the interior of alpha * P(a) >`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::ideal::{minimal_elements, MonomialIdeal};
use super::polyhedron::{newton_polyhedron, NewtonPolyhedron};
use super::table::{monomials_up_to, JumpRow, MultiplierTable};
use crate::error::{Error, Result};
use crate::exactmath::rational::floor;
use crate::exactmath::{Monomial, Rational};

fn positive(alpha: &Rational) -> Result<()> {
    if !alpha.is_positive() {
        return Err(Error::usage("alpha must be positive"));
    }
    Ok(())
}

/// Whether `x^v` lies in `J(alpha * a)`.
pub fn in_multiplier_ideal(p: &NewtonPolyhedron, v: &Monomial, alpha: &Rational) -> bool {
    p.jump_value(v.exponents()).is_none_or(|c| *alpha < c)
}

/// Members of `J(alpha * a)` of degree at most `degree_bound`.
pub fn multiplier_ideal_monomial(
    a: &MonomialIdeal,
    alpha: &Rational,
    degree_bound: u32,
) -> Result<Vec<Monomial>> {
    positive(alpha)?;
    let p = newton_polyhedron(a)?;
    Ok(monomials_up_to(a.nvars(), degree_bound)
        .into_iter()
        .filter(|v| in_multiplier_ideal(&p, v, alpha))
        .collect())
}

/// Minimal generators of `J(alpha * a)`, exact (no truncation).
///
/// A minimal generator `x^v` has `v_j <= floor(alpha * c / w_j)` for some
/// bounding facet `<w, u> >= c` with `w_j > 0`, which bounds the search box.
pub fn multiplier_generators(p: &NewtonPolyhedron, alpha: &Rational) -> Vec<Monomial> {
    let n = p.source().nvars();
    let mut bounds = vec![0u32; n];
    for f in p.bounding_facets() {
        for (j, w) in f.normal.iter().enumerate() {
            if w.is_positive() {
                let cap = floor(&(alpha * Rational::new(f.offset.clone(), w.clone())));
                let cap = cap.max(BigInt::from(0)).to_u32().unwrap_or(u32::MAX);
                bounds[j] = bounds[j].max(cap);
            }
        }
    }
    let mut members = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        let m = Monomial::new(cur.clone());
        if in_multiplier_ideal(p, &m, alpha) {
            members.push(m);
        }
        let mut i = 0;
        loop {
            if i == n {
                return minimal_elements(&members);
            }
            if cur[i] < bounds[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// Jumping numbers in `(0, alpha_max]`: the values `min_l <l, v+1>/c_l` over
/// lattice points `v` of degree at most `degree_bound`, each with the exact
/// generators of its multiplier ideal.
pub fn jumping_numbers_monomial(
    a: &MonomialIdeal,
    alpha_max: &Rational,
    degree_bound: u32,
) -> Result<MultiplierTable> {
    positive(alpha_max)?;
    let p = newton_polyhedron(a)?;
    let mut alphas: Vec<Rational> = monomials_up_to(a.nvars(), degree_bound)
        .iter()
        .filter_map(|v| p.jump_value(v.exponents()))
        .filter(|c| c <= alpha_max)
        .collect();
    alphas.sort();
    alphas.dedup();
    let rows = alphas
        .into_iter()
        .map(|alpha| JumpRow {
            generators: multiplier_generators(&p, &alpha),
            alpha,
        })
        .collect();
    Ok(MultiplierTable {
        vars: a.vars().clone(),
        rows,
        complete: true,
    })
}

/// `min_l <l, 1> / c_l` over bounding facets.
pub fn lct_monomial(a: &MonomialIdeal) -> Result<Rational> {
    if !a.is_proper() {
        return Err(Error::usage("the unit ideal has no log-canonical threshold"));
    }
    let p = newton_polyhedron(a)?;
    p.jump_value(&vec![0; a.nvars()])
        .ok_or_else(|| Error::internal("proper ideal without a bounding facet"))
}
