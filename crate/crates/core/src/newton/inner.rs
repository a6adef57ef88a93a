//! Inner jumping multiplicities at the origin:
//! `dim J((1-eps) alpha Z) / J((1-eps) alpha Z + delta m)` with
//! `0 < eps << delta << 1`.
//!
//! For monomial ideals both ideals are monomial. With `P(a) + P(m) = P(a m)`
//! the mixed ideal is `{x^v : <w, v+1> > (1-eps) alpha h_a(w) + delta h_m(w)}`
//! over the facet normals `w` of `P(a m)`. Comparing lexicographically in
//! `(1, delta, eps)`: a point on `<w, v+1> = alpha h_a(w)` is excluded iff
//! `h_m(w) > 0`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::ideal::MonomialIdeal;
use super::polyhedron::{newton_polyhedron, NewtonPolyhedron};
use super::table::monomials_up_to;
use crate::bfun::monomial_jump_values;
use crate::error::{Error, Result};
use crate::exactmath::commutative::commutative_normal_form;
use crate::exactmath::{commutative_groebner, ring_vars, standard_monomials, Monomial, OrderSpec, Polynomial, Rational};

/// What the multiplicity is computed for.
#[derive(Clone, Debug)]
pub enum InnerSubject {
    Monomial(MonomialIdeal),
    /// A polynomial with at most an isolated singularity at the origin.
    Principal(Polynomial),
}

/// Which computation produced a principal multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InnerRoute {
    /// Count of monomials `h` with `jump(b_{f,h}) = alpha`.
    BFunction,
    /// Mixed Newton-polyhedron count on the term ideal of a nondegenerate `f`.
    Newton,
}

fn mixed_count(a: &MonomialIdeal, alpha: &Rational) -> Result<u64> {
    let pa = newton_polyhedron(a)?;
    let m = MonomialIdeal::maximal(a.vars().clone());
    let pam = newton_polyhedron(&a.product(&m))?;
    let n = a.nvars();
    // Normals with all entries positive are the only ones that can exclude.
    let excluding: Vec<(Vec<BigInt>, Rational)> = pam
        .bounding_facets()
        .filter(|f| f.normal.iter().all(Signed::is_positive))
        .map(|f| (f.normal.clone(), alpha * Rational::from_integer(pa.support(&f.normal))))
        .collect();
    let mut bounds = vec![0u32; n];
    for (w, level) in &excluding {
        for j in 0..n {
            let cap = crate::exactmath::rational::floor(&(level / Rational::from_integer(w[j].clone())));
            let cap = (cap - BigInt::from(1)).max(BigInt::zero()).to_u32().unwrap_or(u32::MAX);
            bounds[j] = bounds[j].max(cap);
        }
    }
    let mut count = 0u64;
    let mut cur = vec![0u32; n];
    loop {
        let in_numerator = pa.jump_value(&cur).is_none_or(|c| c >= *alpha);
        let on_wall = excluding.iter().any(|(w, level)| {
            let l: BigInt = w.iter().zip(&cur).map(|(x, &v)| x * BigInt::from(v + 1)).sum();
            Rational::from_integer(l) == *level
        });
        if in_numerator && on_wall {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(count);
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

/// Fails unless `{v : jump(v) = alpha}` stays bounded: a point whose
/// minimizing facet ignores some coordinate `j` can be pushed along `e_j`.
fn check_point_support(p: &NewtonPolyhedron, alpha: &Rational, degree_bound: u32) -> Result<()> {
    let a = p.source();
    for v in monomials_up_to(a.nvars(), degree_bound) {
        let e = v.exponents();
        if p.jump_value(e).as_ref() != Some(alpha) {
            continue;
        }
        for f in p.bounding_facets() {
            if Rational::new(f.shifted_value(e), f.offset.clone()) != *alpha {
                continue;
            }
            if let Some(j) = f.normal.iter().position(Zero::is_zero) {
                let witness = v.mul(&Monomial::var(a.nvars(), j));
                return Err(Error::usage(format!(
                    "the jump at {alpha} is not supported at the origin: {} lies in J({alpha}-)/J({alpha}) together with all its multiples by {}",
                    a.render_monomial(&witness),
                    a.vars()[j]
                )));
            }
        }
    }
    Ok(())
}

/// Whether the singular locus of `{f = 0}` is contained in the origin.
pub fn has_isolated_singularity(f: &Polynomial) -> Result<bool> {
    let mut gens = vec![f.clone()];
    gens.extend((0..f.nvars()).map(|i| f.derivative(i)));
    let gb = commutative_groebner(&gens, &OrderSpec::Grevlex)?;
    if gb.iter().any(Polynomial::is_constant) {
        return Ok(true);
    }
    let Some(std) = standard_monomials(&gb, &OrderSpec::Grevlex)? else {
        return Ok(false);
    };
    let k = std.len() as u32;
    for i in 0..f.nvars() {
        let xk = Polynomial::var(f.vars().clone(), i).pow(k);
        if !commutative_normal_form(&xk, &gb, &OrderSpec::Grevlex)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Newton nondegeneracy: for every compact face `Q` of the Newton polyhedron
/// of `f`, the restriction `f_Q` has no critical point in the torus.
pub fn is_newton_nondegenerate(f: &Polynomial) -> Result<bool> {
    let a = MonomialIdeal::of_terms(f)?;
    let p = newton_polyhedron(&a)?;
    let n = f.nvars();
    let facets: Vec<_> = p.bounding_facets().cloned().collect();
    if facets.len() > 16 {
        return Err(Error::usage("too many facets for the nondegeneracy check"));
    }
    let mut faces: BTreeSet<Vec<Monomial>> = BTreeSet::new();
    for mask in 1u32..(1 << facets.len()) {
        let chosen: Vec<_> = (0..facets.len()).filter(|i| mask & (1 << i) != 0).collect();
        let positive = (0..n).all(|j| chosen.iter().any(|&i| facets[i].normal[j].is_positive()));
        if !positive {
            continue;
        }
        let pts: Vec<Monomial> = f
            .terms()
            .keys()
            .filter(|m| {
                chosen.iter().all(|&i| {
                    let v: BigInt = facets[i]
                        .normal
                        .iter()
                        .zip(m.exponents())
                        .map(|(w, &e)| w * BigInt::from(e))
                        .sum();
                    v == facets[i].offset
                })
            })
            .cloned()
            .collect();
        if !pts.is_empty() {
            faces.insert(pts);
        }
    }
    let mut names: Vec<String> = f.vars().to_vec();
    names.push(format!("{}_sat", names.join("")));
    let ext = ring_vars(&names);
    let map: Vec<usize> = (0..n).collect();
    for pts in faces {
        let face = Polynomial::from_terms(f.vars().clone(), pts.iter().map(|m| (m.clone(), f.coefficient(m))));
        let face = face.embed(ext.clone(), &map);
        let mut gens: Vec<Polynomial> = (0..n).map(|i| face.derivative(i)).collect();
        // 1 - z * x_1 ... x_n saturates away the coordinate hyperplanes.
        let mut torus = Monomial::var(n + 1, n);
        for i in 0..n {
            torus = torus.mul(&Monomial::var(n + 1, i));
        }
        let mut sat = Polynomial::one(ext.clone());
        sat.add_term(torus, -Rational::from_integer(1.into()));
        gens.push(sat);
        let gb = commutative_groebner(&gens, &OrderSpec::Grevlex)?;
        if !gb.iter().any(|g| g.is_constant() && !g.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn principal_by_bfunction(f: &Polynomial, alpha: &Rational, degree_bound: u32) -> Result<u64> {
    let values = monomial_jump_values(f, degree_bound)?;
    let hits: Vec<&Monomial> = values
        .iter()
        .filter(|(_, c)| c.as_ref() == Some(alpha))
        .map(|(m, _)| m)
        .collect();
    if let Some(m) = hits.iter().find(|m| m.degree() == degree_bound) {
        return Err(Error::usage(format!(
            "monomial {} of the jump at {alpha} sits on the degree bound {degree_bound}; raise the bound",
            m.render(f.vars())
        )));
    }
    Ok(hits.len() as u64)
}

/// Inner jumping multiplicity at the origin, with the route used.
pub fn inner_multiplicity_with_route(
    subject: &InnerSubject,
    alpha: &Rational,
    degree_bound: u32,
) -> Result<(u64, InnerRoute)> {
    if !alpha.is_positive() {
        return Err(Error::usage("alpha must be positive"));
    }
    match subject {
        InnerSubject::Monomial(a) => {
            if !a.is_proper() {
                return Err(Error::usage("the unit ideal has no jumps"));
            }
            let p = newton_polyhedron(a)?;
            check_point_support(&p, alpha, degree_bound)?;
            Ok((mixed_count(a, alpha)?, InnerRoute::Newton))
        }
        InnerSubject::Principal(f) => {
            if f.is_constant() {
                return Err(Error::usage("f must be nonconstant"));
            }
            if *alpha > Rational::from_integer(1.into()) {
                return Err(Error::usage("inner multiplicities of a hypersurface are computed for alpha in (0, 1]"));
            }
            if !has_isolated_singularity(f)? {
                return Err(Error::usage("f must have at most an isolated singularity at the origin"));
            }
            if *alpha < Rational::from_integer(1.into()) {
                return Ok((principal_by_bfunction(f, alpha, degree_bound)?, InnerRoute::BFunction));
            }
            // At alpha = 1 the quotient J(1-)/J(1) is not of finite length;
            // the mixed ideal is needed and is taken from the term ideal.
            if !is_newton_nondegenerate(f)? {
                return Err(Error::usage(
                    "at alpha = 1 the inner multiplicity needs f nondegenerate with respect to its Newton polyhedron",
                ));
            }
            Ok((mixed_count(&MonomialIdeal::of_terms(f)?, alpha)?, InnerRoute::Newton))
        }
    }
}

pub fn inner_jumping_multiplicity(subject: &InnerSubject, alpha: &Rational, degree_bound: u32) -> Result<u64> {
    inner_multiplicity_with_route(subject, alpha, degree_bound).map(|(k, _)| k)
}

/// Mixed Newton count for a nondegenerate principal `f`, usable as a cross-check
/// of the b-function route for `alpha < 1`.
pub fn principal_by_newton(f: &Polynomial, alpha: &Rational) -> Result<Option<u64>> {
    if !is_newton_nondegenerate(f)? {
        return Ok(None);
    }
    Ok(Some(mixed_count(&MonomialIdeal::of_terms(f)?, alpha)?))
}
