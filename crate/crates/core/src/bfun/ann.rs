//! The annihilator of `f^s` in `D_n[s]`.
//!
//! Route: in `D_{n+1}[u, v]` with the extra pair `(t, dt)`, the left ideal
//! `<t - u f, d_i + u f_i dt, u v - 1>` intersected with `D_{n+1}` is the
//! ideal generated by the `(t:-1, dt:+1)`-homogeneous part of `I_f`. Its
//! homogeneous generators, shifted to weight zero and rewritten through
//! `t dt = -s - 1`, generate `Ann f^s`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactmath::{Monomial, OrderSpec, Polynomial, Rational};
use crate::weyl::{eliminate, left_groebner, WeylElement, WeylRing};

/// Name for the auxiliary position variable, chosen to avoid the user's names.
fn fresh(base: &str, taken: &[String]) -> String {
    let mut name = base.to_string();
    while taken.contains(&name) {
        name.push('_');
    }
    name
}

/// The target ring `D_n[s]` for `f`.
pub fn operator_ring(f: &Polynomial) -> Arc<WeylRing> {
    let xs: Vec<String> = f.vars().to_vec();
    WeylRing::new(&xs, &["s".to_string()])
}

fn check_nonconstant(f: &Polynomial) -> Result<()> {
    if f.is_constant() {
        return Err(Error::usage("f must be nonconstant"));
    }
    Ok(())
}

/// The ring `D_{n+1}` with the extra pair `(t, dt)` last, plus optional
/// central parameters.
fn graph_ring(f: &Polynomial, params: &[&str]) -> Arc<WeylRing> {
    let mut xs: Vec<String> = f.vars().to_vec();
    let taken = xs.clone();
    xs.push(fresh("t", &taken));
    let params: Vec<String> = params.iter().map(|p| fresh(p, &taken)).collect();
    WeylRing::new(&xs, &params)
}

/// Embeds `f` into the positional part of `ring`.
fn embed(ring: &Arc<WeylRing>, f: &Polynomial) -> WeylElement {
    let n = f.nvars();
    WeylElement::from_terms(
        ring,
        f.terms().iter().map(|(m, c)| {
            let mut e = vec![0; ring.nvars()];
            e[..n].copy_from_slice(m.exponents());
            (Monomial::new(e), c.clone())
        }),
    )
}

/// Generators `t - f` and `d_i + f_i dt` of the graph ideal, each optionally
/// multiplied through by the central parameter `u` where `f` appears.
fn graph_generators(ring: &Arc<WeylRing>, f: &Polynomial, u: Option<&WeylElement>) -> Vec<WeylElement> {
    let n = f.nvars();
    let t = WeylElement::x(ring, n);
    let dt = WeylElement::d(ring, n);
    let scale = |e: WeylElement| match u {
        Some(u) => u * &e,
        None => e,
    };
    let mut gens = vec![&t - &scale(embed(ring, f))];
    for i in 0..n {
        let fi = embed(ring, &f.derivative(i));
        gens.push(&WeylElement::d(ring, i) + &scale(&fi * &dt));
    }
    gens
}

/// `(t:-1, dt:+1)` weight of a monomial in the graph ring.
fn t_weight(ring: &WeylRing, m: &Monomial) -> i64 {
    let n = ring.n() - 1;
    let e = m.exponents();
    e[ring.d_index(n)] as i64 - e[ring.x_index(n)] as i64
}

/// Splits an element of the graph ring into weight-homogeneous parts.
fn weight_parts(g: &WeylElement) -> BTreeMap<i64, WeylElement> {
    let ring = g.ring();
    let mut parts: BTreeMap<i64, WeylElement> = BTreeMap::new();
    for (m, c) in g.terms() {
        parts
            .entry(t_weight(ring, m))
            .or_insert_with(|| WeylElement::zero(ring))
            .add_term(m.clone(), c.clone());
    }
    parts
}

/// Sends a weight-zero element of the graph ring (no central parameters) to
/// `D_n[s]` using `t^k dt^k = prod_{j<k} (-s - 1 - j)`.
fn to_operator(g: &WeylElement, target: &Arc<WeylRing>) -> Result<WeylElement> {
    let ring = g.ring();
    let n = target.n();
    let (ti, di) = (ring.x_index(n), ring.d_index(n));
    let s = WeylElement::param(target, 0);
    let mut out = WeylElement::zero(target);
    for (m, c) in g.terms() {
        let e = m.exponents();
        if e[ti] != e[di] {
            return Err(Error::internal("operator is not of weight zero in (t, dt)"));
        }
        let mut mono = vec![0; target.nvars()];
        for i in 0..n {
            mono[target.x_index(i)] = e[ring.x_index(i)];
            mono[target.d_index(i)] = e[ring.d_index(i)];
        }
        let mut term = WeylElement::from_terms(target, [(Monomial::new(mono), c.clone())]);
        for j in 0..e[ti] {
            let theta = &(-&s) - &WeylElement::constant(target, Rational::from_integer((1 + j).into()));
            term = &term * &theta;
        }
        out = &out + &term;
    }
    Ok(out)
}

/// Shifts a homogeneous element of weight `m` to weight zero by multiplying
/// on the left with `t^m` (m > 0) or `dt^-m` (m < 0).
fn to_weight_zero(g: &WeylElement, weight: i64) -> WeylElement {
    let ring = g.ring();
    let n = ring.n() - 1;
    if weight > 0 {
        &WeylElement::x(ring, n).pow(weight as u32) * g
    } else if weight < 0 {
        &WeylElement::d(ring, n).pow((-weight) as u32) * g
    } else {
        g.clone()
    }
}

/// Reduced Gröbner basis (grevlex) of `Ann_{D_n[s]} f^s`.
pub fn ann_fs(f: &Polynomial) -> Result<Vec<WeylElement>> {
    check_nonconstant(f)?;
    let ring = graph_ring(f, &["u", "v"]);
    let u = WeylElement::param(&ring, 0);
    let v = WeylElement::param(&ring, 1);
    let mut gens = graph_generators(&ring, f, Some(&u));
    gens.push(&(&u * &v) - &WeylElement::one(&ring));
    let kill = vec![ring.param_index(0), ring.param_index(1)];
    let homogeneous = eliminate(&gens, &kill)?;

    // Drop u, v from the ring before rewriting.
    let plain = graph_ring(f, &[]);
    let target = operator_ring(f);
    let mut ops = Vec::new();
    for g in &homogeneous {
        let g = WeylElement::from_terms(
            &plain,
            g.terms().iter().map(|(m, c)| {
                (Monomial::new(m.exponents()[..plain.nvars()].to_vec()), c.clone())
            }),
        );
        for (w, part) in weight_parts(&g) {
            ops.push(to_operator(&to_weight_zero(&part, w), &target)?);
        }
    }
    ops.retain(|p| !p.is_zero());
    if ops.is_empty() {
        return Err(Error::internal("annihilator elimination returned no operators"));
    }
    left_groebner(&ops, &OrderSpec::Grevlex)
}

/// Generators of `Ann f^s + D[s] f` by the weight route: a homogenized
/// Gröbner basis of `I_f` under `(t:-1, dt:+1)`, initial forms, then
/// `t dt = -s - 1`. Used as an independent cross-check.
pub fn ann_plus_f_by_weights(f: &Polynomial) -> Result<Vec<WeylElement>> {
    check_nonconstant(f)?;
    let ring = graph_ring(f, &[]);
    let gens = graph_generators(&ring, f, None);
    let n = f.nvars();
    let mut w = vec![Rational::from_integer(0.into()); ring.nvars()];
    w[ring.x_index(n)] = -Rational::one();
    w[ring.d_index(n)] = Rational::one();
    let gb = left_groebner(&gens, &OrderSpec::Weighted(w))?;
    let target = operator_ring(f);
    let mut ops = Vec::new();
    for g in &gb {
        let parts = weight_parts(g);
        let (&top, initial) = parts.iter().next_back().expect("nonzero basis element");
        ops.push(to_operator(&to_weight_zero(initial, top), &target)?);
    }
    ops.retain(|p| !p.is_zero());
    left_groebner(&ops, &OrderSpec::Grevlex)
}
