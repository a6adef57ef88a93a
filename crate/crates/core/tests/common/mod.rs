#![allow(dead_code)]

use std::sync::Arc;

use bsato::cli::parse::{parse_operators, parse_polynomial};
use bsato::exactmath::linalg::rref;
use bsato::exactmath::{ring_vars, Monomial, Polynomial, Rational};
use bsato::newton::monomials_up_to;
use bsato::weyl::{WeylElement, WeylRing};

pub fn vars(names: &str) -> Arc<[String]> {
    ring_vars(&names.split(',').collect::<Vec<_>>())
}

pub fn poly(src: &str, names: &str) -> Polynomial {
    parse_polynomial(src, &vars(names)).unwrap()
}

pub fn op(src: &str, names: &str) -> WeylElement {
    parse_operators(&[src.to_string()], &vars(names), 1).unwrap().remove(0)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Moves `p` into `ring`, matching generators by name.
pub fn embed(p: &WeylElement, ring: &Arc<WeylRing>) -> WeylElement {
    let map: Vec<usize> = p.ring().names().iter().map(|n| ring.index_of(n).unwrap()).collect();
    WeylElement::from_terms(
        ring,
        p.terms().iter().map(|(m, c)| {
            let mut e = vec![0; ring.nvars()];
            for (i, &k) in m.exponents().iter().enumerate() {
                e[map[i]] += k;
            }
            (Monomial::new(e), c.clone())
        }),
    )
}

/// Applies a normally ordered operator to a plain polynomial with every
/// parameter replaced by `s`: term `c s^j x^a d^b` sends `g` to
/// `c s^j x^a (d^b g)`. Plain calculus, no f^s bookkeeping.
pub fn apply_at(p: &WeylElement, g: &Polynomial, s: &Rational) -> Polynomial {
    let ring = p.ring();
    let n = ring.n();
    let mut out = Polynomial::zero(g.vars().clone());
    for (m, c) in p.terms() {
        let e = m.exponents();
        let mut t = g.clone();
        for k in 0..n {
            for _ in 0..e[n + k] {
                t = t.derivative(k);
            }
        }
        let mut coef = c.clone();
        for j in 0..ring.nparams() {
            for _ in 0..e[2 * n + j] {
                coef *= s;
            }
        }
        t = t.mul_monomial(&Monomial::new(e[..n].to_vec()), &coef);
        out = &out + &t;
    }
    out
}

/// `dim C[x] / (df/dx_i)` measured as the stable codimension of the span of
/// `x^m * df/dx_i` inside polynomials of degree at most `top`.
pub fn milnor_dimension_by_rank(f: &Polynomial, top: u32) -> usize {
    let n = f.nvars();
    let space = monomials_up_to(n, top);
    let mut rows = Vec::new();
    for i in 0..n {
        let g = f.derivative(i);
        let d = g.total_degree().unwrap_or(0);
        if g.is_zero() || d > top {
            continue;
        }
        for m in monomials_up_to(n, top - d) {
            let h = g.mul_monomial(&m, &Rational::from_integer(1.into()));
            rows.push(space.iter().map(|b| h.coefficient(b)).collect::<Vec<_>>());
        }
    }
    let rank = rref(&mut rows).len();
    space.len() - rank
}
