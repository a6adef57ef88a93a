//! Commutative Gröbner bases over the rationals.

use super::groebner::{Commutative, Engine, Vector};
use super::order::{MatrixOrder, OrderSpec};
use super::polynomial::{Monomial, Polynomial};
use crate::error::{Error, Result};

fn to_vector(engine: &Engine<'_, Commutative>, p: &Polynomial) -> Vector {
    engine.vector(
        p.terms()
            .iter()
            .map(|(m, c)| (0, m.exponents().to_vec(), c.clone())),
    )
}

fn from_vector(vars: &std::sync::Arc<[String]>, v: &Vector) -> Polynomial {
    Polynomial::from_terms(
        vars.clone(),
        v.terms()
            .iter()
            .map(|t| (Monomial::new(t.exps.clone()), t.coef.clone())),
    )
}

fn check_ring(gens: &[Polynomial]) -> Result<()> {
    let first = gens
        .first()
        .ok_or_else(|| Error::usage("empty generator list"))?;
    if gens.iter().any(|g| !g.same_ring(first)) {
        return Err(Error::usage("generators live in different rings"));
    }
    Ok(())
}

fn compile(order: &OrderSpec, nvars: usize) -> Result<MatrixOrder> {
    if !order.is_well_order() {
        return Err(Error::usage(
            "commutative Gröbner bases need a well-order (nonnegative weights)",
        ));
    }
    MatrixOrder::compile(order, nvars, 0)
}

/// Reduced Gröbner basis: monic, auto-reduced, sorted ascending by leading
/// monomial.
pub fn commutative_groebner(gens: &[Polynomial], order: &OrderSpec) -> Result<Vec<Polynomial>> {
    check_ring(gens)?;
    let vars = gens[0].vars().clone();
    let mo = compile(order, vars.len())?;
    let alg = Commutative(vars.len());
    let engine = Engine::new(&alg, &mo);
    let vs: Vec<Vector> = gens.iter().map(|g| to_vector(&engine, g)).collect();
    Ok(engine
        .groebner(&vs)
        .iter()
        .map(|v| from_vector(&vars, v))
        .collect())
}

/// Remainder of `p` modulo a Gröbner basis.
pub fn commutative_normal_form(
    p: &Polynomial,
    gb: &[Polynomial],
    order: &OrderSpec,
) -> Result<Polynomial> {
    let vars = p.vars().clone();
    let mo = compile(order, vars.len())?;
    let alg = Commutative(vars.len());
    let engine = Engine::new(&alg, &mo);
    let basis: Vec<Vector> = gb.iter().map(|g| to_vector(&engine, g)).collect();
    let r = engine.reduce(&to_vector(&engine, p), &basis, true);
    Ok(from_vector(&vars, &r))
}

/// Leading monomial of `p` under `order`.
pub fn leading_monomial(p: &Polynomial, order: &OrderSpec) -> Result<Option<Monomial>> {
    let mo = compile(order, p.nvars())?;
    let alg = Commutative(p.nvars());
    let engine = Engine::new(&alg, &mo);
    Ok(to_vector(&engine, p)
        .lead()
        .map(|t| Monomial::new(t.exps.clone())))
}

/// Standard monomials of a zero-dimensional ideal given by its Gröbner
/// basis, sorted by (degree, exponent). `None` if the quotient is infinite.
pub fn standard_monomials(gb: &[Polynomial], order: &OrderSpec) -> Result<Option<Vec<Monomial>>> {
    let Some(first) = gb.first() else {
        return Ok(None);
    };
    let n = first.nvars();
    let mut leads = Vec::new();
    for g in gb {
        if let Some(m) = leading_monomial(g, order)? {
            leads.push(m);
        }
    }
    // Zero-dimensional iff every variable has a pure power among the leads.
    let mut bounds = vec![0u32; n];
    for (i, b) in bounds.iter_mut().enumerate() {
        let pure = leads
            .iter()
            .filter(|m| {
                m.exponents()
                    .iter()
                    .enumerate()
                    .all(|(k, &e)| k == i || e == 0)
            })
            .map(|m| m.exponents()[i])
            .min();
        match pure {
            Some(e) => *b = e,
            None => return Ok(None),
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        let m = Monomial::new(cur.clone());
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        let mut i = 0;
        loop {
            if i == n {
                out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
                return Ok(Some(out));
            }
            cur[i] += 1;
            if cur[i] < bounds[i] {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::polynomial::ring_vars;
    use crate::exactmath::rational::int;

    fn xy() -> (Polynomial, Polynomial) {
        let v = ring_vars(&["x", "y"]);
        (Polynomial::var(v.clone(), 0), Polynomial::var(v, 1))
    }

    #[test]
    fn sorted_basis() {
        let (x, y) = xy();
        let gb = commutative_groebner(&[&x * &x, y.clone()], &OrderSpec::Grevlex).unwrap();
        assert_eq!(gb, vec![y, &x * &x]);
    }

    #[test]
    fn cusp_jacobian() {
        let (x, y) = xy();
        let gb = commutative_groebner(
            &[x.scale(&int(2)), y.pow(2).scale(&int(3))],
            &OrderSpec::Grevlex,
        )
        .unwrap();
        assert_eq!(gb, vec![x.clone(), y.pow(2)]);
        let std = standard_monomials(&gb, &OrderSpec::Grevlex).unwrap().unwrap();
        assert_eq!(std, vec![Monomial::new(vec![0, 0]), Monomial::new(vec![0, 1])]);
    }

    #[test]
    fn unit_ideal() {
        let v = ring_vars(&["x"]);
        let x = Polynomial::var(v.clone(), 0);
        let one = Polynomial::one(v);
        let gb = commutative_groebner(&[&x - &one, x.clone()], &OrderSpec::Grevlex).unwrap();
        assert_eq!(gb, vec![one]);
    }

    #[test]
    fn positive_dimensional_has_no_standard_basis() {
        let (x, _) = xy();
        let gb = commutative_groebner(&[x], &OrderSpec::Grevlex).unwrap();
        assert_eq!(standard_monomials(&gb, &OrderSpec::Grevlex).unwrap(), None);
    }

    #[test]
    fn empty_input_rejected() {
        assert!(commutative_groebner(&[], &OrderSpec::Grevlex).is_err());
    }
}
