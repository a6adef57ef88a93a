mod common;

use std::sync::Arc;

use bsato::bfun::{bernstein_sato, lct_from_bfunction};
use bsato::cli::parse::parse_polynomial;
use bsato::exactmath::{
    commutative_groebner, commutative_normal_form, int, rational_roots, Monomial, OrderSpec, Polynomial, Rational,
    UnivariatePoly,
};
use bsato::newton::multiplier::in_multiplier_ideal;
use bsato::newton::{lct_monomial, monomials_up_to, newton_polyhedron, MonomialIdeal};
use bsato::spectrum::hodge_spectrum;
use bsato::weyl::{left_groebner, normal_form, FsContext, FsElement, WeylElement, WeylRing};
use common::{apply_at, milnor_dimension_by_rank, q, vars};
use proptest::prelude::*;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| q(n, d))
}

fn polynomial(v: Arc<[String]>, max_exp: u32, terms: usize) -> impl Strategy<Value = Polynomial> {
    let n = v.len();
    prop::collection::vec((prop::collection::vec(0..=max_exp, n), small_rational()), 0..=terms).prop_map(
        move |ts| Polynomial::from_terms(v.clone(), ts.into_iter().map(|(e, c)| (Monomial::new(e), c))),
    )
}

fn weyl_ring() -> Arc<WeylRing> {
    WeylRing::new(&["x", "y"], &["s"])
}

fn weyl_element(max_exp: u32, terms: usize) -> impl Strategy<Value = WeylElement> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, 5), small_rational()), 0..=terms).prop_map(
        move |ts| {
            let r = weyl_ring();
            WeylElement::from_terms(&r, ts.into_iter().map(|(e, c)| (Monomial::new(e), c)))
        },
    )
}

fn negate(e: FsElement) -> FsElement {
    FsElement { numer: -&e.numer, denom: e.denom }
}

fn monomial_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0u32..=3, n), 1..=3)
        .prop_filter("proper", |gs| gs.iter().all(|g| g.iter().any(|&e| e > 0)))
        .prop_map(move |gs| {
            let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
            MonomialIdeal::new(names.into(), gs.into_iter().map(Monomial::new).collect()).unwrap()
        })
}

fn alpha() -> impl Strategy<Value = Rational> {
    (1i64..=36, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn polynomial_ring_laws(
        a in polynomial(vars("x,y"), 3, 4),
        b in polynomial(vars("x,y"), 3, 4),
        c in polynomial(vars("x,y"), 3, 4),
    ) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn printed_polynomials_parse_back(a in polynomial(vars("x,y,z"), 4, 5)) {
        prop_assert_eq!(parse_polynomial(&a.to_string(), a.vars()).unwrap(), a);
    }

    #[test]
    fn weyl_product_is_associative(a in weyl_element(2, 3), b in weyl_element(2, 3), c in weyl_element(2, 3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn derivation_commutator_is_the_partial_derivative(p in polynomial(vars("x,y"), 3, 4)) {
        let r = WeylRing::new(&["x", "y"], &[]);
        let pw = WeylElement::from_polynomial(&r, &p).unwrap();
        for i in 0..2 {
            let d = WeylElement::d(&r, i);
            let comm = &(&d * &pw) - &(&pw * &d);
            prop_assert_eq!(comm, WeylElement::from_polynomial(&r, &p.derivative(i)).unwrap());
        }
    }

    #[test]
    fn product_acts_as_composition(
        a in weyl_element(2, 3),
        b in weyl_element(2, 3),
        g in polynomial(vars("x,y"), 2, 3),
        k in 0i64..4,
    ) {
        let s = int(k);
        let composed = apply_at(&a, &apply_at(&b, &g, &s), &s);
        prop_assert_eq!(apply_at(&(&a * &b), &g, &s), composed);
    }

    #[test]
    fn product_acts_as_composition_on_fs(a in weyl_element(1, 3), b in weyl_element(1, 3)) {
        let f = parse_polynomial("x^2+y^3", &vars("x,y")).unwrap();
        let ctx = FsContext::new(&[f]).unwrap();
        let g = ctx.element(&Polynomial::one(ctx.numer_ring().clone())).unwrap();
        let lhs = ctx.apply(&(&a * &b), &g).unwrap();
        let rhs = ctx.apply(&a, &ctx.apply(&b, &g).unwrap()).unwrap();
        prop_assert!(ctx.add(&lhs, &negate(rhs)).is_zero());
    }

    #[test]
    fn roots_expand_back(roots in prop::collection::btree_map((-12i64..0, 1i64..=6), 1u32..=3, 1..=4)) {
        let roots: Vec<(Rational, u32)> = roots.into_iter().map(|((n, d), k)| (q(n, d), k)).collect();
        let b = UnivariatePoly::from_roots(&roots);
        let fac = rational_roots(&b);
        prop_assert!(fac.splits_completely());
        prop_assert_eq!(fac.expand(), b.monic());
        let mut want = roots.clone();
        want.sort_by(|x, y| y.0.cmp(&x.0));
        want.dedup_by(|x, y| {
            if x.0 == y.0 { y.1 += x.1; true } else { false }
        });
        prop_assert_eq!(fac.roots, want);
    }

    #[test]
    fn multiplier_family_decreases(a in monomial_ideal(3), s in alpha(), t in alpha()) {
        let (lo, hi) = if s <= t { (s, t) } else { (t, s) };
        let p = newton_polyhedron(&a).unwrap();
        for v in monomials_up_to(3, 4) {
            if in_multiplier_ideal(&p, &v, &hi) {
                prop_assert!(in_multiplier_ideal(&p, &v, &lo));
            }
        }
    }

    #[test]
    fn generators_shift_multiplier_ideals_by_one(a in monomial_ideal(3), s in alpha()) {
        let p = newton_polyhedron(&a).unwrap();
        let next = &s + int(1);
        for v in monomials_up_to(3, 3) {
            if in_multiplier_ideal(&p, &v, &s) {
                for g in a.generators() {
                    prop_assert!(in_multiplier_ideal(&p, &g.mul(&v), &next));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(config(16))]

    #[test]
    fn commutative_bases_are_stable(gens in prop::collection::vec(polynomial(vars("x,y"), 3, 3), 1..=3)) {
        prop_assume!(gens.iter().any(|g| !g.is_zero()));
        let gb = commutative_groebner(&gens, &OrderSpec::Grevlex).unwrap();
        prop_assert_eq!(commutative_groebner(&gb, &OrderSpec::Grevlex).unwrap(), gb.clone());
        for g in &gens {
            prop_assert!(commutative_normal_form(g, &gb, &OrderSpec::Grevlex).unwrap().is_zero());
        }
    }

    #[test]
    fn weyl_bases_are_stable(gens in prop::collection::vec(weyl_element(1, 2), 1..=2)) {
        prop_assume!(gens.iter().any(|g| !g.is_zero()));
        let gb = left_groebner(&gens, &OrderSpec::Grevlex).unwrap();
        prop_assert_eq!(left_groebner(&gb, &OrderSpec::Grevlex).unwrap(), gb.clone());
        for g in &gens {
            prop_assert!(normal_form(g, &gb, &OrderSpec::Grevlex).unwrap().is_zero());
        }
    }

    #[test]
    fn monomial_routes_agree(a in 0u32..=3, b in 0u32..=2) {
        prop_assume!(a + b > 0);
        let v = vars("x,y");
        let f = Polynomial::from_terms(v.clone(), [(Monomial::new(vec![a, b]), int(1))]);
        let ideal = MonomialIdeal::of_terms(&f).unwrap();
        prop_assert_eq!(lct_from_bfunction(&f).unwrap(), lct_monomial(&ideal).unwrap());
        let p = newton_polyhedron(&ideal).unwrap();
        for m in monomials_up_to(2, 2) {
            let h = Polynomial::from_terms(v.clone(), [(m.clone(), int(1))]);
            let jb = bernstein_sato(&f, &h).unwrap().jump();
            prop_assert_eq!(jb, p.jump_value(m.exponents()));
        }
    }

    #[test]
    fn spectra_are_symmetric_with_milnor_total(exps in prop::collection::vec(2i64..=5, 2..=3)) {
        let names: Vec<String> = (1..=exps.len()).map(|i| format!("x{i}")).collect();
        let src: Vec<String> = names.iter().zip(&exps).map(|(x, e)| format!("{x}^{e}")).collect();
        let f = parse_polynomial(&src.join("+"), &names.clone().into()).unwrap();
        let sp = hodge_spectrum(&f).unwrap();
        prop_assert!(sp.is_symmetric());
        let mu: i64 = exps.iter().map(|e| e - 1).product();
        prop_assert_eq!(sp.total() as i64, mu);
        if exps.len() == 2 {
            prop_assert_eq!(milnor_dimension_by_rank(&f, 10) as i64, mu);
        }
    }
}
