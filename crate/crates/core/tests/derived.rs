//! Hand-derived fixtures, each checked against a separate oracle.

mod common;

use bsato::bfun::{ann_fs, bernstein_sato, lct_from_bfunction, v_filtration_table, verify_certificate, Certificate};
use bsato::cli::parse::{parse_bfunction, parse_operators};
use bsato::exactmath::linalg::{nullspace, rref};
use bsato::exactmath::{commutative_groebner, int, Monomial, OrderSpec, Polynomial, Rational};
use bsato::newton::inner::inner_multiplicity_with_route;
use bsato::newton::multiplier::in_multiplier_ideal;
use bsato::newton::{
    jumping_numbers_monomial, lct_monomial, monomials_up_to, newton_polyhedron, InnerSubject, MonomialIdeal,
};
use bsato::spectrum::{check_spectrum_vs_inner, hodge_spectrum, infer_weights, milnor_basis};
use bsato::weyl::{eliminate, left_groebner, normal_form, FsContext, WeylElement, WeylRing};
use common::{apply_at, embed, milnor_dimension_by_rank, op, poly, q, vars};

fn monomial(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec())
}

#[test]
fn jacobian_of_cusp_reduces_to_x_and_y_squared() {
    let f = poly("x^2+y^3", "x,y");
    let jac = [f.derivative(0), f.derivative(1)];
    let gb = commutative_groebner(&jac, &OrderSpec::Grevlex).unwrap();
    let got: Vec<String> = gb.iter().map(|g| g.to_string()).collect();
    assert_eq!(got, ["x", "y^2"]);
    // Oracle: each basis element is a scalar multiple of one generator.
    assert_eq!(&jac[0].scale(&q(1, 2)), &gb[0]);
    assert_eq!(&jac[1].scale(&q(1, 3)), &gb[1]);
}

#[test]
fn derivation_squared_past_x_squared() {
    let lhs = &op("dx^2", "x") * &op("x^2", "x");
    assert_eq!(lhs.to_string(), "x^2*dx^2+4*x*dx+2");
    // Oracle: both sides act identically on x^k.
    let rhs = op("x^2*dx^2+4*x*dx+2", "x");
    for k in 0..6 {
        let g = poly(&format!("x^{k}"), "x");
        let left = apply_at(&op("dx^2", "x"), &(&g * &poly("x^2", "x")), &int(0));
        assert_eq!(left, apply_at(&rhs, &g, &int(0)));
    }
}

#[test]
fn position_and_derivation_generate_the_unit_ideal() {
    let x = op("x", "x");
    let d = op("dx", "x");
    let gb = left_groebner(&[x.clone(), d.clone()], &OrderSpec::Grevlex).unwrap();
    assert_eq!(gb.len(), 1);
    assert_eq!(gb[0].to_string(), "1");
    // Oracle: the commutator itself is the unit.
    assert_eq!((&(&d * &x) - &(&x * &d)).to_string(), "1");
    let one = WeylElement::one(x.ring());
    assert!(normal_form(&one, &gb, &OrderSpec::Grevlex).unwrap().is_zero());
}

#[test]
fn graph_ideal_of_x_squared_is_closed() {
    let gens = parse_operators(&["t-x^2".into(), "dx+2*x*dt".into()], &vars("x,t"), 1).unwrap();
    let gb = left_groebner(&gens, &OrderSpec::Grevlex).unwrap();
    for g in &gens {
        assert!(normal_form(g, &gb, &OrderSpec::Grevlex).unwrap().is_zero());
    }
    assert_eq!(left_groebner(&gb, &OrderSpec::Grevlex).unwrap(), gb);
    // Oracle: x (dx + 2x dt) + 2 dt (t - x^2) = x dx + 2 t dt + 2, the
    // weight-zero element that becomes x dx - 2s under -dt t = s.
    let v = vars("x,t");
    let e = |s: &str| parse_operators(&[s.into()], &v, 1).unwrap().remove(0);
    let combo = &(&e("x") * &gens[1]) + &(&e("2*dt") * &gens[0]);
    assert_eq!(combo, e("x*dx+2*t*dt+2"));
    assert!(normal_form(&combo, &gb, &OrderSpec::Grevlex).unwrap().is_zero());
}

#[test]
fn b_function_of_a_coordinate_comes_out_of_elimination() {
    let f = poly("x", "x");
    assert_eq!(bernstein_sato(&f, &Polynomial::one(f.vars().clone())).unwrap().factored(), "(s+1)");
    // Oracle: d (x^{k+1}) = (k+1) x^k at integer exponents.
    let p = op("dx", "x");
    for k in 0..5 {
        let lhs = apply_at(&p, &f.pow(k + 1), &int(0));
        assert_eq!(lhs, f.pow(k).scale(&int(k as i64 + 1)));
    }
}

#[test]
fn x_times_s_plus_one_has_no_s_only_multiple() {
    let r = WeylRing::new(&["x"], &["s"]);
    let g = parse_operators(&["x*s+x".into()], &vars("x"), 1).unwrap().remove(0);
    let kill = [r.x_index(0), r.d_index(0)];
    let g = embed(&g, &r);
    assert!(eliminate(std::slice::from_ref(&g), &kill).unwrap().is_empty());
    // Oracle: no left multiple Q g with deg Q <= 3 is free of x and dx.
    let basis: Vec<WeylElement> = monomials_up_to(3, 3)
        .into_iter()
        .map(|m| WeylElement::from_terms(&r, [(m, int(1))]))
        .collect();
    let products: Vec<WeylElement> = basis.iter().map(|b| b * &g).collect();
    let mut monos: Vec<Monomial> = products.iter().flat_map(|p| p.terms().keys().cloned()).collect();
    monos.sort();
    monos.dedup();
    let bad: Vec<&Monomial> = monos
        .iter()
        .filter(|m| m.exponents()[0] > 0 || m.exponents()[1] > 0)
        .collect();
    let rows: Vec<Vec<Rational>> = bad
        .iter()
        .map(|m| products.iter().map(|p| p.terms().get(*m).cloned().unwrap_or_default()).collect())
        .collect();
    for v in nullspace(&rows, products.len()) {
        let combo = products
            .iter()
            .zip(&v)
            .fold(WeylElement::zero(&r), |acc, (p, c)| &acc + &p.scale(c));
        assert!(combo.is_zero());
    }
}

#[test]
fn multi_function_power_rule() {
    let v = vars("x,y");
    let fs = [poly("x", "x,y"), poly("y", "x,y")];
    let ctx = FsContext::new(&fs).unwrap();
    let ops = parse_operators(&["dx".into(), "dy".into()], &v, 2).unwrap();
    let mut total = ctx.element(&Polynomial::zero(ctx.numer_ring().clone())).unwrap();
    for (j, p) in ops.iter().enumerate() {
        let g = ctx.element(ctx.function(j)).unwrap();
        total = ctx.add(&total, &ctx.apply(p, &g).unwrap());
    }
    let expected = &(&ctx.s(0) + &ctx.s(1)) + &Polynomial::constant(ctx.numer_ring().clone(), int(2));
    assert_eq!(total.numer, expected);
    assert!(total.denom.iter().all(|&k| k == 0));
    // Oracle: plain derivatives at integer exponents.
    for a in 0..4u32 {
        for b in 0..4u32 {
            let lhs = &poly(&format!("x^{}*y^{b}", a + 1), "x,y").derivative(0)
                + &poly(&format!("x^{a}*y^{}", b + 1), "x,y").derivative(1);
            let rhs = poly(&format!("x^{a}*y^{b}"), "x,y").scale(&int((a + b + 2) as i64));
            assert_eq!(lhs, rhs);
        }
    }
}

fn ann_contains(f: &Polynomial, src: &str) {
    let ann = ann_fs(f).unwrap();
    let names = f.vars().join(",");
    let r = ann[0].ring().clone();
    let p = parse_operators(&[src.into()], f.vars(), 1).unwrap().remove(0);
    let p = embed(&p, &r);
    assert!(normal_form(&p, &ann, &OrderSpec::Grevlex).unwrap().is_zero(), "{src} not in Ann");
    // Oracle: p kills f^k at integer k.
    for k in 0..5u32 {
        assert!(apply_at(&p, &f.pow(k), &int(k as i64)).is_zero(), "{src} on {names} at s = {k}");
    }
}

#[test]
fn annihilators_of_powers_of_x() {
    ann_contains(&poly("x", "x"), "x*dx-s");
    ann_contains(&poly("x^2", "x"), "x*dx-2*s");
}

#[test]
fn cusp_annihilator_kills_integer_powers() {
    let f = poly("x^2+y^3", "x,y");
    let ann = ann_fs(&f).unwrap();
    assert!(!ann.is_empty());
    for g in &ann {
        for k in 0..4u32 {
            assert!(apply_at(g, &f.pow(k), &int(k as i64)).is_zero(), "{g} at s = {k}");
        }
    }
    ann_contains(&f, "3*y^2*dx-2*x*dy");
}

/// Checks `b(k) f^k = P f^{k+1}` by plain calculus at integer `k`.
fn certificate_by_calculus(f: &Polynomial, b: &str, p: &str) {
    let b = parse_bfunction(b).unwrap();
    let p = op(p, &f.vars().join(","));
    for k in 0..4u32 {
        let lhs = f.pow(k).scale(&b.eval(&int(k as i64)));
        assert_eq!(apply_at(&p, &f.pow(k + 1), &int(k as i64)), lhs);
    }
}

#[test]
fn sum_of_four_squares() {
    let f = poly("x1^2+x2^2+x3^2+x4^2", "x1,x2,x3,x4");
    let one = Polynomial::one(f.vars().clone());
    assert_eq!(bernstein_sato(&f, &one).unwrap().factored(), "(s+1)(s+2)");
    let laplacian = "(dx1^2+dx2^2+dx3^2+dx4^2)/4";
    certificate_by_calculus(&f, "(s+1)(s+2)", laplacian);
    let cert = Certificate {
        fs: vec![f.clone()],
        h: one,
        b: parse_bfunction("(s+1)(s+2)").unwrap(),
        ops: vec![op(laplacian, "x1,x2,x3,x4")],
    };
    assert!(verify_certificate(&cert).unwrap().is_valid());
}

#[test]
fn square_of_a_coordinate() {
    let f = poly("x^2", "x");
    let one = Polynomial::one(f.vars().clone());
    assert_eq!(bernstein_sato(&f, &one).unwrap().factored(), "(s+1)(s+1/2)");
    certificate_by_calculus(&f, "(s+1)(s+1/2)", "dx^2/4");
    assert_eq!(lct_from_bfunction(&f).unwrap(), q(1, 2));
    // Oracle: the Newton route on the principal monomial ideal.
    assert_eq!(lct_monomial(&MonomialIdeal::of_terms(&f).unwrap()).unwrap(), q(1, 2));
}

#[test]
fn square_jumps_at_half_and_one() {
    let f = poly("x^2", "x");
    let t = v_filtration_table(&f, 2, &int(1)).unwrap();
    assert_eq!(t.table.jumps(), vec![q(1, 2), int(1)]);
    // Oracle: J(alpha (x^2)) = (x^floor(2 alpha)), jumps at multiples of 1/2.
    for (m, c) in &t.jump_values {
        let k = m.exponents()[0] as i64;
        assert_eq!(c.clone().unwrap(), q(k + 1, 2));
    }
}

#[test]
fn facets_of_three_coordinate_lines() {
    let a = MonomialIdeal::new(
        vars("x1,x2,x3"),
        vec![monomial(&[1, 1, 0]), monomial(&[0, 1, 1]), monomial(&[1, 0, 1])],
    )
    .unwrap();
    let p = newton_polyhedron(&a).unwrap();
    let mut got: Vec<String> = p.facets().iter().map(|f| f.to_string()).collect();
    got.sort();
    let mut want = vec![
        "u1+u2+u3 >= 2",
        "u1+u2 >= 1",
        "u1+u3 >= 1",
        "u2+u3 >= 1",
        "u1 >= 0",
        "u2 >= 0",
        "u3 >= 0",
    ];
    want.sort();
    assert_eq!(got, want);
    // Oracle: each facet is valid on generators and rays, and the points
    // and rays where it is tight span a hyperplane.
    let rays: Vec<Vec<i64>> = (0..3).map(|i| (0..3).map(|j| i64::from(i == j)).collect()).collect();
    for f in p.facets() {
        let w: Vec<i64> = f.normal.iter().map(|x| x.try_into().unwrap()).collect();
        let c: i64 = (&f.offset).try_into().unwrap();
        let mut tight_points = Vec::new();
        for g in a.generators() {
            let v: i64 = g.exponents().iter().zip(&w).map(|(e, w)| *e as i64 * w).sum();
            assert!(v >= c);
            if v == c {
                tight_points.push(g.exponents().iter().map(|&e| e as i64).collect::<Vec<_>>());
            }
        }
        let mut dirs: Vec<Vec<Rational>> = Vec::new();
        for r in &rays {
            let v: i64 = r.iter().zip(&w).map(|(a, b)| a * b).sum();
            assert!(v >= 0);
            if v == 0 {
                dirs.push(r.iter().map(|&x| int(x)).collect());
            }
        }
        for pair in tight_points.windows(2) {
            dirs.push(pair[0].iter().zip(&pair[1]).map(|(a, b)| int(a - b)).collect());
        }
        assert!(!tight_points.is_empty());
        assert_eq!(rref(&mut dirs).len(), 2, "facet {f} is not supporting");
    }
}

/// `J(alpha m) = m^(floor(alpha) - 1)` in two variables.
fn maximal_ideal_oracle(v: &Monomial, alpha: &Rational) -> bool {
    let k: i64 = alpha.floor().to_integer().try_into().unwrap();
    i64::from(v.degree()) >= (k - 1).max(0)
}

#[test]
fn maximal_ideal_in_the_plane() {
    let a = MonomialIdeal::maximal(vars("x,y"));
    let p = newton_polyhedron(&a).unwrap();
    assert!(in_multiplier_ideal(&p, &Monomial::one(2), &int(1)));
    assert_eq!(lct_monomial(&a).unwrap(), int(2));
    assert_eq!(jumping_numbers_monomial(&a, &int(3), 6).unwrap().jumps(), vec![int(2), int(3)]);
    for num in 1..16 {
        let alpha = q(num, 4);
        for v in monomials_up_to(2, 5) {
            assert_eq!(in_multiplier_ideal(&p, &v, &alpha), maximal_ideal_oracle(&v, &alpha), "{alpha}");
        }
    }
    let (k, _) = inner_multiplicity_with_route(&InnerSubject::Monomial(a), &int(2), 6).unwrap();
    assert_eq!(k, 1);
}

#[test]
fn weights_by_linear_solve() {
    for (src, w) in [("x^2+y^3", [q(1, 2), q(1, 3)]), ("x^2+x*y", [q(1, 2), q(1, 2)])] {
        let f = poly(src, "x,y");
        let ws = infer_weights(&f).unwrap().weights;
        assert_eq!(ws, w);
        // Oracle: every term has weighted degree one.
        for m in f.terms().keys() {
            let d: Rational = m.exponents().iter().zip(&ws).map(|(e, w)| w * int(*e as i64)).sum();
            assert_eq!(d, int(1));
        }
    }
}

#[test]
fn milnor_bases_match_rank_count() {
    let cusp = poly("x^2+y^3", "x,y");
    let basis: Vec<String> = milnor_basis(&cusp).unwrap().iter().map(|m| m.render(cusp.vars())).collect();
    assert_eq!(basis, ["1", "y"]);
    assert_eq!(milnor_dimension_by_rank(&cusp, 8), 2);
    let lines = poly("x*y*(x+y)", "x,y");
    assert_eq!(milnor_basis(&lines).unwrap().len(), 4);
    assert_eq!(milnor_dimension_by_rank(&lines, 8), 4);
    // x^2 + xy is a node after a coordinate change: Milnor number one.
    let node = poly("x^2+x*y", "x,y");
    assert_eq!(milnor_basis(&node).unwrap().len(), 1);
    assert_eq!(milnor_dimension_by_rank(&node, 6), 1);
}

/// Spectrum of `x^a + y^b`: `{ i/a + j/b : 0 < i < a, 0 < j < b }`.
fn brieskorn_spectrum(a: i64, b: i64) -> std::collections::BTreeMap<Rational, u64> {
    let mut out = std::collections::BTreeMap::new();
    for i in 1..a {
        for j in 1..b {
            *out.entry(q(i, a) + q(j, b)).or_insert(0) += 1;
        }
    }
    out
}

#[test]
fn brieskorn_spectra() {
    for (a, b) in [(2, 2), (3, 3), (2, 3), (2, 5), (3, 4)] {
        let f = poly(&format!("x^{a}+y^{b}"), "x,y");
        assert_eq!(hodge_spectrum(&f).unwrap().entries, brieskorn_spectrum(a, b), "x^{a}+y^{b}");
    }
    let c = check_spectrum_vs_inner(&poly("x^2+y^2", "x,y"), &int(1), 6).unwrap();
    assert!(c.agrees());
    assert_eq!(c.inner, 1);
}
