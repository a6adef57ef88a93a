use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::ann::{ann_fs, ann_plus_f_by_weights, operator_ring};
use crate::error::{Error, Result};
use crate::exactmath::{
    rational_roots, render_factored, Monomial, OrderSpec, Polynomial, Rational, UnivariatePoly,
};
use crate::exactmath::linalg::solve;
use crate::weyl::{
    apply_to_fs, left_groebner, left_groebner_module, module_normal_form, normal_form, FsContext, FsElement, WeylElement,
    WeylRing, WeylVector,
};

/// A monic Bernstein–Sato polynomial `b_{f,h}(s)` with its rational roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFunction {
    poly: UnivariatePoly,
    roots: Vec<(Rational, u32)>,
    f: Polynomial,
    h: Polynomial,
}

impl BFunction {
    /// Factors `poly` over the rationals; fails if it does not split.
    pub fn new(poly: UnivariatePoly, f: Polynomial, h: Polynomial) -> Result<BFunction> {
        let poly = poly.monic();
        let fac = rational_roots(&poly);
        if !fac.splits_completely() {
            return Err(Error::internal(format!(
                "b-function {} does not split over the rationals",
                poly.render("s")
            )));
        }
        if fac.roots.iter().any(|(r, _)| !r.is_negative()) {
            return Err(Error::internal("b-function has a nonnegative root"));
        }
        Ok(BFunction {
            poly,
            roots: fac.roots,
            f,
            h,
        })
    }

    pub fn poly(&self) -> &UnivariatePoly {
        &self.poly
    }

    /// Roots with multiplicities, descending.
    pub fn roots(&self) -> &[(Rational, u32)] {
        &self.roots
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn h(&self) -> &Polynomial {
        &self.h
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    /// `min { c : b(-c) = 0 }`, or `None` when `b = 1`.
    pub fn jump(&self) -> Option<Rational> {
        self.roots.first().map(|(r, _)| -r)
    }

    /// `b(s - 1)`, the polynomial attached to the zero locus rather than to `f`.
    pub fn zero_locus_shift(&self) -> UnivariatePoly {
        self.poly.shift(&-Rational::one())
    }

    pub fn factored(&self) -> String {
        render_factored(&self.roots, &UnivariatePoly::one(), "s")
    }
}

impl fmt::Display for BFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.factored())
    }
}

/// Data of a functional equation
/// `b(s) h prod f_i^{s_i} = sum_j P_j f_j h prod f_i^{s_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub fs: Vec<Polynomial>,
    pub h: Polynomial,
    pub b: UnivariatePoly,
    pub ops: Vec<WeylElement>,
}

/// Outcome of [`verify_certificate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    /// The nonzero residual `b h f^s - sum P_j f_j h f^s`.
    Invalid(FsElement),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

fn check_inputs(f: &Polynomial, h: &Polynomial) -> Result<()> {
    if f.is_constant() {
        return Err(Error::usage("f must be nonconstant"));
    }
    if h.is_zero() {
        return Err(Error::usage("h must be nonzero"));
    }
    if !f.same_ring(h) {
        return Err(Error::usage("f and h must use the same variables"));
    }
    Ok(())
}

fn lift(ring: &Arc<WeylRing>, p: &Polynomial) -> Result<WeylElement> {
    WeylElement::from_polynomial(ring, p)
}

fn positional_slots(ring: &WeylRing) -> Vec<usize> {
    (0..ring.n()).flat_map(|i| [ring.x_index(i), ring.d_index(i)]).collect()
}

/// Upper limit on the degree searched for `b_{f,h}`.
const MAX_B_DEGREE: usize = 64;

/// Coefficients `c` with `target = sum_j c_j forms_j`, if any.
fn dependency(forms: &[WeylElement], target: &WeylElement) -> Option<Vec<Rational>> {
    let mut monos: Vec<&Monomial> = forms.iter().chain([target]).flat_map(|e| e.terms().keys()).collect();
    monos.sort();
    monos.dedup();
    if forms.is_empty() {
        return target.is_zero().then(Vec::new);
    }
    let coef = |e: &WeylElement, m: &Monomial| e.terms().get(m).cloned().unwrap_or_else(Rational::zero);
    let rows: Vec<Vec<Rational>> = monos.iter().map(|m| forms.iter().map(|e| coef(e, m)).collect()).collect();
    let rhs: Vec<Rational> = monos.iter().map(|m| coef(target, m)).collect();
    solve(&rows, &rhs).map(|(x, _)| x)
}

/// `b_{f,h}` from a Gröbner basis of `Ann f^s`: the minimal polynomial of
/// `s` acting on the class of `h` in `D[s] / (Ann f^s + D[s] f h)`, found as
/// the first linear relation among the normal forms of `s^k h`.
pub(crate) fn bfunction_from_ann(f: &Polynomial, h: &Polynomial, ann: &[WeylElement]) -> Result<BFunction> {
    let ring = operator_ring(f);
    let mut gens = ann.to_vec();
    gens.push(lift(&ring, &(f * h))?);
    let order = OrderSpec::Grevlex;
    let gb = left_groebner(&gens, &order)?;
    let s = WeylElement::param(&ring, 0);
    let mut forms: Vec<WeylElement> = Vec::new();
    let mut cur = lift(&ring, h)?;
    for k in 0..=MAX_B_DEGREE {
        let nf = normal_form(&cur, &gb, &order)?;
        if let Some(c) = dependency(&forms, &nf) {
            let mut coeffs: Vec<Rational> = c.into_iter().map(|x| -x).collect();
            coeffs.push(Rational::one());
            debug_assert_eq!(coeffs.len(), k + 1);
            return BFunction::new(UnivariatePoly::new(coeffs), f.clone(), h.clone());
        }
        cur = &s * &nf;
        forms.push(nf);
    }
    Err(Error::internal(format!("no b-function of degree at most {MAX_B_DEGREE} found")))
}

/// `b_{f,h}` by elimination: in the rank-2 module
/// `<(g, 0), (f h, 0), (h, 1)>` over `D[s]`, the elements `(0, b)` with `b`
/// free of `x, d` record exactly the `b` with `b h in Ann f^s + D[s] f h`.
pub fn bernstein_sato_by_elimination(f: &Polynomial, h: &Polynomial) -> Result<BFunction> {
    check_inputs(f, h)?;
    let ann = ann_fs(f)?;
    let ring = operator_ring(f);
    let zero = WeylElement::zero(&ring);
    let fh = lift(&ring, &(f * h))?;
    let hw = lift(&ring, h)?;
    let kill = positional_slots(&ring);
    let order = OrderSpec::Elimination(kill.clone());

    let poly = {
        let mut gens: Vec<WeylVector> = ann.iter().map(|g| vec![g.clone(), zero.clone()]).collect();
        gens.push(vec![fh, zero.clone()]);
        gens.push(vec![hw, WeylElement::one(&ring)]);
        let gb = left_groebner_module(&gens, &order)?;
        gb.into_iter()
            .find(|v| v[0].is_zero() && v[1].is_free_of(&kill))
            .map(|mut v| v.remove(1))
    };
    let b = poly.ok_or_else(|| Error::internal("elimination produced no polynomial in s"))?;
    let p = b
        .as_param_polynomial()
        .ok_or_else(|| Error::internal("eliminated element still involves x or d"))?;
    BFunction::new(univariate(&p), f.clone(), h.clone())
}

/// Univariate polynomial from a polynomial in the single variable `s`.
fn univariate(p: &Polynomial) -> UnivariatePoly {
    let deg = p.total_degree().unwrap_or(0) as usize;
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (m, c) in p.terms() {
        coeffs[m.exponents()[0] as usize] = c.clone();
    }
    UnivariatePoly::new(coeffs)
}

/// The Bernstein–Sato polynomial `b_{f,h}(s)` of a single polynomial.
pub fn bernstein_sato(f: &Polynomial, h: &Polynomial) -> Result<BFunction> {
    check_inputs(f, h)?;
    let ann = ann_fs(f)?;
    bfunction_from_ann(f, h, &ann)
}

/// `b_f` recomputed through the weight route, as an independent check.
pub fn bernstein_sato_by_weights(f: &Polynomial) -> Result<BFunction> {
    let one = Polynomial::one(f.vars().clone());
    check_inputs(f, &one)?;
    let gens = ann_plus_f_by_weights(f)?;
    let ring = operator_ring(f);
    let kill = positional_slots(&ring);
    let vs: Vec<WeylVector> = gens.iter().map(|g| vec![g.clone()]).collect();
    let gb = left_groebner_module(&vs, &OrderSpec::Elimination(kill.clone()))?;
    let b = gb
        .into_iter()
        .map(|mut v| v.remove(0))
        .find(|g| g.is_free_of(&kill))
        .ok_or_else(|| Error::internal("weight route produced no polynomial in s"))?;
    let p = b
        .as_param_polynomial()
        .ok_or_else(|| Error::internal("eliminated element still involves x or d"))?;
    BFunction::new(univariate(&p), f.clone(), one)
}

/// Embeds a univariate polynomial in `s` into `D_n[s]`.
pub fn s_polynomial(ring: &Arc<WeylRing>, b: &UnivariatePoly) -> WeylElement {
    let j = ring
        .params()
        .iter()
        .position(|p| p == "s")
        .expect("ring has a parameter s");
    WeylElement::from_terms(
        ring,
        b.coeffs().iter().enumerate().map(|(k, c)| {
            let mut e = vec![0; ring.nvars()];
            e[ring.param_index(j)] = k as u32;
            (Monomial::new(e), c.clone())
        }),
    )
}

/// `b_{f,h}` together with an operator `P` such that
/// `b(s) h f^s = P f h f^s`.
pub fn bernstein_sato_with_certificate(f: &Polynomial, h: &Polynomial) -> Result<(BFunction, Certificate)> {
    check_inputs(f, h)?;
    let ann = ann_fs(f)?;
    let b = bfunction_from_ann(f, h, &ann)?;
    let ring = operator_ring(f);
    let zero = WeylElement::zero(&ring);
    // Basis of <(g, 0), (f h, 1)>; reducing (b h, 0) leaves (0, -P).
    let mut gens: Vec<WeylVector> = ann.iter().map(|g| vec![g.clone(), zero.clone()]).collect();
    gens.push(vec![lift(&ring, &(f * h))?, WeylElement::one(&ring)]);
    let order = OrderSpec::Grevlex;
    let gb = left_groebner_module(&gens, &order)?;
    let bh = &s_polynomial(&ring, b.poly()) * &lift(&ring, h)?;
    let rem = module_normal_form(&[bh, zero], &gb, &order)?;
    if !rem[0].is_zero() {
        return Err(Error::internal("b(s) h does not reduce into the cofactor component"));
    }
    let cert = Certificate {
        fs: vec![f.clone()],
        h: h.clone(),
        b: b.poly().clone(),
        ops: vec![-&rem[1]],
    };
    if !verify_certificate(&cert)?.is_valid() {
        return Err(Error::internal("computed certificate fails verification"));
    }
    Ok((b, cert))
}

/// Checks `b(s) h prod f_i^{s_i} = sum_j P_j f_j h prod f_i^{s_i}` exactly,
/// where `s` in `b` and in the operators means `s_1 + ... + s_r`.
pub fn verify_certificate(c: &Certificate) -> Result<Verdict> {
    if c.ops.len() != c.fs.len() {
        return Err(Error::usage(format!(
            "certificate has {} operators for {} functions",
            c.ops.len(),
            c.fs.len()
        )));
    }
    let ctx = FsContext::new(&c.fs)?;
    let h = ctx.lift(&c.h)?;
    let total = (0..ctx.r()).fold(Polynomial::zero(ctx.numer_ring().clone()), |acc, i| {
        &acc + &ctx.s(i)
    });
    let mut b_of_s = Polynomial::zero(ctx.numer_ring().clone());
    for coef in c.b.coeffs().iter().rev() {
        b_of_s = &(&b_of_s * &total) + &Polynomial::constant(ctx.numer_ring().clone(), coef.clone());
    }
    let mut residual = ctx.element(&(&b_of_s * &h))?;
    for (j, p) in c.ops.iter().enumerate() {
        let g = ctx.element(&(ctx.function(j) * &h))?;
        let image = apply_to_fs(p, &g, &ctx)?;
        let neg = FsElement {
            numer: -&image.numer,
            denom: image.denom,
        };
        residual = ctx.add(&residual, &neg);
    }
    Ok(if residual.is_zero() {
        Verdict::Valid
    } else {
        Verdict::Invalid(residual)
    })
}

/// `-(largest root of b_f)`.
pub fn lct_from_bfunction(f: &Polynomial) -> Result<Rational> {
    let b = bernstein_sato(f, &Polynomial::one(f.vars().clone()))?;
    b.jump()
        .ok_or_else(|| Error::usage("f does not vanish anywhere; the threshold is undefined"))
}

/// Whether `h` lies in the multiplier ideal `J(alpha * {f = 0})`: `alpha < c`
/// for every root `-c` of `b_{f,h}`.
pub fn multiplier_membership(f: &Polynomial, h: &Polynomial, alpha: &Rational) -> Result<bool> {
    if !alpha.is_positive() {
        return Err(Error::usage("alpha must be positive"));
    }
    let b = bernstein_sato(f, h)?;
    Ok(member_given(&b, alpha))
}

/// Membership read off an already computed `b_{f,h}`.
pub fn member_given(b: &BFunction, alpha: &Rational) -> bool {
    b.jump().is_none_or(|c| *alpha < c)
}
