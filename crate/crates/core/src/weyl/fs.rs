//! Action of `D_n[s]` on `Q[x, s, 1/f] * f^s` for tuples `f = (f_1..f_r)`.

use std::fmt;
use std::sync::Arc;

use super::element::WeylElement;
use crate::error::{Error, Result};
use crate::exactmath::{ring_vars, Monomial, Polynomial, Rational};

/// How a central parameter of the Weyl ring acts on `f^s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamRole {
    /// `s_i` for the `i`-th function.
    Single(usize),
    /// `s = s_1 + ... + s_r`.
    Sum,
    /// `s_i * t_i^{-1} * t_j`, which shifts the exponents.
    Shift(usize, usize),
}

/// Parameter names for a tuple of `r` functions: `s` for one function,
/// `s1..sr` otherwise.
pub fn exponent_names(r: usize) -> Vec<String> {
    if r == 1 {
        vec!["s".into()]
    } else {
        (1..=r).map(|i| format!("s{i}")).collect()
    }
}

/// Interprets a parameter name: `s`, `s<i>`, or `s<i><j>` (1-based, r ≤ 9
/// for the shift form).
pub fn param_role(name: &str, r: usize) -> Option<ParamRole> {
    if name == "s" {
        return Some(if r == 1 { ParamRole::Single(0) } else { ParamRole::Sum });
    }
    let digits = name.strip_prefix('s')?;
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    if let Ok(i) = digits.parse::<usize>() {
        if (1..=r).contains(&i) && r > 1 {
            return Some(ParamRole::Single(i - 1));
        }
    }
    if digits.len() == 2 && r > 1 {
        let b = digits.as_bytes();
        let (i, j) = ((b[0] - b'0') as usize, (b[1] - b'0') as usize);
        if (1..=r).contains(&i) && (1..=r).contains(&j) && i != j {
            return Some(ParamRole::Shift(i - 1, j - 1));
        }
    }
    None
}

/// The functions `f_1..f_r` and the numerator ring `Q[x, s_1..s_r]`.
#[derive(Clone, Debug)]
pub struct FsContext {
    n: usize,
    fs: Vec<Polynomial>,
    numer_ring: Arc<[String]>,
}

impl FsContext {
    /// `fs` must share one polynomial ring, the position variables.
    pub fn new(fs: &[Polynomial]) -> Result<FsContext> {
        let first = fs.first().ok_or_else(|| Error::usage("need at least one function"))?;
        if fs.iter().any(|f| !f.same_ring(first)) {
            return Err(Error::usage("functions live in different rings"));
        }
        if fs.iter().any(Polynomial::is_zero) {
            return Err(Error::usage("functions must be nonzero"));
        }
        let n = first.nvars();
        let mut names: Vec<String> = first.vars().to_vec();
        names.extend(exponent_names(fs.len()));
        let numer_ring = ring_vars(&names);
        let map: Vec<usize> = (0..n).collect();
        let fs = fs.iter().map(|f| f.embed(numer_ring.clone(), &map)).collect();
        Ok(FsContext { n, fs, numer_ring })
    }

    pub fn r(&self) -> usize {
        self.fs.len()
    }

    pub fn numer_ring(&self) -> &Arc<[String]> {
        &self.numer_ring
    }

    /// `f_i` inside the numerator ring.
    pub fn function(&self, i: usize) -> &Polynomial {
        &self.fs[i]
    }

    /// The exponent parameter `s_i` in the numerator ring.
    pub fn s(&self, i: usize) -> Polynomial {
        Polynomial::var(self.numer_ring.clone(), self.n + i)
    }

    /// Embeds a polynomial in the position variables (and possibly the
    /// exponent names) into the numerator ring.
    pub fn lift(&self, p: &Polynomial) -> Result<Polynomial> {
        let map = p
            .vars()
            .iter()
            .map(|v| {
                self.numer_ring
                    .iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Error::usage(format!("unknown variable {v} in coefficient")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(p.embed(self.numer_ring.clone(), &map))
    }

    /// `g * f^s`.
    pub fn element(&self, g: &Polynomial) -> Result<FsElement> {
        Ok(FsElement {
            numer: self.lift(g)?,
            denom: vec![0; self.r()],
        })
    }

    fn simplify(&self, mut e: FsElement) -> FsElement {
        if e.numer.is_zero() {
            e.denom.iter_mut().for_each(|k| *k = 0);
            return e;
        }
        for i in 0..self.r() {
            while e.denom[i] > 0 {
                match e.numer.div_exact(&self.fs[i]) {
                    Some(q) => {
                        e.numer = q;
                        e.denom[i] -= 1;
                    }
                    None => break,
                }
            }
        }
        e
    }

    fn denominator(&self, pows: &[u32]) -> Polynomial {
        let mut acc = Polynomial::one(self.numer_ring.clone());
        for (f, &k) in self.fs.iter().zip(pows) {
            acc = &acc * &f.pow(k);
        }
        acc
    }

    pub fn add(&self, a: &FsElement, b: &FsElement) -> FsElement {
        let top: Vec<u32> = a.denom.iter().zip(&b.denom).map(|(x, y)| *x.max(y)).collect();
        let lift = |e: &FsElement| {
            let extra: Vec<u32> = top.iter().zip(&e.denom).map(|(t, k)| t - k).collect();
            &e.numer * &self.denominator(&extra)
        };
        self.simplify(FsElement {
            numer: &lift(a) + &lift(b),
            denom: top,
        })
    }

    fn shift_s(&self, p: &Polynomial, i: usize, by: i64) -> Polynomial {
        let mut values: Vec<Polynomial> = (0..self.numer_ring.len())
            .map(|k| Polynomial::var(self.numer_ring.clone(), k))
            .collect();
        values[self.n + i] = &values[self.n + i]
            + &Polynomial::constant(self.numer_ring.clone(), Rational::from_integer(by.into()));
        p.substitute(&values, self.numer_ring.clone())
    }

    fn apply_param(&self, role: ParamRole, e: FsElement) -> FsElement {
        match role {
            ParamRole::Single(i) => FsElement {
                numer: &e.numer * &self.s(i),
                denom: e.denom,
            },
            ParamRole::Sum => {
                let total = (0..self.r()).fold(Polynomial::zero(self.numer_ring.clone()), |acc, i| {
                    &acc + &self.s(i)
                });
                FsElement {
                    numer: &e.numer * &total,
                    denom: e.denom,
                }
            }
            ParamRole::Shift(i, j) => {
                // t_j: s_j -> s_j + 1 and one more factor f_j.
                let mut numer = self.shift_s(&e.numer, j, 1);
                let mut denom = e.denom;
                if denom[j] > 0 {
                    denom[j] -= 1;
                } else {
                    numer = &numer * &self.fs[j];
                }
                // t_i^{-1}: s_i -> s_i - 1 and one factor f_i less.
                numer = self.shift_s(&numer, i, -1);
                denom[i] += 1;
                numer = &numer * &self.s(i);
                self.simplify(FsElement { numer, denom })
            }
        }
    }

    fn apply_derivation(&self, k: usize, e: FsElement) -> FsElement {
        let active: Vec<usize> = (0..self.r())
            .filter(|&i| !self.fs[i].derivative(k).is_zero())
            .collect();
        let mut numer = e.numer.derivative(k);
        for &i in &active {
            numer = &numer * &self.fs[i];
        }
        for &i in &active {
            let exponent = &self.s(i)
                - &Polynomial::constant(self.numer_ring.clone(), Rational::from_integer(e.denom[i].into()));
            let mut t = &(&e.numer * &exponent) * &self.fs[i].derivative(k);
            for &j in &active {
                if j != i {
                    t = &t * &self.fs[j];
                }
            }
            numer = &numer + &t;
        }
        let mut denom = e.denom;
        for &i in &active {
            denom[i] += 1;
        }
        self.simplify(FsElement { numer, denom })
    }

    /// `P * (g f^s)` where the parameters of `P` are named as in
    /// [`param_role`]. Central parameters act first, then derivations, then
    /// positions.
    pub fn apply(&self, p: &WeylElement, g: &FsElement) -> Result<FsElement> {
        let ring = p.ring();
        if ring.x_vars() != &self.numer_ring[..self.n] {
            return Err(Error::usage("operator and functions use different position variables"));
        }
        let roles = ring
            .params()
            .iter()
            .map(|name| {
                param_role(name, self.r())
                    .ok_or_else(|| Error::usage(format!("parameter {name} has no action on f^s")))
            })
            .collect::<Result<Vec<_>>>()?;
        let n = self.n;
        let mut acc = FsElement {
            numer: Polynomial::zero(self.numer_ring.clone()),
            denom: vec![0; self.r()],
        };
        for (m, c) in p.terms() {
            let ex = m.exponents();
            let mut cur = g.clone();
            for (j, role) in roles.iter().enumerate() {
                for _ in 0..ex[2 * n + j] {
                    cur = self.apply_param(*role, cur);
                }
            }
            for k in 0..n {
                for _ in 0..ex[n + k] {
                    cur = self.apply_derivation(k, cur);
                }
            }
            let mut mono = vec![0; self.numer_ring.len()];
            mono[..n].copy_from_slice(&ex[..n]);
            cur.numer = cur.numer.mul_monomial(&Monomial::new(mono), c);
            acc = self.add(&acc, &cur);
        }
        Ok(acc)
    }

    /// Substitutes numbers for `s_1..s_r`, leaving a rational function in `x`
    /// as (numerator, denominator powers).
    pub fn specialize(&self, e: &FsElement, s: &[Rational]) -> Polynomial {
        let xs = ring_vars(&self.numer_ring[..self.n]);
        let mut values: Vec<Polynomial> = (0..self.n).map(|k| Polynomial::var(xs.clone(), k)).collect();
        values.extend(s.iter().map(|v| Polynomial::constant(xs.clone(), v.clone())));
        e.numer.substitute(&values, xs)
    }
}

/// `numer / prod f_i^denom_i * f^s`, kept with the denominator reduced as
/// far as exact division allows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FsElement {
    pub numer: Polynomial,
    pub denom: Vec<u32>,
}

impl FsElement {
    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }
}

impl fmt::Display for FsElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den: Vec<String> = self
            .denom
            .iter()
            .enumerate()
            .filter(|(_, k)| **k > 0)
            .map(|(i, k)| if *k == 1 { format!("f{}", i + 1) } else { format!("f{}^{k}", i + 1) })
            .collect();
        if den.is_empty() {
            write!(f, "({})*f^s", self.numer)
        } else {
            write!(f, "({})/({})*f^s", self.numer, den.join("*"))
        }
    }
}

/// `P * (g f^s)`.
pub fn apply_to_fs(p: &WeylElement, g: &FsElement, ctx: &FsContext) -> Result<FsElement> {
    ctx.apply(p, g)
}

/// Whether `P` kills `f^s`.
pub fn annihilates(p: &WeylElement, ctx: &FsContext) -> Result<bool> {
    let one = ctx.element(&Polynomial::one(ctx.numer_ring().clone()))?;
    Ok(ctx.apply(p, &one)?.is_zero())
}

#[cfg(test)]
pub(crate) fn one_numer(ctx: &FsContext) -> Polynomial {
    Polynomial::one(ctx.numer_ring().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;
    use crate::weyl::WeylRing;

    #[test]
    fn euler_kills_monomial_power() {
        let xs = ring_vars(&["x"]);
        let f = Polynomial::var(xs, 0);
        let ctx = FsContext::new(&[f]).unwrap();
        let r = WeylRing::new(&["x"], &["s"]);
        let p = &(&WeylElement::x(&r, 0) * &WeylElement::d(&r, 0)) - &WeylElement::param(&r, 0);
        assert!(annihilates(&p, &ctx).unwrap());
    }

    #[test]
    fn derivation_lowers_power() {
        // d (x^2)^s = 2 s x^(2s-1) = 2 s / x * (x^2)^s
        let xs = ring_vars(&["x"]);
        let x = Polynomial::var(xs, 0);
        let ctx = FsContext::new(&[&x * &x]).unwrap();
        let r = WeylRing::new(&["x"], &["s"]);
        let one = ctx.element(&one_numer(&ctx)).unwrap();
        let out = ctx.apply(&WeylElement::d(&r, 0), &one).unwrap();
        // 2 s x / x^2
        assert_eq!(out.denom, vec![1]);
        let s = ctx.s(0);
        let xn = Polynomial::var(ctx.numer_ring().clone(), 0);
        assert_eq!(out.numer, (&s * &xn).scale(&int(2)));
    }

    #[test]
    fn shift_operator() {
        // s12 = s1 t1^{-1} t2 on f1^s1 f2^s2 gives s1 * f2/f1 * f^s.
        let xs = ring_vars(&["x", "y"]);
        let x = Polynomial::var(xs.clone(), 0);
        let y = Polynomial::var(xs, 1);
        let ctx = FsContext::new(&[x, y]).unwrap();
        let r = WeylRing::new(&["x", "y"], &["s12"]);
        let one = ctx.element(&one_numer(&ctx)).unwrap();
        let out = ctx.apply(&WeylElement::param(&r, 0), &one).unwrap();
        assert_eq!(out.denom, vec![1, 0]);
        let yn = Polynomial::var(ctx.numer_ring().clone(), 1);
        assert_eq!(out.numer, &ctx.s(0) * &yn);
    }

    #[test]
    fn roles() {
        assert_eq!(param_role("s", 1), Some(ParamRole::Single(0)));
        assert_eq!(param_role("s", 2), Some(ParamRole::Sum));
        assert_eq!(param_role("s2", 2), Some(ParamRole::Single(1)));
        assert_eq!(param_role("s21", 2), Some(ParamRole::Shift(1, 0)));
        assert_eq!(param_role("t", 2), None);
    }
}
