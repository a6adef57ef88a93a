//! Dense univariate polynomials over the rationals and exact rational-root
//! extraction.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{denominator_lcm, fmt_rational, integer_content, Rational};

/// Coefficients lowest degree first; the leading coefficient is nonzero
/// unless the polynomial is zero (empty vector).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnivariatePoly {
    coeffs: Vec<Rational>,
}

impl UnivariatePoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn zero() -> Self {
        UnivariatePoly { coeffs: vec![] }
    }

    pub fn constant(c: Rational) -> Self {
        UnivariatePoly::new(vec![c])
    }

    pub fn one() -> Self {
        UnivariatePoly::constant(Rational::one())
    }

    /// The variable itself.
    pub fn var() -> Self {
        UnivariatePoly::new(vec![Rational::zero(), Rational::one()])
    }

    /// `s - root`.
    pub fn linear(root: &Rational) -> Self {
        UnivariatePoly::new(vec![-root.clone(), Rational::one()])
    }

    /// Monic product of `(s - r)^m`.
    pub fn from_roots(roots: &[(Rational, u32)]) -> Self {
        let mut p = UnivariatePoly::one();
        for (r, m) in roots {
            for _ in 0..*m {
                p = &p * &UnivariatePoly::linear(r);
            }
        }
        p
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UnivariatePoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `p(s + c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        let lin = UnivariatePoly::new(vec![c.clone(), Rational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(UnivariatePoly::zero(), |acc, a| {
                &(&acc * &lin) + &UnivariatePoly::constant(a.clone())
            })
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UnivariatePoly) -> (UnivariatePoly, UnivariatePoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &lc;
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quo[k] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (UnivariatePoly::new(quo), UnivariatePoly::new(rem))
    }

    pub fn gcd(&self, other: &UnivariatePoly) -> UnivariatePoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Primitive integer form: integer coefficients with content 1 and positive
    /// leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return vec![];
        }
        let l = denominator_lcm(&self.coeffs);
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let g = integer_content(&ints);
        let sign = if ints.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        ints.into_iter().map(|c| c / &g * &sign).collect()
    }

    /// Renders expanded with the given variable name, e.g. `s^2+3/2*s+1/2`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let a = c.abs();
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&fmt_rational(&a));
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", fmt_rational(&a), mono));
            }
        }
        out
    }
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("s"))
    }
}

impl Add for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn add(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = Rational::zero();
        UnivariatePoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + rhs.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Sub for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn sub(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        self + &(-rhs)
    }
}

impl Neg for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn neg(self) -> UnivariatePoly {
        UnivariatePoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn mul(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        if self.is_zero() || rhs.is_zero() {
            return UnivariatePoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivariatePoly::new(out)
    }
}

/// Result of [`rational_roots`]: `monic(input) = prod (s - r)^m * cofactor`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootFactorization {
    /// Distinct rational roots, sorted descending, with multiplicities.
    pub roots: Vec<(Rational, u32)>,
    /// Monic factor without rational roots; `1` when the split is complete.
    pub cofactor: UnivariatePoly,
}

impl RootFactorization {
    pub fn splits_completely(&self) -> bool {
        self.cofactor.degree() == Some(0)
    }

    pub fn expand(&self) -> UnivariatePoly {
        &UnivariatePoly::from_roots(&self.roots) * &self.cofactor
    }
}

/// Positive divisors by trial division.
fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    assert!(!n.is_zero());
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.clone();
    let mut p = BigInt::from(2u32);
    while &p * &p <= m {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if m > BigInt::one() {
        primes.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut q = d.clone();
            next.push(q.clone());
            for _ in 0..e {
                q *= &p;
                next.push(q.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// All rational roots with exact multiplicities via the rational root theorem
/// on the primitive integer form. Any factor without rational roots is
/// reported as the cofactor, not raised.
pub fn rational_roots(b: &UnivariatePoly) -> RootFactorization {
    assert!(!b.is_zero(), "rational_roots of the zero polynomial");
    let mut rest = b.monic();
    let mut roots: Vec<(Rational, u32)> = Vec::new();

    let zero_mult = rest.coeffs.iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult as u32));
        rest = UnivariatePoly::new(rest.coeffs[zero_mult..].to_vec());
    }

    if rest.degree().unwrap_or(0) > 0 {
        let ints = rest.primitive_integer();
        let lead = ints.last().unwrap().clone();
        let trail = ints[0].clone();
        let ps = positive_divisors(&trail);
        let qs = positive_divisors(&lead);
        let mut candidates: Vec<Rational> = Vec::new();
        for p in &ps {
            for q in &qs {
                if p.gcd(q).is_one() {
                    let r = Rational::new(p.clone(), q.clone());
                    candidates.push(r.clone());
                    candidates.push(-r);
                }
            }
        }
        candidates.sort();
        for r in candidates {
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
            let lin = UnivariatePoly::linear(&r);
            let mut m = 0u32;
            loop {
                let (q, rem) = rest.div_rem(&lin);
                if !rem.is_zero() {
                    break;
                }
                rest = q;
                m += 1;
            }
            if m > 0 {
                roots.push((r, m));
            }
        }
    }

    roots.sort_by(|a, b| b.0.cmp(&a.0));
    RootFactorization {
        roots,
        cofactor: rest.monic(),
    }
}

/// Renders a monic split polynomial in factored form, e.g. `(s+1)(s+5/6)(s+7/6)`.
///
/// The factor for the root `-1` comes first when present, the remaining
/// factors follow by increasing `-root`.
pub fn render_factored(roots: &[(Rational, u32)], cofactor: &UnivariatePoly, var: &str) -> String {
    let minus_one = -Rational::one();
    let mut ordered: Vec<&(Rational, u32)> = roots.iter().collect();
    ordered.sort_by(|a, b| {
        let ka = a.0 != minus_one;
        let kb = b.0 != minus_one;
        ka.cmp(&kb).then_with(|| b.0.cmp(&a.0))
    });
    let mut out = String::new();
    for (r, m) in ordered {
        let factor = if r.is_zero() {
            var.to_string()
        } else if r.is_negative() {
            format!("({var}+{})", fmt_rational(&-r.clone()))
        } else {
            format!("({var}-{})", fmt_rational(r))
        };
        if *m > 1 {
            out.push_str(&format!("{factor}^{m}"));
        } else {
            out.push_str(&factor);
        }
    }
    if cofactor.degree().unwrap_or(0) > 0 {
        out.push_str(&format!("({})", cofactor.render(var)));
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// Small helper for tests and reports: the value as `f64`.
pub fn approx(q: &Rational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{int, rat};

    #[test]
    fn cusp_bfunction_roots() {
        let b = UnivariatePoly::from_roots(&[(int(-1), 1), (rat(-5, 6), 1), (rat(-7, 6), 1)]);
        let f = rational_roots(&b);
        assert_eq!(f.roots, vec![(rat(-5, 6), 1), (int(-1), 1), (rat(-7, 6), 1)]);
        assert!(f.splits_completely());
        assert_eq!(render_factored(&f.roots, &f.cofactor, "s"), "(s+1)(s+5/6)(s+7/6)");
    }

    #[test]
    fn repeated_zero_root() {
        let b = UnivariatePoly::new(vec![int(0), int(0), int(1)]);
        let f = rational_roots(&b);
        assert_eq!(f.roots, vec![(int(0), 2)]);
        assert_eq!(render_factored(&f.roots, &f.cofactor, "s"), "s^2");
    }

    #[test]
    fn triangle_bfunction_roots() {
        let b = UnivariatePoly::from_roots(&[(rat(-3, 2), 1), (int(-2), 2)]);
        let f = rational_roots(&b.scale(&rat(4, 3)));
        assert_eq!(f.roots, vec![(rat(-3, 2), 1), (int(-2), 2)]);
        assert_eq!(render_factored(&f.roots, &f.cofactor, "s"), "(s+3/2)(s+2)^2");
    }

    #[test]
    fn irreducible_cofactor_is_reported() {
        // (s+1)(s^2+2)
        let b = &UnivariatePoly::linear(&int(-1)) * &UnivariatePoly::new(vec![int(2), int(0), int(1)]);
        let f = rational_roots(&b);
        assert_eq!(f.roots, vec![(int(-1), 1)]);
        assert_eq!(f.cofactor, UnivariatePoly::new(vec![int(2), int(0), int(1)]));
        assert_eq!(f.expand(), b);
    }

    #[test]
    fn shift_and_division() {
        let b = UnivariatePoly::from_roots(&[(int(-1), 1), (rat(-1, 2), 1)]);
        let shifted = b.shift(&int(1));
        assert_eq!(
            shifted,
            UnivariatePoly::from_roots(&[(int(-2), 1), (rat(-3, 2), 1)])
        );
        let (q, r) = b.div_rem(&UnivariatePoly::linear(&int(-1)));
        assert!(r.is_zero());
        assert_eq!(q, UnivariatePoly::linear(&rat(-1, 2)));
        assert_eq!(b.render("s"), "s^2+3/2*s+1/2");
    }
}
