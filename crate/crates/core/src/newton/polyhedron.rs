//! Facet descriptions of Newton polyhedra `conv(exponents) + R^n_{>=0}`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::ideal::MonomialIdeal;
use crate::error::{Error, Result};
use crate::exactmath::linalg::nullspace;
use crate::exactmath::rational::denominator_lcm;
use crate::exactmath::{Monomial, Rational};

/// Largest ambient dimension for the exhaustive facet search.
pub const MAX_DIMENSION: usize = 6;

/// The half-space `<normal, u> >= offset`, normal a primitive nonnegative
/// integer vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

impl Facet {
    /// Facets through the origin bound the orthant only; they never cut the
    /// interior test for shifted lattice points.
    pub fn is_coordinate(&self) -> bool {
        self.offset.is_zero()
    }

    pub fn value(&self, u: &[Rational]) -> Rational {
        self.normal
            .iter()
            .zip(u)
            .map(|(w, x)| Rational::from_integer(w.clone()) * x)
            .sum()
    }

    /// `<normal, v + 1>` for a lattice point `v`.
    pub fn shifted_value(&self, v: &[u32]) -> BigInt {
        self.normal
            .iter()
            .zip(v)
            .map(|(w, &x)| w * BigInt::from(x + 1))
            .sum()
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .normal
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_zero())
            .map(|(i, w)| {
                if *w == BigInt::from(1) {
                    format!("u{}", i + 1)
                } else {
                    format!("{w}*u{}", i + 1)
                }
            })
            .collect();
        write!(f, "{} >= {}", parts.join("+"), self.offset)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    facets: Vec<Facet>,
    source: MonomialIdeal,
}

fn primitive(w: &[Rational]) -> Vec<BigInt> {
    let l = Rational::from_integer(denominator_lcm(w));
    let ints: Vec<BigInt> = w.iter().map(|x| (x * &l).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.into_iter().map(|x| x / &g).collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn as_rationals(m: &Monomial) -> Vec<Rational> {
    m.exponents()
        .iter()
        .map(|&e| Rational::from_integer(e.into()))
        .collect()
}

/// Exhaustive facet search: every hyperplane spanned by `k` generator
/// exponents and `n - k` coordinate directions that supports the polyhedron.
pub fn newton_polyhedron(a: &MonomialIdeal) -> Result<NewtonPolyhedron> {
    let n = a.nvars();
    if n > MAX_DIMENSION {
        return Err(Error::usage(format!(
            "Newton polyhedra are limited to {MAX_DIMENSION} variables (got {n})"
        )));
    }
    let pts: Vec<Vec<Rational>> = a.generators().iter().map(as_rationals).collect();
    let mut found: BTreeSet<Facet> = BTreeSet::new();
    for k in 1..=n.min(pts.len()) {
        for chosen in subsets(pts.len(), k) {
            for dirs in subsets(n, n - k) {
                let base = &pts[chosen[0]];
                let mut rows: Vec<Vec<Rational>> = chosen[1..]
                    .iter()
                    .map(|&j| pts[j].iter().zip(base).map(|(p, q)| p - q).collect())
                    .collect();
                for &d in &dirs {
                    let mut r = vec![Rational::zero(); n];
                    r[d] = Rational::from_integer(1.into());
                    rows.push(r);
                }
                let ns = nullspace(&rows, n);
                if ns.len() != 1 {
                    continue;
                }
                let mut w = ns.into_iter().next().unwrap();
                if w.iter().all(|x| !x.is_positive()) {
                    w.iter_mut().for_each(|x| *x = -x.clone());
                }
                if w.iter().any(Signed::is_negative) {
                    continue;
                }
                let w = primitive(&w);
                let facet = Facet {
                    offset: base
                        .iter()
                        .zip(&w)
                        .map(|(p, x)| (p * Rational::from_integer(x.clone())).to_integer())
                        .sum(),
                    normal: w,
                };
                let supports = a
                    .generators()
                    .iter()
                    .all(|g| facet.value(&as_rationals(g)) >= Rational::from_integer(facet.offset.clone()));
                if supports {
                    found.insert(facet);
                }
            }
        }
    }
    Ok(NewtonPolyhedron {
        facets: found.into_iter().collect(),
        source: a.clone(),
    })
}

impl NewtonPolyhedron {
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn source(&self) -> &MonomialIdeal {
        &self.source
    }

    /// Facets with positive offset.
    pub fn bounding_facets(&self) -> impl Iterator<Item = &Facet> {
        self.facets.iter().filter(|f| !f.is_coordinate())
    }

    pub fn contains(&self, u: &[Rational]) -> bool {
        self.facets
            .iter()
            .all(|f| f.value(u) >= Rational::from_integer(f.offset.clone()))
    }

    /// Whether `u` lies in the interior of `alpha * P`.
    pub fn in_scaled_interior(&self, u: &[Rational], alpha: &Rational) -> bool {
        self.bounding_facets()
            .all(|f| f.value(u) > alpha * Rational::from_integer(f.offset.clone()))
    }

    /// `min <w, g>` over the generators, the support function at `w >= 0`.
    pub fn support(&self, w: &[BigInt]) -> BigInt {
        self.source
            .generators()
            .iter()
            .map(|g| {
                g.exponents()
                    .iter()
                    .zip(w)
                    .map(|(&e, x)| x * BigInt::from(e))
                    .sum::<BigInt>()
            })
            .min()
            .expect("nonempty ideal")
    }

    /// The least `alpha` with `x^v` outside `J(alpha * a)`:
    /// `min <w, v+1> / c` over bounding facets. `None` for the unit ideal.
    pub fn jump_value(&self, v: &[u32]) -> Option<Rational> {
        self.bounding_facets()
            .map(|f| Rational::new(f.shifted_value(v), f.offset.clone()))
            .min()
    }
}
