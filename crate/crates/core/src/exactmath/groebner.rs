//! Buchberger's algorithm for left submodules of free modules over monomial
//! algebras: commutative polynomial rings and (homogenized) Weyl algebras.
//!
//! The engine only needs the product of two monomials, so the same code serves
//! the commutative Jacobian computations and the noncommutative D-module
//! eliminations. Leading monomials must be multiplicative under the order:
//! `lm(m * t) = m + t` with coefficient 1.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::order::MatrixOrder;
use super::rational::Rational;

pub type Exps = Vec<u32>;

/// Multiplication of monomials in the algebra the engine runs over.
pub trait MonomialAlgebra: Sync {
    fn nvars(&self) -> usize;

    /// Appends the expansion of `left * right` as `(monomial, coefficient)` pairs.
    fn mul_monomials(&self, left: &[u32], right: &[u32], out: &mut Vec<(Exps, BigInt)>);

    /// Whether elements with the given variable supports commute, which makes
    /// the coprime-leading-monomial criterion valid for the pair.
    fn supports_commute(&self, a: &[bool], b: &[bool]) -> bool;
}

/// The commutative polynomial ring.
#[derive(Clone, Copy, Debug)]
pub struct Commutative(pub usize);

impl MonomialAlgebra for Commutative {
    fn nvars(&self) -> usize {
        self.0
    }

    fn mul_monomials(&self, left: &[u32], right: &[u32], out: &mut Vec<(Exps, BigInt)>) {
        out.push((left.iter().zip(right).map(|(a, b)| a + b).collect(), BigInt::one()));
    }

    fn supports_commute(&self, _: &[bool], _: &[bool]) -> bool {
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub comp: u32,
    pub exps: Exps,
    pub coef: Rational,
    key: Box<[i64]>,
}

impl Term {
    pub fn key(&self) -> &[i64] {
        &self.key
    }
}

/// A vector of the free module, terms sorted strictly descending.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Vector {
    terms: Vec<Term>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    /// Builds a canonical vector from arbitrary (possibly repeated) terms.
    pub fn from_terms(
        order: &MatrixOrder,
        terms: impl IntoIterator<Item = (u32, Exps, Rational)>,
    ) -> Self {
        let raw: Vec<Term> = terms
            .into_iter()
            .filter(|(_, _, c)| !c.is_zero())
            .map(|(comp, exps, coef)| Term {
                key: order.key(comp, &exps),
                comp,
                exps,
                coef,
            })
            .collect();
        Vector::normalize(raw)
    }

    fn normalize(mut raw: Vec<Term>) -> Self {
        raw.sort_by(|a, b| b.key.cmp(&a.key));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.key == t.key => {
                    last.coef += t.coef;
                    if last.coef.is_zero() {
                        terms.pop();
                    }
                }
                _ => terms.push(t),
            }
        }
        Vector { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lead_comp(&self) -> Option<u32> {
        self.lead().map(|t| t.comp)
    }

    /// Variables occurring anywhere, as a mask.
    pub fn support(&self, nvars: usize) -> Vec<bool> {
        let mut s = vec![false; nvars];
        for t in &self.terms {
            for (i, &e) in t.exps.iter().enumerate() {
                if e > 0 {
                    s[i] = true;
                }
            }
        }
        s
    }

    pub fn single_component(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].comp == w[1].comp)
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coef: &t.coef * c,
                    ..t.clone()
                })
                .collect(),
        }
    }

    pub fn monic(&self) -> Vector {
        match self.lead() {
            Some(t) if !t.coef.is_one() => self.scale(&t.coef.recip()),
            _ => self.clone(),
        }
    }

    /// `self - c * other`.
    pub fn sub_scaled(&self, c: &Rational, other: &Vector) -> Vector {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => y.key.cmp(&x.key),
                (Some(_), None) => std::cmp::Ordering::Less,
                (None, Some(_)) => std::cmp::Ordering::Greater,
                (None, None) => unreachable!(),
            };
            match ord {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(Term {
                        coef: -(&b[j].coef * c),
                        ..b[j].clone()
                    });
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let coef = &a[i].coef - &b[j].coef * c;
                    if !coef.is_zero() {
                        out.push(Term {
                            coef,
                            ..a[i].clone()
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Vector { terms: out }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        self.sub_scaled(&-Rational::one(), other)
    }
}

/// Engine context: algebra plus order.
pub struct Engine<'a, A: MonomialAlgebra + ?Sized> {
    pub alg: &'a A,
    pub order: &'a MatrixOrder,
}

impl<'a, A: MonomialAlgebra + ?Sized> Engine<'a, A> {
    pub fn new(alg: &'a A, order: &'a MatrixOrder) -> Self {
        Engine { alg, order }
    }

    pub fn vector(&self, terms: impl IntoIterator<Item = (u32, Exps, Rational)>) -> Vector {
        Vector::from_terms(self.order, terms)
    }

    /// `c * mono * v` (left multiplication).
    pub fn mul_mono(&self, mono: &[u32], c: &Rational, v: &Vector) -> Vector {
        let mut buf = Vec::new();
        let mut raw = Vec::with_capacity(v.terms.len());
        for t in &v.terms {
            buf.clear();
            self.alg.mul_monomials(mono, &t.exps, &mut buf);
            let base = &t.coef * c;
            for (e, k) in buf.drain(..) {
                let coef = if k.is_one() {
                    base.clone()
                } else {
                    &base * Rational::from_integer(k)
                };
                raw.push(Term {
                    key: self.order.key(t.comp, &e),
                    comp: t.comp,
                    exps: e,
                    coef,
                });
            }
        }
        Vector::normalize(raw)
    }

    /// Left product `a * b` where `a` lives in component 0 as a ring element.
    pub fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        let mut acc = Vector::zero();
        for t in &a.terms {
            acc = acc.add(&self.mul_mono(&t.exps, &t.coef, b));
        }
        acc
    }

    fn find_reducer<'b>(&self, t: &Term, basis: &'b [Vector]) -> Option<&'b Vector> {
        basis.iter().find(|g| {
            let l = g.lead().unwrap();
            l.comp == t.comp && l.exps.iter().zip(&t.exps).all(|(a, b)| a <= b)
        })
    }

    /// Remainder of left division by `basis`. With `full == false` only the
    /// leading term is reduced.
    pub fn reduce(&self, p: &Vector, basis: &[Vector], full: bool) -> Vector {
        let mut done: Vec<Term> = Vec::new();
        let mut rest = p.clone();
        while let Some(t) = rest.terms.first() {
            if let Some(g) = self.find_reducer(t, basis) {
                let l = g.lead().unwrap();
                let mono: Exps = t.exps.iter().zip(&l.exps).map(|(a, b)| a - b).collect();
                let c = &t.coef / &l.coef;
                let q = self.mul_mono(&mono, &c, g);
                debug_assert_eq!(q.lead().map(|x| &x.key), Some(&t.key));
                rest = rest.sub_scaled(&Rational::one(), &q);
            } else if full {
                done.push(rest.terms.remove(0));
            } else {
                break;
            }
        }
        done.extend(rest.terms);
        Vector { terms: done }
    }

    fn spoly(&self, f: &Vector, g: &Vector) -> Vector {
        let (lf, lg) = (f.lead().unwrap(), g.lead().unwrap());
        let lcm: Exps = lf.exps.iter().zip(&lg.exps).map(|(a, b)| *a.max(b)).collect();
        let mf: Exps = lcm.iter().zip(&lf.exps).map(|(a, b)| a - b).collect();
        let mg: Exps = lcm.iter().zip(&lg.exps).map(|(a, b)| a - b).collect();
        let a = self.mul_mono(&mf, &lf.coef.recip(), f);
        let b = self.mul_mono(&mg, &lg.coef.recip(), g);
        a.sub_scaled(&Rational::one(), &b)
    }

    /// Reduced Gröbner basis of the left submodule generated by `gens`.
    ///
    /// Pairs are processed by total degree of their lcm, then by creation
    /// order. The output is monic, auto-reduced and sorted ascending by
    /// leading term, ties broken by the remaining terms.
    pub fn groebner(&self, gens: &[Vector]) -> Vec<Vector> {
        let n = self.alg.nvars();
        let mut basis: Vec<Vector> = Vec::new();
        let mut supports: Vec<Vec<bool>> = Vec::new();
        let mut queue: BTreeSet<(u32, u64, usize, usize)> = BTreeSet::new();
        let mut pending: HashSet<(usize, usize)> = HashSet::new();
        let mut counter: u64 = 0;

        let push = |basis: &mut Vec<Vector>,
                        supports: &mut Vec<Vec<bool>>,
                        queue: &mut BTreeSet<(u32, u64, usize, usize)>,
                        pending: &mut HashSet<(usize, usize)>,
                        counter: &mut u64,
                        v: Vector| {
            let j = basis.len();
            let lj = v.lead().unwrap().clone();
            for (i, g) in basis.iter().enumerate() {
                let li = g.lead().unwrap();
                if li.comp != lj.comp {
                    continue;
                }
                let deg: u32 = li.exps.iter().zip(&lj.exps).map(|(a, b)| *a.max(b)).sum();
                queue.insert((deg, *counter, i, j));
                pending.insert((i, j));
                *counter += 1;
            }
            supports.push(v.support(n));
            basis.push(v);
        };

        for g in gens {
            let r = self.reduce(g, &basis, true);
            if !r.is_zero() {
                push(
                    &mut basis,
                    &mut supports,
                    &mut queue,
                    &mut pending,
                    &mut counter,
                    r.monic(),
                );
            }
        }

        while let Some(item) = queue.pop_first() {
            let (_, _, i, j) = item;
            pending.remove(&(i, j));
            let (li, lj) = (basis[i].lead().unwrap(), basis[j].lead().unwrap());
            let lcm: Exps = li.exps.iter().zip(&lj.exps).map(|(a, b)| *a.max(b)).collect();

            let coprime = li.exps.iter().zip(&lj.exps).all(|(a, b)| *a == 0 || *b == 0);
            if coprime
                && basis[i].single_component()
                && basis[j].single_component()
                && self.alg.supports_commute(&supports[i], &supports[j])
            {
                continue;
            }

            let chain = (0..basis.len()).any(|k| {
                if k == i || k == j {
                    return false;
                }
                let lk = basis[k].lead().unwrap();
                lk.comp == li.comp
                    && lk.exps.iter().zip(&lcm).all(|(a, b)| a <= b)
                    && !pending.contains(&(i.min(k), i.max(k)))
                    && !pending.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }

            let s = self.spoly(&basis[i], &basis[j]);
            let r = self.reduce(&s, &basis, true);
            if !r.is_zero() {
                push(
                    &mut basis,
                    &mut supports,
                    &mut queue,
                    &mut pending,
                    &mut counter,
                    r.monic(),
                );
            }
        }

        self.interreduce(basis)
    }

    /// Minimalizes, tail-reduces, normalizes and sorts a Gröbner basis.
    pub fn interreduce(&self, mut basis: Vec<Vector>) -> Vec<Vector> {
        basis.sort_by(|a, b| a.lead().unwrap().key.cmp(&b.lead().unwrap().key));
        let mut minimal: Vec<Vector> = Vec::new();
        for g in basis {
            let l = g.lead().unwrap();
            let divisible = minimal.iter().any(|h| {
                let lh = h.lead().unwrap();
                lh.comp == l.comp && lh.exps.iter().zip(&l.exps).all(|(a, b)| a <= b)
            });
            if !divisible {
                minimal.push(g);
            }
        }
        let mut out: Vec<Vector> = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let others: Vec<Vector> = minimal
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, v)| v.clone())
                .collect();
            let g = &minimal[i];
            let lead = Vector {
                terms: vec![g.terms[0].clone()],
            };
            let tail = Vector {
                terms: g.terms[1..].to_vec(),
            };
            let tail = self.reduce(&tail, &others, true);
            out.push(lead.add(&tail).monic());
        }
        sort_basis(&mut out);
        out
    }
}

/// Ascending by leading term, ties broken by the following terms.
pub fn sort_basis(basis: &mut [Vector]) {
    basis.sort_by(|a, b| {
        let ka = a.terms.iter().map(|t| &t.key);
        let kb = b.terms.iter().map(|t| &t.key);
        ka.cmp(kb)
    });
}
