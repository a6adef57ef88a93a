//! Monomial products in the (optionally homogenized) Weyl algebra.

use num_bigint::BigInt;
use num_traits::One;

use crate::exactmath::groebner::{Exps, MonomialAlgebra};

/// Product rule for normally ordered monomials `x^a d^b p^c (h^e)`.
///
/// Moving `d_i^a` past `x_i^b` uses
/// `d^a x^b = sum_k C(a,k) C(b,k) k! x^(b-k) d^(a-k)`; in the homogenized
/// algebra each contraction also contributes `h^2`.
#[derive(Clone, Debug)]
pub struct WeylAlgebra {
    pub n: usize,
    pub nparams: usize,
    pub homogenized: bool,
}

impl WeylAlgebra {
    pub fn h_index(&self) -> Option<usize> {
        self.homogenized.then_some(2 * self.n + self.nparams)
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

impl MonomialAlgebra for WeylAlgebra {
    fn nvars(&self) -> usize {
        2 * self.n + self.nparams + usize::from(self.homogenized)
    }

    fn mul_monomials(&self, left: &[u32], right: &[u32], out: &mut Vec<(Exps, BigInt)>) {
        let n = self.n;
        let mut base: Exps = left.iter().zip(right).map(|(a, b)| a + b).collect();
        // Pairs where a derivation on the left meets a position variable on the right.
        let mut contractions: Vec<(usize, u32, u32)> = Vec::new();
        for i in 0..n {
            let a = left[n + i];
            let b = right[i];
            if a > 0 && b > 0 {
                contractions.push((i, a, b));
            }
        }
        if contractions.is_empty() {
            out.push((base, BigInt::one()));
            return;
        }
        let h = self.h_index();
        // Enumerate k-vectors.
        let mut ks = vec![0u32; contractions.len()];
        loop {
            let mut e = base.clone();
            let mut c = BigInt::one();
            for (slot, &(i, a, b)) in contractions.iter().enumerate() {
                let k = ks[slot];
                if k > 0 {
                    e[i] -= k;
                    e[n + i] -= k;
                    if let Some(h) = h {
                        e[h] += 2 * k;
                    }
                    c *= binomial(a, k) * binomial(b, k) * factorial(k);
                }
            }
            out.push((e, c));
            let mut slot = 0;
            loop {
                if slot == ks.len() {
                    base.clear();
                    return;
                }
                let (_, a, b) = contractions[slot];
                if ks[slot] < a.min(b) {
                    ks[slot] += 1;
                    break;
                }
                ks[slot] = 0;
                slot += 1;
            }
        }
    }

    fn supports_commute(&self, a: &[bool], b: &[bool]) -> bool {
        let n = self.n;
        (0..n).all(|i| !(a[i] && b[n + i]) && !(a[n + i] && b[i]))
    }
}
