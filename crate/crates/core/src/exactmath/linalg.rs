//! Exact Gaussian elimination over the rationals.

use num_traits::Zero;

use super::rational::Rational;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let k = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &k * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A basis of `{x : m x = 0}`.
pub fn nullspace(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::from_integer(1.into());
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -a[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solutions of `m x = rhs`: a particular solution and a nullspace basis, or
/// `None` if inconsistent.
pub fn solve(m: &[Vec<Rational>], rhs: &[Rational]) -> Option<(Vec<Rational>, Vec<Vec<Rational>>)> {
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut a);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = a[r][cols].clone();
    }
    Some((x, nullspace(m, cols)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{int, rat};

    #[test]
    fn plane_normal() {
        let m = vec![vec![int(1), int(-1), int(0)], vec![int(0), int(1), int(-1)]];
        let ns = nullspace(&m, 3);
        assert_eq!(ns, vec![vec![int(1), int(1), int(1)]]);
    }

    #[test]
    fn weights_of_cusp() {
        let m = vec![vec![int(2), int(0)], vec![int(0), int(3)]];
        let (x, ns) = solve(&m, &[int(1), int(1)]).unwrap();
        assert_eq!(x, vec![rat(1, 2), rat(1, 3)]);
        assert!(ns.is_empty());
    }

    #[test]
    fn inconsistent() {
        let m = vec![vec![int(1)], vec![int(1)]];
        assert!(solve(&m, &[int(1), int(2)]).is_none());
    }
}
