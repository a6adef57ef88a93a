//! Monomial orders, compiled to integer weight matrices.

use num_traits::{Signed, ToPrimitive};

use super::rational::{denominator_lcm, Rational};
use crate::error::{Error, Result};

/// A monomial order over the generators of a ring.
///
/// Generator indices refer to the ring's exponent layout. Every order is
/// refined by graded reverse lexicographic order where ties remain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderSpec {
    Grevlex,
    Lex,
    /// Rational weight per generator, ties broken by grevlex. Mixed signs are
    /// allowed in the Weyl algebra, where they trigger homogenization.
    Weighted(Vec<Rational>),
    /// The listed generators are eliminated: any monomial containing one of
    /// them dominates every monomial free of them.
    Elimination(Vec<usize>),
}

impl OrderSpec {
    /// Whether the order is a well-order on monomials (no negative weights).
    pub fn is_well_order(&self) -> bool {
        match self {
            OrderSpec::Weighted(w) => w.iter().all(|x| !x.is_negative()),
            _ => true,
        }
    }

    pub fn weights(&self) -> Option<&[Rational]> {
        match self {
            OrderSpec::Weighted(w) => Some(w),
            _ => None,
        }
    }
}

/// Integer matrix order: monomials compare by the lexicographic order of
/// `(-component, row_1 . e, row_2 . e, ...)`.
#[derive(Clone, Debug)]
pub struct MatrixOrder {
    rows: Vec<Vec<i64>>,
}

fn grevlex_rows(nvars: usize) -> Vec<Vec<i64>> {
    let mut rows = vec![vec![1; nvars]];
    for i in (1..nvars).rev() {
        let mut r = vec![0; nvars];
        r[i] = -1;
        rows.push(r);
    }
    rows
}

impl MatrixOrder {
    /// Compiles `spec` for `nvars` exponent slots. `extra` trailing slots
    /// (e.g. a homogenizing variable) get weight zero in the spec's leading
    /// row and take part in the grevlex tie-break as the smallest variables.
    pub fn compile(spec: &OrderSpec, nvars: usize, extra: usize) -> Result<MatrixOrder> {
        let total = nvars + extra;
        let rows = match spec {
            OrderSpec::Grevlex => grevlex_rows(total),
            OrderSpec::Lex => (0..total)
                .map(|i| {
                    let mut r = vec![0; total];
                    r[i] = 1;
                    r
                })
                .collect(),
            OrderSpec::Weighted(w) => {
                if w.len() != nvars {
                    return Err(Error::usage(format!(
                        "weight vector has {} entries, ring has {} generators",
                        w.len(),
                        nvars
                    )));
                }
                let l = Rational::from_integer(denominator_lcm(w));
                let mut row = Vec::with_capacity(total);
                for x in w {
                    let v = (x * &l).to_integer().to_i64().ok_or_else(|| {
                        Error::usage("weight vector entries are too large")
                    })?;
                    row.push(v);
                }
                row.resize(total, 0);
                let mut rows = vec![row];
                rows.extend(grevlex_rows(total));
                rows
            }
            OrderSpec::Elimination(kill) => {
                let mut row = vec![0; total];
                for &k in kill {
                    if k >= nvars {
                        return Err(Error::usage(format!("elimination index {k} out of range")));
                    }
                    row[k] = 1;
                }
                let mut rows = vec![row];
                rows.extend(grevlex_rows(total));
                rows
            }
        };
        Ok(MatrixOrder { rows })
    }

    pub fn nvars(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Sort key of a term in component `comp`.
    pub fn key(&self, comp: u32, exps: &[u32]) -> Box<[i64]> {
        let mut k = Vec::with_capacity(self.rows.len() + 1);
        k.push(-(comp as i64));
        for r in &self.rows {
            k.push(r.iter().zip(exps).map(|(a, &e)| a * e as i64).sum());
        }
        k.into_boxed_slice()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::int;

    #[test]
    fn grevlex_ties() {
        let o = MatrixOrder::compile(&OrderSpec::Grevlex, 3, 0).unwrap();
        // x*z < y^2 in grevlex with x > y > z
        assert!(o.key(0, &[1, 0, 1]) < o.key(0, &[0, 2, 0]));
        assert!(o.key(0, &[2, 0, 0]) > o.key(0, &[0, 2, 0]));
    }

    #[test]
    fn elimination_dominates() {
        let o = MatrixOrder::compile(&OrderSpec::Elimination(vec![0]), 2, 0).unwrap();
        assert!(o.key(0, &[1, 0]) > o.key(0, &[0, 9]));
    }

    #[test]
    fn weight_length_checked() {
        let spec = OrderSpec::Weighted(vec![int(1)]);
        assert!(MatrixOrder::compile(&spec, 2, 0).is_err());
        assert!(!OrderSpec::Weighted(vec![int(-1), int(1)]).is_well_order());
    }

    #[test]
    fn position_over_term() {
        let o = MatrixOrder::compile(&OrderSpec::Grevlex, 1, 0).unwrap();
        assert!(o.key(0, &[0]) > o.key(1, &[5]));
    }
}
