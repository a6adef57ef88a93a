use std::sync::Arc;

use super::ideal::{minimal_elements, sort_monomials};
use crate::exactmath::{Monomial, Rational};

/// One jump: the multiplier ideal at `alpha`, by its monomial generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpRow {
    pub alpha: Rational,
    pub generators: Vec<Monomial>,
}

/// Jumping numbers with the ideals `J(alpha)` at each jump, ascending.
///
/// Between consecutive jumps the ideal is constant; `J(alpha - eps)` equals
/// the ideal of the previous row (the whole ring before the first).
/// `complete` is false when rows only list monomials up to a degree bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplierTable {
    pub vars: Arc<[String]>,
    pub rows: Vec<JumpRow>,
    pub complete: bool,
}

impl MultiplierTable {
    pub fn jumps(&self) -> Vec<Rational> {
        self.rows.iter().map(|r| r.alpha.clone()).collect()
    }

    /// Generators of `J(alpha)`, whole ring below the first jump.
    pub fn ideal_at(&self, alpha: &Rational) -> Vec<Monomial> {
        self.rows
            .iter()
            .rev()
            .find(|r| r.alpha <= *alpha)
            .map(|r| r.generators.clone())
            .unwrap_or_else(|| vec![Monomial::one(self.vars.len())])
    }

    pub fn render_ideal(&self, gens: &[Monomial]) -> String {
        if gens.is_empty() {
            return "(0)".into();
        }
        let parts: Vec<String> = gens.iter().map(|g| g.render(&self.vars)).collect();
        format!("({})", parts.join(", "))
    }
}

/// Builds a truncated table from per-monomial jump values
/// (`None` = never leaves the ideal within range).
pub fn table_from_jump_values(
    vars: Arc<[String]>,
    values: &[(Monomial, Option<Rational>)],
    alpha_max: &Rational,
    complete: bool,
) -> MultiplierTable {
    let mut alphas: Vec<Rational> = values
        .iter()
        .filter_map(|(_, v)| v.clone())
        .filter(|a| a <= alpha_max)
        .collect();
    alphas.sort();
    alphas.dedup();
    let rows = alphas
        .into_iter()
        .map(|alpha| {
            let mut members: Vec<Monomial> = values
                .iter()
                .filter(|(_, v)| v.as_ref().is_none_or(|c| *c > alpha))
                .map(|(m, _)| m.clone())
                .collect();
            sort_monomials(&mut members);
            JumpRow {
                generators: minimal_elements(&members),
                alpha,
            }
        })
        .collect();
    MultiplierTable {
        vars,
        rows,
        complete,
    }
}

/// All monomials in `n` variables of degree at most `bound`, sorted by
/// (degree, exponent vector).
pub fn monomials_up_to(n: usize, bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, bound, &mut cur, &mut out);
    sort_monomials(&mut out);
    out
}
