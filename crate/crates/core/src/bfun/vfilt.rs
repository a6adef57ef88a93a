//! The V-filtration on functions, read off `b_{f,h}` for monomials `h`.

use rayon::prelude::*;

use super::ann::ann_fs;
use super::bernstein::bfunction_from_ann;
use crate::error::{Error, Result};
use crate::exactmath::{Monomial, Polynomial, Rational};
use crate::newton::multiplier::multiplier_generators;
use crate::newton::{monomials_up_to, newton_polyhedron, table_from_jump_values, MonomialIdeal, MultiplierTable};

/// Multiplier ideals of `{f = 0}` on monomials up to a degree bound, with
/// each monomial's jump value `min { c : b_{f,h}(-c) = 0 }`.
///
/// `h` lies in `J(alpha)` iff `alpha < jump(h)`, and in
/// `V^alpha = J(alpha - eps)` iff `alpha <= jump(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VFiltrationTable {
    pub table: MultiplierTable,
    pub jump_values: Vec<(Monomial, Option<Rational>)>,
    pub degree_bound: u32,
}

impl VFiltrationTable {
    /// Monomials of `V^alpha` within the bound.
    pub fn v_alpha(&self, alpha: &Rational) -> Vec<Monomial> {
        self.jump_values
            .iter()
            .filter(|(_, c)| c.as_ref().is_none_or(|c| alpha <= c))
            .map(|(m, _)| m.clone())
            .collect()
    }

    /// Monomials of `J(alpha)` within the bound.
    pub fn multiplier(&self, alpha: &Rational) -> Vec<Monomial> {
        self.jump_values
            .iter()
            .filter(|(_, c)| c.as_ref().is_none_or(|c| alpha < c))
            .map(|(m, _)| m.clone())
            .collect()
    }
}

/// Jump value of every monomial of degree at most `degree_bound`, in
/// (degree, exponent) order. Monomials are processed in parallel.
pub fn monomial_jump_values(f: &Polynomial, degree_bound: u32) -> Result<Vec<(Monomial, Option<Rational>)>> {
    let ann = ann_fs(f)?;
    let vars = f.vars().clone();
    monomials_up_to(f.nvars(), degree_bound)
        .into_par_iter()
        .map(|m| {
            let h = Polynomial::from_terms(vars.clone(), [(m.clone(), Rational::from_integer(1.into()))]);
            let b = bfunction_from_ann(f, &h, &ann)?;
            Ok((m, b.jump()))
        })
        .collect()
}

pub fn v_filtration_table(f: &Polynomial, degree_bound: u32, alpha_max: &Rational) -> Result<VFiltrationTable> {
    if degree_bound == 0 && f.nvars() == 0 {
        return Err(Error::usage("no variables"));
    }
    if *alpha_max <= Rational::from_integer(0.into()) {
        return Err(Error::usage("alpha_max must be positive"));
    }
    let values = monomial_jump_values(f, degree_bound)?;
    let mut table = table_from_jump_values(f.vars().clone(), &values, alpha_max, false);
    // A monomial f has monomial multiplier ideals; the rows are complete
    // when every exact generator fits under the bound.
    if f.terms().len() == 1 {
        let p = newton_polyhedron(&MonomialIdeal::of_terms(f)?)?;
        table.complete = table.rows.iter().all(|r| {
            multiplier_generators(&p, &r.alpha)
                .iter()
                .all(|g| g.degree() <= degree_bound)
        });
    }
    Ok(VFiltrationTable {
        table,
        jump_values: values,
        degree_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat, ring_vars};

    #[test]
    fn cusp_drops_to_maximal_ideal() {
        let v = ring_vars(&["x", "y"]);
        let f = &Polynomial::var(v.clone(), 0).pow(2) + &Polynomial::var(v, 1).pow(3);
        let t = v_filtration_table(&f, 2, &int(1)).unwrap();
        assert_eq!(t.table.jumps()[0], rat(5, 6));
        assert_eq!(t.table.render_ideal(&t.table.rows[0].generators), "(x, y)");
        assert_eq!(t.v_alpha(&rat(5, 6)).len(), 6);
        assert_eq!(t.multiplier(&rat(5, 6)).len(), 5);
    }

    #[test]
    fn square_jumps() {
        let v = ring_vars(&["x"]);
        let f = Polynomial::var(v, 0).pow(2);
        let t = v_filtration_table(&f, 2, &int(1)).unwrap();
        assert_eq!(t.table.jumps(), vec![rat(1, 2), int(1)]);
        assert!(t.table.complete);
    }

    #[test]
    fn thread_count_does_not_matter() {
        let v = ring_vars(&["x", "y"]);
        let f = &Polynomial::var(v.clone(), 0).pow(2) + &Polynomial::var(v, 1).pow(3);
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| v_filtration_table(&f, 3, &int(2)).unwrap())
        };
        assert_eq!(run(1), run(4));
    }
}
