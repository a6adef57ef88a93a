//! Jump values of monomials for the cusp and the resulting V-filtration and
//! multiplier ideals, truncated by degree.
//!
//!     cargo run --example vfiltration

use bsato::bfun::v_filtration_table;
use bsato::cli::parse::{parse_polynomial, parse_vars};
use bsato::exactmath::rat;

fn main() -> bsato::Result<()> {
    let vars = parse_vars(&["x".into(), "y".into()])?;
    let f = parse_polynomial("x^2+y^3", &vars)?;
    let table = v_filtration_table(&f, 3, &rat(2, 1))?;

    for (m, jump) in &table.jump_values {
        let jump = jump.as_ref().map_or("none".into(), |c| c.to_string());
        println!("{:>6}  {jump}", m.render(&vars));
    }
    for row in &table.table.rows {
        let render = |ms: Vec<_>| table.table.render_ideal(&ms);
        println!(
            "alpha = {}: V = {}, J = {}",
            row.alpha,
            render(table.v_alpha(&row.alpha)),
            render(table.multiplier(&row.alpha))
        );
    }
    Ok(())
}
