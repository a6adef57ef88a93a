//! Multiplier ideals of a monomial ideal: membership at a few levels and the
//! table of ideals at each jump.
//!
//!     cargo run --example multiplier_table

use bsato::cli::parse::{parse_monomial_ideal, parse_vars};
use bsato::exactmath::rat;
use bsato::newton::{jumping_numbers_monomial, multiplier_ideal_monomial};

fn main() -> bsato::Result<()> {
    let vars = parse_vars(&["x".into(), "y".into()])?;
    let a = parse_monomial_ideal("x^2, y^3", &vars)?;

    for (n, d) in [(1, 2), (5, 6), (1, 1), (3, 2)] {
        let alpha = rat(n, d);
        let members: Vec<String> = multiplier_ideal_monomial(&a, &alpha, 2)?
            .iter()
            .map(|m| a.render_monomial(m))
            .collect();
        println!("J({alpha}) up to degree 2: {}", members.join(" "));
    }

    let table = jumping_numbers_monomial(&a, &rat(2, 1), 8)?;
    for row in &table.rows {
        println!("J({}) = {}", row.alpha, table.render_ideal(&row.generators));
    }
    Ok(())
}
