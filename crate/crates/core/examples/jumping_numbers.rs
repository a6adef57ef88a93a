//! Jumping numbers of the monomial ideal of the three coordinate lines in
//! 3-space, and of the maximal ideal in the plane.
//!
//!     cargo run --example jumping_numbers

use bsato::cli::parse::{parse_monomial_ideal, parse_vars};
use bsato::exactmath::rat;
use bsato::newton::jumping_numbers_monomial;

fn main() -> bsato::Result<()> {
    let xyz = parse_vars(&["x".into(), "y".into(), "z".into()])?;
    let xy = parse_vars(&["x".into(), "y".into()])?;
    for (gens, vars) in [("x*y, y*z, x*z", &xyz), ("x, y", &xy)] {
        let a = parse_monomial_ideal(gens, vars)?;
        let table = jumping_numbers_monomial(&a, &rat(4, 1), 8)?;
        let jumps: Vec<String> = table.jumps().iter().map(|c| c.to_string()).collect();
        println!("({gens}): {}", jumps.join(", "));
    }
    Ok(())
}
