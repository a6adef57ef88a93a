//! Log canonical thresholds from the b-function and from Newton polyhedra.
//!
//!     cargo run --example lct

use bsato::bfun::lct_from_bfunction;
use bsato::cli::parse::{parse_monomial_ideal, parse_polynomial, parse_vars};
use bsato::newton::lct_monomial;

fn main() -> bsato::Result<()> {
    let xy = parse_vars(&["x".into(), "y".into()])?;
    for f in ["x^2+y^3", "x^3+y^3", "x*y", "x^2*y^3"] {
        println!("lct({f}) = {}", lct_from_bfunction(&parse_polynomial(f, &xy)?)?);
    }

    let xyz = parse_vars(&["x".into(), "y".into(), "z".into()])?;
    for gens in ["x*y, y*z, x*z", "x^2, y^3, z^6", "x*y*z"] {
        println!("lct({gens}) = {}", lct_monomial(&parse_monomial_ideal(gens, &xyz)?)?);
    }
    Ok(())
}
