//! Inner jumping multiplicities at the origin for a monomial ideal and for
//! plane curves.
//!
//!     cargo run --example inner_multiplicity

use bsato::cli::parse::{parse_monomial_ideal, parse_polynomial, parse_vars};
use bsato::exactmath::rat;
use bsato::newton::{inner_jumping_multiplicity, InnerSubject};

fn main() -> bsato::Result<()> {
    let vars = parse_vars(&["x".into(), "y".into()])?;

    let m = InnerSubject::Monomial(parse_monomial_ideal("x, y", &vars)?);
    for k in 2..=4 {
        println!("maximal ideal, alpha = {k}: {}", inner_jumping_multiplicity(&m, &rat(k, 1), 8)?);
    }

    for f in ["x^2+y^3", "x^3+y^3"] {
        let z = InnerSubject::Principal(parse_polynomial(f, &vars)?);
        for (n, d) in [(2, 3), (5, 6), (1, 1)] {
            let alpha = rat(n, d);
            println!("{f}, alpha = {alpha}: {}", inner_jumping_multiplicity(&z, &alpha, 6)?);
        }
    }
    Ok(())
}
