//! Hodge spectra of quasi-homogeneous isolated singularities.
//!
//!     cargo run --example spectrum

use bsato::cli::parse::{parse_polynomial, parse_vars};
use bsato::spectrum::{hodge_spectrum, infer_weights, milnor_basis};

fn main() -> bsato::Result<()> {
    let vars = parse_vars(&["x".into(), "y".into(), "z".into()])?;
    for f in ["x^2+y^3+z^5", "x^3+y^3+z^3", "x^2*y+y^4+z^2"] {
        let f = parse_polynomial(f, &vars)?;
        let w = infer_weights(&f)?;
        let basis: Vec<String> = milnor_basis(&f)?.iter().map(|m| m.render(&vars)).collect();
        let sp = hodge_spectrum(&f)?;
        let weights: Vec<String> = w.weights.iter().map(|q| q.to_string()).collect();
        println!("f = {f}");
        println!("  weights ({}), Milnor basis {}", weights.join(", "), basis.join(" "));
        for (alpha, k) in &sp.entries {
            println!("  {alpha} x{k}");
        }
        println!("  mu = {}, symmetric: {}", sp.total(), sp.is_symmetric());
    }
    Ok(())
}
