//! Compares spectrum multiplicities with inner jumping multiplicities for
//! plane curves over alpha in (0, 1].
//!
//!     cargo run --release --example theorem_check

use bsato::cli::parse::{parse_polynomial, parse_vars};
use bsato::exactmath::rat;
use bsato::spectrum::{check_spectrum_vs_inner, hodge_spectrum};

fn main() -> bsato::Result<()> {
    let vars = parse_vars(&["x".into(), "y".into()])?;
    for f in ["x^2+y^3", "x^2+y^5", "x^3+y^4"] {
        let f = parse_polynomial(f, &vars)?;
        let one = rat(1, 1);
        for alpha in hodge_spectrum(&f)?.entries.keys().filter(|a| **a <= one) {
            let c = check_spectrum_vs_inner(&f, alpha, 8)?;
            println!("{f} at {alpha}: spectrum {} inner {} ({:?} route)", c.spectrum, c.inner, c.inner_route);
        }
    }
    Ok(())
}
