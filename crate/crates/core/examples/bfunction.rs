//! Bernstein-Sato polynomials of a few plane curves, with and without a
//! multiplier `h`.
//!
//!     cargo run --example bfunction

use bsato::bfun::bernstein_sato;
use bsato::cli::parse::{parse_polynomial, parse_vars};

fn main() -> bsato::Result<()> {
    let vars = parse_vars(&["x".into(), "y".into()])?;
    for (f, h) in [("x^2+y^3", "1"), ("x^2+y^3", "y"), ("x*y", "1"), ("x^3+y^3", "1")] {
        let f = parse_polynomial(f, &vars)?;
        let h = parse_polynomial(h, &vars)?;
        let b = bernstein_sato(&f, &h)?;
        println!("f = {f}, h = {h}");
        println!("  b(s) = {b}");
        println!("  expanded: {}", b.poly().render("s"));
        println!("  jump: {}", b.jump().map_or("none".into(), |c| c.to_string()));
    }
    Ok(())
}
