//! Generators of the annihilator of `f^s` in `D[s]`, each checked by
//! applying it to `f^s`.
//!
//!     cargo run --example annihilator

use bsato::bfun::ann_fs;
use bsato::cli::parse::{parse_polynomial, parse_vars};
use bsato::weyl::{annihilates, FsContext};

fn main() -> bsato::Result<()> {
    let vars = parse_vars(&["x".into(), "y".into()])?;
    let f = parse_polynomial("x^2+y^3", &vars)?;
    let ctx = FsContext::new(std::slice::from_ref(&f))?;
    for g in ann_fs(&f)? {
        println!("{g}    kills f^s: {}", annihilates(&g, &ctx)?);
    }
    Ok(())
}
