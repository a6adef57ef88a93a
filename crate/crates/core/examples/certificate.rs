//! Computes a functional equation `b(s) f^s = P f^{s+1}` and checks it,
//! then checks a hand-written one where operator order matters.
//!
//!     cargo run --example certificate

use bsato::bfun::{bernstein_sato_with_certificate, verify_certificate, Certificate, Verdict};
use bsato::cli::parse::{parse_bfunction, parse_operators, parse_polynomial, parse_vars};

fn main() -> bsato::Result<()> {
    let vars = parse_vars(&["x".into(), "y".into()])?;
    let f = parse_polynomial("x^2+y^3", &vars)?;
    let one = parse_polynomial("1", &vars)?;

    let (b, cert) = bernstein_sato_with_certificate(&f, &one)?;
    println!("b(s) = {b}");
    println!("P    = {}", cert.ops[0]);

    // `dx^3*x` and `x*dx^3` are different operators.
    let b = parse_bfunction("(s+1)*(s+5/6)*(s+7/6)")?;
    for p in ["1/27*dy^3 + 1/6*y*dx^2*dy + 1/8*dx^3*x", "1/27*dy^3 + 1/6*y*dx^2*dy + 1/8*x*dx^3"] {
        let cert = Certificate {
            fs: vec![f.clone()],
            h: one.clone(),
            b: b.clone(),
            ops: parse_operators(&[p.to_string()], &vars, 1)?,
        };
        match verify_certificate(&cert)? {
            Verdict::Valid => println!("{p}: valid"),
            Verdict::Invalid(r) => println!("{p}: residual {r}"),
        }
    }
    Ok(())
}
