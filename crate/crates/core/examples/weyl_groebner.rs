//! Arithmetic, Groebner bases and elimination in the Weyl algebra.
//!
//!     cargo run --example weyl_groebner

use bsato::cli::parse::{parse_operators, parse_vars};
use bsato::exactmath::OrderSpec;
use bsato::weyl::{eliminate, left_groebner, WeylElement};

fn ops(srcs: &[&str]) -> bsato::Result<Vec<WeylElement>> {
    let vars = parse_vars(&["x".into(), "y".into()])?;
    parse_operators(&srcs.iter().map(|s| s.to_string()).collect::<Vec<_>>(), &vars, 1)
}

fn main() -> bsato::Result<()> {
    let p = ops(&["dx*x", "dx^2*x^2"])?;
    println!("dx*x     = {}", p[0]);
    println!("dx^2*x^2 = {}", p[1]);

    // Operators killing x*y; dropping y, dy leaves those killing x.
    let ann = ops(&["x*dx - 1", "y*dy - 1", "dx^2", "dy^2"])?;
    for g in left_groebner(&ann, &OrderSpec::Grevlex)? {
        println!("gb: {g}");
    }
    let ring = ann[0].ring().clone();
    for g in eliminate(&ann, &[ring.x_index(1), ring.d_index(1)])? {
        println!("in x, dx only: {g}");
    }
    Ok(())
}
