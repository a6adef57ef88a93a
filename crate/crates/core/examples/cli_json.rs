//! Runs CLI commands in-process and prints their JSON reports.
//!
//!     cargo run --example cli_json

use bsato::cli::{execute, Command, Format, RawRequest};

fn main() -> bsato::Result<()> {
    let base = RawRequest {
        vars: vec!["x".into(), "y".into()],
        poly: Some("x^2+y^3".into()),
        format: Format::Json,
        ..RawRequest::default()
    };
    print!("{}", execute(Command::Bf, &base)?);
    print!("{}", execute(Command::Spectrum, &base)?);

    let verify = RawRequest {
        b: Some("s^3+3*s^2+107/36*s+35/36".into()),
        ops: vec!["1/27*dy^3 + 1/6*y*dx^2*dy + 1/8*dx^3*x".into()],
        ..base
    };
    print!("{}", execute(Command::Verify, &verify)?);
    Ok(())
}
