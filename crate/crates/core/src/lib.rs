pub mod error;
pub mod bfun;
pub mod cli;
pub mod exactmath;
pub mod newton;
pub mod spectrum;
pub mod weyl;

pub use error::{Error, Result};
