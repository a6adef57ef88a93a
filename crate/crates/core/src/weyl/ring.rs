use std::sync::Arc;

use crate::error::{Error, Result};

/// The Weyl algebra `A_n` with central commuting parameters.
///
/// Exponent layout of every monomial: `[x_1..x_n, d_1..d_n, p_1..p_m]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylRing {
    xs: Vec<String>,
    ds: Vec<String>,
    params: Vec<String>,
}

impl WeylRing {
    /// Derivation symbols are named `d<x>`.
    pub fn new<S: AsRef<str>>(xs: &[S], params: &[S]) -> Arc<WeylRing> {
        let xs: Vec<String> = xs.iter().map(|s| s.as_ref().to_string()).collect();
        let ds = xs.iter().map(|x| format!("d{x}")).collect();
        let params = params.iter().map(|s| s.as_ref().to_string()).collect();
        Arc::new(WeylRing { xs, ds, params })
    }

    pub fn with_names(xs: Vec<String>, ds: Vec<String>, params: Vec<String>) -> Result<Arc<WeylRing>> {
        if xs.len() != ds.len() {
            return Err(Error::usage("position and derivation variables must pair up"));
        }
        let ring = WeylRing { xs, ds, params };
        let names = ring.names();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != names.len() {
            return Err(Error::usage("duplicate generator names in Weyl ring"));
        }
        Ok(Arc::new(ring))
    }

    pub fn n(&self) -> usize {
        self.xs.len()
    }

    pub fn nparams(&self) -> usize {
        self.params.len()
    }

    /// Number of exponent slots.
    pub fn nvars(&self) -> usize {
        2 * self.xs.len() + self.params.len()
    }

    pub fn x_vars(&self) -> &[String] {
        &self.xs
    }

    pub fn d_vars(&self) -> &[String] {
        &self.ds
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn x_index(&self, i: usize) -> usize {
        i
    }

    pub fn d_index(&self, i: usize) -> usize {
        self.n() + i
    }

    pub fn param_index(&self, j: usize) -> usize {
        2 * self.n() + j
    }

    /// Generator names in layout order.
    pub fn names(&self) -> Vec<String> {
        self.xs
            .iter()
            .chain(&self.ds)
            .chain(&self.params)
            .cloned()
            .collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names().iter().position(|n| n == name)
    }

    /// Layout indices of the pair `(x_i, d_i)`.
    pub fn pair(&self, i: usize) -> (usize, usize) {
        (self.x_index(i), self.d_index(i))
    }
}
