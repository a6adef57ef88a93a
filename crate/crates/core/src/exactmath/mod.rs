//! Exact arithmetic substrate: rationals, polynomials, Gröbner bases and
//! rational root extraction.

pub mod commutative;
pub mod groebner;
pub mod linalg;
pub mod order;
pub mod polynomial;
pub mod rational;
pub mod univariate;

pub use commutative::{commutative_groebner, commutative_normal_form, standard_monomials};
pub use order::OrderSpec;
pub use polynomial::{poly_arith, ring_vars, Monomial, PolyOp, Polynomial};
pub use rational::{int, rat, Rational};
pub use univariate::{rational_roots, render_factored, RootFactorization, UnivariatePoly};
