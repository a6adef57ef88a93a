//! Multiplier ideals, jumping numbers and thresholds of monomial ideals
//! through their Newton polyhedra, and inner jumping multiplicities.

pub mod ideal;
pub mod inner;
pub mod multiplier;
pub mod polyhedron;
pub mod table;

pub use ideal::MonomialIdeal;
pub use inner::{inner_jumping_multiplicity, InnerSubject};
pub use multiplier::{jumping_numbers_monomial, lct_monomial, multiplier_ideal_monomial};
pub use polyhedron::{newton_polyhedron, Facet, NewtonPolyhedron};
pub use table::{monomials_up_to, table_from_jump_values, JumpRow, MultiplierTable};
