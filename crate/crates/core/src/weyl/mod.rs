//! The Weyl algebra with central parameters, its Gröbner bases, and its
//! action on powers of polynomials.

pub mod algebra;
pub mod element;
pub mod fs;
pub mod groebner;
pub mod ring;

pub use element::{normal_order_product, WeylElement};
pub use fs::{annihilates, apply_to_fs, FsContext, FsElement, ParamRole};
pub use groebner::{eliminate, left_groebner, left_groebner_module, module_normal_form, normal_form, WeylVector};
pub use ring::WeylRing;
