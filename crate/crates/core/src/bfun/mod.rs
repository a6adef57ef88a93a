//! Annihilators of `f^s`, Bernstein–Sato polynomials and what follows from
//! their roots.

pub mod ann;

pub use ann::{ann_fs, ann_plus_f_by_weights};
pub mod bernstein;

pub use bernstein::{
    bernstein_sato, bernstein_sato_by_weights, bernstein_sato_with_certificate, lct_from_bfunction,
    member_given, multiplier_membership, verify_certificate, BFunction, Certificate, Verdict,
};
pub mod vfilt;

pub use vfilt::{monomial_jump_values, v_filtration_table, VFiltrationTable};
