//! Exact-arithmetic kernel for operator identities in the skew Laurent ring
//! C[z, z⁻¹][T, T⁻¹] with T z = q z T, where T is the q-shift f(z) ↦ f(qz).
//!
//! Everything is computed over arbitrary-precision rationals at a fixed
//! rational parameter point; every verification is an exact zero test, never
//! a tolerance comparison. The crate is `no_std` (alloc only); IO, timing and
//! report serialization live in the companion CLI crate.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod check;
pub mod qcore;
pub mod qjacobi;
pub mod skewring;
pub mod tridiag;
pub mod uqsl2;

pub use check::Check;
pub use qcore::point::{
    sample_big_plain, sample_point, sample_point_with, sample_tridiag_little, screen_degeneracies,
    ParamPoint, Profile, DEFAULT_N_MAX,
};
pub use qcore::rat::{qpoch, Rat};
pub use skewring::{q_commutator, LaurentPoly, SkewLaurentOp};
