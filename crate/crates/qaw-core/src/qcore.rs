//! Scalar layer: exact rationals, q-shifted factorials, parameter points.

pub mod point;
pub mod rat;
