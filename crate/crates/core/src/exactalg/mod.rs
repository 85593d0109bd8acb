//! Exact arithmetic substrate.

mod field;
mod matrix;
mod rational;
mod rng;

pub use field::{FieldElement, PrimeField, DEFAULT_PRIME};
pub use matrix::{kernel_basis, random_matrix, rank, FieldMatrix};
pub use rational::{
    int, ratio, serialize_opt_rational, serialize_rational, serialize_rationals, sign_of, Rational,
    RationalJson,
};
pub use rng::{RandomSource, Trials, DEFAULT_TRIALS};
