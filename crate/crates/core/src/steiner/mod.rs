//! Steiner bundles `0 -> O(-1)^{ks} -> O^{k(s+r)} -> E -> 0`: the matrix
//! isomorphism test, splitting types on rational curves, the decomposition
//! into Fibonacci bundles, and interpolation on `P^2`.

mod decomposition;
mod interpolation;
mod splitting;

pub use decomposition::{predicted_decomposition, Decomposition};
pub use interpolation::{
    interpolation_test_cokernel, interpolation_test_kernel, random_points, InterpolationOutcome,
    MAX_REDRAWS,
};
pub use splitting::{
    balanced_test, matrix_iso_test, pullback_splitting, SplittingType, SteinerSpec,
    MATRIX_ENTRY_BOUND,
};
