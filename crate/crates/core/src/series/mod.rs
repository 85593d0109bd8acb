//! Polynomial spaces on `P^1` and `P^2`, linear series, their products and
//! filling ratios, and the monomial/sumset constructions that certify lower
//! bounds on filling ratios.

mod construct;
mod linear;
mod matrix;
mod poly;
mod sumset;

pub use construct::{
    lemma_net_exponents, monomial_series, monomial_series_exponents, reduction_step,
    witness_low_filling, LowFillingWitness,
};
pub use linear::{filling_ratio, product_dim, random_series, LinearSeries};
pub use matrix::SeriesMatrix;
pub use poly::{PolySpace, Variables};
pub use sumset::{
    min_filling_monomial, min_filling_monomial_with_bound, sumset_mu, sumset_ratio,
    verify_lemma_ba2, verify_lemma_ba2_with_bound, MinFilling, SumsetInstance,
    MONOMIAL_EXHAUSTIVE_BOUND, SUMSET_EXHAUSTIVE_BOUND,
};
