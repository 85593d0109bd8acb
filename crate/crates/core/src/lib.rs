//! Exact computations around general Steiner bundles and the Hilbert scheme of
//! points in the plane.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactalg`]: big rationals, prime-field scalars, dense matrices over
//!   `F_p` and seeded randomness used to realise "general" choices.
//! * [`slopes`]: the slope sets `Phi_N` and `Psi_N`, the maps `rho_N` and
//!   `theta`, and the Fibonacci recurrences behind exceptional slopes.
//! * [`series`]: linear series on `P^1` and `P^2`, products `V.W`, filling
//!   ratios and the sumset/monomial constructions.
//! * [`steiner`]: matrices over a fixed series, splitting types of pulled
//!   back Steiner bundles and interpolation tests on `P^2`.
//! * [`hilbert`]: divisor and curve classes on `P^{2[n]}`, Gaeta resolution
//!   shapes and the cone report.
//! * [`secant`]: the secant-plane class formula and its existence trichotomy.
//! * [`certify`]: the acceptance checks shared by the test suite and the CLI
//!   `selftest` command.

pub mod certify;
pub mod error;
pub mod exactalg;
pub mod hilbert;
pub mod secant;
pub mod series;
pub mod slopes;
pub mod steiner;

pub use error::{Error, Result};
