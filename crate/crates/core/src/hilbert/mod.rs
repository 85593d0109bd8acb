//! Intersection arithmetic on the Hilbert scheme of `n` points in `P^2`:
//! divisor and curve classes, the classes coming from Steiner and kernel
//! bundles, moving curves, Gaeta resolution shapes and the cone report.

mod classes;
mod cone;
mod gaeta;

use num_integer::Roots;
use serde::Serialize;

use crate::error::{invalid, Result};

pub use classes::{
    kernel_divisor, nodal_pencil_curve, pair, pencil_curve, quadric_pencil_curve, steiner_divisor,
    CurveClass, DivisorClass, NodalCurve,
};
pub use cone::{
    cone_report, edge_pairing, is_sqrt2_convergent, sqrt2_convergents, CaseLabel, ConeReport,
    EdgeClaim, EdgeStatus, MovingCurve, CONVERGENT_DENOMINATOR_BOUND,
};
pub use gaeta::{gaeta_euler_holds, gaeta_shape, points_hilbert, GaetaShape};

/// `n = r(r+1)/2 + s` with `0 <= s <= r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NDecomposition {
    pub n: u64,
    pub r: u64,
    pub s: u64,
}

pub fn decompose(n: u64) -> Result<NDecomposition> {
    if n == 0 {
        return invalid("n must be positive");
    }
    // Largest r with r(r+1)/2 <= n.
    let mut r = Roots::sqrt(&(2 * n));
    while r * (r + 1) / 2 > n {
        r -= 1;
    }
    while (r + 1) * (r + 2) / 2 <= n {
        r += 1;
    }
    Ok(NDecomposition {
        n,
        r,
        s: n - r * (r + 1) / 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decomposition_examples() {
        assert_eq!(decompose(12).unwrap(), NDecomposition { n: 12, r: 4, s: 2 });
        assert_eq!(
            decompose(142).unwrap(),
            NDecomposition {
                n: 142,
                r: 16,
                s: 6
            }
        );
        assert_eq!(decompose(3).unwrap(), NDecomposition { n: 3, r: 2, s: 0 });
        assert_eq!(decompose(1).unwrap(), NDecomposition { n: 1, r: 1, s: 0 });
        assert!(decompose(0).is_err());
    }

    #[test]
    fn decomposition_range() {
        for n in 1..5000 {
            let d = decompose(n).unwrap();
            assert!(d.s <= d.r);
            assert_eq!(d.r * (d.r + 1) / 2 + d.s, n);
        }
    }
}
