use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::exactalg::Rational;
use crate::slopes::{compare_phi, fibonacci_table, EXCEPTIONAL_ITERATION_CAP};

/// `E = F_n^{k1} + F_{n+1}^{k2}` in terms of Fibonacci bundles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub n: usize,
    pub k1: u64,
    pub k2: u64,
}

/// Locates `mu(F_n) <= s/r < mu(F_{n+1})` and solves for the multiplicities.
pub fn predicted_decomposition(n_ambient: u32, s: u64, r: u64, k: u64) -> Result<Decomposition> {
    if r == 0 || k == 0 {
        return invalid("r and k must be positive");
    }
    let q = Rational::new(s.into(), r.into());
    if compare_phi(n_ambient, &q)? >= 0 {
        return invalid(format!("slope {q} is not below phi_{n_ambient}"));
    }
    let table = fibonacci_table(n_ambient, EXCEPTIONAL_ITERATION_CAP + 1)?;
    let n = (0..EXCEPTIONAL_ITERATION_CAP)
        .find(|&i| table.slope(i) <= q && q < table.slope(i + 1))
        .ok_or(Error::IterationCap(EXCEPTIONAL_ITERATION_CAP))?;

    let (r0, c0) = (table.rank(n), table.c1(n));
    let (r1, c1) = (table.rank(n + 1), table.c1(n + 1));
    let rank = BigInt::from(k * r);
    let chern = BigInt::from(k * s);
    let det = &r0 * &c1 - &r1 * &c0;
    if det.is_zero() {
        return Err(Error::Inconsistent("singular Fibonacci system".into()));
    }
    let n1 = &rank * &c1 - &chern * &r1;
    let n2 = &r0 * &chern - &c0 * &rank;
    let solve = |num: BigInt| -> Result<u64> {
        if !(&num % &det).is_zero() {
            return Err(Error::Inconsistent(format!(
                "non-integral multiplicity {num}/{det} in window {n}"
            )));
        }
        (num / &det)
            .to_u64()
            .ok_or_else(|| Error::Inconsistent("negative multiplicity".into()))
    };
    Ok(Decomposition {
        n,
        k1: solve(n1)?,
        k2: solve(n2)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(
            predicted_decomposition(2, 2, 5, 1).unwrap(),
            Decomposition { n: 0, k1: 1, k2: 2 }
        );
        assert_eq!(
            predicted_decomposition(2, 1, 2, 1).unwrap(),
            Decomposition { n: 1, k1: 1, k2: 0 }
        );
        assert_eq!(
            predicted_decomposition(2, 5, 11, 1).unwrap(),
            Decomposition { n: 0, k1: 1, k2: 5 }
        );
    }

    #[test]
    fn rejects_slopes_at_or_above_phi() {
        assert!(predicted_decomposition(2, 1, 1, 1).is_err());
        assert!(predicted_decomposition(2, 3, 5, 1).is_ok());
    }

    #[test]
    fn constraints_hold_on_a_grid() {
        let t = fibonacci_table(3, 20).unwrap();
        for r in 1..30u64 {
            for s in 0..r {
                for k in 1..4u64 {
                    let Ok(d) = predicted_decomposition(3, s, r, k) else {
                        continue;
                    };
                    let lhs_rank =
                        BigInt::from(d.k1) * t.rank(d.n) + BigInt::from(d.k2) * t.rank(d.n + 1);
                    let lhs_c1 =
                        BigInt::from(d.k1) * t.c1(d.n) + BigInt::from(d.k2) * t.c1(d.n + 1);
                    assert_eq!(lhs_rank, BigInt::from(k * r));
                    assert_eq!(lhs_c1, BigInt::from(k * s));
                }
            }
        }
    }
}
