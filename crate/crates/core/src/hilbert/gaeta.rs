use serde::Serialize;

use crate::error::Result;

use super::decompose;

/// Shape of the minimal resolution `0 -> left -> middle -> I_Z -> 0` of the
/// ideal of `n` general points, as `(twist, multiplicity)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaetaShape {
    pub n: u64,
    pub r: u64,
    pub s: u64,
    pub middle: Vec<(i64, u64)>,
    pub left: Vec<(i64, u64)>,
}

/// `h^0(O(t))` extended as the polynomial `(t+2)(t+1)/2`.
pub fn points_hilbert(t: i64) -> i64 {
    (t + 2) * (t + 1) / 2
}

pub fn gaeta_shape(n: u64) -> Result<GaetaShape> {
    let d = decompose(n)?;
    let (r, s) = (d.r, d.s);
    let ri = r as i64;
    let (middle, left) = if 2 * s <= r {
        (
            vec![(-ri, r - s + 1)],
            vec![(-ri - 1, r - 2 * s), (-ri - 2, s)],
        )
    } else {
        (
            vec![(-ri, r - s + 1), (-ri - 1, 2 * s - r)],
            vec![(-ri - 2, s)],
        )
    };
    let keep = |v: Vec<(i64, u64)>| v.into_iter().filter(|&(_, m)| m > 0).collect();
    Ok(GaetaShape {
        n,
        r,
        s,
        middle: keep(middle),
        left: keep(left),
    })
}

/// Checks `χ(middle(t)) - χ(left(t)) = B(t) - n` for `t` in `0..=3r`.
pub fn gaeta_euler_holds(shape: &GaetaShape) -> bool {
    let chi = |terms: &[(i64, u64)], t: i64| -> i64 {
        terms
            .iter()
            .map(|&(e, m)| m as i64 * points_hilbert(t + e))
            .sum()
    };
    (0..=3 * shape.r as i64)
        .all(|t| chi(&shape.middle, t) - chi(&shape.left, t) == points_hilbert(t) - shape.n as i64)
}
