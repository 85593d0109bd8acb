use std::collections::HashSet;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::exactalg::{FieldMatrix, PrimeField, RandomSource};
use crate::series::{LinearSeries, PolySpace, SeriesMatrix};

/// Re-draws allowed after a degenerate specialization before a trial fails.
pub const MAX_REDRAWS: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InterpolationOutcome {
    /// Number of points, `r(r+1)/2 + s`.
    pub points: usize,
    /// `h^0` of the bundle.
    pub h0: usize,
    pub expected_h0: usize,
    /// Sections vanishing on all points, beyond those forced by the presentation.
    pub vanishing: usize,
    pub attempts: usize,
    /// Every attempt hit a degenerate specialization.
    pub degenerate: bool,
    pub interpolates: bool,
}

/// `count` distinct affine points `(x, y, 1)` with uniform coordinates.
pub fn random_points(count: usize, field: PrimeField, rng: &mut RandomSource) -> Vec<[u64; 3]> {
    let mut seen = HashSet::with_capacity(count);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (x, y) = (rng.element(field), rng.element(field));
        if seen.insert((x, y)) {
            out.push([x, y, 1]);
        }
    }
    out
}

/// Rows `w -> sum_m w_{j,m} * mono_m(p)` for a block vector in `space^slots`,
/// combined with weights `y_j` over the slots.
fn weighted_evaluation(
    space: PolySpace,
    slots: usize,
    weights: &[u64],
    p: &[u64],
    field: PrimeField,
) -> Vec<u64> {
    let values = space.monomial_values(p, field);
    let mut row = Vec::with_capacity(slots * values.len());
    for &y in &weights[..slots] {
        row.extend(values.iter().map(|&v| field.mul(y, v)));
    }
    row
}

fn triangular(r: usize) -> usize {
    r * (r + 1) / 2
}

fn failed(points: usize, expected_h0: usize) -> InterpolationOutcome {
    InterpolationOutcome {
        points,
        h0: 0,
        expected_h0,
        vanishing: 0,
        attempts: MAX_REDRAWS + 1,
        degenerate: true,
        interpolates: false,
    }
}

/// Interpolation for `E` presented as the cokernel of
/// `O(r-2)^{ks} -> O(r-1)^{k(s+r)}` on `P^2`, at `r(r+1)/2 + s` general points.
///
/// A section of `E` is the class of `v` in `R_{r-1}^{k(s+r)}`; it vanishes at
/// `p` when `v(p)` lies in the column span of `M(p)`. Interpolation holds when
/// the only such `v` come from `R_{r-2}^{ks}`.
pub fn interpolation_test_cokernel(
    r: usize,
    s: usize,
    k: usize,
    field: PrimeField,
    rng: &mut RandomSource,
) -> Result<InterpolationOutcome> {
    if r < 2 || s > r || k == 0 {
        return invalid(format!(
            "need r >= 2, 0 <= s <= r, k >= 1; got r={r}, s={s}, k={k}"
        ));
    }
    let n = triangular(r) + s;
    let (rows, cols) = (k * (s + r), k * s);
    let source = PolySpace::plane(r - 2);
    let target = PolySpace::plane(r - 1);
    let expected_h0 = k * r * n;
    let forced = cols * source.dim();
    let linear = LinearSeries::full(PolySpace::plane(1), field);

    'attempt: for attempt in 1..=MAX_REDRAWS + 1 {
        let m = SeriesMatrix::random(&linear, rows, cols, rng);
        let image_rank = m.induced_map(source).rank();
        if image_rank != forced {
            continue;
        }
        let h0 = rows * target.dim() - image_rank;
        let points = random_points(n, field, rng);
        let mut conditions = FieldMatrix::zeros(field, 0, rows * target.dim());
        for p in &points {
            let mp = m.evaluate(p);
            if mp.rank() != cols {
                continue 'attempt;
            }
            for y in mp.transpose().kernel_basis() {
                conditions.push_row(&weighted_evaluation(target, rows, &y, p, field));
            }
        }
        let w = conditions.cols() - conditions.rank();
        let vanishing = w - forced;
        return Ok(InterpolationOutcome {
            points: n,
            h0,
            expected_h0,
            vanishing,
            attempts: attempt,
            degenerate: false,
            interpolates: vanishing == 0 && h0 == expected_h0,
        });
    }
    Ok(failed(n, expected_h0))
}

/// Interpolation for `F`, the kernel of `O(r)^{k(2r-s+3)} -> O(r+1)^{k(r-s+1)}`
/// on `P^2`, at `r(r+1)/2 + s` general points.
pub fn interpolation_test_kernel(
    r: usize,
    s: usize,
    k: usize,
    field: PrimeField,
    rng: &mut RandomSource,
) -> Result<InterpolationOutcome> {
    if s == 0 || s > r || k == 0 {
        return invalid(format!("need 1 <= s <= r, k >= 1; got r={r}, s={s}, k={k}"));
    }
    let n = triangular(r) + s;
    let (rows, cols) = (k * (r - s + 1), k * (2 * r - s + 3));
    let source = PolySpace::plane(r);
    let expected_h0 = k * (r + 2) * n;
    let linear = LinearSeries::full(PolySpace::plane(1), field);
    let unit = vec![1; cols];

    'attempt: for attempt in 1..=MAX_REDRAWS + 1 {
        let a = SeriesMatrix::random(&linear, rows, cols, rng);
        let mut stacked = a.induced_map(source);
        let h0 = stacked.cols() - stacked.rank();
        if h0 != expected_h0 {
            continue;
        }
        for p in &random_points(n, field, rng) {
            if a.evaluate(p).rank() != rows {
                continue 'attempt;
            }
            let row = weighted_evaluation(source, cols, &unit, p, field);
            let width = source.dim();
            for j in 0..cols {
                let mut masked = vec![0; row.len()];
                masked[j * width..(j + 1) * width]
                    .copy_from_slice(&row[j * width..(j + 1) * width]);
                stacked.push_row(&masked);
            }
        }
        let vanishing = stacked.cols() - stacked.rank();
        return Ok(InterpolationOutcome {
            points: n,
            h0,
            expected_h0,
            vanishing,
            attempts: attempt,
            degenerate: false,
            interpolates: vanishing == 0,
        });
    }
    Ok(failed(n, expected_h0))
}
