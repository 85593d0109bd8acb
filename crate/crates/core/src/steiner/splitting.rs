use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::exactalg::{PrimeField, RandomSource};
use crate::series::{random_series, PolySpace, SeriesMatrix};

/// Largest number of entries allowed in a dense induced-map matrix.
pub const MATRIX_ENTRY_BOUND: usize = 1 << 24;

/// A Steiner bundle on `P^N` with presentation multiplicity `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SteinerSpec {
    #[serde(rename = "N")]
    pub n: u32,
    pub s: usize,
    pub r: usize,
    pub k: usize,
}

impl SteinerSpec {
    pub fn new(n: u32, s: usize, r: usize, k: usize) -> Result<Self> {
        if n < 2 {
            return invalid(format!("ambient dimension must be at least 2, got {n}"));
        }
        if r == 0 || k == 0 {
            return invalid("r and k must be positive");
        }
        if s > 0 && k * r < n as usize {
            return invalid(format!(
                "kr = {} < N = {n}: the presentation is not locally free",
                k * r
            ));
        }
        Ok(Self { n, s, r, k })
    }

    pub fn rank(&self) -> usize {
        self.k * self.r
    }

    pub fn c1(&self) -> usize {
        self.k * self.s
    }
}

/// Degrees `a_1 >= ... >= a_{kr}` of the summands of a bundle on `P^1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplittingType {
    pub parts: Vec<i64>,
}

impl SplittingType {
    pub fn degree(&self) -> i64 {
        self.parts.iter().sum()
    }

    pub fn is_balanced(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }
}

fn guard(rows: usize, cols: usize) -> Result<()> {
    let entries = rows.saturating_mul(cols);
    if entries > MATRIX_ENTRY_BOUND {
        return Err(Error::BoundExceeded {
            what: "induced matrix entries",
            value: entries,
            bound: MATRIX_ENTRY_BOUND,
        });
    }
    Ok(())
}

/// Draws `V` of dimension `series_dim` in `S_{b-a}`, then an `ak x bk`
/// matrix over `V`.
fn draw(
    series_dim: usize,
    a: usize,
    b: usize,
    k: usize,
    field: PrimeField,
    rng: &mut RandomSource,
) -> Result<SeriesMatrix> {
    let v = random_series(PolySpace::line(b - a), series_dim, field, rng)?;
    Ok(SeriesMatrix::random(&v, a * k, b * k, rng))
}

/// Whether a general `ak x bk` matrix over a random `series_dim`-dimensional
/// `V` in `S_{b-a}` induces an isomorphism `S_{a-1}^{bk} -> S_{b-1}^{ak}`.
pub fn matrix_iso_test(
    series_dim: usize,
    a: usize,
    b: usize,
    k: usize,
    field: PrimeField,
    rng: &mut RandomSource,
) -> Result<bool> {
    if a == 0 || b <= a || k == 0 {
        return invalid(format!(
            "need a >= 1, b > a, k >= 1; got a={a}, b={b}, k={k}"
        ));
    }
    let n = a * b * k;
    guard(n, n)?;
    let m = draw(series_dim, a, b, k, field, rng)?;
    Ok(m.induced_map(PolySpace::line(a - 1)).rank() == n)
}

/// Dimension of the degree-`r` series defining the general map `P^1 -> P^N`.
/// When `r < N` the image spans only a `P^r`.
fn pullback_series_dim(spec: &SteinerSpec) -> usize {
    (spec.n as usize + 1).min(spec.r + 1)
}

/// The dual of the pulled-back presentation: a `ks x k(s+r)` matrix over
/// `V`, drawn exactly as `matrix_iso_test(N+1, s, s+r, k)` draws its matrix.
fn draw_pullback(
    spec: &SteinerSpec,
    field: PrimeField,
    rng: &mut RandomSource,
) -> Result<SeriesMatrix> {
    draw(
        pullback_series_dim(spec),
        spec.s,
        spec.s + spec.r,
        spec.k,
        field,
        rng,
    )
}

/// `dim ker(S_t^{k(s+r)} -> S_{t+r}^{ks})`, i.e. `h^0` of the twisted dual.
fn dual_sections(m: &SeriesMatrix, t: usize) -> Result<usize> {
    let source = PolySpace::line(t);
    let cols = m.cols() * source.dim();
    guard(m.rows() * (t + m.series().ambient().degree + 1), cols)?;
    let map = m.induced_map(source);
    Ok(cols - map.rank())
}

/// The splitting type of `f^*E` for a general degree-`r` map `f: P^1 -> P^N`.
///
/// Part multiplicities are the second differences of `h^0(f^*E^v(t))`.
pub fn pullback_splitting(
    spec: &SteinerSpec,
    field: PrimeField,
    rng: &mut RandomSource,
) -> Result<SplittingType> {
    let m = draw_pullback(spec, field, rng)?;
    let total = spec.rank();
    let degree = spec.k * spec.s * spec.r;
    let mut parts: Vec<i64> = Vec::with_capacity(total);
    let (mut h1, mut h2) = (0i64, 0i64);
    for t in 0..=degree {
        let h = dual_sections(&m, t)? as i64;
        let mult = h - 2 * h1 + h2;
        if mult < 0 {
            return Err(Error::Inconsistent(format!(
                "negative multiplicity {mult} at twist {t}"
            )));
        }
        parts.extend(std::iter::repeat_n(t as i64, mult as usize));
        if parts.len() >= total {
            break;
        }
        (h2, h1) = (h1, h);
    }
    if parts.len() != total {
        return Err(Error::Inconsistent(format!(
            "recovered {} parts, expected {total}",
            parts.len()
        )));
    }
    parts.reverse();
    let split = SplittingType { parts };
    if split.degree() != degree as i64 {
        return Err(Error::Inconsistent(format!(
            "parts sum to {}, expected {degree}",
            split.degree()
        )));
    }
    Ok(split)
}

/// Whether `f^*E` is balanced, i.e. `S_{s-1}^{k(s+r)} -> S_{s+r-1}^{ks}` is
/// injective.
pub fn balanced_test(
    spec: &SteinerSpec,
    field: PrimeField,
    rng: &mut RandomSource,
) -> Result<bool> {
    if spec.s == 0 {
        return Ok(true);
    }
    let m = draw_pullback(spec, field, rng)?;
    Ok(dual_sections(&m, spec.s - 1)? == 0)
}
