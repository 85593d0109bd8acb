use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::exactalg::{serialize_rational, PrimeField, RandomSource, Rational};

use super::linear::{filling_ratio, LinearSeries};
use super::matrix::SeriesMatrix;
use super::poly::PolySpace;

/// Exponents of the three-term net `<1, u^c, u^{b-a}>` with `c = a mod (b-a)`,
/// sorted and without repeats. Requires `a < b <= 2a`.
pub fn lemma_net_exponents(a: usize, b: usize) -> Vec<usize> {
    assert!(a < b && b <= 2 * a, "need 1 < b/a <= 2");
    let mut e = vec![0, a % (b - a), b - a];
    e.sort_unstable();
    e.dedup();
    e
}

/// Exponents of the monomial series built for `1 < b/a <= N-1`.
///
/// With `b - a = qa + r` and `0 < r <= a`, the series is
/// `<1, u^a, ..., u^{(q-1)a}> + u^{qa} V'`, where `V'` is the net for `(a, a+r)`.
pub fn monomial_series_exponents(a: usize, b: usize, n: usize) -> Result<Vec<usize>> {
    if a == 0 || b <= a || n < 2 || b > (n - 1) * a {
        return invalid(format!("need 1 < b/a <= N-1, got b/a = {b}/{a}, N = {n}"));
    }
    let q = (b - a - 1) / a;
    let r = b - a - q * a;
    let mut exps: Vec<usize> = (0..q).map(|i| i * a).collect();
    exps.extend(lemma_net_exponents(a, a + r).into_iter().map(|e| q * a + e));
    exps.sort_unstable();
    exps.dedup();
    if exps.len() > n {
        return Err(Error::Inconsistent(format!(
            "construction used {} monomials, more than N = {n}",
            exps.len()
        )));
    }
    Ok(exps)
}

/// The monomial series in `S_{b-a}` realising filling ratio at least `b/a`.
pub fn monomial_series(a: usize, b: usize, n: usize, field: PrimeField) -> Result<LinearSeries> {
    let exps = monomial_series_exponents(a, b, n)?;
    LinearSeries::monomials(b - a, &exps, field)
}

/// One step of the recursion `(a, b) -> (Na - b, a)`, valid for `N-1 < b/a <= N`.
pub fn reduction_step(a: u64, b: u64, n: u64) -> Result<(u64, u64)> {
    if n < 1 || a == 0 || b <= (n - 1) * a || b > n * a {
        return invalid(format!("need N-1 < b/a <= N, got b/a = {b}/{a}, N = {n}"));
    }
    Ok((n * a - b, a))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowFillingWitness {
    #[serde(serialize_with = "serialize_rational")]
    pub ratio: Rational,
    pub dim: usize,
    #[serde(skip)]
    pub series: LinearSeries,
}

/// Searches for a subspace `W` of `S_{a-1}` with small filling ratio.
///
/// A random `a x b` matrix over `V` is drawn; the entries of each kernel
/// vector of `S_{a-1}^b -> S_{b-1}^a` span a candidate `W`, as does the span
/// of all kernel entries together. The lowest ratio found is returned, or
/// `b/a` with `W = S_{a-1}` when the map is injective.
pub fn witness_low_filling(
    v: &LinearSeries,
    a: usize,
    b: usize,
    rng: &mut RandomSource,
) -> Result<LowFillingWitness> {
    if a == 0 {
        return invalid("a must be positive");
    }
    if b <= a {
        return invalid("need b > a");
    }
    if v.ambient() != PolySpace::line(b - a) {
        return invalid(format!("series must live in S_{}", b - a));
    }
    let field = v.field();
    let source = PolySpace::line(a - 1);
    let matrix = SeriesMatrix::random(v, a, b, rng);
    let kernel = matrix.induced_map(source).kernel_basis();

    let full = LinearSeries::full(source, field);
    let mut best = LowFillingWitness {
        ratio: Rational::new(b.into(), a.into()),
        dim: full.dim(),
        series: full,
    };
    if kernel.is_empty() {
        return Ok(best);
    }
    let chunks = |vec: &Vec<u64>| -> Vec<Vec<u64>> { vec.chunks(a).map(<[u64]>::to_vec).collect() };
    let mut candidates: Vec<Vec<Vec<u64>>> = kernel.iter().map(chunks).collect();
    candidates.push(kernel.iter().flat_map(chunks).collect());
    let mut found = false;
    for entries in candidates {
        let w = LinearSeries::span(source, field, &entries)?;
        if w.is_empty() {
            continue;
        }
        let mu = filling_ratio(v, &w)?;
        if !found || mu < best.ratio {
            found = true;
            best = LowFillingWitness {
                ratio: mu,
                dim: w.dim(),
                series: w,
            };
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ratio;
    use crate::series::{random_series, Variables};

    fn f() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn monomial_series_examples() {
        assert_eq!(monomial_series_exponents(5, 8, 3).unwrap(), vec![0, 2, 3]);
        assert_eq!(monomial_series_exponents(2, 6, 4).unwrap(), vec![0, 2, 4]);
        let v = monomial_series(2, 6, 4, f()).unwrap();
        assert_eq!(v.ambient().variables, Variables::Line);
        assert_eq!(v.ambient().degree, 4);
        assert!(monomial_series(2, 7, 4, f()).is_err());
        assert!(monomial_series(3, 3, 4, f()).is_err());
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(reduction_step(5, 13, 3).unwrap(), (2, 5));
        assert_eq!(reduction_step(1, 3, 3).unwrap(), (0, 1));
        assert_eq!(reduction_step(8, 21, 3).unwrap(), (3, 8));
        assert!(reduction_step(5, 8, 3).is_err());
    }

    #[test]
    fn low_filling_outside_psi() {
        let v = random_series(PolySpace::line(7), 3, f(), &mut RandomSource::new(1)).unwrap();
        let w = witness_low_filling(&v, 4, 11, &mut RandomSource::new(2)).unwrap();
        assert!(w.ratio < ratio(11, 4), "ratio {}", w.ratio);
    }

    #[test]
    fn full_series_has_no_kernel() {
        let v = LinearSeries::full(PolySpace::line(3), f());
        let w = witness_low_filling(&v, 5, 8, &mut RandomSource::new(3)).unwrap();
        assert_eq!(w.ratio, ratio(8, 5));
        assert!(witness_low_filling(&v, 0, 3, &mut RandomSource::new(3)).is_err());
    }
}
