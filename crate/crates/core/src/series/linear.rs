use crate::error::{invalid, Error, Result};
use crate::exactalg::{random_matrix, FieldMatrix, PrimeField, RandomSource, Rational};

use super::poly::{PolySpace, Variables};

/// A subspace of a polynomial space, held as a basis of coefficient vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSeries {
    ambient: PolySpace,
    field: PrimeField,
    basis: Vec<Vec<u64>>,
}

/// Attempts before `random_series` gives up on drawing a full-rank basis.
const REDRAW_ATTEMPTS: usize = 16;

impl LinearSeries {
    /// Builds a series from an independent basis.
    pub fn new(ambient: PolySpace, field: PrimeField, basis: Vec<Vec<u64>>) -> Result<Self> {
        let n = ambient.dim();
        if let Some(bad) = basis.iter().find(|v| v.len() != n) {
            return invalid(format!(
                "basis vector has length {}, ambient dimension is {n}",
                bad.len()
            ));
        }
        let basis: Vec<Vec<u64>> = basis
            .into_iter()
            .map(|v| v.into_iter().map(|c| c % field.modulus()).collect())
            .collect();
        if !basis.is_empty() && FieldMatrix::from_rows(field, n, &basis).rank() != basis.len() {
            return invalid("basis vectors are linearly dependent");
        }
        Ok(Self {
            ambient,
            field,
            basis,
        })
    }

    /// The span of arbitrary vectors, reduced to a basis.
    pub fn span(ambient: PolySpace, field: PrimeField, vectors: &[Vec<u64>]) -> Result<Self> {
        let n = ambient.dim();
        let mut basis: Vec<Vec<u64>> = Vec::new();
        let mut rank = 0;
        for v in vectors {
            if v.len() != n {
                return invalid("spanning vector has the wrong length");
            }
            basis.push(v.iter().map(|c| c % field.modulus()).collect());
            let r = FieldMatrix::from_rows(field, n, &basis).rank();
            if r == rank {
                basis.pop();
            } else {
                rank = r;
            }
        }
        Ok(Self {
            ambient,
            field,
            basis,
        })
    }

    pub fn full(ambient: PolySpace, field: PrimeField) -> Self {
        let n = ambient.dim();
        let basis = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        Self {
            ambient,
            field,
            basis,
        }
    }

    /// The series `<u^e : e in exponents>` inside `S_degree`. Repeated
    /// exponents are collapsed.
    pub fn monomials(degree: usize, exponents: &[usize], field: PrimeField) -> Result<Self> {
        let ambient = PolySpace::line(degree);
        let mut exps = exponents.to_vec();
        exps.sort_unstable();
        exps.dedup();
        if let Some(&e) = exps.iter().find(|&&e| e > degree) {
            return invalid(format!("exponent {e} exceeds degree {degree}"));
        }
        let basis = exps
            .iter()
            .map(|&e| {
                let mut v = vec![0; degree + 1];
                v[e] = 1;
                v
            })
            .collect();
        Ok(Self {
            ambient,
            field,
            basis,
        })
    }

    pub fn ambient(&self) -> PolySpace {
        self.ambient
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Sorted exponents when every basis vector is a single monomial in `u`.
    pub fn monomial_exponents(&self) -> Option<Vec<usize>> {
        if self.ambient.variables != Variables::Line {
            return None;
        }
        let mut exps = Vec::with_capacity(self.dim());
        for v in &self.basis {
            let mut nz = v.iter().enumerate().filter(|(_, &c)| c != 0);
            match (nz.next(), nz.next()) {
                (Some((e, _)), None) => exps.push(e),
                _ => return None,
            }
        }
        exps.sort_unstable();
        Some(exps)
    }

    /// Substitutes `u -> u^d`, sending a series in `S_a` to one in `S_{da}`.
    pub fn dilate(&self, d: usize) -> Result<Self> {
        if self.ambient.variables != Variables::Line {
            return invalid("dilation is defined for series on the line");
        }
        if d == 0 {
            return invalid("dilation factor must be positive");
        }
        let ambient = PolySpace::line(self.ambient.degree * d);
        let basis = self
            .basis
            .iter()
            .map(|v| {
                let mut w = vec![0; ambient.dim()];
                for (e, &c) in v.iter().enumerate() {
                    w[e * d] = c;
                }
                w
            })
            .collect();
        Ok(Self {
            ambient,
            field: self.field,
            basis,
        })
    }

    /// Coefficients of the combination `sum c_i * basis_i`.
    pub fn combine(&self, coeffs: &[u64]) -> Vec<u64> {
        let f = self.field;
        let mut out = vec![0; self.ambient.dim()];
        for (v, &c) in self.basis.iter().zip(coeffs) {
            if c == 0 {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(v) {
                *o = f.add(*o, f.mul(c, x));
            }
        }
        out
    }
}

fn check_pair(v: &LinearSeries, w: &LinearSeries) -> Result<()> {
    if v.is_empty() || w.is_empty() {
        return invalid("product of an empty series");
    }
    if v.ambient.variables != w.ambient.variables {
        return invalid("series live on different spaces");
    }
    if v.field != w.field {
        return invalid("series are over different fields");
    }
    Ok(())
}

/// `dim(V * W)`: the dimension of the span of all products `f * g`.
pub fn product_dim(v: &LinearSeries, w: &LinearSeries) -> Result<usize> {
    check_pair(v, w)?;
    let target = v.ambient.times(&w.ambient);
    let rows: Vec<Vec<u64>> = v
        .basis
        .iter()
        .flat_map(|f| {
            w.basis
                .iter()
                .map(move |g| v.ambient.multiply(f, &w.ambient, g, v.field))
        })
        .collect();
    Ok(FieldMatrix::from_rows(v.field, target.dim(), &rows).rank())
}

/// The filling ratio `dim(V * W) / dim W`.
pub fn filling_ratio(v: &LinearSeries, w: &LinearSeries) -> Result<Rational> {
    let p = product_dim(v, w)?;
    Ok(Rational::new(p.into(), w.dim().into()))
}

/// A random `dim`-dimensional subspace of `ambient`, redrawn until the
/// sampled rows are independent.
pub fn random_series(
    ambient: PolySpace,
    dim: usize,
    field: PrimeField,
    rng: &mut RandomSource,
) -> Result<LinearSeries> {
    if dim > ambient.dim() {
        return Err(Error::BoundExceeded {
            what: "series dimension",
            value: dim,
            bound: ambient.dim(),
        });
    }
    for _ in 0..REDRAW_ATTEMPTS {
        let m = random_matrix(field, dim, ambient.dim(), rng);
        if m.rank() == dim {
            let basis = (0..dim).map(|i| m.row(i).to_vec()).collect();
            return Ok(LinearSeries {
                ambient,
                field,
                basis,
            });
        }
    }
    Err(Error::Degenerate(format!(
        "no independent {dim}-dimensional draw in {REDRAW_ATTEMPTS} attempts"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ratio;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn full_times_full() {
        let v = LinearSeries::full(PolySpace::line(3), f());
        let w = LinearSeries::full(PolySpace::line(4), f());
        assert_eq!(product_dim(&v, &w).unwrap(), 8);
        assert_eq!(filling_ratio(&v, &w).unwrap(), ratio(8, 5));
    }

    #[test]
    fn unit_series_is_identity() {
        let v = LinearSeries::monomials(0, &[0], f()).unwrap();
        let w = LinearSeries::monomials(5, &[1, 3, 4], f()).unwrap();
        assert_eq!(product_dim(&v, &w).unwrap(), 3);
        assert_eq!(filling_ratio(&v, &w).unwrap(), ratio(1, 1));
    }

    #[test]
    fn sparse_product() {
        let v = LinearSeries::monomials(3, &[0, 3], f()).unwrap();
        let w = LinearSeries::full(PolySpace::line(1), f());
        assert_eq!(product_dim(&v, &w).unwrap(), 4);
    }

    #[test]
    fn lemma_net_fills_s4() {
        let v = LinearSeries::monomials(3, &[0, 2, 3], f()).unwrap();
        let w = LinearSeries::full(PolySpace::line(4), f());
        assert_eq!(filling_ratio(&v, &w).unwrap(), ratio(8, 5));
    }

    #[test]
    fn empty_rejected() {
        let v = LinearSeries::monomials(3, &[], f()).unwrap();
        let w = LinearSeries::full(PolySpace::line(1), f());
        assert!(product_dim(&v, &w).is_err());
        assert!(product_dim(&w, &v).is_err());
    }

    #[test]
    fn dependent_basis_rejected() {
        let r = LinearSeries::new(PolySpace::line(1), f(), vec![vec![1, 2], vec![2, 4]]);
        assert!(r.is_err());
    }

    #[test]
    fn span_drops_dependent_vectors() {
        let s = LinearSeries::span(
            PolySpace::line(2),
            f(),
            &[vec![1, 0, 0], vec![2, 0, 0], vec![0, 1, 1], vec![0, 0, 0]],
        )
        .unwrap();
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn random_series_full_rank_and_deterministic() {
        let a = random_series(PolySpace::line(6), 4, f(), &mut RandomSource::new(9)).unwrap();
        let b = random_series(PolySpace::line(6), 4, f(), &mut RandomSource::new(9)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dim(), 4);
        let full = random_series(PolySpace::line(3), 4, f(), &mut RandomSource::new(1)).unwrap();
        assert_eq!(full.dim(), 4);
        assert!(random_series(PolySpace::line(3), 5, f(), &mut RandomSource::new(1)).is_err());
    }

    #[test]
    fn dilation_scales_exponents() {
        let v = LinearSeries::monomials(3, &[0, 2, 3], f()).unwrap();
        let d = v.dilate(2).unwrap();
        assert_eq!(d.ambient(), PolySpace::line(6));
        assert_eq!(d.monomial_exponents().unwrap(), vec![0, 4, 6]);
    }
}
