use crate::error::{invalid, Result};
use crate::exactalg::{FieldMatrix, RandomSource};

use super::linear::LinearSeries;
use super::poly::PolySpace;

/// A matrix whose entries are elements of a fixed linear series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMatrix {
    series: LinearSeries,
    rows: usize,
    cols: usize,
    /// Row-major coefficient vectors in the ambient space of `series`.
    entries: Vec<Vec<u64>>,
}

impl SeriesMatrix {
    /// Random entries: each one is a combination of the series basis with
    /// uniform coefficients, drawn in row-major order.
    pub fn random(series: &LinearSeries, rows: usize, cols: usize, rng: &mut RandomSource) -> Self {
        let field = series.field();
        let entries = (0..rows * cols)
            .map(|_| {
                let coeffs: Vec<u64> = (0..series.dim()).map(|_| rng.element(field)).collect();
                series.combine(&coeffs)
            })
            .collect();
        Self {
            series: series.clone(),
            rows,
            cols,
            entries,
        }
    }

    pub fn from_entries(
        series: &LinearSeries,
        rows: usize,
        cols: usize,
        entries: Vec<Vec<u64>>,
    ) -> Result<Self> {
        let n = series.ambient().dim();
        if entries.len() != rows * cols || entries.iter().any(|e| e.len() != n) {
            return invalid("entry list does not match the matrix shape");
        }
        Ok(Self {
            series: series.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn series(&self) -> &LinearSeries {
        &self.series
    }

    pub fn entry(&self, i: usize, j: usize) -> &[u64] {
        &self.entries[i * self.cols + j]
    }

    /// The transpose, as a matrix over the same series.
    pub fn transpose(&self) -> Self {
        let entries = (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| (i, j)))
            .map(|(i, j)| self.entry(i, j).to_vec())
            .collect();
        Self {
            series: self.series.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// The linear map `source^cols -> (source * ambient)^rows` given by
    /// multiplying a column of polynomials by this matrix.
    ///
    /// Columns are grouped per input slot, rows per output slot, with
    /// monomials in coefficient order inside each group.
    pub fn induced_map(&self, source: PolySpace) -> FieldMatrix {
        let field = self.series.field();
        let ambient = self.series.ambient();
        let target = ambient.times(&source);
        let (sd, td) = (source.dim(), target.dim());
        let mut m = FieldMatrix::zeros(field, self.rows * td, self.cols * sd);
        let mut unit = vec![0; sd];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.entry(i, j);
                if e.iter().all(|&c| c == 0) {
                    continue;
                }
                for s in 0..sd {
                    unit[s] = 1;
                    let image = ambient.multiply(e, &source, &unit, field);
                    unit[s] = 0;
                    for (t, &v) in image.iter().enumerate() {
                        if v != 0 {
                            m.set(i * td + t, j * sd + s, v);
                        }
                    }
                }
            }
        }
        m
    }

    /// The scalar matrix obtained by evaluating every entry at `point`.
    pub fn evaluate(&self, point: &[u64]) -> FieldMatrix {
        let field = self.series.field();
        let values = self.series.ambient().monomial_values(point, field);
        FieldMatrix::from_fn(field, self.rows, self.cols, |i, j| {
            self.entry(i, j)
                .iter()
                .zip(&values)
                .fold(0, |acc, (&c, &v)| field.add(acc, field.mul(c, v)))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::PrimeField;

    #[test]
    fn induced_map_shape_and_action() {
        let f = PrimeField::default();
        let v = LinearSeries::full(PolySpace::line(1), f);
        // [[1, u]] acting on (p, q) in S_0^2 gives p + u q
        let m = SeriesMatrix::from_entries(&v, 1, 2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let map = m.induced_map(PolySpace::line(0));
        assert_eq!((map.rows(), map.cols()), (2, 2));
        assert_eq!(map.rank(), 2);
        assert_eq!(map.mul_vec(&[3, 5]), vec![3, 5]);
    }

    #[test]
    fn evaluation_matches_induced_constants() {
        let f = PrimeField::default();
        let v = LinearSeries::full(PolySpace::plane(1), f);
        let m = SeriesMatrix::random(&v, 2, 3, &mut RandomSource::new(4));
        let e = m.evaluate(&[2, 7, 1]);
        let plane = PolySpace::plane(1);
        for i in 0..2 {
            for j in 0..3 {
                assert_eq!(e.get(i, j), plane.evaluate(m.entry(i, j), &[2, 7, 1], f));
            }
        }
        assert_eq!(m.transpose().transpose(), m);
    }
}
