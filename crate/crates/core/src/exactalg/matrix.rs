use super::field::PrimeField;
use super::rng::RandomSource;

/// Dense row-major matrix over a prime field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FieldMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows of residues; entries are reduced mod `p`.
    ///
    /// Panics if the rows have different lengths.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row.iter().map(|&v| v % field.modulus()));
        }
        Self {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_fn(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u64,
    ) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.field.modulus();
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    /// Appends the rows of `other` below `self`.
    pub fn stack(&mut self, other: &FieldMatrix) {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.field, other.field);
        self.data.extend_from_slice(&other.data);
        self.rows += other.rows;
    }

    pub fn push_row(&mut self, row: &[u64]) {
        assert_eq!(row.len(), self.cols);
        let p = self.field.modulus();
        self.data.extend(row.iter().map(|&v| v % p));
        self.rows += 1;
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce().len()
    }

    /// Basis of the right kernel `{v : Mv = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let pivots = m.reduce();
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0; self.cols];
                v[free] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.get(r, free));
                }
                v
            })
            .collect()
    }

    /// In-place reduced row echelon form; returns pivot columns in order.
    fn reduce(&mut self) -> Vec<usize> {
        let f = self.field;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("nonzero pivot");
            for j in c..cols {
                let v = f.mul(self.get(r, j), inv);
                self.data[r * cols + j] = v;
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let eliminate = |row: &mut [u64]| {
                let factor = row[c];
                if factor != 0 {
                    for j in c..cols {
                        row[j] = f.sub(row[j], f.mul(factor, pivot_row[j]));
                    }
                }
            };
            before.chunks_mut(cols).for_each(eliminate);
            after.chunks_mut(cols).for_each(eliminate);
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}

pub fn rank(m: &FieldMatrix) -> usize {
    m.rank()
}

pub fn kernel_basis(m: &FieldMatrix) -> Vec<Vec<u64>> {
    m.kernel_basis()
}

/// Matrix with independent uniform entries, drawn row by row.
pub fn random_matrix(
    field: PrimeField,
    rows: usize,
    cols: usize,
    rng: &mut RandomSource,
) -> FieldMatrix {
    FieldMatrix::from_fn(field, rows, cols, |_, _| rng.element(field))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn identity_has_full_rank_and_no_kernel() {
        let m = FieldMatrix::identity(PrimeField::default(), 3);
        assert_eq!(m.rank(), 3);
        assert!(m.kernel_basis().is_empty());
    }

    #[test]
    fn zero_matrix() {
        let f = PrimeField::default();
        assert_eq!(FieldMatrix::zeros(f, 4, 7).rank(), 0);
        let k = FieldMatrix::zeros(f, 2, 3).kernel_basis();
        assert_eq!(k.len(), 3);
    }

    #[test]
    fn ones_row_kernel_is_antidiagonal() {
        let f = PrimeField::default();
        let m = FieldMatrix::from_rows(f, 2, &[vec![1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        let v = &k[0];
        // proportional to (1, -1)
        assert_eq!(f.add(v[0], v[1]), 0);
        assert_ne!(v[0], 0);
    }

    #[test]
    fn vandermonde_is_invertible() {
        let f = PrimeField::default();
        let nodes = [3u64, 8, 15, 16, 42];
        let m = FieldMatrix::from_fn(f, 5, 5, |i, j| f.pow(nodes[i], j as u64));
        assert_eq!(m.rank(), 5);
    }

    #[test]
    fn vandermonde_with_repeated_node_drops_rank() {
        let f = small();
        let nodes = [3u64, 8, 3, 16];
        let m = FieldMatrix::from_fn(f, 4, 4, |i, j| f.pow(nodes[i], j as u64));
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn empty_random_matrix() {
        let m = random_matrix(PrimeField::default(), 0, 5, &mut RandomSource::new(9));
        assert_eq!((m.rows(), m.cols()), (0, 5));
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel_basis().len(), 5);
    }

    #[test]
    fn random_matrix_is_deterministic() {
        let f = PrimeField::default();
        let a = random_matrix(f, 6, 4, &mut RandomSource::new(11));
        let b = random_matrix(f, 6, 4, &mut RandomSource::new(11));
        assert_eq!(a, b);
    }

    #[test]
    fn generic_square_matrices_are_invertible() {
        let f = PrimeField::default();
        for seed in 0..3 {
            let m = random_matrix(f, 30, 30, &mut RandomSource::new(seed));
            assert_eq!(m.rank(), 30);
        }
    }

    #[test]
    fn stacking_rows() {
        let f = small();
        let mut a = FieldMatrix::from_rows(f, 3, &[vec![1, 2, 3]]);
        a.stack(&FieldMatrix::from_rows(f, 3, &[vec![2, 4, 6]]));
        assert_eq!(a.rank(), 1);
        a.push_row(&[0, 0, 1]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.rows(), 3);
    }
}
