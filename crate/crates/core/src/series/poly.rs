use serde::Serialize;

use crate::exactalg::PrimeField;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variables {
    /// One affine coordinate `u` on `P^1`.
    Line,
    /// Homogeneous coordinates `x, y, z` on `P^2`.
    Plane,
}

/// Polynomials of degree at most `degree` in `u` (the `Line` case, `S_d`),
/// or forms of degree `degree` in `x, y, z` (the `Plane` case, `R_d`).
///
/// Line coefficients are indexed by the exponent of `u`. Plane coefficients
/// use graded-lex order: `x^d, x^{d-1}y, x^{d-1}z, x^{d-2}y^2, ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PolySpace {
    pub variables: Variables,
    pub degree: usize,
}

impl PolySpace {
    pub fn line(degree: usize) -> Self {
        Self {
            variables: Variables::Line,
            degree,
        }
    }

    pub fn plane(degree: usize) -> Self {
        Self {
            variables: Variables::Plane,
            degree,
        }
    }

    pub fn dim(&self) -> usize {
        let d = self.degree;
        match self.variables {
            Variables::Line => d + 1,
            Variables::Plane => (d + 1) * (d + 2) / 2,
        }
    }

    /// The space holding products of elements of `self` and `other`.
    pub fn times(&self, other: &PolySpace) -> PolySpace {
        assert_eq!(self.variables, other.variables, "mixed variable sets");
        PolySpace {
            variables: self.variables,
            degree: self.degree + other.degree,
        }
    }

    /// Exponent vectors of the basis monomials, in coefficient order.
    /// Line monomials are reported as `[e, 0, 0]`.
    pub fn exponents(&self) -> Vec<[usize; 3]> {
        let d = self.degree;
        match self.variables {
            Variables::Line => (0..=d).map(|e| [e, 0, 0]).collect(),
            Variables::Plane => {
                let mut out = Vec::with_capacity(self.dim());
                for i in (0..=d).rev() {
                    for j in (0..=d - i).rev() {
                        out.push([i, j, d - i - j]);
                    }
                }
                out
            }
        }
    }

    pub fn index_of(&self, exps: [usize; 3]) -> usize {
        match self.variables {
            Variables::Line => exps[0],
            Variables::Plane => {
                let [i, j, k] = exps;
                debug_assert_eq!(i + j + k, self.degree);
                let rest = self.degree - i;
                rest * (rest + 1) / 2 + (rest - j)
            }
        }
    }

    /// Coefficients of `f * g`, where `f` lives in `self` and `g` in `other`.
    pub fn multiply(&self, f: &[u64], other: &PolySpace, g: &[u64], field: PrimeField) -> Vec<u64> {
        let target = self.times(other);
        let mut out = vec![0; target.dim()];
        match self.variables {
            Variables::Line => {
                for (i, &a) in f.iter().enumerate().filter(|(_, &a)| a != 0) {
                    for (j, &b) in g.iter().enumerate().filter(|(_, &b)| b != 0) {
                        out[i + j] = field.add(out[i + j], field.mul(a, b));
                    }
                }
            }
            Variables::Plane => {
                let fe = self.exponents();
                let ge = other.exponents();
                for (ea, &a) in fe.iter().zip(f).filter(|(_, &a)| a != 0) {
                    for (eb, &b) in ge.iter().zip(g).filter(|(_, &b)| b != 0) {
                        let idx = target.index_of([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]]);
                        out[idx] = field.add(out[idx], field.mul(a, b));
                    }
                }
            }
        }
        out
    }

    /// Values of the basis monomials at a point: `[u]` for the line,
    /// `[x, y, z]` for the plane.
    pub fn monomial_values(&self, point: &[u64], field: PrimeField) -> Vec<u64> {
        match self.variables {
            Variables::Line => {
                assert_eq!(point.len(), 1);
                let mut acc = 1 % field.modulus();
                (0..=self.degree)
                    .map(|_| {
                        let v = acc;
                        acc = field.mul(acc, point[0]);
                        v
                    })
                    .collect()
            }
            Variables::Plane => {
                assert_eq!(point.len(), 3);
                self.exponents()
                    .iter()
                    .map(|e| {
                        (0..3).fold(1 % field.modulus(), |acc, t| {
                            field.mul(acc, field.pow(point[t], e[t] as u64))
                        })
                    })
                    .collect()
            }
        }
    }

    pub fn evaluate(&self, f: &[u64], point: &[u64], field: PrimeField) -> u64 {
        self.monomial_values(point, field)
            .iter()
            .zip(f)
            .fold(0, |acc, (&m, &c)| field.add(acc, field.mul(m, c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(PolySpace::line(4).dim(), 5);
        assert_eq!(PolySpace::plane(0).dim(), 1);
        assert_eq!(PolySpace::plane(3).dim(), 10);
    }

    #[test]
    fn plane_index_matches_enumeration() {
        for d in 0..6 {
            let s = PolySpace::plane(d);
            for (idx, e) in s.exponents().into_iter().enumerate() {
                assert_eq!(s.index_of(e), idx);
            }
        }
        assert_eq!(
            PolySpace::plane(1).exponents(),
            vec![[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        );
    }

    #[test]
    fn product_evaluates_to_product_of_values() {
        let f = PrimeField::default();
        let a = PolySpace::plane(2);
        let b = PolySpace::plane(1);
        let pa: Vec<u64> = (1..=6).collect();
        let pb = vec![7, 0, 5];
        let prod = a.multiply(&pa, &b, &pb, f);
        let pt = [3, 11, 1];
        assert_eq!(
            a.times(&b).evaluate(&prod, &pt, f),
            f.mul(a.evaluate(&pa, &pt, f), b.evaluate(&pb, &pt, f))
        );
    }

    #[test]
    fn line_product() {
        let f = PrimeField::default();
        // (1 + u)(1 - u) = 1 - u^2
        let out = PolySpace::line(1).multiply(&[1, 1], &PolySpace::line(1), &[1, f.neg(1)], f);
        assert_eq!(out, vec![1, 0, f.neg(1)]);
    }
}
