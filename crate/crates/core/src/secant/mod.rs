//! Secant-plane classes: the existence trichotomy and the general secant
//! plane formula in the formal ring generated by `θ` and `x` with
//! `θ^{g+1} = 0`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{invalid, Error, Result};
use crate::exactalg::{Rational, RationalJson};

/// Largest `k + r` accepted by [`secant_class`].
pub const SECANT_SIZE_BOUND: i64 = 40;

/// A curve of degree `n` and genus `g` in `P^s`, asked for `d`-secant
/// `(d-r-1)`-planes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SecantParams {
    pub n: i64,
    pub g: i64,
    pub s: i64,
    pub d: i64,
    pub r: i64,
}

impl SecantParams {
    pub fn new(n: i64, g: i64, s: i64, d: i64, r: i64) -> Self {
        Self { n, g, s, d, r }
    }

    pub fn k(&self) -> i64 {
        self.s + 1 - self.d + self.r
    }

    pub fn delta(&self) -> i64 {
        self.n - self.g - self.s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Existence {
    /// The secant planes exist.
    Guaranteed,
    /// The locus is empty or not of the expected dimension.
    NotExpected,
    /// `δ < 0` or `rk > d`.
    Invalid,
}

pub fn existence_check(p: &SecantParams) -> Existence {
    let (k, delta) = (p.k(), p.delta());
    if delta < 0 || p.r * k > p.d {
        Existence::Invalid
    } else if (p.r - delta) * k <= p.g {
        Existence::Guaranteed
    } else {
        Existence::NotExpected
    }
}

/// `C(n, i)` for any integer `n`: 0 for `i < 0`, 1 for `i = 0`, and the
/// falling factorial `n(n-1)...(n-i+1)/i!` otherwise.
pub fn generalized_binomial(n: i64, i: i64) -> BigInt {
    if i < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..i {
        num *= n - t;
        den *= t + 1;
    }
    num / den
}

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, t| acc * t)
}

/// `C(δ+i-1, r+i-β) (r+i-β)! / ((r+k-β)! (β-1)!)`.
pub fn mu_factor(r: i64, k: i64, delta: i64, i: i64, beta: i64) -> Result<Rational> {
    if beta < 1 || beta > k + r {
        return invalid(format!("need 1 <= beta <= k + r, got beta = {beta}"));
    }
    let lower = r + i - beta;
    let binom = generalized_binomial(delta + i - 1, lower);
    if binom.is_zero() {
        return Ok(Rational::zero());
    }
    Ok(Rational::new(
        binom * factorial(lower),
        factorial(r + k - beta) * factorial(beta - 1),
    ))
}

/// `Σ_j c_j θ^j x^{rk-j}` for `0 <= j <= min(g, rk)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    pub rk: i64,
    pub g: i64,
    pub coeffs: Vec<Rational>,
}

impl CohomologyClass {
    pub fn zero(rk: i64, g: i64) -> Self {
        let len = (g.min(rk).max(-1) + 1) as usize;
        Self {
            rk,
            g,
            coeffs: vec![Rational::zero(); len],
        }
    }

    /// Adds `c θ^j x^{rk-j}`; terms with `j > g` vanish.
    pub fn add_term(&mut self, j: i64, c: &Rational) {
        if j >= 0 && (j as usize) < self.coeffs.len() {
            self.coeffs[j as usize] += c;
        }
    }

    pub fn coefficient(&self, j: i64) -> Rational {
        usize::try_from(j)
            .ok()
            .and_then(|j| self.coeffs.get(j).cloned())
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Serialize for CohomologyClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Term<'a> {
            theta: i64,
            x: i64,
            coeff: RationalJson<'a>,
        }
        let terms: Vec<Term> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| Term {
                theta: j as i64,
                x: self.rk - j as i64,
                coeff: RationalJson(c),
            })
            .collect();
        let mut st = serializer.serialize_struct("CohomologyClass", 5)?;
        st.serialize_field("degree", &self.rk)?;
        st.serialize_field("genus", &self.g)?;
        st.serialize_field("terms", &terms)?;
        st.serialize_field("zero", &self.is_zero())?;
        st.serialize_field("integral", &self.is_integral())?;
        st.end()
    }
}

fn vandermonde_squared(beta: &[i64]) -> BigInt {
    let mut v = BigInt::one();
    for (a, &x) in beta.iter().enumerate() {
        for &y in &beta[a + 1..] {
            v *= y - x;
        }
    }
    &v * &v
}

struct Search<'a> {
    r: i64,
    k: i64,
    /// `mu[i-1][β-1]`.
    mu: &'a [Vec<Rational>],
    class: CohomologyClass,
}

impl Search<'_> {
    /// Extends `beta` (of length `i-1`) lexicographically; `weight` is the
    /// running `Σ(β_i - i)` and `product` the running μ-product.
    fn extend(&mut self, beta: &mut Vec<i64>, weight: i64, product: Rational) {
        let i = beta.len() as i64 + 1;
        if i > self.k {
            let term = product * Rational::from_integer(vandermonde_squared(beta));
            self.class.add_term(weight, &term);
            return;
        }
        let start = beta.last().map_or(1, |b| b + 1);
        // Leave room for the remaining k - i entries.
        let end = self.r + i;
        for b in start..=end {
            let w = weight + b - i;
            if w > self.class.g {
                break;
            }
            let m = &self.mu[(i - 1) as usize][(b - 1) as usize];
            if m.is_zero() {
                continue;
            }
            beta.push(b);
            self.extend(beta, w, &product * m);
            beta.pop();
        }
    }
}

/// The general secant plane formula, truncated by `θ^{g+1} = 0`.
pub fn secant_class(p: &SecantParams) -> Result<CohomologyClass> {
    let (r, k, delta, g) = (p.r, p.k(), p.delta(), p.g);
    if delta < 0 || r * k > p.d {
        return invalid(format!(
            "formula needs δ >= 0 and rk <= d; got δ = {delta}, rk = {}, d = {}",
            r * k,
            p.d
        ));
    }
    if k < 1 || r < 0 || g < 0 {
        return invalid(format!(
            "need k >= 1, r >= 0, g >= 0; got k={k}, r={r}, g={g}"
        ));
    }
    if k + r > SECANT_SIZE_BOUND {
        return Err(Error::BoundExceeded {
            what: "k + r",
            value: (k + r) as usize,
            bound: SECANT_SIZE_BOUND as usize,
        });
    }
    let mu: Vec<Vec<Rational>> = (1..=k)
        .map(|i| (1..=k + r).map(|b| mu_factor(r, k, delta, i, b)).collect())
        .collect::<Result<_>>()?;
    let mut search = Search {
        r,
        k,
        mu: &mu,
        class: CohomologyClass::zero(r * k, g),
    };
    search.extend(&mut Vec::with_capacity(k as usize), 0, Rational::one());
    Ok(search.class)
}

/// Closed form of the `k = 1` class derived from the μ-factors:
/// `Σ_j C(δ, r-j)/j! θ^j x^{r-j}`.
pub fn secant_class_k1(r: i64, delta: i64, g: i64) -> CohomologyClass {
    let mut class = CohomologyClass::zero(r, g);
    for j in 0..=r {
        class.add_term(
            j,
            &Rational::new(generalized_binomial(delta, r - j), factorial(j)),
        );
    }
    class
}

/// The alternative `k = 1` expression `Σ_j C(δ, j) θ^j x^{r-j}`.
pub fn secant_class_k1_binomial(r: i64, delta: i64, g: i64) -> CohomologyClass {
    let mut class = CohomologyClass::zero(r, g);
    for j in 0..=r {
        class.add_term(j, &Rational::from_integer(generalized_binomial(delta, j)));
    }
    class
}

/// Parameters for the series cut on a rational curve of degree `r_h` by the
/// `n = r_h(r_h+1)/2 + s_h` point configuration.
pub fn hilbert_bridge(r_h: i64, s_h: i64) -> Result<SecantParams> {
    if s_h < 0 || 2 * s_h >= r_h {
        return invalid(format!("need 0 <= s < r/2, got r={r_h}, s={s_h}"));
    }
    Ok(SecantParams::new(r_h, 0, r_h - s_h, r_h - 1, s_h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, ratio};

    fn quartic() -> SecantParams {
        SecantParams::new(4, 1, 3, 3, 1)
    }

    #[test]
    fn existence_examples() {
        assert_eq!((quartic().k(), quartic().delta()), (2, 0));
        assert_eq!(existence_check(&quartic()), Existence::NotExpected);
        let b = hilbert_bridge(5, 1).unwrap();
        assert_eq!((b.k(), b.delta()), (2, 1));
        assert_eq!(existence_check(&b), Existence::Guaranteed);
        assert_eq!(
            existence_check(&SecantParams::new(2, 1, 3, 3, 1)),
            Existence::Invalid
        );
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(generalized_binomial(5, -1), BigInt::zero());
        assert_eq!(generalized_binomial(-3, 0), BigInt::one());
        assert_eq!(generalized_binomial(-1, 3), BigInt::from(-1));
        assert_eq!(generalized_binomial(6, 2), BigInt::from(15));
        assert_eq!(generalized_binomial(2, 5), BigInt::zero());
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu_factor(1, 2, 0, 1, 1).unwrap(), int(0));
        assert_eq!(mu_factor(1, 2, 0, 1, 2).unwrap(), int(1));
        assert_eq!(mu_factor(1, 2, 0, 2, 3).unwrap(), ratio(1, 2));
        assert_eq!(mu_factor(0, 1, 4, 1, 1).unwrap(), int(1));
        assert!(mu_factor(1, 2, 0, 1, 4).is_err());
    }

    #[test]
    fn elliptic_quartic_is_zero() {
        let c = secant_class(&quartic()).unwrap();
        assert!(c.is_zero());
        // Without truncation the only surviving term is θ^2.
        let untruncated = secant_class(&SecantParams::new(6, 3, 3, 3, 1)).unwrap();
        assert_eq!(untruncated.coeffs, vec![int(0), int(0), ratio(1, 2)]);
    }

    #[test]
    fn k1_matches_derived_closed_form() {
        for r in 0..8 {
            for delta in 0..8 {
                for g in 0..8 {
                    // k = 1: s + 1 - d + r = 1 so d = s + r; δ = n - g - s.
                    let s = r + 2;
                    let p = SecantParams::new(delta + g + s, g, s, s + r, r);
                    assert_eq!(p.k(), 1);
                    let c = secant_class(&p).unwrap();
                    assert_eq!(c, secant_class_k1(r, delta, g), "r={r} δ={delta} g={g}");
                }
            }
        }
    }

    #[test]
    fn k1_example_agrees_on_small_case() {
        // r = 1, δ = 1, g = 2: x + θ under both expressions.
        let p = SecantParams::new(1 + 2 + 3, 2, 3, 4, 1);
        let c = secant_class(&p).unwrap();
        assert_eq!(c.coeffs, vec![int(1), int(1)]);
        assert_eq!(c, secant_class_k1_binomial(1, 1, 2));
    }

    #[test]
    fn k1_binomial_expression_differs_in_general() {
        // r = 2, δ = 1: the formula gives θx + θ²/2, not x² + θx.
        assert_eq!(
            secant_class_k1(2, 1, 5).coeffs,
            vec![int(0), int(1), ratio(1, 2)]
        );
        assert_eq!(
            secant_class_k1_binomial(2, 1, 5).coeffs,
            vec![int(1), int(1), int(0)]
        );
    }

    #[test]
    fn rational_pencil_counts_points() {
        // Genus 0, k = 1, r = 1: divisors of degree s + 1 failing to impose
        // independent conditions on a degree-n rational curve in P^s.
        for n in 2..12 {
            let s = 1;
            let p = SecantParams::new(n, 0, s, s + 1, 1);
            let c = secant_class(&p).unwrap();
            assert_eq!(c.coefficient(0), int(n - 1));
        }
    }

    #[test]
    fn r_zero_single_term() {
        let p = SecantParams::new(5, 2, 3, 2, 0);
        let c = secant_class(&p).unwrap();
        assert_eq!(c.rk, 0);
        assert_eq!(c.coeffs.len(), 1);
        assert_eq!(c.coeffs[0], int(1));
    }

    #[test]
    fn bridge_examples() {
        let p = hilbert_bridge(5, 2).unwrap();
        assert_eq!((p.k(), p.delta()), (2, 2));
        assert_eq!(existence_check(&p), Existence::Guaranteed);
        assert!(hilbert_bridge(4, 2).is_err());
    }

    #[test]
    fn size_guard() {
        let p = SecantParams::new(500, 0, 400, 380, 10);
        assert_eq!(p.k(), 31);
        assert!(matches!(secant_class(&p), Err(Error::BoundExceeded { .. })));
    }
}
