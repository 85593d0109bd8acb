//! Slopes of semistable Steiner bundles.
//!
//! `Phi_N` is the set of slopes carried by semistable Steiner bundles on
//! `P^N`: everything above the irrational limit `phi_N` together with the
//! exceptional slopes `rho_N^i(0)`. `Psi_N = 1 + Phi_{N-1}^{-1}` is the same
//! set seen through the filling-ratio renormalisation `b/a = 1 + r/s`.
//!
//! The thresholds `phi_N` and `psi_N` are quadratic irrationals and are never
//! materialised; every comparison reduces to the sign of an integer quadratic.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::exactalg::{int, sign_of, Rational, RationalJson};

/// Maximum number of `rho_N` iterations a membership query may take.
pub const EXCEPTIONAL_ITERATION_CAP: usize = 64;

/// A slope: an exact rational or the distinguished value `infinity`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Slope {
    Finite(Rational),
    Infinity,
}

impl Slope {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Slope::Finite(q) => Some(q),
            Slope::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Slope::Infinity)
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Slope::Finite(q) => RationalJson(q).serialize(serializer),
            Slope::Infinity => serializer.serialize_str("inf"),
        }
    }
}

impl From<Rational> for Slope {
    fn from(q: Rational) -> Self {
        Slope::Finite(q)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(q) => write!(f, "{q}"),
            Slope::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// Accepts `inf`, integers, `p/q` fractions and `1/0` (as infinity).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Slope::Infinity);
        }
        let bad = || Error::InvalidParameter(format!("cannot parse slope {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            if num.is_positive() {
                return Ok(Slope::Infinity);
            }
            return Err(bad());
        }
        Ok(Slope::Finite(Rational::new(num, den)))
    }
}

fn check_dimension(n: u32) -> Result<()> {
    if n == 0 {
        return invalid("projective dimension N must be at least 1");
    }
    Ok(())
}

/// `rho_N(x) = 1 / (N - 1 + 1/(1 + x))` for `x >= 0`.
pub fn rho(n: u32, x: &Rational) -> Result<Rational> {
    check_dimension(n)?;
    if x.is_negative() {
        return invalid(format!("rho is defined for x >= 0, got {x}"));
    }
    let inner = int(i64::from(n) - 1) + (int(1) + x).recip();
    Ok(inner.recip())
}

/// `[rho_N^0(0), ..., rho_N^{count-1}(0)]`.
pub fn exceptional_slopes(n: u32, count: usize) -> Result<Vec<Rational>> {
    check_dimension(n)?;
    if count == 0 {
        return invalid("count must be at least 1");
    }
    let mut out = Vec::with_capacity(count);
    let mut x = Rational::zero();
    for _ in 0..count {
        let next = rho(n, &x)?;
        out.push(x);
        x = next;
    }
    Ok(out)
}

/// Sign of `q - phi_N`, via the sign of `(N-1)q^2 + (N-1)q - 1`.
///
/// For rational `q` the result is never 0. With `N = 1` the limit is
/// infinite and the answer is always -1.
pub fn compare_phi(n: u32, q: &Rational) -> Result<i8> {
    check_dimension(n)?;
    if q.is_negative() {
        return invalid(format!("slope must be nonnegative, got {q}"));
    }
    let m = int(i64::from(n) - 1);
    let value = &m * q * q + &m * q - int(1);
    Ok(sign_of(&value))
}

/// Is `q` one of the exceptional slopes `rho_N^i(0)`?
pub fn is_exceptional(n: u32, q: &Rational) -> Result<bool> {
    check_dimension(n)?;
    if q.is_negative() {
        return Ok(false);
    }
    if n == 1 {
        // rho_1(x) = 1 + x, so the orbit of 0 is the nonnegative integers
        return Ok(q.is_integer());
    }
    // Denominators of the orbit strictly increase and each iterate is in
    // lowest terms, so once they pass den(q) equality is impossible.
    let mut x = Rational::zero();
    for _ in 0..EXCEPTIONAL_ITERATION_CAP {
        if &x == q {
            return Ok(true);
        }
        if &x > q || x.denom() > q.denom() {
            return Ok(false);
        }
        x = rho(n, &x)?;
    }
    Err(Error::IterationCap(EXCEPTIONAL_ITERATION_CAP))
}

/// Membership in `Phi_N`.
pub fn in_phi(n: u32, q: &Rational) -> Result<bool> {
    if compare_phi(n, q)? > 0 {
        return Ok(true);
    }
    is_exceptional(n, q)
}

/// `theta(x) = N - 1/x`, with `theta(infinity) = N`.
pub fn theta(n: u32, x: &Slope) -> Result<Slope> {
    check_dimension(n)?;
    match x {
        Slope::Infinity => Ok(Slope::Finite(int(i64::from(n)))),
        Slope::Finite(q) if q.is_zero() => invalid("theta is undefined at 0"),
        Slope::Finite(q) => Ok(Slope::Finite(int(i64::from(n)) - q.recip())),
    }
}

fn check_psi_domain(n: u32, q: &Slope) -> Result<Option<&Rational>> {
    if n < 2 {
        return invalid("Psi_N needs N >= 2");
    }
    match q {
        Slope::Infinity => Ok(None),
        Slope::Finite(v) if *v <= Rational::one() => {
            invalid(format!("Psi_N membership is defined for q > 1, got {v}"))
        }
        Slope::Finite(v) => Ok(Some(v)),
    }
}

/// Membership in `Psi_N` through `b/a in Psi_N <=> a/(b-a) in Phi_{N-1}`.
pub fn in_psi(n: u32, q: &Slope) -> Result<bool> {
    let Some(v) = check_psi_domain(n, q)? else {
        return Ok(true);
    };
    let a = Rational::from_integer(v.denom().clone());
    let b = Rational::from_integer(v.numer().clone());
    in_phi(n - 1, &(&a / (b - &a)))
}

/// Membership in `Psi_N` through its direct description
/// `{1 < q < psi_N} union {theta^i(infinity)}`.
pub fn in_psi_orbit(n: u32, q: &Slope) -> Result<bool> {
    let Some(v) = check_psi_domain(n, q)? else {
        return Ok(true);
    };
    // psi_N is the larger root of x^2 - N x + 1; the smaller root is <= 1.
    let big_n = int(i64::from(n));
    if sign_of(&(v * v - &big_n * v + int(1))) < 0 {
        return Ok(true);
    }
    // The orbit decreases towards psi_N with strictly increasing
    // denominators, each term in lowest terms.
    let mut x = big_n.clone();
    loop {
        if &x == v {
            return Ok(true);
        }
        if &x < v || x.denom() > v.denom() {
            return Ok(false);
        }
        x = &big_n - x.recip();
    }
}

/// The sequence `a_{-1} = 0, a_0 = 1, a_{n+1} = (N+1) a_n - a_{n-1}`.
///
/// The Fibonacci bundle `F_n` has rank `a_n - a_{n-1}` and first Chern class
/// `a_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibonacciTable {
    n_ambient: u32,
    /// `values[i]` holds `a_{i-1}`.
    values: Vec<BigInt>,
}

impl FibonacciTable {
    pub fn ambient_dimension(&self) -> u32 {
        self.n_ambient
    }

    /// Largest index `m` with `a_m` stored.
    pub fn last_index(&self) -> usize {
        self.values.len() - 2
    }

    /// `a_{-1}, a_0, ..., a_m`.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// `a_i` for `-1 <= i <= m`.
    pub fn a(&self, i: i64) -> &BigInt {
        &self.values[usize::try_from(i + 1).expect("index >= -1")]
    }

    pub fn rank(&self, n: usize) -> BigInt {
        self.a(n as i64) - self.a(n as i64 - 1)
    }

    pub fn c1(&self, n: usize) -> BigInt {
        self.a(n as i64 - 1).clone()
    }

    /// `mu(F_n) = c1 / rank`.
    pub fn slope(&self, n: usize) -> Rational {
        Rational::new(self.c1(n), self.rank(n))
    }
}

pub fn fibonacci_table(n: u32, m: usize) -> Result<FibonacciTable> {
    check_dimension(n)?;
    let step = BigInt::from(n + 1);
    let mut values = vec![BigInt::zero(), BigInt::one()];
    while values.len() < m + 2 {
        let k = values.len();
        let next = &step * &values[k - 1] - &values[k - 2];
        values.push(next);
    }
    Ok(FibonacciTable {
        n_ambient: n,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ratio;

    fn q(s: &str) -> Slope {
        s.parse().unwrap()
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(2, &int(0)).unwrap(), ratio(1, 2));
        assert_eq!(rho(2, &ratio(1, 2)).unwrap(), ratio(3, 5));
        // 1/(2 + 1/1)
        assert_eq!(rho(3, &int(0)).unwrap(), ratio(1, 3));
        assert!(rho(2, &ratio(-1, 3)).is_err());
        assert!(rho(0, &int(0)).is_err());
    }

    #[test]
    fn exceptional_lists() {
        let golden: Vec<Rational> = [(0, 1), (1, 2), (3, 5), (8, 13), (21, 34), (55, 89)]
            .iter()
            .map(|&(a, b)| ratio(a, b))
            .collect();
        assert_eq!(exceptional_slopes(2, 6).unwrap(), golden);
        assert_eq!(exceptional_slopes(2, 1).unwrap(), vec![int(0)]);
        assert_eq!(
            exceptional_slopes(3, 3).unwrap(),
            vec![int(0), ratio(1, 3), ratio(4, 11)]
        );
        assert!(exceptional_slopes(2, 0).is_err());
    }

    #[test]
    fn phi_comparisons() {
        assert_eq!(compare_phi(2, &ratio(2, 3)).unwrap(), 1);
        assert_eq!(compare_phi(2, &ratio(55, 89)).unwrap(), -1);
        assert_eq!(compare_phi(2, &int(0)).unwrap(), -1);
        assert!(compare_phi(2, &ratio(-1, 2)).is_err());
    }

    #[test]
    fn phi_membership() {
        assert!(!in_phi(2, &ratio(2, 5)).unwrap());
        assert!(in_phi(2, &ratio(8, 13)).unwrap());
        assert!(in_phi(2, &int(1)).unwrap());
        assert!(in_phi(2, &int(0)).unwrap());
        assert!(!in_phi(2, &ratio(1, 3)).unwrap());
        assert!(in_phi(1, &int(7)).unwrap());
        assert!(!in_phi(1, &ratio(7, 2)).unwrap());
    }

    #[test]
    fn theta_values() {
        assert_eq!(theta(3, &Slope::Infinity).unwrap(), q("3"));
        assert_eq!(theta(3, &q("3")).unwrap(), q("8/3"));
        assert_eq!(theta(2, &q("1")).unwrap(), q("1"));
        assert!(theta(2, &q("0")).is_err());
    }

    #[test]
    fn psi_membership_both_routes() {
        for (n, s, expected) in [
            (3, "8/3", true),
            (3, "11/4", false),
            (3, "5/2", true),
            (3, "inf", true),
            (3, "3", true),
            (3, "21/8", true),
            (2, "3/2", true),
            (2, "5/3", false),
        ] {
            assert_eq!(in_psi(n, &q(s)).unwrap(), expected, "{n} {s}");
            assert_eq!(in_psi_orbit(n, &q(s)).unwrap(), expected, "{n} {s}");
        }
        assert!(in_psi(3, &q("1")).is_err());
        assert!(in_psi_orbit(3, &q("1/2")).is_err());
    }

    #[test]
    fn psi_two_is_a_single_orbit() {
        // Psi_2 = {inf, 2, 3/2, 4/3, ...}; long orbits terminate.
        assert!(in_psi(2, &q("201/200")).unwrap());
        assert!(in_psi_orbit(2, &q("201/200")).unwrap());
        assert!(!in_psi_orbit(2, &q("203/200")).unwrap());
    }

    #[test]
    fn fibonacci_tables() {
        let t = fibonacci_table(2, 4).unwrap();
        let vals: Vec<i64> = t.values().iter().map(|v| v.try_into().unwrap()).collect();
        assert_eq!(vals, vec![0, 1, 3, 8, 21, 55]);
        let t3 = fibonacci_table(3, 2).unwrap();
        let vals: Vec<i64> = t3.values().iter().map(|v| v.try_into().unwrap()).collect();
        assert_eq!(vals, vec![0, 1, 4, 15]);
        assert_eq!(t.slope(0), int(0));
        assert_eq!(t.slope(1), ratio(1, 2));
        assert_eq!(t.slope(2), ratio(3, 5));
        assert_eq!(t.slope(3), ratio(8, 13));
        assert_eq!(t.last_index(), 4);
    }

    #[test]
    fn fibonacci_slopes_follow_rho() {
        for n in 2..6 {
            let t = fibonacci_table(n, 12).unwrap();
            for i in 1..=12 {
                assert_eq!(t.slope(i), rho(n, &t.slope(i - 1)).unwrap());
            }
        }
    }

    #[test]
    fn slope_parsing() {
        assert_eq!(q("6/4"), Slope::Finite(ratio(3, 2)));
        assert_eq!(q("1/0"), Slope::Infinity);
        assert!("x".parse::<Slope>().is_err());
        assert!("0/0".parse::<Slope>().is_err());
        assert_eq!(q("inf").to_string(), "inf");
        assert_eq!(q("3/6").to_string(), "1/2");
    }
}
