use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::exactalg::{serialize_rational, Rational};

use super::construct::lemma_net_exponents;
use super::linear::LinearSeries;

/// Largest `a` accepted by [`verify_lemma_ba2`].
pub const SUMSET_EXHAUSTIVE_BOUND: usize = 14;
/// Largest `a` accepted by [`min_filling_monomial`].
pub const MONOMIAL_EXHAUSTIVE_BOUND: usize = 12;

/// A subset `S` of `{0, ..., a-1}` paired with the shift set `{0, c, b-a}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumsetInstance {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub set: Vec<usize>,
}

impl SumsetInstance {
    pub fn new(a: usize, b: usize, set: &[usize]) -> Result<Self> {
        if !(a < b && b <= 2 * a) {
            return invalid(format!("need a < b <= 2a, got a={a}, b={b}"));
        }
        if let Some(&e) = set.iter().find(|&&e| e >= a) {
            return invalid(format!("element {e} outside 0..{a}"));
        }
        let mut set = set.to_vec();
        set.sort_unstable();
        set.dedup();
        Ok(Self {
            a,
            b,
            c: a % (b - a),
            set,
        })
    }

    pub fn shifts(&self) -> Vec<usize> {
        lemma_net_exponents(self.a, self.b)
    }
}

/// Result of an exhaustive minimization over monomial subspaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinFilling {
    #[serde(serialize_with = "serialize_rational")]
    pub ratio: Rational,
    /// Exponents spanning the minimizing monomial subspace.
    pub witness: Vec<usize>,
}

/// `|S + T| / |S|` for finite sets of exponents.
pub fn sumset_ratio(set: &[usize], shifts: &[usize]) -> Result<Rational> {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.is_empty() {
        return invalid("empty set");
    }
    let mut sum: Vec<usize> = s
        .iter()
        .flat_map(|&x| shifts.iter().map(move |&t| x + t))
        .collect();
    sum.sort_unstable();
    sum.dedup();
    Ok(Rational::new(sum.len().into(), s.len().into()))
}

/// `|S + {0, c, b-a}| / |S|`.
pub fn sumset_mu(inst: &SumsetInstance) -> Result<Rational> {
    sumset_ratio(&inst.set, &inst.shifts())
}

fn bits(mask: u128) -> impl Iterator<Item = usize> {
    (0..128).filter(move |i| mask >> i & 1 == 1)
}

/// Lexicographic order on the sorted element lists of two bitsets.
fn lex_cmp(x: u128, y: u128) -> Ordering {
    bits(x).cmp(bits(y))
}

#[derive(Clone, Copy)]
struct Candidate {
    num: u32,
    den: u32,
    mask: u128,
}

impl Candidate {
    fn better(self, other: Candidate) -> Candidate {
        let lhs = self.num as u64 * other.den as u64;
        let rhs = other.num as u64 * self.den as u64;
        match lhs.cmp(&rhs).then_with(|| lex_cmp(self.mask, other.mask)) {
            Ordering::Greater => other,
            _ => self,
        }
    }
}

/// Minimizes `|S + T| / |S|` over nonempty `S` in `{0, ..., a-1}`.
fn exhaustive_min(a: usize, shifts: &[usize]) -> MinFilling {
    let shift_mask = shifts.iter().fold(0u128, |m, &t| m | 1 << t);
    let best = (1u64..1u64 << a)
        .into_par_iter()
        .map(|m| {
            let mask = m as u128;
            let sum = bits(shift_mask).fold(0u128, |acc, t| acc | mask << t);
            Candidate {
                num: sum.count_ones(),
                den: mask.count_ones(),
                mask,
            }
        })
        .reduce_with(Candidate::better)
        .expect("a >= 1 gives at least one subset");
    MinFilling {
        ratio: Rational::new(best.num.into(), best.den.into()),
        witness: bits(best.mask).collect(),
    }
}

fn check_bound(a: usize, bound: usize) -> Result<()> {
    if a > bound {
        return Err(Error::BoundExceeded {
            what: "exhaustive subset size",
            value: a,
            bound,
        });
    }
    Ok(())
}

/// Exhaustive check that every nonempty `S` has `|S + {0, c, b-a}| >= (b/a)|S|`.
pub fn verify_lemma_ba2(a: usize, b: usize) -> Result<MinFilling> {
    verify_lemma_ba2_with_bound(a, b, SUMSET_EXHAUSTIVE_BOUND)
}

pub fn verify_lemma_ba2_with_bound(a: usize, b: usize, bound: usize) -> Result<MinFilling> {
    if !(a < b && b <= 2 * a) {
        return invalid(format!("need 1 < b/a <= 2, got {b}/{a}"));
    }
    check_bound(a, bound.min(64))?;
    let best = exhaustive_min(a, &lemma_net_exponents(a, b));
    if best.ratio < Rational::new(b.into(), a.into()) {
        return Err(Error::Inconsistent(format!(
            "subset {:?} has ratio {} below {b}/{a}",
            best.witness, best.ratio
        )));
    }
    Ok(best)
}

/// Minimal filling ratio of a monomial series over monomial `W` in `S_{a-1}`.
pub fn min_filling_monomial(v: &LinearSeries, a: usize) -> Result<MinFilling> {
    min_filling_monomial_with_bound(v, a, MONOMIAL_EXHAUSTIVE_BOUND)
}

pub fn min_filling_monomial_with_bound(
    v: &LinearSeries,
    a: usize,
    bound: usize,
) -> Result<MinFilling> {
    let exps = match v.monomial_exponents() {
        Some(e) if !e.is_empty() => e,
        _ => return invalid("series must be nonempty and spanned by monomials in u"),
    };
    if a == 0 {
        return invalid("a must be positive");
    }
    check_bound(a, bound.min(64))?;
    let top = exps[exps.len() - 1] + a;
    if top > 128 {
        return Err(Error::BoundExceeded {
            what: "product degree",
            value: top,
            bound: 128,
        });
    }
    Ok(exhaustive_min(a, &exps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{ratio, PrimeField};
    use crate::series::PolySpace;

    #[test]
    fn sumset_examples() {
        let full = SumsetInstance::new(5, 8, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(full.c, 2);
        assert_eq!(sumset_mu(&full).unwrap(), ratio(8, 5));
        assert_eq!(
            sumset_mu(&SumsetInstance::new(5, 8, &[0]).unwrap()).unwrap(),
            ratio(3, 1)
        );
        assert_eq!(
            sumset_mu(&SumsetInstance::new(3, 5, &[0, 1, 2]).unwrap()).unwrap(),
            ratio(5, 3)
        );
        assert!(sumset_mu(&SumsetInstance::new(3, 5, &[]).unwrap()).is_err());
        assert!(SumsetInstance::new(3, 7, &[0]).is_err());
    }

    #[test]
    fn lemma_examples() {
        assert_eq!(verify_lemma_ba2(5, 8).unwrap().ratio, ratio(8, 5));
        let one = verify_lemma_ba2(1, 2).unwrap();
        assert_eq!((one.ratio, one.witness), (ratio(2, 1), vec![0]));
        assert_eq!(verify_lemma_ba2(4, 8).unwrap().ratio, ratio(2, 1));
        assert!(matches!(
            verify_lemma_ba2(15, 16),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn ties_pick_lexicographically_smallest() {
        // (1,2)-blocks: every singleton attains 2; {0} is smallest.
        assert_eq!(verify_lemma_ba2(4, 8).unwrap().witness, vec![0]);
    }

    #[test]
    fn monomial_examples() {
        let f = PrimeField::default();
        let unit = LinearSeries::monomials(0, &[0], f).unwrap();
        assert_eq!(min_filling_monomial(&unit, 4).unwrap().ratio, ratio(1, 1));
        let full = LinearSeries::full(PolySpace::line(3), f);
        let m = min_filling_monomial(&full, 5).unwrap();
        assert_eq!(m.ratio, ratio(8, 5));
        assert_eq!(m.witness, vec![0, 1, 2, 3, 4]);
        let random_like = LinearSeries::new(PolySpace::line(1), f, vec![vec![1, 1]]).unwrap();
        assert!(min_filling_monomial(&random_like, 3).is_err());
    }
}
