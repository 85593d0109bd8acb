use num_integer::Integer;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::exactalg::Rational;
use crate::slopes::in_phi;

use super::classes::{
    kernel_divisor, nodal_pencil_curve, pair, pencil_curve, quadric_pencil_curve, steiner_divisor,
    CurveClass, DivisorClass,
};
use super::{decompose, NDecomposition};

/// Convergents of `sqrt(2) - 1` are enumerated up to this denominator.
pub const CONVERGENT_DENOMINATOR_BOUND: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CaseLabel {
    #[serde(rename = "case1")]
    Case1,
    #[serde(rename = "case2-conj")]
    Case2Conj,
    #[serde(rename = "case3-conj")]
    Case3Conj,
    #[serde(rename = "case4")]
    Case4,
    #[serde(rename = "open")]
    Open,
}

impl CaseLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseLabel::Case1 => "case1",
            CaseLabel::Case2Conj => "case2-conj",
            CaseLabel::Case3Conj => "case3-conj",
            CaseLabel::Case4 => "case4",
            CaseLabel::Open => "open",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeStatus {
    Proven,
    Conjectural,
    Candidate,
}

impl EdgeStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            EdgeStatus::Proven => "proven",
            EdgeStatus::Conjectural => "conjectural",
            EdgeStatus::Candidate => "candidate",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeClaim {
    pub class: DivisorClass,
    pub status: EdgeStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MovingCurve {
    pub class: CurveClass,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeReport {
    pub n: u64,
    pub decomposition: NDecomposition,
    pub case: CaseLabel,
    pub effective_edge: EdgeClaim,
    pub moving_curve: MovingCurve,
    /// Largest slope dual to one of the constructed moving curves; set for open `n`.
    pub possibility1: Option<DivisorClass>,
}

/// Convergents `p/q` of `sqrt(2) - 1 = [0; 2, 2, 2, ...]` with `q` up to the bound.
pub fn sqrt2_convergents() -> Vec<(u64, u64)> {
    let mut out = vec![(0, 1)];
    let (mut p0, mut q0, mut p1, mut q1) = (0u64, 1u64, 1u64, 2u64);
    while q1 <= CONVERGENT_DENOMINATOR_BOUND {
        out.push((p1, q1));
        (p0, q0, p1, q1) = (p1, q1, 2 * p1 + p0, 2 * q1 + q0);
    }
    out
}

/// Whether `p/q`, after reduction, is a convergent of `sqrt(2) - 1`.
pub fn is_sqrt2_convergent(p: u64, q: u64) -> bool {
    if q == 0 {
        return false;
    }
    let g = p.gcd(&q);
    let (p, q) = (p / g, q / g);
    q <= CONVERGENT_DENOMINATOR_BOUND && sqrt2_convergents().contains(&(p, q))
}

fn q(num: u64, den: u64) -> Rational {
    Rational::new(num.into(), den.into())
}

fn curve(class: CurveClass, description: String) -> MovingCurve {
    MovingCurve { class, description }
}

/// All constructed moving curves for `(r, s)` with their dual edges.
fn constructed(d: &NDecomposition) -> Result<Vec<(DivisorClass, MovingCurve)>> {
    let (n, r, s) = (d.n, d.r, d.s);
    let (ri, si) = (r as i64, s as i64);
    let mut out = vec![(
        steiner_divisor(r, s)?,
        curve(
            pencil_curve(n, r)?,
            format!("pencil on a smooth curve of degree {r}"),
        ),
    )];
    if s >= 1 {
        out.push((
            kernel_divisor(r, s)?,
            curve(
                pencil_curve(n, r + 2)?,
                format!("pencil on a smooth curve of degree {}", r + 2),
            ),
        ));
    }
    if 2 * s < r {
        let c = nodal_pencil_curve(r, s)?;
        out.push((
            DivisorClass::from_ints(2 * ri * ri - 3 * ri + 2 * si + 1, 2 * ri - 1),
            curve(
                c.class,
                format!("pencil on a degree {} curve with {} nodes", 2 * r - 1, c.m),
            ),
        ));
    }
    if 2 * s > r {
        let c = quadric_pencil_curve(r, s)?;
        out.push((
            DivisorClass::from_ints(2 * ri * ri + 3 * ri + 2 * si - 2, 2 * ri + 5),
            curve(
                c.class,
                format!("pencil on a degree {} curve with {} nodes", 2 * r + 5, c.m),
            ),
        ));
    }
    Ok(out)
}

/// Classifies `n` and reports the effective-cone edge with its status.
pub fn cone_report(n: u64) -> Result<ConeReport> {
    if n < 2 {
        return invalid("n must be at least 2");
    }
    let d = decompose(n)?;
    let (r, s) = (d.r, d.s);
    let candidates = constructed(&d)?;
    let by_degree = |deg: u64| {
        candidates
            .iter()
            .find(|(_, c)| c.class.dot_h() == Rational::from_integer(deg.into()))
            .cloned()
            .expect("constructed curve present")
    };
    let report =
        |case, (class, curve): (DivisorClass, MovingCurve), status, possibility1| ConeReport {
            n,
            decomposition: d,
            case,
            effective_edge: EdgeClaim { class, status },
            moving_curve: curve,
            possibility1,
        };

    if in_phi(2, &q(s, r))? {
        return Ok(report(
            CaseLabel::Case4,
            by_degree(r),
            EdgeStatus::Proven,
            None,
        ));
    }
    if s >= 1 && in_phi(2, &(Rational::from_integer(1.into()) - q(s + 1, r + 2)))? {
        return Ok(report(
            CaseLabel::Case1,
            by_degree(r + 2),
            EdgeStatus::Proven,
            None,
        ));
    }
    let (si, ri) = (s as i128, r as i128);
    if 2 * s < r {
        let above = (2 * si + 2 * ri - 1).pow(2) > 2 * (2 * ri - 1).pow(2);
        if above || is_sqrt2_convergent(2 * s, 2 * r - 1) {
            return Ok(report(
                CaseLabel::Case2Conj,
                by_degree(2 * r - 1),
                EdgeStatus::Conjectural,
                None,
            ));
        }
    }
    if 2 * s > r {
        let above = (4 * ri - 2 * si + 7).pow(2) > 2 * (2 * ri + 5).pow(2);
        if above || is_sqrt2_convergent(2 * (r - s + 1), 2 * r + 5) {
            return Ok(report(
                CaseLabel::Case3Conj,
                by_degree(2 * r + 5),
                EdgeStatus::Conjectural,
                None,
            ));
        }
    }
    let mut best = candidates[0].clone();
    for c in &candidates[1..] {
        if c.0.slope() > best.0.slope() {
            best = c.clone();
        }
    }
    let p1 = best.0.clone();
    Ok(report(
        CaseLabel::Open,
        best,
        EdgeStatus::Candidate,
        Some(p1),
    ))
}

/// The pairing of a report's edge with its moving curve.
pub fn edge_pairing(report: &ConeReport) -> Rational {
    pair(&report.effective_edge.class, &report.moving_curve.class)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, ratio};

    #[test]
    fn convergents() {
        let c = sqrt2_convergents();
        assert_eq!(&c[..5], &[(0, 1), (1, 2), (2, 5), (5, 12), (12, 29)]);
        assert!(is_sqrt2_convergent(4, 10));
        assert!(!is_sqrt2_convergent(3, 7));
    }

    #[test]
    fn golden_reports() {
        let r = cone_report(142).unwrap();
        assert_eq!(r.case, CaseLabel::Open);
        assert_eq!(r.possibility1.unwrap().slope().unwrap(), ratio(277, 18));
        assert_eq!(r.effective_edge.status, EdgeStatus::Candidate);

        let r = cone_report(12).unwrap();
        assert_eq!(r.case, CaseLabel::Case4);
        assert_eq!(r.effective_edge.class, DivisorClass::from_ints(14, 4));
        assert_eq!(r.effective_edge.status, EdgeStatus::Proven);
        assert_eq!(r.effective_edge.class.h_to_delta_ratio().unwrap(), int(7));

        let r = cone_report(3).unwrap();
        assert_eq!(r.case, CaseLabel::Case4);
        assert_eq!(r.effective_edge.class.to_string(), "2H - Δ");
        assert_eq!(r.effective_edge.class.h_to_delta_ratio().unwrap(), int(2));
    }

    #[test]
    fn candidates_at_142() {
        let d = decompose(142).unwrap();
        let slopes: Vec<Rational> = constructed(&d)
            .unwrap()
            .iter()
            .map(|(c, _)| c.slope().unwrap())
            .collect();
        assert_eq!(slopes, vec![ratio(246, 16), ratio(277, 18), ratio(477, 31)]);
    }

    #[test]
    fn every_edge_is_dual_to_its_curve() {
        for n in 2..2000 {
            let r = cone_report(n).unwrap();
            assert_eq!(edge_pairing(&r), int(0), "n={n}");
        }
    }

    #[test]
    fn proven_slopes_are_monotone() {
        let mut prev: Option<Rational> = None;
        for n in 2..2000 {
            let r = cone_report(n).unwrap();
            let cur = (r.effective_edge.status == EdgeStatus::Proven)
                .then(|| r.effective_edge.class.slope().unwrap());
            if let (Some(a), Some(b)) = (&prev, &cur) {
                assert!(b >= a, "n={n}");
            }
            prev = cur;
        }
    }
}
