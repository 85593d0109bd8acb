//! Executable acceptance criteria. Each check is exact; randomized checks
//! use a fixed seed and trial count so every run is reproducible.

use std::time::Instant;

use serde::Serialize;

use crate::error::Result;
use crate::exactalg::{int, ratio, PrimeField, RandomSource, Rational, Trials, DEFAULT_TRIALS};
use crate::hilbert::{
    cone_report, gaeta_euler_holds, gaeta_shape, kernel_divisor, pair, pencil_curve,
    steiner_divisor, CaseLabel, DivisorClass, EdgeStatus,
};
use crate::secant::{
    secant_class, secant_class_k1, secant_class_k1_binomial, CohomologyClass, SecantParams,
};
use crate::series::{min_filling_monomial, monomial_series, verify_lemma_ba2};
use crate::slopes::{exceptional_slopes, in_psi, in_psi_orbit, Slope};
use crate::steiner::{
    balanced_test, interpolation_test_cokernel, matrix_iso_test, pullback_splitting, SteinerSpec,
};

/// Seed used by the randomized criteria.
pub const CERTIFY_SEED: u64 = 20_140_101;
/// Random rationals sampled for the `Ψ_N` comparison.
pub const PSI_SAMPLES: usize = 1000;
/// Denominators of the sampled rationals stay below this.
pub const PSI_MAX_DENOMINATOR: u64 = 60;
/// Largest `a` in the exhaustive sumset check.
pub const SUMSET_MAX_A: usize = 14;
/// Largest `a` and `N` in the monomial-construction check.
pub const MONOMIAL_MAX_A: usize = 12;
pub const MONOMIAL_MAX_N: usize = 5;
/// Range of `r` in the duality check.
pub const DUALITY_MAX_R: u64 = 40;
/// Random tuples for the `k = 1` comparison and the vanishing check.
pub const SECANT_K1_SAMPLES: usize = 100;
pub const SECANT_VANISHING_SAMPLES: usize = 200;
/// Largest `n` in the Gaeta check.
pub const GAETA_MAX_N: u64 = 200;

/// Criteria whose stated oracle disagrees with the underlying formula.
pub const KNOWN_FAILURES: &[&str] = &["10b"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub millis: u128,
}

#[derive(Clone, Copy, Debug)]
pub struct CertifyConfig {
    pub field: PrimeField,
    pub seed: u64,
    pub trials: usize,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        Self {
            field: PrimeField::default(),
            seed: CERTIFY_SEED,
            trials: DEFAULT_TRIALS,
        }
    }
}

impl CertifyConfig {
    fn trials(&self) -> Trials {
        Trials::new(self.seed, self.trials)
    }
}

type Check = fn(&CertifyConfig) -> Result<(bool, String)>;

/// `(id, name, check)` for every criterion, in order.
pub fn criteria() -> Vec<(&'static str, &'static str, Check)> {
    vec![
        ("1", "exceptional slopes of Phi_2", slope_list as Check),
        ("2", "two descriptions of Psi_N agree", psi_agreement),
        ("3", "three-term sumset bound", sumset_bound),
        ("4", "monomial series filling bound", monomial_bound),
        ("5", "matrix isomorphism dichotomy", iso_dichotomy),
        (
            "6",
            "balanced pullbacks at exceptional slopes",
            balanced_pullbacks,
        ),
        ("7", "interpolation and h0 bookkeeping", interpolation),
        (
            "8",
            "Steiner and kernel divisors are dual to pencils",
            duality,
        ),
        ("9", "cone report golden values", cone_golden),
        (
            "10a",
            "elliptic quartic secant class vanishes",
            secant_quartic,
        ),
        (
            "10b",
            "k = 1 class equals sum C(delta, j) theta^j x^(r-j)",
            secant_k1_stated,
        ),
        (
            "10c",
            "secant coefficients are nonnegative",
            secant_nonnegative,
        ),
        (
            "10d",
            "secant class vanishes when (r - delta)k > g",
            secant_vanishing,
        ),
        ("11", "Gaeta Euler identity", gaeta),
    ]
}

pub fn run_criterion(id: &str, config: &CertifyConfig) -> Option<CriterionResult> {
    let (id, name, check) = criteria().into_iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let (passed, detail) = match check(config) {
        Ok(v) => v,
        Err(e) => (false, format!("error: {e}")),
    };
    Some(CriterionResult {
        id,
        name,
        passed,
        detail,
        millis: start.elapsed().as_millis(),
    })
}

pub fn run_all(config: &CertifyConfig) -> Vec<CriterionResult> {
    criteria()
        .iter()
        .filter_map(|(id, _, _)| run_criterion(id, config))
        .collect()
}

fn slope_list(_: &CertifyConfig) -> Result<(bool, String)> {
    let got = exceptional_slopes(2, 6)?;
    let want = [
        ratio(0, 1),
        ratio(1, 2),
        ratio(3, 5),
        ratio(8, 13),
        ratio(21, 34),
        ratio(55, 89),
    ];
    let shown: Vec<String> = got.iter().map(ToString::to_string).collect();
    Ok((got == want, format!("[{}]", shown.join(", "))))
}

fn psi_agreement(config: &CertifyConfig) -> Result<(bool, String)> {
    let mut rng = RandomSource::with_stream(config.seed, 2);
    let mut mismatches = Vec::new();
    let mut members = 0;
    for i in 0..PSI_SAMPLES {
        let n = 3 + (i % 3) as u64;
        let den = 1 + rng.below(PSI_MAX_DENOMINATOR);
        // numerator in (den, n*den]
        let num = den + 1 + rng.below((n - 1) * den);
        let q = Slope::Finite(Rational::new(num.into(), den.into()));
        let a = in_psi(n as u32, &q)?;
        let b = in_psi_orbit(n as u32, &q)?;
        members += a as usize;
        if a != b {
            mismatches.push(format!("N={n} q={q}"));
        }
    }
    Ok((
        mismatches.is_empty(),
        format!(
            "{PSI_SAMPLES} samples, {members} in Psi_N, {} mismatches{}",
            mismatches.len(),
            first(&mismatches)
        ),
    ))
}

fn first(items: &[String]) -> String {
    items
        .first()
        .map(|s| format!(" (first: {s})"))
        .unwrap_or_default()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn sumset_bound(_: &CertifyConfig) -> Result<(bool, String)> {
    let mut pairs = 0;
    let mut violations = Vec::new();
    for a in 1..=SUMSET_MAX_A {
        for b in a + 1..=2 * a {
            if gcd(a, b) != 1 {
                continue;
            }
            pairs += 1;
            match verify_lemma_ba2(a, b) {
                Ok(m) if m.ratio >= ratio(b as i64, a as i64) => {}
                Ok(m) => violations.push(format!("({a},{b}) ratio {}", m.ratio)),
                Err(e) => violations.push(format!("({a},{b}) {e}")),
            }
        }
    }
    Ok((
        violations.is_empty(),
        format!(
            "{pairs} coprime pairs, {} violations{}",
            violations.len(),
            first(&violations)
        ),
    ))
}

fn monomial_bound(config: &CertifyConfig) -> Result<(bool, String)> {
    let mut cases = 0;
    let mut violations = Vec::new();
    for n in 3..=MONOMIAL_MAX_N {
        for a in 1..=MONOMIAL_MAX_A {
            for b in a + 1..=(n - 1) * a {
                cases += 1;
                let v = monomial_series(a, b, n, config.field)?;
                let m = min_filling_monomial(&v, a)?;
                if m.ratio < ratio(b as i64, a as i64) {
                    violations.push(format!("(a={a}, b={b}, N={n}) ratio {}", m.ratio));
                }
            }
        }
    }
    Ok((
        violations.is_empty(),
        format!(
            "{cases} cases, {} violations{}",
            violations.len(),
            first(&violations)
        ),
    ))
}

fn iso_dichotomy(config: &CertifyConfig) -> Result<(bool, String)> {
    let t = config.trials();
    let f = config.field;
    let pos_38 = t.any(|rng| matrix_iso_test(3, 3, 8, 1, f, rng))?;
    let pos_13 = t.any(|rng| matrix_iso_test(3, 1, 3, 1, f, rng))?;
    let neg_411 = t.all(|rng| Ok(!matrix_iso_test(3, 4, 11, 1, f, rng)?))?;
    Ok((
        pos_38 && pos_13 && neg_411,
        format!(
            "(3,8) iso on some seed: {pos_38}; (1,3) iso on some seed: {pos_13}; (4,11) never iso: {neg_411}"
        ),
    ))
}

fn balanced_pullbacks(config: &CertifyConfig) -> Result<(bool, String)> {
    let t = config.trials();
    let f = config.field;
    let mut ok = true;
    let mut detail = Vec::new();
    for (s, r) in [(1, 2), (3, 5), (8, 13)] {
        let spec = SteinerSpec::new(2, s, r, 1)?;
        let b = t.any(|rng| balanced_test(&spec, f, rng))?;
        ok &= b;
        detail.push(format!("{s}/{r} balanced: {b}"));
    }
    let spec = SteinerSpec::new(2, 2, 5, 1)?;
    let never = t.all(|rng| Ok(!balanced_test(&spec, f, rng)?))?;
    let zero_part = t.all(|rng| Ok(pullback_splitting(&spec, f, rng)?.parts.contains(&0)))?;
    ok &= never && zero_part;
    detail.push(format!(
        "2/5 never balanced: {never}, zero part on every seed: {zero_part}"
    ));
    Ok((ok, detail.join("; ")))
}

fn interpolation(config: &CertifyConfig) -> Result<(bool, String)> {
    let t = config.trials();
    let f = config.field;
    let mut h0_ok = true;
    let mut ok = true;
    let mut detail = Vec::new();
    for (r, s) in [(2, 0), (5, 3)] {
        let runs = t.map(|rng| interpolation_test_cokernel(r, s, 1, f, rng))?;
        let any = runs.iter().any(|o| o.interpolates);
        h0_ok &= runs.iter().all(|o| o.degenerate || o.h0 == o.expected_h0);
        ok &= any;
        detail.push(format!("(r={r}, s={s}) interpolates: {any}"));
    }
    for k in 1..=3 {
        let runs = t.map(|rng| interpolation_test_cokernel(3, 1, k, f, rng))?;
        let none = runs.iter().all(|o| !o.interpolates);
        h0_ok &= runs.iter().all(|o| o.degenerate || o.h0 == o.expected_h0);
        ok &= none;
        detail.push(format!("(r=3, s=1, k={k}) never: {none}"));
    }
    detail.push(format!("h0 = krn in every run: {h0_ok}"));
    Ok((ok && h0_ok, detail.join("; ")))
}

fn duality(_: &CertifyConfig) -> Result<(bool, String)> {
    let mut checked = 0;
    let mut violations = Vec::new();
    for r in 2..=DUALITY_MAX_R {
        for s in 0..=r {
            let n = r * (r + 1) / 2 + s;
            checked += 1;
            if pair(&steiner_divisor(r, s)?, &pencil_curve(n, r)?) != int(0) {
                violations.push(format!("steiner r={r} s={s}"));
            }
            if s >= 1 && pair(&kernel_divisor(r, s)?, &pencil_curve(n, r + 2)?) != int(0) {
                violations.push(format!("kernel r={r} s={s}"));
            }
        }
    }
    Ok((
        violations.is_empty(),
        format!(
            "{checked} (r, s) pairs, {} violations{}",
            violations.len(),
            first(&violations)
        ),
    ))
}

fn cone_golden(_: &CertifyConfig) -> Result<(bool, String)> {
    let r142 = cone_report(142)?;
    let p1 = r142.possibility1.as_ref().and_then(DivisorClass::slope);
    let ok142 = r142.case == CaseLabel::Open && p1 == Some(ratio(277, 18));

    let r12 = cone_report(12)?;
    let e12 = &r12.effective_edge;
    let ok12 = r12.case == CaseLabel::Case4
        && e12.status == EdgeStatus::Proven
        && e12.class == DivisorClass::from_ints(14, 4)
        && e12.class.h_to_delta_ratio() == Some(int(7));

    let r3 = cone_report(3)?;
    let e3 = &r3.effective_edge;
    let ok3 = e3.status == EdgeStatus::Proven
        && e3.class == DivisorClass::from_ints(2, 2)
        && e3.class.h_to_delta_ratio() == Some(int(2));

    let show = |o: Option<Rational>| o.map(|q| q.to_string()).unwrap_or_else(|| "-".into());
    Ok((
        ok142 && ok12 && ok3,
        format!(
            "142: {} possibility1 {}; 12: {} {} ({}); 3: {} {} ({})",
            r142.case.as_str(),
            show(p1),
            r12.case.as_str(),
            e12.class,
            show(e12.class.h_to_delta_ratio()),
            r3.case.as_str(),
            e3.class,
            show(e3.class.h_to_delta_ratio()),
        ),
    ))
}

/// Parameters realizing `(r, k, δ, g)` with `rk <= d`.
fn secant_params(r: i64, k: i64, delta: i64, g: i64) -> SecantParams {
    let s = r * k + k + 1;
    SecantParams::new(delta + g + s, g, s, s + 1 + r - k, r)
}

fn secant_quartic(_: &CertifyConfig) -> Result<(bool, String)> {
    let c = secant_class(&SecantParams::new(4, 1, 3, 3, 1))?;
    Ok((c.is_zero(), format!("class zero: {}", c.is_zero())))
}

fn describe(c: &CohomologyClass) -> String {
    let terms: Vec<String> = c
        .coeffs
        .iter()
        .enumerate()
        .map(|(j, q)| format!("{j}:{q}"))
        .collect();
    format!("[{}]", terms.join(" "))
}

fn secant_k1_stated(config: &CertifyConfig) -> Result<(bool, String)> {
    let mut rng = RandomSource::with_stream(config.seed, 10);
    let mut mismatches = Vec::new();
    let mut derived_mismatches = 0;
    for _ in 0..SECANT_K1_SAMPLES {
        let r = rng.below(7) as i64;
        let delta = rng.below(7) as i64;
        let g = rng.below(9) as i64;
        let general = secant_class(&secant_params(r, 1, delta, g))?;
        let stated = secant_class_k1_binomial(r, delta, g);
        if general != stated {
            mismatches.push(format!(
                "r={r} delta={delta} g={g}: evaluator {} vs stated {}",
                describe(&general),
                describe(&stated)
            ));
        }
        derived_mismatches += (general != secant_class_k1(r, delta, g)) as usize;
    }
    Ok((
        mismatches.is_empty(),
        format!(
            "{} of {SECANT_K1_SAMPLES} tuples differ from the stated form{}; derived form C(delta, r-j)/j! differs on {derived_mismatches}",
            mismatches.len(),
            first(&mismatches)
        ),
    ))
}

fn random_secant_tuples(
    rng: &mut RandomSource,
    count: usize,
    vanishing: bool,
) -> Vec<(i64, i64, i64, i64)> {
    (0..count)
        .map(|_| {
            let r = 1 + rng.below(7) as i64;
            let k = 1 + rng.below(4) as i64;
            if vanishing {
                let delta = rng.below(r as u64) as i64;
                let g = rng.below(((r - delta) * k) as u64) as i64;
                (r, k, delta, g)
            } else {
                (r, k, rng.below(8) as i64, rng.below(9) as i64)
            }
        })
        .collect()
}

fn secant_nonnegative(config: &CertifyConfig) -> Result<(bool, String)> {
    let mut rng = RandomSource::with_stream(config.seed, 11);
    let tuples = random_secant_tuples(&mut rng, SECANT_VANISHING_SAMPLES, false);
    let mut negative = Vec::new();
    let mut nonzero = 0;
    for &(r, k, delta, g) in &tuples {
        let c = secant_class(&secant_params(r, k, delta, g))?;
        nonzero += !c.is_zero() as usize;
        if !c.is_nonnegative() {
            negative.push(format!("r={r} k={k} delta={delta} g={g}"));
        }
    }
    Ok((
        negative.is_empty(),
        format!(
            "{} tuples ({nonzero} nonzero classes), {} with a negative coefficient{}",
            tuples.len(),
            negative.len(),
            first(&negative)
        ),
    ))
}

fn secant_vanishing(config: &CertifyConfig) -> Result<(bool, String)> {
    let mut rng = RandomSource::with_stream(config.seed, 12);
    let tuples = random_secant_tuples(&mut rng, SECANT_VANISHING_SAMPLES, true);
    let mut survivors = Vec::new();
    for &(r, k, delta, g) in &tuples {
        if !secant_class(&secant_params(r, k, delta, g))?.is_zero() {
            survivors.push(format!("r={r} k={k} delta={delta} g={g}"));
        }
    }
    Ok((
        survivors.is_empty(),
        format!(
            "{} tuples, {} nonzero classes{}",
            tuples.len(),
            survivors.len(),
            first(&survivors)
        ),
    ))
}

fn gaeta(_: &CertifyConfig) -> Result<(bool, String)> {
    let mut failures = Vec::new();
    for n in 1..=GAETA_MAX_N {
        if !gaeta_euler_holds(&gaeta_shape(n)?) {
            failures.push(n.to_string());
        }
    }
    Ok((
        failures.is_empty(),
        format!(
            "n = 1..{GAETA_MAX_N}, {} failures{}",
            failures.len(),
            first(&failures)
        ),
    ))
}
