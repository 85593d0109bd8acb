use std::fmt::Write as _;

use rayon::prelude::*;
use serde_json::{json, Value};

use steinerlab::certify::{run_all, CertifyConfig, KNOWN_FAILURES};
use steinerlab::error::{Error, Result};
use steinerlab::exactalg::{Rational, RationalJson};
use steinerlab::hilbert::{cone_report, gaeta_euler_holds, gaeta_shape, ConeReport};
use steinerlab::secant::{existence_check, secant_class, Existence, SecantParams};
use steinerlab::series::{
    min_filling_monomial, monomial_series, monomial_series_exponents, random_series,
    verify_lemma_ba2, witness_low_filling, PolySpace, MONOMIAL_EXHAUSTIVE_BOUND,
};
use steinerlab::slopes::{self, compare_phi, exceptional_slopes, Slope};
use steinerlab::steiner::{
    balanced_test, interpolation_test_cokernel, interpolation_test_kernel, matrix_iso_test,
    predicted_decomposition, pullback_splitting, SteinerSpec,
};

use crate::{Context, Outcome};

fn rj(q: &Rational) -> Value {
    serde_json::to_value(RationalJson(q)).expect("rational serializes")
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("result serializes")
}

fn ok(result: Value, text: String) -> Result<Outcome> {
    Ok(Outcome {
        result,
        text,
        violated: false,
    })
}

fn q(num: usize, den: usize) -> Rational {
    Rational::new(num.into(), den.into())
}

fn parse_slope(s: &str) -> Result<Slope> {
    s.parse()
}

pub fn slopes(n: u32, count: usize) -> Result<Outcome> {
    let list = exceptional_slopes(n, count)?;
    let text = list.iter().map(|q| format!("{q}\n")).collect();
    ok(Value::Array(list.iter().map(rj).collect()), text)
}

pub fn in_phi(n: u32, q: &str) -> Result<Outcome> {
    let q = match parse_slope(q)? {
        Slope::Finite(q) => q,
        Slope::Infinity => return Err(Error::InvalidParameter("q must be finite".into())),
    };
    let member = slopes::in_phi(n, &q)?;
    let exceptional = slopes::is_exceptional(n, &q)?;
    let position = match compare_phi(n, &q)? {
        -1 => "below",
        0 => "equal",
        _ => "above",
    };
    ok(
        json!({ "q": rj(&q), "member": member, "exceptional": exceptional, "phi_position": position }),
        format!("{q} in Phi_{n}: {member} (exceptional: {exceptional}, {position} phi_{n})\n"),
    )
}

pub fn in_psi(n: u32, q: &str) -> Result<Outcome> {
    let q = parse_slope(q)?;
    let by_phi = slopes::in_psi(n, &q)?;
    let by_orbit = slopes::in_psi_orbit(n, &q)?;
    Ok(Outcome {
        result: json!({ "q": to_json(&q), "member": by_phi, "phi_reduction": by_phi, "theta_orbit": by_orbit }),
        text: format!("{q} in Psi_{n}: {by_phi} (theta orbit: {by_orbit})\n"),
        violated: by_phi != by_orbit,
    })
}

pub fn sumset_verify(a: usize, b: usize) -> Result<Outcome> {
    let m = verify_lemma_ba2(a, b)?;
    ok(
        json!({ "bound": rj(&q(b, a)), "min_ratio": rj(&m.ratio), "witness": m.witness, "holds": true }),
        format!(
            "min ratio {} >= {b}/{a}, witness {:?}\n",
            m.ratio, m.witness
        ),
    )
}

pub fn filling(ctx: &Context, a: usize, b: usize, n: usize) -> Result<Outcome> {
    if a == 0 || b <= a || n < 2 {
        return Err(Error::InvalidParameter("need a >= 1, b > a, N >= 2".into()));
    }
    let bound = q(b, a);
    let psi = slopes::in_psi(n as u32, &Slope::Finite(bound.clone()))?;
    let mut text = format!("b/a = {bound}, in Psi_{n}: {psi}\n");
    let mut violated = false;

    let monomial = if b <= (n - 1) * a && a <= MONOMIAL_EXHAUSTIVE_BOUND {
        let exps = monomial_series_exponents(a, b, n)?;
        let v = monomial_series(a, b, n, ctx.field)?;
        let m = min_filling_monomial(&v, a)?;
        violated |= m.ratio < bound;
        let _ = writeln!(
            text,
            "monomial series u^{exps:?}: min ratio {} over monomial W {:?}",
            m.ratio, m.witness
        );
        json!({ "exponents": exps, "min_ratio": rj(&m.ratio), "witness": m.witness })
    } else {
        Value::Null
    };

    let dim = n.min(b - a + 1);
    let mut probes = Vec::new();
    for i in 0..ctx.trials {
        let mut rng = steinerlab::exactalg::RandomSource::with_stream(ctx.seed, i as u64);
        let v = random_series(PolySpace::line(b - a), dim, ctx.field, &mut rng)?;
        probes.push(witness_low_filling(&v, a, b, &mut rng)?);
    }
    let best = probes
        .iter()
        .map(|p| p.ratio.clone())
        .min()
        .expect("at least one trial");
    let _ = writeln!(text, "random probe (dim V = {dim}): lowest ratio {best}");
    Ok(Outcome {
        result: json!({
            "ratio": rj(&bound),
            "in_psi": psi,
            "monomial": monomial,
            "probe": { "series_dim": dim, "ratios": probes.iter().map(|p| rj(&p.ratio)).collect::<Vec<_>>(), "min_ratio": rj(&best) },
        }),
        text,
        violated,
    })
}

pub fn matrix_iso(ctx: &Context, dim: usize, a: usize, b: usize, k: usize) -> Result<Outcome> {
    let runs = trials(ctx, |rng| matrix_iso_test(dim, a, b, k, ctx.field, rng))?;
    let any = runs.iter().any(|&x| x);
    let predicted = if dim >= 2 && b > a {
        Some(slopes::in_psi(dim as u32, &Slope::Finite(q(b, a)))?)
    } else {
        None
    };
    Ok(Outcome {
        result: json!({ "trials": runs, "isomorphism_found": any, "in_psi": predicted }),
        text: format!("isomorphism per trial: {runs:?}; b/a in Psi_{dim}: {predicted:?}\n"),
        violated: predicted == Some(false) && any,
    })
}

fn trials<T>(
    ctx: &Context,
    mut f: impl FnMut(&mut steinerlab::exactalg::RandomSource) -> Result<T>,
) -> Result<Vec<T>> {
    steinerlab::exactalg::Trials::new(ctx.seed, ctx.trials).map(&mut f)
}

pub fn splitting(ctx: &Context, n: u32, s: usize, r: usize, k: usize) -> Result<Outcome> {
    let spec = SteinerSpec::new(n, s, r, k)?;
    let splits = trials(ctx, |rng| pullback_splitting(&spec, ctx.field, rng))?;
    let balanced = trials(ctx, |rng| balanced_test(&spec, ctx.field, rng))?;
    let slope = q(s, r);
    let member = slopes::in_phi(n, &slope)?;
    let decomposition = if compare_phi(n, &slope)? < 0 {
        Some(predicted_decomposition(n, s as u64, r as u64, k as u64)?)
    } else {
        None
    };
    let agree = splits
        .iter()
        .zip(&balanced)
        .all(|(sp, &bal)| bal == (sp.parts == vec![s as i64; k * r]));
    let any_balanced = balanced.iter().any(|&b| b);
    let mut text = String::new();
    for (i, sp) in splits.iter().enumerate() {
        let _ = writeln!(text, "trial {i}: {:?}", sp.parts);
    }
    let _ = writeln!(
        text,
        "slope {slope} in Phi_{n}: {member}; balanced on some trial: {any_balanced}"
    );
    if let Some(d) = &decomposition {
        let _ = writeln!(text, "E = F_{}^{} + F_{}^{}", d.n, d.k1, d.n + 1, d.k2);
    }
    Ok(Outcome {
        result: json!({
            "splittings": splits.iter().map(|s| &s.parts).collect::<Vec<_>>(),
            "balanced": balanced,
            "in_phi": member,
            "decomposition": decomposition,
            "tests_agree": agree,
        }),
        text,
        violated: !agree || (!member && any_balanced),
    })
}

pub fn interpolation(ctx: &Context, r: usize, s: usize, k: usize, kernel: bool) -> Result<Outcome> {
    let (runs, predicted) = if kernel {
        let runs = trials(ctx, |rng| {
            interpolation_test_kernel(r, s, k, ctx.field, rng)
        })?;
        let x = Rational::from_integer(1.into()) - q(s + 1, r + 2);
        (runs, slopes::in_phi(2, &x)?)
    } else {
        let runs = trials(ctx, |rng| {
            interpolation_test_cokernel(r, s, k, ctx.field, rng)
        })?;
        (runs, slopes::in_phi(2, &q(s, r))?)
    };
    let any = runs.iter().any(|o| o.interpolates);
    let h0_ok = runs.iter().all(|o| o.degenerate || o.h0 == o.expected_h0);
    let mut text = String::new();
    for (i, o) in runs.iter().enumerate() {
        let _ = writeln!(
            text,
            "trial {i}: interpolates {} (h0 {} of {}, extra vanishing {}, attempts {})",
            o.interpolates, o.h0, o.expected_h0, o.vanishing, o.attempts
        );
    }
    let _ = writeln!(text, "predicted by slope: {predicted}");
    Ok(Outcome {
        result: json!({
            "bundle": if kernel { "kernel" } else { "steiner" },
            "trials": runs,
            "interpolates": any,
            "predicted": predicted,
            "h0_consistent": h0_ok,
        }),
        text,
        violated: !h0_ok || (!predicted && any),
    })
}

fn describe_report(r: &ConeReport) -> String {
    let d = &r.decomposition;
    let mut text = format!(
        "n = {} = {}*{}/2 + {}\ncase: {}\nedge: {} ({}, slope {})\ncurve: {} (C.H = {}, C.Delta = {})\n",
        r.n,
        d.r,
        d.r + 1,
        d.s,
        r.case.as_str(),
        r.effective_edge.class,
        r.effective_edge.status.as_str(),
        show(r.effective_edge.class.slope()),
        r.moving_curve.description,
        r.moving_curve.class.dot_h(),
        r.moving_curve.class.dot_delta(),
    );
    if let Some(p) = &r.possibility1 {
        let _ = writeln!(text, "possibility1: {p} (slope {})", show(p.slope()));
    }
    text
}

fn show(q: Option<Rational>) -> String {
    q.map(|q| q.to_string()).unwrap_or_else(|| "-".into())
}

pub fn cone(n: u64) -> Result<Outcome> {
    let r = cone_report(n)?;
    ok(to_json(&r), describe_report(&r))
}

pub fn cone_table(from: u64, to: u64, json: bool) -> Result<Outcome> {
    if from < 2 || from > to {
        return Err(Error::InvalidParameter("need 2 <= from <= to".into()));
    }
    let reports: Vec<ConeReport> = (from..=to)
        .into_par_iter()
        .map(cone_report)
        .collect::<Result<_>>()?;
    let mut text = String::from(
        "n\tr\ts\tcase\tstatus\tedge\tedge_slope\tcurve_H\tcurve_Delta\tpossibility1\n",
    );
    if !json {
        for r in &reports {
            let _ = writeln!(
                text,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.n,
                r.decomposition.r,
                r.decomposition.s,
                r.case.as_str(),
                r.effective_edge.status.as_str(),
                r.effective_edge.class,
                show(r.effective_edge.class.slope()),
                r.moving_curve.class.dot_h(),
                r.moving_curve.class.dot_delta(),
                show(r.possibility1.as_ref().and_then(|p| p.slope())),
            );
        }
    }
    ok(to_json(&reports), text)
}

pub fn secant(n: i64, g: i64, s: i64, d: i64, r: i64) -> Result<Outcome> {
    let p = SecantParams::new(n, g, s, d, r);
    let existence = existence_check(&p);
    let class = if existence != Existence::Invalid && p.k() >= 1 {
        Some(secant_class(&p)?)
    } else {
        None
    };
    let mut text = format!(
        "k = {}, delta = {}, existence: {existence:?}\n",
        p.k(),
        p.delta()
    );
    let mut violated = false;
    if let Some(c) = &class {
        let terms: Vec<String> = c
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, q)| **q != Rational::from_integer(0.into()))
            .map(|(j, q)| format!("{q} theta^{j} x^{}", c.rk - j as i64))
            .collect();
        let shown = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        };
        let _ = writeln!(text, "class: {shown}");
        violated = !c.is_nonnegative() || (existence == Existence::NotExpected && !c.is_zero());
    }
    Ok(Outcome {
        result: json!({ "k": p.k(), "delta": p.delta(), "existence": existence, "class": class }),
        text,
        violated,
    })
}

pub fn gaeta(n: u64) -> Result<Outcome> {
    let shape = gaeta_shape(n)?;
    let holds = gaeta_euler_holds(&shape);
    let render = |terms: &[(i64, u64)]| {
        terms
            .iter()
            .map(|(e, m)| format!("O({e})^{m}"))
            .collect::<Vec<_>>()
            .join(" + ")
    };
    Ok(Outcome {
        text: format!(
            "0 -> {} -> {} -> I_Z -> 0\nEuler identity: {holds}\n",
            render(&shape.left),
            render(&shape.middle)
        ),
        result: json!({ "shape": shape, "euler_identity": holds }),
        violated: !holds,
    })
}

pub fn selftest(ctx: &Context) -> Result<Outcome> {
    let config = CertifyConfig {
        field: ctx.field,
        seed: ctx.seed,
        trials: ctx.trials,
    };
    let results = run_all(&config);
    let mut text = String::new();
    for r in &results {
        let note = if KNOWN_FAILURES.contains(&r.id) {
            " (known)"
        } else {
            ""
        };
        let _ = writeln!(
            text,
            "criterion {:>3}: {}{note} [{} ms] {}: {}",
            r.id,
            if r.passed { "PASS" } else { "FAIL" },
            r.millis,
            r.name,
            r.detail
        );
    }
    let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    Ok(Outcome {
        result: json!({ "criteria": results, "failed": failed, "known_failures": KNOWN_FAILURES }),
        text,
        violated: !failed.is_empty(),
    })
}
