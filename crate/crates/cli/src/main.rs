//! `steinerlab`: reproducible certificates for Steiner bundles and the
//! Hilbert scheme of points in the plane.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

use steinerlab::certify::CERTIFY_SEED;
use steinerlab::exactalg::{PrimeField, DEFAULT_PRIME, DEFAULT_TRIALS};
use steinerlab::Error;

#[derive(Parser, Debug)]
#[command(name = "steinerlab", version, about, propagate_version = true)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Global {
    /// Prime modulus for the finite-field computations.
    #[arg(long, global = true, env = "STEINERLAB_PRIME", default_value_t = DEFAULT_PRIME)]
    prime: u64,
    /// Seed for all random draws.
    #[arg(long, global = true, env = "STEINERLAB_SEED", default_value_t = CERTIFY_SEED)]
    seed: u64,
    /// Number of independent trials for randomized tests.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    /// Emit a JSON certificate instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Serialize, Debug)]
#[serde(untagged)]
enum Command {
    /// List exceptional slopes of Phi_N.
    Slopes {
        #[arg(long = "N")]
        #[serde(rename = "N")]
        n: u32,
        #[arg(long, default_value_t = 6)]
        count: usize,
    },
    /// Test membership in Phi_N.
    InPhi {
        #[arg(long = "N")]
        #[serde(rename = "N")]
        n: u32,
        #[arg(long)]
        q: String,
    },
    /// Test membership in Psi_N by both descriptions.
    InPsi {
        #[arg(long = "N")]
        #[serde(rename = "N")]
        n: u32,
        #[arg(long)]
        q: String,
    },
    /// Exhaustively minimize the three-term sumset ratio.
    SumsetVerify {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// Filling ratios of the monomial construction and a random probe.
    Filling {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long = "N")]
        #[serde(rename = "N")]
        n: usize,
    },
    /// Rank test for a matrix over a random linear series.
    MatrixIso {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Splitting type of a Steiner bundle on a general rational curve.
    Splitting {
        #[arg(long = "N")]
        #[serde(rename = "N")]
        n: u32,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Interpolation test on P^2.
    Interpolation {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Use the kernel bundle instead of the Steiner bundle.
        #[arg(long)]
        kernel: bool,
    },
    /// Effective cone report for n points.
    Cone {
        #[arg(long)]
        n: u64,
    },
    /// Cone reports for a range of n.
    ConeTable {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Secant-plane existence and class.
    Secant {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        g: i64,
        #[arg(long)]
        s: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        r: i64,
    },
    /// Gaeta resolution shape for n general points.
    Gaeta {
        #[arg(long)]
        n: u64,
    },
    /// Run every acceptance criterion.
    Selftest,
}

/// What a command produced, before rendering.
pub struct Outcome {
    pub result: Value,
    pub text: String,
    pub violated: bool,
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    params: &'a Value,
    prime: u64,
    seed: u64,
    trials: usize,
    status: &'a str,
    result: &'a Value,
}

pub struct Context {
    pub field: PrimeField,
    pub seed: u64,
    pub trials: usize,
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Slopes { .. } => "slopes",
        Command::InPhi { .. } => "in-phi",
        Command::InPsi { .. } => "in-psi",
        Command::SumsetVerify { .. } => "sumset-verify",
        Command::Filling { .. } => "filling",
        Command::MatrixIso { .. } => "matrix-iso",
        Command::Splitting { .. } => "splitting",
        Command::Interpolation { .. } => "interpolation",
        Command::Cone { .. } => "cone",
        Command::ConeTable { .. } => "cone-table",
        Command::Secant { .. } => "secant",
        Command::Gaeta { .. } => "gaeta",
        Command::Selftest => "selftest",
    }
}

fn dispatch(command: &Command, ctx: &Context, json: bool) -> steinerlab::Result<Outcome> {
    use commands::*;
    match *command {
        Command::Slopes { n, count } => slopes(n, count),
        Command::InPhi { n, ref q } => in_phi(n, q),
        Command::InPsi { n, ref q } => in_psi(n, q),
        Command::SumsetVerify { a, b } => sumset_verify(a, b),
        Command::Filling { a, b, n } => filling(ctx, a, b, n),
        Command::MatrixIso { dim, a, b, k } => matrix_iso(ctx, dim, a, b, k),
        Command::Splitting { n, s, r, k } => splitting(ctx, n, s, r, k),
        Command::Interpolation { r, s, k, kernel } => interpolation(ctx, r, s, k, kernel),
        Command::Cone { n } => cone(n),
        Command::ConeTable { from, to } => cone_table(from, to, json),
        Command::Secant { n, g, s, d, r } => secant(n, g, s, d, r),
        Command::Gaeta { n } => gaeta(n),
        Command::Selftest => selftest(ctx),
    }
}

fn is_invalid(e: &Error) -> bool {
    matches!(e, Error::InvalidParameter(_) | Error::BoundExceeded { .. })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = cli.global;
    let name = command_name(&cli.command);
    let field = PrimeField::new(g.prime).ok();

    let outcome = match field {
        Some(field) => dispatch(
            &cli.command,
            &Context {
                field,
                seed: g.seed,
                trials: g.trials,
            },
            g.json,
        ),
        None => Err(Error::InvalidParameter(format!(
            "--prime {} is not a prime below 2^32",
            g.prime
        ))),
    };

    let params = serde_json::to_value(&cli.command).expect("params serialize");
    let (status, code, result, text) = match outcome {
        Ok(o) if o.violated => ("property-violation", 1, o.result, o.text),
        Ok(o) => ("ok", 0, o.result, o.text),
        Err(e) => {
            let (status, code) = if is_invalid(&e) {
                ("invalid-params", 2)
            } else {
                ("property-violation", 1)
            };
            let msg = e.to_string();
            (
                status,
                code,
                serde_json::json!({ "error": msg }),
                format!("error: {msg}\n"),
            )
        }
    };

    if g.json {
        let envelope = Envelope {
            command: name,
            params: &params,
            prime: g.prime,
            seed: g.seed,
            trials: g.trials,
            status,
            result: &result,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&envelope).expect("envelope serializes")
        );
    } else if code == 0 {
        print!("{text}");
    } else if status == "invalid-params" {
        eprint!("{text}");
    } else {
        print!("{text}");
        eprintln!("{name}: {status}");
    }
    ExitCode::from(code)
}
