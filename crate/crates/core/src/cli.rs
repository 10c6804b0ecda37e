//! Command line front end. Every command prints one JSON document on
//! standard output. Exit codes: 0 success, 1 usage error, 2 domain error.

use std::io::Read;
use std::path::Path;

use clap::{ArgAction, Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::dsmap::{ds_power, kernel_decompose, membership};
use crate::error::Error;
use crate::euler::euler_characteristic;
use crate::laurent::LaurentPoly;
use crate::lift::{Lifter, Window, DEFAULT_MAX_WINDOW};
use crate::schur::{schur_expand, schur_poly};
use crate::thinkac::{sch_thin_kac, theta_prime, KClass, Translation};
use crate::verify;
use crate::weights::DominantWeight;

#[derive(Parser, Debug)]
#[command(
    name = "perisym",
    version,
    about = "Supercharacter arithmetic for the periplectic supergroup P(n)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Supercharacter of the thin Kac module with highest weight --lambda.
    Thinkac {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Schur polynomial of --lambda, or the Schur expansion of -f.
    Schur {
        #[arg(long)]
        n: Option<usize>,
        #[arg(
            long,
            allow_hyphen_values = true,
            conflicts_with = "file",
            required_unless_present = "file"
        )]
        lambda: Option<String>,
        #[arg(short = 'f', long = "file")]
        file: Option<String>,
    },
    /// Euler characteristic of the line bundle of weight --lambda on G/Q(--gamma).
    Euler {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        /// Entries are integers or multiples of `a` such as `a`, `-a`, `2a`.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<i64>,
    },
    /// The k-fold Duflo–Serganova map.
    Ds {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Membership test for J_n.
    Member {
        #[command(flatten)]
        input: PolyInput,
    },
    /// Thin Kac coefficients of an element of the kernel of ds.
    KernelDecompose {
        #[command(flatten)]
        input: PolyInput,
    },
    /// Translation functor on a thin Kac class.
    Theta {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        n: Option<usize>,
        #[arg(
            long,
            allow_hyphen_values = true,
            conflicts_with = "file",
            required_unless_present = "file"
        )]
        lambda: Option<String>,
        /// A class in the thin Kac basis.
        #[arg(short = 'f', long = "file")]
        file: Option<String>,
        /// Apply the parity-shifted normalization.
        #[arg(long)]
        parity_shifted: bool,
    },
    /// Preimage under ds_n of the target -h.
    #[command(disable_help_flag = true)]
    Lift {
        #[arg(long)]
        n: usize,
        #[arg(short = 'h', long = "target")]
        target: String,
        #[command(flatten)]
        windows: WindowArgs,
        #[arg(long, action = ArgAction::Help)]
        help: Option<bool>,
    },
    /// Peel-and-lift certificate of an element of J_n.
    Certify {
        #[command(flatten)]
        input: PolyInput,
        #[command(flatten)]
        windows: WindowArgs,
    },
    /// Runs the acceptance battery.
    VerifySuite {
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
pub struct PolyInput {
    #[arg(long)]
    n: Option<usize>,
    /// Inline JSON, a file path, or `-` for standard input.
    #[arg(short = 'f', long = "file")]
    file: String,
}

#[derive(Args, Debug)]
pub struct WindowArgs {
    /// Largest exponent bound tried by the auto-window.
    #[arg(long, env = "PERISYM_MAX_WINDOW", default_value_t = DEFAULT_MAX_WINDOW)]
    max_window: i64,
    /// Solve in this single window instead.
    #[arg(long)]
    window: Option<i64>,
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
    Suite(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn read_payload(arg: &str, flag: &str) -> Result<String, Failure> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("{flag}: cannot read standard input: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(Path::new(arg))
        .map_err(|e| usage(format!("{flag}: cannot read {arg}: {e}")))
}

fn parse_payload<T: DeserializeOwned>(arg: &str, flag: &str) -> Result<T, Failure> {
    let text = read_payload(arg, flag)?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{flag}: {e}")))
}

fn check_arity(n: Option<usize>, found: usize, flag: &str) -> Result<(), Failure> {
    match n {
        Some(n) if n != found => Err(usage(format!(
            "--n {n} does not match the arity {found} of {flag}"
        ))),
        _ => Ok(()),
    }
}

fn load_poly(input: &PolyInput) -> Result<LaurentPoly, Failure> {
    let f: LaurentPoly = parse_payload(&input.file, "-f")?;
    check_arity(input.n, f.arity(), "-f")?;
    Ok(f)
}

fn parse_list(s: &str, flag: &str) -> Result<Vec<i64>, Failure> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| usage(format!("{flag}: {t:?} is not an integer")))
        })
        .collect()
}

fn parse_weight(s: &str, n: Option<usize>) -> Result<DominantWeight, Failure> {
    let v = parse_list(s, "--lambda")?;
    check_arity(n, v.len(), "--lambda")?;
    Ok(DominantWeight::new(v)?)
}

/// `a`, `-a`, `3a`, or a plain integer.
fn parse_a_token(t: &str, a: Option<i64>) -> Result<i64, Failure> {
    let t = t.trim();
    let Some(mult) = t.strip_suffix('a') else {
        return t.parse::<i64>().map_err(|_| {
            usage(format!(
                "--lambda: {t:?} is neither an integer nor a multiple of a"
            ))
        });
    };
    let a = a.ok_or_else(|| usage("--lambda mentions a but --a is missing"))?;
    let m = match mult {
        "" | "+" => 1,
        "-" => -1,
        m => m
            .parse::<i64>()
            .map_err(|_| usage(format!("--lambda: bad multiple {t:?}")))?,
    };
    Ok(m * a)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library values serialize")
}

fn window_lifter(w: &WindowArgs) -> Lifter {
    Lifter::new(w.max_window)
}

fn dispatch(cmd: Command) -> Result<Value, Failure> {
    match cmd {
        Command::Thinkac { n, lambda } => {
            let w = parse_weight(&lambda, Some(n))?;
            Ok(to_value(&sch_thin_kac(&w)))
        }
        Command::Schur { n, lambda, file } => match (lambda, file) {
            (Some(l), _) => Ok(to_value(&schur_poly(&parse_weight(&l, n)?))),
            (None, Some(f)) => {
                let p = load_poly(&PolyInput { n, file: f })?;
                Ok(to_value(&schur_expand(&p)?))
            }
            (None, None) => Err(usage("one of --lambda or -f is required")),
        },
        Command::Euler {
            n,
            gamma,
            lambda,
            a,
        } => {
            let gamma = parse_list(&gamma, "--gamma")?;
            check_arity(Some(n), gamma.len(), "--gamma")?;
            let lambda = lambda
                .split(',')
                .map(|t| parse_a_token(t, a))
                .collect::<Result<Vec<_>, _>>()?;
            check_arity(Some(n), lambda.len(), "--lambda")?;
            let e = euler_characteristic(&lambda, &gamma)?;
            Ok(json!({ "poly": to_value(&e.poly), "schur": to_value(&e.schur) }))
        }
        Command::Ds { input, k } => {
            let f = load_poly(&input)?;
            Ok(to_value(&ds_power(&f, k)?))
        }
        Command::Member { input } => {
            let f = load_poly(&input)?;
            Ok(to_value(&membership(&f)))
        }
        Command::KernelDecompose { input } => {
            let f = load_poly(&input)?;
            Ok(to_value(&kernel_decompose(&f)?))
        }
        Command::Theta {
            k,
            n,
            lambda,
            file,
            parity_shifted,
        } => {
            let class = match (lambda, file) {
                (Some(l), _) => KClass::basis(parse_weight(&l, n)?),
                (None, Some(f)) => {
                    let c: KClass = parse_payload(&f, "-f")?;
                    check_arity(n, c.arity(), "-f")?;
                    c
                }
                (None, None) => return Err(usage("one of --lambda or -f is required")),
            };
            let variant = if parity_shifted {
                Translation::ParityShifted
            } else {
                Translation::Plain
            };
            Ok(to_value(&theta_prime(k, &class, variant)))
        }
        Command::Lift {
            n, target, windows, ..
        } => {
            let h: LaurentPoly = parse_payload(&target, "-h")?;
            if h.arity() + 2 != n {
                return Err(usage(format!(
                    "-h has arity {} but --n {n} needs arity {}",
                    h.arity(),
                    n.saturating_sub(2)
                )));
            }
            let mut lifter = window_lifter(&windows);
            let f = match windows.window {
                Some(b) => lifter.lift_window(&h, n, Window::new(b))?,
                None => lifter.lift(&h, n)?,
            };
            Ok(to_value(&f))
        }
        Command::Certify { input, windows } => {
            let f = load_poly(&input)?;
            let cert = window_lifter(&windows).certify(&f)?;
            Ok(to_value(&cert))
        }
        Command::VerifySuite { seed } => {
            let reports = verify::run_all(seed);
            let passed = reports.iter().all(|r| r.passed);
            let v = json!({ "passed": passed, "seed": seed, "criteria": to_value(&reports) });
            if passed {
                Ok(v)
            } else {
                Err(Failure::Suite(v))
            }
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return Outcome {
                code,
                stdout,
                stderr,
            };
        }
    };
    match dispatch(cli.command) {
        Ok(v) => Outcome {
            code: 0,
            stdout: format!("{v}\n"),
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Domain(e)) => Outcome {
            code: 2,
            stdout: format!(
                "{}\n",
                json!({ "error": e.name(), "message": e.to_string() })
            ),
            stderr: format!("error: {e}\n"),
        },
        Err(Failure::Suite(v)) => Outcome {
            code: 2,
            stdout: format!("{v}\n"),
            stderr: "error: acceptance battery failed\n".to_string(),
        },
    }
}
