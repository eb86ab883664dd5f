//! The `hurwitz` command line: argument parsing and output formatting.
//!
//! [`run`] does all the work and returns the exit code together with the
//! text for stdout and stderr, so the binary is a two-line wrapper and the
//! front end can be tested in-process.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::cf::{euler_mindig, Convergent};
use crate::classify::{brute_force_sweep, sigma_class, theorem61_case, theorem71_case, SigmaTag};
use crate::error::Error;
use crate::fibpoly::{fib_poly, lucas_poly};
use crate::hurwitz::{
    block_convergent, closed_form_convergent, denom_stream, prec_recurrence_p, prec_recurrence_q,
    CFParams,
};
use crate::identities::coefficient_rows;
use crate::limits::{xi_bessel, xi_limit};
use crate::verify::{run_suite, Suite};
use crate::BigInt;

#[derive(Debug, Parser)]
#[command(
    name = "hurwitz",
    version,
    about = "Hurwitzian continued fractions: convergents, limits, classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Convergent of index n·d + r - 1.
    Conv {
        #[command(flatten)]
        params: ParamArgs,
        /// Block index.
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = ConvMethod::Recurrence)]
        method: ConvMethod,
        #[arg(long)]
        json: bool,
    },
    /// Certified decimal value of the continued fraction.
    Limit {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..=5000))]
        digits: u32,
        #[arg(long, value_enum, default_value_t = LimitMethod::Series)]
        method: LimitMethod,
        #[arg(long)]
        json: bool,
    },
    /// Class of the magic sum and the matching theorem cases.
    Classify {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive check of both classification theorems.
    Sweep {
        #[arg(long, default_value_t = 60)]
        alpha_max: u64,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(2..))]
        d_max: u64,
        #[arg(long, default_value_t = 20)]
        beta_max: u64,
        #[command(flatten)]
        jobs: JobsArg,
        #[arg(long)]
        json: bool,
    },
    /// Run a self-check suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[command(flatten)]
        jobs: JobsArg,
        #[arg(long)]
        json: bool,
    },
    /// Coefficient tables of F_n, L_n, P_n or Q_n (lowest degree first).
    Poly {
        #[arg(long, value_enum, ignore_case = true)]
        kind: PolyKind,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, Args)]
struct ParamArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    alpha: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    b0: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    b1: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    d: u64,
    #[arg(long, default_value_t = 0)]
    r: u64,
}

impl ParamArgs {
    fn params(&self) -> CFParams {
        CFParams {
            alpha: self.alpha,
            beta0: self.b0,
            beta1: self.b1,
            d: self.d,
            r: self.r,
        }
    }
}

#[derive(Debug, Clone, Copy, Args)]
struct JobsArg {
    /// Worker threads; 0 picks one per core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConvMethod {
    Recurrence,
    Closed,
    EulerMindig,
    PrecRecurrence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LimitMethod {
    Series,
    Bessel,
    Elementary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyKind {
    F,
    L,
    P,
    Q,
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stdout: String, stderr: String) -> Self {
        Self {
            code,
            stdout,
            stderr,
        }
    }

    fn error(e: Error) -> Self {
        let code = if matches!(e, Error::InvalidParams(_)) {
            2
        } else {
            1
        };
        Self::fail(code, String::new(), format!("error: {e}\n"))
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

fn conv(params: CFParams, n: u64, method: ConvMethod) -> crate::Result<Convergent> {
    params.validate()?;
    let idx = params.convergent_index(n);
    match method {
        ConvMethod::Recurrence => block_convergent(&params, n),
        ConvMethod::Closed => closed_form_convergent(&params, n),
        ConvMethod::EulerMindig if idx < 0 => block_convergent(&params, n),
        ConvMethod::EulerMindig => euler_mindig(&denom_stream(&params), idx as usize),
        ConvMethod::PrecRecurrence => {
            let p = prec_recurrence_p(&params, n).pop().expect("n + 1 entries");
            let q = prec_recurrence_q(&params, n).pop().expect("n + 1 entries");
            Ok(Convergent::new(idx, p, q))
        }
    }
}

fn limit(params: CFParams, digits: u32, method: LimitMethod) -> crate::Result<crate::PrecReal> {
    match method {
        LimitMethod::Series => xi_limit(&params, digits),
        LimitMethod::Bessel => xi_bessel(&params, digits),
        LimitMethod::Elementary => {
            params.validate()?;
            if sigma_class(&params).tag != SigmaTag::HalfOdd {
                return Err(Error::NotHalfOdd(params));
            }
            xi_bessel(&params, digits)
        }
    }
}

fn execute(cmd: Command) -> Outcome {
    match cmd {
        Command::Conv {
            params,
            n,
            method,
            json,
        } => {
            let params = params.params();
            match conv(params, n, method) {
                Ok(c) if json => Outcome::ok(to_json(&json!({
                    "params": params,
                    "index": c.n,
                    "p": c.p.to_string(),
                    "q": c.q.to_string(),
                }))),
                Ok(c) => Outcome::ok(format!("p={} q={} index={}\n", c.p, c.q, c.n)),
                Err(e) => Outcome::error(e),
            }
        }
        Command::Limit {
            params,
            digits,
            method,
            json,
        } => {
            let params = params.params();
            match limit(params, digits, method) {
                Ok(v) => {
                    let dec = v.to_decimal(digits);
                    if json {
                        Outcome::ok(to_json(&json!({
                            "params": params,
                            "digits": digits,
                            "value": dec.text,
                            "certified": dec.certified,
                        })))
                    } else {
                        Outcome::ok(format!("{}  ({} certified digits)\n", dec.text, digits))
                    }
                }
                Err(e) => Outcome::error(e),
            }
        }
        Command::Classify { params, json } => {
            let params = params.params();
            if let Err(e) = params.validate() {
                return Outcome::error(e);
            }
            let class = sigma_class(&params);
            let (t61, t71) = match (theorem61_case(&params), theorem71_case(&params)) {
                (Ok(a), Ok(b)) => (Some(a), Some(b)),
                _ => (None, None),
            };
            if json {
                return Outcome::ok(to_json(&json!({
                    "params": params,
                    "sigma": class.witness.to_string(),
                    "class": class.tag,
                    "theorem61": t61.map(|c| json!(c)).unwrap_or(json!("n/a")),
                    "theorem71": t71.map(|c| json!(c)).unwrap_or(json!("n/a")),
                })));
            }
            let case = |c: Option<Option<u8>>| match c {
                None => "n/a (d = 1)".to_string(),
                Some(None) => "no case".to_string(),
                Some(Some(k)) => format!("case ({k})"),
            };
            let tag = match class.tag {
                SigmaTag::HalfOdd => "half-odd",
                SigmaTag::Integer => "integer",
                SigmaTag::Other => "other",
            };
            Outcome::ok(format!(
                "sigma={} class={}\ntheorem 6.1: {}\ntheorem 7.1: {}\n",
                class.witness,
                tag,
                case(t61),
                case(t71)
            ))
        }
        Command::Sweep {
            alpha_max,
            d_max,
            beta_max,
            jobs,
            json,
        } => {
            let rep = with_pool(jobs.jobs, || brute_force_sweep(alpha_max, d_max, beta_max));
            let out = if json {
                to_json(&rep)
            } else {
                let mut s = String::new();
                for (k, v) in &rep.cases {
                    let _ = writeln!(s, "{k}: {v}");
                }
                for m in &rep.mismatches {
                    let _ = writeln!(s, "MISMATCH {} sigma={} ({:?})", m.params, m.sigma, m.tag);
                }
                let _ = writeln!(s, "mismatches: {}", rep.mismatches.len());
                s
            };
            if rep.is_clean() {
                Outcome::ok(out)
            } else {
                Outcome::fail(1, out, String::new())
            }
        }
        Command::Verify {
            suite,
            n_max,
            jobs,
            json,
        } => {
            let rep = with_pool(jobs.jobs, || run_suite(suite, n_max));
            let out = if json {
                to_json(&rep)
            } else {
                let mut s = String::new();
                for c in &rep.checks {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    let _ = write!(s, "{status} {}: {}", c.suite, c.name);
                    if !c.detail.is_empty() {
                        let _ = write!(s, " ({})", c.detail);
                    }
                    s.push('\n');
                }
                s
            };
            if rep.passed() {
                Outcome::ok(out)
            } else {
                Outcome::fail(1, out, String::new())
            }
        }
        Command::Poly { kind, n_max, json } => {
            let rows: Vec<Vec<BigInt>> = match kind {
                PolyKind::F => (0..=n_max as i64)
                    .map(|n| fib_poly(n).coeffs().to_vec())
                    .collect(),
                PolyKind::L => (0..=n_max as u64)
                    .map(|n| lucas_poly(n).coeffs().to_vec())
                    .collect(),
                PolyKind::P => coefficient_rows('P', n_max),
                PolyKind::Q => coefficient_rows('Q', n_max),
            };
            let name = format!("{kind:?}");
            if json {
                let rows: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| r.iter().map(ToString::to_string).collect())
                    .collect();
                Outcome::ok(to_json(&json!({ "kind": name, "rows": rows })))
            } else {
                let mut s = String::new();
                for (n, r) in rows.iter().enumerate() {
                    let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
                    let _ = writeln!(s, "{name}_{n}: {}", cells.join(" "));
                }
                Outcome::ok(s)
            }
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome::fail(2, String::new(), text)
            } else {
                Outcome::ok(text)
            }
        }
    }
}

/// Runs the command, writes its output, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let out = run(args);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(s: &str) -> Outcome {
        run(std::iter::once("hurwitz").chain(s.split_whitespace()))
    }

    #[test]
    fn conv_example() {
        let out = run_str("conv --alpha 1 --b0 2 --b1 2 --d 3 --r 2 --n 1");
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, "p=12 q=7 index=4\n");
    }

    #[test]
    fn all_conv_methods_agree() {
        let base = "conv --alpha 2 --b0 3 --b1 1 --d 3 --r 1 --n 4 --method";
        let outs: Vec<String> = ["recurrence", "closed", "euler-mindig", "prec-recurrence"]
            .iter()
            .map(|m| run_str(&format!("{base} {m}")).stdout)
            .collect();
        assert!(outs.iter().all(|o| o == &outs[0]), "{outs:?}");
    }

    #[test]
    fn flag_errors_exit_2() {
        assert_eq!(
            run_str("conv --alpha 1.5 --b0 2 --b1 2 --d 3 --n 1").code,
            2
        );
        assert_eq!(run_str("conv --alpha 0 --b0 2 --b1 2 --d 3 --n 1").code, 2);
        assert_eq!(run_str("frobnicate").code, 2);
        assert_eq!(run_str("verify --suite nope").code, 2);
    }

    #[test]
    fn closed_outside_regime_fails() {
        let out = run_str("conv --alpha 1 --b0 2 --b1 2 --d 3 --r 3 --n 1 --method closed");
        assert_eq!(out.code, 1);
        assert!(out.stderr.contains("0 <= r <= d-1"));
    }

    #[test]
    fn conv_json_round_trips() {
        let out = run_str("conv --alpha 1 --b0 1 --b1 2 --d 2 --r 1 --n 7 --json");
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert!(v["p"].is_string() && v["q"].is_string());
        let p: CFParams = serde_json::from_value(v["params"].clone()).unwrap();
        let again = run_str(&format!(
            "conv --alpha {} --b0 {} --b1 {} --d {} --r {} --n 7 --json",
            p.alpha, p.beta0, p.beta1, p.d, p.r
        ));
        assert_eq!(again.stdout, out.stdout);
        assert_eq!(v["index"], 14);
    }

    #[test]
    fn limit_tan_one() {
        let out = run_str("limit --alpha 1 --b0 1 --b1 2 --d 2 --r 1 --digits 30 --json");
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["value"], "1.55740772465490223050697480746");
        assert_eq!(v["certified"], true);
        assert_eq!(v["digits"], 30);
    }

    #[test]
    fn elementary_needs_half_odd() {
        let out = run_str("limit --alpha 3 --b0 1 --b1 1 --d 2 --method elementary");
        assert_eq!(out.code, 1);
        let ok =
            run_str("limit --alpha 4 --b0 3 --b1 1 --d 2 --r 1 --method elementary --digits 20");
        assert_eq!(ok.code, 0);
    }

    #[test]
    fn classify_output() {
        let out = run_str("classify --alpha 4 --b0 3 --b1 1 --d 2 --r 1");
        assert!(out.stdout.contains("sigma=7/2 class=half-odd"));
        assert!(out.stdout.contains("theorem 6.1: case (4)"));
        let d1 = run_str("classify --alpha 4 --b0 3 --b1 1 --d 1");
        assert!(d1.stdout.contains("n/a"));
    }

    #[test]
    fn sweep_json_shape() {
        let out = run_str("sweep --alpha-max 4 --d-max 3 --beta-max 4 --jobs 2 --json");
        assert_eq!(out.code, 0);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["mismatches"], serde_json::json!([]));
        assert!(v["cases"]["theorem61.case1"].as_u64().unwrap() > 0);
    }

    #[test]
    fn verify_identities() {
        assert_eq!(
            run_str("verify --suite identities --n-max 20 --jobs 2").code,
            0
        );
    }

    #[test]
    fn poly_tables() {
        let out = run_str("poly --kind Q --n-max 4");
        assert!(out.stdout.ends_with("Q_4: 24 18 1\n"));
        let out = run_str("poly --kind f --n-max 3 --json");
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["rows"][3], serde_json::json!(["1", "0", "1"]));
    }

    #[test]
    fn help_exits_zero() {
        assert_eq!(run_str("--help").code, 0);
    }
}
