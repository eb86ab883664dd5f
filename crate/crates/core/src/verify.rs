//! Batch self-checks, grouped by module. Each suite returns a list of named
//! checks in a fixed order; independent checks run on the current rayon pool.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::cf::{self, convergents, euler_mindig, shift_check, table_is_consistent};
use crate::classify::brute_force_sweep;
use crate::exactnum::{int, rat, BigInt, Rational};
use crate::fibpoly::{fib_generating_check, fib_poly, fib_via_even_sets};
use crate::hurwitz::{
    closed_form_convergent, denom_stream, prec_recurrence_p, prec_recurrence_q, CFParams,
};
use crate::identities::{gcf_convergent_check, pq_convergent_relations, verify_rsum, verify_ssum};
use crate::limits::{lehmer_d1, perron_d1, wlang_limit_check, xi_bessel, xi_limit};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Fibpoly,
    Cf,
    Hurwitz,
    Identities,
    Limits,
    Classify,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Fibpoly,
        Suite::Cf,
        Suite::Hurwitz,
        Suite::Identities,
        Suite::Limits,
        Suite::Classify,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Fibpoly => "fibpoly",
            Suite::Cf => "cf",
            Suite::Hurwitz => "hurwitz",
            Suite::Identities => "identities",
            Suite::Limits => "limits",
            Suite::Classify => "classify",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::EACH
            .iter()
            .chain(std::iter::once(&Suite::All))
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

type Job = Box<dyn Fn() -> (bool, String) + Send + Sync>;

fn job(f: impl Fn() -> (bool, String) + Send + Sync + 'static) -> Job {
    Box::new(f)
}

fn ok_if(pass: bool) -> (bool, String) {
    (pass, String::new())
}

fn from_result(r: crate::Result<bool>) -> (bool, String) {
    match r {
        Ok(b) => ok_if(b),
        Err(e) => (false, e.to_string()),
    }
}

fn small_grid() -> Vec<CFParams> {
    let mut out = Vec::new();
    for alpha in 1..=4 {
        for beta0 in 1..=4 {
            for beta1 in 1..=4 {
                for d in 1..=4 {
                    for r in 0..d {
                        out.push(CFParams {
                            alpha,
                            beta0,
                            beta1,
                            d,
                            r,
                        });
                    }
                }
            }
        }
    }
    out
}

fn fibpoly_jobs(n_max: usize) -> Vec<(String, Job)> {
    let mut jobs: Vec<(String, Job)> = Vec::new();
    jobs.push((
        format!("F_n via even sets, n <= {}", n_max.min(16)),
        job(move || ok_if((1..=n_max.min(16)).all(|n| fib_via_even_sets(n) == fib_poly(n as i64)))),
    ));
    jobs.push((
        format!("F_-n = (-1)^(n+1) F_n, n <= {n_max}"),
        job(move || {
            ok_if((0..=n_max as i64).all(|n| {
                let sign = if n % 2 == 0 { -1 } else { 1 };
                fib_poly(-n) == fib_poly(n).scale(&BigInt::from(sign))
            }))
        }),
    ));
    jobs.push((
        "generating function, α <= 4, d <= 5".into(),
        job(move || {
            ok_if((1..=4i64).all(|a| {
                (1..=5u64).all(|d| (0..=d).all(|r| fib_generating_check(d, r, &int(a), n_max)))
            }))
        }),
    ));
    jobs
}

fn cf_jobs(n_max: usize) -> Vec<(String, Job)> {
    let em = n_max.min(18);
    let mut jobs: Vec<(String, Job)> = Vec::new();
    jobs.push((
        "tan(1) prefix gives 81/52".into(),
        job(|| {
            let c = cf::convergent(&vec![1i64, 1, 1, 3, 1, 5], 5);
            ok_if(c.map(|c| (c.p, c.q) == (int(81), int(52))).unwrap_or(false))
        }),
    ));
    jobs.push((
        format!("Euler-Mindig = recurrence, index <= {em}"),
        job(move || {
            ok_if(small_grid().iter().step_by(7).all(|p| {
                let s = denom_stream(p);
                let table = convergents(&s, em).unwrap();
                (0..=em).all(|i| euler_mindig(&s, i).ok().as_ref() == Some(&table[i + 1]))
            }))
        }),
    ));
    jobs.push((
        format!("determinant and shift identities, index <= {n_max}"),
        job(move || {
            ok_if(small_grid().iter().all(|p| {
                let s = denom_stream(p);
                table_is_consistent(&convergents(&s, n_max).unwrap())
                    && shift_check(&s, n_max).unwrap_or(false)
            }))
        }),
    ));
    jobs
}

fn hurwitz_jobs(n_max: usize) -> Vec<(String, Job)> {
    let n_top = n_max.min(15) as u64;
    vec![(
        format!("closed form = recurrence = convolution, n <= {n_top}"),
        job(move || {
            for p in small_grid() {
                let s = denom_stream(&p);
                let table = convergents(&s, (n_top * p.d + p.r) as usize).unwrap();
                let (pp, pq) = (prec_recurrence_p(&p, n_top), prec_recurrence_q(&p, n_top));
                for n in 0..=n_top {
                    let rec = &table[(p.convergent_index(n) + 1) as usize];
                    let closed = match closed_form_convergent(&p, n) {
                        Ok(c) => c,
                        Err(e) => return (false, e.to_string()),
                    };
                    if &closed != rec || rec.p != pp[n as usize] || rec.q != pq[n as usize] {
                        return (false, format!("{p} n={n}"));
                    }
                }
            }
            ok_if(true)
        }),
    )]
}

fn identities_jobs(n_max: usize) -> Vec<(String, Job)> {
    let mut jobs: Vec<(String, Job)> = Vec::new();
    for n in 0..=n_max {
        jobs.push((
            format!("R summation, n = {n}"),
            job(move || ok_if(verify_rsum(n))),
        ));
        jobs.push((
            format!("S summation, n = {n}"),
            job(move || ok_if(verify_ssum(n))),
        ));
    }
    for m in 2..=4u64 {
        jobs.push((
            format!("p_(3n+1), q_(3n+1) through P_n, Q_n, m = {m}"),
            job(move || match pq_convergent_relations(m, 10) {
                Ok(()) => ok_if(true),
                Err(n) => (false, format!("fails at n = {n}")),
            }),
        ));
    }
    jobs.push((
        "P_n/Q_n is the generalized continued fraction, n <= 25".into(),
        job(|| {
            let xs = [rat(1, 4), rat(1, 16), rat(1, 1), rat(3, 7), rat(22, 5)];
            ok_if((1..=25).all(|n| xs.iter().all(|x| gcf_convergent_check(n, x))))
        }),
    ));
    jobs
}

/// `|ξ - p_N/q_N| < 1/q_N²` for the convergent of index `n`.
fn brackets(p: &CFParams, n: usize) -> (bool, String) {
    let c = cf::convergent(&denom_stream(p), n).unwrap();
    let digits = 2 * c.q.to_string().len() as u32 + 10;
    let xi = match xi_limit(p, digits) {
        Ok(v) => v,
        Err(e) => return (false, e.to_string()),
    };
    let approx = Rational::new(c.p, c.q.clone());
    let bound = Rational::new(BigInt::one(), &c.q * &c.q);
    ok_if(xi.max_distance_to(&approx) < bound)
}

fn limits_jobs(_n_max: usize) -> Vec<(String, Job)> {
    let examples = [
        CFParams {
            alpha: 1,
            beta0: 2,
            beta1: 2,
            d: 3,
            r: 2,
        },
        CFParams {
            alpha: 1,
            beta0: 1,
            beta1: 2,
            d: 2,
            r: 1,
        },
        CFParams {
            alpha: 4,
            beta0: 3,
            beta1: 1,
            d: 2,
            r: 1,
        },
        CFParams {
            alpha: 1,
            beta0: 5,
            beta1: 4,
            d: 3,
            r: 2,
        },
        CFParams {
            alpha: 1,
            beta0: 1,
            beta1: 1,
            d: 3,
            r: 2,
        },
        CFParams {
            alpha: 2,
            beta0: 1,
            beta1: 1,
            d: 2,
            r: 0,
        },
    ];
    let mut jobs: Vec<(String, Job)> = Vec::new();
    for p in examples {
        jobs.push((
            format!("convergents bracket the limit of {p}"),
            job(move || brackets(&p, 30)),
        ));
        jobs.push((
            format!("Bessel form = series form for {p}"),
            job(move || match (xi_bessel(&p, 25), xi_limit(&p, 25)) {
                (Ok(a), Ok(b)) => ok_if(a.overlaps(&b)),
                (Err(e), _) | (_, Err(e)) => (false, e.to_string()),
            }),
        ));
    }
    for (b0, b1) in [(1, 1), (3, 2), (5, 3), (7, 4)] {
        jobs.push((
            format!("Perron = Lehmer at ({b0}, {b1})"),
            job(
                move || match (perron_d1(b0, b1, 25), lehmer_d1(b0, b1, 25)) {
                    (Ok(a), Ok(b)) => ok_if(a.to_decimal(25).text == b.to_decimal(25).text),
                    (Err(e), _) | (_, Err(e)) => (false, e.to_string()),
                },
            ),
        ));
    }
    jobs.push((
        "P_50/Q_50 at m = 2 to 20 digits".into(),
        job(|| from_result(wlang_limit_check(2, 50, 20))),
    ));
    jobs.push((
        "P_40/Q_40 at m = 3 to 15 digits".into(),
        job(|| from_result(wlang_limit_check(3, 40, 15))),
    ));
    jobs
}

fn classify_jobs(n_max: usize) -> Vec<(String, Job)> {
    let beta = n_max.max(2) as u64;
    vec![(
        format!("both theorems, α <= 60, d <= 12, β <= {beta}"),
        job(move || {
            let rep = brute_force_sweep(60, 12, beta);
            if !rep.is_clean() {
                return (
                    false,
                    format!(
                        "{} mismatches, first {:?}",
                        rep.mismatches.len(),
                        rep.mismatches[0]
                    ),
                );
            }
            let zero: Vec<_> = rep
                .cases
                .iter()
                .filter(|(_, &v)| v == 0)
                .map(|(k, _)| k.clone())
                .collect();
            (
                zero.is_empty(),
                if zero.is_empty() {
                    String::new()
                } else {
                    format!("no hits: {}", zero.join(", "))
                },
            )
        }),
    )]
}

fn jobs_for(suite: Suite, n_max: usize) -> Vec<(String, Job)> {
    match suite {
        Suite::Fibpoly => fibpoly_jobs(n_max),
        Suite::Cf => cf_jobs(n_max),
        Suite::Hurwitz => hurwitz_jobs(n_max),
        Suite::Identities => identities_jobs(n_max),
        Suite::Limits => limits_jobs(n_max),
        Suite::Classify => classify_jobs(n_max),
        Suite::All => unreachable!(),
    }
}

/// Runs one suite (or all of them). `n_max` scales the index ranges.
pub fn run_suite(suite: Suite, n_max: usize) -> Report {
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    };
    let labelled: Vec<(Suite, String, Job)> = suites
        .into_iter()
        .flat_map(|s| jobs_for(s, n_max).into_iter().map(move |(n, j)| (s, n, j)))
        .collect();
    let checks = labelled
        .par_iter()
        .map(|(suite, name, j)| {
            let (passed, detail) = j();
            Check {
                suite: *suite,
                name: name.clone(),
                passed,
                detail,
            }
        })
        .collect();
    Report { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.iter().chain([Suite::All].iter()) {
            assert_eq!(s.name().parse::<Suite>(), Ok(*s));
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn identities_suite_passes() {
        let rep = run_suite(Suite::Identities, 8);
        assert!(rep.passed(), "{:?}", rep.failures().collect::<Vec<_>>());
        assert_eq!(rep.checks.len(), 2 * 9 + 3 + 1);
    }

    #[test]
    fn small_suites_pass() {
        for s in [Suite::Fibpoly, Suite::Cf, Suite::Hurwitz] {
            let rep = run_suite(s, 8);
            assert!(
                rep.passed(),
                "{s}: {:?}",
                rep.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn reports_are_deterministic() {
        assert_eq!(run_suite(Suite::Fibpoly, 6), run_suite(Suite::Fibpoly, 6));
    }
}
