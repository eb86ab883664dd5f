//! Which parameter tuples give a half-odd or an integer magic sum `σ`.
//!
//! Half-odd `σ` makes the Bessel functions in the limit elementary. The two
//! classification theorems list exactly which `(α, d)` admit such `σ` when
//! `d ≥ 2`; [`brute_force_sweep`] confirms them over a box of parameters.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{BigInt, Rational};
use crate::fibpoly::{fib_eval, lucas_eval};
use crate::hurwitz::{magic, CFParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SigmaTag {
    HalfOdd,
    Integer,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaClass {
    pub tag: SigmaTag,
    pub witness: Rational,
}

fn tag_of(sigma: &Rational) -> SigmaTag {
    if sigma.denom().is_one() {
        SigmaTag::Integer
    } else if *sigma.denom() == BigInt::from(2) {
        SigmaTag::HalfOdd
    } else {
        SigmaTag::Other
    }
}

pub fn sigma_class(params: &CFParams) -> SigmaClass {
    let sigma = magic(params).sigma;
    SigmaClass {
        tag: tag_of(&sigma),
        witness: sigma,
    }
}

fn quotient(num: u64, den: u64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn is_half_odd(q: &Rational) -> bool {
    *q.denom() == BigInt::from(2)
}

fn is_int(q: &Rational) -> bool {
    q.denom().is_one()
}

fn require_d(params: &CFParams) -> Result<()> {
    if params.d < 2 {
        return Err(Error::UnsupportedD(params.d));
    }
    Ok(())
}

/// The matching case (1-4) of the half-odd theorem, if any:
///
/// 1. `d = 3`, `α = 1`, `(β₀+1)/β₁` half of an odd integer;
/// 2. `d = 2`, `α = 1`, `(β₀+2)/β₁` half of an odd integer;
/// 3. `d = 2`, `α = 2`, `(β₀+1)/β₁` half of an odd integer;
/// 4. `d = 2`, `α = 4`, `(2β₀+1)/β₁` an integer.
pub fn theorem61_case(params: &CFParams) -> Result<Option<u8>> {
    require_d(params)?;
    let CFParams {
        alpha,
        beta0: b0,
        beta1: b1,
        d,
        ..
    } = *params;
    let case = match (d, alpha) {
        (3, 1) if is_half_odd(&quotient(b0 + 1, b1)) => Some(1),
        (2, 1) if is_half_odd(&quotient(b0 + 2, b1)) => Some(2),
        (2, 2) if is_half_odd(&quotient(b0 + 1, b1)) => Some(3),
        (2, 4) if is_int(&quotient(2 * b0 + 1, b1)) => Some(4),
        _ => None,
    };
    Ok(case)
}

/// The matching case (1-3) of the integer theorem, if any: the same `(d, α)`
/// pairs and quotients as cases 1-3 of [`theorem61_case`], with the quotient
/// an integer.
pub fn theorem71_case(params: &CFParams) -> Result<Option<u8>> {
    require_d(params)?;
    let CFParams {
        alpha,
        beta0: b0,
        beta1: b1,
        d,
        ..
    } = *params;
    let case = match (d, alpha) {
        (3, 1) if is_int(&quotient(b0 + 1, b1)) => Some(1),
        (2, 1) if is_int(&quotient(b0 + 2, b1)) => Some(2),
        (2, 2) if is_int(&quotient(b0 + 1, b1)) => Some(3),
        _ => None,
    };
    Ok(case)
}

pub fn theorem61_predicate(params: &CFParams) -> Result<bool> {
    Ok(theorem61_case(params)?.is_some())
}

pub fn theorem71_predicate(params: &CFParams) -> Result<bool> {
    Ok(theorem71_case(params)?.is_some())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub params: CFParams,
    pub sigma: String,
    pub tag: SigmaTag,
    pub theorem61: bool,
    pub theorem71: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub mismatches: Vec<Mismatch>,
    /// Hit counts keyed `theorem61.case1` ... `theorem71.case3`, plus the
    /// number of tuples checked under `checked`.
    pub cases: BTreeMap<String, u64>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// The first mismatch as an error.
    pub fn check(&self) -> Result<()> {
        match self.mismatches.first() {
            None => Ok(()),
            Some(m) => Err(Error::TheoremMismatch {
                params: m.params,
                detail: format!(
                    "σ = {} ({:?}) but theorem 6.1 says {} and theorem 7.1 says {}",
                    m.sigma, m.tag, m.theorem61, m.theorem71
                ),
            }),
        }
    }

    fn merge(mut self, other: Self) -> Self {
        self.mismatches.extend(other.mismatches);
        for (k, v) in other.cases {
            *self.cases.entry(k).or_insert(0) += v;
        }
        self
    }

    pub fn case_count(&self, theorem: u8, case: u8) -> u64 {
        self.cases
            .get(&format!("theorem{theorem}.case{case}"))
            .copied()
            .unwrap_or(0)
    }
}

fn empty_cases() -> BTreeMap<String, u64> {
    let mut cases = BTreeMap::new();
    for c in 1..=4 {
        cases.insert(format!("theorem61.case{c}"), 0);
    }
    for c in 1..=3 {
        cases.insert(format!("theorem71.case{c}"), 0);
    }
    cases.insert("checked".into(), 0);
    cases
}

fn sweep_slice(alpha: u64, d: u64, beta_max: u64) -> SweepReport {
    let a = BigInt::from(alpha);
    let fd = fib_eval(d as i64, &a);
    let ld = lucas_eval(d, &a);
    let mut report = SweepReport {
        mismatches: Vec::new(),
        cases: empty_cases(),
    };
    for b0 in 1..=beta_max {
        for b1 in 1..=beta_max {
            let params = CFParams {
                alpha,
                beta0: b0,
                beta1: b1,
                d,
                r: 0,
            };
            // σ = ((β₀ - α) F_d + L_d) / (β₁ F_d), reduced.
            let num = (BigInt::from(b0) - &a) * &fd + &ld;
            let den = BigInt::from(b1) * &fd;
            let g = num.gcd(&den);
            let reduced_den = &den / &g;
            let tag = if reduced_den.is_one() {
                SigmaTag::Integer
            } else if reduced_den == BigInt::from(2) {
                SigmaTag::HalfOdd
            } else {
                SigmaTag::Other
            };
            let c61 = theorem61_case(&params).expect("d >= 2");
            let c71 = theorem71_case(&params).expect("d >= 2");
            if let Some(c) = c61 {
                *report.cases.get_mut(&format!("theorem61.case{c}")).unwrap() += 1;
            }
            if let Some(c) = c71 {
                *report.cases.get_mut(&format!("theorem71.case{c}")).unwrap() += 1;
            }
            *report.cases.get_mut("checked").unwrap() += 1;
            let ok = (tag == SigmaTag::HalfOdd) == c61.is_some()
                && (tag == SigmaTag::Integer) == c71.is_some();
            if !ok {
                let sigma = Rational::new(num, den);
                report.mismatches.push(Mismatch {
                    params,
                    sigma: sigma.to_string(),
                    tag,
                    theorem61: c61.is_some(),
                    theorem71: c71.is_some(),
                });
            }
        }
    }
    report
}

/// Checks both theorems for every `α ≤ alpha_max`, `2 ≤ d ≤ d_max`,
/// `β₀, β₁ ≤ beta_max`. Work is split over `(α, d)` on the current rayon
/// pool; the report is independent of the pool size.
pub fn brute_force_sweep(alpha_max: u64, d_max: u64, beta_max: u64) -> SweepReport {
    let slices: Vec<(u64, u64)> = (1..=alpha_max)
        .flat_map(|a| (2..=d_max).map(move |d| (a, d)))
        .collect();
    let parts: Vec<SweepReport> = slices
        .par_iter()
        .map(|&(a, d)| sweep_slice(a, d, beta_max))
        .collect();
    parts.into_iter().fold(
        SweepReport {
            mismatches: Vec::new(),
            cases: empty_cases(),
        },
        SweepReport::merge,
    )
}

/// `0 < L_d(α) - α F_d(α) < F_d(α)`, the inequality that rules out
/// `σ ∈ ½ℤ` for `α ≥ 2`, `d ≥ 3`.
pub fn lucas_gap_in_range(alpha: u64, d: u64) -> bool {
    let a = BigInt::from(alpha);
    let fd = fib_eval(d as i64, &a);
    let gap = lucas_eval(d, &a) - &a * &fd;
    gap > BigInt::zero() && gap < fd
}
