//! Certified evaluation of `ξ(α, β₀, β₁, d, r)` as a real number.
//!
//! The limit is assembled from the two hypergeometric series
//!
//! ```text
//! A = sum_m ρ^m / (m! σ(σ+1)...(σ+m-1))
//! B = sum_m ρ^(m+1) / (m! σ(σ+1)...(σ+m))
//! ```
//!
//! or, equivalently, from ratios of Bessel functions `I` (odd `d`) or `J`
//! (even `d`) of order `σ`, `σ - 1` at the rational argument
//! `2/(β₁ F_d(α))`. Gamma factors always cancel, so no Gamma evaluator is
//! needed; at half-odd orders the Bessel functions are elementary.
//!
//! Every result is an interval. Public evaluators escalate the working
//! precision until the requested number of significant digits is certified,
//! capped by `HURWITZ_MAX_PRECISION` bits (default 10000).

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::elementary::{pi, sin_cos, sinh_cosh};
use crate::exactnum::{bits_for_digits, rat, rat_int, sign_pow, BigInt, PrecReal, Rational};
use crate::hurwitz::{magic, CFParams, MagicPair};
use crate::identities::{p_poly, q_poly};

/// Extra decimal digits carried by series truncation beyond the target.
pub const GUARD_DIGITS: u32 = 10;

pub const DEFAULT_MAX_PRECISION: u32 = 10_000;

/// Precision cap in bits, from `HURWITZ_MAX_PRECISION` when set.
pub fn max_precision() -> u32 {
    std::env::var("HURWITZ_MAX_PRECISION")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&b: &u32| b >= 64)
        .unwrap_or(DEFAULT_MAX_PRECISION)
}

/// Runs `attempt` at doubling precisions until its result prints `digits`
/// certified significant digits.
pub(crate) fn certify(
    digits: u32,
    mut attempt: impl FnMut(u32) -> Option<PrecReal>,
) -> Result<PrecReal> {
    let cap = max_precision();
    let mut prec = bits_for_digits(digits).min(cap);
    loop {
        if let Some(v) = attempt(prec) {
            if v.to_decimal(digits).certified {
                return Ok(v);
            }
        }
        if prec >= cap {
            return Err(Error::PrecisionExhausted { max_bits: cap });
        }
        prec = prec.saturating_mul(2).min(cap);
    }
}

/// Decimal digits a series must resolve when working at `prec` bits.
fn series_digits(prec: u32, digits: u32) -> u32 {
    digits.max(prec * 3 / 10)
}

fn ten_pow_neg(k: u32) -> Rational {
    Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10), k as usize))
}

/// A truncated series together with the bound that was added to its interval.
struct Summed {
    value: PrecReal,
    terms: usize,
    tail: Rational,
}

/// Sums `t_0 + t_1 + ...` with `t_{m+1} = t_m · ratio(m)`.
///
/// Stops after three consecutive terms below `10^-(digits+GUARD)` relative to
/// the partial sum, once `m + 1 > 2·scale` and `|ratio(m+1)| ≤ 1/2`. The
/// ratio magnitudes must be nonincreasing from there on, so the remainder is
/// at most `2|t_{m+1}|`.
fn hyper_sum(
    first: &Rational,
    ratio: impl Fn(u64) -> Rational,
    scale: &Rational,
    prec: u32,
    digits: u32,
) -> Summed {
    let eps = ten_pow_neg(digits + GUARD_DIGITS);
    let half = rat(1, 2);
    let mut term = PrecReal::from_rational(first, prec);
    let mut sum = term.clone();
    let mut run = 0;
    let mut m: u64 = 0;
    loop {
        let next = term.mul_rational(&ratio(m));
        let t_mag = term.mag_upper();
        let small = t_mag.is_zero() || t_mag < &eps * sum.mag_lower();
        run = if small { run + 1 } else { 0 };
        let past_peak = rat_int(BigInt::from(m + 1)) > scale * rat(2, 1);
        if run >= 3 && past_peak && ratio(m + 1).abs() <= half {
            let tail = next.mag_upper() * rat(2, 1);
            return Summed {
                value: sum.widen(&tail),
                terms: m as usize + 1,
                tail,
            };
        }
        sum = sum.add_ref(&next);
        term = next;
        m += 1;
    }
}

/// The pair `(A, B)` with the truncation data of the longer sum.
#[derive(Debug, Clone)]
pub struct SeriesValue {
    pub a: PrecReal,
    pub b: PrecReal,
    pub terms_used: usize,
    pub tail_bound: PrecReal,
}

fn series_ab_at(sigma: &Rational, rho: &Rational, prec: u32, digits: u32) -> SeriesValue {
    let abs_rho = rho.abs();
    let a = hyper_sum(
        &Rational::one(),
        |m| rho / (rat_int(BigInt::from(m + 1)) * (sigma + rat_int(BigInt::from(m)))),
        &abs_rho,
        prec,
        digits,
    );
    let b = hyper_sum(
        &(rho / sigma),
        |m| rho / (rat_int(BigInt::from(m + 1)) * (sigma + rat_int(BigInt::from(m + 1)))),
        &abs_rho,
        prec,
        digits,
    );
    let tail = a.tail.max(b.tail);
    SeriesValue {
        a: a.value,
        b: b.value,
        terms_used: a.terms.max(b.terms),
        tail_bound: PrecReal::from_rational(&tail, prec),
    }
}

/// `A` and `B` to relative accuracy `10^-digits`, for `σ > 0` and any `ρ`.
pub fn series_ab(sigma: &Rational, rho: &Rational, digits: u32) -> Result<SeriesValue> {
    if !sigma.is_positive() {
        return Err(Error::InvalidParams(format!(
            "series needs σ > 0, got {sigma}"
        )));
    }
    Ok(series_ab_at(sigma, rho, bits_for_digits(digits), digits))
}

/// Coefficients `(c_A, c_B)` of `c_A·A + c_B·B` for the numerator and the
/// denominator of the limit.
fn assembly(params: &CFParams) -> ((BigInt, BigInt), (BigInt, BigInt)) {
    let (d, r) = (params.d as i64, params.r as i64);
    let fdb = params.fib(d) * BigInt::from(params.beta1);
    let num = (
        params.fib(r + 1),
        params.fib(d - r - 1) * &fdb * sign_pow(d - r),
    );
    let den = (
        params.fib(r),
        params.fib(d - r) * &fdb * sign_pow(d - r + 1),
    );
    (num, den)
}

fn combine(c: &(BigInt, BigInt), sv: &SeriesValue) -> PrecReal {
    sv.a.mul_rational(&rat_int(c.0.clone()))
        .add_ref(&sv.b.mul_rational(&rat_int(c.1.clone())))
}

fn checked_sigma(params: &CFParams) -> Result<MagicPair> {
    params.validate()?;
    let mp = magic(params);
    if !mp.sigma.is_positive() {
        return Err(Error::InvalidParams(format!("{params} has σ ≤ 0")));
    }
    Ok(mp)
}

/// `F_{r+1}(α)·A + (-1)^(d-r) F_{d-r-1}(α) F_d(α) β₁ · B`, the limit of the
/// normalized numerators.
pub fn numerator_limit(params: &CFParams, digits: u32) -> Result<PrecReal> {
    let MagicPair { sigma, rho } = checked_sigma(params)?;
    let (num, _) = assembly(params);
    certify(digits, |prec| {
        let sv = series_ab_at(&sigma, &rho, prec, series_digits(prec, digits));
        Some(combine(&num, &sv))
    })
}

/// `F_r(α)·A + (-1)^(d-r+1) F_{d-r}(α) F_d(α) β₁ · B`, the limit of the
/// normalized denominators.
pub fn denominator_limit(params: &CFParams, digits: u32) -> Result<PrecReal> {
    let MagicPair { sigma, rho } = checked_sigma(params)?;
    let (_, den) = assembly(params);
    certify(digits, |prec| {
        let sv = series_ab_at(&sigma, &rho, prec, series_digits(prec, digits));
        Some(combine(&den, &sv))
    })
}

/// `ξ` from the series `A`, `B`.
pub fn xi_limit(params: &CFParams, digits: u32) -> Result<PrecReal> {
    let MagicPair { sigma, rho } = checked_sigma(params)?;
    let (num, den) = assembly(params);
    certify(digits, |prec| {
        let sv = series_ab_at(&sigma, &rho, prec, series_digits(prec, digits));
        combine(&num, &sv).checked_div(&combine(&den, &sv))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BesselKind {
    /// Modified Bessel function of the first kind.
    I,
    /// Bessel function of the first kind.
    J,
}

/// Order `k + 1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BesselOrderHalfOdd {
    pub k: i64,
}

impl BesselOrderHalfOdd {
    pub fn from_nu(nu: &Rational) -> Option<Self> {
        if *nu.denom() != BigInt::from(2) {
            return None;
        }
        let k = (nu - rat(1, 2)).to_integer();
        i64::try_from(k).ok().map(|k| Self { k })
    }

    pub fn nu(&self) -> Rational {
        rat(2 * self.k + 1, 2)
    }
}

/// `√(πz/2)·X_{k+1/2}(z)`: the half-odd Bessel function without its
/// `√(2/(πz))` prefactor, by the order recurrence from the `±1/2` seeds.
fn half_odd_reduced(kind: BesselKind, k: i64, z: &PrecReal) -> Option<PrecReal> {
    let prec = z.prec();
    let inv_z = PrecReal::one(prec).checked_div(z)?;
    let (odd, even) = match kind {
        BesselKind::I => sinh_cosh(z),
        BesselKind::J => sin_cos(z),
    };
    // (X_{j-1/2}, X_{j+1/2}) starting at j = 0.
    let (mut lower, mut upper) = (even, odd);
    let mut j: i64 = 0;
    while j < k {
        // X_{ν+1} from X_{ν-1}, X_ν with ν = j + 1/2.
        let c = inv_z.mul_rational(&rat(2 * j + 1, 1));
        let cx = c.mul_ref(&upper);
        let next = match kind {
            BesselKind::I => lower.sub_ref(&cx),
            BesselKind::J => cx.sub_ref(&lower),
        };
        lower = std::mem::replace(&mut upper, next);
        j += 1;
    }
    while j > k {
        // X_{ν-1} from X_ν, X_{ν+1} with ν = j - 1/2.
        let c = inv_z.mul_rational(&rat(2 * j - 1, 1));
        let cx = c.mul_ref(&lower);
        let prev = match kind {
            BesselKind::I => upper.add_ref(&cx),
            BesselKind::J => cx.sub_ref(&upper),
        };
        upper = std::mem::replace(&mut lower, prev);
        j -= 1;
    }
    Some(upper)
}

/// `X_{k+1/2}(z)` in closed form, including the `√(2/(πz))` prefactor.
/// Computed at the larger of `z`'s precision and the one implied by `digits`.
pub fn elementary_half_odd(
    kind: BesselKind,
    order: BesselOrderHalfOdd,
    z: &PrecReal,
    digits: u32,
) -> Result<PrecReal> {
    if !z.is_positive() {
        return Err(Error::InvalidParams(
            "half-odd closed forms need z > 0".into(),
        ));
    }
    let prec = z.prec().max(bits_for_digits(digits));
    let z = z.clone().with_prec(prec);
    let body = half_odd_reduced(kind, order.k, &z).expect("z excludes 0");
    let factor = PrecReal::from_int(2, prec)
        .checked_div(&pi(prec).mul_ref(&z))
        .and_then(|v| v.sqrt())
        .expect("2/(πz) is positive");
    Ok(body.mul_ref(&factor))
}

fn standalone(kind: BesselKind, nu: &Rational, z: &PrecReal, digits: u32) -> Result<PrecReal> {
    match BesselOrderHalfOdd::from_nu(nu) {
        Some(order) => elementary_half_odd(kind, order, z, digits),
        None => Err(Error::UnsupportedOrder(nu.to_string())),
    }
}

/// `I_ν(z)`; only half-odd `ν` have a standalone value here.
pub fn bessel_i(nu: &Rational, z: &PrecReal, digits: u32) -> Result<PrecReal> {
    standalone(BesselKind::I, nu, z, digits)
}

/// `J_ν(z)`; only half-odd `ν` have a standalone value here.
pub fn bessel_j(nu: &Rational, z: &PrecReal, digits: u32) -> Result<PrecReal> {
    standalone(BesselKind::J, nu, z, digits)
}

/// `sum_m w^m / (m! b(b+1)...(b+m-1))`.
fn zero_f_one(b: &Rational, w: &Rational, prec: u32, digits: u32) -> PrecReal {
    hyper_sum(
        &Rational::one(),
        |m| w / (rat_int(BigInt::from(m + 1)) * (b + rat_int(BigInt::from(m)))),
        &w.abs(),
        prec,
        digits,
    )
    .value
}

fn ratio_at(
    kind: BesselKind,
    sigma: &Rational,
    z: &Rational,
    prec: u32,
    digits: u32,
) -> Option<PrecReal> {
    if let Some(order) = BesselOrderHalfOdd::from_nu(sigma) {
        let zp = PrecReal::from_rational(z, prec);
        let hi = half_odd_reduced(kind, order.k, &zp)?;
        let lo = half_odd_reduced(kind, order.k - 1, &zp)?;
        return hi.checked_div(&lo);
    }
    let w = z * z / rat(4, 1);
    let w = match kind {
        BesselKind::I => w,
        BesselKind::J => -w,
    };
    let digits = series_digits(prec, digits);
    let top = zero_f_one(&(sigma + Rational::one()), &w, prec, digits);
    let bottom = zero_f_one(sigma, &w, prec, digits);
    Some(
        top.checked_div(&bottom)?
            .mul_rational(&(z / (rat(2, 1) * sigma))),
    )
}

/// `X_σ(z) / X_{σ-1}(z)` for `σ > 0` and rational `z > 0`. The Gamma factors
/// cancel; half-odd `σ` goes through the elementary closed forms.
pub fn bessel_ratio(
    kind: BesselKind,
    sigma: &Rational,
    z: &Rational,
    digits: u32,
) -> Result<PrecReal> {
    if !sigma.is_positive() || !z.is_positive() {
        return Err(Error::InvalidParams(
            "bessel_ratio needs σ > 0 and z > 0".into(),
        ));
    }
    certify(digits, |prec| ratio_at(kind, sigma, z, prec, digits))
}

/// Kind and rational argument `2/(β₁ F_d(α))` of the Bessel form of `ξ`.
pub fn bessel_argument(params: &CFParams) -> (BesselKind, Rational) {
    let kind = if params.d % 2 == 1 {
        BesselKind::I
    } else {
        BesselKind::J
    };
    let z = Rational::new(
        BigInt::from(2),
        params.fib(params.d as i64) * BigInt::from(params.beta1),
    );
    (kind, z)
}

/// `ξ` from the Bessel form: with `R = X_σ(z)/X_{σ-1}(z)`,
/// `ξ = (F_{r+1} + (-1)^(r+1) F_{d-r-1} R) / (F_r + (-1)^r F_{d-r} R)`.
pub fn xi_bessel(params: &CFParams, digits: u32) -> Result<PrecReal> {
    let MagicPair { sigma, .. } = checked_sigma(params)?;
    let (kind, z) = bessel_argument(params);
    let (d, r) = (params.d as i64, params.r as i64);
    let num = (params.fib(r + 1), params.fib(d - r - 1) * sign_pow(r + 1));
    let den = (params.fib(r), params.fib(d - r) * sign_pow(r));
    certify(digits, |prec| {
        let ratio = ratio_at(kind, &sigma, &z, prec, digits)?;
        let side = |c: &(BigInt, BigInt)| {
            ratio
                .mul_rational(&rat_int(c.1.clone()))
                .add_rational(&rat_int(c.0.clone()))
        };
        side(&num).checked_div(&side(&den))
    })
}

fn d1_check(beta0: u64, beta1: u64) -> Result<()> {
    if beta0 == 0 || beta1 == 0 {
        return Err(Error::InvalidParams("β₀ and β₁ must be positive".into()));
    }
    Ok(())
}

/// `I_{s-1}(2/β₁) / I_s(2/β₁)` with `s = β₀/β₁`, as `A/(β₁ B)` at
/// `σ = s`, `ρ = 1/β₁²`.
pub fn lehmer_d1(beta0: u64, beta1: u64, digits: u32) -> Result<PrecReal> {
    d1_check(beta0, beta1)?;
    let sigma = rat(beta0 as i64, beta1 as i64);
    let rho = rat(1, (beta1 * beta1) as i64);
    let b1 = rat(beta1 as i64, 1);
    certify(digits, |prec| {
        let sv = series_ab_at(&sigma, &rho, prec, series_digits(prec, digits));
        sv.a.checked_div(&sv.b.mul_rational(&b1))
    })
}

/// Perron's form `β₁ · sum x^n/(n! (s)_n) / sum x^n/(n! (s)_{n+1})` with
/// `x = 1/β₁²`, `s = β₀/β₁` and rising factorials `(s)_n`.
pub fn perron_d1(beta0: u64, beta1: u64, digits: u32) -> Result<PrecReal> {
    d1_check(beta0, beta1)?;
    let s = rat(beta0 as i64, beta1 as i64);
    let x = rat(1, (beta1 * beta1) as i64);
    let b1 = rat(beta1 as i64, 1);
    certify(digits, |prec| {
        let digits = series_digits(prec, digits);
        let top = zero_f_one(&s, &x, prec, digits);
        let bottom = hyper_sum(
            &(Rational::one() / &s),
            |n| &x / (rat_int(BigInt::from(n + 1)) * (&s + rat_int(BigInt::from(n + 1)))),
            &x,
            prec,
            digits,
        )
        .value;
        top.mul_rational(&b1).checked_div(&bottom)
    })
}

/// True iff `|P_n(x)/Q_n(x) - √x I_1(2√x)/I_0(2√x)| < 10^-digits` at
/// `x = 1/(4m²)`. The right side is `B/A` at `σ = 1`, `ρ = x`.
pub fn wlang_limit_check(m: u64, n: usize, digits: u32) -> Result<bool> {
    if m < 2 {
        return Err(Error::InvalidParams("wlang check needs m >= 2".into()));
    }
    let x = rat(1, (4 * m * m) as i64);
    let target = certify(digits + 5, |prec| {
        let sv = series_ab_at(&Rational::one(), &x, prec, series_digits(prec, digits + 5));
        sv.b.checked_div(&sv.a)
    })?;
    let q = q_poly(n).eval(&x);
    if q.is_zero() {
        return Ok(false);
    }
    let lhs = p_poly(n).eval(&x) / q;
    Ok(target.max_distance_to(&lhs) < ten_pow_neg(digits))
}
