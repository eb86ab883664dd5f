//! The family `ξ(α, β₀, β₁, d, r) = [α (r times), β₀, (α (d-1 times), β₀ + β₁ n)_{n≥1}]`.
//!
//! Three independent routes to the convergents of index `nd + r - 1` live
//! here and in [`crate::cf`]:
//!
//! * the classical recurrence on [`denom_stream`],
//! * the closed form in terms of the magic numbers ([`closed_form_convergent`]),
//! * the convolution recurrence over the arithmetic-progression positions
//!   ([`prec_recurrence_p`]).

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cf::{Convergent, DenomStream};
use crate::error::{Error, Result};
use crate::exactnum::{
    factorial, falling_factorial, rat_int, sign_pow, BigInt, CommonDenSum, PrecReal, Rational,
};
use crate::fibpoly::{fib_eval, lucas_eval};

/// The five integer parameters of `ξ(α, β₀, β₁, d, r)`.
///
/// `α, β₀, β₁, d ≥ 1` and `r ≥ 0`. Values with `r ≥ d` are accepted: the
/// stream and the recurrences work for them, but the closed form is only
/// guaranteed for `r ≤ d - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CFParams {
    pub alpha: u64,
    pub beta0: u64,
    pub beta1: u64,
    pub d: u64,
    pub r: u64,
}

impl fmt::Display for CFParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ξ({},{},{},{},{})",
            self.alpha, self.beta0, self.beta1, self.d, self.r
        )
    }
}

impl CFParams {
    pub fn new(alpha: u64, beta0: u64, beta1: u64, d: u64, r: u64) -> Result<Self> {
        let p = Self {
            alpha,
            beta0,
            beta1,
            d,
            r,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("alpha", self.alpha),
            ("beta0", self.beta0),
            ("beta1", self.beta1),
            ("d", self.d),
        ] {
            if v == 0 {
                return Err(Error::InvalidParams(format!("{name} must be positive")));
            }
        }
        Ok(())
    }

    pub fn in_guaranteed_regime(&self) -> bool {
        self.r < self.d
    }

    /// Index `nd + r - 1` of the convergent produced by block `n`.
    pub fn convergent_index(&self, n: u64) -> i64 {
        (n * self.d + self.r) as i64 - 1
    }

    pub(crate) fn alpha_big(&self) -> BigInt {
        BigInt::from(self.alpha)
    }

    /// `F_k(α)`.
    pub fn fib(&self, k: i64) -> BigInt {
        fib_eval(k, &self.alpha_big())
    }
}

/// The partial denominators of `ξ(α, β₀, β₁, d, r)`.
#[derive(Debug, Clone, Copy)]
pub struct HurwitzStream(pub CFParams);

impl HurwitzStream {
    pub fn at(&self, i: usize) -> BigInt {
        let p = &self.0;
        let (i, r, d) = (i as u64, p.r, p.d);
        if i < r {
            return BigInt::from(p.alpha);
        }
        let j = i - r;
        if j % d == 0 {
            BigInt::from(p.beta0) + BigInt::from(p.beta1) * BigInt::from(j / d)
        } else {
            BigInt::from(p.alpha)
        }
    }

    pub fn prefix(&self, len: usize) -> Vec<BigInt> {
        (0..len).map(|i| self.at(i)).collect()
    }
}

impl DenomStream for HurwitzStream {
    fn term(&self, i: usize) -> Option<BigInt> {
        Some(self.at(i))
    }
}

pub fn denom_stream(params: &CFParams) -> HurwitzStream {
    HurwitzStream(*params)
}

/// Magic sum `σ` and magic quotient `ρ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagicPair {
    pub sigma: Rational,
    pub rho: Rational,
}

/// `σ = (β₀ - α)/β₁ + L_d(α)/(β₁ F_d(α))`, `ρ = (-1)^(d-1) / (β₁ F_d(α))²`.
pub fn magic(params: &CFParams) -> MagicPair {
    let a = params.alpha_big();
    let b0 = BigInt::from(params.beta0);
    let b1 = BigInt::from(params.beta1);
    let fd = fib_eval(params.d as i64, &a);
    let ld = lucas_eval(params.d, &a);
    let sigma = Rational::new((&b0 - &a) * &fd + ld, &b1 * &fd);
    let bf = &b1 * &fd;
    let rho = Rational::new(BigInt::from(sign_pow(params.d as i64 - 1)), &bf * &bf);
    MagicPair { sigma, rho }
}

/// The two normalized sums of the closed form at block `n`:
///
/// `first  = sum_{k ≤ n/2} (n-k)!/k! · C(n+σ-1-k, n-2k) · ρ^k`
/// `second = sum_{k ≤ (n-1)/2} (n-k-1)!/k! · C(n+σ-1-k, n-2k-1) · ρ^(k+1)`
///
/// Each sum is accumulated over a common denominator and reduced once.
pub fn closed_form_sums(sigma: &Rational, rho: &Rational, n: u64) -> (Rational, Rational) {
    let n = n as usize;
    let first = sum_terms(sigma, rho, n, 0);
    let second = if n == 0 {
        Rational::zero()
    } else {
        sum_terms(sigma, rho, n, 1)
    };
    (first, second)
}

/// `sum_k (n-k-s)!/k! · C(n+σ-1-k, n-2k-s) · ρ^(k+s)` for `s ∈ {0, 1}`.
fn sum_terms(sigma: &Rational, rho: &Rational, n: usize, s: usize) -> Rational {
    let mut acc = CommonDenSum::new();
    let kmax = (n - s) / 2;
    for k in 0..=kmax {
        let j = n - 2 * k - s;
        let top = sigma + rat_int(BigInt::from(n as i64 - 1 - k as i64));
        let ff = falling_factorial(&top, j);
        let rho_pow = num_traits::pow(rho.clone(), k + s);
        let num = ff.numer() * factorial(n - k - s) * rho_pow.numer();
        let den = ff.denom() * factorial(k) * factorial(j) * rho_pow.denom();
        acc.add_parts(&num, &den);
    }
    acc.finish()
}

fn require_integer(r: Rational, params: &CFParams, n: u64, what: &'static str) -> Result<BigInt> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::NonIntegerResult {
            params: *params,
            n: n as usize,
            what,
        })
    }
}

/// The convergent of index `nd + r - 1` from the closed form in `σ` and `ρ`.
///
/// Only for `0 ≤ r ≤ d - 1`; see [`closed_form_convergent_experimental`].
pub fn closed_form_convergent(params: &CFParams, n: u64) -> Result<Convergent> {
    params.validate()?;
    if !params.in_guaranteed_regime() {
        return Err(Error::OutsideGuaranteedRegime(*params));
    }
    closed_form_any_r(params, n)
}

/// The closed form evaluated for any `r ≥ 0`, with `F` extended to negative
/// indices. Not a proven statement for `r ≥ d`.
pub fn closed_form_convergent_experimental(params: &CFParams, n: u64) -> Result<Convergent> {
    params.validate()?;
    closed_form_any_r(params, n)
}

fn closed_form_any_r(params: &CFParams, n: u64) -> Result<Convergent> {
    let MagicPair { sigma, rho } = magic(params);
    let (first, second) = closed_form_sums(&sigma, &rho, n);
    let (d, r) = (params.d as i64, params.r as i64);
    let fd = params.fib(d);
    let b1 = BigInt::from(params.beta1);
    let scale = rat_int(num_traits::pow(&fd * &b1, n as usize));
    let tail = rat_int(&fd * &b1) * &second;

    let p = (rat_int(params.fib(r + 1)) * &first
        + rat_int(params.fib(d - r - 1) * sign_pow(d - r)) * &tail)
        * &scale;
    let q = (rat_int(params.fib(r)) * &first
        + rat_int(params.fib(d - r) * sign_pow(d + 1 - r)) * &tail)
        * &scale;
    let p = require_integer(p, params, n, "numerator")?;
    let q = require_integer(q, params, n, "denominator")?;
    if !p.gcd(&q).is_one() {
        return Err(Error::NotCoprime {
            params: *params,
            n: n as usize,
        });
    }
    Ok(Convergent::new(params.convergent_index(n), p, q))
}

/// `p_{nd+r-1}` for `n = 0..=n_max` by
/// `p_{nd+r-1} = F_{nd+r+1}(α) + sum_{k<n} p_{kd+r-1} (β₀ + β₁k - α) F_{(n-k)d}(α)`.
pub fn prec_recurrence_p(params: &CFParams, n_max: u64) -> Vec<BigInt> {
    prec_recurrence(params, n_max, 1)
}

/// The same convolution for the denominators, seeded by `F_{nd+r}(α)`.
pub fn prec_recurrence_q(params: &CFParams, n_max: u64) -> Vec<BigInt> {
    prec_recurrence(params, n_max, 0)
}

fn prec_recurrence(params: &CFParams, n_max: u64, seed_shift: i64) -> Vec<BigInt> {
    let (d, r) = (params.d as i64, params.r as i64);
    let a = params.alpha_big();
    let mut out: Vec<BigInt> = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max as i64 {
        let mut p = fib_eval(n * d + r + seed_shift, &a);
        for (k, pk) in out.iter().enumerate() {
            let k = k as i64;
            let coef = BigInt::from(params.beta0) + BigInt::from(params.beta1) * k - &a;
            if coef.is_zero() {
                continue;
            }
            p += pk * coef * fib_eval((n - k) * d, &a);
        }
        out.push(p);
    }
    out
}

/// `q_{nd-1}` for `r = 0` from
/// `q_{nd-1} = F_d(α)^n β₁^(n-1) sum_{k ≤ (n-1)/2} (n-k-1)!/k! C(n+σ-1-k, n-2k-1) ρ^k`.
pub fn r0_denominator(params: &CFParams, n: u64) -> Result<BigInt> {
    if params.r != 0 {
        return Err(Error::InvalidParams("r0_denominator needs r = 0".into()));
    }
    if n == 0 {
        return Ok(BigInt::zero());
    }
    let MagicPair { sigma, rho } = magic(params);
    // The second closed-form sum carries ρ^(k+1); divide one ρ back out.
    let (_, second) = closed_form_sums(&sigma, &rho, n);
    let fd = params.fib(params.d as i64);
    let b1 = BigInt::from(params.beta1);
    let v = second / &rho
        * rat_int(num_traits::pow(fd, n as usize))
        * rat_int(num_traits::pow(b1, n as usize - 1));
    require_integer(v, params, n, "r=0 denominator")
}

/// `F_d(α)^n β₁^n (σ + n - 1)_n`, the normalizer of the block-`n` convergent.
pub fn normalizer(params: &CFParams, n: u64) -> Rational {
    let MagicPair { sigma, .. } = magic(params);
    let fd = params.fib(params.d as i64);
    let top = &sigma + rat_int(BigInt::from(n as i64 - 1));
    rat_int(num_traits::pow(fd * BigInt::from(params.beta1), n as usize))
        * falling_factorial(&top, n as usize)
}

/// `p_{nd+r-1} / (F_d(α)^n β₁^n (σ+n-1)_n)` exactly.
pub fn normalized_numerator_exact(params: &CFParams, n: u64) -> Result<Rational> {
    let p = block_convergent(params, n)?.p;
    Ok(rat_int(p) / normalizer(params, n))
}

/// `q_{nd+r-1} / (F_d(α)^n β₁^n (σ+n-1)_n)` exactly.
pub fn normalized_denominator_exact(params: &CFParams, n: u64) -> Result<Rational> {
    let q = block_convergent(params, n)?.q;
    Ok(rat_int(q) / normalizer(params, n))
}

/// The normalized numerator rendered as a [`PrecReal`] with `digits` digits.
pub fn normalized_numerator(params: &CFParams, n: u64, digits: u32) -> Result<PrecReal> {
    Ok(PrecReal::with_digits(
        &normalized_numerator_exact(params, n)?,
        digits,
    ))
}

/// The convergent of index `nd + r - 1` by the ordinary recurrence.
pub fn block_convergent(params: &CFParams, n: u64) -> Result<Convergent> {
    params.validate()?;
    let idx = params.convergent_index(n);
    let stream = denom_stream(params);
    if idx < 0 {
        return Ok(Convergent::new(-1, BigInt::one(), BigInt::zero()));
    }
    crate::cf::convergent(&stream, idx as usize)
}

/// True iff `σ > 0`, as it must be for every valid parameter tuple.
pub fn sigma_is_positive(params: &CFParams) -> bool {
    magic(params).sigma.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::{convergent, convergents};
    use crate::exactnum::{int, rat};

    fn params(a: u64, b0: u64, b1: u64, d: u64, r: u64) -> CFParams {
        CFParams::new(a, b0, b1, d, r).unwrap()
    }

    #[test]
    fn stream_examples() {
        let s = denom_stream(&params(1, 2, 2, 3, 2)).prefix(9);
        assert_eq!(s, [1, 1, 2, 1, 1, 4, 1, 1, 6].map(int));
        let s = denom_stream(&params(1, 1, 2, 2, 1)).prefix(8);
        assert_eq!(s, [1, 1, 1, 3, 1, 5, 1, 7].map(int));
        let s = denom_stream(&params(4, 3, 1, 2, 1)).prefix(11);
        assert_eq!(s, [4, 3, 4, 4, 4, 5, 4, 6, 4, 7, 4].map(int));
    }

    #[test]
    fn rejects_zero_parameters() {
        assert!(CFParams::new(0, 1, 1, 1, 0).is_err());
        assert!(CFParams::new(1, 1, 1, 0, 0).is_err());
        assert!(CFParams::new(1, 1, 1, 1, 5).is_ok());
    }

    #[test]
    fn magic_examples() {
        let m = magic(&params(1, 2, 2, 3, 2));
        assert_eq!(m.sigma, rat(3, 2));
        assert_eq!(m.rho, rat(1, 16));
        for (a, b0, b1) in [(1, 3, 2), (5, 7, 3), (2, 2, 9)] {
            assert_eq!(
                magic(&params(a, b0, b1, 1, 0)).sigma,
                rat(b0 as i64, b1 as i64)
            );
        }
        for (b0, b1) in [(1, 1), (3, 2), (6, 4)] {
            assert_eq!(
                magic(&params(2, b0, b1, 2, 0)).sigma,
                rat(b0 as i64 + 1, b1 as i64)
            );
        }
        // ρ for even d is negative
        assert_eq!(magic(&params(1, 1, 2, 2, 1)).rho, rat(-1, 4));
    }

    #[test]
    fn magic_independent_of_r() {
        for r in 0..6 {
            assert_eq!(magic(&params(3, 5, 2, 4, r)), magic(&params(3, 5, 2, 4, 0)));
        }
    }

    #[test]
    fn closed_form_examples() {
        let p = params(1, 2, 2, 3, 2);
        let c = closed_form_convergent(&p, 1).unwrap();
        assert_eq!((c.n, c.p, c.q), (4, int(12), int(7)));
        let c = closed_form_convergent(&p, 0).unwrap();
        assert_eq!((c.n, c.p, c.q), (1, int(2), int(1)));

        let t = params(1, 1, 2, 2, 1);
        let c = closed_form_convergent(&t, 2).unwrap();
        assert_eq!(c.n, 4);
        assert_eq!(c, convergent(&denom_stream(&t), 4).unwrap());
    }

    #[test]
    fn closed_form_r0_start_is_formal_convergent() {
        let c = closed_form_convergent(&params(2, 3, 1, 3, 0), 0).unwrap();
        assert_eq!((c.n, c.p, c.q), (-1, int(1), int(0)));
    }

    #[test]
    fn closed_form_refuses_r_at_least_d() {
        let p = params(1, 2, 2, 3, 3);
        assert_eq!(
            closed_form_convergent(&p, 2),
            Err(Error::OutsideGuaranteedRegime(p))
        );
    }

    #[test]
    fn prec_examples() {
        let p = params(1, 2, 2, 3, 2);
        let v = prec_recurrence_p(&p, 1);
        assert_eq!(v, vec![int(2), int(12)]);
        let t = params(1, 1, 2, 2, 1);
        let v = prec_recurrence_p(&t, 3);
        assert_eq!(v[3], convergent(&denom_stream(&t), 6).unwrap().p);
    }

    #[test]
    fn small_grid_three_way() {
        for a in 1..=3 {
            for b0 in 1..=3 {
                for b1 in 1..=3 {
                    for d in 1..=3 {
                        for r in 0..d {
                            let p = params(a, b0, b1, d, r);
                            let table =
                                convergents(&denom_stream(&p), (8 * d + r) as usize).unwrap();
                            let prec = prec_recurrence_p(&p, 8);
                            let prec_q = prec_recurrence_q(&p, 8);
                            for n in 0..=8u64 {
                                let c = closed_form_convergent(&p, n).unwrap();
                                let idx = p.convergent_index(n);
                                assert_eq!(c, table[(idx + 1) as usize], "{p} n={n}");
                                assert_eq!(c.p, prec[n as usize], "{p} n={n}");
                                assert_eq!(c.q, prec_q[n as usize], "{p} n={n}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn r0_denominator_matches_recurrence() {
        for a in 1..=3 {
            for d in 1..=4 {
                for (b0, b1) in [(1, 1), (2, 3), (4, 2)] {
                    let p = params(a, b0, b1, d, 0);
                    for n in 0..=8 {
                        assert_eq!(
                            r0_denominator(&p, n).unwrap(),
                            block_convergent(&p, n).unwrap().q
                        );
                    }
                }
            }
        }
        assert!(r0_denominator(&params(1, 1, 1, 2, 1), 3).is_err());
    }

    #[test]
    fn normalized_numerator_example() {
        let p = params(1, 2, 2, 3, 2);
        assert_eq!(normalized_numerator_exact(&p, 1).unwrap(), rat(2, 1));
        let v = normalized_numerator(&p, 1, 20).unwrap();
        assert!(v.is_exact());
        assert_eq!(normalizer(&p, 1), rat(6, 1));
    }

    #[test]
    fn sigma_positive_and_pochhammer_positive() {
        for a in 1..=6 {
            for d in 1..=6 {
                for b0 in 1..=4 {
                    for b1 in 1..=4 {
                        let p = params(a, b0, b1, d, 0);
                        assert!(sigma_is_positive(&p));
                        let s = magic(&p).sigma;
                        for n in [1usize, 7, 50, 100] {
                            let top = &s + rat_int(int(n as i64 - 1));
                            assert!(falling_factorial(&top, n).is_positive());
                        }
                    }
                }
            }
        }
    }
}
