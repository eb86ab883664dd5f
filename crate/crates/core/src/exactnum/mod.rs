//! Exact integer and rational arithmetic, the falling-factorial kernels, and
//! the certified real type [`PrecReal`] used wherever a limit has to be
//! rendered as digits.

mod decimal;
mod dyadic;
pub mod elementary;
mod precreal;

use num_integer::Integer;
use num_traits::{One, Zero};

pub use decimal::Decimal;
pub use dyadic::Dyadic;
pub use precreal::{bits_for_digits, PrecReal};

pub type BigInt = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// `x (x-1) ... (x-k+1)`, the empty product when `k = 0`.
pub fn falling_factorial(x: &Rational, k: usize) -> Rational {
    // Multiply numerators and denominators separately and reduce once.
    let (n, d) = (x.numer(), x.denom());
    let mut num = BigInt::one();
    let mut term = n.clone();
    for _ in 0..k {
        num *= &term;
        term -= d;
    }
    Rational::new(num, num_traits::pow(d.clone(), k))
}

/// Generalized binomial coefficient `(x)_k / k!`.
pub fn gbinom(x: &Rational, k: usize) -> Rational {
    falling_factorial(x, k) / rat_int(factorial(k))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n as u64).fold(BigInt::one(), |acc, i| acc * i)
}

/// Ordinary binomial coefficient for nonnegative integer arguments; zero
/// when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `(-1)^e` for a signed exponent.
pub fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Sum of rationals over a growing common denominator, reduced once at the
/// end.
#[derive(Debug, Clone)]
pub struct CommonDenSum {
    num: BigInt,
    den: BigInt,
}

impl Default for CommonDenSum {
    fn default() -> Self {
        Self::new()
    }
}

impl CommonDenSum {
    pub fn new() -> Self {
        Self {
            num: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    /// Adds `num / den` (`den > 0`, not necessarily reduced).
    pub fn add_parts(&mut self, num: &BigInt, den: &BigInt) {
        if num.is_zero() {
            return;
        }
        if den.is_one() {
            self.num += num * &self.den;
            return;
        }
        let lcm = self.den.lcm(den);
        let self_scale = &lcm / &self.den;
        let term_scale = &lcm / den;
        self.num = &self.num * self_scale + num * term_scale;
        self.den = lcm;
    }

    pub fn add(&mut self, r: &Rational) {
        self.add_parts(r.numer(), r.denom());
    }

    pub fn finish(self) -> Rational {
        Rational::new(self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(&rat(3, 2), 0), rat(1, 1));
        assert_eq!(falling_factorial(&rat(5, 2), 2), rat(15, 4));
        // (sigma + n - 1)_n at sigma = 3/2, n = 3
        let sigma = rat(3, 2);
        let x = &sigma + rat_int(2);
        assert_eq!(falling_factorial(&x, 3), rat(105, 8));
        assert_eq!(falling_factorial(&x, 3), rat(7, 2) * rat(5, 2) * rat(3, 2));
    }

    #[test]
    fn gbinom_examples() {
        assert_eq!(gbinom(&rat(3, 2), 1), rat(3, 2));
        assert_eq!(gbinom(&rat(3, 2), 0), rat(1, 1));
        assert_eq!(gbinom(&rat(5, 2), 2), rat(15, 8));
    }

    #[test]
    fn falling_factorial_through_zero() {
        assert_eq!(falling_factorial(&rat(2, 1), 5), rat(0, 1));
        assert_eq!(falling_factorial(&rat(-1, 1), 3), rat(-6, 1));
    }

    #[test]
    fn gbinom_matches_pascal_triangle() {
        let mut row = vec![BigInt::one()];
        for m in 0..=40u64 {
            for (k, c) in row.iter().enumerate() {
                assert_eq!(gbinom(&rat_int(m as i64), k), rat_int(c.clone()));
                assert_eq!(binomial(m, k as u64), *c);
            }
            let mut next = vec![BigInt::one(); row.len() + 1];
            for k in 1..row.len() {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
        }
    }

    #[test]
    fn common_den_sum_reduces_once() {
        let mut s = CommonDenSum::new();
        s.add(&rat(1, 6));
        s.add(&rat(1, 3));
        s.add_parts(&int(2), &int(4));
        assert_eq!(s.finish(), rat(1, 1));
    }
}
