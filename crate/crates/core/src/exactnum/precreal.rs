use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::decimal::Decimal;
use super::dyadic::{Dyadic, Round};
use super::{BigInt, Rational};

/// Working precision in bits for a request of `digits` decimal digits:
/// `ceil(3.33 * digits) + 64` guard bits.
pub fn bits_for_digits(digits: u32) -> u32 {
    (digits * 333).div_ceil(100) + 64
}

/// A real number known to lie in the closed interval `[lo, hi]`.
///
/// Both endpoints are binary floats with at most `prec` significant bits and
/// every operation rounds them outward, so the true value of any expression
/// built from exact inputs always stays inside the interval.
/// `target_rel_err` records the accuracy the caller asked for; the achieved
/// bound is [`PrecReal::rel_error_bound`].
#[derive(Clone, PartialEq, Eq)]
pub struct PrecReal {
    lo: Dyadic,
    hi: Dyadic,
    prec: u32,
    target_rel_err: Rational,
}

impl fmt::Debug for PrecReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PrecReal[{} .. {}; {} bits]",
            self.lo.to_rational(),
            self.hi.to_rational(),
            self.prec
        )
    }
}

impl fmt::Display for PrecReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.certified_digits().clamp(1, 60);
        write!(f, "{}", self.to_decimal(digits).text)
    }
}

fn default_target(prec: u32) -> Rational {
    Rational::new(
        BigInt::one(),
        BigInt::one() << prec.saturating_sub(64) as usize,
    )
}

impl PrecReal {
    fn from_bounds(lo: Dyadic, hi: Dyadic, prec: u32, target: Rational) -> Self {
        debug_assert!(lo <= hi, "inverted interval");
        Self {
            lo,
            hi,
            prec,
            target_rel_err: target,
        }
    }

    /// Encloses the exact rational `r` at `prec` bits.
    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        let lo = Dyadic::from_rational(r, prec, Round::Down);
        let hi = Dyadic::from_rational(r, prec, Round::Up);
        Self::from_bounds(lo, hi, prec, default_target(prec))
    }

    /// `r` to relative error `10^-digits` (exact when `r` is a short dyadic).
    pub fn with_digits(r: &Rational, digits: u32) -> Self {
        let mut v = Self::from_rational(r, bits_for_digits(digits));
        v.target_rel_err = Rational::new(
            BigInt::one(),
            num_traits::pow(BigInt::from(10), digits as usize),
        );
        v
    }

    pub fn from_int(v: i64, prec: u32) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(v)), prec)
    }

    pub fn zero(prec: u32) -> Self {
        Self::from_int(0, prec)
    }

    pub fn one(prec: u32) -> Self {
        Self::from_int(1, prec)
    }

    /// The interval `[-r, r]` for a nonnegative rational `r`.
    pub fn plus_minus(r: &Rational, prec: u32) -> Self {
        let hi = Dyadic::from_rational(&r.abs(), prec, Round::Up);
        Self::from_bounds(hi.neg(), hi, prec, default_target(prec))
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn target_rel_err(&self) -> &Rational {
        &self.target_rel_err
    }

    pub fn with_target(mut self, target: Rational) -> Self {
        self.target_rel_err = target;
        self
    }

    pub fn lo(&self) -> Rational {
        self.lo.to_rational()
    }

    pub fn hi(&self) -> Rational {
        self.hi.to_rational()
    }

    pub fn mid(&self) -> Rational {
        (self.lo() + self.hi()) / Rational::from_integer(BigInt::from(2))
    }

    /// Half the interval width.
    pub fn radius(&self) -> Rational {
        (self.hi() - self.lo()) / Rational::from_integer(BigInt::from(2))
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.signum() <= 0 && self.hi.signum() >= 0
    }

    pub fn contains(&self, r: &Rational) -> bool {
        self.lo() <= *r && *r <= self.hi()
    }

    pub fn is_positive(&self) -> bool {
        self.lo.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.hi.signum() < 0
    }

    /// Upper bound on `|x|` over the interval.
    pub fn mag_upper(&self) -> Rational {
        self.lo.abs().max(self.hi.abs()).to_rational()
    }

    /// Lower bound on `|x|` over the interval (zero if it straddles zero).
    pub fn mag_lower(&self) -> Rational {
        if self.contains_zero() {
            Rational::zero()
        } else {
            self.lo.abs().min(self.hi.abs()).to_rational()
        }
    }

    /// Guaranteed bound on `|x - mid| / |x|`, or `None` if the interval
    /// contains zero (the exact zero interval reports `Some(0)`).
    pub fn rel_error_bound(&self) -> Option<Rational> {
        if self.is_exact() {
            return Some(Rational::zero());
        }
        if self.contains_zero() {
            return None;
        }
        Some(self.radius() / self.mag_lower())
    }

    pub fn meets_target(&self) -> bool {
        self.rel_error_bound()
            .is_some_and(|e| e <= self.target_rel_err)
    }

    /// Largest `k` such that the relative error bound is at most `10^-k`.
    pub fn certified_digits(&self) -> u32 {
        let Some(err) = self.rel_error_bound() else {
            return 0;
        };
        if err.is_zero() {
            return u32::MAX;
        }
        let ten = Rational::from_integer(BigInt::from(10));
        let mut k = 0u32;
        let mut scaled = err;
        while scaled <= Rational::one() / &ten {
            scaled *= &ten;
            k += 1;
        }
        k
    }

    /// Renders the midpoint with `digits` significant digits.
    ///
    /// `certified` is true iff every point of the interval is within one
    /// unit in the last printed place of the rendered value.
    pub fn to_decimal(&self, digits: u32) -> Decimal {
        Decimal::render(self, digits)
    }

    /// Same interval carried at `prec` bits for subsequent operations.
    pub fn with_prec(mut self, prec: u32) -> Self {
        self.prec = prec;
        self.lo = self.lo.round(prec, Round::Down);
        self.hi = self.hi.round(prec, Round::Up);
        self
    }

    fn result_prec(&self, other: &Self) -> u32 {
        self.prec.max(other.prec)
    }

    fn result_target(&self, other: &Self) -> Rational {
        self.target_rel_err
            .clone()
            .max(other.target_rel_err.clone())
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let p = self.result_prec(other);
        Self::from_bounds(
            self.lo.add_exact(&other.lo).round(p, Round::Down),
            self.hi.add_exact(&other.hi).round(p, Round::Up),
            p,
            self.result_target(other),
        )
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        Self::from_bounds(
            self.hi.neg(),
            self.lo.neg(),
            self.prec,
            self.target_rel_err.clone(),
        )
    }

    pub fn abs(&self) -> Self {
        if self.lo.signum() >= 0 {
            self.clone()
        } else if self.hi.signum() <= 0 {
            self.neg_ref()
        } else {
            let hi = self.lo.abs().max(self.hi.clone());
            Self::from_bounds(Dyadic::zero(), hi, self.prec, self.target_rel_err.clone())
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let p = self.result_prec(other);
        let cands = [
            self.lo.mul_exact(&other.lo),
            self.lo.mul_exact(&other.hi),
            self.hi.mul_exact(&other.lo),
            self.hi.mul_exact(&other.hi),
        ];
        let lo = cands.iter().min().unwrap().clone().round(p, Round::Down);
        let hi = cands.iter().max().unwrap().clone().round(p, Round::Up);
        Self::from_bounds(lo, hi, p, self.result_target(other))
    }

    /// Division; `None` when the divisor interval contains zero.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.contains_zero() {
            return None;
        }
        let p = self.result_prec(other);
        let pairs = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let lo = pairs
            .iter()
            .map(|(a, b)| Dyadic::div_round(a, b, p, Round::Down))
            .min()
            .unwrap();
        let hi = pairs
            .iter()
            .map(|(a, b)| Dyadic::div_round(a, b, p, Round::Up))
            .max()
            .unwrap();
        Some(Self::from_bounds(lo, hi, p, self.result_target(other)))
    }

    pub fn mul_rational(&self, r: &Rational) -> Self {
        if r.denom().is_one() {
            let k = Self::from_bounds(
                Dyadic::from_int(r.numer().clone()),
                Dyadic::from_int(r.numer().clone()),
                self.prec,
                self.target_rel_err.clone(),
            );
            return self.mul_ref(&k);
        }
        self.mul_ref(&Self::from_rational(r, self.prec))
    }

    pub fn div_rational(&self, r: &Rational) -> Self {
        assert!(!r.is_zero(), "PrecReal division by zero rational");
        self.mul_rational(&(Rational::one() / r))
    }

    pub fn add_rational(&self, r: &Rational) -> Self {
        self.add_ref(&Self::from_rational(r, self.prec))
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        Self::from_bounds(
            self.lo.mul_pow2(k),
            self.hi.mul_pow2(k),
            self.prec,
            self.target_rel_err.clone(),
        )
    }

    /// Widens the interval by `[-err, err]`.
    pub fn widen(&self, err: &Rational) -> Self {
        self.add_ref(&Self::plus_minus(err, self.prec))
    }

    /// Square root; `None` if the interval reaches below zero.
    pub fn sqrt(&self) -> Option<Self> {
        if self.lo.signum() < 0 {
            return None;
        }
        Some(Self::from_bounds(
            self.lo.sqrt_round(self.prec, Round::Down),
            self.hi.sqrt_round(self.prec, Round::Up),
            self.prec,
            self.target_rel_err.clone(),
        ))
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut acc = Self::one(self.prec);
        for _ in 0..n {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &Self) -> Self {
        Self::from_bounds(
            self.lo.clone().min(other.lo.clone()),
            self.hi.clone().max(other.hi.clone()),
            self.result_prec(other),
            self.result_target(other),
        )
    }

    /// Intersection, `None` when disjoint.
    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        (lo <= hi)
            .then(|| Self::from_bounds(lo, hi, self.result_prec(other), self.result_target(other)))
    }

    /// True iff the two intervals share a point.
    pub fn overlaps(&self, other: &Self) -> bool {
        self.intersect(other).is_some()
    }

    /// Bounds on `|x - r|` over the interval: the largest distance.
    pub fn max_distance_to(&self, r: &Rational) -> Rational {
        let a = (self.lo() - r).abs();
        let b = (self.hi() - r).abs();
        a.max(b)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&PrecReal> for &PrecReal {
            type Output = PrecReal;
            fn $method(self, rhs: &PrecReal) -> PrecReal {
                self.$inner(rhs)
            }
        }
        impl $trait<PrecReal> for PrecReal {
            type Output = PrecReal;
            fn $method(self, rhs: PrecReal) -> PrecReal {
                (&self).$inner(&rhs)
            }
        }
        impl $trait<&PrecReal> for PrecReal {
            type Output = PrecReal;
            fn $method(self, rhs: &PrecReal) -> PrecReal {
                (&self).$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

fn div_or_panic(a: &PrecReal, b: &PrecReal) -> PrecReal {
    a.checked_div(b)
        .expect("PrecReal division by an interval containing zero")
}

forward_binop!(Div, div, div_panicking);

impl PrecReal {
    fn div_panicking(&self, other: &Self) -> Self {
        div_or_panic(self, other)
    }
}

impl Neg for PrecReal {
    type Output = PrecReal;
    fn neg(self) -> PrecReal {
        self.neg_ref()
    }
}

impl Neg for &PrecReal {
    type Output = PrecReal;
    fn neg(self) -> PrecReal {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use proptest::prelude::*;

    #[test]
    fn to_prec_real_examples() {
        let third = PrecReal::with_digits(&rat(1, 3), 5);
        assert!(third.contains(&rat(1, 3)));
        assert!(third.rel_error_bound().unwrap() <= rat(1, 100_000));
        assert_eq!(third.to_decimal(5).text, "0.33333");

        let zero = PrecReal::with_digits(&rat(0, 1), 7);
        assert!(zero.is_exact());
        assert_eq!(zero.lo(), rat(0, 1));

        let d = PrecReal::with_digits(&rat(7, 4), 10);
        assert!(d.is_exact());
        assert_eq!(d.to_decimal(10).text, "1.750000000");
    }

    #[test]
    fn bits_formula() {
        assert_eq!(bits_for_digits(30), 100 + 64);
        assert_eq!(bits_for_digits(1), 4 + 64);
    }

    #[test]
    fn division_by_straddling_interval_is_refused() {
        let x = PrecReal::plus_minus(&rat(1, 10), 64);
        assert!(PrecReal::one(64).checked_div(&x).is_none());
    }

    #[test]
    fn sqrt_encloses() {
        let two = PrecReal::from_int(2, 128);
        let s = two.sqrt().unwrap();
        assert!((&s * &s).contains(&rat(2, 1)));
        assert!(PrecReal::from_int(-1, 64).sqrt().is_none());
    }

    #[test]
    fn certified_digit_count() {
        let v = PrecReal::from_rational(&rat(1, 3), 200).widen(&rat(1, 1_000_000_000));
        let k = v.certified_digits();
        assert!((8..=9).contains(&k), "{k}");
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-10_000i64..10_000, 1i64..5_000).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn rational_addition_is_exact(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            // (a/b + c/d) * (b d) = a d + c b
            let lhs = (rat(a, b) + rat(c, d)) * rat(b * d, 1);
            prop_assert_eq!(lhs, rat(a * d + c * b, 1));
        }

        #[test]
        fn arithmetic_encloses_exact_result(a in small_rat(), b in small_rat(), c in small_rat(), digits in 5u32..40) {
            let prec = bits_for_digits(digits);
            let (x, y, z) = (
                PrecReal::from_rational(&a, prec),
                PrecReal::from_rational(&b, prec),
                PrecReal::from_rational(&c, prec),
            );
            let expr = &(&x * &y) + &(&z - &x);
            let exact = &a * &b + (&c - &a);
            prop_assert!(expr.contains(&exact));
            if !c.is_zero() {
                let q = (&x + &y) / z.clone();
                prop_assert!(q.contains(&((&a + &b) / &c)));
            }
        }

        #[test]
        fn error_bound_holds_against_doubled_precision(a in small_rat(), b in small_rat(), digits in 5u32..40) {
            prop_assume!(!b.is_zero());
            let prec = bits_for_digits(digits);
            let eval = |p: u32| {
                let x = PrecReal::from_rational(&a, p);
                let y = PrecReal::from_rational(&b, p);
                (&(&x * &x) + &y) / y
            };
            let coarse = eval(prec);
            let fine = eval(2 * prec);
            let exact = (&a * &a + &b) / &b;
            prop_assert!(coarse.contains(&exact));
            prop_assert!(fine.contains(&exact));
            prop_assert!(coarse.max_distance_to(&fine.mid()) <= coarse.hi() - coarse.lo());
            if !exact.is_zero() {
                let rel = (coarse.mid() - &exact).abs() / exact.abs();
                let bound = Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10), digits as usize));
                prop_assert!(rel <= bound);
            }
        }
    }
}
