use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{BigInt, Rational};

/// Rounding direction for the directed operations below.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Round {
    Down,
    Up,
}

/// An exact binary fraction `mant * 2^exp`.
///
/// Zero is always stored as `0 * 2^0`.
#[derive(Clone, PartialEq, Eq)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.mant, self.exp)
    }
}

fn shr_round(m: &BigInt, shift: u64, dir: Round) -> BigInt {
    let div = BigInt::one() << shift;
    match dir {
        Round::Down => m.div_floor(&div),
        Round::Up => {
            let (q, r) = m.div_mod_floor(&div);
            if r.is_zero() {
                q
            } else {
                q + 1
            }
        }
    }
}

impl Dyadic {
    pub fn zero() -> Self {
        Self {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn new(mant: BigInt, exp: i64) -> Self {
        if mant.is_zero() {
            return Self::zero();
        }
        let tz = mant.trailing_zeros().unwrap_or(0);
        Self {
            mant: mant >> tz as usize,
            exp: exp + tz as i64,
        }
    }

    pub fn from_int(v: BigInt) -> Self {
        Self::new(v, 0)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn signum(&self) -> i32 {
        if self.mant.is_zero() {
            0
        } else if self.mant.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn to_rational(&self) -> Rational {
        if self.exp >= 0 {
            Rational::from_integer(&self.mant << self.exp as usize)
        } else {
            Rational::new(self.mant.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    /// Position of the most significant bit plus one, relative to 2^0.
    pub(crate) fn magnitude_bits(&self) -> i64 {
        self.mant.bits() as i64 + self.exp
    }

    /// Rounds to at most `prec` significant bits in direction `dir`.
    pub(crate) fn round(self, prec: u32, dir: Round) -> Self {
        let bits = self.mant.bits();
        if bits <= prec as u64 {
            return self;
        }
        let shift = bits - prec as u64;
        Self::new(shr_round(&self.mant, shift, dir), self.exp + shift as i64)
    }

    pub(crate) fn neg(&self) -> Self {
        Self {
            mant: -&self.mant,
            exp: self.exp,
        }
    }

    pub(crate) fn abs(&self) -> Self {
        Self {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    pub(crate) fn add_exact(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as usize;
        let b = &other.mant << (other.exp - e) as usize;
        Self::new(a + b, e)
    }

    pub(crate) fn mul_exact(&self, other: &Self) -> Self {
        Self::new(&self.mant * &other.mant, self.exp + other.exp)
    }

    pub(crate) fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            mant: self.mant.clone(),
            exp: self.exp + k,
        }
    }

    /// `num / den` rounded to `prec` bits; `den` nonzero.
    pub(crate) fn div_round(num: &Self, den: &Self, prec: u32, dir: Round) -> Self {
        assert!(!den.is_zero(), "Dyadic division by zero");
        if num.is_zero() {
            return Self::zero();
        }
        // Scale the numerator so the integer quotient carries prec+2 bits.
        let want = prec as i64 + 2;
        let s = (want + den.mant.bits() as i64 - num.mant.bits() as i64).max(0);
        let n = &num.mant << s as usize;
        let (q, r) = n.div_mod_floor(&den.mant);
        let q = if dir == Round::Up && !r.is_zero() {
            q + 1
        } else {
            q
        };
        Self::new(q, num.exp - den.exp - s).round(prec, dir)
    }

    /// Rational rounded to `prec` bits.
    pub(crate) fn from_rational(r: &Rational, prec: u32, dir: Round) -> Self {
        let num = Self::from_int(r.numer().clone());
        let den = Self::from_int(r.denom().clone());
        if r.denom().is_one() {
            return num.round(prec, dir);
        }
        Self::div_round(&num, &den, prec, dir)
    }

    /// Square root of a nonnegative value rounded to `prec` bits.
    pub(crate) fn sqrt_round(&self, prec: u32, dir: Round) -> Self {
        assert!(self.signum() >= 0, "square root of a negative dyadic");
        if self.is_zero() {
            return Self::zero();
        }
        let mut shift = (2 * (prec as i64 + 2) - self.mant.bits() as i64).max(0);
        if (self.exp - shift).rem_euclid(2) != 0 {
            shift += 1;
        }
        let m = &self.mant << shift as usize;
        let mut root = m.sqrt();
        if dir == Round::Up && &root * &root != m {
            root += 1;
        }
        Self::new(root, (self.exp - shift) / 2).round(prec, dir)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb || sa == 0 {
            return sa.cmp(&sb);
        }
        // Same nonzero sign: compare magnitudes first, then exactly.
        let (ma, mb) = (self.magnitude_bits(), other.magnitude_bits());
        if ma != mb {
            let ord = ma.cmp(&mb);
            return if sa > 0 { ord } else { ord.reverse() };
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as usize;
        let b = &other.mant << (other.exp - e) as usize;
        a.cmp(&b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn normalizes_trailing_zeros() {
        let d = Dyadic::new(BigInt::from(12), 0);
        assert_eq!(d.mantissa(), &BigInt::from(3));
        assert_eq!(d.exponent(), 2);
    }

    #[test]
    fn directed_division_brackets() {
        let one = Dyadic::from_int(BigInt::one());
        let three = Dyadic::from_int(BigInt::from(3));
        let lo = Dyadic::div_round(&one, &three, 40, Round::Down);
        let hi = Dyadic::div_round(&one, &three, 40, Round::Up);
        let third = rat(1, 3);
        assert!(lo.to_rational() < third && third < hi.to_rational());
        assert!(hi.to_rational() - lo.to_rational() <= rat(1, 1 << 40));
    }

    #[test]
    fn negative_rounding_directions() {
        let lo = Dyadic::from_rational(&rat(-1, 3), 20, Round::Down);
        let hi = Dyadic::from_rational(&rat(-1, 3), 20, Round::Up);
        assert!(lo.to_rational() < rat(-1, 3));
        assert!(hi.to_rational() > rat(-1, 3));
    }

    #[test]
    fn sqrt_brackets() {
        let two = Dyadic::from_int(BigInt::from(2));
        let lo = two.sqrt_round(64, Round::Down);
        let hi = two.sqrt_round(64, Round::Up);
        assert!(lo.mul_exact(&lo) < two);
        assert!(hi.mul_exact(&hi) > two);
        let quarter = Dyadic::new(BigInt::one(), -2);
        assert_eq!(
            quarter.sqrt_round(10, Round::Down),
            Dyadic::new(BigInt::one(), -1)
        );
    }

    #[test]
    fn ordering_across_exponents() {
        let a = Dyadic::new(BigInt::from(3), -1);
        let b = Dyadic::from_int(BigInt::from(2));
        assert!(a < b);
        assert!(a.neg() > b.neg());
        assert!(Dyadic::zero() < a);
    }
}
