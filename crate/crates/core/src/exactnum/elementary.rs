//! Certified `exp`-family and trigonometric functions on [`PrecReal`]
//! intervals, plus `pi`.
//!
//! All series are summed in interval arithmetic and closed with a rigorous
//! tail bound, so the returned interval always contains the true value for
//! every argument in the input interval.

use num_traits::{One, Zero};

use super::{BigInt, PrecReal, Rational};

/// Which pair of Taylor series to sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Hyperbolic,
    Circular,
}

fn two_pow_neg(bits: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << bits as usize)
}

/// Sums `sum_k (+-1)^k z^(2k+parity) / (2k+parity)!`.
fn taylor_half(z: &PrecReal, parity: u32, family: Family) -> PrecReal {
    let prec = z.prec();
    let z2 = z.mul_ref(z);
    let m = z.mag_upper();
    let floor_abs = two_pow_neg(prec + 8);
    let mut term = if parity == 0 {
        PrecReal::one(prec)
    } else {
        z.clone()
    };
    let mut sum = term.clone();
    let mut k = parity as u64; // exponent of the current term
    loop {
        let denom = Rational::from_integer(BigInt::from((k + 1) * (k + 2)));
        term = term.mul_ref(&z2).div_rational(&denom);
        if family == Family::Circular {
            term = term.neg_ref();
        }
        k += 2;
        let t_mag = term.mag_upper();
        let past_peak = Rational::from_integer(BigInt::from(k + 1))
            > &m * Rational::from_integer(BigInt::from(2));
        let scale = sum.mag_lower();
        let scale = if scale.is_zero() {
            Rational::one()
        } else {
            scale
        };
        let small = t_mag <= &floor_abs * scale || t_mag.is_zero();
        if past_peak && small {
            // Remaining terms shrink by at least 1/4 each: tail <= (4/3)|t|.
            let tail = t_mag * Rational::new(BigInt::from(4), BigInt::from(3));
            return sum.widen(&tail);
        }
        sum = sum.add_ref(&term);
    }
}

fn halvings(z: &PrecReal) -> u32 {
    let mut m = z.mag_upper();
    let mut s = 0;
    while m > Rational::one() {
        m /= Rational::from_integer(BigInt::from(2));
        s += 1;
    }
    s
}

fn pair(z: &PrecReal, family: Family) -> (PrecReal, PrecReal) {
    let s = halvings(z);
    let zr = z.mul_pow2(-(s as i64)).with_prec(z.prec() + 2 * s);
    let mut odd = taylor_half(&zr, 1, family);
    let mut even = taylor_half(&zr, 0, family);
    for _ in 0..s {
        let two_oe = odd.mul_ref(&even).mul_pow2(1);
        let o2 = odd.mul_ref(&odd).mul_pow2(1);
        even = match family {
            Family::Hyperbolic => PrecReal::one(zr.prec()).add_ref(&o2),
            Family::Circular => PrecReal::one(zr.prec()).sub_ref(&o2),
        };
        odd = two_oe;
    }
    (odd.with_prec(z.prec()), even.with_prec(z.prec()))
}

/// `(sinh z, cosh z)`.
pub fn sinh_cosh(z: &PrecReal) -> (PrecReal, PrecReal) {
    pair(z, Family::Hyperbolic)
}

/// `(sin z, cos z)`.
pub fn sin_cos(z: &PrecReal) -> (PrecReal, PrecReal) {
    pair(z, Family::Circular)
}

pub fn exp(z: &PrecReal) -> PrecReal {
    let (s, c) = sinh_cosh(z);
    s.add_ref(&c)
}

/// `atan(1/n)` for an integer `n >= 2`, alternating series.
fn atan_inv(n: u64, prec: u32) -> PrecReal {
    let n2 = BigInt::from(n) * BigInt::from(n);
    let mut pow = BigInt::from(n); // n^(2k+1)
    let mut sum = PrecReal::zero(prec);
    let eps = two_pow_neg(prec + 8);
    let mut k = 0u64;
    loop {
        let term = Rational::new(BigInt::one(), &pow * BigInt::from(2 * k + 1));
        if term < eps {
            // Alternating with decreasing terms: the tail is bounded by the
            // first omitted term.
            return sum.widen(&term);
        }
        let t = PrecReal::from_rational(&term, prec);
        sum = if k % 2 == 0 {
            sum.add_ref(&t)
        } else {
            sum.sub_ref(&t)
        };
        pow *= &n2;
        k += 1;
    }
}

/// `pi` via Machin's formula `pi = 16 atan(1/5) - 4 atan(1/239)`.
pub fn pi(prec: u32) -> PrecReal {
    let work = prec + 16;
    let a = atan_inv(5, work).mul_pow2(4);
    let b = atan_inv(239, work).mul_pow2(2);
    a.sub_ref(&b).with_prec(prec)
}
