use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{BigInt, PrecReal, Rational};

/// A decimal rendering of a [`PrecReal`] midpoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decimal {
    pub text: String,
    pub digits: u32,
    /// Every point of the source interval lies within one unit in the last
    /// printed place of `text`.
    pub certified: bool,
}

fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), e as usize)
}

/// `10^e` as a rational for signed `e`.
fn pow10_rat(e: i64) -> Rational {
    if e >= 0 {
        Rational::from_integer(pow10(e as u32))
    } else {
        Rational::new(BigInt::from(1), pow10((-e) as u32))
    }
}

/// `floor(log10 |r|)` for nonzero `r`.
fn ilog10_abs(r: &Rational) -> i64 {
    let n = r.numer().abs();
    let d = r.denom();
    let mut e = n.to_string().len() as i64 - d.to_string().len() as i64;
    let a = r.abs();
    while pow10_rat(e) > a {
        e -= 1;
    }
    while pow10_rat(e + 1) <= a {
        e += 1;
    }
    e
}

/// Round-half-up of a nonnegative rational to an integer.
fn round_half_up(r: &Rational) -> BigInt {
    let two = BigInt::from(2);
    (r.numer() * &two + r.denom()).div_floor(&(r.denom() * two))
}

impl Decimal {
    pub(crate) fn render(v: &PrecReal, digits: u32) -> Self {
        let digits = digits.max(1);
        let m = v.mid();
        if m.is_zero() {
            return Decimal {
                text: "0".to_string(),
                digits,
                certified: v.is_exact(),
            };
        }
        let negative = m.is_negative();
        let a = m.abs();
        let mut e10 = ilog10_abs(&a);
        let mut n = round_half_up(&(&a * pow10_rat(digits as i64 - 1 - e10)));
        if n == pow10(digits) {
            e10 += 1;
            n = round_half_up(&(&a * pow10_rat(digits as i64 - 1 - e10)));
        }
        let ulp = pow10_rat(e10 - digits as i64 + 1);
        let mut shown = Rational::from_integer(n.clone()) * &ulp;
        if negative {
            shown = -shown;
        }
        let certified = v.max_distance_to(&shown) <= ulp;

        let body = n.to_string();
        let point = e10 + 1; // digits before the decimal point
        let mut text = String::new();
        if negative {
            text.push('-');
        }
        if point <= 0 {
            text.push_str("0.");
            text.extend(std::iter::repeat_n('0', (-point) as usize));
            text.push_str(&body);
        } else if point as usize >= body.len() {
            text.push_str(&body);
            text.extend(std::iter::repeat_n('0', point as usize - body.len()));
        } else {
            let (int_part, frac) = body.split_at(point as usize);
            text.push_str(int_part);
            text.push('.');
            text.push_str(frac);
        }
        Decimal {
            text,
            digits,
            certified,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn show(r: Rational, digits: u32) -> Decimal {
        PrecReal::from_rational(&r, 256).to_decimal(digits)
    }

    #[test]
    fn positional_layouts() {
        assert_eq!(show(rat(7, 4), 4).text, "1.750");
        assert_eq!(show(rat(1234, 1), 2).text, "1200");
        assert_eq!(show(rat(-1, 800), 3).text, "-0.00125");
        assert_eq!(show(rat(999_999, 100_000), 3).text, "10.0");
        assert_eq!(show(rat(2, 3), 6).text, "0.666667");
    }

    #[test]
    fn wide_interval_is_not_certified() {
        let v = PrecReal::from_rational(&rat(1, 3), 256).widen(&rat(1, 1000));
        assert!(!v.to_decimal(10).certified);
        assert!(v.to_decimal(2).certified);
    }

    #[test]
    fn log10_boundaries() {
        assert_eq!(ilog10_abs(&rat(1, 1)), 0);
        assert_eq!(ilog10_abs(&rat(99, 1)), 1);
        assert_eq!(ilog10_abs(&rat(1, 10)), -1);
        assert_eq!(ilog10_abs(&rat(1, 11)), -2);
    }
}
