//! Fibonacci and Lucas polynomials `F_n(q)`, `L_n(q)` and their integer
//! evaluations.
//!
//! Both families satisfy `X_n = q X_{n-1} + X_{n-2}` with seeds
//! `F_0 = 0, F_1 = 1` and `L_0 = 2, L_1 = q`. Fibonacci polynomials are
//! extended to negative indices by running the recurrence backwards, which
//! gives `F_{-n} = (-1)^(n+1) F_n`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::cf::is_even_set;
use crate::exactnum::{sign_pow, BigInt};

/// Polynomial in `q` with integer coefficients, lowest degree first.
///
/// The highest stored coefficient is nonzero; the zero polynomial has no
/// coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self(Vec::new())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The monomial `c q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c.into();
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.0.iter().map(|x| x * c).collect())
    }

    /// Multiplication by `q`.
    pub fn shift(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(BigInt::zero());
        v.extend(self.0.iter().cloned());
        Self(v)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Self::new(v)
    }

    /// Coefficients of degree `< n` only.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.0.iter().take(n).cloned().collect())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{a}q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{a}q^{k}")?,
            }
        }
        Ok(())
    }
}

fn step(prev: &IntPoly, cur: &IntPoly) -> IntPoly {
    cur.shift().add(prev)
}

/// `F_n(q)` for any integer `n`.
pub fn fib_poly(n: i64) -> IntPoly {
    if n < 0 {
        return fib_poly(-n).scale(&BigInt::from(sign_pow(-n + 1)));
    }
    let (mut a, mut b) = (IntPoly::zero(), IntPoly::constant(1));
    for _ in 0..n {
        let next = step(&a, &b);
        a = b;
        b = next;
    }
    a
}

/// `L_n(q)` for `n >= 0`.
pub fn lucas_poly(n: u64) -> IntPoly {
    let (mut a, mut b) = (IntPoly::constant(2), IntPoly::monomial(1, 1));
    for _ in 0..n {
        let next = step(&a, &b);
        a = b;
        b = next;
    }
    a
}

/// `F_n(a)` by the scalar recurrence.
pub fn fib_eval(n: i64, a: &BigInt) -> BigInt {
    if n < 0 {
        return fib_eval(-n, a) * sign_pow(-n + 1);
    }
    let (mut x, mut y) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = a * &y + &x;
        x = y;
        y = next;
    }
    x
}

/// `L_n(a)` by the scalar recurrence.
pub fn lucas_eval(n: u64, a: &BigInt) -> BigInt {
    let (mut x, mut y) = (BigInt::from(2), a.clone());
    for _ in 0..n {
        let next = a * &y + &x;
        x = y;
        y = next;
    }
    x
}

/// All values `F_0(a), ..., F_n(a)`.
pub fn fib_table(n: usize, a: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    let (mut x, mut y) = (BigInt::zero(), BigInt::one());
    for _ in 0..=n {
        out.push(x.clone());
        let next = a * &y + &x;
        x = y;
        y = next;
    }
    out
}

/// `F_n(q)` as the generating polynomial of even subsets of `{1, ..., n-1}`:
/// a set `S` contributes `q^((n-1) - |S|)`.
///
/// Exhaustive over all `2^(n-1)` subsets.
pub fn fib_via_even_sets(n: usize) -> IntPoly {
    assert!(n >= 1, "fib_via_even_sets needs n >= 1");
    let m = n - 1;
    let mut counts = vec![BigInt::zero(); m + 1];
    let mut members = Vec::with_capacity(m);
    for mask in 0u64..(1u64 << m) {
        members.clear();
        members.extend((0..m).filter(|i| mask >> i & 1 == 1).map(|i| i as i64 + 1));
        if is_even_set(&members) {
            counts[m - members.len()] += 1;
        }
    }
    IntPoly::new(counts)
}

/// Checks the generating function identity
/// `(1 - L_d t + (-1)^d t^2) * sum_{n=0}^{N} F_{nd+r+1} t^n
///  = F_{r+1} + (-1)^(r+1) F_{d-r-1} t  (mod t^(N+1))`
/// at `q = alpha`, in exact integer arithmetic.
pub fn fib_generating_check(d: u64, r: u64, alpha: &BigInt, big_n: usize) -> bool {
    assert!(d >= 1 && r <= d, "need d >= 1 and 0 <= r <= d");
    let (d, r) = (d as i64, r as i64);
    let series = IntPoly::new(
        (0..=big_n as i64)
            .map(|n| fib_eval(n * d + r + 1, alpha))
            .collect(),
    );
    let denom = IntPoly::new(vec![
        BigInt::one(),
        -lucas_eval(d as u64, alpha),
        BigInt::from(sign_pow(d)),
    ]);
    let lhs = denom.mul(&series).truncate(big_n + 1);
    let rhs = IntPoly::new(vec![
        fib_eval(r + 1, alpha),
        fib_eval(d - r - 1, alpha) * sign_pow(r + 1),
    ])
    .truncate(big_n + 1);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, PrecReal, Rational};

    #[test]
    fn fib_poly_examples() {
        assert_eq!(fib_poly(3), IntPoly::from_i64s(&[1, 0, 1]));
        assert_eq!(fib_poly(4), IntPoly::from_i64s(&[0, 2, 0, 1]));
        assert_eq!(fib_poly(0), IntPoly::zero());
        assert_eq!(fib_poly(4).to_string(), "q^3 + 2q");
    }

    #[test]
    fn lucas_poly_examples() {
        assert_eq!(lucas_poly(3), IntPoly::from_i64s(&[0, 3, 0, 1]));
        assert_eq!(lucas_poly(4), IntPoly::from_i64s(&[2, 0, 4, 0, 1]));
        assert_eq!(lucas_poly(0), IntPoly::constant(2));
    }

    #[test]
    fn scalar_evaluations() {
        assert_eq!(fib_eval(3, &int(1)), int(2));
        assert_eq!(lucas_eval(3, &int(1)), int(4));
        assert_eq!(fib_eval(2, &int(4)), int(4));
    }

    #[test]
    fn negative_indices() {
        assert_eq!(fib_poly(-1), IntPoly::constant(1));
        assert_eq!(fib_eval(-1, &int(7)), int(1));
        for n in 1..12 {
            let expect = fib_poly(n).scale(&int(sign_pow(n + 1)));
            assert_eq!(fib_poly(-n), expect);
            // The recurrence run backwards: F_{k-2} = F_k - q F_{k-1}.
            let back = fib_poly(-n + 2).add(&fib_poly(-n + 1).shift().scale(&int(-1)));
            assert_eq!(fib_poly(-n), back);
        }
    }

    #[test]
    fn common_recurrence_coefficientwise() {
        for n in 2..=50 {
            assert_eq!(fib_poly(n), step(&fib_poly(n - 2), &fib_poly(n - 1)));
            let n = n as u64;
            assert_eq!(lucas_poly(n), step(&lucas_poly(n - 2), &lucas_poly(n - 1)));
        }
    }

    #[test]
    fn evaluation_matches_polynomials() {
        for n in -10..30i64 {
            for a in -3..6 {
                assert_eq!(fib_eval(n, &int(a)), fib_poly(n).eval(&int(a)));
                if n >= 0 {
                    assert_eq!(
                        lucas_eval(n as u64, &int(a)),
                        lucas_poly(n as u64).eval(&int(a))
                    );
                }
            }
        }
        assert_eq!(fib_table(10, &int(2))[10], fib_eval(10, &int(2)));
    }

    #[test]
    fn lucas_from_fibonacci() {
        for d in 1..=30i64 {
            for a in 1..=10 {
                let a = int(a);
                assert_eq!(
                    lucas_eval(d as u64, &a),
                    &a * fib_eval(d, &a) + 2 * fib_eval(d - 1, &a)
                );
            }
        }
    }

    #[test]
    fn shifted_product_identity() {
        for d in 0..=20i64 {
            for r in 0..=d {
                for a in 1..=5 {
                    let a = int(a);
                    let lhs = fib_eval(r, &a) * fib_eval(d, &a)
                        - fib_eval(r + 1, &a) * fib_eval(d - 1, &a);
                    assert_eq!(
                        lhs,
                        fib_eval(d - r - 1, &a) * sign_pow(r + 1),
                        "d={d} r={r}"
                    );
                }
            }
        }
    }

    #[test]
    fn lucas_dominates_alpha_fib() {
        for d in 0..=40u64 {
            for a in 1..=10 {
                let a = int(a);
                let gap = lucas_eval(d, &a) - &a * fib_eval(d as i64, &a);
                assert_eq!(gap, fib_eval(d as i64 - 1, &a) * 2);
                assert_eq!(gap.is_positive(), d != 1);
            }
        }
    }

    #[test]
    fn even_set_generating_polynomial() {
        assert_eq!(fib_via_even_sets(4), IntPoly::from_i64s(&[0, 2, 0, 1]));
        assert_eq!(fib_via_even_sets(1), IntPoly::constant(1));
        assert_eq!(fib_via_even_sets(2), IntPoly::monomial(1, 1));
        for n in 1..=18 {
            assert_eq!(fib_via_even_sets(n), fib_poly(n as i64), "n={n}");
        }
    }

    #[test]
    fn generating_function_examples() {
        assert!(fib_generating_check(3, 2, &int(1), 10));
        assert!(fib_generating_check(1, 0, &int(1), 10));
        assert!(fib_generating_check(2, 0, &int(2), 10));
        for d in 1..=6 {
            for r in 0..=d {
                for a in 1..=4 {
                    assert!(fib_generating_check(d, r, &int(a), 25), "d={d} r={r} a={a}");
                }
            }
        }
    }

    #[test]
    fn generating_check_detects_wrong_sign() {
        // Flip the numerator constant: the identity must fail.
        let a = int(2);
        let series = IntPoly::new((0..=8).map(|n| fib_eval(n * 3 + 1, &a)).collect());
        let denom = IntPoly::new(vec![int(1), -lucas_eval(3, &a), int(-1)]);
        let lhs = denom.mul(&series).truncate(9);
        let wrong = IntPoly::new(vec![fib_eval(1, &a), fib_eval(2, &a)]);
        assert_ne!(lhs, wrong);
    }

    #[test]
    fn binet_closed_form() {
        let prec = 256;
        let tol = Rational::new(int(1), num_traits::pow(int(10), 20));
        for q in 1..=6i64 {
            let qq = PrecReal::from_int(q, prec);
            let disc = PrecReal::from_int(q * q + 4, prec).sqrt().unwrap();
            let rho1 = (&qq + &disc).mul_pow2(-1);
            let rho2 = (&qq - &disc).mul_pow2(-1);
            for n in 0..=30u32 {
                let f = (&rho1.powi(n) - &rho2.powi(n)) / disc.clone();
                let exact = Rational::from_integer(fib_eval(n as i64, &int(q)));
                assert!(f.max_distance_to(&exact) < tol, "F_{n}({q})");
                let l = &rho1.powi(n) + &rho2.powi(n);
                let exact_l = Rational::from_integer(lucas_eval(n as u64, &int(q)));
                assert!(l.max_distance_to(&exact_l) < tol, "L_{n}({q})");
            }
        }
    }
}
