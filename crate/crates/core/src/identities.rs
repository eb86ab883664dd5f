//! Exact polynomial identities behind the closed form.
//!
//! `R_n(x, y)` and `S_n(x, y)` are bivariate polynomials with rational
//! coefficients; the two summation lemmas are checked by expanding both sides
//! and comparing coefficient maps. `P_n(x)` and `Q_n(x)` are the integer-`σ`
//! specializations, whose ratio is a convergent of
//! `x/(1 + x/(2 + x/(3 + ...)))`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::cf::convergents;
use crate::exactnum::{binomial, factorial, rat_int, BigInt, Rational};
use crate::hurwitz::{denom_stream, CFParams};

/// Polynomial in `x` and `y`: map from `(deg_x, deg_y)` to a nonzero
/// rational coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivarPoly(BTreeMap<(u32, u32), Rational>);

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, dx: u32, dy: u32) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert((dx, dy), c);
        }
        Self(m)
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, dx: u32, dy: u32) -> Rational {
        self.0
            .get(&(dx, dy))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.0.iter()
    }

    fn add_term(&mut self, key: (u32, u32), c: Rational) {
        let e = self.0.entry(key).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.0 {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self(self.0.iter().map(|(k, v)| (*k, v * c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((ax, ay), a) in &self.0 {
            for ((bx, by), b) in &other.0 {
                out.add_term((ax + bx, ay + by), a * b);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(Rational::one()), |acc, _| acc.mul(self))
    }

    /// Evaluates at rational `x`, `y`.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.0
            .iter()
            .map(|((dx, dy), c)| {
                c * num_traits::pow(x.clone(), *dx as usize)
                    * num_traits::pow(y.clone(), *dy as usize)
            })
            .sum()
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|((dx, dy), c)| format!("({c})x^{dx}y^{dy}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `(y + c)_j = (y + c)(y + c - 1)...(y + c - j + 1)` as a polynomial in `y`.
fn falling_in_y(c: i64, j: usize) -> BivarPoly {
    (0..j as i64).fold(BivarPoly::constant(Rational::one()), |acc, i| {
        acc.mul(&BivarPoly::y().add(&BivarPoly::constant(rat_int(BigInt::from(c - i)))))
    })
}

/// `C(y + c, j)` as a polynomial in `y`.
fn binom_in_y(c: i64, j: usize) -> BivarPoly {
    falling_in_y(c, j).scale(&Rational::new(BigInt::one(), factorial(j)))
}

fn x_pow(k: usize) -> BivarPoly {
    BivarPoly::monomial(Rational::one(), k as u32, 0)
}

fn frac(num: BigInt, den: BigInt) -> Rational {
    Rational::new(num, den)
}

/// `R_n(x, y) = sum_{k=0}^{n} x^k (y+n)_{n-k} / k!`.
pub fn r_poly(n: usize) -> BivarPoly {
    (0..=n).fold(BivarPoly::zero(), |acc, k| {
        let term = x_pow(k)
            .mul(&falling_in_y(n as i64, n - k))
            .scale(&frac(BigInt::one(), factorial(k)));
        acc.add(&term)
    })
}

/// `S_n(x, y) = sum_{k=0}^{n-1} x^(k+1) (y+n)_{n-k-1} / k!`.
pub fn s_poly(n: usize) -> BivarPoly {
    (0..n).fold(BivarPoly::zero(), |acc, k| {
        let term = x_pow(k + 1)
            .mul(&falling_in_y(n as i64, n - k - 1))
            .scale(&frac(BigInt::one(), factorial(k)));
        acc.add(&term)
    })
}

/// `R_n` in its binomial form
/// `(1/n!) sum_k C(n,k) C(n+y, n-k) (n-k)!^2 x^k`.
pub fn r_poly_binomial_form(n: usize) -> BivarPoly {
    let inv_nf = frac(BigInt::one(), factorial(n));
    (0..=n).fold(BivarPoly::zero(), |acc, k| {
        let c = rat_int(binomial(n as u64, k as u64) * factorial(n - k) * factorial(n - k));
        let term = x_pow(k)
            .mul(&binom_in_y(n as i64, n - k))
            .scale(&(c * &inv_nf));
        acc.add(&term)
    })
}

/// `S_n` in its binomial form
/// `(1/n!) sum_{k<n} C(n,k) C(n+y, n-k-1) (n-k)! (n-k-1)! x^(k+1)`.
pub fn s_poly_binomial_form(n: usize) -> BivarPoly {
    let inv_nf = frac(BigInt::one(), factorial(n));
    (0..n).fold(BivarPoly::zero(), |acc, k| {
        let c = rat_int(binomial(n as u64, k as u64) * factorial(n - k) * factorial(n - k - 1));
        let term = x_pow(k + 1)
            .mul(&binom_in_y(n as i64, n - k - 1))
            .scale(&(c * &inv_nf));
        acc.add(&term)
    })
}

/// `sum_{m=0}^{n} (-x)^(n-m)/(n-m)! · poly(m)`.
fn alternating_convolution(n: usize, poly: impl Fn(usize) -> BivarPoly) -> BivarPoly {
    let minus_x = x_pow(1).scale(&rat_int(BigInt::from(-1)));
    (0..=n).fold(BivarPoly::zero(), |acc, m| {
        let w = minus_x
            .pow((n - m) as u32)
            .scale(&frac(BigInt::one(), factorial(n - m)));
        acc.add(&w.mul(&poly(m)))
    })
}

/// Left side of the `R` summation identity.
pub fn rsum_lhs(n: usize) -> BivarPoly {
    alternating_convolution(n, r_poly)
}

/// `sum_{k ≤ n/2} (n-k)!/k! · C(n+y-k, n-2k) · x^k`.
pub fn rsum_rhs(n: usize) -> BivarPoly {
    (0..=n / 2).fold(BivarPoly::zero(), |acc, k| {
        let c = frac(factorial(n - k), factorial(k));
        acc.add(
            &x_pow(k)
                .mul(&binom_in_y((n - k) as i64, n - 2 * k))
                .scale(&c),
        )
    })
}

/// Left side of the `S` summation identity.
pub fn ssum_lhs(n: usize) -> BivarPoly {
    alternating_convolution(n, s_poly)
}

/// `sum_{k ≤ (n-1)/2} (n-k-1)!/k! · C(n+y-k, n-2k-1) · x^(k+1)`.
pub fn ssum_rhs(n: usize) -> BivarPoly {
    if n == 0 {
        return BivarPoly::zero();
    }
    (0..=(n - 1) / 2).fold(BivarPoly::zero(), |acc, k| {
        let c = frac(factorial(n - k - 1), factorial(k));
        acc.add(
            &x_pow(k + 1)
                .mul(&binom_in_y((n - k) as i64, n - 2 * k - 1))
                .scale(&c),
        )
    })
}

pub fn verify_rsum(n: usize) -> bool {
    rsum_lhs(n) == rsum_rhs(n)
}

pub fn verify_ssum(n: usize) -> bool {
    ssum_lhs(n) == ssum_rhs(n)
}

/// Polynomial in one variable with rational coefficients, lowest degree
/// first; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Coefficients as integers when they all are.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.0
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

/// `P_n(x) = sum_{k ≤ (n-1)/2} (n-k-1)!/k! · C(n-k, n-2k-1) · x^(k+1)`.
pub fn p_poly(n: usize) -> UniPoly {
    let mut c = vec![Rational::zero(); n / 2 + 2];
    if n >= 1 {
        for k in 0..=(n - 1) / 2 {
            c[k + 1] = frac(
                factorial(n - k - 1) * binomial((n - k) as u64, (n - 2 * k - 1) as u64),
                factorial(k),
            );
        }
    }
    UniPoly::new(c)
}

/// `Q_n(x) = sum_{k ≤ n/2} (n-k)!/k! · C(n-k, n-2k) · x^k`.
pub fn q_poly(n: usize) -> UniPoly {
    let c = (0..=n / 2)
        .map(|k| {
            frac(
                factorial(n - k) * binomial((n - k) as u64, (n - 2 * k) as u64),
                factorial(k),
            )
        })
        .collect();
    UniPoly::new(c)
}

/// `(A_n, B_n)` of `0 + x/(1 + x/(2 + ... + x/n))` by the generalized
/// recurrence `A_j = j A_{j-1} + x A_{j-2}` (same for `B`).
pub fn gcf_numerator_denominator(n: usize, x: &Rational) -> (Rational, Rational) {
    let (mut a2, mut a1) = (Rational::one(), Rational::zero());
    let (mut b2, mut b1) = (Rational::zero(), Rational::one());
    for j in 1..=n {
        let jr = rat_int(BigInt::from(j as u64));
        let a = &jr * &a1 + x * &a2;
        let b = &jr * &b1 + x * &b2;
        a2 = std::mem::replace(&mut a1, a);
        b2 = std::mem::replace(&mut b1, b);
    }
    (a1, b1)
}

/// `P_n(x)/Q_n(x)` equals the generalized continued fraction with
/// `a_i = i`, `b_j = x`, truncated at `n`.
pub fn gcf_convergent_check(n: usize, x: &Rational) -> bool {
    assert!(n >= 1, "gcf_convergent_check needs n >= 1");
    let (a, b) = gcf_numerator_denominator(n, x);
    let (p, q) = (p_poly(n).eval(x), q_poly(n).eval(x));
    // Compare as cross products so a vanishing denominator is not special.
    !(a.is_zero() && b.is_zero()) && p * &b == q * &a
}

/// Every third convergent of `ξ(1, m-1, m, 3, 2)` through `P_n`, `Q_n`:
/// `p_{3n+1} = 2(2m)^n Q_n(1/(4m^2))`,
/// `q_{3n+1} = (2m)^n (2m P_n(1/(4m^2)) + Q_n(1/(4m^2)))`.
///
/// Returns the first `n` where either relation fails.
pub fn pq_convergent_relations(m: u64, n_max: usize) -> Result<(), usize> {
    assert!(m >= 2, "needs m >= 2");
    let params = CFParams {
        alpha: 1,
        beta0: m - 1,
        beta1: m,
        d: 3,
        r: 2,
    };
    let table = convergents(&denom_stream(&params), 3 * n_max + 1).expect("infinite stream");
    let x = Rational::new(BigInt::one(), BigInt::from(4 * m * m));
    let two_m = rat_int(BigInt::from(2 * m));
    for n in 0..=n_max {
        let c = &table[3 * n + 2];
        let scale = num_traits::pow(two_m.clone(), n);
        let (pn, qn) = (p_poly(n).eval(&x), q_poly(n).eval(&x));
        let p = rat_int(BigInt::from(2)) * &scale * &qn;
        let q = &scale * (&two_m * pn + qn);
        if p != rat_int(c.p.clone()) || q != rat_int(c.q.clone()) {
            return Err(n);
        }
    }
    Ok(())
}

/// Coefficient table rows `[c_0, c_1, ...]` of `P_n` or `Q_n`.
pub fn coefficient_rows(which: char, n_max: usize) -> Vec<Vec<BigInt>> {
    (0..=n_max)
        .map(|n| {
            let poly = if which == 'P' { p_poly(n) } else { q_poly(n) };
            poly.integer_coeffs()
                .expect("P_n and Q_n have integer coefficients")
        })
        .collect()
}

/// Sign-free check used by callers that only need positivity of `Q_n(x)`.
pub fn q_positive(n: usize, x: &Rational) -> bool {
    q_poly(n).eval(x).is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use proptest::prelude::*;

    fn bp(terms: &[((u32, u32), Rational)]) -> BivarPoly {
        terms.iter().fold(BivarPoly::zero(), |acc, (k, c)| {
            acc.add(&BivarPoly::monomial(c.clone(), k.0, k.1))
        })
    }

    #[test]
    fn small_r_and_s() {
        assert_eq!(r_poly(0), BivarPoly::constant(rat(1, 1)));
        assert_eq!(s_poly(0), BivarPoly::zero());
        // R_1 = (y + 1) + x, S_1 = x
        let r1 = bp(&[
            ((0, 1), rat(1, 1)),
            ((0, 0), rat(1, 1)),
            ((1, 0), rat(1, 1)),
        ]);
        assert_eq!(r_poly(1), r1);
        assert_eq!(s_poly(1), BivarPoly::x());
    }

    #[test]
    fn rsum_at_one_is_y_plus_one() {
        let y1 = bp(&[((0, 1), rat(1, 1)), ((0, 0), rat(1, 1))]);
        assert_eq!(rsum_lhs(1), y1);
        assert_eq!(rsum_rhs(1), y1);
        assert!(verify_rsum(1));
        assert!(verify_ssum(0));
    }

    #[test]
    fn summation_identities_up_to_twenty() {
        for n in 0..=20 {
            assert!(verify_rsum(n), "R identity fails at n={n}");
            assert!(verify_ssum(n), "S identity fails at n={n}");
        }
    }

    #[test]
    fn broken_identity_is_detected() {
        // Dropping the last term of the left side must break equality.
        let n = 4;
        let truncated = alternating_convolution(n - 1, r_poly);
        assert_ne!(truncated, rsum_rhs(n));
    }

    #[test]
    fn binomial_and_falling_forms_agree() {
        for n in 0..=12 {
            assert_eq!(r_poly(n), r_poly_binomial_form(n), "R_{n}");
            assert_eq!(s_poly(n), s_poly_binomial_form(n), "S_{n}");
        }
    }

    #[test]
    fn p_and_q_examples() {
        assert_eq!(q_poly(0), UniPoly::new(vec![rat(1, 1)]));
        assert_eq!(p_poly(1), UniPoly::new(vec![rat(0, 1), rat(1, 1)]));
        assert_eq!(q_poly(2), UniPoly::new(vec![rat(2, 1), rat(1, 1)]));
        assert_eq!(p_poly(0), UniPoly::default());
        assert_eq!(q_poly(3), UniPoly::new(vec![rat(6, 1), rat(4, 1)]));
        assert_eq!(
            q_poly(4),
            UniPoly::new(vec![rat(24, 1), rat(18, 1), rat(1, 1)])
        );
    }

    #[test]
    fn gcf_examples() {
        assert!(gcf_convergent_check(1, &rat(1, 4)));
        assert!(gcf_convergent_check(3, &rat(1, 16)));
        assert!(gcf_convergent_check(10, &rat(1, 1)));
        let (a, b) = gcf_numerator_denominator(3, &rat(1, 16));
        // 1/16 / (1 + (1/16)/(2 + (1/16)/3))
        let direct = rat(1, 16) / (rat(1, 1) + rat(1, 16) / (rat(2, 1) + rat(1, 16) / rat(3, 1)));
        assert_eq!(a / b, direct);
    }

    #[test]
    fn every_third_convergent() {
        for m in 2..=4 {
            assert_eq!(pq_convergent_relations(m, 10), Ok(()), "m={m}");
        }
    }

    #[test]
    fn coefficient_tables_are_integral() {
        let q = coefficient_rows('Q', 6);
        assert_eq!(
            q[4],
            vec![BigInt::from(24), BigInt::from(18), BigInt::from(1)]
        );
        let p = coefficient_rows('P', 6);
        assert_eq!(p[2], vec![BigInt::from(0), BigInt::from(2)]);
    }

    proptest! {
        #[test]
        fn gcf_matches_p_over_q(n in 1usize..=25, num in 1i64..50, den in 1i64..50) {
            prop_assert!(gcf_convergent_check(n, &rat(num, den)));
        }

        #[test]
        fn bivariate_eval_is_a_ring_map(n in 0usize..8, x in -5i64..5, y in -5i64..5) {
            let (x, y) = (rat(x, 3), rat(y, 2));
            let a = r_poly(n);
            let b = s_poly(n + 1);
            prop_assert_eq!(a.mul(&b).eval(&x, &y), a.eval(&x, &y) * b.eval(&x, &y));
            prop_assert_eq!(a.add(&b).eval(&x, &y), a.eval(&x, &y) + b.eval(&x, &y));
        }
    }
}
