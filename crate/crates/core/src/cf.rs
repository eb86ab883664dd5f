//! Simple continued fractions `[a_0, a_1, a_2, ...]`: convergents by the
//! classical recurrence, the Euler-Mindig even-subset sums as an independent
//! route to the same numbers, and exact evaluation of finite fractions.

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{BigInt, Rational};

/// The `n`th convergent `p_n / q_n`, including the formal `n = -1` entry
/// `1 / 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Convergent {
    pub n: i64,
    #[serde(serialize_with = "crate::serde_bigint")]
    pub p: BigInt,
    #[serde(serialize_with = "crate::serde_bigint")]
    pub q: BigInt,
}

impl Convergent {
    pub fn new(n: i64, p: BigInt, q: BigInt) -> Self {
        Self { n, p, q }
    }

    pub fn value(&self) -> Option<Rational> {
        (!self.q.is_zero()).then(|| Rational::new(self.p.clone(), self.q.clone()))
    }
}

/// Partial denominators indexed from 0. `None` past the end of a finite
/// fraction.
pub trait DenomStream {
    fn term(&self, i: usize) -> Option<BigInt>;
}

impl DenomStream for [i64] {
    fn term(&self, i: usize) -> Option<BigInt> {
        self.get(i).map(|&v| BigInt::from(v))
    }
}

impl DenomStream for Vec<i64> {
    fn term(&self, i: usize) -> Option<BigInt> {
        self.as_slice().term(i)
    }
}

impl DenomStream for [BigInt] {
    fn term(&self, i: usize) -> Option<BigInt> {
        self.get(i).cloned()
    }
}

impl DenomStream for Vec<BigInt> {
    fn term(&self, i: usize) -> Option<BigInt> {
        self.get(i).cloned()
    }
}

impl<S: DenomStream + ?Sized> DenomStream for &S {
    fn term(&self, i: usize) -> Option<BigInt> {
        (**self).term(i)
    }
}

/// An unbounded stream given by a function of the index.
pub struct FnStream<F>(pub F);

impl<F: Fn(usize) -> BigInt> DenomStream for FnStream<F> {
    fn term(&self, i: usize) -> Option<BigInt> {
        Some((self.0)(i))
    }
}

/// `[a_1, a_2, ...]` from `[a_0, a_1, ...]`.
pub struct Shifted<S>(pub S);

impl<S: DenomStream> DenomStream for Shifted<S> {
    fn term(&self, i: usize) -> Option<BigInt> {
        self.0.term(i + 1)
    }
}

fn take<S: DenomStream + ?Sized>(a: &S, i: usize) -> Result<BigInt> {
    a.term(i).ok_or(Error::StreamExhausted(i))
}

/// Convergents for `n = -1, 0, ..., n_max`; entry `i` holds index `i - 1`.
pub fn convergents<S: DenomStream + ?Sized>(a: &S, n_max: usize) -> Result<Vec<Convergent>> {
    let mut out = Vec::with_capacity(n_max + 2);
    out.push(Convergent::new(-1, BigInt::one(), BigInt::zero()));
    let (mut p2, mut q2) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (take(a, 0)?, BigInt::one());
    out.push(Convergent::new(0, p1.clone(), q1.clone()));
    for n in 1..=n_max {
        let an = take(a, n)?;
        let p = &an * &p1 + &p2;
        let q = &an * &q1 + &q2;
        p2 = std::mem::replace(&mut p1, p);
        q2 = std::mem::replace(&mut q1, q);
        out.push(Convergent::new(n as i64, p1.clone(), q1.clone()));
    }
    Ok(out)
}

/// The single convergent of index `n`.
pub fn convergent<S: DenomStream + ?Sized>(a: &S, n: usize) -> Result<Convergent> {
    Ok(convergents(a, n)?.pop().expect("nonempty"))
}

/// True iff `s` is a disjoint union of runs of consecutive integers, each of
/// even length. Order and duplicates in `s` are ignored.
pub fn is_even_set(s: &[i64]) -> bool {
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    let mut run = 0usize;
    for (i, x) in v.iter().enumerate() {
        if i > 0 && *x == v[i - 1] + 1 {
            run += 1;
        } else {
            if run % 2 == 1 {
                return false;
            }
            run = 1;
        }
    }
    run % 2 == 0
}

/// Enumeration guard for [`euler_mindig`].
pub const EULER_MINDIG_MAX: usize = 22;
/// Enumeration guard for [`euler_mindig_naive`].
pub const EULER_MINDIG_NAIVE_MAX: usize = 14;

/// Visits every `S` with `S ⊆_e {lo, ..., hi}` (complement even), building
/// the complement from disjoint adjacent pairs.
fn for_each_evenly_contained(lo: usize, hi: usize, visit: &mut impl FnMut(&[usize])) {
    fn go(i: usize, hi: usize, chosen: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        if i > hi {
            visit(chosen);
            return;
        }
        chosen.push(i);
        go(i + 1, hi, chosen, visit);
        chosen.pop();
        if i < hi {
            go(i + 2, hi, chosen, visit);
        }
    }
    if lo > hi {
        visit(&[]);
        return;
    }
    let mut chosen = Vec::new();
    go(lo, hi, &mut chosen, visit);
}

fn product_over(idx: &[usize], terms: &[BigInt]) -> BigInt {
    idx.iter().fold(BigInt::one(), |acc, &i| acc * &terms[i])
}

/// `p_n` and `q_n` as sums over evenly contained subsets:
/// `p_n = sum_{S ⊆_e {0..n}} prod_{i in S} a_i`,
/// `q_n = sum_{S ⊆_e {1..n}} prod_{i in S} a_i`.
pub fn euler_mindig<S: DenomStream + ?Sized>(a: &S, n: usize) -> Result<Convergent> {
    if n > EULER_MINDIG_MAX {
        return Err(Error::IndexTooLarge {
            index: n,
            max: EULER_MINDIG_MAX,
        });
    }
    let terms = (0..=n).map(|i| take(a, i)).collect::<Result<Vec<_>>>()?;
    let mut p = BigInt::zero();
    for_each_evenly_contained(0, n, &mut |s| p += product_over(s, &terms));
    let mut q = BigInt::zero();
    for_each_evenly_contained(1, n, &mut |s| q += product_over(s, &terms));
    Ok(Convergent::new(n as i64, p, q))
}

/// The same sums by testing every subset of `{0..n}` with [`is_even_set`].
pub fn euler_mindig_naive<S: DenomStream + ?Sized>(a: &S, n: usize) -> Result<Convergent> {
    if n > EULER_MINDIG_NAIVE_MAX {
        return Err(Error::IndexTooLarge {
            index: n,
            max: EULER_MINDIG_NAIVE_MAX,
        });
    }
    let terms = (0..=n).map(|i| take(a, i)).collect::<Result<Vec<_>>>()?;
    let sum_over = |lo: usize| -> BigInt {
        let width = n + 1 - lo;
        let mut total = BigInt::zero();
        for mask in 0u32..(1u32 << width) {
            let (mut inside, mut outside) = (Vec::new(), Vec::new());
            for b in 0..width {
                let idx = lo + b;
                if mask >> b & 1 == 1 {
                    inside.push(idx);
                } else {
                    outside.push(idx as i64);
                }
            }
            if is_even_set(&outside) {
                total += product_over(&inside, &terms);
            }
        }
        total
    };
    Ok(Convergent::new(n as i64, sum_over(0), sum_over(1)))
}

/// Exact value of `a_0 + 1/(a_1 + 1/(... + 1/a_n))`, folded from the tail.
pub fn eval_finite(a: &[BigInt]) -> Rational {
    assert!(
        !a.is_empty(),
        "eval_finite needs at least one partial denominator"
    );
    let mut acc = Rational::from_integer(a[a.len() - 1].clone());
    for ai in a[..a.len() - 1].iter().rev() {
        acc = Rational::from_integer(ai.clone()) + acc.recip();
    }
    acc
}

pub fn eval_finite_i64(a: &[i64]) -> Rational {
    eval_finite(&a.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>())
}

/// `q_n` of `[a_0, a_1, ...]` equals `p_{n-1}` of `[a_1, a_2, ...]`.
pub fn shift_check<S: DenomStream + ?Sized>(a: &S, n: usize) -> Result<bool> {
    assert!(n >= 1, "shift_check needs n >= 1");
    let q = convergent(a, n)?.q;
    let p = convergent(&Shifted(a), n - 1)?.p;
    Ok(p == q)
}

/// `p_n q_{n-1} - p_{n-1} q_n = (-1)^(n-1)` and `gcd(p_n, q_n) = 1` along a
/// convergent table.
pub fn table_is_consistent(table: &[Convergent]) -> bool {
    table.windows(2).all(|w| {
        let (prev, cur) = (&w[0], &w[1]);
        let det = &cur.p * &prev.q - &prev.p * &cur.q;
        let expect = if (cur.n - 1).rem_euclid(2) == 0 {
            1
        } else {
            -1
        };
        det == BigInt::from(expect) && cur.p.gcd(&cur.q).is_one()
    })
}
