use thiserror::Error;

use crate::hurwitz::CFParams;

/// Errors raised by the computations in this crate.
///
/// Most of these signal a broken contract (bad parameters, an index beyond an
/// enumeration guard) or an internal consistency failure; none of them are
/// expected on valid input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("index {index} exceeds the enumeration guard {max}")]
    IndexTooLarge { index: usize, max: usize },

    #[error("partial denominator stream ended at index {0}")]
    StreamExhausted(usize),

    #[error("closed form produced a non-integer {what} for {params} at n={n}")]
    NonIntegerResult {
        params: CFParams,
        n: usize,
        what: &'static str,
    },

    #[error("closed form produced a non-reduced convergent for {params} at n={n}")]
    NotCoprime { params: CFParams, n: usize },

    #[error("closed form requires 0 <= r <= d-1, got {0}")]
    OutsideGuaranteedRegime(CFParams),

    #[error("denominator interval contains zero up to {max_bits} bits of precision")]
    PrecisionExhausted { max_bits: u32 },

    #[error("Bessel order {0} has no standalone evaluator (only half-odd orders and ratios)")]
    UnsupportedOrder(String),

    #[error("magic sum of {0} is not half of an odd integer")]
    NotHalfOdd(CFParams),

    #[error("classification theorems require d >= 2, got d = {0}")]
    UnsupportedD(u64),

    #[error("theorem mismatch at {params}: {detail}")]
    TheoremMismatch { params: CFParams, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
