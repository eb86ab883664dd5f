//! Exact convergents and certified limits of the Hurwitzian continued
//! fractions
//!
//! ```text
//! ξ(α, β₀, β₁, d, r) = [α, …, α (r times), β₀, (α, …, α (d-1 times), β₀ + β₁·n) for n ≥ 1]
//! ```
//!
//! The crate computes the convergents of ξ by three mutually checking routes
//! (classical recurrence, closed form in the magic numbers σ and ρ, and a
//! convolution recurrence), evaluates the limit from the σ/ρ power series and
//! from Bessel-function ratios to any requested number of certified digits,
//! verifies the supporting polynomial identities exactly, and classifies the
//! parameter tuples whose limits are elementary.
//!
//! Start with [`hurwitz::CFParams`], [`hurwitz::closed_form_convergent`] and
//! [`limits::xi_limit`]; the `examples/` directory has one runnable program
//! per capability.

pub mod cf;
pub mod classify;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod fibpoly;
pub mod hurwitz;
pub mod identities;
pub mod limits;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::{BigInt, PrecReal, Rational};
pub use hurwitz::{CFParams, MagicPair};

/// Big integers are serialized as decimal strings, never JSON numbers.
pub(crate) fn serde_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}
