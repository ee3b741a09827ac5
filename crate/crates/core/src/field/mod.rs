//! Exact finite-field arithmetic.
//!
//! [`BinaryFieldCtx`] implements GF(2^k) for `k <= 16` in a polynomial basis;
//! [`PrimeFieldCtx`] is a prime field GF(ℓ) equipped with a fixed root of
//! unity, which is what the character-table engine works over.

mod binary;
mod prime;

pub use binary::{BinaryFieldCtx, BinaryFieldElement, DEFAULT_MODULI};
pub use prime::{prime_field_with_root, PrimeField, PrimeFieldCtx};
