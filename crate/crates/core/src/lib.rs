//! Character tables and character codegrees of finite solvable groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`]: exact arithmetic in GF(2^k) and in prime fields.
//! * [`group`]: enumerable finite groups, conjugacy classes and the
//!   structural subgroups (center, p-cores, Fitting subgroup).
//! * [`construct`]: a small corpus of named groups, the semilinear group
//!   `T` of order 165, the extraspecial group `E` of order 2^11 and the
//!   semidirect product `G = E ⋊ T` of order 337,920.
//! * [`chartab`]: Dixon–Schneider character tables with exact values in
//!   `Z[ζ_e]`.
//! * [`codegree`]: kernels, codegrees, and the checks built on them.

pub mod chartab;
pub mod codegree;
pub mod construct;
mod error;
pub mod field;
pub mod group;
pub mod numtheory;

pub use chartab::{character_table, CharacterTable, CyclotomicValue};
pub use codegree::{codegrees, moreto_check, pi_set, CodegreeRecord, Codegrees, MoretoReport};
pub use error::{Error, Result};
pub use group::{ClassData, FiniteGroup, Subgroup};
