//! Builders for every group in scope.
//!
//! The small corpus uses permutation, matrix and quaternion backends. The
//! counterexample group `G = E ⋊ T` is built from GF(2^10): `T ≤ Γ(2^10)`
//! of order 165 ([`semilinear`]), the forms `B`, `Q` and the cocycle `c`
//! ([`symplectic`]), the extraspecial group `E` of order 2^11
//! ([`extraspecial`]) and the lifted action `T -> Aut(E)` ([`action`]).

pub mod action;
pub mod extraspecial;
pub mod paper;
pub mod semidirect;
pub mod semilinear;
pub mod small;
pub mod symplectic;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

pub use action::{lift_action, ActionTable, AutomorphismOfE};
pub use extraspecial::{build_extraspecial_e, ExtraspecialBackend};
pub use paper::{build_paper_g, PaperConstruction, PaperGBackend};
pub use semidirect::{build_semidirect, extend_action};
pub use semilinear::{build_torus_t, paper_field, SemilinearBackend};
pub use symplectic::SymplecticData;

use small::{CyclicBackend, HeisenbergBackend, PermutationBackend, QuaternionBackend, Sl23Backend};

/// Names accepted by [`build_corpus_group`], besides `C_n`.
pub const CORPUS_NAMES: [&str; 8] = [
    "trivial",
    "D8",
    "Q8",
    "S3",
    "S4",
    "A4",
    "SL23",
    "extraspecial_p_small",
];

fn permutation_group(name: &str, points: usize, gens: &[&[u8]]) -> FiniteGroup {
    let b = PermutationBackend::new(points);
    let keys = gens.iter().map(|g| b.pack(g)).collect();
    FiniteGroup::new(name, Arc::new(b), keys)
}

pub fn cyclic_group(n: u64) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidArgument("cyclic group of order 0".into()));
    }
    let gens = if n > 1 { vec![1] } else { vec![] };
    Ok(FiniteGroup::new(
        format!("C_{n}"),
        Arc::new(CyclicBackend(n)),
        gens,
    ))
}

/// A named member of the small test corpus: `trivial`, `C_n` (or `Cn`), `D8`, `Q8`,
/// `S3`, `S4`, `A4`, `SL23` or `extraspecial_p_small` (the Heisenberg group
/// of order 27).
///
/// Permutations are written as image lists and multiplied left to right.
pub fn build_corpus_group(name: &str) -> Result<FiniteGroup> {
    let group = match name {
        "trivial" => cyclic_group(1)?,
        "D8" => permutation_group("D8", 4, &[&[1, 2, 3, 0], &[0, 3, 2, 1]]),
        "Q8" => FiniteGroup::new("Q8", Arc::new(QuaternionBackend), vec![1, 2]),
        "S3" => permutation_group("S3", 3, &[&[1, 0, 2], &[1, 2, 0]]),
        "S4" => permutation_group("S4", 4, &[&[1, 0, 2, 3], &[1, 2, 3, 0]]),
        "A4" => permutation_group("A4", 4, &[&[1, 2, 0, 3], &[0, 2, 3, 1]]),
        "SL23" => FiniteGroup::new(
            "SL23",
            Arc::new(Sl23Backend),
            vec![
                small::encode_sl23([[1, 1], [0, 1]]),
                small::encode_sl23([[1, 0], [1, 1]]),
            ],
        ),
        "extraspecial_p_small" => FiniteGroup::new(
            "extraspecial_p_small",
            Arc::new(HeisenbergBackend(3)),
            vec![1, 3],
        ),
        other => match other
            .strip_prefix("C_")
            .or_else(|| other.strip_prefix('C'))
            .map(str::parse::<u64>)
        {
            Some(Ok(n)) if n >= 1 => cyclic_group(n)?,
            _ => return Err(Error::UnknownGroup(other.to_string())),
        },
    };
    group.order()?;
    Ok(group)
}

/// Any preset: a corpus name, `torus_t`, `paper_e` or `paper_g`.
pub fn build_named(name: &str) -> Result<FiniteGroup> {
    match name {
        "torus_t" => Ok(build_torus_t(paper_field()?)?.0),
        "paper_e" => {
            let field = paper_field()?;
            build_extraspecial_e(Arc::new(SymplecticData::build(&field)?))
        }
        "paper_g" => build_paper_g(),
        other => build_corpus_group(other),
    }
}
