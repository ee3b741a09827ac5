use rayon::prelude::*;

use crate::group::{ClassData, FiniteGroup};

/// Class multiplication coefficients for a fixed first class `i`:
/// `entries[j][k] = #{(x, y) ∈ C_i × C_j : xy = g_k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMatrix {
    pub class: usize,
    pub entries: Vec<Vec<u64>>,
}

impl ClassMatrix {
    /// For every `k`, runs over `x ∈ C_i` and counts the class of `x^{-1} g_k`.
    pub fn compute(g: &FiniteGroup, cd: &ClassData, i: usize) -> Self {
        let r = cd.len();
        let members = &cd.members[i];
        let columns: Vec<Vec<u64>> = (0..r)
            .into_par_iter()
            .map(|k| {
                let gk = cd.representatives[k];
                let mut col = vec![0u64; r];
                for &x in members {
                    let y = g.mul(g.inv(g.key(x)), gk);
                    col[cd.class_of[g.idx(y) as usize] as usize] += 1;
                }
                col
            })
            .collect();
        let entries = (0..r)
            .map(|j| (0..r).map(|k| columns[k][j]).collect())
            .collect();
        Self { class: i, entries }
    }

    /// `Σ_j a_ijk = |C_i|` for every `k`, and `a_ij0 = |C_i| [j = i']`.
    pub fn satisfies_counting_identities(&self, cd: &ClassData) -> bool {
        let r = cd.len();
        let size = cd.sizes[self.class];
        let sums_ok = (0..r).all(|k| (0..r).map(|j| self.entries[j][k]).sum::<u64>() == size);
        let inverse = cd.inverse_class[self.class] as usize;
        let identity_ok = (0..r).all(|j| self.entries[j][0] == if j == inverse { size } else { 0 });
        sums_ok && identity_ok
    }
}
