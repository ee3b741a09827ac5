use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup, GroupBackend};

/// `N ⋊ H` on pairs of dense indices, key `n * |H| + h`, with
/// `(n1, h1)(n2, h2) = (n1 · h1(n2), h1 h2)`.
pub struct SemidirectBackend {
    normal: Arc<FiniteGroup>,
    acting: Arc<FiniteGroup>,
    action: Vec<Vec<u32>>,
    h_order: u64,
}

impl SemidirectBackend {
    fn split(&self, k: Element) -> (u32, u32) {
        ((k / self.h_order) as u32, (k % self.h_order) as u32)
    }

    fn join(&self, n: u32, h: u32) -> Element {
        u64::from(n) * self.h_order + u64::from(h)
    }
}

impl GroupBackend for SemidirectBackend {
    fn identity(&self) -> Element {
        self.join(
            self.normal.idx(self.normal.identity()),
            self.acting.idx(self.acting.identity()),
        )
    }

    fn mul(&self, x: Element, y: Element) -> Element {
        let (n1, h1) = self.split(x);
        let (n2, h2) = self.split(y);
        let moved = self.normal.key(self.action[h1 as usize][n2 as usize]);
        let n = self.normal.idx(self.normal.mul(self.normal.key(n1), moved));
        let h = self
            .acting
            .idx(self.acting.mul(self.acting.key(h1), self.acting.key(h2)));
        self.join(n, h)
    }

    fn inv(&self, x: Element) -> Element {
        let (n, h) = self.split(x);
        let hi = self.acting.idx(self.acting.inv(self.acting.key(h)));
        let ni = self.normal.idx(self.normal.inv(self.normal.key(n)));
        self.join(self.action[hi as usize][ni as usize], hi)
    }

    fn key_bound(&self) -> Option<u64> {
        Some(self.normal.order().ok()? * self.h_order)
    }
}

/// Extends images of the acting group's generators (each a permutation of
/// the normal subgroup's dense indices) to a table over all of `H`.
pub fn extend_action(
    normal: &FiniteGroup,
    acting: &FiniteGroup,
    generator_images: &[Vec<u32>],
) -> Result<Vec<Vec<u32>>> {
    let n = normal.order()? as usize;
    let h_keys = acting.elements()?.to_vec();
    if generator_images.len() != acting.generators().len() {
        return Err(Error::InvalidArgument(format!(
            "{} generator images for {} generators",
            generator_images.len(),
            acting.generators().len()
        )));
    }
    for img in generator_images {
        let mut seen = vec![false; n];
        if img.len() != n
            || img
                .iter()
                .any(|&i| (i as usize) >= n || std::mem::replace(&mut seen[i as usize], true))
        {
            return Err(Error::InvalidArgument(
                "generator image is not a permutation of N".into(),
            ));
        }
    }
    let mut table: Vec<Option<Vec<u32>>> = vec![None; h_keys.len()];
    let id = acting.idx(acting.identity()) as usize;
    table[id] = Some((0..n as u32).collect());
    let mut queue = std::collections::VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for (g, img) in acting.generators().iter().zip(generator_images) {
            let y = acting.idx(acting.mul(h_keys[x], *g)) as usize;
            let current = table[x].as_ref().unwrap();
            let composed: Vec<u32> = (0..n).map(|i| current[img[i] as usize]).collect();
            match &table[y] {
                Some(existing) if *existing != composed => {
                    return Err(Error::InvalidArgument(
                        "generator images do not define a homomorphism".into(),
                    ))
                }
                Some(_) => {}
                None => {
                    table[y] = Some(composed);
                    queue.push_back(y);
                }
            }
        }
    }
    Ok(table
        .into_iter()
        .map(|t| t.expect("acting group is generated"))
        .collect())
}

/// `N ⋊ H` for an action given as one permutation of `N`'s dense indices
/// per element of `H` (in `H`'s sorted order).
pub fn build_semidirect(
    normal: Arc<FiniteGroup>,
    acting: Arc<FiniteGroup>,
    action: Vec<Vec<u32>>,
) -> Result<FiniteGroup> {
    let n = normal.order()? as usize;
    let h = acting.order()?;
    if action.len() as u64 != h || action.iter().any(|a| a.len() != n) {
        return Err(Error::InvalidArgument(
            "action table has the wrong shape".into(),
        ));
    }
    let n_keys = normal.elements()?.to_vec();
    let h_keys = acting.elements()?.to_vec();
    for (hi, perm) in action.iter().enumerate() {
        // automorphism on (all elements) x (generators)
        for (a, &x) in n_keys.iter().enumerate() {
            for &s in normal.generators() {
                let si = normal.idx(s) as usize;
                let lhs = perm[normal.idx(normal.mul(x, s)) as usize];
                let rhs =
                    normal.idx(normal.mul(n_keys[perm[a] as usize], n_keys[perm[si] as usize]));
                if lhs != rhs {
                    return Err(Error::InvalidArgument(format!(
                        "action of element {hi} is not an automorphism"
                    )));
                }
            }
        }
        // homomorphism against the generators of H
        for &g in acting.generators() {
            let gi = acting.idx(g) as usize;
            let prod = acting.idx(acting.mul(h_keys[hi], g)) as usize;
            if (0..n).any(|i| action[prod][i] != perm[action[gi][i] as usize]) {
                return Err(Error::InvalidArgument(
                    "action is not a homomorphism".into(),
                ));
            }
        }
    }
    let name = format!("{} x| {}", normal.name(), acting.name());
    let backend = SemidirectBackend {
        h_order: h,
        normal: normal.clone(),
        acting: acting.clone(),
        action,
    };
    let n_id = normal.idx(normal.identity());
    let h_id = acting.idx(acting.identity());
    let mut gens: Vec<Element> = normal
        .generators()
        .iter()
        .map(|&s| backend.join(normal.idx(s), h_id))
        .collect();
    gens.extend(
        acting
            .generators()
            .iter()
            .map(|&s| backend.join(n_id, acting.idx(s))),
    );
    let group = FiniteGroup::new(name, Arc::new(backend), gens);
    if group.order()? != n as u64 * h {
        return Err(Error::Construction(format!(
            "|N x| H| = {} != {} * {h}",
            group.order()?,
            n
        )));
    }
    Ok(group)
}
