use crate::error::Result;

use super::{Element, FiniteGroup};

/// A subgroup of an enumerated parent group, stored as a membership mask
/// over the parent's dense element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    mask: Vec<bool>,
    elements: Vec<u32>,
    generators: Vec<Element>,
}

impl Subgroup {
    pub(crate) fn from_mask(g: &FiniteGroup, mask: Vec<bool>) -> Result<Self> {
        let elements: Vec<u32> = mask
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i as u32)
            .collect();
        let generators = greedy_generators(g, &elements)?;
        Ok(Self {
            mask,
            elements,
            generators,
        })
    }

    pub fn trivial(g: &FiniteGroup) -> Result<Self> {
        let mut mask = vec![false; g.order()? as usize];
        mask[g.idx(g.identity()) as usize] = true;
        Self::from_mask(g, mask)
    }

    pub fn whole(g: &FiniteGroup) -> Result<Self> {
        Self::from_mask(g, vec![true; g.order()? as usize])
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    /// Parent indices of the members, increasing.
    pub fn element_indices(&self) -> &[u32] {
        &self.elements
    }

    /// Member keys in increasing order.
    pub fn elements<'a>(&'a self, g: &'a FiniteGroup) -> impl Iterator<Item = Element> + 'a {
        self.elements.iter().map(move |&i| g.key(i))
    }

    #[inline]
    pub fn contains_index(&self, idx: u32) -> bool {
        self.mask[idx as usize]
    }

    pub fn contains(&self, g: &FiniteGroup, key: Element) -> bool {
        matches!(g.index_of(key), Ok(Some(i)) if self.mask[i as usize])
    }

    /// A small generating set, picked greedily in key order.
    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&i| other.mask[i as usize])
    }

    /// Invariance under conjugation by the parent's generators.
    pub fn is_normal_in(&self, g: &FiniteGroup) -> bool {
        self.generators.iter().all(|&x| {
            g.generators()
                .iter()
                .all(|&s| self.mask[g.idx(g.conjugate(x, s)) as usize])
        })
    }
}

/// Closure of `gens` under right multiplication, as a mask.
fn closure_mask(g: &FiniteGroup, gens: &[Element], n: usize) -> Vec<bool> {
    let mut mask = vec![false; n];
    let id = g.identity();
    mask[g.idx(id) as usize] = true;
    let mut queue = vec![id];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &s in gens {
            let y = g.mul(x, s);
            let i = g.idx(y) as usize;
            if !mask[i] {
                mask[i] = true;
                queue.push(y);
            }
        }
    }
    mask
}

fn greedy_generators(g: &FiniteGroup, elements: &[u32]) -> Result<Vec<Element>> {
    let n = g.order()? as usize;
    let mut gens = Vec::new();
    let mut current = closure_mask(g, &gens, n);
    let mut size = 1;
    for &i in elements {
        if size == elements.len() {
            break;
        }
        if !current[i as usize] {
            gens.push(g.key(i));
            current = closure_mask(g, &gens, n);
            size = current.iter().filter(|&&m| m).count();
        }
    }
    Ok(gens)
}

/// The subgroup generated by `gens`.
pub fn subgroup_generated(g: &FiniteGroup, gens: &[Element]) -> Result<Subgroup> {
    let n = g.order()? as usize;
    Subgroup::from_mask(g, closure_mask(g, gens, n))
}
