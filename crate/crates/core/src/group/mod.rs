//! Enumerable finite groups.
//!
//! A group is given by a [`GroupBackend`] (multiplication, inversion and
//! identity on opaque integer keys) plus a list of generators. Elements are
//! identified with their keys everywhere; once a group is enumerated, the
//! keys are also mapped to dense indices `0..|G|` in sorted key order, which
//! is what subgroup membership and class maps are indexed by.

mod classes;
mod structure;
mod subgroup;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use once_cell::sync::OnceCell;

use crate::error::{Error, Result};

pub use classes::ClassData;
pub use structure::{
    center, element_order_spectrum, fitting_subgroup, hall_coprime_check,
    is_chief_factor_above_center, is_cyclic, is_nilpotent, normal_closure, order_modulo, p_core,
    CyclicVerdict, OrderSpectrum,
};
pub use subgroup::{subgroup_generated, Subgroup};

/// Group elements are identified with injective 64-bit keys supplied by the backend.
pub type Element = u64;

/// Default cap on the number of elements an enumeration may produce.
pub const DEFAULT_SIZE_CAP: usize = 1 << 22;

/// Keys up to this bound get a direct-indexed lookup table.
const DIRECT_INDEX_LIMIT: u64 = 1 << 24;

/// Group law on element keys.
pub trait GroupBackend: Send + Sync {
    fn identity(&self) -> Element;
    fn mul(&self, a: Element, b: Element) -> Element;
    fn inv(&self, a: Element) -> Element;

    /// Exclusive upper bound on every key, when one is known.
    fn key_bound(&self) -> Option<u64> {
        None
    }
}

enum KeyIndex {
    Direct(Vec<u32>),
    Hashed(HashMap<Element, u32>),
}

struct Enumeration {
    keys: Vec<Element>,
    index: KeyIndex,
}

impl Enumeration {
    fn lookup(&self, key: Element) -> Option<u32> {
        match &self.index {
            KeyIndex::Direct(table) => match table.get(key as usize) {
                Some(&i) if i != u32::MAX => Some(i),
                _ => None,
            },
            KeyIndex::Hashed(map) => map.get(&key).copied(),
        }
    }
}

/// A finite group generated by explicit elements of a backend.
pub struct FiniteGroup {
    name: String,
    backend: Arc<dyn GroupBackend>,
    generators: Vec<Element>,
    cap: usize,
    enumeration: OnceCell<Enumeration>,
    classes: OnceCell<ClassData>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("generators", &self.generators)
            .field("order", &self.enumeration.get().map(|e| e.keys.len()))
            .finish()
    }
}

impl FiniteGroup {
    pub fn new(
        name: impl Into<String>,
        backend: Arc<dyn GroupBackend>,
        generators: Vec<Element>,
    ) -> Self {
        Self {
            name: name.into(),
            backend,
            generators,
            cap: DEFAULT_SIZE_CAP,
            enumeration: OnceCell::new(),
            classes: OnceCell::new(),
        }
    }

    /// Replaces the enumeration size cap. Has no effect once enumerated.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn backend(&self) -> &Arc<dyn GroupBackend> {
        &self.backend
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    #[inline]
    pub fn identity(&self) -> Element {
        self.backend.identity()
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.backend.mul(a, b)
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        self.backend.inv(a)
    }

    /// `g x g^{-1}`.
    #[inline]
    pub fn conjugate(&self, x: Element, g: Element) -> Element {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn commutator(&self, a: Element, b: Element) -> Element {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, x: Element, mut n: u64) -> Element {
        let mut acc = self.identity();
        let mut base = x;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// Order of `x`, by repeated multiplication.
    pub fn element_order(&self, x: Element) -> u64 {
        let id = self.identity();
        let mut y = x;
        let mut n = 1;
        while y != id {
            y = self.mul(y, x);
            n += 1;
        }
        n
    }

    fn enumeration(&self) -> Result<&Enumeration> {
        self.enumeration.get_or_try_init(|| self.enumerate_now())
    }

    fn enumerate_now(&self) -> Result<Enumeration> {
        let id = self.identity();
        let mut keys = vec![id];
        let bound = self
            .backend
            .key_bound()
            .filter(|&b| b <= DIRECT_INDEX_LIMIT);
        let mut seen_direct = bound.map(|b| vec![false; b as usize]);
        let mut seen_hashed = std::collections::HashSet::new();
        let mut mark = |k: Element| -> bool {
            match seen_direct.as_mut() {
                Some(v) => !std::mem::replace(&mut v[k as usize], true),
                None => seen_hashed.insert(k),
            }
        };
        mark(id);
        let mut head = 0;
        while head < keys.len() {
            let x = keys[head];
            head += 1;
            for &g in &self.generators {
                let y = self.mul(x, g);
                if mark(y) {
                    if keys.len() >= self.cap {
                        return Err(Error::SizeCap { cap: self.cap });
                    }
                    keys.push(y);
                }
            }
        }
        keys.sort_unstable();
        let index = match bound {
            Some(b) => {
                let mut table = vec![u32::MAX; b as usize];
                for (i, &k) in keys.iter().enumerate() {
                    table[k as usize] = i as u32;
                }
                KeyIndex::Direct(table)
            }
            None => KeyIndex::Hashed(
                keys.iter()
                    .enumerate()
                    .map(|(i, &k)| (k, i as u32))
                    .collect(),
            ),
        };
        log::debug!("enumerated {} with {} elements", self.name, keys.len());
        Ok(Enumeration { keys, index })
    }

    /// All elements, sorted by key.
    pub fn elements(&self) -> Result<&[Element]> {
        Ok(&self.enumeration()?.keys)
    }

    pub fn order(&self) -> Result<u64> {
        Ok(self.enumeration()?.keys.len() as u64)
    }

    /// Dense index of an element. Enumerates the group on first use.
    pub fn index_of(&self, key: Element) -> Result<Option<u32>> {
        Ok(self.enumeration()?.lookup(key))
    }

    /// Dense index of an element of an already enumerated group.
    ///
    /// Panics if the group has not been enumerated or `key` is not an element.
    #[inline]
    pub fn idx(&self, key: Element) -> u32 {
        self.enumeration
            .get()
            .and_then(|e| e.lookup(key))
            .unwrap_or_else(|| panic!("{key:#x} is not an element of {}", self.name))
    }

    /// Element with the given dense index (enumerated groups only).
    #[inline]
    pub fn key(&self, idx: u32) -> Element {
        self.enumeration.get().expect("group not enumerated").keys[idx as usize]
    }

    pub fn contains(&self, key: Element) -> Result<bool> {
        Ok(self.index_of(key)?.is_some())
    }

    /// Conjugacy classes, computed once and cached.
    pub fn classes(&self) -> Result<&ClassData> {
        self.classes.get_or_try_init(|| ClassData::compute(self))
    }
}


#[cfg(test)]
mod tests {
    use super::testing::*;
    use super::*;

    #[test]
    fn trivial_enumeration() {
        let g = cyclic(1);
        assert_eq!(g.order().unwrap(), 1);
        assert_eq!(g.elements().unwrap(), &[0]);
    }

    #[test]
    fn s3_enumeration_and_index() {
        let g = sym(3);
        assert_eq!(g.order().unwrap(), 6);
        let els = g.elements().unwrap().to_vec();
        assert!(els.windows(2).all(|w| w[0] < w[1]));
        for (i, &k) in els.iter().enumerate() {
            assert_eq!(g.idx(k), i as u32);
            assert!(els.contains(&g.inv(k)));
            assert_eq!(g.mul(k, g.inv(k)), g.identity());
        }
    }

    #[test]
    fn size_cap_is_enforced() {
        let g = sym(5).with_cap(100);
        assert_eq!(g.order(), Err(Error::SizeCap { cap: 100 }));
    }

    #[test]
    fn element_orders() {
        let g = cyclic(12);
        assert_eq!(g.element_order(0), 1);
        assert_eq!(g.element_order(8), 3);
        assert_eq!(g.pow(5, 7), 11);
    }
}
