use std::sync::Arc;

use crate::error::Result;
use crate::group::{Element, FiniteGroup, GroupBackend};

use super::symplectic::SymplecticData;

/// The extraspecial group `E = V × GF(2)` with
/// `(u, a)(v, b) = (u + v, a + b + c(u, v))`. Key `u | a << dim`.
pub struct ExtraspecialBackend {
    forms: Arc<SymplecticData>,
}

impl ExtraspecialBackend {
    pub fn new(forms: Arc<SymplecticData>) -> Self {
        Self { forms }
    }

    pub fn forms(&self) -> &SymplecticData {
        &self.forms
    }

    pub fn encode(&self, u: u32, a: u8) -> Element {
        u64::from(u) | (u64::from(a) << self.forms.dim())
    }

    pub fn decode(&self, key: Element) -> (u32, u8) {
        let dim = self.forms.dim();
        ((key & ((1 << dim) - 1)) as u32, (key >> dim) as u8)
    }
}

impl GroupBackend for ExtraspecialBackend {
    fn identity(&self) -> Element {
        0
    }

    fn mul(&self, x: Element, y: Element) -> Element {
        let (u, a) = self.decode(x);
        let (v, b) = self.decode(y);
        self.encode(u ^ v, a ^ b ^ self.forms.cocycle(u, v))
    }

    fn inv(&self, x: Element) -> Element {
        let (u, a) = self.decode(x);
        self.encode(u, a ^ self.forms.quadratic(u))
    }

    fn key_bound(&self) -> Option<u64> {
        Some(2u64 << self.forms.dim())
    }
}

/// `E` generated by `(e_i, 0)` for the basis vectors `e_i`; the center
/// `{(0,0), (0,1)}` comes out as commutators.
pub fn build_extraspecial_e(forms: Arc<SymplecticData>) -> Result<FiniteGroup> {
    let backend = Arc::new(ExtraspecialBackend::new(forms.clone()));
    let gens = (0..forms.dim())
        .map(|i| backend.encode(1 << i, 0))
        .collect();
    let group = FiniteGroup::new("paper_e", backend, gens);
    group.order()?;
    Ok(group)
}
