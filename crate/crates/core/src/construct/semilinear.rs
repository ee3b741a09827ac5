use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::BinaryFieldCtx;
use crate::group::{Element, FiniteGroup, GroupBackend};

/// The semilinear group `Γ(2^k)` of maps `x -> a * x^(2^j)` on GF(2^k).
///
/// Key `a | j << k` with `a` the polynomial-basis coordinates of the
/// nonzero multiplier and `0 <= j < k`.
pub struct SemilinearBackend {
    field: Arc<BinaryFieldCtx>,
    /// `frob[j][x] = x^(2^j)`
    frob: Vec<Vec<u32>>,
}

impl SemilinearBackend {
    pub fn new(field: Arc<BinaryFieldCtx>) -> Self {
        let k = field.degree();
        let frob = (0..k)
            .map(|j| {
                field
                    .elements()
                    .map(|x| field.frobenius(x, j).bits())
                    .collect()
            })
            .collect();
        Self { field, frob }
    }

    pub fn field(&self) -> &BinaryFieldCtx {
        &self.field
    }

    pub fn encode(&self, multiplier: u32, j: u32) -> Element {
        assert!(multiplier != 0 && j < self.field.degree());
        u64::from(multiplier) | (u64::from(j) << self.field.degree())
    }

    /// `(multiplier, j)` for the map `x -> multiplier * x^(2^j)`.
    pub fn decode(&self, key: Element) -> (u32, u32) {
        let k = self.field.degree();
        ((key & ((1 << k) - 1)) as u32, (key >> k) as u32)
    }

    /// Image of the field element with coordinates `x` under `key`.
    #[inline]
    pub fn apply(&self, key: Element, x: u32) -> u32 {
        let (a, j) = self.decode(key);
        self.field.mul_bits(a, self.frob[j as usize][x as usize])
    }
}

impl GroupBackend for SemilinearBackend {
    fn identity(&self) -> Element {
        self.encode(1, 0)
    }

    /// Composition as maps: `(s * t)(x) = s(t(x))`.
    fn mul(&self, s: Element, t: Element) -> Element {
        let k = self.field.degree();
        let (a, j) = self.decode(s);
        let (b, l) = self.decode(t);
        let c = self.field.mul_bits(a, self.frob[j as usize][b as usize]);
        self.encode(c, (j + l) % k)
    }

    fn inv(&self, s: Element) -> Element {
        let k = self.field.degree();
        let (a, j) = self.decode(s);
        let back = (k - j) % k;
        // x = a^{-1 * 2^{-j}} * y^{2^{-j}}
        let a_inv = self
            .field
            .inverse(self.field.elem(a))
            .expect("nonzero multiplier")
            .bits();
        self.encode(self.frob[back as usize][a_inv as usize], back)
    }

    fn key_bound(&self) -> Option<u64> {
        Some(u64::from(self.field.degree()) << self.field.degree())
    }
}

/// The field GF(2^10) with its default modulus.
pub fn paper_field() -> Result<Arc<BinaryFieldCtx>> {
    let field = BinaryFieldCtx::with_default(10)?;
    if !field.modulus_is_primitive() {
        return Err(Error::Construction(
            "default GF(2^10) modulus is not primitive".into(),
        ));
    }
    Ok(Arc::new(field))
}

/// The multiplier `λ = g^31` of order 33, `g` the smallest primitive element.
pub fn torus_multiplier(field: &BinaryFieldCtx) -> u32 {
    field.pow(field.primitive_element(), 31).bits()
}

/// `T = <m_λ, σ>` inside `Γ(2^10)`, where `m_λ` multiplies by an element
/// of order 33 and `σ` is `x -> x^4`. Generators are listed as `[m_λ, σ]`.
pub fn build_torus_t(field: Arc<BinaryFieldCtx>) -> Result<(FiniteGroup, Arc<SemilinearBackend>)> {
    if field.degree() != 10 {
        return Err(Error::InvalidArgument("T lives in Γ(2^10)".into()));
    }
    let lambda = torus_multiplier(&field);
    let l = field.elem(lambda);
    if field.multiplicative_order(l) != 33 || field.norm_to_subfield(l, 5)? != field.one() {
        return Err(Error::Construction(
            "λ is not an order-33 element of the norm kernel".into(),
        ));
    }
    let backend = Arc::new(SemilinearBackend::new(field.clone()));
    let m = backend.encode(lambda, 0);
    let sigma = backend.encode(1, 2);
    let sigma_inv = backend.inv(sigma);
    let m4 = backend.mul(backend.mul(m, m), backend.mul(m, m));
    if backend.mul(backend.mul(sigma, m), sigma_inv) != m4 {
        return Err(Error::Construction("σ m σ^-1 != m^4".into()));
    }
    let group = FiniteGroup::new("torus_t", backend.clone(), vec![m, sigma]);
    if group.order()? != 165 {
        return Err(Error::Construction(format!(
            "|T| = {}, expected 165",
            group.order()?
        )));
    }
    Ok((group, backend))
}
