use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::BinaryFieldCtx;
use crate::group::{Element, FiniteGroup, GroupBackend};

use super::action::{lift_action, ActionTable};
use super::extraspecial::build_extraspecial_e;
use super::semilinear::{build_torus_t, paper_field, SemilinearBackend};
use super::symplectic::SymplecticData;

const U_BITS: u32 = 10;
const A_SHIFT: u32 = 10;
const T_SHIFT: u32 = 11;

/// `G = E ⋊ T` on packed triples `u | a << 10 | t << 11`, where `t` indexes
/// the sorted elements of `T`:
///
/// `(u, a, t)(v, b, s) = (u + L_t v, a + b + c(u, L_t v) + d_t(v), ts)`.
pub struct PaperGBackend {
    forms: Arc<SymplecticData>,
    action: Arc<ActionTable>,
}

impl PaperGBackend {
    pub fn encode(u: u32, a: u8, t: usize) -> Element {
        u64::from(u) | (u64::from(a) << A_SHIFT) | ((t as u64) << T_SHIFT)
    }

    /// `(u, a, t)` with `t` an index into the sorted elements of `T`.
    pub fn decode(key: Element) -> (u32, u8, usize) {
        (
            (key & ((1 << U_BITS) - 1)) as u32,
            (key >> A_SHIFT & 1) as u8,
            (key >> T_SHIFT) as usize,
        )
    }
}

impl GroupBackend for PaperGBackend {
    fn identity(&self) -> Element {
        // the identity of T has the smallest key, so index 0
        0
    }

    #[inline]
    fn mul(&self, x: Element, y: Element) -> Element {
        let (u, a, t) = Self::decode(x);
        let (v, b, s) = Self::decode(y);
        let phi = self.action.automorphism(t);
        let lv = phi.linear(v);
        let top = a ^ b ^ self.forms.cocycle(u, lv) ^ phi.shift(v);
        Self::encode(u ^ lv, top, self.action.t_mul(t, s))
    }

    fn inv(&self, x: Element) -> Element {
        let (u, a, t) = Self::decode(x);
        let ti = self.action.t_inv(t);
        let phi = self.action.automorphism(ti);
        // φ_{t^{-1}} applied to (u, a)^{-1} = (u, a + Q(u))
        Self::encode(
            phi.linear(u),
            a ^ self.forms.quadratic(u) ^ phi.shift(u),
            ti,
        )
    }

    fn key_bound(&self) -> Option<u64> {
        Some(1 << 19)
    }
}

/// Everything built on the way to `G`, kept for the certificate checks.
pub struct PaperConstruction {
    pub field: Arc<BinaryFieldCtx>,
    pub forms: Arc<SymplecticData>,
    pub torus: FiniteGroup,
    pub semilinear: Arc<SemilinearBackend>,
    pub action: Arc<ActionTable>,
    pub extraspecial: FiniteGroup,
    pub group: FiniteGroup,
}

impl PaperConstruction {
    pub fn build() -> Result<Self> {
        let field = paper_field()?;
        let forms = Arc::new(SymplecticData::build(&field)?);
        let (torus, semilinear) = build_torus_t(field.clone())?;
        let action = Arc::new(lift_action(&torus, &semilinear, &forms)?);
        let extraspecial = build_extraspecial_e(forms.clone())?;
        if action.t_keys()[0] != torus.identity() {
            return Err(Error::Construction(
                "identity of T is not its smallest element".into(),
            ));
        }
        let backend = Arc::new(PaperGBackend {
            forms: forms.clone(),
            action: action.clone(),
        });
        let mut gens = vec![PaperGBackend::encode(1, 0, 0)];
        gens.extend(
            torus
                .generators()
                .iter()
                .map(|&t| PaperGBackend::encode(0, 0, torus.idx(t) as usize)),
        );
        let group = FiniteGroup::new("paper_g", backend.clone(), gens);

        check_associativity(backend.as_ref(), group.generators())?;
        let order = group.order()?;
        if order != 2048 * 165 {
            return Err(Error::Construction(format!(
                "|G| = {order}, expected 337920"
            )));
        }
        Ok(Self {
            field,
            forms,
            torus,
            semilinear,
            action,
            extraspecial,
            group,
        })
    }

    /// Index in `T` of the image of an element of `G`.
    pub fn project(&self, g: Element) -> usize {
        PaperGBackend::decode(g).2
    }
}

/// `G = E ⋊ T` of order 337,920.
pub fn build_paper_g() -> Result<FiniteGroup> {
    Ok(PaperConstruction::build()?.group)
}

/// Associativity on every triple of generators and on 10^5 random triples
/// (fixed seed).
fn check_associativity(g: &PaperGBackend, generators: &[Element]) -> Result<()> {
    let assoc = |x, y, z| g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z));
    for &x in generators {
        for &y in generators {
            for &z in generators {
                if !assoc(x, y, z) {
                    return Err(Error::Construction(format!(
                        "not associative at ({x:#x}, {y:#x}, {z:#x})"
                    )));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let n_t = g.action.len();
    let mut random = || {
        PaperGBackend::encode(
            rng.gen_range(0..1024),
            rng.gen_range(0..2),
            rng.gen_range(0..n_t),
        )
    };
    for _ in 0..100_000 {
        let (x, y, z) = (random(), random(), random());
        if !assoc(x, y, z) {
            return Err(Error::Construction(format!(
                "not associative at ({x:#x}, {y:#x}, {z:#x})"
            )));
        }
        if g.mul(x, g.inv(x)) != 0 {
            return Err(Error::Construction(format!("inverse fails at {x:#x}")));
        }
    }
    Ok(())
}
