//! Lifting the action of `T` on `V = E/Z(E)` to genuine automorphisms of `E`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};

use super::semilinear::SemilinearBackend;
use super::symplectic::SymplecticData;

/// The automorphism `(u, a) -> (L u, a + d(u))` of `E`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AutomorphismOfE {
    /// `linear[u] = L u`
    linear: Vec<u32>,
    /// `d` as a bit table over `V`
    shift: Vec<u64>,
}

impl AutomorphismOfE {
    pub fn identity(size: usize) -> Self {
        Self {
            linear: (0..size as u32).collect(),
            shift: vec![0; size.div_ceil(64)],
        }
    }

    /// The central automorphism `(u, a) -> (u, a + B(w, u))`.
    pub fn central(forms: &SymplecticData, w: u32) -> Self {
        let size = forms.size() as usize;
        let mut out = Self::identity(size);
        for u in 0..size as u32 {
            out.set_shift(u, forms.form(w, u));
        }
        out
    }

    fn size(&self) -> usize {
        self.linear.len()
    }

    #[inline]
    pub fn linear(&self, u: u32) -> u32 {
        self.linear[u as usize]
    }

    #[inline]
    pub fn shift(&self, u: u32) -> u8 {
        (self.shift[(u / 64) as usize] >> (u % 64) & 1) as u8
    }

    fn set_shift(&mut self, u: u32, bit: u8) {
        let word = &mut self.shift[(u / 64) as usize];
        *word = (*word & !(1 << (u % 64))) | (u64::from(bit) << (u % 64));
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut out = Self::identity(self.size());
        for u in 0..self.size() as u32 {
            let lu = inner.linear(u);
            out.linear[u as usize] = self.linear(lu);
            out.set_shift(u, inner.shift(u) ^ self.shift(lu));
        }
        out
    }

    pub fn pow(&self, n: u64) -> Self {
        let mut acc = Self::identity(self.size());
        for _ in 0..n {
            acc = self.compose(&acc);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.linear.iter().enumerate().all(|(u, &l)| u as u32 == l)
            && self.shift.iter().all(|&w| w == 0)
    }

    pub fn order(&self) -> u64 {
        let mut acc = self.clone();
        let mut n = 1;
        while !acc.is_identity() {
            acc = self.compose(&acc);
            n += 1;
        }
        n
    }

    pub fn inverse(&self) -> Self {
        self.pow(self.order() - 1)
    }

    /// Exhaustive check that this is an automorphism of `E` fixing `Z(E)`:
    /// `L` preserves `Q` and `d(u+v) + d(u) + d(v) = c(Lu, Lv) + c(u, v)`.
    pub fn is_automorphism(&self, forms: &SymplecticData) -> bool {
        let size = forms.size();
        let mut seen = vec![false; size as usize];
        for u in 0..size {
            let lu = self.linear(u);
            if std::mem::replace(&mut seen[lu as usize], true)
                || forms.quadratic(lu) != forms.quadratic(u)
            {
                return false;
            }
        }
        (0..size).all(|u| {
            (0..size).all(|v| {
                self.shift(u ^ v) ^ self.shift(u) ^ self.shift(v)
                    == forms.cocycle(self.linear(u), self.linear(v)) ^ forms.cocycle(u, v)
            })
        })
    }

    /// `d` of the lift of a form-preserving linear map: the quadratic form
    /// `Σ_{i>j} u_i u_j g(e_i, e_j)` with `g(x, y) = c(Lx, Ly) + c(x, y)`.
    fn lift(linear: Vec<u32>, forms: &SymplecticData) -> Self {
        let dim = forms.dim();
        let g = |x: u32, y: u32| {
            forms.cocycle(linear[x as usize], linear[y as usize]) ^ forms.cocycle(x, y)
        };
        let mut out = Self {
            shift: vec![0; linear.len().div_ceil(64)],
            linear: linear.clone(),
        };
        for u in 0..forms.size() {
            let mut bit = 0;
            for i in 0..dim {
                if u >> i & 1 == 0 {
                    continue;
                }
                for j in 0..i {
                    if u >> j & 1 == 1 {
                        bit ^= g(1 << i, 1 << j);
                    }
                }
            }
            out.set_shift(u, bit);
        }
        out
    }
}

/// The action of `T` on `E`, tabulated over the sorted elements of `T`.
#[derive(Clone, Debug)]
pub struct ActionTable {
    t_keys: Vec<Element>,
    t_mul: Vec<u8>,
    t_inv: Vec<u8>,
    automorphisms: Vec<AutomorphismOfE>,
}

impl ActionTable {
    pub fn len(&self) -> usize {
        self.t_keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t_keys.is_empty()
    }

    pub fn t_keys(&self) -> &[Element] {
        &self.t_keys
    }

    #[inline]
    pub fn t_mul(&self, s: usize, t: usize) -> usize {
        self.t_mul[s * self.len() + t] as usize
    }

    #[inline]
    pub fn t_inv(&self, t: usize) -> usize {
        self.t_inv[t] as usize
    }

    #[inline]
    pub fn automorphism(&self, t: usize) -> &AutomorphismOfE {
        &self.automorphisms[t]
    }

    /// `φ_{st} = φ_s ∘ φ_t` for every pair.
    pub fn is_homomorphism(&self) -> bool {
        (0..self.len()).all(|s| {
            (0..self.len()).all(|t| {
                self.automorphisms[self.t_mul(s, t)]
                    == self.automorphisms[s].compose(&self.automorphisms[t])
            })
        })
    }

    /// Distinct elements act by distinct linear maps.
    pub fn is_faithful(&self) -> bool {
        let distinct: std::collections::HashSet<&[u32]> = self
            .automorphisms
            .iter()
            .map(|a| a.linear.as_slice())
            .collect();
        distinct.len() == self.len()
    }

    /// Every nonzero vector spins up to all of `V` under the linear parts.
    pub fn is_irreducible(&self, forms: &SymplecticData, generators: &[usize]) -> bool {
        let dim = forms.dim();
        (1..forms.size())
            .all(|v| spin_up(v, dim, generators.iter().map(|&t| &self.automorphisms[t])) == dim)
    }
}

/// Dimension of the smallest subspace containing `v` and invariant under `maps`.
fn spin_up<'a>(v: u32, dim: u32, maps: impl Iterator<Item = &'a AutomorphismOfE> + Clone) -> u32 {
    // echelon basis keyed by leading bit
    let mut basis = vec![0u32; dim as usize];
    let mut rank = 0;
    let mut queue = VecDeque::from([v]);
    while let Some(mut w) = queue.pop_front() {
        for bit in (0..dim).rev() {
            if w >> bit & 1 == 0 {
                continue;
            }
            if basis[bit as usize] == 0 {
                basis[bit as usize] = w;
                rank += 1;
                break;
            }
            w ^= basis[bit as usize];
        }
        if w != 0 {
            queue.extend(maps.clone().map(|m| m.linear(w)));
        }
    }
    rank
}

/// Lifts the natural action of `T = <m_λ, σ>` on `V` to a homomorphism
/// `T -> Aut(E)`.
///
/// Each generator's linear map is lifted with the quadratic correction
/// [`AutomorphismOfE::lift`]; a lift whose order has picked up a factor 2
/// is replaced by its `(o+1)`-th power; if the relation
/// `σ m σ^{-1} = m^4` still fails, the `σ` lift is corrected by the central
/// automorphisms `B(w, ·)` until it holds. The result is then tabulated
/// over all of `T` and checked to be a faithful homomorphism.
pub fn lift_action(
    t: &FiniteGroup,
    semilinear: &SemilinearBackend,
    forms: &SymplecticData,
) -> Result<ActionTable> {
    let size = forms.size();
    let gens = t.generators();
    if gens.len() != 2 {
        return Err(Error::InvalidArgument(
            "T must be given by the generators [m, σ]".into(),
        ));
    }
    let mut lifts = Vec::new();
    for &s in gens {
        let linear: Vec<u32> = (0..size).map(|u| semilinear.apply(s, u)).collect();
        if (0..size).any(|u| forms.quadratic(linear[u as usize]) != forms.quadratic(u)) {
            return Err(Error::Construction(format!(
                "generator {s:#x} does not preserve Q"
            )));
        }
        let lift = AutomorphismOfE::lift(linear, forms);
        if !lift.is_automorphism(forms) {
            return Err(Error::Construction(format!(
                "lift of generator {s:#x} is not an automorphism"
            )));
        }
        lifts.push(normalize_order(lift, t.element_order(s)));
    }
    let m = lifts[0].clone();
    let m4 = m.pow(4);
    let relation = |sigma: &AutomorphismOfE| sigma.compose(&m).compose(&sigma.inverse()) == m4;
    let sigma_order = t.element_order(gens[1]);
    let sigma = if relation(&lifts[1]) {
        lifts[1].clone()
    } else {
        (0..size)
            .map(|w| {
                normalize_order(
                    lifts[1].compose(&AutomorphismOfE::central(forms, w)),
                    sigma_order,
                )
            })
            .find(|cand| relation(cand))
            .ok_or_else(|| {
                Error::Construction("no central correction satisfies σ m σ^-1 = m^4".into())
            })?
    };
    let generator_lifts = [m, sigma];

    let t_keys = t.elements()?.to_vec();
    let n = t_keys.len();
    if n > 256 {
        return Err(Error::InvalidArgument(
            "acting group too large for an action table".into(),
        ));
    }
    let mut automorphisms: Vec<Option<AutomorphismOfE>> = vec![None; n];
    let id = t.idx(t.identity()) as usize;
    automorphisms[id] = Some(AutomorphismOfE::identity(size as usize));
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for (g, lift) in gens.iter().zip(&generator_lifts) {
            let y = t.idx(t.mul(t_keys[x], *g)) as usize;
            let candidate = automorphisms[x].as_ref().unwrap().compose(lift);
            match &automorphisms[y] {
                Some(existing) if *existing != candidate => {
                    return Err(Error::Construction(
                        "lifted generators generate more than T".into(),
                    ))
                }
                Some(_) => {}
                None => {
                    automorphisms[y] = Some(candidate);
                    queue.push_back(y);
                }
            }
        }
    }
    let automorphisms: Vec<AutomorphismOfE> = automorphisms
        .into_iter()
        .map(|a| a.expect("T is generated"))
        .collect();
    let mut t_mul = vec![0u8; n * n];
    for s in 0..n {
        for u in 0..n {
            t_mul[s * n + u] = t.idx(t.mul(t_keys[s], t_keys[u])) as u8;
        }
    }
    let t_inv = t_keys.iter().map(|&k| t.idx(t.inv(k)) as u8).collect();
    let table = ActionTable {
        t_keys,
        t_mul,
        t_inv,
        automorphisms,
    };
    if !table.is_homomorphism() {
        return Err(Error::Construction(
            "lifted action is not a homomorphism".into(),
        ));
    }
    if !table.is_faithful() {
        return Err(Error::Construction("lifted action is not faithful".into()));
    }
    Ok(table)
}

/// Strips a 2-part from the order of a lift whose linear part has odd order `o`.
fn normalize_order(lift: AutomorphismOfE, o: u64) -> AutomorphismOfE {
    if lift.pow(o).is_identity() {
        lift
    } else {
        // lift^o is central of order 2; o+1 is even and congruent to 1 mod o
        lift.pow(o + 1)
    }
}
