//! Structural subgroups and the group-level hypotheses checked by the
//! codegree module.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::numtheory::{gcd, is_prime_power_of, prime_divisors};

use super::subgroup::Subgroup;
use super::{Element, FiniteGroup};

/// Elements commuting with every generator.
pub fn center(g: &FiniteGroup) -> Result<Subgroup> {
    let keys = g.elements()?;
    let mask: Vec<bool> = keys
        .iter()
        .map(|&z| g.generators().iter().all(|&s| g.mul(z, s) == g.mul(s, z)))
        .collect();
    Subgroup::from_mask(g, mask)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CyclicVerdict {
    /// An element whose order equals the subgroup order.
    Cyclic { generator: Element },
    /// The largest element order, which is smaller than the subgroup order.
    NotCyclic { max_order: u64 },
}

impl CyclicVerdict {
    pub fn is_cyclic(&self) -> bool {
        matches!(self, CyclicVerdict::Cyclic { .. })
    }
}

pub fn is_cyclic(g: &FiniteGroup, h: &Subgroup) -> CyclicVerdict {
    let n = h.order();
    let mut max_order = 1;
    for x in h.elements(g) {
        let o = g.element_order(x);
        if o == n {
            return CyclicVerdict::Cyclic { generator: x };
        }
        max_order = max_order.max(o);
    }
    CyclicVerdict::NotCyclic { max_order }
}

/// Normal closure as a raw mask with its size. Returns `None` as soon as a
/// member fails `keep`.
fn normal_closure_mask(
    g: &FiniteGroup,
    seeds: &[Element],
    keep: impl Fn(Element) -> bool,
) -> Result<Option<(Vec<bool>, usize)>> {
    let n = g.order()? as usize;
    let mut mask = vec![false; n];
    let id = g.identity();
    mask[g.idx(id) as usize] = true;
    let mut queue = vec![id];
    let mut head = 0;
    let seeds: Vec<Element> = seeds.iter().copied().filter(|&s| s != id).collect();
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let images = seeds
            .iter()
            .map(|&s| g.mul(x, s))
            .chain(g.generators().iter().map(|&s| g.conjugate(x, s)));
        for y in images {
            let i = g.idx(y) as usize;
            if !mask[i] {
                if !keep(y) {
                    return Ok(None);
                }
                mask[i] = true;
                queue.push(y);
            }
        }
    }
    let size = queue.len();
    Ok(Some((mask, size)))
}

/// Smallest normal subgroup containing `seeds`.
pub fn normal_closure(g: &FiniteGroup, seeds: &[Element]) -> Result<Subgroup> {
    let (mask, _) = normal_closure_mask(g, seeds, |_| true)?.expect("unfiltered closure");
    Subgroup::from_mask(g, mask)
}

/// `O_p(G)`, the largest normal p-subgroup.
///
/// A p-element lies in `O_p(G)` exactly when its normal closure is a
/// p-group; one representative per conjugacy class is tested.
pub fn p_core(g: &FiniteGroup, p: u64) -> Result<Subgroup> {
    let order = g.order()?;
    if order % p != 0 {
        return Subgroup::trivial(g);
    }
    let classes = g.classes()?;
    let mut seeds = Vec::new();
    for (j, &rep) in classes.representatives.iter().enumerate() {
        let o = classes.element_orders[j];
        if o == 1 || !is_prime_power_of(o, p) {
            continue;
        }
        let closure = normal_closure_mask(g, &[rep], |y| is_prime_power_of(g.element_order(y), p))?;
        if closure.is_some() {
            seeds.push(rep);
        }
    }
    let core = normal_closure(g, &seeds)?;
    if !is_prime_power_of(core.order(), p) || !core.is_normal_in(g) {
        return Err(Error::Consistency(format!(
            "computed O_{p} has order {}",
            core.order()
        )));
    }
    Ok(core)
}

/// The Fitting subgroup as the product of the p-cores.
pub fn fitting_subgroup(g: &FiniteGroup) -> Result<Subgroup> {
    let order = g.order()?;
    let mut seeds = Vec::new();
    let mut product = 1u64;
    for p in prime_divisors(order) {
        let core = p_core(g, p)?;
        product *= core.order();
        seeds.extend_from_slice(core.generators());
    }
    let fitting = normal_closure(g, &seeds)?;
    // the cores are normal with pairwise coprime orders, so the product is direct
    if fitting.order() != product || !fitting.is_normal_in(g) {
        return Err(Error::Consistency(format!(
            "product of p-cores has order {} but the cores multiply to {product}",
            fitting.order()
        )));
    }
    Ok(fitting)
}

pub fn is_nilpotent(g: &FiniteGroup) -> Result<bool> {
    Ok(fitting_subgroup(g)?.order() == g.order()?)
}

/// Whether `f/z` is a chief factor of `g`, for `f/z` elementary abelian.
///
/// Every nonzero vector of `f/z` is spun up: the submodule it generates is
/// `normal_closure(v, z) / z`, and the factor is irreducible iff each such
/// closure is all of `f`.
pub fn is_chief_factor_above_center(g: &FiniteGroup, f: &Subgroup, z: &Subgroup) -> Result<bool> {
    if !z.is_subgroup_of(f) || !f.is_normal_in(g) || !z.is_normal_in(g) {
        return Err(Error::InvalidArgument(
            "need normal subgroups Z <= F".into(),
        ));
    }
    let index = f.order() / z.order();
    let primes = prime_divisors(index);
    if index == 1 {
        return Ok(false);
    }
    if primes.len() != 1 {
        return Err(Error::Unsupported(format!(
            "F/Z of order {index} is not a p-group"
        )));
    }
    let p = *primes.iter().next().unwrap();
    let elementary = f.elements(g).all(|x| z.contains(g, g.pow(x, p)))
        && f.generators().iter().all(|&a| {
            f.generators()
                .iter()
                .all(|&b| z.contains(g, g.commutator(a, b)))
        });
    if !elementary {
        return Err(Error::Unsupported(format!(
            "F/Z of order {index} is not elementary abelian"
        )));
    }
    let mut visited = vec![false; g.order()? as usize];
    let zgens = z.generators().to_vec();
    for v in f.elements(g) {
        if z.contains(g, v) || visited[g.idx(v) as usize] {
            continue;
        }
        for zk in z.elements(g) {
            visited[g.idx(g.mul(v, zk)) as usize] = true;
        }
        let mut seeds = zgens.clone();
        seeds.push(v);
        let (_, size) = normal_closure_mask(g, &seeds, |_| true)?.expect("unfiltered closure");
        if size as u64 != f.order() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderSpectrum {
    pub orders: BTreeSet<u64>,
    /// Prime sets `π(o(g))` that are maximal under inclusion.
    pub maximal_prime_sets: Vec<BTreeSet<u64>>,
}

impl OrderSpectrum {
    /// Whether some element order is divisible by every prime in `primes`.
    pub fn covers(&self, primes: &BTreeSet<u64>) -> bool {
        self.maximal_prime_sets.iter().any(|s| primes.is_subset(s))
    }
}

pub fn element_order_spectrum(g: &FiniteGroup) -> Result<OrderSpectrum> {
    let orders: BTreeSet<u64> = g.classes()?.element_orders.iter().copied().collect();
    Ok(spectrum_from_orders(orders))
}

pub(crate) fn spectrum_from_orders(orders: BTreeSet<u64>) -> OrderSpectrum {
    let sets: BTreeSet<BTreeSet<u64>> = orders.iter().map(|&o| prime_divisors(o)).collect();
    let maximal_prime_sets = sets
        .iter()
        .filter(|s| !sets.iter().any(|t| t != *s && s.is_subset(t)))
        .cloned()
        .collect();
    OrderSpectrum {
        orders,
        maximal_prime_sets,
    }
}

/// Order of `x` modulo the normal subgroup `n`.
pub fn order_modulo(g: &FiniteGroup, x: Element, n: &Subgroup) -> u64 {
    let mut y = x;
    let mut k = 1;
    while !n.contains(g, y) {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

/// `gcd(|F|, |G:F|) = 1`.
pub fn hall_coprime_check(g: &FiniteGroup, f: &Subgroup) -> Result<bool> {
    let order = g.order()?;
    Ok(gcd(f.order(), order / f.order()) == 1)
}

#[cfg(test)]
mod tests {
    use super::super::testing::*;
    use super::*;

    fn find(g: &FiniteGroup, order: u64) -> Element {
        *g.elements()
            .unwrap()
            .iter()
            .find(|&&x| g.element_order(x) == order)
            .unwrap()
    }

    #[test]
    fn centers() {
        let c = cyclic(6);
        assert_eq!(center(&c).unwrap().order(), 6);
        let s3 = sym(3);
        assert_eq!(center(&s3).unwrap().order(), 1);
    }

    #[test]
    fn cyclicity() {
        let c = cyclic(6);
        let t = Subgroup::trivial(&c).unwrap();
        assert!(is_cyclic(&c, &t).is_cyclic());
        let s3 = sym(3);
        let w = Subgroup::whole(&s3).unwrap();
        assert_eq!(
            is_cyclic(&s3, &w),
            CyclicVerdict::NotCyclic { max_order: 3 }
        );
    }

    #[test]
    fn normal_closures_in_s3() {
        let g = sym(3);
        assert_eq!(normal_closure(&g, &[g.identity()]).unwrap().order(), 1);
        assert_eq!(normal_closure(&g, &[find(&g, 2)]).unwrap().order(), 6);
        assert_eq!(normal_closure(&g, &[find(&g, 3)]).unwrap().order(), 3);
    }

    #[test]
    fn cores_and_fitting() {
        let s4 = sym(4);
        assert_eq!(p_core(&s4, 2).unwrap().order(), 4);
        assert_eq!(p_core(&s4, 3).unwrap().order(), 1);
        assert_eq!(p_core(&s4, 5).unwrap().order(), 1);
        assert_eq!(fitting_subgroup(&s4).unwrap().order(), 4);
        let s3 = sym(3);
        assert_eq!(fitting_subgroup(&s3).unwrap().order(), 3);
        let c = cyclic(12);
        assert_eq!(fitting_subgroup(&c).unwrap().order(), 12);
        assert!(is_nilpotent(&c).unwrap());
        assert!(!is_nilpotent(&s3).unwrap());
    }

    #[test]
    fn chief_factors() {
        let s4 = sym(4);
        let v4 = fitting_subgroup(&s4).unwrap();
        let one = Subgroup::trivial(&s4).unwrap();
        assert!(is_chief_factor_above_center(&s4, &v4, &one).unwrap());
        let c = cyclic(3);
        let whole = Subgroup::whole(&c).unwrap();
        let triv = Subgroup::trivial(&c).unwrap();
        assert!(is_chief_factor_above_center(&c, &whole, &triv).unwrap());
        // C4 over 1 is not elementary abelian
        let c4 = cyclic(4);
        let w4 = Subgroup::whole(&c4).unwrap();
        let t4 = Subgroup::trivial(&c4).unwrap();
        assert!(matches!(
            is_chief_factor_above_center(&c4, &w4, &t4),
            Err(Error::Unsupported(_))
        ));
        // C2 x C2 inside C6 x C2... use S4 with the whole group: not a p-group
        let w = Subgroup::whole(&s4).unwrap();
        assert!(is_chief_factor_above_center(&s4, &w, &one).is_err());
    }

    #[test]
    fn spectra() {
        let c = cyclic(6);
        let s = element_order_spectrum(&c).unwrap();
        assert_eq!(s.orders, BTreeSet::from([1, 2, 3, 6]));
        assert_eq!(s.maximal_prime_sets, vec![BTreeSet::from([2, 3])]);
        let s3 = element_order_spectrum(&sym(3)).unwrap();
        assert_eq!(s3.maximal_prime_sets.len(), 2);
        assert!(!s3.covers(&BTreeSet::from([2, 3])));
    }

    #[test]
    fn coprimality() {
        let g = sym(4);
        let v4 = fitting_subgroup(&g).unwrap();
        assert!(!hall_coprime_check(&g, &v4).unwrap());
        let t = Subgroup::trivial(&g).unwrap();
        assert!(hall_coprime_check(&g, &t).unwrap());
        let s3 = sym(3);
        let a3 = fitting_subgroup(&s3).unwrap();
        assert!(hall_coprime_check(&s3, &a3).unwrap());
        assert_eq!(order_modulo(&s3, find(&s3, 2), &a3), 2);
    }
}
