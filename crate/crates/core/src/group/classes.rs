use crate::error::{Error, Result};
use crate::numtheory::lcm;

use super::{Element, FiniteGroup};

/// Conjugacy classes of an enumerated group.
///
/// Classes are ordered by (element order, class size, representative key),
/// so class 0 is always the identity. Element indices are the dense indices
/// of the parent group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassData {
    pub representatives: Vec<Element>,
    pub sizes: Vec<u64>,
    pub element_orders: Vec<u64>,
    /// Class index of every element, by element index.
    pub class_of: Vec<u32>,
    /// Element indices of each class, sorted.
    pub members: Vec<Vec<u32>>,
    /// Class of the inverses of the elements of each class.
    pub inverse_class: Vec<u32>,
    /// Exponent of the group: the lcm of all element orders.
    pub exponent: u64,
    /// `power_map[j][s]` is the class of `rep_j^s` for `0 <= s < exponent`.
    pub power_map: Vec<Vec<u32>>,
    pub group_order: u64,
}

impl ClassData {
    pub(super) fn compute(g: &FiniteGroup) -> Result<Self> {
        let keys = g.elements()?;
        let n = keys.len();
        let mut raw_class = vec![u32::MAX; n];
        let mut orbits: Vec<Vec<u32>> = Vec::new();
        for start in 0..n {
            if raw_class[start] != u32::MAX {
                continue;
            }
            let id = orbits.len() as u32;
            raw_class[start] = id;
            let mut orbit = vec![start as u32];
            let mut head = 0;
            while head < orbit.len() {
                let x = keys[orbit[head] as usize];
                head += 1;
                for &s in g.generators() {
                    let y = g.idx(g.conjugate(x, s));
                    if raw_class[y as usize] == u32::MAX {
                        raw_class[y as usize] = id;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }

        // the representative is the smallest key, i.e. the first member
        let mut order_of: Vec<(u64, u64, Element, usize)> = orbits
            .iter()
            .enumerate()
            .map(|(i, o)| {
                let rep = keys[o[0] as usize];
                (g.element_order(rep), o.len() as u64, rep, i)
            })
            .collect();
        order_of.sort_unstable();
        let mut relabel = vec![0u32; orbits.len()];
        for (new, &(_, _, _, old)) in order_of.iter().enumerate() {
            relabel[old] = new as u32;
        }
        let class_of: Vec<u32> = raw_class.iter().map(|&c| relabel[c as usize]).collect();
        let mut members = vec![Vec::new(); orbits.len()];
        for (old, orbit) in orbits.into_iter().enumerate() {
            members[relabel[old] as usize] = orbit;
        }
        let representatives: Vec<Element> = order_of.iter().map(|t| t.2).collect();
        let element_orders: Vec<u64> = order_of.iter().map(|t| t.0).collect();
        let sizes: Vec<u64> = order_of.iter().map(|t| t.1).collect();
        if representatives[0] != g.identity() {
            return Err(Error::Consistency("class 0 is not the identity".into()));
        }
        let exponent = element_orders.iter().fold(1, |acc, &o| lcm(acc, o));

        let power_map: Vec<Vec<u32>> = representatives
            .iter()
            .zip(&element_orders)
            .map(|(&rep, &ord)| {
                let mut cycle = Vec::with_capacity(ord as usize);
                let mut x = g.identity();
                for _ in 0..ord {
                    cycle.push(class_of[g.idx(x) as usize]);
                    x = g.mul(x, rep);
                }
                (0..exponent).map(|s| cycle[(s % ord) as usize]).collect()
            })
            .collect();
        let inverse_class = representatives
            .iter()
            .map(|&r| class_of[g.idx(g.inv(r)) as usize])
            .collect();

        let data = ClassData {
            representatives,
            sizes,
            element_orders,
            class_of,
            members,
            inverse_class,
            exponent,
            power_map,
            group_order: n as u64,
        };
        data.validate()?;
        Ok(data)
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Class equation, divisibility of class sizes and the power-map rows
    /// for `s = 0` and `s = 1`.
    pub fn validate(&self) -> Result<()> {
        let total: u64 = self.sizes.iter().sum();
        if total != self.group_order {
            return Err(Error::Consistency(format!(
                "class sizes sum to {total}, group order is {}",
                self.group_order
            )));
        }
        if let Some(s) = self
            .sizes
            .iter()
            .find(|&&s| !self.group_order.is_multiple_of(s))
        {
            return Err(Error::Consistency(format!(
                "class size {s} does not divide {}",
                self.group_order
            )));
        }
        if self.sizes.first() != Some(&1) || self.element_orders.first() != Some(&1) {
            return Err(Error::Consistency(
                "class 0 is not the identity class".into(),
            ));
        }
        for (j, row) in self.power_map.iter().enumerate() {
            if row[0] != 0 || (self.exponent > 1 && row[1] as usize != j) {
                return Err(Error::Consistency(format!(
                    "power map row {j} is malformed"
                )));
            }
        }
        for (j, &i) in self.inverse_class.iter().enumerate() {
            if self.element_orders[i as usize] != self.element_orders[j]
                || self.sizes[i as usize] != self.sizes[j]
            {
                return Err(Error::Consistency(format!(
                    "inverse class of {j} has different order or size"
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::super::testing::*;
    use super::super::{FiniteGroup, GroupBackend};
    use super::*;

    /// Q8 as {±1, ±i, ±j, ±k}: key = 4 * sign + unit index.
    struct Quaternions;

    impl Quaternions {
        fn split(k: u64) -> (u64, usize) {
            (k / 4, (k % 4) as usize)
        }
    }

    impl GroupBackend for Quaternions {
        fn identity(&self) -> Element {
            0
        }
        fn mul(&self, a: Element, b: Element) -> Element {
            // unit products: (sign, unit) for 1,i,j,k
            const T: [[(u64, u64); 4]; 4] = [
                [(0, 0), (0, 1), (0, 2), (0, 3)],
                [(0, 1), (1, 0), (0, 3), (1, 2)],
                [(0, 2), (1, 3), (1, 0), (0, 1)],
                [(0, 3), (0, 2), (1, 1), (1, 0)],
            ];
            let (sa, ua) = Self::split(a);
            let (sb, ub) = Self::split(b);
            let (s, u) = T[ua][ub];
            4 * ((sa + sb + s) % 2) + u
        }
        fn inv(&self, a: Element) -> Element {
            let (s, u) = Self::split(a);
            if u == 0 {
                a
            } else {
                4 * ((s + 1) % 2) + u as u64
            }
        }
    }

    #[test]
    fn cyclic_classes() {
        let g = cyclic(4);
        let cd = g.classes().unwrap();
        assert_eq!(cd.len(), 4);
        assert_eq!(cd.sizes, vec![1, 1, 1, 1]);
        let mut orders = cd.element_orders.clone();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 4, 4]);
        assert_eq!(cd.exponent, 4);
    }

    #[test]
    fn s3_classes() {
        let g = sym(3);
        let cd = g.classes().unwrap();
        assert_eq!(cd.sizes, vec![1, 3, 2]);
        assert_eq!(cd.element_orders, vec![1, 2, 3]);
        assert_eq!(cd.exponent, 6);
        assert_eq!(cd.power_map[2][2], 2);
        assert_eq!(cd.power_map[2][3], 0);
        assert_eq!(cd.power_map[1][3], 1);
    }

    #[test]
    fn q8_classes() {
        let g = FiniteGroup::new("Q8", Arc::new(Quaternions), vec![1, 2]);
        let cd = g.classes().unwrap();
        assert_eq!(cd.sizes, vec![1, 1, 2, 2, 2]);
        assert_eq!(cd.element_orders, vec![1, 2, 4, 4, 4]);
        assert_eq!(cd.inverse_class, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn class_of_is_constant_on_orbits() {
        let g = sym(4);
        let cd = g.classes().unwrap();
        assert_eq!(cd.len(), 5);
        for &x in g.elements().unwrap() {
            for &y in g.elements().unwrap() {
                let c = g.conjugate(x, y);
                assert_eq!(
                    cd.class_of[g.idx(c) as usize],
                    cd.class_of[g.idx(x) as usize]
                );
            }
        }
    }
}
