//! Complex character tables by the Dixon–Schneider method.
//!
//! Pipeline: conjugacy classes and exponent `e`, a prime `ℓ ≡ 1 (mod e)`
//! above `2√|G|`, class matrices reduced mod `ℓ`, common eigenvectors,
//! degrees, and exact values recovered by Fourier inversion on the power
//! maps. Every table is checked for both orthogonality relations before it
//! is returned.

mod classmat;
pub(crate) mod cyclotomic;
pub mod dixon;
pub mod modlinalg;

use rayon::prelude::*;

pub use classmat::ClassMatrix;
pub use cyclotomic::{cyclotomic_polynomial, vanishes_at_root_of_unity, CyclotomicValue};

use crate::error::{Error, Result};
use crate::field::{prime_field_with_root, PrimeFieldCtx};
use crate::group::{ClassData, FiniteGroup};
use crate::numtheory::isqrt;
use cyclotomic::Accumulator;

/// The part of [`ClassData`] a character table needs once the group itself
/// is gone (e.g. after loading a table from disk).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSummary {
    pub group_order: u64,
    pub exponent: u64,
    pub representatives: Vec<u64>,
    pub sizes: Vec<u64>,
    pub element_orders: Vec<u64>,
    pub inverse_class: Vec<u32>,
    pub power_map: Vec<Vec<u32>>,
}

impl ClassSummary {
    pub fn from_class_data(cd: &ClassData) -> Self {
        Self {
            group_order: cd.group_order,
            exponent: cd.exponent,
            representatives: cd.representatives.clone(),
            sizes: cd.sizes.clone(),
            element_orders: cd.element_orders.clone(),
            inverse_class: cd.inverse_class.clone(),
            power_map: cd.power_map.clone(),
        }
    }

    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }
}

/// Irreducible characters of a finite group, one row per character and one
/// column per conjugacy class. Rows are sorted by degree, then by values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub name: String,
    pub classes: ClassSummary,
    /// The Dixon prime `ℓ`.
    pub prime: u64,
    /// The element of order `e` in GF(ℓ) used for lifting.
    pub root: u64,
    pub characters: Vec<Vec<CyclotomicValue>>,
}

impl CharacterTable {
    pub fn exponent(&self) -> u64 {
        self.classes.exponent
    }

    pub fn group_order(&self) -> u64 {
        self.classes.group_order
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn degree(&self, chi: usize) -> u64 {
        self.characters[chi][0].coefficient_sum() as u64
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.characters.len()).map(|i| self.degree(i)).collect()
    }

    /// Checks every defining invariant of a character table exactly.
    pub fn verify(&self) -> Result<()> {
        let cs = &self.classes;
        let r = cs.len();
        let e = cs.exponent;
        let n = cs.group_order;
        let fail = |msg: String| Err(Error::Consistency(msg));
        if self.characters.len() != r {
            return fail(format!(
                "{} characters for {r} classes",
                self.characters.len()
            ));
        }
        if cs.sizes.iter().sum::<u64>() != n {
            return fail("class sizes do not sum to |G|".into());
        }
        let mut square_sum = 0u64;
        for (i, row) in self.characters.iter().enumerate() {
            if row.len() != r || row.iter().any(|v| v.conductor() != e) {
                return fail(format!("character {i} has the wrong shape"));
            }
            let d = self.degree(i);
            if d == 0 || !n.is_multiple_of(d) || row[0].terms() != [(0, d as i64)] {
                return fail(format!("character {i} has invalid degree {d}"));
            }
            square_sum += d * d;
            for j in 0..r {
                if !row[cs.inverse_class[j] as usize].equals(&row[j].conj()) {
                    return fail(format!(
                        "character {i} is not conjugated by inversion at class {j}"
                    ));
                }
            }
        }
        if square_sum != n {
            return fail(format!("squared degrees sum to {square_sum}, not {n}"));
        }
        let rows_ok = (0..r).into_par_iter().all(|a| {
            (a..r).all(|b| {
                let mut acc = Accumulator::new(e);
                for j in 0..r {
                    acc.add_product_conj(
                        i128::from(cs.sizes[j]),
                        &self.characters[a][j],
                        &self.characters[b][j],
                    );
                }
                acc.equals_integer(if a == b { i128::from(n) } else { 0 })
            })
        });
        if !rows_ok {
            return fail("row orthogonality fails".into());
        }
        let cols_ok = (0..r).into_par_iter().all(|j| {
            (j..r).all(|k| {
                let mut acc = Accumulator::new(e);
                for row in &self.characters {
                    acc.add_product_conj(1, &row[j], &row[k]);
                }
                acc.equals_integer(if j == k {
                    i128::from(n / cs.sizes[j])
                } else {
                    0
                })
            })
        });
        if !cols_ok {
            return fail("column orthogonality fails".into());
        }
        Ok(())
    }
}

/// The Dixon prime context for a group with the given order and exponent.
pub fn dixon_prime(group_order: u64, exponent: u64) -> Result<PrimeFieldCtx> {
    // ceil(2 sqrt(n)) = ceil(sqrt(4n))
    let s = isqrt(4 * group_order);
    let bound = if s * s == 4 * group_order { s } else { s + 1 };
    prime_field_with_root(exponent, bound.max(2))
}

/// Computes and verifies the character table of `g`.
pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    let cd = g.classes()?;
    let ctx = dixon_prime(cd.group_order, cd.exponent)?;
    let omegas = dixon::split_eigenspaces(cd, &ctx, |i| ClassMatrix::compute(g, cd, i))?;
    let mut characters = omegas
        .par_iter()
        .map(|omega| {
            let d = dixon::recover_degree(omega, cd, &ctx)?;
            dixon::lift_values(omega, d, cd, &ctx)
        })
        .collect::<Result<Vec<_>>>()?;
    characters.sort_by(|a, b| (a[0].coefficient_sum(), a).cmp(&(b[0].coefficient_sum(), b)));
    let table = CharacterTable {
        name: g.name().to_string(),
        classes: ClassSummary::from_class_data(cd),
        prime: ctx.prime(),
        root: ctx.root,
        characters,
    };
    table.verify()?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build_corpus_group;

    fn table(name: &str) -> CharacterTable {
        character_table(&build_corpus_group(name).unwrap()).unwrap()
    }

    fn int_rows(t: &CharacterTable) -> Vec<Vec<i64>> {
        t.characters
            .iter()
            .map(|row| row.iter().map(|v| v.as_integer().unwrap()).collect())
            .collect()
    }

    #[test]
    fn class_matrix_identities() {
        let g = build_corpus_group("S3").unwrap();
        let cd = g.classes().unwrap();
        let m0 = ClassMatrix::compute(&g, cd, 0);
        for j in 0..3 {
            for k in 0..3 {
                assert_eq!(m0.entries[j][k], u64::from(j == k));
            }
        }
        // classes: identity, transpositions, 3-cycles
        let m1 = ClassMatrix::compute(&g, cd, 1);
        assert_eq!(m1.entries[1][0], 3);
        for i in 0..3 {
            assert!(ClassMatrix::compute(&g, cd, i).satisfies_counting_identities(cd));
        }
    }

    #[test]
    fn s3_splits_over_gf13() {
        let g = build_corpus_group("S3").unwrap();
        let cd = g.classes().unwrap();
        let ctx = prime_field_with_root(6, 10).unwrap();
        assert_eq!(ctx.prime(), 13);
        let omegas =
            dixon::split_eigenspaces(cd, &ctx, |i| ClassMatrix::compute(&g, cd, i)).unwrap();
        assert_eq!(omegas.len(), 3);
        let mut degrees: Vec<u64> = omegas
            .iter()
            .map(|w| dixon::recover_degree(w, cd, &ctx).unwrap())
            .collect();
        degrees.sort();
        assert_eq!(degrees, vec![1, 1, 2]);

        let t = table("S3");
        assert_eq!((t.prime, t.exponent()), (7, 6));
        assert_eq!(t.degrees(), vec![1, 1, 2]);
        assert_eq!(
            int_rows(&t),
            vec![vec![1, 1, 1], vec![1, -1, 1], vec![2, 0, -1]]
        );
    }

    #[test]
    fn c2_table() {
        assert_eq!(int_rows(&table("C2")), vec![vec![1, 1], vec![1, -1]]);
    }

    #[test]
    fn c3_values_are_cube_roots() {
        let t = table("C3");
        let values: Vec<Vec<(u64, i64)>> = t.characters[1..]
            .iter()
            .map(|r| r[1].terms().to_vec())
            .collect();
        assert!(values.contains(&vec![(1, 1)]) && values.contains(&vec![(2, 1)]));
    }

    #[test]
    fn q8_central_value() {
        let t = table("Q8");
        assert_eq!(t.degrees(), vec![1, 1, 1, 1, 2]);
        // class 1 is the unique central involution
        assert_eq!(t.classes.element_orders[1], 2);
        assert_eq!(t.characters[4][1].terms(), &[(2, 2)]);
        assert_eq!(t.characters[4][1].as_integer(), Some(-2));
    }

    #[test]
    fn column_sums_recover_centralizers() {
        let t = table("SL23");
        let n = t.group_order();
        for j in 0..t.num_classes() {
            let mut acc = Accumulator::new(t.exponent());
            for row in &t.characters {
                acc.add_product_conj(1, &row[j], &row[j]);
            }
            assert!(acc.equals_integer(i128::from(n / t.classes.sizes[j])));
        }
    }

    #[test]
    fn tampered_table_fails_verification() {
        let mut t = table("S4");
        t.verify().unwrap();
        let last = t.characters.len() - 1;
        t.characters[last][1] = CyclotomicValue::integer(t.exponent(), 5);
        assert!(t.verify().is_err());
    }
}
