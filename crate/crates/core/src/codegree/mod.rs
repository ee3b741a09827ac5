//! Kernels and codegrees `cod(χ) = |G : Ker χ| / χ(1)`, and the checks
//! built on them: prime-set witnesses for codegrees, the fully ramified
//! faithful character certificate, and the divisibility of element orders
//! by codegrees.

use std::collections::BTreeSet;

use crate::chartab::cyclotomic::Accumulator;
use crate::chartab::{CharacterTable, CyclotomicValue};
use crate::error::{Error, Result};
use crate::group::{
    center, fitting_subgroup, hall_coprime_check, is_chief_factor_above_center, is_cyclic,
    is_nilpotent, order_modulo, FiniteGroup, Subgroup,
};
use crate::numtheory::{isqrt, prime_divisors};

/// Set of prime divisors of `n` (empty for `n = 1`).
pub fn pi_set(n: u64) -> BTreeSet<u64> {
    assert!(n >= 1, "pi_set of zero");
    prime_divisors(n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodegreeRecord {
    pub character: usize,
    pub degree: u64,
    /// Classes on which the character takes the value `χ(1)`.
    pub kernel_classes: Vec<usize>,
    pub kernel_size: u64,
    pub cod: u64,
    pub pi_set: BTreeSet<u64>,
}

impl CodegreeRecord {
    pub fn is_faithful(&self) -> bool {
        self.kernel_size == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codegrees {
    pub records: Vec<CodegreeRecord>,
    pub set: BTreeSet<u64>,
}

/// Kernel and codegree of every character of `tbl`.
pub fn codegrees(tbl: &CharacterTable) -> Result<Codegrees> {
    let cs = &tbl.classes;
    let n = cs.group_order;
    let e = cs.exponent;
    let mut records = Vec::with_capacity(tbl.characters.len());
    for (i, row) in tbl.characters.iter().enumerate() {
        let degree = tbl.degree(i);
        let d = CyclotomicValue::integer(e, degree as i64);
        let kernel_classes: Vec<usize> = (0..cs.len()).filter(|&j| row[j].equals(&d)).collect();
        let kernel_size: u64 = kernel_classes.iter().map(|&j| cs.sizes[j]).sum();
        let closed = kernel_classes
            .iter()
            .all(|&j| kernel_classes.contains(&(cs.inverse_class[j] as usize)));
        if !closed || !n.is_multiple_of(kernel_size) {
            return Err(Error::Consistency(format!(
                "kernel of character {i} is not a normal subgroup"
            )));
        }
        let index = n / kernel_size;
        if !index.is_multiple_of(degree) {
            return Err(Error::Consistency(format!(
                "character {i}: degree {degree} does not divide |G:Ker| = {index}"
            )));
        }
        let cod = index / degree;
        records.push(CodegreeRecord {
            character: i,
            degree,
            kernel_classes,
            kernel_size,
            cod,
            pi_set: pi_set(cod),
        });
    }
    let set = records.iter().map(|r| r.cod).collect();
    Ok(Codegrees { records, set })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoretoVerdict {
    /// A class whose element order is divisible by every prime of `cod(χ)`.
    Witness {
        class: usize,
        order: u64,
    },
    Violation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoretoReport {
    pub verdicts: Vec<MoretoVerdict>,
    /// `(character, cod)` for every violation.
    pub violations: Vec<(usize, u64)>,
}

impl MoretoReport {
    pub fn has_violations(&self) -> bool {
        !self.violations.is_empty()
    }
}

/// For every character, looks for a class `g` with `π(cod χ) ⊆ π(o(g))`,
/// trying classes in decreasing element order.
pub fn moreto_check(tbl: &CharacterTable, cods: &Codegrees) -> MoretoReport {
    let cs = &tbl.classes;
    let mut order: Vec<usize> = (0..cs.len()).collect();
    order.sort_by(|&a, &b| {
        cs.element_orders[b]
            .cmp(&cs.element_orders[a])
            .then(a.cmp(&b))
    });
    let class_primes: Vec<BTreeSet<u64>> = cs.element_orders.iter().map(|&o| pi_set(o)).collect();
    let mut verdicts = Vec::new();
    let mut violations = Vec::new();
    for rec in &cods.records {
        let found = order
            .iter()
            .find(|&&j| rec.pi_set.is_subset(&class_primes[j]));
        match found {
            Some(&j) => verdicts.push(MoretoVerdict::Witness {
                class: j,
                order: cs.element_orders[j],
            }),
            None => {
                verdicts.push(MoretoVerdict::Violation);
                violations.push((rec.character, rec.cod));
            }
        }
    }
    MoretoReport {
        verdicts,
        violations,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QianReport {
    /// Element orders not dividing any codegree.
    pub failures: Vec<u64>,
}

impl QianReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that every element order divides some codegree.
pub fn qian_property_test(tbl: &CharacterTable, cods: &Codegrees) -> QianReport {
    let orders: BTreeSet<u64> = tbl.classes.element_orders.iter().copied().collect();
    let failures = orders
        .into_iter()
        .filter(|&o| !cods.set.iter().any(|&c| c % o == 0))
        .collect();
    QianReport { failures }
}

/// Checks on a single character that is faithful, has `χ(1)^2 = |F:Z|`,
/// restricts irreducibly to `F` and vanishes on `F \ Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCheck {
    pub character: usize,
    pub degree: u64,
    pub faithful: bool,
    pub degree_squared_is_index: bool,
    pub restriction_irreducible: bool,
    pub vanishes_off_center: bool,
    pub cod: u64,
    pub cod_matches_formula: bool,
}

/// Hypotheses and witnesses for the existence of a faithful character of
/// codegree `|G| / |F:Z|^{1/2}`, where `F` is the Fitting subgroup and `Z`
/// the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem23Certificate {
    pub group_order: u64,
    pub center_order: u64,
    pub fitting_order: u64,
    pub non_nilpotent: bool,
    pub center_cyclic: bool,
    pub chief_factor: bool,
    pub coprime: bool,
    /// `Z(F) = Z(G)`; needed so that `F/Z` carries a fully ramified
    /// character. Fails e.g. when `F` is abelian and larger than `Z`.
    pub center_of_fitting_is_center: bool,
    /// Why the certificate does not apply, if it does not.
    pub inapplicable: Option<String>,
    /// `|G| / |F:Z|^{1/2}` when `|F:Z|` is a square.
    pub expected_cod: Option<u64>,
    pub witnesses: Vec<WitnessCheck>,
    /// No element of `G/F` has order divisible by every prime of `|G:F|`.
    pub quotient_condition: bool,
    /// Orders of the elements of `G/F`.
    pub quotient_orders: BTreeSet<u64>,
}

impl Theorem23Certificate {
    pub fn hypotheses_hold(&self) -> bool {
        self.inapplicable.is_none()
    }

    pub fn witness_indices(&self) -> Vec<usize> {
        self.witnesses.iter().map(|w| w.character).collect()
    }

    /// All hypotheses hold, a witness exists and every witness has the
    /// predicted codegree.
    pub fn passes(&self) -> bool {
        self.hypotheses_hold()
            && !self.witnesses.is_empty()
            && self.witnesses.iter().all(|w| w.cod_matches_formula)
    }
}

fn center_of_subgroup(g: &FiniteGroup, h: &Subgroup) -> u64 {
    let gens = h.generators();
    h.elements(g)
        .filter(|&x| gens.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
        .count() as u64
}

/// Evaluates the hypotheses and searches the table for witnesses. `tbl`
/// must be the table of `g` with the same class ordering.
pub fn verify_theorem23(
    g: &FiniteGroup,
    tbl: &CharacterTable,
    cods: &Codegrees,
) -> Result<Theorem23Certificate> {
    let cs = &tbl.classes;
    let n = g.order()?;
    if n != cs.group_order || g.classes()?.representatives != cs.representatives {
        return Err(Error::InvalidArgument(
            "character table does not belong to this group".into(),
        ));
    }
    let z = center(g)?;
    let f = fitting_subgroup(g)?;
    let non_nilpotent = !is_nilpotent(g)?;
    let center_cyclic = is_cyclic(g, &z).is_cyclic();
    let chief_factor = match is_chief_factor_above_center(g, &f, &z) {
        Ok(b) => b,
        Err(Error::Unsupported(_)) => false,
        Err(err) => return Err(err),
    };
    let coprime = hall_coprime_check(g, &f)?;
    let center_of_fitting_is_center = center_of_subgroup(g, &f) == z.order();
    let index = f.order() / z.order();
    let root = isqrt(index);
    let expected_cod = (root * root == index).then(|| n / root);

    let inapplicable = if !non_nilpotent {
        Some("group is nilpotent".to_string())
    } else if !center_cyclic {
        Some("center is not cyclic".into())
    } else if !chief_factor {
        Some("F/Z is not a chief factor".into())
    } else if !coprime {
        Some("|F| and |G:F| are not coprime".into())
    } else if !center_of_fitting_is_center {
        Some("Z(F) is larger than Z(G), so F/Z has no fully ramified character".into())
    } else if expected_cod.is_none() {
        Some("|F:Z| is not a square".into())
    } else {
        None
    };

    let reps_in_f: Vec<bool> = cs
        .representatives
        .iter()
        .map(|&x| f.contains(g, x))
        .collect();
    let reps_in_z: Vec<bool> = cs
        .representatives
        .iter()
        .map(|&x| z.contains(g, x))
        .collect();
    let mut witnesses = Vec::new();
    for rec in &cods.records {
        let row = &tbl.characters[rec.character];
        if !rec.is_faithful() || rec.degree * rec.degree != index {
            continue;
        }
        let vanishes = (0..cs.len())
            .filter(|&j| reps_in_f[j] && !reps_in_z[j])
            .all(|j| row[j].is_zero());
        if !vanishes {
            continue;
        }
        let mut acc = Accumulator::new(cs.exponent);
        for j in (0..cs.len()).filter(|&j| reps_in_f[j]) {
            acc.add_product_conj(i128::from(cs.sizes[j]), &row[j], &row[j]);
        }
        if !acc.equals_integer(i128::from(f.order())) {
            continue;
        }
        witnesses.push(WitnessCheck {
            character: rec.character,
            degree: rec.degree,
            faithful: true,
            degree_squared_is_index: true,
            restriction_irreducible: true,
            vanishes_off_center: true,
            cod: rec.cod,
            cod_matches_formula: Some(rec.cod) == expected_cod,
        });
    }
    if inapplicable.is_none() && witnesses.is_empty() {
        return Err(Error::Consistency(
            "hypotheses hold but no fully ramified faithful character exists".into(),
        ));
    }

    let quotient_orders: BTreeSet<u64> = cs
        .representatives
        .iter()
        .map(|&x| order_modulo(g, x, &f))
        .collect();
    let rad: u64 = pi_set(n / f.order()).iter().product();
    let quotient_condition = rad > 1 && quotient_orders.iter().all(|&o| o % rad != 0);

    Ok(Theorem23Certificate {
        group_order: n,
        center_order: z.order(),
        fitting_order: f.order(),
        non_nilpotent,
        center_cyclic,
        chief_factor,
        coprime,
        center_of_fitting_is_center,
        inapplicable,
        expected_cod,
        witnesses,
        quotient_condition,
        quotient_orders,
    })
}

/// `π(cod χ) = π(|G|)` for each listed character.
pub fn codegree_primes_are_group_primes(
    tbl: &CharacterTable,
    cods: &Codegrees,
    characters: &[usize],
) -> bool {
    let target = pi_set(tbl.group_order());
    characters.iter().all(|&i| cods.records[i].pi_set == target)
}

/// The prime-set consequence for the certified witnesses; `false` when
/// there are none.
pub fn verify_theorem22_consequence(
    tbl: &CharacterTable,
    cods: &Codegrees,
    cert: &Theorem23Certificate,
) -> bool {
    !cert.witnesses.is_empty()
        && codegree_primes_are_group_primes(tbl, cods, &cert.witness_indices())
}
