//! The persisted form of a character table with its codegrees.

use std::collections::BTreeMap;

use codegree_core::chartab::ClassSummary;
use codegree_core::codegree::{codegrees, Codegrees};
use codegree_core::{CharacterTable, CyclotomicValue};
use serde::{Deserialize, Serialize};

use crate::descriptor::GroupDescriptor;
use crate::error::CliError;
use crate::FORMAT;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub representative: u64,
    pub size: u64,
    pub order: u64,
    pub inverse: u32,
    /// Class of `rep^s` for `0 <= s < e`.
    pub power_map: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterEntry {
    pub degree: u64,
    /// One `{exponent: multiplicity}` map per class: `Σ m ζ_e^exponent`.
    pub values: Vec<BTreeMap<u64, i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodegreeEntry {
    pub character: usize,
    pub degree: u64,
    pub kernel_size: u64,
    pub kernel_classes: Vec<usize>,
    pub cod: u64,
    pub pi_set: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    pub format: u32,
    pub descriptor: GroupDescriptor,
    pub group: String,
    pub group_order: u64,
    pub exponent: u64,
    pub prime: u64,
    pub root: u64,
    pub classes: Vec<ClassEntry>,
    pub characters: Vec<CharacterEntry>,
    pub codegrees: Vec<CodegreeEntry>,
    pub codegree_set: Vec<u64>,
}

pub fn codegree_entries(cods: &Codegrees) -> Vec<CodegreeEntry> {
    cods.records
        .iter()
        .map(|r| CodegreeEntry {
            character: r.character,
            degree: r.degree,
            kernel_size: r.kernel_size,
            kernel_classes: r.kernel_classes.clone(),
            cod: r.cod,
            pi_set: r.pi_set.iter().copied().collect(),
        })
        .collect()
}

pub fn value_map(v: &CyclotomicValue) -> BTreeMap<u64, i64> {
    v.terms().iter().copied().collect()
}

impl TableFile {
    pub fn new(descriptor: &GroupDescriptor, tbl: &CharacterTable, cods: &Codegrees) -> Self {
        let cs = &tbl.classes;
        let classes = (0..cs.len())
            .map(|j| ClassEntry {
                representative: cs.representatives[j],
                size: cs.sizes[j],
                order: cs.element_orders[j],
                inverse: cs.inverse_class[j],
                power_map: cs.power_map[j].clone(),
            })
            .collect();
        let characters = tbl
            .characters
            .iter()
            .enumerate()
            .map(|(i, row)| CharacterEntry {
                degree: tbl.degree(i),
                values: row.iter().map(value_map).collect(),
            })
            .collect();
        TableFile {
            format: FORMAT,
            descriptor: descriptor.clone(),
            group: tbl.name.clone(),
            group_order: cs.group_order,
            exponent: cs.exponent,
            prime: tbl.prime,
            root: tbl.root,
            classes,
            characters,
            codegrees: codegree_entries(cods),
            codegree_set: cods.set.iter().copied().collect(),
        }
    }

    pub fn to_table(&self) -> Result<CharacterTable, CliError> {
        let e = self.exponent;
        let r = self.classes.len();
        let shape_ok = e >= 1
            && self.characters.iter().all(|c| c.values.len() == r)
            && self
                .classes
                .iter()
                .all(|c| c.power_map.len() as u64 == e && (c.inverse as usize) < r);
        if !shape_ok {
            return Err(CliError::Input(
                "table file has inconsistent dimensions".into(),
            ));
        }
        let classes = ClassSummary {
            group_order: self.group_order,
            exponent: e,
            representatives: self.classes.iter().map(|c| c.representative).collect(),
            sizes: self.classes.iter().map(|c| c.size).collect(),
            element_orders: self.classes.iter().map(|c| c.order).collect(),
            inverse_class: self.classes.iter().map(|c| c.inverse).collect(),
            power_map: self.classes.iter().map(|c| c.power_map.clone()).collect(),
        };
        let characters = self
            .characters
            .iter()
            .map(|c| {
                c.values
                    .iter()
                    .map(|m| CyclotomicValue::new(e, m.iter().map(|(&k, &v)| (k, v))))
                    .collect()
            })
            .collect();
        Ok(CharacterTable {
            name: self.group.clone(),
            classes,
            prime: self.prime,
            root: self.root,
            characters,
        })
    }

    /// Rebuilds the table, re-checks orthogonality and recomputes the
    /// codegrees, which must agree with the stored ones.
    pub fn validate(&self) -> Result<(CharacterTable, Codegrees), CliError> {
        if self.format != FORMAT {
            return Err(CliError::Input(format!(
                "unsupported format {}",
                self.format
            )));
        }
        let tbl = self.to_table()?;
        tbl.verify()
            .map_err(|e| CliError::Input(format!("table fails verification: {e}")))?;
        if tbl.degrees() != self.characters.iter().map(|c| c.degree).collect::<Vec<_>>() {
            return Err(CliError::Input(
                "stored degrees disagree with values".into(),
            ));
        }
        let cods = codegrees(&tbl).map_err(|e| CliError::Input(format!("codegrees fail: {e}")))?;
        if codegree_entries(&cods) != self.codegrees
            || cods.set.iter().copied().collect::<Vec<_>>() != self.codegree_set
        {
            return Err(CliError::Input(
                "stored codegrees disagree with the table".into(),
            ));
        }
        Ok((tbl, cods))
    }
}
