//! Group descriptors: `{"preset": name}`, `{"cyclic": n}` or
//! `{"semidirect": {"normal": .., "acting": .., "action": ..}}`.

use std::sync::Arc;

use codegree_core::construct::{build_named, build_semidirect, cyclic_group, extend_action};
use codegree_core::FiniteGroup;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CliError;
use crate::FORMAT;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupDescriptor {
    Preset(String),
    Cyclic(u64),
    Semidirect(Box<SemidirectDescriptor>),
}

/// `N ⋊ H`. `action[i]` is the permutation of `N`'s elements (by index in
/// sorted key order) induced by the `i`-th generator of `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemidirectDescriptor {
    pub normal: GroupDescriptor,
    pub acting: GroupDescriptor,
    pub action: Vec<Vec<u32>>,
}

impl GroupDescriptor {
    pub fn preset(name: &str) -> Self {
        GroupDescriptor::Preset(name.to_string())
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid descriptor: {e}")))
    }

    /// Compact serialization with a fixed field order.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("descriptor serializes")
    }

    /// 64-bit content hash (hex) of the canonical form and the format version.
    pub fn cache_key(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("codegree-lab format {FORMAT}\n").as_bytes());
        h.update(self.canonical_json().as_bytes());
        let digest = h.finalize();
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    /// A short human-readable label.
    pub fn label(&self) -> String {
        match self {
            GroupDescriptor::Preset(name) => name.clone(),
            GroupDescriptor::Cyclic(n) => format!("C_{n}"),
            GroupDescriptor::Semidirect(s) => {
                format!("({}) x| ({})", s.normal.label(), s.acting.label())
            }
        }
    }

    pub fn build(&self) -> Result<FiniteGroup, CliError> {
        Ok(match self {
            GroupDescriptor::Preset(name) => build_named(name)?,
            GroupDescriptor::Cyclic(n) => cyclic_group(*n)?,
            GroupDescriptor::Semidirect(s) => {
                let normal = Arc::new(s.normal.build()?);
                let acting = Arc::new(s.acting.build()?);
                let table = extend_action(&normal, &acting, &s.action)?;
                build_semidirect(normal, acting, table)?
            }
        })
    }
}
