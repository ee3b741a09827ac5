//! On-disk table cache keyed by descriptor hash and format version.

use std::fs;
use std::path::{Path, PathBuf};

use crate::descriptor::GroupDescriptor;
use crate::error::CliError;
use crate::tablefile::TableFile;

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, d: &GroupDescriptor) -> PathBuf {
        self.dir.join(format!("{}.json", d.cache_key()))
    }

    /// A validated cached table, or `None` with a warning if the file is
    /// missing or untrustworthy.
    pub fn load(&self, d: &GroupDescriptor) -> Option<TableFile> {
        let path = self.path_for(d);
        let text = fs::read_to_string(&path).ok()?;
        let checked = serde_json::from_str::<TableFile>(&text)
            .map_err(|e| CliError::Input(e.to_string()))
            .and_then(|tf| {
                if tf.descriptor != *d {
                    return Err(CliError::Input("descriptor mismatch".into()));
                }
                tf.validate()?;
                Ok(tf)
            });
        match checked {
            Ok(tf) => {
                log::info!("loaded cached table {}", path.display());
                Some(tf)
            }
            Err(e) => {
                log::warn!(
                    "ignoring corrupt cache file {}: {e}; recomputing",
                    path.display()
                );
                None
            }
        }
    }

    pub fn store(&self, tf: &TableFile) -> Result<(), CliError> {
        let io = |e: std::io::Error| {
            CliError::Input(format!("cannot write cache in {}: {e}", self.dir.display()))
        };
        fs::create_dir_all(&self.dir).map_err(io)?;
        let path = self.path_for(&tf.descriptor);
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_string(tf).expect("table serializes")).map_err(io)?;
        fs::rename(&tmp, &path).map_err(io)
    }
}
