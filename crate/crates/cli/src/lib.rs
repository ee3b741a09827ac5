//! `codegree-lab`: character tables, codegrees and the counterexample
//! certificate from the command line.
//!
//! Every command emits one JSON document (top-level `"format": 1`, exact
//! integers only, keys in sorted order) and sets the exit code:
//! 0 success, 10 prime-set question violations found, 2 input error,
//! 3 resource cap, 4 internal consistency failure.

pub mod cache;
pub mod commands;
pub mod descriptor;
pub mod error;
pub mod tablefile;

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use cache::Cache;
pub use descriptor::GroupDescriptor;
pub use error::{exit, CliError};
pub use tablefile::TableFile;

/// Version of every JSON format written by this crate.
pub const FORMAT: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "codegree-lab",
    version,
    about = "Character tables and codegrees of finite solvable groups"
)]
pub struct Args {
    #[command(subcommand)]
    pub command: Command,
    /// Named group: trivial, C<n>, S3, S4, A4, D8, Q8, SL23, extraspecial_p_small, torus_t, paper_e, paper_g
    #[arg(long, global = true, conflicts_with = "descriptor")]
    pub preset: Option<String>,
    /// JSON group descriptor file
    #[arg(long, global = true)]
    pub descriptor: Option<PathBuf>,
    /// Table cache directory
    #[arg(long, global = true, env = "CODEGREE_LAB_CACHE")]
    pub cache: Option<PathBuf>,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Write the JSON result to this file instead of stdout
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Order, center, Fitting subgroup and element-order spectrum
    Build,
    /// Full character table (cached)
    Chartab,
    /// Kernels and codegrees of all irreducible characters
    Codegrees,
    /// Prime-set witnesses for codegrees; exit 10 if some character has none
    Moreto,
    /// Reproduce the counterexample certificate (default group: paper_g)
    VerifyPaper,
}

impl Args {
    fn group(&self) -> Result<GroupDescriptor, CliError> {
        match (&self.preset, &self.descriptor) {
            (Some(p), _) => Ok(GroupDescriptor::preset(p)),
            (None, Some(path)) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
                GroupDescriptor::from_json(&text)
            }
            (None, None) if self.command == Command::VerifyPaper => {
                Ok(GroupDescriptor::preset("paper_g"))
            }
            (None, None) => Err(CliError::Input(
                "one of --preset or --descriptor is required".into(),
            )),
        }
    }
}

/// Runs a parsed command and returns the rendered JSON and exit code.
pub fn execute(args: &Args) -> Result<(String, i32), CliError> {
    let d = args.group()?;
    let cache = args.cache.as_ref().map(Cache::new);
    let run = || match args.command {
        Command::Build => commands::build(&d),
        Command::Chartab => commands::chartab(&d, cache.as_ref()),
        Command::Codegrees => commands::codegrees_cmd(&d, cache.as_ref()),
        Command::Moreto => commands::moreto(&d, cache.as_ref()),
        Command::VerifyPaper => commands::verify_paper(&d, cache.as_ref()),
    };
    let out = match args.threads {
        Some(0) => return Err(CliError::Input("--threads must be positive".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Internal(format!("thread pool: {e}")))?
            .install(run)?,
        None => run()?,
    };
    let mut text = serde_json::to_string_pretty(&out.json).expect("json renders");
    text.push('\n');
    Ok((text, out.exit_code))
}

/// Full entry point: parse, run, write output; returns the exit code.
pub fn main_with(argv: impl IntoIterator<Item = impl Into<OsString> + Clone>) -> i32 {
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                exit::INPUT
            } else {
                exit::OK
            };
        }
    };
    match execute(&args) {
        Ok((text, code)) => {
            let written = match &args.json {
                Some(path) => fs::write(path, &text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            match written {
                Ok(()) => code,
                Err(msg) => {
                    eprintln!("codegree-lab: {msg}");
                    exit::INPUT
                }
            }
        }
        Err(e) => {
            eprintln!("codegree-lab: {e}");
            e.exit_code()
        }
    }
}
