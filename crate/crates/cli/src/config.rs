//! Resolved run configuration.

use std::path::PathBuf;

use clap::ValueEnum;
use serde::Serialize;
use specht_core::modrep::Budgets;
use specht_core::Prime;

use crate::report::Format;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    HookWeight,
    #[value(name = "lemma-4core")]
    #[serde(rename = "lemma-4core")]
    Lemma4Core,
    DimOracle,
    Expansion,
    Gate,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::HookWeight => "hook-weight",
            Suite::Lemma4Core => "lemma-4core",
            Suite::DimOracle => "dim-oracle",
            Suite::Expansion => "expansion",
            Suite::Gate => "gate",
        }
    }

    pub fn default_max_n(self) -> usize {
        match self {
            Suite::HookWeight => 25,
            Suite::Lemma4Core => 40,
            Suite::DimOracle => 10,
            Suite::Expansion => 25,
            Suite::Gate => 30,
        }
    }
}

/// Filters for `enumerate`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Filters {
    pub two_regular: bool,
    pub four_core: bool,
    pub p2_core: bool,
    pub pxp: bool,
}

/// Everything a command needs besides its positional arguments.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub command: &'static str,
    pub p: Option<Prime>,
    pub modulus: Option<usize>,
    pub max_n: Option<usize>,
    pub extension: u32,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub workers: Option<usize>,
    pub budgets: Budgets,
    pub simple: bool,
    pub indecomposable: bool,
    pub assume_abelian: bool,
}

impl RunConfig {
    pub fn require_p(&self) -> Result<Prime, CliError> {
        self.p
            .ok_or_else(|| CliError::Usage(format!("{} needs -p", self.command)))
    }
}
