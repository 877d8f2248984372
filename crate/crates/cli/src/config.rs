//! Settings file: budgets, seed, thread count, output format and field overrides.

use std::path::Path;

use anyhow::{Context, Result};
use qbch::quantum::Budgets;
use serde::Deserialize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub seed: Option<u64>,
    pub threads: Option<usize>,
    pub format: Option<Format>,
    pub budgets: Budgets,
    /// Field modulus as an integer bit pattern, e.g. 11 for X^3 + X + 1.
    pub modulus: Option<u64>,
    /// Basis elements as exponents of X in the field.
    pub basis: Option<Vec<u64>>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }
}
