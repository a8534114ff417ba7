//! Plain `key=value` experiment configs.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use calab_core::symcore::Alphabet;

use crate::error::{io_error, LabError, Result};

/// An experiment configuration: one `key=value` pair per line, `#` comments, keys sorted on output.
///
/// Values run to the end of the line and may contain spaces. Serializing a parsed config
/// and parsing it again yields the same map, and a serialized config re-serializes byte for byte.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExperimentConfig {
    entries: BTreeMap<String, String>,
}

impl ExperimentConfig {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        std::fs::read_to_string(path).map_err(io_error(path))?.parse()
    }

    pub fn set(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.entries.insert(key.into(), value.into());
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.set(key, value.to_string());
        self
    }

    /// Overrides each key present in `other`.
    pub fn merge(&mut self, other: ExperimentConfig) {
        self.entries.extend(other.entries);
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn require(&self, key: &str) -> Result<&str> {
        self.get(key).ok_or_else(|| LabError::Config(format!("missing key {key:?}")))
    }

    pub fn str_or<'a>(&'a self, key: &str, default: &'a str) -> &'a str {
        self.get(key).unwrap_or(default)
    }

    /// Parses `key`, falling back to `default` when absent.
    pub fn parse_or<T: FromStr>(&self, key: &str, default: T) -> Result<T> {
        match self.get(key) {
            Some(v) => v.trim().parse().map_err(|_| LabError::Config(format!("bad value for {key}: {v:?}"))),
            None => Ok(default),
        }
    }

    pub fn parse_req<T: FromStr>(&self, key: &str) -> Result<T> {
        let v = self.require(key)?;
        v.trim().parse().map_err(|_| LabError::Config(format!("bad value for {key}: {v:?}")))
    }

    pub fn parse_opt<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        self.get(key).map(|_| self.parse_req(key)).transpose()
    }

    /// A bound that must be at least 1.
    pub fn positive(&self, key: &str, default: usize) -> Result<usize> {
        let v = self.parse_or(key, default)?;
        if v == 0 {
            return Err(LabError::Config(format!("{key} must be positive")));
        }
        Ok(v)
    }

    pub fn alphabet(&self) -> Result<Alphabet> {
        Ok(Alphabet::new(self.parse_req("s")?)?)
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }
}

impl FromStr for ExperimentConfig {
    type Err = LabError;

    fn from_str(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) =
                line.split_once('=').ok_or_else(|| LabError::Config(format!("line {}: expected key=value", n + 1)))?;
            let key = k.trim();
            if key.is_empty() || key.contains(char::is_whitespace) {
                return Err(LabError::Config(format!("line {}: bad key {k:?}", n + 1)));
            }
            if entries.insert(key.to_string(), v.trim().to_string()).is_some() {
                return Err(LabError::Config(format!("line {}: duplicate key {key:?}", n + 1)));
            }
        }
        Ok(ExperimentConfig { entries })
    }
}

impl fmt::Display for ExperimentConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.entries {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}
