//! Optional TOML config whose keys mirror the long flags.
//!
//! Top-level keys apply to every subcommand; a table named after the
//! subcommand (`[verify]`) overrides them. Flags given on the command line
//! win over both.

use std::path::Path;
use std::str::FromStr;

use toml::{Table, Value};

use crate::CliError;

#[derive(Debug, Default, Clone)]
pub struct Config {
    global: Table,
    section: Table,
}

impl Config {
    pub fn load(path: &Path, subcommand: &str) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text, subcommand)
            .map_err(|e| CliError::usage(format!("config {}: {e}", path.display())))
    }

    pub fn parse(text: &str, subcommand: &str) -> Result<Self, String> {
        let mut global: Table = text.parse().map_err(|e: toml::de::Error| e.message().to_string())?;
        let section = match global.remove(subcommand) {
            Some(Value::Table(t)) => t,
            Some(_) => return Err(format!("`{subcommand}` must be a table")),
            None => Table::new(),
        };
        global.retain(|_, v| !v.is_table());
        Ok(Config { global, section })
    }

    fn raw(&self, key: &str) -> Option<&Value> {
        let alt = key.replace('-', "_");
        [&self.section, &self.global]
            .into_iter()
            .find_map(|t| t.get(key).or_else(|| t.get(&alt)))
    }

    /// Value rendered as flag text; arrays become comma-separated lists.
    pub fn get(&self, key: &str) -> Option<String> {
        self.raw(key).map(render)
    }

    pub fn flag(&self, key: &str) -> Result<bool, CliError> {
        match self.raw(key) {
            None => Ok(false),
            Some(Value::Boolean(b)) => Ok(*b),
            Some(other) => Err(CliError::usage(format!("config key `{key}` must be a boolean, got {other}"))),
        }
    }

    /// Command-line value, else config value, else `default`.
    pub fn pick<T>(&self, flag: Option<T>, key: &str, default: Option<T>) -> Result<T, CliError>
    where
        T: FromStr,
        T::Err: std::fmt::Display,
    {
        if let Some(v) = flag {
            return Ok(v);
        }
        match self.get(key) {
            Some(s) => s
                .parse()
                .map_err(|e| CliError::usage(format!("config key `{key}`: {e}"))),
            None => default.ok_or_else(|| CliError::usage(format!("missing required --{key}"))),
        }
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(render).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}
