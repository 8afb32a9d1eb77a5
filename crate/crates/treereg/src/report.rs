//! Run configuration and report envelopes.
//!
//! Reports are reproducible artifacts: the same configuration (including the
//! seed) must serialize to byte-identical JSON, so everything visible here is
//! deterministic and wall-clock timings stay out of report files.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};

/// Resource caps shared across the toolkit.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Caps {
    /// Largest admissible minimal generating set for an ideal power.
    pub max_power_generators: usize,
    /// Largest admissible lcm lattice per connected reduced ideal.
    pub max_lattice: usize,
    /// Largest admissible face count per strand complex.
    pub max_strand_faces: usize,
    /// Aggregate per-computation scan budget inside the oracle.
    pub max_scan_work: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_power_generators: 20_000,
            max_lattice: 2_000_000,
            max_strand_faces: 2_000_000,
            max_scan_work: 1_000_000_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Tsv,
}

/// Everything that determines a run. Echoed verbatim into every report.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    pub s_max: u32,
    pub characteristic: u32,
    pub seed: u64,
    pub jobs: usize,
    pub max_facets: usize,
    pub caps: Caps,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            command: String::new(),
            input: None,
            t: None,
            s_max: 2,
            characteristic: 0,
            seed: 1,
            jobs: 1,
            max_facets: 6,
            caps: Caps::default(),
            format: OutputFormat::Json,
        }
    }
}

/// Top-level report envelope.
#[derive(Debug, Serialize)]
pub struct Report {
    pub artifact: &'static str,
    pub version: &'static str,
    pub config: RunConfig,
    pub passed: bool,
    pub results: serde_json::Value,
}

impl Report {
    pub fn new(config: RunConfig, passed: bool, results: serde_json::Value) -> Self {
        Report {
            artifact: "treereg",
            version: env!("CARGO_PKG_VERSION"),
            config,
            passed,
            results,
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Flat human-readable summary; witnesses are truncated, the JSON form
    /// never is.
    pub fn to_tsv_string(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "artifact\t{} {}\ncommand\t{}\nseed\t{}\ncharacteristic\t{}\npassed\t{}\n",
            self.artifact,
            self.version,
            self.config.command,
            self.config.seed,
            self.config.characteristic,
            self.passed
        ));
        flatten_tsv("results", &self.results, &mut out);
        out
    }

    pub fn render(&self) -> String {
        match self.config.format {
            OutputFormat::Json => self.to_json_string(),
            OutputFormat::Tsv => self.to_tsv_string(),
        }
    }

    pub fn write_to(&self, path: Option<&Path>) -> Result<()> {
        let rendered = self.render();
        match path {
            Some(p) => std::fs::write(p, rendered).map_err(Error::Io),
            None => {
                std::io::stdout()
                    .write_all(rendered.as_bytes())
                    .map_err(Error::Io)
            }
        }
    }
}

fn flatten_tsv(prefix: &str, value: &serde_json::Value, out: &mut String) {
    const TRUNCATE: usize = 120;
    match value {
        serde_json::Value::Object(map) => {
            for (k, v) in map {
                flatten_tsv(&format!("{prefix}.{k}"), v, out);
            }
        }
        serde_json::Value::Array(items) => {
            if items.len() > 24 {
                out.push_str(&format!("{prefix}\t[{} entries]\n", items.len()));
            } else {
                for (k, v) in items.iter().enumerate() {
                    flatten_tsv(&format!("{prefix}[{k}]"), v, out);
                }
            }
        }
        other => {
            let mut text = other.to_string();
            if text.len() > TRUNCATE {
                text.truncate(TRUNCATE);
                text.push_str("...");
            }
            out.push_str(&format!("{prefix}\t{text}\n"));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_configs_render_identically() {
        let make = || {
            Report::new(
                RunConfig { command: "verify fixtures".into(), ..Default::default() },
                true,
                serde_json::json!({"b": 1, "a": [1, 2]}),
            )
        };
        assert_eq!(make().to_json_string(), make().to_json_string());
        assert_eq!(make().to_tsv_string(), make().to_tsv_string());
    }

    #[test]
    fn json_object_keys_are_sorted() {
        let r = Report::new(
            RunConfig::default(),
            true,
            serde_json::json!({"zeta": 1, "alpha": 2}),
        );
        let s = r.to_json_string();
        assert!(s.find("alpha").unwrap() < s.find("zeta").unwrap());
    }
}
