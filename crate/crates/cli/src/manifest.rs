use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Provenance record written next to every CSV file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    /// Arguments the output was produced with, program name first.
    pub command_line: Vec<String>,
    /// SHA-256 of `effective_config`.
    pub config_sha256: String,
    /// Every setting of the run, in canonical `key = value` form.
    pub effective_config: String,
    pub seed: Option<u64>,
    pub tool_version: String,
    /// RFC 3339, UTC.
    pub timestamp: String,
    pub output: PathBuf,
    pub output_sha256: String,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

impl RunManifest {
    pub fn new(
        command_line: Vec<String>,
        effective_config: String,
        seed: Option<u64>,
        output: &Path,
        csv: &str,
    ) -> Self {
        Self {
            command_line,
            config_sha256: sha256_hex(effective_config.as_bytes()),
            effective_config,
            seed,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            output: output.to_path_buf(),
            output_sha256: sha256_hex(csv.as_bytes()),
        }
    }

    /// `<output>.manifest.json`.
    pub fn path_for(output: &Path) -> PathBuf {
        let mut name = output.as_os_str().to_owned();
        name.push(".manifest.json");
        PathBuf::from(name)
    }

    pub fn write(&self) -> Result<PathBuf> {
        let path = Self::path_for(&self.output);
        let json = serde_json::to_string_pretty(self)?;
        fs::write(&path, json + "\n").with_context(|| format!("writing {}", path.display()))?;
        Ok(path)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading manifest {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing manifest {}", path.display()))
    }
}

/// `args` with the value of `--output`/`-o` replaced by `output`.
pub fn with_output(args: &[String], output: &Path) -> Vec<String> {
    let out = output.display().to_string();
    let mut result = Vec::with_capacity(args.len());
    let mut replace_next = false;
    for a in args {
        if replace_next {
            result.push(out.clone());
            replace_next = false;
        } else if a == "--output" || a == "-o" {
            result.push(a.clone());
            replace_next = true;
        } else if a.starts_with("--output=") {
            result.push(format!("--output={out}"));
        } else {
            result.push(a.clone());
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_digest() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn output_is_replaced() {
        let args: Vec<String> = ["radprop", "simulate", "--output", "a.csv", "--seed", "3"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let new = with_output(&args, Path::new("b.csv"));
        assert_eq!(new[3], "b.csv");
        assert_eq!(new[5], "3");
        let eq = with_output(&["x".into(), "--output=a.csv".into()], Path::new("c.csv"));
        assert_eq!(eq[1], "--output=c.csv");
    }

    #[test]
    fn manifest_path() {
        assert_eq!(
            RunManifest::path_for(Path::new("out/r.csv")),
            PathBuf::from("out/r.csv.manifest.json")
        );
    }
}
