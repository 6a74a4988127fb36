use serde::Serialize;
use sha2::{Digest, Sha256};

/// Provenance record written next to produced files.
///
/// Thread count and absolute paths are deliberately absent so the manifest
/// itself is reproducible byte for byte.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub input_digest: String,
    pub tool_version: &'static str,
    pub seed: Option<u64>,
    pub outputs: Vec<String>,
}

impl RunManifest {
    pub fn new(command: String, input: &[u8], outputs: Vec<String>) -> Self {
        RunManifest {
            command,
            input_digest: sha256_hex(input),
            tool_version: env!("CARGO_PKG_VERSION"),
            seed: None,
            outputs,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("manifest serialises");
        s.push('\n');
        s
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}
