use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use pseudopal_core::analysis::Evidence;
use pseudopal_core::Word;

/// Longer words are summarised unless `--raw` is given.
pub const RAW_LIMIT: usize = 4096;

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub evidence: Evidence,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analyzed_length: Option<usize>,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
    pub version: &'static str,
    /// Plain-text rendering, one value per line.
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, inputs: Value, result: Value) -> Self {
        Report {
            command,
            inputs,
            result,
            evidence: Evidence::Exact,
            analyzed_length: None,
            extra: Map::new(),
            version: env!("CARGO_PKG_VERSION"),
            lines: Vec::new(),
        }
    }

    pub fn prefix_scoped(mut self, analyzed_length: usize) -> Self {
        self.evidence = Evidence::PrefixScoped;
        self.analyzed_length = Some(analyzed_length);
        self
    }

    pub fn with(mut self, key: &str, value: Value) -> Self {
        self.extra.insert(key.to_string(), value);
        self
    }

    pub fn line(mut self, line: impl Into<String>) -> Self {
        self.lines.push(line.into());
        self
    }
}

pub fn digest(w: &Word) -> String {
    hex::encode(Sha256::digest(w.to_string().as_bytes()))
}

/// The word itself, or `{length, sha256}` when it is too long to print.
pub fn word_value(w: &Word, raw: bool) -> Value {
    if raw || w.len() <= RAW_LIMIT {
        Value::String(w.to_string())
    } else {
        json!({ "length": w.len(), "sha256": digest(w) })
    }
}

pub fn word_line(w: &Word, raw: bool) -> String {
    if raw || w.len() <= RAW_LIMIT {
        w.to_string()
    } else {
        format!(
            "length={} sha256={} (pass --raw for the word)",
            w.len(),
            digest(w)
        )
    }
}
