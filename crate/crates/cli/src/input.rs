use std::io::Read;
use std::path::Path;

use anyhow::{Context, Result};
use efl_core::hypergraph::CanonicalHypergraph;
use efl_core::{parse_hypergraph, LinearHypergraph};

/// Reads a hypergraph in text or canonical JSON form. `-` reads stdin.
pub fn load_hypergraph(path: &Path) -> Result<LinearHypergraph> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?
    };
    parse_input(&text).with_context(|| format!("cannot parse {}", path.display()))
}

pub fn parse_input(text: &str) -> Result<LinearHypergraph> {
    if text.trim_start().starts_with('{') {
        let json: CanonicalHypergraph = serde_json::from_str(text)?;
        Ok(LinearHypergraph::from_json(json)?)
    } else {
        Ok(parse_hypergraph(text)?)
    }
}
