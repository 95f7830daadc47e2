use indexmap::IndexSet;

use super::Af;
use crate::error::{Error, Result};
use crate::formula::check_name;

/// Parses Trivial Graph Format: node lines, a `#` line, then edge lines.
/// Only the first token of a node line and the first two of an edge line
/// are read; the rest is a label.
pub fn parse_tgf(text: &str) -> Result<Af> {
    let mut arguments = IndexSet::new();
    let mut attacks = IndexSet::new();
    let mut in_edges = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Input {
            line: line_no,
            message,
        };
        if line == "#" {
            if in_edges {
                return Err(err("second `#` separator".into()));
            }
            in_edges = true;
            continue;
        }
        let mut tokens = line.split_whitespace();
        if !in_edges {
            let node = tokens.next().unwrap_or_default();
            check_name(node).map_err(|e| err(e.to_string()))?;
            if !arguments.insert(node.to_string()) {
                return Err(err(format!("duplicate node {node}")));
            }
        } else {
            let (Some(src), Some(tgt)) = (tokens.next(), tokens.next()) else {
                return Err(err(format!("malformed edge line `{line}`")));
            };
            for end in [src, tgt] {
                if !arguments.contains(end) {
                    return Err(err(format!("unknown endpoint {end}")));
                }
            }
            attacks.insert((src.to_string(), tgt.to_string()));
        }
    }
    if arguments.is_empty() {
        return Err(Error::Invalid(vec!["no arguments".into()]));
    }
    Ok(Af { arguments, attacks })
}

pub fn to_tgf(af: &Af) -> String {
    let mut out = String::new();
    for x in &af.arguments {
        out.push_str(x);
        out.push('\n');
    }
    out.push_str("#\n");
    for (a, b) in &af.attacks {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}
