use argn::{CnModel, Extension, Labelling, State};
use serde::Serialize;

use crate::{Engine, Semantics};

#[derive(Debug, Serialize)]
pub struct Divergence {
    pub network: String,
    pub only_cn: Vec<Labelling>,
    pub only_oracle: Vec<Labelling>,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub input: String,
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semantics: Option<Semantics>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub engine: Option<Engine>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub models: Option<Vec<CnModel>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labellings: Option<Vec<Labelling>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extensions: Option<Vec<Extension>>,
    pub timing_ms: u64,
    pub divergences: Vec<Divergence>,
}

impl RunReport {
    pub fn new(input: String, kind: &'static str) -> Self {
        RunReport {
            input,
            kind,
            semantics: None,
            engine: None,
            models: None,
            labellings: None,
            extensions: None,
            timing_ms: 0,
            divergences: Vec::new(),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let mut header = format!("{} ({})", self.input, self.kind);
        if let Some(s) = self.semantics {
            header.push_str(&format!(", {} semantics", name(&s)));
        }
        if let Some(e) = self.engine {
            header.push_str(&format!(", engine {}", name(&e)));
        }
        out.push_str(&header);
        out.push('\n');
        if let Some(models) = &self.models {
            out.push_str(&format!("{} model(s)\n", models.len()));
            let rows: Vec<Vec<(&str, State)>> = models.iter().map(|m| m.iter().collect()).collect();
            out.push_str(&table(&rows, None));
        }
        if let Some(labellings) = &self.labellings {
            out.push_str(&format!("{} labelling(s)\n", labellings.len()));
            let rows: Vec<Vec<(&str, State)>> =
                labellings.iter().map(|l| l.iter().collect()).collect();
            let exts: Vec<String> = labellings.iter().map(|l| set_text(&l.in_set())).collect();
            out.push_str(&table(&rows, Some(&exts)));
        }
        for d in &self.divergences {
            out.push_str(&format!("divergence on {}\n", d.network));
            for l in &d.only_cn {
                out.push_str(&format!("  only from models: {l}\n"));
            }
            for l in &d.only_oracle {
                out.push_str(&format!("  only from oracle: {l}\n"));
            }
        }
        out
    }
}

fn name<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|j| j.as_str().map(str::to_string))
        .unwrap_or_default()
}

pub fn set_text(e: &Extension) -> String {
    let items: Vec<&str> = e.iter().map(String::as_str).collect();
    format!("{{{}}}", items.join(", "))
}

/// Column per atom, row per assignment, optional trailing column.
fn table(rows: &[Vec<(&str, State)>], extra: Option<&[String]>) -> String {
    let Some(first) = rows.first() else {
        return String::new();
    };
    let names: Vec<&str> = first.iter().map(|(k, _)| *k).collect();
    let widths: Vec<usize> = names.iter().map(|n| n.len().max(3)).collect();
    let mut out = String::new();
    let mut line: Vec<String> = names
        .iter()
        .zip(&widths)
        .map(|(n, w)| format!("{n:<w$}"))
        .collect();
    if extra.is_some() {
        line.push("| extension".into());
    }
    out.push_str(line.join(" ").trim_end());
    out.push('\n');
    for (i, row) in rows.iter().enumerate() {
        let mut line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|((_, s), w)| format!("{:<w$}", s.as_str()))
            .collect();
        if let Some(extra) = extra {
            line.push(format!("| {}", extra[i]));
        }
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}
