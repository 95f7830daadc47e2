use std::collections::BTreeSet;
use std::fmt;

use indexmap::IndexSet;

use crate::error::{Error, Result};
use crate::formula::{check_name, parse_formula, Formula};

/// A finite list of formulas together with the atoms it is interpreted over.
///
/// The universe contains every atom of every formula and may contain more
/// (arguments declared but never mentioned).
#[derive(Clone, Debug, Default)]
pub struct Theory {
    pub formulas: Vec<Formula>,
    pub universe: IndexSet<String>,
}

impl Theory {
    pub fn new() -> Theory {
        Theory::default()
    }

    pub fn with_universe<I, S>(names: I) -> Theory
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Theory {
            formulas: Vec::new(),
            universe: names.into_iter().map(Into::into).collect(),
        }
    }

    /// Builds a theory whose universe is exactly the atoms of `formulas`.
    pub fn from_formulas<I: IntoIterator<Item = Formula>>(formulas: I) -> Theory {
        let mut t = Theory::new();
        for f in formulas {
            t.push(f);
        }
        t
    }

    /// Appends a formula and adds its atoms to the universe.
    pub fn push(&mut self, f: Formula) {
        f.collect_atoms(&mut self.universe);
        self.formulas.push(f);
    }

    pub fn extend<I: IntoIterator<Item = Formula>>(&mut self, formulas: I) {
        for f in formulas {
            self.push(f);
        }
    }

    pub fn declare(&mut self, name: impl Into<String>) {
        self.universe.insert(name.into());
    }

    /// Union of two theories: formulas of `self` then `other`, universes merged.
    pub fn union(&self, other: &Theory) -> Theory {
        let mut t = self.clone();
        for name in &other.universe {
            t.universe.insert(name.clone());
        }
        t.formulas.extend(other.formulas.iter().cloned());
        t
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.formulas.contains(f)
    }

    pub fn is_cn_flat(&self) -> bool {
        self.formulas.iter().all(Formula::is_cn_flat)
    }

    /// The formulas as a set; duplicates collapse.
    pub fn formula_set(&self) -> BTreeSet<&Formula> {
        self.formulas.iter().collect()
    }

    /// One formula per line, preceded by a `% atoms:` line listing the universe.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("% atoms:");
        for name in &self.universe {
            out.push(' ');
            out.push_str(name);
        }
        out.push('\n');
        for f in &self.formulas {
            out.push_str(&f.to_string());
            out.push('\n');
        }
        out
    }

    /// Inverse of [`Theory::to_text`]. Blank lines and other `%` lines are
    /// ignored; without an atoms line the universe is the set of atoms used.
    pub fn from_text(text: &str) -> Result<Theory> {
        let mut t = Theory::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('%') {
                if let Some(names) = rest.trim().strip_prefix("atoms:") {
                    for name in names.split_whitespace() {
                        check_name(name)?;
                        t.declare(name);
                    }
                }
                continue;
            }
            let f = parse_formula(line).map_err(|e| Error::Input {
                line: i + 1,
                message: e.to_string(),
            })?;
            t.push(f);
        }
        Ok(t)
    }
}

impl PartialEq for Theory {
    fn eq(&self, other: &Theory) -> bool {
        self.formula_set() == other.formula_set()
            && self.universe.iter().collect::<BTreeSet<_>>()
                == other.universe.iter().collect::<BTreeSet<_>>()
    }
}

impl Eq for Theory {}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
