//! Two-world semantics for iterated strong negation.
//!
//! An atom holds at world 1, world 2, both or neither, subject to
//! persistence (true at world 1 implies true at world 2). `N A` holds at one
//! world exactly when `A` fails at the other; `@1` holds only at world 1.
//! Validity is decided by trying every persistent valuation.

use std::fmt;

use indexmap::IndexMap;
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::state::{CnModel, State};

pub const DEFAULT_MAX_ATOMS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum World {
    One,
    Two,
}

impl World {
    fn other(self) -> World {
        match self {
            World::One => World::Two,
            World::Two => World::One,
        }
    }
}

impl fmt::Display for World {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            World::One => "1",
            World::Two => "2",
        })
    }
}

/// Which worlds a validity check covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    World1,
    Both,
}

impl Mode {
    fn worlds(self) -> &'static [World] {
        match self {
            Mode::World1 => &[World::One],
            Mode::Both => &[World::One, World::Two],
        }
    }
}

/// Persistent valuations in enumeration order.
const VALUES: [(bool, bool); 3] = [(false, false), (false, true), (true, true)];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoWorldModel {
    valuation: IndexMap<String, (bool, bool)>,
}

impl TwoWorldModel {
    /// Fails if some atom is true at world 1 but not at world 2.
    pub fn new<K, I>(pairs: I) -> Result<TwoWorldModel>
    where
        K: Into<String>,
        I: IntoIterator<Item = (K, (bool, bool))>,
    {
        let valuation: IndexMap<String, (bool, bool)> =
            pairs.into_iter().map(|(k, v)| (k.into(), v)).collect();
        let broken: Vec<String> = valuation
            .iter()
            .filter(|(_, (w1, w2))| *w1 && !*w2)
            .map(|(k, _)| format!("{k} is true at world 1 but not at world 2"))
            .collect();
        if broken.is_empty() {
            Ok(TwoWorldModel { valuation })
        } else {
            Err(Error::Invalid(broken))
        }
    }

    pub fn get(&self, atom: &str) -> Option<(bool, bool)> {
        self.valuation.get(atom).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, (bool, bool))> + '_ {
        self.valuation.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.valuation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.valuation.is_empty()
    }
}

impl Serialize for TwoWorldModel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.valuation.len()))?;
        for (k, (w1, w2)) in &self.valuation {
            map.serialize_entry(k, &[u8::from(*w1), u8::from(*w2)])?;
        }
        map.end()
    }
}

impl fmt::Display for TwoWorldModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .iter()
            .map(|(k, (a, b))| format!("{k}=({},{})", u8::from(a), u8::from(b)))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

pub fn eval_world(f: &Formula, m: &TwoWorldModel, w: World) -> Result<bool> {
    Ok(match f {
        Formula::Top => true,
        Formula::Bottom => false,
        Formula::World1 => w == World::One,
        Formula::Atom(q) => {
            let (w1, w2) = m.get(q).ok_or_else(|| Error::UnknownAtom(q.clone()))?;
            match w {
                World::One => w1,
                World::Two => w2,
            }
        }
        Formula::Not(a) => !eval_world(a, m, w)?,
        Formula::N(a) => !eval_world(a, m, w.other())?,
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
            let (l, r) = (eval_world(a, m, w)?, eval_world(b, m, w)?);
            match f {
                Formula::And(..) => l && r,
                Formula::Or(..) => l || r,
                Formula::Imp(..) => !l || r,
                _ => l == r,
            }
        }
    })
}

/// Exhaustive checker over all persistent valuations of a formula's atoms.
#[derive(Clone, Copy, Debug)]
pub struct Checker {
    pub max_atoms: usize,
}

impl Default for Checker {
    fn default() -> Self {
        Checker {
            max_atoms: DEFAULT_MAX_ATOMS,
        }
    }
}

impl Checker {
    pub fn new(max_atoms: usize) -> Self {
        Checker { max_atoms }
    }

    fn check_size(&self, atoms: &[String]) -> Result<()> {
        if atoms.len() > self.max_atoms {
            return Err(Error::SizeCap {
                what: "formula",
                size: atoms.len(),
                cap: self.max_atoms,
            });
        }
        Ok(())
    }

    /// Every persistent valuation of `atoms`, in lexicographic order.
    pub fn valuations(&self, atoms: &[String]) -> Result<Vec<TwoWorldModel>> {
        self.check_size(atoms)?;
        let mut out = Vec::new();
        for_each_valuation(atoms, |m| {
            out.push(m.clone());
            true
        });
        Ok(out)
    }

    /// The first valuation and world, in enumeration order, where `f` fails.
    pub fn find_countermodel(
        &self,
        f: &Formula,
        mode: Mode,
    ) -> Result<Option<(TwoWorldModel, World)>> {
        let atoms: Vec<String> = f.atoms().into_iter().collect();
        self.check_size(&atoms)?;
        let mut found = None;
        let mut failure = None;
        for_each_valuation(&atoms, |m| {
            for &w in mode.worlds() {
                match eval_world(f, m, w) {
                    Ok(true) => {}
                    Ok(false) => {
                        found = Some((m.clone(), w));
                        return false;
                    }
                    Err(e) => {
                        failure = Some(e);
                        return false;
                    }
                }
            }
            true
        });
        match failure {
            Some(e) => Err(e),
            None => Ok(found),
        }
    }

    pub fn is_valid(&self, f: &Formula, mode: Mode) -> Result<bool> {
        Ok(self.find_countermodel(f, mode)?.is_none())
    }
}

/// Visits valuations in lexicographic order (last atom fastest) until
/// `visit` returns false.
fn for_each_valuation(atoms: &[String], mut visit: impl FnMut(&TwoWorldModel) -> bool) {
    let mut digits = vec![0usize; atoms.len()];
    let mut model = TwoWorldModel {
        valuation: atoms.iter().map(|q| (q.clone(), VALUES[0])).collect(),
    };
    loop {
        if !visit(&model) {
            return;
        }
        let mut i = atoms.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            digits[i] = (digits[i] + 1) % VALUES.len();
            model.valuation[i] = VALUES[digits[i]];
            if digits[i] != 0 {
                break;
            }
        }
    }
}

pub fn is_valid(f: &Formula, mode: Mode) -> Result<bool> {
    Checker::default().is_valid(f, mode)
}

pub fn find_countermodel(f: &Formula, mode: Mode) -> Result<Option<(TwoWorldModel, World)>> {
    Checker::default().find_countermodel(f, mode)
}

/// `in` is true at both worlds, `out` at neither, `und` at world 2 only.
pub fn cn_to_two_world(m: &CnModel) -> TwoWorldModel {
    let valuation = m
        .iter()
        .map(|(q, s)| {
            let v = match s {
                State::In => (true, true),
                State::Out => (false, false),
                State::Und => (false, true),
            };
            (q.to_string(), v)
        })
        .collect();
    TwoWorldModel { valuation }
}

pub fn two_world_to_cn(m: &TwoWorldModel) -> CnModel {
    m.iter()
        .map(|(q, v)| {
            let s = match v {
                (true, _) => State::In,
                (false, true) => State::Und,
                (false, false) => State::Out,
            };
            (q, s)
        })
        .collect()
}

/// Intuitionistic negation `~X & N X`.
pub fn inn_not(x: Formula) -> Formula {
    x.clone().not().and(x.n())
}

/// Intuitionistic implication `(X -> Y) & N(X & ~Y & N Y)`.
pub fn inn_imp(x: Formula, y: Formula) -> Formula {
    let witness = x.clone().and(y.clone().not()).and(y.clone().n());
    x.imp(y).and(witness.n())
}
