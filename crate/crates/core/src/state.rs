use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

/// Three-valued status of an argument. The declaration order `in < out < und`
/// is the enumeration order used everywhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum State {
    In,
    Out,
    Und,
}

impl State {
    pub const ALL: [State; 3] = [State::In, State::Out, State::Und];

    /// Truth values of `(q, N q)`.
    pub fn pair(self) -> (bool, bool) {
        match self {
            State::In => (true, false),
            State::Out => (false, true),
            State::Und => (false, false),
        }
    }

    /// Inverse of [`State::pair`]; `(true, true)` is incoherent and yields `None`.
    pub fn from_pair(q: bool, nq: bool) -> Option<State> {
        match (q, nq) {
            (true, false) => Some(State::In),
            (false, true) => Some(State::Out),
            (false, false) => Some(State::Und),
            (true, true) => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            State::In => "in",
            State::Out => "out",
            State::Und => "und",
        }
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub type Extension = BTreeSet<String>;

macro_rules! state_map {
    ($name:ident, $field:ident) => {
        #[derive(Clone, Debug, Default, Serialize, Deserialize)]
        pub struct $name {
            pub $field: IndexMap<String, State>,
        }

        impl $name {
            pub fn new() -> Self {
                Self::default()
            }

            pub fn from_pairs<K, I>(pairs: I) -> Self
            where
                K: Into<String>,
                I: IntoIterator<Item = (K, State)>,
            {
                Self {
                    $field: pairs.into_iter().map(|(k, v)| (k.into(), v)).collect(),
                }
            }

            /// Every name mapped to the same state.
            pub fn uniform<K, I>(names: I, state: State) -> Self
            where
                K: Into<String>,
                I: IntoIterator<Item = K>,
            {
                Self::from_pairs(names.into_iter().map(|k| (k, state)))
            }

            pub fn get(&self, name: &str) -> Option<State> {
                self.$field.get(name).copied()
            }

            pub fn insert(&mut self, name: impl Into<String>, state: State) {
                self.$field.insert(name.into(), state);
            }

            pub fn len(&self) -> usize {
                self.$field.len()
            }

            pub fn is_empty(&self) -> bool {
                self.$field.is_empty()
            }

            pub fn iter(&self) -> impl Iterator<Item = (&str, State)> + '_ {
                self.$field.iter().map(|(k, v)| (k.as_str(), *v))
            }

            pub fn names(&self) -> impl Iterator<Item = &str> + '_ {
                self.$field.keys().map(String::as_str)
            }

            /// Names mapped to `in`, sorted.
            pub fn in_set(&self) -> Extension {
                self.with_state(State::In)
            }

            pub fn with_state(&self, state: State) -> Extension {
                self.iter()
                    .filter(|(_, s)| *s == state)
                    .map(|(k, _)| k.to_string())
                    .collect()
            }

            /// Entries sorted by name; the basis of equality, hashing and order.
            pub fn canonical(&self) -> Vec<(String, State)> {
                let mut entries: Vec<_> = self.iter().map(|(k, s)| (k.to_string(), s)).collect();
                entries.sort();
                entries
            }
        }

        impl PartialEq for $name {
            fn eq(&self, other: &Self) -> bool {
                self.$field == other.$field
            }
        }

        impl Eq for $name {}

        impl Hash for $name {
            fn hash<H: Hasher>(&self, state: &mut H) {
                self.canonical().hash(state);
            }
        }

        impl PartialOrd for $name {
            fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
                Some(self.cmp(other))
            }
        }

        impl Ord for $name {
            fn cmp(&self, other: &Self) -> std::cmp::Ordering {
                self.canonical().cmp(&other.canonical())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("{")?;
                for (i, (k, s)) in self.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{k}: {s}")?;
                }
                f.write_str("}")
            }
        }

        impl<K: Into<String>> FromIterator<(K, State)> for $name {
            fn from_iter<I: IntoIterator<Item = (K, State)>>(iter: I) -> Self {
                Self::from_pairs(iter)
            }
        }
    };
}

state_map!(CnModel, model);
state_map!(Labelling, labelling);

/// Same states, viewed as a labelling.
pub fn model_to_labelling(model: &CnModel) -> Labelling {
    Labelling {
        labelling: model.model.clone(),
    }
}

pub fn labelling_to_model(labelling: &Labelling) -> CnModel {
    CnModel {
        model: labelling.labelling.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_round_trip() {
        for s in State::ALL {
            let (q, nq) = s.pair();
            assert_eq!(State::from_pair(q, nq), Some(s));
        }
        assert_eq!(State::from_pair(true, true), None);
    }

    #[test]
    fn equality_ignores_order() {
        let a = CnModel::from_pairs([("x", State::In), ("y", State::Out)]);
        let b = CnModel::from_pairs([("y", State::Out), ("x", State::In)]);
        assert_eq!(a, b);
        let set: std::collections::HashSet<_> = [a, b].into_iter().collect();
        assert_eq!(set.len(), 1);
    }

    #[test]
    fn json_shapes() {
        let m = CnModel::from_pairs([("x", State::In), ("y", State::Und)]);
        assert_eq!(
            serde_json::to_string(&m).unwrap(),
            r#"{"model":{"x":"in","y":"und"}}"#
        );
        let l = model_to_labelling(&m);
        assert_eq!(
            serde_json::to_string(&l).unwrap(),
            r#"{"labelling":{"x":"in","y":"und"}}"#
        );
        let back: Labelling =
            serde_json::from_str(r#"{"labelling":{"x":"in","y":"und"}}"#).unwrap();
        assert_eq!(labelling_to_model(&back), m);
    }

    #[test]
    fn in_set_is_sorted() {
        let l = Labelling::from_pairs([("z", State::In), ("y", State::Out), ("x", State::In)]);
        let ext: Vec<_> = l.in_set().into_iter().collect();
        assert_eq!(ext, vec!["x", "z"]);
    }
}
