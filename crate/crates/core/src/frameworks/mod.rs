//! Framework families and their invariants.

mod apx;
mod tgf;

use std::collections::BTreeSet;

use indexmap::{IndexMap, IndexSet};

use crate::error::{Error, Result};
use crate::formula::{check_name, Formula};

pub use apx::{parse_apx, to_apx};
pub use tgf::{parse_tgf, to_tgf};

pub type Attack = (String, String);

fn names<I, S>(items: I) -> IndexSet<String>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    items.into_iter().map(Into::into).collect()
}

fn pairs<I, A, B>(items: I) -> IndexSet<Attack>
where
    I: IntoIterator<Item = (A, B)>,
    A: Into<String>,
    B: Into<String>,
{
    items
        .into_iter()
        .map(|(a, b)| (a.into(), b.into()))
        .collect()
}

/// Plain network `(S, R)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Af {
    pub arguments: IndexSet<String>,
    pub attacks: IndexSet<Attack>,
}

impl Af {
    pub fn new<I, S, J, A, B>(arguments: I, attacks: J) -> Af
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
        J: IntoIterator<Item = (A, B)>,
        A: Into<String>,
        B: Into<String>,
    {
        Af {
            arguments: names(arguments),
            attacks: pairs(attacks),
        }
    }

    /// Attackers of `x` in attack order.
    pub fn attackers<'a>(&'a self, x: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.attacks
            .iter()
            .filter(move |(_, t)| t == x)
            .map(|(s, _)| s.as_str())
    }

    pub fn is_attacked(&self, x: &str) -> bool {
        self.attacks.iter().any(|(_, t)| t == x)
    }

    pub fn validate(&self) -> Vec<String> {
        let mut v = Vec::new();
        check_arguments(&self.arguments, &mut v);
        for (a, b) in &self.attacks {
            check_endpoint(&self.arguments, a, &format!("attack ({a},{b})"), &mut v);
            check_endpoint(&self.arguments, b, &format!("attack ({a},{b})"), &mut v);
        }
        v
    }

    /// Every attack as a singleton joint attack.
    pub fn to_joint(&self) -> JointAf {
        JointAf {
            arguments: self.arguments.clone(),
            attacks: self
                .attacks
                .iter()
                .map(|(a, b)| JointAttack::new([a.as_str()], b.as_str()))
                .collect(),
        }
    }
}

/// A set of arguments jointly attacking one target.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JointAttack {
    pub attackers: BTreeSet<String>,
    pub target: String,
}

impl JointAttack {
    pub fn new<I, S>(attackers: I, target: impl Into<String>) -> JointAttack
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        JointAttack {
            attackers: attackers.into_iter().map(Into::into).collect(),
            target: target.into(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JointAf {
    pub arguments: IndexSet<String>,
    pub attacks: IndexSet<JointAttack>,
}

impl JointAf {
    pub fn new<I, S, J>(arguments: I, attacks: J) -> JointAf
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
        J: IntoIterator<Item = JointAttack>,
    {
        JointAf {
            arguments: names(arguments),
            attacks: attacks.into_iter().collect(),
        }
    }

    /// Attacking sets of `x` in attack order.
    pub fn attacking_sets<'a>(
        &'a self,
        x: &'a str,
    ) -> impl Iterator<Item = &'a BTreeSet<String>> + 'a {
        self.attacks
            .iter()
            .filter(move |a| a.target == x)
            .map(|a| &a.attackers)
    }

    pub fn validate(&self) -> Vec<String> {
        let mut v = Vec::new();
        check_arguments(&self.arguments, &mut v);
        for att in &self.attacks {
            let what = format!("joint attack on {}", att.target);
            if att.attackers.is_empty() {
                v.push(format!("{what} has an empty attacking set"));
            }
            for z in &att.attackers {
                check_endpoint(&self.arguments, z, &what, &mut v);
            }
            check_endpoint(&self.arguments, &att.target, &what, &mut v);
        }
        v
    }
}

/// An identified attack. At level 1 the target is an argument; at level
/// `i + 1` it is the id of a level-`i` attack.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HigherAttack {
    pub id: String,
    pub source: String,
    pub target: String,
}

impl HigherAttack {
    pub fn new(
        id: impl Into<String>,
        source: impl Into<String>,
        target: impl Into<String>,
    ) -> Self {
        HigherAttack {
            id: id.into(),
            source: source.into(),
            target: target.into(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HigherAf {
    pub arguments: IndexSet<String>,
    pub levels: Vec<Vec<HigherAttack>>,
}

impl HigherAf {
    pub fn new<I, S>(arguments: I, levels: Vec<Vec<HigherAttack>>) -> HigherAf
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        HigherAf {
            arguments: names(arguments),
            levels,
        }
    }

    pub fn attacks(&self) -> impl Iterator<Item = &HigherAttack> + '_ {
        self.levels.iter().flatten()
    }

    pub fn attack(&self, id: &str) -> Option<&HigherAttack> {
        self.attacks().find(|a| a.id == id)
    }

    pub fn validate(&self) -> Vec<String> {
        let mut v = Vec::new();
        check_arguments(&self.arguments, &mut v);
        let mut seen: IndexSet<&str> = IndexSet::new();
        for att in self.attacks() {
            if let Err(e) = check_name(&att.id) {
                v.push(format!("attack id: {e}"));
            }
            if self.arguments.contains(&att.id) {
                v.push(format!("attack id {} clashes with an argument", att.id));
            }
            if !seen.insert(att.id.as_str()) {
                v.push(format!("duplicate attack id {}", att.id));
            }
        }
        let mut previous: IndexSet<&str> = IndexSet::new();
        for (i, level) in self.levels.iter().enumerate() {
            for att in level {
                let what = format!("attack {}", att.id);
                check_endpoint(&self.arguments, &att.source, &what, &mut v);
                if i == 0 {
                    check_endpoint(&self.arguments, &att.target, &what, &mut v);
                } else if !previous.contains(att.target.as_str()) {
                    v.push(format!(
                        "{what} targets {}, which is not a level-{} attack",
                        att.target, i
                    ));
                }
            }
            previous = level.iter().map(|a| a.id.as_str()).collect();
        }
        v
    }
}

/// Network with direct attacks `R` and disjunctive attacks `ρ`, where
/// `(z, U) ∈ ρ` attacks every member of `U` and succeeds once one of them is out.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DisjAf {
    pub arguments: IndexSet<String>,
    pub direct: IndexSet<Attack>,
    pub disjunctive: IndexSet<(String, BTreeSet<String>)>,
}

impl DisjAf {
    pub fn new<I, S, J, A, B, K>(arguments: I, direct: J, disjunctive: K) -> DisjAf
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
        J: IntoIterator<Item = (A, B)>,
        A: Into<String>,
        B: Into<String>,
        K: IntoIterator<Item = (String, BTreeSet<String>)>,
    {
        DisjAf {
            arguments: names(arguments),
            direct: pairs(direct),
            disjunctive: disjunctive.into_iter().collect(),
        }
    }

    pub fn direct_attackers<'a>(&'a self, x: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.direct
            .iter()
            .filter(move |(_, t)| t == x)
            .map(|(s, _)| s.as_str())
    }

    /// Disjunctive attacks reaching `x`, as `(z, co-targets)` where the
    /// co-targets are the attacked set without `x`.
    pub fn indirect_attacks<'a>(
        &'a self,
        x: &'a str,
    ) -> impl Iterator<Item = (&'a str, Vec<&'a str>)> + 'a {
        self.disjunctive
            .iter()
            .filter(move |(_, set)| set.contains(x))
            .map(move |(z, set)| {
                let rest = set.iter().map(String::as_str).filter(|u| *u != x).collect();
                (z.as_str(), rest)
            })
    }

    pub fn validate(&self) -> Vec<String> {
        let mut v = Vec::new();
        check_arguments(&self.arguments, &mut v);
        for (a, b) in &self.direct {
            let what = format!("attack ({a},{b})");
            check_endpoint(&self.arguments, a, &what, &mut v);
            check_endpoint(&self.arguments, b, &what, &mut v);
        }
        for (z, set) in &self.disjunctive {
            let what = format!("disjunctive attack from {z}");
            check_endpoint(&self.arguments, z, &what, &mut v);
            if set.is_empty() {
                v.push(format!("{what} has an empty target set"));
            }
            for u in set {
                check_endpoint(&self.arguments, u, &what, &mut v);
            }
        }
        v
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BipolarAf {
    pub arguments: IndexSet<String>,
    pub attacks: IndexSet<Attack>,
    pub supports: IndexSet<Attack>,
}

impl BipolarAf {
    pub fn new<I, S, J, A, B, K, C, D>(arguments: I, attacks: J, supports: K) -> BipolarAf
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
        J: IntoIterator<Item = (A, B)>,
        A: Into<String>,
        B: Into<String>,
        K: IntoIterator<Item = (C, D)>,
        C: Into<String>,
        D: Into<String>,
    {
        BipolarAf {
            arguments: names(arguments),
            attacks: pairs(attacks),
            supports: pairs(supports),
        }
    }

    /// The attack part alone.
    pub fn attack_af(&self) -> Af {
        Af {
            arguments: self.arguments.clone(),
            attacks: self.attacks.clone(),
        }
    }

    pub fn validate(&self) -> Vec<String> {
        let mut v = self.attack_af().validate();
        for (a, b) in &self.supports {
            let what = format!("support ({a},{b})");
            check_endpoint(&self.arguments, a, &what, &mut v);
            check_endpoint(&self.arguments, b, &what, &mut v);
        }
        v
    }
}

/// Arguments with one classical acceptance formula each.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AdfSpec {
    pub arguments: IndexSet<String>,
    pub acceptance: IndexMap<String, Formula>,
}

impl AdfSpec {
    pub fn new<I, S>(arguments: I, acceptance: IndexMap<String, Formula>) -> AdfSpec
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        AdfSpec {
            arguments: names(arguments),
            acceptance,
        }
    }

    pub fn validate(&self) -> Vec<String> {
        let mut v = Vec::new();
        check_arguments(&self.arguments, &mut v);
        for x in &self.arguments {
            if !self.acceptance.contains_key(x) {
                v.push(format!("argument {x} has no acceptance formula"));
            }
        }
        for (x, phi) in &self.acceptance {
            if !self.arguments.contains(x) {
                v.push(format!("acceptance formula for undeclared argument {x}"));
            }
            if phi.contains_n() {
                v.push(format!("acceptance formula of {x} uses N"));
            }
            if phi.contains_world1() {
                v.push(format!("acceptance formula of {x} uses @1"));
            }
            for atom in phi.atoms() {
                if !self.arguments.contains(&atom) {
                    v.push(format!(
                        "acceptance formula of {x} mentions undeclared {atom}"
                    ));
                }
            }
        }
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Framework {
    Plain(Af),
    Joint(JointAf),
    Higher(HigherAf),
    Disjunctive(DisjAf),
    Bipolar(BipolarAf),
    Adf(AdfSpec),
}

impl Framework {
    pub fn arguments(&self) -> &IndexSet<String> {
        match self {
            Framework::Plain(f) => &f.arguments,
            Framework::Joint(f) => &f.arguments,
            Framework::Higher(f) => &f.arguments,
            Framework::Disjunctive(f) => &f.arguments,
            Framework::Bipolar(f) => &f.arguments,
            Framework::Adf(f) => &f.arguments,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Framework::Plain(_) => "plain",
            Framework::Joint(_) => "joint",
            Framework::Higher(_) => "higher",
            Framework::Disjunctive(_) => "disjunctive",
            Framework::Bipolar(_) => "bipolar",
            Framework::Adf(_) => "adf",
        }
    }

    pub fn validate(&self) -> Vec<String> {
        match self {
            Framework::Plain(f) => f.validate(),
            Framework::Joint(f) => f.validate(),
            Framework::Higher(f) => f.validate(),
            Framework::Disjunctive(f) => f.validate(),
            Framework::Bipolar(f) => f.validate(),
            Framework::Adf(f) => f.validate(),
        }
    }

    /// `Ok(())` when [`Framework::validate`] finds nothing.
    pub fn check(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Invalid(v))
        }
    }
}

fn check_arguments(arguments: &IndexSet<String>, v: &mut Vec<String>) {
    if arguments.is_empty() {
        v.push("no arguments".to_string());
    }
    for x in arguments {
        if let Err(e) = check_name(x) {
            v.push(e.to_string());
        }
    }
}

fn check_endpoint(arguments: &IndexSet<String>, name: &str, what: &str, v: &mut Vec<String>) {
    if !arguments.contains(name) {
        v.push(format!("{what}: unknown argument {name}"));
    }
}
