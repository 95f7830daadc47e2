//! Model search over coherent three-valued assignments.
//!
//! Atoms are assigned in universe order, trying `in`, `out`, `und`, so models
//! come out in lexicographic order. Every formula touching the newly assigned
//! atom is evaluated in Kleene three-valued logic and the branch is cut as
//! soon as one is definitely false. Top-level literals narrow the candidate
//! states of their atom before the search starts.

use indexmap::IndexMap;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::state::{CnModel, Extension, Labelling, State};
use crate::theory::Theory;

pub const DEFAULT_MAX_ATOMS: usize = 20;

/// Universes at least this large are split across threads.
const PARALLEL_FROM: usize = 10;
const PREFIX_DEPTH: usize = 4;

#[derive(Clone, Debug)]
enum Node {
    Const(bool),
    /// `q`: the atom is in.
    Pos(usize),
    /// `N q`: the atom is out.
    Neg(usize),
    Not(Box<Node>),
    And(Vec<Node>),
    Or(Vec<Node>),
    Imp(Box<Node>, Box<Node>),
    Iff(Box<Node>, Box<Node>),
}

impl Node {
    fn compile(f: &Formula, index: &IndexMap<String, usize>) -> Result<Node> {
        let idx = |q: &str| {
            index
                .get(q)
                .copied()
                .ok_or_else(|| Error::UnknownAtom(q.to_string()))
        };
        Ok(match f {
            Formula::Top => Node::Const(true),
            Formula::Bottom => Node::Const(false),
            Formula::World1 => return Err(Error::WorldConstant),
            Formula::Atom(q) => Node::Pos(idx(q)?),
            Formula::N(a) => match &**a {
                Formula::Atom(q) => Node::Neg(idx(q)?),
                _ => return Err(Error::NotCnFlat(f.to_string())),
            },
            Formula::Not(a) => Node::Not(Box::new(Node::compile(a, index)?)),
            Formula::And(..) => {
                let mut parts = Vec::new();
                flatten(f, true, index, &mut parts)?;
                Node::And(parts)
            }
            Formula::Or(..) => {
                let mut parts = Vec::new();
                flatten(f, false, index, &mut parts)?;
                Node::Or(parts)
            }
            Formula::Imp(a, b) => Node::Imp(
                Box::new(Node::compile(a, index)?),
                Box::new(Node::compile(b, index)?),
            ),
            Formula::Iff(a, b) => Node::Iff(
                Box::new(Node::compile(a, index)?),
                Box::new(Node::compile(b, index)?),
            ),
        })
    }

    fn eval(&self, asg: &[Option<State>]) -> Option<bool> {
        match self {
            Node::Const(b) => Some(*b),
            Node::Pos(i) => asg[*i].map(|s| s == State::In),
            Node::Neg(i) => asg[*i].map(|s| s == State::Out),
            Node::Not(a) => a.eval(asg).map(|v| !v),
            Node::And(parts) => {
                let mut known = true;
                for p in parts {
                    match p.eval(asg) {
                        Some(false) => return Some(false),
                        None => known = false,
                        Some(true) => {}
                    }
                }
                known.then_some(true)
            }
            Node::Or(parts) => {
                let mut known = true;
                for p in parts {
                    match p.eval(asg) {
                        Some(true) => return Some(true),
                        None => known = false,
                        Some(false) => {}
                    }
                }
                known.then_some(false)
            }
            Node::Imp(a, b) => match (a.eval(asg), b.eval(asg)) {
                (Some(false), _) | (_, Some(true)) => Some(true),
                (Some(true), Some(false)) => Some(false),
                _ => None,
            },
            Node::Iff(a, b) => match (a.eval(asg), b.eval(asg)) {
                (Some(x), Some(y)) => Some(x == y),
                _ => None,
            },
        }
    }

    fn atoms(&self, out: &mut Vec<usize>) {
        match self {
            Node::Const(_) => {}
            Node::Pos(i) | Node::Neg(i) => out.push(*i),
            Node::Not(a) => a.atoms(out),
            Node::And(ps) | Node::Or(ps) => ps.iter().for_each(|p| p.atoms(out)),
            Node::Imp(a, b) | Node::Iff(a, b) => {
                a.atoms(out);
                b.atoms(out);
            }
        }
    }

    /// States allowed by a literal: `q`, `N q`, `~q`, `~N q`.
    fn literal_domain(&self) -> Option<(usize, [bool; 3])> {
        let allowed = |f: fn(State) -> bool| State::ALL.map(f);
        match self {
            Node::Pos(i) => Some((*i, allowed(|s| s == State::In))),
            Node::Neg(i) => Some((*i, allowed(|s| s == State::Out))),
            Node::Not(a) => match **a {
                Node::Pos(i) => Some((i, allowed(|s| s != State::In))),
                Node::Neg(i) => Some((i, allowed(|s| s != State::Out))),
                _ => None,
            },
            _ => None,
        }
    }
}

fn flatten(
    f: &Formula,
    conj: bool,
    index: &IndexMap<String, usize>,
    out: &mut Vec<Node>,
) -> Result<()> {
    match (f, conj) {
        (Formula::And(a, b), true) | (Formula::Or(a, b), false) => {
            flatten(a, conj, index, out)?;
            flatten(b, conj, index, out)
        }
        _ => {
            out.push(Node::compile(f, index)?);
            Ok(())
        }
    }
}

/// A theory compiled against its universe.
struct Compiled {
    universe: Vec<String>,
    domains: Vec<[bool; 3]>,
    /// Formulas to re-check once atom `i` is assigned.
    watch: Vec<Vec<usize>>,
    nodes: Vec<Node>,
    /// Some formula is false regardless of the assignment.
    unsat: bool,
}

impl Compiled {
    fn new(t: &Theory, extra: Option<&Formula>) -> Result<Compiled> {
        let index: IndexMap<String, usize> = t
            .universe
            .iter()
            .enumerate()
            .map(|(i, q)| (q.clone(), i))
            .collect();
        let n = index.len();
        let mut nodes = Vec::new();
        for f in t.formulas.iter().chain(extra) {
            if !f.is_cn_flat() {
                return Err(Error::NotCnFlat(f.to_string()));
            }
            let node = Node::compile(f, &index)?;
            // top-level conjunctions become separate constraints
            match node {
                Node::And(parts) => nodes.extend(parts),
                other => nodes.push(other),
            }
        }
        let mut domains = vec![[true; 3]; n];
        let mut watch = vec![Vec::new(); n];
        let mut unsat = false;
        let mut kept = Vec::new();
        for node in nodes {
            if let Some((i, allowed)) = node.literal_domain() {
                for (d, a) in domains[i].iter_mut().zip(allowed) {
                    *d &= a;
                }
                continue;
            }
            let mut atoms = Vec::new();
            node.atoms(&mut atoms);
            atoms.sort_unstable();
            atoms.dedup();
            if atoms.is_empty() {
                if node.eval(&[]) == Some(false) {
                    unsat = true;
                }
                continue;
            }
            let k = kept.len();
            for a in atoms {
                watch[a].push(k);
            }
            kept.push(node);
        }
        Ok(Compiled {
            universe: t.universe.iter().cloned().collect(),
            domains,
            watch,
            nodes: kept,
            unsat,
        })
    }

    fn consistent_after(&self, i: usize, asg: &[Option<State>]) -> bool {
        self.watch[i]
            .iter()
            .all(|&k| self.nodes[k].eval(asg) != Some(false))
    }

    fn to_model(&self, asg: &[Option<State>]) -> CnModel {
        self.universe
            .iter()
            .zip(asg)
            .map(|(q, s)| (q.clone(), s.expect("complete assignment")))
            .collect()
    }

    /// Depth-first search from `depth`; `visit` returns false to stop.
    fn search(
        &self,
        asg: &mut Vec<Option<State>>,
        depth: usize,
        stop_at: usize,
        visit: &mut dyn FnMut(&[Option<State>]) -> bool,
    ) -> bool {
        if depth == stop_at {
            return visit(asg);
        }
        for (k, s) in State::ALL.into_iter().enumerate() {
            if !self.domains[depth][k] {
                continue;
            }
            asg[depth] = Some(s);
            if self.consistent_after(depth, asg) && !self.search(asg, depth + 1, stop_at, visit) {
                asg[depth] = None;
                return false;
            }
        }
        asg[depth] = None;
        true
    }

    fn all_models(&self, parallel: bool) -> Vec<CnModel> {
        if self.unsat {
            return Vec::new();
        }
        let n = self.universe.len();
        let mut asg = vec![None; n];
        if !parallel || n < PARALLEL_FROM {
            let mut out = Vec::new();
            self.search(&mut asg, 0, n, &mut |a| {
                out.push(self.to_model(a));
                true
            });
            return out;
        }
        let mut prefixes = Vec::new();
        self.search(&mut asg, 0, PREFIX_DEPTH, &mut |a| {
            prefixes.push(a.to_vec());
            true
        });
        prefixes
            .into_par_iter()
            .map(|mut prefix| {
                let mut out = Vec::new();
                self.search(&mut prefix, PREFIX_DEPTH, n, &mut |a| {
                    out.push(self.to_model(a));
                    true
                });
                out
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    }

    fn first_model(&self) -> Option<CnModel> {
        if self.unsat {
            return None;
        }
        let n = self.universe.len();
        let mut asg = vec![None; n];
        let mut found = None;
        self.search(&mut asg, 0, n, &mut |a| {
            found = Some(self.to_model(a));
            false
        });
        found
    }
}

/// Search settings: the atom cap and whether to use worker threads.
#[derive(Clone, Copy, Debug)]
pub struct ModelSearch {
    pub max_atoms: usize,
    pub parallel: bool,
}

impl Default for ModelSearch {
    fn default() -> Self {
        ModelSearch {
            max_atoms: DEFAULT_MAX_ATOMS,
            parallel: true,
        }
    }
}

impl ModelSearch {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn max_atoms(mut self, cap: usize) -> Self {
        self.max_atoms = cap;
        self
    }

    pub fn parallel(mut self, on: bool) -> Self {
        self.parallel = on;
        self
    }

    fn check_size(&self, t: &Theory) -> Result<()> {
        if t.universe.len() > self.max_atoms {
            return Err(Error::SizeCap {
                what: "theory",
                size: t.universe.len(),
                cap: self.max_atoms,
            });
        }
        Ok(())
    }

    /// All CN models of `t` in lexicographic order.
    pub fn enumerate(&self, t: &Theory) -> Result<Vec<CnModel>> {
        self.check_size(t)?;
        Ok(Compiled::new(t, None)?.all_models(self.parallel))
    }

    pub fn is_consistent(&self, t: &Theory) -> Result<bool> {
        self.check_size(t)?;
        Ok(Compiled::new(t, None)?.first_model().is_some())
    }

    /// The first model of `t` falsifying `f`, if any.
    pub fn find_countermodel(&self, t: &Theory, f: &Formula) -> Result<Option<CnModel>> {
        self.check_size(t)?;
        let negated = f.clone().not();
        Ok(Compiled::new(t, Some(&negated))?.first_model())
    }

    pub fn entails(&self, t: &Theory, f: &Formula) -> Result<bool> {
        Ok(self.find_countermodel(t, f)?.is_none())
    }

    /// Atoms true in every model.
    pub fn grounded_by_entailment(&self, t: &Theory) -> Result<Extension> {
        Ok(self.grounded_labelling(t)?.in_set())
    }

    /// `in` for atoms `q` entailed, `out` for atoms whose `N q` is entailed,
    /// `und` otherwise.
    pub fn grounded_labelling(&self, t: &Theory) -> Result<Labelling> {
        let models = self.enumerate(t)?;
        if models.is_empty() {
            return Err(Error::Inconsistent);
        }
        Ok(t.universe
            .iter()
            .map(|q| {
                let first = models[0].get(q);
                let same = models.iter().all(|m| m.get(q) == first);
                let state = match first {
                    Some(s) if same && s != State::Und => s,
                    _ => State::Und,
                };
                (q.clone(), state)
            })
            .collect())
    }
}

pub fn enumerate_models(t: &Theory) -> Result<Vec<CnModel>> {
    ModelSearch::default().enumerate(t)
}

pub fn entails(t: &Theory, f: &Formula) -> Result<bool> {
    ModelSearch::default().entails(t, f)
}

pub fn find_countermodel(t: &Theory, f: &Formula) -> Result<Option<CnModel>> {
    ModelSearch::default().find_countermodel(t, f)
}

pub fn grounded_by_entailment(t: &Theory) -> Result<Extension> {
    ModelSearch::default().grounded_by_entailment(t)
}

/// True iff `m` satisfies every formula of `t`. The model must assign
/// exactly the atoms of the universe.
pub fn is_model(t: &Theory, m: &CnModel) -> Result<bool> {
    if let Some(q) = t.universe.iter().find(|q| m.get(q).is_none()) {
        return Err(Error::UnknownAtom(q.clone()));
    }
    if let Some(q) = m.names().find(|q| !t.universe.contains(*q)) {
        return Err(Error::UnknownAtom(q.to_string()));
    }
    for f in &t.formulas {
        if !f.evaluate_cn(m)? {
            return Ok(false);
        }
    }
    Ok(true)
}
