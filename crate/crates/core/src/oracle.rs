//! Brute-force labelling semantics, independent of the logic pipeline.
//!
//! Candidate labellings are generated in lexicographic order (`in < out <
//! und`, arguments in declaration order) and checked against the defining
//! conditions as written. A branch is dropped as soon as some argument and
//! all arguments its condition reads are labelled and the condition fails.

use std::collections::BTreeSet;

use indexmap::IndexSet;

use crate::error::{Error, Result};
use crate::frameworks::{Af, DisjAf, JointAf};
use crate::state::{Labelling, State};

pub const DEFAULT_MAX_ARGUMENTS: usize = 12;

/// Direct attackers and `(z, co-targets)` pairs of one argument, by index.
type AttackShape = (Vec<usize>, Vec<(usize, Vec<usize>)>);

#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    pub max_arguments: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            max_arguments: DEFAULT_MAX_ARGUMENTS,
        }
    }
}

fn index_of(args: &IndexSet<String>, name: &str) -> usize {
    args.get_index_of(name).expect("validated framework")
}

/// Enumerates labellings position by position, in lexicographic order.
/// The condition of argument `x` is checked once `x` and every position in
/// `deps[x]` are labelled; a failed check abandons the branch.
fn enumerate(
    args: &IndexSet<String>,
    cap: usize,
    deps: &[Vec<usize>],
    check: impl Fn(usize, &[State]) -> bool,
) -> Result<Vec<Labelling>> {
    let n = args.len();
    if n > cap {
        return Err(Error::SizeCap {
            what: "framework",
            size: n,
            cap,
        });
    }
    let mut ready = vec![Vec::new(); n];
    for (x, d) in deps.iter().enumerate() {
        let last = d.iter().copied().chain([x]).max().unwrap_or(x);
        ready[last].push(x);
    }
    let mut out = Vec::new();
    let mut lab = vec![State::In; n];
    descend(0, &mut lab, &ready, &check, &mut |lab| {
        out.push(args.iter().cloned().zip(lab.iter().copied()).collect());
    });
    Ok(out)
}

fn descend(
    depth: usize,
    lab: &mut Vec<State>,
    ready: &[Vec<usize>],
    check: &impl Fn(usize, &[State]) -> bool,
    emit: &mut impl FnMut(&[State]),
) {
    if depth == lab.len() {
        emit(lab);
        return;
    }
    for s in State::ALL {
        lab[depth] = s;
        if ready[depth].iter().all(|&x| check(x, lab)) {
            descend(depth + 1, lab, ready, check, emit);
        }
    }
}

impl Oracle {
    pub fn new(max_arguments: usize) -> Self {
        Oracle { max_arguments }
    }

    /// Labellings where each argument is `in` iff all its attackers are
    /// `out`, `out` iff some attacker is `in`, and `und` iff neither.
    pub fn complete_labellings(&self, af: &Af) -> Result<Vec<Labelling>> {
        let attackers: Vec<Vec<usize>> = af
            .arguments
            .iter()
            .map(|x| {
                af.attackers(x)
                    .map(|z| index_of(&af.arguments, z))
                    .collect()
            })
            .collect();
        enumerate(&af.arguments, self.max_arguments, &attackers, |x, lab| {
            let att = &attackers[x];
            let all_out = att.iter().all(|&z| lab[z] == State::Out);
            let some_in = att.iter().any(|&z| lab[z] == State::In);
            (lab[x] == State::In) == all_out
                && (lab[x] == State::Out) == some_in
                && (lab[x] == State::Und) == (!all_out && !some_in)
        })
    }

    pub fn stable_labellings(&self, af: &Af) -> Result<Vec<Labelling>> {
        Ok(self
            .complete_labellings(af)?
            .into_iter()
            .filter(|l| l.iter().all(|(_, s)| s != State::Und))
            .collect())
    }

    /// Complete labellings whose in-set is maximal under inclusion.
    pub fn preferred_labellings(&self, af: &Af) -> Result<Vec<Labelling>> {
        let complete = self.complete_labellings(af)?;
        let sets: Vec<BTreeSet<String>> = complete.iter().map(Labelling::in_set).collect();
        Ok(complete
            .into_iter()
            .enumerate()
            .filter(|(i, _)| {
                !sets
                    .iter()
                    .any(|other| sets[*i].is_subset(other) && sets[*i] != *other)
            })
            .map(|(_, l)| l)
            .collect())
    }

    /// Labellings of a joint network: `x` is `in` iff every
    /// attacking set has an `out` member, `out` iff some attacking set is
    /// entirely `in`, and `und` iff every attacking set has a non-`in`
    /// member while some attacking set has no `out` member.
    pub fn joint_labellings(&self, jaf: &JointAf) -> Result<Vec<Labelling>> {
        let sets: Vec<Vec<Vec<usize>>> = jaf
            .arguments
            .iter()
            .map(|x| {
                jaf.attacking_sets(x)
                    .map(|g| g.iter().map(|z| index_of(&jaf.arguments, z)).collect())
                    .collect()
            })
            .collect();
        let deps: Vec<Vec<usize>> = sets.iter().map(|gs| gs.concat()).collect();
        enumerate(&jaf.arguments, self.max_arguments, &deps, |x, lab| {
            let gs = &sets[x];
            let has = |g: &Vec<usize>, s: State| g.iter().any(|&z| lab[z] == s);
            let cg1 = gs.iter().all(|g| has(g, State::Out));
            let cg2 = gs.iter().any(|g| g.iter().all(|&z| lab[z] == State::In));
            let cg3 = gs.iter().all(|g| g.iter().any(|&z| lab[z] != State::In))
                && gs.iter().any(|g| !has(g, State::Out));
            (lab[x] == State::In) == cg1
                && (lab[x] == State::Out) == cg2
                && (lab[x] == State::Und) == cg3
        })
    }

    /// Labellings of a disjunctive network. For `x` with direct attackers
    /// `y` and indirect attacks `(z, U)`:
    ///
    /// * if every `y` is out and every in `z` has an out co-target, `x` is in;
    /// * if some `y` is in, or some `z` is in with no out co-target, `x` is out;
    /// * `x` is und iff every attack is out or undecided and one is undecided.
    ///
    /// A direct attack is out when `y` is out and undecided when `y` is und.
    /// An indirect attack is out when `z` or a co-target is out, and
    /// undecided when none of them is out and one is und.
    pub fn disjunctive_labellings(&self, daf: &DisjAf) -> Result<Vec<Labelling>> {
        let idx = |s: &str| index_of(&daf.arguments, s);
        let shape: Vec<AttackShape> = daf
            .arguments
            .iter()
            .map(|x| {
                let direct = daf.direct_attackers(x).map(idx).collect();
                let indirect = daf
                    .indirect_attacks(x)
                    .map(|(z, us)| (idx(z), us.into_iter().map(idx).collect()))
                    .collect();
                (direct, indirect)
            })
            .collect();
        let deps: Vec<Vec<usize>> = shape
            .iter()
            .map(|(direct, indirect)| {
                let mut d = direct.clone();
                for (z, us) in indirect {
                    d.push(*z);
                    d.extend(us);
                }
                d
            })
            .collect();
        enumerate(&daf.arguments, self.max_arguments, &deps, |x, lab| {
            let (direct, indirect) = &shape[x];
            let some_u_out = |us: &Vec<usize>| us.iter().any(|&u| lab[u] == State::Out);
            let d1 = direct.iter().all(|&y| lab[y] == State::Out)
                && indirect
                    .iter()
                    .all(|(z, us)| lab[*z] != State::In || some_u_out(us));
            let d2 = direct.iter().any(|&y| lab[y] == State::In)
                || indirect
                    .iter()
                    .any(|(z, us)| lab[*z] == State::In && !some_u_out(us));
            // (out, undecided) status of every attack on x
            let statuses: Vec<(bool, bool)> = direct
                .iter()
                .map(|&y| (lab[y] == State::Out, lab[y] == State::Und))
                .chain(indirect.iter().map(|(z, us)| {
                    let out = lab[*z] == State::Out || some_u_out(us);
                    let und =
                        !out && (lab[*z] == State::Und || us.iter().any(|&u| lab[u] == State::Und));
                    (out, und)
                }))
                .collect();
            let d3 = statuses.iter().all(|(o, u)| *o || *u) && statuses.iter().any(|(_, u)| *u);
            (!d1 || lab[x] == State::In)
                && (!d2 || lab[x] == State::Out)
                && (lab[x] == State::Und) == d3
        })
    }
}

/// Least fixed point: repeatedly label `in` every argument whose attackers
/// are all `out` and `out` every argument with an `in` attacker; the rest
/// is `und`.
pub fn grounded_fixpoint(af: &Af) -> Labelling {
    let mut lab: Vec<Option<State>> = vec![None; af.arguments.len()];
    let attackers: Vec<Vec<usize>> = af
        .arguments
        .iter()
        .map(|x| {
            af.attackers(x)
                .map(|z| index_of(&af.arguments, z))
                .collect()
        })
        .collect();
    loop {
        let mut changed = false;
        for (x, att) in attackers.iter().enumerate() {
            if lab[x].is_some() {
                continue;
            }
            if att.iter().all(|&z| lab[z] == Some(State::Out)) {
                lab[x] = Some(State::In);
                changed = true;
            } else if att.iter().any(|&z| lab[z] == Some(State::In)) {
                lab[x] = Some(State::Out);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    af.arguments
        .iter()
        .cloned()
        .zip(lab.into_iter().map(|s| s.unwrap_or(State::Und)))
        .collect()
}

pub fn complete_labellings(af: &Af) -> Result<Vec<Labelling>> {
    Oracle::default().complete_labellings(af)
}

pub fn stable_labellings(af: &Af) -> Result<Vec<Labelling>> {
    Oracle::default().stable_labellings(af)
}

pub fn preferred_labellings(af: &Af) -> Result<Vec<Labelling>> {
    Oracle::default().preferred_labellings(af)
}

pub fn joint_labellings(jaf: &JointAf) -> Result<Vec<Labelling>> {
    Oracle::default().joint_labellings(jaf)
}

pub fn disjunctive_labellings(daf: &DisjAf) -> Result<Vec<Labelling>> {
    Oracle::default().disjunctive_labellings(daf)
}
