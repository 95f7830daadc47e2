//! Seeded generators of frameworks and formulas for differential testing.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::formula::Formula;
use crate::frameworks::{Af, DisjAf, JointAf, JointAttack};
use crate::two_world::{inn_imp, inn_not};

/// `a`, `b`, ..., `z`, then `a26`, `a27`, ...
pub fn argument_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("a{i}")
            }
        })
        .collect()
}

/// Between 1 and `max_args` arguments; each ordered pair (self-attacks
/// included) is an attack with probability `density`.
pub fn random_af<R: Rng + ?Sized>(rng: &mut R, max_args: usize, density: f64) -> Af {
    let names = argument_names(rng.gen_range(1..=max_args.max(1)));
    let mut attacks = Vec::new();
    for a in &names {
        for b in &names {
            if rng.gen_bool(density) {
                attacks.push((a.clone(), b.clone()));
            }
        }
    }
    Af::new(names, attacks)
}

/// Between 1 and `max_args` arguments and up to `max_attacks` joint attacks
/// with attacking sets of 1 to `max_set` members.
pub fn random_joint_af<R: Rng + ?Sized>(
    rng: &mut R,
    max_args: usize,
    max_set: usize,
    max_attacks: usize,
) -> JointAf {
    let names = argument_names(rng.gen_range(1..=max_args.max(1)));
    let count = rng.gen_range(0..=max_attacks);
    let attacks: Vec<JointAttack> = (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=max_set.max(1).min(names.len()));
            let set: Vec<&String> = names.choose_multiple(rng, size).collect();
            let target = names.choose(rng).expect("non-empty");
            JointAttack::new(set.into_iter().cloned(), target.clone())
        })
        .collect();
    JointAf::new(names, attacks)
}

/// Direct attacks with probability `density` per pair plus up to
/// `max_disj` disjunctive attacks on sets of 1 to 3 arguments.
pub fn random_disj_af<R: Rng + ?Sized>(
    rng: &mut R,
    max_args: usize,
    density: f64,
    max_disj: usize,
) -> DisjAf {
    let af = random_af(rng, max_args, density);
    let names: Vec<String> = af.arguments.iter().cloned().collect();
    let count = rng.gen_range(0..=max_disj);
    let disjunctive: Vec<(String, BTreeSet<String>)> = (0..count)
        .map(|_| {
            let z = names.choose(rng).expect("non-empty").clone();
            let size = rng.gen_range(1..=3.min(names.len()));
            let set = names.choose_multiple(rng, size).cloned().collect();
            (z, set)
        })
        .collect();
    DisjAf::new(af.arguments, af.attacks, disjunctive)
}

fn leaf<R: Rng + ?Sized>(rng: &mut R, atoms: &[String], constants: bool, world: bool) -> Formula {
    let roll = rng.gen_range(0..10);
    match roll {
        0 if constants => Formula::Top,
        1 if constants => Formula::Bottom,
        2 if world => Formula::World1,
        _ => Formula::atom(atoms.choose(rng).expect("at least one atom").clone()),
    }
}

/// Any formula: constants, `@1`, and all connectives including nested `N`.
pub fn random_formula<R: Rng + ?Sized>(rng: &mut R, atoms: &[String], depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.2) {
        return leaf(rng, atoms, true, true);
    }
    let sub = |rng: &mut R| random_formula(rng, atoms, depth - 1);
    match rng.gen_range(0..6) {
        0 => sub(rng).not(),
        1 => sub(rng).n(),
        2 => sub(rng).and(sub(rng)),
        3 => sub(rng).or(sub(rng)),
        4 => sub(rng).imp(sub(rng)),
        _ => sub(rng).iff(sub(rng)),
    }
}

/// A formula whose `N` only ever applies to atoms, without `@1`.
pub fn random_cn_formula<R: Rng + ?Sized>(rng: &mut R, atoms: &[String], depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.2) {
        let base = leaf(rng, atoms, true, false);
        return match base {
            Formula::Atom(_) if rng.gen_bool(0.5) => base.n(),
            other => other,
        };
    }
    let sub = |rng: &mut R| random_cn_formula(rng, atoms, depth - 1);
    match rng.gen_range(0..5) {
        0 => sub(rng).not(),
        1 => sub(rng).and(sub(rng)),
        2 => sub(rng).or(sub(rng)),
        3 => sub(rng).imp(sub(rng)),
        _ => sub(rng).iff(sub(rng)),
    }
}

/// A formula built from atoms with `&`, `|` and the intuitionistic
/// negation and implication.
pub fn random_inn_formula<R: Rng + ?Sized>(rng: &mut R, atoms: &[String], depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.2) {
        return Formula::atom(atoms.choose(rng).expect("at least one atom").clone());
    }
    let sub = |rng: &mut R| random_inn_formula(rng, atoms, depth - 1);
    match rng.gen_range(0..4) {
        0 => inn_not(sub(rng)),
        1 => sub(rng).and(sub(rng)),
        2 => sub(rng).or(sub(rng)),
        _ => {
            let x = sub(rng);
            inn_imp(x, sub(rng))
        }
    }
}
