//! Compilation of frameworks into theories.
//!
//! Every theory lists its formulas in the order facts, in-formulas,
//! out-formulas, (supports), und-formulas, then one `N q -> ~q` per atom,
//! with arguments in declaration order.

use indexmap::IndexSet;

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::frameworks::{AdfSpec, Af, BipolarAf, DisjAf, HigherAf, JointAf};
use crate::theory::Theory;

fn atom(x: &str) -> Formula {
    Formula::atom(x)
}

fn n(x: &str) -> Formula {
    Formula::n_atom(x)
}

fn und(x: &str) -> Formula {
    Formula::undecided(x)
}

/// `N q -> ~q` for every atom of the universe.
pub fn theta_n<I, S>(universe: I) -> Theory
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut t = Theory::new();
    for q in universe {
        let q = q.as_ref();
        t.push(n(q).imp(atom(q).not()));
    }
    t
}

/// `x | N x` for every atom of the universe.
pub fn stable_axioms<I, S>(universe: I) -> Theory
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut t = Theory::new();
    for q in universe {
        let q = q.as_ref();
        t.push(atom(q).or(n(q)));
    }
    t
}

#[derive(Default)]
struct Groups {
    facts: Vec<Formula>,
    ins: Vec<Formula>,
    outs: Vec<Formula>,
    supports: Vec<Formula>,
    unds: Vec<Formula>,
}

impl Groups {
    fn finish(self, universe: &IndexSet<String>) -> Theory {
        let mut t = Theory::with_universe(universe.iter().cloned());
        t.extend(self.facts);
        t.extend(self.ins);
        t.extend(self.outs);
        t.extend(self.supports);
        t.extend(self.unds);
        t.extend(theta_n(universe).formulas);
        t
    }

    fn plain(&mut self, af: &Af) {
        for x in &af.arguments {
            let attackers: Vec<&str> = af.attackers(x).collect();
            if attackers.is_empty() {
                self.facts.push(atom(x));
                continue;
            }
            self.ins
                .push(atom(x).iff(Formula::conj(attackers.iter().map(|z| n(z)))));
            for z in &attackers {
                self.outs.push(atom(z).imp(n(x)));
            }
            let all_not_in = Formula::conj(attackers.iter().map(|z| atom(z).not()));
            let some_not_out = Formula::disj(attackers.iter().map(|z| n(z).not()));
            self.unds.push(all_not_in.and(some_not_out).imp(und(x)));
        }
    }
}

/// Facts for unattacked arguments, `y <-> /\ N z` over the attackers,
/// `z -> N y` per attack, and
/// `(/\ ~z & \/ ~N z) -> (~y & ~N y)` per attacked argument.
pub fn delta_af(af: &Af) -> Theory {
    let mut g = Groups::default();
    g.plain(af);
    g.finish(&af.arguments)
}

/// Joint-attack theory: per argument `x` with attacking sets `G`,
/// `x <-> /\_G \/_{z in G} N z`, `/\_{z in G} z -> N x` per set, and
/// `(/\_G \/_{z in G} ~z) & (\/_G /\_{z in G} (z | ~N z)) -> (~x & ~N x)`.
pub fn delta_joint(jaf: &JointAf) -> Theory {
    let mut g = Groups::default();
    for x in &jaf.arguments {
        let sets: Vec<_> = jaf.attacking_sets(x).collect();
        if sets.is_empty() {
            g.facts.push(atom(x));
            continue;
        }
        g.ins.push(atom(x).iff(Formula::conj(
            sets.iter().map(|s| Formula::disj(s.iter().map(|z| n(z)))),
        )));
        for s in &sets {
            g.outs
                .push(Formula::conj(s.iter().map(|z| atom(z))).imp(n(x)));
        }
        let none_in = Formula::conj(
            sets.iter()
                .map(|s| Formula::disj(s.iter().map(|z| atom(z).not()))),
        );
        let some_alive = Formula::disj(
            sets.iter()
                .map(|s| Formula::conj(s.iter().map(|z| atom(z).or(n(z).not())))),
        );
        g.unds.push(none_in.and(some_alive).imp(und(x)));
    }
    g.finish(&jaf.arguments)
}

/// Disjunctive theory. For `x` with direct attackers `y` and indirect
/// attacks `(z, U)` where `U` are the co-targets:
///
/// * in: `x <-> /\ N y & /\ (z -> \/_{u in U} N u)`
/// * out: `y -> N x` and `(z & /\_{u in U} ~N u) -> N x` per attack
/// * und: every attack is out or undecided and one is undecided, written
///   `(/\ ~y & /\ ~(z & /\ u)) & (\/ ~N y | \/ (~N z & /\ ~N u)) -> (~x & ~N x)`
pub fn delta_disjunctive(daf: &DisjAf) -> Theory {
    let mut g = Groups::default();
    for x in &daf.arguments {
        let direct: Vec<&str> = daf.direct_attackers(x).collect();
        let indirect: Vec<(&str, Vec<&str>)> = daf.indirect_attacks(x).collect();
        if direct.is_empty() && indirect.is_empty() {
            g.facts.push(atom(x));
            continue;
        }
        let in_cond = direct.iter().map(|y| n(y)).chain(
            indirect
                .iter()
                .map(|(z, us)| atom(z).imp(Formula::disj(us.iter().map(|u| n(u))))),
        );
        g.ins.push(atom(x).iff(Formula::conj(in_cond)));
        for y in &direct {
            g.outs.push(atom(y).imp(n(x)));
        }
        for (z, us) in &indirect {
            let succeeds =
                Formula::conj(std::iter::once(atom(z)).chain(us.iter().map(|u| n(u).not())));
            g.outs.push(succeeds.imp(n(x)));
        }
        let not_in = direct
            .iter()
            .map(|y| atom(y).not())
            .chain(indirect.iter().map(|(z, us)| {
                Formula::conj(std::iter::once(atom(z)).chain(us.iter().map(|u| atom(u)))).not()
            }));
        let some_und = direct
            .iter()
            .map(|y| n(y).not())
            .chain(indirect.iter().map(|(z, us)| {
                Formula::conj(std::iter::once(n(z).not()).chain(us.iter().map(|u| n(u).not())))
            }));
        g.unds.push(
            Formula::conj(not_in)
                .and(Formula::disj(some_und))
                .imp(und(x)),
        );
    }
    g.finish(&daf.arguments)
}

/// `x <-> phi_x` for every argument.
pub fn delta_adf(adf: &AdfSpec) -> Theory {
    let mut g = Groups::default();
    for x in &adf.arguments {
        if let Some(phi) = adf.acceptance.get(x) {
            g.ins.push(atom(x).iff(phi.clone()));
        }
    }
    g.finish(&adf.arguments)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BipolarVariant {
    /// Support `x => y` as `x -> y`.
    Tau1,
    /// Support `x => y` as `x -> ~N y`.
    Tau2,
}

/// The plain theory of the attack part plus one clause per support.
pub fn delta_bipolar(baf: &BipolarAf, variant: BipolarVariant) -> Theory {
    let mut g = Groups::default();
    g.plain(&baf.attack_af());
    for (x, y) in &baf.supports {
        let head = match variant {
            BipolarVariant::Tau1 => atom(y),
            BipolarVariant::Tau2 => n(y).not(),
        };
        g.supports.push(atom(x).imp(head));
    }
    g.finish(&baf.arguments)
}

/// Direct formulas for a two-level network, where an arc `z -> x` can be
/// attacked by arguments `y`:
///
/// * in: `x <-> /\_{arcs} (N z | \/ y)`
/// * out: `(z & /\ N y) -> N x` per arc
/// * und: `(/\_{arcs} ~(z & /\ N y) & \/_{arcs} ~(N z | \/ y)) -> (~x & ~N x)`
///
/// An arc nobody attacks contributes `N z`, `z -> N x`, `~z` and `~N z`, so
/// a network without level-2 attacks yields exactly [`delta_af`].
pub fn delta_higher_direct(haf: &HigherAf) -> Result<Theory> {
    if haf.levels.len() > 2 {
        return Err(Error::TooManyLevels(haf.levels.len()));
    }
    let level1: &[_] = haf.levels.first().map_or(&[], Vec::as_slice);
    let level2: &[_] = haf.levels.get(1).map_or(&[], Vec::as_slice);
    let mut g = Groups::default();
    for x in &haf.arguments {
        let arcs: Vec<(&str, Vec<&str>)> = level1
            .iter()
            .filter(|a| &a.target == x)
            .map(|a| {
                let ys = level2
                    .iter()
                    .filter(|b| b.target == a.id)
                    .map(|b| b.source.as_str())
                    .collect();
                (a.source.as_str(), ys)
            })
            .collect();
        if arcs.is_empty() {
            g.facts.push(atom(x));
            continue;
        }
        let arc_in = |z: &str, ys: &[&str]| {
            if ys.is_empty() {
                n(z)
            } else {
                n(z).or(Formula::disj(ys.iter().map(|y| atom(y))))
            }
        };
        let arc_out = |z: &str, ys: &[&str]| {
            Formula::conj(std::iter::once(atom(z)).chain(ys.iter().map(|y| n(y))))
        };
        g.ins
            .push(atom(x).iff(Formula::conj(arcs.iter().map(|(z, ys)| arc_in(z, ys)))));
        for (z, ys) in &arcs {
            g.outs.push(arc_out(z, ys).imp(n(x)));
        }
        let not_out = Formula::conj(arcs.iter().map(|(z, ys)| arc_out(z, ys).not()));
        let not_in = Formula::disj(arcs.iter().map(|(z, ys)| arc_in(z, ys).not()));
        g.unds.push(not_out.and(not_in).imp(und(x)));
    }
    Ok(g.finish(&haf.arguments))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;
    use crate::frameworks::{HigherAttack, JointAttack};

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn theory(items: &[&str], universe: &[&str]) -> Theory {
        let mut t = Theory::with_universe(universe.iter().copied());
        t.extend(items.iter().map(|s| f(s)));
        t
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta_n(["x"]), theory(&["N x -> ~x"], &["x"]));
        assert!(theta_n(Vec::<String>::new()).is_empty());
        assert_eq!(
            theta_n(["a", "b"]),
            theory(&["N a -> ~a", "N b -> ~b"], &["a", "b"])
        );
    }

    #[test]
    fn stable_examples() {
        assert_eq!(stable_axioms(["x"]), theory(&["x | N x"], &["x"]));
        assert!(stable_axioms(Vec::<String>::new()).is_empty());
    }

    #[test]
    fn single_attack_theory() {
        let af = Af::new(["x", "y", "z"], [("x", "y")]);
        let expected = theory(
            &[
                "x",
                "z",
                "x -> N y",
                "y <-> N x",
                "(~x & ~N x) -> (~y & ~N y)",
                "N x -> ~x",
                "N y -> ~y",
                "N z -> ~z",
            ],
            &["x", "y", "z"],
        );
        assert_eq!(delta_af(&af), expected);
        let t = delta_af(&af);
        assert_eq!(t.formulas[0], f("x"));
        assert_eq!(t.formulas[1], f("z"));
    }

    #[test]
    fn self_attack_theory() {
        let af = Af::new(["x"], [("x", "x")]);
        let expected = theory(
            &[
                "x -> N x",
                "x <-> N x",
                "(~x & ~N x) -> (~x & ~N x)",
                "N x -> ~x",
            ],
            &["x"],
        );
        assert_eq!(delta_af(&af), expected);
    }

    #[test]
    fn unattacked_is_a_fact() {
        let af = Af::new(["a"], Vec::<(String, String)>::new());
        assert_eq!(delta_af(&af), theory(&["a", "N a -> ~a"], &["a"]));
    }

    #[test]
    fn joint_single_set() {
        let jaf = JointAf::new(["a", "b", "x"], [JointAttack::new(["a", "b"], "x")]);
        let t = delta_joint(&jaf);
        assert!(t.contains(&f("(a & b) -> N x")));
        assert!(t.contains(&f("x <-> (N a | N b)")));
        assert!(t.contains(&f("a")));
        assert!(t.contains(&f("((~a | ~b) & ((a | ~N a) & (b | ~N b))) -> (~x & ~N x)")));
    }

    #[test]
    fn disjunctive_formulas() {
        let daf = DisjAf::new(
            ["x", "a", "b"],
            Vec::<(String, String)>::new(),
            [(
                "x".to_string(),
                ["a", "b"].iter().map(|s| s.to_string()).collect(),
            )],
        );
        let t = delta_disjunctive(&daf);
        assert!(t.contains(&f("x")));
        assert!(t.contains(&f("a <-> (x -> N b)")));
        assert!(t.contains(&f("(x & ~N b) -> N a")));
        assert!(t.contains(&f("(~(x & b) & (~N x & ~N b)) -> (~a & ~N a)")));
    }

    #[test]
    fn disjunctive_without_rho_is_plain() {
        let af = Af::new(
            ["a", "b", "c"],
            [("a", "b"), ("b", "a"), ("b", "c"), ("c", "c")],
        );
        let daf = DisjAf::new(
            af.arguments.iter().cloned(),
            af.attacks.iter().cloned(),
            Vec::new(),
        );
        assert_eq!(delta_disjunctive(&daf).formulas, delta_af(&af).formulas);
    }

    #[test]
    fn adf_theory() {
        let mut acc = indexmap::IndexMap::new();
        acc.insert("a".to_string(), Formula::Top);
        acc.insert("b".to_string(), f("~a"));
        let adf = AdfSpec::new(["a", "b"], acc);
        assert_eq!(
            delta_adf(&adf),
            theory(
                &["a <-> T", "b <-> ~a", "N a -> ~a", "N b -> ~b"],
                &["a", "b"]
            )
        );
    }

    #[test]
    fn bipolar_variants() {
        let baf = BipolarAf::new(["a", "b"], Vec::<(String, String)>::new(), [("a", "b")]);
        assert!(delta_bipolar(&baf, BipolarVariant::Tau1).contains(&f("a -> b")));
        assert!(delta_bipolar(&baf, BipolarVariant::Tau2).contains(&f("a -> ~N b")));
        let plain = BipolarAf::new(["a", "b"], [("a", "b")], Vec::<(String, String)>::new());
        assert_eq!(
            delta_bipolar(&plain, BipolarVariant::Tau2).formulas,
            delta_af(&plain.attack_af()).formulas
        );
    }

    #[test]
    fn higher_direct_attacked_arc() {
        let haf = HigherAf::new(
            ["z", "x", "y"],
            vec![
                vec![HigherAttack::new("alpha", "z", "x")],
                vec![HigherAttack::new("beta", "y", "alpha")],
            ],
        );
        let t = delta_higher_direct(&haf).unwrap();
        assert!(t.contains(&f("(z & N y) -> N x")));
        assert!(t.contains(&f("x <-> (N z | y)")));
    }

    #[test]
    fn higher_direct_without_level_two_is_plain() {
        let haf = HigherAf::new(
            ["a", "b"],
            vec![vec![
                HigherAttack::new("i", "a", "b"),
                HigherAttack::new("j", "b", "a"),
            ]],
        );
        let af = Af::new(["a", "b"], [("a", "b"), ("b", "a")]);
        assert_eq!(
            delta_higher_direct(&haf).unwrap().formulas,
            delta_af(&af).formulas
        );
    }

    #[test]
    fn higher_direct_rejects_three_levels() {
        let haf = HigherAf::new(
            ["a", "b", "c", "d"],
            vec![
                vec![HigherAttack::new("i", "a", "b")],
                vec![HigherAttack::new("j", "c", "i")],
                vec![HigherAttack::new("k", "d", "j")],
            ],
        );
        assert_eq!(delta_higher_direct(&haf), Err(Error::TooManyLevels(3)));
    }
}
