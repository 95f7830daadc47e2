//! Joint attacks reduced to single attacks; higher-level attacks reduced to
//! joint attacks.

use indexmap::{IndexMap, IndexSet};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::frameworks::{Af, HigherAf, JointAf, JointAttack};
use crate::state::Labelling;

/// Where a fresh node of a reduction comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    /// Stands for the `index`-th attacking set `set` of `target`; it is in
    /// exactly when the joint attack succeeds.
    SetNode {
        target: String,
        index: usize,
        set: Vec<String>,
    },
    /// Sits between `member` and the set node; it is in exactly when
    /// `member` is out.
    MemberNode {
        target: String,
        index: usize,
        set: Vec<String>,
        member: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    pub framework: Af,
    /// The original arguments.
    pub embedded: IndexSet<String>,
    pub naming: IndexMap<String, Provenance>,
}

fn fresh(base: String, taken: &IndexSet<String>) -> String {
    let mut name = base;
    while taken.contains(&name) {
        name.push('_');
    }
    name
}

/// Replaces each joint attack `G -> x` (the `k`-th on `x`) by a node
/// `x__G<k>` attacking `x`, and for each `z` in `G` a node `e__x__G<k>__z`
/// attacked by `z` and attacking `x__G<k>`.
pub fn joint_to_single(jaf: &JointAf) -> ReductionResult {
    let mut arguments = jaf.arguments.clone();
    let mut attacks = IndexSet::new();
    let mut naming = IndexMap::new();
    for x in &jaf.arguments {
        for (k, set) in jaf.attacking_sets(x).enumerate() {
            let index = k + 1;
            let members: Vec<String> = set.iter().cloned().collect();
            let set_node = fresh(format!("{x}__G{index}"), &arguments);
            arguments.insert(set_node.clone());
            naming.insert(
                set_node.clone(),
                Provenance::SetNode {
                    target: x.clone(),
                    index,
                    set: members.clone(),
                },
            );
            for z in &members {
                let e = fresh(format!("e__{x}__G{index}__{z}"), &arguments);
                arguments.insert(e.clone());
                naming.insert(
                    e.clone(),
                    Provenance::MemberNode {
                        target: x.clone(),
                        index,
                        set: members.clone(),
                        member: z.clone(),
                    },
                );
                attacks.insert((z.clone(), e.clone()));
                attacks.insert((e, set_node.clone()));
            }
            attacks.insert((set_node, x.clone()));
        }
    }
    ReductionResult {
        framework: Af { arguments, attacks },
        embedded: jaf.arguments.clone(),
        naming,
    }
}

/// Every attack becomes an argument named by its id, and an attack
/// `id: z -> t` becomes the joint attack `{z, id} -> t`.
pub fn higher_to_joint(haf: &HigherAf) -> JointAf {
    let mut arguments = haf.arguments.clone();
    arguments.extend(haf.attacks().map(|a| a.id.clone()));
    let attacks = haf
        .attacks()
        .map(|a| JointAttack::new([a.source.as_str(), a.id.as_str()], a.target.as_str()))
        .collect();
    JointAf { arguments, attacks }
}

/// The labelling cut down to `keep`, in the labelling's own order.
pub fn restrict_labelling<I, S>(l: &Labelling, keep: I) -> Result<Labelling>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let keep: IndexSet<String> = keep.into_iter().map(|s| s.as_ref().to_string()).collect();
    if let Some(missing) = keep.iter().find(|k| l.get(k).is_none()) {
        return Err(Error::UnknownArgument(missing.clone()));
    }
    Ok(l.iter().filter(|(k, _)| keep.contains(*k)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frameworks::HigherAttack;
    use crate::state::State;

    #[test]
    fn single_joint_attack() {
        let jaf = JointAf::new(["a", "b", "x"], [JointAttack::new(["a", "b"], "x")]);
        let r = joint_to_single(&jaf);
        let expected = Af::new(
            ["a", "b", "x", "x__G1", "e__x__G1__a", "e__x__G1__b"],
            [
                ("a", "e__x__G1__a"),
                ("e__x__G1__a", "x__G1"),
                ("b", "e__x__G1__b"),
                ("e__x__G1__b", "x__G1"),
                ("x__G1", "x"),
            ],
        );
        assert_eq!(r.framework, expected);
        assert_eq!(r.naming.len(), 3);
        assert_eq!(
            r.naming["e__x__G1__b"],
            Provenance::MemberNode {
                target: "x".into(),
                index: 1,
                set: vec!["a".into(), "b".into()],
                member: "b".into(),
            }
        );
    }

    #[test]
    fn provenance_json() {
        let jaf = JointAf::new(["a", "x"], [JointAttack::new(["a"], "x")]);
        let r = joint_to_single(&jaf);
        let json = serde_json::to_string(&r.naming).unwrap();
        assert_eq!(
            json,
            r#"{"x__G1":{"kind":"set_node","target":"x","index":1,"set":["a"]},"e__x__G1__a":{"kind":"member_node","target":"x","index":1,"set":["a"],"member":"a"}}"#
        );
    }

    #[test]
    fn no_attacks_is_identity() {
        let jaf = JointAf::new(["a", "b"], Vec::new());
        let r = joint_to_single(&jaf);
        assert_eq!(
            r.framework,
            Af::new(["a", "b"], Vec::<(String, String)>::new())
        );
        assert!(r.naming.is_empty());
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        let jaf = JointAf::new(["a", "x", "x__G1"], [JointAttack::new(["a"], "x")]);
        let r = joint_to_single(&jaf);
        assert!(r.naming.contains_key("x__G1_"));
        assert!(r
            .framework
            .attacks
            .contains(&("x__G1_".to_string(), "x".to_string())));
    }

    #[test]
    fn higher_chain() {
        let haf = HigherAf::new(
            ["z", "x", "y", "u", "w"],
            vec![
                vec![HigherAttack::new("alpha", "z", "x")],
                vec![HigherAttack::new("beta", "y", "alpha")],
                vec![HigherAttack::new("gamma", "u", "beta")],
                vec![HigherAttack::new("delta", "w", "gamma")],
            ],
        );
        let jaf = higher_to_joint(&haf);
        assert_eq!(jaf.arguments.len(), 9);
        for (g, t) in [
            (["z", "alpha"], "x"),
            (["y", "beta"], "alpha"),
            (["u", "gamma"], "beta"),
            (["w", "delta"], "gamma"),
        ] {
            assert!(jaf.attacks.contains(&JointAttack::new(g, t)));
        }
        assert_eq!(jaf.attacks.len(), 4);
    }

    #[test]
    fn restriction() {
        let l: Labelling = [("x", State::In), ("x__G1", State::Out)]
            .into_iter()
            .collect();
        assert_eq!(
            restrict_labelling(&l, ["x"]).unwrap(),
            [("x", State::In)].into_iter().collect()
        );
        assert_eq!(restrict_labelling(&l, ["x", "x__G1"]).unwrap(), l);
        assert_eq!(
            restrict_labelling(&l, ["q"]),
            Err(Error::UnknownArgument("q".into()))
        );
    }
}
