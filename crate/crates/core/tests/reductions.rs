use std::collections::BTreeSet;

use argn::random::random_joint_af;
use argn::{
    delta_af, delta_joint, higher_to_joint, joint_labellings, joint_to_single, restrict_labelling,
    Af, CnModel, HigherAf, HigherAttack, JointAf, JointAttack, Labelling, ModelSearch, Oracle,
    Provenance, State, Theory,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn complete_labellings(af: &Af) -> Vec<Labelling> {
    Oracle::new(32).complete_labellings(af).unwrap()
}

fn enumerate_models(t: &Theory) -> Vec<CnModel> {
    ModelSearch::new().max_atoms(32).enumerate(t).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn reduction_preserves_labellings_uniquely(seed in any::<u64>()) {
        let jaf = random_joint_af(&mut ChaCha8Rng::seed_from_u64(seed), 4, 3, 4);
        let reduced = joint_to_single(&jaf);
        let restricted: Vec<Labelling> = complete_labellings(&reduced.framework)
            .iter()
            .map(|l| restrict_labelling(l, &reduced.embedded).unwrap())
            .collect();
        let distinct: BTreeSet<Labelling> = restricted.iter().cloned().collect();
        prop_assert_eq!(distinct.len(), restricted.len());
        let expected: BTreeSet<Labelling> = joint_labellings(&jaf).unwrap().into_iter().collect();
        prop_assert_eq!(distinct, expected);
    }

    #[test]
    fn reduced_models_satisfy_the_joint_theory(seed in any::<u64>()) {
        let jaf = random_joint_af(&mut ChaCha8Rng::seed_from_u64(seed), 4, 3, 4);
        let joint = delta_joint(&jaf);
        for m in enumerate_models(&delta_af(&joint_to_single(&jaf).framework)) {
            for f in &joint.formulas {
                prop_assert!(f.evaluate_cn(&m).unwrap(), "{}", f);
            }
        }
    }

    #[test]
    fn fresh_names_are_stable_and_new(seed in any::<u64>()) {
        let jaf = random_joint_af(&mut ChaCha8Rng::seed_from_u64(seed), 5, 3, 6);
        let first = joint_to_single(&jaf);
        prop_assert_eq!(&first, &joint_to_single(&jaf));
        for name in first.naming.keys() {
            prop_assert!(!jaf.arguments.contains(name));
            prop_assert!(first.framework.arguments.contains(name));
        }
        prop_assert_eq!(first.framework.arguments.len(), jaf.arguments.len() + first.naming.len());
    }
}

fn attack_tower() -> HigherAf {
    HigherAf::new(
        ["z", "x", "y", "u", "w"],
        vec![
            vec![HigherAttack::new("alpha", "z", "x")],
            vec![HigherAttack::new("beta", "y", "alpha")],
            vec![HigherAttack::new("gamma", "u", "beta")],
            vec![HigherAttack::new("delta", "w", "gamma")],
        ],
    )
}

#[test]
fn attack_tower_has_a_single_labelling() {
    let labellings = joint_labellings(&higher_to_joint(&attack_tower())).unwrap();
    assert_eq!(labellings.len(), 1);
    let l = &labellings[0];
    for x in ["z", "x", "y", "u", "w", "beta", "delta"] {
        assert_eq!(l.get(x), Some(State::In), "{x}");
    }
    for x in ["alpha", "gamma"] {
        assert_eq!(l.get(x), Some(State::Out), "{x}");
    }
    let via_reduction =
        complete_labellings(&joint_to_single(&higher_to_joint(&attack_tower())).framework);
    assert_eq!(via_reduction.len(), 1);
}

#[test]
fn unattacked_arc_becomes_a_pair_with_its_id() {
    let haf = HigherAf::new(["z", "x"], vec![vec![HigherAttack::new("r", "z", "x")]]);
    let jaf = higher_to_joint(&haf);
    assert_eq!(
        jaf,
        JointAf::new(["z", "x", "r"], [JointAttack::new(["z", "r"], "x")])
    );
    let l = &joint_labellings(&jaf).unwrap()[0];
    assert_eq!(l.get("x"), Some(State::Out));
    assert_eq!(l.get("r"), Some(State::In));
}

#[test]
fn singleton_sets_become_three_arc_chains() {
    let jaf = JointAf::new(["z", "x"], [JointAttack::new(["z"], "x")]);
    let r = joint_to_single(&jaf);
    let arcs: Vec<(&str, &str)> = r
        .framework
        .attacks
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    assert_eq!(
        arcs,
        vec![
            ("z", "e__x__G1__z"),
            ("e__x__G1__z", "x__G1"),
            ("x__G1", "x")
        ]
    );
    assert!(matches!(
        r.naming["x__G1"],
        Provenance::SetNode { index: 1, .. }
    ));
}
