//! Hand-picked networks with known labellings, shared by the acceptance
//! suite and the examples.

use argn::{
    higher_to_joint, joint_to_single, parse_apx, AdfSpec, Af, DisjAf, Framework, HigherAf,
    HigherAttack, JointAf, JointAttack,
};

fn af(args: &[&str], attacks: &[(&str, &str)]) -> Af {
    Af::new(args.iter().copied(), attacks.iter().copied())
}

fn disj(args: &[&str], direct: &[(&str, &str)], sets: &[(&str, &[&str])]) -> DisjAf {
    DisjAf::new(
        args.iter().copied(),
        direct.iter().copied(),
        sets.iter()
            .map(|(z, s)| (z.to_string(), s.iter().map(|m| m.to_string()).collect())),
    )
}

pub fn lone_argument() -> Af {
    af(&["a"], &[])
}

pub fn self_attacker() -> Af {
    af(&["x"], &[("x", "x")])
}

pub fn mutual_attack() -> Af {
    af(&["a", "b"], &[("a", "b"), ("b", "a")])
}

/// `x -> y` with `z` isolated.
pub fn attack_plus_isolated() -> Af {
    af(&["x", "y", "z"], &[("x", "y")])
}

/// `x -> y -> z`.
pub fn chain_of_three() -> Af {
    af(&["x", "y", "z"], &[("x", "y"), ("y", "z")])
}

/// `x -> y` where `y` and `z` attack each other.
pub fn attack_into_mutual() -> Af {
    af(&["x", "y", "z"], &[("x", "y"), ("y", "z"), ("z", "y")])
}

/// `x` attacks itself and `y`, and `y` attacks `x`.
pub fn self_attacker_with_rival() -> Af {
    af(&["x", "y"], &[("x", "x"), ("x", "y"), ("y", "x")])
}

pub fn odd_cycle() -> Af {
    af(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")])
}

/// A three-cycle feeding the chain `c -> d -> e`.
pub fn odd_cycle_with_tail() -> Af {
    af(
        &["a", "b", "c", "d", "e"],
        &[("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "e")],
    )
}

pub fn four_cycle() -> Af {
    af(
        &["a", "b", "c", "d"],
        &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
    )
}

/// `a <-> b <-> c`.
pub fn mutual_chain() -> Af {
    af(
        &["a", "b", "c"],
        &[("a", "b"), ("b", "a"), ("b", "c"), ("c", "b")],
    )
}

/// `a <-> b`, `a -> x`, `y` isolated.
pub fn mutual_attack_hitting_x() -> Af {
    af(&["a", "b", "x", "y"], &[("a", "b"), ("b", "a"), ("a", "x")])
}

/// `a <-> b`, `a -> y`, `x` isolated.
pub fn mutual_attack_hitting_y() -> Af {
    af(&["a", "b", "x", "y"], &[("a", "b"), ("b", "a"), ("a", "y")])
}

/// `a <-> b`, `b -> c`, and the three-cycle `c -> d -> e -> c`. Complete
/// extensions: the empty set, `{a}` and `{b, d}`.
pub fn mutual_attack_into_cycle() -> Af {
    af(
        &["a", "b", "c", "d", "e"],
        &[
            ("a", "b"),
            ("b", "a"),
            ("b", "c"),
            ("c", "d"),
            ("d", "e"),
            ("e", "c"),
        ],
    )
}

/// `a -> b -> c -> a` with `b` also attacking itself.
pub fn cycle_with_self_loop() -> Af {
    af(
        &["a", "b", "c"],
        &[("a", "b"), ("b", "b"), ("b", "c"), ("c", "a")],
    )
}

/// `{a, b}` jointly attacking `x`.
pub fn pair_attack() -> JointAf {
    JointAf::new(["a", "b", "x"], [JointAttack::new(["a", "b"], "x")])
}

/// `a <-> b <-> c` with `{a, b, c}` jointly attacking `x`.
pub fn joint_triangle() -> JointAf {
    let mut attacks: Vec<JointAttack> = mutual_chain()
        .attacks
        .iter()
        .map(|(z, t)| JointAttack::new([z.as_str()], t.as_str()))
        .collect();
    attacks.push(JointAttack::new(["a", "b", "c"], "x"));
    JointAf::new(["a", "b", "c", "x"], attacks)
}

/// `alpha: z -> x` attacked by `beta: y -> alpha`.
pub fn attacked_attack() -> HigherAf {
    HigherAf::new(
        ["z", "x", "y"],
        vec![
            vec![HigherAttack::new("alpha", "z", "x")],
            vec![HigherAttack::new("beta", "y", "alpha")],
        ],
    )
}

/// Four levels: `alpha: z -> x`, `beta: y -> alpha`, `gamma: u -> beta`,
/// `delta: w -> gamma`.
pub fn attack_tower() -> HigherAf {
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

/// `x` disjunctively attacks `{a, b}` and is itself unattacked.
pub fn disjunctive_pair() -> DisjAf {
    disj(&["x", "a", "b"], &[], &[("x", &["a", "b"])])
}

/// `a <-> b` with `a` disjunctively attacking `{x, y}`.
pub fn mutual_attack_hitting_x_or_y() -> DisjAf {
    disj(
        &["a", "b", "x", "y"],
        &[("a", "b"), ("b", "a")],
        &[("a", &["x", "y"])],
    )
}

/// `a` accepted, `b` self-supporting, `c` needs `a` and `b`, `d` needs `b`
/// to fail.
pub fn four_node_adf() -> AdfSpec {
    let text = r#"arg(a). arg(b). arg(c). arg(d).
ac(a, "T"). ac(b, "b"). ac(c, "a & b"). ac(d, "~b")."#;
    match parse_apx(text) {
        Ok(Framework::Adf(adf)) => adf,
        other => panic!("built-in network failed to parse: {other:?}"),
    }
}

/// Twenty plain networks, including reductions of joint and higher-level
/// ones.
pub fn curated() -> Vec<(&'static str, Af)> {
    vec![
        ("self attacker", self_attacker()),
        ("attack plus isolated", attack_plus_isolated()),
        ("chain of three", chain_of_three()),
        ("attack into mutual", attack_into_mutual()),
        ("mutual attack", mutual_attack()),
        ("self attacker with rival", self_attacker_with_rival()),
        ("odd cycle with tail", odd_cycle_with_tail()),
        ("mutual chain", mutual_chain()),
        ("mutual attack hitting x", mutual_attack_hitting_x()),
        ("mutual attack hitting y", mutual_attack_hitting_y()),
        ("mutual attack into cycle", mutual_attack_into_cycle()),
        ("cycle with self loop", cycle_with_self_loop()),
        ("lone argument", lone_argument()),
        (
            "reduced pair attack",
            joint_to_single(&pair_attack()).framework,
        ),
        (
            "reduced joint triangle",
            joint_to_single(&joint_triangle()).framework,
        ),
        (
            "reduced attacked attack",
            joint_to_single(&higher_to_joint(&attacked_attack())).framework,
        ),
        (
            "reduced attack tower",
            joint_to_single(&higher_to_joint(&attack_tower())).framework,
        ),
        ("odd cycle", odd_cycle()),
        (
            "reduced singleton attacks",
            joint_to_single(&attack_into_mutual().to_joint()).framework,
        ),
        ("four cycle", four_cycle()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn everything_validates() {
        for (name, af) in curated() {
            assert!(af.validate().is_empty(), "{name}");
        }
        assert_eq!(curated().len(), 20);
        assert!(Framework::Joint(joint_triangle()).check().is_ok());
        assert!(Framework::Higher(attack_tower()).check().is_ok());
        assert!(Framework::Disjunctive(disjunctive_pair()).check().is_ok());
        assert!(Framework::Disjunctive(mutual_attack_hitting_x_or_y())
            .check()
            .is_ok());
        assert_eq!(four_node_adf().arguments.len(), 4);
    }

    #[test]
    fn reduced_sizes() {
        let sizes: Vec<usize> = curated()
            .iter()
            .filter(|(n, _)| n.starts_with("reduced"))
            .map(|(_, af)| af.arguments.len())
            .collect();
        assert_eq!(sizes, vec![6, 16, 11, 21, 9]);
    }
}
