use argn::random::{argument_names, random_cn_formula, random_formula, random_inn_formula};
use argn::two_world::{find_countermodel, is_valid, Checker};
use argn::{
    cn_to_two_world, eval_world, parse_formula, two_world_to_cn, CnModel, Formula, Mode, State,
    World,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn f(s: &str) -> Formula {
    parse_formula(s).unwrap()
}

fn valid(s: &str) -> bool {
    is_valid(&f(s), Mode::Both).unwrap()
}

fn instantiate(schema: &str, a: &Formula, b: &Formula) -> Formula {
    f(&schema
        .replace('A', &format!("({a})"))
        .replace('B', &format!("({b})")))
}

const SCHEMAS: [&str; 7] = [
    "N (A & B) <-> (N A | N B)",
    "~N A <-> N ~A",
    "A -> N N A",
    "N N A <-> A",
    "N (A | B) <-> (N A & N B)",
    "N (A -> B) <-> (~N A & N B)",
    "@1 <-> N @1",
];

proptest! {
    #[test]
    fn axiom_schemas_hold_for_arbitrary_subformulas(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let atoms = argument_names(3);
        let a = random_formula(&mut rng, &atoms, 3);
        let b = random_formula(&mut rng, &atoms, 3);
        for schema in SCHEMAS {
            prop_assert!(is_valid(&instantiate(schema, &a, &b), Mode::Both).unwrap(), "{}", schema);
        }
    }

    #[test]
    fn cn_evaluation_is_world_one_evaluation(seed in any::<u64>(), n in 1usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let atoms = argument_names(n);
        let g = random_cn_formula(&mut rng, &atoms, 5);
        for tw in Checker::default().valuations(&atoms).unwrap() {
            let m = two_world_to_cn(&tw);
            prop_assert_eq!(g.evaluate_cn(&m).unwrap(), eval_world(&g, &tw, World::One).unwrap());
        }
    }

    #[test]
    fn intuitionistic_fragment_is_persistent(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let atoms = argument_names(3);
        let g = random_inn_formula(&mut rng, &atoms, 4);
        for m in Checker::default().valuations(&atoms).unwrap() {
            prop_assert!(!eval_world(&g, &m, World::One).unwrap() || eval_world(&g, &m, World::Two).unwrap());
        }
    }
}

#[test]
fn appendix_axioms_are_valid() {
    for s in [
        "N (p & q) <-> (N p | N q)",
        "~N p <-> N ~p",
        "p -> N N p",
        "@1 -> (p -> N ~p)",
        "@1 <-> N @1",
    ] {
        assert!(valid(s), "{s}");
    }
}

#[test]
fn strong_negation_implies_negation_at_world_one_only() {
    assert!(is_valid(&f("N q -> ~q"), Mode::World1).unwrap());
    assert!(!valid("N q -> ~q"));
}

#[test]
fn claimed_validities_that_fail() {
    let (m, w) = find_countermodel(&f("N (N ~q -> q)"), Mode::World1)
        .unwrap()
        .unwrap();
    assert_eq!(w, World::One);
    assert!(!eval_world(&f("N (N ~q -> q)"), &m, World::One).unwrap());
    assert!(!valid("(p -> q) -> N (N q -> N p)"));
}

#[test]
fn bridge_round_trips() {
    for s in State::ALL {
        let m: CnModel = [("p", s)].into_iter().collect();
        assert_eq!(two_world_to_cn(&cn_to_two_world(&m)), m);
    }
}

#[test]
fn atom_cap_is_reported() {
    let g = Formula::disj((0..13).map(|i| Formula::atom(format!("p{i}"))));
    assert!(Checker::default().is_valid(&g, Mode::Both).is_err());
    assert!(!Checker::new(13).is_valid(&g, Mode::Both).unwrap());
}
