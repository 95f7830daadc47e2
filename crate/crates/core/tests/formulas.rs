use argn::random::{argument_names, random_cn_formula, random_formula};
use argn::translate::theta_n;
use argn::two_world::Checker;
use argn::{eval_world, parse_formula, CnModel, Error, Formula, State, World};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn formula_from(seed: u64, atoms: usize, depth: usize) -> Formula {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_formula(&mut rng, &argument_names(atoms), depth)
}

fn all_models(atoms: &[String]) -> Vec<CnModel> {
    let mut acc = vec![CnModel::new()];
    for a in atoms {
        acc = acc
            .into_iter()
            .flat_map(|m| {
                State::ALL.into_iter().map(move |s| {
                    let mut next = m.clone();
                    next.insert(a.clone(), s);
                    next
                })
            })
            .collect();
    }
    acc
}

proptest! {
    #[test]
    fn printing_then_parsing_is_identity(seed in any::<u64>(), atoms in 1usize..5, depth in 0usize..6) {
        let f = formula_from(seed, atoms, depth);
        prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn normalization_is_flat_idempotent_and_sound(seed in any::<u64>(), atoms in 1usize..4, depth in 0usize..6) {
        let f = formula_from(seed, atoms, depth);
        let g = f.normalize_n();
        prop_assert!(g.is_cn_flat());
        prop_assert_eq!(g.normalize_n(), g.clone());
        let names: Vec<String> = f.atoms().into_iter().collect();
        for m in Checker::default().valuations(&names).unwrap() {
            for w in [World::One, World::Two] {
                prop_assert_eq!(eval_world(&f, &m, w).unwrap(), eval_world(&g, &m, w).unwrap());
            }
        }
    }

    #[test]
    fn cn_flat_formulas_are_left_alone(seed in any::<u64>(), depth in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_cn_formula(&mut rng, &argument_names(3), depth);
        prop_assert_eq!(f.normalize_n(), f);
    }

    #[test]
    fn theta_holds_in_every_coherent_model(n in 1usize..5) {
        let atoms = argument_names(n);
        let theta = theta_n(atoms.iter());
        for m in all_models(&atoms) {
            for g in &theta.formulas {
                prop_assert!(g.evaluate_cn(&m).unwrap());
            }
        }
    }
}

#[test]
fn precedence_and_associativity() {
    let f = parse_formula("a & b | c -> d <-> e").unwrap();
    assert_eq!(f.to_string(), "((((a & b) | c) -> d) <-> e)");
    let g = parse_formula("a -> b -> c").unwrap();
    assert_eq!(g, parse_formula("a -> (b -> c)").unwrap());
    assert_eq!(
        parse_formula("~N~a").unwrap(),
        Formula::atom("a").not().n().not()
    );
}

#[test]
fn n_of_conjunction_normalizes_to_disjunction() {
    let f = parse_formula("N(a & b)").unwrap().normalize_n();
    assert_eq!(f, parse_formula("N a | N b").unwrap());
}

#[test]
fn reserved_names_are_rejected() {
    assert_eq!(Formula::try_atom("N"), Err(Error::ReservedName("N".into())));
    assert!(matches!(
        Formula::try_atom("T"),
        Err(Error::ReservedName(_))
    ));
    assert!(matches!(
        Formula::try_atom("9lives"),
        Err(Error::InvalidName(_))
    ));
}

#[test]
fn syntax_errors_carry_offsets() {
    match parse_formula("a & (b |") {
        Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 8),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn cn_evaluation_rejects_nested_n_and_unknown_atoms() {
    let m: CnModel = [("a", State::In)].into_iter().collect();
    assert!(matches!(
        parse_formula("N N a").unwrap().evaluate_cn(&m),
        Err(Error::NotCnFlat(_))
    ));
    assert_eq!(
        parse_formula("@1").unwrap().evaluate_cn(&m),
        Err(Error::WorldConstant)
    );
    assert_eq!(
        parse_formula("a | b").unwrap().evaluate_cn(&m),
        Err(Error::UnknownAtom("b".into()))
    );
}
