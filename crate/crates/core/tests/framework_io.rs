use argn::random::{argument_names, random_af, random_cn_formula, random_disj_af, random_joint_af};
use argn::{
    parse_apx, parse_tgf, to_apx, to_tgf, AdfSpec, BipolarAf, Error, Formula, Framework, HigherAf,
    HigherAttack,
};
use indexmap::IndexMap;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn roundtrip(fw: &Framework) -> Framework {
    parse_apx(&to_apx(fw)).unwrap_or_else(|e| panic!("{e}\n{}", to_apx(fw)))
}

/// Replaces every `N q` by `~q`.
fn strip_n(f: &Formula) -> Formula {
    match f {
        Formula::N(a) => strip_n(a).not(),
        Formula::Not(a) => strip_n(a).not(),
        Formula::And(a, b) => strip_n(a).and(strip_n(b)),
        Formula::Or(a, b) => strip_n(a).or(strip_n(b)),
        Formula::Imp(a, b) => strip_n(a).imp(strip_n(b)),
        Formula::Iff(a, b) => strip_n(a).iff(strip_n(b)),
        leaf => leaf.clone(),
    }
}

proptest! {
    #[test]
    fn plain_frameworks_survive_both_formats(seed in any::<u64>()) {
        let af = random_af(&mut ChaCha8Rng::seed_from_u64(seed), 8, 0.3);
        let fw = Framework::Plain(af.clone());
        prop_assert_eq!(roundtrip(&fw), fw);
        prop_assert_eq!(parse_tgf(&to_tgf(&af)).unwrap(), af);
    }

    #[test]
    fn joint_frameworks_survive_apx(seed in any::<u64>()) {
        let jaf = random_joint_af(&mut ChaCha8Rng::seed_from_u64(seed), 6, 3, 6);
        prop_assume!(!jaf.attacks.is_empty());
        let fw = Framework::Joint(jaf);
        prop_assert_eq!(roundtrip(&fw), fw);
    }

    #[test]
    fn disjunctive_frameworks_survive_apx(seed in any::<u64>()) {
        let daf = random_disj_af(&mut ChaCha8Rng::seed_from_u64(seed), 6, 0.2, 3);
        prop_assume!(!daf.disjunctive.is_empty());
        let fw = Framework::Disjunctive(daf);
        prop_assert_eq!(roundtrip(&fw), fw);
    }

    #[test]
    fn bipolar_frameworks_survive_apx(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let af = random_af(&mut rng, 5, 0.2);
        let names: Vec<String> = af.arguments.iter().cloned().collect();
        let supports: Vec<(String, String)> = (0..rng.gen_range(1..4))
            .map(|_| (names[rng.gen_range(0..names.len())].clone(), names[rng.gen_range(0..names.len())].clone()))
            .collect();
        let fw = Framework::Bipolar(BipolarAf::new(af.arguments, af.attacks, supports));
        prop_assert_eq!(roundtrip(&fw), fw);
    }

    #[test]
    fn adf_frameworks_survive_apx(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let names = argument_names(rng.gen_range(1..5));
        let acceptance: IndexMap<String, Formula> = names
            .iter()
            .map(|x| (x.clone(), strip_n(&random_cn_formula(&mut rng, &names, 3))))
            .collect();
        let fw = Framework::Adf(AdfSpec::new(names.iter().cloned(), acceptance));
        prop_assert_eq!(roundtrip(&fw), fw);
    }
}

#[test]
fn higher_levels_survive_apx() {
    let fw = Framework::Higher(HigherAf::new(
        ["z", "x", "y", "u"],
        vec![
            vec![HigherAttack::new("alpha", "z", "x")],
            vec![HigherAttack::new("beta", "y", "alpha")],
            vec![HigherAttack::new("gamma", "u", "beta")],
        ],
    ));
    assert_eq!(roundtrip(&fw), fw);
}

#[test]
fn tgf_and_apx_agree() {
    let tgf = "a\nb\nc label text\n#\na b\nb c\nc a\n";
    let apx = "arg(a). arg(b). arg(c). att(a,b). att(b,c). att(c,a).";
    assert_eq!(
        Framework::Plain(parse_tgf(tgf).unwrap()),
        parse_apx(apx).unwrap()
    );
}

#[test]
fn tgf_errors_name_the_line() {
    assert_eq!(
        parse_tgf("a\n#\na q\n"),
        Err(Error::Input {
            line: 3,
            message: "unknown endpoint q".into()
        })
    );
    assert!(matches!(
        parse_tgf("a\na\n"),
        Err(Error::Input { line: 2, .. })
    ));
    assert!(matches!(parse_tgf("#\n"), Err(Error::Invalid(_))));
}

#[test]
fn apx_rejects_bad_input() {
    assert!(matches!(
        parse_apx("arg(a). att(a,b)."),
        Err(Error::Input { line: 1, .. })
    ));
    assert!(matches!(
        parse_apx("arg(a).\narg(b).\natt(a,b)\n"),
        Err(Error::Input { .. })
    ));
    assert!(matches!(
        parse_apx("arg(a). arg(b). natt(r,a,b). ac(a,\"T\")."),
        Err(Error::Input { .. })
    ));
    assert!(matches!(
        parse_apx("arg(a). ac(a,\"N a\")."),
        Err(Error::Invalid(_))
    ));
    assert!(matches!(
        parse_apx("arg(a). arg(b). ac(a,\"T\")."),
        Err(Error::Invalid(_))
    ));
}
