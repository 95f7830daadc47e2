//! Argumentation networks compiled to classical propositional logic with a
//! strong negation `N`.
//!
//! Each framework family is translated into a [`Theory`] whose models over
//! coherent three-valued assignments are exactly the framework's labellings.
//! Brute-force labelling oracles, structural reductions and a two-world
//! evaluator for iterated `N` sit alongside for cross-checking.

pub mod error;
pub mod formula;
pub mod frameworks;
pub mod models;
pub mod oracle;
pub mod random;
pub mod reductions;
pub mod state;
pub mod theory;
pub mod translate;
pub mod two_world;

pub use error::{Error, Result};
pub use formula::{parse_formula, Formula};
pub use frameworks::{
    parse_apx, parse_tgf, to_apx, to_tgf, AdfSpec, Af, BipolarAf, DisjAf, Framework, HigherAf,
    HigherAttack, JointAf, JointAttack,
};
pub use models::{
    entails, enumerate_models, find_countermodel, grounded_by_entailment, is_model, ModelSearch,
};
pub use oracle::{
    complete_labellings, disjunctive_labellings, grounded_fixpoint, joint_labellings,
    preferred_labellings, stable_labellings, Oracle,
};
pub use reductions::{
    higher_to_joint, joint_to_single, restrict_labelling, Provenance, ReductionResult,
};
pub use state::{labelling_to_model, model_to_labelling, CnModel, Extension, Labelling, State};
pub use theory::Theory;
pub use translate::{
    delta_adf, delta_af, delta_bipolar, delta_disjunctive, delta_higher_direct, delta_joint,
    stable_axioms, theta_n, BipolarVariant,
};
pub use two_world::{
    cn_to_two_world, eval_world, inn_imp, inn_not, two_world_to_cn, Mode, TwoWorldModel, World,
};
