use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::path::Path;
use std::time::Instant;

use argn::random::{random_af, random_disj_af, random_joint_af};
use argn::two_world::Checker;
use argn::{
    delta_adf, delta_af, delta_bipolar, delta_disjunctive, delta_higher_direct, delta_joint,
    grounded_fixpoint, higher_to_joint, joint_to_single, model_to_labelling, parse_apx,
    parse_formula, parse_tgf, stable_axioms, to_apx, BipolarVariant, Error, Extension, Framework,
    JointAf, Labelling, Mode, ModelSearch, Oracle, State, Theory, World,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::report::{set_text, Divergence, RunReport};
use crate::{CnnAction, Engine, Format, ReduceKind, Semantics, Support, Worlds};

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(String, std::io::Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Io(path, e) => write!(f, "{path}: {e}"),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

pub enum Failure {
    /// The command ran, but the cross-check found disagreements.
    Divergence(String),
    Error(CliError),
}

impl<E: Into<CliError>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Error(e.into())
    }
}

pub fn exit_code(e: &CliError) -> u8 {
    match e {
        CliError::Core(Error::SizeCap { .. }) => 3,
        CliError::Core(Error::Inconsistent) => 1,
        _ => 2,
    }
}

pub struct Context {
    json: bool,
    search: ModelSearch,
    oracle: Oracle,
    checker: Checker,
}

fn load(path: &Path, format: Option<Format>) -> Result<Framework, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    let format = format.unwrap_or(match path.extension().and_then(|e| e.to_str()) {
        Some("tgf") => Format::Tgf,
        _ => Format::Apx,
    });
    Ok(match format {
        Format::Tgf => Framework::Plain(parse_tgf(&text)?),
        Format::Apx => parse_apx(&text)?,
    })
}

fn theory_of(fw: &Framework, support: Support) -> Result<Theory, CliError> {
    Ok(match fw {
        Framework::Plain(af) => delta_af(af),
        Framework::Joint(jaf) => delta_joint(jaf),
        Framework::Higher(haf) => delta_higher_direct(haf)?,
        Framework::Disjunctive(daf) => delta_disjunctive(daf),
        Framework::Bipolar(baf) => delta_bipolar(
            baf,
            match support {
                Support::Tau1 => BipolarVariant::Tau1,
                Support::Tau2 => BipolarVariant::Tau2,
            },
        ),
        Framework::Adf(adf) => delta_adf(adf),
    })
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis().try_into().unwrap_or(u64::MAX)
}

fn stable_only(ls: Vec<Labelling>) -> Vec<Labelling> {
    ls.into_iter()
        .filter(|l| l.iter().all(|(_, s)| s != State::Und))
        .collect()
}

fn maximal_only(ls: Vec<Labelling>) -> Vec<Labelling> {
    let sets: Vec<Extension> = ls.iter().map(Labelling::in_set).collect();
    ls.into_iter()
        .enumerate()
        .filter(|(i, _)| !sets.iter().any(|o| sets[*i].is_subset(o) && sets[*i] != *o))
        .map(|(_, l)| l)
        .collect()
}

fn divergence(network: String, cn: &[Labelling], oracle: &[Labelling]) -> Option<Divergence> {
    let a: BTreeSet<&Labelling> = cn.iter().collect();
    let b: BTreeSet<&Labelling> = oracle.iter().collect();
    if a == b {
        return None;
    }
    Some(Divergence {
        network,
        only_cn: a.difference(&b).map(|l| (*l).clone()).collect(),
        only_oracle: b.difference(&a).map(|l| (*l).clone()).collect(),
    })
}

fn json_text(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

impl Context {
    pub fn new(json: bool, max_atoms: Option<usize>) -> Self {
        let mut search = ModelSearch::new();
        let mut oracle = Oracle::default();
        let mut checker = Checker::default();
        if let Some(cap) = max_atoms {
            search = search.max_atoms(cap);
            oracle = Oracle::new(cap);
            checker = Checker::new(cap);
        }
        Context {
            json,
            search,
            oracle,
            checker,
        }
    }

    fn finish(&self, report: &RunReport) -> String {
        if self.json {
            json_text(report)
        } else {
            report.render()
        }
    }

    fn cn_labellings(&self, t: &Theory) -> Result<Vec<Labelling>, CliError> {
        Ok(self
            .search
            .enumerate(t)?
            .iter()
            .map(model_to_labelling)
            .collect())
    }

    fn labellings_by_logic(
        &self,
        fw: &Framework,
        semantics: Semantics,
    ) -> Result<Vec<Labelling>, CliError> {
        if let Framework::Plain(af) = fw {
            let t = delta_af(af);
            return match semantics {
                Semantics::Complete => self.cn_labellings(&t),
                Semantics::Stable => {
                    self.cn_labellings(&t.union(&stable_axioms(af.arguments.iter())))
                }
                Semantics::Preferred => Ok(maximal_only(self.cn_labellings(&t)?)),
                Semantics::Grounded => Ok(vec![self.search.grounded_labelling(&t)?]),
            };
        }
        let complete = match fw {
            Framework::Joint(jaf) => self.cn_labellings(&delta_joint(jaf))?,
            Framework::Higher(haf) => self.cn_labellings(&delta_joint(&higher_to_joint(haf)))?,
            Framework::Disjunctive(daf) => self.cn_labellings(&delta_disjunctive(daf))?,
            _ => unreachable!("checked by extension_network"),
        };
        filter(complete, semantics)
    }

    fn labellings_by_oracle(
        &self,
        fw: &Framework,
        semantics: Semantics,
    ) -> Result<Vec<Labelling>, CliError> {
        if let Framework::Plain(af) = fw {
            return Ok(match semantics {
                Semantics::Complete => self.oracle.complete_labellings(af)?,
                Semantics::Stable => self.oracle.stable_labellings(af)?,
                Semantics::Preferred => self.oracle.preferred_labellings(af)?,
                Semantics::Grounded => {
                    if af.arguments.len() > self.oracle.max_arguments {
                        return Err(CliError::Core(Error::SizeCap {
                            what: "framework",
                            size: af.arguments.len(),
                            cap: self.oracle.max_arguments,
                        }));
                    }
                    vec![grounded_fixpoint(af)]
                }
            });
        }
        let complete = match fw {
            Framework::Joint(jaf) => self.oracle.joint_labellings(jaf)?,
            Framework::Higher(haf) => self.oracle.joint_labellings(&higher_to_joint(haf))?,
            Framework::Disjunctive(daf) => self.oracle.disjunctive_labellings(daf)?,
            _ => unreachable!("checked by extension_network"),
        };
        filter(complete, semantics)
    }

    pub fn extensions(
        &self,
        path: &Path,
        format: Option<Format>,
        semantics: Semantics,
        engine: Engine,
    ) -> Result<String, Failure> {
        let fw = load(path, format)?;
        if matches!(fw, Framework::Bipolar(_) | Framework::Adf(_)) {
            return Err(CliError::Usage(format!(
                "labellings of {} networks are not defined here; use `argn models`",
                fw.kind()
            ))
            .into());
        }
        let start = Instant::now();
        let mut report = RunReport::new(path.display().to_string(), fw.kind());
        report.semantics = Some(semantics);
        report.engine = Some(engine);
        let labellings = match engine {
            Engine::Cn => self.labellings_by_logic(&fw, semantics)?,
            Engine::Oracle => self.labellings_by_oracle(&fw, semantics)?,
            Engine::Both => {
                let cn = self.labellings_by_logic(&fw, semantics)?;
                let oracle = self.labellings_by_oracle(&fw, semantics)?;
                report
                    .divergences
                    .extend(divergence(report.input.clone(), &cn, &oracle));
                cn
            }
        };
        let mut extensions: Vec<Extension> = Vec::new();
        for e in labellings.iter().map(Labelling::in_set) {
            if !extensions.contains(&e) {
                extensions.push(e);
            }
        }
        report.labellings = Some(labellings);
        report.extensions = Some(extensions);
        report.timing_ms = elapsed_ms(start);
        let text = self.finish(&report);
        if report.divergences.is_empty() {
            Ok(text)
        } else {
            Err(Failure::Divergence(text))
        }
    }

    pub fn models(
        &self,
        path: &Path,
        format: Option<Format>,
        support: Support,
    ) -> Result<String, Failure> {
        let fw = load(path, format)?;
        let start = Instant::now();
        let models = self
            .search
            .enumerate(&theory_of(&fw, support)?)
            .map_err(CliError::from)?;
        let mut report = RunReport::new(path.display().to_string(), fw.kind());
        report.models = Some(models);
        report.timing_ms = elapsed_ms(start);
        Ok(self.finish(&report))
    }

    pub fn reduce(
        &self,
        path: &Path,
        format: Option<Format>,
        kind: ReduceKind,
        provenance_path: Option<&Path>,
    ) -> Result<String, Failure> {
        let fw = load(path, format)?;
        let (apx, provenance) = match (kind, &fw) {
            (ReduceKind::Joint, Framework::Joint(jaf)) => reduce_joint(jaf),
            (ReduceKind::Joint, Framework::Plain(af)) => reduce_joint(&af.to_joint()),
            (ReduceKind::Higher, Framework::Higher(haf)) => {
                (to_apx(&Framework::Joint(higher_to_joint(haf))), json!({}))
            }
            (ReduceKind::Higher, Framework::Plain(af)) => {
                (to_apx(&Framework::Joint(af.to_joint())), json!({}))
            }
            _ => {
                return Err(CliError::Usage(format!(
                    "cannot reduce a {} network with --kind {}",
                    fw.kind(),
                    match kind {
                        ReduceKind::Joint => "joint",
                        ReduceKind::Higher => "higher",
                    }
                ))
                .into())
            }
        };
        if let Some(p) = provenance_path {
            fs::write(p, json_text(&provenance))
                .map_err(|e| CliError::Io(p.display().to_string(), e))?;
        }
        Ok(if self.json {
            json_text(&json!({ "apx": apx, "provenance": provenance }))
        } else {
            apx
        })
    }

    pub fn cnn(&self, text: &str, action: CnnAction, worlds: Worlds) -> Result<String, Failure> {
        let f = parse_formula(text).map_err(CliError::from)?;
        let mode = match worlds {
            Worlds::World1 => Mode::World1,
            Worlds::Both => Mode::Both,
        };
        let out = match action {
            CnnAction::Valid => {
                let valid = self.checker.is_valid(&f, mode).map_err(CliError::from)?;
                if self.json {
                    json_text(&json!({ "formula": f.to_string(), "valid": valid }))
                } else if valid {
                    "valid\n".to_string()
                } else {
                    "not valid\n".to_string()
                }
            }
            CnnAction::Countermodel => {
                let found = self
                    .checker
                    .find_countermodel(&f, mode)
                    .map_err(CliError::from)?;
                if self.json {
                    let (model, world) = match &found {
                        Some((m, w)) => (
                            serde_json::to_value(m).expect("serializable"),
                            json!(world_number(*w)),
                        ),
                        None => (json!(null), json!(null)),
                    };
                    json_text(
                        &json!({ "formula": f.to_string(), "countermodel": model, "world": world }),
                    )
                } else {
                    match found {
                        Some((m, w)) => format!("{m} at world {w}\n"),
                        None => "no countermodel\n".to_string(),
                    }
                }
            }
            CnnAction::Normalize => {
                let g = f.normalize_n();
                if self.json {
                    json_text(&json!({ "formula": f.to_string(), "normalized": g.to_string() }))
                } else {
                    format!("{g}\n")
                }
            }
        };
        Ok(out)
    }

    pub fn entails(
        &self,
        path: &Path,
        format: Option<Format>,
        text: &str,
        support: Support,
    ) -> Result<String, Failure> {
        let fw = load(path, format)?;
        let f = parse_formula(text).map_err(CliError::from)?;
        let t = theory_of(&fw, support)?;
        let start = Instant::now();
        let countermodel = self
            .search
            .find_countermodel(&t, &f)
            .map_err(CliError::from)?;
        Ok(if self.json {
            json_text(&json!({
                "input": path.display().to_string(),
                "formula": f.to_string(),
                "entailed": countermodel.is_none(),
                "countermodel": countermodel,
                "timing_ms": elapsed_ms(start),
            }))
        } else {
            match countermodel {
                None => "entailed\n".to_string(),
                Some(m) => format!("not entailed; countermodel {m}\n"),
            }
        })
    }

    pub fn fuzz(&self, seed: u64, count: usize, max_args: usize) -> Result<String, Failure> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let start = Instant::now();
        let mut divergences = Vec::new();
        for i in 0..count {
            let density = rng.gen_range(0.1..0.4);
            let af = random_af(&mut rng, max_args, density);
            let cn = self.cn_labellings(&delta_af(&af))?;
            divergences.extend(divergence(
                format!("af #{i}"),
                &cn,
                &self.oracle.complete_labellings(&af)?,
            ));

            let jaf = random_joint_af(&mut rng, max_args, 3, max_args);
            let cn = self.cn_labellings(&delta_joint(&jaf))?;
            divergences.extend(divergence(
                format!("joint #{i}"),
                &cn,
                &self.oracle.joint_labellings(&jaf)?,
            ));

            let daf = random_disj_af(&mut rng, max_args, density, 3);
            let cn = self.cn_labellings(&delta_disjunctive(&daf))?;
            divergences.extend(divergence(
                format!("disjunctive #{i}"),
                &cn,
                &self.oracle.disjunctive_labellings(&daf)?,
            ));
        }
        let checked = 3 * count;
        let text = if self.json {
            json_text(&json!({
                "seed": seed,
                "checked": checked,
                "timing_ms": elapsed_ms(start),
                "divergences": divergences,
            }))
        } else {
            let mut s = format!(
                "checked {checked} networks, {} divergence(s)\n",
                divergences.len()
            );
            for d in &divergences {
                let only = |ls: &[Labelling]| {
                    ls.iter()
                        .map(|l| set_text(&l.in_set()))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                s.push_str(&format!(
                    "  {}: models only {}; oracle only {}\n",
                    d.network,
                    only(&d.only_cn),
                    only(&d.only_oracle)
                ));
            }
            s
        };
        if divergences.is_empty() {
            Ok(text)
        } else {
            Err(Failure::Divergence(text))
        }
    }
}

fn reduce_joint(jaf: &JointAf) -> (String, serde_json::Value) {
    let r = joint_to_single(jaf);
    let provenance = serde_json::to_value(&r.naming).expect("serializable");
    (to_apx(&Framework::Plain(r.framework)), provenance)
}

fn world_number(w: World) -> u8 {
    match w {
        World::One => 1,
        World::Two => 2,
    }
}

/// Complete labellings cut down to the requested semantics; the grounded
/// labelling is the complete one whose in-set lies inside all others.
fn filter(complete: Vec<Labelling>, semantics: Semantics) -> Result<Vec<Labelling>, CliError> {
    Ok(match semantics {
        Semantics::Complete => complete,
        Semantics::Stable => stable_only(complete),
        Semantics::Preferred => maximal_only(complete),
        Semantics::Grounded => {
            let least = complete
                .iter()
                .find(|l| complete.iter().all(|o| l.in_set().is_subset(&o.in_set())))
                .cloned();
            match least {
                Some(l) => vec![l],
                None => {
                    return Err(CliError::Usage(
                        "no complete labelling is contained in all others".to_string(),
                    ))
                }
            }
        }
    })
}
