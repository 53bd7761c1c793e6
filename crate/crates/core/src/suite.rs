//! Runs selected law groups against an instance and writes a report bundle:
//! one JSON file per law plus `summary.json`.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{
    check_cancellativity, check_convex_axioms, check_distributivity, check_order_cancellation,
    check_perspective_calculus, check_perspective_homomorphism, check_semilattice_axioms, ConvexSemilattice, Mutated,
    PerspectiveCtx, SemilatticeInstance,
};
use crate::error::{Error, Result};
use crate::laws::{LawConfig, LawReport};
use crate::mutants::{broken_embedding_ops, broken_perspective_ops, broken_riesz_ops, MutantKind};
use crate::numeric::QVector;
use crate::riesz::{check_embedding_homomorphism, check_riesz_laws, EmbeddingCtx, RieszOps};
use crate::sampler::DEFAULT_DENOMINATOR_BOUND;
use crate::wspace::{
    check_w_axioms_on, verify_w_axioms, w_closure_law, w_oracle_law, w_p_max_law, w_restriction_law,
    w_well_defined_law, WSpace,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LawGroup {
    Convex,
    Semilattice,
    Distributivity,
    Cancellativity,
    OrderCancellation,
    Homomorphism,
    Perspective,
    W,
    Riesz,
    Embedding,
}

impl LawGroup {
    pub const ALL: [LawGroup; 10] = [
        LawGroup::Convex,
        LawGroup::Semilattice,
        LawGroup::Distributivity,
        LawGroup::Cancellativity,
        LawGroup::OrderCancellation,
        LawGroup::Homomorphism,
        LawGroup::Perspective,
        LawGroup::W,
        LawGroup::Riesz,
        LawGroup::Embedding,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LawGroup::Convex => "convex",
            LawGroup::Semilattice => "semilattice",
            LawGroup::Distributivity => "distributivity",
            LawGroup::Cancellativity => "cancellativity",
            LawGroup::OrderCancellation => "order-cancellation",
            LawGroup::Homomorphism => "homomorphism",
            LawGroup::Perspective => "perspective",
            LawGroup::W => "w",
            LawGroup::Riesz => "riesz",
            LawGroup::Embedding => "embedding",
        }
    }
}

impl fmt::Display for LawGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LawGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LawGroup::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown law group {s:?}")))
    }
}

/// Parses a comma-separated selector; `all` selects every group.
pub fn parse_law_selector(s: &str) -> Result<Vec<LawGroup>> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part == "all" {
            out.extend(LawGroup::ALL);
        } else {
            out.push(part.parse()?);
        }
    }
    if out.is_empty() {
        return Err(Error::InvalidInput("empty law selector".into()));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub cases: usize,
    pub laws: Vec<LawGroup>,
    pub denominator_bound: u64,
    pub mutation: Option<MutantKind>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            cases: 500,
            laws: LawGroup::ALL.to_vec(),
            denominator_bound: DEFAULT_DENOMINATOR_BOUND,
            mutation: None,
        }
    }
}

impl SuiteConfig {
    pub fn law_config(&self) -> LawConfig {
        LawConfig { seed: self.seed, cases: self.cases, denominator_bound: self.denominator_bound }
    }

    pub fn validate(&self) -> Result<()> {
        if self.laws.is_empty() {
            return Err(Error::InvalidInput("no laws selected".into()));
        }
        self.law_config().validate()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawSummary {
    pub law: String,
    pub passed: bool,
    pub cases: usize,
    pub skipped: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub passed: bool,
    pub seed: u64,
    pub cases: usize,
    pub denominator_bound: u64,
    pub laws: Vec<LawGroup>,
    /// Added to the instance file's coordinates to obtain the checked carrier.
    pub translation: QVector,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mutation: Option<String>,
    pub results: Vec<LawSummary>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteOutcome {
    pub reports: Vec<LawReport>,
    pub summary: SuiteSummary,
}

impl SuiteOutcome {
    pub fn exit_code(&self) -> i32 {
        if self.summary.passed {
            0
        } else {
            1
        }
    }
}

fn model_laws<M: ConvexSemilattice>(group: LawGroup, m: &M, cfg: &LawConfig) -> Vec<LawReport> {
    match group {
        LawGroup::Convex => vec![check_convex_axioms(m, cfg)],
        LawGroup::Semilattice => vec![check_semilattice_axioms(m, cfg)],
        LawGroup::Distributivity => vec![check_distributivity(m, cfg)],
        LawGroup::Cancellativity => vec![check_cancellativity(m, cfg)],
        LawGroup::OrderCancellation => vec![check_order_cancellation(m, cfg)],
        LawGroup::Homomorphism => vec![check_perspective_homomorphism(m, cfg)],
        _ => Vec::new(),
    }
}

fn w_laws(inst: &SemilatticeInstance, mutated: Option<Mutated<WSpace<'_>>>, cfg: &LawConfig) -> Vec<LawReport> {
    let axioms = match &mutated {
        Some(m) => check_w_axioms_on(m, cfg),
        None => verify_w_axioms(inst, cfg),
    };
    let mut out = vec![axioms];
    for law in [w_oracle_law(), w_well_defined_law(), w_closure_law(), w_restriction_law(), w_p_max_law()] {
        out.push(law.run(inst, cfg));
    }
    out
}

/// Runs every selected group; reports come back in a fixed order.
pub fn run_suite(inst: &SemilatticeInstance, cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    cfg.validate()?;
    let law_cfg = cfg.law_config();
    let mutated = match cfg.mutation {
        Some(kind) => kind.mutate_instance(inst)?,
        None => None,
    };
    let model_mutation = match cfg.mutation {
        Some(kind) => kind.model_mutation(inst)?,
        None => None,
    };
    let mut reports = Vec::new();
    for &group in &cfg.laws {
        match group {
            LawGroup::Perspective => {
                let ops = match cfg.mutation {
                    Some(MutantKind::Perspective) => broken_perspective_ops(),
                    _ => Default::default(),
                };
                reports.extend(check_perspective_calculus(&PerspectiveCtx { ops, dim: inst.dim() }, &law_cfg));
            }
            LawGroup::W => {
                let m = model_mutation.clone().map(|mu| Mutated::new(WSpace { inst }, mu));
                reports.extend(w_laws(inst, m, &law_cfg));
            }
            LawGroup::Riesz => {
                let ops = match cfg.mutation {
                    Some(MutantKind::Riesz) => broken_riesz_ops(),
                    _ => RieszOps::default(),
                };
                reports.push(check_riesz_laws(ops, inst.dim(), &law_cfg));
            }
            LawGroup::Embedding => {
                let mut ctx = EmbeddingCtx::new(inst.dim());
                if cfg.mutation == Some(MutantKind::Embedding) {
                    ctx.ops = broken_embedding_ops();
                }
                reports.push(check_embedding_homomorphism(&ctx, &law_cfg));
            }
            model => match &mutated {
                Some(m) => reports.extend(model_laws(model, m, &law_cfg)),
                None => reports.extend(model_laws(model, inst, &law_cfg)),
            },
        }
    }
    let results: Vec<LawSummary> = reports
        .iter()
        .map(|r| LawSummary {
            law: r.law.clone(),
            passed: r.passed,
            cases: r.cases,
            skipped: r.skipped,
            violations: r.violations.len(),
        })
        .collect();
    let summary = SuiteSummary {
        passed: reports.iter().all(|r| r.passed),
        seed: cfg.seed,
        cases: cfg.cases,
        denominator_bound: cfg.denominator_bound,
        laws: cfg.laws.clone(),
        translation: inst.translation().clone(),
        mutation: cfg.mutation.map(|m| m.name().to_string()),
        results,
    };
    Ok(SuiteOutcome { reports, summary })
}

/// Writes `<law>.json` for every report and `summary.json` into `dir`.
pub fn write_bundle(outcome: &SuiteOutcome, dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    for r in &outcome.reports {
        std::fs::write(dir.join(format!("{}.json", r.law)), serde_json::to_string_pretty(r)? + "\n")?;
    }
    std::fs::write(dir.join("summary.json"), serde_json::to_string_pretty(&outcome.summary)? + "\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(laws: &str) -> SuiteConfig {
        SuiteConfig { seed: 42, cases: 10, laws: parse_law_selector(laws).unwrap(), ..Default::default() }
    }

    #[test]
    fn selector_parsing() {
        assert_eq!(parse_law_selector("all").unwrap(), LawGroup::ALL.to_vec());
        assert_eq!(parse_law_selector("riesz, convex,riesz").unwrap(), vec![LawGroup::Convex, LawGroup::Riesz]);
        assert!(parse_law_selector("").is_err());
        assert!(parse_law_selector("convex,bogus").is_err());
    }

    #[test]
    fn perspective_only_runs_perspective_laws() {
        let out = run_suite(&SemilatticeInstance::unit_cube(2), &quick("perspective")).unwrap();
        assert!(out.summary.passed);
        assert_eq!(out.reports.len(), 7);
        assert!(out.reports.iter().all(|r| r.law.starts_with("perspective") || r.law.starts_with("param")));
        assert_eq!(out.exit_code(), 0);
    }

    #[test]
    fn mutation_fails_the_suite() {
        let mut cfg = quick("convex,perspective");
        cfg.mutation = Some(MutantKind::SquaredWeight);
        let out = run_suite(&SemilatticeInstance::unit_cube(2), &cfg).unwrap();
        assert!(!out.summary.passed);
        assert_eq!(out.exit_code(), 1);
        assert!(!out.reports[0].passed);
        assert!(out.reports[1..].iter().all(|r| r.passed));
    }

    #[test]
    fn bundle_is_deterministic() {
        let inst = SemilatticeInstance::unit_cube(2);
        let cfg = quick("convex,riesz");
        let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
        for d in &dirs {
            write_bundle(&run_suite(&inst, &cfg).unwrap(), d.path()).unwrap();
        }
        for name in ["summary.json", "convex-axioms.json", "riesz.json"] {
            let a = std::fs::read(dirs[0].path().join(name)).unwrap();
            let b = std::fs::read(dirs[1].path().join(name)).unwrap();
            assert_eq!(a, b, "{name}");
        }
    }

    #[test]
    fn rejects_bad_config() {
        let inst = SemilatticeInstance::unit_cube(2);
        let cfg = SuiteConfig { cases: 0, ..Default::default() };
        assert!(run_suite(&inst, &cfg).is_err());
        let cfg = SuiteConfig { denominator_bound: 1, ..Default::default() };
        assert!(run_suite(&inst, &cfg).is_err());
    }
}
