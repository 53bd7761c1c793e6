//! Seeded law-checking engine.
//!
//! A [`Law`] bundles a case generator with one or more identities evaluated on
//! every drawn case. Cases are independent and indexed; each gets its own
//! random stream from `(seed, law name, index)`, so the merged report is the
//! same regardless of how the cases are scheduled. Every violation records the
//! serialized case plus both evaluated sides, and [`Law::recheck`] replays it.

use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::sampler::{Sampler, DEFAULT_DENOMINATOR_BOUND};

/// Draw attempts per case before the case is counted as skipped.
pub const MAX_DRAWS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawConfig {
    pub seed: u64,
    pub cases: usize,
    pub denominator_bound: u64,
}

impl Default for LawConfig {
    fn default() -> Self {
        LawConfig { seed: 0, cases: 500, denominator_bound: DEFAULT_DENOMINATOR_BOUND }
    }
}

impl LawConfig {
    pub fn new(seed: u64, cases: usize) -> Self {
        LawConfig { seed, cases, ..Default::default() }
    }

    pub fn with_bound(mut self, bound: u64) -> Self {
        self.denominator_bound = bound;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.cases == 0 {
            return Err(Error::InvalidInput("cases per law must be at least 1".into()));
        }
        if self.denominator_bound < 2 {
            return Err(Error::InvalidInput("denominator bound must be at least 2".into()));
        }
        Ok(())
    }
}

/// Result of evaluating one identity on one case.
#[derive(Clone, Debug, PartialEq)]
pub enum Check {
    Holds,
    Violated { lhs: Value, rhs: Value },
}

impl Check {
    /// Holds iff `lhs == rhs`.
    pub fn equal<T: Serialize + PartialEq>(lhs: &T, rhs: &T) -> Check {
        if lhs == rhs {
            Check::Holds
        } else {
            Check::violated(lhs, rhs)
        }
    }

    /// Holds iff `lhs != rhs`; used for the contrapositive form of
    /// cancellation laws.
    pub fn distinct<T: Serialize + PartialEq>(lhs: &T, rhs: &T) -> Check {
        if lhs != rhs {
            Check::Holds
        } else {
            Check::violated(lhs, rhs)
        }
    }

    pub fn violated<T: Serialize + ?Sized, U: Serialize + ?Sized>(lhs: &T, rhs: &U) -> Check {
        Check::Violated {
            lhs: serde_json::to_value(lhs).expect("serializable"),
            rhs: serde_json::to_value(rhs).expect("serializable"),
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, Check::Holds)
    }
}

pub type DrawFn<C, K> = fn(&C, &mut Sampler) -> Result<Option<K>>;
pub type EvalFn<C, K> = fn(&C, &K) -> Result<Check>;

pub struct Identity<C, K> {
    pub name: &'static str,
    pub eval: EvalFn<C, K>,
}

pub struct Law<C, K> {
    pub name: &'static str,
    pub draw: DrawFn<C, K>,
    pub identities: Vec<Identity<C, K>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub case: usize,
    pub identity: String,
    pub inputs: Value,
    pub lhs: Value,
    pub rhs: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LawReport {
    pub law: String,
    pub seed: u64,
    pub cases: usize,
    #[serde(default)]
    pub skipped: usize,
    pub passed: bool,
    pub violations: Vec<Counterexample>,
}

impl LawReport {
    pub fn new(law: impl Into<String>, seed: u64) -> Self {
        LawReport { law: law.into(), seed, cases: 0, skipped: 0, passed: true, violations: Vec::new() }
    }

    pub fn push(&mut self, cx: Counterexample) {
        self.violations.push(cx);
        self.passed = false;
    }

    /// Folds `other` into `self` under `self`'s law name.
    pub fn absorb(&mut self, other: LawReport) {
        self.cases += other.cases;
        self.skipped += other.skipped;
        for mut v in other.violations {
            v.identity = format!("{}/{}", other.law, v.identity);
            self.push(v);
        }
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{} {}: {} cases, {} skipped, {} violations",
            if self.passed { "PASS" } else { "FAIL" },
            self.law,
            self.cases,
            self.skipped,
            self.violations.len()
        )
    }
}

enum CaseResult {
    Skipped,
    Ran(Vec<Counterexample>),
}

impl<C, K> Law<C, K>
where
    C: Sync,
    K: Serialize + DeserializeOwned + Send,
{
    pub fn new(name: &'static str, draw: DrawFn<C, K>) -> Self {
        Law { name, draw, identities: Vec::new() }
    }

    pub fn identity(mut self, name: &'static str, eval: EvalFn<C, K>) -> Self {
        self.identities.push(Identity { name, eval });
        self
    }

    fn run_case(&self, ctx: &C, cfg: &LawConfig, index: usize) -> CaseResult {
        let mut sampler = Sampler::for_case(cfg.seed, self.name, index, cfg.denominator_bound);
        let mut case = None;
        for _ in 0..MAX_DRAWS {
            match (self.draw)(ctx, &mut sampler) {
                Ok(Some(k)) => {
                    case = Some(k);
                    break;
                }
                Ok(None) => continue,
                Err(e) => {
                    return CaseResult::Ran(vec![Counterexample {
                        case: index,
                        identity: "draw".into(),
                        inputs: Value::Null,
                        lhs: Value::Null,
                        rhs: Value::Null,
                        error: Some(e.to_string()),
                    }])
                }
            }
        }
        let Some(case) = case else {
            return CaseResult::Skipped;
        };
        let inputs = serde_json::to_value(&case).expect("serializable case");
        let mut found = Vec::new();
        for id in &self.identities {
            let (lhs, rhs, error) = match (id.eval)(ctx, &case) {
                Ok(Check::Holds) => continue,
                Ok(Check::Violated { lhs, rhs }) => (lhs, rhs, None),
                Err(e) => (Value::Null, Value::Null, Some(e.to_string())),
            };
            found.push(Counterexample {
                case: index,
                identity: id.name.into(),
                inputs: inputs.clone(),
                lhs,
                rhs,
                error,
            });
        }
        CaseResult::Ran(found)
    }

    pub fn run(&self, ctx: &C, cfg: &LawConfig) -> LawReport {
        let results: Vec<CaseResult> =
            (0..cfg.cases).into_par_iter().map(|i| self.run_case(ctx, cfg, i)).collect();
        let mut report = LawReport::new(self.name, cfg.seed);
        for r in results {
            match r {
                CaseResult::Skipped => report.skipped += 1,
                CaseResult::Ran(vs) => {
                    report.cases += 1;
                    for v in vs {
                        report.push(v);
                    }
                }
            }
        }
        report
    }

    /// Re-evaluates a recorded counterexample from its serialized inputs.
    pub fn recheck(&self, ctx: &C, cx: &Counterexample) -> Result<Check> {
        let name = cx.identity.rsplit('/').next().unwrap_or(&cx.identity);
        let id = self
            .identities
            .iter()
            .find(|i| i.name == name)
            .ok_or_else(|| Error::InvalidInput(format!("unknown identity {name:?}")))?;
        let case: K = serde_json::from_value(cx.inputs.clone())?;
        (id.eval)(ctx, &case)
    }
}
