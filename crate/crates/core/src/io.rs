//! Instance files and JSON queries.
//!
//! Query points are given in the file's original coordinates. They are moved
//! into the normalized frame (carrier containing 0) for computation, and every
//! point in an answer is moved back.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{solve_assoc_from_pq, solve_assoc_from_pr, solve_swap_params, JoinKind, ParamQuadruple, SemilatticeInstance};
use crate::error::{check_dim, Error, Result};
use crate::numeric::{QVector, Rational};
use crate::polytope::{canonicalize, Polytope};
use crate::riesz::support_embed;
use crate::wspace::{w_join, w_membership, WJoin, WMembershipResult, Witness};

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub dimension: usize,
    pub vertices: Vec<Vec<Rational>>,
    pub join_kind: JoinKind,
    #[serde(default = "yes")]
    pub translate_to_zero: bool,
}

impl InstanceFile {
    pub fn into_instance(self) -> Result<SemilatticeInstance> {
        if self.dimension == 0 {
            return Err(Error::InvalidInput("dimension must be positive".into()));
        }
        if self.vertices.is_empty() {
            return Err(Error::InvalidInput("empty vertex list".into()));
        }
        let mut pts = Vec::with_capacity(self.vertices.len());
        for row in self.vertices {
            check_dim(self.dimension, row.len())?;
            pts.push(QVector::new(row)?);
        }
        SemilatticeInstance::normalized(canonicalize(&pts)?, self.join_kind, self.translate_to_zero)
    }
}

pub fn parse_instance(text: &str) -> Result<SemilatticeInstance> {
    serde_json::from_str::<InstanceFile>(text)?.into_instance()
}

pub fn load_instance(path: impl AsRef<Path>) -> Result<SemilatticeInstance> {
    parse_instance(&std::fs::read_to_string(path)?)
}

fn to_frame(inst: &SemilatticeInstance, x: &QVector) -> Result<QVector> {
    check_dim(inst.dim(), x.dim())?;
    x.add(inst.translation())
}

fn from_frame(inst: &SemilatticeInstance, x: &QVector) -> Result<QVector> {
    x.sub(inst.translation())
}

fn witness_from_frame(inst: &SemilatticeInstance, w: Witness) -> Result<Witness> {
    Ok(Witness { center: from_frame(inst, &w.center)?, ratio: w.ratio })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MembershipQuery {
    pub instance: InstanceFile,
    pub point: QVector,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JoinQuery {
    pub instance: InstanceFile,
    pub x: QVector,
    pub y: QVector,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SupportQuery {
    pub polytope: Polytope,
    pub directions: Vec<QVector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportAnswer {
    pub values: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParamMode {
    /// `(p, q) ↦ (r, s)` of the swap identity.
    Swap,
    FromPq,
    FromPr,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolveParamsQuery {
    pub mode: ParamMode,
    pub a: Rational,
    pub b: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamsAnswer {
    Swap { r: Rational, s: Rational },
    Quadruple(ParamQuadruple),
}

pub fn membership(inst: &SemilatticeInstance, point: &QVector) -> Result<WMembershipResult> {
    let mut res = w_membership(inst, &to_frame(inst, point)?)?;
    res.witness = res.witness.map(|w| witness_from_frame(inst, w)).transpose()?;
    Ok(res)
}

pub fn join_points(inst: &SemilatticeInstance, x: &QVector, y: &QVector) -> Result<WJoin> {
    let out = w_join(inst, &to_frame(inst, x)?, &to_frame(inst, y)?)?;
    Ok(WJoin { result: from_frame(inst, &out.result)?, witness: witness_from_frame(inst, out.witness)? })
}

pub fn solve_params(mode: ParamMode, a: &Rational, b: &Rational) -> Result<ParamsAnswer> {
    Ok(match mode {
        ParamMode::Swap => {
            let (r, s) = solve_swap_params(a, b)?;
            ParamsAnswer::Swap { r, s }
        }
        ParamMode::FromPq => ParamsAnswer::Quadruple(solve_assoc_from_pq(a, b)?),
        ParamMode::FromPr => ParamsAnswer::Quadruple(solve_assoc_from_pr(a, b)?),
    })
}

pub fn membership_query(q: MembershipQuery) -> Result<WMembershipResult> {
    membership(&q.instance.into_instance()?, &q.point)
}

pub fn join_query(q: JoinQuery) -> Result<WJoin> {
    join_points(&q.instance.into_instance()?, &q.x, &q.y)
}

pub fn support_query(q: &SupportQuery) -> Result<SupportAnswer> {
    Ok(SupportAnswer { values: support_embed(&q.polytope, &q.directions)? })
}

pub fn solve_params_query(q: &SolveParamsQuery) -> Result<ParamsAnswer> {
    solve_params(q.mode, &q.a, &q.b)
}

/// JSON shape of an error, as printed by the binary and returned over FFI.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ErrorReport {
    pub error: String,
    pub kind: String,
}

impl From<&Error> for ErrorReport {
    fn from(e: &Error) -> Self {
        let kind = match e {
            Error::InvalidInput(_) => "invalid_input",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::Domain(_) => "domain",
            Error::Parse(_) => "parse",
            Error::Validation(_) => "validation",
            Error::Io(_) => "io",
        };
        ErrorReport { error: e.to_string(), kind: kind.into() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::q;
    use serde_json::json;

    const SQUARE: &str = r#"{"dimension": 2, "vertices": [["0","0"],["1","0"],["0","1"],["1","1"]], "join_kind": "componentwise_max"}"#;

    fn v(c: &[i64]) -> QVector {
        QVector::from_ints(c)
    }

    #[test]
    fn loads_unit_square_without_translation() {
        let inst = parse_instance(SQUARE).unwrap();
        assert_eq!(inst, SemilatticeInstance::unit_cube(2));
        assert!(inst.translation().is_zero());
    }

    #[test]
    fn shifted_square_is_translated() {
        let text = r#"{"dimension": 2, "vertices": [["1","1"],["2","1"],["1","2"],["2","2"]], "join_kind": "componentwise_max"}"#;
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.translation(), &v(&[-1, -1]));
        assert_eq!(inst.carrier(), SemilatticeInstance::unit_cube(2).carrier());

        let res = membership(&inst, &v(&[3, 3])).unwrap();
        assert_eq!(res.p_max, Some(q(1, 2)));
        assert_eq!(res.witness.unwrap().center, v(&[1, 1]));
        assert_eq!(join_points(&inst, &v(&[3, 1]), &v(&[1, 3])).unwrap().result, v(&[3, 3]));

        let pinned = r#"{"dimension": 2, "vertices": [["1","1"],["2","2"],["1","2"],["2","1"]], "join_kind": "componentwise_max", "translate_to_zero": false}"#;
        assert!(matches!(parse_instance(pinned), Err(Error::Domain(_))));
    }

    #[test]
    fn rejects_bad_instances() {
        let tri = r#"{"dimension": 2, "vertices": [["0","0"],["1","0"],["0","1"]], "join_kind": "componentwise_max"}"#;
        assert!(matches!(parse_instance(tri), Err(Error::Domain(_))));
        let empty = r#"{"dimension": 2, "vertices": [], "join_kind": "componentwise_max"}"#;
        assert!(matches!(parse_instance(empty), Err(Error::InvalidInput(_))));
        let ragged = r#"{"dimension": 2, "vertices": [["0"]], "join_kind": "componentwise_max"}"#;
        assert!(matches!(parse_instance(ragged), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(parse_instance("{"), Err(Error::Parse(_))));
        let unknown = r#"{"dimension": 1, "vertices": [["0"]], "join_kind": "lexicographic"}"#;
        assert!(matches!(parse_instance(unknown), Err(Error::Parse(_))));
        assert!(matches!(load_instance("/nonexistent/instance.json"), Err(Error::Io(_))));
    }

    #[test]
    fn query_answers() {
        let instance: InstanceFile = serde_json::from_str(SQUARE).unwrap();
        let res = membership_query(MembershipQuery { instance: instance.clone(), point: v(&[2, 2]) }).unwrap();
        let out = serde_json::to_value(&res).unwrap();
        assert_eq!(out["member"], json!(true));
        assert_eq!(out["p_max"], json!("1/2"));
        assert_eq!(out["witness"]["center"], json!(["0", "0"]));

        let j = join_query(JoinQuery { instance, x: v(&[2, 0]), y: v(&[0, 2]) }).unwrap();
        assert_eq!(serde_json::to_value(&j).unwrap()["result"], json!(["2", "2"]));

        let sq: SupportQuery = serde_json::from_value(json!({
            "polytope": {"dim": 2, "vertices": [["0","0"],["1","0"],["0","1"]]},
            "directions": [["1","0"],["0","1"],["1","1"]]
        }))
        .unwrap();
        assert_eq!(support_query(&sq).unwrap().values, vec![q(1, 1); 3]);

        let swap = solve_params_query(&SolveParamsQuery { mode: ParamMode::Swap, a: q(1, 2), b: q(1, 3) }).unwrap();
        assert_eq!(serde_json::to_value(&swap).unwrap(), json!({"r": "1/2", "s": "3/4"}));
        let quad = solve_params(ParamMode::FromPr, &q(1, 2), &q(1, 4)).unwrap();
        assert_eq!(serde_json::to_value(&quad).unwrap(), json!({"p": "1/2", "q": "6/7", "r": "1/4", "s": "3/7"}));
        assert!(solve_params(ParamMode::FromPq, &q(1, 1), &q(1, 1)).is_err());
    }

    #[test]
    fn error_report_kinds() {
        let e = Error::DimensionMismatch { expected: 2, found: 3 };
        let r = ErrorReport::from(&e);
        assert_eq!(r.kind, "dimension_mismatch");
        assert!(r.error.contains("expected 2"));
    }
}
