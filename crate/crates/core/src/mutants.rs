//! Deliberately broken operations for self-testing the checkers. A checker
//! that passes one of these is vacuous.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{perspective, solve_swap_params, Mutated, Mutation, ParamQuadruple, PerspectiveOps, SemilatticeInstance};
use crate::error::{Error, Result};
use crate::numeric::{QVector, Rational};
use crate::polytope::{mix, Polytope};
use crate::riesz::{riesz_sup, EmbeddingOps, RieszOps};

/// `(1−p)·x + p·c`: center and point exchanged.
pub fn swapped_perspective(c: &QVector, p: &Rational, x: &QVector) -> Result<QVector> {
    perspective(x, p, c)
}

/// Correct formula with the arguments exchanged, so `r` and `s` trade places.
pub fn reversed_swap(p: &Rational, q: &Rational) -> Result<(Rational, Rational)> {
    solve_swap_params(q, p)
}

/// `s = pq`, `r = (1−q)/(1−p)`.
pub fn naive_from_pq(p: &Rational, q: &Rational) -> Result<ParamQuadruple> {
    let r = q.complement().checked_div(&p.complement()).map_err(|_| Error::Domain("p = 1".into()))?;
    Ok(ParamQuadruple { p: p.clone(), q: q.clone(), r, s: p * q })
}

/// `q = (1−r)/(1−p)`, `s = pq`.
pub fn naive_from_pr(p: &Rational, r: &Rational) -> Result<ParamQuadruple> {
    let q = r.complement().checked_div(&p.complement()).map_err(|_| Error::Domain("p = 1".into()))?;
    Ok(ParamQuadruple { p: p.clone(), s: p * &q, q, r: r.clone() })
}

pub fn broken_perspective_ops() -> PerspectiveOps {
    PerspectiveOps { perspective: swapped_perspective, swap: reversed_swap, from_pq: naive_from_pq, from_pr: naive_from_pr }
}

/// Componentwise max plus the all-ones vector.
pub fn shifted_sup(x: &QVector, y: &QVector) -> Result<QVector> {
    let ones = QVector::new(vec![Rational::one(); x.dim()])?;
    riesz_sup(x, y)?.add(&ones)
}

pub fn broken_riesz_ops() -> RieszOps {
    RieszOps { sup: shifted_sup, ..RieszOps::default() }
}

/// Returns the first argument.
pub fn left_hull(a: &Polytope, _b: &Polytope) -> Result<Polytope> {
    Ok(a.clone())
}

pub fn squared_mix(a: &Polytope, b: &Polytope, p: &Rational) -> Result<Polytope> {
    mix(a, b, &(p * p))
}

pub fn broken_embedding_ops() -> EmbeddingOps {
    EmbeddingOps { mix: squared_mix, join: left_hull, ..EmbeddingOps::default() }
}

/// Selector for the suite's mutation hook.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MutantKind {
    SquaredWeight,
    CollapseCombine,
    LeftJoin,
    AnchoredJoin,
    Perspective,
    Riesz,
    Embedding,
}

impl MutantKind {
    pub const ALL: [MutantKind; 7] = [
        MutantKind::SquaredWeight,
        MutantKind::CollapseCombine,
        MutantKind::LeftJoin,
        MutantKind::AnchoredJoin,
        MutantKind::Perspective,
        MutantKind::Riesz,
        MutantKind::Embedding,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MutantKind::SquaredWeight => "squared-weight",
            MutantKind::CollapseCombine => "collapse-combine",
            MutantKind::LeftJoin => "left-join",
            MutantKind::AnchoredJoin => "anchored-join",
            MutantKind::Perspective => "perspective",
            MutantKind::Riesz => "riesz",
            MutantKind::Embedding => "embedding",
        }
    }

    /// The model-level mutation, for kinds that act on `+_p` or `⊕`.
    pub fn model_mutation(self, inst: &SemilatticeInstance) -> Result<Option<Mutation<QVector>>> {
        Ok(match self {
            MutantKind::SquaredWeight => Some(Mutation::SquaredWeight),
            MutantKind::CollapseCombine => Some(Mutation::CollapseCombine),
            MutantKind::LeftJoin => Some(Mutation::LeftJoin),
            MutantKind::AnchoredJoin => Some(Mutation::AnchoredJoin(vertex_average(inst.carrier())?)),
            _ => None,
        })
    }

    pub fn mutate_instance(self, inst: &SemilatticeInstance) -> Result<Option<Mutated<SemilatticeInstance>>> {
        Ok(self.model_mutation(inst)?.map(|m| Mutated::new(inst.clone(), m)))
    }
}

pub fn vertex_average(p: &Polytope) -> Result<QVector> {
    let inv = Rational::from(p.vertices().len() as i64).recip()?;
    let mut acc = QVector::zeros(p.dim());
    for v in p.vertices() {
        acc = acc.add(&v.scale(&inv))?;
    }
    Ok(acc)
}

impl fmt::Display for MutantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MutantKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MutantKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown mutation {s:?}")))
    }
}
