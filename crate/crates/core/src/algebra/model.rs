use std::fmt;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{convex_combine, vector_cwise_sup, QVector, Rational};
use crate::polytope::{contains_point, hull_join, is_sup_closed, mix, Polytope};
use crate::sampler::Sampler;

/// A concrete convex semilattice `⟨X, +_p, ⊕⟩` that the law checkers can
/// sample from.
pub trait ConvexSemilattice: Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Serialize + DeserializeOwned + Send + Sync;

    /// An element of the structure.
    fn sample(&self, s: &mut Sampler) -> Result<Self::Elem>;

    /// An element of the distinguished base set, for structures built on top
    /// of one (the carrier inside W). Defaults to [`sample`](Self::sample).
    fn sample_base(&self, s: &mut Sampler) -> Result<Self::Elem> {
        self.sample(s)
    }

    /// `x +_p y`.
    fn combine(&self, x: &Self::Elem, y: &Self::Elem, p: &Rational) -> Result<Self::Elem>;

    /// `x ⊕ y`.
    fn join(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem>;

    /// Induced order: `x ≤ y ⟺ x ⊕ y = y`.
    fn leq(&self, x: &Self::Elem, y: &Self::Elem) -> Result<bool> {
        Ok(self.join(x, y)? == *y)
    }

    /// Perspective shift `P(c, p, x) = x +_p c` for `p ∈ [0, 1]`.
    fn shift(&self, c: &Self::Elem, p: &Rational, x: &Self::Elem) -> Result<Self::Elem> {
        self.combine(x, c, p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JoinKind {
    ComponentwiseMax,
}

impl JoinKind {
    pub fn apply(self, x: &QVector, y: &QVector) -> Result<QVector> {
        match self {
            JoinKind::ComponentwiseMax => vector_cwise_sup(x, y),
        }
    }
}

/// A polytope carrier containing 0, with its join operation.
#[derive(Clone, Debug, PartialEq)]
pub struct SemilatticeInstance {
    carrier: Polytope,
    join_kind: JoinKind,
    /// Vector added to the original coordinates to bring 0 into the carrier.
    translation: QVector,
    contains_zero: bool,
    sup_closed: bool,
}

impl SemilatticeInstance {
    /// Validates `carrier` as-is: it must contain 0 and, for componentwise
    /// max, be closed under binary sups of its vertices.
    pub fn new(carrier: Polytope, join_kind: JoinKind) -> Result<Self> {
        let zero = QVector::zeros(carrier.dim());
        Self::validated(carrier, join_kind, zero)
    }

    /// Like [`new`](Self::new), but when `translate_to_zero` is set and 0 is
    /// not a member, first translates the carrier by minus its first
    /// canonical vertex.
    pub fn normalized(carrier: Polytope, join_kind: JoinKind, translate_to_zero: bool) -> Result<Self> {
        let zero = QVector::zeros(carrier.dim());
        if translate_to_zero && !contains_point(&carrier, &zero)? {
            let t = carrier.vertices()[0].neg();
            let moved = carrier.translate(&t)?;
            return Self::validated(moved, join_kind, t);
        }
        Self::validated(carrier, join_kind, zero)
    }

    fn validated(carrier: Polytope, join_kind: JoinKind, translation: QVector) -> Result<Self> {
        let contains_zero = contains_point(&carrier, &QVector::zeros(carrier.dim()))?;
        if !contains_zero {
            return Err(Error::Domain("carrier does not contain 0".into()));
        }
        let sup_closed = is_sup_closed(&carrier);
        if join_kind == JoinKind::ComponentwiseMax && !sup_closed {
            return Err(Error::Domain("carrier is not closed under componentwise max".into()));
        }
        Ok(SemilatticeInstance { carrier, join_kind, translation, contains_zero, sup_closed })
    }

    pub fn unit_cube(dim: usize) -> Self {
        Self::new(Polytope::cube(dim, &Rational::zero(), &Rational::one()), JoinKind::ComponentwiseMax)
            .expect("unit cube is a valid instance")
    }

    pub fn carrier(&self) -> &Polytope {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn join_kind(&self) -> JoinKind {
        self.join_kind
    }

    pub fn translation(&self) -> &QVector {
        &self.translation
    }

    pub fn contains_zero(&self) -> bool {
        self.contains_zero
    }

    pub fn sup_closed(&self) -> bool {
        self.sup_closed
    }

    pub fn contains(&self, x: &QVector) -> Result<bool> {
        contains_point(&self.carrier, x)
    }

    fn require_member(&self, x: &QVector) -> Result<()> {
        if self.contains(x)? {
            Ok(())
        } else {
            Err(Error::Domain(format!("{x} is not a member of the carrier")))
        }
    }
}

/// The instance's `⊕` on carrier members.
pub fn join(inst: &SemilatticeInstance, x: &QVector, y: &QVector) -> Result<QVector> {
    inst.require_member(x)?;
    inst.require_member(y)?;
    inst.join_kind.apply(x, y)
}

/// `x ≤ y ⟺ x ⊕ y = y`.
pub fn induced_leq(inst: &SemilatticeInstance, x: &QVector, y: &QVector) -> Result<bool> {
    Ok(join(inst, x, y)? == *y)
}

impl ConvexSemilattice for SemilatticeInstance {
    type Elem = QVector;

    fn sample(&self, s: &mut Sampler) -> Result<QVector> {
        Ok(s.point_in(&self.carrier))
    }

    fn combine(&self, x: &QVector, y: &QVector, p: &Rational) -> Result<QVector> {
        convex_combine(x, y, p)
    }

    // Sampled members stay members (convexity plus sup-closure), so the
    // membership programs of `join` are skipped on this path.
    fn join(&self, x: &QVector, y: &QVector) -> Result<QVector> {
        self.join_kind.apply(x, y)
    }
}

/// Nonempty finitely generated convex subsets of Qⁿ under Minkowski mixture
/// and convex hull of the union.
#[derive(Clone, Debug)]
pub struct PolytopeModel {
    pub dim: usize,
    pub max_generators: usize,
    pub magnitude: i64,
}

impl PolytopeModel {
    pub fn new(dim: usize) -> Self {
        PolytopeModel { dim, max_generators: 4, magnitude: 2 }
    }
}

impl ConvexSemilattice for PolytopeModel {
    type Elem = Polytope;

    fn sample(&self, s: &mut Sampler) -> Result<Polytope> {
        Ok(s.polytope(self.dim, self.max_generators, self.magnitude))
    }

    fn combine(&self, x: &Polytope, y: &Polytope, p: &Rational) -> Result<Polytope> {
        mix(x, y, p)
    }

    fn join(&self, x: &Polytope, y: &Polytope) -> Result<Polytope> {
        hull_join(x, y)
    }
}

/// Deliberate corruptions used to show that a checker can fail.
#[derive(Clone, Debug)]
pub enum Mutation<E> {
    /// `x +_p y` computed with weight `p²`.
    SquaredWeight,
    /// `x +_p y = y`.
    CollapseCombine,
    /// `x ⊕ y = x`.
    LeftJoin,
    /// `x ⊕ y = (x ⊕ y) ⊕ anchor`.
    AnchoredJoin(E),
}

#[derive(Clone, Debug)]
pub struct Mutated<M: ConvexSemilattice> {
    pub inner: M,
    pub mutation: Mutation<M::Elem>,
}

impl<M: ConvexSemilattice> Mutated<M> {
    pub fn new(inner: M, mutation: Mutation<M::Elem>) -> Self {
        Mutated { inner, mutation }
    }
}

impl<M: ConvexSemilattice> ConvexSemilattice for Mutated<M>
where
    M::Elem: Sync,
{
    type Elem = M::Elem;

    fn sample(&self, s: &mut Sampler) -> Result<Self::Elem> {
        self.inner.sample(s)
    }

    fn sample_base(&self, s: &mut Sampler) -> Result<Self::Elem> {
        self.inner.sample_base(s)
    }

    fn combine(&self, x: &Self::Elem, y: &Self::Elem, p: &Rational) -> Result<Self::Elem> {
        match &self.mutation {
            Mutation::SquaredWeight => self.inner.combine(x, y, &(p * p)),
            Mutation::CollapseCombine => Ok(y.clone()),
            _ => self.inner.combine(x, y, p),
        }
    }

    fn join(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem> {
        match &self.mutation {
            Mutation::LeftJoin => Ok(x.clone()),
            Mutation::AnchoredJoin(anchor) => self.inner.join(&self.inner.join(x, y)?, anchor),
            _ => self.inner.join(x, y),
        }
    }
}
