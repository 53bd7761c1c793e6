//! Polytopes in V-representation with a canonical vertex list.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{check_dim, Error, Result};
use crate::lp::{lp_solve, LinearProgram, LpOutcome};
use crate::numeric::{vector_cwise_sup, QVector, Rational};

/// Nonempty convex hull of finitely many points of Qⁿ, stored as its extreme
/// points in lexicographic order. Two polytopes are equal as sets exactly when
/// their vertex lists are equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<QVector>,
}

impl Polytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[QVector] {
        &self.vertices
    }

    pub fn point(p: QVector) -> Self {
        Polytope { dim: p.dim(), vertices: vec![p] }
    }

    /// The box `[lo, hi]^dim`.
    pub fn cube(dim: usize, lo: &Rational, hi: &Rational) -> Self {
        let mut pts = Vec::with_capacity(1 << dim);
        for mask in 0..(1usize << dim) {
            let coords = (0..dim)
                .map(|i| if mask >> i & 1 == 1 { hi.clone() } else { lo.clone() })
                .collect();
            pts.push(QVector::new(coords).expect("dim > 0"));
        }
        canonicalize(&pts).expect("box corners are well formed")
    }

    pub fn translate(&self, t: &QVector) -> Result<Self> {
        check_dim(self.dim, t.dim())?;
        // Translation preserves extremality and lexicographic order.
        let vertices = self.vertices.iter().map(|v| v.add(t)).collect::<Result<_>>()?;
        Ok(Polytope { dim: self.dim, vertices })
    }

    pub fn contains(&self, x: &QVector) -> Result<bool> {
        contains_point(self, x)
    }
}

/// Decides whether `x` is a convex combination of `points` by exact LP.
fn in_hull(points: &[QVector], x: &QVector) -> bool {
    let k = points.len();
    let mut lp = LinearProgram::new(k);
    for axis in 0..x.dim() {
        let row = points.iter().map(|v| v[axis].clone()).collect();
        lp.add_eq(row, x[axis].clone());
    }
    lp.add_eq(vec![Rational::one(); k], Rational::one());
    let outcome = lp_solve(&lp).expect("hull program is well formed");
    outcome.is_feasible()
}

fn same_dim(points: &[QVector]) -> Result<usize> {
    let first = points.first().ok_or_else(|| Error::InvalidInput("empty point set".into()))?;
    for p in points {
        check_dim(first.dim(), p.dim())?;
    }
    Ok(first.dim())
}

/// Canonical form of `conv(points)`: deduplicated, non-extreme points removed,
/// lexicographically sorted.
pub fn canonicalize(points: &[QVector]) -> Result<Polytope> {
    let dim = same_dim(points)?;
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();

    // The lexicographic extremes are always vertices, so only interior
    // candidates need a membership program.
    let mut i = 0;
    while i < pts.len() {
        if pts.len() > 2 && i != 0 && i != pts.len() - 1 {
            let candidate = pts.remove(i);
            if in_hull(&pts, &candidate) {
                continue;
            }
            pts.insert(i, candidate);
        }
        i += 1;
    }
    Ok(Polytope { dim, vertices: pts })
}

fn outside_bounding_box(points: &[QVector], x: &QVector) -> bool {
    (0..x.dim()).any(|axis| {
        let below = points.iter().all(|v| v[axis] < x[axis]);
        let above = points.iter().all(|v| v[axis] > x[axis]);
        below || above
    })
}

pub fn contains_point(p: &Polytope, x: &QVector) -> Result<bool> {
    check_dim(p.dim, x.dim())?;
    if p.vertices.binary_search(x).is_ok() {
        return Ok(true);
    }
    if p.vertices.len() == 1 || outside_bounding_box(&p.vertices, x) {
        return Ok(false);
    }
    Ok(in_hull(&p.vertices, x))
}

/// Minkowski mixture `p·A + (1−p)·B`.
pub fn mix(a: &Polytope, b: &Polytope, p: &Rational) -> Result<Polytope> {
    check_dim(a.dim, b.dim)?;
    if !p.is_unit_interval() {
        return Err(Error::Domain(format!("weight {p} outside [0, 1]")));
    }
    if p.is_one() {
        return Ok(a.clone());
    }
    if p.is_zero() {
        return Ok(b.clone());
    }
    let cp = p.complement();
    let mut candidates = Vec::with_capacity(a.vertices.len() * b.vertices.len());
    for u in &a.vertices {
        for v in &b.vertices {
            candidates.push(crate::numeric::vector_linear(p, u, &cp, v)?);
        }
    }
    canonicalize(&candidates)
}

/// `conv(A ∪ B)`.
pub fn hull_join(a: &Polytope, b: &Polytope) -> Result<Polytope> {
    check_dim(a.dim, b.dim)?;
    let all: Vec<QVector> = a.vertices.iter().chain(&b.vertices).cloned().collect();
    canonicalize(&all)
}

/// Support function `h_A(u) = max_{v ∈ A} ⟨u, v⟩`.
pub fn support(a: &Polytope, u: &QVector) -> Result<Rational> {
    check_dim(a.dim, u.dim())?;
    let mut best: Option<Rational> = None;
    for v in &a.vertices {
        let d = v.dot(u)?;
        if best.as_ref().map_or(true, |b| d > *b) {
            best = Some(d);
        }
    }
    Ok(best.expect("polytopes are nonempty"))
}

pub fn polytope_equal(a: &Polytope, b: &Polytope) -> Result<bool> {
    check_dim(a.dim, b.dim)?;
    Ok(a.vertices == b.vertices)
}

/// `A ⊆ B`, decided vertex by vertex.
pub fn is_subset(a: &Polytope, b: &Polytope) -> Result<bool> {
    check_dim(a.dim, b.dim)?;
    for v in &a.vertices {
        if !contains_point(b, v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff the componentwise sup of every vertex pair lies in `P`.
pub fn is_sup_closed(p: &Polytope) -> bool {
    let vs = &p.vertices;
    for (i, v) in vs.iter().enumerate() {
        for w in &vs[i + 1..] {
            let s = vector_cwise_sup(v, w).expect("same dimension");
            if !contains_point(p, &s).expect("same dimension") {
                return false;
            }
        }
    }
    true
}

/// Maximizes `objective·x` over the polytope by LP with free coordinates and
/// hull weights. Used to cross-check the LP kernel against vertex enumeration.
pub fn lp_maximize(p: &Polytope, objective: &QVector) -> Result<LpOutcome> {
    check_dim(p.dim, objective.dim())?;
    let d = p.dim;
    let k = p.vertices.len();
    let mut obj = objective.coords().to_vec();
    obj.resize(d + k, Rational::zero());
    let mut lp = LinearProgram::new(d + k).maximize(obj);
    for axis in 0..d {
        lp.set_free(axis);
        let mut row = vec![Rational::zero(); d + k];
        row[axis] = Rational::one();
        for (j, v) in p.vertices.iter().enumerate() {
            row[d + j] = -&v[axis];
        }
        lp.add_eq(row, Rational::zero());
    }
    let mut simplex = vec![Rational::zero(); d];
    simplex.resize(d + k, Rational::one());
    lp.add_eq(simplex, Rational::one());
    lp_solve(&lp)
}

#[derive(Serialize, Deserialize)]
struct PolytopeRepr {
    dim: usize,
    vertices: Vec<QVector>,
}

impl Serialize for Polytope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolytopeRepr { dim: self.dim, vertices: self.vertices.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polytope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PolytopeRepr::deserialize(deserializer)?;
        if repr.vertices.iter().any(|v| v.dim() != repr.dim) {
            return Err(serde::de::Error::custom("vertex dimension does not match dim"));
        }
        canonicalize(&repr.vertices).map_err(serde::de::Error::custom)
    }
}
