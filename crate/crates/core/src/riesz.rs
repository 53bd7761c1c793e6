//! The componentwise-ordered vector space Qⁿ as a Riesz space, and the
//! support-function embedding of the polytope-valued model into functions
//! with pointwise order.

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::laws::{Check, Law, LawConfig, LawReport};
use crate::lp::{lp_solve, LinearProgram, LpOutcome};
use crate::numeric::{convex_combine, vector_cwise_inf, vector_cwise_sup, QVector, Rational};
use crate::polytope::{hull_join, is_subset, mix, support, Polytope};
use crate::sampler::Sampler;

pub fn riesz_sup(x: &QVector, y: &QVector) -> Result<QVector> {
    vector_cwise_sup(x, y)
}

/// `inf{x, y} = −sup{−x, −y}`.
pub fn riesz_inf(x: &QVector, y: &QVector) -> Result<QVector> {
    Ok(riesz_sup(&x.neg(), &y.neg())?.neg())
}

type BinOp = fn(&QVector, &QVector) -> Result<QVector>;

/// Lattice operations under test; [`Default`] gives the genuine ones.
#[derive(Clone, Copy, Debug)]
pub struct RieszOps {
    pub sup: BinOp,
    pub inf: BinOp,
}

impl Default for RieszOps {
    fn default() -> Self {
        RieszOps { sup: riesz_sup, inf: riesz_inf }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RieszCtx {
    pub ops: RieszOps,
    pub dim: usize,
}

impl RieszCtx {
    pub fn new(dim: usize) -> Self {
        RieszCtx { ops: RieszOps::default(), dim }
    }

    fn leq(&self, x: &QVector, y: &QVector) -> Result<bool> {
        Ok((self.ops.sup)(x, y)? == *y)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RieszCase {
    pub x: QVector,
    pub y: QVector,
    pub z: QVector,
    /// A common lower bound of `x` and `y`.
    pub w: QVector,
    /// A nonnegative vector.
    pub a: QVector,
    pub q_small: Rational,
    pub q_large: Rational,
}

const RIESZ_MAGNITUDE: i64 = 4;

fn draw_riesz(ctx: &RieszCtx, s: &mut Sampler) -> Result<Option<RieszCase>> {
    let x = s.vector(ctx.dim, RIESZ_MAGNITUDE);
    let mut y = s.vector(ctx.dim, RIESZ_MAGNITUDE);
    if s.chance(1, 4) {
        y = vector_cwise_sup(&x, &y)?;
    }
    let w = vector_cwise_inf(&x, &y)?.sub(&s.nonneg_vector(ctx.dim, 1))?;
    Ok(Some(RieszCase {
        z: s.vector(ctx.dim, RIESZ_MAGNITUDE),
        a: s.nonneg_vector(ctx.dim, RIESZ_MAGNITUDE),
        q_small: s.unit_open(),
        q_large: s.above_one(RIESZ_MAGNITUDE),
        x,
        y,
        w,
    }))
}

/// `q·x ⊕ q·y = q·(x ⊕ y)`.
fn scaling(ctx: &RieszCtx, k: &RieszCase, q: &Rational) -> Result<Check> {
    let lhs = (ctx.ops.sup)(&k.x.scale(q), &k.y.scale(q))?;
    let rhs = (ctx.ops.sup)(&k.x, &k.y)?.scale(q);
    Ok(Check::equal(&lhs, &rhs))
}

fn scaling_small(ctx: &RieszCtx, k: &RieszCase) -> Result<Check> {
    scaling(ctx, k, &k.q_small)
}

fn scaling_large(ctx: &RieszCtx, k: &RieszCase) -> Result<Check> {
    scaling(ctx, k, &k.q_large)
}

fn translation(ctx: &RieszCtx, k: &RieszCase) -> Result<Check> {
    let lhs = (ctx.ops.sup)(&k.x.add(&k.z)?, &k.y.add(&k.z)?)?;
    let rhs = (ctx.ops.sup)(&k.x, &k.y)?.add(&k.z)?;
    Ok(Check::equal(&lhs, &rhs))
}

/// `2·((x +_½ z) ⊕ (y +_½ z)) = (x ⊕ y) + z`.
fn translation_via_midpoint(ctx: &RieszCtx, k: &RieszCase) -> Result<Check> {
    let half = Rational::new(1, 2)?;
    let two = Rational::from(2);
    let mx = convex_combine(&k.x, &k.z, &half)?;
    let my = convex_combine(&k.y, &k.z, &half)?;
    let lhs = (ctx.ops.sup)(&mx, &my)?.scale(&two);
    let rhs = (ctx.ops.sup)(&k.x, &k.y)?.add(&k.z)?;
    Ok(Check::equal(&lhs, &rhs))
}

fn order_reversal(ctx: &RieszCtx, k: &RieszCase) -> Result<Check> {
    let forward = ctx.leq(&k.x, &k.y)?;
    let backward = ctx.leq(&k.y.neg(), &k.x.neg())?;
    Ok(Check::equal(&forward, &backward))
}

fn inf_duality(ctx: &RieszCtx, k: &RieszCase) -> Result<Check> {
    let lhs = (ctx.ops.inf)(&k.x, &k.y)?;
    let rhs = (ctx.ops.sup)(&k.x.neg(), &k.y.neg())?.neg();
    Ok(Check::equal(&lhs, &rhs))
}

fn inf_lower_bound(ctx: &RieszCtx, k: &RieszCase) -> Result<Check> {
    let m = (ctx.ops.inf)(&k.x, &k.y)?;
    Ok(Check::equal(&(ctx.leq(&m, &k.x)?, ctx.leq(&m, &k.y)?), &(true, true)))
}

fn inf_greatest(ctx: &RieszCtx, k: &RieszCase) -> Result<Check> {
    let m = (ctx.ops.inf)(&k.x, &k.y)?;
    Ok(Check::equal(&ctx.leq(&k.w, &m)?, &true))
}

fn sup_upper_bound(ctx: &RieszCtx, k: &RieszCase) -> Result<Check> {
    let j = (ctx.ops.sup)(&k.x, &k.y)?;
    Ok(Check::equal(&(ctx.leq(&k.x, &j)?, ctx.leq(&k.y, &j)?), &(true, true)))
}

fn absorption(ctx: &RieszCtx, k: &RieszCase) -> Result<Check> {
    let lhs = (ctx.ops.sup)(&k.x, &(ctx.ops.inf)(&k.x, &k.y)?)?;
    Ok(Check::equal(&lhs, &k.x))
}

/// `x ≤ y ⇒ x + z ≤ y + z`, with `y` replaced by `x ⊕ y` to make the
/// premise hold.
fn translation_order(ctx: &RieszCtx, k: &RieszCase) -> Result<Check> {
    let upper = (ctx.ops.sup)(&k.x, &k.y)?;
    Ok(Check::equal(&ctx.leq(&k.x.add(&k.z)?, &upper.add(&k.z)?)?, &true))
}

/// `0 ≤ a ⇒ 0 ≤ q·a`.
fn positive_cone(ctx: &RieszCtx, k: &RieszCase) -> Result<Check> {
    let zero = QVector::zeros(ctx.dim);
    let scaled = ctx.leq(&zero, &k.a.scale(&k.q_large))? && ctx.leq(&zero, &k.a.scale(&k.q_small))?;
    Ok(Check::equal(&(ctx.leq(&zero, &k.a)?, scaled), &(true, true)))
}

pub fn riesz_law() -> Law<RieszCtx, RieszCase> {
    Law::new("riesz", draw_riesz)
        .identity("scaling-below-one", scaling_small)
        .identity("scaling-above-one", scaling_large)
        .identity("translation", translation)
        .identity("translation-via-midpoint", translation_via_midpoint)
        .identity("order-reversal", order_reversal)
        .identity("inf-duality", inf_duality)
        .identity("inf-lower-bound", inf_lower_bound)
        .identity("inf-greatest-lower-bound", inf_greatest)
        .identity("sup-upper-bound", sup_upper_bound)
        .identity("absorption", absorption)
        .identity("translation-order", translation_order)
        .identity("positive-cone", positive_cone)
}

pub fn check_riesz_laws(ops: RieszOps, dim: usize, cfg: &LawConfig) -> LawReport {
    riesz_law().run(&RieszCtx { ops, dim }, cfg)
}

/// The support function of a polytope, evaluated on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportFunctionView {
    pub source: Polytope,
}

impl SupportFunctionView {
    pub fn new(source: Polytope) -> Self {
        SupportFunctionView { source }
    }

    pub fn evaluate(&self, u: &QVector) -> Result<Rational> {
        support(&self.source, u)
    }

    pub fn evaluate_all(&self, directions: &[QVector]) -> Result<Vec<Rational>> {
        support_embed(&self.source, directions)
    }
}

/// `h_A` at each direction; zero directions are rejected.
pub fn support_embed(a: &Polytope, directions: &[QVector]) -> Result<Vec<Rational>> {
    directions
        .iter()
        .map(|u| {
            check_dim(a.dim(), u.dim())?;
            if u.is_zero() {
                return Err(Error::InvalidInput("zero probe direction".into()));
            }
            support(a, u)
        })
        .collect()
}

/// ±unit vectors followed by every ±1 sign pattern.
pub fn grid_directions(dim: usize) -> Vec<QVector> {
    let mut out = Vec::new();
    for axis in 0..dim {
        for sign in [1, -1] {
            out.push(QVector::axis(dim, axis, Rational::from(sign)));
        }
    }
    for mask in 0..(1u32 << dim) {
        let coords = (0..dim).map(|i| Rational::from(if mask >> i & 1 == 1 { -1 } else { 1 })).collect();
        out.push(QVector::new(coords).expect("dim > 0"));
    }
    out
}

/// The grid, padded with seeded random directions up to `count`.
pub fn probe_directions(dim: usize, count: usize, s: &mut Sampler) -> Vec<QVector> {
    let mut out = grid_directions(dim);
    out.truncate(count);
    while out.len() < count {
        out.push(s.direction(dim, 4));
    }
    out
}

fn cross(a: &QVector, b: &QVector) -> QVector {
    let c = |i: usize, j: usize| &a[i] * &b[j] - &a[j] * &b[i];
    QVector::new(vec![c(1, 2), c(2, 0), c(0, 1)]).expect("three coordinates")
}

fn separates(a: &Polytope, b: &Polytope, u: &QVector) -> Result<bool> {
    Ok(!u.is_zero() && support(a, u)? != support(b, u)?)
}

/// Candidate directions built from vertex differences: the differences
/// themselves, in 2D their perpendiculars, in 3D pairwise cross products.
fn difference_directions(a: &Polytope, b: &Polytope) -> Result<Vec<QVector>> {
    let pts: Vec<&QVector> = a.vertices().iter().chain(b.vertices()).collect();
    let mut diffs = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        for r in &pts[i + 1..] {
            let d = p.sub(r)?;
            if !d.is_zero() && !diffs.contains(&d) {
                diffs.push(d);
            }
        }
    }
    let mut out = diffs.clone();
    match a.dim() {
        2 => out.extend(diffs.iter().map(|d| QVector::new(vec![-&d[1], d[0].clone()]).expect("2D"))),
        3 => {
            for (i, d) in diffs.iter().enumerate() {
                for e in &diffs[i + 1..] {
                    out.push(cross(d, e));
                }
            }
        }
        _ => {}
    }
    let negated: Vec<QVector> = out.iter().map(QVector::neg).collect();
    out.extend(negated);
    Ok(out)
}

/// Direction `u` with `⟨u, v⟩ > h_B(u)` for a vertex `v` of `A` outside `B`,
/// by exact LP over `u ∈ [−1, 1]ⁿ`.
fn lp_separator(a: &Polytope, b: &Polytope) -> Result<Option<QVector>> {
    let n = a.dim();
    for v in a.vertices() {
        if b.contains(v)? {
            continue;
        }
        // Variables: u⁺ (n), u⁻ (n), t, one slack per vertex of B.
        let m = b.vertices().len();
        let nv = 2 * n + 1 + m;
        let mut objective = vec![Rational::zero(); nv];
        objective[2 * n] = Rational::one();
        let mut lp = LinearProgram::new(nv).maximize(objective);
        for i in 0..=2 * n {
            lp.set_upper(i, Rational::one());
        }
        for (j, w) in b.vertices().iter().enumerate() {
            let d = v.sub(w)?;
            let mut row = vec![Rational::zero(); nv];
            for i in 0..n {
                row[i] = d[i].clone();
                row[n + i] = -&d[i];
            }
            row[2 * n] = -Rational::one();
            row[2 * n + 1 + j] = -Rational::one();
            lp.add_eq(row, Rational::zero());
        }
        if let LpOutcome::Optimal { value, point } = lp_solve(&lp)? {
            if value.is_positive() {
                let u = QVector::new((0..n).map(|i| &point[i] - &point[n + i]).collect())?;
                return Ok(Some(u));
            }
        }
    }
    Ok(None)
}

/// A direction on which the support functions of `a` and `b` differ, or
/// `None` when `a = b`.
pub fn separating_direction(a: &Polytope, b: &Polytope) -> Result<Option<QVector>> {
    check_dim(a.dim(), b.dim())?;
    if a == b {
        return Ok(None);
    }
    for u in grid_directions(a.dim()).into_iter().chain(difference_directions(a, b)?) {
        if separates(a, b, &u)? {
            return Ok(Some(u));
        }
    }
    for (p, r) in [(a, b), (b, a)] {
        if let Some(u) = lp_separator(p, r)? {
            return Ok(Some(u));
        }
    }
    Ok(None)
}

type MixOp = fn(&Polytope, &Polytope, &Rational) -> Result<Polytope>;
type HullOp = fn(&Polytope, &Polytope) -> Result<Polytope>;
type SupportOp = fn(&Polytope, &QVector) -> Result<Rational>;

/// Model operations under test; [`Default`] gives the genuine ones.
#[derive(Clone, Copy, Debug)]
pub struct EmbeddingOps {
    pub mix: MixOp,
    pub join: HullOp,
    pub support: SupportOp,
}

impl Default for EmbeddingOps {
    fn default() -> Self {
        EmbeddingOps { mix, join: hull_join, support }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct EmbeddingCtx {
    pub ops: EmbeddingOps,
    pub dim: usize,
    pub max_generators: usize,
    pub magnitude: i64,
    pub directions: usize,
}

impl EmbeddingCtx {
    pub fn new(dim: usize) -> Self {
        EmbeddingCtx { ops: EmbeddingOps::default(), dim, max_generators: 6, magnitude: 2, directions: 50 }
    }

    fn eval(&self, a: &Polytope, dirs: &[QVector]) -> Result<Vec<Rational>> {
        dirs.iter().map(|u| (self.ops.support)(a, u)).collect()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EmbeddingCase {
    pub a: Polytope,
    pub b: Polytope,
    pub p: Rational,
    pub directions: Vec<QVector>,
}

fn draw_embedding(ctx: &EmbeddingCtx, s: &mut Sampler) -> Result<Option<EmbeddingCase>> {
    let a = s.polytope(ctx.dim, ctx.max_generators, ctx.magnitude);
    let b = if s.chance(1, 10) { a.clone() } else { s.polytope(ctx.dim, ctx.max_generators, ctx.magnitude) };
    let p = s.unit_open();
    Ok(Some(EmbeddingCase { a, b, p, directions: probe_directions(ctx.dim, ctx.directions, s) }))
}

fn draw_distinct_pair(ctx: &EmbeddingCtx, s: &mut Sampler) -> Result<Option<EmbeddingCase>> {
    Ok(draw_embedding(ctx, s)?.filter(|k| k.a != k.b))
}

/// `h_{A +_p B} = p·h_A + (1−p)·h_B`.
fn mixture_linearity(ctx: &EmbeddingCtx, k: &EmbeddingCase) -> Result<Check> {
    let lhs = ctx.eval(&(ctx.ops.mix)(&k.a, &k.b, &k.p)?, &k.directions)?;
    let ha = ctx.eval(&k.a, &k.directions)?;
    let hb = ctx.eval(&k.b, &k.directions)?;
    let rhs: Vec<Rational> = ha.iter().zip(&hb).map(|(x, y)| &k.p * x + k.p.complement() * y).collect();
    Ok(Check::equal(&lhs, &rhs))
}

/// `h_{A ⊔ B} = max(h_A, h_B)`.
fn join_is_max(ctx: &EmbeddingCtx, k: &EmbeddingCase) -> Result<Check> {
    let lhs = ctx.eval(&(ctx.ops.join)(&k.a, &k.b)?, &k.directions)?;
    let ha = ctx.eval(&k.a, &k.directions)?;
    let hb = ctx.eval(&k.b, &k.directions)?;
    let rhs: Vec<Rational> = ha.into_iter().zip(hb).map(|(x, y)| x.max(y)).collect();
    Ok(Check::equal(&lhs, &rhs))
}

/// `A ⊆ A ⊔ B` and `h_A ≤ h_{A ⊔ B}` on every probe.
fn monotonicity(ctx: &EmbeddingCtx, k: &EmbeddingCase) -> Result<Check> {
    let big = (ctx.ops.join)(&k.a, &k.b)?;
    let subset = is_subset(&k.a, &big)?;
    let below = ctx.eval(&k.a, &k.directions)?.iter().zip(ctx.eval(&big, &k.directions)?).all(|(x, y)| *x <= y);
    Ok(Check::equal(&(subset, below), &(true, true)))
}

fn separation(ctx: &EmbeddingCtx, k: &EmbeddingCase) -> Result<Check> {
    match separating_direction(&k.a, &k.b)? {
        Some(u) => {
            let (ha, hb) = ((ctx.ops.support)(&k.a, &u)?, (ctx.ops.support)(&k.b, &u)?);
            Ok(Check::distinct(&ha, &hb))
        }
        None => Ok(Check::violated("no separating direction", &(k.a != k.b))),
    }
}

pub fn embedding_law() -> Law<EmbeddingCtx, EmbeddingCase> {
    Law::new("embedding-homomorphism", draw_embedding)
        .identity("mixture-linearity", mixture_linearity)
        .identity("join-is-max", join_is_max)
        .identity("monotonicity", monotonicity)
}

pub fn injectivity_law() -> Law<EmbeddingCtx, EmbeddingCase> {
    Law::new("embedding-injectivity", draw_distinct_pair).identity("separating-direction", separation)
}

/// Support-function homomorphism identities, plus injectivity evidence on
/// distinct pairs (absorbed into the same report).
pub fn check_embedding_homomorphism(ctx: &EmbeddingCtx, cfg: &LawConfig) -> LawReport {
    let mut report = embedding_law().run(ctx, cfg);
    report.absorb(injectivity_law().run(ctx, cfg));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::q;
    use crate::polytope::canonicalize;

    fn v(c: &[i64]) -> QVector {
        QVector::from_ints(c)
    }

    fn poly(pts: &[&[i64]]) -> Polytope {
        canonicalize(&pts.iter().map(|p| v(p)).collect::<Vec<_>>()).unwrap()
    }

    fn shifted_sup(x: &QVector, y: &QVector) -> Result<QVector> {
        let ones = QVector::new(vec![Rational::one(); x.dim()])?;
        riesz_sup(x, y)?.add(&ones)
    }

    fn first_hull(a: &Polytope, _b: &Polytope) -> Result<Polytope> {
        Ok(a.clone())
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(riesz_sup(&v(&[1, 3]), &v(&[2, 1])).unwrap(), v(&[2, 3]));
        assert_eq!(riesz_sup(&v(&[-1, 0]), &v(&[0, -1])).unwrap(), v(&[0, 0]));
        assert_eq!(riesz_inf(&v(&[1, 3]), &v(&[2, 1])).unwrap(), v(&[1, 1]));
        assert_eq!(riesz_inf(&v(&[0, 0]), &v(&[1, 1])).unwrap(), v(&[0, 0]));
        assert_eq!(riesz_inf(&v(&[4, -2]), &v(&[4, -2])).unwrap(), v(&[4, -2]));
        let two = Rational::from(2);
        let lhs = riesz_sup(&v(&[1, 0]).scale(&two), &v(&[0, 1]).scale(&two)).unwrap();
        assert_eq!(lhs, v(&[2, 2]));
        assert!(riesz_sup(&v(&[1]), &v(&[1, 2])).is_err());
    }

    #[test]
    fn riesz_laws_hold_and_mutants_fail() {
        for dim in 2..=4 {
            let r = check_riesz_laws(RieszOps::default(), dim, &LawConfig::new(3, 100));
            assert!(r.passed, "{}", r.summary_line());
        }
        let bad = RieszOps { sup: shifted_sup, ..RieszOps::default() };
        let r = check_riesz_laws(bad, 2, &LawConfig::new(3, 20));
        assert!(!r.passed);
        let law = riesz_law();
        let cx = &r.violations[0];
        assert!(!law.recheck(&RieszCtx { ops: bad, dim: 2 }, cx).unwrap().holds());
        assert!(law.recheck(&RieszCtx::new(2), cx).unwrap().holds());
    }

    #[test]
    fn support_embed_examples() {
        let tri = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        let dirs = [v(&[1, 0]), v(&[0, 1]), v(&[1, 1])];
        assert_eq!(support_embed(&tri, &dirs).unwrap(), vec![q(1, 1); 3]);
        assert_eq!(support_embed(&poly(&[&[2, 0]]), &[v(&[1, 0])]).unwrap(), vec![q(2, 1)]);
        assert_eq!(support_embed(&tri, &[v(&[-1, 0])]).unwrap(), vec![q(0, 1)]);
        assert!(matches!(support_embed(&tri, &[v(&[0, 0])]), Err(Error::InvalidInput(_))));
        assert!(support_embed(&tri, &[v(&[1, 0, 0])]).is_err());

        let b = poly(&[&[2, 0]]);
        let j = hull_join(&tri, &b).unwrap();
        assert_eq!(SupportFunctionView::new(j).evaluate(&v(&[1, 0])).unwrap(), q(2, 1));
    }

    #[test]
    fn support_view_is_sublinear() {
        let view = SupportFunctionView::new(poly(&[&[0, 0], &[3, 1], &[-1, 2]]));
        let mut s = Sampler::new(4, 16);
        for _ in 0..50 {
            let u = s.vector(2, 3);
            let w = s.vector(2, 3);
            let k = s.nonneg(5);
            assert_eq!(view.evaluate(&u.scale(&k)).unwrap(), &k * view.evaluate(&u).unwrap());
            assert!(view.evaluate(&u.add(&w).unwrap()).unwrap() <= view.evaluate(&u).unwrap() + view.evaluate(&w).unwrap());
        }
    }

    #[test]
    fn grid_sizes() {
        assert_eq!(grid_directions(2).len(), 8);
        assert_eq!(grid_directions(3).len(), 14);
        let mut s = Sampler::new(0, 16);
        let dirs = probe_directions(3, 50, &mut s);
        assert_eq!(dirs.len(), 50);
        assert!(dirs.iter().all(|d| !d.is_zero()));
    }

    #[test]
    fn separating_directions() {
        let sq = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let tri = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        let u = separating_direction(&sq, &tri).unwrap().unwrap();
        assert_ne!(support(&sq, &u).unwrap(), support(&tri, &u).unwrap());
        assert_eq!(separating_direction(&sq, &sq).unwrap(), None);

        // Same support on every grid direction; needs a difference direction.
        let a = Polytope::point(QVector::new(vec![q(1, 3), q(1, 5), q(0, 1)]).unwrap());
        let b = canonicalize(&[v(&[0, 0, 0]), QVector::new(vec![q(2, 3), q(2, 5), q(0, 1)]).unwrap()]).unwrap();
        let u = separating_direction(&a, &b).unwrap().unwrap();
        assert_ne!(support(&a, &u).unwrap(), support(&b, &u).unwrap());

        let seg = canonicalize(&[v(&[0, 0, 0]), v(&[2, 0, 0])]).unwrap();
        let mid = Polytope::point(v(&[1, 0, 0]));
        assert!(lp_separator(&seg, &mid).unwrap().is_some());
        assert!(lp_separator(&mid, &seg).unwrap().is_none());
    }

    #[test]
    fn embedding_passes_and_mutant_fails() {
        for dim in [2, 3] {
            let ctx = EmbeddingCtx::new(dim);
            let r = check_embedding_homomorphism(&ctx, &LawConfig::new(8, 15).with_bound(16));
            assert!(r.passed, "{}", r.summary_line());
        }
        let bad = EmbeddingCtx { ops: EmbeddingOps { join: first_hull, ..EmbeddingOps::default() }, ..EmbeddingCtx::new(2) };
        let r = embedding_law().run(&bad, &LawConfig::new(8, 15).with_bound(16));
        assert!(!r.passed);
    }
}
