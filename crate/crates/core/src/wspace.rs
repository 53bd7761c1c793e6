//! Extension of a carrier's join to the linear subspace it generates.
//!
//! For a carrier `X` containing 0, `W` is the set of points `x` for which
//! some shift `P(c, p, x)` with `c ∈ X` and `p ∈ (0, 1]` lands in `X`. Every
//! membership claim is decided by exact LP, and every witness this module
//! hands out has been re-validated against the carrier first.

use serde::{Deserialize, Serialize};

use crate::algebra::{join, perspective, ConvexSemilattice, JoinKind, SemilatticeInstance};
use crate::error::{check_dim, Error, Result};
use crate::laws::{Check, Law, LawConfig, LawReport};
use crate::lp::{lp_solve, LinearProgram, LpOutcome};
use crate::numeric::{convex_combine, vector_cwise_sup, QVector, Rational};
use crate::sampler::Sampler;

/// A center in the carrier and a ratio in (0, 1] whose shift maps the
/// witnessed point into the carrier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub center: QVector,
    pub ratio: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WMembershipResult {
    pub member: bool,
    pub p_max: Option<Rational>,
    pub witness: Option<Witness>,
}

/// Result of `x1 ⊞ x2` together with the witness used to compute it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WJoin {
    pub result: QVector,
    pub witness: Witness,
}

/// True iff `w` is a witness for every point of `xs`.
pub fn witness_is_valid(inst: &SemilatticeInstance, xs: &[QVector], w: &Witness) -> Result<bool> {
    if !w.ratio.is_positive() || w.ratio > Rational::one() || !inst.contains(&w.center)? {
        return Ok(false);
    }
    for x in xs {
        if !inst.contains(&perspective(&w.center, &w.ratio, x)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn ensure_valid(inst: &SemilatticeInstance, xs: &[QVector], w: &Witness, what: &str) -> Result<()> {
    if witness_is_valid(inst, xs, w)? {
        Ok(())
    } else {
        Err(Error::Validation(format!("{what} produced an invalid witness {w:?}")))
    }
}

fn require_witness(inst: &SemilatticeInstance, x: &QVector, w: &Witness) -> Result<()> {
    if witness_is_valid(inst, std::slice::from_ref(x), w)? {
        Ok(())
    } else {
        Err(Error::Domain(format!("{w:?} does not witness {x}")))
    }
}

/// Decides `x ∈ W` and computes `p(x)`, the largest ratio over all centers.
///
/// With `d = (1−p)·c` the condition `p·x + (1−p)·c ∈ X` becomes linear:
/// maximize `p` subject to `p·x + Σμᵢvᵢ = Σλⱼvⱼ`, `p + Σμᵢ = 1`, `Σλⱼ = 1`
/// and all variables nonnegative, over the carrier vertices `v`.
pub fn w_membership(inst: &SemilatticeInstance, x: &QVector) -> Result<WMembershipResult> {
    check_dim(inst.dim(), x.dim())?;
    let vs = inst.carrier().vertices();
    let k = vs.len();
    let n = 1 + 2 * k;
    let mut objective = vec![Rational::zero(); n];
    objective[0] = Rational::one();
    let mut lp = LinearProgram::new(n).maximize(objective);
    for axis in 0..x.dim() {
        let mut row = Vec::with_capacity(n);
        row.push(x[axis].clone());
        row.extend(vs.iter().map(|v| v[axis].clone()));
        row.extend(vs.iter().map(|v| -&v[axis]));
        lp.add_eq(row, Rational::zero());
    }
    let mut mass = vec![Rational::one(); 1 + k];
    mass.resize(n, Rational::zero());
    lp.add_eq(mass, Rational::one());
    let mut simplex = vec![Rational::zero(); 1 + k];
    simplex.resize(n, Rational::one());
    lp.add_eq(simplex, Rational::one());

    let (p_max, point) = match lp_solve(&lp)? {
        LpOutcome::Optimal { value, point } => (value, point),
        other => {
            return Err(Error::Validation(format!("membership program was {}", other.status())));
        }
    };
    if !p_max.is_positive() {
        return Ok(WMembershipResult { member: false, p_max: None, witness: None });
    }
    let center = if p_max.is_one() {
        x.clone()
    } else {
        let mut d = QVector::zeros(x.dim());
        for (mu, v) in point[1..=k].iter().zip(vs) {
            if !mu.is_zero() {
                d = d.add(&v.scale(mu))?;
            }
        }
        d.scale(&p_max.complement().recip()?)
    };
    let witness = Witness { center, ratio: p_max.clone() };
    ensure_valid(inst, std::slice::from_ref(x), &witness, "w_membership")?;
    Ok(WMembershipResult { member: true, p_max: Some(p_max), witness: Some(witness) })
}

/// Largest ratio `p ∈ [0, 1]` with `P(center, p, x) ∈ X` for every `x` in
/// `xs`, for a fixed center. `None` when only `p = 0` works.
pub fn witness_at_center(inst: &SemilatticeInstance, xs: &[QVector], center: &QVector) -> Result<Option<Witness>> {
    if !inst.contains(center)? {
        return Err(Error::Domain(format!("center {center} is not in the carrier")));
    }
    let vs = inst.carrier().vertices();
    let k = vs.len();
    let n = 1 + k * xs.len();
    let mut objective = vec![Rational::zero(); n];
    objective[0] = Rational::one();
    let mut lp = LinearProgram::new(n).maximize(objective);
    lp.set_upper(0, Rational::one());
    for (i, x) in xs.iter().enumerate() {
        check_dim(inst.dim(), x.dim())?;
        let offset = 1 + i * k;
        // p·(x − c) − Σλv = −c
        for axis in 0..x.dim() {
            let mut row = vec![Rational::zero(); n];
            row[0] = &x[axis] - &center[axis];
            for (j, v) in vs.iter().enumerate() {
                row[offset + j] = -&v[axis];
            }
            lp.add_eq(row, -&center[axis]);
        }
        let mut row = vec![Rational::zero(); n];
        for entry in &mut row[offset..offset + k] {
            *entry = Rational::one();
        }
        lp.add_eq(row, Rational::one());
    }
    let ratio = match lp_solve(&lp)? {
        LpOutcome::Optimal { value, .. } => value,
        other => return Err(Error::Validation(format!("center program was {}", other.status()))),
    };
    if !ratio.is_positive() {
        return Ok(None);
    }
    let w = Witness { center: center.clone(), ratio };
    ensure_valid(inst, xs, &w, "witness_at_center")?;
    Ok(Some(w))
}

/// Probe of the shrink property: `P(c, q, x) ∈ X` for every `q ∈ (0, p(x))`.
pub fn monotone_shrink_check(
    inst: &SemilatticeInstance,
    x: &QVector,
    result: &WMembershipResult,
    q: &Rational,
) -> Result<bool> {
    let (Some(p_max), Some(w)) = (&result.p_max, &result.witness) else {
        return Err(Error::Domain("point is not a member of W".into()));
    };
    if !q.is_positive() || q >= p_max {
        return Err(Error::Domain(format!("q = {q} outside (0, {p_max})")));
    }
    inst.contains(&perspective(&w.center, q, x)?)
}

/// One witness shared by all of `xs`: the average of the individual centers,
/// with half the smallest ratio the averaging argument guarantees.
pub fn common_witness(inst: &SemilatticeInstance, xs: &[QVector]) -> Result<Witness> {
    if xs.is_empty() {
        return Err(Error::InvalidInput("common_witness needs at least one point".into()));
    }
    let mut individual = Vec::with_capacity(xs.len());
    for x in xs {
        match w_membership(inst, x)?.witness {
            Some(w) => individual.push(w),
            None => return Err(Error::Domain(format!("{x} is not a member of W"))),
        }
    }
    if individual.len() == 1 {
        return Ok(individual.pop().expect("one witness"));
    }

    let n = Rational::from(xs.len() as i64);
    let inv_n = n.recip()?;
    let mut center = QVector::zeros(inst.dim());
    for w in &individual {
        center = center.add(&w.center.scale(&inv_n))?;
    }
    // Ratio p_i·(1 − t)/(1 − p_i·t) with t = (n−1)/n.
    let t = inv_n.complement();
    let mut bound: Option<Rational> = None;
    for w in &individual {
        let r = (&w.ratio * t.complement()).checked_div(&(&w.ratio * &t).complement())?;
        if bound.as_ref().map_or(true, |b| r < *b) {
            bound = Some(r);
        }
    }
    let ratio = bound.expect("at least two witnesses") * Rational::new(1, 2)?;
    let w = Witness { center, ratio };
    ensure_valid(inst, xs, &w, "common_witness")?;
    Ok(w)
}

/// Witness for `q·x`, `q > 1`, from a witness `(c, p)` for `x`: center
/// `P(0, (1−p)/(1−p/q), c)` and ratio `p/q`.
pub fn w_scale_witness(inst: &SemilatticeInstance, x: &QVector, q: &Rational, w: &Witness) -> Result<Witness> {
    if *q <= Rational::one() {
        return Err(Error::Domain(format!("scale factor {q} must exceed 1")));
    }
    require_witness(inst, x, w)?;
    let ratio = w.ratio.checked_div(q)?;
    let k = w.ratio.complement().checked_div(&ratio.complement())?;
    let center = perspective(&QVector::zeros(inst.dim()), &k, &w.center)?;
    let out = Witness { center, ratio };
    ensure_valid(inst, &[x.scale(q)], &out, "w_scale_witness")?;
    Ok(out)
}

/// Witness for `−x` from a witness `(c, p)` for `x`: center `P(c, p, x)` and
/// ratio `p/(1+p)`. A ratio of 1 is first halved, which keeps the witness
/// valid by the shrink property.
pub fn w_negate_witness(inst: &SemilatticeInstance, x: &QVector, w: &Witness) -> Result<Witness> {
    require_witness(inst, x, w)?;
    let p = if w.ratio.is_one() { Rational::new(1, 2)? } else { w.ratio.clone() };
    let center = perspective(&w.center, &p, x)?;
    let ratio = p.checked_div(&(Rational::one() + &p))?;
    let out = Witness { center, ratio };
    ensure_valid(inst, &[x.neg()], &out, "w_negate_witness")?;
    Ok(out)
}

/// Moves a shared witness `(c, p)` toward `d ∈ X`: center `P(c, r, d)` and
/// ratio `p(1−r)/(1−pr)`, for `r ∈ (0, 1)`.
pub fn reanchor_witness(
    inst: &SemilatticeInstance,
    xs: &[QVector],
    w: &Witness,
    d: &QVector,
    r: &Rational,
) -> Result<Witness> {
    if !r.is_positive() || *r >= Rational::one() {
        return Err(Error::Domain(format!("r = {r} outside (0, 1)")));
    }
    if !inst.contains(d)? {
        return Err(Error::Domain(format!("{d} is not in the carrier")));
    }
    let center = perspective(&w.center, r, d)?;
    let ratio = (&w.ratio * r.complement()).checked_div(&(&w.ratio * r).complement())?;
    let out = Witness { center, ratio };
    ensure_valid(inst, xs, &out, "reanchor_witness")?;
    Ok(out)
}

/// `x1 ⊞ x2 = P(c, 1/p, P(c,p,x1) ⊕ P(c,p,x2))` for a given shared witness.
pub fn w_join_with(inst: &SemilatticeInstance, x1: &QVector, x2: &QVector, w: &Witness) -> Result<QVector> {
    if !witness_is_valid(inst, &[x1.clone(), x2.clone()], w)? {
        return Err(Error::Domain(format!("{w:?} does not witness both points")));
    }
    let a = perspective(&w.center, &w.ratio, x1)?;
    let b = perspective(&w.center, &w.ratio, x2)?;
    let joined = join(inst, &a, &b)?;
    perspective(&w.center, &w.ratio.recip()?, &joined)
}

/// `x1 ⊞ x2` using [`common_witness`].
pub fn w_join(inst: &SemilatticeInstance, x1: &QVector, x2: &QVector) -> Result<WJoin> {
    let witness = common_witness(inst, &[x1.clone(), x2.clone()])?;
    let result = w_join_with(inst, x1, x2, &witness)?;
    Ok(WJoin { result, witness })
}

/// `W` with `⊞`, as a convex semilattice for the generic checkers. Sampled
/// elements are `λ·x − μ·y` for carrier points `x, y`; base elements are
/// carrier points.
#[derive(Clone, Debug)]
pub struct WSpace<'a> {
    pub inst: &'a SemilatticeInstance,
}

/// Bound on the coefficients λ, μ of sampled W-points.
const W_SCALE: i64 = 3;

pub fn sample_w_point(inst: &SemilatticeInstance, s: &mut Sampler) -> Result<QVector> {
    let x = s.point_in(inst.carrier());
    let y = s.point_in(inst.carrier());
    let point = x.scale(&s.nonneg(W_SCALE)).sub(&y.scale(&s.nonneg(W_SCALE)))?;
    if !w_membership(inst, &point)?.member {
        return Err(Error::Validation(format!("sampled point {point} is not in W")));
    }
    Ok(point)
}

impl ConvexSemilattice for WSpace<'_> {
    type Elem = QVector;

    fn sample(&self, s: &mut Sampler) -> Result<QVector> {
        sample_w_point(self.inst, s)
    }

    fn sample_base(&self, s: &mut Sampler) -> Result<QVector> {
        Ok(s.point_in(self.inst.carrier()))
    }

    fn combine(&self, x: &QVector, y: &QVector, p: &Rational) -> Result<QVector> {
        convex_combine(x, y, p)
    }

    fn join(&self, x: &QVector, y: &QVector) -> Result<QVector> {
        Ok(w_join(self.inst, x, y)?.result)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WCase {
    pub x: QVector,
    pub y: QVector,
    pub z: QVector,
    /// Carrier point.
    pub d: QVector,
    pub p: Rational,
    pub q: Rational,
}

fn draw_w_case<M: ConvexSemilattice<Elem = QVector>>(m: &M, s: &mut Sampler) -> Result<Option<WCase>> {
    Ok(Some(WCase {
        x: m.sample(s)?,
        y: m.sample(s)?,
        z: m.sample(s)?,
        d: m.sample_base(s)?,
        p: s.unit_open(),
        q: s.unit_open(),
    }))
}

fn ext_idempotence<M: ConvexSemilattice<Elem = QVector>>(m: &M, k: &WCase) -> Result<Check> {
    Ok(Check::equal(&m.join(&k.x, &k.x)?, &k.x))
}

fn ext_commutativity<M: ConvexSemilattice<Elem = QVector>>(m: &M, k: &WCase) -> Result<Check> {
    Ok(Check::equal(&m.join(&k.x, &k.y)?, &m.join(&k.y, &k.x)?))
}

fn ext_associativity<M: ConvexSemilattice<Elem = QVector>>(m: &M, k: &WCase) -> Result<Check> {
    let lhs = m.join(&m.join(&k.x, &k.y)?, &k.z)?;
    let rhs = m.join(&k.x, &m.join(&k.y, &k.z)?)?;
    Ok(Check::equal(&lhs, &rhs))
}

/// `(x ⊞ y) +_q d = (x +_q d) ⊞ (y +_q d)` with `d` in the carrier.
fn ext_carrier_distributivity<M: ConvexSemilattice<Elem = QVector>>(m: &M, k: &WCase) -> Result<Check> {
    let lhs = m.combine(&m.join(&k.x, &k.y)?, &k.d, &k.q)?;
    let rhs = m.join(&m.combine(&k.x, &k.d, &k.q)?, &m.combine(&k.y, &k.d, &k.q)?)?;
    Ok(Check::equal(&lhs, &rhs))
}

/// `(x ⊞ y) +_p z = (x +_p z) ⊞ (y +_p z)` with `z ∈ W`.
fn ext_full_distributivity<M: ConvexSemilattice<Elem = QVector>>(m: &M, k: &WCase) -> Result<Check> {
    let lhs = m.combine(&m.join(&k.x, &k.y)?, &k.z, &k.p)?;
    let rhs = m.join(&m.combine(&k.x, &k.z, &k.p)?, &m.combine(&k.y, &k.z, &k.p)?)?;
    Ok(Check::equal(&lhs, &rhs))
}

pub fn w_axioms_law<M: ConvexSemilattice<Elem = QVector>>() -> Law<M, WCase> {
    Law::new("w-axioms", draw_w_case::<M>)
        .identity("idempotence", ext_idempotence::<M>)
        .identity("commutativity", ext_commutativity::<M>)
        .identity("associativity", ext_associativity::<M>)
        .identity("carrier-distributivity", ext_carrier_distributivity::<M>)
        .identity("full-distributivity", ext_full_distributivity::<M>)
}

/// Semilattice laws and both distributivity laws for `⊞` on sampled W-points.
pub fn verify_w_axioms(inst: &SemilatticeInstance, cfg: &LawConfig) -> LawReport {
    w_axioms_law::<WSpace<'_>>().run(&WSpace { inst }, cfg)
}

/// Same laws against any model over vectors; used with mutated models.
pub fn check_w_axioms_on<M: ConvexSemilattice<Elem = QVector>>(m: &M, cfg: &LawConfig) -> LawReport {
    w_axioms_law::<M>().run(m, cfg)
}

fn w_oracle(inst: &SemilatticeInstance, k: &WCase) -> Result<Check> {
    match inst.join_kind() {
        JoinKind::ComponentwiseMax => {
            Ok(Check::equal(&w_join(inst, &k.x, &k.y)?.result, &vector_cwise_sup(&k.x, &k.y)?))
        }
    }
}

/// Builds a second witness at a random center near the carrier's vertex
/// average, independent of [`common_witness`].
fn independent_witness(inst: &SemilatticeInstance, k: &WCase) -> Result<Option<Witness>> {
    let vs = inst.carrier().vertices();
    let inv = Rational::from(vs.len() as i64).recip()?;
    let mut centroid = QVector::zeros(inst.dim());
    for v in vs {
        centroid = centroid.add(&v.scale(&inv))?;
    }
    let center = convex_combine(&k.d, &centroid, &k.p)?;
    let pts = [k.x.clone(), k.y.clone()];
    Ok(witness_at_center(inst, &pts, &center)?.map(|w| Witness { ratio: &w.ratio * &k.q, ..w }))
}

fn w_well_defined(inst: &SemilatticeInstance, k: &WCase) -> Result<Check> {
    let first = w_join(inst, &k.x, &k.y)?;
    let Some(second) = independent_witness(inst, k)? else {
        return Ok(Check::Holds);
    };
    let other = w_join_with(inst, &k.x, &k.y, &second)?;
    Ok(Check::equal(&first.result, &other))
}

fn w_well_defined_reanchored(inst: &SemilatticeInstance, k: &WCase) -> Result<Check> {
    let first = w_join(inst, &k.x, &k.y)?;
    let pts = [k.x.clone(), k.y.clone()];
    let moved = reanchor_witness(inst, &pts, &first.witness, &k.d, &k.q)?;
    Ok(Check::equal(&first.result, &w_join_with(inst, &k.x, &k.y, &moved)?))
}

fn member(inst: &SemilatticeInstance, x: &QVector) -> Result<bool> {
    Ok(w_membership(inst, x)?.member)
}

fn closure_combination(inst: &SemilatticeInstance, k: &WCase) -> Result<Check> {
    let c = convex_combine(&k.x, &k.y, &k.q)?;
    Ok(Check::equal(&member(inst, &c)?, &true))
}

fn closure_scaling(inst: &SemilatticeInstance, k: &WCase) -> Result<Check> {
    // p ∈ (0, 1) and 1/p > 1 cover both branches.
    let small = k.x.scale(&k.p);
    let large = k.x.scale(&k.p.recip()?);
    Ok(Check::equal(&(member(inst, &small)?, member(inst, &large)?), &(true, true)))
}

fn closure_scaling_witness(inst: &SemilatticeInstance, k: &WCase) -> Result<Check> {
    let factor = k.p.recip()?;
    let w = w_membership(inst, &k.x)?.witness.ok_or_else(|| Error::Validation("sample left W".into()))?;
    let scaled = w_scale_witness(inst, &k.x, &factor, &w)?;
    let valid = witness_is_valid(inst, &[k.x.scale(&factor)], &scaled)?;
    Ok(Check::equal(&valid, &true))
}

fn closure_negation(inst: &SemilatticeInstance, k: &WCase) -> Result<Check> {
    let w = w_membership(inst, &k.x)?.witness.ok_or_else(|| Error::Validation("sample left W".into()))?;
    let neg = w_negate_witness(inst, &k.x, &w)?;
    let valid = witness_is_valid(inst, &[k.x.neg()], &neg)?;
    Ok(Check::equal(&(member(inst, &k.x.neg())?, valid), &(true, true)))
}

fn restriction(inst: &SemilatticeInstance, k: &WCase) -> Result<Check> {
    // `d` and `z` are replaced by carrier points in the restriction draw.
    Ok(Check::equal(&w_join(inst, &k.d, &k.z)?.result, &join(inst, &k.d, &k.z)?))
}

fn p_max_shrink(inst: &SemilatticeInstance, k: &WCase) -> Result<Check> {
    let res = w_membership(inst, &k.x)?;
    let p_max = res.p_max.clone().ok_or_else(|| Error::Validation("sample left W".into()))?;
    let mut probes = vec![&p_max * Rational::new(1, 2)?, &p_max * &k.q];
    let near = &p_max - Rational::new(1, 1000)?;
    if near.is_positive() {
        probes.push(near);
    }
    for q in &probes {
        if !monotone_shrink_check(inst, &k.x, &res, q)? {
            return Ok(Check::violated(q, &p_max));
        }
    }
    Ok(Check::Holds)
}

fn p_max_attained_at_center(inst: &SemilatticeInstance, k: &WCase) -> Result<Check> {
    let res = w_membership(inst, &k.x)?;
    let w = res.witness.ok_or_else(|| Error::Validation("sample left W".into()))?;
    let at_center = witness_at_center(inst, std::slice::from_ref(&k.x), &w.center)?.map(|w| w.ratio);
    Ok(Check::equal(&at_center, &res.p_max))
}

/// `P(P(c,r,d), p(1−r)/(1−pr), x) ∈ X`.
fn reanchor_stays_inside(inst: &SemilatticeInstance, k: &WCase) -> Result<Check> {
    let w = w_membership(inst, &k.x)?.witness.ok_or_else(|| Error::Validation("sample left W".into()))?;
    let center = perspective(&w.center, &k.q, &k.d)?;
    let ratio = (&w.ratio * k.q.complement()).checked_div(&(&w.ratio * &k.q).complement())?;
    Ok(Check::equal(&inst.contains(&perspective(&center, &ratio, &k.x)?)?, &true))
}

fn draw_carrier_case(m: &SemilatticeInstance, s: &mut Sampler) -> Result<Option<WCase>> {
    let ws = WSpace { inst: m };
    let mut case = draw_w_case(&ws, s)?.expect("always drawn");
    case.z = s.point_in(m.carrier());
    Ok(Some(case))
}

fn draw_instance_w_case(m: &SemilatticeInstance, s: &mut Sampler) -> Result<Option<WCase>> {
    draw_w_case(&WSpace { inst: m }, s)
}

pub fn w_oracle_law() -> Law<SemilatticeInstance, WCase> {
    Law::new("w-oracle", draw_instance_w_case).identity("agrees-with-componentwise-max", w_oracle)
}

pub fn w_well_defined_law() -> Law<SemilatticeInstance, WCase> {
    Law::new("w-well-defined", draw_instance_w_case)
        .identity("independent-center", w_well_defined)
        .identity("reanchored-center", w_well_defined_reanchored)
}

pub fn w_closure_law() -> Law<SemilatticeInstance, WCase> {
    Law::new("w-closure", draw_instance_w_case)
        .identity("convex-combination", closure_combination)
        .identity("nonneg-scaling", closure_scaling)
        .identity("scaling-witness", closure_scaling_witness)
        .identity("negation", closure_negation)
}

pub fn w_restriction_law() -> Law<SemilatticeInstance, WCase> {
    Law::new("w-restriction", draw_carrier_case).identity("extends-join", restriction)
}

pub fn w_p_max_law() -> Law<SemilatticeInstance, WCase> {
    Law::new("w-p-max", draw_instance_w_case)
        .identity("shrink-stays-inside", p_max_shrink)
        .identity("attained-at-center", p_max_attained_at_center)
        .identity("reanchor-stays-inside", reanchor_stays_inside)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::q;
    use crate::polytope::{canonicalize, Polytope};

    fn v(c: &[i64]) -> QVector {
        QVector::from_ints(c)
    }

    fn vq(c: &[(i64, i64)]) -> QVector {
        QVector::new(c.iter().map(|&(n, d)| q(n, d)).collect()).unwrap()
    }

    fn square() -> SemilatticeInstance {
        SemilatticeInstance::unit_cube(2)
    }

    fn segment() -> SemilatticeInstance {
        let seg = canonicalize(&[v(&[0, 0]), v(&[1, 0])]).unwrap();
        SemilatticeInstance::new(seg, JoinKind::ComponentwiseMax).unwrap()
    }

    #[test]
    fn membership_examples() {
        let r = w_membership(&square(), &v(&[2, 2])).unwrap();
        assert!(r.member);
        assert_eq!(r.p_max, Some(q(1, 2)));
        assert_eq!(r.witness.unwrap().center, v(&[0, 0]));

        let r = w_membership(&segment(), &v(&[0, 1])).unwrap();
        assert_eq!(r, WMembershipResult { member: false, p_max: None, witness: None });

        let x = vq(&[(1, 3), (5, 6)]);
        let r = w_membership(&square(), &x).unwrap();
        assert_eq!(r.p_max, Some(q(1, 1)));
        assert_eq!(r.witness.unwrap(), Witness { center: x, ratio: q(1, 1) });

        assert!(w_membership(&square(), &v(&[1])).is_err());
    }

    #[test]
    fn shrink_examples() {
        let sq = square();
        let x = v(&[2, 2]);
        let r = w_membership(&sq, &x).unwrap();
        assert!(monotone_shrink_check(&sq, &x, &r, &q(1, 4)).unwrap());
        assert!(monotone_shrink_check(&sq, &x, &r, &q(499, 1000)).unwrap());
        assert!(monotone_shrink_check(&sq, &x, &r, &q(1, 2)).is_err());
        assert!(monotone_shrink_check(&sq, &x, &r, &q(0, 1)).is_err());
        let outside = w_membership(&segment(), &v(&[0, 1])).unwrap();
        assert!(monotone_shrink_check(&segment(), &v(&[0, 1]), &outside, &q(1, 4)).is_err());
    }

    #[test]
    fn common_witness_examples() {
        let sq = square();
        let w = common_witness(&sq, &[v(&[2, 0]), v(&[0, 2])]).unwrap();
        // Individual witnesses have ratio 1/2; shared bound (1/2)/(2 − 1/2) = 1/3, halved.
        assert_eq!(w.ratio, q(1, 6));
        for x in [v(&[2, 0]), v(&[0, 2])] {
            assert!(sq.contains(&perspective(&w.center, &w.ratio, &x).unwrap()).unwrap());
        }

        let single = common_witness(&sq, &[v(&[2, 2])]).unwrap();
        assert_eq!(single, w_membership(&sq, &v(&[2, 2])).unwrap().witness.unwrap());

        let inside = [vq(&[(1, 2), (0, 1)]), vq(&[(1, 4), (3, 4)]), v(&[1, 1])];
        let w = common_witness(&sq, &inside).unwrap();
        assert_eq!(w.ratio, q(1, 2));
        let avg = vq(&[(7, 12), (7, 12)]);
        assert_eq!(w.center, avg);

        assert!(matches!(common_witness(&segment(), &[v(&[0, 1])]), Err(Error::Domain(_))));
        assert!(common_witness(&sq, &[]).is_err());
    }

    #[test]
    fn scale_witness_examples() {
        let sq = square();
        let w = w_scale_witness(&sq, &v(&[1, 1]), &q(2, 1), &Witness { center: v(&[0, 0]), ratio: q(1, 1) }).unwrap();
        assert_eq!(w, Witness { center: v(&[0, 0]), ratio: q(1, 2) });

        let w = w_scale_witness(&sq, &v(&[1, 1]), &q(3, 2), &Witness { center: v(&[1, 0]), ratio: q(1, 1) }).unwrap();
        assert_eq!(w.ratio, q(2, 3));

        let zero = v(&[0, 0]);
        let w0 = Witness { center: vq(&[(1, 2), (1, 2)]), ratio: q(1, 3) };
        let w = w_scale_witness(&sq, &zero, &q(5, 1), &w0).unwrap();
        assert_eq!(w.ratio, q(1, 15));

        let bad = Witness { center: v(&[0, 0]), ratio: q(1, 1) };
        assert!(w_scale_witness(&sq, &v(&[2, 2]), &q(2, 1), &bad).is_err());
        assert!(w_scale_witness(&sq, &v(&[1, 1]), &q(1, 1), &bad).is_err());
    }

    #[test]
    fn negate_witness_examples() {
        let sq = square();
        let w = w_negate_witness(&sq, &v(&[2, 2]), &Witness { center: v(&[0, 0]), ratio: q(1, 2) }).unwrap();
        assert_eq!(w, Witness { center: v(&[1, 1]), ratio: q(1, 3) });
        assert_eq!(perspective(&w.center, &w.ratio, &v(&[-2, -2])).unwrap(), v(&[0, 0]));

        let c = vq(&[(1, 4), (1, 4)]);
        let w = w_negate_witness(&sq, &v(&[0, 0]), &Witness { center: c.clone(), ratio: q(1, 2) }).unwrap();
        assert_eq!(w.ratio, q(1, 3));

        let seg = segment();
        let w0 = Witness { center: vq(&[(1, 4), (0, 1)]), ratio: q(1, 2) };
        let w = w_negate_witness(&seg, &vq(&[(1, 2), (0, 1)]), &w0).unwrap();
        assert!(witness_is_valid(&seg, &[vq(&[(-1, 2), (0, 1)])], &w).unwrap());

        // Ratio one is shrunk first.
        let w = w_negate_witness(&sq, &v(&[1, 1]), &Witness { center: v(&[1, 1]), ratio: q(1, 1) }).unwrap();
        assert_eq!(w.ratio, q(1, 3));
    }

    #[test]
    fn join_examples() {
        let sq = square();
        let (a, b) = (v(&[2, 0]), v(&[0, 2]));
        assert_eq!(w_join(&sq, &a, &b).unwrap().result, v(&[2, 2]));
        let w1 = Witness { center: v(&[0, 0]), ratio: q(1, 2) };
        assert_eq!(w_join_with(&sq, &a, &b, &w1).unwrap(), v(&[2, 2]));
        let w2 = Witness { center: vq(&[(1, 2), (1, 2)]), ratio: q(1, 4) };
        assert_eq!(perspective(&w2.center, &w2.ratio, &a).unwrap(), vq(&[(7, 8), (3, 8)]));
        assert_eq!(w_join_with(&sq, &a, &b, &w2).unwrap(), v(&[2, 2]));
        let (x, y) = (vq(&[(1, 2), (0, 1)]), vq(&[(1, 4), (1, 4)]));
        assert_eq!(w_join(&sq, &x, &y).unwrap().result, join(&sq, &x, &y).unwrap());
        assert!(w_join(&segment(), &v(&[0, 1]), &v(&[0, 0])).is_err());
    }

    #[test]
    fn singleton_carrier_has_trivial_w() {
        let zero = SemilatticeInstance::new(Polytope::point(QVector::zeros(2)), JoinKind::ComponentwiseMax).unwrap();
        assert!(!w_membership(&zero, &v(&[1, 0])).unwrap().member);
        let r = verify_w_axioms(&zero, &LawConfig::new(1, 10));
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn square_suite_small() {
        let sq = square();
        let cfg = LawConfig::new(2, 30);
        let r = verify_w_axioms(&sq, &cfg);
        assert!(r.passed, "{r:?}");
        for law in [w_oracle_law(), w_well_defined_law(), w_closure_law(), w_restriction_law(), w_p_max_law()] {
            let r = law.run(&sq, &cfg);
            assert!(r.passed, "{r:?}");
        }
    }
}
