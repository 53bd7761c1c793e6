//! Axiom checkers for any [`ConvexSemilattice`].

use serde::{Deserialize, Serialize};

use super::model::ConvexSemilattice;
use crate::error::Result;
use crate::laws::{Check, Law, LawConfig, LawReport};
use crate::numeric::Rational;
use crate::sampler::Sampler;

/// Three elements and two weights in (0, 1).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Triple<E> {
    pub x: E,
    pub y: E,
    pub z: E,
    pub p: Rational,
    pub q: Rational,
}

fn draw_triple<M: ConvexSemilattice>(m: &M, s: &mut Sampler) -> Result<Option<Triple<M::Elem>>> {
    Ok(Some(Triple { x: m.sample(s)?, y: m.sample(s)?, z: m.sample(s)?, p: s.unit_open(), q: s.unit_open() }))
}

fn draw_distinct<M: ConvexSemilattice>(m: &M, s: &mut Sampler) -> Result<Option<Triple<M::Elem>>> {
    let t = draw_triple(m, s)?;
    Ok(t.filter(|t| t.x != t.y))
}

/// Draws until the premise `x +_p z ≤ y +_p z` holds. Half of the draws set
/// `y = x ⊕ w` so comparable pairs are common.
fn draw_order_premise<M: ConvexSemilattice>(m: &M, s: &mut Sampler) -> Result<Option<Triple<M::Elem>>> {
    let mut t = draw_triple(m, s)?.expect("always drawn");
    if s.chance(1, 2) {
        t.y = m.join(&t.x, &t.y)?;
    }
    let lhs = m.combine(&t.x, &t.z, &t.p)?;
    let rhs = m.combine(&t.y, &t.z, &t.p)?;
    Ok(if m.leq(&lhs, &rhs)? { Some(t) } else { None })
}

fn combine_idempotence<M: ConvexSemilattice>(m: &M, k: &Triple<M::Elem>) -> Result<Check> {
    Ok(Check::equal(&m.combine(&k.x, &k.x, &k.p)?, &k.x))
}

fn combine_commutativity<M: ConvexSemilattice>(m: &M, k: &Triple<M::Elem>) -> Result<Check> {
    Ok(Check::equal(&m.combine(&k.x, &k.y, &k.p)?, &m.combine(&k.y, &k.x, &k.p.complement())?))
}

/// `(x +_p y) +_q z = x +_{pq} (y +_{(1−p)q/(1−pq)} z)`.
fn combine_associativity<M: ConvexSemilattice>(m: &M, k: &Triple<M::Elem>) -> Result<Check> {
    let pq = &k.p * &k.q;
    let inner_weight = (k.p.complement() * &k.q).checked_div(&pq.complement())?;
    let lhs = m.combine(&m.combine(&k.x, &k.y, &k.p)?, &k.z, &k.q)?;
    let rhs = m.combine(&k.x, &m.combine(&k.y, &k.z, &inner_weight)?, &pq)?;
    Ok(Check::equal(&lhs, &rhs))
}

fn join_idempotence<M: ConvexSemilattice>(m: &M, k: &Triple<M::Elem>) -> Result<Check> {
    Ok(Check::equal(&m.join(&k.x, &k.x)?, &k.x))
}

fn join_commutativity<M: ConvexSemilattice>(m: &M, k: &Triple<M::Elem>) -> Result<Check> {
    Ok(Check::equal(&m.join(&k.x, &k.y)?, &m.join(&k.y, &k.x)?))
}

fn join_associativity<M: ConvexSemilattice>(m: &M, k: &Triple<M::Elem>) -> Result<Check> {
    let lhs = m.join(&m.join(&k.x, &k.y)?, &k.z)?;
    let rhs = m.join(&k.x, &m.join(&k.y, &k.z)?)?;
    Ok(Check::equal(&lhs, &rhs))
}

/// `(x ⊕ y) +_p z = (x +_p z) ⊕ (y +_p z)`.
fn distributivity<M: ConvexSemilattice>(m: &M, k: &Triple<M::Elem>) -> Result<Check> {
    let lhs = m.combine(&m.join(&k.x, &k.y)?, &k.z, &k.p)?;
    let rhs = m.join(&m.combine(&k.x, &k.z, &k.p)?, &m.combine(&k.y, &k.z, &k.p)?)?;
    Ok(Check::equal(&lhs, &rhs))
}

fn cancellation<M: ConvexSemilattice>(m: &M, k: &Triple<M::Elem>) -> Result<Check> {
    Ok(Check::distinct(&m.combine(&k.x, &k.z, &k.p)?, &m.combine(&k.y, &k.z, &k.p)?))
}

/// Conclusion of order cancellation: `x ≤ y`, i.e. `x ⊕ y = y`.
fn order_cancellation<M: ConvexSemilattice>(m: &M, k: &Triple<M::Elem>) -> Result<Check> {
    Ok(Check::equal(&m.join(&k.x, &k.y)?, &k.y))
}

/// `P(c,p,x) +_q P(c,p,y) = P(c,p, x +_q y)`, with `c = z`.
fn shift_preserves_combine<M: ConvexSemilattice>(m: &M, k: &Triple<M::Elem>) -> Result<Check> {
    let (c, p, q) = (&k.z, &k.p, &k.q);
    let lhs = m.combine(&m.shift(c, p, &k.x)?, &m.shift(c, p, &k.y)?, q)?;
    let rhs = m.shift(c, p, &m.combine(&k.x, &k.y, q)?)?;
    Ok(Check::equal(&lhs, &rhs))
}

/// `P(c,p,x) ⊕ P(c,p,y) = P(c,p, x ⊕ y)`, with `c = z`.
fn shift_preserves_join<M: ConvexSemilattice>(m: &M, k: &Triple<M::Elem>) -> Result<Check> {
    let (c, p) = (&k.z, &k.p);
    let lhs = m.join(&m.shift(c, p, &k.x)?, &m.shift(c, p, &k.y)?)?;
    let rhs = m.shift(c, p, &m.join(&k.x, &k.y)?)?;
    Ok(Check::equal(&lhs, &rhs))
}

pub fn convex_axioms_law<M: ConvexSemilattice>() -> Law<M, Triple<M::Elem>> {
    Law::new("convex-axioms", draw_triple::<M>)
        .identity("idempotence", combine_idempotence::<M>)
        .identity("parametric-commutativity", combine_commutativity::<M>)
        .identity("parametric-associativity", combine_associativity::<M>)
}

pub fn semilattice_axioms_law<M: ConvexSemilattice>() -> Law<M, Triple<M::Elem>> {
    Law::new("semilattice-axioms", draw_triple::<M>)
        .identity("idempotence", join_idempotence::<M>)
        .identity("commutativity", join_commutativity::<M>)
        .identity("associativity", join_associativity::<M>)
}

pub fn distributivity_law<M: ConvexSemilattice>() -> Law<M, Triple<M::Elem>> {
    Law::new("distributivity", draw_triple::<M>).identity("join-over-combine", distributivity::<M>)
}

pub fn cancellativity_law<M: ConvexSemilattice>() -> Law<M, Triple<M::Elem>> {
    Law::new("cancellativity", draw_distinct::<M>).identity("distinct-stays-distinct", cancellation::<M>)
}

pub fn order_cancellation_law<M: ConvexSemilattice>() -> Law<M, Triple<M::Elem>> {
    Law::new("order-cancellation", draw_order_premise::<M>).identity("order-reflected", order_cancellation::<M>)
}

pub fn perspective_homomorphism_law<M: ConvexSemilattice>() -> Law<M, Triple<M::Elem>> {
    Law::new("perspective-homomorphism", draw_triple::<M>)
        .identity("preserves-combine", shift_preserves_combine::<M>)
        .identity("preserves-join", shift_preserves_join::<M>)
}

pub fn check_convex_axioms<M: ConvexSemilattice>(m: &M, cfg: &LawConfig) -> LawReport {
    convex_axioms_law::<M>().run(m, cfg)
}

pub fn check_semilattice_axioms<M: ConvexSemilattice>(m: &M, cfg: &LawConfig) -> LawReport {
    semilattice_axioms_law::<M>().run(m, cfg)
}

pub fn check_distributivity<M: ConvexSemilattice>(m: &M, cfg: &LawConfig) -> LawReport {
    distributivity_law::<M>().run(m, cfg)
}

pub fn check_cancellativity<M: ConvexSemilattice>(m: &M, cfg: &LawConfig) -> LawReport {
    cancellativity_law::<M>().run(m, cfg)
}

pub fn check_order_cancellation<M: ConvexSemilattice>(m: &M, cfg: &LawConfig) -> LawReport {
    order_cancellation_law::<M>().run(m, cfg)
}

pub fn check_perspective_homomorphism<M: ConvexSemilattice>(m: &M, cfg: &LawConfig) -> LawReport {
    perspective_homomorphism_law::<M>().run(m, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::model::{Mutated, Mutation, PolytopeModel, SemilatticeInstance};
    use crate::algebra::JoinKind;
    use crate::numeric::{q, QVector};
    use crate::polytope::Polytope;

    fn cfg(cases: usize) -> LawConfig {
        LawConfig::new(5, cases)
    }

    #[test]
    fn square_passes_everything() {
        let sq = SemilatticeInstance::unit_cube(2);
        let c = cfg(200);
        for r in [
            check_convex_axioms(&sq, &c),
            check_semilattice_axioms(&sq, &c),
            check_distributivity(&sq, &c),
            check_cancellativity(&sq, &c),
            check_order_cancellation(&sq, &c),
            check_perspective_homomorphism(&sq, &c),
        ] {
            assert!(r.passed, "{}", r.summary_line());
            assert_eq!(r.cases, 200, "{}", r.summary_line());
        }
    }

    #[test]
    fn singleton_carrier_is_trivial() {
        let zero = SemilatticeInstance::new(Polytope::point(QVector::zeros(2)), JoinKind::ComponentwiseMax).unwrap();
        let c = cfg(20);
        assert!(check_convex_axioms(&zero, &c).passed);
        assert!(check_semilattice_axioms(&zero, &c).passed);
        let r = check_cancellativity(&zero, &c);
        assert!(r.passed);
        assert_eq!((r.cases, r.skipped), (0, 20));
    }

    #[test]
    fn mutations_are_caught() {
        let sq = SemilatticeInstance::unit_cube(2);
        let anchor = QVector::new(vec![q(1, 2), q(1, 2)]).unwrap();
        let c = cfg(50);
        let squared = Mutated::new(sq.clone(), Mutation::SquaredWeight);
        assert!(!check_convex_axioms(&squared, &c).passed);
        let left = Mutated::new(sq.clone(), Mutation::LeftJoin);
        assert!(!check_semilattice_axioms(&left, &c).passed);
        let anchored = Mutated::new(sq.clone(), Mutation::AnchoredJoin(anchor));
        assert!(!check_distributivity(&anchored, &c).passed);
        assert!(!check_perspective_homomorphism(&anchored, &c).passed);
        let collapse = Mutated::new(sq, Mutation::CollapseCombine);
        assert!(!check_cancellativity(&collapse, &c).passed);
        assert!(!check_order_cancellation(&collapse, &c).passed);
    }

    #[test]
    fn polytope_model_is_cancellative() {
        let m = PolytopeModel::new(2);
        let r = check_cancellativity(&m, &cfg(30));
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn polytope_model_endpoints() {
        // Endpoint weights are excluded from random draws; cover them here.
        let m = PolytopeModel::new(2);
        let mut s = Sampler::new(9, 16);
        let a = m.sample(&mut s).unwrap();
        let b = m.sample(&mut s).unwrap();
        assert_eq!(m.combine(&a, &b, &q(1, 1)).unwrap(), a);
        assert_eq!(m.combine(&a, &b, &q(0, 1)).unwrap(), b);
        assert_eq!(m.shift(&a, &q(0, 1), &b).unwrap(), a);
    }
}
