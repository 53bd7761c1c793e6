//! Perspective shifts `P(c, p, x) = p·x + (1−p)·c` and the parameter
//! identities that let two shifts be reordered or merged.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laws::{Check, Law, LawConfig, LawReport};
use crate::numeric::{vector_linear, QVector, Rational};
use crate::sampler::Sampler;

/// Shift with center `c` and ratio `p`; `p` may be any rational.
pub fn perspective(c: &QVector, p: &Rational, x: &QVector) -> Result<QVector> {
    vector_linear(p, x, &p.complement(), c)
}

/// Ratios `(r, s)` with `P(d,r,·)∘P(c,p,·) = P(c,s,·)∘P(d,q,·)` for all
/// centers: `r = q/(p+q−pq)`, `s = p/(p+q−pq)`. Requires `(1−p)(1−q) ≠ 1`.
pub fn solve_swap_params(p: &Rational, q: &Rational) -> Result<(Rational, Rational)> {
    let den = p + q - p * q;
    if den.is_zero() {
        return Err(Error::Domain(format!("(1-p)(1-q) = 1 for p = {p}, q = {q}")));
    }
    Ok((q.checked_div(&den)?, p.checked_div(&den)?))
}

/// Parameters with `P(d,q,P(c,p,x)) = P(P(c,r,d),s,x)` for all `c, d, x`,
/// i.e. `qp = s`, `q(1−p) = (1−s)(1−r)`, `1−q = (1−s)r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamQuadruple {
    pub p: Rational,
    pub q: Rational,
    pub r: Rational,
    pub s: Rational,
}

impl ParamQuadruple {
    /// Accepts the quadruple only if all three equations hold exactly.
    pub fn new(p: Rational, q: Rational, r: Rational, s: Rational) -> Result<Self> {
        let quad = ParamQuadruple { p, q, r, s };
        if quad.equations() != [true; 3] {
            return Err(Error::Validation(format!("parameters do not satisfy the system: {quad:?}")));
        }
        Ok(quad)
    }

    /// Which of the three equations hold, in order.
    pub fn equations(&self) -> [bool; 3] {
        equations(&self.p, &self.q, &self.r, &self.s)
    }
}

fn equations(p: &Rational, q: &Rational, r: &Rational, s: &Rational) -> [bool; 3] {
    [
        q * p == *s,
        q * p.complement() == s.complement() * r.complement(),
        q.complement() == s.complement() * r,
    ]
}

/// Given `p, q` with `pq ≠ 1`: `s = qp`, `r = (1−q)/(1−qp)`.
pub fn solve_assoc_from_pq(p: &Rational, q: &Rational) -> Result<ParamQuadruple> {
    let s = q * p;
    if s.is_one() {
        return Err(Error::Domain(format!("pq = 1 for p = {p}, q = {q}")));
    }
    let r = q.complement().checked_div(&s.complement())?;
    ParamQuadruple::new(p.clone(), q.clone(), r, s)
}

/// Given `p, r` with `pr ≠ 1`: `q = (1−r)/(1−pr)`, `s = p·q`.
pub fn solve_assoc_from_pr(p: &Rational, r: &Rational) -> Result<ParamQuadruple> {
    let pr = p * r;
    if pr.is_one() {
        return Err(Error::Domain(format!("pr = 1 for p = {p}, r = {r}")));
    }
    let q = r.complement().checked_div(&pr.complement())?;
    let s = p * &q;
    ParamQuadruple::new(p.clone(), q, r.clone(), s)
}

pub type PerspectiveFn = fn(&QVector, &Rational, &QVector) -> Result<QVector>;
pub type SwapFn = fn(&Rational, &Rational) -> Result<(Rational, Rational)>;
pub type QuadFn = fn(&Rational, &Rational) -> Result<ParamQuadruple>;

/// The operations the perspective-calculus checkers exercise. Tests replace
/// individual entries with broken variants.
#[derive(Clone, Copy)]
pub struct PerspectiveOps {
    pub perspective: PerspectiveFn,
    pub swap: SwapFn,
    pub from_pq: QuadFn,
    pub from_pr: QuadFn,
}

impl Default for PerspectiveOps {
    fn default() -> Self {
        PerspectiveOps {
            perspective,
            swap: solve_swap_params,
            from_pq: solve_assoc_from_pq,
            from_pr: solve_assoc_from_pr,
        }
    }
}

/// Perspective checks over Q^dim.
pub struct PerspectiveCtx {
    pub ops: PerspectiveOps,
    pub dim: usize,
}

impl PerspectiveCtx {
    pub fn new(dim: usize) -> Self {
        PerspectiveCtx { ops: PerspectiveOps::default(), dim }
    }

    fn shift(&self, c: &QVector, p: &Rational, x: &QVector) -> Result<QVector> {
        (self.ops.perspective)(c, p, x)
    }
}

/// Range of sampled vector coordinates and of unrestricted scalars.
const MAGNITUDE: i64 = 3;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ShiftCase {
    pub c: QVector,
    pub d: QVector,
    pub x: QVector,
    pub p: Rational,
    pub q: Rational,
}

fn draw_shift(ctx: &PerspectiveCtx, s: &mut Sampler) -> Result<Option<ShiftCase>> {
    Ok(Some(ShiftCase {
        c: s.vector(ctx.dim, MAGNITUDE),
        d: s.vector(ctx.dim, MAGNITUDE),
        x: s.vector(ctx.dim, MAGNITUDE),
        p: s.rational(2),
        q: s.rational(2),
    }))
}

fn draw_shift_unit(ctx: &PerspectiveCtx, s: &mut Sampler) -> Result<Option<ShiftCase>> {
    Ok(Some(ShiftCase {
        c: s.vector(ctx.dim, MAGNITUDE),
        d: s.vector(ctx.dim, MAGNITUDE),
        x: s.vector(ctx.dim, MAGNITUDE),
        p: s.unit_open(),
        q: s.unit_open(),
    }))
}

fn endpoint_zero(ctx: &PerspectiveCtx, k: &ShiftCase) -> Result<Check> {
    Ok(Check::equal(&ctx.shift(&k.c, &Rational::zero(), &k.x)?, &k.c))
}

fn endpoint_one(ctx: &PerspectiveCtx, k: &ShiftCase) -> Result<Check> {
    Ok(Check::equal(&ctx.shift(&k.c, &Rational::one(), &k.x)?, &k.x))
}

fn composition(ctx: &PerspectiveCtx, k: &ShiftCase) -> Result<Check> {
    let lhs = ctx.shift(&k.c, &k.p, &ctx.shift(&k.c, &k.q, &k.x)?)?;
    let rhs = ctx.shift(&k.c, &(&k.p * &k.q), &k.x)?;
    Ok(Check::equal(&lhs, &rhs))
}

fn inverse(ctx: &PerspectiveCtx, k: &ShiftCase) -> Result<Check> {
    if k.p.is_zero() {
        return Ok(Check::Holds);
    }
    let back = ctx.shift(&k.c, &k.p.recip()?, &ctx.shift(&k.c, &k.p, &k.x)?)?;
    Ok(Check::equal(&back, &k.x))
}

fn swap(ctx: &PerspectiveCtx, k: &ShiftCase) -> Result<Check> {
    let guard = k.p.complement() * k.q.complement();
    if guard.is_one() {
        return Ok(Check::Holds);
    }
    let (r, s) = (ctx.ops.swap)(&k.p, &k.q)?;
    let lhs = ctx.shift(&k.d, &r, &ctx.shift(&k.c, &k.p, &k.x)?)?;
    let rhs = ctx.shift(&k.c, &s, &ctx.shift(&k.d, &k.q, &k.x)?)?;
    Ok(Check::equal(&lhs, &rhs))
}

fn assoc_with(ctx: &PerspectiveCtx, k: &ShiftCase, quad: &ParamQuadruple) -> Result<Check> {
    let lhs = ctx.shift(&k.d, &quad.q, &ctx.shift(&k.c, &quad.p, &k.x)?)?;
    let rhs = ctx.shift(&ctx.shift(&k.c, &quad.r, &k.d)?, &quad.s, &k.x)?;
    Ok(Check::equal(&lhs, &rhs))
}

fn assoc_pq(ctx: &PerspectiveCtx, k: &ShiftCase) -> Result<Check> {
    if (&k.p * &k.q).is_one() {
        return Ok(Check::Holds);
    }
    assoc_with(ctx, k, &(ctx.ops.from_pq)(&k.p, &k.q)?)
}

// Here the case's `q` plays the role of r.
fn assoc_pr(ctx: &PerspectiveCtx, k: &ShiftCase) -> Result<Check> {
    if (&k.p * &k.q).is_one() {
        return Ok(Check::Holds);
    }
    assoc_with(ctx, k, &(ctx.ops.from_pr)(&k.p, &k.q)?)
}

fn in_open_unit(x: &Rational) -> bool {
    x.is_positive() && *x < Rational::one()
}

fn range_pq(ctx: &PerspectiveCtx, k: &ShiftCase) -> Result<Check> {
    let quad = (ctx.ops.from_pq)(&k.p, &k.q)?;
    let ok = in_open_unit(&quad.r) && in_open_unit(&quad.s);
    Ok(if ok { Check::Holds } else { Check::violated(&quad, "r, s in (0,1)") })
}

fn range_pr(ctx: &PerspectiveCtx, k: &ShiftCase) -> Result<Check> {
    let quad = (ctx.ops.from_pr)(&k.p, &k.q)?;
    let ok = in_open_unit(&quad.q) && in_open_unit(&quad.s);
    Ok(if ok { Check::Holds } else { Check::violated(&quad, "q, s in (0,1)") })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ParamCase {
    pub a: Rational,
    pub b: Rational,
}

fn draw_params(_: &PerspectiveCtx, s: &mut Sampler) -> Result<Option<ParamCase>> {
    Ok(Some(ParamCase { a: s.rational(2), b: s.rational(2) }))
}

/// Builds a quadruple that satisfies the chosen pair of equations by
/// construction and reports whether the remaining one holds too.
fn third_equation(pair: usize, k: &ParamCase) -> Option<(ParamQuadruple, [bool; 3])> {
    let one = Rational::one();
    let quad = match pair {
        // C14 and C15 from (p, q).
        0 => {
            let (p, q) = (k.a.clone(), k.b.clone());
            let s = &q * &p;
            let r = &one - (&q * p.complement()).checked_div(&s.complement()).ok()?;
            ParamQuadruple { p, q, r, s }
        }
        // C14 and C16 from (p, q).
        1 => {
            let (p, q) = (k.a.clone(), k.b.clone());
            let s = &q * &p;
            let r = q.complement().checked_div(&s.complement()).ok()?;
            ParamQuadruple { p, q, r, s }
        }
        // C15 and C16 from (q, s).
        _ => {
            let (q, s) = (k.a.clone(), k.b.clone());
            let r = q.complement().checked_div(&s.complement()).ok()?;
            let p = &one - (s.complement() * r.complement()).checked_div(&q).ok()?;
            ParamQuadruple { p, q, r, s }
        }
    };
    let eqs = quad.equations();
    Some((quad, eqs))
}

fn two_imply_third(_: &PerspectiveCtx, k: &ParamCase) -> Result<Check> {
    for pair in 0..3 {
        if let Some((quad, eqs)) = third_equation(pair, k) {
            if eqs != [true; 3] {
                return Ok(Check::violated(&quad, &eqs));
            }
        }
    }
    Ok(Check::Holds)
}

fn solvers_satisfy_system(ctx: &PerspectiveCtx, k: &ParamCase) -> Result<Check> {
    for quad in [(ctx.ops.from_pq)(&k.a, &k.b), (ctx.ops.from_pr)(&k.a, &k.b)] {
        match quad {
            Ok(quad) if quad.equations() != [true; 3] => {
                return Ok(Check::violated(&quad, &quad.equations()));
            }
            Ok(_) | Err(Error::Domain(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(Check::Holds)
}

pub fn endpoint_law() -> Law<PerspectiveCtx, ShiftCase> {
    Law::new("perspective-endpoints", draw_shift)
        .identity("ratio-zero", endpoint_zero)
        .identity("ratio-one", endpoint_one)
}

pub fn composition_law() -> Law<PerspectiveCtx, ShiftCase> {
    Law::new("perspective-composition", draw_shift)
        .identity("same-center-product", composition)
        .identity("inverse", inverse)
}

pub fn swap_law() -> Law<PerspectiveCtx, ShiftCase> {
    Law::new("perspective-swap", draw_shift).identity("swap-centers", swap)
}

pub fn assoc_pq_law() -> Law<PerspectiveCtx, ShiftCase> {
    Law::new("perspective-assoc-pq", draw_shift).identity("merge-centers", assoc_pq)
}

pub fn assoc_pr_law() -> Law<PerspectiveCtx, ShiftCase> {
    Law::new("perspective-assoc-pr", draw_shift).identity("merge-centers", assoc_pr)
}

pub fn param_range_law() -> Law<PerspectiveCtx, ShiftCase> {
    Law::new("param-range", draw_shift_unit)
        .identity("from-pq", range_pq)
        .identity("from-pr", range_pr)
}

pub fn param_system_law() -> Law<PerspectiveCtx, ParamCase> {
    Law::new("param-system", draw_params)
        .identity("two-imply-third", two_imply_third)
        .identity("solvers-satisfy-system", solvers_satisfy_system)
}

/// Every perspective-calculus law, one report each.
pub fn check_perspective_calculus(ctx: &PerspectiveCtx, cfg: &LawConfig) -> Vec<LawReport> {
    vec![
        endpoint_law().run(ctx, cfg),
        composition_law().run(ctx, cfg),
        swap_law().run(ctx, cfg),
        assoc_pq_law().run(ctx, cfg),
        assoc_pr_law().run(ctx, cfg),
        param_range_law().run(ctx, cfg),
        param_system_law().run(ctx, cfg),
    ]
}
