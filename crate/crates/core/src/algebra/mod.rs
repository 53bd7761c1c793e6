//! Convex semilattices: the model interface, the polytope-carrier instance,
//! the perspective-shift calculus and the seeded axiom checkers.

pub mod checks;
mod model;
pub mod perspective;

pub use checks::{
    check_cancellativity, check_convex_axioms, check_distributivity, check_order_cancellation,
    check_perspective_homomorphism, check_semilattice_axioms, Triple,
};
pub use model::{
    induced_leq, join, ConvexSemilattice, JoinKind, Mutated, Mutation, PolytopeModel, SemilatticeInstance,
};
pub use perspective::{
    check_perspective_calculus, perspective, solve_assoc_from_pq, solve_assoc_from_pr, solve_swap_params,
    ParamQuadruple, PerspectiveCtx, PerspectiveOps,
};
