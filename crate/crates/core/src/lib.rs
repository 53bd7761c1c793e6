//! Exact-rational models of cancellative convex semilattices.
//!
//! Everything is computed over Q with arbitrary-precision integers: there is
//! no floating point anywhere, so every identity is checked by equality.
//!
//! * [`numeric`]: rationals and vectors.
//! * [`lp`]: exact two-phase simplex, the decision kernel for membership.
//! * [`polytope`]: V-representation polytopes, mixtures, hull joins, support
//!   functions.
//! * [`algebra`]: the convex-semilattice interface, perspective shifts and
//!   the axiom checkers.
//! * [`wspace`]: extension of the join from a carrier to the linear subspace
//!   it generates.
//! * [`riesz`]: lattice-ordered vector space laws and the support-function
//!   embedding of the polytope-valued model.
//! * [`mutants`]: deliberately broken operations for checker self-tests.
//! * [`io`] and [`suite`]: instance files, queries and report bundles used by
//!   the `convsl` binary.

pub mod algebra;
pub mod error;
pub mod io;
pub mod laws;
pub mod lp;
pub mod mutants;
pub mod numeric;
pub mod polytope;
pub mod riesz;
pub mod sampler;
pub mod suite;
pub mod wspace;

pub use error::{Error, Result};
pub use numeric::{QVector, Rational};
pub use polytope::Polytope;
