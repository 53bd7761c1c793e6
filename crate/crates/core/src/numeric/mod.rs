//! Exact scalars and vectors over Q.

mod rational;
mod vector;

pub use rational::{q, rational_make, Rational};
pub use vector::{convex_combine, vector_cwise_inf, vector_cwise_sup, vector_linear, QVector};
