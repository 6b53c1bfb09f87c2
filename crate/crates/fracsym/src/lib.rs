//! Symbolic-numeric toolkit for time-fractional porous-medium equations.
//!
//! The crate provides, for the equation `d^alpha_t u = (u^r)_xx` and its
//! dual variant with quadratic second-order terms:
//!
//! * exact Riemann-Liouville calculus on power functions plus numerical
//!   evaluators (singular quadrature and the Grunwald-Letnikov sum)
//!   ([`frac`]);
//! * the two three-dimensional point-symmetry algebras with adjoint
//!   representations, one-dimensional optimal systems and finite flows
//!   ([`lie`]);
//! * a catalog of group-invariant solutions and similarity-reduction
//!   records, with an exact monomial residual engine ([`model`]);
//! * verification drivers: determining-equation identities, invariant
//!   surfaces, symmetry transport, numerical grid residuals ([`verify`]);
//! * a Grunwald-Letnikov finite-difference solver for cross-validating
//!   catalog solutions by refinement ([`solver`]).
//!
//! Everything is deterministic; the data-parallel paths (grid residuals,
//! discrete derivatives, per-node memory sums) collect results in index
//! order, so outputs are identical with the `parallel` feature on or off.

pub mod error;
pub mod exec;
pub mod frac;
pub mod gamma;
pub mod lie;
pub mod model;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
