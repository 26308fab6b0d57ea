//! Hochschild cochains on the Weyl-Clifford algebra: the bidifferential
//! operators, the supertrace cocycle `τ`, the boundary and small homology checks.

pub mod boundary;
pub mod chain;
pub mod hh;
pub mod ops;
pub mod relative;
pub mod trace;

pub use boundary::{hochschild_boundary, FormalSum};
pub use chain::{Tensor, TensorChain};
pub use hh::hh0_dimension;
pub use ops::{alpha_ij, g_ij, omega_expand, pi_2n};
pub use trace::{tau, upsilon, Cocycle, SlotProduct, TraceConvention};
