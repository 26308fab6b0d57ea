//! Exact-arithmetic verification of the local superalgebraic index formula.

pub mod algebra;
pub mod bernoulli;
pub mod error;
pub mod genera;
pub mod hochschild;
pub mod local_index;
pub mod poly;
pub mod random;
pub mod rational;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Rational;
