//! The Weyl-Clifford algebra on `R^{2n|a+b}` and its symbols.

pub mod context;
pub mod monomial;
pub mod parse;
pub mod phi;
pub mod star;
pub mod supermatrix;
pub mod superpoly;

pub use context::{AlgebraContext, OddRole, Var};
pub use monomial::Monomial;
pub use parse::parse_superpoly;
pub use phi::{phi_embed, CartanBasis};
pub use star::{star, star_all, super_bracket};
pub use supermatrix::SuperMatrix;
pub use superpoly::{Parity, SuperPolynomial};
