//! Characteristic power series and the formal right-hand side of the index formula.

pub mod chi;
pub mod rhs;
pub mod series;

pub use chi::{center_part, chi, lie_antisymmetrize, permutation_sign, projection};
pub use rhs::{rhs_index, CurvatureData};
pub use series::{named_coeffs, series, Coefficients, TruncatedSeries, MAX_ORDER};
