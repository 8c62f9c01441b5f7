//! Exact engine for the plaid model.
//!
//! The model is computed twice: from the grid of line families and
//! light/dark intersection points ([`grid`]), and from the classifying map
//! into the fiber torus ([`classifier`], [`pet`]). The two descriptions are
//! cross-checked against each other and against the lattice polygons they
//! both produce. [`analysis`] collects statistics and finite theorem checks.

pub mod analysis;
pub mod classifier;
pub mod grid;
pub mod io;
pub mod param;
pub mod pet;
pub mod scalar;
pub mod verify;

use num_rational::{BigRational, Ratio};

/// Arbitrary precision rational.
pub type Rat = BigRational;
/// Machine word rational for fast sweeps at small parameters.
pub type Rat64 = Ratio<i64>;
/// Double word rational.
pub type Rat128 = Ratio<i128>;

pub use param::{make_param, Param, ParamError};
pub use scalar::Scalar;
