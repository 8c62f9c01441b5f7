//! Polygon statistics and finite checks of the large-scale structure: one
//! large symmetric polygon per block, empty rectangles, and gap radii.
//!
//! The trend observables here are measurements at fixed parameters. They
//! illustrate, and do not prove, the asymptotic statements about sequences
//! of parameters with irrational limits.

mod first;
mod gaps;
mod rectangles;
mod stats;

pub use first::{verify_first, FirstReport};
pub use gaps::{gap_radius, trend, TrendRow};
pub use rectangles::{empty_rectangles, RectGrid};
pub use stats::{polygon_stats, PolygonStats};
