//! The grid description: four line families, light/dark intersection points,
//! good segments, coherence, plaid polygons and particles.

mod census;
mod functions;
mod lines;
mod particle;
mod polygon;
mod segment;
mod square;
mod symmetry;

pub use census::{block_lines, block_segments, capacity_census, CensusLine, CensusViolation};
pub use functions::{f_h, f_p, f_q, f_v, AdaptedValue};
pub use lines::{anchor_lines, line_invariants, AnchorLines, Family, GridLine, LineInvariants, Sign};
pub use particle::{
    horizontal_particle_starts, trace_particle, vertical_particle_starts, Orientation, Particle,
    ParticleError, ParticleInstance,
};
pub use polygon::{trace_polygons, PlaidPolygon, TraceError};
pub use segment::{
    classify_at, light_count, light_count_with, segment_points, segment_points_with, Brightness,
    CountingRule, IntersectionPoint, PointType, Segment,
};
pub use square::{
    check_coherence, check_coherence_with, good_edges, good_edges_with, Block, Coherence,
    Direction, EdgeSet, GoodEdgeMap, Region, UnitSquare,
};
pub use symmetry::{check_light_symmetry, Reflection, SymmetryViolation};
