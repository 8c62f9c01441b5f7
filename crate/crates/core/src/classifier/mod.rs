//! The tile description: the classifying map `Ξ` into the fiber torus, the
//! zone/checkerboard partition, and the checks tying it to the grid.

mod checkerboard;
mod checks;
mod particles;
mod point;
mod tile;
mod zone;

pub use checkerboard::{Cell, CheckerboardSpec, OnWall, SymbolMatrix};
pub use checks::{
    check_isomorphism, check_wall_avoidance, symmetry_conjugacies, verify_bijection, BijectionReport,
    Conjugacy, ConjugacyViolation, IsoMismatch,
};
pub use particles::{particle_image_geometry, particle_centers, GeometryViolation};
pub use point::{is_lattice_class, xi, xi_at, xi_local, xi_local_raw, xi_raw, ClassifyingPoint};
pub use tile::{cell_at, label_at, tile_of, ConnectorLabel, TileError};
pub use zone::{zone_data, zone_gap, zone_of, Zone, ZoneData, ZoneError, M1, M2, M3};
