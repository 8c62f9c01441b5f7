//! Polytope exchange dynamics on the oriented double cover.
//!
//! Lifting `Ξ` to the cover `X̂_P` orients every connector. Following the
//! arrow of a tile is then a translation of `X̂_P` that depends only on the
//! piece of the partition containing the point, and the orbits of tile
//! centers trace out the plaid polygons.

mod cover;
mod dynamics;
mod irrational;
mod mesh;

pub use cover::{lift_label, oriented_label_at, xi_hat, xi_hat_at, xi_linear, CoverPoint, OrientedLabel};
pub use dynamics::{
    check_conjugacy, oriented_tile, pet_region, pet_region_out, pet_step, pet_step_inverse, region_translation,
    special_orbit, vector_polygon, OrbitError, PetOrbit, PetRegion,
};
pub use irrational::{irrational_tiling, default_epsilon, BadOffset, IrrationalTiling};
pub use mesh::{check_mesh, cover_zone, populated_fibers, MeshCase, MeshFailure, MeshReport};
