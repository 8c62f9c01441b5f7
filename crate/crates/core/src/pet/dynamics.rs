//! The polytope exchange on `X̂_P` and vector dynamics of special orbits.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::cover::{oriented_label_at, xi_hat, xi_linear, CoverPoint, OrientedLabel};
use crate::classifier::TileError;
use crate::grid::{Direction, PlaidPolygon, Region, UnitSquare};
use crate::param::Param;
use crate::scalar::Scalar;

/// A piece of either partition of `X̂_P`, named by the direction of motion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PetRegion {
    South,
    West,
    North,
    East,
    Hold,
}

impl PetRegion {
    pub const ALL: [PetRegion; 5] = [PetRegion::South, PetRegion::West, PetRegion::North, PetRegion::East, PetRegion::Hold];

    pub fn from_direction(d: Direction) -> Self {
        match d {
            Direction::S => PetRegion::South,
            Direction::W => PetRegion::West,
            Direction::N => PetRegion::North,
            Direction::E => PetRegion::East,
        }
    }

    pub fn direction(self) -> Option<Direction> {
        match self {
            PetRegion::South => Some(Direction::S),
            PetRegion::West => Some(Direction::W),
            PetRegion::North => Some(Direction::N),
            PetRegion::East => Some(Direction::E),
            PetRegion::Hold => None,
        }
    }

    pub fn vector(self) -> (i64, i64) {
        self.direction().map_or((0, 0), Direction::vector)
    }

    pub fn name(self) -> &'static str {
        match self {
            PetRegion::South => "S↓",
            PetRegion::West => "W←",
            PetRegion::North => "N↑",
            PetRegion::East => "E→",
            PetRegion::Hold => "hold",
        }
    }
}

impl fmt::Display for PetRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// First partition: the region of the edge the arrow points into.
pub fn pet_region<S: Scalar>(big_p: &S, z: &CoverPoint<S>) -> Result<PetRegion, TileError> {
    let label = oriented_label_at(big_p, z)?;
    Ok(label.into_edge().map_or(PetRegion::Hold, PetRegion::from_direction))
}

/// Second partition: the arrow leaves through one edge and so moves away from
/// it; a label out of `N` lies in the downward region.
pub fn pet_region_out<S: Scalar>(big_p: &S, z: &CoverPoint<S>) -> Result<PetRegion, TileError> {
    let label = oriented_label_at(big_p, z)?;
    Ok(label
        .out_of_edge()
        .map_or(PetRegion::Hold, |d| PetRegion::from_direction(d.opposite())))
}

/// The curve-following translation of a region, `Ξ̂(c) ↦ Ξ̂(c + v)`.
pub fn region_translation<S: Scalar>(big_p: &S, region: PetRegion) -> (S, S, S) {
    xi_linear(big_p, region.vector())
}

pub fn pet_step<S: Scalar>(big_p: &S, z: &CoverPoint<S>) -> Result<CoverPoint<S>, TileError> {
    let region = pet_region(big_p, z)?;
    Ok(z.translate(big_p, &region_translation(big_p, region)))
}

/// Inverse of [`pet_step`], read off the second partition.
pub fn pet_step_inverse<S: Scalar>(big_p: &S, z: &CoverPoint<S>) -> Result<CoverPoint<S>, TileError> {
    let region = pet_region_out(big_p, z)?;
    let (a, b) = region.vector();
    Ok(z.translate(big_p, &xi_linear(big_p, (-a, -b))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PetOrbit<S> {
    pub start: CoverPoint<S>,
    /// States in visiting order, starting with `start`, without the return.
    pub states: Vec<CoverPoint<S>>,
    pub regions: Vec<PetRegion>,
    pub vectors: Vec<(i64, i64)>,
}

impl<S> PetOrbit<S> {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn is_hold(&self) -> bool {
        self.regions == [PetRegion::Hold]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error(transparent)]
    Tile(#[from] TileError),
    #[error("orbit from {start:?} did not close within {cap} steps")]
    NonPeriodic { start: UnitSquare, cap: usize },
}

/// Iterates the exchange from `Ξ̂(center)` until it returns.
pub fn special_orbit<S: Scalar>(param: &Param, center: UnitSquare) -> Result<PetOrbit<S>, OrbitError> {
    let big_p = param.big_p::<S>();
    let start = xi_hat::<S>(param, center);
    let cap = (4 * param.omega() * param.omega()) as usize;
    let mut orbit = PetOrbit {
        start: start.clone(),
        states: Vec::new(),
        regions: Vec::new(),
        vectors: Vec::new(),
    };
    let mut z = start.clone();
    loop {
        let region = pet_region(&big_p, &z)?;
        let next = z.translate(&big_p, &region_translation(&big_p, region));
        orbit.states.push(z);
        orbit.regions.push(region);
        orbit.vectors.push(region.vector());
        if next == start {
            return Ok(orbit);
        }
        if orbit.states.len() >= cap {
            return Err(OrbitError::NonPeriodic { start: center, cap });
        }
        z = next;
    }
}

/// The plaid polygon through `center` from accumulated region vectors, or
/// `None` for an empty tile.
pub fn vector_polygon(param: &Param, center: UnitSquare) -> Result<Option<PlaidPolygon>, OrbitError> {
    let orbit = special_orbit::<crate::Rat64>(param, center)?;
    if orbit.is_hold() {
        return Ok(None);
    }
    let mut c = center;
    let mut vertices = Vec::with_capacity(orbit.len());
    for (dx, dy) in &orbit.vectors {
        vertices.push(c);
        c = UnitSquare::new(c.x + dx, c.y + dy);
    }
    debug_assert_eq!(c, center);
    Ok(Some(PlaidPolygon::new(vertices).expect("special orbits trace embedded loops")))
}

/// Squares where `Ξ̂` fails to conjugate a unit step along the tile's arrow to
/// [`pet_step`].
pub fn check_conjugacy<S: Scalar>(param: &Param, region: Region) -> Vec<UnitSquare> {
    let big_p = param.big_p::<S>();
    region
        .squares()
        .filter(|&sq| {
            let z = xi_hat::<S>(param, sq);
            let ok = (|| -> Result<bool, TileError> {
                let label = oriented_label_at(&big_p, &z)?;
                let next_sq = label.into_edge().map_or(sq, |d| sq.step(d));
                Ok(pet_step(&big_p, &z)? == xi_hat::<S>(param, next_sq))
            })();
            ok != Ok(true)
        })
        .collect()
}

/// The oriented label of every tile center, a coherent orientation of the
/// plaid tiling when the exchange is well defined.
pub fn oriented_tile<S: Scalar>(param: &Param, sq: UnitSquare) -> Result<OrientedLabel, TileError> {
    oriented_label_at(&param.big_p::<S>(), &xi_hat::<S>(param, sq))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{trace_polygons, Block};
    use crate::param::{even_parameters, make_param};
    use crate::{Rat, Rat64};

    #[test]
    fn south_step_formula() {
        let par = make_param(3, 8).unwrap();
        let p = par.big_p::<Rat>();
        for sq in Region::new(0, 0, 11, 11).squares() {
            let z = xi_hat::<Rat>(&par, sq);
            if pet_region(&p, &z).unwrap() != PetRegion::South {
                continue;
            }
            let (t, u1, u2) = z.coords();
            let expect = CoverPoint::new(&p, t - Rat::int(2), u1, u2 - Rat::int(2) * p.clone());
            assert_eq!(pet_step(&p, &z).unwrap(), expect);
        }
    }

    #[test]
    fn hold_points_are_fixed() {
        let par = make_param(2, 5).unwrap();
        let p = par.big_p::<Rat64>();
        let mut seen = 0;
        for sq in Region::fundamental_domain(&par).squares() {
            let z = xi_hat::<Rat64>(&par, sq);
            if pet_region(&p, &z).unwrap() == PetRegion::Hold {
                assert_eq!(pet_step(&p, &z).unwrap(), z);
                let orbit = special_orbit::<Rat64>(&par, sq).unwrap();
                assert_eq!(orbit.len(), 1);
                assert_eq!(vector_polygon(&par, sq).unwrap(), None);
                seen += 1;
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn conjugacy_small() {
        for par in even_parameters(13) {
            assert!(check_conjugacy::<Rat64>(&par, Region::fundamental_domain(&par)).is_empty(), "{par:?}");
        }
    }

    #[test]
    fn inverse_inverts() {
        for par in [make_param(2, 5).unwrap(), make_param(4, 11).unwrap()] {
            let p = par.big_p::<Rat64>();
            for sq in Region::new(0, 0, par.omega() * par.omega(), 2 * par.omega()).squares() {
                let z = xi_hat::<Rat64>(&par, sq);
                assert_eq!(pet_step_inverse(&p, &pet_step(&p, &z).unwrap()).unwrap(), z);
            }
        }
    }

    #[test]
    fn orbit_through_origin_tile_closes() {
        let par = make_param(3, 8).unwrap();
        let orbit = special_orbit::<Rat>(&par, UnitSquare::new(0, 0)).unwrap();
        assert!(!orbit.is_empty());
        let sum = orbit.vectors.iter().fold((0, 0), |a, v| (a.0 + v.0, a.1 + v.1));
        assert_eq!(sum, (0, 0));
    }

    #[test]
    fn vector_polygons_match_grid_trace() {
        for (p, q) in [(1, 2), (2, 5), (4, 11)] {
            let par = make_param(p, q).unwrap();
            let block = Block::new(0, 0).region(&par);
            let traced = trace_polygons(&par, block).unwrap();
            for poly in &traced {
                let v = poly.vertices()[0];
                let from_pet = vector_polygon(&par, v).unwrap().unwrap();
                assert_eq!(&from_pet, poly);
                assert_eq!(special_orbit::<Rat64>(&par, v).unwrap().len(), poly.perimeter());
            }
        }
    }
}
