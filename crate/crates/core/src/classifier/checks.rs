//! Exhaustive checks of the tile description against the grid description.

use std::collections::HashMap;

use super::point::{is_lattice_class, xi, ClassifyingPoint};
use super::tile::{label_at, tile_of, ConnectorLabel, TileError};
use super::zone::{zone_of, ZoneError};
use crate::grid::{Direction, EdgeSet, GoodEdgeMap, CountingRule, Region, UnitSquare};
use crate::param::Param;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionReport {
    /// Distinct images found.
    pub classes: usize,
    /// `ω³`.
    pub expected: usize,
    /// Centers whose image is not in `(Z_odd/ω, Z_even/ω, Z_even/ω)`.
    pub outside: Vec<UnitSquare>,
    /// Pairs of distinct centers with the same image.
    pub collisions: Vec<(UnitSquare, UnitSquare)>,
}

impl BijectionReport {
    pub fn is_ok(&self) -> bool {
        self.classes == self.expected && self.outside.is_empty() && self.collisions.is_empty()
    }
}

/// `Ξ` maps the `ω³` centers of `[0, ω²] × [0, ω]` injectively into the
/// `ω³` classes of the discrete set.
pub fn verify_bijection<S: Scalar>(param: &Param) -> BijectionReport {
    let mut seen: HashMap<ClassifyingPoint<S>, UnitSquare> = HashMap::new();
    let mut outside = Vec::new();
    let mut collisions = Vec::new();
    for sq in Region::fundamental_domain(param).squares() {
        let z = xi::<S>(param, sq);
        if !is_lattice_class(param, &z) {
            outside.push(sq);
        }
        if let Some(prev) = seen.insert(z, sq) {
            collisions.push((prev, sq));
        }
    }
    let w = param.omega() as usize;
    BijectionReport {
        classes: seen.len(),
        expected: w * w * w,
        outside,
        collisions,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoMismatch {
    pub square: UnitSquare,
    pub grid: EdgeSet,
    pub tile: Result<ConnectorLabel, TileError>,
}

/// Squares of the region whose good edges differ from their tile label.
pub fn check_isomorphism<S: Scalar>(param: &Param, region: Region) -> Vec<IsoMismatch> {
    let map = GoodEdgeMap::new(param, region, CountingRule::Standard);
    region
        .squares()
        .filter_map(|sq| {
            let grid = map.good_edges(sq);
            let tile = tile_of::<S>(param, sq);
            let same = matches!(tile, Ok(l) if l.edges() == grid);
            (!same).then_some(IsoMismatch { square: sq, grid, tile })
        })
        .collect()
}

/// Centers whose image is off the discrete set, or lies in a fiber whose
/// walls are not all at odd multiples of `1/ω`.
pub fn check_wall_avoidance<S: Scalar>(param: &Param) -> Vec<UnitSquare> {
    let big_p = param.big_p::<S>();
    let w = S::int(param.omega());
    let odd = |u: &S| {
        let s = u.clone() * w.clone();
        s.is_integer() && s.floor_i64().rem_euclid(2) == 1
    };
    Region::fundamental_domain(param)
        .squares()
        .filter(|sq| {
            let z = xi::<S>(param, *sq);
            let walls_ok = match zone_of(&big_p, z.t()) {
                Ok(d) => d.spec.u.iter().all(odd),
                Err(ZoneError::BoundaryFiber { lower, upper }) => {
                    lower.spec.u.iter().chain(upper.spec.u.iter()).all(odd)
                }
                Err(ZoneError::OutOfRange) => false,
            };
            !(walls_ok && is_lattice_class(param, &z))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conjugacy {
    /// `ρ(x, y) = (−x, −y)`, `Ψ(T, U1, U2) = (−T, −U1, −U2)`, N↔S and E↔W.
    Rotation,
    /// `ρ(x, y) = (x, −y)`, `Ψ(T, U1, U2) = (T, U2, U1)`, N↔S.
    XReflection,
}

impl Conjugacy {
    fn square(self, sq: UnitSquare) -> UnitSquare {
        match self {
            Conjugacy::Rotation => UnitSquare::new(-sq.x - 1, -sq.y - 1),
            Conjugacy::XReflection => UnitSquare::new(sq.x, -sq.y - 1),
        }
    }

    fn psi<S: Scalar>(self, big_p: &S, z: &ClassifyingPoint<S>) -> ClassifyingPoint<S> {
        let (t, u1, u2) = z.coords();
        match self {
            Conjugacy::Rotation => ClassifyingPoint::new(big_p, -t, -u1, -u2),
            Conjugacy::XReflection => ClassifyingPoint::new(big_p, t, u2, u1),
        }
    }

    fn symbol(self, d: Direction) -> Direction {
        match (self, d) {
            (_, Direction::N) => Direction::S,
            (_, Direction::S) => Direction::N,
            (Conjugacy::Rotation, d) => d.opposite(),
            (Conjugacy::XReflection, d) => d,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyViolation {
    pub conjugacy: Conjugacy,
    pub square: UnitSquare,
    /// `Ξ ∘ ρ ≠ Ψ ∘ Ξ` (otherwise the labels failed to permute).
    pub map_mismatch: bool,
}

/// Checks `Ξ ∘ ρ = Ψ ∘ Ξ` on all centers of the fundamental domain for both
/// symmetries, and that `Ψ` permutes the labels of the image points.
pub fn symmetry_conjugacies<S: Scalar>(param: &Param) -> Result<(), Vec<ConjugacyViolation>> {
    let big_p = param.big_p::<S>();
    let mut bad = Vec::new();
    for sq in Region::fundamental_domain(param).squares() {
        let z = xi::<S>(param, sq);
        for c in [Conjugacy::Rotation, Conjugacy::XReflection] {
            let image = c.psi(&big_p, &z);
            let map_ok = xi::<S>(param, c.square(sq)) == image;
            let label_ok = match (label_at(&big_p, &z), label_at(&big_p, &image)) {
                (Ok(a), Ok(b)) => a.permute(|d| c.symbol(d)) == b,
                _ => false,
            };
            if !(map_ok && label_ok) {
                bad.push(ConjugacyViolation {
                    conjugacy: c,
                    square: sq,
                    map_mismatch: !map_ok,
                });
            }
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::{even_parameters, make_param};
    use crate::Rat64;

    #[test]
    fn bijection_counts() {
        let r = verify_bijection::<Rat64>(&make_param(2, 5).unwrap());
        assert!(r.is_ok());
        assert_eq!(r.classes, 343);
        let r = verify_bijection::<Rat64>(&make_param(1, 2).unwrap());
        assert!(r.is_ok());
        assert_eq!(r.classes, 27);
    }

    #[test]
    fn isomorphism_small_parameters() {
        for par in even_parameters(13) {
            let bad = check_isomorphism::<Rat64>(&par, Region::fundamental_domain(&par));
            assert!(bad.is_empty(), "{par}: {:?}", bad.first());
        }
    }

    #[test]
    fn isomorphism_off_the_fundamental_domain() {
        let par = make_param(2, 5).unwrap();
        assert!(check_isomorphism::<Rat64>(&par, Region::new(-60, -20, 30, 30)).is_empty());
    }

    #[test]
    fn walls_avoided() {
        for par in even_parameters(13) {
            assert!(check_wall_avoidance::<Rat64>(&par).is_empty(), "{par}");
        }
    }

    #[test]
    fn conjugacies_hold() {
        for par in even_parameters(11) {
            assert!(symmetry_conjugacies::<Rat64>(&par).is_ok(), "{par}");
        }
    }
}
