//! Tilings from an offset classifying map `Ξ_P + (0, V)` at arbitrary `P`.

use thiserror::Error;

use crate::classifier::{xi_at, zone_gap, zone_of, ClassifyingPoint, ConnectorLabel};
use crate::grid::{Direction, Region, UnitSquare};
use crate::scalar::{to_fraction_string, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("center {center:?} lies within {gap} of a partition wall")]
pub struct BadOffset {
    pub center: UnitSquare,
    /// Distance to the nearest wall, as a fraction string.
    pub gap: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrationalTiling<S> {
    pub window: Region,
    /// Tiles in `window.squares()` order.
    pub tiles: Vec<(UnitSquare, ConnectorLabel)>,
    /// Shared edges used by exactly one of the two adjacent tiles.
    pub mismatches: Vec<(UnitSquare, Direction)>,
    /// Smallest wall distance over all centers.
    pub min_gap: S,
}

impl<S> IrrationalTiling<S> {
    pub fn is_coherent(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn label(&self, sq: UnitSquare) -> Option<ConnectorLabel> {
        let w = self.window;
        if !w.contains(sq) {
            return None;
        }
        let i = (sq.y - w.y0) * w.width + (sq.x - w.x0);
        Some(self.tiles[i as usize].1)
    }
}

/// `2⁻⁴⁰`.
pub fn default_epsilon<S: Scalar>() -> S {
    S::ratio(1, 1 << 40)
}

/// Tiles `window` with `Ξ_P + (0, V)`, rejecting the offset if some center
/// comes within `eps` of a wall of the partition.
///
/// Walls are the zone boundaries `T ∈ {−1+P, 1−P, ±1}` and the checkerboard
/// lines `U_i ∈ {u_1, u_2, u_3, ±1}`; the distance is the smallest
/// coordinate gap.
pub fn irrational_tiling<S: Scalar>(
    big_p: &S,
    offset: &(S, S, S),
    window: Region,
    eps: &S,
) -> Result<IrrationalTiling<S>, BadOffset> {
    let mut tiles = Vec::with_capacity(window.area() as usize);
    let mut min_gap: Option<S> = None;
    for sq in window.squares() {
        let (cx, cy) = sq.center::<S>();
        let z = xi_at(big_p, &cx, &cy);
        let z = ClassifyingPoint::new(
            big_p,
            z.t().clone() + offset.0.clone(),
            z.u1().clone() + offset.1.clone(),
            z.u2().clone() + offset.2.clone(),
        );
        let bad = |gap: &S| BadOffset {
            center: sq,
            gap: to_fraction_string(gap),
        };
        let tg = zone_gap(big_p, z.t());
        if tg < *eps {
            return Err(bad(&tg));
        }
        let spec = zone_of(big_p, z.t()).expect("off the zone boundaries").spec;
        let gap = tg.min(spec.wall_gap(z.u1())).min(spec.wall_gap(z.u2()));
        if gap < *eps {
            return Err(bad(&gap));
        }
        let cell = spec.cell(z.u1(), z.u2()).expect("off the walls");
        tiles.push((sq, ConnectorLabel::from_cell(cell)));
        min_gap = Some(match min_gap {
            Some(m) if m <= gap => m,
            _ => gap,
        });
    }
    let mut tiling = IrrationalTiling {
        window,
        tiles,
        mismatches: Vec::new(),
        min_gap: min_gap.unwrap_or_else(S::one),
    };
    let mut mismatches = Vec::new();
    for &(sq, label) in &tiling.tiles {
        for d in [Direction::E, Direction::N] {
            if let Some(other) = tiling.label(sq.step(d)) {
                if label.edges().contains(d) != other.edges().contains(d.opposite()) {
                    mismatches.push((sq, d));
                }
            }
        }
    }
    tiling.mismatches = mismatches;
    Ok(tiling)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::tile_of;
    use crate::param::make_param;
    use crate::{Rat, Rat64};

    #[test]
    fn zero_offset_is_rejected() {
        let p = Rat::ratio(2 * 305, 305 + 1292);
        let zero = (Rat::int(0), Rat::int(0), Rat::int(0));
        let err = irrational_tiling(&p, &zero, Region::new(0, 0, 4, 4), &default_epsilon()).unwrap_err();
        assert_eq!(err.center, UnitSquare::new(0, 0));
        assert_eq!(err.gap, "0/1");
    }

    #[test]
    fn tiny_offset_reproduces_rational_tiles() {
        let par = make_param(3, 8).unwrap();
        let w = par.omega();
        let small = Rat64::ratio(1, 8 * w);
        let v = (small, small * Rat64::int(3), small * Rat64::int(-2));
        let window = Region::new(0, 0, w * w, w);
        let tiling = irrational_tiling(&par.big_p::<Rat64>(), &v, window, &Rat64::ratio(1, 1 << 20)).unwrap();
        assert!(tiling.is_coherent());
        for &(sq, label) in &tiling.tiles {
            assert_eq!(label, tile_of::<Rat64>(&par, sq).unwrap(), "{sq:?}");
        }
    }
}
