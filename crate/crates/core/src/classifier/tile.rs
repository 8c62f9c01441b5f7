//! Connector labels and the tile assignment `c ↦ label(Ξ(c))`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::checkerboard::{Cell, OnWall};
use super::point::{xi, ClassifyingPoint};
use super::zone::{zone_of, ZoneError};
use crate::grid::{Direction, EdgeSet, UnitSquare};
use crate::param::Param;
use crate::scalar::Scalar;

/// The seven unoriented connectors a square tile can carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConnectorLabel {
    Empty,
    NS,
    NE,
    NW,
    SE,
    SW,
    EW,
}

impl ConnectorLabel {
    pub const ALL: [ConnectorLabel; 7] = [
        ConnectorLabel::Empty,
        ConnectorLabel::NS,
        ConnectorLabel::NE,
        ConnectorLabel::NW,
        ConnectorLabel::SE,
        ConnectorLabel::SW,
        ConnectorLabel::EW,
    ];

    pub fn edges(self) -> EdgeSet {
        use Direction::*;
        match self {
            ConnectorLabel::Empty => EdgeSet::EMPTY,
            ConnectorLabel::NS => EdgeSet::from_dirs(&[N, S]),
            ConnectorLabel::NE => EdgeSet::from_dirs(&[N, E]),
            ConnectorLabel::NW => EdgeSet::from_dirs(&[N, W]),
            ConnectorLabel::SE => EdgeSet::from_dirs(&[S, E]),
            ConnectorLabel::SW => EdgeSet::from_dirs(&[S, W]),
            ConnectorLabel::EW => EdgeSet::from_dirs(&[E, W]),
        }
    }

    /// The label with exactly these edges; `None` unless 0 or 2 edges.
    pub fn from_edges(e: EdgeSet) -> Option<Self> {
        ConnectorLabel::ALL.into_iter().find(|l| l.edges() == e)
    }

    pub fn from_pair(a: Direction, b: Direction) -> Option<Self> {
        if a == b {
            return None;
        }
        ConnectorLabel::from_edges(EdgeSet::from_dirs(&[a, b]))
    }

    /// Special cells carry no connector.
    pub fn from_cell(cell: Cell) -> Self {
        match cell {
            Cell::Special(_) => ConnectorLabel::Empty,
            Cell::Pair(a, b) => ConnectorLabel::from_pair(a, b).expect("distinct symbols"),
        }
    }

    /// Image under a permutation of the symbols.
    pub fn permute(self, f: impl Fn(Direction) -> Direction) -> Self {
        let dirs: Vec<_> = self.edges().iter().map(f).collect();
        ConnectorLabel::from_edges(EdgeSet::from_dirs(&dirs)).expect("permutation keeps size")
    }
}

impl fmt::Display for ConnectorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConnectorLabel::Empty => write!(f, "empty"),
            other => write!(f, "{}", other.edges()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum TileError {
    #[error(transparent)]
    OnWall(#[from] OnWall),
    /// On a zone boundary the two adjacent zones gave different cells.
    #[error("zones disagree on a boundary fiber")]
    ZoneDisagreement,
}

/// The checkerboard cell of a point of `X_P`.
///
/// On a boundary fiber between two zones both checkerboards are evaluated
/// and must agree.
pub fn cell_at<S: Scalar>(big_p: &S, z: &ClassifyingPoint<S>) -> Result<Cell, TileError> {
    match zone_of(big_p, z.t()) {
        Ok(d) => Ok(d.spec.cell(z.u1(), z.u2())?),
        Err(ZoneError::BoundaryFiber { lower, upper }) => {
            let a = lower.spec.cell(z.u1(), z.u2())?;
            let b = upper.spec.cell(z.u1(), z.u2())?;
            if a == b {
                Ok(a)
            } else {
                Err(TileError::ZoneDisagreement)
            }
        }
        Err(ZoneError::OutOfRange) => unreachable!("canonical T lies in [−1, 1)"),
    }
}

pub fn label_at<S: Scalar>(big_p: &S, z: &ClassifyingPoint<S>) -> Result<ConnectorLabel, TileError> {
    cell_at(big_p, z).map(ConnectorLabel::from_cell)
}

/// The connector of the tile centered in `sq`.
pub fn tile_of<S: Scalar>(param: &Param, sq: UnitSquare) -> Result<ConnectorLabel, TileError> {
    label_at(&param.big_p::<S>(), &xi::<S>(param, sq))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{good_edges, Block};
    use crate::param::make_param;
    use crate::Rat64;

    #[test]
    fn exactly_seven_labels_with_their_edges() {
        let mut seen = std::collections::HashSet::new();
        for l in ConnectorLabel::ALL {
            assert!(l.edges().len() == 0 || l.edges().len() == 2);
            assert!(seen.insert(l.edges()));
            assert_eq!(ConnectorLabel::from_edges(l.edges()), Some(l));
        }
        assert_eq!(ConnectorLabel::NW.to_string(), "NW");
    }

    #[test]
    fn first_block_matches_grid() {
        let par = make_param(2, 5).unwrap();
        for sq in Block::new(0, 0).region(&par).squares() {
            let label = tile_of::<Rat64>(&par, sq).unwrap();
            assert_eq!(label.edges(), good_edges(&par, sq), "{sq:?}");
        }
    }

    #[test]
    fn symbol_permutation() {
        let swap_ns = |d: Direction| match d {
            Direction::N => Direction::S,
            Direction::S => Direction::N,
            other => other,
        };
        assert_eq!(ConnectorLabel::NE.permute(swap_ns), ConnectorLabel::SE);
        assert_eq!(ConnectorLabel::EW.permute(swap_ns), ConnectorLabel::EW);
    }
}
