//! The labeled 4×4 checkerboard partition of `[−1, 1]²`.
//!
//! The lines `x = u_i` and `y = u_i` cut the square into a 4×4 grid. The
//! `U1` coordinate selects the column, left to right; the `U2` coordinate
//! selects the row, with the first matrix row at the top. The four cells at
//! the nonzero entries of `M` are special; every other cell carries the
//! symbols of the special cells in its row and column.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grid::Direction;
use crate::scalar::Scalar;

/// A 4×4 permutation matrix whose nonzero entries are direction symbols.
pub type SymbolMatrix = [[Option<Direction>; 4]; 4];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CheckerboardSpec<S> {
    pub u: [S; 3],
    pub m: SymbolMatrix,
}

/// A cell of the checkerboard.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Cell {
    /// A special cell, named by its single symbol.
    Special(Direction),
    /// An ordinary cell: `(row symbol, column symbol)`.
    Pair(Direction, Direction),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("point lies on a wall of the checkerboard")]
pub struct OnWall;

impl<S: Scalar> CheckerboardSpec<S> {
    /// Index of the interval `[−1,u1], [u1,u2], [u2,u3], [u3,1]` containing
    /// `v`; walls are rejected.
    fn interval(&self, v: &S) -> Result<usize, OnWall> {
        if self.u.iter().any(|u| u == v) {
            return Err(OnWall);
        }
        Ok(self.u.iter().filter(|u| v > *u).count())
    }

    /// Width of the interval with the given index.
    fn width(&self, i: usize) -> S {
        let lo = if i == 0 { -S::one() } else { self.u[i - 1].clone() };
        let hi = if i == 3 { S::one() } else { self.u[i].clone() };
        hi - lo
    }

    fn row_symbol(&self, row: usize) -> Direction {
        self.m[row].iter().flatten().next().copied().expect("permutation matrix")
    }

    fn col_symbol(&self, col: usize) -> Direction {
        self.m.iter().find_map(|r| r[col]).expect("permutation matrix")
    }

    /// The cell containing `(a, b)` with `a` horizontal (`U1`) and `b`
    /// vertical (`U2`).
    pub fn cell(&self, a: &S, b: &S) -> Result<Cell, OnWall> {
        let col = self.interval(a)?;
        let row = 3 - self.interval(b)?;
        Ok(match self.m[row][col] {
            Some(d) => Cell::Special(d),
            None => Cell::Pair(self.row_symbol(row), self.col_symbol(col)),
        })
    }

    /// `true` when `u` is ordered and every special cell is a square.
    pub fn is_compatible(&self) -> bool {
        let ordered = -S::one() <= self.u[0] && self.u[0] <= self.u[1] && self.u[1] <= self.u[2] && self.u[2] <= S::one();
        ordered
            && (0..4).all(|row| {
                (0..4).all(|col| self.m[row][col].is_none() || self.width(col) == self.width(3 - row))
            })
    }

    /// Distance from `v` to the nearest wall in one coordinate, counting the
    /// identified sides `±1`.
    pub fn wall_gap(&self, v: &S) -> S {
        let mut best = (S::one() - v.clone()).abs().min((v.clone() + S::one()).abs());
        for u in &self.u {
            best = best.min((v.clone() - u.clone()).abs());
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use Direction::*;

    fn figure_spec() -> CheckerboardSpec<Rat> {
        CheckerboardSpec {
            u: [Rat::ratio(-2, 3), Rat::int(0), Rat::ratio(1, 3)],
            m: [
                [None, None, None, Some(W)],
                [Some(N), None, None, None],
                [None, Some(E), None, None],
                [None, None, Some(S), None],
            ],
        }
    }

    #[test]
    fn row_of_n_and_column_of_w() {
        let spec = figure_spec();
        // Row of N is the second from the top, U2 ∈ (0, 1/3); column of W is
        // the rightmost, U1 ∈ (1/3, 1).
        let cell = spec.cell(&Rat::ratio(1, 2), &Rat::ratio(1, 6)).unwrap();
        assert_eq!(cell, Cell::Pair(N, W));
    }

    #[test]
    fn compatibility_identity() {
        let spec = figure_spec();
        let [u1, u2, u3] = spec.u.clone();
        assert_eq!(-u1 - u2 + u3, Rat::int(1));
        assert!(spec.is_compatible());
        let mut bad = figure_spec();
        bad.u[2] = Rat::ratio(1, 2);
        assert!(!bad.is_compatible());
    }

    #[test]
    fn special_cells_and_walls() {
        let spec = figure_spec();
        assert_eq!(spec.cell(&Rat::ratio(2, 3), &Rat::ratio(2, 3)).unwrap(), Cell::Special(W));
        assert_eq!(spec.cell(&Rat::int(0), &Rat::ratio(1, 2)), Err(OnWall));
        assert_eq!(spec.wall_gap(&Rat::ratio(1, 4)), Rat::ratio(1, 12));
        assert_eq!(spec.wall_gap(&Rat::ratio(-9, 10)), Rat::ratio(1, 10));
    }
}
