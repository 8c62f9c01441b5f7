//! The oriented double cover `X̂_P = R³ / Λ'`, `Λ' = ⟨(4, 2P, 2P), (0, 2, 0), (0, 0, 2)⟩`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classifier::{cell_at, xi_raw, Cell, ClassifyingPoint, TileError};
use crate::grid::{Direction, UnitSquare};
use crate::param::{reduce_unit, Param};
use crate::scalar::Scalar;

/// A point of `X̂_P`, canonical in `[−2, 2) × [−1, 1)²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoverPoint<S> {
    t_hat: S,
    u1: S,
    u2: S,
}

impl<S: Scalar> CoverPoint<S> {
    pub fn new(big_p: &S, t_hat: S, u1: S, u2: S) -> Self {
        let four = S::int(4);
        let k = ((t_hat.clone() + S::two()) / four.clone()).floor();
        let shift = S::two() * k.clone() * big_p.clone();
        CoverPoint {
            t_hat: t_hat - four * k,
            u1: reduce_unit(&(u1 - shift.clone())),
            u2: reduce_unit(&(u2 - shift)),
        }
    }

    pub fn t_hat(&self) -> &S {
        &self.t_hat
    }

    pub fn u1(&self) -> &S {
        &self.u1
    }

    pub fn u2(&self) -> &S {
        &self.u2
    }

    pub fn coords(&self) -> (S, S, S) {
        (self.t_hat.clone(), self.u1.clone(), self.u2.clone())
    }

    /// `true` on the middle half `T̂ ∈ [−1, 1)`, where labels keep their order.
    pub fn is_middle(&self) -> bool {
        -S::one() <= self.t_hat && self.t_hat < S::one()
    }

    /// The image in `X_P` under the covering map.
    pub fn project(&self, big_p: &S) -> ClassifyingPoint<S> {
        ClassifyingPoint::new(big_p, self.t_hat.clone(), self.u1.clone(), self.u2.clone())
    }

    pub fn translate(&self, big_p: &S, v: &(S, S, S)) -> Self {
        CoverPoint::new(
            big_p,
            self.t_hat.clone() + v.0.clone(),
            self.u1.clone() + v.1.clone(),
            self.u2.clone() + v.2.clone(),
        )
    }
}

impl<S: Scalar> fmt::Display for CoverPoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.t_hat, self.u1, self.u2)
    }
}

/// `Ξ̂` at any point of the plane.
pub fn xi_hat_at<S: Scalar>(big_p: &S, x: &S, y: &S) -> CoverPoint<S> {
    let (t, u1, u2) = xi_raw(big_p, x, y);
    CoverPoint::new(big_p, t, u1, u2)
}

/// `Ξ̂` at the center of a unit square.
pub fn xi_hat<S: Scalar>(param: &Param, sq: UnitSquare) -> CoverPoint<S> {
    let (x, y) = sq.center::<S>();
    xi_hat_at(&param.big_p::<S>(), &x, &y)
}

/// The linear part of `Ξ̂` applied to an integer step: `(1, 0) ↦ (2P, 2P, 2P)`,
/// `(0, 1) ↦ (2, 0, 2P)`.
pub fn xi_linear<S: Scalar>(big_p: &S, v: (i64, i64)) -> (S, S, S) {
    let two_p = S::two() * big_p.clone();
    let (a, b) = (S::int(v.0), S::int(v.1));
    (
        two_p.clone() * a.clone() + S::two() * b.clone(),
        two_p.clone() * a.clone(),
        two_p * (a + b),
    )
}

/// The twelve directed connectors and the empty tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OrientedLabel {
    Empty,
    /// Enters through `from`, leaves through `to`.
    Arrow { from: Direction, to: Direction },
}

impl OrientedLabel {
    pub fn all() -> Vec<OrientedLabel> {
        let mut out = vec![OrientedLabel::Empty];
        for from in Direction::ALL {
            for to in Direction::ALL {
                if from != to {
                    out.push(OrientedLabel::Arrow { from, to });
                }
            }
        }
        out
    }

    pub fn reversed(self) -> Self {
        match self {
            OrientedLabel::Empty => OrientedLabel::Empty,
            OrientedLabel::Arrow { from, to } => OrientedLabel::Arrow { from: to, to: from },
        }
    }

    pub fn into_edge(self) -> Option<Direction> {
        match self {
            OrientedLabel::Empty => None,
            OrientedLabel::Arrow { to, .. } => Some(to),
        }
    }

    pub fn out_of_edge(self) -> Option<Direction> {
        match self {
            OrientedLabel::Empty => None,
            OrientedLabel::Arrow { from, .. } => Some(from),
        }
    }
}

impl fmt::Display for OrientedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrientedLabel::Empty => write!(f, "empty"),
            OrientedLabel::Arrow { from, to } => write!(f, "{}{}", from.letter(), to.letter()),
        }
    }
}

/// Orients a checkerboard cell: a pair cell is read row symbol to column
/// symbol on the middle half `T̂ ∈ [−1, 1)` and reversed on the outer half.
pub fn lift_label<S: Scalar>(t_hat: &S, cell: Cell) -> OrientedLabel {
    match cell {
        Cell::Special(_) => OrientedLabel::Empty,
        Cell::Pair(row, col) => {
            let l = OrientedLabel::Arrow { from: row, to: col };
            if -S::one() <= *t_hat && *t_hat < S::one() {
                l
            } else {
                l.reversed()
            }
        }
    }
}

/// The oriented label of a point of `X̂_P`.
pub fn oriented_label_at<S: Scalar>(big_p: &S, z: &CoverPoint<S>) -> Result<OrientedLabel, TileError> {
    let cell = cell_at(big_p, &z.project(big_p))?;
    Ok(lift_label(z.t_hat(), cell))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::make_param;
    use crate::{Rat, Rat64};
    use Direction::*;

    #[test]
    fn thirteen_labels() {
        let all = OrientedLabel::all();
        assert_eq!(all.len(), 13);
        let set: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), 13);
    }

    #[test]
    fn lift_examples() {
        let nw = Cell::Pair(N, W);
        assert_eq!(lift_label(&Rat::int(0), nw).to_string(), "NW");
        assert_eq!(lift_label(&Rat::ratio(3, 2), nw).to_string(), "WN");
        assert_eq!(lift_label(&Rat::ratio(-7, 4), Cell::Special(E)), OrientedLabel::Empty);
    }

    #[test]
    fn cover_reduction() {
        let p = Rat::ratio(4, 7);
        let z = CoverPoint::new(&p, Rat::ratio(15, 7), Rat::int(0), Rat::int(0));
        // 15/7 − 4 = −13/7, U shifted by −2P.
        assert_eq!(z.coords(), (Rat::ratio(-13, 7), Rat::ratio(6, 7), Rat::ratio(6, 7)));
        let again = CoverPoint::new(&p, z.t_hat().clone() + Rat::int(4), z.u1().clone() + p.clone() * Rat::int(2), z.u2().clone() + Rat::int(2) * p.clone());
        assert_eq!(again, z);
    }

    #[test]
    fn linear_part_matches_the_map() {
        let par = make_param(3, 8).unwrap();
        let p = par.big_p::<Rat64>();
        let sq = UnitSquare::new(4, 9);
        for v in [(1, 0), (0, 1), (-1, 0), (0, -1)] {
            let moved = xi_hat::<Rat64>(&par, UnitSquare::new(sq.x + v.0, sq.y + v.1));
            assert_eq!(xi_hat::<Rat64>(&par, sq).translate(&p, &xi_linear(&p, v)), moved);
        }
    }

    #[test]
    fn cover_is_not_invariant_under_one_block_up() {
        // (0, ω) moves T̂ by 2ω ≡ 2 (mod 4): the outer copy, labels reversed.
        let par = make_param(2, 5).unwrap();
        let a = xi_hat::<Rat64>(&par, UnitSquare::new(1, 1));
        let b = xi_hat::<Rat64>(&par, UnitSquare::new(1, 8));
        assert_ne!(a, b);
        assert_eq!(a, xi_hat::<Rat64>(&par, UnitSquare::new(1, 15)));
        assert_eq!(a.project(&par.big_p()), b.project(&par.big_p()));
    }
}
