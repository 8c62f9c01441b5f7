//! Line families and their integer invariants.

use serde::{Deserialize, Serialize};

use crate::param::Param;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    H,
    V,
    P,
    Q,
}

impl Family {
    /// `true` for the axis-parallel families that carry capacities.
    pub fn is_axis(self) -> bool {
        matches!(self, Family::H | Family::V)
    }
}

/// A line of one of the four families.
///
/// `intercept` is the y-coordinate for `H`, the x-coordinate for `V`, and the
/// y-intercept for `P` (slope `−P`) and `Q` (slope `−Q`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridLine {
    pub family: Family,
    pub intercept: i64,
}

impl GridLine {
    pub fn new(family: Family, intercept: i64) -> Self {
        GridLine { family, intercept }
    }

    /// Slope as a scalar; `None` for vertical lines.
    pub fn slope<S: Scalar>(&self, param: &Param) -> Option<S> {
        match self.family {
            Family::H => Some(S::zero()),
            Family::V => None,
            Family::P => Some(-param.big_p::<S>()),
            Family::Q => Some(-param.big_q::<S>()),
        }
    }

    /// `true` when `(x, y)` lies on the line.
    pub fn contains<S: Scalar>(&self, param: &Param, x: &S, y: &S) -> bool {
        let c = S::int(self.intercept);
        match self.family {
            Family::H => *y == c,
            Family::V => *x == c,
            Family::P => y.clone() + param.big_p::<S>() * x.clone() == c,
            Family::Q => y.clone() + param.big_q::<S>() * x.clone() == c,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
    /// Capacity zero (block boundaries) and mass `ω`, where no sign exists.
    Zero,
}

/// Capacity (axis lines, even) or mass (diagonal lines, odd) with its sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LineInvariants {
    pub magnitude: i64,
    pub sign: Sign,
}

impl LineInvariants {
    /// From the signed value `ω·F ∈ (−ω, ω]`.
    pub(crate) fn from_signed(v: i64, omega: i64) -> Self {
        let sign = if v == 0 || v == omega {
            Sign::Zero
        } else if v > 0 {
            Sign::Plus
        } else {
            Sign::Minus
        };
        LineInvariants {
            magnitude: v.abs(),
            sign,
        }
    }

    /// The signed value `ω·F`, with mass `ω` reported as `ω`.
    pub fn signed(&self) -> i64 {
        match self.sign {
            Sign::Minus => -self.magnitude,
            _ => self.magnitude,
        }
    }
}

/// Representative of `v mod 2ω` in `(−ω, ω]`.
pub(crate) fn centered(v: i64, omega: i64) -> i64 {
    let r = v.rem_euclid(2 * omega);
    if r > omega {
        r - 2 * omega
    } else {
        r
    }
}

/// Signed `ω·F_H` on the line `y = c` (equally `ω·F_V` on `x = c`).
pub(crate) fn axis_value(param: &Param, c: i64) -> i64 {
    centered(4 * param.p() * c, param.omega())
}

/// Signed `ω·F_P` on the `P` line (or `ω·F_Q` on the `Q` line) with
/// y-intercept `m`. Both evaluate to `Pm + 1` at `(0, m)`.
pub(crate) fn diagonal_value(param: &Param, m: i64) -> i64 {
    centered(2 * param.p() * m + param.omega(), param.omega())
}

pub fn line_invariants(param: &Param, line: GridLine) -> LineInvariants {
    let v = match line.family {
        Family::H | Family::V => axis_value(param, line.intercept),
        Family::P | Family::Q => diagonal_value(param, line.intercept),
    };
    LineInvariants::from_signed(v, param.omega())
}

/// Positions in `[0, ω)` of the capacity-`2k` lines, one list per axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchorLines {
    pub x: Vec<i64>,
    pub y: Vec<i64>,
}

/// The capacity-`2k` lines `kτω` and `ω − kτω` (mod `ω`).
///
/// Panics unless `0 ≤ k ≤ (ω−1)/2`.
pub fn anchor_lines(param: &Param, k: i64) -> AnchorLines {
    let omega = param.omega();
    assert!((0..=(omega - 1) / 2).contains(&k), "k out of range");
    let a = (k * param.alpha()).rem_euclid(omega);
    let mut pos = vec![a, (omega - a) % omega];
    pos.sort_unstable();
    pos.dedup();
    AnchorLines {
        x: pos.clone(),
        y: pos,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::{even_parameters, make_param};
    use crate::Rat;

    #[test]
    fn invariant_examples() {
        let par = make_param(2, 5).unwrap();
        let inv = line_invariants(&par, GridLine::new(Family::V, 2));
        assert_eq!(inv, LineInvariants { magnitude: 2, sign: Sign::Plus });
        let inv = line_invariants(&par, GridLine::new(Family::H, 0));
        assert_eq!(inv, LineInvariants { magnitude: 0, sign: Sign::Zero });
        let inv = line_invariants(&par, GridLine::new(Family::P, 2));
        assert_eq!(inv, LineInvariants { magnitude: 1, sign: Sign::Plus });
        let inv = line_invariants(&par, GridLine::new(Family::Q, 0));
        assert_eq!(inv, LineInvariants { magnitude: 7, sign: Sign::Zero });
    }

    #[test]
    fn magnitudes_have_family_parity_and_range() {
        for par in even_parameters(25) {
            let w = par.omega();
            for c in -w..2 * w {
                for fam in [Family::H, Family::V, Family::P, Family::Q] {
                    let inv = line_invariants(&par, GridLine::new(fam, c));
                    if fam.is_axis() {
                        assert_eq!(inv.magnitude % 2, 0);
                        assert!(inv.magnitude < w);
                    } else {
                        assert_eq!(inv.magnitude % 2, 1);
                        assert!(inv.magnitude <= w);
                    }
                }
            }
        }
    }

    #[test]
    fn anchor_examples() {
        let par = make_param(2, 5).unwrap();
        assert_eq!(anchor_lines(&par, 1).x, vec![2, 5]);
        assert_eq!(anchor_lines(&par, 1).y, vec![2, 5]);
        assert_eq!(anchor_lines(&par, 0).x, vec![0]);
    }

    #[test]
    fn anchor_agrees_with_capacity_census() {
        for par in even_parameters(41) {
            let w = par.omega();
            for k in 0..=(w - 1) / 2 {
                let census: Vec<i64> = (0..w)
                    .filter(|&c| line_invariants(&par, GridLine::new(Family::V, c)).magnitude == 2 * k)
                    .collect();
                assert_eq!(anchor_lines(&par, k).x, census, "{par} k={k}");
            }
        }
    }

    #[test]
    fn lines_contain_their_intercept_point() {
        let par = make_param(2, 5).unwrap();
        let l = GridLine::new(Family::Q, 3);
        assert!(l.contains(&par, &Rat::ratio(7, 10), &Rat::int(2)));
        assert_eq!(l.slope::<Rat>(&par), Some(Rat::ratio(-10, 7)));
        assert_eq!(GridLine::new(Family::V, 1).slope::<Rat>(&par), None);
    }
}
