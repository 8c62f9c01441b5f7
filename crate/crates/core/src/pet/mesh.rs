//! Oriented coherence: the mesh equation on populated fibers, and coverage
//! of the six zones of `X̂_P` by triads of fibers.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::cover::{oriented_label_at, xi_linear, CoverPoint, OrientedLabel};
use crate::grid::Direction;
use crate::param::Param;
use crate::scalar::{to_fraction_string, Scalar};
use crate::{Rat, Rat64};

/// One of the eight matching conditions: for a direction `d`, either the
/// arrows into `d` meet arrows out of `opposite(d)` one step over
/// (`forward`), or the arrows out of `d` meet arrows into `opposite(d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MeshCase {
    pub direction: Direction,
    pub forward: bool,
}

impl MeshCase {
    pub fn all() -> Vec<MeshCase> {
        Direction::ALL
            .iter()
            .flat_map(|&direction| [true, false].map(|forward| MeshCase { direction, forward }))
            .collect()
    }

    fn source(self, l: OrientedLabel) -> bool {
        let e = if self.forward { l.into_edge() } else { l.out_of_edge() };
        e == Some(self.direction)
    }

    fn target(self, l: OrientedLabel) -> bool {
        let e = if self.forward { l.out_of_edge() } else { l.into_edge() };
        e == Some(self.direction.opposite())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeshFailure {
    pub param: Param,
    /// The fiber `T̂` as a fraction string.
    pub fiber: String,
    pub case: Option<MeshCase>,
    pub point: (String, String),
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeshReport {
    pub failures: Vec<MeshFailure>,
    /// Whether each of the six zones of `X̂` holds a triad.
    pub coverage: [bool; 6],
    pub points_checked: usize,
}

impl MeshReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty() && self.coverage.iter().all(|&c| c)
    }
}

/// `T̂` values of fibers met by `Ξ̂(C)`: odd multiples of `1/ω` in `[−2, 2)`.
pub fn populated_fibers<S: Scalar>(param: &Param) -> Vec<S> {
    let w = param.omega();
    (-2 * w..2 * w).filter(|k| k.rem_euclid(2) == 1).map(|k| S::ratio(k, w)).collect()
}

/// The zone of `X̂` whose interior contains the fiber over `(P, T̂)`, or
/// `None` on a zone boundary. Zones 0–2 lie on the middle half, 3–5 on the
/// outer half.
pub fn cover_zone<S: Scalar>(big_p: &S, t_hat: &S) -> Option<usize> {
    let one = S::one();
    let two = S::two();
    let p = big_p.clone();
    let t = t_hat.clone();
    // Unwrap the outer half to [1, 3).
    let (t, outer) = if t >= one || t < -one.clone() {
        (if t < -one.clone() { t + S::int(4) } else { t }, true)
    } else {
        (t, false)
    };
    let t = if outer { t - two } else { t };
    let z = if -one.clone() < t && t < p.clone() - one.clone() {
        0
    } else if p.clone() - one.clone() < t && t < one.clone() - p.clone() {
        1
    } else if one.clone() - p < t && t < one {
        2
    } else {
        return None;
    };
    Some(if outer { z + 3 } else { z })
}

/// Base points `(P, T̂)` with the outer half unwrapped to `[1, 3)` so every
/// zone is a convex triangle.
fn base_point(big_p: &Rat, t_hat: &Rat) -> (Rat, Rat) {
    let t = if *t_hat < -Rat::one() { t_hat.clone() + Rat::int(4) } else { t_hat.clone() };
    (big_p.clone(), t)
}

fn has_triad(points: &[(Rat, Rat)]) -> bool {
    let Some(a) = points.first() else { return false };
    let Some(b) = points.iter().find(|b| *b != a) else { return false };
    points.iter().any(|c| {
        let cross = (b.0.clone() - a.0.clone()) * (c.1.clone() - a.1.clone())
            - (b.1.clone() - a.1.clone()) * (c.0.clone() - a.0.clone());
        cross != Rat::zero()
    })
}

/// Checks the eight matching conditions on every populated fiber of each
/// parameter, and that the fibers together contain a triad in every zone.
pub fn check_mesh(params: &[Param]) -> MeshReport {
    let mut failures = Vec::new();
    let mut points_checked = 0;
    let mut zone_points: [Vec<(Rat, Rat)>; 6] = Default::default();
    for par in params {
        let big_p = par.big_p::<Rat64>();
        let w = par.omega();
        let grid: Vec<Rat64> = (-w..w).filter(|k| k.rem_euclid(2) == 0).map(|k| Rat64::ratio(k, w)).collect();
        let moves: Vec<(MeshCase, (Rat64, Rat64, Rat64))> = MeshCase::all()
            .into_iter()
            .map(|c| (c, xi_linear(&big_p, c.direction.vector())))
            .collect();
        for t in populated_fibers::<Rat64>(par) {
            if let Some(z) = cover_zone(&big_p, &t) {
                zone_points[z].push(base_point(&big_p.to_rat(), &t.to_rat()));
            }
            for u1 in &grid {
                for u2 in &grid {
                    points_checked += 1;
                    let y = CoverPoint::new(&big_p, t.clone(), u1.clone(), u2.clone());
                    let fail = |case, reason: String| MeshFailure {
                        param: *par,
                        fiber: to_fraction_string(&t),
                        case,
                        point: (to_fraction_string(u1), to_fraction_string(u2)),
                        reason,
                    };
                    let label = match oriented_label_at(&big_p, &y) {
                        Ok(l) => l,
                        Err(e) => {
                            failures.push(fail(None, e.to_string()));
                            continue;
                        }
                    };
                    for (case, v) in &moves {
                        let image = y.translate(&big_p, v);
                        let image_label = match oriented_label_at(&big_p, &image) {
                            Ok(l) => l,
                            Err(e) => {
                                failures.push(fail(Some(*case), format!("image: {e}")));
                                continue;
                            }
                        };
                        if case.source(label) != case.target(image_label) {
                            failures.push(fail(Some(*case), format!("{label} moves to {image_label}")));
                        }
                    }
                }
            }
        }
    }
    let coverage = std::array::from_fn(|z| has_triad(&zone_points[z]));
    MeshReport {
        failures,
        coverage,
        points_checked,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Region;
    use crate::param::make_param;
    use crate::pet::xi_hat;
    use std::collections::HashSet;

    #[test]
    fn populated_fibers_hold_the_special_points() {
        let par = make_param(2, 5).unwrap();
        let w = par.omega();
        let fibers: HashSet<Rat64> = populated_fibers::<Rat64>(&par).into_iter().collect();
        assert_eq!(fibers.len() as i64, 2 * w);
        let mut pts = HashSet::new();
        for sq in Region::new(0, 0, w * w, 2 * w).squares() {
            let z = xi_hat::<Rat64>(&par, sq);
            assert!(fibers.contains(z.t_hat()));
            assert!((z.u1().clone() * Rat64::int(w)).to_integer() % 2 == 0);
            pts.insert(z);
        }
        assert_eq!(pts.len() as i64, 2 * w * w * w);
    }

    #[test]
    fn zones_of_the_cover() {
        let p = Rat::ratio(1, 2);
        let z = |n, d| cover_zone(&p, &Rat::ratio(n, d));
        assert_eq!(z(-3, 4), Some(0));
        assert_eq!(z(0, 1), Some(1));
        assert_eq!(z(3, 4), Some(2));
        assert_eq!(z(5, 4), Some(3));
        assert_eq!(z(7, 4), Some(4));
        assert_eq!(z(-2, 1), Some(4));
        assert_eq!(z(-7, 4), Some(4));
        assert_eq!(z(-5, 4), Some(5));
        assert_eq!(z(1, 2), None);
        assert_eq!(z(1, 1), None);
        assert_eq!(z(-1, 1), None);
    }

    #[test]
    fn one_parameter_has_no_triads() {
        let report = check_mesh(&[make_param(1, 2).unwrap()]);
        assert!(report.failures.is_empty());
        assert!(!report.coverage.iter().any(|&c| c));
    }

    #[test]
    fn paper_witness_pair() {
        let report = check_mesh(&[make_param(3, 8).unwrap(), make_param(4, 11).unwrap()]);
        assert!(report.failures.is_empty(), "{:?}", &report.failures[..report.failures.len().min(3)]);
        assert_eq!(report.coverage, [true; 6]);
        assert_eq!(report.points_checked, 2 * (11 * 11 * 11 + 15 * 15 * 15));
    }
}
