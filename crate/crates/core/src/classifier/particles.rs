//! Geometry of particle images under `Ξ`.
//!
//! Each instance of a particle is attached to the square whose west edge
//! (vertical particles) or south edge (horizontal particles) owns it. The
//! images of these squares, grouped by motion type, have rigid shapes:
//! vertical type `P` images share a fiber and a `U1` value (type `Q`: a
//! `U2` value); horizontal type `P` images lie on a segment of length at
//! most `2P` parallel to `(1, 1, 1)` over `T ∈ [1−P, 1+P] (mod 2)`;
//! horizontal type `Q` images lie on a segment of length at most `2Q`
//! parallel to `(1, 0, 0)` that meets the fibers over `[−1+P, 1−P]` at most
//! twice and all other fibers at most once.

use thiserror::Error;

use super::point::{xi, ClassifyingPoint};
use crate::grid::{Orientation, Particle, PointType, UnitSquare};
use crate::param::Param;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryViolation {
    #[error("vertical images span several fibers")]
    NotOneFiber,
    #[error("vertical images are not on a line U{0} = const")]
    NotOnLine(u8),
    #[error("horizontal images are not on one line of the stated direction")]
    NotCollinear,
    #[error("horizontal images span an arc of length {0} beyond the bound")]
    ArcTooLong(String),
    #[error("type P images enter the fibers over (−1+P, 1−P)")]
    EntersMiddle,
    #[error("type Q arc crosses a fiber too often")]
    FiberCrossing,
}

/// The square attached to each instance, in instance order, with the
/// motion type.
pub fn particle_centers<S: Scalar>(particle: &Particle<S>) -> Vec<(UnitSquare, PointType)> {
    particle
        .instances
        .iter()
        .map(|inst| {
            let (x, y) = &inst.point.location;
            let sq = match particle.orientation {
                Orientation::Vertical => UnitSquare::new(x.floor_i64(), y.floor_i64()),
                Orientation::Horizontal => {
                    let n = if inst.kind == PointType::Q && x.is_integer() {
                        x.floor_i64() - 1
                    } else {
                        x.floor_i64()
                    };
                    UnitSquare::new(n, y.floor_i64())
                }
            };
            (sq, inst.kind)
        })
        .collect()
}

/// Position `s ∈ [0, 2ω)` with `z ≡ base + s·dir (mod Λ_P)`, where `dir` is
/// `(1, 1, 1)` or `(1, 0, 0)`; `None` when `z` is off that line.
fn line_position<S: Scalar>(
    param: &Param,
    base: &ClassifyingPoint<S>,
    z: &ClassifyingPoint<S>,
    diagonal: bool,
) -> Option<S> {
    let (p, q) = (param.big_p::<S>(), param.big_q::<S>());
    let dt = z.t().clone() - base.t().clone();
    let d1 = z.u1().clone() - base.u1().clone();
    let d2 = z.u2().clone() - base.u2().clone();
    let period = S::int(2 * param.omega());
    // z − base − s·dir = a(2, P, P) + (0, 2b, 2c) with s = dt − 2a.
    for a in 0..param.omega() {
        let a_s = S::int(a);
        let (r1, r2) = if diagonal {
            (
                d1.clone() - dt.clone() + a_s.clone() * q.clone(),
                d2.clone() - dt.clone() + a_s.clone() * q.clone(),
            )
        } else {
            (d1.clone() - a_s.clone() * p.clone(), d2.clone() - a_s.clone() * p.clone())
        };
        let even = |v: &S| (v.clone() / S::two()).is_integer();
        if even(&r1) && even(&r2) {
            let s = dt - S::two() * a_s;
            let k = (s.clone() / period.clone()).floor();
            return Some(s - k * period);
        }
    }
    None
}

/// Smallest arc `[start, start + len]` of the circle `R / 2ωZ` containing
/// all positions.
fn covering_arc<S: Scalar>(mut pos: Vec<S>, period: &S) -> (S, S) {
    pos.sort();
    pos.dedup();
    let n = pos.len();
    let mut best_gap = period.clone() - pos[n - 1].clone() + pos[0].clone();
    let mut start = pos[0].clone();
    for i in 1..n {
        let gap = pos[i].clone() - pos[i - 1].clone();
        if gap > best_gap {
            best_gap = gap;
            start = pos[i].clone();
        }
    }
    (start, period.clone() - best_gap)
}

fn check_vertical<S: Scalar>(images: &[ClassifyingPoint<S>], kind: PointType) -> Result<(), GeometryViolation> {
    let first = &images[0];
    if images.iter().any(|z| z.t() != first.t()) {
        return Err(GeometryViolation::NotOneFiber);
    }
    let (coord, idx): (fn(&ClassifyingPoint<S>) -> &S, u8) = match kind {
        PointType::Q => (|z| z.u2(), 2),
        _ => (|z| z.u1(), 1),
    };
    if images.iter().any(|z| coord(z) != coord(first)) {
        return Err(GeometryViolation::NotOnLine(idx));
    }
    Ok(())
}

fn check_horizontal<S: Scalar>(
    param: &Param,
    images: &[ClassifyingPoint<S>],
    kind: PointType,
) -> Result<(), GeometryViolation> {
    let diagonal = kind != PointType::Q;
    let base = &images[0];
    let pos: Vec<S> = images
        .iter()
        .map(|z| line_position(param, base, z, diagonal))
        .collect::<Option<_>>()
        .ok_or(GeometryViolation::NotCollinear)?;
    let period = S::int(2 * param.omega());
    let (start, len) = covering_arc(pos.clone(), &period);
    let (p, q, one, two) = (param.big_p::<S>(), param.big_q::<S>(), S::one(), S::two());
    if diagonal {
        if len > two.clone() * p.clone() {
            return Err(GeometryViolation::ArcTooLong(len.to_string()));
        }
        // T at the arc start, moved into [1−P, 3−P); the arc must end by 1+P.
        let lo = one.clone() - p.clone();
        let t0 = base.t().clone() + start;
        let t0 = t0.clone() - two.clone() * ((t0 - lo.clone()) / two.clone()).floor();
        if t0 + len > one + p {
            return Err(GeometryViolation::EntersMiddle);
        }
    } else {
        if len > two.clone() * q {
            return Err(GeometryViolation::ArcTooLong(len.to_string()));
        }
        let (mid_lo, mid_hi) = (p.clone() - one.clone(), one - p);
        for (z, s) in images.iter().zip(&pos) {
            // Arc positions over the fiber of z: s + 2j inside the arc.
            let rel = (s.clone() - start.clone()) - period.clone() * ((s.clone() - start.clone()) / period.clone()).floor();
            let first = rel.clone() - two.clone() * (rel / two.clone()).floor();
            let mut count = 0;
            let mut r = first;
            while r <= len {
                count += 1;
                r = r + two.clone();
            }
            let middle = *z.t() >= mid_lo && *z.t() <= mid_hi;
            if count > if middle { 2 } else { 1 } {
                return Err(GeometryViolation::FiberCrossing);
            }
        }
    }
    Ok(())
}

/// Checks the image shape of each constant-type portion of a particle.
pub fn particle_image_geometry<S: Scalar>(param: &Param, particle: &Particle<S>) -> Result<(), GeometryViolation> {
    let centers = particle_centers(particle);
    for kind in [PointType::P, PointType::Q] {
        let images: Vec<ClassifyingPoint<S>> = centers
            .iter()
            .filter(|(_, k)| *k == kind)
            .map(|(sq, _)| xi::<S>(param, *sq))
            .collect();
        if images.is_empty() {
            continue;
        }
        match particle.orientation {
            Orientation::Vertical => check_vertical(&images, kind)?,
            Orientation::Horizontal => check_horizontal(param, &images, kind)?,
        }
    }
    Ok(())
}
