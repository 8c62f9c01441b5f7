//! Particles: cycles of intersection points linked by remote adjacency.
//!
//! The fundamental blocks `B_0, …, B_{ω−1}` tile `[0, ω²] × [0, ω]`, and
//! `B_j → B_{j+a}` with `2ap ≡ −1 (mod ω)`. A horizontal instance of type `P`
//! moves `1/P` east within its block per hop, turning into type `Q` at the
//! east edge; a `Q` instance moves `1/Q` west and turns back at the west
//! edge, so a horizontal particle has `2p` `P` instances and `2q` `Q`
//! instances. Vertical instances move one unit north (`P`) or south (`Q`)
//! around the block, viewed as a cylinder, and never change type.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::lines::Family;
use super::segment::{segment_points, Brightness, IntersectionPoint, PointType, Segment};
use crate::param::Param;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParticleInstance<S> {
    /// Index of the fundamental block the instance belongs to.
    pub block: i64,
    /// Motion type, `P` or `Q`.
    pub kind: PointType,
    /// The intersection point; a merged midpoint appears as `Both`.
    pub point: IntersectionPoint<S>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Particle<S> {
    pub orientation: Orientation,
    pub instances: Vec<ParticleInstance<S>>,
}

impl<S> Particle<S> {
    /// The common brightness, or `None` if the instances disagree.
    pub fn brightness(&self) -> Option<Brightness> {
        let b = self.instances.first()?.point.brightness;
        self.instances.iter().all(|i| i.point.brightness == b).then_some(b)
    }

    pub fn len(&self) -> usize {
        self.instances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instances.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParticleError {
    #[error("start point is outside the fundamental domain")]
    OutsideFundamentalDomain,
    #[error("start point is not an intersection point of the grid")]
    NotAnInstance,
}

/// The owned point of the given motion type at `(x, y)` on the host line.
fn owned_point<S: Scalar>(param: &Param, host: Family, x: &S, y: &S, kind: PointType) -> IntersectionPoint<S> {
    let seg = match (host, kind) {
        (Family::H, PointType::Q) => {
            let n = if x.is_integer() { x.floor_i64() - 1 } else { x.floor_i64() };
            Segment::Horizontal { x: n, y: y.floor_i64() }
        }
        (Family::H, _) => Segment::Horizontal {
            x: x.floor_i64(),
            y: y.floor_i64(),
        },
        _ => Segment::Vertical {
            x: x.floor_i64(),
            y: y.floor_i64(),
        },
    };
    segment_points::<S>(param, seg)
        .into_iter()
        .find(|z| z.location.0 == *x && z.location.1 == *y && z.has_type(kind))
        .expect("remote adjacency lands on an intersection point")
}

/// Follows remote adjacency from `start` until the cycle closes.
///
/// A merged midpoint starts the particle of its `P` motion.
pub fn trace_particle<S: Scalar>(param: &Param, start: &IntersectionPoint<S>) -> Result<Particle<S>, ParticleError> {
    let kind = match start.ptype {
        PointType::Q => PointType::Q,
        _ => PointType::P,
    };
    let w = param.omega();
    let ws = S::int(w);
    let (x, y) = &start.location;
    if *x < S::zero() || *x > ws.clone() * ws.clone() || *y < S::zero() || *y >= ws {
        return Err(ParticleError::OutsideFundamentalDomain);
    }
    match start.host.family {
        Family::H => trace_horizontal(param, x, y, kind),
        Family::V => trace_vertical(param, x, y, kind),
        _ => Err(ParticleError::NotAnInstance),
    }
}

fn trace_horizontal<S: Scalar>(param: &Param, x: &S, y: &S, kind: PointType) -> Result<Particle<S>, ParticleError> {
    let (p, q, w, a) = (param.p(), param.q(), param.omega(), param.adj());
    let ws = S::int(w);
    // Block and step index: the offset within the block is k/P or k/Q.
    let mut block = (x.clone() / ws.clone()).floor_i64();
    let mut off = x.clone() - S::int(block) * ws.clone();
    if kind == PointType::Q && off.is_zero() {
        block -= 1;
        off = ws.clone();
    }
    if block < 0 || block == w {
        return Err(ParticleError::OutsideFundamentalDomain);
    }
    let (mut kind, mut k) = {
        let s = if kind == PointType::P { param.big_p::<S>() } else { param.big_q::<S>() };
        let k = off * s;
        if !k.is_integer() {
            return Err(ParticleError::NotAnInstance);
        }
        (kind, k.floor_i64())
    };
    let (start_block, start_kind, start_k) = (block, kind, k);
    let mut instances = Vec::with_capacity(2 * w as usize);
    loop {
        let offset = if kind == PointType::P {
            S::ratio(k * w, 2 * p)
        } else {
            S::ratio(k * w, 2 * q)
        };
        let px = S::int(block * w) + offset;
        instances.push(ParticleInstance {
            block,
            kind,
            point: owned_point(param, Family::H, &px, y, kind),
        });
        block = (block + a).rem_euclid(w);
        match kind {
            PointType::P => {
                k += 1;
                if k == 2 * p {
                    kind = PointType::Q;
                    k = 2 * q;
                }
            }
            _ => {
                k -= 1;
                if k == 0 {
                    kind = PointType::P;
                }
            }
        }
        if (block, kind, k) == (start_block, start_kind, start_k) {
            break;
        }
        assert!(instances.len() <= 2 * w as usize, "horizontal particle does not close");
    }
    Ok(Particle {
        orientation: Orientation::Horizontal,
        instances,
    })
}

fn trace_vertical<S: Scalar>(param: &Param, x: &S, y: &S, kind: PointType) -> Result<Particle<S>, ParticleError> {
    let (w, a) = (param.omega(), param.adj());
    let xi = x.floor_i64();
    let (mut block, x0) = (xi.div_euclid(w), xi.rem_euclid(w));
    if block == w {
        return Err(ParticleError::OutsideFundamentalDomain);
    }
    let step = if kind == PointType::P { 1 } else { -1 };
    let ws = S::int(w);
    let mut h = y.clone();
    let mut instances = Vec::with_capacity(w as usize);
    for _ in 0..w {
        let px = S::int(block * w + x0);
        instances.push(ParticleInstance {
            block,
            kind,
            point: owned_point(param, Family::V, &px, &h, kind),
        });
        block = (block + a).rem_euclid(w);
        h = h + S::int(step);
        if h >= ws {
            h = h - ws.clone();
        } else if h < S::zero() {
            h = h + ws.clone();
        }
    }
    debug_assert_eq!(h, *y);
    Ok(Particle {
        orientation: Orientation::Vertical,
        instances,
    })
}

/// One start per horizontal particle: the `P` points on the west edges of
/// the fundamental blocks, on the lines `y = 0, …, ω−1`.
pub fn horizontal_particle_starts<S: Scalar>(param: &Param) -> Vec<IntersectionPoint<S>> {
    let w = param.omega();
    let mut out = Vec::with_capacity((w * w) as usize);
    for y in 0..w {
        for j in 0..w {
            out.push(owned_point(param, Family::H, &S::int(j * w), &S::int(y), PointType::P));
        }
    }
    out
}

/// One start per vertical particle: every point on the vertical lines of
/// the block `B_0`, heights in `[0, ω)`.
pub fn vertical_particle_starts<S: Scalar>(param: &Param) -> Vec<IntersectionPoint<S>> {
    let w = param.omega();
    let mut out = Vec::new();
    for x in 0..w {
        for y in 0..w {
            out.extend(segment_points::<S>(param, Segment::Vertical { x, y }));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::{even_parameters, make_param};
    use crate::{Rat, Rat64};

    #[test]
    fn horizontal_particle_from_left_edge() {
        let par = make_param(2, 5).unwrap();
        let start = &horizontal_particle_starts::<Rat>(&par)[3 * 7];
        let part = trace_particle(&par, start).unwrap();
        let kinds: Vec<_> = part.instances.iter().map(|i| i.kind).collect();
        assert_eq!(part.len(), 14);
        assert!(kinds[..4].iter().all(|k| *k == PointType::P));
        assert!(kinds[4..].iter().all(|k| *k == PointType::Q));
        // Offsets within the block advance by 1/P = 7/4.
        let off = |i: usize| {
            let z = &part.instances[i];
            z.point.location.0.clone() - Rat::int(7 * z.block)
        };
        assert_eq!(off(1) - off(0), Rat::ratio(7, 4));
        assert_eq!(off(4), Rat::int(7));
        assert_eq!(off(5) - off(4), Rat::ratio(-7, 10));
    }

    #[test]
    fn vertical_type_p_moves_north() {
        let par = make_param(2, 5).unwrap();
        let start = vertical_particle_starts::<Rat>(&par)
            .into_iter()
            .find(|z| z.ptype == PointType::P && z.location.0 == Rat::int(3))
            .unwrap();
        let part = trace_particle(&par, &start).unwrap();
        assert_eq!(part.len(), 7);
        for pair in part.instances.windows(2) {
            assert_eq!(pair[0].kind, PointType::P);
            let dy = pair[1].point.location.1.clone() - pair[0].point.location.1.clone();
            assert!(dy == Rat::int(1) || dy == Rat::int(-6));
            assert_eq!(pair[1].block, (pair[0].block + par.adj()) % 7);
        }
    }

    #[test]
    fn brightness_is_constant_on_particles() {
        for par in even_parameters(13) {
            let w = par.omega() as usize;
            for s in horizontal_particle_starts::<Rat64>(&par) {
                let part = trace_particle(&par, &s).unwrap();
                assert_eq!(part.len(), 2 * w);
                assert!(part.brightness().is_some(), "{par} {:?}", s.location);
            }
            for s in vertical_particle_starts::<Rat64>(&par) {
                let part = trace_particle(&par, &s).unwrap();
                assert_eq!(part.len(), w);
                assert!(part.brightness().is_some());
                assert!(part.instances.iter().all(|i| i.point.has_type(i.kind)));
            }
        }
    }

    #[test]
    fn starts_outside_the_domain_are_rejected() {
        let par = make_param(2, 5).unwrap();
        let mut z = horizontal_particle_starts::<Rat>(&par).remove(0);
        z.location.1 = Rat::int(9);
        assert_eq!(trace_particle(&par, &z), Err(ParticleError::OutsideFundamentalDomain));
    }
}
