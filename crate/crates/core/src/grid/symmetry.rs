//! Reflection symmetries of the light-point set.

use serde::{Deserialize, Serialize};

use super::lines::Family;
use super::segment::{classify_at, segment_points, PointType, Segment};
use super::square::Region;
use crate::param::Param;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reflection {
    /// `(x, y) ↦ (−x, −y)`; types preserved.
    Origin,
    /// `(x, y) ↦ (x, −y)`; horizontal types preserved, vertical types swapped.
    XAxis,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryViolation<S> {
    pub reflection: Reflection,
    pub location: (S, S),
    pub host: Family,
    pub ptype: PointType,
}

fn image_type(r: Reflection, host: Family, t: PointType) -> PointType {
    match (r, host, t) {
        (Reflection::XAxis, Family::V, PointType::P) => PointType::Q,
        (Reflection::XAxis, Family::V, PointType::Q) => PointType::P,
        _ => t,
    }
}

fn family_of(t: PointType) -> Family {
    if t == PointType::Q {
        Family::Q
    } else {
        Family::P
    }
}

/// Checks that both reflections map every intersection point of the
/// fundamental domain to an intersection point of the expected type with the
/// same brightness.
pub fn check_light_symmetry<S: Scalar>(param: &Param) -> Result<(), Vec<SymmetryViolation<S>>> {
    let region = Region::fundamental_domain(param);
    let mut bad = Vec::new();
    let mut segs = Vec::new();
    for y in region.y0..=region.y0 + region.height {
        for x in region.x0..=region.x0 + region.width {
            segs.push(Segment::Horizontal { x, y });
            segs.push(Segment::Vertical { x, y });
        }
    }
    for seg in segs {
        for z in segment_points::<S>(param, seg) {
            let types: &[PointType] = match z.ptype {
                PointType::Both => &[PointType::P, PointType::Q],
                PointType::P => &[PointType::P],
                PointType::Q => &[PointType::Q],
            };
            let host = z.host.family;
            for &t in types {
                for r in [Reflection::Origin, Reflection::XAxis] {
                    let (x, y) = &z.location;
                    let (ix, iy) = match r {
                        Reflection::Origin => (-x.clone(), -y.clone()),
                        Reflection::XAxis => (x.clone(), -y.clone()),
                    };
                    let it = image_type(r, host, t);
                    let ok = classify_at(param, &ix, &iy, host, family_of(it))
                        .is_some_and(|w| w.brightness == z.brightness);
                    if !ok {
                        bad.push(SymmetryViolation {
                            reflection: r,
                            location: z.location.clone(),
                            host,
                            ptype: t,
                        });
                    }
                }
            }
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad)
    }
}
