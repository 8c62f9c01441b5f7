//! Unit segments, their intersection points and light counts.
//!
//! Ownership of endpoints makes the segments a partition of the intersection
//! points. A vertical segment `{x} × [y, y+1)` owns its bottom endpoint. On a
//! horizontal segment `[n, n+1] × {y}` a `P` crossing is owned when it lies in
//! `[n, n+1)` and a `Q` crossing when it lies in `(n, n+1]`, so the crossing
//! pair at a block corner is split between the two segments meeting there.
//! A `P` and a `Q` crossing at the same interior point of a horizontal segment
//! merge into one point of type `Both` and multiplicity 2.

use serde::{Deserialize, Serialize};

use super::lines::{axis_value, diagonal_value, Family, GridLine, LineInvariants};
use crate::param::Param;
use crate::scalar::Scalar;

/// A unit edge of the integer grid, named by its lower/left endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Segment {
    /// `[x, x+1] × {y}`.
    Horizontal { x: i64, y: i64 },
    /// `{x} × [y, y+1]`.
    Vertical { x: i64, y: i64 },
}

impl Segment {
    /// The `H` or `V` line carrying the segment.
    pub fn host(&self) -> GridLine {
        match *self {
            Segment::Horizontal { y, .. } => GridLine::new(Family::H, y),
            Segment::Vertical { x, .. } => GridLine::new(Family::V, x),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PointType {
    P,
    Q,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Brightness {
    Light,
    Dark,
}

/// Whether a merged `P`/`Q` midpoint counts twice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CountingRule {
    #[default]
    Standard,
    /// Mutated rule: every point counts once. Used as a regression witness.
    NoMidpointDoubleCount,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntersectionPoint<S> {
    pub location: (S, S),
    /// The `H` or `V` line.
    pub host: GridLine,
    /// The `P` or `Q` line; the `P` line when `ptype` is `Both`, in which
    /// case `mass` is that of the `P` line. The two masses differ but sum to
    /// the capacity mod `2ω`, so both crossings share a brightness.
    pub crossing: GridLine,
    /// The `Q` line of a merged midpoint.
    pub partner: Option<GridLine>,
    pub brightness: Brightness,
    pub ptype: PointType,
    pub multiplicity: u8,
    pub capacity: LineInvariants,
    pub mass: LineInvariants,
}

impl<S> IntersectionPoint<S> {
    pub fn is_light(&self) -> bool {
        self.brightness == Brightness::Light
    }

    /// `true` when the point is an instance of type `t` (a merged midpoint
    /// is an instance of both types).
    pub fn has_type(&self, t: PointType) -> bool {
        self.ptype == t || self.ptype == PointType::Both
    }
}

/// The light rule on signed values `a = ω·F_A`, `b = ω·F_B`.
///
/// `|b| = |a|` cannot happen since `a` is even and `b` odd.
pub(crate) fn is_light(a: i64, b: i64, omega: i64) -> bool {
    debug_assert_ne!(a.abs(), b.abs(), "mass equals capacity");
    b != omega && b.abs() < a.abs() && (a > 0) == (b > 0) && a != 0
}

/// One crossing in integer form: the coordinate along the host is `num/den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Crossing {
    pub family: Family,
    pub intercept: i64,
    pub num: i64,
    pub den: i64,
    pub mass: i64,
    pub merged: bool,
}

/// Smallest integer `k` with `k·d ≥ n` (`d > 0`).
fn ceil_div(n: i64, d: i64) -> i64 {
    -(-n).div_euclid(d)
}

/// Crossings owned by a horizontal segment, `P` before `Q`, merged midpoints
/// reported once with `merged = true`.
pub(crate) fn horizontal_crossings(param: &Param, x: i64, y: i64, out: &mut Vec<Crossing>) {
    let (p, q, w) = (param.p(), param.q(), param.omega());
    out.clear();
    // P: the crossing of the line with intercept y + k sits at kω/(2p); owned
    // when 2px ≤ kω < 2p(x+1).
    for k in ceil_div(2 * p * x, w)..ceil_div(2 * p * (x + 1), w) {
        out.push(Crossing {
            family: Family::P,
            intercept: y + k,
            num: k * w,
            den: 2 * p,
            mass: diagonal_value(param, y + k),
            merged: false,
        });
    }
    let n_p = out.len();
    // Q: owned when 2qx < kω ≤ 2q(x+1).
    for k in (2 * q * x).div_euclid(w) + 1..=(2 * q * (x + 1)).div_euclid(w) {
        let (num, den) = (k * w, 2 * q);
        if let Some(c) = out[..n_p]
            .iter_mut()
            .find(|c| c.num * den == num * c.den)
        {
            c.merged = true;
            continue;
        }
        out.push(Crossing {
            family: Family::Q,
            intercept: y + k,
            num,
            den,
            mass: diagonal_value(param, y + k),
            merged: false,
        });
    }
}

/// Crossings owned by a vertical segment; the coordinate is the height.
pub(crate) fn vertical_crossings(param: &Param, x: i64, y: i64, out: &mut Vec<Crossing>) {
    let w = param.omega();
    out.clear();
    for (family, s) in [(Family::P, 2 * param.p()), (Family::Q, 2 * param.q())] {
        // The line with intercept m meets x at height (mω − sx)/ω, owned when
        // yω + sx ≤ mω < (y+1)ω + sx.
        for m in ceil_div(y * w + s * x, w)..ceil_div((y + 1) * w + s * x, w) {
            out.push(Crossing {
                family,
                intercept: m,
                num: m * w - s * x,
                den: w,
                mass: diagonal_value(param, m),
                merged: false,
            });
        }
    }
}

/// Signed capacity of the host line of a segment.
pub(crate) fn host_value(param: &Param, seg: Segment) -> i64 {
    match seg {
        Segment::Horizontal { y, .. } => axis_value(param, y),
        Segment::Vertical { x, .. } => axis_value(param, x),
    }
}

/// Light count from integer data alone; the sweep hot path.
pub(crate) fn light_count_fast(
    param: &Param,
    seg: Segment,
    rule: CountingRule,
    buf: &mut Vec<Crossing>,
) -> u8 {
    let a = host_value(param, seg);
    if a == 0 {
        return 0;
    }
    match seg {
        Segment::Horizontal { x, y } => horizontal_crossings(param, x, y, buf),
        Segment::Vertical { x, y } => vertical_crossings(param, x, y, buf),
    }
    let w = param.omega();
    buf.iter()
        .filter(|c| is_light(a, c.mass, w))
        .map(|c| match (c.merged, rule) {
            (true, CountingRule::Standard) => 2,
            _ => 1,
        })
        .sum()
}

fn build_point<S: Scalar>(param: &Param, seg: Segment, c: &Crossing, rule: CountingRule) -> IntersectionPoint<S> {
    let w = param.omega();
    let a = host_value(param, seg);
    let t = S::ratio(c.num, c.den);
    let location = match seg {
        Segment::Horizontal { y, .. } => (t, S::int(y)),
        Segment::Vertical { x, .. } => (S::int(x), t),
    };
    let (ptype, partner) = if c.merged {
        (PointType::Both, Some(GridLine::new(Family::Q, c.intercept)))
    } else if c.family == Family::P {
        (PointType::P, None)
    } else {
        (PointType::Q, None)
    };
    let multiplicity = if c.merged && rule == CountingRule::Standard { 2 } else { 1 };
    IntersectionPoint {
        location,
        host: seg.host(),
        crossing: GridLine::new(c.family, c.intercept),
        partner,
        brightness: if is_light(a, c.mass, w) {
            Brightness::Light
        } else {
            Brightness::Dark
        },
        ptype,
        multiplicity,
        capacity: LineInvariants::from_signed(a, w),
        mass: LineInvariants::from_signed(c.mass, w),
    }
}

/// The intersection points owned by `seg`, ordered along the segment.
pub fn segment_points<S: Scalar>(param: &Param, seg: Segment) -> Vec<IntersectionPoint<S>> {
    segment_points_with(param, seg, CountingRule::Standard)
}

pub fn segment_points_with<S: Scalar>(
    param: &Param,
    seg: Segment,
    rule: CountingRule,
) -> Vec<IntersectionPoint<S>> {
    let mut buf = Vec::new();
    match seg {
        Segment::Horizontal { x, y } => horizontal_crossings(param, x, y, &mut buf),
        Segment::Vertical { x, y } => vertical_crossings(param, x, y, &mut buf),
    }
    let mut pts: Vec<_> = buf.iter().map(|c| build_point(param, seg, c, rule)).collect();
    pts.sort_by(|a, b| a.location.cmp(&b.location));
    pts
}

/// Sum of multiplicities of the light points owned by `seg`.
pub fn light_count(param: &Param, seg: Segment) -> u8 {
    light_count_with(param, seg, CountingRule::Standard)
}

pub fn light_count_with(param: &Param, seg: Segment, rule: CountingRule) -> u8 {
    light_count_fast(param, seg, rule, &mut Vec::with_capacity(4))
}

/// Classifies the crossing of `host` and the diagonal line of family
/// `crossing` through `(x, y)`, ignoring segment ownership.
///
/// Returns `None` unless `(x, y)` lies on `host` and on some line of the
/// diagonal family. Used by the symmetry checks, where reflected points can
/// land on either side of a shared corner.
pub fn classify_at<S: Scalar>(
    param: &Param,
    x: &S,
    y: &S,
    host: Family,
    crossing: Family,
) -> Option<IntersectionPoint<S>> {
    let w = param.omega();
    let host_line = match host {
        Family::H if y.is_integer() => GridLine::new(Family::H, y.floor_i64()),
        Family::V if x.is_integer() => GridLine::new(Family::V, x.floor_i64()),
        _ => return None,
    };
    let slope = match crossing {
        Family::P => param.big_p::<S>(),
        Family::Q => param.big_q::<S>(),
        _ => return None,
    };
    let m = y.clone() + slope * x.clone();
    if !m.is_integer() {
        return None;
    }
    let m = m.floor_i64();
    let a = axis_value(param, host_line.intercept);
    let b = diagonal_value(param, m);
    let ptype = if crossing == Family::P { PointType::P } else { PointType::Q };
    Some(IntersectionPoint {
        location: (x.clone(), y.clone()),
        host: host_line,
        crossing: GridLine::new(crossing, m),
        partner: None,
        brightness: if is_light(a, b, w) {
            Brightness::Light
        } else {
            Brightness::Dark
        },
        ptype,
        multiplicity: 1,
        capacity: LineInvariants::from_signed(a, w),
        mass: LineInvariants::from_signed(b, w),
    })
}
