use serde::{Deserialize, Serialize};

use super::stats::x_diameter;
use crate::grid::{
    light_count, segment_points, trace_polygons, Block, PlaidPolygon, Segment, TraceError, UnitSquare,
};
use crate::grid::{line_invariants, Family, GridLine, Sign};
use crate::param::Param;
use crate::scalar::{to_fraction_string, Scalar};
use crate::Rat;

/// The large symmetric polygon of the first block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstReport {
    /// Height of the horizontal capacity-2 line of positive sign.
    pub line_y: i64,
    /// `ω²/(2q) − 1` as a fraction string.
    pub bound: String,
    /// `true` when `(0, y)` and `(ω²/2q, y)` are the light points of the line.
    pub witnesses_light: bool,
    pub polygon: Option<PlaidPolygon>,
    pub x_diameter: i64,
    pub symmetric: bool,
}

impl FirstReport {
    pub fn is_ok(&self) -> bool {
        let bound: Rat = crate::scalar::parse_fraction(&self.bound).expect("fraction");
        self.witnesses_light && self.polygon.is_some() && self.symmetric && Rat::int(self.x_diameter) >= bound
    }
}

/// The polygon through the edge containing `z`, if any.
fn polygon_through(polys: &[PlaidPolygon], seg: Segment) -> Option<&PlaidPolygon> {
    let Segment::Horizontal { x, y } = seg else { return None };
    let (a, b) = (UnitSquare::new(x, y - 1), UnitSquare::new(x, y));
    polys.iter().find(|p| {
        let v = p.vertices();
        let n = v.len();
        (0..n).any(|i| {
            let (s, t) = (v[i], v[(i + 1) % n]);
            (s == a && t == b) || (s == b && t == a)
        })
    })
}

/// Finds the polygon crossing both light points of the horizontal line of
/// capacity 2 and positive sign, and checks its width and its symmetry in the
/// horizontal midline of the first block.
pub fn verify_first(param: &Param) -> Result<FirstReport, TraceError> {
    let w = param.omega();
    let q = param.q();
    let line_y = (0..w)
        .find(|&y| {
            let inv = line_invariants(param, GridLine::new(Family::H, y));
            inv.magnitude == 2 && inv.sign == Sign::Plus
        })
        .expect("a capacity-2 line of each sign meets the block");
    let z2 = Rat::ratio(w * w, 2 * q);
    let bound = z2.clone() - Rat::int(1);
    let seg1 = Segment::Horizontal { x: 0, y: line_y };
    let seg2 = Segment::Horizontal { x: z2.floor_i64(), y: line_y };

    let light_xs: Vec<Rat> = (0..w)
        .flat_map(|x| segment_points::<Rat>(param, Segment::Horizontal { x, y: line_y }))
        .filter(|p| p.is_light())
        .map(|p| p.location.0)
        .collect();
    let witnesses_light = light_xs == [Rat::int(0), z2.clone()]
        && light_count(param, seg1) == 1
        && light_count(param, seg2) == 1;

    let polys = trace_polygons(param, Block::new(0, 0).region(param))?;
    let polygon = polygon_through(&polys, seg1).filter(|p| polygon_through(&polys, seg2) == Some(*p)).cloned();
    let (x_diam, symmetric) = match &polygon {
        Some(p) => {
            let mirrored = p.map(|s| UnitSquare::new(s.x, w - 1 - s.y));
            (x_diameter(p), &mirrored == p)
        }
        None => (0, false),
    };
    Ok(FirstReport {
        line_y,
        bound: to_fraction_string(&bound),
        witnesses_light,
        polygon,
        x_diameter: x_diam,
        symmetric,
    })
}
