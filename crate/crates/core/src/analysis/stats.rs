use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::grid::{trace_polygons, Block, PlaidPolygon, TraceError};
use crate::param::Param;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonStats {
    /// Distinct polygons over all requested blocks.
    pub count: usize,
    /// Largest coordinate extent, `max(x-diameter, y-diameter)`.
    pub max_diameter: i64,
    /// Largest width of the projection to the x-axis.
    pub max_x_diameter: i64,
    pub per_block: BTreeMap<Block, usize>,
}

/// Width of the projection of the polygon to the x-axis.
pub fn x_diameter(poly: &PlaidPolygon) -> i64 {
    let (lo, hi) = poly.x_range();
    hi - lo
}

pub fn diameter(poly: &PlaidPolygon) -> i64 {
    let (ylo, yhi) = poly.y_range();
    x_diameter(poly).max(yhi - ylo)
}

pub fn polygon_stats(param: &Param, blocks: &[Block]) -> Result<PolygonStats, TraceError> {
    let mut all = BTreeSet::new();
    let mut per_block = BTreeMap::new();
    for &b in blocks {
        let polys = trace_polygons(param, b.region(param))?;
        per_block.insert(b, polys.len());
        all.extend(polys);
    }
    Ok(PolygonStats {
        count: all.len(),
        max_diameter: all.iter().map(diameter).max().unwrap_or(0),
        max_x_diameter: all.iter().map(x_diameter).max().unwrap_or(0),
        per_block,
    })
}
