use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::stats::polygon_stats;
use crate::grid::{trace_polygons, Block, TraceError};
use crate::param::Param;

/// Largest Chebyshev distance from a square of the block to the nearest
/// square visited by a polygon; `None` when the block holds no polygon.
pub fn gap_radius(param: &Param, block: Block) -> Result<Option<i64>, TraceError> {
    let region = block.region(param);
    let polys = trace_polygons(param, region)?;
    let (w, h) = (region.width as usize, region.height as usize);
    let mut dist = vec![i64::MAX; w * h];
    let mut queue = VecDeque::new();
    for v in polys.iter().flat_map(|p| p.vertices()) {
        let i = (v.y - region.y0) as usize * w + (v.x - region.x0) as usize;
        if dist[i] != 0 {
            dist[i] = 0;
            queue.push_back(i);
        }
    }
    if queue.is_empty() {
        return Ok(None);
    }
    // King moves realize the Chebyshev metric.
    while let Some(i) = queue.pop_front() {
        let (x, y) = ((i % w) as i64, (i / w) as i64);
        for dx in -1..=1 {
            for dy in -1..=1 {
                let (nx, ny) = (x + dx, y + dy);
                if nx < 0 || ny < 0 || nx >= w as i64 || ny >= h as i64 {
                    continue;
                }
                let j = ny as usize * w + nx as usize;
                if dist[j] == i64::MAX {
                    dist[j] = dist[i] + 1;
                    queue.push_back(j);
                }
            }
        }
    }
    Ok(dist.into_iter().max())
}

/// Observables of the first block at one parameter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrendRow {
    pub param: Param,
    pub polygons: usize,
    pub max_diameter: i64,
    pub max_x_diameter: i64,
    pub gap_radius: Option<i64>,
}

pub fn trend(params: &[Param]) -> Result<Vec<TrendRow>, TraceError> {
    params
        .iter()
        .map(|par| {
            let b = Block::new(0, 0);
            let s = polygon_stats(par, &[b])?;
            Ok(TrendRow {
                param: *par,
                polygons: s.count,
                max_diameter: s.max_diameter,
                max_x_diameter: s.max_x_diameter,
                gap_radius: gap_radius(par, b)?,
            })
        })
        .collect()
}
