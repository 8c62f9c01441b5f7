use serde::{Deserialize, Serialize};

use crate::grid::{block_lines, block_segments, segment_points, Block, Family};
use crate::param::Param;
use crate::Rat64;

/// The `(K+1)²` rectangles cut from a block by its lines of capacity at
/// most `K`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectGrid {
    pub k: i64,
    pub block: Block,
    /// Positions of the cutting vertical lines, boundaries included, sorted.
    pub xs: Vec<i64>,
    pub ys: Vec<i64>,
    /// `(column, row)` of every rectangle with no light point on its boundary.
    pub empty: Vec<(usize, usize)>,
    /// Light points on the cutting lines, counted with multiplicity.
    pub light_total: i64,
}

impl RectGrid {
    pub fn cells(&self) -> usize {
        (self.xs.len() - 1) * (self.ys.len() - 1)
    }

    /// `8·(1 + 2 + … + K/2) = (K+1)² − 1`, the number of light points the
    /// cutting lines can carry.
    pub fn capacity_bound(&self) -> i64 {
        8 * (1..=self.k / 2).sum::<i64>()
    }
}

/// Cuts the block along its lines of capacity `≤ k` and lists the empty
/// rectangles. Panics unless `k` is even and `0 ≤ k < ω`.
pub fn empty_rectangles(param: &Param, block: Block, k: i64) -> RectGrid {
    assert!(k >= 0 && k % 2 == 0 && k < param.omega(), "K must be even in [0, ω)");
    let cut: Vec<_> = block_lines(param, block).into_iter().filter(|l| l.capacity <= k).collect();
    let positions = |f: Family| {
        let mut v: Vec<i64> = cut.iter().filter(|l| l.line.family == f).map(|l| l.line.intercept).collect();
        v.sort_unstable();
        v
    };
    let (xs, ys) = (positions(Family::V), positions(Family::H));
    let light_total = cut.iter().map(|l| l.light).sum();

    // Light points on the cutting lines.
    let mut on_h: Vec<(i64, Rat64)> = Vec::new();
    let mut on_v: Vec<(i64, Rat64)> = Vec::new();
    for l in &cut {
        for seg in block_segments(param, block, l.line) {
            for pt in segment_points::<Rat64>(param, seg).into_iter().filter(|p| p.is_light()) {
                match l.line.family {
                    Family::H => on_h.push((l.line.intercept, pt.location.0)),
                    _ => on_v.push((l.line.intercept, pt.location.1)),
                }
            }
        }
    }
    let mut empty = Vec::new();
    for c in 0..xs.len() - 1 {
        for r in 0..ys.len() - 1 {
            let (x0, x1) = (Rat64::from(xs[c]), Rat64::from(xs[c + 1]));
            let (y0, y1) = (Rat64::from(ys[r]), Rat64::from(ys[r + 1]));
            let hit_h = on_h
                .iter()
                .any(|(y, x)| (*y == ys[r] || *y == ys[r + 1]) && x0 <= *x && *x <= x1);
            let hit_v = on_v
                .iter()
                .any(|(x, y)| (*x == xs[c] || *x == xs[c + 1]) && y0 <= *y && *y <= y1);
            if !hit_h && !hit_v {
                empty.push((c, r));
            }
        }
    }
    RectGrid {
        k,
        block,
        xs,
        ys,
        empty,
        light_total,
    }
}
