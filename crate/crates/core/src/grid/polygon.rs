//! Plaid polygons: closed loops of connectors through tile centers.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::segment::CountingRule;
use super::square::{Direction, EdgeSet, GoodEdgeMap, Region, UnitSquare};
use crate::param::Param;

/// A closed embedded lattice loop, listed by tile (square) without repeating
/// the first vertex at the end.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PlaidPolygon {
    vertices: Vec<UnitSquare>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("{} incoherent squares, first at {:?}", .0.len(), .0.first())]
    IncoherentInput(Vec<(UnitSquare, EdgeSet)>),
    #[error("connector leaves the region at {0:?}")]
    LeavesRegion(UnitSquare),
    #[error("vertex list is not a closed embedded unit-step loop")]
    NotALoop,
}

impl PlaidPolygon {
    /// Validates a loop and puts it in canonical form: the smallest vertex
    /// (by `x`, then `y`) first, followed by the smaller of its neighbours.
    pub fn new(mut vertices: Vec<UnitSquare>) -> Result<Self, TraceError> {
        let n = vertices.len();
        if n < 4 {
            return Err(TraceError::NotALoop);
        }
        let unique: HashSet<_> = vertices.iter().collect();
        if unique.len() != n {
            return Err(TraceError::NotALoop);
        }
        for i in 0..n {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            if (a.x - b.x).abs() + (a.y - b.y).abs() != 1 {
                return Err(TraceError::NotALoop);
            }
        }
        let start = (0..n).min_by_key(|&i| vertices[i]).expect("nonempty");
        vertices.rotate_left(start);
        if vertices[n - 1] < vertices[1] {
            vertices[1..].reverse();
        }
        Ok(PlaidPolygon { vertices })
    }

    pub fn vertices(&self) -> &[UnitSquare] {
        &self.vertices
    }

    /// Number of connectors, equal to the number of vertices.
    pub fn perimeter(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, sq: UnitSquare) -> bool {
        self.vertices.contains(&sq)
    }

    /// `(min, max)` of the vertex x-indices.
    pub fn x_range(&self) -> (i64, i64) {
        let xs = self.vertices.iter().map(|v| v.x);
        (xs.clone().min().unwrap(), xs.max().unwrap())
    }

    pub fn y_range(&self) -> (i64, i64) {
        let ys = self.vertices.iter().map(|v| v.y);
        (ys.clone().min().unwrap(), ys.max().unwrap())
    }

    /// The edge set each vertex uses, in vertex order.
    pub fn connectors(&self) -> Vec<(UnitSquare, EdgeSet)> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let v = self.vertices[i];
                let dir = |w: UnitSquare| Direction::from_vector((w.x - v.x, w.y - v.y)).expect("unit step");
                let prev = dir(self.vertices[(i + n - 1) % n]);
                let next = dir(self.vertices[(i + 1) % n]);
                (v, EdgeSet::from_dirs(&[prev, next]))
            })
            .collect()
    }

    /// Image under an affine map of square indices; re-canonicalized.
    pub fn map(&self, f: impl Fn(UnitSquare) -> UnitSquare) -> Self {
        PlaidPolygon::new(self.vertices.iter().map(|v| f(*v)).collect()).expect("isometry keeps loops")
    }
}

/// Traces all polygons inside a region, sorted by canonical form.
pub fn trace_polygons(param: &Param, region: Region) -> Result<Vec<PlaidPolygon>, TraceError> {
    let map = GoodEdgeMap::new(param, region, CountingRule::Standard);
    trace_with_map(&map)
}

pub(crate) fn trace_with_map(map: &GoodEdgeMap) -> Result<Vec<PlaidPolygon>, TraceError> {
    let region = map.region();
    let edges: Vec<(UnitSquare, EdgeSet)> = region.squares().map(|sq| (sq, map.good_edges(sq))).collect();
    let bad: Vec<_> = edges.iter().filter(|(_, e)| e.len() != 0 && e.len() != 2).copied().collect();
    if !bad.is_empty() {
        return Err(TraceError::IncoherentInput(bad));
    }
    let idx = |sq: UnitSquare| ((sq.y - region.y0) * region.width + (sq.x - region.x0)) as usize;
    let mut seen = vec![false; edges.len()];
    let mut out = Vec::new();
    for &(start, e) in &edges {
        if e.is_empty() || seen[idx(start)] {
            continue;
        }
        let mut loop_ = vec![start];
        seen[idx(start)] = true;
        let mut heading = e.iter().next().expect("two edges");
        let mut cur = start.step(heading);
        while cur != start {
            if !region.contains(cur) {
                return Err(TraceError::LeavesRegion(cur));
            }
            let ce = edges[idx(cur)].1;
            let entry = heading.opposite();
            // Coherence of the neighbour does not imply it has a matching edge:
            // segments are shared, so a good edge is good on both sides.
            heading = ce.other(entry).expect("shared good edge");
            seen[idx(cur)] = true;
            loop_.push(cur);
            cur = cur.step(heading);
        }
        out.push(PlaidPolygon::new(loop_)?);
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::square::{good_edges, Block};
    use crate::param::make_param;

    fn sq(x: i64, y: i64) -> UnitSquare {
        UnitSquare::new(x, y)
    }

    #[test]
    fn canonical_form_is_rotation_and_reflection_free() {
        let a = vec![sq(1, 1), sq(2, 1), sq(2, 2), sq(1, 2)];
        let b = vec![sq(2, 2), sq(2, 1), sq(1, 1), sq(1, 2)];
        let pa = PlaidPolygon::new(a).unwrap();
        assert_eq!(pa, PlaidPolygon::new(b).unwrap());
        assert_eq!(pa.vertices(), &[sq(1, 1), sq(1, 2), sq(2, 2), sq(2, 1)]);
    }

    #[test]
    fn rejects_non_loops() {
        assert!(PlaidPolygon::new(vec![sq(0, 0), sq(1, 0), sq(1, 1)]).is_err());
        assert!(PlaidPolygon::new(vec![sq(0, 0), sq(2, 0), sq(2, 1), sq(0, 1)]).is_err());
    }

    #[test]
    fn smallest_parameter_loops_stay_in_block() {
        let par = make_param(1, 2).unwrap();
        let polys = trace_polygons(&par, Block::new(0, 0).region(&par)).unwrap();
        assert!(!polys.is_empty());
        for p in &polys {
            let (x0, x1) = p.x_range();
            let (y0, y1) = p.y_range();
            assert!(x0 >= 0 && x1 < 3 && y0 >= 0 && y1 < 3);
        }
    }

    #[test]
    fn polygons_partition_the_two_edge_squares() {
        let par = make_param(2, 5).unwrap();
        let region = Block::new(0, 0).region(&par);
        let polys = trace_polygons(&par, region).unwrap();
        let mut on_polygon = HashSet::new();
        for p in &polys {
            for (v, e) in p.connectors() {
                assert!(on_polygon.insert(v), "polygons overlap at {v:?}");
                assert_eq!(e, good_edges(&par, v));
            }
        }
        let two_edge: HashSet<_> = region.squares().filter(|s| good_edges(&par, *s).len() == 2).collect();
        assert_eq!(on_polygon, two_edge);
        let connectors: usize = polys.iter().map(|p| p.perimeter()).sum();
        assert_eq!(connectors, two_edge.len());
    }

    #[test]
    fn leaving_the_region_is_reported() {
        let par = make_param(2, 5).unwrap();
        let polys = trace_polygons(&par, Region::new(0, 0, 7, 7)).unwrap();
        let big = polys.iter().max_by_key(|p| p.perimeter()).unwrap();
        let (x0, x1) = big.x_range();
        let cut = Region::new(0, 0, x0 + (x1 - x0) / 2 + 1, 7);
        assert!(matches!(trace_polygons(&par, cut), Err(TraceError::LeavesRegion(_))));
    }
}
