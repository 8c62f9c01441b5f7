//! Light points carried by the capacity lines of a block.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::lines::{line_invariants, Family, GridLine};
use super::segment::{light_count, Segment};
use super::square::Block;
use crate::param::Param;

/// An axis line meeting a block, with its capacity and the light points it
/// carries inside the block, counted with multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusLine {
    pub line: GridLine,
    pub capacity: i64,
    pub light: i64,
}

/// The unit segments of an axis line that lie in a block.
pub fn block_segments(param: &Param, block: Block, line: GridLine) -> Vec<Segment> {
    let w = param.omega();
    match line.family {
        Family::H => (block.i * w..(block.i + 1) * w)
            .map(|x| Segment::Horizontal { x, y: line.intercept })
            .collect(),
        Family::V => (block.j * w..(block.j + 1) * w)
            .map(|y| Segment::Vertical { x: line.intercept, y })
            .collect(),
        Family::P | Family::Q => panic!("only axis lines carry capacities"),
    }
}

/// Every horizontal and vertical line meeting the block, boundaries included.
pub fn block_lines(param: &Param, block: Block) -> Vec<CensusLine> {
    let w = param.omega();
    let h = (block.j * w..=(block.j + 1) * w).map(|c| GridLine::new(Family::H, c));
    let v = (block.i * w..=(block.i + 1) * w).map(|c| GridLine::new(Family::V, c));
    h.chain(v)
        .map(|line| CensusLine {
            line,
            capacity: line_invariants(param, line).magnitude,
            light: block_segments(param, block, line)
                .into_iter()
                .map(|s| light_count(param, s) as i64)
                .sum(),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CensusViolation {
    /// Capacity `k` is met by the wrong number of lines of one family.
    LineCount { capacity: i64, family: Family, lines: usize },
    /// A line carries a light count different from its capacity.
    LightCount(CensusLine),
}

/// Checks that each even capacity `k ≤ ω` is met by two horizontal and two
/// vertical lines, each carrying exactly `k` light points in the block.
pub fn capacity_census(param: &Param, block: Block) -> Vec<CensusViolation> {
    let lines = block_lines(param, block);
    let mut out = Vec::new();
    let mut by_cap: BTreeMap<(i64, Family), usize> = BTreeMap::new();
    for l in &lines {
        *by_cap.entry((l.capacity, l.line.family)).or_default() += 1;
        if l.light != l.capacity {
            out.push(CensusViolation::LightCount(*l));
        }
    }
    for k in (0..=param.omega()).step_by(2) {
        for family in [Family::H, Family::V] {
            let n = by_cap.get(&(k, family)).copied().unwrap_or(0);
            if n != 2 {
                out.push(CensusViolation::LineCount { capacity: k, family, lines: n });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::{even_parameters, make_param};

    #[test]
    fn census_small() {
        for par in even_parameters(15) {
            for block in [Block::new(0, 0), Block::new(1, 0), Block::new(par.omega() - 1, 0)] {
                assert_eq!(capacity_census(&par, block), vec![], "{par} {block:?}");
            }
        }
    }

    #[test]
    fn capacity_two_lines_at_two_five() {
        let par = make_param(2, 5).unwrap();
        let lines = block_lines(&par, Block::new(0, 0));
        let mut two: Vec<_> = lines.iter().filter(|l| l.capacity == 2).map(|l| l.line).collect();
        two.sort();
        let expect = [
            GridLine::new(Family::H, 2),
            GridLine::new(Family::H, 5),
            GridLine::new(Family::V, 2),
            GridLine::new(Family::V, 5),
        ];
        assert_eq!(two, expect);
    }
}
