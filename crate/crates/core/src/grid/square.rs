//! Unit squares, good edges and coherence.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::segment::{light_count_fast, CountingRule, Segment};
use crate::param::Param;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    N,
    S,
    E,
    W,
}

impl Direction {
    pub const ALL: [Direction; 4] = [Direction::N, Direction::S, Direction::E, Direction::W];

    pub fn opposite(self) -> Direction {
        match self {
            Direction::N => Direction::S,
            Direction::S => Direction::N,
            Direction::E => Direction::W,
            Direction::W => Direction::E,
        }
    }

    /// Unit step toward the neighbouring square across this edge.
    pub fn vector(self) -> (i64, i64) {
        match self {
            Direction::N => (0, 1),
            Direction::S => (0, -1),
            Direction::E => (1, 0),
            Direction::W => (-1, 0),
        }
    }

    pub fn from_vector(v: (i64, i64)) -> Option<Direction> {
        Direction::ALL.into_iter().find(|d| d.vector() == v)
    }

    fn bit(self) -> u8 {
        match self {
            Direction::N => 1,
            Direction::S => 2,
            Direction::E => 4,
            Direction::W => 8,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Direction::N => 'N',
            Direction::S => 'S',
            Direction::E => 'E',
            Direction::W => 'W',
        }
    }
}

/// A subset of `{N, S, E, W}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct EdgeSet(u8);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn from_dirs(dirs: &[Direction]) -> Self {
        EdgeSet(dirs.iter().fold(0, |acc, d| acc | d.bit()))
    }

    pub fn insert(&mut self, d: Direction) {
        self.0 |= d.bit();
    }

    pub fn contains(self, d: Direction) -> bool {
        self.0 & d.bit() != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Direction> {
        Direction::ALL.into_iter().filter(move |d| self.contains(*d))
    }

    /// The edge other than `d` in a two-edge set.
    pub fn other(self, d: Direction) -> Option<Direction> {
        if self.len() != 2 || !self.contains(d) {
            return None;
        }
        self.iter().find(|e| *e != d)
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in self.iter() {
            write!(f, "{}", d.letter())?;
        }
        Ok(())
    }
}

/// The unit square `[x, x+1] × [y, y+1]`; it also names the tile center
/// `(x + 1/2, y + 1/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UnitSquare {
    pub x: i64,
    pub y: i64,
}

impl UnitSquare {
    pub fn new(x: i64, y: i64) -> Self {
        UnitSquare { x, y }
    }

    /// The square whose center is `(cx, cy)`; `None` unless both are odd
    /// half-integers.
    pub fn from_center<S: Scalar>(cx: &S, cy: &S) -> Option<Self> {
        let h = S::ratio(1, 2);
        let (x, y) = (cx.clone() - h.clone(), cy.clone() - h);
        (x.is_integer() && y.is_integer()).then(|| UnitSquare::new(x.floor_i64(), y.floor_i64()))
    }

    pub fn center<S: Scalar>(&self) -> (S, S) {
        (S::ratio(2 * self.x + 1, 2), S::ratio(2 * self.y + 1, 2))
    }

    pub fn edge(&self, d: Direction) -> Segment {
        let (x, y) = (self.x, self.y);
        match d {
            Direction::N => Segment::Horizontal { x, y: y + 1 },
            Direction::S => Segment::Horizontal { x, y },
            Direction::E => Segment::Vertical { x: x + 1, y },
            Direction::W => Segment::Vertical { x, y },
        }
    }

    pub fn step(&self, d: Direction) -> UnitSquare {
        let (dx, dy) = d.vector();
        UnitSquare::new(self.x + dx, self.y + dy)
    }
}

/// The block `[iω, (i+1)ω] × [jω, (j+1)ω]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Block {
    pub i: i64,
    pub j: i64,
}

impl Block {
    pub fn new(i: i64, j: i64) -> Self {
        Block { i, j }
    }

    pub fn region(&self, param: &Param) -> Region {
        let w = param.omega();
        Region::new(self.i * w, self.j * w, w, w)
    }

    /// The block containing the square.
    pub fn containing(param: &Param, sq: UnitSquare) -> Block {
        let w = param.omega();
        Block::new(sq.x.div_euclid(w), sq.y.div_euclid(w))
    }

    /// The fundamental blocks `B_0, …, B_{ω−1}`.
    pub fn fundamental(param: &Param) -> Vec<Block> {
        (0..param.omega()).map(|i| Block::new(i, 0)).collect()
    }
}

/// A rectangle of unit squares with southwest corner `(x0, y0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Region {
    pub x0: i64,
    pub y0: i64,
    pub width: i64,
    pub height: i64,
}

impl Region {
    pub fn new(x0: i64, y0: i64, width: i64, height: i64) -> Self {
        assert!(width > 0 && height > 0, "empty region");
        Region { x0, y0, width, height }
    }

    /// `[0, ω²] × [0, ω]`, a fundamental domain of the symmetry lattice.
    pub fn fundamental_domain(param: &Param) -> Self {
        let w = param.omega();
        Region::new(0, 0, w * w, w)
    }

    pub fn contains(&self, sq: UnitSquare) -> bool {
        (self.x0..self.x0 + self.width).contains(&sq.x) && (self.y0..self.y0 + self.height).contains(&sq.y)
    }

    /// Squares in row-major order from the southwest corner.
    pub fn squares(&self) -> impl Iterator<Item = UnitSquare> + '_ {
        (self.y0..self.y0 + self.height)
            .flat_map(move |y| (self.x0..self.x0 + self.width).map(move |x| UnitSquare::new(x, y)))
    }

    pub fn area(&self) -> i64 {
        self.width * self.height
    }
}

/// Light counts of every edge of a region, each shared edge computed once.
#[derive(Debug, Clone)]
pub struct GoodEdgeMap {
    region: Region,
    /// `(width) × (height+1)` horizontal edges, row-major.
    horizontal: Vec<u8>,
    /// `(width+1) × (height)` vertical edges, row-major.
    vertical: Vec<u8>,
}

impl GoodEdgeMap {
    pub fn new(param: &Param, region: Region, rule: CountingRule) -> Self {
        let Region { x0, y0, width, height } = region;
        let mut buf = Vec::with_capacity(4);
        let mut horizontal = Vec::with_capacity((width * (height + 1)) as usize);
        for y in y0..=y0 + height {
            for x in x0..x0 + width {
                horizontal.push(light_count_fast(param, Segment::Horizontal { x, y }, rule, &mut buf));
            }
        }
        let mut vertical = Vec::with_capacity(((width + 1) * height) as usize);
        for y in y0..y0 + height {
            for x in x0..=x0 + width {
                vertical.push(light_count_fast(param, Segment::Vertical { x, y }, rule, &mut buf));
            }
        }
        GoodEdgeMap {
            region,
            horizontal,
            vertical,
        }
    }

    pub fn region(&self) -> Region {
        self.region
    }

    /// Light count of an edge of a square inside the region.
    pub fn light_count(&self, sq: UnitSquare, d: Direction) -> u8 {
        debug_assert!(self.region.contains(sq));
        let (i, j) = (sq.x - self.region.x0, sq.y - self.region.y0);
        let w = self.region.width;
        let idx = match d {
            Direction::S => j * w + i,
            Direction::N => (j + 1) * w + i,
            Direction::W => j * (w + 1) + i,
            Direction::E => j * (w + 1) + i + 1,
        } as usize;
        match d {
            Direction::N | Direction::S => self.horizontal[idx],
            Direction::E | Direction::W => self.vertical[idx],
        }
    }

    pub fn good_edges(&self, sq: UnitSquare) -> EdgeSet {
        let mut e = EdgeSet::EMPTY;
        for d in Direction::ALL {
            if self.light_count(sq, d) == 1 {
                e.insert(d);
            }
        }
        e
    }
}

/// Edges of the square containing exactly one light point.
pub fn good_edges(param: &Param, sq: UnitSquare) -> EdgeSet {
    good_edges_with(param, sq, CountingRule::Standard)
}

pub fn good_edges_with(param: &Param, sq: UnitSquare, rule: CountingRule) -> EdgeSet {
    let mut buf = Vec::with_capacity(4);
    let mut e = EdgeSet::EMPTY;
    for d in Direction::ALL {
        if light_count_fast(param, sq.edge(d), rule, &mut buf) == 1 {
            e.insert(d);
        }
    }
    e
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coherence {
    Ok,
    /// Squares with neither 0 nor 2 good edges.
    Incoherent(Vec<(UnitSquare, EdgeSet)>),
}

impl Coherence {
    pub fn is_ok(&self) -> bool {
        matches!(self, Coherence::Ok)
    }
}

pub fn check_coherence(param: &Param, region: Region) -> Coherence {
    check_coherence_with(param, region, CountingRule::Standard)
}

pub fn check_coherence_with(param: &Param, region: Region, rule: CountingRule) -> Coherence {
    let map = GoodEdgeMap::new(param, region, rule);
    let bad: Vec<_> = region
        .squares()
        .filter_map(|sq| {
            let e = map.good_edges(sq);
            (e.len() != 0 && e.len() != 2).then_some((sq, e))
        })
        .collect();
    if bad.is_empty() {
        Coherence::Ok
    } else {
        Coherence::Incoherent(bad)
    }
}
