//! The three `T`-zones and their checkerboard data.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::checkerboard::{CheckerboardSpec, SymbolMatrix};
use crate::grid::Direction::{self, E, N, S, W};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Zone {
    One,
    Two,
    Three,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZoneData<S> {
    pub zone: Zone,
    pub spec: CheckerboardSpec<S>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZoneError<S: std::fmt::Debug> {
    /// `T` sits on the boundary between two zones; both data sets are given.
    #[error("T lies on a zone boundary")]
    BoundaryFiber { lower: ZoneData<S>, upper: ZoneData<S> },
    #[error("T lies outside [−1, 1]")]
    OutOfRange,
}

const fn m(rows: [[u8; 4]; 4]) -> SymbolMatrix {
    const fn sym(c: u8) -> Option<Direction> {
        match c {
            b'N' => Some(N),
            b'S' => Some(S),
            b'E' => Some(E),
            b'W' => Some(W),
            _ => None,
        }
    }
    let mut out = [[None; 4]; 4];
    let mut i = 0;
    while i < 4 {
        let mut j = 0;
        while j < 4 {
            out[i][j] = sym(rows[i][j]);
            j += 1;
        }
        i += 1;
    }
    out
}

pub const M1: SymbolMatrix = m([*b"...W", *b"N...", *b".E..", *b"..S."]);
pub const M2: SymbolMatrix = m([*b"N...", *b"..E.", *b".W..", *b"...S"]);
pub const M3: SymbolMatrix = m([*b".N..", *b"..W.", *b"...S", *b"E..."]);

/// The checkerboard data of a zone at `T`, without range checks.
pub fn zone_data<S: Scalar>(big_p: &S, t: &S, zone: Zone) -> ZoneData<S> {
    let (one, two, p, t) = (S::one(), S::two(), big_p.clone(), t.clone());
    let (u, m) = match zone {
        Zone::One => ([t.clone(), one.clone() - p.clone(), two - p + t], M1),
        Zone::Two => ([p.clone() - one.clone(), t, one - p], M2),
        Zone::Three => ([p.clone() + t.clone() - two, p - one, t], M3),
    };
    ZoneData {
        zone,
        spec: CheckerboardSpec { u, m },
    }
}

/// Zone 1 is `T ∈ [−1, −1+P]`, zone 2 is `[−1+P, 1−P]`, zone 3 is `[1−P, 1]`.
pub fn zone_of<S: Scalar>(big_p: &S, t: &S) -> Result<ZoneData<S>, ZoneError<S>> {
    let one = S::one();
    let lo = big_p.clone() - one.clone();
    let hi = one.clone() - big_p.clone();
    if *t < -one.clone() || *t > one {
        return Err(ZoneError::OutOfRange);
    }
    if *t == lo || *t == hi {
        let (a, b) = if *t == lo { (Zone::One, Zone::Two) } else { (Zone::Two, Zone::Three) };
        return Err(ZoneError::BoundaryFiber {
            lower: zone_data(big_p, t, a),
            upper: zone_data(big_p, t, b),
        });
    }
    let zone = if *t < lo {
        Zone::One
    } else if *t < hi {
        Zone::Two
    } else {
        Zone::Three
    };
    Ok(zone_data(big_p, t, zone))
}

/// Distance from `T` to the nearest zone boundary, counting `T = ±1`.
pub fn zone_gap<S: Scalar>(big_p: &S, t: &S) -> S {
    let one = S::one();
    [big_p.clone() - one.clone(), one.clone() - big_p.clone(), one.clone(), -one]
        .iter()
        .map(|b| (t.clone() - b.clone()).abs())
        .min()
        .expect("nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn r(n: i64, d: i64) -> Rat {
        Rat::ratio(n, d)
    }

    #[test]
    fn zone_examples_at_one_half() {
        let p = r(1, 2);
        let z = zone_of(&p, &r(-3, 4)).unwrap();
        assert_eq!(z.zone, Zone::One);
        assert_eq!(z.spec.u, [r(-3, 4), r(1, 2), r(3, 4)]);
        let z = zone_of(&p, &r(0, 1)).unwrap();
        assert_eq!(z.zone, Zone::Two);
        assert_eq!(z.spec.u, [r(-1, 2), r(0, 1), r(1, 2)]);
        assert!(matches!(zone_of(&p, &r(1, 2)), Err(ZoneError::BoundaryFiber { .. })));
        assert!(matches!(zone_of(&p, &r(3, 2)), Err(ZoneError::OutOfRange)));
    }

    #[test]
    fn zone_data_is_compatible_throughout() {
        for (pn, pd) in [(1, 3), (1, 2), (4, 7), (6, 11), (8, 15)] {
            let p = r(pn, pd);
            for k in -40..=40 {
                let t = r(k, 40);
                for zone in [Zone::One, Zone::Two, Zone::Three] {
                    let lo = p.clone() - r(1, 1);
                    let hi = r(1, 1) - p.clone();
                    let inside = match zone {
                        Zone::One => t <= lo,
                        Zone::Two => lo <= t && t <= hi,
                        Zone::Three => t >= hi,
                    };
                    if inside {
                        assert!(zone_data(&p, &t, zone).spec.is_compatible(), "P={p} T={t} {zone:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn zone_one_matches_the_figure_example() {
        // U = (T, 1 − P, 2 − P + T) at P = 2/3, T = −2/3.
        let z = zone_data(&r(2, 3), &r(-2, 3), Zone::One);
        assert_eq!(z.spec.m, M1);
        assert_eq!(z.spec.u, [r(-2, 3), r(1, 3), r(2, 3)]);
    }
}
