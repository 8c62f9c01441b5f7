//! Even rational parameters and the arithmetic constants derived from them.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("p and q must be positive (got p={p}, q={q})")]
    NonPositive { p: i64, q: i64 },
    #[error("p/q must lie in (0,1) (got p={p} >= q={q})")]
    NotBelowOne { p: i64, q: i64 },
    #[error("p and q must be coprime (gcd({p},{q}) = {gcd})")]
    NotCoprime { p: i64, q: i64, gcd: i64 },
    #[error("p*q must be even (got p={p}, q={q})")]
    OddProduct { p: i64, q: i64 },
}

/// Which congruence the tune numerator realizes: `2αp ≡ +1` or `≡ −1 (mod ω)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TuneSign {
    Plus,
    Minus,
}

/// A validated even rational parameter `p/q`.
///
/// Integer data only; the rational constants `P`, `Q` and `τ` are produced on
/// demand in whichever [`Scalar`] the caller works with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Param {
    p: i64,
    q: i64,
    omega: i64,
    alpha: i64,
    tune_sign: TuneSign,
    adj: i64,
}

impl Param {
    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `ω = p + q`, the block side length.
    pub fn omega(&self) -> i64 {
        self.omega
    }

    /// Numerator of the tune, `α ∈ (0, ω/2)` with `2αp ≡ ±1 (mod ω)`.
    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn tune_sign(&self) -> TuneSign {
        self.tune_sign
    }

    /// Remote adjacency offset `a ∈ (0, ω)` with `2ap ≡ −1 (mod ω)`.
    pub fn adj(&self) -> i64 {
        self.adj
    }

    /// `P = 2p/ω`.
    pub fn big_p<S: Scalar>(&self) -> S {
        S::ratio(2 * self.p, self.omega)
    }

    /// `Q = 2q/ω`.
    pub fn big_q<S: Scalar>(&self) -> S {
        S::ratio(2 * self.q, self.omega)
    }

    /// `τ = α/ω`.
    pub fn tau<S: Scalar>(&self) -> S {
        S::ratio(self.alpha, self.omega)
    }

    pub fn omega_s<S: Scalar>(&self) -> S {
        S::int(self.omega)
    }
}

/// Ordered by `(ω, p)`, the sweep order.
impl Ord for Param {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.omega, self.p).cmp(&(other.omega, other.p))
    }
}

impl PartialOrd for Param {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// Validates `p/q` and derives all constants.
pub fn make_param(p: i64, q: i64) -> Result<Param, ParamError> {
    if p < 1 || q < 1 {
        return Err(ParamError::NonPositive { p, q });
    }
    if p >= q {
        return Err(ParamError::NotBelowOne { p, q });
    }
    let gcd = p.gcd(&q);
    if gcd != 1 {
        return Err(ParamError::NotCoprime { p, q, gcd });
    }
    if (p * q) % 2 != 0 {
        return Err(ParamError::OddProduct { p, q });
    }
    let omega = p + q;
    let (alpha, tune_sign) = solve_tune(p, omega);
    let adj = mod_inverse(2 * p, omega)
        .map(|inv| (omega - inv) % omega)
        .expect("2p is a unit mod ω");
    Ok(Param {
        p,
        q,
        omega,
        alpha,
        tune_sign,
        adj,
    })
}

/// Parses `"p/q"`.
impl std::str::FromStr for Param {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (p, q) = s
            .split_once('/')
            .ok_or_else(|| format!("expected p/q, got {s:?}"))?;
        let p: i64 = p.trim().parse().map_err(|e| format!("bad p in {s:?}: {e}"))?;
        let q: i64 = q.trim().parse().map_err(|e| format!("bad q in {s:?}: {e}"))?;
        make_param(p, q).map_err(|e| e.to_string())
    }
}

/// Serialized as the string `"p/q"`; deserialization validates.
impl Serialize for Param {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Param {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All even rational parameters with `ω ≤ max_omega`, ordered by `(ω, p)`.
pub fn even_parameters(max_omega: i64) -> Vec<Param> {
    let mut out = Vec::new();
    for omega in 3..=max_omega {
        for p in 1..omega {
            if let Ok(param) = make_param(p, omega - p) {
                out.push(param);
            }
        }
    }
    out
}

fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let e = a.rem_euclid(m).extended_gcd(&m);
    (e.gcd == 1).then(|| e.x.rem_euclid(m))
}

fn solve_tune(p: i64, omega: i64) -> (i64, TuneSign) {
    let inv = mod_inverse(2 * p, omega).expect("2p is a unit mod ω");
    // 2p·inv ≡ 1 and 2p·(ω−inv) ≡ −1; exactly one lies below ω/2 since ω is odd.
    if 2 * inv < omega {
        (inv, TuneSign::Plus)
    } else {
        (omega - inv, TuneSign::Minus)
    }
}

/// Tune `τ = α/ω`.
pub fn compute_tune<S: Scalar>(param: &Param) -> S {
    param.tau()
}

/// A value of `R / 2Z` represented in `[−2, 2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mod2<S>(S);

impl<S: Scalar> Mod2<S> {
    pub fn value(&self) -> &S {
        &self.0
    }

    pub fn into_inner(self) -> S {
        self.0
    }
}

/// The canonical representative of the class `x + 2Z` inside `[−2, 2)`.
///
/// The window `[−2, 0)` is used, so the result depends only on the class:
/// `mod2_reduce(x + 2k) == mod2_reduce(x)` for every integer `k`.
pub fn mod2_reduce<S: Scalar>(x: &S) -> Mod2<S> {
    let k = (x.clone() / S::two()).floor();
    Mod2(x.clone() - S::two() * k - S::two())
}

/// `x` lies in the odd-integer class of `R/2Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("value is an odd integer mod 2Z")]
pub struct OddIntegerClass;

/// The representative of `x mod 2Z` in the open interval `(−1, 1)`.
pub fn normalize_open<S: Scalar>(x: &S) -> Result<S, OddIntegerClass> {
    let y = reduce_unit(x);
    if y == -S::one() {
        Err(OddIntegerClass)
    } else {
        Ok(y)
    }
}

/// The representative of `x mod 2Z` in `[−1, 1)`.
pub fn reduce_unit<S: Scalar>(x: &S) -> S {
    let k = ((x.clone() + S::one()) / S::two()).floor();
    x.clone() - S::two() * k
}

/// `[x]_2`, a representative of `x mod 2Z` in `[−2, 2)`: `x` itself when it
/// already lies there, otherwise the representative with the sign of `x`.
///
/// The local formulas for the classifying map only need some fixed choice;
/// this one keeps their raw outputs unreduced on the usual domain.
pub fn bracket2<S: Scalar>(x: &S) -> S {
    let two = S::two();
    if x >= &(-two.clone()) && x < &two {
        return x.clone();
    }
    let r = x.clone() - two.clone() * (x.clone() / two.clone()).floor();
    if x < &S::zero() {
        r - two
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rat, Rat64};

    #[test]
    fn make_param_derives_constants() {
        let par = make_param(2, 5).unwrap();
        assert_eq!(par.omega(), 7);
        assert_eq!(par.big_p::<Rat>(), Rat::ratio(4, 7));
        assert_eq!(par.big_q::<Rat>(), Rat::ratio(10, 7));
        let par = make_param(3, 8).unwrap();
        assert_eq!(par.big_p::<Rat>(), Rat::ratio(6, 11));
    }

    #[test]
    fn make_param_rejects_each_defect_distinctly() {
        assert_eq!(make_param(3, 5), Err(ParamError::OddProduct { p: 3, q: 5 }));
        assert_eq!(
            make_param(2, 4),
            Err(ParamError::NotCoprime { p: 2, q: 4, gcd: 2 })
        );
        assert_eq!(make_param(5, 2), Err(ParamError::NotBelowOne { p: 5, q: 2 }));
        assert_eq!(make_param(0, 2), Err(ParamError::NonPositive { p: 0, q: 2 }));
        assert_eq!(make_param(-1, 2), Err(ParamError::NonPositive { p: -1, q: 2 }));
    }

    #[test]
    fn tune_examples() {
        assert_eq!(compute_tune::<Rat>(&make_param(2, 5).unwrap()), Rat::ratio(2, 7));
        assert_eq!(compute_tune::<Rat>(&make_param(4, 11).unwrap()), Rat::ratio(2, 15));
        let par = make_param(1, 2).unwrap();
        assert_eq!(par.alpha(), 1);
        assert_eq!(par.tune_sign(), TuneSign::Minus);
        assert_eq!(compute_tune::<Rat>(&par), Rat::ratio(1, 3));
    }

    #[test]
    fn remote_adjacency_offset() {
        let par = make_param(2, 5).unwrap();
        assert_eq!((2 * par.adj() * par.p()).rem_euclid(7), 6);
        assert!(par.adj() > 0 && par.adj() < 7);
    }

    #[test]
    fn mod2_examples() {
        assert_eq!(mod2_reduce(&Rat::ratio(16, 7)).into_inner(), Rat::ratio(-12, 7));
        assert_eq!(
            mod2_reduce(&Rat::ratio(16, 7)),
            mod2_reduce(&Rat::ratio(2, 7))
        );
        assert_eq!(mod2_reduce(&Rat::int(-2)).into_inner(), Rat::int(-2));
        assert_eq!(mod2_reduce(&Rat::int(2)).into_inner(), Rat::int(-2));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_open(&Rat::ratio(8, 7)), Ok(Rat::ratio(-6, 7)));
        assert_eq!(normalize_open(&Rat::int(0)), Ok(Rat::int(0)));
        assert_eq!(normalize_open(&Rat::ratio(15, 7)), Ok(Rat::ratio(1, 7)));
        assert_eq!(normalize_open(&Rat::int(3)), Err(OddIntegerClass));
        assert_eq!(normalize_open(&Rat64::int(-1)), Err(OddIntegerClass));
    }

    #[test]
    fn even_parameters_are_ordered_and_valid() {
        let all = even_parameters(9);
        let pairs: Vec<_> = all.iter().map(|p| (p.p(), p.q())).collect();
        assert_eq!(
            pairs,
            vec![(1, 2), (1, 4), (2, 3), (1, 6), (2, 5), (3, 4), (1, 8), (2, 7), (4, 5)]
        );
    }

    #[test]
    fn bracket2_keeps_local_branch() {
        assert_eq!(bracket2(&Rat::ratio(11, 7)), Rat::ratio(11, 7));
        assert_eq!(bracket2(&Rat::ratio(-3, 2)), Rat::ratio(-3, 2));
        assert_eq!(bracket2(&Rat::ratio(5, 2)), Rat::ratio(1, 2));
        assert_eq!(bracket2(&Rat::ratio(-5, 2)), Rat::ratio(-1, 2));
    }
}
