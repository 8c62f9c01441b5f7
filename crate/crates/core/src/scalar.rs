//! Exact scalar abstraction.
//!
//! Every geometric computation in this crate is written against [`Scalar`],
//! an exact ordered field with a floor operation. Three concrete rational
//! types implement it: arbitrary precision [`crate::Rat`] and the machine
//! word variants [`crate::Rat64`] / [`crate::Rat128`] used for fast sweeps at
//! small parameters. Floating point is deliberately not a `Scalar`: light/dark
//! classification sits exactly on the boundaries that rounding would blur.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};

pub trait Scalar:
    Clone + Debug + Display + Ord + Hash + Num + Signed + Send + Sync + 'static
{
    /// The exact value `numer / denom`. Panics if `denom == 0`.
    fn ratio(numer: i64, denom: i64) -> Self;

    fn int(n: i64) -> Self {
        Self::ratio(n, 1)
    }

    /// Largest integer not exceeding `self`, as a scalar.
    fn floor(&self) -> Self;

    /// Largest integer not exceeding `self`. Panics when it does not fit.
    fn floor_i64(&self) -> i64;

    fn is_integer(&self) -> bool;

    /// Lossless conversion to arbitrary precision.
    fn to_rat(&self) -> BigRational;

    /// Lossless conversion from arbitrary precision; `None` on overflow.
    fn from_rat(r: &BigRational) -> Option<Self>;

    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn half(&self) -> Self {
        self.clone() / Self::two()
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone
        + Integer
        + Signed
        + Hash
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + Into<BigInt>
        + TryFrom<BigInt>
        + Send
        + Sync
        + 'static,
{
    fn ratio(numer: i64, denom: i64) -> Self {
        let n = T::from_i64(numer).expect("numerator fits");
        let d = T::from_i64(denom).expect("denominator fits");
        Ratio::new(n, d)
    }

    fn floor(&self) -> Self {
        Ratio::floor(self)
    }

    fn floor_i64(&self) -> i64 {
        Ratio::floor(self)
            .to_integer()
            .to_i64()
            .expect("floor fits in i64")
    }

    fn is_integer(&self) -> bool {
        Ratio::is_integer(self)
    }

    fn to_rat(&self) -> BigRational {
        BigRational::new(self.numer().clone().into(), self.denom().clone().into())
    }

    fn from_rat(r: &BigRational) -> Option<Self> {
        let n = T::try_from(r.numer().clone()).ok()?;
        let d = T::try_from(r.denom().clone()).ok()?;
        Some(Ratio::new(n, d))
    }
}

/// `x` written as `"num/den"`, always with an explicit denominator.
pub fn to_fraction_string<S: Scalar>(x: &S) -> String {
    let r = x.to_rat();
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"num/den"` or a bare integer `"num"`.
pub fn parse_fraction<S: Scalar>(s: &str) -> Option<S> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    S::from_rat(&BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rat, Rat128, Rat64};

    fn floor_cases<S: Scalar>() {
        assert_eq!(S::ratio(7, 2).floor_i64(), 3);
        assert_eq!(S::ratio(-7, 2).floor_i64(), -4);
        assert_eq!(S::ratio(-4, 2).floor_i64(), -2);
        assert!(S::ratio(6, 3).is_integer());
        assert!(!S::ratio(1, 3).is_integer());
    }

    #[test]
    fn floor_matches_across_backends() {
        floor_cases::<Rat>();
        floor_cases::<Rat64>();
        floor_cases::<Rat128>();
    }

    #[test]
    fn fraction_strings_round_trip() {
        let x = Rat::ratio(-16, 6);
        assert_eq!(to_fraction_string(&x), "-8/3");
        assert_eq!(parse_fraction::<Rat>("-8/3"), Some(x));
        assert_eq!(parse_fraction::<Rat64>("5"), Some(Rat64::int(5)));
        assert_eq!(parse_fraction::<Rat>("1/0"), None);
        assert_eq!(parse_fraction::<Rat>("x/2"), None);
    }

    #[test]
    fn narrow_backend_rejects_overflow() {
        let big = BigRational::new(BigInt::from(1u8) << 80, BigInt::from(3));
        assert!(Rat64::from_rat(&big).is_none());
        assert!(Rat128::from_rat(&big).is_some());
    }
}
