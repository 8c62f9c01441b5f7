//! The four adapted functions `F_H`, `F_V`, `F_P`, `F_Q`.

use crate::param::{normalize_open, Param};
use crate::scalar::Scalar;

/// A value of an adapted function, normalized into `(−1, 1)`.
///
/// `Unit` is the odd-integer class. It is reached only on mass-`ω` lines,
/// where the mass equals `ω` and the sign is undefined.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AdaptedValue<S> {
    Open(S),
    Unit,
}

impl<S: Scalar> AdaptedValue<S> {
    fn from_raw(x: S) -> Self {
        match normalize_open(&x) {
            Ok(v) => AdaptedValue::Open(v),
            Err(_) => AdaptedValue::Unit,
        }
    }

    /// The normalized value, or `None` for the odd-integer class.
    pub fn open(&self) -> Option<&S> {
        match self {
            AdaptedValue::Open(v) => Some(v),
            AdaptedValue::Unit => None,
        }
    }

    /// `|ω·F|` as an integer; `Unit` counts as `ω`.
    pub fn magnitude(&self, omega: i64) -> Option<i64> {
        match self {
            AdaptedValue::Open(v) => {
                let scaled = v.abs() * S::int(omega);
                scaled.is_integer().then(|| scaled.floor_i64())
            }
            AdaptedValue::Unit => Some(omega),
        }
    }
}

/// `F_H(x, y) = 2Py mod 2Z`.
pub fn f_h<S: Scalar>(param: &Param, _x: &S, y: &S) -> AdaptedValue<S> {
    AdaptedValue::from_raw(S::two() * param.big_p::<S>() * y.clone())
}

/// `F_V(x, y) = 2Px mod 2Z`.
pub fn f_v<S: Scalar>(param: &Param, x: &S, _y: &S) -> AdaptedValue<S> {
    AdaptedValue::from_raw(S::two() * param.big_p::<S>() * x.clone())
}

/// `F_P(x, y) = Py + P²x + 1 mod 2Z`.
pub fn f_p<S: Scalar>(param: &Param, x: &S, y: &S) -> AdaptedValue<S> {
    let p = param.big_p::<S>();
    AdaptedValue::from_raw(p.clone() * y.clone() + p.clone() * p * x.clone() + S::one())
}

/// `F_Q(x, y) = Py + PQx + 1 mod 2Z`.
pub fn f_q<S: Scalar>(param: &Param, x: &S, y: &S) -> AdaptedValue<S> {
    let p = param.big_p::<S>();
    let q = param.big_q::<S>();
    AdaptedValue::from_raw(p.clone() * y.clone() + p * q * x.clone() + S::one())
}
