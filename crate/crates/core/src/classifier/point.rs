//! Points of the fiber torus `X_P` and the classifying map `Ξ`.

use std::fmt;

use crate::grid::UnitSquare;
use crate::param::{bracket2, reduce_unit, Param};
use crate::scalar::Scalar;

/// A point `(T, U1, U2)` of `R³ / Λ_P`, with
/// `Λ_P = ⟨(2, P, P), (0, 2, 0), (0, 0, 2)⟩`, stored as its canonical
/// representative in `[−1, 1)³`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassifyingPoint<S> {
    t: S,
    u1: S,
    u2: S,
}

impl<S: Scalar> ClassifyingPoint<S> {
    /// Reduces an arbitrary representative: `U1`, `U2` into `[−1, 1)`, then
    /// `T` into `[−1, 1)` with the generator `(2, P, P)`, then `U1`, `U2`
    /// again.
    pub fn new(big_p: &S, t: S, u1: S, u2: S) -> Self {
        let k = ((t.clone() + S::one()) / S::two()).floor();
        let shift = k.clone() * big_p.clone();
        ClassifyingPoint {
            t: t - S::two() * k,
            u1: reduce_unit(&(reduce_unit(&u1) - shift.clone())),
            u2: reduce_unit(&(reduce_unit(&u2) - shift)),
        }
    }

    pub fn t(&self) -> &S {
        &self.t
    }

    pub fn u1(&self) -> &S {
        &self.u1
    }

    pub fn u2(&self) -> &S {
        &self.u2
    }

    pub fn coords(&self) -> (S, S, S) {
        (self.t.clone(), self.u1.clone(), self.u2.clone())
    }

    /// `self + v`, reduced.
    pub fn translate(&self, big_p: &S, v: (&S, &S, &S)) -> Self {
        ClassifyingPoint::new(
            big_p,
            self.t.clone() + v.0.clone(),
            self.u1.clone() + v.1.clone(),
            self.u2.clone() + v.2.clone(),
        )
    }
}

impl<S: Scalar> fmt::Display for ClassifyingPoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.t, self.u1, self.u2)
    }
}

/// The unreduced value `(2Px + 2y, 2Px, 2Px + 2Py)` of `Ξ` at any point.
pub fn xi_raw<S: Scalar>(big_p: &S, x: &S, y: &S) -> (S, S, S) {
    let two = S::two();
    let a = two.clone() * big_p.clone() * x.clone();
    (
        a.clone() + two.clone() * y.clone(),
        a.clone(),
        a + two * big_p.clone() * y.clone(),
    )
}

/// `Ξ` at an arbitrary point of the plane, for any `P`.
pub fn xi_at<S: Scalar>(big_p: &S, x: &S, y: &S) -> ClassifyingPoint<S> {
    let (t, u1, u2) = xi_raw(big_p, x, y);
    ClassifyingPoint::new(big_p, t, u1, u2)
}

/// `Ξ` at the center of a unit square.
pub fn xi<S: Scalar>(param: &Param, sq: UnitSquare) -> ClassifyingPoint<S> {
    let (x, y) = sq.center::<S>();
    xi_at(&param.big_p::<S>(), &x, &y)
}

/// The local formulas `T = [2Px + 1]_2`, `b = PT/2`,
/// `U1 = [PQx + b − Py]_2`, `U2 = [PQx + b + Py]_2`, unreduced.
pub fn xi_local_raw<S: Scalar>(param: &Param, x: &S, y: &S) -> (S, S, S) {
    let p = param.big_p::<S>();
    let q = param.big_q::<S>();
    let t = bracket2(&(S::two() * p.clone() * x.clone() + S::one()));
    let b = p.clone() * t.clone() / S::two();
    let base = p.clone() * q * x.clone() + b;
    let py = p * y.clone();
    let u1 = bracket2(&(base.clone() - py.clone()));
    let u2 = bracket2(&(base + py));
    (t, u1, u2)
}

/// The local formulas, reduced. Agrees with [`xi`] on tile centers.
pub fn xi_local<S: Scalar>(param: &Param, x: &S, y: &S) -> ClassifyingPoint<S> {
    let (t, u1, u2) = xi_local_raw(param, x, y);
    ClassifyingPoint::new(&param.big_p::<S>(), t, u1, u2)
}

/// `true` when the point lies in the discrete set `(Z_odd/ω, Z_even/ω, Z_even/ω)`.
pub fn is_lattice_class<S: Scalar>(param: &Param, z: &ClassifyingPoint<S>) -> bool {
    let w = S::int(param.omega());
    let parity = |v: &S, odd: bool| {
        let s = v.clone() * w.clone();
        s.is_integer() && (s.floor_i64().rem_euclid(2) == 1) == odd
    };
    parity(&z.t, true) && parity(&z.u1, false) && parity(&z.u2, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::{even_parameters, make_param};
    use crate::{Rat, Rat64};

    #[test]
    fn first_center_maps_to_zone_boundary() {
        for par in even_parameters(15) {
            let z = xi::<Rat>(&par, UnitSquare::new(0, 0));
            let p = par.big_p::<Rat>();
            assert_eq!(z.coords(), (p.clone() - Rat::int(1), Rat::int(0), p));
        }
        let par = make_param(2, 5).unwrap();
        let z = xi::<Rat>(&par, UnitSquare::new(0, 0));
        assert_eq!(z.coords(), (Rat::ratio(-3, 7), Rat::int(0), Rat::ratio(4, 7)));
    }

    #[test]
    fn local_formula_example() {
        let par = make_param(2, 5).unwrap();
        let h = Rat::ratio(1, 2);
        let raw = xi_local_raw(&par, &h, &h);
        assert_eq!(raw, (Rat::ratio(11, 7), Rat::ratio(4, 7), Rat::ratio(8, 7)));
        assert_eq!(xi_local(&par, &h, &h), xi::<Rat>(&par, UnitSquare::new(0, 0)));
    }

    #[test]
    fn local_formulas_agree_everywhere() {
        for (p, q) in [(2, 5), (3, 8), (4, 11), (1, 2)] {
            let par = make_param(p, q).unwrap();
            let w = par.omega();
            for sq in crate::grid::Region::new(0, 0, w * w, w).squares() {
                let (x, y) = sq.center::<Rat64>();
                assert_eq!(xi_local(&par, &x, &y), xi(&par, sq), "{par} {sq:?}");
            }
        }
    }

    #[test]
    fn reduction_is_canonical() {
        let p = Rat::ratio(4, 7);
        let z = ClassifyingPoint::new(&p, Rat::ratio(3, 7), Rat::ratio(1, 7), Rat::ratio(-5, 7));
        for (a, b, c) in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-3, 2, -5), (2, -7, 4)] {
            let t = z.t().clone() + Rat::int(2 * a);
            let u1 = z.u1().clone() + p.clone() * Rat::int(a) + Rat::int(2 * b);
            let u2 = z.u2().clone() + p.clone() * Rat::int(a) + Rat::int(2 * c);
            assert_eq!(ClassifyingPoint::new(&p, t, u1, u2), z);
        }
        let again = ClassifyingPoint::new(&p, z.t().clone(), z.u1().clone(), z.u2().clone());
        assert_eq!(again, z);
    }

    #[test]
    fn lattice_translations_fix_the_image() {
        let par = make_param(2, 5).unwrap();
        let z = xi::<Rat>(&par, UnitSquare::new(3, 4));
        assert_eq!(xi::<Rat>(&par, UnitSquare::new(3 + 49, 4)), z);
        assert_eq!(xi::<Rat>(&par, UnitSquare::new(3, 4 - 7)), z);
        assert!(is_lattice_class(&par, &z));
    }
}
