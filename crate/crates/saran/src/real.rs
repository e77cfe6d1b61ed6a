//! Arbitrary-precision real numbers.
//!
//! Thin wrapper over MPFR floats. Binary operations take the larger
//! precision of the two operands, so precision propagates through a
//! computation from the values the context created.

use rug::float::{Constant, Round, Special};
use rug::ops::Pow;
use rug::Float;
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Debug)]
pub struct Real(pub(crate) Float);

impl Real {
    pub fn from_f64(v: f64, prec: u32) -> Self {
        Real(Float::with_val(prec, v))
    }

    pub fn from_u64(v: u64, prec: u32) -> Self {
        Real(Float::with_val(prec, v))
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Real(Float::with_val(prec, v))
    }

    /// Parse a decimal string at the given precision.
    pub fn parse(s: &str, prec: u32) -> Option<Self> {
        Float::parse(s).ok().map(|p| Real(Float::with_val(prec, p)))
    }

    /// 10^e as an exact-ish value.
    pub fn ten_pow(e: i32, prec: u32) -> Self {
        Real(Float::with_val(prec, Float::with_val(prec, 10).pow(e)))
    }

    pub fn pi(prec: u32) -> Self {
        Real(Float::with_val(prec, Constant::Pi))
    }

    /// Euler-Mascheroni constant.
    pub fn euler_gamma(prec: u32) -> Self {
        Real(Float::with_val(prec, Constant::Euler))
    }

    pub fn nan(prec: u32) -> Self {
        Real(Float::with_val(prec, Special::Nan))
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        Real(Float::with_val(prec, &self.0))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn is_nan(&self) -> bool {
        self.0.is_nan()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative()
    }

    pub fn abs(&self) -> Real {
        Real(self.0.clone().abs())
    }

    pub fn recip(&self) -> Real {
        Real(self.0.clone().recip())
    }

    pub fn sqrt(&self) -> Real {
        Real(self.0.clone().sqrt())
    }

    pub fn exp(&self) -> Real {
        Real(self.0.clone().exp())
    }

    pub fn ln(&self) -> Real {
        Real(self.0.clone().ln())
    }

    pub fn sin(&self) -> Real {
        Real(self.0.clone().sin())
    }

    pub fn cos(&self) -> Real {
        Real(self.0.clone().cos())
    }

    pub fn sin_cos(&self) -> (Real, Real) {
        let p = self.prec();
        let (s, c) = self.0.clone().sin_cos(Float::new(p));
        (Real(s), Real(c))
    }

    pub fn tan(&self) -> Real {
        Real(self.0.clone().tan())
    }

    pub fn sinh(&self) -> Real {
        Real(self.0.clone().sinh())
    }

    pub fn cosh(&self) -> Real {
        Real(self.0.clone().cosh())
    }

    pub fn tanh(&self) -> Real {
        Real(self.0.clone().tanh())
    }

    pub fn asinh(&self) -> Real {
        Real(self.0.clone().asinh())
    }

    /// Four-quadrant arctangent of `self / x` (self is the ordinate).
    pub fn atan2(&self, x: &Real) -> Real {
        Real(self.0.clone().atan2(&x.0))
    }

    pub fn hypot(&self, other: &Real) -> Real {
        Real(self.0.clone().hypot(&other.0))
    }

    pub fn floor(&self) -> Real {
        Real(self.0.clone().floor())
    }

    pub fn round(&self) -> Real {
        Real(self.0.clone().round())
    }

    pub fn to_i64_round(&self) -> i64 {
        self.0
            .to_integer_round(Round::Nearest)
            .map(|(i, _)| i.to_i64_wrapping())
            .unwrap_or(0)
    }

    /// Integer power, exact sign handling for negative bases.
    pub fn powi(&self, e: i32) -> Real {
        Real(self.0.clone().pow(e))
    }

    /// Real power of a positive base via exp(e ln self).
    pub fn pow(&self, e: &Real) -> Real {
        Real(self.0.clone().pow(&e.0))
    }

    pub fn mul_2exp(&self, e: i32) -> Real {
        if e >= 0 {
            Real(self.0.clone() << (e as u32))
        } else {
            Real(self.0.clone() >> ((-e) as u32))
        }
    }

    pub fn min(&self, other: &Real) -> Real {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn max(&self, other: &Real) -> Real {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Decimal string with the requested number of significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        if !self.0.is_finite() {
            return self.0.to_string();
        }
        let s = self.0.to_string_radix(10, Some(digits.max(2)));
        s
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

impl PartialEq<f64> for Real {
    fn eq(&self, other: &f64) -> bool {
        self.0 == *other
    }
}

impl PartialOrd<f64> for Real {
    fn partial_cmp(&self, other: &f64) -> Option<Ordering> {
        self.0.partial_cmp(other)
    }
}

fn join(a: u32, b: u32) -> u32 {
    a.max(b)
}

macro_rules! real_binop {
    ($trait:ident, $fn:ident, $op:tt) => {
        impl std::ops::$trait<&Real> for &Real {
            type Output = Real;
            fn $fn(self, rhs: &Real) -> Real {
                let p = join(self.prec(), rhs.prec());
                Real(Float::with_val(p, &self.0 $op &rhs.0))
            }
        }
        impl std::ops::$trait<Real> for &Real {
            type Output = Real;
            fn $fn(self, rhs: Real) -> Real {
                self $op &rhs
            }
        }
        impl std::ops::$trait<&Real> for Real {
            type Output = Real;
            fn $fn(self, rhs: &Real) -> Real {
                &self $op rhs
            }
        }
        impl std::ops::$trait<Real> for Real {
            type Output = Real;
            fn $fn(self, rhs: Real) -> Real {
                &self $op &rhs
            }
        }
        impl std::ops::$trait<f64> for &Real {
            type Output = Real;
            fn $fn(self, rhs: f64) -> Real {
                Real(Float::with_val(self.prec(), &self.0 $op rhs))
            }
        }
        impl std::ops::$trait<f64> for Real {
            type Output = Real;
            fn $fn(self, rhs: f64) -> Real {
                &self $op rhs
            }
        }
    };
}

real_binop!(Add, add, +);
real_binop!(Sub, sub, -);
real_binop!(Mul, mul, *);
real_binop!(Div, div, /);

impl std::ops::Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(Float::with_val(self.prec(), -&self.0))
    }
}

impl std::ops::Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        -&self
    }
}

impl std::ops::AddAssign<&Real> for Real {
    fn add_assign(&mut self, rhs: &Real) {
        if rhs.prec() > self.prec() {
            self.0.set_prec(rhs.prec());
        }
        self.0 += &rhs.0;
    }
}

impl std::ops::SubAssign<&Real> for Real {
    fn sub_assign(&mut self, rhs: &Real) {
        if rhs.prec() > self.prec() {
            self.0.set_prec(rhs.prec());
        }
        self.0 -= &rhs.0;
    }
}

impl std::ops::MulAssign<&Real> for Real {
    fn mul_assign(&mut self, rhs: &Real) {
        if rhs.prec() > self.prec() {
            self.0.set_prec(rhs.prec());
        }
        self.0 *= &rhs.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precision_propagates() {
        let a = Real::from_f64(2.0, 200);
        let b = Real::from_f64(3.0, 64);
        assert_eq!((&a + &b).prec(), 200);
    }

    #[test]
    fn sqrt2_50_digits() {
        let two = Real::from_f64(2.0, 200);
        let s = two.sqrt();
        let want = Real::parse("1.41421356237309504880168872420969807856967187537694", 200).unwrap();
        assert!((s - want).abs() < Real::ten_pow(-50, 200));
    }

    #[test]
    fn ten_pow_matches_parse() {
        let a = Real::ten_pow(-12, 128);
        let b = Real::parse("1e-12", 128).unwrap();
        assert!((&a - &b).abs() < Real::ten_pow(-40, 128));
    }
}
