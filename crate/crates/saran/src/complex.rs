//! Complex arithmetic over the arbitrary-precision reals.
//!
//! Principal-branch conventions throughout: arg(z) in (-pi, pi], with the
//! negative real axis assigned +pi, and ln/pow/sqrt defined through the
//! principal logarithm.

use crate::real::Real;
use std::fmt;

#[derive(Clone, Debug)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn from_real(re: Real) -> Self {
        let p = re.prec();
        Complex { re, im: Real::from_f64(0.0, p) }
    }

    pub fn zero(prec: u32) -> Self {
        Complex::new(Real::from_f64(0.0, prec), Real::from_f64(0.0, prec))
    }

    pub fn one(prec: u32) -> Self {
        Complex::new(Real::from_f64(1.0, prec), Real::from_f64(0.0, prec))
    }

    pub fn i(prec: u32) -> Self {
        Complex::new(Real::from_f64(0.0, prec), Real::from_f64(1.0, prec))
    }

    pub fn nan(prec: u32) -> Self {
        Complex::new(Real::nan(prec), Real::nan(prec))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        Complex::new(self.re.with_prec(prec), self.im.with_prec(prec))
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Complex {
        Complex::new(self.re.clone(), -&self.im)
    }

    pub fn scale(&self, s: &Real) -> Complex {
        Complex::new(&self.re * s, &self.im * s)
    }

    pub fn unscale(&self, s: &Real) -> Complex {
        Complex::new(&self.re / s, &self.im / s)
    }

    pub fn norm_sqr(&self) -> Real {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn abs(&self) -> Real {
        self.re.hypot(&self.im)
    }

    /// Principal argument in (-pi, pi]; the negative real axis maps to +pi.
    pub fn arg(&self) -> Real {
        if self.im.is_zero() {
            let p = self.prec();
            if self.re.is_sign_negative() && !self.re.is_zero() {
                return Real::pi(p);
            }
            return Real::from_f64(0.0, p);
        }
        self.im.atan2(&self.re)
    }

    pub fn recip(&self) -> Complex {
        let d = self.norm_sqr();
        Complex::new(&self.re / &d, -(&self.im / &d))
    }

    /// Principal logarithm: ln|z| + i arg(z).
    pub fn ln(&self) -> Complex {
        Complex::new(self.abs().ln(), self.arg())
    }

    pub fn exp(&self) -> Complex {
        let r = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Complex::new(&r * &c, &r * &s)
    }

    pub fn sqrt(&self) -> Complex {
        if self.is_zero() {
            return Complex::zero(self.prec());
        }
        self.ln().scale(&Real::from_f64(0.5, self.prec())).exp()
    }

    /// Principal complex power z^s = exp(s ln z). Returns NaN components for
    /// z = 0 with Re(s) <= 0; callers that need a diagnosable error use
    /// [`crate::num::complex_pow`].
    pub fn powc(&self, s: &Complex) -> Complex {
        if self.is_zero() {
            let p = self.prec();
            if s.re > 0.0 {
                return Complex::zero(p);
            }
            return Complex::nan(p);
        }
        (&self.ln() * s).exp()
    }

    pub fn powr(&self, e: &Real) -> Complex {
        self.powc(&Complex::from_real(e.clone()))
    }

    /// Integer power by binary exponentiation (exact branch behaviour).
    pub fn powi(&self, e: i64) -> Complex {
        let p = self.prec();
        if e == 0 {
            return Complex::one(p);
        }
        let mut base = if e < 0 { self.recip() } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Complex::one(p);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Distance to the nearest non-positive integer, and that integer.
    pub fn nonpos_int_distance(&self) -> (Real, i64) {
        let p = self.prec();
        if self.re > 0.5 {
            let d = (&self.re).hypot(&self.im);
            return (d, 0);
        }
        let n = self.re.round().to_i64_round().min(0);
        let dre = &self.re - Real::from_i64(n, p);
        (dre.hypot(&self.im), n)
    }
}

impl fmt::Display for Complex {
    fmt_display_impl!();
}

macro_rules! fmt_display_impl {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if self.im.is_zero() {
                write!(f, "{}", self.re)
            } else if self.im.is_sign_negative() {
                write!(f, "{} - {}i", self.re, self.im.abs())
            } else {
                write!(f, "{} + {}i", self.re, self.im)
            }
        }
    };
}
use fmt_display_impl;

macro_rules! complex_add_sub {
    ($trait:ident, $fn:ident, $op:tt) => {
        impl std::ops::$trait<&Complex> for &Complex {
            type Output = Complex;
            fn $fn(self, rhs: &Complex) -> Complex {
                Complex::new(&self.re $op &rhs.re, &self.im $op &rhs.im)
            }
        }
        impl std::ops::$trait<Complex> for &Complex {
            type Output = Complex;
            fn $fn(self, rhs: Complex) -> Complex { self $op &rhs }
        }
        impl std::ops::$trait<&Complex> for Complex {
            type Output = Complex;
            fn $fn(self, rhs: &Complex) -> Complex { &self $op rhs }
        }
        impl std::ops::$trait<Complex> for Complex {
            type Output = Complex;
            fn $fn(self, rhs: Complex) -> Complex { &self $op &rhs }
        }
    };
}

complex_add_sub!(Add, add, +);
complex_add_sub!(Sub, sub, -);

impl std::ops::Mul<&Complex> for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        Complex::new(re, im)
    }
}

impl std::ops::Mul<Complex> for &Complex {
    type Output = Complex;
    fn mul(self, rhs: Complex) -> Complex {
        self * &rhs
    }
}

impl std::ops::Mul<&Complex> for Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        &self * rhs
    }
}

impl std::ops::Mul<Complex> for Complex {
    type Output = Complex;
    fn mul(self, rhs: Complex) -> Complex {
        &self * &rhs
    }
}

impl std::ops::Div<&Complex> for &Complex {
    type Output = Complex;
    fn div(self, rhs: &Complex) -> Complex {
        let d = rhs.norm_sqr();
        let re = &(&(&self.re * &rhs.re) + &(&self.im * &rhs.im)) / &d;
        let im = &(&(&self.im * &rhs.re) - &(&self.re * &rhs.im)) / &d;
        Complex::new(re, im)
    }
}

impl std::ops::Div<Complex> for &Complex {
    type Output = Complex;
    fn div(self, rhs: Complex) -> Complex {
        self / &rhs
    }
}

impl std::ops::Div<&Complex> for Complex {
    type Output = Complex;
    fn div(self, rhs: &Complex) -> Complex {
        &self / rhs
    }
}

impl std::ops::Div<Complex> for Complex {
    type Output = Complex;
    fn div(self, rhs: Complex) -> Complex {
        &self / &rhs
    }
}

impl std::ops::Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-&self.re, -&self.im)
    }
}

impl std::ops::Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        -&self
    }
}

impl std::ops::AddAssign<&Complex> for Complex {
    fn add_assign(&mut self, rhs: &Complex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl std::ops::SubAssign<&Complex> for Complex {
    fn sub_assign(&mut self, rhs: &Complex) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl std::ops::MulAssign<&Complex> for Complex {
    fn mul_assign(&mut self, rhs: &Complex) {
        let v = &*self * rhs;
        *self = v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(Real::from_f64(re, 128), Real::from_f64(im, 128))
    }

    #[test]
    fn arg_on_negative_axis_is_plus_pi() {
        let z = c(-2.0, 0.0);
        let pi = Real::pi(128);
        assert!((z.arg() - pi).abs() < 1e-30);
    }

    #[test]
    fn principal_power_of_minus_one() {
        // (-1)^(1/2) = i on the principal branch
        let z = c(-1.0, 0.0);
        let s = c(0.5, 0.0);
        let w = z.powc(&s);
        assert!((w.re.to_f64()).abs() < 1e-30);
        assert!((w.im.to_f64() - 1.0).abs() < 1e-30);
    }

    #[test]
    fn mul_div_roundtrip() {
        let a = c(1.7, -2.3);
        let b = c(-0.4, 0.9);
        let r = &(&a * &b) / &b;
        assert!((&r.re - &a.re).abs() < 1e-35 && (&r.im - &a.im).abs() < 1e-35);
    }

    #[test]
    fn powi_matches_powc() {
        let z = c(0.8, 0.25);
        let a = z.powi(7);
        let b = z.powc(&c(7.0, 0.0));
        assert!((&a.re - &b.re).abs() < 1e-33);
        assert!((&a.im - &b.im).abs() < 1e-33);
    }
}
