//! Precision context shared by every evaluation routine.

use crate::real::Real;

/// Runtime precision and termination settings.
///
/// All routines are pure functions of their inputs plus an immutable
/// context, so a single context can be shared freely across threads.
#[derive(Clone, Debug)]
pub struct Ctx {
    /// Working significant decimal digits (>= 10).
    pub digits: u32,
    /// Relative tolerance used to terminate series and quadrature,
    /// default `10^(4 - digits)`.
    pub rel_tol_exp: i32,
    /// Hard cap on series terms before reporting non-convergence.
    pub max_terms: usize,
    /// Sector half-width reduction delta (radians) for the right-half-plane
    /// asymptotic regimes: arguments with |arg y| > pi/2 - delta are rejected.
    pub sector_delta: f64,
    /// |y| above which `fk_auto` switches to the asymptotic expansion.
    pub crossover_y: f64,
    /// Upper bound enforced on |y|/|z| in the two-variable expansions.
    pub ratio_cap: f64,
}

impl Ctx {
    pub fn new(digits: u32) -> Self {
        assert!(digits >= 10, "precision context requires digits >= 10");
        Ctx {
            digits,
            rel_tol_exp: 4 - digits as i32,
            max_terms: 1_000_000,
            sector_delta: 0.1,
            crossover_y: 80.0,
            ratio_cap: 1.0e3,
        }
    }

    /// Default 16-digit working precision.
    pub fn working() -> Self {
        Ctx::new(16)
    }

    /// 50-digit oracle precision.
    pub fn oracle() -> Self {
        Ctx::new(50)
    }

    /// Mantissa bits backing the decimal digit request, with guard digits.
    pub fn prec(&self) -> u32 {
        (((self.digits + 8) as f64) * std::f64::consts::LOG2_10).ceil() as u32
    }

    /// Same context with `extra` additional decimal digits.
    pub fn bump(&self, extra: u32) -> Self {
        let mut c = self.clone();
        c.digits += extra;
        c
    }

    /// Series termination tolerance as a value.
    pub fn tol(&self) -> Real {
        Real::ten_pow(self.rel_tol_exp, self.prec())
    }

    /// Distance below which an argument counts as sitting on a pole of gamma.
    pub fn pole_tol(&self) -> Real {
        Real::ten_pow(6 - self.digits as i32, self.prec())
    }

    /// Tolerance for routing parameters to the integer (logarithmic) cases.
    pub fn int_tol(&self) -> Real {
        self.pole_tol()
    }

    pub fn real(&self, v: f64) -> Real {
        Real::from_f64(v, self.prec())
    }

    pub fn complex(&self, re: f64, im: f64) -> crate::complex::Complex {
        crate::complex::Complex::new(self.real(re), self.real(im))
    }

    pub fn zero(&self) -> Real {
        Real::from_f64(0.0, self.prec())
    }

    pub fn one(&self) -> Real {
        Real::from_f64(1.0, self.prec())
    }

    pub fn pi(&self) -> Real {
        Real::pi(self.prec())
    }
}

impl Default for Ctx {
    fn default() -> Self {
        Ctx::working()
    }
}
