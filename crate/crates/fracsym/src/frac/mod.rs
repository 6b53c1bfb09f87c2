//! Riemann-Liouville calculus on power-law functions.
//!
//! The closed universe here is the monomial `A * t^p` on `t > 0` with the
//! lower terminal of the fractional derivative fixed at 0. The power rule
//!
//! ```text
//! d^alpha/dt^alpha [t^p] = Gamma(p+1)/Gamma(p+1-alpha) * t^(p-alpha)
//! ```
//!
//! is applied for every `p > -1`; Gamma poles in the denominator are routed
//! through `reciprocal_gamma`, so exponents like `alpha - 1` annihilate
//! arithmetically instead of via a special case.

mod gl;
mod lemma;
mod quad;

pub use gl::{gl_weights, rl_gl};
pub use lemma::{frac_ode_residual, lemma21_solution, FracOdePair, LemmaCase};
pub use quad::{rl_quadrature, tanh_sinh, QuadResult};

use crate::error::{Error, Result};
use crate::gamma::{gamma_unchecked, reciprocal_gamma};

/// Relative tolerance for closed-form coefficient comparisons.
pub const COEFF_TOL: f64 = 1e-12;
/// Absolute tolerance for exponent comparisons (exponents come out of a few
/// float operations on exact inputs, so 1e-12 is generous).
pub const EXP_TOL: f64 = 1e-12;

/// Order of a fractional derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FracOrder {
    alpha: f64,
}

impl FracOrder {
    /// Any positive order is admissible here; the PDE models narrow this to
    /// (0, 1) at their own constructors.
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::domain(format!(
                "fractional order must satisfy alpha > 0, got {alpha}"
            )));
        }
        Ok(FracOrder { alpha })
    }

    /// Orders usable by the PDE models and the numerical evaluators.
    pub fn new_unit(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::domain(format!(
                "fractional order must satisfy 0 < alpha < 1, got {alpha}"
            )));
        }
        Ok(FracOrder { alpha })
    }

    pub fn get(&self) -> f64 {
        self.alpha
    }
}

/// The monomial `coeff * t^exponent` on `t > 0`.
///
/// A zero coefficient represents the zero function; its exponent is
/// canonicalized to 0 so that all zeros compare equal.
#[derive(Debug, Clone, Copy)]
pub struct PowerFunction {
    coeff: f64,
    exponent: f64,
}

impl PowerFunction {
    pub fn new(coeff: f64, exponent: f64) -> Self {
        if coeff == 0.0 {
            PowerFunction {
                coeff: 0.0,
                exponent: 0.0,
            }
        } else {
            PowerFunction { coeff, exponent }
        }
    }

    pub fn zero() -> Self {
        PowerFunction {
            coeff: 0.0,
            exponent: 0.0,
        }
    }

    pub fn coeff(&self) -> f64 {
        self.coeff
    }

    pub fn exponent(&self) -> f64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.coeff == 0.0
    }

    pub fn eval(&self, t: f64) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            self.coeff * t.powf(self.exponent)
        }
    }

    /// Relative comparison: equal when both are zero, or when coefficients
    /// agree to `COEFF_TOL` (relative) and exponents to `EXP_TOL`.
    pub fn approx_eq(&self, other: &PowerFunction) -> bool {
        if self.is_zero() && other.is_zero() {
            return true;
        }
        if self.is_zero() || other.is_zero() {
            return false;
        }
        let cscale = self.coeff.abs().max(other.coeff.abs());
        (self.coeff - other.coeff).abs() <= COEFF_TOL * cscale
            && (self.exponent - other.exponent).abs() <= EXP_TOL * self.exponent.abs().max(1.0)
    }
}

impl PartialEq for PowerFunction {
    fn eq(&self, other: &Self) -> bool {
        (self.is_zero() && other.is_zero())
            || (self.coeff == other.coeff && self.exponent == other.exponent)
    }
}

/// Uniform samples of a function of time, `values[k] = f(t0 + k*h)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    t0: f64,
    h: f64,
    values: Vec<f64>,
}

impl SampledFunction {
    pub fn new(t0: f64, h: f64, values: Vec<f64>) -> Result<Self> {
        if !(t0 >= 0.0) {
            return Err(Error::domain(format!("start must satisfy t0 >= 0, got {t0}")));
        }
        if !(h > 0.0) {
            return Err(Error::domain(format!("step must satisfy h > 0, got {h}")));
        }
        if values.len() < 2 {
            return Err(Error::domain("need at least 2 samples"));
        }
        Ok(SampledFunction { t0, h, values })
    }

    /// Sample a closure on `k*h`, `k = 0..n`.
    pub fn from_fn(h: f64, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new(0.0, h, (0..=n).map(|k| f(k as f64 * h)).collect())
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Riemann-Liouville derivative of a power function.
///
/// Requires `exponent > -1` (kernel integrability). Returns the zero
/// function whenever `p + 1 - alpha` is a non-positive integer.
pub fn rl_power(alpha: FracOrder, g: &PowerFunction) -> Result<PowerFunction> {
    if g.is_zero() {
        return Ok(PowerFunction::zero());
    }
    let p = g.exponent();
    if !(p > -1.0) {
        return Err(Error::domain(format!(
            "power-rule operand needs exponent > -1, got {p}"
        )));
    }
    let a = alpha.get();
    let q = p + 1.0 - a;
    // snap to the Gamma pole when q is a non-positive integer up to the
    // exponent-comparison tolerance (p = alpha - 1 rounds to q ~ 1e-17;
    // the intended value is an exact pole and the derivative vanishes)
    if q < 0.5 && (q - q.round()).abs() <= EXP_TOL && q.round() <= 0.0 {
        return Ok(PowerFunction::zero());
    }
    let coeff = g.coeff() * gamma_unchecked(p + 1.0) * reciprocal_gamma(q);
    Ok(PowerFunction::new(coeff, p - a))
}
