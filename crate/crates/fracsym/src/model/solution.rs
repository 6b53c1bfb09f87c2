//! Closed-form solution shapes for the two models.

use crate::error::{Error, Result};
use crate::frac::PowerFunction;
use crate::model::monomial::Monomial;

/// `u(x, t) = coeff * t^t_exp * x^x_exp` on `x > 0, t > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparableSolution {
    coeff: f64,
    t_exp: f64,
    x_exp: f64,
}

impl SeparableSolution {
    pub fn new(coeff: f64, t_exp: f64, x_exp: f64) -> Result<Self> {
        if coeff == 0.0 {
            return Ok(SeparableSolution {
                coeff: 0.0,
                t_exp: 0.0,
                x_exp: 0.0,
            });
        }
        if !(t_exp > -1.0) {
            return Err(Error::domain(format!(
                "separable solution needs t-exponent > -1 for RL differentiability, got {t_exp}"
            )));
        }
        Ok(SeparableSolution { coeff, t_exp, x_exp })
    }

    pub fn coeff(&self) -> f64 {
        self.coeff
    }

    pub fn t_exp(&self) -> f64 {
        self.t_exp
    }

    pub fn x_exp(&self) -> f64 {
        self.x_exp
    }

    pub fn monomial(&self) -> Monomial {
        Monomial::new(self.coeff, self.t_exp, self.x_exp)
    }
}

/// `u(x, t) = slope * x + f(t)` with `slope = +1 or -1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffinePlusTime {
    slope: f64,
    f: PowerFunction,
}

impl AffinePlusTime {
    pub fn new(slope: f64, f: PowerFunction) -> Result<Self> {
        if slope != 1.0 && slope != -1.0 {
            return Err(Error::domain(format!("slope must be +1 or -1, got {slope}")));
        }
        Ok(AffinePlusTime { slope, f })
    }

    pub fn slope(&self) -> f64 {
        self.slope
    }

    pub fn f(&self) -> &PowerFunction {
        &self.f
    }
}

/// Anything the symbolic residual engine accepts.
#[derive(Debug, Clone, PartialEq)]
pub enum ExactForm {
    Separable(SeparableSolution),
    AffinePlusTime(AffinePlusTime),
    /// General finite sum of bivariate monomials (arises from transported
    /// solutions, e.g. a u-translation adding a constant term).
    Monomials(Vec<Monomial>),
}

impl ExactForm {
    /// The solution as a list of monomials.
    pub fn monomials(&self) -> Vec<Monomial> {
        match self {
            ExactForm::Separable(s) => {
                if s.coeff() == 0.0 {
                    vec![]
                } else {
                    vec![s.monomial()]
                }
            }
            ExactForm::AffinePlusTime(a) => {
                let mut v = vec![Monomial::new(a.slope(), 0.0, 1.0)];
                if !a.f().is_zero() {
                    v.push(Monomial::new(a.f().coeff(), a.f().exponent(), 0.0));
                }
                v
            }
            ExactForm::Monomials(v) => v.clone(),
        }
    }

    pub fn eval(&self, x: f64, t: f64) -> f64 {
        self.monomials().iter().map(|m| m.eval(x, t)).sum()
    }

    pub fn eval_x_derivative(&self, x: f64, t: f64) -> f64 {
        self.monomials().iter().map(|m| m.dx().eval(x, t)).sum()
    }

    pub fn eval_xx_derivative(&self, x: f64, t: f64) -> f64 {
        self.monomials().iter().map(|m| m.dx().dx().eval(x, t)).sum()
    }
}
