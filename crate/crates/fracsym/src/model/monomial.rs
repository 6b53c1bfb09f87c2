//! Bivariate monomials `coeff * t^t_exp * x^x_exp` and sums thereof.
//!
//! This is the entire symbolic engine: the exact solutions of both models
//! live in this class, and the PDE operators (RL derivative in t, powers and
//! x-derivatives) keep them there. Like-term collection compares exponents
//! to an absolute 1e-12.

use crate::error::{Error, Result};
use crate::frac::{rl_power, FracOrder, PowerFunction};

const EXP_EQ_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Monomial {
    pub coeff: f64,
    pub t_exp: f64,
    pub x_exp: f64,
}

impl Monomial {
    pub fn new(coeff: f64, t_exp: f64, x_exp: f64) -> Self {
        Monomial { coeff, t_exp, x_exp }
    }

    pub fn eval(&self, x: f64, t: f64) -> f64 {
        self.coeff * t.powf(self.t_exp) * x.powf(self.x_exp)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            coeff: self.coeff * other.coeff,
            t_exp: self.t_exp + other.t_exp,
            x_exp: self.x_exp + other.x_exp,
        }
    }

    /// d/dx of the monomial.
    pub fn dx(&self) -> Monomial {
        if self.x_exp == 0.0 {
            Monomial::new(0.0, 0.0, 0.0)
        } else {
            Monomial::new(self.coeff * self.x_exp, self.t_exp, self.x_exp - 1.0)
        }
    }

    /// Riemann-Liouville derivative in t (exponent must exceed -1).
    pub fn rl_t(&self, alpha: FracOrder) -> Result<Monomial> {
        let d = rl_power(alpha, &PowerFunction::new(self.coeff, self.t_exp))?;
        if d.is_zero() {
            Ok(Monomial::new(0.0, 0.0, self.x_exp))
        } else {
            Ok(Monomial::new(d.coeff(), d.exponent(), self.x_exp))
        }
    }

    /// Real power of a single monomial. The coefficient goes through `powf`,
    /// so a negative coefficient with a non-integer exponent is rejected.
    pub fn powf(&self, e: f64) -> Result<Monomial> {
        let c = self.coeff.powf(e);
        if !c.is_finite() {
            return Err(Error::UnsupportedForm(format!(
                "cannot raise coefficient {} to power {e}",
                self.coeff
            )));
        }
        Ok(Monomial::new(c, self.t_exp * e, self.x_exp * e))
    }
}

/// Product of two monomial sums.
pub fn mul_sums(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for m in a {
        for n in b {
            out.push(m.mul(n));
        }
    }
    out
}

pub fn dx_sum(a: &[Monomial]) -> Vec<Monomial> {
    a.iter().map(Monomial::dx).filter(|m| m.coeff != 0.0).collect()
}

pub fn scale_sum(a: &[Monomial], s: f64) -> Vec<Monomial> {
    a.iter()
        .map(|m| Monomial::new(s * m.coeff, m.t_exp, m.x_exp))
        .collect()
}

/// Collect like terms (exponent pairs equal to 1e-12) and drop terms whose
/// coefficient is below `drop_tol` in magnitude.
pub fn collect(terms: &[Monomial], drop_tol: f64) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = terms.iter().filter(|m| m.coeff != 0.0).copied().collect();
    sorted.sort_by(|a, b| {
        (a.t_exp, a.x_exp)
            .partial_cmp(&(b.t_exp, b.x_exp))
            .expect("finite exponents")
    });
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        match out.last_mut() {
            Some(last)
                if (last.t_exp - m.t_exp).abs() <= EXP_EQ_TOL
                    && (last.x_exp - m.x_exp).abs() <= EXP_EQ_TOL =>
            {
                last.coeff += m.coeff;
            }
            _ => out.push(m),
        }
    }
    out.retain(|m| m.coeff.abs() > drop_tol);
    out
}

/// Largest coefficient magnitude in a sum (0 for the empty sum).
pub fn max_coeff(terms: &[Monomial]) -> f64 {
    terms.iter().fold(0.0f64, |m, t| m.max(t.coeff.abs()))
}

/// Render a sum like `0.5641895835·t^-0.5·x^1`.
pub fn render_sum(terms: &[Monomial], fmt: impl Fn(f64) -> String) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    terms
        .iter()
        .map(|m| {
            let mut s = fmt(m.coeff);
            if m.t_exp != 0.0 {
                s.push_str(&format!("·t^{}", fmt(m.t_exp)));
            }
            if m.x_exp != 0.0 {
                s.push_str(&format!("·x^{}", fmt(m.x_exp)));
            }
            s
        })
        .collect::<Vec<_>>()
        .join(" + ")
}
