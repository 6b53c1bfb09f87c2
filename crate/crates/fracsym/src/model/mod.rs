//! The two PDE models and their right-hand sides.
//!
//! * `d^alpha_t u = (u^r)_xx = r(r-1) u^(r-2) u_x^2 + r u^(r-1) u_xx`
//!   (porous medium, parameters alpha in (0,1), r > 0, r != 1);
//! * `d^alpha_t u = a u_xx^2 + b u_x u_xx + c [u u_xx - (2/3) u_x^2]`
//!   (dual variant, parameters alpha in (0,1) and reals a, b, c).

pub mod catalog;
pub mod monomial;
pub mod residual;
pub mod solution;

pub use catalog::{catalog, reduced_ode, CatalogEntry, CatalogParams, EntryForm, EntryId, ReducedOdeSpec};
pub use residual::{model_residual, SymbolicResidual};
pub use solution::{AffinePlusTime, ExactForm, SeparableSolution};

use crate::error::{Error, Result};
use crate::frac::FracOrder;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    Fpme,
    Fdpme,
}

impl ModelKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ModelKind::Fpme => "fpme",
            ModelKind::Fdpme => "fdpme",
        }
    }
}

/// Parameters of the porous-medium model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FpmeParams {
    alpha: FracOrder,
    r: f64,
}

impl FpmeParams {
    pub fn new(alpha: f64, r: f64) -> Result<Self> {
        let alpha = FracOrder::new_unit(alpha)?;
        if !(r > 0.0) || r == 1.0 {
            return Err(Error::domain(format!("model needs r > 0 and r != 1, got r = {r}")));
        }
        Ok(FpmeParams { alpha, r })
    }

    pub fn alpha(&self) -> FracOrder {
        self.alpha
    }

    pub fn r(&self) -> f64 {
        self.r
    }
}

/// Parameters of the dual model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdpmeParams {
    alpha: FracOrder,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl FdpmeParams {
    pub fn new(alpha: f64, a: f64, b: f64, c: f64) -> Result<Self> {
        Ok(FdpmeParams {
            alpha: FracOrder::new_unit(alpha)?,
            a,
            b,
            c,
        })
    }

    pub fn alpha(&self) -> FracOrder {
        self.alpha
    }
}

/// Pointwise right-hand side of the porous-medium model; needs `u > 0`.
pub fn fpme_rhs(params: &FpmeParams, u: f64, u_x: f64, u_xx: f64) -> Result<f64> {
    if !(u > 0.0) {
        return Err(Error::domain(format!("density must be positive, got u = {u}")));
    }
    let r = params.r;
    Ok(r * (r - 1.0) * u.powf(r - 2.0) * u_x * u_x + r * u.powf(r - 1.0) * u_xx)
}

/// Pointwise right-hand side of the dual model.
pub fn fdpme_rhs(params: &FdpmeParams, u: f64, u_x: f64, u_xx: f64) -> f64 {
    params.a * u_xx * u_xx
        + params.b * u_x * u_xx
        + params.c * (u * u_xx - 2.0 / 3.0 * u_x * u_x)
}
