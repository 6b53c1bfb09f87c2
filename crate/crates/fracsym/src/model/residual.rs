//! Exact (symbolic) PDE residuals on monomial-closed solutions.
//!
//! Both sides of the model are expanded as sums of bivariate monomials:
//! the left side through the power rule term by term, the right side through
//! exact x-differentiation and products. An empty collected difference is an
//! exact solution; anything left over is the refutation, reported verbatim.

use crate::error::{Error, Result};
use crate::model::monomial::{self, Monomial};
use crate::model::solution::ExactForm;
use crate::model::{FdpmeParams, FpmeParams};

/// A model with its parameters, for dispatching residual checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Model {
    Fpme(FpmeParams),
    Fdpme(FdpmeParams),
}

impl Model {
    pub fn alpha(&self) -> crate::frac::FracOrder {
        match self {
            Model::Fpme(p) => p.alpha(),
            Model::Fdpme(p) => p.alpha(),
        }
    }

    pub fn kind(&self) -> super::ModelKind {
        match self {
            Model::Fpme(_) => super::ModelKind::Fpme,
            Model::Fdpme(_) => super::ModelKind::Fdpme,
        }
    }
}

/// Outcome of a symbolic residual computation.
#[derive(Debug, Clone)]
pub struct SymbolicResidual {
    pub lhs: Vec<Monomial>,
    pub rhs: Vec<Monomial>,
    pub residual: Vec<Monomial>,
    /// Coefficient scale both sides were compared against.
    pub scale: f64,
}

impl SymbolicResidual {
    pub fn is_empty(&self) -> bool {
        self.residual.is_empty()
    }

    /// Evaluate the residual sum at a point.
    pub fn eval(&self, x: f64, t: f64) -> f64 {
        self.residual.iter().map(|m| m.eval(x, t)).sum()
    }
}

fn assemble(lhs: Vec<Monomial>, rhs: Vec<Monomial>) -> SymbolicResidual {
    let scale = monomial::max_coeff(&lhs).max(monomial::max_coeff(&rhs)).max(1.0);
    let tol = 1e-12 * scale;
    let lhs = monomial::collect(&lhs, tol);
    let rhs = monomial::collect(&rhs, tol);
    let mut diff = lhs.clone();
    diff.extend(monomial::scale_sum(&rhs, -1.0));
    let residual = monomial::collect(&diff, tol);
    SymbolicResidual {
        lhs,
        rhs,
        residual,
        scale,
    }
}

/// Residual of the porous-medium model on a single positive monomial.
pub fn fpme_residual(params: &FpmeParams, sol: &ExactForm) -> Result<SymbolicResidual> {
    let terms = sol.monomials();
    if terms.is_empty() {
        return Err(Error::domain(
            "porous-medium residual needs a nonzero solution (u > 0)",
        ));
    }
    if terms.len() > 1 {
        return Err(Error::UnsupportedForm(
            "porous-medium residual closes over single monomials only (u^r of a sum is not monomial)"
                .to_string(),
        ));
    }
    let m = terms[0];
    if !(m.coeff > 0.0) {
        return Err(Error::domain(format!(
            "porous-medium density needs a positive coefficient, got {}",
            m.coeff
        )));
    }
    let lhs = vec![m.rl_t(params.alpha())?];
    let w = m.powf(params.r())?;
    let rhs = vec![w.dx().dx()];
    Ok(assemble(lhs, rhs))
}

/// Residual of the dual model on any finite monomial sum.
pub fn fdpme_residual(params: &FdpmeParams, sol: &ExactForm) -> Result<SymbolicResidual> {
    let u = sol.monomials();
    let mut lhs = Vec::with_capacity(u.len());
    for m in &u {
        lhs.push(m.rl_t(params.alpha())?);
    }
    let ux = monomial::dx_sum(&u);
    let uxx = monomial::dx_sum(&ux);
    let mut rhs = Vec::new();
    rhs.extend(monomial::scale_sum(&monomial::mul_sums(&uxx, &uxx), params.a));
    rhs.extend(monomial::scale_sum(&monomial::mul_sums(&ux, &uxx), params.b));
    rhs.extend(monomial::scale_sum(&monomial::mul_sums(&u, &uxx), params.c));
    rhs.extend(monomial::scale_sum(
        &monomial::mul_sums(&ux, &ux),
        -2.0 / 3.0 * params.c,
    ));
    Ok(assemble(lhs, rhs))
}

/// Dispatch on the model.
pub fn model_residual(model: &Model, sol: &ExactForm) -> Result<SymbolicResidual> {
    match model {
        Model::Fpme(p) => fpme_residual(p, sol),
        Model::Fdpme(p) => fdpme_residual(p, sol),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frac::PowerFunction;
    use crate::gamma::gamma;
    use crate::model::solution::{AffinePlusTime, SeparableSolution};
    use approx::assert_relative_eq;

    fn sep(c: f64, p: f64, q: f64) -> ExactForm {
        ExactForm::Separable(SeparableSolution::new(c, p, q).unwrap())
    }

    #[test]
    fn scaling_solution_of_the_half_order_model_is_exact() {
        // u = 9 pi t x^-4 solves the model with r = 1/2, alpha = 1/2
        let p = FpmeParams::new(0.5, 0.5).unwrap();
        let res = fpme_residual(&p, &sep(9.0 * std::f64::consts::PI, 1.0, -4.0)).unwrap();
        assert!(res.is_empty(), "{:?}", res.residual);
    }

    #[test]
    fn squared_coefficient_variant_is_refuted() {
        let alpha = 0.4;
        let p = FpmeParams::new(alpha, 2.0).unwrap();
        let ratio = gamma(1.0 - alpha).unwrap() / gamma(1.0 - 2.0 * alpha).unwrap();
        let good = fpme_residual(&p, &sep(ratio / 12.0, -alpha, 2.0)).unwrap();
        assert!(good.is_empty());
        let bad = fpme_residual(&p, &sep(ratio * ratio / 12.0, -alpha, 2.0)).unwrap();
        assert!(!bad.is_empty());
    }

    #[test]
    fn x_independent_power_solution_is_exact_for_any_lambda() {
        for (lambda, alpha, r) in [(2.0, 0.3, 2.0), (0.7, 0.8, 0.5), (5.0, 0.5, 3.0)] {
            let p = FpmeParams::new(alpha, r).unwrap();
            let res = fpme_residual(&p, &sep(lambda, alpha - 1.0, 0.0)).unwrap();
            assert!(res.is_empty());
        }
    }

    #[test]
    fn affine_solution_of_the_dual_model_leaves_the_x_term() {
        // u = x + f with d^alpha f = -(2/3)c: the RL derivative of the
        // time-constant x-term contributes x * t^-alpha / Gamma(1-alpha).
        let alpha = 0.5;
        let c = 3.0;
        let p = FdpmeParams::new(alpha, 1.0, 1.0, c).unwrap();
        let f = PowerFunction::new(-(2.0 * c / 3.0) / gamma(alpha + 1.0).unwrap(), alpha);
        let sol = ExactForm::AffinePlusTime(AffinePlusTime::new(1.0, f).unwrap());
        let res = fdpme_residual(&p, &sol).unwrap();
        assert_eq!(res.residual.len(), 1);
        let m = res.residual[0];
        assert_relative_eq!(m.x_exp, 1.0);
        assert_relative_eq!(m.t_exp, -alpha);
        assert_relative_eq!(
            m.coeff,
            1.0 / gamma(1.0 - alpha).unwrap(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn dual_model_time_power_solution_is_exact() {
        let p = FdpmeParams::new(0.35, 2.0, -1.0, 4.0).unwrap();
        let res = fdpme_residual(&p, &sep(3.0, 0.35 - 1.0, 0.0)).unwrap();
        assert!(res.is_empty());
    }

    #[test]
    fn multi_monomial_input_is_rejected_for_the_porous_model() {
        let p = FpmeParams::new(0.5, 2.0).unwrap();
        let sol = ExactForm::Monomials(vec![
            Monomial::new(1.0, 0.5, 1.0),
            Monomial::new(2.0, 0.0, 0.0),
        ]);
        assert!(matches!(
            fpme_residual(&p, &sol),
            Err(Error::UnsupportedForm(_))
        ));
    }

    #[test]
    fn x_side_coefficient_identity_of_the_scaling_family() {
        // m(m-1) = 2r(r+1)/(r-1)^2 with m = 2r/(r-1): the x-profile part of
        // the scaling solution balances for every admissible r.
        for r in [1.5f64, 3.0] {
            let m = 2.0 * r / (r - 1.0);
            let lambda = 2.0 * r * (r + 1.0) / ((r - 1.0) * (r - 1.0));
            assert!((m * (m - 1.0) - lambda).abs() <= 1e-12 * lambda.abs());
        }
    }

    #[test]
    fn closed_form_rhs_matches_pointwise_rhs_on_monomials() {
        // (u^r)_xx computed symbolically equals fpme_rhs evaluated pointwise
        let p = FpmeParams::new(0.35, 2.5).unwrap();
        let u = Monomial::new(1.7, 0.8, 1.4);
        let w = u.powf(p.r()).unwrap().dx().dx();
        for (x, t) in [(1.0, 0.5), (1.5, 1.0), (2.0, 2.0)] {
            let got = crate::model::fpme_rhs(
                &p,
                u.eval(x, t),
                u.dx().eval(x, t),
                u.dx().dx().eval(x, t),
            )
            .unwrap();
            assert_relative_eq!(got, w.eval(x, t), max_relative = 1e-10);
        }
    }

    #[test]
    fn residual_evaluation_is_scale_invariant_at_sample_points() {
        // an empty residual evaluates to zero wherever you sample it
        let p = FpmeParams::new(0.5, 0.5).unwrap();
        let res = fpme_residual(&p, &sep(9.0 * std::f64::consts::PI, 1.0, -4.0)).unwrap();
        for (x, t) in [(1.0, 0.25), (17.0, 3.0), (0.04, 9.0)] {
            assert_eq!(res.eval(x, t), 0.0);
        }
    }
}
