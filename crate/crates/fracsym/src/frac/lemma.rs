//! Closed-form solutions of `d^alpha g = lambda * t^beta * g^r` and the
//! residual oracle that checks them.
//!
//! All three cases reduce to a monomial ansatz `g = K t^m` with
//! `m = (alpha+beta)/(1-r)` and the coefficient identity
//! `K^(r-1) = Gamma(m+1) / (lambda * Gamma(m+1-alpha))`.
//!
//! Case (ii) is the specialization r = 1/2 and case (iii) is r = 2; both of
//! their published coefficient forms follow from the identity above. For a
//! real solution the right-hand side of the identity must be positive in
//! case (i) and `lambda * Gamma(alpha+2beta+1) > 0` in case (ii); these show
//! up below as named preconditions.

use crate::error::{Error, Result};
use crate::frac::{rl_power, FracOrder, PowerFunction};
use crate::gamma::{gamma, gamma_unchecked, is_gamma_pole};

/// Which branch of the closed-form family to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaCase {
    /// `r` free (r > 0, r != 1).
    I,
    /// `r` fixed at 1/2.
    II,
    /// `r` fixed at 2.
    III,
}

/// Construct the closed-form solution of `d^alpha g = lambda t^beta g^r`
/// (lower terminal 0) for the given case.
///
/// `r` is only consulted for case I; cases II/III fix it to 1/2 and 2.
pub fn lemma21_solution(
    case: LemmaCase,
    alpha: FracOrder,
    beta: f64,
    r: f64,
    lambda: f64,
) -> Result<PowerFunction> {
    let a = alpha.get();
    if lambda == 0.0 {
        return Err(Error::domain("need lambda != 0"));
    }
    match case {
        LemmaCase::I => {
            if !(r > 0.0) || r == 1.0 {
                return Err(Error::domain(format!("case I needs r > 0, r != 1, got r = {r}")));
            }
            let m = (a + beta) / (1.0 - r);
            if !(m > -1.0) {
                return Err(Error::domain(format!(
                    "case I needs (alpha+beta)/(1-r) > -1, got {m}"
                )));
            }
            if is_gamma_pole(m + 1.0 - a) {
                return Err(Error::domain(format!(
                    "case I degenerate: (alpha*r+beta)/(1-r)+1 = {} is a Gamma pole",
                    m + 1.0 - a
                )));
            }
            let bracket = gamma_unchecked(m + 1.0) / (lambda * gamma_unchecked(m + 1.0 - a));
            if !(bracket > 0.0) {
                return Err(Error::domain(format!(
                    "case I has no real solution: Gamma(m+1)/(lambda*Gamma(m+1-alpha)) = {bracket:.6e} <= 0 \
                     (m = {m})"
                )));
            }
            Ok(PowerFunction::new(bracket.powf(1.0 / (r - 1.0)), m))
        }
        LemmaCase::II => {
            let m = 2.0 * (a + beta);
            if !(m > -1.0) {
                return Err(Error::domain(format!(
                    "case II needs 2(alpha+beta) > -1, got {m}"
                )));
            }
            if is_gamma_pole(a + 2.0 * beta + 1.0) {
                return Err(Error::domain(format!(
                    "case II degenerate: alpha+2beta+1 = {} is a Gamma pole",
                    a + 2.0 * beta + 1.0
                )));
            }
            let y = lambda * gamma_unchecked(a + 2.0 * beta + 1.0)
                / gamma_unchecked(2.0 * a + 2.0 * beta + 1.0);
            if !(y > 0.0) {
                return Err(Error::domain(format!(
                    "case II has no real solution: lambda*Gamma(alpha+2beta+1) = {:.6e} <= 0",
                    y * gamma_unchecked(2.0 * a + 2.0 * beta + 1.0)
                )));
            }
            Ok(PowerFunction::new(y * y, m))
        }
        LemmaCase::III => {
            if !(a + beta < 1.0) {
                return Err(Error::domain(format!(
                    "case III needs alpha+beta < 1, got {}",
                    a + beta
                )));
            }
            if is_gamma_pole(1.0 - 2.0 * a - beta) {
                return Err(Error::domain(format!(
                    "case III degenerate: 1-2alpha-beta = {} is a Gamma pole",
                    1.0 - 2.0 * a - beta
                )));
            }
            let k = gamma(1.0 - a - beta)? / (lambda * gamma_unchecked(1.0 - 2.0 * a - beta));
            Ok(PowerFunction::new(k, -(a + beta)))
        }
    }
}

/// Both sides of `d^alpha g = lambda t^beta g^r` as power functions.
#[derive(Debug, Clone, Copy)]
pub struct FracOdePair {
    pub lhs: PowerFunction,
    pub rhs: PowerFunction,
}

impl FracOdePair {
    /// Exact match: coefficients to relative 1e-12, exponents to 1e-12.
    pub fn is_matched(&self) -> bool {
        self.lhs.approx_eq(&self.rhs)
    }
}

/// Evaluate both sides of the fractional ODE on a monomial `g`.
pub fn frac_ode_residual(
    alpha: FracOrder,
    beta: f64,
    r: f64,
    lambda: f64,
    g: &PowerFunction,
) -> Result<FracOdePair> {
    let lhs = rl_power(alpha, g)?;
    let rhs = if g.is_zero() {
        PowerFunction::zero()
    } else {
        PowerFunction::new(
            lambda * g.coeff().powf(r),
            beta + r * g.exponent(),
        )
    };
    Ok(FracOdePair { lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn a(x: f64) -> FracOrder {
        FracOrder::new(x).unwrap()
    }

    #[test]
    fn case_i_reproduces_scaling_solution_coefficient() {
        // lambda = 2r(r+1)/(r-1)^2, beta = 0, r = 3, alpha = 0.4
        let r = 3.0;
        let lam = 2.0 * r * (r + 1.0) / ((r - 1.0) * (r - 1.0));
        let g = lemma21_solution(LemmaCase::I, a(0.4), 0.0, r, lam).unwrap();
        assert_relative_eq!(g.coeff(), 0.295_765_371_076_621_12, max_relative = 1e-12);
        assert_relative_eq!(g.exponent(), -0.2, epsilon = 1e-14);
        assert!(frac_ode_residual(a(0.4), 0.0, r, lam, &g).unwrap().is_matched());
    }

    #[test]
    fn case_i_rejects_negative_bracket() {
        // r = 1.5, alpha = 0.4: Gamma(m+1-alpha) = Gamma(-0.2) < 0, so the
        // coefficient identity K^(1/2) < 0 has no real solution.
        let r = 1.5;
        let lam = 2.0 * r * (r + 1.0) / ((r - 1.0) * (r - 1.0));
        let err = lemma21_solution(LemmaCase::I, a(0.4), 0.0, r, lam).unwrap_err();
        assert!(err.to_string().contains("no real solution"), "{err}");
    }

    #[test]
    fn case_ii_matches_its_closed_form() {
        // lambda = 6, beta = 0: g = [6 Gamma(a+1)/Gamma(2a+1)]^2 t^(2a)
        let g = lemma21_solution(LemmaCase::II, a(0.5), 0.0, 0.5, 6.0).unwrap();
        assert_relative_eq!(g.coeff(), 9.0 * std::f64::consts::PI, max_relative = 1e-12);
        assert_relative_eq!(g.exponent(), 1.0);
        assert!(frac_ode_residual(a(0.5), 0.0, 0.5, 6.0, &g).unwrap().is_matched());
    }

    #[test]
    fn case_iii_confirms_unsquared_gamma_ratio() {
        // lambda = 12, beta = 0, alpha = 0.4:
        // the ratio Gamma(1-a)/Gamma(1-2a) enters to the FIRST power.
        let g = lemma21_solution(LemmaCase::III, a(0.4), 0.0, 2.0, 12.0).unwrap();
        assert_relative_eq!(g.coeff(), 0.027_031_927_430_547_022, max_relative = 1e-12);
        assert!(frac_ode_residual(a(0.4), 0.0, 2.0, 12.0, &g).unwrap().is_matched());
        // the squared variant does not verify
        let squared = PowerFunction::new(
            12.0 * g.coeff() * g.coeff(),
            g.exponent(),
        );
        assert!(!frac_ode_residual(a(0.4), 0.0, 2.0, 12.0, &squared).unwrap().is_matched());
    }

    #[test]
    fn pole_exponent_mismatch_is_reported() {
        // g = t^(alpha-1), r = 1, beta = 0: LHS vanishes, RHS does not.
        let g = PowerFunction::new(1.0, -0.6);
        let pair = frac_ode_residual(a(0.4), 0.0, 1.0, 2.5, &g).unwrap();
        assert!(pair.lhs.is_zero());
        assert!(!pair.rhs.is_zero());
        assert!(!pair.is_matched());
    }

    #[test]
    fn zero_solution_trivially_matches() {
        let pair =
            frac_ode_residual(a(0.3), 0.2, 2.0, 5.0, &PowerFunction::zero()).unwrap();
        assert!(pair.is_matched());
    }

    #[test]
    fn preconditions_name_the_failed_inequality() {
        let e = lemma21_solution(LemmaCase::I, a(0.9), 0.2, 2.0, 1.0).unwrap_err();
        assert!(e.to_string().contains("(alpha+beta)/(1-r) > -1"), "{e}");
        let e = lemma21_solution(LemmaCase::II, a(0.2), -0.8, 0.5, 1.0).unwrap_err();
        assert!(e.to_string().contains("2(alpha+beta) > -1"), "{e}");
        let e = lemma21_solution(LemmaCase::III, a(0.9), 0.2, 2.0, 1.0).unwrap_err();
        assert!(e.to_string().contains("alpha+beta < 1"), "{e}");
        let e = lemma21_solution(LemmaCase::III, a(0.5), 0.0, 2.0, 1.0).unwrap_err();
        assert!(e.to_string().contains("Gamma pole"), "{e}");
    }
}
