//! Substitution of the affine symmetry families into the stated determining
//! equations.
//!
//! For both models the candidate family makes every entry of the equations a
//! constant or a multiple of u, so each equation expands into a short list
//! of (monomial-in-u, coefficient) pairs whose coefficients are linear in
//! the free constants. Coefficients that fail to vanish are reported with
//! the responsible constants, found by a one-hot scan.

use crate::model::residual::Model;
use crate::verify::{fmt_num, Mode, ResidualReport, Verdict};

/// Vanishing threshold for expanded polynomial coefficients, relative to the
/// largest free-constant magnitude.
const COEFF_THRESHOLD: f64 = 1e-14;

/// Free constants of the porous-model family
/// `tau = C1 t + C2, xi = C3 x + C4, eta = (2 C3 - alpha C1)/(r-1) u`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FpmeFamily {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub c4: f64,
}

/// Free constants of the dual-model family
/// `tau = D1 t + D2, xi = D3, eta = -alpha D1 u + D4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdpmeFamily {
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
    pub d4: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DeterminingFamily {
    Fpme(FpmeFamily),
    Fdpme(FdpmeFamily),
}

struct Term {
    equation: &'static str,
    monomial: &'static str,
    coeff: f64,
}

/// Expanded coefficients of every stated determining equation under the
/// family, one entry per (equation, u-monomial).
fn expand_fpme(alpha: f64, r: f64, f: &FpmeFamily) -> Vec<Term> {
    let eta_u = (2.0 * f.c3 - alpha * f.c1) / (r - 1.0);
    let mut v = Vec::new();
    // C^n_alpha d^n_t(eta_u) - C^{n+1}_alpha D^{n+1}_t(tau) = 0, n >= 1:
    // eta_u is constant and tau is affine in t, so both pieces vanish for
    // every n; spot-sample a few n to keep the equation visible in reports.
    for n in 1..=5 {
        let _ = n;
        v.push(Term {
            equation: "n-family: C^n_a d^n(eta_u) - C^(n+1)_a D^(n+1)(tau)",
            monomial: "D^(alpha-n) u",
            coeff: 0.0,
        });
    }
    // (r-1) eta_x + u (eta_xu - xi_xx) = 0
    v.push(Term {
        equation: "(r-1)·eta_x + u·(eta_xu - xi_xx)",
        monomial: "1",
        coeff: 0.0,
    });
    // alpha Dt(tau) u - 2 u xi_x + (r-1) eta = 0
    v.push(Term {
        equation: "alpha·Dt(tau)·u - 2u·xi_x + (r-1)·eta",
        monomial: "u",
        coeff: alpha * f.c1 - 2.0 * f.c3 + (r - 1.0) * eta_u,
    });
    // alpha(r-1) u tau_t + (r-1) u eta_u - 2(r-1) u xi_x + u^2 eta_uu
    //   - 2 u^2 xi_xu + (r-1)(r-2) eta = 0
    v.push(Term {
        equation: "alpha(r-1)·u·tau_t + (r-1)·u·eta_u - 2(r-1)·u·xi_x + u²·eta_uu - 2u²·xi_xu + (r-1)(r-2)·eta",
        monomial: "u",
        coeff: alpha * (r - 1.0) * f.c1 + (r - 1.0) * eta_u - 2.0 * (r - 1.0) * f.c3
            + (r - 1.0) * (r - 2.0) * eta_u,
    });
    // tau_x = tau_u = xi_t = xi_u = eta_xx = 0: structural zeros for the family
    v.push(Term {
        equation: "tau_x = tau_u = xi_t = xi_u = eta_xx",
        monomial: "1",
        coeff: 0.0,
    });
    // lower-terminal invariance tau|_{t=0} = 0
    v.push(Term {
        equation: "lower-terminal condition tau(t=0)",
        monomial: "1",
        coeff: f.c2,
    });
    v
}

fn expand_fdpme(alpha: f64, a: f64, b: f64, c: f64, f: &FdpmeFamily) -> Vec<Term> {
    let eta_u = -alpha * f.d1;
    let dt_tau = f.d1;
    let mut v = Vec::new();
    // -b eta_xx - c u (2 eta_xu - xi_xx) + (4/3) c eta_x = 0
    v.push(Term {
        equation: "-b·eta_xx - c·u·(2·eta_xu - xi_xx) + (4/3)c·eta_x",
        monomial: "1",
        coeff: 0.0,
    });
    // (2/3)c eta_u + (2/3)c alpha Dt(tau) - 2b eta_xu + b xi_xx
    //   - c u eta_uu + 2 c u xi_xu - (4/3) c xi_x = 0
    v.push(Term {
        equation: "(2/3)c·eta_u + (2/3)c·alpha·Dt(tau) - 2b·eta_xu + b·xi_xx - c·u·eta_uu + 2c·u·xi_xu - (4/3)c·xi_x",
        monomial: "1",
        coeff: (2.0 / 3.0) * c * eta_u + (2.0 / 3.0) * c * alpha * dt_tau,
    });
    // -alpha c u Dt(tau) - 2a eta_xx - b eta_x - c eta + 2 c u xi_x = 0
    v.push(Term {
        equation: "-alpha·c·u·Dt(tau) - 2a·eta_xx - b·eta_x - c·eta + 2c·u·xi_x",
        monomial: "u",
        coeff: -alpha * c * dt_tau - c * eta_u,
    });
    v.push(Term {
        equation: "-alpha·c·u·Dt(tau) - 2a·eta_xx - b·eta_x - c·eta + 2c·u·xi_x",
        monomial: "1",
        coeff: -c * f.d4,
    });
    // -a eta_u + 4a xi_x - a alpha Dt(tau) = 0
    // (u_xx^2 balance; the alpha factor on the Dt(tau) term is restored
    // here, see the report note)
    v.push(Term {
        equation: "-a·eta_u + 4a·xi_x - a·alpha·Dt(tau)",
        monomial: "1",
        coeff: -a * eta_u - a * alpha * dt_tau,
    });
    // -alpha b Dt(tau) - 4a eta_xu + 2a xi_xx - b eta_u + 3b xi_x = 0
    v.push(Term {
        equation: "-alpha·b·Dt(tau) - 4a·eta_xu + 2a·xi_xx - b·eta_u + 3b·xi_x",
        monomial: "1",
        coeff: -alpha * b * dt_tau - b * eta_u,
    });
    // n-family as for the porous model
    v.push(Term {
        equation: "n-family: C^n_a d^n(eta_u) - C^(n+1)_a D^(n+1)(tau)",
        monomial: "D^(alpha-n) u",
        coeff: 0.0,
    });
    // tau_x = tau_u = xi_t = xi_u = eta_uu = 0
    v.push(Term {
        equation: "tau_x = tau_u = xi_t = xi_u = eta_uu",
        monomial: "1",
        coeff: 0.0,
    });
    v.push(Term {
        equation: "lower-terminal condition tau(t=0)",
        monomial: "1",
        coeff: f.d2,
    });
    v
}

fn family_scale(consts: &[f64]) -> f64 {
    consts.iter().fold(1.0f64, |m, c| m.max(c.abs()))
}

/// Substitute the family into every stated determining equation and report
/// coefficients that fail to vanish, attributed to responsible constants.
pub fn check_determining(model: &Model, family: &DeterminingFamily) -> ResidualReport {
    let (terms, consts, const_names, notes): (Vec<Term>, Vec<f64>, &[&str], Vec<String>) =
        match (model, family) {
            (Model::Fpme(p), DeterminingFamily::Fpme(f)) => (
                expand_fpme(p.alpha().get(), p.r(), f),
                vec![f.c1, f.c2, f.c3, f.c4],
                &["C1", "C2", "C3", "C4"],
                vec![],
            ),
            (Model::Fdpme(p), DeterminingFamily::Fdpme(f)) => (
                expand_fdpme(p.alpha().get(), p.a, p.b, p.c, f),
                vec![f.d1, f.d2, f.d3, f.d4],
                &["D1", "D2", "D3", "D4"],
                vec![
                    "u_xx² equation stored with the alpha factor on the Dt(tau) term; the published rendering omits it"
                        .to_string(),
                ],
            ),
            _ => {
                return ResidualReport {
                    subject: "determining".into(),
                    mode: Mode::Symbolic,
                    residual_terms: vec![],
                    findings: vec!["family does not belong to the model".into()],
                    max_abs: None,
                    rms: None,
                    threshold: None,
                    verdict: Verdict::Unverifiable,
                    notes: vec![],
                }
            }
        };

    let threshold = COEFF_THRESHOLD * family_scale(&consts);
    let mut findings = Vec::new();
    for t in &terms {
        if t.coeff.abs() > threshold {
            // attribute: re-expand with one-hot constants
            let mut responsible = Vec::new();
            for (k, name) in const_names.iter().enumerate() {
                let mut onehot = [0.0; 4];
                onehot[k] = 1.0;
                let one = match (model, family) {
                    (Model::Fpme(p), DeterminingFamily::Fpme(_)) => expand_fpme(
                        p.alpha().get(),
                        p.r(),
                        &FpmeFamily {
                            c1: onehot[0],
                            c2: onehot[1],
                            c3: onehot[2],
                            c4: onehot[3],
                        },
                    ),
                    (Model::Fdpme(p), DeterminingFamily::Fdpme(_)) => expand_fdpme(
                        p.alpha().get(),
                        p.a,
                        p.b,
                        p.c,
                        &FdpmeFamily {
                            d1: onehot[0],
                            d2: onehot[1],
                            d3: onehot[2],
                            d4: onehot[3],
                        },
                    ),
                    _ => unreachable!(),
                };
                let hit = one
                    .iter()
                    .any(|o| o.equation == t.equation && o.monomial == t.monomial && o.coeff.abs() > COEFF_THRESHOLD);
                if hit {
                    responsible.push(*name);
                }
            }
            findings.push(format!(
                "equation [{}]; term {}; coeff={}; responsible={}",
                t.equation,
                t.monomial,
                fmt_num(t.coeff),
                responsible.join(",")
            ));
        }
    }

    let verdict = if findings.is_empty() {
        Verdict::Verified
    } else {
        Verdict::Refuted
    };
    ResidualReport {
        subject: format!("determining-{}", model.kind().as_str()),
        mode: Mode::Symbolic,
        residual_terms: vec![],
        findings,
        max_abs: None,
        rms: None,
        threshold: Some(threshold),
        verdict,
        notes,
    }
}
