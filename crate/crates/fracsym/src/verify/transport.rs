//! Transport of catalog solutions along one-parameter symmetry groups.
//!
//! The flow of a scaling field keeps monomial solutions monomial, so the
//! transported function goes back through the symbolic residual engine. An
//! x-translation leaves the monomial class (unless the x-exponent is a small
//! non-negative integer, where a binomial expansion restores it); there the
//! check evaluates pointwise on the image of the default grid, with the time
//! direction still handled exactly by the power rule.

use crate::error::{Error, Result};
use crate::frac::rl_power;
use crate::frac::PowerFunction;
use crate::lie::{flow, AlgebraElement, PointTransformation};
use crate::model::catalog::{catalog, CatalogParams, EntryId};
use crate::model::monomial::{render_sum, Monomial};
use crate::model::residual::{model_residual, Model};
use crate::model::solution::ExactForm;
use crate::model::{fdpme_rhs, fpme_rhs};
use crate::verify::{fmt_num, GridSpec, Mode, ResidualReport, Verdict};

/// Numeric-mode verdict threshold (both sides are analytic here).
const TRANSPORT_TOL: f64 = 1e-8;

fn binomial(n: u32, k: u32) -> f64 {
    let mut out = 1.0;
    for i in 0..k {
        out = out * (n - i) as f64 / (i + 1) as f64;
    }
    out
}

/// Rewrite `coeff * t^p * ((x - shift)/scale)^q` as monomials in x, possible
/// when q is a small non-negative integer.
fn expand_affine_power(m: &Monomial, shift: f64, scale: f64) -> Option<Vec<Monomial>> {
    let q = m.x_exp;
    if q < 0.0 || q != q.round() || q > 8.0 {
        return None;
    }
    let qi = q as u32;
    let mut out = Vec::with_capacity(qi as usize + 1);
    for k in 0..=qi {
        let c = m.coeff
            * binomial(qi, k)
            * (-shift).powi((qi - k) as i32)
            / scale.powi(qi as i32);
        if c != 0.0 {
            out.push(Monomial::new(c, m.t_exp, k as f64));
        }
    }
    Some(out)
}

/// Transported solution as monomials, when the class is preserved.
fn transported_monomials(map: &PointTransformation, terms: &[Monomial]) -> Option<Vec<Monomial>> {
    let mut out = Vec::new();
    for m in terms {
        let scaled = Monomial::new(
            map.u_scale * m.coeff * map.t_scale.powf(-m.t_exp),
            m.t_exp,
            m.x_exp,
        );
        if map.x_shift == 0.0 {
            out.push(Monomial::new(
                scaled.coeff * map.x_scale.powf(-m.x_exp),
                m.t_exp,
                m.x_exp,
            ));
        } else {
            out.extend(expand_affine_power(&scaled, map.x_shift, map.x_scale)?);
        }
    }
    if map.u_shift != 0.0 {
        out.push(Monomial::new(map.u_shift, 0.0, 0.0));
    }
    Some(out)
}

/// Pointwise check of a transported single monomial on the image of the
/// default grid under the map (so the domain follows the solution).
fn numeric_transport_check(
    model: &Model,
    map: &PointTransformation,
    base: &Monomial,
) -> Result<(f64, f64)> {
    let grid = GridSpec::default();
    let alpha = model.alpha();
    // time part of the transported function: coeff_of_x(x) * t^p
    let p = base.t_exp;
    let rl_tp = rl_power(alpha, &PowerFunction::new(1.0, p))?;
    let rl_shift = rl_power(alpha, &PowerFunction::new(1.0, 0.0))?;
    let cx = |x: f64| {
        map.u_scale
            * base.coeff
            * ((x - map.x_shift) / map.x_scale).powf(base.x_exp)
            * map.t_scale.powf(-p)
    };
    let cx_d = |x: f64| {
        map.u_scale
            * base.coeff
            * base.x_exp
            * ((x - map.x_shift) / map.x_scale).powf(base.x_exp - 1.0)
            * map.t_scale.powf(-p)
            / map.x_scale
    };
    let cx_dd = |x: f64| {
        map.u_scale
            * base.coeff
            * base.x_exp
            * (base.x_exp - 1.0)
            * ((x - map.x_shift) / map.x_scale).powf(base.x_exp - 2.0)
            * map.t_scale.powf(-p)
            / (map.x_scale * map.x_scale)
    };

    let mut max_abs = 0.0f64;
    let mut scale = 1.0f64;
    for (x0, t0) in grid.nodes() {
        let x = map.x_scale * x0 + map.x_shift;
        let t = map.t_scale * t0;
        let u = cx(x) * t.powf(p) + map.u_shift;
        let ux = cx_d(x) * t.powf(p);
        let uxx = cx_dd(x) * t.powf(p);
        let lhs = cx(x) * rl_tp.eval(t) + map.u_shift * rl_shift.eval(t);
        let rhs = match model {
            Model::Fpme(pr) => fpme_rhs(pr, u, ux, uxx)?,
            Model::Fdpme(pr) => fdpme_rhs(pr, u, ux, uxx),
        };
        max_abs = max_abs.max((lhs - rhs).abs());
        scale = scale.max(lhs.abs()).max(rhs.abs());
    }
    Ok((max_abs, scale))
}

/// Transport `base` by `flow(x_elem, eps)` for every `eps` and check that
/// each image still solves the model exactly.
pub fn check_symmetry_transport(
    model: &Model,
    x_elem: &AlgebraElement,
    x_label: &str,
    base: EntryId,
    params: &CatalogParams,
    epsilons: &[f64],
) -> Result<ResidualReport> {
    let entry = catalog(base, params)?;
    if entry.model != model.kind() {
        return Err(Error::domain(format!(
            "entry {} belongs to model {}, not {}",
            base.as_str(),
            entry.model.as_str(),
            model.kind().as_str()
        )));
    }
    let exact = entry.exact().ok_or_else(|| {
        Error::domain(format!("{} is not an exact solution", base.as_str()))
    })?;
    let base_res = model_residual(model, exact)?;
    if !base_res.is_empty() {
        return Err(Error::domain(format!(
            "transport needs an exact base; {} has residual {}",
            base.as_str(),
            render_sum(&base_res.residual, fmt_num)
        )));
    }

    let field = x_elem.field()?;
    let base_terms = exact.monomials();
    let mut findings = Vec::new();
    let mut residual_terms: Vec<Monomial> = Vec::new();
    let mut all_ok = true;
    let mut any_numeric = false;

    for &eps in epsilons {
        let map = flow(&field, eps);
        if let Some(ms) = transported_monomials(&map, &base_terms) {
            match model_residual(model, &ExactForm::Monomials(ms)) {
                Ok(res) => {
                    if res.is_empty() {
                        findings.push(format!("epsilon={}: residual empty", fmt_num(eps)));
                    } else {
                        all_ok = false;
                        if residual_terms.is_empty() {
                            residual_terms = res.residual.clone();
                        }
                        findings.push(format!(
                            "epsilon={}: residual {}",
                            fmt_num(eps),
                            render_sum(&res.residual, fmt_num)
                        ));
                    }
                    continue;
                }
                Err(Error::UnsupportedForm(_)) => {} // fall through to numeric
                Err(e) => return Err(e),
            }
        }
        // numeric fallback on the image grid (single-monomial bases)
        if base_terms.len() != 1 {
            return Err(Error::UnsupportedForm(
                "numeric transport fallback needs a single-monomial base".into(),
            ));
        }
        any_numeric = true;
        let (max_abs, scale) = numeric_transport_check(model, &map, &base_terms[0])?;
        if max_abs <= TRANSPORT_TOL * scale {
            findings.push(format!(
                "epsilon={}: pointwise residual {} within {}·scale",
                fmt_num(eps),
                fmt_num(max_abs),
                fmt_num(TRANSPORT_TOL)
            ));
        } else {
            all_ok = false;
            findings.push(format!(
                "epsilon={}: pointwise residual {} exceeds {}·scale={}",
                fmt_num(eps),
                fmt_num(max_abs),
                fmt_num(TRANSPORT_TOL),
                fmt_num(TRANSPORT_TOL * scale)
            ));
        }
    }

    Ok(ResidualReport {
        subject: format!("{}-{}-transport", model.kind().as_str(), x_label),
        mode: if any_numeric { Mode::Numeric } else { Mode::Symbolic },
        residual_terms,
        findings,
        max_abs: None,
        rms: None,
        threshold: None,
        verdict: if all_ok { Verdict::Verified } else { Verdict::Refuted },
        notes: vec![format!("base entry {}", base.as_str())],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::gamma;
    use crate::lie::{AlgebraKind, AlgebraSpec};
    use crate::model::{FdpmeParams, FpmeParams};
    use approx::assert_relative_eq;

    fn h1_elem(alpha: f64, r: f64, coeffs: [f64; 3]) -> AlgebraElement {
        AlgebraSpec::new(AlgebraKind::h1(alpha, r).unwrap()).element(coeffs)
    }

    fn h2_elem(alpha: f64, coeffs: [f64; 3]) -> AlgebraElement {
        AlgebraSpec::new(AlgebraKind::h2(alpha)).element(coeffs)
    }

    #[test]
    fn scaling_flows_fix_the_x_scaling_solution() {
        let model = Model::Fpme(FpmeParams::new(0.5, 0.5).unwrap());
        let params = CatalogParams::defaults(EntryId::T33ii);
        for coeffs in [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]] {
            let rep = check_symmetry_transport(
                &model,
                &h1_elem(0.5, 0.5, coeffs),
                "V1x",
                EntryId::T33ii,
                &params,
                &[-1.0, 0.5, 2.0],
            )
            .unwrap();
            assert_eq!(rep.verdict, Verdict::Verified, "{:?}", rep.findings);
            assert_eq!(rep.mode, Mode::Symbolic);
        }
    }

    #[test]
    fn x_translation_of_the_scaling_solution_checks_numerically() {
        let model = Model::Fpme(FpmeParams::new(0.5, 0.5).unwrap());
        let params = CatalogParams::defaults(EntryId::T33ii);
        let rep = check_symmetry_transport(
            &model,
            &h1_elem(0.5, 0.5, [0.0, 0.0, 1.0]),
            "V13",
            EntryId::T33ii,
            &params,
            &[-1.0, 0.5, 2.0],
        )
        .unwrap();
        assert_eq!(rep.verdict, Verdict::Verified, "{:?}", rep.findings);
        assert_eq!(rep.mode, Mode::Numeric);
    }

    #[test]
    fn u_translation_of_the_dual_time_power_is_refuted() {
        let alpha = 0.5;
        let model = Model::Fdpme(FdpmeParams::new(alpha, 1.0, 1.0, 1.0).unwrap());
        let params = CatalogParams::defaults(EntryId::FdpmeCase2);
        let eps = 0.75;
        let rep = check_symmetry_transport(
            &model,
            &h2_elem(alpha, [0.0, 0.0, 1.0]),
            "V23",
            EntryId::FdpmeCase2,
            &params,
            &[eps],
        )
        .unwrap();
        assert_eq!(rep.verdict, Verdict::Refuted);
        assert_eq!(rep.subject, "fdpme-V23-transport");
        assert_eq!(rep.residual_terms.len(), 1);
        let m = rep.residual_terms[0];
        assert_relative_eq!(m.t_exp, -alpha);
        assert_relative_eq!(
            m.coeff,
            eps / gamma(1.0 - alpha).unwrap(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn non_exact_base_is_a_precondition_error() {
        let model = Model::Fdpme(FdpmeParams::new(0.5, 1.0, 1.0, 1.0).unwrap());
        let params = CatalogParams::defaults(EntryId::FdpmeCase3);
        let err = check_symmetry_transport(
            &model,
            &h2_elem(0.5, [0.0, 1.0, 0.0]),
            "V22",
            EntryId::FdpmeCase3,
            &params,
            &[1.0],
        )
        .unwrap_err();
        assert!(err.to_string().contains("exact base"), "{err}");
    }

    #[test]
    fn x_translation_fixes_x_independent_solutions_symbolically() {
        let model = Model::Fpme(FpmeParams::new(0.5, 2.0).unwrap());
        let params = CatalogParams::defaults(EntryId::FpmeCase3);
        let rep = check_symmetry_transport(
            &model,
            &h1_elem(0.5, 2.0, [0.0, 0.0, 1.0]),
            "V13",
            EntryId::FpmeCase3,
            &params,
            &[-1.0, 0.5, 2.0],
        )
        .unwrap();
        assert_eq!(rep.verdict, Verdict::Verified);
        assert_eq!(rep.mode, Mode::Symbolic);
    }
}
