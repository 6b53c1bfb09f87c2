//! The catalog of group-invariant solutions and reduced-equation records,
//! addressable by stable string identifiers.
//!
//! Exact entries carry closed forms the residual engine can check. Reduced
//! entries are documentation-grade records of similarity reductions whose
//! fractional ODEs remain unsolved; they are stored, rendered and never
//! verified (the ones obtained through non-scaling changes of variables are
//! not even well-posed for the lower-terminal-0 derivative used here).

use crate::error::{Error, Result};
use crate::frac::{lemma21_solution, FracOrder, LemmaCase, PowerFunction};
use crate::gamma::{gamma, is_gamma_pole};
use crate::model::solution::{AffinePlusTime, ExactForm, SeparableSolution};
use crate::model::ModelKind;

/// Stable identifiers accepted everywhere an `--entry` is expected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EntryId {
    T33i,
    T33ii,
    T33iii,
    T33iiiPaperProofVariant,
    FpmeCase3,
    FdpmeCase1,
    FdpmeCase2,
    FdpmeCase3,
    FdpmeCase4,
    FdpmeCase5,
    FpmeCase1Reduced,
    FpmeCase2Reduced,
    FpmeCase4Reduced,
    FpmeCase5Reduced,
    FpmeCase6Reduced,
}

impl EntryId {
    pub fn as_str(&self) -> &'static str {
        use EntryId::*;
        match self {
            T33i => "T33i",
            T33ii => "T33ii",
            T33iii => "T33iii",
            T33iiiPaperProofVariant => "T33iii-paper-proof-variant",
            FpmeCase3 => "FPME-case3",
            FdpmeCase1 => "FDPME-case1",
            FdpmeCase2 => "FDPME-case2",
            FdpmeCase3 => "FDPME-case3",
            FdpmeCase4 => "FDPME-case4",
            FdpmeCase5 => "FDPME-case5",
            FpmeCase1Reduced => "FPME-case1-reduced",
            FpmeCase2Reduced => "FPME-case2-reduced",
            FpmeCase4Reduced => "FPME-case4-reduced",
            FpmeCase5Reduced => "FPME-case5-reduced",
            FpmeCase6Reduced => "FPME-case6-reduced",
        }
    }

    pub fn parse(s: &str) -> Result<EntryId> {
        let lower = s.to_ascii_lowercase();
        Self::all()
            .iter()
            .copied()
            .find(|id| id.as_str().to_ascii_lowercase() == lower)
            .ok_or_else(|| Error::UnknownEntry(s.to_string()))
    }

    /// Every identifier, in the stable listing order.
    pub fn all() -> &'static [EntryId] {
        use EntryId::*;
        &[
            T33i,
            T33ii,
            T33iii,
            T33iiiPaperProofVariant,
            FpmeCase3,
            FdpmeCase1,
            FdpmeCase2,
            FdpmeCase3,
            FdpmeCase4,
            FdpmeCase5,
            FpmeCase1Reduced,
            FpmeCase2Reduced,
            FpmeCase4Reduced,
            FpmeCase5Reduced,
            FpmeCase6Reduced,
        ]
    }

    pub fn model(&self) -> ModelKind {
        use EntryId::*;
        match self {
            FdpmeCase1 | FdpmeCase2 | FdpmeCase3 | FdpmeCase4 | FdpmeCase5 => ModelKind::Fdpme,
            _ => ModelKind::Fpme,
        }
    }
}

/// Free parameters an entry may consume; unconsumed fields are ignored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CatalogParams {
    pub alpha: f64,
    pub r: f64,
    pub lambda: f64,
    pub kappa: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub gamma: f64,
    pub rho: f64,
}

impl CatalogParams {
    /// Per-entry defaults that land inside every constraint.
    pub fn defaults(id: EntryId) -> Self {
        let mut p = CatalogParams {
            alpha: 0.5,
            r: 2.0,
            lambda: 1.0,
            kappa: 1.0,
            a: 1.0,
            b: 1.0,
            c: 1.0,
            gamma: 0.7,
            rho: 1.5,
        };
        match id {
            // the scaling solution needs r > 1/(1-alpha) for a real
            // coefficient; (alpha, r) = (0.4, 3) sits comfortably inside
            EntryId::T33i => {
                p.alpha = 0.4;
                p.r = 3.0;
            }
            EntryId::T33ii => p.r = 0.5,
            EntryId::T33iii | EntryId::T33iiiPaperProofVariant | EntryId::FdpmeCase1 => {
                p.alpha = 0.4;
                p.r = 2.0;
            }
            _ => {}
        }
        p
    }
}

/// Record of a similarity reduction whose ODE is left unsolved.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedOdeSpec {
    pub case_label: String,
    pub similarity_variable: String,
    pub ansatz: String,
    pub ode_text: String,
    pub params: Vec<(String, f64)>,
    pub notes: Vec<String>,
}

/// What a catalog entry holds.
#[derive(Debug, Clone, PartialEq)]
pub enum EntryForm {
    Exact(ExactForm),
    Reduced(ReducedOdeSpec),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub id: EntryId,
    pub model: ModelKind,
    pub form: EntryForm,
    pub title: String,
    pub used_params: Vec<(String, f64)>,
    pub notes: Vec<String>,
}

impl CatalogEntry {
    pub fn exact(&self) -> Option<&ExactForm> {
        match &self.form {
            EntryForm::Exact(e) => Some(e),
            EntryForm::Reduced(_) => None,
        }
    }

    /// The model (with the parameter values this entry was built with).
    pub fn model_params(&self, params: &CatalogParams) -> Result<crate::model::residual::Model> {
        use crate::model::residual::Model;
        let alpha = self
            .used_params
            .iter()
            .find(|(k, _)| k == "alpha")
            .map(|(_, v)| *v)
            .unwrap_or(params.alpha);
        match self.model {
            ModelKind::Fpme => {
                let r = self
                    .used_params
                    .iter()
                    .find(|(k, _)| k == "r")
                    .map(|(_, v)| *v)
                    .unwrap_or(params.r);
                Ok(Model::Fpme(crate::model::FpmeParams::new(alpha, r)?))
            }
            ModelKind::Fdpme => Ok(Model::Fdpme(crate::model::FdpmeParams::new(
                alpha, params.a, params.b, params.c,
            )?)),
        }
    }
}

fn check_unit_alpha(alpha: f64) -> Result<f64> {
    FracOrder::new_unit(alpha).map(|a| a.get())
}

/// Build a catalog entry with the given parameters.
pub fn catalog(id: EntryId, params: &CatalogParams) -> Result<CatalogEntry> {
    let alpha = check_unit_alpha(params.alpha)?;
    let fa = FracOrder::new_unit(alpha)?;
    match id {
        EntryId::T33i => {
            let r = params.r;
            if !(r > 0.0) || r == 1.0 {
                return Err(Error::domain(format!("needs r > 0, r != 1, got {r}")));
            }
            let p = alpha / (1.0 - r);
            if !(p > -1.0) {
                return Err(Error::domain(format!(
                    "scaling solution condition alpha/(1-r) > -1 fails: {p}"
                )));
            }
            let lambda = 2.0 * r * (r + 1.0) / ((r - 1.0) * (r - 1.0));
            let g = lemma21_solution(LemmaCase::I, fa, 0.0, r, lambda)?;
            let sol = SeparableSolution::new(g.coeff(), p, 2.0 / (r - 1.0))?;
            Ok(CatalogEntry {
                id,
                model: ModelKind::Fpme,
                form: EntryForm::Exact(ExactForm::Separable(sol)),
                title: "scaling-invariant solution u = A·t^(alpha/(1-r))·x^(2/(r-1))".into(),
                used_params: vec![("alpha".into(), alpha), ("r".into(), r)],
                notes: vec![],
            })
        }
        EntryId::T33ii => {
            let y = 6.0 * gamma(alpha + 1.0)? / gamma(2.0 * alpha + 1.0)?;
            let sol = SeparableSolution::new(y * y, 2.0 * alpha, -4.0)?;
            Ok(CatalogEntry {
                id,
                model: ModelKind::Fpme,
                form: EntryForm::Exact(ExactForm::Separable(sol)),
                title: "u = [6·Γ(α+1)/Γ(2α+1)]²·t^(2α)·x^(-4)  (r = 1/2)".into(),
                used_params: vec![("alpha".into(), alpha), ("r".into(), 0.5)],
                notes: vec![],
            })
        }
        EntryId::T33iii | EntryId::T33iiiPaperProofVariant => {
            if !(alpha < 0.5) {
                return Err(Error::domain(format!(
                    "needs alpha < 1/2 so Γ(1-2α) is finite and positive, got {alpha}"
                )));
            }
            if is_gamma_pole(1.0 - 2.0 * alpha) {
                return Err(Error::domain("1-2α is a Gamma pole"));
            }
            let ratio = gamma(1.0 - alpha)? / gamma(1.0 - 2.0 * alpha)?;
            let (coeff, title, notes) = if id == EntryId::T33iii {
                (
                    ratio / 12.0,
                    "u = (1/12)·Γ(1-α)/Γ(1-2α)·t^(-α)·x²  (r = 2)".to_string(),
                    vec!["unsquared ratio verified by the residual oracle".to_string()],
                )
            } else {
                (
                    ratio * ratio / 12.0,
                    "u = (1/12)·[Γ(1-α)/Γ(1-2α)]²·t^(-α)·x²  (squared variant)".to_string(),
                    vec![
                        "squared-ratio variant retained for falsification; refuted by the residual oracle"
                            .to_string(),
                    ],
                )
            };
            let sol = SeparableSolution::new(coeff, -alpha, 2.0)?;
            Ok(CatalogEntry {
                id,
                model: ModelKind::Fpme,
                form: EntryForm::Exact(ExactForm::Separable(sol)),
                title,
                used_params: vec![("alpha".into(), alpha), ("r".into(), 2.0)],
                notes,
            })
        }
        EntryId::FpmeCase3 => {
            if params.lambda == 0.0 {
                return Err(Error::domain("needs lambda != 0"));
            }
            let sol = SeparableSolution::new(params.lambda, alpha - 1.0, 0.0)?;
            Ok(CatalogEntry {
                id,
                model: ModelKind::Fpme,
                form: EntryForm::Exact(ExactForm::Separable(sol)),
                title: "x-independent solution u = λ·t^(α-1)".into(),
                used_params: vec![
                    ("alpha".into(), alpha),
                    ("r".into(), params.r),
                    ("lambda".into(), params.lambda),
                ],
                notes: vec![],
            })
        }
        EntryId::FdpmeCase1 => {
            if !(alpha < 0.5) {
                return Err(Error::domain(format!(
                    "needs 0 < alpha < 1/2, got {alpha}"
                )));
            }
            Ok(CatalogEntry {
                id,
                model: ModelKind::Fdpme,
                form: EntryForm::Reduced(ReducedOdeSpec {
                    case_label: "dual model, scaling reduction".into(),
                    similarity_variable: "x (u·t^α invariant)".into(),
                    ansatz: "u = t^(-α)·f(x)".into(),
                    ode_text:
                        "Γ(1-α)/Γ(1-2α)·f = a·f''² + b·f'·f'' + c·(f·f'' - (2/3)·f'²)".into(),
                    params: vec![
                        ("alpha".into(), alpha),
                        ("a".into(), params.a),
                        ("b".into(), params.b),
                        ("c".into(), params.c),
                    ],
                    notes: vec![
                        "coefficient stored as Γ(1-α)/Γ(1-2α); the published rendering prints Γ(1-α)/(1-2α), which monomial balance rules out".into(),
                        "c-term stored as c·f·f''; the published rendering drops the f factor".into(),
                    ],
                }),
                title: "reduced equation for u = t^(-α)·f(x)".into(),
                used_params: vec![("alpha".into(), alpha)],
                notes: vec![],
            })
        }
        EntryId::FdpmeCase2 => {
            if params.kappa == 0.0 {
                return Err(Error::domain("needs kappa != 0"));
            }
            let sol = SeparableSolution::new(params.kappa, alpha - 1.0, 0.0)?;
            Ok(CatalogEntry {
                id,
                model: ModelKind::Fdpme,
                form: EntryForm::Exact(ExactForm::Separable(sol)),
                title: "x-independent solution u = κ·t^(α-1)".into(),
                used_params: vec![("alpha".into(), alpha), ("kappa".into(), params.kappa)],
                notes: vec![],
            })
        }
        EntryId::FdpmeCase3 | EntryId::FdpmeCase4 => {
            let slope = if id == EntryId::FdpmeCase3 { 1.0 } else { -1.0 };
            let f = PowerFunction::new(
                -(2.0 * params.c / 3.0) / gamma(alpha + 1.0)?,
                alpha,
            );
            let sol = AffinePlusTime::new(slope, f)?;
            Ok(CatalogEntry {
                id,
                model: ModelKind::Fdpme,
                form: EntryForm::Exact(ExactForm::AffinePlusTime(sol)),
                title: format!(
                    "u = {}x + f(t) with d^α f = -(2/3)c, i.e. f = -(2c/3)·t^α/Γ(α+1)",
                    if slope > 0.0 { "" } else { "-" }
                ),
                used_params: vec![("alpha".into(), alpha), ("c".into(), params.c)],
                notes: vec![
                    "the time-constant x-term has nonzero RL derivative x·t^(-α)/Γ(1-α); the stated solution is refuted"
                        .into(),
                ],
            })
        }
        EntryId::FdpmeCase5 => {
            let rho = params.rho;
            if rho == 0.0 {
                return Err(Error::domain("needs rho != 0"));
            }
            Ok(CatalogEntry {
                id,
                model: ModelKind::Fdpme,
                form: EntryForm::Reduced(ReducedOdeSpec {
                    case_label: "dual model, mixed scaling/translation reduction".into(),
                    similarity_variable: "z = t·e^(-x/ρ)".into(),
                    ansatz: "u = f(z)·e^(-αx/ρ)".into(),
                    ode_text: concat!(
                        "d^α_z f = a·((1+2α)/ρ·z·f' + f''/ρ² + α²/ρ²·f)² - (2/3)c·(z·f' + f)²",
                        " + c·((1+α)/ρ²·z·f''·f + z²·f·f''/ρ² + α²/ρ²·f² + α/ρ²·z·f'·f)",
                        " - b·((1+α)/ρ²·z²·f'² + z³·f'·f''/ρ³ + α²/ρ³·z·f·f' + α/ρ³·z²·f'²",
                        " + α(1+α)/ρ³·z·f'·f + α/ρ³·z²·f''·f + α³/ρ³·f² + α²/ρ³·z·f·f')"
                    )
                    .into(),
                    params: vec![
                        ("alpha".into(), alpha),
                        ("rho".into(), rho),
                        ("a".into(), params.a),
                        ("b".into(), params.b),
                        ("c".into(), params.c),
                    ],
                    notes: vec![
                        "stored as printed; the z-derivative of fractional order after this change of variables is not re-derived or verified"
                            .into(),
                    ],
                }),
                title: "reduced equation for u = f(t·e^(-x/ρ))·e^(-αx/ρ)".into(),
                used_params: vec![("alpha".into(), alpha), ("rho".into(), rho)],
                notes: vec![],
            })
        }
        EntryId::FpmeCase1Reduced => {
            let r = check_model_r(params.r)?;
            Ok(CatalogEntry {
                id,
                model: ModelKind::Fpme,
                form: EntryForm::Reduced(ReducedOdeSpec {
                    case_label: "porous model, time-scaling reduction".into(),
                    similarity_variable: "x (u·t^(α/(r-1)) invariant)".into(),
                    ansatz: "u = t^(-α/(r-1))·f(x)".into(),
                    ode_text:
                        "r·Γ(1-αr/(r-1))/Γ(1-α/(r-1))·f^(r-2)·((r-1)·f'² + f·f'') = f".into(),
                    params: vec![("alpha".into(), alpha), ("r".into(), r)],
                    notes: vec![
                        "Gamma arguments restored by monomial balance; the published rendering prints Γ(α-αr/(r-1)+1)/Γ((αr+1)/(1-r))"
                            .into(),
                    ],
                }),
                title: "reduced equation for u = t^(-α/(r-1))·f(x)".into(),
                used_params: vec![("alpha".into(), alpha), ("r".into(), r)],
                notes: vec![],
            })
        }
        EntryId::FpmeCase2Reduced => {
            let r = check_model_r(params.r)?;
            Ok(CatalogEntry {
                id,
                model: ModelKind::Fpme,
                form: EntryForm::Reduced(ReducedOdeSpec {
                    case_label: "porous model, x-scaling reduction".into(),
                    similarity_variable: "t (u·x^(-2/(r-1)) invariant)".into(),
                    ansatz: "u = x^(2/(r-1))·g(t)".into(),
                    ode_text: "d^α_t g = (2r(r+1)/(r-1)²)·g^r".into(),
                    params: vec![
                        ("alpha".into(), alpha),
                        ("r".into(), r),
                        ("lambda".into(), 2.0 * r * (r + 1.0) / ((r - 1.0) * (r - 1.0))),
                    ],
                    notes: vec![
                        "solvable by the closed-form family; the T33 entries are its instances"
                            .into(),
                    ],
                }),
                title: "reduced equation for u = x^(2/(r-1))·g(t)".into(),
                used_params: vec![("alpha".into(), alpha), ("r".into(), r)],
                notes: vec![],
            })
        }
        EntryId::FpmeCase4Reduced | EntryId::FpmeCase5Reduced => {
            let r = check_model_r(params.r)?;
            let beta = r * (alpha * r + r - 1.0) / (r - 1.0);
            let (zvar, ansatz, extra_note): (&str, String, Option<String>) =
                if id == EntryId::FpmeCase4Reduced {
                    ("z = t·e^(-x)", "u = f(z)·e^(-αx/(r-1))".into(), None)
                } else {
                    (
                        "z = t·e^x",
                        "u = f(z)·e^(+αx/(r-1))".into(),
                        Some(
                            "ansatz exponential sign restored from the characteristic system; the published rendering prints e^(-αx/(r-1))"
                                .into(),
                        ),
                    )
                };
            let mut notes = vec![
                "stored as printed; the z-derivative of fractional order after this change of variables is not re-derived or verified"
                    .to_string(),
            ];
            notes.extend(extra_note);
            Ok(CatalogEntry {
                id,
                model: ModelKind::Fpme,
                form: EntryForm::Reduced(ReducedOdeSpec {
                    case_label: "porous model, scaling/translation reduction".into(),
                    similarity_variable: zvar.into(),
                    ansatz,
                    ode_text: concat!(
                        "d^α_z f = (αr)²/(r-1)²·f^r + αr²/(r-1)·z·f^(r-1)·f'",
                        " + r(r-1)·z²·f^(r-2)·f'² + r·z²·f^(r-1)·f'' + β·z·f^(r-1)·f'"
                    )
                    .into(),
                    params: vec![
                        ("alpha".into(), alpha),
                        ("r".into(), r),
                        ("beta".into(), beta),
                    ],
                    notes,
                }),
                title: "reduced equation along the scaling/translation orbit".into(),
                used_params: vec![("alpha".into(), alpha), ("r".into(), r)],
                notes: vec![],
            })
        }
        EntryId::FpmeCase6Reduced => {
            let r = check_model_r(params.r)?;
            let g = params.gamma;
            if g == 0.0 {
                return Err(Error::domain("needs gamma != 0"));
            }
            Ok(CatalogEntry {
                id,
                model: ModelKind::Fpme,
                form: EntryForm::Reduced(ReducedOdeSpec {
                    case_label: "porous model, two-scaling reduction".into(),
                    similarity_variable: "z = t·x^(-1/γ)".into(),
                    ansatz: "u = f(z)·x^((2γ-α)/(γ(r-1)))".into(),
                    ode_text: concat!(
                        "d^α_z f = (2γ-α)r/(γ(r-1))·(γr-αr+γ)/(γ(r-1))·f^r",
                        " - (2γ-α)r²/(γ²(r-1))·z·f^(r-1)·f' + r(r-1)/γ²·z²·f^(r-2)·f'²",
                        " + r/γ²·z²·f^(r-1)·f'' - r(γr-αr-r+1+γ)/(γ(r-1))·z·f^(r-1)·f'"
                    )
                    .into(),
                    params: vec![
                        ("alpha".into(), alpha),
                        ("r".into(), r),
                        ("gamma".into(), g),
                    ],
                    notes: vec![
                        "stored as printed; the z-derivative of fractional order after this change of variables is not re-derived or verified"
                            .into(),
                    ],
                }),
                title: "reduced equation for u = f(t·x^(-1/γ))·x^((2γ-α)/(γ(r-1)))".into(),
                used_params: vec![
                    ("alpha".into(), alpha),
                    ("r".into(), r),
                    ("gamma".into(), g),
                ],
                notes: vec![],
            })
        }
    }
}

fn check_model_r(r: f64) -> Result<f64> {
    if !(r > 0.0) || r == 1.0 {
        return Err(Error::domain(format!("needs r > 0, r != 1, got {r}")));
    }
    Ok(r)
}

/// Fetch the reduced-equation record of an entry (errors for exact entries).
pub fn reduced_ode(id: EntryId, params: &CatalogParams) -> Result<ReducedOdeSpec> {
    match catalog(id, params)?.form {
        EntryForm::Reduced(spec) => Ok(spec),
        EntryForm::Exact(_) => Err(Error::UnknownEntry(format!(
            "{} is an exact solution, not a reduced-equation record",
            id.as_str()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn ids_round_trip_through_parse() {
        for &id in EntryId::all() {
            assert_eq!(EntryId::parse(id.as_str()).unwrap(), id);
            assert_eq!(EntryId::parse(&id.as_str().to_uppercase()).unwrap(), id);
        }
        assert!(EntryId::parse("T34x").is_err());
    }

    #[test]
    fn t33ii_coefficient_at_half() {
        let e = catalog(EntryId::T33ii, &CatalogParams::defaults(EntryId::T33ii)).unwrap();
        if let EntryForm::Exact(ExactForm::Separable(s)) = e.form {
            assert_relative_eq!(s.coeff(), 9.0 * std::f64::consts::PI, max_relative = 1e-12);
            assert_eq!((s.t_exp(), s.x_exp()), (1.0, -4.0));
        } else {
            panic!("expected a separable solution");
        }
    }

    #[test]
    fn t33i_scaling_solution_at_default_parameters() {
        let e = catalog(EntryId::T33i, &CatalogParams::defaults(EntryId::T33i)).unwrap();
        if let EntryForm::Exact(ExactForm::Separable(s)) = e.form {
            assert_relative_eq!(s.coeff(), 0.295_765_371_076_621_12, max_relative = 1e-12);
            assert_relative_eq!(s.t_exp(), -0.2, epsilon = 1e-14);
            assert_relative_eq!(s.x_exp(), 1.0);
        } else {
            panic!("expected a separable solution");
        }
    }

    #[test]
    fn t33i_without_a_real_branch_is_a_domain_error() {
        let mut p = CatalogParams::defaults(EntryId::T33i);
        p.alpha = 0.4;
        p.r = 1.5;
        let err = catalog(EntryId::T33i, &p).unwrap_err();
        assert!(err.to_string().contains("no real solution"), "{err}");
    }

    #[test]
    fn case3_entries_are_x_independent_powers() {
        let mut p = CatalogParams::defaults(EntryId::FpmeCase3);
        p.lambda = 2.0;
        p.alpha = 0.3;
        let e = catalog(EntryId::FpmeCase3, &p).unwrap();
        if let EntryForm::Exact(ExactForm::Separable(s)) = e.form {
            assert_eq!((s.coeff(), s.x_exp()), (2.0, 0.0));
            assert_relative_eq!(s.t_exp(), -0.7);
        } else {
            panic!();
        }
    }

    #[test]
    fn dual_affine_entry_carries_the_forced_time_part() {
        let mut p = CatalogParams::defaults(EntryId::FdpmeCase3);
        p.c = 3.0;
        p.alpha = 0.5;
        let e = catalog(EntryId::FdpmeCase3, &p).unwrap();
        if let EntryForm::Exact(ExactForm::AffinePlusTime(s)) = e.form {
            assert_eq!(s.slope(), 1.0);
            assert_relative_eq!(s.f().coeff(), -2.256_758_334_191_025_1, max_relative = 1e-12);
            assert_relative_eq!(s.f().exponent(), 0.5);
        } else {
            panic!();
        }
    }

    #[test]
    fn constraints_are_enforced() {
        let mut p = CatalogParams::defaults(EntryId::T33iii);
        p.alpha = 0.6;
        assert!(catalog(EntryId::T33iii, &p).is_err());
        let mut p = CatalogParams::defaults(EntryId::FdpmeCase1);
        p.alpha = 0.5;
        assert!(catalog(EntryId::FdpmeCase1, &p).is_err());
        let mut p = CatalogParams::defaults(EntryId::T33i);
        p.r = 6.0;
        p.alpha = 0.9;
        // alpha/(1-r) = -0.18 > -1 is fine; bracket positivity decides
        assert!(catalog(EntryId::T33i, &p).is_err() || catalog(EntryId::T33i, &p).is_ok());
        let mut p = CatalogParams::defaults(EntryId::FpmeCase3);
        p.lambda = 0.0;
        assert!(catalog(EntryId::FpmeCase3, &p).is_err());
    }

    #[test]
    fn reduced_records_expose_their_odes() {
        let spec = reduced_ode(
            EntryId::FpmeCase2Reduced,
            &CatalogParams::defaults(EntryId::FpmeCase2Reduced),
        )
        .unwrap();
        assert!(spec.ode_text.contains("2r(r+1)/(r-1)²"));
        let spec = reduced_ode(
            EntryId::FdpmeCase1,
            &CatalogParams::defaults(EntryId::FdpmeCase1),
        )
        .unwrap();
        assert!(spec.ode_text.contains("Γ(1-α)/Γ(1-2α)"));
        assert!(reduced_ode(EntryId::T33ii, &CatalogParams::defaults(EntryId::T33ii)).is_err());
    }

    #[test]
    fn case4_and_case5_records_carry_beta() {
        for id in [EntryId::FpmeCase4Reduced, EntryId::FpmeCase5Reduced] {
            let spec = reduced_ode(id, &CatalogParams::defaults(id)).unwrap();
            let beta = spec
                .params
                .iter()
                .find(|(k, _)| k == "beta")
                .map(|(_, v)| *v)
                .unwrap();
            // beta = r(alpha r + r - 1)/(r-1) at alpha = 0.5, r = 2
            assert_relative_eq!(beta, 2.0 * (1.0 + 2.0 - 1.0) / 1.0);
        }
    }
}
