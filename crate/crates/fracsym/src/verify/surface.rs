//! Invariant-surface condition `xi Theta_x + tau Theta_t = eta`.

use crate::error::{Error, Result};
use crate::lie::{basis_field, AffineScalingField, AlgebraKind, OptimalClass};
use crate::verify::{Mode, ResidualReport, Verdict};

/// Verdict threshold relative to the surface scale.
const SURFACE_TOL: f64 = 1e-8;

/// A solution surface with its partial derivatives.
pub struct Surface<'a> {
    pub theta: Box<dyn Fn(f64, f64) -> f64 + Sync + 'a>,
    pub theta_x: Box<dyn Fn(f64, f64) -> f64 + Sync + 'a>,
    pub theta_t: Box<dyn Fn(f64, f64) -> f64 + Sync + 'a>,
    pub label: String,
}

impl<'a> Surface<'a> {
    /// Analytic surface from closures.
    pub fn new(
        label: impl Into<String>,
        theta: impl Fn(f64, f64) -> f64 + Sync + 'a,
        theta_x: impl Fn(f64, f64) -> f64 + Sync + 'a,
        theta_t: impl Fn(f64, f64) -> f64 + Sync + 'a,
    ) -> Self {
        Surface {
            theta: Box::new(theta),
            theta_x: Box::new(theta_x),
            theta_t: Box::new(theta_t),
            label: label.into(),
        }
    }

    /// Surface with derivatives by central differences (step 1e-6 * scale).
    pub fn from_values(label: impl Into<String>, theta: impl Fn(f64, f64) -> f64 + Sync + Copy + 'a) -> Self {
        let dx = move |x: f64, t: f64| {
            let h = 1e-6 * x.abs().max(1.0);
            (theta(x + h, t) - theta(x - h, t)) / (2.0 * h)
        };
        let dt = move |x: f64, t: f64| {
            let h = 1e-6 * t.abs().max(1.0);
            (theta(x, t + h) - theta(x, t - h)) / (2.0 * h)
        };
        Surface {
            theta: Box::new(theta),
            theta_x: Box::new(dx),
            theta_t: Box::new(dt),
            label: label.into(),
        }
    }
}

/// Max of `|xi Theta_x + tau Theta_t - eta|` over the sample points.
pub fn check_invariant_surface(
    field: &AffineScalingField,
    surface: &Surface,
    points: &[(f64, f64)],
) -> ResidualReport {
    let mut max_abs = 0.0f64;
    let mut sum_sq = 0.0f64;
    let mut scale = 1.0f64;
    for &(x, t) in points {
        let th = (surface.theta)(x, t);
        let r = field.xi(x) * (surface.theta_x)(x, t) + field.tau(t) * (surface.theta_t)(x, t)
            - field.eta(th);
        max_abs = max_abs.max(r.abs());
        sum_sq += r * r;
        scale = scale.max(th.abs());
    }
    let rms = (sum_sq / points.len().max(1) as f64).sqrt();
    let threshold = SURFACE_TOL * scale;
    ResidualReport {
        subject: format!("surface-{}", surface.label),
        mode: Mode::Numeric,
        residual_terms: vec![],
        findings: vec![],
        max_abs: Some(max_abs),
        rms: Some(rms),
        threshold: Some(threshold),
        verdict: if max_abs <= threshold {
            Verdict::Verified
        } else {
            Verdict::Refuted
        },
        notes: vec![],
    }
}

/// A smooth profile with its derivative, for ansatz families.
#[derive(Clone, Copy)]
pub struct Profile {
    pub name: &'static str,
    pub f: fn(f64) -> f64,
    pub df: fn(f64) -> f64,
}

/// Three distinct smooth profiles.
pub fn profiles() -> [Profile; 3] {
    [
        Profile {
            name: "sin+2",
            f: |z| z.sin() + 2.0,
            df: |z| z.cos(),
        },
        Profile {
            name: "exp-third",
            f: |z| (-z / 3.0).exp(),
            df: |z| -(-z / 3.0).exp() / 3.0,
        },
        Profile {
            name: "lorentzian",
            f: |z| 1.0 / (1.0 + z * z),
            df: |z| -2.0 * z / (1.0 + z * z).powi(2),
        },
    ]
}

/// The group-invariant ansatz surface attached to an optimal-system class of
/// the porous-model algebra, with an arbitrary profile `f`:
///
/// * r11: `t^(-alpha/(r-1)) f(x)`
/// * r12: `x^(2/(r-1)) f(t)`
/// * r13: `f(t)`
/// * r14: `f(t e^-x) e^(-alpha x/(r-1))`
/// * r15: `f(t e^x) e^(+alpha x/(r-1))`  (the sign follows from the
///   characteristic system of V11 - V13)
/// * r16: `f(t x^(-1/gamma)) x^((2 gamma - alpha)/(gamma (r-1)))`
///
/// Returns the surface together with the class representative field.
pub fn ansatz_surface(
    class: OptimalClass,
    alpha: f64,
    r: f64,
    gamma: Option<f64>,
    profile: Profile,
) -> Result<(AffineScalingField, Surface<'static>)> {
    let kind = AlgebraKind::h1(alpha, r)?;
    let v = |k: usize| basis_field(kind, k);
    let f = profile.f;
    let df = profile.df;
    let label = |s: &str| format!("{s}-{}", profile.name);
    match class {
        OptimalClass::R11 => {
            let e = -alpha / (r - 1.0);
            Ok((
                v(1)?,
                Surface::new(
                    label("r11"),
                    move |x, t| t.powf(e) * f(x),
                    move |x, t| t.powf(e) * df(x),
                    move |x, t| e * t.powf(e - 1.0) * f(x),
                ),
            ))
        }
        OptimalClass::R12 => {
            let q = 2.0 / (r - 1.0);
            Ok((
                v(2)?,
                Surface::new(
                    label("r12"),
                    move |x, t| x.powf(q) * f(t),
                    move |x, t| q * x.powf(q - 1.0) * f(t),
                    move |x, t| x.powf(q) * df(t),
                ),
            ))
        }
        OptimalClass::R13 => Ok((
            v(3)?,
            Surface::new(
                label("r13"),
                move |_x, t| f(t),
                move |_x, _t| 0.0,
                move |_x, t| df(t),
            ),
        )),
        OptimalClass::R14 | OptimalClass::R15 => {
            let sign = if class == OptimalClass::R14 { -1.0 } else { 1.0 };
            let k = sign * alpha / (r - 1.0);
            let field = if class == OptimalClass::R14 {
                v(1)?.add(&v(3)?)
            } else {
                v(1)?.add(&v(3)?.scaled(-1.0))
            };
            let lbl = label(if class == OptimalClass::R14 { "r14" } else { "r15" });
            Ok((
                field,
                Surface::new(
                    lbl,
                    move |x, t| {
                        let z = t * (sign * x).exp();
                        f(z) * (k * x).exp()
                    },
                    move |x, t| {
                        let z = t * (sign * x).exp();
                        (sign * z * df(z) + k * f(z)) * (k * x).exp()
                    },
                    move |x, t| {
                        let z = t * (sign * x).exp();
                        df(z) * (sign * x).exp() * (k * x).exp()
                    },
                ),
            ))
        }
        OptimalClass::R16 => {
            let g = gamma.ok_or_else(|| Error::domain("r16 ansatz needs a gamma parameter"))?;
            if g == 0.0 {
                return Err(Error::domain("r16 needs gamma != 0"));
            }
            let s = (2.0 * g - alpha) / (g * (r - 1.0));
            let field = v(1)?.add(&v(2)?.scaled(g));
            Ok((
                field,
                Surface::new(
                    label("r16"),
                    move |x, t| {
                        let z = t * x.powf(-1.0 / g);
                        f(z) * x.powf(s)
                    },
                    move |x, t| {
                        let z = t * x.powf(-1.0 / g);
                        x.powf(s - 1.0) * (s * f(z) - z * df(z) / g)
                    },
                    move |x, t| {
                        let z = t * x.powf(-1.0 / g);
                        df(z) * x.powf(-1.0 / g) * x.powf(s)
                    },
                ),
            ))
        }
        other => Err(Error::domain(format!(
            "no porous-model ansatz for class {}",
            other.label()
        ))),
    }
}

/// Default 8x8 sample points on [1,2] x [0.25,1].
pub fn default_sample_points() -> Vec<(f64, f64)> {
    let mut pts = Vec::with_capacity(64);
    for i in 0..8 {
        for j in 0..8 {
            pts.push((
                1.0 + i as f64 / 7.0,
                0.25 + 0.75 * j as f64 / 7.0,
            ));
        }
    }
    pts
}
