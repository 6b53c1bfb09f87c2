//! Executable verification: identity checks, invariant surfaces, symmetry
//! transport and numerical residuals, all reporting through one record type.
//!
//! Refutations are first-class outputs, never errors: a check that runs and
//! finds a nonzero residual yields `Verdict::Refuted` with the residual
//! attached.

mod determining;
mod numeric;
mod surface;
mod transport;

pub use determining::{
    check_determining, DeterminingFamily, FdpmeFamily, FpmeFamily,
};
pub use numeric::{check_residual_numeric, EvalSolution, GridSpec};
pub use surface::{
    ansatz_surface, check_invariant_surface, default_sample_points, profiles, Profile, Surface,
};
pub use transport::check_symmetry_transport;

use crate::model::monomial::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Verified,
    Refuted,
    Unverifiable,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::Refuted => "refuted",
            Verdict::Unverifiable => "unverifiable",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Symbolic,
    Numeric,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Symbolic => "symbolic",
            Mode::Numeric => "numeric",
        }
    }
}

/// Outcome of any verification check.
#[derive(Debug, Clone)]
pub struct ResidualReport {
    pub subject: String,
    pub mode: Mode,
    /// Symbolic residual, as monomials (empty means exact).
    pub residual_terms: Vec<Monomial>,
    /// Findings that are not monomials (determining-equation terms).
    pub findings: Vec<String>,
    pub max_abs: Option<f64>,
    pub rms: Option<f64>,
    pub threshold: Option<f64>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl ResidualReport {
    pub fn is_verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }

    /// Line-delimited `key=value` record rendering.
    pub fn to_records(&self) -> String {
        let mut out = format!(
            "subject={} mode={} verdict={} terms={}",
            self.subject,
            self.mode.as_str(),
            self.verdict.as_str(),
            self.residual_terms.len()
        );
        for m in &self.residual_terms {
            out.push_str(&format!(
                "\nterm coeff={} t_exp={} x_exp={} rendered={}",
                fmt_num(m.coeff),
                fmt_num(m.t_exp),
                fmt_num(m.x_exp),
                crate::model::monomial::render_sum(std::slice::from_ref(m), fmt_num)
            ));
        }
        for f in &self.findings {
            out.push_str(&format!("\nfinding={f}"));
        }
        if let (Some(ma), Some(rm)) = (self.max_abs, self.rms) {
            out.push_str(&format!("\nmax_abs={} rms={}", fmt_num(ma), fmt_num(rm)));
        }
        if let Some(th) = self.threshold {
            out.push_str(&format!("\nthreshold={}", fmt_num(th)));
        }
        for n in &self.notes {
            out.push_str(&format!("\nnote={n}"));
        }
        out
    }
}

/// Number formatting used in every record: ten fractional digits with the
/// trailing zeros trimmed, switching to scientific notation outside a
/// moderate magnitude window. Deterministic across runs by construction.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let ax = x.abs();
    if (1e-4..1e12).contains(&ax) {
        let mut s = format!("{x:.10}");
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
        s
    } else {
        format!("{x:.9e}")
    }
}
