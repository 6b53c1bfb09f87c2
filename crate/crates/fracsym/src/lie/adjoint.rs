//! Adjoint action via the Lie series.
//!
//! `Ad(exp(eps X)) Y = Y - eps [X,Y] + eps^2/2 [X,[X,Y]] - ...`, which on
//! coefficient vectors is the matrix exponential `exp(-eps ad_X)`. `ad_X` is
//! a fixed 3x3 matrix, so the series always converges; it is summed until
//! the next term drops below `tol` in max-abs, with a hard cap of 200 terms.

use crate::error::{Error, Result};
use crate::lie::{AlgebraElement, AlgebraSpec};

/// Default truncation tolerance for the Lie series.
pub const SERIES_TOL: f64 = 1e-15;
const SERIES_CAP: usize = 200;

/// `Ad(exp(eps X)) Y` for two elements of the same algebra.
pub fn adjoint(eps: f64, x: &AlgebraElement, y: &AlgebraElement, tol: f64) -> Result<AlgebraElement> {
    if x.kind != y.kind {
        return Err(Error::domain("adjoint needs both elements in the same algebra"));
    }
    let spec = AlgebraSpec::new(x.kind);
    let m = spec.ad_matrix(&x.coeffs);
    let mut acc = y.coeffs;
    let mut term = y.coeffs;
    for n in 1..=SERIES_CAP {
        // term <- (-eps/n) * M * term
        let mut next = [0.0; 3];
        for (k, nk) in next.iter_mut().enumerate() {
            for j in 0..3 {
                *nk += m[k][j] * term[j];
            }
        }
        let s = -eps / n as f64;
        for v in next.iter_mut() {
            *v *= s;
        }
        term = next;
        for k in 0..3 {
            acc[k] += term[k];
        }
        let mag = term.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
        if mag < tol {
            break;
        }
    }
    Ok(AlgebraElement::new(x.kind, acc))
}

/// Full 3x3 adjoint table: entry `(i, j) = Ad(exp(eps V_i)) V_j`.
pub fn adjoint_table(spec: &AlgebraSpec, eps: f64) -> [[AlgebraElement; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut xi = [0.0; 3];
            let mut yj = [0.0; 3];
            xi[i] = 1.0;
            yj[j] = 1.0;
            adjoint(eps, &spec.element(xi), &spec.element(yj), SERIES_TOL)
                .expect("same algebra by construction")
        })
    })
}

/// The adjoint tables the basis fields generate, as closed forms.
///
/// Every entry follows from the brackets `[V12,V13] = -V13` (H1) and
/// `[V21,V23] = alpha V23` (H2). The H2 entry (row V23, col V21) is
/// `V21 + alpha*eps*V23`; a published rendering of this table carries the
/// opposite sign on that entry, which contradicts the bracket it is derived
/// from (see `adjoint_v23_on_v21_sign` below).
pub fn expected_adjoint_entry(spec: &AlgebraSpec, eps: f64, i: usize, j: usize) -> [f64; 3] {
    use crate::lie::AlgebraKind::*;
    let mut out = [0.0; 3];
    out[j] = 1.0;
    match (spec.kind, i, j) {
        (H1 { .. }, 1, 2) => out[2] = eps.exp(),     // Ad(exp(eps V12)) V13 = e^eps V13
        (H1 { .. }, 2, 1) => out[2] = -eps,          // Ad(exp(eps V13)) V12 = V12 - eps V13
        (H2 { alpha }, 0, 2) => out[2] = (-alpha * eps).exp(),
        (H2 { alpha }, 2, 0) => out[2] = alpha * eps, // V21 + alpha eps V23
        _ => {}
    }
    out
}
