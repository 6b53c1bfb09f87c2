//! Grunwald-Letnikov discretization of the Riemann-Liouville derivative.

use crate::error::{Error, Result};
use crate::exec;
use crate::frac::{FracOrder, SampledFunction};

/// Binomial weights `w_k = (-1)^k C(alpha, k)` for `k = 0..n-1`, generated by
/// the recurrence `w_0 = 1`, `w_k = w_{k-1} * (1 - (alpha+1)/k)`.
pub fn gl_weights(alpha: FracOrder, n: usize) -> Vec<f64> {
    let a = alpha.get();
    let mut w = Vec::with_capacity(n);
    if n == 0 {
        return w;
    }
    w.push(1.0);
    for k in 1..n {
        let prev = w[k - 1];
        w.push(prev * (1.0 - (a + 1.0) / k as f64));
    }
    w
}

/// Discrete RL derivative on a uniform grid starting at t = 0:
/// `d_n = h^-alpha * sum_{k=0..n} w_k f_{n-k}`.
///
/// First-order accurate for functions smooth on the closed interval with
/// `f(0) = 0`; endpoint singularities degrade the order (tested as
/// "error still decreases under refinement" only).
pub fn rl_gl(alpha: FracOrder, f: &SampledFunction) -> Result<SampledFunction> {
    if f.t0() != 0.0 {
        return Err(Error::domain(format!(
            "discrete RL derivative needs samples starting at t0 = 0, got t0 = {}",
            f.t0()
        )));
    }
    let a = alpha.get();
    if !(a > 0.0 && a < 1.0) && a != 1.0 {
        return Err(Error::domain(format!(
            "discrete RL derivative supports 0 < alpha <= 1, got {a}"
        )));
    }
    let n = f.len();
    let w = gl_weights(alpha, n);
    let scale = f.h().powf(-a);
    let vals = f.values();
    let out = exec::map_indexed(n, |i| {
        let mut acc = 0.0;
        for k in 0..=i {
            acc += w[k] * vals[i - k];
        }
        scale * acc
    });
    SampledFunction::new(0.0, f.h(), out)
}
