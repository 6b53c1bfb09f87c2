//! Finite flows of affine-scaling fields and solution transport.

use crate::lie::AffineScalingField;

/// The map `(t, x, u) -> (t_scale*t, x_scale*x + x_shift, u_scale*u + u_shift)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointTransformation {
    pub t_scale: f64,
    pub x_scale: f64,
    pub x_shift: f64,
    pub u_scale: f64,
    pub u_shift: f64,
}

impl PointTransformation {
    pub fn identity() -> Self {
        PointTransformation {
            t_scale: 1.0,
            x_scale: 1.0,
            x_shift: 0.0,
            u_scale: 1.0,
            u_shift: 0.0,
        }
    }

    pub fn apply(&self, t: f64, x: f64, u: f64) -> (f64, f64, f64) {
        (
            self.t_scale * t,
            self.x_scale * x + self.x_shift,
            self.u_scale * u + self.u_shift,
        )
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &PointTransformation) -> PointTransformation {
        PointTransformation {
            t_scale: next.t_scale * self.t_scale,
            x_scale: next.x_scale * self.x_scale,
            x_shift: next.x_scale * self.x_shift + next.x_shift,
            u_scale: next.u_scale * self.u_scale,
            u_shift: next.u_scale * self.u_shift + next.u_shift,
        }
    }

    pub fn inverse(&self) -> PointTransformation {
        PointTransformation {
            t_scale: 1.0 / self.t_scale,
            x_scale: 1.0 / self.x_scale,
            x_shift: -self.x_shift / self.x_scale,
            u_scale: 1.0 / self.u_scale,
            u_shift: -self.u_shift / self.u_scale,
        }
    }
}

/// Shift part of the 1-d affine flow `dz/de = lin*z + cst`.
fn affine_shift(lin: f64, cst: f64, eps: f64) -> f64 {
    if lin == 0.0 {
        cst * eps
    } else {
        cst * f64::exp_m1(lin * eps) / lin
    }
}

/// Solve `d(t*, x*, u*)/d eps = (tau, xi, eta)` in closed form.
pub fn flow(field: &AffineScalingField, eps: f64) -> PointTransformation {
    PointTransformation {
        t_scale: (field.t_lin * eps).exp(),
        x_scale: (field.x_lin * eps).exp(),
        x_shift: affine_shift(field.x_lin, field.x_const, eps),
        u_scale: (field.u_lin * eps).exp(),
        u_shift: affine_shift(field.u_lin, field.u_const, eps),
    }
}

/// Push a solution graph `u = theta(x, t)` through `map`:
/// `theta~(x, t) = u_scale * theta((x - x_shift)/x_scale, t/t_scale) + u_shift`.
pub fn transport_fn<'a>(
    map: PointTransformation,
    theta: impl Fn(f64, f64) -> f64 + 'a,
) -> impl Fn(f64, f64) -> f64 + 'a {
    move |x, t| {
        map.u_scale * theta((x - map.x_shift) / map.x_scale, t / map.t_scale) + map.u_shift
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{basis_field, AlgebraKind};
    use approx::assert_relative_eq;

    fn v(kind: AlgebraKind, k: usize) -> AffineScalingField {
        basis_field(kind, k).unwrap()
    }

    fn h1() -> AlgebraKind {
        AlgebraKind::h1(0.5, 2.0).unwrap()
    }

    #[test]
    fn scaling_flow_matches_closed_form() {
        // V11 = t d_t - alpha/(r-1) u d_u with alpha=0.5, r=2
        let m = flow(&v(h1(), 1), 0.8);
        assert_relative_eq!(m.t_scale, 0.8f64.exp());
        assert_relative_eq!(m.u_scale, (-0.5f64 * 0.8).exp());
        assert_eq!((m.x_scale, m.x_shift, m.u_shift), (1.0, 0.0, 0.0));
    }

    #[test]
    fn translation_flow_is_a_shift() {
        let m = flow(&v(h1(), 3), 1.7);
        assert_eq!(m.x_shift, 1.7);
        assert_eq!(m.x_scale, 1.0);
    }

    #[test]
    fn zero_parameter_gives_identity() {
        for k in 1..=3 {
            assert_eq!(flow(&v(h1(), k), 0.0), PointTransformation::identity());
        }
    }

    /// Cross-check the closed-form flow against RK4 integration of
    /// d(t,x,u)/de = (tau, xi, eta) for a mixed field.
    #[test]
    fn flow_agrees_with_numerical_integration() {
        let f = v(h1(), 1).add(&v(h1(), 2).scaled(0.6)).add(&v(h1(), 3).scaled(-1.1));
        let eps = 0.9;
        let m = flow(&f, eps);
        let mut state = [2.0, 1.5, 3.0]; // (t, x, u)
        let n = 2000;
        let h = eps / n as f64;
        for _ in 0..n {
            let deriv = |s: &[f64; 3]| [f.tau(s[0]), f.xi(s[1]), f.eta(s[2])];
            let k1 = deriv(&state);
            let s2 = std::array::from_fn(|i| state[i] + 0.5 * h * k1[i]);
            let k2 = deriv(&s2);
            let s3 = std::array::from_fn(|i| state[i] + 0.5 * h * k2[i]);
            let k3 = deriv(&s3);
            let s4 = std::array::from_fn(|i| state[i] + h * k3[i]);
            let k4 = deriv(&s4);
            for i in 0..3 {
                state[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            }
        }
        let (t1, x1, u1) = m.apply(2.0, 1.5, 3.0);
        assert_relative_eq!(state[0], t1, max_relative = 1e-10);
        assert_relative_eq!(state[1], x1, max_relative = 1e-10);
        assert_relative_eq!(state[2], u1, max_relative = 1e-10);
    }

    #[test]
    fn one_parameter_group_law() {
        let f = v(h1(), 2).add(&v(h1(), 3).scaled(0.4));
        for (e1, e2) in [(0.3, 1.1), (-0.7, 0.7), (2.0, -0.5)] {
            let lhs = flow(&f, e1).then(&flow(&f, e2));
            let rhs = flow(&f, e1 + e2);
            for (t, x, u) in [(1.0, 1.0, 1.0), (0.5, 2.0, -3.0), (2.0, 0.1, 7.0)] {
                let a = lhs.apply(t, x, u);
                let b = rhs.apply(t, x, u);
                assert_relative_eq!(a.0, b.0, max_relative = 1e-12);
                assert_relative_eq!(a.1, b.1, max_relative = 1e-12, epsilon = 1e-12);
                assert_relative_eq!(a.2, b.2, max_relative = 1e-12, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn transport_roundtrip_restores_the_graph() {
        let f = v(h1(), 1).add(&v(h1(), 3).scaled(2.0));
        let theta = |x: f64, t: f64| 3.0 * t.powf(0.4) * x * x;
        let fwd = flow(&f, 1.2);
        let back = flow(&f, -1.2);
        let once = transport_fn(fwd, theta);
        let round = transport_fn(back, once);
        for (x, t) in [(1.0, 0.5), (1.7, 1.0), (2.0, 2.0)] {
            assert_relative_eq!(round(x, t), theta(x, t), max_relative = 1e-12);
        }
    }

    #[test]
    fn transport_of_translation_shifts_the_argument() {
        let theta = |x: f64, t: f64| t * x.powi(3);
        let moved = transport_fn(flow(&v(h1(), 3), 0.5), theta);
        assert_relative_eq!(moved(2.0, 1.0), theta(1.5, 1.0));
    }
}
