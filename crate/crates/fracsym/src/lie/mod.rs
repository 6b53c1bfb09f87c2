//! The two three-dimensional point-symmetry algebras and their machinery.
//!
//! Basis fields (all of the affine-scaling form `a t d_t + (b x + c) d_x +
//! (d u + e) d_u`):
//!
//! * H1 (parameters alpha, r):  V11 = t d_t - alpha/(r-1) u d_u,
//!   V12 = x d_x + 2/(r-1) u d_u,  V13 = d_x;  nonzero bracket
//!   [V12, V13] = -V13.
//! * H2 (parameter alpha):  V21 = t d_t - alpha u d_u,  V22 = d_x,
//!   V23 = d_u;  nonzero bracket [V21, V23] = alpha V23.

mod adjoint;
mod flow;
mod optimal;

pub use adjoint::{adjoint, adjoint_table, expected_adjoint_entry, SERIES_TOL};
pub use flow::{flow, transport_fn, PointTransformation};
pub use optimal::{canonicalize, OptimalClass};

use crate::error::{Error, Result};

/// Which algebra, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AlgebraKind {
    H1 { alpha: f64, r: f64 },
    H2 { alpha: f64 },
}

impl AlgebraKind {
    pub fn h1(alpha: f64, r: f64) -> Result<Self> {
        if r == 1.0 {
            return Err(Error::domain("H1 needs r != 1"));
        }
        Ok(AlgebraKind::H1 { alpha, r })
    }

    pub fn h2(alpha: f64) -> Self {
        AlgebraKind::H2 { alpha }
    }

    pub fn name(&self) -> &'static str {
        match self {
            AlgebraKind::H1 { .. } => "h1",
            AlgebraKind::H2 { .. } => "h2",
        }
    }

    /// Display name of the k-th basis field (k = 1, 2, 3).
    pub fn basis_name(&self, k: usize) -> &'static str {
        match (self, k) {
            (AlgebraKind::H1 { .. }, 1) => "V11",
            (AlgebraKind::H1 { .. }, 2) => "V12",
            (AlgebraKind::H1 { .. }, 3) => "V13",
            (AlgebraKind::H2 { .. }, 1) => "V21",
            (AlgebraKind::H2 { .. }, 2) => "V22",
            (AlgebraKind::H2 { .. }, 3) => "V23",
            _ => panic!("basis index must be 1..=3"),
        }
    }
}

/// Structure constants `c[i][j][k]`: `[V_i, V_j] = sum_k c[i][j][k] V_k`
/// (all indices 0-based here).
#[derive(Debug, Clone)]
pub struct AlgebraSpec {
    pub kind: AlgebraKind,
    pub c: [[[f64; 3]; 3]; 3],
}

impl AlgebraSpec {
    pub fn new(kind: AlgebraKind) -> Self {
        let mut c = [[[0.0; 3]; 3]; 3];
        match kind {
            AlgebraKind::H1 { .. } => {
                // [V12, V13] = -V13
                c[1][2][2] = -1.0;
                c[2][1][2] = 1.0;
            }
            AlgebraKind::H2 { alpha } => {
                // [V21, V23] = alpha V23
                c[0][2][2] = alpha;
                c[2][0][2] = -alpha;
            }
        }
        AlgebraSpec { kind, c }
    }

    /// Bracket of two coefficient vectors.
    pub fn bracket(&self, x: &[f64; 3], y: &[f64; 3]) -> [f64; 3] {
        let mut out = [0.0; 3];
        for i in 0..3 {
            if x[i] == 0.0 {
                continue;
            }
            for j in 0..3 {
                if y[j] == 0.0 {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += x[i] * y[j] * self.c[i][j][k];
                }
            }
        }
        out
    }

    /// Matrix of `ad_x` acting on coefficient vectors: `(ad_x y)_k = M[k][j] y_j`.
    pub fn ad_matrix(&self, x: &[f64; 3]) -> [[f64; 3]; 3] {
        let mut m = [[0.0; 3]; 3];
        for (k, row) in m.iter_mut().enumerate() {
            for (j, mkj) in row.iter_mut().enumerate() {
                for i in 0..3 {
                    *mkj += x[i] * self.c[i][j][k];
                }
            }
        }
        m
    }

    /// Exact antisymmetry of the stored constants.
    pub fn antisymmetry_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    worst = worst.max((self.c[i][j][k] + self.c[j][i][k]).abs());
                }
            }
        }
        worst
    }

    /// Largest violation of the Jacobi identity over all index combinations.
    pub fn jacobi_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for n in 0..3 {
                        let mut s = 0.0;
                        for m in 0..3 {
                            s += self.c[i][j][m] * self.c[m][k][n]
                                + self.c[j][k][m] * self.c[m][i][n]
                                + self.c[k][i][m] * self.c[m][j][n];
                        }
                        worst = worst.max(s.abs());
                    }
                }
            }
        }
        worst
    }

    pub fn element(&self, coeffs: [f64; 3]) -> AlgebraElement {
        AlgebraElement {
            kind: self.kind,
            coeffs,
        }
    }
}

/// Coefficient vector over a basis (V1, V2, V3) of one of the two algebras.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlgebraElement {
    pub kind: AlgebraKind,
    pub coeffs: [f64; 3],
}

impl AlgebraElement {
    pub fn new(kind: AlgebraKind, coeffs: [f64; 3]) -> Self {
        AlgebraElement { kind, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&a| a == 0.0)
    }

    pub fn scaled(&self, s: f64) -> Self {
        AlgebraElement {
            kind: self.kind,
            coeffs: [self.coeffs[0] * s, self.coeffs[1] * s, self.coeffs[2] * s],
        }
    }

    /// Realize the element as a vector field.
    pub fn field(&self) -> Result<AffineScalingField> {
        let mut f = AffineScalingField::zero();
        for (k, &a) in self.coeffs.iter().enumerate() {
            f = f.add(&basis_field(self.kind, k + 1)?.scaled(a));
        }
        Ok(f)
    }

    /// Human-readable linear combination, e.g. `V12 - 1·V13`.
    pub fn render(&self, fmt_coeff: impl Fn(f64) -> String) -> String {
        let mut out = String::new();
        for (k, &a) in self.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            let name = self.kind.basis_name(k + 1);
            let mag = a.abs();
            let piece = if mag == 1.0 {
                name.to_string()
            } else {
                format!("{}·{}", fmt_coeff(mag), name)
            };
            if out.is_empty() {
                if a < 0.0 {
                    out.push('-');
                }
                out.push_str(&piece);
            } else {
                out.push_str(if a < 0.0 { " - " } else { " + " });
                out.push_str(&piece);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Vector field `tau d_t + xi d_x + eta d_u` with `tau = t_lin * t`,
/// `xi = x_lin * x + x_const`, `eta = u_lin * u + u_const`.
///
/// `tau` has no constant term, which encodes the lower-terminal constraint
/// `tau|_{t=0} = 0` structurally.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineScalingField {
    pub t_lin: f64,
    pub x_lin: f64,
    pub x_const: f64,
    pub u_lin: f64,
    pub u_const: f64,
}

impl AffineScalingField {
    pub fn zero() -> Self {
        AffineScalingField {
            t_lin: 0.0,
            x_lin: 0.0,
            x_const: 0.0,
            u_lin: 0.0,
            u_const: 0.0,
        }
    }

    pub fn tau(&self, t: f64) -> f64 {
        self.t_lin * t
    }

    pub fn xi(&self, x: f64) -> f64 {
        self.x_lin * x + self.x_const
    }

    pub fn eta(&self, u: f64) -> f64 {
        self.u_lin * u + self.u_const
    }

    pub fn add(&self, other: &Self) -> Self {
        AffineScalingField {
            t_lin: self.t_lin + other.t_lin,
            x_lin: self.x_lin + other.x_lin,
            x_const: self.x_const + other.x_const,
            u_lin: self.u_lin + other.u_lin,
            u_const: self.u_const + other.u_const,
        }
    }

    pub fn scaled(&self, s: f64) -> Self {
        AffineScalingField {
            t_lin: s * self.t_lin,
            x_lin: s * self.x_lin,
            x_const: s * self.x_const,
            u_lin: s * self.u_lin,
            u_const: s * self.u_const,
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.t_lin
            .abs()
            .max(self.x_lin.abs())
            .max(self.x_const.abs())
            .max(self.u_lin.abs())
            .max(self.u_const.abs())
    }
}

/// Basis vector fields of the two algebras (`index` is 1, 2 or 3).
pub fn basis_field(kind: AlgebraKind, index: usize) -> Result<AffineScalingField> {
    let mut f = AffineScalingField::zero();
    match (kind, index) {
        (AlgebraKind::H1 { alpha, r }, 1) => {
            if r == 1.0 {
                return Err(Error::domain("H1 needs r != 1"));
            }
            f.t_lin = 1.0;
            f.u_lin = -alpha / (r - 1.0);
        }
        (AlgebraKind::H1 { r, .. }, 2) => {
            if r == 1.0 {
                return Err(Error::domain("H1 needs r != 1"));
            }
            f.x_lin = 1.0;
            f.u_lin = 2.0 / (r - 1.0);
        }
        (AlgebraKind::H1 { .. }, 3) => f.x_const = 1.0,
        (AlgebraKind::H2 { alpha }, 1) => {
            f.t_lin = 1.0;
            f.u_lin = -alpha;
        }
        (AlgebraKind::H2 { .. }, 2) => f.x_const = 1.0,
        (AlgebraKind::H2 { .. }, 3) => f.u_const = 1.0,
        _ => return Err(Error::domain(format!("basis index must be 1..=3, got {index}"))),
    }
    Ok(f)
}

/// Geometric commutator of two affine-scaling fields (the class is closed
/// under it; only the translation parts survive).
pub fn commutator(x: &AffineScalingField, y: &AffineScalingField) -> AffineScalingField {
    AffineScalingField {
        t_lin: 0.0,
        x_lin: 0.0,
        x_const: y.x_lin * x.x_const - x.x_lin * y.x_const,
        u_lin: 0.0,
        u_const: y.u_lin * x.u_const - x.u_lin * y.u_const,
    }
}
