//! Gamma function and its reciprocal.
//!
//! Lanczos approximation with the coefficient set from "An Analysis of the
//! Lanczos Gamma Approximation", Pugh 2004 (the same table statrs ships).
//! Relative accuracy is well under 1e-12 across [-20, 50] away from poles,
//! which keeps every residual check in this crate limited by quadrature
//! rather than by Gamma.

use crate::error::{Error, Result};

const TWO_SQRT_E_OVER_PI: f64 = 1.860_382_734_205_265_7;
const GAMMA_R: f64 = 10.900511;

const GAMMA_DK: [f64; 11] = [
    2.485_740_891_387_535_5e-5,
    1.051_423_785_817_219_7,
    -3.456_870_972_220_162_5,
    4.512_277_094_668_948,
    -2.982_852_253_235_766_4,
    1.056_397_115_771_267,
    -1.954_287_731_916_458_7e-1,
    1.709_705_434_044_412e-2,
    -5.719_261_174_043_057e-4,
    4.633_994_733_599_057e-6,
    -2.719_949_084_886_077_2e-9,
];

/// True when `x` is a non-positive integer, i.e. a pole of Gamma.
pub fn is_gamma_pole(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

/// sin(pi * x) with the range reduction done on `x` itself.
///
/// `x mod 2` is exact in binary floating point, so the argument handed to
/// `sin` never exceeds 2*pi and no precision is lost for large |x|.
fn sin_pi(x: f64) -> f64 {
    let r = x.rem_euclid(2.0);
    // fold into [-1/2, 1/2] where sin(pi r) is well conditioned
    if r < 0.5 {
        (std::f64::consts::PI * r).sin()
    } else if r < 1.5 {
        (std::f64::consts::PI * (1.0 - r)).sin()
    } else {
        (std::f64::consts::PI * (r - 2.0)).sin()
    }
}

/// Gamma without the pole check; callers must ensure `x` is not a pole.
pub(crate) fn gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        let s = GAMMA_DK
            .iter()
            .enumerate()
            .skip(1)
            .fold(GAMMA_DK[0], |s, (k, d)| s + d / (k as f64 - x));
        std::f64::consts::PI
            / (sin_pi(x)
                * s
                * TWO_SQRT_E_OVER_PI
                * ((0.5 - x + GAMMA_R) / std::f64::consts::E).powf(0.5 - x))
    } else {
        let s = GAMMA_DK
            .iter()
            .enumerate()
            .skip(1)
            .fold(GAMMA_DK[0], |s, (k, d)| s + d / (x + k as f64 - 1.0));
        s * TWO_SQRT_E_OVER_PI * ((x - 0.5 + GAMMA_R) / std::f64::consts::E).powf(x - 0.5)
    }
}

/// Gamma(x). Non-positive integers are poles and return an error.
pub fn gamma(x: f64) -> Result<f64> {
    if is_gamma_pole(x) {
        return Err(Error::GammaPole { x });
    }
    Ok(gamma_unchecked(x))
}

/// 1/Gamma(x), defined for every real `x`.
///
/// Returns exactly 0 at the poles of Gamma, which is what makes the power
/// rule produce the zero function on exponents like alpha - 1 without any
/// special casing downstream.
pub fn reciprocal_gamma(x: f64) -> f64 {
    if is_gamma_pole(x) {
        0.0
    } else {
        1.0 / gamma_unchecked(x)
    }
}
