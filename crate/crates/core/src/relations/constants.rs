//! Numerical constants of the interval relations, computed from
//! transcendental primitives.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI};

/// Tail probability `(1 − sin 1)/2`.
pub fn tail_probability() -> f64 {
    (1.0 - 1f64.sin()) / 2.0
}

/// Lower bound `√(1 − sin 1)` of `2Δ_ψX/δ_ψX`.
pub fn ratio_bound() -> f64 {
    (1.0 - 1f64.sin()).sqrt()
}

/// Angle `arcsin √q` of the state left after cutting off one tail.
pub fn tail_angle() -> f64 {
    tail_probability().sqrt().asin()
}

/// Closed form of [`tail_angle`]: `π/4 − 1/2`.
pub fn tail_angle_closed_form() -> f64 {
    FRAC_PI_4 - 0.5
}

/// `Φ⁻¹(p)` for the standard normal distribution, by bisection on `erfc`.
pub fn normal_quantile(p: f64) -> f64 {
    assert!(p > 0.0 && p < 1.0, "quantile level must lie in (0, 1)");
    // upper tail 1 − Φ(z) = erfc(z/√2)/2 is decreasing in z
    let upper = |z: f64| 0.5 * libm::erfc(z * FRAC_1_SQRT_2);
    let target = 1.0 - p;
    let (mut lo, mut hi) = (-40.0f64, 40.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if upper(mid) > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `z_q = Φ⁻¹(1 − q)`: half-width of the central interval of a Gaussian in
/// units of its standard deviation.
pub fn gaussian_quantile() -> f64 {
    normal_quantile(1.0 - tail_probability())
}

/// `2Δ/δ` for a Gaussian, `1/z_q`.
pub fn gaussian_ratio() -> f64 {
    1.0 / gaussian_quantile()
}

/// Uniform circular density: fraction of the circle covered by the shortest
/// arc leaving out probability `q`.
pub fn uniform_arc_fraction() -> f64 {
    1.0 - tail_probability()
}

/// `⟨Φ²⟩` of the uniform density on `[−π, π]`.
pub fn uniform_angle_second_moment() -> f64 {
    PI * PI / 3.0
}
