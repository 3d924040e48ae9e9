use std::f64::consts::{FRAC_PI_4, PI};

use super::tables::{BESSEL_J0_ZEROS, BESSEL_ZERO_CHEBYSHEV};
use crate::dd::Dd;
use crate::error::{param, Result};

/// Arguments up to this use the power series. Above it the Hankel expansion
/// is accurate for orders in `(-1, 2)`, and higher orders are reached by
/// recurrence.
const SERIES_LIMIT: f64 = 30.0;

/// Bessel function of the first kind `J_nu(x)` for `x >= 0`.
pub fn besselj(nu: f64, x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    if x == 0.0 {
        return if nu == 0.0 {
            1.0
        } else if nu > 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
    }
    if nu < 0.0 && nu == nu.round() {
        let m = -nu;
        let sign = if m % 2.0 == 0.0 { 1.0 } else { -1.0 };
        return sign * besselj(m, x);
    }
    if x <= SERIES_LIMIT {
        series(nu, x)
    } else if nu < 2.0 {
        hankel(nu, x)
    } else {
        recurrence(nu, x)
    }
}

/// `J_nu(x)` for `nu >= 2`, `x > SERIES_LIMIT`: forward recurrence from the
/// fractional order while the order stays below `x`, where it is stable.
/// Beyond `x` the ratio `J_nu / J_{nu-1}` comes from its continued fraction
/// and a backward recurrence meets the forward values.
fn recurrence(nu: f64, x: f64) -> f64 {
    let base = nu - nu.floor();
    let steps = nu.floor() as usize;
    let forward_steps = if nu <= x { steps } else { ((x - base).floor() as usize).clamp(1, steps) };
    let (mut lo, mut hi) = (hankel(base, x), hankel(base + 1.0, x));
    for i in 1..forward_steps {
        let mu = base + i as f64;
        (lo, hi) = (hi, 2.0 * mu / x * hi - lo);
    }
    if forward_steps == steps {
        return hi;
    }
    // hi = J_top, lo = J_{top-1}
    let top = base + forward_steps as f64;
    let ratio = ratio_cf(nu, x);
    let (mut f_hi, mut f_lo) = (ratio, 1.0);
    let mut log_scale = 0.0;
    let mut mu = nu - 1.0;
    while mu > top {
        (f_hi, f_lo) = (f_lo, 2.0 * mu / x * f_lo - f_hi);
        mu -= 1.0;
        if f_lo.abs() > 1e250 {
            f_lo *= 1e-250;
            f_hi *= 1e-250;
            log_scale += 250.0 * std::f64::consts::LN_10;
        }
    }
    // f_lo ~ J_top, f_hi ~ J_{top+1}; match on both to avoid a zero of one
    let next = 2.0 * top / x * hi - lo;
    let scale = (hi * f_lo + next * f_hi) / (f_lo * f_lo + f_hi * f_hi);
    let mag = scale.abs().ln() - log_scale;
    if mag < -745.0 {
        return 0.0;
    }
    scale.signum() * mag.exp() * ratio
}

/// `J_nu(x) / J_{nu-1}(x)` by the modified Lentz method.
fn ratio_cf(nu: f64, x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut f = TINY;
    let (mut c, mut d) = (f, 0.0);
    for m in 0..100_000 {
        let b = 2.0 * (nu + m as f64) / x;
        let a = if m == 0 { 1.0 } else { -1.0 };
        d = b + a * d;
        if d == 0.0 {
            d = TINY;
        }
        c = b + a / c;
        if c == 0.0 {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    f
}

/// Power series `(x/2)^nu / Gamma(nu+1) * sum (-x^2/4)^m / (m! (nu+1)_m)`,
/// summed in double-double since terms grow to about `e^x` before cancelling.
fn series(nu: f64, x: f64) -> f64 {
    let q = -(Dd::new(x) * x).scale(0.25);
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    let mut m = 1.0;
    loop {
        // m + nu is rarely exact in binary64, and the terms reach e^x in size
        term = term * q / ((Dd::new(nu) + m) * m);
        sum = sum + term;
        if m > 0.5 * x && term.hi.abs() <= 1e-17 * sum.hi.abs() {
            break;
        }
        m += 1.0;
        if m > 500.0 {
            break;
        }
    }
    let g = libm::tgamma(nu + 1.0);
    let pre = if g.is_finite() && g != 0.0 {
        (0.5 * x).powf(nu) / g
    } else {
        (nu * (0.5 * x).ln() - libm::lgamma(nu + 1.0)).exp()
    };
    pre * sum.to_f64()
}

/// Large-argument expansion; the series is cut where its terms start to grow.
fn hankel(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let (mut p, mut q) = (1.0, 0.0);
    let mut term = 1.0f64;
    let mut m = 1.0;
    loop {
        let odd = 2.0 * m - 1.0;
        let next = term * (mu - odd * odd) / (8.0 * m * x);
        if next.abs() >= term.abs() || next == 0.0 {
            break;
        }
        term = next;
        // P takes the even terms, Q the odd ones, with alternating signs
        match (m as u64) % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-17 * p.abs().max(q.abs()) {
            break;
        }
        m += 1.0;
    }
    // cos(x - c) and sin(x - c) without forming x - c
    let c = (0.5 * nu + 0.25) * PI;
    let (sx, cx) = x.sin_cos();
    let (sc, cc) = c.sin_cos();
    let cos_chi = cx * cc + sx * sc;
    let sin_chi = sx * cc - cx * sc;
    (2.0 / (PI * x)).sqrt() * (p * cos_chi - q * sin_chi)
}

/// The k-th positive zero `j_{alpha,k}` of `J_alpha`.
pub fn besselj_zero(alpha: f64, k: usize) -> Result<f64> {
    if !(alpha > -1.0) || !alpha.is_finite() {
        return Err(param(format!("Bessel order must be > -1, got {alpha}")));
    }
    if k == 0 {
        return Err(param("Bessel zero index starts at 1"));
    }
    if alpha == 0.0 && k <= BESSEL_J0_ZEROS.len() {
        return Ok(BESSEL_J0_ZEROS[k - 1]);
    }
    let guess = if alpha <= 5.0 && k <= BESSEL_ZERO_CHEBYSHEV.len() {
        chebyshev_zero(alpha, k)
    } else if alpha <= 5.0 {
        mcmahon(alpha, k)
    } else {
        debye_zero(alpha, k)
    };
    Ok(polish(alpha, guess))
}

fn chebyshev_zero(alpha: f64, k: usize) -> f64 {
    let c = BESSEL_ZERO_CHEBYSHEV[k - 1];
    let u = (alpha - 2.0) / 3.0;
    // Clenshaw recurrence for c_0/2 + sum c_j T_j(u)
    let (mut b1, mut b2) = (0.0, 0.0);
    for &cj in c[1..].iter().rev() {
        let b0 = 2.0 * u * b1 - b2 + cj;
        b2 = b1;
        b1 = b0;
    }
    let v = u * b1 - b2 + 0.5 * c[0];
    if k == 1 {
        v * (alpha + 1.0).sqrt()
    } else {
        v
    }
}

/// McMahon's expansion through the `b^{-13}` term.
fn mcmahon(alpha: f64, k: usize) -> f64 {
    let mu = 4.0 * alpha * alpha;
    let b = (2.0 * alpha + 4.0 * k as f64 - 1.0) * FRAC_PI_4;
    let a1 = 1.0 / 8.0;
    let a3 = (7.0 * mu - 31.0) / 384.0;
    let a5 = 4.0 * (3779.0 + mu * (-982.0 + 83.0 * mu)) / 61440.0;
    let a7 = 6.0 * (-6277237.0 + mu * (1585743.0 + mu * (-153855.0 + 6949.0 * mu))) / 20643840.0;
    let a9 = 144.0
        * (2092163573.0 + mu * (-512062548.0 + mu * (48010494.0 + mu * (-2479316.0 + 70197.0 * mu))))
        / 11890851840.0;
    let a11 = 720.0
        * (-8249725736393.0
            + mu * (1982611456181.0
                + mu * (-179289628602.0
                    + mu * (8903961290.0 + mu * (-287149133.0 + 5592657.0 * mu)))))
        / 10463949619200.0;
    let a13 = 576.0
        * (423748443625564327.0
            + mu * (-100847472093088506.0
                + mu * (8929489333108377.0
                    + mu * (-426353946885548.0
                        + mu * (13172003634537.0 + mu * (-291245357370.0 + mu * 4148944183.0))))))
        / 13059009124761600.0;
    let r = 1.0 / (b * b);
    let s = a1 + r * (a3 + r * (a5 + r * (a7 + r * (a9 + r * (a11 + r * a13)))));
    b - (mu - 1.0) * s / b
}

/// Zero of the leading Debye phase, `sqrt(x^2 - nu^2) - nu acos(nu/x) =
/// (k - 1/4) pi`. Within about 1% of the zero spacing for every `k` once
/// `nu > 5`, where McMahon's expansion needs `k >> nu`.
fn debye_zero(nu: f64, k: usize) -> f64 {
    let target = (k as f64 - 0.25) * PI;
    let mut x = nu + target;
    for _ in 0..100 {
        let s = (x * x - nu * nu).sqrt();
        let step = (s - nu * (nu / x).acos() - target) * x / s;
        // the phase is convex in x, so Newton from the right stays right
        x = (x - step).max(nu * (1.0 + 1e-12));
        if step.abs() <= 1e-13 * x {
            break;
        }
    }
    x
}

fn polish(alpha: f64, mut x: f64) -> f64 {
    for _ in 0..6 {
        let j = besselj(alpha, x);
        let dj = alpha / x * j - besselj(alpha + 1.0, x);
        let step = j / dj;
        if !step.is_finite() {
            break;
        }
        x -= step;
        if step.abs() <= 1e-14 * x {
            break;
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn half_order_zeros_are_multiples_of_pi() {
        for k in 1..=50 {
            assert_relative_eq!(besselj_zero(0.5, k).unwrap(), k as f64 * PI, max_relative = 4e-16);
        }
    }

    #[test]
    fn first_j0_zero() {
        assert_eq!(besselj_zero(0.0, 1).unwrap(), 2.404825557695773);
    }

    #[test]
    fn millionth_zero_is_near_leading_term() {
        let z = besselj_zero(0.0, 1_000_000).unwrap();
        assert!((z - FRAC_PI_4 * (4e6 - 1.0)).abs() <= 1e-7);
    }

    #[test]
    fn high_order_values() {
        // mpmath, 30 digits
        let cases = [
            (10.0, 45.0, -0.02697140247501079),
            (10.0, 1000.0, -0.02452062230603656),
            (60.0, 45.0, 2.032875819327283e-5),
            (60.0, 100.0, 0.001063156304227703),
            (150.0, 45.0, 3.9618696919232057e-62),
            (150.0, 100.0, 2.722902171882048e-16),
            (150.0, 400.0, -0.03771413883454742),
        ];
        for (nu, x, want) in cases {
            let got = besselj(nu, x);
            assert!((got - want).abs() <= 2e-16_f64.max(2e-13 * want.abs()), "J_{nu}({x}) = {got}");
        }
    }

    #[test]
    fn high_order_zeros() {
        let cases = [
            (10.0, 6, 32.21185619971273),
            (10.0, 20, 77.1067342468613),
            (25.0, 6, 51.08974966635996),
            (150.0, 20, 251.42513986939094),
            (400.0, 6, 454.8494048845741),
            (400.0, 100, 845.1336909406016),
        ];
        for (nu, k, want) in cases {
            assert_relative_eq!(besselj_zero(nu, k).unwrap(), want, max_relative = 1e-15);
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(besselj_zero(-1.0, 1).is_err());
        assert!(besselj_zero(0.3, 0).is_err());
    }

    #[test]
    fn chebyshev_fit_matches_table_at_zero_order() {
        for k in 1..=6 {
            assert_relative_eq!(chebyshev_zero(0.0, k), BESSEL_J0_ZEROS[k - 1], max_relative = 1e-14);
        }
    }

    #[test]
    fn values_at_simple_points() {
        assert_eq!(besselj(0.0, 0.0), 1.0);
        assert_relative_eq!(besselj(0.5, PI / 2.0), 2.0 / PI, max_relative = 1e-15);
        assert!(besselj(0.0, 2.404825557695773).abs() <= 1e-10);
    }

    #[test]
    fn half_integer_closed_forms() {
        let mut x = 0.1;
        while x <= 100.0 {
            let amp = (2.0 / (PI * x)).sqrt();
            let s = amp * x.sin();
            let c = amp * x.cos();
            // relative to the envelope, since the closed forms vanish at their zeros
            assert!((besselj(0.5, x) - s).abs() <= 1e-13 * amp, "x = {x}");
            assert!((besselj(-0.5, x) - c).abs() <= 1e-13 * amp, "x = {x}");
            x += 0.37;
        }
    }

    #[test]
    fn negative_integer_order_reflects() {
        assert_relative_eq!(besselj(-1.0, 3.0), -besselj(1.0, 3.0), max_relative = 1e-15);
    }

    #[test]
    fn large_order_zero_converges() {
        // j_{10,1} = 14.475500686554541
        assert_relative_eq!(besselj_zero(10.0, 1).unwrap(), 14.475500686554541, max_relative = 1e-13);
    }
}
