use std::f64::consts::{FRAC_PI_4, PI};

use super::tables::{AIRY_PRIME_AT_ZEROS, AIRY_ZEROS};
use crate::error::{param, Result};

/// The m-th zero `a_m` of `Ai` (negative, decreasing in m).
pub fn airy_zero(m: usize) -> Result<f64> {
    if m == 0 {
        return Err(param("Airy zero index starts at 1"));
    }
    if m <= AIRY_ZEROS.len() {
        return Ok(AIRY_ZEROS[m - 1]);
    }
    let t = 3.0 * PI * (4.0 * m as f64 - 1.0) / 8.0;
    let r = 1.0 / (t * t);
    let s = 1.0
        + r * (5.0 / 48.0
            + r * (-5.0 / 36.0
                + r * (77125.0 / 82944.0
                    + r * (-108056875.0 / 6967296.0 + r * (162375596875.0 / 334430208.0)))));
    Ok(-t.powf(2.0 / 3.0) * s)
}

/// `Ai'(a_m)`; alternates in sign, positive for m = 1.
pub fn airy_prime_at_zero(m: usize) -> Result<f64> {
    if m == 0 {
        return Err(param("Airy zero index starts at 1"));
    }
    if m <= AIRY_PRIME_AT_ZEROS.len() {
        return Ok(AIRY_PRIME_AT_ZEROS[m - 1]);
    }
    let z = -airy_zero(m)?;
    let zeta = 2.0 / 3.0 * z * z.sqrt();
    // v_k = -(6k+1)/(6k-1) u_k,  u_k = u_{k-1} (6k-5)(6k-3)(6k-1) / (216 k (2k-1))
    let (mut even, mut odd) = (1.0, 0.0);
    let mut u = 1.0f64;
    let mut zpow = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..200u32 {
        let kf = k as f64;
        u *= (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / (216.0 * kf * (2.0 * kf - 1.0));
        zpow /= zeta;
        let term = -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * u * zpow;
        if term.abs() >= prev {
            break;
        }
        prev = term.abs();
        // even k feeds the sin series, odd k the cos series, each alternating
        match k % 4 {
            1 => odd += term,
            2 => even -= term,
            3 => odd -= term,
            _ => even += term,
        }
        if term.abs() < 1e-17 {
            break;
        }
    }
    let phase = zeta - FRAC_PI_4;
    Ok(z.sqrt().sqrt() / PI.sqrt() * (phase.sin() * even - phase.cos() * odd))
}
