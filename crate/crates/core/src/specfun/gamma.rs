use crate::dd::Dd;

/// `ln Gamma(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

/// `Gamma(m+1) / (sqrt(m) Gamma(m+1/2))`.
///
/// Below `m = 100` the value comes from the product
/// `pi^{-1/2} prod_{j=1..m} j/(j - 1/2)` in double-double; above, from a
/// ten-term series in `1/m`.
pub fn gamma_ratio_half(m: u64) -> f64 {
    assert!(m >= 1, "gamma_ratio_half needs m >= 1");
    if m < 100 {
        product(m)
    } else {
        series(m)
    }
}

fn product(m: u64) -> f64 {
    let mut p = Dd::ONE;
    for j in 1..=m {
        let j = j as f64;
        p = p * j / (j - 0.5);
    }
    // 1/sqrt(pi) to double-double precision
    let inv_sqrt_pi = Dd {
        hi: 0.5641895835477563,
        lo: 7.66772980658294e-18,
    };
    (p * inv_sqrt_pi / Dd::new(m as f64).sqrt()).to_f64()
}

fn series(m: u64) -> f64 {
    const C: [f64; 11] = [
        1.0,
        1.0 / 8.0,
        1.0 / 128.0,
        -5.0 / 1024.0,
        -21.0 / 32768.0,
        399.0 / 262144.0,
        869.0 / 4194304.0,
        -39325.0 / 33554432.0,
        -334477.0 / 2147483648.0,
        28717403.0 / 17179869184.0,
        59697183.0 / 274877906944.0,
    ];
    let u = 1.0 / m as f64;
    C.iter().rev().fold(0.0, |acc, &c| acc * u + c)
}

#[cfg(test)]
#[allow(clippy::approx_constant)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn ratio_at_one() {
        assert_relative_eq!(gamma_ratio_half(1), 1.1283791670955126, max_relative = 2e-16);
    }

    #[test]
    fn ratio_leading_terms_for_large_m() {
        let m = 1_000_000u64;
        assert!((gamma_ratio_half(m) - (1.0 + 1.0 / (8.0 * m as f64))).abs() <= 1e-14);
    }

    #[test]
    fn branches_agree_at_the_switch() {
        for m in [99, 100, 101] {
            assert_relative_eq!(series(m), product(m), max_relative = 1e-14);
        }
    }

    #[test]
    fn ln_gamma_simple_values() {
        assert_eq!(ln_gamma(1.0), 0.0);
        assert_eq!(ln_gamma(2.0), 0.0);
        assert_relative_eq!(ln_gamma(0.5), 0.5 * std::f64::consts::PI.ln(), max_relative = 4e-16);
        assert_relative_eq!(ln_gamma(1.7).exp(), 0.9086387328532904, max_relative = 4e-16);
    }
}
