//! Gauss–Hermite rules from Gauss–Laguerre rules with `alpha = -1/2` (even
//! n) or `alpha = 1/2` (odd n).
//!
//! The positive Hermite nodes are the square roots of the Laguerre nodes; the
//! negative half is the exact mirror image.

use std::f64::consts::PI;

use crate::error::{param, Result};
use crate::laguerre::{gauss_laguerre, LaguerreOptions};
use crate::rule::{Method, QuadratureRule, Warning, WeightFunction};
use crate::specfun::gamma_ratio_half;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct HermiteOptions {
    /// Override the heuristic number of Laguerre expansion terms.
    pub terms: Option<usize>,
    pub method: Method,
}

/// Which Laguerre rule an n-point Hermite rule is built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermiteMapping {
    pub odd: bool,
    pub laguerre_alpha: f64,
    /// Number of positive nodes, equal to the Laguerre rule size.
    pub half_count: usize,
}

impl HermiteMapping {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(param("n must be at least 1"));
        }
        let odd = n % 2 == 1;
        Ok(HermiteMapping {
            odd,
            laguerre_alpha: if odd { 0.5 } else { -0.5 },
            half_count: n / 2,
        })
    }
}

/// Weight of the node at the origin of a `(2m+1)`-point rule,
/// `pi Gamma(m+1) / ((2m+1) Gamma(m+1/2))`.
pub fn middle_weight(m: usize) -> f64 {
    if m == 0 {
        return PI.sqrt();
    }
    let mf = m as f64;
    PI * mf.sqrt() * gamma_ratio_half(m as u64) / (2.0 * mf + 1.0)
}

/// An n-point Gauss–Hermite rule for `e^{-x^2}` on the real line.
pub fn gauss_hermite(n: usize, options: HermiteOptions) -> Result<QuadratureRule> {
    let map = HermiteMapping::new(n)?;
    let m = map.half_count;
    let mut warnings = Vec::new();

    let mut positive = Vec::with_capacity(m);
    if m > 0 {
        let lag = gauss_laguerre(
            m,
            map.laguerre_alpha,
            LaguerreOptions {
                scaled: true,
                all_nodes: true,
                terms: options.terms,
                method: options.method,
            },
        )?;
        warnings.extend(
            lag.warnings()
                .iter()
                .filter(|w| !matches!(w, Warning::WeightsUnderflowed { .. }))
                .cloned(),
        );
        for (x, scaled) in lag.iter() {
            let t = x.sqrt();
            let w = if map.odd { scaled / (2.0 * x) } else { 0.5 * scaled };
            positive.push((t, w * (-t * t).exp()));
        }
    }

    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for &(t, w) in positive.iter().rev() {
        nodes.push(-t);
        weights.push(w);
    }
    if map.odd {
        nodes.push(0.0);
        weights.push(middle_weight(m));
    }
    for &(t, w) in &positive {
        nodes.push(t);
        weights.push(w);
    }

    let underflowed = weights.iter().filter(|&&w| w == 0.0).count();
    if underflowed > 0 {
        warnings.push(Warning::WeightsUnderflowed { count: underflowed });
    }
    Ok(QuadratureRule::new(WeightFunction::Hermite, n, nodes, weights, false)?.with_warnings(warnings))
}
