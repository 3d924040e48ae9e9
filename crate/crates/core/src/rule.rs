//! The shared rule type and the operations every family uses.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::dd::Dd;
use crate::error::{param, Error, Result};
use crate::specfun::ln_gamma;

/// Which classical weight a rule integrates against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Laguerre,
    Jacobi,
    Hermite,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Laguerre => "laguerre",
            Family::Jacobi => "jacobi",
            Family::Hermite => "hermite",
        })
    }
}

/// Weight function of a rule, with its parameters.
///
/// * `Laguerre { alpha }`: `x^alpha e^{-x}` on `(0, inf)`
/// * `Jacobi { alpha, beta }`: `(1-x)^alpha (1+x)^beta` on `(-1, 1)`
/// * `Hermite`: `e^{-x^2}` on the real line
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightFunction {
    Laguerre { alpha: f64 },
    Jacobi { alpha: f64, beta: f64 },
    Hermite,
}

impl WeightFunction {
    pub fn family(&self) -> Family {
        match self {
            WeightFunction::Laguerre { .. } => Family::Laguerre,
            WeightFunction::Jacobi { .. } => Family::Jacobi,
            WeightFunction::Hermite => Family::Hermite,
        }
    }

    pub fn alpha(&self) -> Option<f64> {
        match *self {
            WeightFunction::Laguerre { alpha } | WeightFunction::Jacobi { alpha, .. } => {
                Some(alpha)
            }
            WeightFunction::Hermite => None,
        }
    }

    pub fn beta(&self) -> Option<f64> {
        match *self {
            WeightFunction::Jacobi { beta, .. } => Some(beta),
            _ => None,
        }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        let ok = |p: f64| p.is_finite() && p > -1.0;
        match *self {
            WeightFunction::Laguerre { alpha } if !ok(alpha) => {
                Err(param(format!("alpha must be finite and > -1, got {alpha}")))
            }
            WeightFunction::Jacobi { alpha, .. } if !ok(alpha) => {
                Err(param(format!("alpha must be finite and > -1, got {alpha}")))
            }
            WeightFunction::Jacobi { beta, .. } if !ok(beta) => {
                Err(param(format!("beta must be finite and > -1, got {beta}")))
            }
            _ => Ok(()),
        }
    }

    /// Total mass of the weight, computed through log-gamma.
    pub fn total_mass(&self) -> f64 {
        match *self {
            WeightFunction::Laguerre { alpha } => ln_gamma(alpha + 1.0).exp(),
            WeightFunction::Jacobi { alpha, beta } => jacobi_mass(alpha, beta),
            WeightFunction::Hermite => std::f64::consts::PI.sqrt(),
        }
    }

    /// `\int x^j w(x) dx` in double-double precision.
    pub fn moment(&self, j: usize) -> f64 {
        match *self {
            WeightFunction::Laguerre { alpha } => {
                // Gamma(alpha + j + 1) = Gamma(alpha + 1) prod_{i=1..j} (alpha + i)
                let mut m = Dd::new(ln_gamma(alpha + 1.0).exp());
                for i in 1..=j {
                    m = m * (Dd::new(alpha) + i as f64);
                }
                m.to_f64()
            }
            WeightFunction::Hermite => {
                if j % 2 == 1 {
                    return 0.0;
                }
                // Gamma(i + 1/2) = sqrt(pi) prod_{l=1..i} (l - 1/2)
                let mut m = Dd::new(std::f64::consts::PI.sqrt());
                for l in 1..=j / 2 {
                    m = m * (l as f64 - 0.5);
                }
                m.to_f64()
            }
            WeightFunction::Jacobi { alpha, beta } => jacobi_moments(alpha, beta, j)[j].to_f64(),
        }
    }

    pub(crate) fn in_support(&self, x: f64) -> bool {
        match self {
            WeightFunction::Laguerre { .. } => x > 0.0 && x.is_finite(),
            WeightFunction::Jacobi { .. } => x > -1.0 && x < 1.0,
            WeightFunction::Hermite => x.is_finite(),
        }
    }
}

pub(crate) fn jacobi_mass(alpha: f64, beta: f64) -> f64 {
    ((alpha + beta + 1.0) * std::f64::consts::LN_2 + ln_gamma(alpha + 1.0) + ln_gamma(beta + 1.0)
        - ln_gamma(alpha + beta + 2.0))
    .exp()
}

/// Moments of the Jacobi weight from integration by parts:
/// `(j + a + b + 2) m_{j+1} = j m_{j-1} + (b - a) m_j`.
fn jacobi_moments(alpha: f64, beta: f64, upto: usize) -> Vec<Dd> {
    let mut m = Vec::with_capacity(upto + 1);
    m.push(Dd::new(jacobi_mass(alpha, beta)));
    let diff = Dd::new(beta) - Dd::new(alpha);
    let sum = Dd::new(alpha) + beta;
    for j in 0..upto {
        let prev = if j == 0 { Dd::ZERO } else { m[j - 1] };
        let next = (prev * j as f64 + diff * m[j]) / (sum + (j as f64 + 2.0));
        m.push(next);
    }
    m
}

/// How to build the rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Oracle below the family threshold, expansions above.
    #[default]
    Auto,
    Asymptotic,
    Oracle,
}

/// A node with its weight (scaled for Laguerre when requested).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub node: f64,
    pub weight: f64,
}

/// Conditions attached to a rule that did not prevent its construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Warning {
    /// `alpha^2 / n > 1` for Laguerre: expansions may be inaccurate.
    LargeAlpha { alpha: f64, n: usize },
    /// `alpha^2 + beta^2 >= n` for Jacobi.
    LargeJacobiParameters { alpha: f64, beta: f64, n: usize },
    /// More expansion terms were requested than are available.
    TermsClamped { requested: usize, used: usize },
    /// Some unscaled Laguerre or Hermite weights underflowed to zero.
    WeightsUnderflowed { count: usize },
    /// Oracle Newton refinement was rejected for some nodes.
    UnrefinedNodes { count: usize },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::LargeAlpha { alpha, n } => write!(
                f,
                "alpha^2/n = {} > 1 (alpha = {alpha}, n = {n}); asymptotic accuracy may be reduced",
                alpha * alpha / *n as f64
            ),
            Warning::LargeJacobiParameters { alpha, beta, n } => write!(
                f,
                "alpha^2 + beta^2 = {} >= n = {n}; asymptotic accuracy may be reduced",
                alpha * alpha + beta * beta
            ),
            Warning::TermsClamped { requested, used } => {
                write!(f, "{requested} expansion terms requested, {used} available")
            }
            Warning::WeightsUnderflowed { count } => {
                write!(f, "{count} weights underflowed to zero")
            }
            Warning::UnrefinedNodes { count } => {
                write!(f, "{count} oracle nodes kept their unrefined value")
            }
        }
    }
}

/// An n-point Gaussian quadrature rule with ascending nodes.
///
/// For Laguerre rules `nodes.len()` may be smaller than `n` when nodes whose
/// weights underflow were skipped. When `scaled` is set, each stored weight
/// is `w_k e^{x_k}`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    weight: WeightFunction,
    n: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    scaled: bool,
    modified: bool,
    warnings: Vec<Warning>,
}

impl QuadratureRule {
    /// Validates and wraps nodes and weights.
    pub fn new(
        weight: WeightFunction,
        n: usize,
        nodes: Vec<f64>,
        weights: Vec<f64>,
        scaled: bool,
    ) -> Result<Self> {
        weight.validate()?;
        if n == 0 {
            return Err(param("a rule needs at least one node"));
        }
        if nodes.len() != weights.len() {
            return Err(param(format!(
                "{} nodes but {} weights",
                nodes.len(),
                weights.len()
            )));
        }
        if nodes.len() > n || nodes.is_empty() {
            return Err(param(format!("{} nodes for an {n}-point rule", nodes.len())));
        }
        if scaled && weight.family() != Family::Laguerre {
            return Err(param("only Laguerre rules carry scaled weights"));
        }
        for (k, pair) in nodes.windows(2).enumerate() {
            if !(pair[0] < pair[1]) {
                return Err(Error::Numerical(format!(
                    "nodes not strictly increasing at index {}: {} >= {}",
                    k + 1,
                    pair[0],
                    pair[1]
                )));
            }
        }
        if let Some((k, &x)) = nodes.iter().enumerate().find(|(_, &x)| !weight.in_support(x)) {
            return Err(Error::Numerical(format!(
                "node {} = {x} lies outside the support",
                k + 1
            )));
        }
        if let Some((k, &w)) = weights
            .iter()
            .enumerate()
            .find(|(_, &w)| !(w >= 0.0 && w.is_finite()))
        {
            return Err(Error::Numerical(format!("weight {} = {w} is invalid", k + 1)));
        }
        Ok(QuadratureRule {
            weight,
            n,
            nodes,
            weights,
            scaled,
            modified: false,
            warnings: Vec::new(),
        })
    }

    pub(crate) fn with_warnings(mut self, warnings: Vec<Warning>) -> Self {
        self.warnings.extend(warnings);
        self
    }

    /// Marks a Jacobi rule whose weight carries an extra analytic factor.
    pub(crate) fn mark_modified(mut self) -> Self {
        self.modified = true;
        self
    }

    pub fn family(&self) -> Family {
        self.weight.family()
    }

    pub fn weight_function(&self) -> WeightFunction {
        self.weight
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn is_scaled(&self) -> bool {
        self.scaled
    }

    /// True when the weight includes an analytic modifier `h(x)`.
    pub fn is_modified(&self) -> bool {
        self.modified
    }

    pub fn warnings(&self) -> &[Warning] {
        &self.warnings
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }

    /// Weights with any `e^{x}` scaling removed (may underflow to zero).
    pub fn unscaled_weights(&self) -> Vec<f64> {
        if self.scaled {
            self.iter().map(|(x, w)| w * (-x).exp()).collect()
        } else {
            self.weights.clone()
        }
    }

    /// `sum_k w_k f(x_k)`, accumulated in double-double.
    ///
    /// For scaled Laguerre rules `f` must include the `e^{-x}` factor. On a
    /// rule that is its own mirror image the terms are added in mirrored
    /// pairs, so odd integrands give exactly zero.
    pub fn apply<F: Fn(f64) -> f64>(&self, f: F) -> Result<f64> {
        mirrored_sum(&self.nodes, &self.weights, f)
    }

    /// `|Q[x^j] - M_j| / max(1, |M_j|)` against the analytic moment.
    pub fn moment_residual(&self, j: usize) -> Result<f64> {
        let max = 2 * self.n - 1;
        if j > max {
            return Err(Error::OutOfExactness { degree: j, max });
        }
        if self.modified {
            return Err(param("no closed-form moments for a modified weight"));
        }
        let exact = self.weight.moment(j);
        let approx = mirrored_sum(&self.nodes, &self.unscaled_weights(), |x| x.powi(j as i32))?;
        Ok((approx - exact).abs() / exact.abs().max(1.0))
    }
}

/// Double-double `sum_k w_k f(x_k)`. When the nodes and weights are their own
/// mirror image the terms are added in mirrored pairs, so odd integrands give
/// exactly zero.
fn mirrored_sum<F: Fn(f64) -> f64>(nodes: &[f64], weights: &[f64], f: F) -> Result<f64> {
    let term = |index: usize| {
        let (x, w) = (nodes[index], weights[index]);
        let value = f(x);
        if !value.is_finite() {
            return Err(Error::Evaluation {
                index: index + 1,
                node: x,
                value,
            });
        }
        Ok(Dd::new(w) * value)
    };
    let n = nodes.len();
    let mirrored =
        (0..n / 2).all(|k| nodes[k] == -nodes[n - 1 - k] && weights[k] == weights[n - 1 - k]);
    let mut acc = Dd::ZERO;
    if mirrored {
        for k in 0..n / 2 {
            acc = acc + (term(k)? + term(n - 1 - k)?);
        }
        if n % 2 == 1 {
            acc = acc + term(n / 2)?;
        }
    } else {
        for k in 0..n {
            acc = acc + term(k)?;
        }
    }
    Ok(acc.to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn one_point_laguerre_integrates_x() {
        let rule =
            QuadratureRule::new(WeightFunction::Laguerre { alpha: 0.0 }, 1, vec![1.0], vec![1.0], false)
                .unwrap();
        assert_eq!(rule.apply(|x| x).unwrap(), 1.0);
    }

    #[test]
    fn two_point_hermite_second_moment() {
        let s = 0.5f64.sqrt();
        let w = PI.sqrt() / 2.0;
        let rule =
            QuadratureRule::new(WeightFunction::Hermite, 2, vec![-s, s], vec![w, w], false).unwrap();
        assert_abs_diff_eq!(rule.apply(|x| x * x).unwrap(), PI.sqrt() / 2.0, epsilon = 1e-14);
    }

    #[test]
    fn two_point_laguerre_exact_to_degree_three() {
        let r2 = 2.0f64.sqrt();
        let rule = QuadratureRule::new(
            WeightFunction::Laguerre { alpha: 0.0 },
            2,
            vec![2.0 - r2, 2.0 + r2],
            vec![(2.0 + r2) / 4.0, (2.0 - r2) / 4.0],
            false,
        )
        .unwrap();
        assert!(rule.moment_residual(3).unwrap() <= 1e-15);
        assert!(matches!(
            rule.moment_residual(4),
            Err(Error::OutOfExactness { degree: 4, max: 3 })
        ));
    }

    #[test]
    fn non_finite_integrand_reports_index() {
        let rule = QuadratureRule::new(
            WeightFunction::Jacobi { alpha: 0.0, beta: 0.0 },
            2,
            vec![-0.5, 0.5],
            vec![1.0, 1.0],
            false,
        )
        .unwrap();
        let err = rule.apply(|x| if x > 0.0 { f64::NAN } else { 1.0 }).unwrap_err();
        assert!(matches!(err, Error::Evaluation { index: 2, .. }));
    }

    #[test]
    fn rejects_unsorted_and_out_of_support() {
        let w = WeightFunction::Jacobi { alpha: 0.0, beta: 0.0 };
        assert!(QuadratureRule::new(w, 2, vec![0.5, -0.5], vec![1.0, 1.0], false).is_err());
        assert!(QuadratureRule::new(w, 2, vec![-0.5, 1.5], vec![1.0, 1.0], false).is_err());
        assert!(QuadratureRule::new(w, 2, vec![-0.5, 0.5], vec![1.0, -1.0], false).is_err());
        let lag = WeightFunction::Laguerre { alpha: -1.0 };
        assert!(QuadratureRule::new(lag, 1, vec![1.0], vec![1.0], false).is_err());
    }

    #[test]
    fn total_masses() {
        assert_abs_diff_eq!(WeightFunction::Laguerre { alpha: 0.0 }.total_mass(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(
            WeightFunction::Jacobi { alpha: 0.0, beta: 0.0 }.total_mass(),
            2.0,
            epsilon = 1e-15
        );
        // Chebyshev weight: pi
        assert_abs_diff_eq!(
            WeightFunction::Jacobi { alpha: -0.5, beta: -0.5 }.total_mass(),
            PI,
            epsilon = 1e-14
        );
    }

    #[test]
    fn jacobi_moments_match_legendre() {
        let w = WeightFunction::Jacobi { alpha: 0.0, beta: 0.0 };
        for j in 0..12 {
            let exact = if j % 2 == 1 { 0.0 } else { 2.0 / (j as f64 + 1.0) };
            assert_abs_diff_eq!(w.moment(j), exact, epsilon = 1e-15);
        }
        // Chebyshev: pi (2i-1)!!/(2i)!!
        let c = WeightFunction::Jacobi { alpha: -0.5, beta: -0.5 };
        assert_abs_diff_eq!(c.moment(4), PI * 3.0 / 8.0, epsilon = 1e-14);
    }

    #[test]
    fn hermite_and_laguerre_moments() {
        assert_abs_diff_eq!(WeightFunction::Hermite.moment(2), PI.sqrt() / 2.0, epsilon = 1e-15);
        assert_eq!(WeightFunction::Hermite.moment(3), 0.0);
        assert_abs_diff_eq!(WeightFunction::Laguerre { alpha: 0.0 }.moment(3), 6.0, epsilon = 1e-14);
    }
}
