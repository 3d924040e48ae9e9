//! Reference rules: Golub–Welsch eigenvalues polished by Newton's method on
//! the three-term recurrence in double-double arithmetic.
//!
//! This is O(n^2) and intended for n up to a few thousand. The family
//! builders use it below their asymptotic thresholds; tests use it as the
//! ground truth for the expansions.

mod lanczos;
mod recurrence;
mod refine;
mod tridiag;

pub use tridiag::SymTridiagonal;

use crate::error::{param, Error, Result};
use crate::rule::{QuadratureRule, Warning, WeightFunction};
use recurrence::Recurrence;
use refine::{refine_nodes, Refined};

/// The symmetrized Jacobi matrix of an n-point rule.
pub fn recurrence(weight: WeightFunction, n: usize) -> Result<SymTridiagonal> {
    if n == 0 {
        return Err(param("n must be at least 1"));
    }
    Ok(matrix(&Recurrence::classical(weight, n)?))
}

fn matrix(rec: &Recurrence) -> SymTridiagonal {
    let n = rec.n();
    SymTridiagonal {
        diag: rec.a.iter().map(|a| a.to_f64()).collect(),
        offdiag: rec.b[1..n].iter().map(|b| b.sqrt().to_f64()).collect(),
        mu0: rec.ln_mu0.exp(),
    }
}

/// Nodes and weights from the eigen-decomposition alone.
pub fn golub_welsch(t: &SymTridiagonal, weight: WeightFunction) -> Result<QuadratureRule> {
    let n = t.diag.len();
    if n == 0 {
        return Err(param("empty matrix"));
    }
    if t.offdiag.iter().any(|&e| !(e > 0.0)) {
        return Err(param("off-diagonal entries must be positive"));
    }
    let (nodes, z2) = tridiag::eigen_first_components(t)?;
    let weights = z2.into_iter().map(|z| t.mu0 * z).collect();
    QuadratureRule::new(weight, n, nodes, weights, false)
}

/// Newton-polishes the nodes of `rule` and recomputes its weights.
pub fn refine(rule: &QuadratureRule) -> Result<QuadratureRule> {
    if rule.is_modified() {
        return Err(param("refine needs a classical weight"));
    }
    if rule.len() != rule.n() {
        return Err(param("refine needs all n nodes"));
    }
    let rec = Recurrence::classical(rule.weight_function(), rule.n())?;
    let refined = refine_nodes(&rec, rule.nodes());
    assemble(rule.weight_function(), rule.n(), refined, rule.is_scaled())
}

/// Golub–Welsch followed by refinement.
pub fn gauss_rule(weight: WeightFunction, n: usize, scaled: bool) -> Result<QuadratureRule> {
    if n == 0 {
        return Err(param("n must be at least 1"));
    }
    if scaled && !matches!(weight, WeightFunction::Laguerre { .. }) {
        return Err(param("only Laguerre rules can be scaled"));
    }
    let rec = Recurrence::classical(weight, n)?;
    solve(&rec, weight, scaled)
}

fn solve(rec: &Recurrence, weight: WeightFunction, scaled: bool) -> Result<QuadratureRule> {
    let (nodes, _) = tridiag::eigen_first_components(&matrix(rec))?;
    let refined = refine_nodes(rec, &nodes);
    assemble(weight, rec.n(), refined, scaled)
}

fn assemble(
    weight: WeightFunction,
    n: usize,
    refined: Refined,
    scaled: bool,
) -> Result<QuadratureRule> {
    let Refined {
        nodes,
        ln_weights,
        unrefined,
    } = refined;
    let weights: Vec<f64> = if scaled {
        nodes.iter().zip(&ln_weights).map(|(&x, &lw)| (lw + x).exp()).collect()
    } else {
        ln_weights.iter().map(|&lw| lw.exp()).collect()
    };
    let mut warnings = Vec::new();
    let underflowed = weights.iter().filter(|&&w| w == 0.0).count();
    if underflowed > 0 {
        warnings.push(Warning::WeightsUnderflowed { count: underflowed });
    }
    if unrefined > 0 {
        warnings.push(Warning::UnrefinedNodes { count: unrefined });
    }
    Ok(QuadratureRule::new(weight, n, nodes, weights, scaled)?.with_warnings(warnings))
}

/// Reference rule for `(1-x)^alpha (1+x)^beta h(x)`.
///
/// The weight is discretized with an M-point classical rule, `M = max(2n, n + 100)`,
/// whose recurrence is recovered by a stable Lanczos process and then solved
/// as above.
pub fn modified_jacobi_rule<H: Fn(f64) -> f64>(
    alpha: f64,
    beta: f64,
    h: H,
    n: usize,
) -> Result<QuadratureRule> {
    if n == 0 {
        return Err(param("n must be at least 1"));
    }
    let weight = WeightFunction::Jacobi { alpha, beta };
    let m = (2 * n).max(n + 100);
    let base = gauss_rule(weight, m, false)?;
    let mut weights = Vec::with_capacity(m);
    for (i, (x, w)) in base.iter().enumerate() {
        let hx = h(x);
        if !(hx > 0.0 && hx.is_finite()) {
            return Err(Error::Evaluation {
                index: i + 1,
                node: x,
                value: hx,
            });
        }
        weights.push(w * hx);
    }
    let (a, b) = lanczos::lanczos(base.nodes(), &weights, n);
    let rec = Recurrence::from_f64(&a, &b, b[0])?;
    Ok(solve(&rec, weight, false)?.mark_modified())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn laguerre_matrix() {
        let t = recurrence(WeightFunction::Laguerre { alpha: 0.0 }, 2).unwrap();
        assert_eq!(t.diag, vec![1.0, 3.0]);
        assert_eq!(t.offdiag, vec![1.0]);
    }

    #[test]
    fn hermite_and_legendre_matrices() {
        let h = recurrence(WeightFunction::Hermite, 2).unwrap();
        assert_eq!(h.diag, vec![0.0, 0.0]);
        assert_abs_diff_eq!(h.offdiag[0], 0.5f64.sqrt(), epsilon = 1e-16);
        let l = recurrence(WeightFunction::Jacobi { alpha: 0.0, beta: 0.0 }, 2).unwrap();
        assert_eq!(l.diag, vec![0.0, 0.0]);
        assert_abs_diff_eq!(l.offdiag[0], (1.0f64 / 3.0).sqrt(), epsilon = 1e-16);
    }

    #[test]
    fn two_point_laguerre_golub_welsch() {
        let w = WeightFunction::Laguerre { alpha: 0.0 };
        let rule = golub_welsch(&recurrence(w, 2).unwrap(), w).unwrap();
        let r2 = 2f64.sqrt();
        assert_abs_diff_eq!(rule.nodes()[0], 2.0 - r2, epsilon = 1e-15);
        assert_abs_diff_eq!(rule.nodes()[1], 2.0 + r2, epsilon = 1e-15);
        assert_abs_diff_eq!(rule.weights()[0], (2.0 + r2) / 4.0, epsilon = 1e-15);
        assert_abs_diff_eq!(rule.weights()[1], (2.0 - r2) / 4.0, epsilon = 1e-15);
    }

    #[test]
    fn one_point_legendre() {
        let w = WeightFunction::Jacobi { alpha: 0.0, beta: 0.0 };
        let rule = gauss_rule(w, 1, false).unwrap();
        assert_eq!(rule.nodes(), &[0.0]);
        assert_abs_diff_eq!(rule.weights()[0], 2.0, epsilon = 1e-15);
    }

    #[test]
    fn three_point_hermite() {
        let rule = gauss_rule(WeightFunction::Hermite, 3, false).unwrap();
        let s = 1.5f64.sqrt();
        let sp = std::f64::consts::PI.sqrt();
        assert_abs_diff_eq!(rule.nodes()[0], -s, epsilon = 1e-15);
        assert_abs_diff_eq!(rule.nodes()[1], 0.0, epsilon = 1e-16);
        assert_abs_diff_eq!(rule.weights()[0], sp / 6.0, epsilon = 1e-15);
        assert_abs_diff_eq!(rule.weights()[1], 2.0 * sp / 3.0, epsilon = 1e-15);
    }

    #[test]
    fn refine_keeps_exact_two_point_nodes() {
        let r2 = 2f64.sqrt();
        let w = WeightFunction::Laguerre { alpha: 0.0 };
        let exact = QuadratureRule::new(w, 2, vec![2.0 - r2, 2.0 + r2], vec![0.8, 0.2], false).unwrap();
        let refined = refine(&exact).unwrap();
        for (a, b) in refined.nodes().iter().zip(exact.nodes()) {
            assert!((a - b).abs() <= f64::EPSILON * b.abs());
        }
    }

    #[test]
    fn legendre_middle_node_is_zero() {
        let rule = gauss_rule(WeightFunction::Jacobi { alpha: 0.0, beta: 0.0 }, 5, false).unwrap();
        assert!(rule.nodes()[2].abs() <= 1e-16);
    }

    #[test]
    fn modified_with_unit_factor_matches_classical() {
        let (a, b) = (0.3, -0.2);
        let classical = gauss_rule(WeightFunction::Jacobi { alpha: a, beta: b }, 20, false).unwrap();
        let modified = modified_jacobi_rule(a, b, |_| 1.0, 20).unwrap();
        for (x, y) in classical.nodes().iter().zip(modified.nodes()) {
            assert_abs_diff_eq!(x, y, epsilon = 1e-13);
        }
        for (x, y) in classical.weights().iter().zip(modified.weights()) {
            assert_abs_diff_eq!(x, y, epsilon = 1e-13);
        }
    }
}
