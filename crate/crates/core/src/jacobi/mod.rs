//! Gauss–Jacobi rules for `(1-x)^alpha (1+x)^beta`, optionally times an
//! analytic positive modifier `h(x)`.
//!
//! Nodes are indexed in ascending order. The first `kL` come from
//! Bessel-zero expansions around `x = -1`, the last ones from the same
//! expansions with `alpha` and `beta` interchanged and the sign of `x`
//! flipped, and everything in between from trigonometric bulk expansions.
//! Classical rules are always built for `alpha <= beta` and reflected when
//! needed, so swapping the parameters mirrors the rule bit for bit.

mod expansions;
mod modified;

use std::f64::consts::PI;

use crate::error::{param, Result};
use crate::oracle;
use crate::par::map_range;
use crate::rule::{QuadratureRule, Warning, WeightFunction};
use crate::specfun::{besselj, besselj_zero};
use expansions::{horner, Brackets};

pub use crate::rule::{Method, Point};
pub use expansions::{BULK_NODE_TERMS, BULK_WEIGHT_TERMS, EDGE_NODE_TERMS, EDGE_WEIGHT_TERMS};
pub use modified::{
    contour_cd, gauss_jacobi_modified, h_series_at, modified_bulk_point, modified_left_edge_point,
    t_bulk_modified, Endpoint, Modifier, ModifiedCoefficients, Reflected, MODIFIED_TERMS,
};

/// Up to this size the oracle is used unless the caller forces otherwise.
pub const ORACLE_MAX_N: usize = 300;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct JacobiOptions {
    /// Override the heuristic number of expansion terms.
    pub terms: Option<usize>,
    pub method: Method,
}

/// Term count and region boundaries for an n-point rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JacobiPlan {
    pub terms: usize,
    /// Last index handled by the left-edge expansion.
    pub k_left: usize,
    /// Last index handled by the bulk expansion; the right edge mirrors the
    /// left one.
    pub k_right: usize,
    /// Last index whose weight comes from the edge expansion. The four
    /// published edge weight terms lose to the bulk weight well before the
    /// edge nodes do.
    pub k_weight: usize,
}

pub fn plan(n: usize) -> Result<JacobiPlan> {
    if n < 2 {
        return Err(param(format!("the three-region plan needs n >= 2, got {n}")));
    }
    let nf = n as f64;
    let k_left = nf.sqrt().ceil() as usize;
    Ok(JacobiPlan {
        terms: (50.0 / nf.ln()).ceil() as usize,
        k_left,
        k_right: n - k_left,
        k_weight: (nf.powf(0.45).floor() as usize).min(k_left),
    })
}

/// Leading-order bulk root `cos(pi (4n - 4k + 2 alpha + 3) / (4n + 2 alpha + 2 beta + 2))`.
pub fn t_bulk(n: usize, alpha: f64, beta: f64, k: usize) -> f64 {
    bulk_angle(n, alpha, beta, k).cos()
}

pub(crate) fn bulk_angle(n: usize, alpha: f64, beta: f64, k: usize) -> f64 {
    let nf = n as f64;
    let num = 4.0 * (nf - k as f64) + 2.0 * alpha + 3.0;
    PI * num / (4.0 * nf + 2.0 * alpha + 2.0 * beta + 2.0)
}

/// A bulk parameter with `1 - t` and `1 + t` kept separately so that
/// neither loses digits near the ends of the interval.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Param {
    pub t: f64,
    pub one_minus: f64,
    pub one_plus: f64,
}

impl Param {
    pub fn from_angle(theta: f64) -> Self {
        let (s, c) = (0.5 * theta).sin_cos();
        Param {
            t: theta.cos(),
            one_minus: 2.0 * s * s,
            one_plus: 2.0 * c * c,
        }
    }

    pub fn from_t(t: f64) -> Self {
        Param {
            t,
            one_minus: 1.0 - t,
            one_plus: 1.0 + t,
        }
    }

    pub fn sin2(&self) -> f64 {
        self.one_minus * self.one_plus
    }
}

/// Node with the distances to both endpoints, and its weight.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Located {
    pub node: f64,
    pub one_minus: f64,
    pub one_plus: f64,
    pub weight: f64,
}

impl Located {
    fn reflect(self) -> Self {
        Located {
            node: -self.node,
            one_minus: self.one_plus,
            one_plus: self.one_minus,
            weight: self.weight,
        }
    }

    fn point(self) -> Point {
        Point {
            node: self.node,
            weight: self.weight,
        }
    }
}

pub(crate) struct Classical {
    n: usize,
    alpha: f64,
    beta: f64,
    big_n: f64,
    brackets: Brackets,
}

impl Classical {
    pub fn new(n: usize, alpha: f64, beta: f64) -> Self {
        Classical {
            n,
            alpha,
            beta,
            big_n: 2.0 * n as f64 + alpha + beta + 1.0,
            brackets: Brackets::new(alpha, beta),
        }
    }

    pub fn left_edge(&self, k: usize, terms: usize) -> Result<Located> {
        let j = besselj_zero(self.beta, k)?;
        let u = j * j;
        let r = 1.0 / (self.big_n * self.big_n);
        let node_terms = terms.clamp(1, EDGE_NODE_TERMS);
        let mut offset = 0.0;
        for c in self.brackets.edge_node[..node_terms].iter().rev() {
            offset = r * (horner(c, u) + offset);
        }
        let weight_terms = terms.clamp(1, EDGE_WEIGHT_TERMS);
        let mut bracket = 0.0;
        for c in self.brackets.edge_weight[..weight_terms - 1].iter().rev() {
            bracket = r * (horner(c, u) + bracket);
        }
        // J_{beta-1} = -J_{beta+1} at a zero of J_beta
        let jp = besselj(self.beta + 1.0, j);
        let ratio = 8.0 * r / (jp * jp) * (1.0 + bracket);
        let one_minus = 2.0 - offset;
        let weight = ratio * (self.alpha * one_minus.ln() + self.beta * offset.ln()).exp();
        Ok(Located {
            node: offset - 1.0,
            one_minus,
            one_plus: offset,
            weight,
        })
    }

    pub fn bulk(&self, p: Param, terms: usize) -> Located {
        let nn = self.big_n;
        let r = 1.0 / (nn * nn);
        let s = p.sin2();
        let t = p.t;

        let node_terms = terms.clamp(1, BULK_NODE_TERMS);
        let mut corr = 0.0;
        for (i, c) in self.brackets.bulk_node[..node_terms - 1].iter().enumerate().rev() {
            corr = r * (horner(c, t) / s.powi(i as i32) + corr);
        }

        let weight_terms = terms.clamp(1, BULK_WEIGHT_TERMS);
        let powers = [0, 2, 3];
        let mut bracket = 0.0;
        for (i, c) in self.brackets.bulk_weight[..weight_terms - 1].iter().enumerate().rev() {
            bracket = r * (horner(c, t) / s.powi(powers[i]) + bracket);
        }
        let ratio = PI / nn * (2.0 + bracket);

        let one_minus = p.one_minus - corr;
        let one_plus = p.one_plus + corr;
        // sqrt(1 - t^2) is folded into the endpoint powers
        let ln_factor = (self.alpha * one_minus.ln() + 0.5 * p.one_minus.ln())
            + (self.beta * one_plus.ln() + 0.5 * p.one_plus.ln());
        Located {
            node: t + corr,
            one_minus,
            one_plus,
            weight: ratio * ln_factor.exp(),
        }
    }

    pub fn bulk_at(&self, k: usize, terms: usize) -> Located {
        let theta = bulk_angle(self.n, self.alpha, self.beta, k);
        self.bulk(Param::from_angle(theta), terms)
    }
}

fn check_params(alpha: f64, beta: f64) -> Result<()> {
    WeightFunction::Jacobi { alpha, beta }.validate()
}

fn check_index(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(param(format!("index {k} outside 1..={n}")));
    }
    Ok(())
}

/// Node and weight for small `k` from the expansion around `x = -1`.
pub fn left_edge_point(n: usize, alpha: f64, beta: f64, k: usize, terms: usize) -> Result<Point> {
    check_params(alpha, beta)?;
    check_index(n, k)?;
    Ok(Classical::new(n, alpha, beta).left_edge(k, terms)?.point())
}

/// Node and weight from a bulk parameter `t` in `(-1, 1)`.
pub fn bulk_point(n: usize, alpha: f64, beta: f64, t: f64, terms: usize) -> Result<Point> {
    check_params(alpha, beta)?;
    if !(t > -1.0 && t < 1.0) {
        return Err(param(format!("bulk parameter must lie in (-1, 1), got {t}")));
    }
    Ok(Classical::new(n, alpha, beta)
        .bulk(Param::from_t(t), terms)
        .point())
}

/// Node and weight `n + 1 - k` near `x = 1`: the left-edge point of the
/// problem with `alpha` and `beta` interchanged, reflected.
pub fn right_edge_point(n: usize, alpha: f64, beta: f64, k: usize, terms: usize) -> Result<Point> {
    check_params(alpha, beta)?;
    check_index(n, k)?;
    Ok(Classical::new(n, beta, alpha)
        .left_edge(k, terms)?
        .reflect()
        .point())
}

fn parameter_warnings(n: usize, alpha: f64, beta: f64) -> Vec<Warning> {
    if alpha * alpha + beta * beta >= n as f64 {
        vec![Warning::LargeJacobiParameters { alpha, beta, n }]
    } else {
        Vec::new()
    }
}

fn resolve_terms(
    requested: Option<usize>,
    heuristic: usize,
    available: usize,
    warnings: &mut Vec<Warning>,
) -> Result<usize> {
    match requested {
        Some(0) => Err(param("at least one expansion term is needed")),
        Some(t) if t > available => {
            warnings.push(Warning::TermsClamped {
                requested: t,
                used: available,
            });
            Ok(available)
        }
        Some(t) => Ok(t),
        None => Ok(heuristic),
    }
}

/// Ascending points of the classical rule for `alpha <= beta`.
fn asymptotic_points(n: usize, alpha: f64, beta: f64, terms: usize) -> Result<Vec<Located>> {
    let plan = plan(n)?;
    let left = Classical::new(n, alpha, beta);
    let right = Classical::new(n, beta, alpha);
    // With an exponent of +-1/2 the endpoint is regular for the bulk
    // expansion, which then beats the Bessel one right up to the edge.
    let k_left = if beta * beta == 0.25 { 0 } else { plan.k_left };
    let k_right = if alpha * alpha == 0.25 { n } else { plan.k_right };
    let edge = |side: &Classical, i: usize| -> Result<Located> {
        let mut p = side.left_edge(i, terms)?;
        if i > plan.k_weight {
            p.weight = side.bulk_at(i, terms).weight;
        }
        Ok(p)
    };
    map_range(1, n + 1, |k| {
        if k <= k_left {
            edge(&left, k)
        } else if k <= k_right {
            Ok(left.bulk_at(k, terms))
        } else {
            Ok(edge(&right, n + 1 - k)?.reflect())
        }
    })
    .into_iter()
    .collect()
}

/// Replaces the upper half by the mirror image of the lower half.
fn mirror(nodes: &mut [f64], weights: &mut [f64]) {
    let n = nodes.len();
    for i in 0..n / 2 {
        nodes[n - 1 - i] = -nodes[i];
        weights[n - 1 - i] = weights[i];
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
}

fn reflect(nodes: &mut [f64], weights: &mut [f64]) {
    nodes.reverse();
    weights.reverse();
    for x in nodes.iter_mut() {
        *x = -*x;
    }
}

/// An n-point Gauss–Jacobi rule for `(1-x)^alpha (1+x)^beta`.
///
/// Uses the oracle for `n <= 300` (see [`ORACLE_MAX_N`]) and the expansions
/// above. The rule is mirror symmetric when `alpha == beta`.
pub fn gauss_jacobi(n: usize, alpha: f64, beta: f64, options: JacobiOptions) -> Result<QuadratureRule> {
    check_params(alpha, beta)?;
    if n == 0 {
        return Err(param("n must be at least 1"));
    }
    let mut warnings = parameter_warnings(n, alpha, beta);
    let use_oracle = match options.method {
        Method::Oracle => true,
        Method::Asymptotic => false,
        Method::Auto => n <= ORACLE_MAX_N,
    };

    let flip = alpha > beta;
    let (lo, hi) = if flip { (beta, alpha) } else { (alpha, beta) };
    let (mut nodes, mut weights) = if use_oracle {
        let rule = oracle::gauss_rule(WeightFunction::Jacobi { alpha: lo, beta: hi }, n, false)?;
        warnings.extend(rule.warnings().iter().cloned());
        (rule.nodes().to_vec(), rule.weights().to_vec())
    } else {
        let heuristic = plan(n)?.terms;
        let terms = resolve_terms(options.terms, heuristic, EDGE_NODE_TERMS, &mut warnings)?;
        asymptotic_points(n, lo, hi, terms)?
            .into_iter()
            .map(|p| (p.node, p.weight))
            .unzip()
    };
    if lo == hi {
        mirror(&mut nodes, &mut weights);
    }
    if flip {
        reflect(&mut nodes, &mut weights);
    }
    let weight = WeightFunction::Jacobi { alpha, beta };
    Ok(QuadratureRule::new(weight, n, nodes, weights, false)?.with_warnings(warnings))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const BETA: f64 = -0.4472135954999579;

    fn asymptotic() -> JacobiOptions {
        JacobiOptions {
            method: Method::Asymptotic,
            ..Default::default()
        }
    }

    #[test]
    fn plan_for_400() {
        let p = plan(400).unwrap();
        assert_eq!(p, JacobiPlan { terms: 9, k_left: 20, k_right: 380, k_weight: 14 });
    }

    #[test]
    fn chebyshev_bulk_root() {
        let n = 301;
        for k in [20, 150, 151, 280] {
            let expected = ((2 * (n - k) + 1) as f64 * PI / (2 * n) as f64).cos();
            assert_relative_eq!(t_bulk(n, -0.5, -0.5, k), expected, epsilon = 1e-15);
        }
        let t = t_bulk(300, 0.0, 0.0, 150);
        assert_relative_eq!(t, (PI * 603.0 / 1202.0).cos(), epsilon = 1e-16);
    }

    #[test]
    fn bulk_roots_increase() {
        let ts: Vec<f64> = (1..=300).map(|k| t_bulk(300, 0.42, BETA, k)).collect();
        assert!(ts.windows(2).all(|w| w[0] < w[1]));
        assert!(ts[0] > -1.0 && ts[299] < 1.0);
    }

    #[test]
    fn leading_edge_term() {
        let (n, a, b) = (400usize, 0.42, BETA);
        let j = besselj_zero(b, 3).unwrap();
        let big_n = 2.0 * n as f64 + a + b + 1.0;
        let p = left_edge_point(n, a, b, 3, 1).unwrap();
        assert_relative_eq!(p.node + 1.0, 2.0 * j * j / (big_n * big_n), max_relative = 1e-13);
    }

    #[test]
    fn second_bulk_term() {
        let (n, a, b, t) = (400usize, 0.42, BETA, 0.3);
        let big_n = 2.0 * n as f64 + a + b + 1.0;
        let (a2, b2) = (a * a, b * b);
        let expected = t + (2.0 * a2 - 2.0 * b2 + (2.0 * a2 + 2.0 * b2 - 1.0) * t) / (2.0 * big_n * big_n);
        let p = bulk_point(n, a, b, t, 2).unwrap();
        assert_relative_eq!(p.node, expected, max_relative = 1e-16);
    }

    #[test]
    fn chebyshev_edge_nodes() {
        let n = 400;
        for k in 1..=20 {
            let p = left_edge_point(n, -0.5, -0.5, k, 5).unwrap();
            let exact = -((2 * k - 1) as f64 * PI / (2 * n) as f64).cos();
            assert!((p.node - exact).abs() <= 1e-13, "k = {k}");
        }
    }

    #[test]
    fn chebyshev_bulk_is_exact() {
        let n = 400;
        for k in 21..380 {
            let t = t_bulk(n, -0.5, -0.5, k);
            let p = bulk_point(n, -0.5, -0.5, t, 5).unwrap();
            assert_eq!(p.node, t);
        }
    }

    #[test]
    fn one_point_legendre() {
        let rule = gauss_jacobi(1, 0.0, 0.0, JacobiOptions::default()).unwrap();
        assert_eq!(rule.nodes(), &[0.0]);
        assert_relative_eq!(rule.weights()[0], 2.0, max_relative = 1e-15);
    }

    #[test]
    fn matches_oracle_at_400() {
        let (n, a, b) = (400, 0.42, BETA);
        let fast = gauss_jacobi(n, a, b, asymptotic()).unwrap();
        let exact = oracle::gauss_rule(WeightFunction::Jacobi { alpha: a, beta: b }, n, false).unwrap();
        for k in 0..n {
            let dx = (fast.nodes()[k] - exact.nodes()[k]).abs();
            let dw = (fast.weights()[k] / exact.weights()[k] - 1.0).abs();
            assert!(dx <= 1e-13, "node {} off by {dx:e}", k + 1);
            assert!(dw <= 1e-12, "weight {} off by {dw:e}", k + 1);
        }
    }

    #[test]
    fn swapping_parameters_mirrors_bitwise() {
        for method in [Method::Asymptotic, Method::Oracle] {
            let opts = JacobiOptions { method, ..Default::default() };
            let r1 = gauss_jacobi(350, 0.42, BETA, opts).unwrap();
            let r2 = gauss_jacobi(350, BETA, 0.42, opts).unwrap();
            for k in 0..350 {
                assert_eq!(r1.nodes()[k], -r2.nodes()[349 - k]);
                assert_eq!(r1.weights()[k], r2.weights()[349 - k]);
            }
        }
    }

    #[test]
    fn symmetric_weight_gives_symmetric_rule() {
        for n in [301, 302] {
            let rule = gauss_jacobi(n, 0.3, 0.3, JacobiOptions::default()).unwrap();
            for k in 0..n {
                assert_eq!(rule.nodes()[k], -rule.nodes()[n - 1 - k]);
                assert_eq!(rule.weights()[k], rule.weights()[n - 1 - k]);
            }
        }
    }

    #[test]
    fn seams_are_continuous() {
        let (n, a, b) = (400, 0.42, BETA);
        let p = plan(n).unwrap();
        let c = Classical::new(n, a, b);
        let edge = c.left_edge(p.k_left, p.terms).unwrap();
        let bulk = c.bulk_at(p.k_left, p.terms);
        assert!((edge.node - bulk.node).abs() <= 1e-10);
        let swapped = Classical::new(n, b, a);
        let edge = swapped.left_edge(n - p.k_right, p.terms).unwrap().reflect();
        let bulk = c.bulk_at(p.k_right + 1, p.terms);
        assert!((edge.node - bulk.node).abs() <= 1e-10);
    }

    #[test]
    fn warns_for_large_parameters() {
        let rule = gauss_jacobi(10, 3.0, 2.0, JacobiOptions::default()).unwrap();
        assert!(matches!(rule.warnings()[0], Warning::LargeJacobiParameters { .. }));
        assert!(gauss_jacobi(10, -1.0, 0.0, JacobiOptions::default()).is_err());
        assert!(gauss_jacobi(0, 0.0, 0.0, JacobiOptions::default()).is_err());
    }
}
