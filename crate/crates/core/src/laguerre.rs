//! Gauss–Laguerre rules for `x^alpha e^{-x}` on `(0, inf)`.
//!
//! Nodes with small index come from Bessel-zero expansions (hard edge at 0),
//! the middle from a transcendental equation for `t_k` plus corrections in
//! `1/(1-t_k)` (bulk), and the largest from Airy-zero expansions (soft edge
//! near `4n`). Every coefficient is a polynomial in `alpha` evaluated once per
//! rule.

use std::f64::consts::PI;

use crate::error::{param, Error, Result};
use crate::oracle;
use crate::par::map_range;
pub use crate::rule::{Method, Point};
use crate::rule::{QuadratureRule, Warning, WeightFunction};
use crate::specfun::{airy_prime_at_zero, airy_zero, besselj, besselj_zero};

/// Below this size the oracle is used unless the caller forces otherwise.
pub const ASYMPTOTIC_THRESHOLD: usize = 128;

pub const HARD_EDGE_TERMS: usize = 5;
pub const BULK_NODE_TERMS: usize = 5;
pub const BULK_WEIGHT_TERMS: usize = 4;
pub const SOFT_EDGE_TERMS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LaguerreOptions {
    /// Store `w_k e^{x_k}` instead of `w_k`.
    pub scaled: bool,
    /// Compute every node, including those whose weight underflows.
    pub all_nodes: bool,
    /// Override the heuristic number of expansion terms.
    pub terms: Option<usize>,
    pub method: Method,
}

/// Per-n choices: term count and region boundaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RulePlan {
    pub terms: usize,
    /// Last index handled by the hard-edge expansion.
    pub k_left: usize,
    /// Nominal start of the soft-edge region.
    pub k_right: usize,
    /// First index whose node comes from the Airy expansion. Its error
    /// depends on `(n - k)/n^{2/3}` while the bulk error depends on `n - k`
    /// alone, so the bulk reaches much closer to the end than `k_right`.
    pub k_soft: usize,
    /// Last index whose weight is representable in double precision.
    pub k_max: usize,
}

pub fn plan(n: usize) -> Result<RulePlan> {
    if n < 4 {
        return Err(param(format!(
            "the three-region plan needs n >= 4, got {n}"
        )));
    }
    let nf = n as f64;
    let terms = (34.0 / nf.ln()).ceil().max(1.0) as usize;
    let k_left = nf.sqrt().ceil() as usize;
    let k_right = (0.9 * nf).floor() as usize;
    let k_max = n.min((17.0 * nf.sqrt()).floor() as usize);
    let soft_count = ((0.55 * nf.powf(0.3)).floor() as usize).max(1);
    Ok(RulePlan {
        terms,
        k_left,
        k_right,
        k_soft: n + 1 - soft_count,
        k_max,
    })
}

/// Root of the bulk equation and its residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BulkRoot {
    pub t: f64,
    pub residual: f64,
    /// The six Newton steps left a residual above 1e-12.
    pub bisected: bool,
}

/// `F(t) = 2 acos(sqrt t) - 2 sqrt(t - t^2) - p pi`, written with `1 - p`
/// and `asin` so that nothing cancels when `t` is small.
fn bulk_equation(one_minus_p: f64, t: f64) -> f64 {
    PI * one_minus_p - 2.0 * t.sqrt().asin() - 2.0 * (t * (1.0 - t)).sqrt()
}

/// Solves the bulk equation with six Newton steps from
/// `t = (pi^2/16)(p - 1)^2`, falling back to bisection if needed.
pub fn solve_bulk_t(n: usize, alpha: f64, k: usize) -> Result<BulkRoot> {
    if k == 0 || k > n {
        return Err(param(format!("index {k} outside 1..={n}")));
    }
    let big_n = 4.0 * n as f64 + 2.0 * alpha + 2.0;
    let one_minus_p = (4.0 * k as f64 + 2.0 * alpha - 1.0) / big_n;
    if !(one_minus_p > 0.0 && one_minus_p < 1.0) {
        return Err(param(format!("index {k} has no bulk root")));
    }
    solve_t(one_minus_p)
}

fn solve_t(one_minus_p: f64) -> Result<BulkRoot> {
    let mut t = PI * PI / 16.0 * one_minus_p * one_minus_p;
    for _ in 0..6 {
        let f = bulk_equation(one_minus_p, t);
        let df = -2.0 * ((1.0 - t) / t).sqrt();
        let next = t - f / df;
        // F is decreasing on (0, 1); keep iterates inside
        t = if next <= 0.0 {
            0.5 * t
        } else if next >= 1.0 {
            0.5 * (t + 1.0)
        } else {
            next
        };
    }
    let mut residual = bulk_equation(one_minus_p, t);
    let bisected = residual.abs() > 1e-12;
    if bisected {
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if bulk_equation(one_minus_p, mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo <= f64::EPSILON * hi {
                break;
            }
        }
        t = 0.5 * (lo + hi);
        residual = bulk_equation(one_minus_p, t);
        if residual.abs() > 1e-12 {
            return Err(Error::Convergence(format!(
                "bulk equation residual {residual:e} at 1-p = {one_minus_p}"
            )));
        }
    }
    Ok(BulkRoot {
        t,
        residual,
        bisected,
    })
}

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &v| acc * x + v)
}

/// Coefficients that depend only on `alpha`, plus `N = 4n + 2 alpha + 2`.
struct Expansions {
    n: usize,
    alpha: f64,
    big_n: f64,
    // hard edge: node bracket coefficients in powers of j^2
    hard_node: [Vec<f64>; 4],
    hard_weight: [Vec<f64>; 4],
    // bulk: brackets as polynomials in s = 1/(1-t)
    bulk_node: [Vec<f64>; 4],
    bulk_weight: [Vec<f64>; 3],
}

impl Expansions {
    fn new(n: usize, alpha: f64) -> Self {
        let a2 = alpha * alpha;
        let a4 = a2 * a2;
        let a6 = a4 * a2;
        let a8 = a4 * a4;
        let big_n = 4.0 * n as f64 + 2.0 * alpha + 2.0;

        // x = (j^2/N) (1 + r (h1 + r (h2 + r (h3 + r h4)))) with r = 1/N^2
        let h1 = vec![(2.0 * a2 - 2.0) / 3.0, 1.0 / 3.0];
        let h2 = vec![
            (46.0 * a4 - 140.0 * a2 + 94.0) / 45.0,
            3.0 * (11.0 * a2 - 19.0) / 45.0,
            11.0 / 45.0,
        ];
        let c3 = 81.0 * 35.0;
        let h3 = vec![
            4.0 * (1493.0 * a6 - 9303.0 * a4 + 19887.0 * a2 - 12077.0) / c3,
            2.0 * (2459.0 * a4 - 10750.0 * a2 + 14051.0) / c3,
            36.0 * (73.0 * a2 - 181.0) / c3,
            657.0 / c3,
        ];
        let c4 = 243.0 * 25.0 * 7.0;
        let h4 = vec![
            2.0 * (107959.0 * a8 - 1146220.0 * a6 + 5095482.0 * a4 - 10087180.0 * a2 + 6029959.0)
                / c4,
            3.0 * (63299.0 * a6 - 507801.0 * a4 + 1678761.0 * a2 - 2201939.0) / c4,
            (125671.0 * a4 - 729422.0 * a2 + 1456807.0) / c4,
            60.0 * (887.0 * a2 - 2879.0) / c4,
            10644.0 / c4,
        ];

        let g1 = vec![2.0 * (a2 - 1.0) / 3.0, 2.0 / 3.0];
        let g2 = vec![
            (46.0 * a4 - 140.0 * a2 + 94.0) / 45.0,
            6.0 * (11.0 * a2 - 19.0) / 45.0,
            33.0 / 45.0,
        ];
        let g3 = vec![
            4.0 * (1493.0 * a6 - 9303.0 * a4 + 19887.0 * a2 - 12077.0) / c3,
            4.0 * (2459.0 * a4 - 10750.0 * a2 + 14051.0) / c3,
            4.0 * 27.0 * (73.0 * a2 - 181.0) / c3,
            4.0 * 657.0 / c3,
        ];
        let g4 = vec![
            (215918.0 * a8 - 2292440.0 * a6 + 10190964.0 * a4 - 20174360.0 * a2 + 12059918.0) / c4,
            6.0 * (63299.0 * a6 - 507801.0 * a4 + 1678761.0 * a2 - 2201939.0) / c4,
            3.0 * (125671.0 * a4 - 729422.0 * a2 + 1456807.0) / c4,
            240.0 * (887.0 * a2 - 2879.0) / c4,
            53220.0 / c4,
        ];

        // bulk node, term 2: -(5 s^2 - 4 s + 12 a^2 - 4) / 12
        let b1 = vec![-(12.0 * a2 - 4.0) / 12.0, 4.0 / 12.0, -5.0 / 12.0];
        // term 3, times (1-t)/(720 t)
        let q = 16.0 * (15.0 * a4 - 30.0 * a2 + 7.0);
        let b2 = vec![2.0 * q, -3.0 * q, -16.0, -576.0, 2814.0, -3815.0, 1600.0];
        // term 4, times -(1-t)^2/(2^6 3^4 35 t^2); (3 + 2t) s = 5 s - 2
        let p6 = 4608.0 * (31.0 - 147.0 * a2 + 105.0 * a4 - 21.0 * a6);
        let b3 = vec![
            -2.0 * p6,
            5.0 * p6,
            384.0 * (-1346.0 + 6405.0 * a2 - 4620.0 * a4 + 945.0 * a6),
            320.0 * (-43.0 + 126.0 * a2 - 63.0 * a4),
            80.0 * (-221.0 - 630.0 * a2 + 315.0 * a4),
            -1727136.0,
            16131880.0,
            -48469876.0,
            175.0 * 379569.0,
            175.0 * -246416.0,
            175.0 * 61700.0,
        ];
        // term 5, times (1-t)^3/(2^8 3^5 5^2 7 t^3)
        let b4 = vec![
            24883200.0 * a8 - 232243200.0 * a6 + 812851200.0 * a4 - 1028505600.0 * a2
                + 210677760.0,
            -5806080.0 * (15.0 * a8 - 140.0 * a6 + 490.0 * a4 - 620.0 * a2 + 127.0),
            768.0 * (143325.0 * a8 - 1324260.0 * a6 + 4613070.0 * a4 - 5826660.0 * a2 + 1193053.0),
            -768.0 * (70875.0 * a8 - 631260.0 * a6 + 2163630.0 * a4 - 2716980.0 * a2 + 555239.0),
            16128.0 * (450.0 * a6 - 2155.0 * a4 + 2960.0 * a2 - 641.0),
            -1792.0 * (3375.0 * a6 - 13905.0 * a4 + 17685.0 * a2 - 1598.0),
            3360.0 * (4521.0 * a4 - 9042.0 * a2 - 7823.0),
            -192.0 * (103425.0 * a4 - 206850.0 * a2 + 15948182.0),
            672.0 * (12000.0 * a4 - 24000.0 * a2 + 64957561.0),
            -212307298152.0,
            518401904799.0,
            -714465642135.0,
            566519158800.0,
            -241928673000.0,
            43222750000.0,
        ];

        // bulk weight, term 2: -(5 s^3 - 2 s^2)/6
        let w1 = vec![0.0, 0.0, 2.0 / 6.0, -5.0 / 6.0];
        // term 3, times (1-t)^2/(720 t^2)
        let w2 = vec![
            0.0,
            0.0,
            16.0 * (15.0 * a4 - 30.0 * a2 + 7.0),
            32.0,
            1712.0,
            -12408.0,
            27517.0,
            -24860.0,
            8000.0,
        ];
        // term 4, times -(1-t)^3/(90720 t^3)
        let w3 = vec![
            0.0,
            0.0,
            2304.0 * (21.0 * a6 - 105.0 * a4 + 147.0 * a2 - 31.0),
            -384.0 * (315.0 * a6 - 1470.0 * a4 + 1995.0 * a2 - 416.0),
            480.0 * (63.0 * a4 - 126.0 * a2 + 43.0),
            -320.0 * (189.0 * a4 - 378.0 * a2 - 89.0),
            80.0 * (315.0 * a4 - 630.0 * a2 + 53752.0),
            -50986344.0,
            201908326.0,
            -386872990.0,
            393326325.0,
            -204917300.0,
            43190000.0,
        ];

        Expansions {
            n,
            alpha,
            big_n,
            hard_node: [h1, h2, h3, h4],
            hard_weight: [g1, g2, g3, g4],
            bulk_node: [b1, b2, b3, b4],
            bulk_weight: [w1, w2, w3],
        }
    }

    fn hard_edge(&self, k: usize, terms: usize, scaled: bool) -> Result<Point> {
        let j = besselj_zero(self.alpha, k)?;
        let j2 = j * j;
        let r = 1.0 / (self.big_n * self.big_n);
        let terms = terms.clamp(1, HARD_EDGE_TERMS);
        let bracket = |c: &[Vec<f64>; 4]| {
            let mut acc = 0.0;
            for i in (0..terms - 1).rev() {
                acc = r * (horner(&c[i], j2) + acc);
            }
            1.0 + acc
        };
        let x = j2 / self.big_n * bracket(&self.hard_node);
        let jp = besselj(self.alpha + 1.0, j);
        let w = 4.0 / (jp * jp * self.big_n) * bracket(&self.hard_weight);
        Ok(Point {
            node: x,
            weight: w * self.weight_factor(x, self.alpha, scaled),
        })
    }

    fn bulk(&self, t: f64, terms: usize, scaled: bool) -> Point {
        let nn = self.big_n;
        let s = 1.0 / (1.0 - t);
        let u = (1.0 - t) / t;
        let node_terms = terms.clamp(1, BULK_NODE_TERMS);
        let scale = [
            1.0 / nn,
            u / (720.0 * nn.powi(3)),
            -u * u / (64.0 * 81.0 * 35.0 * nn.powi(5)),
            u * u * u / (256.0 * 243.0 * 25.0 * 7.0 * nn.powi(7)),
        ];
        let mut x = 0.0;
        for i in (0..node_terms - 1).rev() {
            x += scale[i] * horner(&self.bulk_node[i], s);
        }
        x += nn * t;

        let weight_terms = terms.clamp(1, BULK_WEIGHT_TERMS);
        let wscale = [
            1.0 / (nn * nn),
            u * u / (720.0 * nn.powi(4)),
            -u * u * u / (90720.0 * nn.powi(6)),
        ];
        let mut bracket = 0.0;
        for i in (0..weight_terms - 1).rev() {
            bracket += wscale[i] * horner(&self.bulk_weight[i], s);
        }
        let w = 2.0 * PI * (t / (1.0 - t)).sqrt() * (1.0 + bracket);
        Point {
            node: x,
            weight: w * self.weight_factor(x, self.alpha, scaled),
        }
    }

    fn soft_edge(&self, k: usize, terms: usize, scaled: bool) -> Result<Point> {
        let m = self.n + 1 - k;
        let a = airy_zero(m)?;
        let nn = self.big_n;
        let c = nn.cbrt();
        let two13 = 2f64.cbrt();
        let two23 = two13 * two13;
        let a2 = a * a;
        let a3 = a2 * a;
        let increments = [
            two23 * two23 / 5.0 * a2 / c,
            (11.0 / 35.0 - self.alpha * self.alpha - 12.0 / 175.0 * a3) / nn,
            (16.0 / 1575.0 * a + 92.0 / 7875.0 * a3 * a) * two23 / (nn * c * c),
            -(15152.0 / 3031875.0 * a3 * a2 + 1088.0 / 121275.0 * a2) * two13 / (nn * nn * c),
        ];
        let terms = terms.clamp(1, SOFT_EDGE_TERMS);
        let mut x = 0.0;
        for inc in increments[..terms - 1].iter().rev() {
            x += inc;
        }
        x += nn + two23 * a * c;
        let d = airy_prime_at_zero(m)?;
        let w = two23 / (d * d);
        Ok(Point {
            node: x,
            weight: w * self.weight_factor(x, self.alpha + 1.0 / 3.0, scaled),
        })
    }

    /// `x^power e^{-x}`, or `x^power` when scaled.
    fn weight_factor(&self, x: f64, power: f64, scaled: bool) -> f64 {
        if scaled {
            x.powf(power)
        } else {
            (power * x.ln() - x).exp()
        }
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    WeightFunction::Laguerre { alpha }.validate()
}

/// Node and weight for `1 <= k <= kL` from the Bessel-zero expansion.
pub fn hard_edge_point(n: usize, alpha: f64, k: usize, terms: usize, scaled: bool) -> Result<Point> {
    check_alpha(alpha)?;
    if k == 0 || k > n {
        return Err(param(format!("index {k} outside 1..={n}")));
    }
    Expansions::new(n, alpha).hard_edge(k, terms, scaled)
}

/// Node and weight in the bulk from a root `t` of the bulk equation.
pub fn bulk_point(n: usize, alpha: f64, t: f64, terms: usize, scaled: bool) -> Result<Point> {
    check_alpha(alpha)?;
    if !(t > 0.0 && t < 1.0) {
        return Err(param(format!("bulk root must lie in (0, 1), got {t}")));
    }
    Ok(Expansions::new(n, alpha).bulk(t, terms, scaled))
}

/// Node and weight near the largest zeros from the Airy-zero expansion.
///
/// With `terms = 1` the node is `N + 2^{2/3} a N^{1/3}`; each further term
/// adds the next published correction. The weight is leading order only.
pub fn soft_edge_point(n: usize, alpha: f64, k: usize, terms: usize, scaled: bool) -> Result<Point> {
    check_alpha(alpha)?;
    if k == 0 || k > n {
        return Err(param(format!("index {k} outside 1..={n}")));
    }
    Expansions::new(n, alpha).soft_edge(k, terms, scaled)
}

/// An n-point Gauss–Laguerre rule.
///
/// Without `all_nodes`, indices above the underflow cutoff of the plan are
/// left out, so the rule may hold fewer than n nodes.
pub fn gauss_laguerre(n: usize, alpha: f64, options: LaguerreOptions) -> Result<QuadratureRule> {
    check_alpha(alpha)?;
    if n == 0 {
        return Err(param("n must be at least 1"));
    }
    if options.terms == Some(0) {
        return Err(param("at least one expansion term is needed"));
    }
    let mut warnings = Vec::new();
    if alpha * alpha / n as f64 > 1.0 {
        warnings.push(Warning::LargeAlpha { alpha, n });
    }
    let use_oracle = match options.method {
        Method::Oracle => true,
        Method::Asymptotic => false,
        Method::Auto => n < ASYMPTOTIC_THRESHOLD,
    };
    let weight = WeightFunction::Laguerre { alpha };
    if use_oracle {
        let rule = oracle::gauss_rule(weight, n, options.scaled)?;
        return Ok(rule.with_warnings(warnings));
    }

    let plan = plan(n)?;
    let terms = options.terms.unwrap_or(plan.terms);
    // The soft-edge series is in a N^{-2/3}, not in 1/n, so the heuristic
    // count does not apply there.
    let soft_terms = options.terms.unwrap_or(SOFT_EDGE_TERMS);
    if let Some(requested) = options.terms {
        if requested > HARD_EDGE_TERMS {
            warnings.push(Warning::TermsClamped {
                requested,
                used: HARD_EDGE_TERMS,
            });
        }
    }
    let last = if options.all_nodes { n } else { plan.k_max };
    let exp = Expansions::new(n, alpha);
    let points = map_range(1, last + 1, |k| {
        if k <= plan.k_left {
            exp.hard_edge(k, terms, options.scaled)
        } else if k < plan.k_soft {
            let root = solve_bulk_t(n, alpha, k)?;
            Ok(exp.bulk(root.t, terms, options.scaled))
        } else {
            let mut p = exp.soft_edge(k, soft_terms, options.scaled)?;
            // the Airy weight is leading order only; the bulk one is better
            // everywhere but at the last node
            if k < n {
                let root = solve_bulk_t(n, alpha, k)?;
                p.weight = exp.bulk(root.t, terms, options.scaled).weight;
            }
            Ok(p)
        }
    });
    let mut nodes = Vec::with_capacity(last);
    let mut weights = Vec::with_capacity(last);
    for p in points {
        let p = p?;
        nodes.push(p.node);
        weights.push(p.weight);
    }
    let underflowed = weights.iter().filter(|&&w| w == 0.0).count();
    if underflowed > 0 {
        warnings.push(Warning::WeightsUnderflowed { count: underflowed });
    }
    Ok(QuadratureRule::new(weight, n, nodes, weights, options.scaled)?.with_warnings(warnings))
}
