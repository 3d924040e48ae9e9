//! Modified Jacobi weights `(1-x)^alpha (1+x)^beta h(x)`.
//!
//! The modifier enters through contour integrals of `log h` around
//! `[-1, 1]`. With `zeta = (w + 1/w)/2` the contour becomes the circle
//! `|w| = rho`, `d zeta / sqrt(zeta^2 - 1)` becomes `dw / w`, and each
//! integral is the mean of `log h(zeta) g(zeta)` over that circle, which the
//! trapezoidal rule computes with geometric convergence.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use super::{bulk_angle, check_index, check_params, plan, resolve_terms, Located, Param, ORACLE_MAX_N};
use super::expansions::horner;
use crate::error::{param, Error, Result};
use crate::oracle;
use crate::par::map_range;
use crate::rule::{Method, Point, QuadratureRule, WeightFunction};
use crate::specfun::{besselj, besselj_zero};
use super::JacobiOptions;

/// Published terms for nodes and weights of the modified expansions.
pub const MODIFIED_TERMS: usize = 3;

const DEFAULT_RHO_MAX: f64 = 2.0;
const FIRST_SAMPLES: usize = 64;
const MAX_LEVEL: usize = 8; // 64 * 2^8 = 2^14 samples
const CONTOUR_TOL: f64 = 1e-13;
const IMAG_TOL: f64 = 1e-12;

/// A function analytic and zero-free on a neighbourhood of `[-1, 1]`,
/// positive on the interval.
pub trait Modifier: Sync {
    fn eval(&self, x: f64) -> f64;

    fn eval_complex(&self, z: Complex64) -> Complex64;

    /// Bernstein-ellipse parameter of a region where `h` is analytic and
    /// zero-free. The contour is placed strictly inside it.
    fn analyticity_radius(&self) -> f64 {
        DEFAULT_RHO_MAX
    }
}

impl<F> Modifier for F
where
    F: Fn(Complex64) -> Complex64 + Sync,
{
    fn eval(&self, x: f64) -> f64 {
        self(Complex64::new(x, 0.0)).re
    }

    fn eval_complex(&self, z: Complex64) -> Complex64 {
        self(z)
    }
}

/// `x -> h(-x)`.
pub struct Reflected<'a, M: ?Sized>(pub &'a M);

impl<M: Modifier + ?Sized> Modifier for Reflected<'_, M> {
    fn eval(&self, x: f64) -> f64 {
        self.0.eval(-x)
    }

    fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.0.eval_complex(-z)
    }

    fn analyticity_radius(&self) -> f64 {
        self.0.analyticity_radius()
    }
}

#[derive(Debug, Clone, Copy)]
struct Sample {
    zeta: Complex64,
    log_h: Complex64,
}

/// Samples of `log h` on the contour, refined lazily by doubling.
struct Contour<'a, M: ?Sized> {
    h: &'a M,
    rho: f64,
    levels: Vec<OnceLock<std::result::Result<Vec<Sample>, String>>>,
}

impl<'a, M: Modifier + ?Sized> Contour<'a, M> {
    fn new(h: &'a M) -> Result<Self> {
        let rho_max = h.analyticity_radius();
        if !(rho_max > 1.0) {
            return Err(param(format!(
                "analyticity radius must exceed 1, got {rho_max}"
            )));
        }
        Ok(Contour {
            h,
            rho: rho_max.sqrt().min(1.5),
            levels: (0..=MAX_LEVEL).map(|_| OnceLock::new()).collect(),
        })
    }

    fn samples(&self, level: usize) -> Result<&[Sample]> {
        self.levels[level]
            .get_or_init(|| self.sample(FIRST_SAMPLES << level))
            .as_deref()
            .map_err(|e| Error::Contour(e.clone()))
    }

    fn sample(&self, m: usize) -> std::result::Result<Vec<Sample>, String> {
        let mut out = Vec::with_capacity(m);
        let mut prev_arg = 0.0;
        for i in 0..m {
            let w = Complex64::from_polar(self.rho, 2.0 * PI * i as f64 / m as f64);
            let zeta = 0.5 * (w + 1.0 / w);
            let hz = self.h.eval_complex(zeta);
            if !(hz.norm() > 0.0 && hz.re.is_finite() && hz.im.is_finite()) {
                return Err(format!("h({zeta}) = {hz} on the contour"));
            }
            let mut log_h = hz.ln();
            // continuous branch along the contour
            let turns = ((log_h.im - prev_arg) / (2.0 * PI)).round();
            log_h.im -= 2.0 * PI * turns;
            prev_arg = log_h.im;
            out.push(Sample { zeta, log_h });
        }
        let closing = out[0].log_h.im - prev_arg;
        if closing.abs() > PI {
            return Err("h has zeros inside the contour".into());
        }
        Ok(out)
    }

    /// `(1/2 pi i) \oint log h(zeta) g(zeta) d zeta / sqrt(zeta^2 - 1)`.
    fn integrate<G: Fn(Complex64) -> Complex64>(&self, g: G) -> Result<f64> {
        let mut prev: Option<Complex64> = None;
        for level in 0..=MAX_LEVEL {
            let samples = self.samples(level)?;
            let sum: Complex64 = samples.iter().map(|s| s.log_h * g(s.zeta)).sum();
            let v = sum / samples.len() as f64;
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(Error::Contour(format!("non-finite value {v}")));
            }
            if let Some(p) = prev {
                if (v - p).norm() <= CONTOUR_TOL * v.norm().max(1.0) {
                    if v.im.abs() > IMAG_TOL * (1.0 + v.norm()) {
                        return Err(Error::Contour(format!(
                            "imaginary part {:e} does not vanish",
                            v.im
                        )));
                    }
                    return Ok(v.re);
                }
            }
            prev = Some(v);
        }
        Err(Error::Contour(format!(
            "no agreement to {CONTOUR_TOL:e} with {} samples",
            FIRST_SAMPLES << MAX_LEVEL
        )))
    }

    /// `Some(h)` when `h` takes the same value at every first-level sample.
    fn constant_value(&self) -> Result<Option<f64>> {
        let samples = self.samples(0)?;
        let first = samples[0].log_h;
        let flat = first.im == 0.0 && samples.iter().all(|s| s.log_h == first);
        Ok(flat.then(|| first.re.exp()))
    }

    fn series_at(&self, t: f64) -> Result<(f64, f64)> {
        let h0 = self.integrate(|z| 1.0 / (z - t))?;
        let h1 = self.integrate(|z| {
            let d = z - t;
            1.0 / (d * d)
        })?;
        Ok((h0, h1))
    }
}

/// Which endpoint a coefficient expands about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    /// `x = -1`, giving `d_k`.
    Left,
    /// `x = +1`, giving `c_k`.
    Right,
}

fn endpoint_integral<M: Modifier + ?Sized>(
    contour: &Contour<'_, M>,
    k: u32,
    endpoint: Endpoint,
) -> Result<f64> {
    let shift = match endpoint {
        Endpoint::Left => 1.0,
        Endpoint::Right => -1.0,
    };
    contour.integrate(|z| 1.0 / (z + shift).powu(k + 1))
}

/// Expansion coefficient `c_k` (right) or `d_k` (left) of the contour
/// integral of `log h` about an endpoint.
pub fn contour_cd<M: Modifier + ?Sized>(h: &M, k: u32, endpoint: Endpoint) -> Result<f64> {
    endpoint_integral(&Contour::new(h)?, k, endpoint)
}

/// Value and first Taylor coefficient at `t` of the contour integral of
/// `log h / ((zeta^2 - 1)^{1/2} (zeta - z))` as a function of `z`.
pub fn h_series_at<M: Modifier + ?Sized>(h: &M, t: f64) -> Result<(f64, f64)> {
    if !(t > -1.0 && t < 1.0) {
        return Err(param(format!("t must lie in (-1, 1), got {t}")));
    }
    Contour::new(h)?.series_at(t)
}

/// Endpoint coefficients of one modifier.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ModifiedCoefficients {
    pub c0: f64,
    pub c1: f64,
    pub d0: f64,
    pub d1: f64,
}

impl ModifiedCoefficients {
    pub fn compute<M: Modifier + ?Sized>(h: &M) -> Result<Self> {
        Self::from_contour(&Contour::new(h)?)
    }

    fn from_contour<M: Modifier + ?Sized>(c: &Contour<'_, M>) -> Result<Self> {
        Ok(ModifiedCoefficients {
            c0: endpoint_integral(c, 0, Endpoint::Right)?,
            c1: endpoint_integral(c, 1, Endpoint::Right)?,
            d0: endpoint_integral(c, 0, Endpoint::Left)?,
            d1: endpoint_integral(c, 1, Endpoint::Left)?,
        })
    }
}

fn solve_bulk<M: Modifier + ?Sized>(
    contour: &Contour<'_, M>,
    n: usize,
    alpha: f64,
    beta: f64,
    k: usize,
) -> Result<f64> {
    let target = bulk_angle(n, alpha, beta, k);
    let big_n = 2.0 * n as f64 + alpha + beta + 1.0;
    let equation = |t: f64| -> Result<(f64, f64)> {
        let (h0, h1) = contour.series_at(t)?;
        let s = (1.0 - t * t).sqrt();
        let g = t.acos() + s * h0 / big_n - target;
        let dg = -1.0 / s - t * h0 / (big_n * s) + s * h1 / big_n;
        Ok((g, dg))
    };

    let mut t = target.cos();
    for _ in 0..20 {
        let (g, dg) = equation(t)?;
        if g.abs() <= 1e-14 {
            return Ok(t);
        }
        let next = t - g / dg;
        if !(next > -1.0 && next < 1.0) {
            break;
        }
        let step = (next - t).abs();
        t = next;
        if step <= 2.0 * f64::EPSILON * t.abs().max(1e-3) {
            break;
        }
    }
    if equation(t)?.0.abs() <= 1e-14 {
        return Ok(t);
    }

    // the left side decreases in t
    let (mut lo, mut hi) = (-1.0 + 1e-12, 1.0 - 1e-12);
    if equation(lo)?.0 < 0.0 || equation(hi)?.0 > 0.0 {
        return Err(Error::Convergence(format!("no bulk root bracketed for k = {k}")));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if equation(mid)?.0 > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= f64::EPSILON {
            break;
        }
    }
    t = 0.5 * (lo + hi);
    let g = equation(t)?.0;
    if g.abs() > 1e-14 {
        return Err(Error::Convergence(format!(
            "bulk residual {g:e} for k = {k}"
        )));
    }
    Ok(t)
}

/// Root `t_k` of the modified bulk equation, seeded at the classical root.
pub fn t_bulk_modified<M: Modifier + ?Sized>(
    n: usize,
    alpha: f64,
    beta: f64,
    h: &M,
    k: usize,
) -> Result<f64> {
    check_params(alpha, beta)?;
    check_index(n, k)?;
    solve_bulk(&Contour::new(h)?, n, alpha, beta, k)
}

fn left_edge<M: Modifier + ?Sized>(
    n: usize,
    alpha: f64,
    beta: f64,
    k: usize,
    terms: usize,
    co: &ModifiedCoefficients,
    h: &M,
) -> Result<Located> {
    let (a, b) = (alpha * alpha, beta * beta);
    let j = besselj_zero(beta, k)?;
    let u = j * j;
    let nn = 2.0 * n as f64 + alpha + beta + 1.0 - co.d0;
    let r = 1.0 / (nn * nn);
    let terms = terms.clamp(1, MODIFIED_TERMS);
    let dd = co.d0 - 3.0 * co.d1;
    let mixed = 3.0 * (4.0 * a - 1.0) * co.c0 + (12.0 * a + 8.0 * b - 5.0) * co.d0
        - 6.0 * (4.0 * b - 1.0) * co.d1;

    let node_terms = [
        2.0 * u * r,
        -2.0 * u / 3.0 * (u - 3.0 * a - b + 1.0) * r * r,
        -u / 6.0 * (16.0 * dd * u + mixed) * r * r / nn,
    ];
    let offset: f64 = node_terms[..terms].iter().rev().sum();

    let weight_terms = [
        r,
        (3.0 * a + b - 1.0 - 2.0 * u) / 3.0 * r * r,
        -(32.0 * dd * u + mixed) / 12.0 * r * r / nn,
    ];
    let jp = besselj(beta + 1.0, j);
    let ratio = 8.0 / (jp * jp) * weight_terms[..terms].iter().rev().sum::<f64>();
    let one_minus = 2.0 - offset;
    let node = offset - 1.0;
    let weight = ratio * (alpha * one_minus.ln() + beta * offset.ln()).exp() * h.eval(node);
    Ok(Located {
        node,
        one_minus,
        one_plus: offset,
        weight,
    })
}

#[allow(clippy::too_many_arguments)]
fn bulk<M: Modifier + ?Sized>(
    n: usize,
    alpha: f64,
    beta: f64,
    p: Param,
    (h0, h1): (f64, f64),
    terms: usize,
    co: &ModifiedCoefficients,
    h: &M,
) -> Located {
    let (a, b) = (alpha * alpha, beta * beta);
    let t = p.t;
    let s = p.sin2();
    let big_n = 2.0 * n as f64 + alpha + beta + 1.0;
    // h0 enters the node denominator with the opposite sign to the angle
    // equation; checked against the oracle for e^x and x + 3.
    let m = big_n - h0;
    let terms = terms.clamp(1, MODIFIED_TERMS);
    let q = 2.0 * a + 2.0 * b - 1.0;
    let cubic = [
        (4.0 * a - 1.0) * co.c0 + (4.0 * b - 1.0) * co.d0 + 8.0 * (a - b) * h0
            - 4.0 * (a - b) * h1,
        (4.0 * a - 1.0) * co.c0 - (4.0 * b - 1.0) * co.d0 + 4.0 * (3.0 * a + b - 1.0) * h0
            - 2.0 * q * h1,
        2.0 * (q * h0 + 2.0 * (a - b) * h1),
        2.0 * q * h1,
    ];
    let node_terms = [
        0.0,
        (2.0 * a - 2.0 * b + q * t) / (2.0 * m * m),
        -horner(&cubic, t) / (4.0 * m * m * m),
    ];
    let corr: f64 = node_terms[..terms].iter().rev().sum();

    let quartic = [
        2.0 * a + 2.0 * b + 2.0 * h1 * h1 - 1.0,
        -4.0 * h0 * h1,
        2.0 * (h0 * h0 - 2.0 * h1 * h1),
        4.0 * h0 * h1,
        2.0 * h1 * h1,
    ];
    // The 1/N term is the first-order spacing of the angle equation above.
    let bracket_terms = [
        2.0,
        (2.0 * h1 * s - 2.0 * h0 * t) / big_n,
        horner(&quartic, t) / (big_n * big_n),
    ];
    let bracket: f64 = bracket_terms[..terms].iter().rev().sum();
    let ratio = PI / big_n * bracket;

    let one_minus = p.one_minus - corr;
    let one_plus = p.one_plus + corr;
    let node = t + corr;
    let ln_factor = (alpha * one_minus.ln() + 0.5 * p.one_minus.ln())
        + (beta * one_plus.ln() + 0.5 * p.one_plus.ln());
    Located {
        node,
        one_minus,
        one_plus,
        weight: ratio * ln_factor.exp() * h.eval(node),
    }
}

/// Modified node and weight for small `k`; `co` are the coefficients of `h`.
pub fn modified_left_edge_point<M: Modifier + ?Sized>(
    n: usize,
    alpha: f64,
    beta: f64,
    k: usize,
    terms: usize,
    co: &ModifiedCoefficients,
    h: &M,
) -> Result<Point> {
    check_params(alpha, beta)?;
    check_index(n, k)?;
    let p = left_edge(n, alpha, beta, k, terms, co, h)?;
    Ok(Point {
        node: p.node,
        weight: p.weight,
    })
}

/// Modified bulk node and weight at a root `t` of the modified bulk
/// equation, given the series coefficients `(h0, h1)` at `t`.
#[allow(clippy::too_many_arguments)]
pub fn modified_bulk_point<M: Modifier + ?Sized>(
    n: usize,
    alpha: f64,
    beta: f64,
    t: f64,
    series: (f64, f64),
    terms: usize,
    co: &ModifiedCoefficients,
    h: &M,
) -> Result<Point> {
    check_params(alpha, beta)?;
    if !(t > -1.0 && t < 1.0) {
        return Err(param(format!("bulk parameter must lie in (-1, 1), got {t}")));
    }
    let p = bulk(n, alpha, beta, Param::from_t(t), series, terms, co, h);
    Ok(Point {
        node: p.node,
        weight: p.weight,
    })
}

fn check_positive<M: Modifier + ?Sized>(h: &M) -> Result<()> {
    for i in 0..=100 {
        let x = -1.0 + 2.0 * i as f64 / 100.0;
        let v = h.eval(x);
        if !(v > 0.0 && v.is_finite()) {
            return Err(param(format!("modifier must be positive on [-1, 1]; h({x}) = {v}")));
        }
    }
    Ok(())
}

/// An n-point rule for `(1-x)^alpha (1+x)^beta h(x)`.
///
/// The right edge uses the left-edge expansions with `alpha` and `beta`
/// interchanged and the coefficients of `h(-x)`.
pub fn gauss_jacobi_modified<M: Modifier + ?Sized>(
    n: usize,
    alpha: f64,
    beta: f64,
    h: &M,
    options: JacobiOptions,
) -> Result<QuadratureRule> {
    check_params(alpha, beta)?;
    if n == 0 {
        return Err(param("n must be at least 1"));
    }
    check_positive(h)?;
    let mut warnings = super::parameter_warnings(n, alpha, beta);
    let use_oracle = match options.method {
        Method::Oracle => true,
        Method::Asymptotic => false,
        Method::Auto => n <= ORACLE_MAX_N,
    };
    if use_oracle {
        let rule = oracle::modified_jacobi_rule(alpha, beta, |x| h.eval(x), n)?;
        warnings.extend(rule.warnings().iter().cloned());
        return Ok(rule.with_warnings(warnings));
    }

    let contour = Contour::new(h)?;
    if let Some(scale) = contour.constant_value()? {
        // A constant factor leaves the nodes alone and scales the weights.
        let classical = super::gauss_jacobi(n, alpha, beta, options)?;
        let weights = classical.weights().iter().map(|w| w * scale).collect();
        let weight = WeightFunction::Jacobi { alpha, beta };
        return Ok(
            QuadratureRule::new(weight, n, classical.nodes().to_vec(), weights, false)?
                .mark_modified()
                .with_warnings(classical.warnings().to_vec()),
        );
    }

    let plan = plan(n)?;
    let terms = resolve_terms(options.terms, MODIFIED_TERMS, MODIFIED_TERMS, &mut warnings)?;
    let reflected = Reflected(h);
    let reflected_contour = Contour::new(&reflected)?;
    let co = ModifiedCoefficients::from_contour(&contour)?;
    let co_right = ModifiedCoefficients::from_contour(&reflected_contour)?;

    // Only three edge terms are known, so the edge error grows like
    // (k/n)^6 and the bulk takes over well inside k_left.
    let k_edge = ((n as f64).powf(0.39).floor() as usize).clamp(1, plan.k_left);
    let points: Vec<Result<Located>> = map_range(1, n + 1, |k| {
        if k <= k_edge {
            left_edge(n, alpha, beta, k, terms, &co, h)
        } else if k <= n - k_edge {
            let t = solve_bulk(&contour, n, alpha, beta, k)?;
            let series = contour.series_at(t)?;
            Ok(bulk(n, alpha, beta, Param::from_t(t), series, terms, &co, h))
        } else {
            let p = left_edge(n, beta, alpha, n + 1 - k, terms, &co_right, &reflected)?;
            Ok(p.reflect())
        }
    });
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for p in points {
        let p = p?;
        nodes.push(p.node);
        weights.push(p.weight);
    }
    let weight = WeightFunction::Jacobi { alpha, beta };
    Ok(QuadratureRule::new(weight, n, nodes, weights, false)?
        .mark_modified()
        .with_warnings(warnings))
}
