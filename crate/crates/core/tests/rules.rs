use std::f64::consts::PI;

use approx::assert_relative_eq;
use fastgauss::jacobi::{self, contour_cd, h_series_at, Endpoint, Reflected};
use fastgauss::laguerre::{self, bulk_point, hard_edge_point, soft_edge_point, solve_bulk_t};
use fastgauss::oracle;
use fastgauss::{
    gauss_hermite, gauss_jacobi, gauss_jacobi_modified, gauss_laguerre, HermiteOptions,
    JacobiOptions, LaguerreOptions, Method, WeightFunction,
};
use num_complex::Complex64;

const BETA: f64 = -0.4472135954999579;

fn lag_oracle(n: usize, alpha: f64) -> fastgauss::QuadratureRule {
    oracle::gauss_rule(WeightFunction::Laguerre { alpha }, n, true).unwrap()
}

#[test]
fn jacobi_mass_at_400() {
    let r = gauss_jacobi(400, 0.42, BETA, JacobiOptions::default()).unwrap();
    let mass: f64 = r.weights().iter().sum();
    let mu0 = WeightFunction::Jacobi { alpha: 0.42, beta: BETA }.total_mass();
    assert_relative_eq!(mass, mu0, max_relative = 1e-13);
}

#[test]
fn jacobi_moment_thirty_at_100() {
    let r = gauss_jacobi(100, 0.42, BETA, JacobiOptions::default()).unwrap();
    assert!(r.moment_residual(30).unwrap() <= 1e-12);
    assert!(r.moment_residual(200).is_err());
}

#[test]
fn jacobi_edges_match_oracle_at_300() {
    let n = 300;
    let exact = oracle::gauss_rule(WeightFunction::Jacobi { alpha: 0.42, beta: BETA }, n, false).unwrap();
    let p = jacobi::plan(n).unwrap();
    for k in 1..=p.k_left {
        let left = jacobi::left_edge_point(n, 0.42, BETA, k, p.terms).unwrap();
        assert!((left.node - exact.nodes()[k - 1]).abs() <= 1e-12, "left {k}");
        assert_relative_eq!(left.weight, exact.weights()[k - 1], max_relative = 1e-11);

        let i = n - k;
        let right = jacobi::right_edge_point(n, 0.42, BETA, k, p.terms).unwrap();
        assert!((right.node - exact.nodes()[i]).abs() <= 1e-12, "right {}", i + 1);
        assert_relative_eq!(right.weight, exact.weights()[i], max_relative = 1e-11);
    }
}

#[test]
fn constant_modifier_reproduces_classical() {
    let one = |_: Complex64| Complex64::new(1.0, 0.0);
    let opts = JacobiOptions { method: Method::Asymptotic, ..Default::default() };
    let m = gauss_jacobi_modified(400, 0.42, BETA, &one, opts).unwrap();
    let c = gauss_jacobi(400, 0.42, BETA, opts).unwrap();
    for k in 0..400 {
        assert!((m.nodes()[k] - c.nodes()[k]).abs() <= 1e-13, "node {}", k + 1);
    }
}

#[test]
fn reflected_exponential_coefficients() {
    let exp = |z: Complex64| z.exp();
    let flipped = Reflected(&exp);
    assert!((contour_cd(&flipped, 0, Endpoint::Right).unwrap() + 1.0).abs() < 1e-13);
    assert!((contour_cd(&flipped, 0, Endpoint::Left).unwrap() + 1.0).abs() < 1e-13);
    let exp2 = |z: Complex64| (2.0 * z).exp();
    for t in [-0.9, 0.0, 0.4] {
        let (h0, h1) = h_series_at(&exp2, t).unwrap();
        assert!((h0 - 2.0).abs() < 1e-13 && h1.abs() < 1e-13, "{t}: {h0} {h1}");
    }
}

#[test]
fn modified_exponential_matches_oracle_at_200() {
    let (a, b) = (1.0 / 3f64.sqrt(), -1.0 / PI);
    let exp = |z: Complex64| z.exp();
    let opts = JacobiOptions { method: Method::Asymptotic, ..Default::default() };
    let fast = gauss_jacobi_modified(200, a, b, &exp, opts).unwrap();
    let exact = oracle::modified_jacobi_rule(a, b, f64::exp, 200).unwrap();
    let p = jacobi::plan(200).unwrap();
    for k in p.k_left + 1..=p.k_right {
        assert!((fast.nodes()[k - 1] - exact.nodes()[k - 1]).abs() <= 1e-8, "node {k}");
        assert_relative_eq!(fast.weights()[k - 1], exact.weights()[k - 1], max_relative = 1e-7);
    }
}

#[test]
fn laguerre_mass_at_200() {
    let opts = LaguerreOptions { all_nodes: true, ..Default::default() };
    let r = gauss_laguerre(200, 0.7, opts).unwrap();
    let mass: f64 = r.weights().iter().sum();
    assert_relative_eq!(mass, 0.9086387328532904, max_relative = 1e-12);
}

#[test]
fn laguerre_hard_edge_matches_oracle() {
    let (n, a) = (200, 0.7);
    let exact = lag_oracle(n, a);
    let p = laguerre::plan(n).unwrap();
    assert_eq!((p.k_left, p.k_right), (15, 180));
    for k in 1..=p.k_left {
        let pt = hard_edge_point(n, a, k, p.terms, true).unwrap();
        assert_relative_eq!(pt.node, exact.nodes()[k - 1], max_relative = 1e-12);
        assert_relative_eq!(pt.weight, exact.weights()[k - 1], max_relative = 1e-11);
        let j = fastgauss::specfun::besselj_zero(a, k).unwrap();
        assert!(pt.node > j * j / (4.0 * n as f64 + 2.0 * a + 2.0));
    }
}

#[test]
fn laguerre_bulk_at_1000() {
    let exact = lag_oracle(1000, 0.0);
    let t = solve_bulk_t(1000, 0.0, 500).unwrap().t;
    let pt = bulk_point(1000, 0.0, t, 5, true).unwrap();
    assert_relative_eq!(pt.node, exact.nodes()[499], max_relative = 1e-13);
}

#[test]
fn laguerre_largest_node() {
    let exact = lag_oracle(200, 0.7);
    let pt = soft_edge_point(200, 0.7, 200, laguerre::SOFT_EDGE_TERMS, true).unwrap();
    assert_relative_eq!(pt.node, exact.nodes()[199], max_relative = 1e-6);
    assert!(pt.weight > 0.0);
}

#[test]
fn laguerre_hard_edge_meets_bulk() {
    for a in [0.0, 0.7] {
        let p = laguerre::plan(200).unwrap();
        let edge = hard_edge_point(200, a, p.k_left, p.terms, true).unwrap();
        let t = solve_bulk_t(200, a, p.k_left).unwrap().t;
        let bulk = bulk_point(200, a, t, p.terms, true).unwrap();
        assert_relative_eq!(edge.node, bulk.node, max_relative = 1e-10);
    }
}

#[test]
fn laguerre_bulk_error_shrinks_with_terms_and_n() {
    let bulk_error = |n: usize, terms: usize| {
        let exact = lag_oracle(n, 0.7);
        let p = laguerre::plan(n).unwrap();
        (p.k_left + 1..p.k_right)
            .map(|k| {
                let t = solve_bulk_t(n, 0.7, k).unwrap().t;
                let x = bulk_point(n, 0.7, t, terms, true).unwrap().node;
                (x / exact.nodes()[k - 1] - 1.0).abs()
            })
            .fold(0.0, f64::max)
    };
    let by_terms: Vec<f64> = (1..=4).map(|t| bulk_error(200, t)).collect();
    assert!(by_terms.windows(2).all(|e| e[1] < e[0]), "{by_terms:?}");
    assert!(by_terms[3] <= 1e-13, "{by_terms:?}");
    assert!(bulk_error(512, 3) <= bulk_error(128, 3));
}

#[test]
fn oracle_refinement_is_small_at_200() {
    let w = WeightFunction::Laguerre { alpha: 0.7 };
    let raw = oracle::golub_welsch(&oracle::recurrence(w, 200).unwrap(), w).unwrap();
    let fine = oracle::refine(&raw).unwrap();
    for (x, y) in raw.nodes().iter().zip(fine.nodes()) {
        assert!((x - y).abs() <= 1e-12, "{x} {y}");
    }
}

#[test]
fn hermite_at_1000() {
    let r = gauss_hermite(1000, HermiteOptions::default()).unwrap();
    let mass: f64 = r.weights().iter().sum();
    assert_relative_eq!(mass, PI.sqrt(), max_relative = 1e-13);
    assert_eq!(r.moment_residual(1).unwrap(), 0.0);
    let exact = oracle::gauss_rule(WeightFunction::Hermite, 1000, false).unwrap();
    let p = laguerre::plan(500).unwrap();
    for i in p.k_left..p.k_right - 1 {
        let k = 500 + i;
        assert!((r.nodes()[k] - exact.nodes()[k]).abs() <= 1e-13, "node {}", k + 1);
    }
}

#[test]
fn hermite_json_nodes() {
    let r = gauss_hermite(3, HermiteOptions::default()).unwrap();
    let mut out = Vec::new();
    fastgauss::format::write_json(&r, &mut out).unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["family"], "hermite");
    let nodes: Vec<f64> = serde_json::from_value(v["nodes"].clone()).unwrap();
    assert_eq!(nodes, [-1.224744871391589, 0.0, 1.224744871391589]);
    let back = fastgauss::format::read_json(std::str::from_utf8(&out).unwrap()).unwrap();
    assert_eq!(back.weights(), r.weights());
}
