use fastgauss::format::{read_csv, sig17, write_csv};
use fastgauss::jacobi::t_bulk;
use fastgauss::laguerre::solve_bulk_t;
use fastgauss::oracle;
use fastgauss::{
    gauss_hermite, gauss_jacobi, gauss_laguerre, HermiteOptions, JacobiOptions, LaguerreOptions,
    Method, QuadratureRule, Warning, WeightFunction,
};
use proptest::prelude::*;

fn asymptotic() -> JacobiOptions {
    JacobiOptions { method: Method::Asymptotic, ..Default::default() }
}

fn check_shape(rule: &QuadratureRule, lo: f64, hi: f64) -> Result<(), TestCaseError> {
    let x = rule.nodes();
    prop_assert!(x.windows(2).all(|p| p[0] < p[1]));
    prop_assert!(x[0] > lo && x[x.len() - 1] < hi);
    prop_assert!(rule.weights().iter().all(|&w| w >= 0.0 && w.is_finite()));
    let zeros = rule.weights().iter().filter(|&&w| w == 0.0).count();
    if zeros > 0 {
        let expected = Warning::WeightsUnderflowed { count: zeros };
        prop_assert!(rule.warnings().contains(&expected));
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn jacobi_reflection_is_bitwise(n in 301usize..700, a in -0.9f64..2.0, b in -0.9f64..2.0) {
        let r1 = gauss_jacobi(n, a, b, asymptotic()).unwrap();
        let r2 = gauss_jacobi(n, b, a, asymptotic()).unwrap();
        for k in 0..n {
            prop_assert_eq!(r1.nodes()[k].to_bits(), (-r2.nodes()[n - 1 - k]).to_bits());
            prop_assert_eq!(r1.weights()[k].to_bits(), r2.weights()[n - 1 - k].to_bits());
        }
    }

    #[test]
    fn jacobi_rules_are_well_formed(n in 301usize..2000, a in -0.9f64..3.0, b in -0.9f64..3.0) {
        let r = gauss_jacobi(n, a, b, asymptotic()).unwrap();
        check_shape(&r, -1.0, 1.0)?;
        let mass: f64 = r.weights().iter().sum();
        let mu0 = WeightFunction::Jacobi { alpha: a, beta: b }.total_mass();
        prop_assert!((mass / mu0 - 1.0).abs() < 1e-11, "mass {} vs {}", mass, mu0);
    }

    #[test]
    fn laguerre_rules_are_well_formed(n in 128usize..3000, a in -0.9f64..4.0) {
        let opts = LaguerreOptions { scaled: true, all_nodes: true, ..Default::default() };
        let r = gauss_laguerre(n, a, opts).unwrap();
        check_shape(&r, 0.0, f64::INFINITY)?;
    }

    #[test]
    fn hermite_rules_are_mirrored(n in 1usize..1500) {
        let r = gauss_hermite(n, HermiteOptions::default()).unwrap();
        check_shape(&r, f64::NEG_INFINITY, f64::INFINITY)?;
        for k in 0..n {
            prop_assert_eq!(r.nodes()[k], -r.nodes()[n - 1 - k]);
            prop_assert_eq!(r.weights()[k], r.weights()[n - 1 - k]);
        }
        prop_assert_eq!(r.apply(|x| x * x * x).unwrap(), 0.0);
    }

    #[test]
    fn jacobi_bulk_roots_increase(n in 2usize..5000, a in -0.99f64..5.0, b in -0.99f64..5.0) {
        let mut prev = -1.0;
        for k in 1..=n {
            let t = t_bulk(n, a, b, k);
            prop_assert!(t > prev && t < 1.0);
            prev = t;
        }
    }

    #[test]
    fn bessel_zeros_interlace(nu in 0.0f64..200.0, k in 1usize..60) {
        use fastgauss::specfun::besselj_zero;
        let (a, b, c) = (besselj_zero(nu, k).unwrap(), besselj_zero(nu + 1.0, k).unwrap(), besselj_zero(nu, k + 1).unwrap());
        prop_assert!(a < b && b < c, "{} {} {}", a, b, c);
    }

    #[test]
    fn large_alpha_laguerre_is_well_formed(n in 128usize..3000, r in 0.05f64..2.0) {
        let a = (r * n as f64).sqrt();
        let opts = LaguerreOptions { scaled: true, ..Default::default() };
        let rule = gauss_laguerre(n, a, opts).unwrap();
        check_shape(&rule, 0.0, f64::INFINITY)?;
    }

    #[test]
    fn laguerre_bulk_roots_solve_equation(n in 128usize..100_000, a in -0.9f64..3.0, frac in 0.05f64..0.85) {
        let k = ((n as f64 * frac) as usize).max(2);
        let root = solve_bulk_t(n, a, k).unwrap();
        prop_assert!(root.t > 0.0 && root.t < 1.0);
        prop_assert!(root.residual.abs() <= 1e-14);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn sig17_round_trips(bits in any::<u64>()) {
        let x = f64::from_bits(bits);
        prop_assume!(x.is_finite());
        prop_assert_eq!(sig17(x).parse::<f64>().unwrap().to_bits(), bits);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn oracle_nodes_interlace(n in 2usize..200, a in -0.9f64..3.0, b in -0.9f64..3.0) {
        let w = WeightFunction::Jacobi { alpha: a, beta: b };
        let big = oracle::gauss_rule(w, n, false).unwrap();
        let small = oracle::gauss_rule(w, n - 1, false).unwrap();
        for (k, &y) in small.nodes().iter().enumerate() {
            prop_assert!(big.nodes()[k] < y && y < big.nodes()[k + 1]);
        }
    }

    #[test]
    fn refinement_stays_between_neighbours(n in 2usize..400, a in -0.9f64..3.0) {
        let w = WeightFunction::Laguerre { alpha: a };
        let raw = oracle::golub_welsch(&oracle::recurrence(w, n).unwrap(), w).unwrap();
        let fine = oracle::refine(&raw).unwrap();
        let x = raw.nodes();
        for (k, &y) in fine.nodes().iter().enumerate() {
            if k > 0 { prop_assert!(y > x[k - 1]); }
            if k + 1 < n { prop_assert!(y < x[k + 1]); }
        }
    }

    #[test]
    fn csv_round_trip_integrates_identically(n in 1usize..400) {
        let r = gauss_hermite(n, HermiteOptions::default()).unwrap();
        let mut buf = Vec::new();
        write_csv(&r, &mut buf).unwrap();
        let rows = read_csv(&buf[..]).unwrap();
        let f = |x: f64| (x * 0.3).cos();
        let (nodes, weights): (Vec<f64>, Vec<f64>) = rows.into_iter().unzip();
        let back = QuadratureRule::new(WeightFunction::Hermite, n, nodes, weights, false).unwrap();
        prop_assert_eq!(r.apply(f).unwrap().to_bits(), back.apply(f).unwrap().to_bits());
    }
}
