/// Recurrence coefficients of a discrete measure `sum w_i delta(x - x_i)`
/// by the Rutishauser–Kahan–Pal–Wilkinson Lanczos variant.
///
/// Returns `(a, b)` with `a.len() == n` and `b.len() == n + 1`, `b[0]` being
/// the total mass.
pub(crate) fn lanczos(nodes: &[f64], weights: &[f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let m = nodes.len();
    assert!(n <= m && weights.len() == m);
    let mut p0 = nodes.to_vec();
    let mut p1 = vec![0.0; m];
    p1[0] = weights[0];
    for k in 0..m - 1 {
        let mut pn = weights[k + 1];
        let (mut gam, mut sig, mut t) = (1.0, 0.0, 0.0);
        let lam = nodes[k + 1];
        for l in 0..=k + 1 {
            let rho = p1[l] + pn;
            let tmp = gam * rho;
            let tsig = sig;
            if rho <= 0.0 {
                gam = 1.0;
                sig = 0.0;
            } else {
                gam = p1[l] / rho;
                sig = pn / rho;
            }
            let tk = sig * (p0[l] - lam) - gam * t;
            p0[l] -= tk - t;
            t = tk;
            pn = if sig <= 0.0 { tsig * p1[l] } else { t * t / sig };
            p1[l] = tmp;
        }
    }
    let a = p0[..n].to_vec();
    let mut b = p1[..n].to_vec();
    b.push(if n < m { p1[n] } else { 0.0 });
    (a, b)
}
