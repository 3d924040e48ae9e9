use crate::error::{Error, Result};

/// Symmetric tridiagonal Jacobi matrix of a weight.
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal {
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
    pub mu0: f64,
}

/// Eigenvalues (ascending) and squared first eigenvector components of `t`.
///
/// Implicit-shift QL; only the first row of the eigenvector matrix is
/// carried through the rotations. Eigenvalues are then polished by Sturm
/// bisection.
pub(crate) fn eigen_first_components(t: &SymTridiagonal) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = t.diag.len();
    if t.offdiag.len() + 1 != n.max(1) {
        return Err(Error::Numerical("off-diagonal length must be n - 1".into()));
    }
    let mut d = t.diag.clone();
    let mut e: Vec<f64> = t.offdiag.iter().copied().chain(std::iter::once(0.0)).collect();
    let mut z = vec![0.0; n];
    if n > 0 {
        z[0] = 1.0;
    }
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 30 {
                return Err(Error::Numerical(format!(
                    "QL iteration did not converge for eigenvalue {l}"
                )));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut deflated = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let zf = z[i + 1];
                z[i + 1] = s * z[i] + c * zf;
                z[i] = c * z[i] - s * zf;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].total_cmp(&d[j]));
    let mut nodes: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let z2 = order.iter().map(|&i| z[i] * z[i]).collect();
    for (i, x) in nodes.iter_mut().enumerate() {
        *x = bisect(t, i, *x);
    }
    Ok((nodes, z2))
}

/// Number of eigenvalues of `t` below `x`, from the LDL^T pivots of `t - x`.
fn count_below(t: &SymTridiagonal, x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for (i, &a) in t.diag.iter().enumerate() {
        let e2 = if i == 0 { 0.0 } else { t.offdiag[i - 1] * t.offdiag[i - 1] };
        q = a - x - e2 / q;
        if q == 0.0 {
            q = -f64::MIN_POSITIVE;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Sturm bisection for eigenvalue `i`, started from a bracket around the QL
/// value. QL is accurate to a few ulp of the largest eigenvalue; bisection to
/// a few ulp of this one.
fn bisect(t: &SymTridiagonal, i: usize, guess: f64) -> f64 {
    let mut width = 16.0 * f64::EPSILON * guess.abs().max(f64::MIN_POSITIVE);
    let (mut lo, mut hi) = (guess - width, guess + width);
    for _ in 0..40 {
        if count_below(t, lo) <= i && count_below(t, hi) > i {
            break;
        }
        width *= 4.0;
        lo = guess - width;
        hi = guess + width;
    }
    if !(count_below(t, lo) <= i && count_below(t, hi) > i) {
        return guess;
    }
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if count_below(t, mid) > i {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let t = SymTridiagonal {
            diag: vec![1.0, 3.0],
            offdiag: vec![1.0],
            mu0: 1.0,
        };
        let (x, z2) = eigen_first_components(&t).unwrap();
        let r2 = 2f64.sqrt();
        assert!((x[0] - (2.0 - r2)).abs() < 1e-15);
        assert!((x[1] - (2.0 + r2)).abs() < 1e-15);
        assert!((z2[0] - (2.0 + r2) / 4.0).abs() < 1e-15);
        assert!((z2[0] + z2[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn one_by_one() {
        let t = SymTridiagonal {
            diag: vec![0.5],
            offdiag: vec![],
            mu0: 2.0,
        };
        let (x, z2) = eigen_first_components(&t).unwrap();
        assert_eq!(x, vec![0.5]);
        assert_eq!(z2, vec![1.0]);
    }
}
