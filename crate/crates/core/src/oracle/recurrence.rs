//! Three-term recurrence coefficients of the classical weights.

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::rule::{jacobi_mass, WeightFunction};
use crate::specfun::ln_gamma;

/// Monic recurrence `pi_{j+1} = (x - a_j) pi_j - b_j pi_{j-1}` for
/// `j = 0..n-1`, with `b[0]` unused and `ln_mu0` the log of the total mass.
#[derive(Debug, Clone)]
pub(crate) struct Recurrence {
    pub a: Vec<Dd>,
    pub b: Vec<Dd>,
    pub ln_mu0: f64,
}

impl Recurrence {
    pub fn classical(weight: WeightFunction, n: usize) -> Result<Self> {
        weight.validate()?;
        let mut a = Vec::with_capacity(n);
        let mut b = Vec::with_capacity(n + 1);
        b.push(Dd::ZERO);
        match weight {
            WeightFunction::Laguerre { alpha } => {
                for j in 0..n {
                    a.push(Dd::new(alpha) + (2.0 * j as f64 + 1.0));
                }
                for j in 1..=n {
                    b.push((Dd::new(alpha) + j as f64) * j as f64);
                }
                Ok(Recurrence {
                    a,
                    b,
                    ln_mu0: ln_gamma(alpha + 1.0),
                })
            }
            WeightFunction::Hermite => {
                a.resize(n, Dd::ZERO);
                for j in 1..=n {
                    b.push(Dd::new(0.5 * j as f64));
                }
                Ok(Recurrence {
                    a,
                    b,
                    ln_mu0: 0.5 * std::f64::consts::PI.ln(),
                })
            }
            WeightFunction::Jacobi { alpha, beta } => {
                let (al, be) = (Dd::new(alpha), Dd::new(beta));
                let s = al + be;
                let diff = be - al;
                let sq = diff * (be + al);
                for j in 0..n {
                    let v = if j == 0 {
                        diff / (s + 2.0)
                    } else {
                        let t = s + 2.0 * j as f64;
                        sq / (t * (t + 2.0))
                    };
                    a.push(v);
                }
                for j in 1..=n {
                    let v = if j == 1 {
                        (al + 1.0) * (be + 1.0) * 4.0 / ((s + 2.0) * (s + 2.0) * (s + 3.0))
                    } else {
                        let jf = j as f64;
                        let t = s + 2.0 * jf;
                        (al + jf) * (be + jf) * (s + jf) * (4.0 * jf)
                            / (t * t * (t + 1.0) * (t - 1.0))
                    };
                    b.push(v);
                }
                Ok(Recurrence {
                    a,
                    b,
                    ln_mu0: jacobi_mass(alpha, beta).ln(),
                })
            }
        }
    }

    /// Coefficients already known in double precision, e.g. from Lanczos.
    pub fn from_f64(a: &[f64], b: &[f64], mu0: f64) -> Result<Self> {
        if b.len() != a.len() + 1 {
            return Err(Error::Numerical("recurrence length mismatch".into()));
        }
        if b[1..].iter().any(|&v| !(v > 0.0)) || !(mu0 > 0.0) {
            return Err(Error::Numerical("recurrence has non-positive b coefficients".into()));
        }
        Ok(Recurrence {
            a: a.iter().map(|&v| Dd::new(v)).collect(),
            b: std::iter::once(Dd::ZERO)
                .chain(b[1..].iter().map(|&v| Dd::new(v)))
                .collect(),
            ln_mu0: mu0.ln(),
        })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_coefficients_for_gegenbauer_limit() {
        // alpha = beta = -1/2: b_1 = 1/2, b_j = 1/4 afterwards, a_j = 0
        let r = Recurrence::classical(WeightFunction::Jacobi { alpha: -0.5, beta: -0.5 }, 5).unwrap();
        assert!(r.a.iter().all(|v| v.to_f64() == 0.0));
        assert!((r.b[1].to_f64() - 0.5).abs() < 1e-16);
        for j in 2..=5 {
            assert!((r.b[j].to_f64() - 0.25).abs() < 1e-16);
        }
    }

    #[test]
    fn jacobi_b1_with_alpha_plus_beta_minus_one() {
        // alpha + beta + 1 = 0 makes the general b_1 formula 0/0
        let r = Recurrence::classical(WeightFunction::Jacobi { alpha: -0.25, beta: -0.75 }, 3).unwrap();
        assert!(r.b[1].to_f64().is_finite() && r.b[1].to_f64() > 0.0);
    }
}
