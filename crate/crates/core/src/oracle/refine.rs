//! Newton polishing of eigenvalue nodes on the orthonormal recurrence,
//! with weights from the Christoffel–Darboux identity.

use std::f64::consts::LN_2;

use super::recurrence::Recurrence;
use crate::dd::Dd;
use crate::par::map_range;

const RESCALE: f64 = 4.149515568880993e180; // 2^600
const RESCALE_EXP: f64 = 600.0;

/// Values at x of `p_n`, `p_n'` and `p_{n-1}` with `p_0 = 1`, all sharing
/// the factor `2^{-shift}`.
struct Eval {
    p: Dd,
    dp: Dd,
    p_prev: Dd,
    shift: f64,
}

pub(crate) struct Prepared {
    a: Vec<Dd>,
    sqrt_b: Vec<Dd>,
    inv_sqrt_b: Vec<Dd>,
    ln_mu0: f64,
}

impl Prepared {
    pub fn new(rec: &Recurrence) -> Self {
        let sqrt_b: Vec<Dd> = rec.b.iter().map(|b| b.sqrt()).collect();
        let inv_sqrt_b = sqrt_b
            .iter()
            .map(|s| if s.hi == 0.0 { Dd::ZERO } else { Dd::ONE / *s })
            .collect();
        Prepared {
            a: rec.a.clone(),
            sqrt_b,
            inv_sqrt_b,
            ln_mu0: rec.ln_mu0,
        }
    }

    fn eval(&self, x: Dd) -> Eval {
        let n = self.a.len();
        let (mut p_prev, mut p) = (Dd::ZERO, Dd::ONE);
        let (mut dp_prev, mut dp) = (Dd::ZERO, Dd::ZERO);
        let mut shift = 0.0;
        for j in 0..n {
            let xa = x - self.a[j];
            let p_next = (xa * p - self.sqrt_b[j] * p_prev) * self.inv_sqrt_b[j + 1];
            let dp_next = (p + xa * dp - self.sqrt_b[j] * dp_prev) * self.inv_sqrt_b[j + 1];
            p_prev = p;
            p = p_next;
            dp_prev = dp;
            dp = dp_next;
            let big = p.hi.abs().max(dp.hi.abs());
            if big > RESCALE {
                let s = 1.0 / RESCALE;
                p = p.scale(s);
                p_prev = p_prev.scale(s);
                dp = dp.scale(s);
                dp_prev = dp_prev.scale(s);
                shift += RESCALE_EXP;
            }
        }
        Eval {
            p,
            dp,
            p_prev,
            shift,
        }
    }

    /// `ln lambda(x)`, the log of the Christoffel number at a zero x of `p_n`.
    fn ln_weight(&self, e: &Eval) -> f64 {
        let n = self.a.len();
        let ln_abs = |v: Dd| v.hi.abs().ln() + (v.lo / v.hi).ln_1p();
        self.ln_mu0 - self.sqrt_b[n].to_f64().ln() - ln_abs(e.dp) - ln_abs(e.p_prev)
            - 2.0 * e.shift * LN_2
    }
}

pub(crate) struct Refined {
    pub nodes: Vec<f64>,
    pub ln_weights: Vec<f64>,
    pub unrefined: usize,
}

/// Up to five Newton steps per node; a step longer than half the distance
/// to the nearest neighbour is rejected and the node kept as given.
pub(crate) fn refine_nodes(rec: &Recurrence, nodes: &[f64]) -> Refined {
    let prep = Prepared::new(rec);
    let n = nodes.len();
    let results = map_range(0, n, |i| {
        let x0 = nodes[i];
        let left = if i > 0 { x0 - nodes[i - 1] } else { f64::INFINITY };
        let right = if i + 1 < n { nodes[i + 1] - x0 } else { f64::INFINITY };
        let half_gap = 0.5 * left.min(right);
        let mut x = x0;
        let mut e = prep.eval(Dd::new(x));
        let mut rejected = false;
        for _ in 0..5 {
            let step = (e.p / e.dp).to_f64();
            if !step.is_finite() || (x - step - x0).abs() > half_gap {
                rejected = true;
                break;
            }
            if step == 0.0 {
                break;
            }
            x -= step;
            e = prep.eval(Dd::new(x));
            if step.abs() <= 1e-17 * x.abs() {
                break;
            }
        }
        if rejected {
            x = x0;
            e = prep.eval(Dd::new(x));
        }
        // p_{n-1} has a zero within O(n^-3) of the extreme zeros of p_n, so
        // the weight is taken at the double-double zero, not its rounding.
        let xd = Dd::new(x) - e.p / e.dp;
        if !rejected && xd.hi.is_finite() {
            e = prep.eval(xd);
        }
        (x, prep.ln_weight(&e), rejected)
    });
    let mut out = Refined {
        nodes: Vec::with_capacity(n),
        ln_weights: Vec::with_capacity(n),
        unrefined: 0,
    };
    for (x, lw, rejected) in results {
        out.nodes.push(x);
        out.ln_weights.push(lw);
        out.unrefined += rejected as usize;
    }
    out
}
