//! Coefficients of the classical Gauss–Jacobi expansions.
//!
//! Everything here depends on `(alpha, beta)` only; a rule evaluates these
//! polynomials once per node. With `A = alpha^2`, `B = beta^2`,
//! `N = 2n + alpha + beta + 1` and `u = j^2` for the Bessel zero
//! `j = j_{beta,k}`:
//!
//! * left edge: `1 + x = sum_i E_i(u) / N^{2i}`,
//!   `w / w(x) = 8 / (J_{beta+1}(j)^2 N^2) (1 + sum_i F_i(u) / N^{2i})`;
//! * bulk: `x = t + sum_i P_i(t) / (N^{2i} s^{i-1})` with `s = 1 - t^2`, and
//!   `w / w(x) = (pi sqrt(s) / N) (2 + G_1 / N^2 + G_2(t) / (N^4 s^2) + G_3(t) / (N^6 s^3))`.

/// Available node terms near an edge, counting the leading one.
pub const EDGE_NODE_TERMS: usize = 5;
pub const EDGE_WEIGHT_TERMS: usize = 4;
pub const BULK_NODE_TERMS: usize = 5;
pub const BULK_WEIGHT_TERMS: usize = 4;

pub(crate) fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &v| acc * x + v)
}

#[derive(Debug, Clone)]
pub(crate) struct Brackets {
    pub edge_node: [Vec<f64>; 5],
    pub edge_weight: [Vec<f64>; 3],
    pub bulk_node: [Vec<f64>; 4],
    pub bulk_weight: [Vec<f64>; 3],
}

impl Brackets {
    pub fn new(alpha: f64, beta: f64) -> Self {
        let a = alpha * alpha;
        let b = beta * beta;
        let (a2, b2) = (a * a, b * b);
        let (a3, b3) = (a2 * a, b2 * b);
        let (a4, b4) = (a2 * a2, b2 * b2);

        let e1 = vec![0.0, 2.0];
        let e2 = vec![0.0, -2.0 * (1.0 - 3.0 * a - b) / 3.0, -2.0 / 3.0];
        let e3 = {
            let c0 = 45.0 * a2 + 7.0 * b2 + 20.0 * (3.0 * a - 1.0) * b - 60.0 * a + 13.0;
            let c1 = -3.0 * (5.0 * a + 3.0 * b - 2.0);
            let s = 2.0 / 45.0;
            vec![0.0, s * c0, s * c1, s * 2.0]
        };
        let e4 = {
            let c0 = -2835.0 * a3 - 247.0 * b3 - 1407.0 * (3.0 * a - 1.0) * b2 + 8505.0 * a2
                - 21.0 * (405.0 * a2 - 600.0 * a + 133.0) * b
                - 8379.0 * a
                + 1633.0;
            let c1 = 328.0 * b2 + (1512.0 * a - 575.0) * b + 567.0 * a - 113.0;
            let c2 = -18.0 * (7.0 * a + 5.0 * b - 3.0);
            let s = -2.0 / 2835.0;
            vec![0.0, s * c0, s * c1, s * c2, s * 9.0]
        };
        let e5 = {
            let c0 = 42525.0 * a4 + 2327.0 * b4 + 22340.0 * (3.0 * a - 1.0) * b3 - 226800.0 * a3
                + 168.0 * (1530.0 * a2 - 2415.0 * a + 542.0) * b2
                + 517860.0 * a2
                + 20.0 * (11340.0 * a3 - 38745.0 * a2 + 42399.0 * a - 8488.0) * b
                - 509280.0 * a
                + 98717.0;
            let c1 = 3.0
                * (9450.0 * a3 - 999.0 * b3 - 23.0 * (400.0 * a - 147.0) * b2 - 40635.0 * a2
                    - (2835.0 * a2 + 1850.0 * a - 294.0) * b
                    + 50650.0 * a
                    - 10236.0);
            let c2 = 6615.0 * a2 + 769.0 * b2 + 2.0 * (1620.0 * a - 589.0) * b - 12150.0 * a
                + 2668.0;
            let c3 = -15.0 * (9.0 * a + 7.0 * b - 4.0);
            // 2/42525 rather than 4/42525: the leading coefficient must be the
            // u^5 coefficient 2^10/10! of 1 - cos, and the oracle agrees
            let s = 2.0 / 42525.0;
            vec![0.0, s * c0, s * c1, s * c2, s * c3, s * 6.0]
        };

        let f1 = vec![(3.0 * a + b - 1.0) / 3.0, -2.0 / 3.0];
        let f2 = {
            let c0 = 45.0 * a2 + 7.0 * b2 + 20.0 * (3.0 * a - 1.0) * b - 60.0 * a + 13.0;
            let c1 = -6.0 * (5.0 * a + 3.0 * b - 2.0);
            vec![c0 / 45.0, c1 / 45.0, 6.0 / 45.0]
        };
        let f3 = {
            let c0 = 2835.0 * a3 + 247.0 * b3 + 1407.0 * (3.0 * a - 1.0) * b2 - 8505.0 * a2
                + 21.0 * (405.0 * a2 - 600.0 * a + 133.0) * b
                + 8379.0 * a
                - 1633.0;
            let c1 = -2.0 * (328.0 * b2 + (1512.0 * a - 575.0) * b + 567.0 * a - 113.0);
            let c2 = 54.0 * (7.0 * a + 5.0 * b - 3.0);
            let s = 1.0 / 2835.0;
            vec![s * c0, s * c1, s * c2, s * -36.0]
        };

        let p1 = vec![a - b, (2.0 * a + 2.0 * b - 1.0) / 2.0];
        let p2 = {
            let c0 = 32.0 * a2 - 32.0 * b2 - 40.0 * a + 40.0 * b;
            let c1 = 3.0
                * (16.0 * a2 + 16.0 * b2 + 4.0 * (4.0 * a - 7.0) * b - 28.0 * a + 11.0);
            let c2 = -24.0 * (a - b);
            let c3 = -(16.0 * a2 + 16.0 * b2 + 4.0 * (12.0 * a - 5.0) * b - 20.0 * a + 5.0);
            let s = 1.0 / 24.0;
            vec![s * c0, s * c1, s * c2, s * c3]
        };
        let p3 = {
            let c0 = 576.0 * a3 - 576.0 * b3 - 320.0 * (a - 6.0) * b2 - 1920.0 * a2
                + 16.0 * (20.0 * a2 - 127.0) * b
                + 2032.0 * a;
            let c1 = 15.0
                * (96.0 * a3 + 96.0 * b3 + 16.0 * (4.0 * a - 23.0) * b2 - 368.0 * a2
                    + 2.0 * (32.0 * a2 - 72.0 * a + 223.0) * b
                    + 446.0 * a
                    - 173.0);
            let c2 = 160.0
                * (6.0 * a3 - 6.0 * b3 + 2.0 * (a + 15.0) * b2 - 30.0 * a2
                    - (2.0 * a2 + 41.0) * b
                    + 41.0 * a);
            let c3 = -10.0
                * (32.0 * (5.0 * a + 3.0) * b2 + 96.0 * a2
                    + 2.0 * (80.0 * a2 - 152.0 * a - 97.0) * b
                    - 194.0 * a
                    + 99.0);
            let c4 = 240.0 * (a - b);
            let c5 = 96.0 * a3 + 96.0 * b3 + 80.0 * (8.0 * a - 3.0) * b2 - 240.0 * a2
                + 2.0 * (320.0 * a2 - 440.0 * a + 101.0) * b
                + 202.0 * a
                - 39.0;
            let s = 1.0 / 240.0;
            vec![s * c0, s * c1, s * c2, s * c3, s * c4, s * c5]
        };
        let p4 = {
            let c0 = 219648.0 * a4 - 219648.0 * b4 - 10752.0 * (14.0 * a - 127.0) * b3
                - 1365504.0 * a3
                + 75264.0 * (5.0 * a - 49.0) * b2
                + 3687936.0 * a2
                + 384.0 * (392.0 * a3 - 980.0 * a2 + 10527.0) * b
                - 4042368.0 * a;
            let c1 = 35.0
                * (23552.0 * a4 + 23552.0 * b4 + 128.0 * (90.0 * a - 1231.0) * b3
                    - 157568.0 * a3
                    + 32.0 * (328.0 * a2 - 1376.0 * a + 14095.0) * b2
                    + 451040.0 * a2
                    + 8.0 * (1440.0 * a3 - 5504.0 * a2 + 9964.0 * a - 65439.0) * b
                    - 523512.0 * a
                    + 206379.0);
            let c2 = 2688.0
                * (424.0 * a4 - 424.0 * b4 + 4.0 * (4.0 * a + 783.0) * b3 - 3132.0 * a3
                    + 4.0 * (35.0 * a - 2407.0) * b2
                    + 9628.0 * a2
                    - (16.0 * a3 + 140.0 * a2 - 11429.0) * b
                    - 11429.0 * a);
            let c3 = 105.0
                * (6656.0 * a4 + 6656.0 * b4 - 128.0 * (50.0 * a + 443.0) * b3 - 56704.0 * a3
                    - 32.0 * (296.0 * a2 - 696.0 * a - 6027.0) * b2
                    + 192864.0 * a2
                    - 8.0 * (800.0 * a3 - 2784.0 * a2 + 3580.0 * a + 30285.0) * b
                    - 242280.0 * a
                    + 99933.0);
            let c4 = 4480.0
                * (44.0 * a4 - 44.0 * b4 + 8.0 * (3.0 * a + 55.0) * b3 - 440.0 * a3
                    - 24.0 * (7.0 * a + 72.0) * b2
                    + 1728.0 * a2
                    - (24.0 * a3 - 168.0 * a2 - 2405.0) * b
                    - 2405.0 * a);
            let c5 = 21.0
                * (2048.0 * a4 + 2048.0 * b4 + 128.0 * (146.0 * a - 123.0) * b3 - 15744.0 * a3
                    + 32.0 * (1320.0 * a2 - 1760.0 * a + 2023.0) * b2
                    + 64736.0 * a2
                    + 8.0 * (2336.0 * a3 - 7040.0 * a2 + 3644.0 * a - 11275.0) * b
                    - 90200.0 * a
                    + 37111.0);
            let c6 = -40320.0 * (a - b);
            let c7 = -(9728.0 * a4 + 9728.0 * b4 + 896.0 * (138.0 * a - 49.0) * b3
                - 43904.0 * a3
                + 224.0 * (1160.0 * a2 - 1720.0 * a + 389.0) * b2
                + 87136.0 * a2
                + 8.0 * (15456.0 * a3 - 48160.0 * a2 + 49364.0 * a - 9785.0) * b
                - 78280.0 * a
                + 14921.0);
            let s = -1.0 / 40320.0;
            vec![s * c0, s * c1, s * c2, s * c3, s * c4, s * c5, s * c6, s * c7]
        };

        let g1 = vec![2.0 * a + 2.0 * b - 1.0];
        let g2 = {
            let c0 = 48.0 * a2 + 48.0 * b2 + 12.0 * (4.0 * a - 7.0) * b - 84.0 * a + 33.0;
            let c1 = 64.0 * (a2 - b2 - 2.0 * a + 2.0 * b);
            let c2 = -6.0 * (4.0 * (4.0 * a + 1.0) * b + 4.0 * a - 3.0);
            let c4 = 16.0 * a2 + 16.0 * b2 + 4.0 * (12.0 * a - 5.0) * b - 20.0 * a + 5.0;
            let s = 1.0 / 12.0;
            vec![s * c0, s * c1, s * c2, 0.0, s * c4]
        };
        let g3 = {
            let c0 = -1440.0 * a3 - 1440.0 * b3 - 240.0 * (4.0 * a - 23.0) * b2 + 5520.0 * a2
                - 30.0 * (32.0 * a2 - 72.0 * a + 223.0) * b
                - 6690.0 * a
                + 2595.0;
            let c1 = -128.0
                * (33.0 * a3 - 33.0 * b3 - 5.0 * (a - 27.0) * b2 - 135.0 * a2
                    + (5.0 * a2 - 166.0) * b
                    + 166.0 * a);
            let c2 = -15.0
                * (288.0 * a3 + 288.0 * b3 - 16.0 * (8.0 * a + 81.0) * b2 - 1296.0 * a2
                    - 2.0 * (64.0 * a2 - 88.0 * a - 863.0) * b
                    + 1726.0 * a
                    - 717.0);
            let c3 = -640.0
                * (3.0 * a3 - 3.0 * b3 + (a + 15.0) * b2 - 15.0 * a2 - (a2 + 22.0) * b
                    + 22.0 * a);
            let c4 = -5.0
                * (96.0 * a3 + 96.0 * b3 + 16.0 * (20.0 * a - 27.0) * b2 - 432.0 * a2
                    + 2.0 * (160.0 * a2 - 136.0 * a + 295.0) * b
                    + 590.0 * a
                    - 237.0);
            let c6 = 96.0 * a3 + 96.0 * b3 + 80.0 * (8.0 * a - 3.0) * b2 - 240.0 * a2
                + 2.0 * (320.0 * a2 - 440.0 * a + 101.0) * b
                + 202.0 * a
                - 39.0;
            // (t^2 - 1)^3 = -(1 - t^2)^3
            let s = -1.0 / 120.0;
            vec![s * c0, s * c1, s * c2, s * c3, s * c4, 0.0, s * c6]
        };

        Brackets {
            edge_node: [e1, e2, e3, e4, e5],
            edge_weight: [f1, f2, f3],
            bulk_node: [p1, p2, p3, p4],
            bulk_weight: [g1, g2, g3],
        }
    }
}
