//! Orthonormal probabilists' Hermite basis for the Gaussian weight
//! `G(x) = exp(-x^2/2)/sqrt(2 pi)`, Gaussian moments, and a Gauss-Hermite
//! quadrature rule renormalized to `G`.
//!
//! The basis satisfies `H_0 = 1`, `H_1(x) = x` and the three-term recurrence
//! `sqrt(k+1) H_{k+1}(x) = x H_k(x) - sqrt(k) H_{k-1}(x)`, and is orthonormal
//! in `L^2(R, G(x) dx)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;

/// Standard Gaussian weight `G(x)`.
pub fn weight(x: f64) -> f64 {
    math::exp(-0.5 * x * x) / math::sqrt(2.0 * core::f64::consts::PI)
}

/// Normalized Hermite basis up to a maximum degree.
#[derive(Debug, Clone)]
pub struct HermiteBasis {
    k_max: usize,
    sqrt_k: Vec<f64>,
}

impl HermiteBasis {
    pub fn new(k_max: usize) -> Self {
        let sqrt_k = (0..=k_max + 2).map(|k| math::sqrt(k as f64)).collect();
        Self { k_max, sqrt_k }
    }

    pub fn max_degree(&self) -> usize {
        self.k_max
    }

    /// Value of `H_k(x)` by the stable upward recurrence.
    pub fn eval(&self, k: usize, x: f64) -> Result<f64> {
        if k > self.k_max {
            return Err(Error::OutOfRange {
                what: "hermite degree",
                value: k,
                max: self.k_max,
            });
        }
        let mut prev = 0.0;
        let mut cur = 1.0;
        for j in 0..k {
            let next = (x * cur - self.sqrt_k[j] * prev) / self.sqrt_k[j + 1];
            prev = cur;
            cur = next;
        }
        Ok(cur)
    }

    /// Fills `out[k] = H_k(x)` for `k < out.len()`; `out` must not exceed
    /// the table range.
    pub fn eval_all(&self, x: f64, out: &mut [f64]) {
        assert!(out.len() <= self.k_max + 2, "eval_all beyond table range");
        if out.is_empty() {
            return;
        }
        out[0] = 1.0;
        if out.len() > 1 {
            out[1] = x;
        }
        for k in 1..out.len().saturating_sub(1) {
            out[k + 1] = (x * out[k] - self.sqrt_k[k] * out[k - 1]) / self.sqrt_k[k + 1];
        }
    }
}

/// Moments `sigma_k` of `G` and `sigma~_k` of the unit reproduction kernel.
#[derive(Debug, Clone)]
pub struct GaussianMoments {
    sigma: Vec<f64>,
}

impl GaussianMoments {
    /// Table of `sigma_k` for `k <= order`, by the multiplicative
    /// recurrence `sigma_k = (k-1) sigma_{k-2}` (never raw factorials).
    pub fn up_to(order: usize) -> Self {
        let mut sigma = vec![0.0; order + 1];
        sigma[0] = 1.0;
        for k in (2..=order).step_by(2) {
            sigma[k] = sigma[k - 2] * (k - 1) as f64;
        }
        Self { sigma }
    }

    pub fn max_order(&self) -> usize {
        self.sigma.len() - 1
    }

    /// `sigma_k = k!/(2^{k/2} (k/2)!)` for even `k`, zero for odd `k`.
    pub fn moment(&self, k: usize) -> Result<f64> {
        self.sigma
            .get(k)
            .copied()
            .ok_or(Error::OutOfRange {
                what: "gaussian moment order",
                value: k,
                max: self.max_order(),
            })
    }

    /// Moment of `Gamma_1`: `sigma~_k = sigma_k / 2^{k/2}`.
    pub fn gamma1_moment(&self, k: usize) -> Result<f64> {
        Ok(self.moment(k)? / math::powf(2.0, k as f64 / 2.0))
    }
}

/// Gauss-Hermite rule for the weight `G`: `sum w_i p(x_i) = ∫ p G` exactly
/// for polynomials of degree `<= 2n - 1`.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    /// Builds an `n`-point rule by the Golub-Welsch eigenvalue method on
    /// the Jacobi matrix of the probabilists' Hermite recurrence.
    pub fn gauss_hermite(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("quadrature order must be positive"));
        }
        let mut d = vec![0.0; n];
        let mut e: Vec<f64> = (0..n).map(|i| math::sqrt((i + 1) as f64)).collect();
        e[n - 1] = 0.0;
        let mut z = vec![0.0; n];
        z[0] = 1.0;
        tridiag_eigen_first_row(&mut d, &mut e, &mut z)?;

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| d[a].partial_cmp(&d[b]).expect("finite eigenvalues"));
        let mut nodes: Vec<f64> = order.iter().map(|&i| d[i]).collect();
        let mut weights: Vec<f64> = order.iter().map(|&i| z[i] * z[i]).collect();

        // The spectrum is symmetric; enforce it exactly so that parity
        // arguments survive round-off.
        for i in 0..n / 2 {
            let j = n - 1 - i;
            let x = 0.5 * (nodes[j] - nodes[i]);
            nodes[i] = -x;
            nodes[j] = x;
            let w = 0.5 * (weights[i] + weights[j]);
            weights[i] = w;
            weights[j] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Ok(Self { nodes, weights })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Largest polynomial degree integrated exactly.
    pub fn exactness_degree(&self) -> usize {
        2 * self.len() - 1
    }

    /// `∫ f(x) G(x) dx` by the rule.
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Eigenvalues of a symmetric tridiagonal matrix together with the first
/// row of the orthonormal eigenvector matrix (QL with implicit shifts).
fn tridiag_eigen_first_row(d: &mut [f64], e: &mut [f64], z: &mut [f64]) -> Result<()> {
    let n = d.len();
    for l in 0..n {
        let mut iter = 0usize;
        'restart: loop {
            let mut m = l;
            while m + 1 < n {
                let dd = math::abs(d[m]) + math::abs(d[m + 1]);
                if math::abs(e[m]) <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 64 {
                return Err(Error::Domain("quadrature eigensolve failed to converge"));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = math::hypot(g, 1.0);
            let denom = g + if g >= 0.0 { r } else { -r };
            g = d[m] - d[l] + e[l] / denom;
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = math::hypot(f, g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    continue 'restart;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Hermite coefficients `alpha_k = (f, H_k)_G` of a point-evaluable
/// function, up to degree `k_max`.
pub fn project(
    mut f: impl FnMut(f64) -> f64,
    rule: &QuadratureRule,
    basis: &HermiteBasis,
    k_max: usize,
) -> Result<Vec<f64>> {
    let mut coeffs = vec![0.0; k_max + 1];
    let mut h = vec![0.0; k_max + 1];
    for (&x, &w) in rule.nodes().iter().zip(rule.weights()) {
        let fx = f(x);
        if !fx.is_finite() {
            return Err(Error::NonFinite("projection sample"));
        }
        basis.eval_all(x, &mut h);
        let wf = w * fx;
        for (c, hk) in coeffs.iter_mut().zip(&h) {
            *c += wf * hk;
        }
    }
    Ok(coeffs)
}

/// Value of `sum_k alpha_k H_k(x)` by Clenshaw backward summation. The
/// density the coefficients represent is this value times `G(x)`.
pub fn synthesize(coeffs: &[f64], x: f64) -> f64 {
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    for k in (0..coeffs.len()).rev() {
        let kf = k as f64;
        let b = coeffs[k] + x * b1 / math::sqrt(kf + 1.0)
            - b2 * math::sqrt(kf + 1.0) / math::sqrt(kf + 2.0);
        b2 = b1;
        b1 = b;
    }
    b1
}

/// `l^2` norm of a coefficient sequence; equals the `L^2(G)` norm of the
/// synthesized function by Parseval.
pub fn weighted_l2_norm(coeffs: &[f64]) -> f64 {
    math::sqrt(coeffs.iter().map(|c| c * c).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    /// Polynomial helper for the derivative-definition oracle:
    /// coefficients in increasing degree.
    #[derive(Clone)]
    struct Poly(Vec<f64>);

    impl Poly {
        fn eval(&self, x: f64) -> f64 {
            self.0.iter().rev().fold(0.0, |acc, c| acc * x + c)
        }

        fn derivative(&self) -> Poly {
            Poly(
                self.0
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(k, c)| k as f64 * c)
                    .collect(),
            )
        }

        fn minus_x_times(&self) -> Poly {
            let mut out = vec![0.0; self.0.len() + 1];
            for (k, c) in self.0.iter().enumerate() {
                out[k + 1] -= c;
            }
            Poly(out)
        }

        fn add(&self, other: &Poly) -> Poly {
            let n = self.0.len().max(other.0.len());
            let mut out = vec![0.0; n];
            for (k, c) in self.0.iter().enumerate() {
                out[k] += c;
            }
            for (k, c) in other.0.iter().enumerate() {
                out[k] += c;
            }
            Poly(out)
        }
    }

    #[test]
    fn gaussian_moments_closed_form() {
        let m = GaussianMoments::up_to(16);
        assert_eq!(m.moment(0).unwrap(), 1.0);
        assert_eq!(m.moment(2).unwrap(), 1.0);
        assert_eq!(m.moment(3).unwrap(), 0.0);
        assert_eq!(m.moment(4).unwrap(), 3.0);
        assert_eq!(m.moment(6).unwrap(), 15.0);
        assert_eq!(m.moment(8).unwrap(), 105.0);
        // sigma_k = 2^{k/2} sigma~_k
        assert_abs_diff_eq!(m.gamma1_moment(6).unwrap(), 15.0 / 8.0, epsilon = 1e-15);
        assert!(matches!(m.moment(17), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn hermite_low_degrees() {
        let basis = HermiteBasis::new(8);
        assert_eq!(basis.eval(0, 3.7).unwrap(), 1.0);
        assert_eq!(basis.eval(1, 0.5).unwrap(), 0.5);
        assert_abs_diff_eq!(
            basis.eval(2, 0.0).unwrap(),
            -1.0 / 2f64.sqrt(),
            epsilon = 1e-15
        );
        assert!(matches!(basis.eval(9, 0.0), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn recurrence_matches_derivative_definition() {
        // H_k = (-1)^k (d^k G / dx^k) / (sqrt(k!) G); with d^k G = P_k G the
        // polynomials satisfy P_{k+1} = P_k' - x P_k.
        let basis = HermiteBasis::new(8);
        let mut p = Poly(vec![1.0]);
        let mut fact = 1.0;
        for k in 0..=8usize {
            if k > 0 {
                fact *= k as f64;
            }
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            for i in 0..=100 {
                let x = -5.0 + 0.1 * i as f64;
                let oracle = sign * p.eval(x) / fact.sqrt();
                assert_abs_diff_eq!(basis.eval(k, x).unwrap(), oracle, epsilon = 1e-9);
            }
            p = p.derivative().add(&p.minus_x_times());
        }
    }

    #[test]
    fn quadrature_small_rules() {
        let r1 = QuadratureRule::gauss_hermite(1).unwrap();
        assert_abs_diff_eq!(r1.nodes()[0], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r1.weights()[0], 1.0, epsilon = 1e-15);

        let r2 = QuadratureRule::gauss_hermite(2).unwrap();
        assert_abs_diff_eq!(r2.nodes()[0], -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(r2.nodes()[1], 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(r2.weights()[0], 0.5, epsilon = 1e-14);
    }

    #[test]
    fn quadrature_mass_and_moment_exactness() {
        let moments = GaussianMoments::up_to(24);
        for n in [5usize, 13, 33, 128] {
            let rule = QuadratureRule::gauss_hermite(n).unwrap();
            let mass: f64 = rule.weights().iter().sum();
            assert_abs_diff_eq!(mass, 1.0, epsilon = 1e-14);
            for k in 0..=24usize.min(rule.exactness_degree()) {
                let quad = rule.integrate(|x| x.powi(k as i32));
                let exact = moments.moment(k).unwrap();
                // Odd moments cancel between large symmetric terms; measure
                // the error against the absolute-moment magnitude.
                let scale = rule.integrate(|x| x.abs().powi(k as i32)).max(1.0);
                assert!(
                    (quad - exact).abs() <= 1e-13 * scale,
                    "n={n} k={k}: {quad} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn orthonormality_within_tolerance() {
        let k_max = 32;
        let basis = HermiteBasis::new(k_max);
        for n in [k_max + 1, 128] {
            let rule = QuadratureRule::gauss_hermite(n).unwrap();
            let mut h = vec![0.0; k_max + 1];
            let mut gram = vec![0.0; (k_max + 1) * (k_max + 1)];
            for (&x, &w) in rule.nodes().iter().zip(rule.weights()) {
                basis.eval_all(x, &mut h);
                for j in 0..=k_max {
                    for k in 0..=k_max {
                        gram[j * (k_max + 1) + k] += w * h[j] * h[k];
                    }
                }
            }
            let mut worst = 0.0f64;
            for j in 0..=k_max {
                for k in 0..=k_max {
                    let expect = if j == k { 1.0 } else { 0.0 };
                    worst = worst.max((gram[j * (k_max + 1) + k] - expect).abs());
                }
            }
            assert!(worst <= 1e-10, "orthonormality defect {worst} at n={n}");
        }
    }

    #[test]
    fn projection_examples() {
        let basis = HermiteBasis::new(8);
        let rule = QuadratureRule::gauss_hermite(32).unwrap();

        let ones = project(|_| 1.0, &rule, &basis, 8).unwrap();
        assert_abs_diff_eq!(ones[0], 1.0, epsilon = 1e-13);
        for c in &ones[1..] {
            assert_abs_diff_eq!(*c, 0.0, epsilon = 1e-13);
        }

        // x^2 = H_0 + sqrt(2) H_2
        let sq = project(|x| x * x, &rule, &basis, 8).unwrap();
        assert_abs_diff_eq!(sq[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sq[2], 2f64.sqrt(), epsilon = 1e-12);
        for (k, c) in sq.iter().enumerate() {
            if k != 0 && k != 2 {
                assert_abs_diff_eq!(*c, 0.0, epsilon = 1e-12);
            }
        }

        let h5 = project(|x| basis.eval(5, x).unwrap(), &rule, &basis, 8).unwrap();
        for (k, c) in h5.iter().enumerate() {
            let expect = if k == 5 { 1.0 } else { 0.0 };
            assert_abs_diff_eq!(*c, expect, epsilon = 1e-12);
        }

        assert!(matches!(
            project(|_| f64::NAN, &rule, &basis, 4),
            Err(Error::NonFinite(_))
        ));
    }

    #[test]
    fn synthesize_examples_and_roundtrip() {
        assert_eq!(synthesize(&[1.0], 123.4), 1.0);
        assert_eq!(synthesize(&[0.0, 1.0], 2.0), 2.0);
        let c2 = -(2f64.sqrt()) * 0.01;
        assert_abs_diff_eq!(synthesize(&[1.0, 0.0, c2], 0.0), 1.01, epsilon = 1e-15);

        // project . synthesize is the identity on polynomials of degree <= K
        let basis = HermiteBasis::new(12);
        let rule = QuadratureRule::gauss_hermite(64).unwrap();
        let coeffs = [0.3, -1.2, 0.07, 0.0, 0.9, -0.4, 0.001];
        let back = project(|x| synthesize(&coeffs, x), &rule, &basis, 6).unwrap();
        for (a, b) in coeffs.iter().zip(&back) {
            assert_abs_diff_eq!(*a, *b, epsilon = 1e-12);
        }
    }

    #[test]
    fn norm_examples_and_parseval() {
        assert_eq!(weighted_l2_norm(&[1.0, 0.0, 0.0]), 1.0);
        assert_eq!(weighted_l2_norm(&[0.0, 3.0, 4.0]), 5.0);

        // Parseval against the quadrature norm for a random-ish length-16
        // coefficient vector (frozen samples).
        let coeffs: Vec<f64> = (0..16)
            .map(|k| ((k * k + 1) as f64 * 0.37).sin() * 0.5)
            .collect();
        let rule = QuadratureRule::gauss_hermite(64).unwrap();
        let quad_sq = rule.integrate(|x| {
            let v = synthesize(&coeffs, x);
            v * v
        });
        assert_abs_diff_eq!(
            weighted_l2_norm(&coeffs),
            quad_sq.sqrt(),
            epsilon = 1e-10
        );
    }
}
