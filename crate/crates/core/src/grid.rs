//! Sampled densities on uniform symmetric grids, in either the original
//! trait coordinates (`q`-frame, width `O(eps)`) or the rescaled frame
//! `N(x) = eps q(eps x)` (width `O(1)`).

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hermite::{self, HermiteBasis};
use crate::math;

/// Coordinate frame of a sampled density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Frame {
    /// Rescaled frame: unit-order width, reproduction kernel `Gamma_1`.
    N,
    /// Original trait frame at segregational scale `eps`.
    Q { eps: f64 },
}

/// Uniform symmetric grid `x_j = -L + j h`, `h = 2L/(n-1)`, both endpoints
/// included so parity arguments hold exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridGeometry {
    pub half_width: f64,
    pub points: usize,
}

impl GridGeometry {
    pub fn new(half_width: f64, points: usize) -> Result<Self> {
        if !(half_width > 0.0) || points < 3 {
            return Err(Error::Domain("grid needs positive width and >= 3 points"));
        }
        Ok(Self { half_width, points })
    }

    pub fn step(&self) -> f64 {
        2.0 * self.half_width / (self.points - 1) as f64
    }

    pub fn x(&self, j: usize) -> f64 {
        -self.half_width + j as f64 * self.step()
    }

    /// Same physical grid expressed in the other frame.
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            half_width: self.half_width * factor,
            points: self.points,
        }
    }
}

/// Density samples on a uniform grid.
#[derive(Debug, Clone)]
pub struct GridDensity {
    pub geometry: GridGeometry,
    pub frame: Frame,
    pub values: Vec<f64>,
}

impl GridDensity {
    pub fn from_fn(
        geometry: GridGeometry,
        frame: Frame,
        mut f: impl FnMut(f64) -> f64,
    ) -> Self {
        let values = (0..geometry.points).map(|j| f(geometry.x(j))).collect();
        Self {
            geometry,
            frame,
            values,
        }
    }

    /// Normal density with the given mean and variance.
    pub fn gaussian(geometry: GridGeometry, frame: Frame, mean: f64, variance: f64) -> Self {
        let norm = 1.0 / math::sqrt(2.0 * core::f64::consts::PI * variance);
        Self::from_fn(geometry, frame, |x| {
            norm * math::exp(-(x - mean) * (x - mean) / (2.0 * variance))
        })
    }

    /// `N`-frame density `(sum_k alpha_k H_k(x)) G(x)` sampled on a grid.
    pub fn from_coefficients(geometry: GridGeometry, coeffs: &[f64]) -> Self {
        Self::from_fn(geometry, Frame::N, |x| {
            hermite::synthesize(coeffs, x) * hermite::weight(x)
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn step(&self) -> f64 {
        self.geometry.step()
    }

    pub fn x(&self, j: usize) -> f64 {
        self.geometry.x(j)
    }

    /// Trapezoid integral of `f(x_j) v_j`.
    pub fn integrate(&self, mut f: impl FnMut(f64, f64) -> f64) -> f64 {
        let h = self.step();
        let n = self.len();
        let mut acc = 0.0;
        for (j, &v) in self.values.iter().enumerate() {
            let w = if j == 0 || j == n - 1 { 0.5 * h } else { h };
            acc += w * f(self.x(j), v);
        }
        acc
    }

    pub fn mass(&self) -> f64 {
        self.integrate(|_, v| v)
    }

    pub fn normalize(&mut self) -> f64 {
        let mass = self.mass();
        if mass > 0.0 {
            let inv = 1.0 / mass;
            self.values.iter_mut().for_each(|v| *v *= inv);
        }
        mass
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, &v| m.max(math::abs(v)))
    }

    /// Largest |value| within the three cells next to each boundary,
    /// relative to the overall maximum.
    pub fn boundary_level(&self) -> f64 {
        let n = self.len();
        let peak = self.max_abs();
        if peak == 0.0 {
            return 0.0;
        }
        let mut worst = 0.0f64;
        for j in 0..3.min(n) {
            worst = worst.max(math::abs(self.values[j]));
            worst = worst.max(math::abs(self.values[n - 1 - j]));
        }
        worst / peak
    }

    /// Exact pointwise frame change; grids map node-to-node, so no
    /// interpolation is involved.
    pub fn convert_frame(&self, target: Frame) -> Result<GridDensity> {
        match (self.frame, target) {
            (Frame::N, Frame::Q { eps }) => {
                if !(eps > 0.0) {
                    return Err(Error::Domain("frame scale must be positive"));
                }
                Ok(GridDensity {
                    geometry: self.geometry.scaled(eps),
                    frame: target,
                    values: self.values.iter().map(|v| v / eps).collect(),
                })
            }
            (Frame::Q { eps }, Frame::N) => Ok(GridDensity {
                geometry: self.geometry.scaled(1.0 / eps),
                frame: Frame::N,
                values: self.values.iter().map(|v| v * eps).collect(),
            }),
            _ => Err(Error::Domain("frame conversion requires distinct frames")),
        }
    }

    /// Hermite coefficients of an `N`-frame density: `alpha_k = ∫ N H_k dx`
    /// by the trapezoid rule (no Gaussian division, so tails stay tame).
    pub fn coefficients(&self, basis: &HermiteBasis, k_max: usize) -> Result<Vec<f64>> {
        if self.frame != Frame::N {
            return Err(Error::Domain("coefficients are defined in the N frame"));
        }
        let mut coeffs = alloc::vec![0.0; k_max + 1];
        let mut h = alloc::vec![0.0; k_max + 1];
        let step = self.step();
        let n = self.len();
        for (j, &v) in self.values.iter().enumerate() {
            basis.eval_all(self.x(j), &mut h);
            let w = if j == 0 || j == n - 1 { 0.5 * step } else { step };
            let wv = w * v;
            for (c, hk) in coeffs.iter_mut().zip(&h) {
                *c += wv * hk;
            }
        }
        Ok(coeffs)
    }

    /// Relative `L^2(G^{-1})` distance between two `N`-frame densities,
    /// integrated over `|x| <= cutoff` where the weight is representable.
    pub fn weighted_distance(&self, other: &GridDensity, cutoff: f64) -> Result<f64> {
        if self.geometry != other.geometry {
            return Err(Error::Domain("weighted distance needs matching grids"));
        }
        if self.frame != Frame::N || other.frame != Frame::N {
            return Err(Error::Domain("weighted distance is defined in the N frame"));
        }
        let h = self.step();
        let mut num = 0.0;
        let mut den = 0.0;
        for j in 0..self.len() {
            let x = self.x(j);
            if math::abs(x) > cutoff {
                continue;
            }
            let g = hermite::weight(x);
            let d = self.values[j] - other.values[j];
            num += h * d * d / g;
            den += h * other.values[j] * other.values[j] / g;
        }
        Ok(math::sqrt(num / den.max(f64::MIN_POSITIVE)))
    }
}
