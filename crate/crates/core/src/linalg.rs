//! Small dense linear algebra: LU factorization with partial pivoting for
//! the truncated coefficient systems (dimensions stay below ~64, so a
//! direct factorization with an explicit-inverse condition estimate is the
//! whole story).

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;

/// Row-major square matrix wrapper.
#[derive(Debug, Clone)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn from_rows(n: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), n * n);
        Self { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn matvec(&self, x: &[f64], out: &mut [f64]) {
        for i in 0..self.n {
            let row = &self.data[i * self.n..(i + 1) * self.n];
            out[i] = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
    }

    /// Maximum column sum (operator 1-norm).
    pub fn norm_1(&self) -> f64 {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| math::abs(self.get(i, j))).sum())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.n {
            for j in 0..i {
                worst = worst.max(math::abs(self.get(i, j) - self.get(j, i)));
            }
        }
        worst
    }
}

/// LU factorization with partial pivoting.
#[derive(Debug, Clone)]
pub struct Lu {
    n: usize,
    lu: Vec<f64>,
    pivots: Vec<usize>,
}

impl Lu {
    pub fn factor(matrix: &Matrix) -> Result<Self> {
        let n = matrix.n;
        let mut lu = matrix.data.clone();
        let mut pivots = vec![0usize; n];
        for col in 0..n {
            let mut pivot = col;
            let mut best = math::abs(lu[col * n + col]);
            for row in col + 1..n {
                let v = math::abs(lu[row * n + col]);
                if v > best {
                    best = v;
                    pivot = row;
                }
            }
            if best == 0.0 {
                return Err(Error::SingularOperator {
                    condition: f64::INFINITY,
                });
            }
            pivots[col] = pivot;
            if pivot != col {
                for j in 0..n {
                    lu.swap(col * n + j, pivot * n + j);
                }
            }
            let diag = lu[col * n + col];
            for row in col + 1..n {
                let factor = lu[row * n + col] / diag;
                lu[row * n + col] = factor;
                for j in col + 1..n {
                    lu[row * n + j] -= factor * lu[col * n + j];
                }
            }
        }
        Ok(Self { n, lu, pivots })
    }

    pub fn solve_in_place(&self, b: &mut [f64]) {
        let n = self.n;
        for col in 0..n {
            let p = self.pivots[col];
            if p != col {
                b.swap(col, p);
            }
        }
        for i in 1..n {
            let mut acc = b[i];
            for j in 0..i {
                acc -= self.lu[i * n + j] * b[j];
            }
            b[i] = acc;
        }
        for i in (0..n).rev() {
            let mut acc = b[i];
            for j in i + 1..n {
                acc -= self.lu[i * n + j] * b[j];
            }
            b[i] = acc / self.lu[i * n + i];
        }
    }

    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        let mut x = b.to_vec();
        self.solve_in_place(&mut x);
        x
    }

    /// Explicit inverse, column by column.
    pub fn inverse(&self) -> Matrix {
        let n = self.n;
        let mut inv = Matrix::zeros(n);
        let mut col = vec![0.0; n];
        for j in 0..n {
            col.iter_mut().for_each(|v| *v = 0.0);
            col[j] = 1.0;
            self.solve_in_place(&mut col);
            for i in 0..n {
                inv.set(i, j, col[i]);
            }
        }
        inv
    }
}

/// 1-norm condition estimate via the explicit inverse.
pub fn condition_estimate(matrix: &Matrix, lu: &Lu) -> f64 {
    matrix.norm_1() * lu.inverse().norm_1()
}
