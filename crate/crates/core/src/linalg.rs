//! Small dense square matrices over a [`Scalar`].
//!
//! Dimensions here are tiny (3 to 8), so plain row-major storage with
//! Gauss-Jordan elimination is all that is needed; it works unchanged over
//! exact rationals where nalgebra's float-only routines would not.

use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![S::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self { n, data })
    }

    pub fn diagonal(entries: &[S]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, v) in entries.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<S>> {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &S) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|v| v.clone() * s.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        (0..self.n)
            .map(|i| {
                (0..self.n).fold(S::zero(), |acc, j| {
                    acc + self[(i, j)].clone() * v[j].clone()
                })
            })
            .collect()
    }

    /// `u^T A v`.
    pub fn bilinear(&self, u: &[S], v: &[S]) -> S {
        let av = self.mul_vec(v);
        u.iter()
            .zip(av)
            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b)
    }

    pub fn trace(&self) -> S {
        (0..self.n).fold(S::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn max_abs(&self) -> f64 {
        self.data
            .iter()
            .map(|v| v.to_f64().abs())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.sub(other).max_abs()
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        (0..self.n).all(|i| {
            (0..i).all(|j| (self[(i, j)].clone() - self[(j, i)].clone()).is_negligible(tol))
        })
    }

    pub fn symmetric_part(&self) -> Self {
        Self::from_fn(self.n, |i, j| {
            (self[(i, j)].clone() + self[(j, i)].clone()) * S::half()
        })
    }

    pub fn skew_part(&self) -> Self {
        Self::from_fn(self.n, |i, j| {
            (self[(i, j)].clone() - self[(j, i)].clone()) * S::half()
        })
    }

    /// Determinant by fraction-free-enough Gaussian elimination with pivot
    /// search (largest magnitude for floats, first non-zero for exact).
    pub fn determinant(&self) -> S {
        let n = self.n;
        let mut a = self.clone();
        let mut det = S::one();
        for col in 0..n {
            let Some(p) = pivot_row(&a, col) else {
                return S::zero();
            };
            if p != col {
                a.swap_rows(p, col);
                det = -det;
            }
            let piv = a[(col, col)].clone();
            det = det * piv.clone();
            for r in col + 1..n {
                let f = a[(r, col)].clone() / piv.clone();
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    a[(r, c)] = a[(r, c)].clone() - f.clone() * a[(col, c)].clone();
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let p = pivot_row(&a, col).ok_or(Error::DegenerateMetric)?;
            if !S::EXACT && a[(p, col)].to_f64().abs() <= 1e-300 {
                return Err(Error::DegenerateMetric);
            }
            a.swap_rows(p, col);
            inv.swap_rows(p, col);
            let piv = a[(col, col)].clone();
            for c in 0..n {
                a[(col, c)] = a[(col, c)].clone() / piv.clone();
                inv[(col, c)] = inv[(col, c)].clone() / piv.clone();
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[(r, col)].clone();
                if f.is_zero() {
                    continue;
                }
                for c in 0..n {
                    a[(r, c)] = a[(r, c)].clone() - f.clone() * a[(col, c)].clone();
                    inv[(r, c)] = inv[(r, c)].clone() - f.clone() * inv[(col, c)].clone();
                }
            }
        }
        Ok(inv)
    }

    /// Positive definiteness through the pivots of an unpivoted LDL^T
    /// factorization. Float pivots must exceed `rel_tol` times the largest
    /// diagonal entry.
    pub fn is_positive_definite(&self, rel_tol: f64) -> bool {
        let n = self.n;
        let scale = (0..n)
            .map(|i| self[(i, i)].to_f64().abs())
            .fold(0.0, f64::max);
        let mut a = self.clone();
        for col in 0..n {
            let piv = a[(col, col)].clone();
            let ok = if S::EXACT {
                piv.is_positive()
            } else {
                piv.to_f64() > rel_tol * scale
            };
            if !ok {
                return false;
            }
            for r in col + 1..n {
                let f = a[(r, col)].clone() / piv.clone();
                for c in col..n {
                    a[(r, c)] = a[(r, c)].clone() - f.clone() * a[(col, c)].clone();
                }
            }
        }
        true
    }

    /// Sub-matrix on the given row and column index sets.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Self {
        debug_assert_eq!(rows.len(), cols.len());
        Self::from_fn(rows.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.n {
            self.data.swap(a * self.n + c, b * self.n + c);
        }
    }
}

fn pivot_row<S: Scalar>(a: &Matrix<S>, col: usize) -> Option<usize> {
    let n = a.n;
    if S::EXACT {
        (col..n).find(|&r| !a[(r, col)].is_zero())
    } else {
        let (best, mag) = (col..n)
            .map(|r| (r, a[(r, col)].to_f64().abs()))
            .fold((col, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        (mag > 0.0).then_some(best)
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;

    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.n + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.n + j]
    }
}

/// Float matrix to nalgebra, for the eigen-decompositions that only make
/// sense in floating point.
pub(crate) fn to_nalgebra(m: &Matrix<f64>) -> nalgebra::DMatrix<f64> {
    nalgebra::DMatrix::from_fn(m.dim(), m.dim(), |i, j| m[(i, j)])
}
