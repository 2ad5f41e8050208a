//! Invariant affine connections in a structure-constant frame.

use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::frame::LieAlgebraFrame;
use crate::linalg::Matrix;
use crate::metric::{InnerProductOnAlgebra, InvariantMetric};
use crate::scalar::Scalar;

/// Dense rank-3 array indexed `[k][i][j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor3<S> {
    dim: usize,
    data: Vec<S>,
}

impl<S: Scalar> Tensor3<S> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![S::zero(); dim * dim * dim],
        }
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(dim * dim * dim);
        for k in 0..dim {
            for i in 0..dim {
                for j in 0..dim {
                    data.push(f(k, i, j));
                }
            }
        }
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            dim: self.dim,
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
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|v| v.clone() * s.clone()).collect(),
        }
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

    pub fn is_negligible(&self, tol: f64) -> bool {
        self.data.iter().all(|v| v.is_negligible(tol))
    }

    /// `Σ_{i,j} x_i y_j T[·][i][j]`.
    pub fn contract(&self, x: &[S], y: &[S]) -> Vec<S> {
        let n = self.dim;
        let mut out = vec![S::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = x[i].clone() * y[j].clone();
                for (k, o) in out.iter_mut().enumerate() {
                    let t = &self[(k, i, j)];
                    if !t.is_zero() {
                        *o = o.clone() + t.clone() * xy.clone();
                    }
                }
            }
        }
        out
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Tensor3<T> {
        Tensor3 {
            dim: self.dim,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<S> Index<(usize, usize, usize)> for Tensor3<S> {
    type Output = S;

    #[inline]
    fn index(&self, (k, i, j): (usize, usize, usize)) -> &S {
        &self.data[(k * self.dim + i) * self.dim + j]
    }
}

impl<S> IndexMut<(usize, usize, usize)> for Tensor3<S> {
    #[inline]
    fn index_mut(&mut self, (k, i, j): (usize, usize, usize)) -> &mut S {
        &mut self.data[(k * self.dim + i) * self.dim + j]
    }
}

/// An invariant connection `∇_{e_i} e_j = Σ_k Γ[k][i][j] e_k` together with
/// the frame whose bracket defines its torsion.
#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionCoefficients<S> {
    frame: LieAlgebraFrame<S>,
    gamma: Tensor3<S>,
    torsion: Tensor3<S>,
}

impl<S: Scalar> ConnectionCoefficients<S> {
    pub fn new(frame: &LieAlgebraFrame<S>, gamma: Tensor3<S>) -> Result<Self> {
        if gamma.dim() != frame.dim() {
            return Err(Error::DimensionMismatch {
                expected: frame.dim(),
                got: gamma.dim(),
            });
        }
        let torsion = Tensor3::from_fn(frame.dim(), |k, i, j| {
            gamma[(k, i, j)].clone() - gamma[(k, j, i)].clone() - frame.constant(k, i, j).clone()
        });
        Ok(Self {
            frame: frame.clone(),
            gamma,
            torsion,
        })
    }

    /// The connection that makes every frame field parallel.
    pub fn flat(frame: &LieAlgebraFrame<S>) -> Self {
        Self::new(frame, Tensor3::zeros(frame.dim())).expect("matching dimension")
    }

    pub fn dim(&self) -> usize {
        self.gamma.dim()
    }

    pub fn frame(&self) -> &LieAlgebraFrame<S> {
        &self.frame
    }

    pub fn gamma(&self) -> &Tensor3<S> {
        &self.gamma
    }

    /// `T(e_i, e_j) = ∇_{e_i} e_j - ∇_{e_j} e_i - [e_i, e_j]`, indexed `[k][i][j]`.
    pub fn torsion(&self) -> &Tensor3<S> {
        &self.torsion
    }

    /// Matrix of `∇_{e_i}` acting on frame coordinates (column j is `∇_{e_i} e_j`).
    pub fn matrix(&self, i: usize) -> Matrix<S> {
        Matrix::from_fn(self.dim(), |k, j| self.gamma[(k, i, j)].clone())
    }

    /// `∇_X Y` for invariant (constant-coefficient) fields.
    pub fn covariant(&self, x: &[S], y: &[S]) -> Vec<S> {
        self.gamma.contract(x, y)
    }

    /// Largest `|g(∇_{e_i} e_j, e_k) + g(e_j, ∇_{e_i} e_k)|` over the frame.
    pub fn metric_compatibility_defect(&self, g: &InnerProductOnAlgebra<S>) -> f64 {
        let n = self.dim();
        let lowered = self.lowered(g);
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = lowered[(k, i, j)].clone() + lowered[(j, i, k)].clone();
                    worst = worst.max(v.to_f64().abs());
                }
            }
        }
        worst
    }

    /// `g(∇_{e_i} e_j, e_l)` indexed `[l][i][j]`.
    pub fn lowered(&self, g: &InnerProductOnAlgebra<S>) -> Tensor3<S> {
        let n = self.dim();
        Tensor3::from_fn(n, |l, i, j| {
            (0..n).fold(S::zero(), |acc, k| {
                let gk = &self.gamma[(k, i, j)];
                if gk.is_zero() {
                    acc
                } else {
                    acc + gk.clone() * g.gram()[(k, l)].clone()
                }
            })
        })
    }

    /// Adds `A[k][i][j]` to the coefficients.
    pub fn shifted(&self, delta: &Tensor3<S>) -> Result<Self> {
        if delta.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: delta.dim(),
            });
        }
        Self::new(&self.frame, self.gamma.add(delta))
    }

    /// Convex combination `t·self + (1-t)·other` on the same frame.
    pub fn interpolate(&self, other: &Self, t: &S) -> Result<Self> {
        if self.frame != other.frame {
            return Err(Error::FrameMismatch);
        }
        let s = S::one() - t.clone();
        Self::new(&self.frame, self.gamma.scale(t).add(&other.gamma.scale(&s)))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> ConnectionCoefficients<T> {
        ConnectionCoefficients {
            frame: self.frame.map(&f),
            gamma: self.gamma.map(&f),
            torsion: self.torsion.map(&f),
        }
    }
}

/// Levi-Civita connection of an invariant metric, from the Koszul formula
/// restricted to invariant fields:
/// `2 g(∇_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y)`.
///
/// `frame` is the left-invariant bracket; right-invariant metrics use its
/// negative.
pub fn levi_civita<S: Scalar>(
    frame: &LieAlgebraFrame<S>,
    metric: &InvariantMetric<S>,
) -> Result<ConnectionCoefficients<S>> {
    let effective = metric.effective_frame(frame)?;
    levi_civita_in_frame(&effective, metric.inner_product())
}

/// Levi-Civita connection for a bracket taken as given (no chirality handling).
pub fn levi_civita_in_frame<S: Scalar>(
    frame: &LieAlgebraFrame<S>,
    g: &InnerProductOnAlgebra<S>,
) -> Result<ConnectionCoefficients<S>> {
    let n = frame.dim();
    if g.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: g.dim(),
        });
    }
    let gram = g.gram();
    // bracket_lowered[(l, i, j)] = g([e_i, e_j], e_l)
    let bracket_lowered = Tensor3::from_fn(n, |l, i, j| {
        (0..n).fold(S::zero(), |acc, k| {
            let c = frame.constant(k, i, j);
            if c.is_zero() {
                acc
            } else {
                acc + c.clone() * gram[(k, l)].clone()
            }
        })
    });
    let half = S::half();
    let koszul = Tensor3::from_fn(n, |l, i, j| {
        (bracket_lowered[(l, i, j)].clone() - bracket_lowered[(i, j, l)].clone()
            + bracket_lowered[(j, l, i)].clone())
            * half.clone()
    });
    let inv = g.inverse();
    let gamma = Tensor3::from_fn(n, |k, i, j| {
        (0..n).fold(S::zero(), |acc, l| {
            let a = &koszul[(l, i, j)];
            let b = &inv[(k, l)];
            if a.is_zero() || b.is_zero() {
                acc
            } else {
                acc + a.clone() * b.clone()
            }
        })
    });
    ConnectionCoefficients::new(frame, gamma)
}
