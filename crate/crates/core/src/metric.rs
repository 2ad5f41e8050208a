//! Inner products on a Lie algebra and the invariant metrics they induce.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::LieAlgebraFrame;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Relative pivot threshold for positive-definiteness in floating point.
const PD_REL_TOL: f64 = 1e-13;
const SYMMETRY_TOL: f64 = 1e-12;

/// A symmetric positive-definite Gram matrix on the frame, with its inverse
/// and determinant cached.
#[derive(Clone, Debug, PartialEq)]
pub struct InnerProductOnAlgebra<S> {
    gram: Matrix<S>,
    inverse: Matrix<S>,
    det: S,
}

impl<S: Scalar> InnerProductOnAlgebra<S> {
    pub fn new(gram: Matrix<S>) -> Result<Self> {
        if !gram.is_symmetric(SYMMETRY_TOL * gram.max_abs().max(1.0)) {
            return Err(Error::AsymmetricMetric);
        }
        if !gram.is_positive_definite(PD_REL_TOL) {
            return Err(Error::DegenerateMetric);
        }
        let inverse = gram.inverse()?;
        let det = gram.determinant();
        Ok(Self { gram, inverse, det })
    }

    pub fn identity(dim: usize) -> Self {
        Self::new(Matrix::identity(dim)).expect("identity is positive definite")
    }

    pub fn dim(&self) -> usize {
        self.gram.dim()
    }

    pub fn gram(&self) -> &Matrix<S> {
        &self.gram
    }

    pub fn inverse(&self) -> &Matrix<S> {
        &self.inverse
    }

    pub fn determinant(&self) -> &S {
        &self.det
    }

    /// `sqrt(det g)`, the factor relating `dvol_g` to `e^1 ∧ ... ∧ e^n`.
    pub fn volume_factor(&self) -> Result<S> {
        self.det
            .sqrt_exact()
            .ok_or_else(|| Error::Irrational(self.det.to_string()))
    }

    pub fn inner(&self, u: &[S], v: &[S]) -> S {
        self.gram.bilinear(u, v)
    }

    pub fn scaled(&self, eps: &S) -> Result<Self> {
        if eps.partial_cmp(&S::zero()) != Some(std::cmp::Ordering::Greater) {
            return Err(Error::NonPositive {
                name: "epsilon",
                value: eps.to_string(),
            });
        }
        Self::new(self.gram.scale(eps))
    }

    /// Orthonormal frame as columns in structure-frame coordinates.
    ///
    /// Diagonal Gram matrices give the scaled coordinate frame directly; other
    /// matrices go through Gram-Schmidt on the coordinate frame. Fails in exact
    /// mode when a norm is irrational.
    pub fn orthonormal_frame(&self) -> Result<Vec<Vec<S>>> {
        let n = self.dim();
        let diagonal = (0..n).all(|i| (0..n).all(|j| i == j || self.gram[(i, j)].is_zero()));
        let unit = |i: usize| {
            let mut v = vec![S::zero(); n];
            v[i] = S::one();
            v
        };
        let mut frame: Vec<Vec<S>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut v = unit(i);
            if !diagonal {
                for f in &frame {
                    let proj = self.inner(f, &v);
                    for (vk, fk) in v.iter_mut().zip(f) {
                        *vk = vk.clone() - proj.clone() * fk.clone();
                    }
                }
            }
            let norm2 = self.inner(&v, &v);
            let norm = norm2
                .sqrt_exact()
                .ok_or_else(|| Error::Irrational(norm2.to_string()))?;
            frame.push(v.into_iter().map(|x| x / norm.clone()).collect());
        }
        Ok(frame)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Result<InnerProductOnAlgebra<T>> {
        InnerProductOnAlgebra::new(self.gram.map(f))
    }
}

/// Whether the metric is propagated by left or right translation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Chirality {
    Left,
    Right,
}

impl Chirality {
    /// Bracket of the invariant fields of this chirality, given the
    /// left-invariant bracket.
    pub fn frame<S: Scalar>(self, left: &LieAlgebraFrame<S>) -> LieAlgebraFrame<S> {
        match self {
            Chirality::Left => left.clone(),
            Chirality::Right => left.negated(),
        }
    }
}

impl fmt::Display for Chirality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chirality::Left => "left",
            Chirality::Right => "right",
        })
    }
}

impl FromStr for Chirality {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "left" | "l" => Ok(Chirality::Left),
            "right" | "r" => Ok(Chirality::Right),
            other => Err(Error::Parse(format!("unknown chirality {other:?}"))),
        }
    }
}

/// A left- or right-invariant Riemannian metric, given by an inner product on
/// the Lie algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantMetric<S> {
    inner: InnerProductOnAlgebra<S>,
    chirality: Chirality,
}

impl<S: Scalar> InvariantMetric<S> {
    pub fn new(gram: Matrix<S>, chirality: Chirality) -> Result<Self> {
        Ok(Self {
            inner: InnerProductOnAlgebra::new(gram)?,
            chirality,
        })
    }

    pub fn left(gram: Matrix<S>) -> Result<Self> {
        Self::new(gram, Chirality::Left)
    }

    /// `g_{α1,α2}` on the su(2) frame: `{α1 e1, α2 e2, e3}` is orthonormal.
    pub fn family(alpha1: S, alpha2: S, chirality: Chirality) -> Result<Self> {
        check_positive("alpha1", &alpha1)?;
        check_positive("alpha2", &alpha2)?;
        let inv_sq = |a: &S| S::one() / (a.clone() * a.clone());
        Self::new(
            Matrix::diagonal(&[inv_sq(&alpha1), inv_sq(&alpha2), S::one()]),
            chirality,
        )
    }

    /// The Berger metric `g_{α,1}`.
    pub fn berger(alpha: S, chirality: Chirality) -> Result<Self> {
        Self::family(alpha, S::one(), chirality)
    }

    /// The bi-invariant round metric `g_{1,1}`.
    pub fn round(chirality: Chirality) -> Self {
        Self::family(S::one(), S::one(), chirality).expect("round metric")
    }

    pub fn chirality(&self) -> Chirality {
        self.chirality
    }

    pub fn inner_product(&self) -> &InnerProductOnAlgebra<S> {
        &self.inner
    }

    pub fn with_chirality(&self, chirality: Chirality) -> Self {
        Self {
            inner: self.inner.clone(),
            chirality,
        }
    }

    /// `ε g`.
    pub fn scaled(&self, eps: &S) -> Result<Self> {
        Ok(Self {
            inner: self.inner.scaled(eps)?,
            chirality: self.chirality,
        })
    }

    /// The frame whose bracket matches this metric's chirality.
    pub fn effective_frame(&self, left: &LieAlgebraFrame<S>) -> Result<LieAlgebraFrame<S>> {
        if left.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: left.dim(),
                got: self.dim(),
            });
        }
        Ok(self.chirality.frame(left))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Result<InvariantMetric<T>> {
        Ok(InvariantMetric {
            inner: self.inner.map(f)?,
            chirality: self.chirality,
        })
    }
}

impl<S> Deref for InvariantMetric<S> {
    type Target = InnerProductOnAlgebra<S>;

    fn deref(&self) -> &Self::Target {
        &self.inner
    }
}

pub(crate) fn check_positive<S: Scalar>(name: &'static str, v: &S) -> Result<()> {
    if *v > S::zero() && v.to_f64().is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositive {
            name,
            value: v.to_string(),
        })
    }
}
