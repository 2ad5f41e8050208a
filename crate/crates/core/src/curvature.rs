use crate::connection::ConnectionCoefficients;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::metric::InnerProductOnAlgebra;
use crate::scalar::Scalar;

/// `R_{e_i,e_j} e_k = Σ_l R[l][i][j][k] e_l`, stored as one endomorphism
/// matrix per ordered pair `(i, j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureTensor<S> {
    dim: usize,
    blocks: Vec<Matrix<S>>,
}

impl<S: Scalar> CurvatureTensor<S> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `R_{e_i, e_j}` as a matrix on frame coordinates.
    pub fn endomorphism(&self, i: usize, j: usize) -> &Matrix<S> {
        &self.blocks[i * self.dim + j]
    }

    pub fn component(&self, l: usize, i: usize, j: usize, k: usize) -> &S {
        &self.endomorphism(i, j)[(l, k)]
    }

    /// `R_{X,Y} Z` for invariant fields.
    pub fn apply(&self, x: &[S], y: &[S], z: &[S]) -> Vec<S> {
        let n = self.dim;
        let mut out = vec![S::zero(); n];
        for (i, xi) in x.iter().enumerate().take(n) {
            for (j, yj) in y.iter().enumerate().take(n) {
                let w = xi.clone() * yj.clone();
                if w.is_zero() {
                    continue;
                }
                let rz = self.endomorphism(i, j).mul_vec(z);
                for (o, r) in out.iter_mut().zip(rz) {
                    *o = o.clone() + w.clone() * r;
                }
            }
        }
        out
    }

    /// Sectional curvature of the plane spanned by `x` and `y`.
    pub fn sectional(&self, g: &InnerProductOnAlgebra<S>, x: &[S], y: &[S]) -> Result<S> {
        let area = g.inner(x, x) * g.inner(y, y) - g.inner(x, y) * g.inner(x, y);
        if area.is_zero() {
            return Err(Error::DegenerateMetric);
        }
        Ok(g.inner(&self.apply(x, y, y), x) / area)
    }

    /// Largest `|R[·][i][j][·] + R[·][j][i][·]|`.
    pub fn antisymmetry_defect(&self) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                worst = worst.max(
                    self.endomorphism(i, j)
                        .add(self.endomorphism(j, i))
                        .max_abs(),
                );
            }
        }
        worst
    }
}

/// Curvature `R_{X,Y} = ∇_X ∇_Y - ∇_Y ∇_X - ∇_{[X,Y]}` of an invariant
/// connection, torsion-free or not.
pub fn curvature<S: Scalar>(conn: &ConnectionCoefficients<S>) -> CurvatureTensor<S> {
    let n = conn.dim();
    let frame = conn.frame();
    let mats: Vec<Matrix<S>> = (0..n).map(|i| conn.matrix(i)).collect();
    let mut blocks = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut r = mats[i].commutator(&mats[j]);
            for (m, mat) in mats.iter().enumerate() {
                let c = frame.constant(m, i, j);
                if !c.is_zero() {
                    r = r.sub(&mat.scale(c));
                }
            }
            blocks.push(r);
        }
    }
    CurvatureTensor { dim: n, blocks }
}

/// Ricci tensor as a bilinear form in the structure frame.
#[derive(Clone, Debug, PartialEq)]
pub struct RicciTensor<S> {
    matrix: Matrix<S>,
}

impl<S: Scalar> RicciTensor<S> {
    pub fn from_matrix(matrix: Matrix<S>) -> Self {
        Self { matrix }
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn value(&self, x: &[S], y: &[S]) -> S {
        self.matrix.bilinear(x, y)
    }

    /// `Ric(X) = Ric(X, X)`.
    pub fn quadratic(&self, x: &[S]) -> S {
        self.value(x, x)
    }

    pub fn symmetric_part(&self) -> Matrix<S> {
        self.matrix.symmetric_part()
    }

    pub fn skew_part(&self) -> Matrix<S> {
        self.matrix.skew_part()
    }

    /// `Ric(v, v)` for each vector of an orthonormal frame.
    pub fn frame_values(&self, frame: &[Vec<S>]) -> Vec<S> {
        frame.iter().map(|v| self.quadratic(v)).collect()
    }
}

impl RicciTensor<f64> {
    /// Eigenvalues of the symmetric part relative to `g` (ascending).
    pub fn eigenvalues(&self, g: &InnerProductOnAlgebra<f64>) -> Result<Vec<f64>> {
        let frame = g.orthonormal_frame()?;
        let n = frame.len();
        let sym = self.symmetric_part();
        let m = Matrix::from_fn(n, |a, b| sym.bilinear(&frame[a], &frame[b]));
        let mut ev: Vec<f64> = nalgebra::SymmetricEigen::new(crate::linalg::to_nalgebra(&m))
            .eigenvalues
            .iter()
            .copied()
            .collect();
        ev.sort_by(f64::total_cmp);
        Ok(ev)
    }
}

/// `Ric(Y, Z) = tr(X ↦ R_{X,Y} Z) = Σ_a R[a][a][y][z]`.
///
/// The trace of an endomorphism needs no metric; it agrees with
/// `Σ_i g(R_{E_i,Y} Z, E_i)` for any orthonormal frame `{E_i}`.
pub fn ricci<S: Scalar>(conn: &ConnectionCoefficients<S>) -> RicciTensor<S> {
    ricci_from_curvature(&curvature(conn))
}

pub fn ricci_from_curvature<S: Scalar>(r: &CurvatureTensor<S>) -> RicciTensor<S> {
    let n = r.dim();
    let matrix = Matrix::from_fn(n, |y, z| {
        (0..n).fold(S::zero(), |acc, a| acc + r.component(a, a, y, z).clone())
    });
    RicciTensor { matrix }
}
