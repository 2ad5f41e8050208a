//! Reduction of a left-invariant metric on an su(2)-type algebra to the
//! two-parameter family `g_{α1,α2}`, up to scale and automorphism.
//!
//! For a unimodular 3-dimensional algebra with an inner product there is an
//! orthonormal basis `{E1, E2, E3}` with `[E2, E3] = λ1 E1`, `[E3, E1] = λ2 E2`,
//! `[E1, E2] = λ3 E3`. The algebra is su(2) exactly when all three `λ_i`
//! share a sign.

use nalgebra::{Matrix3, SymmetricEigen, Vector3};

use crate::error::{Error, Result};
use crate::frame::LieAlgebraFrame;
use crate::linalg::Matrix;
use crate::metric::{Chirality, InvariantMetric};

const SIGN_TOL: f64 = 1e-12;

/// A metric expressed as `scale · g_{α1,α2}` pulled back along `frame_map`.
#[derive(Clone, Debug, PartialEq)]
pub struct MilnorNormalForm {
    pub alpha1: f64,
    pub alpha2: f64,
    /// Positive factor `s` with `g(f_i, f_j) = s · g_{α1,α2}(e_i, e_j)`.
    pub scale: f64,
    /// Columns `f_i` in input coordinates; they satisfy `[f_1, f_2] = 2 f_3`
    /// cyclically for the bracket of the metric's chirality.
    pub frame_map: Matrix<f64>,
    /// `λ1 ≥ λ2 ≥ λ3 > 0`.
    pub milnor_eigenvalues: [f64; 3],
}

impl MilnorNormalForm {
    /// The family metric, with the chirality of the input.
    pub fn family_metric(&self, chirality: Chirality) -> Result<InvariantMetric<f64>> {
        InvariantMetric::family(self.alpha1, self.alpha2, chirality)
    }

    /// `(α1, α2)` folded into the chamber `α1 ≤ α2 ≤ 1` by the symmetries of
    /// the family (permutation and overall scale of `(α1, α2, 1)`).
    pub fn canonical_parameters(&self) -> (f64, f64) {
        let mut t = [self.alpha1, self.alpha2, 1.0];
        t.sort_by(f64::total_cmp);
        (t[0] / t[2], t[1] / t[2])
    }
}

/// Milnor normal form of `metric` on the algebra `frame` (left bracket).
///
/// Returns [`Error::NotSu2Type`] when the Milnor eigenvalues vanish or have
/// mixed signs, and [`Error::DimensionMismatch`] outside dimension 3.
pub fn milnor_normal_form(
    frame: &LieAlgebraFrame<f64>,
    metric: &InvariantMetric<f64>,
) -> Result<MilnorNormalForm> {
    if frame.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: frame.dim(),
        });
    }
    let bracket = metric.effective_frame(frame)?;
    let on = metric.orthonormal_frame()?;

    // Column c of L holds [F_a, F_b] in orthonormal coordinates, (a, b, c) cyclic.
    let mut l = Matrix3::zeros();
    for c in 0..3 {
        let (a, b) = ((c + 1) % 3, (c + 2) % 3);
        let v = bracket.bracket(&on[a], &on[b])?;
        for r in 0..3 {
            l[(r, c)] = metric.inner(&v, &on[r]);
        }
    }
    let sym = (l + l.transpose()) * 0.5;
    let eig = SymmetricEigen::new(sym);
    let mu = [eig.eigenvalues[0], eig.eigenvalues[1], eig.eigenvalues[2]];
    let size = mu
        .iter()
        .fold(0.0f64, |m, x| m.max(x.abs()))
        .max(f64::MIN_POSITIVE);
    let orient = if mu.iter().all(|&x| x > SIGN_TOL * size) {
        1.0
    } else if mu.iter().all(|&x| x < -SIGN_TOL * size) {
        -1.0
    } else {
        return Err(Error::NotSu2Type(mu));
    };
    if (l - l.transpose()).abs().max() > 1e-9 * size {
        return Err(Error::NotSu2Type(mu));
    }

    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| (orient * mu[j]).total_cmp(&(orient * mu[i])));
    let lambda = order.map(|i| orient * mu[i]);
    let u1: Vector3<f64> = eig.eigenvectors.column(order[0]).into();
    let u2: Vector3<f64> = eig.eigenvectors.column(order[1]).into();
    // Orientation of E3 fixes the sign of every structure constant at once.
    let u3 = u1.cross(&u2) * orient;
    let basis = [u1, u2, u3];

    let [l1, l2, l3] = lambda;
    let alpha1 = (l3 / l1).sqrt();
    let alpha2 = (l3 / l2).sqrt();
    let scale = 4.0 / (l1 * l2);
    let k = [
        2.0 / (l2 * l3).sqrt(),
        2.0 / (l1 * l3).sqrt(),
        2.0 / (l1 * l2).sqrt(),
    ];

    let mut frame_map = Matrix::zeros(3);
    for (i, u) in basis.iter().enumerate() {
        for r in 0..3 {
            let coord: f64 = (0..3).map(|a| u[a] * on[a][r]).sum();
            frame_map[(r, i)] = k[i] * coord;
        }
    }
    Ok(MilnorNormalForm {
        alpha1,
        alpha2,
        scale,
        frame_map,
        milnor_eigenvalues: lambda,
    })
}
