//! Sign of the Ricci curvature across the family `g_{α1,α2}` on S^3.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::connection::levi_civita;
use crate::curvature::ricci;
use crate::error::Result;
use crate::frame::LieAlgebraFrame;
use crate::metric::{Chirality, InvariantMetric};
use crate::scalar::Scalar;

/// Relative tolerance for treating a float eigenvalue as zero.
pub const EIGENVALUE_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RicciRegion {
    /// All eigenvalues positive.
    Interior,
    /// Non-negative with at least one zero eigenvalue.
    Boundary,
    /// Some eigenvalue negative.
    Outside,
}

impl fmt::Display for RicciRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RicciRegion::Interior => "interior",
            RicciRegion::Boundary => "boundary",
            RicciRegion::Outside => "outside",
        })
    }
}

/// Ricci eigenvalues of `g_{α1,α2}` along `α1 e1, α2 e2, e3`, which
/// diagonalize it.
///
/// Computed through the Levi-Civita connection and curvature of the family
/// metric, so it stays exact for rational parameters.
pub fn family_ricci_eigenvalues<S: Scalar>(alpha1: &S, alpha2: &S) -> Result<[S; 3]> {
    let su2 = LieAlgebraFrame::<S>::su2();
    let g = InvariantMetric::family(alpha1.clone(), alpha2.clone(), Chirality::Left)?;
    let ric = ricci(&levi_civita(&su2, &g)?);
    let z = S::zero;
    let e = [
        vec![alpha1.clone(), z(), z()],
        vec![z(), alpha2.clone(), z()],
        vec![z(), z(), S::one()],
    ];
    Ok([
        ric.quadratic(&e[0]),
        ric.quadratic(&e[1]),
        ric.quadratic(&e[2]),
    ])
}

/// Classifies an eigenvalue triple. Exact scalars compare with zero exactly;
/// floats treat `|λ| ≤ EIGENVALUE_TOL · max(1, max|λ|)` as zero.
pub fn classify_eigenvalues<S: Scalar>(eigenvalues: &[S]) -> RicciRegion {
    let size = eigenvalues
        .iter()
        .fold(1.0f64, |m, x| m.max(x.to_f64().abs()));
    let tol = EIGENVALUE_TOL * size;
    let mut zero = false;
    for v in eigenvalues {
        if v.is_negligible(tol) {
            zero = true;
        } else if v.is_negative() {
            return RicciRegion::Outside;
        }
    }
    if zero {
        RicciRegion::Boundary
    } else {
        RicciRegion::Interior
    }
}

/// Region of `(α1, α2)` in the Ricci-positivity picture.
pub fn ricci_positivity<S: Scalar>(alpha1: &S, alpha2: &S) -> Result<RicciRegion> {
    Ok(classify_eigenvalues(&family_ricci_eigenvalues(
        alpha1, alpha2,
    )?))
}

/// The three curves in the `(α1, α2)` quadrant on which one eigenvalue
/// vanishes, as `α2` values over a given `α1` (`None` where the curve has no
/// point over `α1`):
/// `α2² = α1²/(1+α1²)`, `α2² = α1²/(α1²-1)` for `α1 > 1`,
/// `α2² = α1²/(1-α1²)` for `α1 < 1`.
pub fn boundary_curves(alpha1: f64) -> [Option<f64>; 3] {
    let a2 = alpha1 * alpha1;
    let c1 = Some((a2 / (1.0 + a2)).sqrt());
    let c2 = (alpha1 > 1.0).then(|| (a2 / (a2 - 1.0)).sqrt());
    let c3 = (alpha1 < 1.0).then(|| (a2 / (1.0 - a2)).sqrt());
    [c1, c2, c3]
}
