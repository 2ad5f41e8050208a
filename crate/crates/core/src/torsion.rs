//! Metric connections with totally skew-symmetric torsion
//! `∇^T = ∇^g + ½ T`, where `g(T(X, Y), Z) = H(X, Y, Z)` for a 3-form `H`.

use rayon::prelude::*;
use serde::Serialize;

use crate::connection::{levi_civita, ConnectionCoefficients, Tensor3};
use crate::curvature::{ricci, RicciTensor};
use crate::error::{Error, Result};
use crate::forms::{subsets, InvariantForm};
use crate::frame::LieAlgebraFrame;
use crate::hodge::codifferential;
use crate::linalg::Matrix;
use crate::metric::{InnerProductOnAlgebra, InvariantMetric};
use crate::sampling::{random_form, random_gram, trial_rng};
use crate::scalar::Scalar;

/// Relative tolerance for skew-symmetry of float torsion tensors.
pub const SKEW_TOL: f64 = 1e-10;

/// Bound on the coefficients of randomly sampled 3-forms.
pub const SAMPLE_BOUND: f64 = 2.0;

/// A torsion tensor `T(e_i, e_j) = Σ_k T[k][i][j] e_k` whose lowering by the
/// metric is a 3-form.
#[derive(Clone, Debug, PartialEq)]
pub struct TorsionTensor<S> {
    components: Tensor3<S>,
    form: InvariantForm<S>,
}

impl<S: Scalar> TorsionTensor<S> {
    /// Accepts components only if `g(T(e_i, e_j), e_l)` is totally
    /// skew-symmetric.
    pub fn from_components(g: &InnerProductOnAlgebra<S>, components: Tensor3<S>) -> Result<Self> {
        let n = g.dim();
        if components.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: components.dim(),
            });
        }
        let lowered = lower(g, &components);
        let defect = skew_defect(&lowered);
        let tol = SKEW_TOL * lowered.max_abs().max(1.0);
        if (S::EXACT && defect > 0.0) || defect > tol {
            return Err(Error::TorsionNotSkew(defect));
        }
        let terms: Vec<(Vec<usize>, S)> = subsets(n, 3)
            .iter()
            .map(|idx| (idx.clone(), lowered[(idx[2], idx[0], idx[1])].clone()))
            .collect();
        let form = InvariantForm::from_terms(n, 3, &terms)?;
        Ok(Self { components, form })
    }

    pub fn components(&self) -> &Tensor3<S> {
        &self.components
    }

    /// The 3-form `H(X, Y, Z) = g(T(X, Y), Z)`.
    pub fn three_form(&self) -> &InvariantForm<S> {
        &self.form
    }

    pub fn dim(&self) -> usize {
        self.components.dim()
    }

    /// `T_X Y = T(X, Y)`.
    pub fn apply(&self, x: &[S], y: &[S]) -> Vec<S> {
        self.components.contract(x, y)
    }

    /// `Q(X, Y) = Σ_{a,b} g^{ab} g(T_{e_a} X, T_{e_b} Y)`, which equals
    /// `Σ_i g(T_{E_i} X, T_{E_i} Y)` for any orthonormal frame `{E_i}`.
    pub fn square_form(&self, g: &InnerProductOnAlgebra<S>) -> Matrix<S> {
        let n = self.dim();
        let t = &self.components;
        // tg[a][x][l] = g(T(e_a, e_x), e_l)
        let tg = lower(g, t);
        Matrix::from_fn(n, |x, y| {
            let mut total = S::zero();
            for a in 0..n {
                for b in 0..n {
                    let gab = &g.inverse()[(a, b)];
                    if gab.is_zero() {
                        continue;
                    }
                    let mut dot = S::zero();
                    for l in 0..n {
                        let u = &t[(l, b, y)];
                        if !u.is_zero() {
                            dot = dot + tg[(l, a, x)].clone() * u.clone();
                        }
                    }
                    total = total + gab.clone() * dot;
                }
            }
            total
        })
    }

    /// `¼ Σ_i ‖T_{E_i} X‖²`, the amount by which torsion lowers `Ric(X)`.
    pub fn deficit(&self, g: &InnerProductOnAlgebra<S>, x: &[S]) -> S {
        self.square_form(g).bilinear(x, x) * S::from_ratio(1, 4)
    }
}

/// `lowered[l][i][j] = g(T(e_i, e_j), e_l)`.
fn lower<S: Scalar>(g: &InnerProductOnAlgebra<S>, t: &Tensor3<S>) -> Tensor3<S> {
    let n = t.dim();
    Tensor3::from_fn(n, |l, i, j| {
        (0..n).fold(S::zero(), |acc, k| {
            let tk = &t[(k, i, j)];
            if tk.is_zero() {
                acc
            } else {
                acc + tk.clone() * g.gram()[(k, l)].clone()
            }
        })
    })
}

/// Largest violation of `L[l][i][j] = -L[l][j][i] = -L[j][i][l]`.
fn skew_defect<S: Scalar>(lowered: &Tensor3<S>) -> f64 {
    let n = lowered.dim();
    let mut worst: f64 = 0.0;
    for l in 0..n {
        for i in 0..n {
            for j in 0..n {
                let v = &lowered[(l, i, j)];
                let a = (v.clone() + lowered[(l, j, i)].clone()).to_f64().abs();
                let b = (v.clone() + lowered[(j, i, l)].clone()).to_f64().abs();
                worst = worst.max(a).max(b);
            }
        }
    }
    worst
}

/// The torsion `T^k_{ij} = Σ_r g^{kr} H_{ijr}` of a 3-form.
pub fn torsion_from_three_form<S: Scalar>(
    g: &InnerProductOnAlgebra<S>,
    h: &InvariantForm<S>,
) -> Result<TorsionTensor<S>> {
    let n = g.dim();
    if h.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: h.dim(),
        });
    }
    if h.degree() != 3 {
        return Err(Error::DegreeMismatch {
            expected: 3,
            got: h.degree(),
        });
    }
    let mut hl = Tensor3::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for r in 0..n {
                hl[(r, i, j)] = h.component(&[i, j, r]);
            }
        }
    }
    let components = Tensor3::from_fn(n, |k, i, j| {
        (0..n).fold(S::zero(), |acc, r| {
            let v = &hl[(r, i, j)];
            if v.is_zero() {
                acc
            } else {
                acc + g.inverse()[(k, r)].clone() * v.clone()
            }
        })
    });
    let form = h.clone();
    Ok(TorsionTensor { components, form })
}

/// `∇^g + ½ T` for a Levi-Civita connection `lc`.
pub fn connection_with_torsion<S: Scalar>(
    lc: &ConnectionCoefficients<S>,
    torsion: &TorsionTensor<S>,
) -> Result<ConnectionCoefficients<S>> {
    if torsion.dim() != lc.dim() {
        return Err(Error::DimensionMismatch {
            expected: lc.dim(),
            got: torsion.dim(),
        });
    }
    let t = torsion.components();
    let n = t.dim();
    let mut worst: f64 = 0.0;
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                worst = worst.max((t[(k, i, j)].clone() + t[(k, j, i)].clone()).to_f64().abs());
            }
        }
    }
    if (S::EXACT && worst > 0.0) || worst > SKEW_TOL * t.max_abs().max(1.0) {
        return Err(Error::TorsionNotSkew(worst));
    }
    lc.shifted(&t.scale(&S::half()))
}

/// `Ric^{g,T}` computed from the curvature of `∇^T` itself.
pub fn ricci_with_torsion_direct<S: Scalar>(
    frame: &LieAlgebraFrame<S>,
    metric: &InvariantMetric<S>,
    h: &InvariantForm<S>,
) -> Result<RicciTensor<S>> {
    let lc = levi_civita(frame, metric)?;
    let t = torsion_from_three_form(metric.inner_product(), h)?;
    Ok(ricci(&connection_with_torsion(&lc, &t)?))
}

/// `d*H` as a matrix `D[x][y] = (d*H)(e_x, e_y)`.
fn codifferential_matrix<S: Scalar>(
    frame: &LieAlgebraFrame<S>,
    metric: &InvariantMetric<S>,
    h: &InvariantForm<S>,
) -> Result<Matrix<S>> {
    let effective = metric.effective_frame(frame)?;
    let dh = codifferential(&effective, metric.inner_product(), h)?;
    Ok(Matrix::from_fn(metric.dim(), |x, y| dh.component(&[x, y])))
}

/// `Ric^g(X, Y) - ¼ Q(X, Y) - ½ d*H(X, Y)`, with `Q` the square form of `T`.
///
/// Fails with [`Error::InconsistentTorsion`] unless `T` lowers to `H` under
/// this metric.
pub fn ricci_torsion_formula<S: Scalar>(
    frame: &LieAlgebraFrame<S>,
    metric: &InvariantMetric<S>,
    torsion: &TorsionTensor<S>,
    h: &InvariantForm<S>,
) -> Result<RicciTensor<S>> {
    let lowered =
        TorsionTensor::from_components(metric.inner_product(), torsion.components().clone())?;
    let diff = lowered.three_form().sub(h)?;
    let scale = h.max_abs().max(1.0);
    if (S::EXACT && diff.max_abs() > 0.0) || diff.max_abs() > SKEW_TOL * scale {
        return Err(Error::InconsistentTorsion(diff.max_abs()));
    }
    let ric = ricci(&levi_civita(frame, metric)?);
    let q = torsion.square_form(metric.inner_product());
    let d = codifferential_matrix(frame, metric, h)?;
    let out = ric
        .matrix()
        .sub(&q.scale(&S::from_ratio(1, 4)))
        .sub(&d.scale(&S::half()));
    Ok(RicciTensor::from_matrix(out))
}

/// `Ric^{εg,T_ε}` for the torsion `T_ε` of a fixed 3-form `H` under `εg`,
/// computed directly from the connection.
pub fn scaled_ricci_family<S: Scalar>(
    frame: &LieAlgebraFrame<S>,
    metric: &InvariantMetric<S>,
    h: &InvariantForm<S>,
    eps: &S,
) -> Result<RicciTensor<S>> {
    ricci_with_torsion_direct(frame, &metric.scaled(eps)?, h)
}

/// The same Ricci tensor from quantities of the unscaled metric:
/// `Ric^g - Q/(4ε²) - d*H/(2ε)`. The Levi-Civita Ricci tensor is
/// scale-invariant, `T_ε = T/ε`, and the codifferential of `εg` is `d*/ε`.
pub fn scaled_ricci_law<S: Scalar>(
    frame: &LieAlgebraFrame<S>,
    metric: &InvariantMetric<S>,
    h: &InvariantForm<S>,
    eps: &S,
) -> Result<RicciTensor<S>> {
    crate::metric::check_positive("epsilon", eps)?;
    let ric = ricci(&levi_civita(frame, metric)?);
    let t = torsion_from_three_form(metric.inner_product(), h)?;
    let q = t.square_form(metric.inner_product());
    let d = codifferential_matrix(frame, metric, h)?;
    let four_eps2 = S::from_int(4) * eps.clone() * eps.clone();
    let two_eps = S::from_int(2) * eps.clone();
    let out = ric
        .matrix()
        .sub(&q.scale(&(S::one() / four_eps2)))
        .sub(&d.scale(&(S::one() / two_eps)));
    Ok(RicciTensor::from_matrix(out))
}

/// Outcome of comparing `Ric^g` with `Ric^{g,T}` on random 3-forms.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MaximalityReport {
    pub trials: usize,
    /// Trials where some frame vector had `Ric^{g,T}(X) > Ric^g(X) + tol`.
    pub violations: usize,
    /// Trials with nonzero `H` where some frame vector had a strict drop.
    pub strict: usize,
    /// Smallest `Ric^g(X) - Ric^{g,T}(X)` observed.
    pub min_deficit: f64,
    /// Largest gap between that difference and `¼ Σ_i ‖T_{E_i} X‖²`.
    pub max_formula_error: f64,
}

/// Checks `Ric^{g,T}(X) ≤ Ric^g(X)` for every frame vector `X` over
/// `trials` random 3-forms with coefficients in `[-2, 2]`.
pub fn levi_civita_maximality(
    frame: &LieAlgebraFrame<f64>,
    metric: &InvariantMetric<f64>,
    trials: usize,
    seed: u64,
) -> Result<MaximalityReport> {
    let n = metric.dim();
    let ric_g = ricci(&levi_civita(frame, metric)?);
    let outcomes: Vec<Result<TrialOutcome>> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(seed, trial as u64);
            let h = random_form(&mut rng, n, 3, SAMPLE_BOUND);
            compare_on_frame(frame, metric, &ric_g, &h)
        })
        .collect();
    let mut report = MaximalityReport {
        trials,
        violations: 0,
        strict: 0,
        min_deficit: f64::INFINITY,
        max_formula_error: 0.0,
    };
    for o in outcomes {
        report.absorb(&o?);
    }
    Ok(report)
}

struct TrialOutcome {
    min_deficit: f64,
    violated: bool,
    strict: bool,
    formula_error: f64,
}

impl MaximalityReport {
    fn absorb(&mut self, o: &TrialOutcome) {
        self.violations += o.violated as usize;
        self.strict += o.strict as usize;
        self.min_deficit = self.min_deficit.min(o.min_deficit);
        self.max_formula_error = self.max_formula_error.max(o.formula_error);
    }
}

fn compare_on_frame(
    frame: &LieAlgebraFrame<f64>,
    metric: &InvariantMetric<f64>,
    ric_g: &RicciTensor<f64>,
    h: &InvariantForm<f64>,
) -> Result<TrialOutcome> {
    let n = metric.dim();
    let ric_t = ricci_with_torsion_direct(frame, metric, h)?;
    let t = torsion_from_three_form(metric.inner_product(), h)?;
    let scale = ric_g
        .matrix()
        .max_abs()
        .max(t.square_form(metric.inner_product()).max_abs())
        .max(1.0);
    let tol = 1e-10 * scale;
    let mut out = TrialOutcome {
        min_deficit: f64::INFINITY,
        violated: false,
        strict: false,
        formula_error: 0.0,
    };
    for i in 0..n {
        let mut x = vec![0.0; n];
        x[i] = 1.0;
        let deficit = ric_g.quadratic(&x) - ric_t.quadratic(&x);
        out.min_deficit = out.min_deficit.min(deficit);
        out.violated |= deficit < -tol;
        out.strict |= deficit > tol;
        out.formula_error = out
            .formula_error
            .max((deficit - t.deficit(metric.inner_product(), &x)).abs() / scale);
    }
    out.strict &= h.max_abs() > 0.0;
    Ok(out)
}

/// Summary of random checks of the torsion Ricci formula on one algebra.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TorsionCheckReport {
    pub trials: usize,
    /// Largest relative difference between the direct and formula Ricci tensors.
    pub max_formula_residual: f64,
    /// Largest relative difference between `Ric^{g,T}` skew part and `-½ d*H`.
    pub max_skew_residual: f64,
    pub maximality: MaximalityReport,
}

impl TorsionCheckReport {
    pub fn passed(&self, tol: f64) -> bool {
        self.max_formula_residual <= tol
            && self.max_skew_residual <= tol
            && self.maximality.violations == 0
            && self.maximality.strict == self.trials
    }
}

/// Draws `trials` random metrics and 3-forms on `frame` and compares the
/// direct and closed-form torsion Ricci tensors. Deterministic in `seed`.
pub fn torsion_check(
    frame: &LieAlgebraFrame<f64>,
    trials: usize,
    seed: u64,
) -> Result<TorsionCheckReport> {
    let n = frame.dim();
    struct Row {
        formula: f64,
        skew: f64,
        outcome: TrialOutcome,
    }
    let rows: Vec<Result<Row>> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(seed, trial as u64);
            let metric = InvariantMetric::left(random_gram(&mut rng, n))?;
            let h = random_form(&mut rng, n, 3, SAMPLE_BOUND);
            let t = torsion_from_three_form(metric.inner_product(), &h)?;
            let direct = ricci_with_torsion_direct(frame, &metric, &h)?;
            let formula = ricci_torsion_formula(frame, &metric, &t, &h)?;
            let scale = direct.matrix().max_abs().max(1.0);
            let d = codifferential_matrix(frame, &metric, &h)?;
            let skew = direct.skew_part().max_abs_diff(&d.scale(&-0.5)) / scale;
            let ric_g = ricci(&levi_civita(frame, &metric)?);
            Ok(Row {
                formula: direct.matrix().max_abs_diff(formula.matrix()) / scale,
                skew,
                outcome: compare_on_frame(frame, &metric, &ric_g, &h)?,
            })
        })
        .collect();
    let mut report = TorsionCheckReport {
        trials,
        max_formula_residual: 0.0,
        max_skew_residual: 0.0,
        maximality: MaximalityReport {
            trials,
            violations: 0,
            strict: 0,
            min_deficit: f64::INFINITY,
            max_formula_error: 0.0,
        },
    };
    for row in rows {
        let row = row?;
        report.max_formula_residual = report.max_formula_residual.max(row.formula);
        report.max_skew_residual = report.max_skew_residual.max(row.skew);
        report.maximality.absorb(&row.outcome);
    }
    Ok(report)
}
