//! Chern-Simons forms of invariant connections for the first Pontryagin
//! pairing, and their integrals over S^3 = SU(2).
//!
//! A connection enters as its 1-form `Θ` with values in endomorphisms of the
//! frame bundle, written in a fixed basis of the fiber. The pairing carries a
//! representation `ρ` of those values and a rational factor `q`, giving
//! `CS(Θ) = (q/π²) Tr(ρΘ ∧ ρΩ - ⅓ ρΘ ∧ ρΘ ∧ ρΘ)` with `Ω = dΘ + Θ ∧ Θ`.

use std::f64::consts::PI;

use crate::connection::ConnectionCoefficients;
use crate::error::{Error, Result};
use crate::forms::{subsets, InvariantForm};
use crate::frame::LieAlgebraFrame;
use crate::linalg::Matrix;
use crate::metric::{Chirality, InnerProductOnAlgebra, InvariantMetric};
use crate::scalar::{Exact, Scalar};

/// `∫_{S^3} e^1 ∧ e^2 ∧ e^3 / π²` for the standard su(2) coframe.
pub const SU2_VOLUME_OVER_PI_SQUARED: i64 = 2;

/// An invariant connection 1-form: `values[i] = Θ(e_i)` in a fiber basis
/// whose vectors are the columns of `basis` (structure-frame coordinates).
#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionForm<S> {
    frame: LieAlgebraFrame<S>,
    basis: Matrix<S>,
    values: Vec<Matrix<S>>,
}

impl<S: Scalar> ConnectionForm<S> {
    pub fn new(
        frame: &LieAlgebraFrame<S>,
        basis: Matrix<S>,
        values: Vec<Matrix<S>>,
    ) -> Result<Self> {
        let n = frame.dim();
        if basis.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: basis.dim(),
            });
        }
        if values.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: values.len(),
            });
        }
        if let Some(m) = values.iter().find(|m| m.dim() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: m.dim(),
            });
        }
        Ok(Self {
            frame: frame.clone(),
            basis,
            values,
        })
    }

    /// `Θ(e_i) = ∇_{e_i}` on the structure frame itself.
    pub fn in_structure_frame(conn: &ConnectionCoefficients<S>) -> Self {
        let n = conn.dim();
        let values = (0..n).map(|i| conn.matrix(i)).collect();
        Self {
            frame: conn.frame().clone(),
            basis: Matrix::identity(n),
            values,
        }
    }

    /// `Θ` in a `g`-orthonormal fiber basis; metric connections give
    /// skew-symmetric values there.
    pub fn in_orthonormal_frame(
        conn: &ConnectionCoefficients<S>,
        g: &InnerProductOnAlgebra<S>,
    ) -> Result<Self> {
        let n = conn.dim();
        if g.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: g.dim(),
            });
        }
        let on = g.orthonormal_frame()?;
        let p = Matrix::from_fn(n, |r, c| on[c][r].clone());
        let p_inv = p.inverse()?;
        let values = (0..n).map(|i| p_inv.mul(&conn.matrix(i)).mul(&p)).collect();
        Ok(Self {
            frame: conn.frame().clone(),
            basis: p,
            values,
        })
    }

    /// The connection with `Θ = 0` in the same fiber basis: the one making
    /// every invariant field parallel.
    pub fn flat_like(&self) -> Self {
        let n = self.frame.dim();
        Self {
            frame: self.frame.clone(),
            basis: self.basis.clone(),
            values: vec![Matrix::zeros(n); n],
        }
    }

    pub fn frame(&self) -> &LieAlgebraFrame<S> {
        &self.frame
    }

    pub fn basis(&self) -> &Matrix<S> {
        &self.basis
    }

    pub fn value(&self, i: usize) -> &Matrix<S> {
        &self.values[i]
    }

    pub fn dim(&self) -> usize {
        self.frame.dim()
    }

    /// `Ω(e_i, e_j) = -Θ([e_i, e_j]) + [Θ(e_i), Θ(e_j)]`.
    pub fn curvature(&self, i: usize, j: usize) -> Matrix<S> {
        curvature_of(&self.frame, &self.values, i, j)
    }
}

fn curvature_of<S: Scalar>(
    frame: &LieAlgebraFrame<S>,
    values: &[Matrix<S>],
    i: usize,
    j: usize,
) -> Matrix<S> {
    let mut out = values[i].commutator(&values[j]);
    for (k, v) in values.iter().enumerate() {
        let c = frame.constant(k, i, j);
        if !c.is_zero() {
            out = out.sub(&v.scale(c));
        }
    }
    out
}

/// Representation in which the trace of the pairing is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Representation {
    /// The defining 3-dimensional representation of so(3).
    Vector,
    /// The spin lift so(3) → su(2), realized as left multiplication by
    /// imaginary quaternions on R^4 (the real form of the 2-dimensional
    /// fundamental). Needs skew-symmetric (orthonormal-frame) values.
    Spin,
}

/// The invariant polynomial `(q/π²) Tr(ρ· ∧ ρ·)`, calibrated so that the
/// round metric on S^3 has Chern-Simons integral `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpinPairing {
    representation: Representation,
    numerator: i64,
    denominator: i64,
}

impl SpinPairing {
    /// Checks the calibration against the round metric before accepting.
    pub fn new(representation: Representation, numerator: i64, denominator: i64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::Parse("zero denominator".into()));
        }
        let pairing = Self {
            representation,
            numerator,
            denominator,
        };
        let su2 = LieAlgebraFrame::<Exact>::su2();
        let round = InvariantMetric::<Exact>::round(Chirality::Left);
        let got = cs_integral_s3(&pairing.connection_form(&su2, &round)?, &pairing)?;
        if got != Exact::from_int(-1) {
            return Err(Error::UncalibratedPairing {
                got: got.to_string(),
            });
        }
        Ok(pairing)
    }

    /// `-(1/8π²) Tr` in the spin representation.
    pub fn spin() -> Self {
        Self {
            representation: Representation::Spin,
            numerator: -1,
            denominator: 8,
        }
    }

    /// `-(1/16π²) Tr` in the vector representation.
    pub fn vector() -> Self {
        Self {
            representation: Representation::Vector,
            numerator: -1,
            denominator: 16,
        }
    }

    pub fn representation(&self) -> Representation {
        self.representation
    }

    /// The factor `q` in `(q/π²) Tr`.
    pub fn factor<S: Scalar>(&self) -> S {
        S::from_ratio(self.numerator, self.denominator)
    }

    /// Levi-Civita connection form of `metric` on `left_frame`, in the fiber
    /// basis this representation needs.
    pub fn connection_form<S: Scalar>(
        &self,
        left_frame: &LieAlgebraFrame<S>,
        metric: &InvariantMetric<S>,
    ) -> Result<ConnectionForm<S>> {
        let lc = crate::connection::levi_civita(left_frame, metric)?;
        match self.representation {
            Representation::Vector => Ok(ConnectionForm::in_structure_frame(&lc)),
            Representation::Spin => {
                ConnectionForm::in_orthonormal_frame(&lc, metric.inner_product())
            }
        }
    }

    fn represent<S: Scalar>(&self, a: &Matrix<S>) -> Result<Matrix<S>> {
        match self.representation {
            Representation::Vector => Ok(a.clone()),
            Representation::Spin => spin_lift(a),
        }
    }
}

/// Left multiplication by `i`, `j`, `k` on quaternions in the basis `1, i, j, k`.
fn quaternion_units<S: Scalar>() -> [Matrix<S>; 3] {
    let m = |entries: [[i64; 4]; 4]| Matrix::from_fn(4, |r, c| S::from_int(entries[r][c]));
    [
        m([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]),
        m([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]]),
        m([[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]),
    ]
}

/// `ρ(A) = ½ (a1 λ_i + a2 λ_j + a3 λ_k)` for `A ∈ so(3)` with `a1 = A[2][1]`,
/// `a2 = A[0][2]`, `a3 = A[1][0]`.
fn spin_lift<S: Scalar>(a: &Matrix<S>) -> Result<Matrix<S>> {
    if a.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: a.dim(),
        });
    }
    let defect = a.add(&a.transpose()).max_abs();
    if (S::EXACT && defect > 0.0) || defect > 1e-10 * a.max_abs().max(1.0) {
        return Err(Error::NotSkewConnection(defect));
    }
    let coords = [a[(2, 1)].clone(), a[(0, 2)].clone(), a[(1, 0)].clone()];
    let mut out = Matrix::zeros(4);
    for (unit, c) in quaternion_units::<S>().iter().zip(coords) {
        if !c.is_zero() {
            out = out.add(&unit.scale(&(c * S::half())));
        }
    }
    Ok(out)
}

fn represented<S: Scalar>(
    form: &ConnectionForm<S>,
    pairing: &SpinPairing,
) -> Result<Vec<Matrix<S>>> {
    form.values.iter().map(|v| pairing.represent(v)).collect()
}

/// `Tr(α ∧ F)(e_a, e_b, e_c)` for a matrix 1-form `α` and 2-form `F`.
fn trace_wedge<S: Scalar>(
    alpha: &[Matrix<S>],
    f: impl Fn(usize, usize) -> Matrix<S>,
    [a, b, c]: [usize; 3],
) -> S {
    alpha[a].mul(&f(b, c)).trace() - alpha[b].mul(&f(a, c)).trace() + alpha[c].mul(&f(a, b)).trace()
}

/// `Tr(Θ ∧ Θ ∧ Θ)(e_a, e_b, e_c)`.
fn trace_cube<S: Scalar>(theta: &[Matrix<S>], [a, b, c]: [usize; 3]) -> S {
    let perms = [
        ([a, b, c], 1),
        ([b, c, a], 1),
        ([c, a, b], 1),
        ([b, a, c], -1),
        ([a, c, b], -1),
        ([c, b, a], -1),
    ];
    perms.iter().fold(S::zero(), |acc, (p, sign)| {
        let t = theta[p[0]].mul(&theta[p[1]]).mul(&theta[p[2]]).trace();
        if *sign > 0 {
            acc + t
        } else {
            acc - t
        }
    })
}

/// The unnormalized 3-form `Tr(ρΘ ∧ ρΩ - ⅓ ρΘ ∧ ρΘ ∧ ρΘ)` on the frame.
pub fn cs_trace_form<S: Scalar>(
    form: &ConnectionForm<S>,
    pairing: &SpinPairing,
) -> Result<InvariantForm<S>> {
    let n = form.dim();
    let theta = represented(form, pairing)?;
    let frame = &form.frame;
    let third = S::from_ratio(1, 3);
    let terms: Vec<(Vec<usize>, S)> = subsets(n, 3)
        .iter()
        .map(|idx| {
            let abc = [idx[0], idx[1], idx[2]];
            let omega = |i: usize, j: usize| curvature_of(frame, &theta, i, j);
            let v = trace_wedge(&theta, omega, abc) - third.clone() * trace_cube(&theta, abc);
            (idx.clone(), v)
        })
        .collect();
    InvariantForm::from_terms(n, 3, &terms)
}

/// Coefficient of `e^1 ∧ e^2 ∧ e^3` in the normalized Chern-Simons form of a
/// connection on a 3-dimensional frame.
pub fn cs_frame_coefficient<S: Scalar>(
    form: &ConnectionForm<S>,
    pairing: &SpinPairing,
) -> Result<f64> {
    let tau = top_coefficient(&cs_trace_form(form, pairing)?)?;
    Ok(pairing.factor::<f64>() * tau.to_f64() / (PI * PI))
}

/// `∫_{S^3} CS(Θ)` for a connection on the su(2) frame (either bracket
/// sign). The result is a rational number, exact in exact mode.
pub fn cs_integral_s3<S: Scalar>(form: &ConnectionForm<S>, pairing: &SpinPairing) -> Result<S> {
    check_su2(&form.frame)?;
    let tau = top_coefficient(&cs_trace_form(form, pairing)?)?;
    Ok(S::from_int(SU2_VOLUME_OVER_PI_SQUARED) * pairing.factor::<S>() * tau)
}

/// `∫_{S^3} CS(Θ1, Θ0)`, the transgression
/// `(q/π²) ∫_0^1 2 Tr(ρΔ ∧ ρΩ_t) dt` along `Θ_t = Θ0 + tΔ`, `Δ = Θ1 - Θ0`.
///
/// With `Ω_t = A + tB + t²C` the integrand is a polynomial in `t`, integrated
/// in closed form.
pub fn cs_transgression<S: Scalar>(
    theta1: &ConnectionForm<S>,
    theta0: &ConnectionForm<S>,
    pairing: &SpinPairing,
) -> Result<S> {
    if theta1.frame != theta0.frame || theta1.basis != theta0.basis {
        return Err(Error::FrameMismatch);
    }
    check_su2(&theta0.frame)?;
    let frame = &theta0.frame;
    let t0 = represented(theta0, pairing)?;
    let t1 = represented(theta1, pairing)?;
    let delta: Vec<Matrix<S>> = t1.iter().zip(&t0).map(|(a, b)| a.sub(b)).collect();

    let a_form = |i: usize, j: usize| curvature_of(frame, &t0, i, j);
    let b_form = |i: usize, j: usize| {
        let mut out = t0[i]
            .mul(&delta[j])
            .sub(&t0[j].mul(&delta[i]))
            .add(&delta[i].mul(&t0[j]))
            .sub(&delta[j].mul(&t0[i]));
        for (k, d) in delta.iter().enumerate() {
            let c = frame.constant(k, i, j);
            if !c.is_zero() {
                out = out.sub(&d.scale(c));
            }
        }
        out
    };
    let c_form = |i: usize, j: usize| delta[i].commutator(&delta[j]);

    let abc = [0, 1, 2];
    let integrand = trace_wedge(&delta, a_form, abc)
        + S::half() * trace_wedge(&delta, b_form, abc)
        + S::from_ratio(1, 3) * trace_wedge(&delta, c_form, abc);
    let tau = S::from_int(2) * integrand;
    Ok(S::from_int(SU2_VOLUME_OVER_PI_SQUARED) * pairing.factor::<S>() * tau)
}

fn top_coefficient<S: Scalar>(form: &InvariantForm<S>) -> Result<S> {
    if form.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: form.dim(),
        });
    }
    Ok(form.component(&[0, 1, 2]))
}

fn check_su2<S: Scalar>(frame: &LieAlgebraFrame<S>) -> Result<()> {
    if frame.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: frame.dim(),
        });
    }
    let su2 = LieAlgebraFrame::su2();
    if *frame != su2 && *frame != su2.negated() {
        return Err(Error::OutsideFamily(
            "integrals over S^3 need the standard su(2) frame".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Exact {
        Exact::from_ratio(n, d)
    }

    fn family_form(
        a1: Exact,
        a2: Exact,
        ch: Chirality,
        pairing: &SpinPairing,
    ) -> ConnectionForm<Exact> {
        let g = InvariantMetric::family(a1, a2, ch).unwrap();
        pairing
            .connection_form(&LieAlgebraFrame::su2(), &g)
            .unwrap()
    }

    #[test]
    fn round_metric_is_minus_one_in_both_representations() {
        for p in [SpinPairing::spin(), SpinPairing::vector()] {
            let f = family_form(q(1, 1), q(1, 1), Chirality::Left, &p);
            assert_eq!(cs_integral_s3(&f, &p).unwrap(), q(-1, 1));
            let r = family_form(q(1, 1), q(1, 1), Chirality::Right, &p);
            assert_eq!(cs_integral_s3(&r, &p).unwrap(), q(1, 1));
        }
        assert!(SpinPairing::new(Representation::Spin, -1, 8).is_ok());
        assert!(SpinPairing::new(Representation::Vector, -1, 16).is_ok());
        assert!(matches!(
            SpinPairing::new(Representation::Spin, -1, 16),
            Err(Error::UncalibratedPairing { .. })
        ));
    }

    #[test]
    fn representations_agree_off_the_round_metric() {
        let (s, v) = (SpinPairing::spin(), SpinPairing::vector());
        for (a1, a2) in [(q(1, 2), q(3, 4)), (q(5, 2), q(1, 3)), (q(2, 1), q(2, 1))] {
            let is = cs_integral_s3(
                &family_form(a1.clone(), a2.clone(), Chirality::Left, &s),
                &s,
            )
            .unwrap();
            let iv = cs_integral_s3(&family_form(a1, a2, Chirality::Left, &v), &v).unwrap();
            assert_eq!(is, iv);
        }
    }

    #[test]
    fn frame_coefficient_scales_the_integral() {
        let p = SpinPairing::spin();
        let f = family_form(q(1, 1), q(1, 1), Chirality::Left, &p);
        let c = cs_frame_coefficient(&f, &p).unwrap();
        assert!((c * 2.0 * PI * PI + 1.0).abs() < 1e-14);
    }

    #[test]
    fn transgression_from_flat_and_composition() {
        let s = SpinPairing::spin();
        let th = family_form(q(1, 2), q(3, 2), Chirality::Left, &s);
        assert_eq!(
            cs_transgression(&th, &th.flat_like(), &s).unwrap(),
            cs_integral_s3(&th, &s).unwrap()
        );

        // Vector-representation forms share the structure-frame fiber basis.
        let p = SpinPairing::vector();
        let th1 = family_form(q(1, 2), q(3, 2), Chirality::Left, &p);
        let th2 = family_form(q(4, 3), q(2, 5), Chirality::Left, &p);
        let flat = th1.flat_like();
        let lhs = cs_transgression(&th2, &flat, &p).unwrap();
        let rhs =
            cs_transgression(&th2, &th1, &p).unwrap() + cs_transgression(&th1, &flat, &p).unwrap();
        assert_eq!(lhs, rhs);
        assert!(matches!(
            cs_transgression(&th, &th1, &p),
            Err(Error::FrameMismatch)
        ));
    }

    #[test]
    fn spin_lift_is_a_homomorphism() {
        let l = |a: usize| {
            Matrix::from_fn(3, |b, c| {
                Exact::from_int(-crate::frame::levi_civita_symbol(a, b, c))
            })
        };
        for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            let lhs = spin_lift(&l(a).commutator(&l(b))).unwrap();
            let rhs = spin_lift(&l(a))
                .unwrap()
                .commutator(&spin_lift(&l(b)).unwrap());
            assert_eq!(lhs, rhs);
            assert_eq!(lhs, spin_lift(&l(c)).unwrap());
        }
        let not_skew = Matrix::<Exact>::identity(3);
        assert!(matches!(
            spin_lift(&not_skew),
            Err(Error::NotSkewConnection(_))
        ));
    }
}
