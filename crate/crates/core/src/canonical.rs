//! Integrals of the canonical 3-form `H_S` of a string class `S` for
//! invariant metrics on S^3, and the form itself.
//!
//! For a left-invariant metric `g`, `∫ H_S = (S - L) + ∫ CS(g)`; for a
//! right-invariant one, `∫ H_S = (S - R) + ∫ CS(g)` where the Chern-Simons
//! integral is taken for the right-invariant Levi-Civita connection.

use std::f64::consts::PI;

use crate::chern_simons::{cs_integral_s3, SpinPairing, SU2_VOLUME_OVER_PI_SQUARED};
use crate::error::{Error, Result};
use crate::forms::InvariantForm;
use crate::frame::LieAlgebraFrame;
use crate::hodge::volume_form;
use crate::metric::{Chirality, InvariantMetric};
use crate::scalar::Scalar;
use crate::string_class::StringClass;

/// `∫_{S^3} H_S` for an invariant metric on the su(2) frame, with the spin
/// pairing.
pub fn integral_h<S: Scalar>(class: &StringClass, metric: &InvariantMetric<S>) -> Result<S> {
    integral_h_with(class, metric, &SpinPairing::spin())
}

pub fn integral_h_with<S: Scalar>(
    class: &StringClass,
    metric: &InvariantMetric<S>,
    pairing: &SpinPairing,
) -> Result<S> {
    if metric.dim() != 3 {
        return Err(Error::OutsideFamily(format!(
            "metric has dimension {}, S^3 needs 3",
            metric.dim()
        )));
    }
    let su2 = LieAlgebraFrame::<S>::su2();
    let cs = cs_integral_s3(&pairing.connection_form(&su2, metric)?, pairing)?;
    let reference = StringClass::of_chirality(metric.chirality());
    Ok(S::from_int(class.difference(&reference)) + cs)
}

/// `∫ H_S` for the family metric `g_{α1,α2}`.
pub fn integral_h_family<S: Scalar>(
    class: &StringClass,
    alpha1: &S,
    alpha2: &S,
    chirality: Chirality,
) -> Result<S> {
    integral_h(
        class,
        &InvariantMetric::family(alpha1.clone(), alpha2.clone(), chirality)?,
    )
}

/// The invariant representative `H_S = (∫ H_S / Vol_g) dvol_g`, as a form on
/// the su(2) frame.
pub fn canonical_three_form(
    class: &StringClass,
    metric: &InvariantMetric<f64>,
) -> Result<InvariantForm<f64>> {
    let integral = integral_h(class, metric)?;
    let volume = metric.volume_factor()? * SU2_VOLUME_OVER_PI_SQUARED as f64 * PI * PI;
    Ok(volume_form(metric.inner_product())?.scale(&(integral / volume)))
}
