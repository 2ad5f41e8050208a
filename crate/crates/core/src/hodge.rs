//! Metric operations on invariant forms: the induced inner product, Hodge
//! star, codifferential and Hodge Laplacian.
//!
//! The star carries a factor `sqrt(det g)`, which is irrational for most
//! rational Gram matrices. The codifferential applies the star twice, so it is
//! computed with the unnormalized star and a single factor `det g`; it stays
//! exact for every rational metric.

use crate::error::{Error, Result};
use crate::forms::{ce_differential, sort_with_sign, subsets, InvariantForm};
use crate::frame::LieAlgebraFrame;
use crate::metric::InnerProductOnAlgebra;
use crate::scalar::Scalar;

/// Induced inner product `<α, β> = Σ_{I,J} α_I β_J det(g^{-1}[I, J])` over
/// increasing multi-indices.
pub fn form_inner<S: Scalar>(
    g: &InnerProductOnAlgebra<S>,
    a: &InvariantForm<S>,
    b: &InvariantForm<S>,
) -> Result<S> {
    check_dim(g, a)?;
    check_dim(g, b)?;
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            expected: a.degree(),
            got: b.degree(),
        });
    }
    let basis = a.basis();
    let mut total = S::zero();
    for (i, ai) in basis.iter().zip(a.coefficients()) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in basis.iter().zip(b.coefficients()) {
            if bj.is_zero() {
                continue;
            }
            total = total + ai.clone() * bj.clone() * g.inverse().minor(i, j).determinant();
        }
    }
    Ok(total)
}

/// Hodge star without the `sqrt(det g)` factor.
fn star_unscaled<S: Scalar>(
    g: &InnerProductOnAlgebra<S>,
    form: &InvariantForm<S>,
) -> Result<InvariantForm<S>> {
    check_dim(g, form)?;
    let n = g.dim();
    let p = form.degree();
    let basis = subsets(n, p);
    let mut terms: Vec<(Vec<usize>, S)> = Vec::with_capacity(basis.len());
    for idx in basis.iter() {
        let complement: Vec<usize> = (0..n).filter(|k| !idx.contains(k)).collect();
        let mut joined = idx.clone();
        joined.extend_from_slice(&complement);
        let (_, sign) = sort_with_sign(&joined).expect("disjoint indices");
        let unit = InvariantForm::monomial(n, idx, S::one())?;
        let mut c = form_inner(g, &unit, form)?;
        if sign < 0 {
            c = -c;
        }
        terms.push((complement, c));
    }
    InvariantForm::from_terms(n, n - p, &terms)
}

/// `*ω`, defined by `α ∧ *β = <α, β> dvol_g`.
pub fn hodge_star<S: Scalar>(
    g: &InnerProductOnAlgebra<S>,
    form: &InvariantForm<S>,
) -> Result<InvariantForm<S>> {
    let factor = g.volume_factor()?;
    Ok(star_unscaled(g, form)?.scale(&factor))
}

/// Riemannian volume form `dvol_g = sqrt(det g) e^1 ∧ ... ∧ e^n`.
pub fn volume_form<S: Scalar>(g: &InnerProductOnAlgebra<S>) -> Result<InvariantForm<S>> {
    Ok(InvariantForm::frame_volume(g.dim()).scale(&g.volume_factor()?))
}

/// `d* = (-1)^{n(p+1)+1} * d *` on p-forms. The codifferential of a 0-form is
/// the zero 0-form.
pub fn codifferential<S: Scalar>(
    frame: &LieAlgebraFrame<S>,
    g: &InnerProductOnAlgebra<S>,
    form: &InvariantForm<S>,
) -> Result<InvariantForm<S>> {
    check_dim(g, form)?;
    if frame.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: frame.dim(),
            got: g.dim(),
        });
    }
    let n = g.dim();
    let p = form.degree();
    if p == 0 {
        return InvariantForm::zero(n, 0);
    }
    let inner = star_unscaled(g, form)?;
    let d = ce_differential(frame, &inner)?;
    let outer = star_unscaled(g, &d)?;
    let exponent = n * (p + 1) + 1;
    let sign = if exponent.is_multiple_of(2) {
        S::one()
    } else {
        -S::one()
    };
    Ok(outer.scale(&(sign * g.determinant().clone())))
}

/// `Δ = d d* + d* d`.
pub fn laplacian<S: Scalar>(
    frame: &LieAlgebraFrame<S>,
    g: &InnerProductOnAlgebra<S>,
    form: &InvariantForm<S>,
) -> Result<InvariantForm<S>> {
    let n = g.dim();
    let p = form.degree();
    let mut out = InvariantForm::zero(n, p)?;
    if p > 0 {
        let dd = ce_differential(frame, &codifferential(frame, g, form)?)?;
        out = out.add(&dd)?;
    }
    if p < n {
        let d = ce_differential(frame, form)?;
        out = out.add(&codifferential(frame, g, &d)?)?;
    }
    Ok(out)
}

fn check_dim<S: Scalar>(g: &InnerProductOnAlgebra<S>, form: &InvariantForm<S>) -> Result<()> {
    if form.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            got: form.dim(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{Chirality, InvariantMetric};
    use crate::scalar::Exact;

    fn q(n: i64, d: i64) -> Exact {
        Exact::from_ratio(n, d)
    }

    #[test]
    fn star_of_e1_under_identity_and_family() {
        let id = InnerProductOnAlgebra::<Exact>::identity(3);
        let e1 = InvariantForm::monomial(3, &[0], q(1, 1)).unwrap();
        assert_eq!(
            hodge_star(&id, &e1).unwrap(),
            InvariantForm::monomial(3, &[1, 2], q(1, 1)).unwrap()
        );

        let (a1, a2) = (q(3, 2), q(2, 5));
        let g = InvariantMetric::family(a1.clone(), a2.clone(), Chirality::Left).unwrap();
        let star = hodge_star(&g, &e1).unwrap();
        assert_eq!(
            star,
            InvariantForm::monomial(3, &[1, 2], a1.clone() / a2.clone()).unwrap()
        );
        let one = InvariantForm::constant(3, q(1, 1));
        let vol = hodge_star(&g, &one).unwrap();
        assert_eq!(
            vol,
            InvariantForm::frame_volume(3).scale(&(q(1, 1) / (a1 * a2)))
        );
    }

    #[test]
    fn star_squared_sign() {
        let g = InvariantMetric::family(q(2, 1), q(1, 3), Chirality::Left).unwrap();
        let n = 3;
        for p in 0..=n {
            let basis = subsets(n, p);
            for idx in basis.iter() {
                let w = InvariantForm::monomial(n, idx, q(1, 1)).unwrap();
                let ss = hodge_star(&g, &hodge_star(&g, &w).unwrap()).unwrap();
                let sign = if (p * (n - p)) % 2 == 0 { 1 } else { -1 };
                assert_eq!(ss, w.scale(&q(sign, 1)));
            }
        }
    }

    #[test]
    fn su2_volume_form_is_harmonic() {
        let su2 = LieAlgebraFrame::<Exact>::su2();
        let id = InnerProductOnAlgebra::<Exact>::identity(3);
        let vol = InvariantForm::frame_volume(3);
        assert!(codifferential(&su2, &id, &vol).unwrap().is_negligible(0.0));
        assert!(laplacian(&su2, &id, &vol).unwrap().is_negligible(0.0));
        let g = InvariantMetric::family(q(7, 3), q(1, 2), Chirality::Left).unwrap();
        assert!(codifferential(&su2, &g, &vol).unwrap().is_negligible(0.0));
    }

    #[test]
    fn adjointness_on_su2_basis() {
        let su2 = LieAlgebraFrame::<Exact>::su2();
        let id = InnerProductOnAlgebra::<Exact>::identity(3);
        let e3 = InvariantForm::monomial(3, &[2], q(1, 1)).unwrap();
        let e12 = InvariantForm::monomial(3, &[0, 1], q(1, 1)).unwrap();
        let lhs = form_inner(&id, &ce_differential(&su2, &e3).unwrap(), &e12).unwrap();
        let rhs = form_inner(&id, &e3, &codifferential(&su2, &id, &e12).unwrap()).unwrap();
        assert_eq!(lhs, q(-2, 1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn codifferential_of_functions_is_zero() {
        let su2 = LieAlgebraFrame::<f64>::su2();
        let id = InnerProductOnAlgebra::<f64>::identity(3);
        let f = InvariantForm::constant(3, 4.0);
        let d = codifferential(&su2, &id, &f).unwrap();
        assert_eq!(d.degree(), 0);
        assert!(d.is_negligible(0.0));
    }
}
