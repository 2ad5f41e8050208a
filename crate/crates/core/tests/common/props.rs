//! Structural properties checked on random instances. Each check draws its
//! instance from `rng` and returns the worst relative residual, or a message
//! when a qualitative condition fails.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use stringform::canonical::integral_h;
use stringform::connection::levi_civita;
use stringform::forms::ce_differential;
use stringform::frame::LieAlgebraFrame;
use stringform::hodge::{codifferential, form_inner};
use stringform::linalg::Matrix;
use stringform::metric::{Chirality, InvariantMetric};
use stringform::sampling::{random_form, random_gram};
use stringform::string_class::{Anchor, StringClass};

use super::{algebras, change_basis};

pub type Check = fn(&mut ChaCha8Rng) -> Result<f64, String>;

pub const TOL: f64 = 1e-10;

/// Every property with its name.
pub const ALL: [(&str, Check); 6] = [
    ("d∘d = 0", dd_zero),
    ("Hodge adjointness", hodge_adjoint),
    ("Levi-Civita torsion-free and metric", levi_civita_defects),
    ("equivariance of ∫H", equivariance),
    ("scale invariance of ∫H", scale_invariance),
    ("left/right mirror", mirror),
];

fn random_basis_change(rng: &mut ChaCha8Rng, n: usize) -> Matrix<f64> {
    loop {
        let p = Matrix::from_fn(
            n,
            |i, j| if i == j { 1.0 } else { 0.0 } + rng.random_range(-0.5..0.5),
        );
        if p.determinant().abs() > 0.2 {
            return p;
        }
    }
}

/// A random algebra from the test list in a random basis.
fn random_algebra(rng: &mut ChaCha8Rng, unimodular_only: bool) -> (String, LieAlgebraFrame<f64>) {
    let all: Vec<_> = algebras()
        .into_iter()
        .filter(|(_, a)| !unimodular_only || a.is_unimodular(1e-12))
        .collect();
    let (name, frame) = &all[rng.random_range(0..all.len())];
    let p = random_basis_change(rng, frame.dim());
    (name.to_string(), change_basis(frame, &p))
}

fn random_class(rng: &mut ChaCha8Rng) -> StringClass {
    let anchor = [Anchor::Left, Anchor::Bounding, Anchor::Right][rng.random_range(0..3)];
    StringClass::new(anchor, rng.random_range(-5..=5))
}

fn random_s3_metric(rng: &mut ChaCha8Rng, chirality: Chirality) -> InvariantMetric<f64> {
    InvariantMetric::new(random_gram(rng, 3), chirality)
        .expect("sampled Gram matrices are positive definite")
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

fn err(e: stringform::Error) -> String {
    e.to_string()
}

pub fn dd_zero(rng: &mut ChaCha8Rng) -> Result<f64, String> {
    let (name, frame) = random_algebra(rng, false);
    let n = frame.dim();
    let mut worst: f64 = 0.0;
    for p in 0..n.saturating_sub(1) {
        let w = random_form(rng, n, p, 2.0);
        let ddw =
            ce_differential(&frame, &ce_differential(&frame, &w).map_err(err)?).map_err(err)?;
        let scale = frame.killing_form().max_abs().max(1.0) * w.max_abs().max(1.0);
        worst = worst.max(ddw.max_abs() / scale);
    }
    if worst > TOL {
        return Err(format!("{name}: |d d w| = {worst:e}"));
    }
    Ok(worst)
}

pub fn hodge_adjoint(rng: &mut ChaCha8Rng) -> Result<f64, String> {
    let (name, frame) = random_algebra(rng, true);
    let n = frame.dim();
    let g = InvariantMetric::left(random_gram(rng, n)).map_err(err)?;
    let mut worst: f64 = 0.0;
    for p in 0..n {
        let a = random_form(rng, n, p, 2.0);
        let b = random_form(rng, n, p + 1, 2.0);
        let lhs = form_inner(&g, &ce_differential(&frame, &a).map_err(err)?, &b).map_err(err)?;
        let rhs = form_inner(&g, &a, &codifferential(&frame, &g, &b).map_err(err)?).map_err(err)?;
        worst = worst.max(rel(lhs, rhs));
    }
    if worst > TOL {
        return Err(format!("{name}: <dα,β> - <α,d*β> relative {worst:e}"));
    }
    Ok(worst)
}

pub fn levi_civita_defects(rng: &mut ChaCha8Rng) -> Result<f64, String> {
    let (name, frame) = random_algebra(rng, false);
    let chirality = if rng.random_bool(0.5) {
        Chirality::Left
    } else {
        Chirality::Right
    };
    let g = InvariantMetric::new(random_gram(rng, frame.dim()), chirality).map_err(err)?;
    let lc = levi_civita(&frame, &g).map_err(err)?;
    let scale = lc.gamma().max_abs().max(1.0);
    let worst = (lc.torsion().max_abs() / scale).max(lc.metric_compatibility_defect(&g) / scale);
    if worst > TOL {
        return Err(format!("{name}: Levi-Civita defect {worst:e}"));
    }
    Ok(worst)
}

pub fn equivariance(rng: &mut ChaCha8Rng) -> Result<f64, String> {
    let chirality = if rng.random_bool(0.5) {
        Chirality::Left
    } else {
        Chirality::Right
    };
    let g = random_s3_metric(rng, chirality);
    let s = random_class(rng);
    let j = rng.random_range(-30..=30);
    let base = integral_h(&s, &g).map_err(err)?;
    let shifted = integral_h(&(s + j), &g).map_err(err)?;
    let r = rel(shifted, base + j as f64);
    if r > TOL {
        return Err(format!("∫H_(S+{j}) - ∫H_S - {j}: relative {r:e}"));
    }
    Ok(r)
}

pub fn scale_invariance(rng: &mut ChaCha8Rng) -> Result<f64, String> {
    let chirality = if rng.random_bool(0.5) {
        Chirality::Left
    } else {
        Chirality::Right
    };
    let g = random_s3_metric(rng, chirality);
    let eps = 10f64.powf(rng.random_range(-3.0..3.0));
    let s = random_class(rng);
    let a = integral_h(&s, &g).map_err(err)?;
    let b = integral_h(&s, &g.scaled(&eps).map_err(err)?).map_err(err)?;
    let r = rel(a, b);
    if r > TOL {
        return Err(format!("scaling by {eps}: relative {r:e}"));
    }
    Ok(r)
}

pub fn mirror(rng: &mut ChaCha8Rng) -> Result<f64, String> {
    let g = random_s3_metric(rng, Chirality::Left);
    let j = rng.random_range(-10..=10);
    let right = integral_h(
        &(StringClass::left() + j),
        &g.with_chirality(Chirality::Right),
    )
    .map_err(err)?;
    let left = integral_h(&(StringClass::right() + (-j)), &g).map_err(err)?;
    let r = rel(right, -left);
    if r > TOL {
        return Err(format!(
            "∫H_(L+{j}) right vs -∫H_(R-{j}) left: relative {r:e}"
        ));
    }
    Ok(r)
}
