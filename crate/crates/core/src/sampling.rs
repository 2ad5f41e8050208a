//! Random invariant metrics and forms for property checks.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal, Uniform};

use rand::SeedableRng;

use crate::forms::{subsets, InvariantForm};
use crate::linalg::Matrix;

/// Largest accepted condition number of a sampled Gram matrix.
pub const MAX_CONDITION: f64 = 1e3;

/// Deterministic generator for trial `index` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// `A Aᵀ / m` for a Gaussian `n × m` matrix `A` with `m = n + 2`, resampled
/// until its condition number is at most [`MAX_CONDITION`].
pub fn random_gram<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix<f64> {
    let m = n + 2;
    loop {
        let a: Vec<f64> = (0..n * m).map(|_| StandardNormal.sample(rng)).collect();
        let gram = Matrix::from_fn(n, |i, j| {
            (0..m).map(|k| a[i * m + k] * a[j * m + k]).sum::<f64>() / m as f64
        });
        if condition_number(&gram) <= MAX_CONDITION {
            return gram;
        }
    }
}

/// Spectral condition number of a symmetric matrix.
pub fn condition_number(m: &Matrix<f64>) -> f64 {
    let ev = nalgebra::SymmetricEigen::new(crate::linalg::to_nalgebra(m)).eigenvalues;
    let (lo, hi) = ev.iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), &x| {
        (lo.min(x), hi.max(x))
    });
    if lo <= 0.0 {
        f64::INFINITY
    } else {
        hi / lo
    }
}

/// A `p`-form with coefficients uniform in `[-bound, bound]`.
pub fn random_form<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    p: usize,
    bound: f64,
) -> InvariantForm<f64> {
    let dist = Uniform::new_inclusive(-bound, bound).expect("finite bound");
    let coeffs = (0..subsets(n, p).len()).map(|_| dist.sample(rng)).collect();
    InvariantForm::from_coefficients(n, p, coeffs).expect("coefficient count matches")
}

pub fn random_vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<f64> {
    (0..n).map(|_| StandardNormal.sample(rng)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grams_are_well_conditioned_and_reproducible() {
        let mut a = trial_rng(7, 3);
        let mut b = trial_rng(7, 3);
        for _ in 0..20 {
            let g = random_gram(&mut a, 4);
            assert!(g.is_positive_definite(1e-13));
            assert!(condition_number(&g) <= MAX_CONDITION);
            assert_eq!(g, random_gram(&mut b, 4));
        }
        assert_ne!(
            random_gram(&mut trial_rng(7, 4), 3),
            random_gram(&mut trial_rng(7, 5), 3)
        );
    }

    #[test]
    fn form_coefficients_in_range() {
        let h = random_form(&mut trial_rng(1, 0), 5, 3, 2.0);
        assert_eq!(h.coefficients().len(), 10);
        assert!(h.max_abs() <= 2.0);
    }
}
