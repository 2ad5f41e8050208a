//! Closed-form oracles, independent of the geometry pipeline.
#![allow(dead_code)]

use stringform::frame::LieAlgebraFrame;
use stringform::linalg::Matrix;
use stringform::scalar::{Exact, Scalar};

pub mod props;

pub fn q(n: i64, d: i64) -> Exact {
    Exact::from_ratio(n, d)
}

/// `∫ H_L` for `g_{α1,α2}` as a rational function of the parameters.
pub fn integral_h_left<S: Scalar>(a1: &S, a2: &S) -> S {
    let x = a1.clone() * a1.clone();
    let y = a2.clone() * a2.clone();
    let p = |i: u32, j: u32| pow(&x, i) * pow(&y, j);
    let num = p(3, 3) - p(3, 2) - p(2, 3) - p(3, 1) - p(1, 3) - p(2, 1) - p(1, 2)
        + S::from_int(4) * p(2, 2)
        + p(3, 0)
        + p(0, 3);
    -(num / (p(2, 2)))
}

/// `∫ H_L` on the Berger line, `-2 + (2α² - 1)/α⁴`.
pub fn integral_h_left_berger<S: Scalar>(a: &S) -> S {
    let x = a.clone() * a.clone();
    S::from_int(-2) + (S::from_int(2) * x.clone() - S::one()) / (x.clone() * x)
}

fn pow<S: Scalar>(x: &S, k: u32) -> S {
    (0..k).fold(S::one(), |acc, _| acc * x.clone())
}

/// Ricci eigenvalues along `α1 e1, α2 e2, e3` as products of the three
/// connection components.
pub fn ricci_products<S: Scalar>(a1: &S, a2: &S) -> [S; 3] {
    let p = a1.clone() * a2.clone();
    let r = a1.clone() / a2.clone();
    let s = a2.clone() / a1.clone();
    let a = p.clone() + r.clone() - s.clone();
    let b = p.clone() - r.clone() + s.clone();
    let c = -p + r + s;
    let two = S::from_int(2);
    [
        two.clone() * b.clone() * c.clone(),
        two.clone() * c * a.clone(),
        two * a * b,
    ]
}

/// `α2` on the three curves where a Ricci eigenvalue of `g_{α1,α2}` vanishes.
pub fn curve_values(a1: f64) -> Vec<f64> {
    let x = a1 * a1;
    let mut out = vec![(x / (1.0 + x)).sqrt()];
    if x > 1.0 {
        out.push((x / (x - 1.0)).sqrt());
    }
    if x < 1.0 {
        out.push((x / (1.0 - x)).sqrt());
    }
    out
}

/// `n` rational points strictly inside `(lo, hi)`, evenly spaced.
pub fn open_grid(lo: Exact, hi: Exact, n: usize) -> Vec<Exact> {
    let step = (hi - lo.clone()) / Exact::from_int(n as i64 + 1);
    (1..=n)
        .map(|k| lo.clone() + step.clone() * Exact::from_int(k as i64))
        .collect()
}

/// `steps` values from `lo` to `hi` inclusive, computed exactly then rounded.
pub fn closed_grid(lo: Exact, hi: Exact, steps: usize) -> Vec<f64> {
    let step = (hi - lo.clone()) / Exact::from_int(steps as i64 - 1);
    (0..steps)
        .map(|k| (lo.clone() + step.clone() * Exact::from_int(k as i64)).to_f64())
        .collect()
}

/// A change of basis `P` applied to structure constants:
/// `c'^k_{ij} = Σ (P^{-1})^k_c c^c_{ab} P^a_i P^b_j`.
pub fn change_basis(frame: &LieAlgebraFrame<f64>, p: &Matrix<f64>) -> LieAlgebraFrame<f64> {
    let n = frame.dim();
    let p_inv = p.inverse().expect("invertible change of basis");
    LieAlgebraFrame::from_fn(n, |k, i, j| {
        let mut total = 0.0;
        for a in 0..n {
            for b in 0..n {
                let pab = p[(a, i)] * p[(b, j)];
                if pab == 0.0 {
                    continue;
                }
                for c in 0..n {
                    total += p_inv[(k, c)] * frame.constant(c, a, b) * pab;
                }
            }
        }
        total
    })
}

/// A non-unimodular solvable algebra: `[e1, e2] = e2`, `[e1, e3] = 2 e3`.
pub fn solvable() -> LieAlgebraFrame<f64> {
    LieAlgebraFrame::from_fn(3, |k, i, j| match (k, i, j) {
        (1, 0, 1) => 1.0,
        (1, 1, 0) => -1.0,
        (2, 0, 2) => 2.0,
        (2, 2, 0) => -2.0,
        _ => 0.0,
    })
}

/// Test algebras of several dimensions and types.
pub fn algebras() -> Vec<(&'static str, LieAlgebraFrame<f64>)> {
    let su2 = LieAlgebraFrame::<f64>::su2();
    vec![
        ("su(2)", su2.clone()),
        ("su(2)+R", su2.direct_sum(&LieAlgebraFrame::abelian(1))),
        ("su(2)+su(2)", su2.direct_sum(&su2)),
        ("heisenberg", LieAlgebraFrame::heisenberg()),
        ("solvable", solvable()),
    ]
}
