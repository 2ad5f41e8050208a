//! Invariant exterior forms and the Chevalley-Eilenberg differential.
//!
//! An invariant p-form is an element of `Λ^p` of the dual of the frame, stored
//! by its coefficients on strictly increasing multi-indices. Because the
//! coefficients of an invariant form against invariant fields are constant,
//! the exterior derivative only sees brackets.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::frame::LieAlgebraFrame;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct InvariantForm<S> {
    dim: usize,
    degree: usize,
    coeffs: Vec<S>,
}

impl<S: Scalar> InvariantForm<S> {
    pub fn zero(dim: usize, degree: usize) -> Result<Self> {
        if degree > dim {
            return Err(Error::DegreeOutOfRange { degree, dim });
        }
        Ok(Self::zero_unchecked(dim, degree))
    }

    fn zero_unchecked(dim: usize, degree: usize) -> Self {
        Self {
            dim,
            degree,
            coeffs: vec![S::zero(); subsets(dim, degree).len()],
        }
    }

    /// The constant function with value `c`.
    pub fn constant(dim: usize, c: S) -> Self {
        Self {
            dim,
            degree: 0,
            coeffs: vec![c],
        }
    }

    /// `c · e^{i_1} ∧ ... ∧ e^{i_p}` for 0-based indices in any order.
    pub fn monomial(dim: usize, indices: &[usize], c: S) -> Result<Self> {
        let mut form = Self::zero(dim, indices.len())?;
        form.add_term(indices, c)?;
        Ok(form)
    }

    /// `e^1 ∧ ... ∧ e^n` in the coframe dual to the structure-constant frame.
    pub fn frame_volume(dim: usize) -> Self {
        Self {
            dim,
            degree: dim,
            coeffs: vec![S::one()],
        }
    }

    /// Sum of monomials given as `(indices, coefficient)` pairs.
    pub fn from_terms(dim: usize, degree: usize, terms: &[(Vec<usize>, S)]) -> Result<Self> {
        let mut form = Self::zero(dim, degree)?;
        for (idx, c) in terms {
            if idx.len() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: idx.len(),
                });
            }
            form.add_term(idx, c.clone())?;
        }
        Ok(form)
    }

    /// Coefficients in the order of [`InvariantForm::basis`].
    pub fn from_coefficients(dim: usize, degree: usize, coeffs: Vec<S>) -> Result<Self> {
        let expected = subsets(dim, degree).len();
        if degree > dim {
            return Err(Error::DegreeOutOfRange { degree, dim });
        }
        if coeffs.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: coeffs.len(),
            });
        }
        Ok(Self {
            dim,
            degree,
            coeffs,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficients(&self) -> &[S] {
        &self.coeffs
    }

    /// Increasing multi-indices labelling the stored coefficients.
    pub fn basis(&self) -> Arc<Vec<Vec<usize>>> {
        subsets(self.dim, self.degree)
    }

    /// Value on `(e_{i_1}, ..., e_{i_p})` for indices in any order.
    pub fn component(&self, indices: &[usize]) -> S {
        match sort_with_sign(indices) {
            Some((sorted, sign)) => {
                let c = self.coeffs[self.rank(&sorted)].clone();
                if sign < 0 {
                    -c
                } else {
                    c
                }
            }
            None => S::zero(),
        }
    }

    /// `ω(v_1, ..., v_p)` for arbitrary vectors in frame coordinates.
    pub fn evaluate(&self, vectors: &[Vec<S>]) -> Result<S> {
        if vectors.len() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                got: vectors.len(),
            });
        }
        if let Some(v) = vectors.iter().find(|v| v.len() != self.dim) {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        let p = self.degree;
        let mut total = S::zero();
        for (idx, c) in self.basis().iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let m = Matrix::from_fn(p, |r, s| vectors[s][idx[r]].clone());
            total = total + c.clone() * m.determinant();
        }
        Ok(total)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Self {
            dim: self.dim,
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, s: &S) -> Self {
        Self {
            dim: self.dim,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let degree = self.degree + other.degree;
        if degree > self.dim {
            return Err(Error::DegreeOutOfRange {
                degree,
                dim: self.dim,
            });
        }
        let mut out = Self::zero_unchecked(self.dim, degree);
        let (lb, rb) = (self.basis(), other.basis());
        for (i, a) in lb.iter().zip(&self.coeffs) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rb.iter().zip(&other.coeffs) {
                if b.is_zero() {
                    continue;
                }
                let joined: Vec<usize> = i.iter().chain(j.iter()).copied().collect();
                out.add_term(&joined, a.clone() * b.clone())?;
            }
        }
        Ok(out)
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().abs())
            .fold(0.0, f64::max)
    }

    pub fn is_negligible(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| c.is_negligible(tol))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> InvariantForm<T> {
        InvariantForm {
            dim: self.dim,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn add_term(&mut self, indices: &[usize], c: S) -> Result<()> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.dim) {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: bad + 1,
            });
        }
        if let Some((sorted, sign)) = sort_with_sign(indices) {
            let r = self.rank(&sorted);
            let c = if sign < 0 { -c } else { c };
            self.coeffs[r] = self.coeffs[r].clone() + c;
        }
        Ok(())
    }

    fn rank(&self, sorted: &[usize]) -> usize {
        self.basis()
            .binary_search_by(|probe| probe.as_slice().cmp(sorted))
            .expect("index in range")
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                got: other.degree,
            });
        }
        Ok(())
    }
}

/// Exterior derivative of an invariant form:
/// `dω(X_0..X_p) = Σ_{a<b} (-1)^{a+b} ω([X_a, X_b], X_0, ..^a..^b.., X_p)`.
///
/// The derivative of a top-degree form is the (empty) zero form one degree up.
pub fn ce_differential<S: Scalar>(
    frame: &LieAlgebraFrame<S>,
    form: &InvariantForm<S>,
) -> Result<InvariantForm<S>> {
    let n = frame.dim();
    if form.dim != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: form.dim,
        });
    }
    let p = form.degree;
    if p > n {
        return Err(Error::DegreeOutOfRange {
            degree: p + 1,
            dim: n,
        });
    }
    let mut out = InvariantForm::zero_unchecked(n, p + 1);
    if p == n || form.is_negligible(0.0) {
        return Ok(out);
    }
    let out_basis = out.basis();
    for (slot, idx) in out_basis.iter().enumerate() {
        let mut acc = S::zero();
        for a in 0..idx.len() {
            for b in a + 1..idx.len() {
                let rest: Vec<usize> = idx
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != a && t != b)
                    .map(|(_, &v)| v)
                    .collect();
                let sign_ab = if (a + b) % 2 == 0 {
                    S::one()
                } else {
                    -S::one()
                };
                for k in 0..n {
                    let ck = frame.constant(k, idx[a], idx[b]);
                    if ck.is_zero() {
                        continue;
                    }
                    let mut args = Vec::with_capacity(p);
                    args.push(k);
                    args.extend_from_slice(&rest);
                    let w = form.component(&args);
                    if !w.is_zero() {
                        acc = acc + sign_ab.clone() * ck.clone() * w;
                    }
                }
            }
        }
        out.coeffs[slot] = acc;
    }
    Ok(out)
}

/// Sorts indices, returning the permutation sign, or `None` on a repeat.
pub(crate) fn sort_with_sign(indices: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut v = indices.to_vec();
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, sign))
    }
}

type SubsetCache = Mutex<HashMap<(usize, usize), Arc<Vec<Vec<usize>>>>>;

/// All strictly increasing `p`-tuples from `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, p: usize) -> Arc<Vec<Vec<usize>>> {
    static CACHE: OnceLock<SubsetCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().expect("subset cache").get(&(n, p)) {
        return hit.clone();
    }
    let mut out = Vec::new();
    if p <= n {
        let mut cur = Vec::with_capacity(p);
        fill_subsets(n, p, 0, &mut cur, &mut out);
    }
    let out = Arc::new(out);
    cache
        .lock()
        .expect("subset cache")
        .insert((n, p), out.clone());
    out
}

fn fill_subsets(n: usize, p: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == p {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        cur.push(i);
        fill_subsets(n, p, i + 1, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Exact;

    fn q(n: i64) -> Exact {
        Exact::from_int(n)
    }

    #[test]
    fn d_of_e3_on_su2() {
        let su2 = LieAlgebraFrame::<Exact>::su2();
        let e3 = InvariantForm::monomial(3, &[2], q(1)).unwrap();
        let d = ce_differential(&su2, &e3).unwrap();
        assert_eq!(d, InvariantForm::monomial(3, &[0, 1], q(-2)).unwrap());
    }

    #[test]
    fn d_of_constants_and_top_forms_vanish() {
        let su2 = LieAlgebraFrame::<Exact>::su2();
        let one = InvariantForm::constant(3, q(1));
        assert!(ce_differential(&su2, &one).unwrap().is_negligible(0.0));
        let vol = InvariantForm::<Exact>::frame_volume(3);
        let d = ce_differential(&su2, &vol).unwrap();
        assert_eq!(d.degree(), 4);
        assert!(d.coefficients().is_empty());
        assert!(ce_differential(&su2, &d).is_err());
    }

    #[test]
    fn components_alternate() {
        let w = InvariantForm::monomial(4, &[2, 0, 3], 5.0).unwrap();
        assert_eq!(w.component(&[0, 2, 3]), -5.0);
        assert_eq!(w.component(&[3, 0, 2]), -5.0);
        assert_eq!(w.component(&[2, 0, 3]), 5.0);
        assert_eq!(w.component(&[0, 0, 3]), 0.0);
        let v = |i: usize| {
            let mut v = vec![0.0; 4];
            v[i] = 1.0;
            v
        };
        assert_eq!(w.evaluate(&[v(2), v(0), v(3)]).unwrap(), 5.0);
        assert_eq!(w.evaluate(&[v(0), v(2), v(3)]).unwrap(), -5.0);
    }

    #[test]
    fn wedge_is_graded_commutative() {
        let a = InvariantForm::from_terms(4, 1, &[(vec![0], 1.0), (vec![2], 3.0)]).unwrap();
        let b = InvariantForm::from_terms(4, 2, &[(vec![1, 3], 2.0), (vec![0, 1], -1.0)]).unwrap();
        let ab = a.wedge(&b).unwrap();
        let ba = b.wedge(&a).unwrap();
        assert_eq!(ab, ba);
        let aa = a.wedge(&a).unwrap();
        assert!(aa.is_negligible(0.0));
    }

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(
            *subsets(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(subsets(3, 0).len(), 1);
        assert!(subsets(3, 4).is_empty());
    }
}
