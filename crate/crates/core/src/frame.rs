//! Structure-constant description of a Lie algebra in a fixed frame.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Tolerance below which antisymmetry and Jacobi violations count as zero.
pub const STRUCTURE_TOL: f64 = 1e-12;

/// A Lie algebra frame `{e_1, ..., e_n}` with `[e_i, e_j] = sum_k c[k][i][j] e_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebraFrame<S> {
    dim: usize,
    c: Vec<S>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StructureReport {
    pub antisymmetry: f64,
    pub jacobi: f64,
    pub passed: bool,
}

impl<S: Scalar> LieAlgebraFrame<S> {
    /// Builds a frame from the flat array `c[k][i][j]`. No structural checks
    /// are made here; see [`LieAlgebraFrame::check_structure`].
    pub fn from_constants(dim: usize, c: Vec<S>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: 0,
            });
        }
        if c.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                got: c.len(),
            });
        }
        Ok(Self { dim, c })
    }

    /// Builds a frame from a closure `(k, i, j) -> c^k_{ij}`.
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize, usize) -> S) -> Self {
        let mut c = Vec::with_capacity(dim * dim * dim);
        for k in 0..dim {
            for i in 0..dim {
                for j in 0..dim {
                    c.push(f(k, i, j));
                }
            }
        }
        Self { dim, c }
    }

    /// The standard su(2) frame: `[e1,e2] = 2e3`, `[e2,e3] = 2e1`, `[e3,e1] = 2e2`.
    pub fn su2() -> Self {
        Self::from_fn(3, |k, i, j| S::from_int(2 * levi_civita_symbol(i, j, k)))
    }

    /// The n-dimensional abelian algebra.
    pub fn abelian(dim: usize) -> Self {
        Self::from_fn(dim, |_, _, _| S::zero())
    }

    /// The 3-dimensional Heisenberg algebra, `[e1,e2] = e3`.
    pub fn heisenberg() -> Self {
        Self::from_fn(3, |k, i, j| match (k, i, j) {
            (2, 0, 1) => S::one(),
            (2, 1, 0) => -S::one(),
            _ => S::zero(),
        })
    }

    /// Block direct sum; `other`'s basis vectors follow `self`'s.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (n, m) = (self.dim, other.dim);
        Self::from_fn(n + m, |k, i, j| {
            if k < n && i < n && j < n {
                self.constant(k, i, j).clone()
            } else if k >= n && i >= n && j >= n {
                other.constant(k - n, i - n, j - n).clone()
            } else {
                S::zero()
            }
        })
    }

    /// The frame whose bracket is the negative of this one. Left-invariant
    /// and right-invariant fields on a group carry opposite brackets.
    pub fn negated(&self) -> Self {
        Self {
            dim: self.dim,
            c: self.c.iter().map(|v| -v.clone()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn constant(&self, k: usize, i: usize, j: usize) -> &S {
        &self.c[(k * self.dim + i) * self.dim + j]
    }

    /// `[e_i, e_j]` as a coefficient vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<S> {
        (0..self.dim)
            .map(|k| self.constant(k, i, j).clone())
            .collect()
    }

    pub fn bracket(&self, x: &[S], y: &[S]) -> Result<Vec<S>> {
        self.check_len(x)?;
        self.check_len(y)?;
        let n = self.dim;
        let mut out = vec![S::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi.clone() * yj.clone();
                for (k, o) in out.iter_mut().enumerate() {
                    let ck = self.constant(k, i, j);
                    if !ck.is_zero() {
                        *o = o.clone() + ck.clone() * xy.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad(e_i)`: column j holds `[e_i, e_j]`.
    pub fn ad(&self, i: usize) -> Matrix<S> {
        Matrix::from_fn(self.dim, |k, j| self.constant(k, i, j).clone())
    }

    /// Killing form `B(e_i, e_j) = tr(ad e_i ad e_j)`.
    pub fn killing_form(&self) -> Matrix<S> {
        let ads: Vec<_> = (0..self.dim).map(|i| self.ad(i)).collect();
        Matrix::from_fn(self.dim, |i, j| ads[i].mul(&ads[j]).trace())
    }

    pub fn is_unimodular(&self, tol: f64) -> bool {
        (0..self.dim).all(|i| self.ad(i).trace().is_negligible(tol))
    }

    /// Reports the largest antisymmetry and Jacobi violations.
    pub fn check_structure(&self) -> StructureReport {
        let n = self.dim;
        let mut antisymmetry: f64 = 0.0;
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let v = self.constant(k, i, j).clone() + self.constant(k, j, i).clone();
                    antisymmetry = antisymmetry.max(v.to_f64().abs());
                }
            }
        }
        let mut jacobi: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut s = S::zero();
                        for m in 0..n {
                            s = s
                                + self.constant(m, i, j).clone() * self.constant(l, m, k).clone()
                                + self.constant(m, j, k).clone() * self.constant(l, m, i).clone()
                                + self.constant(m, k, i).clone() * self.constant(l, m, j).clone();
                        }
                        jacobi = jacobi.max(s.to_f64().abs());
                    }
                }
            }
        }
        StructureReport {
            antisymmetry,
            jacobi,
            passed: antisymmetry < STRUCTURE_TOL && jacobi < STRUCTURE_TOL,
        }
    }

    /// Converts the constants to another scalar type.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> LieAlgebraFrame<T> {
        LieAlgebraFrame {
            dim: self.dim,
            c: self.c.iter().map(f).collect(),
        }
    }

    /// Loads a frame from `{"dim": n, "brackets": [[i, j, [c_1, ..., c_n]], ...]}`
    /// with 1-based indices. Each entry sets `[e_i, e_j]` and its negative
    /// `[e_j, e_i]`. Coefficients may be JSON numbers or rational strings.
    pub fn from_json(text: &str) -> Result<Self>
    where
        S: ParseLiteral,
    {
        let doc: FrameDocument = serde_json::from_str(text)?;
        let n = doc.dim;
        if n == 0 {
            return Err(Error::Parse("dim must be positive".into()));
        }
        let mut c = vec![S::zero(); n * n * n];
        let mut seen = vec![false; n * n];
        for BracketEntry(i, j, coeffs) in doc.brackets {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::Parse(format!(
                    "bracket index ({i}, {j}) outside 1..={n}"
                )));
            }
            if coeffs.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: coeffs.len(),
                });
            }
            let (i, j) = (i - 1, j - 1);
            let values = coeffs
                .iter()
                .map(S::parse_literal)
                .collect::<Result<Vec<_>>>()?;
            if i == j {
                if values.iter().any(|v| !v.is_zero()) {
                    return Err(Error::Parse(format!("[e{0}, e{0}] must vanish", i + 1)));
                }
                continue;
            }
            if seen[i * n + j] || seen[j * n + i] {
                return Err(Error::Parse(format!(
                    "bracket [e{}, e{}] given twice",
                    i + 1,
                    j + 1
                )));
            }
            seen[i * n + j] = true;
            for (k, v) in values.into_iter().enumerate() {
                c[(k * n + j) * n + i] = -v.clone();
                c[(k * n + i) * n + j] = v;
            }
        }
        Ok(Self { dim: n, c })
    }

    fn check_len(&self, v: &[S]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        Ok(())
    }
}

/// Parsing of JSON coefficient literals into a scalar.
pub trait ParseLiteral: Sized {
    fn parse_literal(value: &serde_json::Value) -> Result<Self>;
}

fn literal_text(value: &serde_json::Value) -> Result<String> {
    match value {
        serde_json::Value::Number(n) => Ok(n.to_string()),
        serde_json::Value::String(s) => Ok(s.clone()),
        other => Err(Error::Parse(format!("expected a number, got {other}"))),
    }
}

impl ParseLiteral for f64 {
    fn parse_literal(value: &serde_json::Value) -> Result<Self> {
        Ok(crate::scalar::parse_exact(&literal_text(value)?)?.to_f64())
    }
}

impl ParseLiteral for crate::scalar::Exact {
    fn parse_literal(value: &serde_json::Value) -> Result<Self> {
        crate::scalar::parse_exact(&literal_text(value)?)
    }
}

#[derive(Deserialize)]
struct FrameDocument {
    dim: usize,
    brackets: Vec<BracketEntry>,
}

#[derive(Deserialize)]
struct BracketEntry(usize, usize, Vec<serde_json::Value>);

/// Sign of the permutation `(i, j, k)` of `(0, 1, 2)`, zero on repeats.
pub fn levi_civita_symbol(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Exact;

    fn basis(i: usize) -> Vec<f64> {
        let mut v = vec![0.0; 3];
        v[i] = 1.0;
        v
    }

    #[test]
    fn su2_brackets() {
        let su2 = LieAlgebraFrame::<f64>::su2();
        assert_eq!(
            su2.bracket(&basis(0), &basis(1)).unwrap(),
            vec![0.0, 0.0, 2.0]
        );
        assert_eq!(
            su2.bracket(&basis(1), &basis(0)).unwrap(),
            vec![0.0, 0.0, -2.0]
        );
        assert_eq!(
            su2.bracket(&basis(1), &basis(2)).unwrap(),
            vec![2.0, 0.0, 0.0]
        );
        assert_eq!(
            su2.bracket(&basis(2), &basis(0)).unwrap(),
            vec![0.0, 2.0, 0.0]
        );
        let x = vec![0.3, -1.2, 2.5];
        assert_eq!(su2.bracket(&x, &x).unwrap(), vec![0.0; 3]);
        assert!(su2.bracket(&x, &[1.0]).is_err());
    }

    #[test]
    fn su2_passes_structure_check() {
        let report = LieAlgebraFrame::<Exact>::su2().check_structure();
        assert_eq!(
            report,
            StructureReport {
                antisymmetry: 0.0,
                jacobi: 0.0,
                passed: true
            }
        );
    }

    #[test]
    fn symmetric_constants_fail_antisymmetry() {
        let mut c = LieAlgebraFrame::<f64>::su2().c;
        // c[3][1][2] = 2 and c[3][2][1] = 2 (1-based)
        c[(2 * 3 + 1) * 3] = 2.0;
        let frame = LieAlgebraFrame::from_constants(3, c).unwrap();
        let report = frame.check_structure();
        assert_eq!(report.antisymmetry, 4.0);
        assert!(!report.passed);
    }

    #[test]
    fn json_round_trip_of_su2() {
        let text = r#"{"dim": 3, "brackets": [[1, 2, [0, 0, 2]], [2, 3, [2, 0, 0]], [3, 1, [0, "2", 0]]]}"#;
        let frame = LieAlgebraFrame::<Exact>::from_json(text).unwrap();
        assert_eq!(frame, LieAlgebraFrame::su2());
    }

    #[test]
    fn json_rejects_bad_documents() {
        let bad = [
            r#"{"dim": 3, "brackets": [[1, 4, [0, 0, 2]]]}"#,
            r#"{"dim": 3, "brackets": [[1, 2, [0, 2]]]}"#,
            r#"{"dim": 3, "brackets": [[1, 2, [0, 0, 2]], [2, 1, [0, 0, -2]]]}"#,
            r#"{"dim": 3, "brackets": [[2, 2, [1, 0, 0]]]}"#,
            r#"{"dim": 0, "brackets": []}"#,
        ];
        for text in bad {
            assert!(LieAlgebraFrame::<f64>::from_json(text).is_err(), "{text}");
        }
    }

    #[test]
    fn direct_sum_keeps_blocks_apart() {
        let g = LieAlgebraFrame::<f64>::su2().direct_sum(&LieAlgebraFrame::abelian(1));
        assert_eq!(g.dim(), 4);
        assert!(g.check_structure().passed);
        assert!(g.is_unimodular(1e-12));
        assert_eq!(*g.constant(2, 0, 1), 2.0);
        assert_eq!(*g.constant(3, 0, 3), 0.0);
    }

    #[test]
    fn su2_killing_form_is_negative_definite() {
        let b = LieAlgebraFrame::<Exact>::su2().killing_form();
        assert_eq!(
            b,
            Matrix::diagonal(&[
                Exact::from_int(-8),
                Exact::from_int(-8),
                Exact::from_int(-8)
            ])
        );
    }
}
