//! Dense square matrices over either scalar backend: products, adjoints,
//! tensor products, q-commutators, and residual norms.
//!
//! Dimension and backend compatibility are programmer contracts and are
//! enforced with panics; domain-level failures (representability, primality,
//! hermiticity) live in the builders that produce matrices.

use num_complex::Complex64;
use serde_json::json;

use crate::cyclo::CyclotomicScalar;
use crate::scalar::{Backend, Scalar};

/// Dense square matrix with a free-form label.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix<S: Scalar> {
    dim: usize,
    entries: Vec<S>, // row-major
    label: String,
}

/// Shorthand for the two concrete backends.
pub type ExactMatrix = OperatorMatrix<CyclotomicScalar>;
pub type FloatMatrix = OperatorMatrix<Complex64>;

/// Max-entry modulus of a matrix, with a symbolic zero flag on the exact
/// backend.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct ResidualNorm {
    pub max_abs: f64,
    pub exact_zero: Option<bool>,
}

impl ResidualNorm {
    /// True when the residual vanishes: symbolically if the backend can say
    /// so, otherwise within `tol`.
    pub fn within(&self, tol: f64) -> bool {
        match self.exact_zero {
            Some(z) => z,
            None => self.max_abs <= tol,
        }
    }
}

impl<S: Scalar> OperatorMatrix<S> {
    pub fn backend(&self) -> Backend {
        S::BACKEND
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        OperatorMatrix {
            dim,
            entries: vec![S::zero(); dim * dim],
            label: String::new(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn diagonal(values: &[S]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    /// E_{mm'} = |m⟩⟨m'|: single unit entry at (m, m').
    pub fn basis_matrix(dim: usize, m: usize, mp: usize) -> Self {
        let mut e = Self::zeros(dim);
        e.set(m, mp, S::one());
        e
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch in add");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        OperatorMatrix {
            dim: self.dim,
            entries,
            label: String::new(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch in sub");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        OperatorMatrix {
            dim: self.dim,
            entries,
            label: String::new(),
        }
    }

    pub fn neg(&self) -> Self {
        OperatorMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(S::neg).collect(),
            label: String::new(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        OperatorMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e.mul(s)).collect(),
            label: String::new(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch in mul");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for l in 0..n {
                let a = self.get(i, l);
                if a.exact_zero() == Some(true) || (S::BACKEND == Backend::Float && a.abs() == 0.0)
                {
                    continue;
                }
                for j in 0..n {
                    let prod = a.mul(other.get(l, j));
                    let cur = out.get(i, j).add(&prod);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        OperatorMatrix::from_fn(n, |i, j| self.get(j, i).conj())
    }

    pub fn trace(&self) -> S {
        let mut t = S::zero();
        for i in 0..self.dim {
            t = t.add(self.get(i, i));
        }
        t
    }

    /// Kronecker product, left factor major: index i = i_self·dim(other) + i_other.
    pub fn tensor(&self, other: &Self) -> Self {
        let (da, db) = (self.dim, other.dim);
        OperatorMatrix::from_fn(da * db, |i, j| {
            let (ia, ib) = (i / db, i % db);
            let (ja, jb) = (j / db, j % db);
            self.get(ia, ja).mul(other.get(ib, jb))
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.dim);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Max-entry modulus, plus the symbolic all-zero flag on the exact backend.
    pub fn residual_norm(&self) -> ResidualNorm {
        let max_abs = self.entries.iter().map(S::abs).fold(0.0, f64::max);
        let exact_zero = match S::BACKEND {
            Backend::Exact => Some(
                self.entries
                    .iter()
                    .all(|e| e.exact_zero().unwrap_or(false)),
            ),
            Backend::Float => None,
        };
        ResidualNorm { max_abs, exact_zero }
    }

    /// Max-entry modulus of self − other.
    pub fn max_diff(&self, other: &Self) -> f64 {
        self.sub(other).residual_norm().max_abs
    }

    /// Matrix dump as CSV, row-major, one row per line, cells "re+im i".
    pub fn to_csv_string(&self) -> String {
        let mut out = String::new();
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|j| {
                    let z = self.get(i, j).to_complex();
                    format!("{}{:+}i", z.re, z.im)
                })
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// Matrix dump as JSON with backend-tagged entries.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "backend": S::BACKEND,
            "dim": self.dim,
            "label": self.label,
            "entries": self.entries.iter().map(S::to_json_value).collect::<Vec<_>>(),
        })
    }
}

impl ExactMatrix {
    /// Floating twin of an exact matrix.
    pub fn to_float(&self) -> FloatMatrix {
        let m = OperatorMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e.to_float()).collect(),
            label: self.label.clone(),
        };
        m
    }
}

/// q-deformed commutator [A, B]_q = AB − q·BA; q = 1 is the commutator,
/// q = −1 the anticommutator.
pub fn q_commutator<S: Scalar>(
    a: &OperatorMatrix<S>,
    b: &OperatorMatrix<S>,
    q: &S,
) -> OperatorMatrix<S> {
    assert_eq!(a.dim(), b.dim(), "dimension mismatch in q_commutator");
    a.mul(b).sub(&b.mul(a).scale(q))
}

pub fn commutator<S: Scalar>(a: &OperatorMatrix<S>, b: &OperatorMatrix<S>) -> OperatorMatrix<S> {
    q_commutator(a, b, &S::one())
}

pub fn anticommutator<S: Scalar>(
    a: &OperatorMatrix<S>,
    b: &OperatorMatrix<S>,
) -> OperatorMatrix<S> {
    q_commutator(a, b, &S::from_i64(-1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::CyclotomicScalar;

    fn zeta(n: usize, t: i64) -> CyclotomicScalar {
        CyclotomicScalar::root_of_unity(n, t).unwrap()
    }

    fn exact(v: i64) -> CyclotomicScalar {
        CyclotomicScalar::from_integer(v)
    }

    #[test]
    fn tensor_dimensions_multiply() {
        let a = ExactMatrix::identity(2);
        let b = ExactMatrix::identity(3);
        assert_eq!(a.tensor(&b).dim(), 6);
    }

    #[test]
    fn tensor_mixed_product_identity() {
        // tensor(A,B)·tensor(C,D) = tensor(AC, BD) on exact 2×2 matrices.
        let m = |vals: [i64; 4]| {
            ExactMatrix::from_fn(2, |i, j| exact(vals[2 * i + j]))
        };
        let (a, b, c, d) = (m([1, 2, -1, 3]), m([0, 1, 5, -2]), m([2, 2, 1, 0]), m([3, -1, 0, 4]));
        let lhs = a.tensor(&b).mul(&c.tensor(&d));
        let rhs = a.mul(&c).tensor(&b.mul(&d));
        assert!(lhs.sub(&rhs).residual_norm().exact_zero.unwrap());
    }

    #[test]
    fn basis_matrix_trace_is_kronecker_delta() {
        for m in 0..3 {
            for mp in 0..3 {
                let e = ExactMatrix::basis_matrix(3, m, mp);
                let t = e.trace();
                assert_eq!(t, exact((m == mp) as i64));
            }
        }
    }

    #[test]
    fn q_commutator_of_matrix_with_itself_vanishes() {
        let a = ExactMatrix::from_fn(3, |i, j| exact((i + 2 * j) as i64));
        let c = q_commutator(&a, &a, &CyclotomicScalar::one());
        assert!(c.residual_norm().exact_zero.unwrap());
    }

    #[test]
    fn fermion_anticommutator_is_identity() {
        // σ₋ = [[0,1],[0,0]], σ₊ = [[0,0],[1,0]]: {σ₋, σ₊} = 𝕀.
        let mut minus = ExactMatrix::zeros(2);
        minus.set(0, 1, exact(1));
        let mut plus = ExactMatrix::zeros(2);
        plus.set(1, 0, exact(1));
        let r = anticommutator(&minus, &plus).sub(&ExactMatrix::identity(2));
        assert!(r.residual_norm().exact_zero.unwrap());
    }

    #[test]
    fn zero_matrix_residual() {
        let z = ExactMatrix::zeros(4);
        let r = z.residual_norm();
        assert_eq!(r.max_abs, 0.0);
        assert!(r.exact_zero.unwrap());
        let i = ExactMatrix::identity(4);
        assert_eq!(i.residual_norm().max_abs, 1.0);
    }

    #[test]
    fn adjoint_is_involutive() {
        let a = ExactMatrix::from_fn(3, |i, j| zeta(5, (i * 3 + j) as i64));
        assert!(a.adjoint().adjoint().sub(&a).residual_norm().exact_zero.unwrap());
    }

    #[test]
    fn adjoint_reverses_products() {
        let a = ExactMatrix::from_fn(2, |i, j| zeta(8, (i + 3 * j) as i64));
        let b = ExactMatrix::from_fn(2, |i, j| zeta(8, (2 * i + j + 1) as i64));
        let lhs = a.mul(&b).adjoint();
        let rhs = b.adjoint().mul(&a.adjoint());
        assert!(lhs.sub(&rhs).residual_norm().exact_zero.unwrap());
    }

    #[test]
    fn csv_dump_shape() {
        let m = FloatMatrix::identity(2);
        let csv = m.to_csv_string();
        assert_eq!(csv, "1+0i,0+0i\n0+0i,1+0i\n");
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn dimension_mismatch_panics() {
        let a = ExactMatrix::identity(2);
        let b = ExactMatrix::identity(3);
        let _ = a.mul(&b);
    }
}
