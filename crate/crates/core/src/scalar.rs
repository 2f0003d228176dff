//! The two scalar backends matrices are generic over: exact cyclotomic
//! values and double-precision complex numbers.

use num_complex::Complex64;
use serde_json::json;

use crate::cyclo::CyclotomicScalar;

/// Backend tag carried by matrices and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl std::fmt::Display for Backend {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Backend::Exact => write!(f, "exact"),
            Backend::Float => write!(f, "float"),
        }
    }
}

/// Common interface of the two entry types.
pub trait Scalar: Clone + PartialEq + Send + Sync + std::fmt::Debug + 'static {
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    /// Entry modulus as a double (floating view on the exact backend).
    fn abs(&self) -> f64;
    fn to_complex(&self) -> Complex64;
    /// `Some(x == 0 symbolically)` on the exact backend, `None` on float.
    fn exact_zero(&self) -> Option<bool>;
    fn to_json_value(&self) -> serde_json::Value;
}

impl Scalar for CyclotomicScalar {
    const BACKEND: Backend = Backend::Exact;

    fn zero() -> Self {
        CyclotomicScalar::zero()
    }
    fn one() -> Self {
        CyclotomicScalar::one()
    }
    fn from_i64(v: i64) -> Self {
        CyclotomicScalar::from_integer(v)
    }
    fn add(&self, other: &Self) -> Self {
        CyclotomicScalar::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        CyclotomicScalar::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        CyclotomicScalar::mul(self, other)
    }
    fn neg(&self) -> Self {
        CyclotomicScalar::neg(self)
    }
    fn conj(&self) -> Self {
        CyclotomicScalar::conj(self)
    }
    fn abs(&self) -> f64 {
        self.to_float().norm()
    }
    fn to_complex(&self) -> Complex64 {
        self.to_float()
    }
    fn exact_zero(&self) -> Option<bool> {
        Some(self.is_zero())
    }
    fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("scalar serialization")
    }
}

impl Scalar for Complex64 {
    const BACKEND: Backend = Backend::Float;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn abs(&self) -> f64 {
        self.norm()
    }
    fn to_complex(&self) -> Complex64 {
        *self
    }
    fn exact_zero(&self) -> Option<bool> {
        None
    }
    fn to_json_value(&self) -> serde_json::Value {
        json!({ "re": self.re, "im": self.im })
    }
}
