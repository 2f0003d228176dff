//! Matrix realizations of quon (q-deformed oscillator) algebras at roots of
//! unity, and the constructions they certify: fractional supersymmetric
//! quantum systems, the polar decomposition of SU(2), complete sets of
//! mutually unbiased bases in prime dimension, and SIC-POVM candidate
//! verification.
//!
//! Everything algebraic runs on an exact cyclotomic backend
//! ([`cyclo::CyclotomicScalar`]) so identities are checked with zero
//! tolerance wherever exactness is achievable; a floating backend twin
//! covers ladder amplitudes and spectra where square roots force it.

pub mod cyclo;
pub mod error;
pub mod fsusy;
pub mod matrix;
pub mod mubgen;
pub mod quon;
pub mod report;
pub mod scalar;
pub mod sicpovm;
pub mod spectrum;
pub mod su2polar;
pub mod weylheis;

pub use cyclo::{ComplexFloat, CyclotomicScalar, Rational};
pub use error::Error;
pub use matrix::{ExactMatrix, FloatMatrix, OperatorMatrix, ResidualNorm};
pub use report::{RelationCheck, RelationReport};
pub use scalar::{Backend, Scalar};
pub use spectrum::{hermitian_spectrum, SpectralLevel, Spectrum};
