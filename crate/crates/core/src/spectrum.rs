//! Hermitian eigenvalues on the floating backend via cyclic Jacobi rotations.

use num_complex::Complex64;

use crate::error::Error;
use crate::matrix::FloatMatrix;

/// Hermiticity contract for [`hermitian_spectrum`].
pub const HERMITICITY_TOL: f64 = 1e-10;
/// Absolute tolerance for grouping eigenvalues into degenerate levels.
pub const DEGENERACY_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct SpectralLevel {
    pub energy: f64,
    pub degeneracy: usize,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct Spectrum {
    /// All eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    /// Eigenvalues grouped into degenerate levels (absolute tolerance 1e-8).
    pub levels: Vec<SpectralLevel>,
}

impl Spectrum {
    fn from_eigenvalues(mut ev: Vec<f64>) -> Self {
        ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut levels: Vec<SpectralLevel> = Vec::new();
        let mut group: Vec<f64> = Vec::new();
        for &e in &ev {
            match group.last() {
                Some(&prev) if (e - prev).abs() <= DEGENERACY_TOL => group.push(e),
                Some(_) => {
                    levels.push(SpectralLevel {
                        energy: group.iter().sum::<f64>() / group.len() as f64,
                        degeneracy: group.len(),
                    });
                    group = vec![e];
                }
                None => group.push(e),
            }
        }
        if !group.is_empty() {
            levels.push(SpectralLevel {
                energy: group.iter().sum::<f64>() / group.len() as f64,
                degeneracy: group.len(),
            });
        }
        Spectrum {
            eigenvalues: ev,
            levels,
        }
    }
}

/// Eigenvalues of a Hermitian matrix, sorted ascending with degeneracy
/// grouping. Rejects inputs with ‖A − A†‖ above the contract tolerance.
pub fn hermitian_spectrum(a: &FloatMatrix) -> Result<Spectrum, Error> {
    let herm_residual = a.sub(&a.adjoint()).residual_norm().max_abs;
    if herm_residual > HERMITICITY_TOL {
        return Err(Error::NonHermitian {
            residual: herm_residual,
            tol: HERMITICITY_TOL,
        });
    }
    Ok(Spectrum::from_eigenvalues(jacobi_eigenvalues(a)))
}

fn off_diagonal_norm(a: &[Complex64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Cyclic Jacobi with a phase factor absorbing complex pivots.
fn jacobi_eigenvalues(m: &FloatMatrix) -> Vec<f64> {
    let n = m.dim();
    let mut a: Vec<Complex64> = m.entries().to_vec();
    // Symmetrize once so rotations see an exactly Hermitian matrix.
    for i in 0..n {
        for j in (i + 1)..n {
            let avg = 0.5 * (a[i * n + j] + a[j * n + i].conj());
            a[i * n + j] = avg;
            a[j * n + i] = avg.conj();
        }
        a[i * n + i] = Complex64::new(a[i * n + i].re, 0.0);
    }
    let scale = {
        let frob: f64 = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        frob.max(1.0)
    };
    let target = 1e-14 * scale;
    for _sweep in 0..100 {
        if off_diagonal_norm(&a, n) <= target {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let g = a[p * n + q];
                let h = g.norm();
                if h <= 1e-300 {
                    continue;
                }
                let alpha = a[p * n + p].re;
                let beta = a[q * n + q].re;
                let w = g.conj() / h; // phase making the pivot block real
                let tau = (beta - alpha) / (2.0 * h);
                let t = if tau == 0.0 {
                    1.0
                } else {
                    tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // Column update: A ← A·J with J = [[c, s], [−s·w, c·w]] in
                // the (p,q) plane.
                for i in 0..n {
                    let aip = a[i * n + p];
                    let aiq = a[i * n + q];
                    a[i * n + p] = c * aip - s * w * aiq;
                    a[i * n + q] = s * aip + c * w * aiq;
                }
                // Row update: A ← J†·A.
                for j in 0..n {
                    let apj = a[p * n + j];
                    let aqj = a[q * n + j];
                    a[p * n + j] = c * apj - s * w.conj() * aqj;
                    a[q * n + j] = s * apj + c * w.conj() * aqj;
                }
                a[p * n + q] = Complex64::new(0.0, 0.0);
                a[q * n + p] = Complex64::new(0.0, 0.0);
                a[p * n + p] = Complex64::new(a[p * n + p].re, 0.0);
                a[q * n + q] = Complex64::new(a[q * n + q].re, 0.0);
            }
        }
    }
    (0..n).map(|i| a[i * n + i].re).collect()
}
