use num_complex::Complex;

use crate::error::{Error, Result};

use super::matrix::DenseMatrix;
use super::scalar::{Real, Tolerances};

const MAX_SWEEPS: usize = 100;

/// Spectrum of a Hermitian matrix with eigenvalues ascending and the matching
/// orthonormal eigenvectors stored as columns.
#[derive(Clone, Debug)]
pub struct HermitianEig<T> {
    pub eigenvalues: Vec<T>,
    pub eigenvectors: DenseMatrix<T>,
}

impl<T: Real> HermitianEig<T> {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvector(&self, k: usize) -> Vec<Complex<T>> {
        self.eigenvectors.column(k)
    }

    /// `V diag(f(lambda)) V^dagger`.
    pub fn compose(&self, f: impl Fn(T) -> T) -> DenseMatrix<T> {
        let n = self.dim();
        let v = &self.eigenvectors;
        let mut out = DenseMatrix::zeros(n, n);
        for (k, &lam) in self.eigenvalues.iter().enumerate() {
            let w = f(lam);
            if w == T::zero() {
                continue;
            }
            for i in 0..n {
                let vik = v[(i, k)] * w;
                for j in 0..n {
                    out[(i, j)] += vik * v[(j, k)].conj();
                }
            }
        }
        out
    }

    pub fn reconstruct(&self) -> DenseMatrix<T> {
        self.compose(|l| l)
    }
}

fn check_hermitian<T: Real>(m: &DenseMatrix<T>, tol: &Tolerances) -> Result<()> {
    if !m.is_square() {
        return Err(Error::arg(format!(
            "expected a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let dev = m.hermiticity_deviation();
    if dev.is_nan() || dev > T::lit(tol.herm_tol) {
        return Err(Error::NotHermitian {
            deviation: dev.to_f64_lossy(),
        });
    }
    if !m.is_finite() {
        return Err(Error::arg("matrix has non-finite entries"));
    }
    Ok(())
}

/// Full eigendecomposition of a Hermitian matrix with the default tolerances
/// of the scalar type.
pub fn hermitian_eig<T: Real>(m: &DenseMatrix<T>) -> Result<HermitianEig<T>> {
    hermitian_eig_with(m, &T::tolerances())
}

pub fn hermitian_eig_with<T: Real>(m: &DenseMatrix<T>, tol: &Tolerances) -> Result<HermitianEig<T>> {
    check_hermitian(m, tol)?;
    Ok(jacobi(m))
}

/// Cyclic complex Jacobi. Each rotation first removes the phase of the pivot
/// `a_pq` and then applies the real symmetric Jacobi rotation, so the pivot
/// becomes exactly zero.
pub(crate) fn jacobi<T: Real>(m: &DenseMatrix<T>) -> HermitianEig<T> {
    let n = m.rows();
    let half = T::lit(0.5);
    // work on the Hermitian part so tiny input asymmetry cannot stall the sweeps
    let mut a = m.add(&m.dagger()).scale(half);
    for i in 0..n {
        a[(i, i)].im = T::zero();
    }
    let mut v = DenseMatrix::identity(n);

    let scale = a.frobenius_sq().sqrt();
    let eps = T::epsilon();
    let negligible = eps * eps * scale;

    for _ in 0..MAX_SWEEPS {
        let mut off = T::zero();
        for p in 0..n {
            for q in p + 1..n {
                off += a[(p, q)].norm_sqr();
            }
        }
        if off.sqrt() <= eps * scale || off == T::zero() {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let g = a[(p, q)];
                let ag = g.norm();
                if ag <= negligible {
                    a[(p, q)] = Complex::new(T::zero(), T::zero());
                    a[(q, p)] = Complex::new(T::zero(), T::zero());
                    continue;
                }
                let alpha = a[(p, p)].re;
                let beta = a[(q, q)].re;
                let theta = (beta - alpha) / (ag + ag);
                let t = if theta == T::zero() {
                    T::one()
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt())
                };
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                let e = g / ag;
                let ec = e.conj();

                // A <- A J
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * c - akq * ec * s;
                    a[(k, q)] = akp * s + akq * ec * c;
                }
                // A <- J^dagger A
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = apk * c - aqk * e * s;
                    a[(q, k)] = apk * s + aqk * e * c;
                }
                a[(p, q)] = Complex::new(T::zero(), T::zero());
                a[(q, p)] = Complex::new(T::zero(), T::zero());
                a[(p, p)].im = T::zero();
                a[(q, q)].im = T::zero();
                // V <- V J
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * c - vkq * ec * s;
                    v[(k, q)] = vkp * s + vkq * ec * c;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).unwrap());
    let eigenvalues = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut eigenvectors = DenseMatrix::zeros(n, n);
    for (new, &old) in order.iter().enumerate() {
        for k in 0..n {
            eigenvectors[(k, new)] = v[(k, old)];
        }
    }
    HermitianEig {
        eigenvalues,
        eigenvectors,
    }
}

/// Trace norm `sum |lambda_i|` of a Hermitian matrix.
pub fn trace_norm<T: Real>(m: &DenseMatrix<T>) -> Result<T> {
    trace_norm_with(m, &T::tolerances())
}

pub fn trace_norm_with<T: Real>(m: &DenseMatrix<T>, tol: &Tolerances) -> Result<T> {
    let eig = hermitian_eig_with(m, tol)?;
    Ok(eig.eigenvalues.iter().fold(T::zero(), |acc, l| acc + l.abs()))
}

/// Hermitian square root of a positive semidefinite matrix. Eigenvalues in
/// `[-psd_clamp_tol, 0)` are clamped to zero.
pub fn psd_sqrt<T: Real>(m: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
    psd_sqrt_with(m, &T::tolerances())
}

pub fn psd_sqrt_with<T: Real>(m: &DenseMatrix<T>, tol: &Tolerances) -> Result<DenseMatrix<T>> {
    let eig = hermitian_eig_with(m, tol)?;
    check_psd(&eig.eigenvalues, tol)?;
    Ok(eig.compose(|l| l.max(T::zero()).sqrt()))
}

pub(crate) fn check_psd<T: Real>(eigenvalues: &[T], tol: &Tolerances) -> Result<()> {
    match eigenvalues.first() {
        Some(&min) if min < -T::lit(tol.psd_clamp_tol) => Err(Error::NegativeEigenvalue {
            eigenvalue: min.to_f64_lossy(),
        }),
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn identity_spectrum() {
        let e = hermitian_eig(&DenseMatrix::<f64>::identity(2)).unwrap();
        assert_eq!(e.eigenvalues, vec![1.0, 1.0]);
    }

    #[test]
    fn pauli_x_spectrum() {
        let x = DenseMatrix::<f64>::from_real(2, &[0.0, 1.0, 1.0, 0.0]);
        let e = hermitian_eig(&x).unwrap();
        assert_abs_diff_eq!(e.eigenvalues[0], -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e.eigenvalues[1], 1.0, epsilon = 1e-14);
        assert!(e.reconstruct().max_abs_diff(&x) < 1e-14);
    }

    #[test]
    fn complex_pivot_is_annihilated() {
        let m = DenseMatrix::from_vec(
            2,
            2,
            vec![
                Complex::new(1.0, 0.0),
                Complex::new(0.3, -0.4),
                Complex::new(0.3, 0.4),
                Complex::new(2.0, 0.0),
            ],
        );
        let e = hermitian_eig(&m).unwrap();
        // closed form: (3 -/+ sqrt(1 + 4*0.25)) / 2
        let r = 2f64.sqrt();
        assert_abs_diff_eq!(e.eigenvalues[0], (3.0 - r) / 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e.eigenvalues[1], (3.0 + r) / 2.0, epsilon = 1e-14);
        assert!(e.reconstruct().max_abs_diff(&m) < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = DenseMatrix::<f64>::from_real(2, &[0.0, 1.0, 0.0, 0.0]);
        assert!(matches!(hermitian_eig(&m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn trace_norm_identity() {
        assert_abs_diff_eq!(trace_norm(&DenseMatrix::<f64>::identity(2)).unwrap(), 2.0);
    }

    #[test]
    fn sqrt_of_diagonal() {
        let r = psd_sqrt(&DenseMatrix::<f64>::from_diag(&[4.0, 9.0])).unwrap();
        assert!(r.max_abs_diff(&DenseMatrix::from_diag(&[2.0, 3.0])) < 1e-14);
        let h = psd_sqrt(&DenseMatrix::<f64>::from_diag(&[0.5, 0.5])).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!(h.max_abs_diff(&DenseMatrix::from_diag(&[s, s])) < 1e-14);
    }

    #[test]
    fn sqrt_rejects_negative_spectrum() {
        let m = DenseMatrix::<f64>::from_diag(&[1.0, -1e-3]);
        assert!(matches!(psd_sqrt(&m), Err(Error::NegativeEigenvalue { .. })));
        // within the clamp window
        let ok = psd_sqrt(&DenseMatrix::<f64>::from_diag(&[1.0, -1e-9])).unwrap();
        assert_eq!(ok[(1, 1)].re, 0.0);
    }

    #[test]
    fn single_precision_works() {
        let x = DenseMatrix::<f32>::from_real(2, &[2.0, 1.0, 1.0, 2.0]);
        let e = hermitian_eig(&x).unwrap();
        assert!((e.eigenvalues[0] - 1.0).abs() < 1e-6);
        assert!((e.eigenvalues[1] - 3.0).abs() < 1e-6);
    }
}
