use num_complex::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{c, czero, Real, Tolerances, MAX_QUBITS};

use super::pure::{norm_of, PureState};

/// Coefficients of a generalized W-class state
/// `a|10...0> + b_1|01...0> + ... + b_{N-1}|00...1>`.
///
/// Pair indices are 1-based: `b(i)` is the amplitude on qubit `i`, qubit 0
/// being the distinguished party A.
#[derive(Clone, Debug, PartialEq)]
pub struct WClassParams<T> {
    a: Complex<T>,
    b: Vec<Complex<T>>,
}

impl<T: Real> WClassParams<T> {
    pub fn new(a: Complex<T>, b: Vec<Complex<T>>) -> Result<Self> {
        Self::new_with(a, b, &T::tolerances())
    }

    pub fn new_with(a: Complex<T>, b: Vec<Complex<T>>, tol: &Tolerances) -> Result<Self> {
        if b.len() < 2 {
            return Err(Error::arg(format!(
                "a W-class state needs at least 3 qubits, got {}",
                b.len() + 1
            )));
        }
        if b.len() + 1 > MAX_QUBITS {
            return Err(Error::Capacity {
                qubits: b.len() + 1,
                cap: MAX_QUBITS,
            });
        }
        let norm = (a.norm_sqr() + b.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr())).sqrt();
        if !norm.is_finite() || (norm - T::one()).abs() > T::lit(tol.norm_tol) {
            return Err(Error::NormViolation {
                norm: norm.to_f64_lossy(),
            });
        }
        Ok(WClassParams { a, b })
    }

    /// Real coefficients, for convenience.
    pub fn from_real(a: T, b: &[T]) -> Result<Self> {
        Self::new(c(a, T::zero()), b.iter().map(|&x| c(x, T::zero())).collect())
    }

    /// The symmetric `|W>_N` with every coefficient `1/sqrt(N)`.
    pub fn uniform(num_qubits: usize) -> Result<Self> {
        if num_qubits < 3 {
            return Err(Error::arg("a W-class state needs at least 3 qubits"));
        }
        let v = T::one() / T::lit(num_qubits as f64).sqrt();
        Self::from_real(v, &vec![v; num_qubits - 1])
    }

    pub fn num_qubits(&self) -> usize {
        self.b.len() + 1
    }

    pub fn a(&self) -> Complex<T> {
        self.a
    }

    pub fn b_all(&self) -> &[Complex<T>] {
        &self.b
    }

    /// Amplitude on qubit `i`, `1 <= i <= N-1`.
    pub fn b(&self, i: usize) -> Result<Complex<T>> {
        if i == 0 || i > self.b.len() {
            return Err(Error::arg(format!(
                "pair index {i} out of range 1..={}",
                self.b.len()
            )));
        }
        Ok(self.b[i - 1])
    }

    /// Multiplies every coefficient by a local phase; `phases[0]` goes on `a`.
    pub fn with_phases(&self, phases: &[T]) -> Self {
        assert_eq!(phases.len(), self.num_qubits(), "one phase per coefficient");
        let rot = |z: Complex<T>, t: T| z * Complex::from_polar(T::one(), t);
        WClassParams {
            a: rot(self.a, phases[0]),
            b: self.b.iter().zip(&phases[1..]).map(|(&z, &t)| rot(z, t)).collect(),
        }
    }
}

/// Builds the state vector: `a` at index `2^{N-1}`, `b_i` at `2^{N-1-i}`.
pub fn make_wclass<T: Real>(params: &WClassParams<T>) -> PureState<T> {
    let n = params.num_qubits();
    let mut amps = vec![czero(); 1 << n];
    amps[1 << (n - 1)] = params.a;
    for (k, &bi) in params.b.iter().enumerate() {
        amps[1 << (n - 2 - k)] = bi;
    }
    PureState::from_parts(n, amps)
}

/// Draws coefficients uniformly from the unit sphere of `C^N` (normalized
/// complex Gaussians). The same seed always gives the same parameters.
pub fn sample_wclass<T: Real>(num_qubits: usize, seed: u64) -> Result<WClassParams<T>> {
    if num_qubits > MAX_QUBITS {
        return Err(Error::Capacity {
            qubits: num_qubits,
            cap: MAX_QUBITS,
        });
    }
    if num_qubits < 4 {
        return Err(Error::arg(format!(
            "sampling needs at least 4 qubits, got {num_qubits}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs: Vec<Complex<T>> = (0..num_qubits)
        .map(|_| c(T::standard_normal(&mut rng), T::standard_normal(&mut rng)))
        .collect();
    let norm = norm_of(&coeffs);
    for z in &mut coeffs {
        *z /= norm;
    }
    let a = coeffs.remove(0);
    Ok(WClassParams { a, b: coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w4_layout() {
        let psi = make_wclass(&WClassParams::<f64>::uniform(4).unwrap());
        for (idx, amp) in psi.amplitudes().iter().enumerate() {
            let expected = if [8, 4, 2, 1].contains(&idx) { 0.5 } else { 0.0 };
            assert!((amp.re - expected).abs() < 1e-15 && amp.im == 0.0, "index {idx}");
        }
    }

    #[test]
    fn product_corner_case() {
        let p = WClassParams::<f64>::from_real(1.0, &[0.0, 0.0]).unwrap();
        let psi = make_wclass(&p);
        assert_eq!(psi.amplitudes()[4], c(1.0, 0.0));
    }

    #[test]
    fn rejects_unnormalized_and_small() {
        assert!(matches!(
            WClassParams::<f64>::from_real(0.5, &[0.5, 0.5]),
            Err(Error::NormViolation { .. })
        ));
        assert!(WClassParams::<f64>::from_real(0.6, &[0.8]).is_err());
    }

    #[test]
    fn pair_index_bounds() {
        let p = WClassParams::<f64>::uniform(4).unwrap();
        assert!(p.b(0).is_err());
        assert!(p.b(4).is_err());
        assert!(p.b(3).is_ok());
    }

    #[test]
    fn sampling_is_deterministic_and_normalized() {
        let p1 = sample_wclass::<f64>(5, 17).unwrap();
        let p2 = sample_wclass::<f64>(5, 17).unwrap();
        assert_eq!(p1, p2);
        assert_ne!(p1, sample_wclass::<f64>(5, 18).unwrap());
        let n2 = p1.a().norm_sqr() + p1.b_all().iter().map(|z| z.norm_sqr()).sum::<f64>();
        assert!((n2 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sampling_bounds() {
        assert!(matches!(sample_wclass::<f64>(3, 0), Err(Error::Argument(_))));
        assert!(matches!(sample_wclass::<f64>(11, 0), Err(Error::Capacity { .. })));
    }
}
