use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::{c, complement, czero, qubit_mask, qubits_for_dim, scatter_table, DenseMatrix, Real, Tolerances};

use super::density::DensityOperator;

/// Normalized state vector of a qubit register.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState<T> {
    num_qubits: usize,
    amplitudes: Vec<Complex<T>>,
}

impl<T: Real> PureState<T> {
    /// Wraps amplitudes, checking the length is `2^n` and the norm is one.
    pub fn new(amplitudes: Vec<Complex<T>>) -> Result<Self> {
        Self::new_with(amplitudes, &T::tolerances())
    }

    pub fn new_with(amplitudes: Vec<Complex<T>>, tol: &Tolerances) -> Result<Self> {
        let num_qubits = qubits_for_dim(amplitudes.len())?;
        if num_qubits == 0 {
            return Err(Error::arg("a state needs at least one qubit"));
        }
        let norm = norm_of(&amplitudes);
        if !norm.is_finite() || (norm - T::one()).abs() > T::lit(tol.norm_tol) {
            return Err(Error::NormViolation {
                norm: norm.to_f64_lossy(),
            });
        }
        Ok(PureState {
            num_qubits,
            amplitudes,
        })
    }

    /// Rescales the amplitudes to unit norm.
    pub fn normalized(mut amplitudes: Vec<Complex<T>>) -> Result<Self> {
        let norm = norm_of(&amplitudes);
        if !(norm > T::zero()) || !norm.is_finite() {
            return Err(Error::NormViolation {
                norm: norm.to_f64_lossy(),
            });
        }
        for z in &mut amplitudes {
            *z /= norm;
        }
        Self::new(amplitudes)
    }

    /// Computational basis state `|index>` on `num_qubits` qubits.
    pub fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        let dim = 1usize
            .checked_shl(num_qubits as u32)
            .ok_or(Error::Capacity {
                qubits: num_qubits,
                cap: crate::linalg::MAX_QUBITS,
            })?;
        qubits_for_dim(dim)?;
        if index >= dim {
            return Err(Error::arg(format!("basis index {index} out of range")));
        }
        let mut amps = vec![czero(); dim];
        amps[index] = c(T::one(), T::zero());
        Self::new(amps)
    }

    /// `(|00> + |11>)/sqrt(2)`.
    pub fn bell_phi_plus() -> Self {
        let s = T::FRAC_1_SQRT_2();
        let z = T::zero();
        PureState {
            num_qubits: 2,
            amplitudes: vec![c(s, z), c(z, z), c(z, z), c(s, z)],
        }
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn norm(&self) -> T {
        norm_of(&self.amplitudes)
    }

    /// `|psi><psi|`.
    pub fn projector(&self) -> DensityOperator<T> {
        DensityOperator::from_parts(self.num_qubits, DenseMatrix::outer(&self.amplitudes))
    }

    /// `|self> ⊗ |other>`, with `self` on the leading qubits.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let n = self.num_qubits + other.num_qubits;
        if n > crate::linalg::MAX_QUBITS {
            return Err(Error::Capacity {
                qubits: n,
                cap: crate::linalg::MAX_QUBITS,
            });
        }
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|&x| other.amplitudes.iter().map(move |&y| x * y))
            .collect();
        Ok(PureState {
            num_qubits: n,
            amplitudes,
        })
    }

    /// Reduced density operator on `keep`, computed straight from the amplitudes.
    pub fn reduce(&self, keep: &[usize]) -> Result<DensityOperator<T>> {
        if keep.is_empty() {
            return Err(Error::arg("reduce needs a non-empty set of qubits to keep"));
        }
        qubit_mask(keep, self.num_qubits)?;
        let mut kept = keep.to_vec();
        kept.sort_unstable();
        Ok(DensityOperator::from_parts(kept.len(), self.reduced_matrix(&kept)))
    }

    /// `Tr_rest |psi><psi|` for an ascending, validated `kept` list.
    pub(crate) fn reduced_matrix(&self, kept: &[usize]) -> DenseMatrix<T> {
        let traced = complement(kept, self.num_qubits);
        let kept_idx = scatter_table(kept, self.num_qubits);
        let traced_idx = scatter_table(&traced, self.num_qubits);
        let dim = kept_idx.len();
        let mut out = DenseMatrix::zeros(dim, dim);
        for (i, &ri) in kept_idx.iter().enumerate() {
            for j in i..dim {
                let cj = kept_idx[j];
                let v = traced_idx.iter().fold(czero(), |acc, &t| {
                    acc + self.amplitudes[ri | t] * self.amplitudes[cj | t].conj()
                });
                out[(i, j)] = v;
                out[(j, i)] = v.conj();
            }
            out[(i, i)].im = T::zero();
        }
        out
    }

    pub fn cast<U: Real>(&self) -> PureState<U> {
        PureState {
            num_qubits: self.num_qubits,
            amplitudes: self
                .amplitudes
                .iter()
                .map(|z| c(U::lit(z.re.to_f64_lossy()), U::lit(z.im.to_f64_lossy())))
                .collect(),
        }
    }

    pub(crate) fn from_parts(num_qubits: usize, amplitudes: Vec<Complex<T>>) -> Self {
        debug_assert_eq!(amplitudes.len(), 1 << num_qubits);
        PureState {
            num_qubits,
            amplitudes,
        }
    }
}

pub(crate) fn norm_of<T: Real>(v: &[Complex<T>]) -> T {
    v.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr()).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_wrong_norm() {
        let amps = vec![c(0.5, 0.0), c(0.0, 0.0)];
        match PureState::<f64>::new(amps) {
            Err(Error::NormViolation { norm }) => assert!((norm - 0.5).abs() < 1e-15),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_non_power_of_two() {
        let amps = vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        assert!(matches!(PureState::<f64>::new(amps), Err(Error::Argument(_))));
    }

    #[test]
    fn reduce_product_gives_projector() {
        let plus = PureState::<f64>::normalized(vec![c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        let one = PureState::<f64>::basis(1, 1).unwrap();
        let prod = plus.tensor(&one).unwrap();
        let r0 = prod.reduce(&[0]).unwrap();
        assert!(r0.matrix().max_abs_diff(plus.projector().matrix()) < 1e-15);
        let r1 = prod.reduce(&[1]).unwrap();
        assert!(r1.matrix().max_abs_diff(one.projector().matrix()) < 1e-15);
    }

    #[test]
    fn reduce_needs_qubits() {
        assert!(PureState::<f64>::bell_phi_plus().reduce(&[]).is_err());
    }

    #[test]
    fn reduce_all_is_projector() {
        let b = PureState::<f64>::bell_phi_plus();
        let r = b.reduce(&[1, 0]).unwrap();
        assert!(r.matrix().max_abs_diff(b.projector().matrix()) < 1e-15);
    }
}
