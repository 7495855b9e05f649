use crate::error::{Error, Result};
use crate::linalg::{
    check_psd, hermitian_eig_with, partial_trace, qubit_mask, qubits_for_dim, DenseMatrix, HermitianEig,
    Real, Tolerances,
};

use super::pure::PureState;

/// Hermitian, unit-trace, positive semidefinite operator on a qubit register.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityOperator<T> {
    num_qubits: usize,
    matrix: DenseMatrix<T>,
}

impl<T: Real> DensityOperator<T> {
    pub fn new(matrix: DenseMatrix<T>) -> Result<Self> {
        Self::new_with(matrix, &T::tolerances())
    }

    /// Validates hermiticity, trace and spectrum against `tol`.
    pub fn new_with(matrix: DenseMatrix<T>, tol: &Tolerances) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::arg("density operator must be square"));
        }
        let num_qubits = qubits_for_dim(matrix.rows())?;
        if num_qubits == 0 {
            return Err(Error::arg("a density operator needs at least one qubit"));
        }
        let eig = hermitian_eig_with(&matrix, tol)?;
        let tr = matrix.trace();
        if (tr.re - T::one()).abs() > T::lit(tol.trace_tol) || tr.im.abs() > T::lit(tol.trace_tol) {
            return Err(Error::arg(format!("trace is {}, expected 1", tr.re)));
        }
        check_psd(&eig.eigenvalues, tol)?;
        Ok(DensityOperator { num_qubits, matrix })
    }

    pub fn from_pure(psi: &PureState<T>) -> Self {
        psi.projector()
    }

    /// `I / 2^n`.
    pub fn maximally_mixed(num_qubits: usize) -> Result<Self> {
        if num_qubits == 0 {
            return Err(Error::arg("a density operator needs at least one qubit"));
        }
        let dim = 1usize << num_qubits.min(usize::BITS as usize - 1);
        qubits_for_dim(dim)?;
        Ok(DensityOperator {
            num_qubits,
            matrix: DenseMatrix::identity(dim).scale(T::one() / T::lit(dim as f64)),
        })
    }

    /// `sum_i p_i |psi_i><psi_i|`.
    pub fn mixture(weights: &[T], members: &[PureState<T>]) -> Result<Self> {
        if weights.len() != members.len() || members.is_empty() {
            return Err(Error::arg("mixture needs one weight per member"));
        }
        let n = members[0].num_qubits();
        if members.iter().any(|m| m.num_qubits() != n) {
            return Err(Error::arg("mixture members differ in qubit count"));
        }
        if weights.iter().any(|&w| w < T::zero()) {
            return Err(Error::arg("mixture weights must be non-negative"));
        }
        let dim = members[0].dim();
        let mut m = DenseMatrix::zeros(dim, dim);
        for (&w, psi) in weights.iter().zip(members) {
            m = m.add(&DenseMatrix::outer(psi.amplitudes()).scale(w));
        }
        Self::new(m)
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &DenseMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DenseMatrix<T> {
        self.matrix
    }

    pub fn eig(&self) -> HermitianEig<T> {
        crate::linalg::jacobi(&self.matrix)
    }

    /// Number of eigenvalues above `rank_tol`.
    pub fn rank(&self, rank_tol: T) -> usize {
        self.eig().eigenvalues.iter().filter(|&&l| l > rank_tol).count()
    }

    /// Reduced operator on `keep`; qubits keep their relative order.
    pub fn reduce(&self, keep: &[usize]) -> Result<Self> {
        if keep.is_empty() {
            return Err(Error::arg("reduce needs a non-empty set of qubits to keep"));
        }
        qubit_mask(keep, self.num_qubits)?;
        let traced: Vec<usize> = (0..self.num_qubits).filter(|q| !keep.contains(q)).collect();
        let matrix = partial_trace(&self.matrix, &traced)?;
        Ok(DensityOperator {
            num_qubits: keep.len(),
            matrix,
        })
    }

    pub(crate) fn from_parts(num_qubits: usize, matrix: DenseMatrix<T>) -> Self {
        DensityOperator { num_qubits, matrix }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;

    #[test]
    fn rejects_bad_trace() {
        let m = DenseMatrix::<f64>::from_diag(&[0.5, 0.4]);
        assert!(DensityOperator::new(m).is_err());
    }

    #[test]
    fn rejects_negative() {
        let m = DenseMatrix::<f64>::from_diag(&[1.1, -0.1]);
        assert!(matches!(
            DensityOperator::new(m),
            Err(Error::NegativeEigenvalue { .. })
        ));
    }

    #[test]
    fn maximally_mixed_rank() {
        let r = DensityOperator::<f64>::maximally_mixed(2).unwrap();
        assert_eq!(r.rank(1e-10), 4);
        assert!((r.matrix().trace().re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn mixture_of_basis_states() {
        let s0 = PureState::<f64>::basis(1, 0).unwrap();
        let s1 = PureState::<f64>::new(vec![c(0.0, 0.0), c(0.0, 1.0)]).unwrap();
        let rho = DensityOperator::mixture(&[0.25, 0.75], &[s0, s1]).unwrap();
        assert!(rho.matrix().max_abs_diff(&DenseMatrix::from_diag(&[0.25, 0.75])) < 1e-15);
    }
}
