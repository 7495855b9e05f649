use crate::error::{Error, Result};
use crate::linalg::{partial_transpose, singular_values, trace_norm, DenseMatrix, Real};
use crate::states::{Bipartition, DensityOperator};

use super::MeasureValue;

/// `sigma_y ⊗ sigma_y`, which is real.
fn yy<T: Real>() -> DenseMatrix<T> {
    let o = T::one();
    let z = T::zero();
    DenseMatrix::from_real(4, &[z, z, z, -o, z, z, o, z, z, o, z, z, -o, z, z, z])
}

/// Decreasing square roots of the eigenvalues of `rho (Y⊗Y) rho^* (Y⊗Y)`.
///
/// With `rho = W W^dagger` (columns `sqrt(l_k) e_k` over the non-negligible
/// spectrum) these are the singular values of the symmetric matrix
/// `W^T (Y⊗Y) W`, which is how they are computed here.
pub fn spin_flip_lambdas<T: Real>(rho: &DensityOperator<T>) -> Result<[T; 4]> {
    if rho.num_qubits() != 2 {
        return Err(Error::arg(format!(
            "two-qubit concurrence needs a 2-qubit operator, got {} qubits",
            rho.num_qubits()
        )));
    }
    let rank_tol = T::lit(T::tolerances().rank_tol);
    let eig = rho.eig();
    let kept: Vec<usize> = (0..4).filter(|&k| eig.eigenvalues[k] > rank_tol).collect();
    let mut w = DenseMatrix::zeros(4, kept.len().max(1));
    for (col, &k) in kept.iter().enumerate() {
        let s = eig.eigenvalues[k].sqrt();
        for i in 0..4 {
            w[(i, col)] = eig.eigenvectors[(i, k)] * s;
        }
    }
    let tau = w.transpose().matmul(&yy()).matmul(&w);
    let mut l = [T::zero(); 4];
    for (k, s) in singular_values(&tau).into_iter().enumerate() {
        l[k] = s;
    }
    Ok(l)
}

/// Closed-form two-qubit concurrence `max(0, l1 - l2 - l3 - l4)`.
pub fn concurrence_two_qubit<T: Real>(rho: &DensityOperator<T>) -> Result<MeasureValue<T>> {
    let l = spin_flip_lambdas(rho)?;
    Ok(MeasureValue::closed_form(l[0] - l[1] - l[2] - l[3]))
}

/// `||rho^{T_A}|| - 1`, clamped at zero.
pub fn negativity<T: Real>(rho: &DensityOperator<T>, split: &Bipartition) -> Result<MeasureValue<T>> {
    split.check_register(rho.num_qubits())?;
    let pt = partial_transpose(rho.matrix(), split.side_a())?;
    Ok(MeasureValue::closed_form(trace_norm(&pt)? - T::one()))
}
