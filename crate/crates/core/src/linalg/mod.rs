//! Dense complex linear algebra for operators on small qubit registers.

mod eig;
mod matrix;
mod ops;
mod scalar;
mod svd;

pub use eig::{
    hermitian_eig, hermitian_eig_with, psd_sqrt, psd_sqrt_with, trace_norm, trace_norm_with,
    HermitianEig,
};
pub(crate) use eig::{check_psd, jacobi};
pub use matrix::DenseMatrix;
pub use ops::{partial_trace, partial_transpose, qubit_mask, qubits_for_dim, tensor_product, MAX_QUBITS};
pub(crate) use ops::{complement, scatter_table};
pub use scalar::{Real, Tolerances};
pub use svd::singular_values;
pub(crate) use scalar::{c, czero};
