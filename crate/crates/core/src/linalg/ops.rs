//! Tensor structure of operators on qubit registers.
//!
//! Qubit 0 is the most significant bit of a computational-basis index, so
//! for three qubits `|q0 q1 q2>` sits at index `4*q0 + 2*q1 + q2`.

use crate::error::{Error, Result};

use super::matrix::DenseMatrix;
use super::scalar::{czero, Real};

/// Largest register handled by the dense routines.
pub const MAX_QUBITS: usize = 10;

/// Number of qubits for a dimension, rejecting non powers of two.
pub fn qubits_for_dim(dim: usize) -> Result<usize> {
    if dim == 0 || !dim.is_power_of_two() {
        return Err(Error::arg(format!("dimension {dim} is not a power of two")));
    }
    let n = dim.trailing_zeros() as usize;
    if n > MAX_QUBITS {
        return Err(Error::Capacity {
            qubits: n,
            cap: MAX_QUBITS,
        });
    }
    Ok(n)
}

/// Validates a qubit subset and returns it as a basis-index bit mask.
pub fn qubit_mask(qubits: &[usize], num_qubits: usize) -> Result<usize> {
    let mut mask = 0usize;
    for &q in qubits {
        if q >= num_qubits {
            return Err(Error::arg(format!(
                "qubit {q} out of range for a {num_qubits}-qubit register"
            )));
        }
        let bit = 1 << (num_qubits - 1 - q);
        if mask & bit != 0 {
            return Err(Error::arg(format!("qubit {q} listed twice")));
        }
        mask |= bit;
    }
    Ok(mask)
}

/// Basis indices of the full register obtained by spreading every value of the
/// sub-register `qubits` (ascending, first listed = most significant) into place.
pub(crate) fn scatter_table(qubits: &[usize], num_qubits: usize) -> Vec<usize> {
    let k = qubits.len();
    (0..1usize << k)
        .map(|v| {
            qubits.iter().enumerate().fold(0usize, |acc, (pos, &q)| {
                if (v >> (k - 1 - pos)) & 1 == 1 {
                    acc | (1 << (num_qubits - 1 - q))
                } else {
                    acc
                }
            })
        })
        .collect()
}

pub(crate) fn complement(qubits: &[usize], num_qubits: usize) -> Vec<usize> {
    (0..num_qubits).filter(|q| !qubits.contains(q)).collect()
}

/// Kronecker product `A ⊗ B`; the row index of `A` varies slowest.
pub fn tensor_product<T: Real>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
    let rows = a.rows() * b.rows();
    let cols = a.cols() * b.cols();
    let cap = 1usize << MAX_QUBITS;
    if rows > cap || cols > cap {
        let dim = rows.max(cols);
        return Err(Error::Capacity {
            qubits: (usize::BITS - dim.leading_zeros()) as usize - usize::from(dim.is_power_of_two()),
            cap: MAX_QUBITS,
        });
    }
    let mut out = DenseMatrix::zeros(rows, cols);
    for ai in 0..a.rows() {
        for aj in 0..a.cols() {
            let x = a[(ai, aj)];
            for bi in 0..b.rows() {
                for bj in 0..b.cols() {
                    out[(ai * b.rows() + bi, aj * b.cols() + bj)] = x * b[(bi, bj)];
                }
            }
        }
    }
    Ok(out)
}

/// Traces out the listed qubits; the remaining qubits keep their relative order.
///
/// Tracing every qubit yields the 1×1 matrix holding the trace.
pub fn partial_trace<T: Real>(rho: &DenseMatrix<T>, traced: &[usize]) -> Result<DenseMatrix<T>> {
    if !rho.is_square() {
        return Err(Error::arg("partial trace needs a square matrix"));
    }
    let n = qubits_for_dim(rho.rows())?;
    qubit_mask(traced, n)?;
    let mut traced_sorted = traced.to_vec();
    traced_sorted.sort_unstable();
    let kept = complement(&traced_sorted, n);
    let kept_idx = scatter_table(&kept, n);
    let traced_idx = scatter_table(&traced_sorted, n);

    let dim = kept_idx.len();
    let mut out = DenseMatrix::zeros(dim, dim);
    for (i, &ri) in kept_idx.iter().enumerate() {
        for (j, &cj) in kept_idx.iter().enumerate() {
            out[(i, j)] = traced_idx
                .iter()
                .fold(czero(), |acc, &t| acc + rho[(ri | t, cj | t)]);
        }
    }
    Ok(out)
}

/// Transposes the tensor indices of the listed qubits only.
pub fn partial_transpose<T: Real>(rho: &DenseMatrix<T>, subsystem: &[usize]) -> Result<DenseMatrix<T>> {
    if !rho.is_square() {
        return Err(Error::arg("partial transpose needs a square matrix"));
    }
    let n = qubits_for_dim(rho.rows())?;
    let mask = qubit_mask(subsystem, n)?;
    let dim = rho.rows();
    let mut out = DenseMatrix::zeros(dim, dim);
    for r in 0..dim {
        for c in 0..dim {
            let r2 = (r & !mask) | (c & mask);
            let c2 = (c & !mask) | (r & mask);
            out[(r2, c2)] = rho[(r, c)];
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex;

    fn phi_plus() -> DenseMatrix<f64> {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let v = [s, 0.0, 0.0, s].map(|x| Complex::new(x, 0.0));
        DenseMatrix::outer(&v)
    }

    #[test]
    fn identity_tensor_identity() {
        let i2 = DenseMatrix::<f64>::identity(2);
        assert_eq!(tensor_product(&i2, &i2).unwrap(), DenseMatrix::identity(4));
    }

    #[test]
    fn pauli_x_tensor_identity_is_block_swap() {
        let x = DenseMatrix::<f64>::from_real(2, &[0.0, 1.0, 1.0, 0.0]);
        let k = tensor_product(&x, &DenseMatrix::identity(2)).unwrap();
        let expected = DenseMatrix::from_real(
            4,
            &[
                0.0, 0.0, 1.0, 0.0, //
                0.0, 0.0, 0.0, 1.0, //
                1.0, 0.0, 0.0, 0.0, //
                0.0, 1.0, 0.0, 0.0,
            ],
        );
        assert_eq!(k, expected);
    }

    #[test]
    fn basis_projector_product() {
        let p1 = DenseMatrix::<f64>::from_diag(&[0.0, 1.0]);
        let p0 = DenseMatrix::<f64>::from_diag(&[1.0, 0.0]);
        assert_eq!(
            tensor_product(&p1, &p0).unwrap(),
            DenseMatrix::from_diag(&[0.0, 0.0, 1.0, 0.0])
        );
    }

    #[test]
    fn tensor_capacity() {
        let big = DenseMatrix::<f64>::identity(1 << 6);
        let err = tensor_product(&big, &big).unwrap_err();
        assert!(matches!(err, Error::Capacity { qubits: 12, cap: 10 }));
    }

    #[test]
    fn bell_reduction_is_maximally_mixed() {
        let red = partial_trace(&phi_plus(), &[1]).unwrap();
        assert!(red.max_abs_diff(&DenseMatrix::from_diag(&[0.5, 0.5])) < 1e-15);
    }

    #[test]
    fn product_factorizes() {
        let ra = DenseMatrix::<f64>::from_real(2, &[0.7, 0.2, 0.2, 0.3]);
        let rb = DenseMatrix::<f64>::from_diag(&[0.4, 0.6]);
        let rho = tensor_product(&ra, &rb).unwrap();
        assert!(partial_trace(&rho, &[1]).unwrap().max_abs_diff(&ra) < 1e-15);
        assert!(partial_trace(&rho, &[0]).unwrap().max_abs_diff(&rb) < 1e-15);
    }

    #[test]
    fn trace_everything() {
        let t = partial_trace(&phi_plus(), &[0, 1]).unwrap();
        assert_eq!((t.rows(), t.cols()), (1, 1));
        assert!((t[(0, 0)].re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn traced_must_be_subset() {
        assert!(matches!(partial_trace(&phi_plus(), &[2]), Err(Error::Argument(_))));
        assert!(matches!(partial_trace(&phi_plus(), &[0, 0]), Err(Error::Argument(_))));
    }

    #[test]
    fn empty_mask_transpose_is_identity_map() {
        let rho = phi_plus();
        assert_eq!(partial_transpose(&rho, &[]).unwrap(), rho);
    }

    #[test]
    fn transpose_mask_out_of_range() {
        assert!(matches!(partial_transpose(&phi_plus(), &[3]), Err(Error::Argument(_))));
    }

    #[test]
    fn diagonal_state_unchanged() {
        let d = DenseMatrix::<f64>::from_diag(&[0.1, 0.2, 0.3, 0.4]);
        assert_eq!(partial_transpose(&d, &[0]).unwrap(), d);
    }

    #[test]
    fn scatter_respects_msb_order() {
        // qubits 0 and 2 of three: values 0..4 map to 000,001,100,101
        assert_eq!(scatter_table(&[0, 2], 3), vec![0, 1, 4, 5]);
    }
}
