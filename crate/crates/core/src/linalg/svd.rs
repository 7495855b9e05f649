use super::matrix::DenseMatrix;
use super::scalar::{czero, Real};

const MAX_SWEEPS: usize = 100;

/// Singular values (descending) by one-sided Jacobi: columns are rotated
/// pairwise until mutually orthogonal, then their norms are the singular
/// values. Small singular values come out with absolute accuracy near
/// `eps * sigma_max`, unlike square roots of Gram eigenvalues.
pub fn singular_values<T: Real>(m: &DenseMatrix<T>) -> Vec<T> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let eps = T::epsilon();
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..cols {
            for q in p + 1..cols {
                let mut alpha = T::zero();
                let mut beta = T::zero();
                let mut gamma = czero::<T>();
                for k in 0..rows {
                    alpha += a[(k, p)].norm_sqr();
                    beta += a[(k, q)].norm_sqr();
                    gamma += a[(k, p)].conj() * a[(k, q)];
                }
                let ag = gamma.norm();
                if ag <= eps * (alpha * beta).sqrt() || ag == T::zero() {
                    continue;
                }
                rotated = true;
                let theta = (beta - alpha) / (ag + ag);
                let t = if theta == T::zero() {
                    T::one()
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt())
                };
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                let ec = (gamma / ag).conj();
                for k in 0..rows {
                    let x = a[(k, p)];
                    let y = a[(k, q)];
                    a[(k, p)] = x * c - y * ec * s;
                    a[(k, q)] = x * s + y * ec * c;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv: Vec<T> = (0..cols)
        .map(|j| (0..rows).fold(T::zero(), |acc, k| acc + a[(k, j)].norm_sqr()).sqrt())
        .collect();
    sv.sort_by(|x, y| y.partial_cmp(x).unwrap());
    sv
}
