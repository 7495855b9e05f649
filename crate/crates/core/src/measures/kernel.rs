use num_complex::Complex;

use crate::linalg::{czero, jacobi, scatter_table, DenseMatrix, Real};
use crate::states::Bipartition;

use super::Kernel;

/// Largest partner dimension for which the minor expansion is used.
const CAUCHY_BINET_MAX: usize = 16;

/// Index tables for reshaping a register vector into a `d_small x d_large`
/// matrix across a bipartition, small side first.
pub(crate) struct SplitLayout {
    small: Vec<usize>,
    large: Vec<usize>,
}

impl SplitLayout {
    pub(crate) fn new(split: &Bipartition) -> Self {
        let n = split.num_qubits();
        let a = scatter_table(split.side_a(), n);
        let b = scatter_table(split.side_b(), n);
        if a.len() <= b.len() {
            SplitLayout { small: a, large: b }
        } else {
            SplitLayout { small: b, large: a }
        }
    }

    /// Gram matrix of the reshaped vector on the smaller side: the reduced
    /// operator of the (unnormalized) state.
    fn gram<T: Real>(&self, psi: &[Complex<T>]) -> DenseMatrix<T> {
        let d = self.small.len();
        let mut g = DenseMatrix::zeros(d, d);
        for i in 0..d {
            for j in i..d {
                let v = self.large.iter().fold(czero(), |acc, &t| {
                    acc + psi[self.small[i] | t] * psi[self.small[j] | t].conj()
                });
                g[(i, j)] = v;
                g[(j, i)] = v.conj();
            }
        }
        g
    }

    /// `p * kernel(psi / sqrt(p))` with `p = ||psi||^2`, i.e. the contribution
    /// of one unnormalized ensemble member.
    pub(crate) fn weighted<T: Real>(&self, kernel: Kernel, psi: &[Complex<T>]) -> T {
        let d = self.small.len();
        if d == 1 {
            return T::zero();
        }
        if d == 2 && self.large.len() <= CAUCHY_BINET_MAX {
            // both kernels reduce to 2 sqrt(det G) when one side is a qubit;
            // det G as a sum of squared 2x2 minors has no cancellation near zero
            let (s0, s1) = (self.small[0], self.small[1]);
            let mut det = T::zero();
            for (u, &t) in self.large.iter().enumerate() {
                let (x, y) = (psi[s0 | t], psi[s1 | t]);
                for &t2 in &self.large[u + 1..] {
                    det += (x * psi[s1 | t2] - psi[s0 | t2] * y).norm_sqr();
                }
            }
            return T::lit(2.0) * det.sqrt();
        }
        if d == 2 {
            let mut g00 = T::zero();
            let mut g11 = T::zero();
            let mut g01 = czero::<T>();
            let (s0, s1) = (self.small[0], self.small[1]);
            for &t in &self.large {
                let x = psi[s0 | t];
                let y = psi[s1 | t];
                g00 += x.norm_sqr();
                g11 += y.norm_sqr();
                g01 += x * y.conj();
            }
            let det = (g00 * g11 - g01.norm_sqr()).max(T::zero());
            return T::lit(2.0) * det.sqrt();
        }
        let g = self.gram(psi);
        let p = g.trace().re;
        match kernel {
            Kernel::Concurrence => {
                let purity = g.frobenius_sq();
                ((p * p - purity) * T::lit(2.0)).max(T::zero()).sqrt()
            }
            Kernel::Negativity => {
                let s = jacobi(&g)
                    .eigenvalues
                    .iter()
                    .fold(T::zero(), |acc, &mu| acc + mu.max(T::zero()).sqrt());
                (s * s - p).max(T::zero())
            }
        }
    }
}
