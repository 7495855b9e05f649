#![allow(dead_code)]

use num_complex::Complex;
use qmono::{DenseMatrix, DensityOperator, PureState};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian_vec(rng: &mut ChaCha8Rng, len: usize) -> Vec<Complex<f64>> {
    (0..len)
        .map(|_| Complex::new(StandardNormal.sample(rng), StandardNormal.sample(rng)))
        .collect()
}

pub fn random_pure(n: usize, seed: u64) -> PureState<f64> {
    let mut r = rng(seed);
    PureState::normalized(gaussian_vec(&mut r, 1 << n)).unwrap()
}

/// `G G^dagger / tr` with a `2^n x rank` Gaussian `G`.
pub fn random_density(n: usize, rank: usize, seed: u64) -> DensityOperator<f64> {
    let mut r = rng(seed);
    let dim = 1 << n;
    let g = DenseMatrix::from_vec(dim, rank, gaussian_vec(&mut r, dim * rank));
    let rho = g.matmul(&g.dagger());
    let tr = rho.trace().re;
    let rho = rho.scale(1.0 / tr);
    // exact hermiticity for the validating constructor
    let rho = rho.add(&rho.dagger()).scale(0.5);
    DensityOperator::new(rho).unwrap()
}

/// Random Hermitian matrix with Gaussian entries.
pub fn random_hermitian(dim: usize, seed: u64) -> DenseMatrix<f64> {
    let mut r = rng(seed);
    let g = DenseMatrix::from_vec(dim, dim, gaussian_vec(&mut r, dim * dim));
    g.add(&g.dagger()).scale(0.5)
}
