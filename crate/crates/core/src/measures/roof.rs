//! Convex-roof optimization over pure-state decompositions.
//!
//! Every size-K decomposition of a rank-r operator `rho = sum_k l_k |e_k><e_k|`
//! has unnormalized members `psi_i = sum_k U_ik sqrt(l_k) |e_k>` for some K×r
//! isometry U. A restart draws a random isometry and then improves the
//! ensemble with Givens-type rotations acting on pairs of members: rotating
//! two rows of U keeps it an isometry, and on the members themselves it is
//! the same 2×2 unitary mix, so the decomposition stays valid throughout.

use num_complex::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{c, czero, Real};
use crate::states::{Bipartition, DensityOperator, PureState};

use super::kernel::SplitLayout;
use super::{concurrence_pure, negativity_pure, DecompositionEnsemble, Kernel, MeasureValue, Method, Sense};

/// Budget and stopping rules for [`roof_extremize`].
#[derive(Clone, Debug, PartialEq)]
pub struct RoofConfig {
    /// Independent random starts; the best result is kept.
    pub restarts: usize,
    /// Maximum number of rotation sweeps per restart.
    pub max_iters: usize,
    /// Rotation angle below which a restart counts as converged.
    pub step_tol: f64,
    /// A sweep gaining less than this shrinks the rotation angle.
    pub value_tol: f64,
    /// Number of ensemble members; `None` means `max(4, rank)`.
    pub ensemble_size: Option<usize>,
    pub rng_seed: u64,
}

impl Default for RoofConfig {
    fn default() -> Self {
        RoofConfig {
            restarts: 200,
            max_iters: 2000,
            step_tol: 1e-8,
            value_tol: 1e-9,
            ensemble_size: None,
            rng_seed: 0,
        }
    }
}

const INITIAL_STEP: f64 = 0.4;

/// Extremal average of `kernel` over decompositions of `rho`.
///
/// Restart `k` draws from a ChaCha stream `k` of `cfg.rng_seed`, so the result
/// does not depend on how restarts are scheduled across threads. Ties between
/// restarts go to the lowest index.
pub fn roof_extremize<T: Real>(
    rho: &DensityOperator<T>,
    split: &Bipartition,
    kernel: Kernel,
    sense: Sense,
    cfg: &RoofConfig,
) -> Result<MeasureValue<T>> {
    split.check_register(rho.num_qubits())?;
    if cfg.restarts == 0 {
        return Err(Error::arg("roof optimization needs at least one restart"));
    }
    let rank_tol = T::lit(T::tolerances().rank_tol);
    let eig = rho.eig();
    let support: Vec<(T, Vec<Complex<T>>)> = (0..eig.dim())
        .rev()
        .filter(|&k| eig.eigenvalues[k] > rank_tol)
        .map(|k| (eig.eigenvalues[k], eig.eigenvector(k)))
        .collect();
    let rank = support.len();
    if rank == 0 {
        return Err(Error::arg("operator has no support above the rank tolerance"));
    }

    if rank == 1 {
        let psi = PureState::normalized(support[0].1.clone())?;
        let value = match kernel {
            Kernel::Concurrence => concurrence_pure(&psi, split)?.value,
            Kernel::Negativity => negativity_pure(&psi, split)?.value,
        };
        return Ok(MeasureValue {
            value,
            method: Method::RoofOpt,
            ensemble: Some(DecompositionEnsemble {
                weights: vec![T::one()],
                members: vec![psi],
            }),
            converged: true,
        });
    }

    let k_size = cfg.ensemble_size.unwrap_or(rank.max(4));
    if k_size < rank {
        return Err(Error::arg(format!(
            "ensemble size {k_size} is smaller than the rank {rank}"
        )));
    }
    let basis: Vec<Vec<Complex<T>>> = support
        .iter()
        .map(|(l, v)| {
            let s = l.sqrt();
            v.iter().map(|&z| z * s).collect()
        })
        .collect();
    let layout = SplitLayout::new(split);

    let runs: Vec<Restart<T>> = (0..cfg.restarts)
        .into_par_iter()
        .map(|k| run_restart(&basis, k_size, &layout, kernel, sense, cfg, k as u64))
        .collect();
    let better = |a: T, b: T| match sense {
        Sense::Min => a < b,
        Sense::Max => a > b,
    };
    let best = runs
        .into_iter()
        .reduce(|best, r| if better(r.value, best.value) { r } else { best })
        .expect("at least one restart");

    let ensemble = to_ensemble(best.members)?;
    let total = ensemble.weights.iter().fold(T::zero(), |a, &w| a + w);
    let value = best.value / total;
    let mut ensemble = ensemble;
    for w in &mut ensemble.weights {
        *w /= total;
    }
    Ok(MeasureValue {
        value: value.max(T::zero()),
        method: Method::RoofOpt,
        ensemble: Some(ensemble),
        converged: best.converged,
    })
}

struct Restart<T> {
    value: T,
    members: Vec<Vec<Complex<T>>>,
    converged: bool,
}

fn run_restart<T: Real>(
    basis: &[Vec<Complex<T>>],
    k_size: usize,
    layout: &SplitLayout,
    kernel: Kernel,
    sense: Sense,
    cfg: &RoofConfig,
    stream: u64,
) -> Restart<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    rng.set_stream(stream);
    let u = random_isometry::<T>(k_size, basis.len(), &mut rng);
    let dim = basis[0].len();
    let mut members: Vec<Vec<Complex<T>>> = (0..k_size)
        .map(|i| {
            let mut v = vec![czero(); dim];
            for (k, b) in basis.iter().enumerate() {
                let uik = u[i][k];
                for (dst, &x) in v.iter_mut().zip(b) {
                    *dst += uik * x;
                }
            }
            v
        })
        .collect();

    let sign = match sense {
        Sense::Min => -T::one(),
        Sense::Max => T::one(),
    };
    let mut vals: Vec<T> = members.iter().map(|m| layout.weighted(kernel, m)).collect();
    let phases = [c(T::one(), T::zero()), c(T::zero(), T::one()), c(-T::one(), T::zero()), c(T::zero(), -T::one())];
    let step_tol = T::lit(cfg.step_tol);
    let value_tol = T::lit(cfg.value_tol);
    let mut step = T::lit(INITIAL_STEP);
    let mut converged = false;
    let mut trial_i = vec![czero(); dim];
    let mut trial_j = vec![czero(); dim];
    let mut best_i = vec![czero(); dim];
    let mut best_j = vec![czero(); dim];

    for _ in 0..cfg.max_iters {
        let (s, co) = step.sin_cos();
        let mut gain = T::zero();
        for i in 0..k_size {
            for j in i + 1..k_size {
                let current = vals[i] + vals[j];
                let mut best: Option<(T, T, T)> = None;
                for &w in &phases {
                    let ws = w * s;
                    let wcs = w.conj() * s;
                    for d in 0..dim {
                        let x = members[i][d];
                        let y = members[j][d];
                        trial_i[d] = x * co + y * ws;
                        trial_j[d] = y * co - x * wcs;
                    }
                    let vi = layout.weighted(kernel, &trial_i);
                    let vj = layout.weighted(kernel, &trial_j);
                    let improvement = sign * (vi + vj - current);
                    if improvement > T::zero() && best.is_none_or(|(g, _, _)| improvement > g) {
                        best = Some((improvement, vi, vj));
                        best_i.copy_from_slice(&trial_i);
                        best_j.copy_from_slice(&trial_j);
                    }
                }
                if let Some((g, vi, vj)) = best {
                    members[i].copy_from_slice(&best_i);
                    members[j].copy_from_slice(&best_j);
                    vals[i] = vi;
                    vals[j] = vj;
                    gain += g;
                }
            }
        }
        if gain < value_tol {
            step *= T::lit(0.5);
            if step < step_tol {
                converged = true;
                break;
            }
        }
    }

    let value = vals.iter().fold(T::zero(), |a, &v| a + v);
    Restart {
        value,
        members,
        converged,
    }
}

/// Haar-distributed K×r isometry (orthonormal columns) from Gram-Schmidt on
/// complex Gaussian columns; returned row-major.
fn random_isometry<T: Real>(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<Complex<T>>> {
    let mut columns: Vec<Vec<Complex<T>>> = Vec::with_capacity(cols);
    while columns.len() < cols {
        let mut v: Vec<Complex<T>> = (0..rows)
            .map(|_| c(T::standard_normal(rng), T::standard_normal(rng)))
            .collect();
        for q in &columns {
            let proj = q.iter().zip(&v).fold(czero::<T>(), |acc, (&a, &b)| acc + a.conj() * b);
            for (x, &qa) in v.iter_mut().zip(q) {
                *x -= proj * qa;
            }
        }
        let norm = v.iter().fold(T::zero(), |a, z| a + z.norm_sqr()).sqrt();
        if norm > T::lit(1e-6) {
            columns.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    (0..rows).map(|i| columns.iter().map(|col| col[i]).collect()).collect()
}

fn to_ensemble<T: Real>(members: Vec<Vec<Complex<T>>>) -> Result<DecompositionEnsemble<T>> {
    let floor = T::epsilon() * T::epsilon();
    let mut weights = Vec::new();
    let mut states = Vec::new();
    for m in members {
        let p = m.iter().fold(T::zero(), |a, z| a + z.norm_sqr());
        if p > floor {
            weights.push(p);
            states.push(PureState::normalized(m)?);
        }
    }
    Ok(DecompositionEnsemble {
        weights,
        members: states,
    })
}

/// Concurrence of a mixed state as the minimum-average roof.
pub fn concurrence_roof<T: Real>(
    rho: &DensityOperator<T>,
    split: &Bipartition,
    cfg: &RoofConfig,
) -> Result<MeasureValue<T>> {
    roof_extremize(rho, split, Kernel::Concurrence, Sense::Min, cfg)
}

/// Concurrence of assistance: maximum average concurrence over decompositions.
pub fn concurrence_assist<T: Real>(
    rho: &DensityOperator<T>,
    split: &Bipartition,
    cfg: &RoofConfig,
) -> Result<MeasureValue<T>> {
    roof_extremize(rho, split, Kernel::Concurrence, Sense::Max, cfg)
}

/// Convex-roof extended negativity.
pub fn cren<T: Real>(rho: &DensityOperator<T>, split: &Bipartition, cfg: &RoofConfig) -> Result<MeasureValue<T>> {
    roof_extremize(rho, split, Kernel::Negativity, Sense::Min, cfg)
}

/// Convex-roof extended negativity of assistance.
pub fn crenoa<T: Real>(rho: &DensityOperator<T>, split: &Bipartition, cfg: &RoofConfig) -> Result<MeasureValue<T>> {
    roof_extremize(rho, split, Kernel::Negativity, Sense::Max, cfg)
}
