//! Closed forms on generalized W-class states.
//!
//! The reduction of a W-class state onto `A` and a set `S` of the B qubits is
//! `|phi><phi| + (1 - ||phi||^2) |0..0><0..0|` with
//! `phi = a|1,0..0> + sum_{l in S} b_l |0,..1_l..>`, an operator supported on
//! an effective two-qubit space. Every decomposition of it averages to the
//! same concurrence, `2|a| sqrt(sum_{l in S} |b_l|^2)`, so minimum and
//! maximum roofs agree. Side A is a single qubit, where the pure-state
//! concurrence and negativity are both `2 sqrt(l_1 l_2)`; the closed forms
//! are therefore shared by the two kernels. The test suites check all of
//! this against the roof optimizer rather than taking it on trust.

use crate::error::{Error, Result};
use crate::linalg::Real;
use crate::states::WClassParams;

use super::Kernel;

/// `2 |a| |b_i|`: the pairwise value on `rho_{A B_i}`, `1 <= i <= N-1`.
pub fn wclass_pair_value<T: Real>(params: &WClassParams<T>, i: usize, _kernel: Kernel) -> Result<T> {
    let bi = params.b(i)?;
    Ok(T::lit(2.0) * params.a().norm() * bi.norm())
}

/// `2 |a| sqrt(sum_{l in S} |b_l|^2)`: the one-vs-rest value `A | B_S` on the
/// reduction of the state to `A` and the qubits in `subset`.
pub fn wclass_one_vs_rest<T: Real>(params: &WClassParams<T>, subset: &[usize], _kernel: Kernel) -> Result<T> {
    if subset.is_empty() {
        return Err(Error::arg("one-vs-rest needs a non-empty subset"));
    }
    let mut seen = vec![false; params.num_qubits()];
    let mut sum = T::zero();
    for &l in subset {
        let bl = params.b(l)?;
        if std::mem::replace(&mut seen[l], true) {
            return Err(Error::arg(format!("pair index {l} listed twice")));
        }
        sum += bl.norm_sqr();
    }
    Ok(T::lit(2.0) * params.a().norm() * sum.sqrt())
}
