//! Entanglement quantifiers: concurrence, negativity and their convex-roof
//! extensions (minimum and maximum average over pure-state decompositions).
//!
//! Negativity uses the doubled convention `||rho^{T_A}|| - 1` throughout, so
//! a two-qubit Bell state has negativity 1. [`to_halved_negativity`] converts
//! to the `(||rho^{T_A}|| - 1)/2` convention.

mod kernel;
mod mixed;
mod pure;
mod roof;
mod wclass;

use crate::linalg::{DenseMatrix, Real};
use crate::states::{Bipartition, PureState};

pub use mixed::{concurrence_two_qubit, negativity, spin_flip_lambdas};
pub use pure::{concurrence_pure, negativity_pure, to_halved_negativity};
pub use roof::{concurrence_assist, concurrence_roof, cren, crenoa, roof_extremize, RoofConfig};
pub use wclass::{wclass_one_vs_rest, wclass_pair_value};

/// Pure-state function whose convex roof is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kernel {
    Concurrence,
    Negativity,
}

/// Direction of the roof optimization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sense {
    /// Entanglement measure proper (C, CREN).
    Min,
    /// Assisted quantity (C_a, CRENOA).
    Max,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    RoofOpt,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::ClosedForm => "closed_form",
            Method::RoofOpt => "roof_opt",
        })
    }
}

/// Pure-state decomposition `{p_i, |psi_i>}` of a density operator.
#[derive(Clone, Debug)]
pub struct DecompositionEnsemble<T> {
    pub weights: Vec<T>,
    pub members: Vec<PureState<T>>,
}

impl<T: Real> DecompositionEnsemble<T> {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// `sum_i p_i |psi_i><psi_i|`.
    pub fn reconstruct(&self) -> DenseMatrix<T> {
        let dim = self.members[0].dim();
        self.weights
            .iter()
            .zip(&self.members)
            .fold(DenseMatrix::zeros(dim, dim), |acc, (&w, m)| {
                acc.add(&DenseMatrix::outer(m.amplitudes()).scale(w))
            })
    }

    /// `sum_i p_i kernel(psi_i)` evaluated with the pure-state formulas.
    pub fn average(&self, kernel: Kernel, split: &Bipartition) -> crate::Result<T> {
        let mut acc = T::zero();
        for (&w, m) in self.weights.iter().zip(&self.members) {
            let v = match kernel {
                Kernel::Concurrence => concurrence_pure(m, split)?.value,
                Kernel::Negativity => negativity_pure(m, split)?.value,
            };
            acc += w * v;
        }
        Ok(acc)
    }
}

/// Result of a measure evaluation.
#[derive(Clone, Debug)]
pub struct MeasureValue<T> {
    pub value: T,
    pub method: Method,
    /// Realizing decomposition for roof optimizations.
    pub ensemble: Option<DecompositionEnsemble<T>>,
    /// False when the roof optimizer hit its iteration budget on the winning restart.
    pub converged: bool,
}

impl<T: Real> MeasureValue<T> {
    pub(crate) fn closed_form(value: T) -> Self {
        MeasureValue {
            value: value.max(T::zero()),
            method: Method::ClosedForm,
            ensemble: None,
            converged: true,
        }
    }
}
