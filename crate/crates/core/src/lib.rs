//! Entanglement measures for qubit registers and numerical checks of weighted
//! monogamy inequalities on generalized W-class states.
//!
//! Everything numeric is generic over [`Real`] (`f32` or `f64`); the aliases
//! below fix the scalar to `f64`, which is what the tolerances are tuned for.

pub mod error;
pub mod linalg;
pub mod measures;
pub mod monogamy;
pub mod states;

pub use error::{Error, Result};
pub use linalg::{DenseMatrix, HermitianEig, Real, Tolerances};
pub use measures::{DecompositionEnsemble, Kernel, MeasureValue, Method, RoofConfig, Sense};
pub use monogamy::{BoundKind, LhsMode, MonogamyReport, OrderingProfile};
pub use states::{Bipartition, DensityOperator, PureState, WClassParams};

pub type ComplexScalar = num_complex::Complex<f64>;
pub type Matrix = DenseMatrix<f64>;
pub type State = PureState<f64>;
pub type Density = DensityOperator<f64>;
pub type WClass = WClassParams<f64>;
