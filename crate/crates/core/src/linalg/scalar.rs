use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use std::fmt::{Debug, Display, LowerExp};

/// Real scalar backing every amplitude and matrix entry: `f32` or `f64`.
pub trait Real:
    'static
    + Float
    + FloatConst
    + FromPrimitive
    + NumAssign
    + Default
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
{
    /// Tolerances sized to this type's precision.
    fn tolerances() -> Tolerances;

    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Converts an `f64` literal. Never fails for f32/f64.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).unwrap()
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    fn tolerances() -> Tolerances {
        Tolerances::default()
    }

    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }
}

impl Real for f32 {
    fn tolerances() -> Tolerances {
        Tolerances::single_precision()
    }

    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }
}

/// Numerical contract thresholds shared by the linear algebra and state layers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Allowed `max |M - M^dagger|` before an input is rejected as non-Hermitian.
    pub herm_tol: f64,
    /// Post-condition on eigen-reconstruction and eigenvector orthonormality.
    pub eig_tol: f64,
    /// Most negative eigenvalue still accepted (and clamped to zero) as PSD.
    pub psd_clamp_tol: f64,
    /// Allowed deviation of a state norm from one.
    pub norm_tol: f64,
    /// Allowed deviation of a density operator trace from one.
    pub trace_tol: f64,
    /// Eigenvalues at or below this count as zero for rank decisions.
    pub rank_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            herm_tol: 1e-9,
            eig_tol: 1e-10,
            psd_clamp_tol: 1e-8,
            norm_tol: 1e-10,
            trace_tol: 1e-10,
            rank_tol: 1e-10,
        }
    }
}

impl Tolerances {
    pub fn single_precision() -> Self {
        Tolerances {
            herm_tol: 1e-5,
            eig_tol: 1e-4,
            psd_clamp_tol: 1e-5,
            norm_tol: 1e-5,
            trace_tol: 1e-5,
            rank_tol: 1e-6,
        }
    }
}

#[inline]
pub(crate) fn c<T: Real>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

#[inline]
pub(crate) fn czero<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::zero())
}
