use crate::error::{Error, Result};
use crate::linalg::Real;
use crate::measures::Kernel;

/// How the pairwise terms of a lower bound are weighted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightLaw {
    /// Every term has weight 1.
    Flat,
    /// Powers of `x/2`.
    HalfX,
    /// Powers of `h = 2^{x/2} - 1`.
    H,
}

/// Which ordering hypothesis a bound needs before it applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    /// No hypothesis; weights do not depend on `t`.
    Free,
    /// Pairs `1..=t` dominate their remainder, pairs `t+1..=m-2` do not.
    Split,
    /// Every pair dominates its remainder, i.e. `t = m - 2`.
    AllGe,
}

/// Quantity on the left-hand side of a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantity {
    Concurrence,
    ConcurrenceOfAssistance,
    Cren,
    Crenoa,
}

impl Quantity {
    pub fn kernel(self) -> Kernel {
        match self {
            Quantity::Concurrence | Quantity::ConcurrenceOfAssistance => Kernel::Concurrence,
            Quantity::Cren | Quantity::Crenoa => Kernel::Negativity,
        }
    }

    pub fn is_assisted(self) -> bool {
        matches!(self, Quantity::ConcurrenceOfAssistance | Quantity::Crenoa)
    }
}

/// Lower-bound families for `E^x(A | B_{j_1} ... B_{j_{m-1}})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// Flat sum of `C_a^x` over pairs.
    FlatC,
    /// `x/2`-weighted bound on `C_a^x`.
    XhalfC,
    /// `h`-weighted bound on `C_a^x` under a split ordering profile.
    HCT1,
    /// `h`-weighted bound on `C_a^x` when every pair dominates.
    HCT2,
    /// `x/2`-weighted bound on `N_a^x`.
    XhalfN,
    /// `h`-weighted bound on `N_a^x` under a split ordering profile.
    HNT3,
    /// `h`-weighted bound on `N_a^x` when every pair dominates.
    HNT4,
    /// `x/2`-weighted bound on the concurrence `C^x`.
    XhalfConc,
    /// `h`-weighted bound on the concurrence `C^x`.
    HConc,
    /// `x/2`-weighted bound on `N_c^x`.
    XhalfNc,
    /// `h`-weighted bound on `N_c^x`.
    HNc,
}

impl BoundKind {
    pub const ALL: [BoundKind; 11] = [
        BoundKind::FlatC,
        BoundKind::XhalfC,
        BoundKind::HCT1,
        BoundKind::HCT2,
        BoundKind::XhalfN,
        BoundKind::HNT3,
        BoundKind::HNT4,
        BoundKind::XhalfConc,
        BoundKind::HConc,
        BoundKind::XhalfNc,
        BoundKind::HNc,
    ];

    /// Bounds on assisted concurrence.
    pub const CONCURRENCE_FAMILY: [BoundKind; 4] =
        [BoundKind::FlatC, BoundKind::XhalfC, BoundKind::HCT1, BoundKind::HCT2];

    /// Bounds on assisted negativity.
    pub const NEGATIVITY_FAMILY: [BoundKind; 3] = [BoundKind::XhalfN, BoundKind::HNT3, BoundKind::HNT4];

    pub fn tag(self) -> &'static str {
        match self {
            BoundKind::FlatC => "FLAT_C",
            BoundKind::XhalfC => "XHALF_C",
            BoundKind::HCT1 => "H_C_T1",
            BoundKind::HCT2 => "H_C_T2",
            BoundKind::XhalfN => "XHALF_N",
            BoundKind::HNT3 => "H_N_T3",
            BoundKind::HNT4 => "H_N_T4",
            BoundKind::XhalfConc => "XHALF_CONC",
            BoundKind::HConc => "H_CONC",
            BoundKind::XhalfNc => "XHALF_NC",
            BoundKind::HNc => "H_NC",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.tag() == tag)
    }

    pub fn law(self) -> WeightLaw {
        match self {
            BoundKind::FlatC => WeightLaw::Flat,
            BoundKind::XhalfC | BoundKind::XhalfN | BoundKind::XhalfConc | BoundKind::XhalfNc => WeightLaw::HalfX,
            _ => WeightLaw::H,
        }
    }

    pub fn shape(self) -> Shape {
        match self {
            BoundKind::FlatC => Shape::Free,
            BoundKind::HCT2 | BoundKind::HNT4 => Shape::AllGe,
            _ => Shape::Split,
        }
    }

    pub fn quantity(self) -> Quantity {
        match self {
            BoundKind::FlatC | BoundKind::XhalfC | BoundKind::HCT1 | BoundKind::HCT2 => {
                Quantity::ConcurrenceOfAssistance
            }
            BoundKind::XhalfN | BoundKind::HNT3 | BoundKind::HNT4 => Quantity::Crenoa,
            BoundKind::XhalfConc | BoundKind::HConc => Quantity::Concurrence,
            BoundKind::XhalfNc | BoundKind::HNc => Quantity::Cren,
        }
    }

    pub fn kernel(self) -> Kernel {
        self.quantity().kernel()
    }
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

pub(crate) fn check_exponent<T: Real>(x: T) -> Result<()> {
    if !(x >= T::lit(2.0)) || !x.is_finite() {
        return Err(Error::Domain(format!("exponent x = {x} must be a finite value >= 2")));
    }
    Ok(())
}

/// `h = 2^{x/2} - 1`, defined for `x >= 2`.
pub fn h_coeff<T: Real>(x: T) -> Result<T> {
    check_exponent(x)?;
    Ok(T::lit(2.0).powf(x / T::lit(2.0)) - T::one())
}

/// Base `q` of the weight law at exponent `x`.
pub fn law_base<T: Real>(law: WeightLaw, x: T) -> Result<T> {
    check_exponent(x)?;
    match law {
        WeightLaw::Flat => Ok(T::one()),
        WeightLaw::HalfX => Ok(x / T::lit(2.0)),
        WeightLaw::H => h_coeff(x),
    }
}

/// Weights for the `m - 1` pair terms, in subset order.
///
/// With `q` the law's base: pairs `1..=t` get `1, q, ..., q^{t-1}`, pairs
/// `t+1..=m-2` get `q^{t+1}` and the last pair gets `q^t`. `t = 0` yields
/// `(q, ..., q, 1)`; `t = m - 2` yields `(1, q, ..., q^{m-2})`.
pub fn weight_vector<T: Real>(kind: BoundKind, m: usize, t: usize, x: T) -> Result<Vec<T>> {
    if m < 3 {
        return Err(Error::arg(format!("need m >= 3 qubits, got {m}")));
    }
    if t > m - 2 {
        return Err(Error::arg(format!("t = {t} out of range 0..={}", m - 2)));
    }
    if kind.shape() == Shape::AllGe && t != m - 2 {
        return Err(Error::arg(format!(
            "{kind} applies only to the all-GE profile t = {}, got t = {t}",
            m - 2
        )));
    }
    let q = law_base(kind.law(), x)?;
    let pairs = m - 1;
    let weights = (0..pairs)
        .map(|k| {
            if kind.shape() == Shape::Free {
                T::one()
            } else if k < t {
                q.powi(k as i32)
            } else if k + 1 < pairs {
                q.powi(t as i32 + 1)
            } else {
                q.powi(t as i32)
            }
        })
        .collect();
    Ok(weights)
}

/// `sum_k w_k * pair_values[k]^x` with the weights of [`weight_vector`].
pub fn bound_rhs<T: Real>(kind: BoundKind, pair_values: &[T], x: T, t: usize) -> Result<T> {
    if let Some(v) = pair_values.iter().find(|v| !(**v >= T::zero())) {
        return Err(Error::arg(format!("pair values must be non-negative, got {v}")));
    }
    let w = weight_vector(kind, pair_values.len() + 1, t, x)?;
    Ok(w
        .iter()
        .zip(pair_values)
        .fold(T::zero(), |acc, (&wk, &v)| acc + wk * v.powf(x)))
}
