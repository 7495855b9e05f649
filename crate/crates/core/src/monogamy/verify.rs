use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::Real;
use crate::measures::{
    concurrence_pure, concurrence_two_qubit, negativity_pure, roof_extremize, wclass_one_vs_rest, wclass_pair_value,
    Kernel, Method, RoofConfig, Sense,
};
use crate::states::{make_wclass, Bipartition, PureState, WClassParams};

use super::bounds::{bound_rhs, check_exponent, Quantity, Shape, WeightLaw};
use super::ordering::{check_subset, classify_ordering, OrderingProfile, Regime};
use super::BoundKind;

/// Margins below `-MARGIN_TOL` count as violations.
pub const MARGIN_TOL: f64 = 1e-8;

/// Where the left-hand side `E(A | B_{j_1} ... B_{j_{m-1}})` comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LhsMode {
    /// Pure-state formulas on the full register; needs the subset to cover
    /// every B qubit and falls back to `Chain` otherwise.
    Analytic,
    /// Roof optimization on the reduced state of A and the subset.
    Oracle,
    /// W-class closed form of the one-vs-rest value.
    Chain,
}

impl std::fmt::Display for LhsMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            LhsMode::Analytic => "analytic",
            LhsMode::Oracle => "oracle",
            LhsMode::Chain => "chain",
        })
    }
}

impl FromStr for LhsMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "analytic" => Ok(LhsMode::Analytic),
            "oracle" => Ok(LhsMode::Oracle),
            "chain" => Ok(LhsMode::Chain),
            _ => Err(Error::arg(format!("unknown lhs mode `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HypothesisStatus {
    Satisfied,
    Unsatisfied,
    /// The bound carries no ordering hypothesis.
    NotRequired,
}

impl HypothesisStatus {
    pub fn applies(self) -> bool {
        self != HypothesisStatus::Unsatisfied
    }
}

impl std::fmt::Display for HypothesisStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            HypothesisStatus::Satisfied => "satisfied",
            HypothesisStatus::Unsatisfied => "unsatisfied",
            HypothesisStatus::NotRequired => "not_required",
        })
    }
}

/// Left-hand side value before exponentiation.
#[derive(Clone, Debug, PartialEq)]
pub struct Lhs<T> {
    pub value: T,
    pub method: Method,
    pub converged: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundPoint<T> {
    pub x: T,
    pub rhs: T,
    /// `lhs^x - rhs`.
    pub margin: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundRow<T> {
    pub kind: BoundKind,
    pub status: HypothesisStatus,
    /// Split point used for the weights; `None` for flat bounds and
    /// unsatisfied hypotheses.
    pub t: Option<usize>,
    pub regime: Option<Regime>,
    /// One point per grid value; empty when the hypothesis fails.
    pub points: Vec<BoundPoint<T>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MonogamyReport<T> {
    pub subset: Vec<usize>,
    pub mode: LhsMode,
    pub quantity: Quantity,
    pub x_grid: Vec<T>,
    pub lhs: Lhs<T>,
    /// `lhs.value^x` per grid point.
    pub lhs_powers: Vec<T>,
    pub pair_values: Vec<T>,
    pub profile: OrderingProfile<T>,
    pub bounds: Vec<BoundRow<T>>,
    pub notes: Vec<String>,
}

impl<T: Real> MonogamyReport<T> {
    /// Smallest margin over all applicable bounds and grid points.
    pub fn worst(&self) -> Option<(BoundKind, T, T)> {
        self.bounds
            .iter()
            .flat_map(|row| row.points.iter().map(move |p| (row.kind, p.x, p.margin)))
            .fold(None, |acc, cur| match acc {
                Some((_, _, m)) if m <= cur.2 => acc,
                _ => Some(cur),
            })
    }

    /// `(kind, x, margin)` for every margin below `-tol`.
    pub fn violations(&self, tol: T) -> Vec<(BoundKind, T, T)> {
        self.bounds
            .iter()
            .flat_map(|row| row.points.iter().map(move |p| (row.kind, p.x, p.margin)))
            .filter(|(_, _, m)| *m < -tol)
            .collect()
    }

    pub fn converged(&self) -> bool {
        self.lhs.converged
    }
}

fn common_quantity(kinds: &[BoundKind]) -> Result<Quantity> {
    let first = kinds.first().ok_or_else(|| Error::arg("no bound kinds requested"))?;
    let q = first.quantity();
    if let Some(k) = kinds.iter().find(|k| k.quantity() != q) {
        return Err(Error::arg(format!(
            "bound kinds {first} and {k} have different left-hand sides"
        )));
    }
    Ok(q)
}

fn split_point<T>(kind: BoundKind, profile: &OrderingProfile<T>) -> (HypothesisStatus, Option<usize>) {
    match kind.shape() {
        Shape::Free => (HypothesisStatus::NotRequired, None),
        Shape::Split => match profile.t {
            Some(t) => (HypothesisStatus::Satisfied, Some(t)),
            None => (HypothesisStatus::Unsatisfied, None),
        },
        Shape::AllGe => {
            let t = profile.m() - 2;
            if profile.admits(t) {
                (HypothesisStatus::Satisfied, Some(t))
            } else {
                (HypothesisStatus::Unsatisfied, None)
            }
        }
    }
}

fn pure_value<T: Real>(psi: &PureState<T>, split: &Bipartition, kernel: Kernel) -> Result<T> {
    Ok(match kernel {
        Kernel::Concurrence => concurrence_pure(psi, split)?.value,
        Kernel::Negativity => negativity_pure(psi, split)?.value,
    })
}

/// Evaluates the bounds in `kinds` for one ordered subset over `x_grid`.
///
/// All kinds must share a left-hand-side quantity. In analytic and oracle
/// mode the pair values are the two-qubit concurrences of the reduced pairs;
/// with a single-qubit side A the negativity kernel coincides with the
/// concurrence kernel, so these serve both families. Chain mode uses the
/// W-class closed forms throughout.
pub fn verify_theorem<T: Real>(
    params: &WClassParams<T>,
    subset: &[usize],
    kinds: &[BoundKind],
    x_grid: &[T],
    cfg: &RoofConfig,
    mode: LhsMode,
) -> Result<MonogamyReport<T>> {
    let quantity = common_quantity(kinds)?;
    let kernel = quantity.kernel();
    let n = params.num_qubits();
    check_subset(subset, n - 1)?;
    for &x in x_grid {
        check_exponent(x)?;
    }
    let profile = classify_ordering(params, subset, kernel)?;
    let mut notes = Vec::new();

    let chain_pairs = || -> Result<Vec<T>> {
        subset.iter().map(|&j| wclass_pair_value(params, j, kernel)).collect()
    };
    let chain_lhs = || -> Result<Lhs<T>> {
        Ok(Lhs {
            value: wclass_one_vs_rest(params, subset, kernel)?,
            method: Method::ClosedForm,
            converged: true,
        })
    };

    let (pair_values, lhs) = match mode {
        LhsMode::Chain => (chain_pairs()?, chain_lhs()?),
        LhsMode::Analytic | LhsMode::Oracle => {
            let psi = make_wclass(params);
            let pairs = subset
                .iter()
                .map(|&j| Ok(concurrence_two_qubit(&psi.reduce(&[0, j])?)?.value))
                .collect::<Result<Vec<T>>>()?;
            let lhs = if mode == LhsMode::Analytic {
                if subset.len() == n - 1 {
                    Lhs {
                        value: pure_value(&psi, &Bipartition::first_vs_rest(n)?, kernel)?,
                        method: Method::ClosedForm,
                        converged: true,
                    }
                } else {
                    notes.push(format!(
                        "subset covers {} of {} B qubits; analytic left-hand side replaced by the chain value",
                        subset.len(),
                        n - 1
                    ));
                    chain_lhs()?
                }
            } else {
                let mut keep = vec![0];
                keep.extend_from_slice(subset);
                let rho = psi.reduce(&keep)?;
                let sense = if quantity.is_assisted() { Sense::Max } else { Sense::Min };
                let mv = roof_extremize(&rho, &Bipartition::first_vs_rest(keep.len())?, kernel, sense, cfg)?;
                if !mv.converged {
                    notes.push(format!(
                        "roof optimization hit the {}-sweep budget before converging",
                        cfg.max_iters
                    ));
                }
                Lhs {
                    value: mv.value,
                    method: mv.method,
                    converged: mv.converged,
                }
            };
            (pairs, lhs)
        }
    };

    let lhs_powers: Vec<T> = x_grid.iter().map(|&x| lhs.value.powf(x)).collect();
    let m = subset.len() + 1;
    let mut bounds = Vec::with_capacity(kinds.len());
    for &kind in kinds {
        let (status, t) = split_point(kind, &profile);
        let points = if status.applies() {
            x_grid
                .iter()
                .zip(&lhs_powers)
                .map(|(&x, &l)| {
                    let rhs = bound_rhs(kind, &pair_values, x, t.unwrap_or(0))?;
                    Ok(BoundPoint { x, rhs, margin: l - rhs })
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            Vec::new()
        };
        bounds.push(BoundRow {
            kind,
            status,
            t,
            regime: t.map(|t| Regime::of(t, m)),
            points,
        });
    }

    Ok(MonogamyReport {
        subset: subset.to_vec(),
        mode,
        quantity,
        x_grid: x_grid.to_vec(),
        lhs,
        lhs_powers,
        pair_values,
        profile,
        bounds,
        notes,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct TableRow<T> {
    pub kind: BoundKind,
    pub t: Option<usize>,
    /// Right-hand side per grid point.
    pub values: Vec<T>,
}

/// Right-hand sides of several bounds on a common grid.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundTable<T> {
    pub x_grid: Vec<T>,
    pub rows: Vec<TableRow<T>>,
}

impl<T: Real> BoundTable<T> {
    pub fn row(&self, kind: BoundKind) -> Option<&TableRow<T>> {
        self.rows.iter().find(|r| r.kind == kind)
    }
}

fn law_rank(law: WeightLaw) -> u8 {
    match law {
        WeightLaw::Flat => 0,
        WeightLaw::HalfX => 1,
        WeightLaw::H => 2,
    }
}

/// Evaluates `kinds` on closed-form pair values and checks that a stronger
/// weight law never gives a smaller right-hand side than a weaker one at the
/// same split point.
pub fn compare_bounds<T: Real>(
    params: &WClassParams<T>,
    subset: &[usize],
    kinds: &[BoundKind],
    x_grid: &[T],
) -> Result<BoundTable<T>> {
    check_subset(subset, params.num_qubits() - 1)?;
    for &x in x_grid {
        check_exponent(x)?;
    }
    let mut rows = Vec::with_capacity(kinds.len());
    for &kind in kinds {
        let kernel = kind.kernel();
        let profile = classify_ordering(params, subset, kernel)?;
        let (status, t) = split_point(kind, &profile);
        if !status.applies() {
            return Err(Error::arg(format!(
                "ordering hypothesis of {kind} does not hold for subset {subset:?}"
            )));
        }
        let pairs = subset
            .iter()
            .map(|&j| wclass_pair_value(params, j, kernel))
            .collect::<Result<Vec<T>>>()?;
        let values = x_grid
            .iter()
            .map(|&x| bound_rhs(kind, &pairs, x, t.unwrap_or(0)))
            .collect::<Result<Vec<T>>>()?;
        rows.push(TableRow { kind, t, values });
    }

    let slack = T::lit(1e-12);
    for hi in &rows {
        for lo in &rows {
            let comparable = hi.kind.kernel() == lo.kind.kernel()
                && law_rank(hi.kind.law()) > law_rank(lo.kind.law())
                && (lo.kind.law() == WeightLaw::Flat || hi.t == lo.t);
            if !comparable {
                continue;
            }
            for (k, (&a, &b)) in hi.values.iter().zip(&lo.values).enumerate() {
                if a < b - slack * b.max(T::one()) {
                    return Err(Error::Invariant(format!(
                        "{} ({a}) below {} ({b}) at x = {}",
                        hi.kind, lo.kind, x_grid[k]
                    )));
                }
            }
        }
    }
    Ok(BoundTable {
        x_grid: x_grid.to_vec(),
        rows,
    })
}
