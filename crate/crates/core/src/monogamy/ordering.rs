use crate::error::{Error, Result};
use crate::linalg::Real;
use crate::measures::{wclass_one_vs_rest, wclass_pair_value, Kernel};
use crate::states::WClassParams;

/// Absolute gap below which a pair value and a remainder value count as equal.
pub const TIE_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// Pair value strictly above the remainder value.
    Ge,
    /// Pair value strictly below the remainder value.
    Le,
    /// Equal within [`TIE_TOL`]; satisfies both directions.
    Tie,
}

impl Relation {
    pub fn is_ge(self) -> bool {
        self != Relation::Le
    }

    pub fn is_le(self) -> bool {
        self != Relation::Ge
    }
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Relation::Ge => "GE",
            Relation::Le => "LE",
            Relation::Tie => "TIE",
        })
    }
}

/// Comparison of `E(A|B_{j_i})` with `E(A|B_{j_{i+1}} ... B_{j_{m-1}})`.
#[derive(Clone, Debug, PartialEq)]
pub struct Comparison<T> {
    /// Pair index `j_i`.
    pub pair: usize,
    pub pair_value: T,
    pub rest_value: T,
    pub relation: Relation,
}

/// Shape of an ordering profile with split point `t` among `m - 2` comparisons.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `t = 0`: every pair is dominated by its remainder.
    AllLe,
    /// `1 <= t <= m - 3`.
    Mixed,
    /// `t = m - 2`: every pair dominates its remainder.
    AllGe,
}

impl Regime {
    pub fn of(t: usize, m: usize) -> Self {
        if t + 2 >= m {
            Regime::AllGe
        } else if t == 0 {
            Regime::AllLe
        } else {
            Regime::Mixed
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Regime::AllLe => "all-le",
            Regime::Mixed => "mixed",
            Regime::AllGe => "all-ge",
        })
    }
}

/// Ordering hypotheses satisfied by one subset `j_1 .. j_{m-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrderingProfile<T> {
    pub subset: Vec<usize>,
    /// One entry per `i = 1 ..= m - 2`.
    pub comparisons: Vec<Comparison<T>>,
    /// Smallest admissible split point, `None` when no split point fits.
    pub t: Option<usize>,
}

impl<T> OrderingProfile<T> {
    /// Number of parties including A.
    pub fn m(&self) -> usize {
        self.subset.len() + 1
    }

    pub fn is_valid(&self) -> bool {
        self.t.is_some()
    }

    /// Whether comparisons `1..=t` are GE and `t+1..=m-2` are LE.
    pub fn admits(&self, t: usize) -> bool {
        t <= self.comparisons.len()
            && self.comparisons[..t].iter().all(|c| c.relation.is_ge())
            && self.comparisons[t..].iter().all(|c| c.relation.is_le())
    }

    /// All admissible split points in increasing order.
    pub fn admitted(&self) -> Vec<usize> {
        (0..=self.comparisons.len()).filter(|&t| self.admits(t)).collect()
    }

    pub fn regime(&self) -> Option<Regime> {
        self.t.map(|t| Regime::of(t, self.m()))
    }
}

pub(crate) fn check_subset(subset: &[usize], n_b: usize) -> Result<()> {
    if subset.len() < 2 {
        return Err(Error::arg(format!(
            "subset needs at least two pair indices (m >= 3), got {}",
            subset.len()
        )));
    }
    for (k, &j) in subset.iter().enumerate() {
        if j == 0 || j > n_b {
            return Err(Error::arg(format!("pair index {j} out of range 1..={n_b}")));
        }
        if subset[..k].contains(&j) {
            return Err(Error::arg(format!("pair index {j} repeated in subset")));
        }
    }
    Ok(())
}

/// Classifies which split point `t` the subset satisfies, using the W-class
/// closed forms for pair and remainder values.
pub fn classify_ordering<T: Real>(
    params: &WClassParams<T>,
    subset: &[usize],
    kernel: Kernel,
) -> Result<OrderingProfile<T>> {
    check_subset(subset, params.num_qubits() - 1)?;
    let tie = T::lit(TIE_TOL);
    let mut comparisons = Vec::with_capacity(subset.len() - 1);
    for i in 0..subset.len() - 1 {
        let pair_value = wclass_pair_value(params, subset[i], kernel)?;
        let rest_value = wclass_one_vs_rest(params, &subset[i + 1..], kernel)?;
        let relation = if (pair_value - rest_value).abs() <= tie {
            Relation::Tie
        } else if pair_value > rest_value {
            Relation::Ge
        } else {
            Relation::Le
        };
        comparisons.push(Comparison {
            pair: subset[i],
            pair_value,
            rest_value,
            relation,
        });
    }
    let mut profile = OrderingProfile {
        subset: subset.to_vec(),
        comparisons,
        t: None,
    };
    profile.t = (0..=profile.comparisons.len()).find(|&t| profile.admits(t));
    Ok(profile)
}

/// Every ordered selection of at least two distinct indices from `1..=n_b`,
/// shorter selections first, lexicographic within a length.
pub fn ordered_subsets(n_b: usize) -> Vec<Vec<usize>> {
    fn extend(n_b: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for j in 1..=n_b {
            if !cur.contains(&j) {
                cur.push(j);
                extend(n_b, len, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    for len in 2..=n_b {
        extend(n_b, len, &mut Vec::with_capacity(len), &mut out);
    }
    out
}
