//! Randomized sweep of the weighted monogamy bounds over sampled W-class
//! instances and every ordered subset of their B qubits.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use qmono::monogamy::{ordered_subsets, verify_theorem, HypothesisStatus, MonogamyReport};
use qmono::states::sample_wclass;
use qmono::{BoundKind, LhsMode, WClassParams};

use crate::config::Family;
use crate::csv::fmt_num;
use crate::{CliError, RunConfig};

/// Kind groups sharing a left-hand side, for one family selection.
pub fn kind_groups(family: Family) -> Vec<Vec<BoundKind>> {
    let conc = vec![
        BoundKind::CONCURRENCE_FAMILY.to_vec(),
        vec![BoundKind::XhalfConc, BoundKind::HConc],
    ];
    let neg = vec![
        BoundKind::NEGATIVITY_FAMILY.to_vec(),
        vec![BoundKind::XhalfNc, BoundKind::HNc],
    ];
    match family {
        Family::Concurrence => conc,
        Family::Negativity => neg,
        Family::Both => conc.into_iter().chain(neg).collect(),
    }
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub index: usize,
    pub params: WClassParams<f64>,
}

impl Instance {
    pub fn n(&self) -> usize {
        self.params.num_qubits()
    }
}

/// Instance `i` has `qubits[i % len]` qubits; sampled coefficients draw their
/// seeds in order from a ChaCha stream keyed by `cfg.seed`.
pub fn instances(cfg: &RunConfig) -> Result<Vec<Instance>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.samples)
        .map(|index| {
            let n = cfg.qubits[index % cfg.qubits.len()];
            let seed = rng.next_u64();
            let params = if cfg.uniform_w {
                WClassParams::uniform(n)?
            } else {
                sample_wclass(n, seed)?
            };
            Ok(Instance { index, params })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct KindStats {
    pub mode: LhsMode,
    pub kind: BoundKind,
    /// Instance-subset pairs evaluated.
    pub subsets: usize,
    /// Instance-subset pairs whose ordering hypothesis holds.
    pub satisfied: usize,
    /// Grid points with a margin.
    pub points: usize,
    /// Grid points with margin `>= -margin_tol`.
    pub within_tol: usize,
    pub min_margin: Option<f64>,
}

#[derive(Clone, Debug)]
pub struct Violation {
    pub sample: usize,
    pub mode: LhsMode,
    pub params: WClassParams<f64>,
    pub subset: Vec<usize>,
    pub kind: BoundKind,
    pub x: f64,
    pub margin: f64,
}

/// Worst margin of one bound kind on one instance, over subsets and exponents.
#[derive(Clone, Debug, PartialEq)]
pub struct InstanceRow {
    pub sample: usize,
    pub n: usize,
    pub mode: LhsMode,
    pub kind: BoundKind,
    pub subsets: usize,
    pub satisfied: usize,
    pub min_margin: Option<f64>,
    pub worst_subset: Option<Vec<usize>>,
    pub worst_x: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DetailRow {
    pub sample: usize,
    pub n: usize,
    pub mode: LhsMode,
    pub subset: Vec<usize>,
    pub kind: BoundKind,
    pub status: HypothesisStatus,
    pub t: Option<usize>,
    pub x: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
}

#[derive(Clone, Debug)]
pub struct VerifySummary {
    pub instances: Vec<Instance>,
    pub x_grid: Vec<f64>,
    pub stats: Vec<KindStats>,
    pub rows: Vec<InstanceRow>,
    pub details: Vec<DetailRow>,
    pub violations: Vec<Violation>,
    /// Roof optimizations that stopped on the sweep budget.
    pub unconverged: usize,
    pub margin_tol: f64,
    pub provenance: Vec<String>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn stat(&self, mode: LhsMode, kind: BoundKind) -> Option<&KindStats> {
        self.stats.iter().find(|s| s.mode == mode && s.kind == kind)
    }

    pub fn render_summary(&self) -> String {
        let mut out = String::new();
        let mut per_n: BTreeMap<usize, usize> = BTreeMap::new();
        for inst in &self.instances {
            *per_n.entry(inst.n()).or_default() += 1;
        }
        let counts: Vec<String> = per_n.iter().map(|(n, c)| format!("n={n}: {c}")).collect();
        let xs: Vec<String> = self.x_grid.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "instances: {} ({})", self.instances.len(), counts.join(", "));
        let _ = writeln!(out, "exponents: {}", xs.join(", "));
        let _ = writeln!(
            out,
            "{:<8} {:<11} {:>9} {:>10} {:>9} {:>13} {:>24}",
            "mode", "kind", "subsets", "satisfied", "points", "margin>=-tol", "min_margin"
        );
        for s in &self.stats {
            let min = s.min_margin.map_or_else(|| "-".to_string(), fmt_num);
            let _ = writeln!(
                out,
                "{:<8} {:<11} {:>9} {:>10} {:>9} {:>13} {:>24}",
                s.mode.to_string(),
                s.kind.tag(),
                s.subsets,
                s.satisfied,
                s.points,
                s.within_tol,
                min
            );
        }
        if self.unconverged > 0 {
            let _ = writeln!(
                out,
                "warning: {} roof optimizations stopped on the sweep budget before converging",
                self.unconverged
            );
        }
        let _ = writeln!(
            out,
            "violations (margin < -{}): {}",
            self.margin_tol,
            self.violations.len()
        );
        for v in &self.violations {
            let b: Vec<String> = v.params.b_all().iter().map(|z| format!("{z}")).collect();
            let _ = writeln!(
                out,
                "  sample {} n={} mode={} kind={} subset={} x={} margin={} a={} b=[{}]",
                v.sample,
                v.params.num_qubits(),
                v.mode,
                v.kind.tag(),
                subset_label(&v.subset),
                v.x,
                fmt_num(v.margin),
                v.params.a(),
                b.join(", ")
            );
        }
        out
    }

    /// Per-instance table, or the per-point table when `full` is set.
    pub fn render_csv(&self, full: bool) -> String {
        let mut out = String::new();
        for c in &self.provenance {
            let _ = writeln!(out, "# {c}");
        }
        let opt = |v: Option<f64>| v.map_or_else(String::new, fmt_num);
        if full {
            out.push_str("sample,n,mode,subset,kind,status,t,x,lhs,rhs,margin\n");
            for d in &self.details {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{}",
                    d.sample,
                    d.n,
                    d.mode,
                    subset_label(&d.subset),
                    d.kind.tag(),
                    d.status,
                    d.t.map_or_else(String::new, |t| t.to_string()),
                    fmt_num(d.x),
                    fmt_num(d.lhs),
                    fmt_num(d.rhs),
                    fmt_num(d.margin)
                );
            }
        } else {
            out.push_str("sample,n,mode,kind,subsets,satisfied,min_margin,worst_subset,worst_x\n");
            for r in &self.rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{}",
                    r.sample,
                    r.n,
                    r.mode,
                    r.kind.tag(),
                    r.subsets,
                    r.satisfied,
                    opt(r.min_margin),
                    r.worst_subset.as_deref().map_or_else(String::new, subset_label),
                    opt(r.worst_x)
                );
            }
        }
        out
    }
}

/// `1-3-2` for the ordered subset `(1, 3, 2)`.
pub fn subset_label(subset: &[usize]) -> String {
    let parts: Vec<String> = subset.iter().map(|j| j.to_string()).collect();
    parts.join("-")
}

struct InstanceOutcome {
    reports: Vec<(LhsMode, MonogamyReport<f64>)>,
}

fn modes_for(cfg: &RunConfig, inst: &Instance, oracle_rank: Option<usize>) -> Vec<LhsMode> {
    let mut modes = vec![cfg.lhs_mode];
    if cfg.lhs_mode != LhsMode::Oracle && inst.n() == 4 && oracle_rank.is_some_and(|r| r < cfg.oracle_samples) {
        modes.push(LhsMode::Oracle);
    }
    modes
}

pub fn run_verify(cfg: &RunConfig) -> Result<VerifySummary, CliError> {
    cfg.validate()?;
    let xs = cfg.x_grid();
    let roof = cfg.roof();
    let groups = kind_groups(cfg.family);
    let instances = instances(cfg)?;

    // position of each four-qubit instance among the four-qubit instances
    let mut seen = 0;
    let oracle_rank: Vec<Option<usize>> = instances
        .iter()
        .map(|inst| {
            (inst.n() == 4).then(|| {
                seen += 1;
                seen - 1
            })
        })
        .collect();

    let outcomes: Vec<InstanceOutcome> = instances
        .par_iter()
        .zip(oracle_rank.par_iter())
        .map(|(inst, &rank)| -> Result<InstanceOutcome, CliError> {
            let mut reports = Vec::new();
            let subsets = ordered_subsets(inst.n() - 1);
            for mode in modes_for(cfg, inst, rank) {
                for kinds in &groups {
                    for subset in &subsets {
                        let r = verify_theorem(&inst.params, subset, kinds, &xs, &roof, mode)?;
                        reports.push((mode, r));
                    }
                }
            }
            Ok(InstanceOutcome { reports })
        })
        .collect::<Result<_, _>>()?;

    let mut stats: Vec<KindStats> = Vec::new();
    let mut rows = Vec::new();
    let mut details = Vec::new();
    let mut violations = Vec::new();
    let mut unconverged = 0;
    for (inst, outcome) in instances.iter().zip(&outcomes) {
        let mut per_kind: Vec<InstanceRow> = Vec::new();
        for (mode, report) in &outcome.reports {
            if !report.converged() {
                unconverged += 1;
            }
            for row in &report.bounds {
                let stat = match stats.iter().position(|s| s.mode == *mode && s.kind == row.kind) {
                    Some(k) => &mut stats[k],
                    None => {
                        stats.push(KindStats {
                            mode: *mode,
                            kind: row.kind,
                            subsets: 0,
                            satisfied: 0,
                            points: 0,
                            within_tol: 0,
                            min_margin: None,
                        });
                        stats.last_mut().expect("just pushed")
                    }
                };
                let irow = match per_kind.iter().position(|r| r.mode == *mode && r.kind == row.kind) {
                    Some(k) => &mut per_kind[k],
                    None => {
                        per_kind.push(InstanceRow {
                            sample: inst.index,
                            n: inst.n(),
                            mode: *mode,
                            kind: row.kind,
                            subsets: 0,
                            satisfied: 0,
                            min_margin: None,
                            worst_subset: None,
                            worst_x: None,
                        });
                        per_kind.last_mut().expect("just pushed")
                    }
                };
                stat.subsets += 1;
                irow.subsets += 1;
                if row.status.applies() {
                    stat.satisfied += 1;
                    irow.satisfied += 1;
                }
                for (p, &lhs) in row.points.iter().zip(&report.lhs_powers) {
                    stat.points += 1;
                    if p.margin >= -cfg.margin_tol {
                        stat.within_tol += 1;
                    } else {
                        violations.push(Violation {
                            sample: inst.index,
                            mode: *mode,
                            params: inst.params.clone(),
                            subset: report.subset.clone(),
                            kind: row.kind,
                            x: p.x,
                            margin: p.margin,
                        });
                    }
                    if stat.min_margin.is_none_or(|m| p.margin < m) {
                        stat.min_margin = Some(p.margin);
                    }
                    if irow.min_margin.is_none_or(|m| p.margin < m) {
                        irow.min_margin = Some(p.margin);
                        irow.worst_subset = Some(report.subset.clone());
                        irow.worst_x = Some(p.x);
                    }
                    if cfg.full {
                        details.push(DetailRow {
                            sample: inst.index,
                            n: inst.n(),
                            mode: *mode,
                            subset: report.subset.clone(),
                            kind: row.kind,
                            status: row.status,
                            t: row.t,
                            x: p.x,
                            lhs,
                            rhs: p.rhs,
                            margin: p.margin,
                        });
                    }
                }
            }
        }
        rows.extend(per_kind);
    }

    Ok(VerifySummary {
        instances,
        x_grid: xs,
        stats,
        rows,
        details,
        violations,
        unconverged,
        margin_tol: cfg.margin_tol,
        provenance: cfg.provenance("verify"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_w4_reproduces_fig1_margins() {
        let cfg = RunConfig {
            samples: 1,
            qubits: vec![4],
            uniform_w: true,
            full: true,
            oracle_samples: 0,
            family: Family::Concurrence,
            ..RunConfig::default()
        };
        let s = run_verify(&cfg).unwrap();
        assert!(s.passed());
        let d: Vec<&DetailRow> = s
            .details
            .iter()
            .filter(|d| d.subset == [1, 2, 3] && d.kind == BoundKind::HCT1)
            .collect();
        assert_eq!(d.len(), 81);
        let x4 = d.iter().find(|d| d.x == 4.0).unwrap();
        assert!((x4.margin - (0.5625 - 0.4375)).abs() <= 1e-12);
        assert_eq!(x4.t, Some(0));
    }

    #[test]
    fn instances_are_seeded() {
        let cfg = RunConfig {
            samples: 6,
            ..RunConfig::default()
        };
        let a = instances(&cfg).unwrap();
        let b = instances(&cfg).unwrap();
        let ns: Vec<usize> = a.iter().map(|i| i.n()).collect();
        assert_eq!(ns, vec![4, 5, 6, 4, 5, 6]);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.params, y.params);
        }
    }

    #[test]
    fn small_sweep_with_oracle() {
        let cfg = RunConfig {
            samples: 4,
            x_values: Some(vec![2.0, 3.0, 6.0]),
            restarts: 8,
            oracle_samples: 1,
            ..RunConfig::default()
        };
        let s = run_verify(&cfg).unwrap();
        assert!(s.passed(), "{}", s.render_summary());
        let oracle = s.stat(LhsMode::Oracle, BoundKind::HCT1).unwrap();
        assert_eq!(oracle.subsets, 12);
        assert!(s.rows.iter().any(|r| r.mode == LhsMode::Oracle));
        assert_eq!(s.unconverged, 0);
    }
}
