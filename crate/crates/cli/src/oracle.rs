//! Cross-checks of the closed forms against the roof optimizer.

use std::fmt::Write as _;
use std::path::PathBuf;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qmono::measures::{
    concurrence_pure, concurrence_two_qubit, negativity_pure, roof_extremize, spin_flip_lambdas, wclass_one_vs_rest,
    wclass_pair_value,
};
use qmono::states::{make_wclass, sample_wclass, save_state};
use qmono::{Bipartition, ComplexScalar, Kernel, PureState, Real, Sense};

use crate::csv::fmt_num;
use crate::{CliError, RunConfig};

/// Pure state with normalized complex Gaussian amplitudes.
fn gaussian_state(n: usize, rng: &mut ChaCha8Rng) -> Result<PureState<f64>, qmono::Error> {
    let amps = (0..1usize << n)
        .map(|_| ComplexScalar::new(f64::standard_normal(rng), f64::standard_normal(rng)))
        .collect();
    PureState::normalized(amps)
}

#[derive(Clone, Debug)]
pub struct WorstCase {
    pub label: String,
    /// Pure state whose reduction reproduces the case.
    pub state: PureState<f64>,
    pub deviation: f64,
}

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub max_deviation: f64,
    pub worst: Option<WorstCase>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            cases: 0,
            max_deviation: 0.0,
            worst: None,
        }
    }

    fn record(&mut self, deviation: f64, label: impl FnOnce() -> String, state: &PureState<f64>) {
        self.cases += 1;
        if self.worst.is_none() || deviation > self.max_deviation {
            self.max_deviation = deviation;
            self.worst = Some(WorstCase {
                label: label(),
                state: state.clone(),
                deviation,
            });
        }
    }
}

#[derive(Clone, Debug)]
pub struct OracleReport {
    pub tolerance: f64,
    pub suites: Vec<SuiteResult>,
    pub unconverged: usize,
    /// Where the worst failing case was written, if any.
    pub dumped: Option<PathBuf>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.max_deviation <= self.tolerance)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| s.name == name)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<26} {:>6} {:>24}  worst case", "suite", "cases", "max_deviation");
        for s in &self.suites {
            let flag = if s.max_deviation <= self.tolerance { "" } else { "  FAIL" };
            let label = s.worst.as_ref().map_or("-", |w| w.label.as_str());
            let _ = writeln!(
                out,
                "{:<26} {:>6} {:>24}  {label}{flag}",
                s.name,
                s.cases,
                fmt_num(s.max_deviation)
            );
        }
        let _ = writeln!(out, "tolerance: {}", self.tolerance);
        if self.unconverged > 0 {
            let _ = writeln!(
                out,
                "warning: {} roof optimizations stopped on the sweep budget before converging",
                self.unconverged
            );
        }
        if let Some(p) = &self.dumped {
            let _ = writeln!(out, "worst case written to {}", p.display());
        }
        let _ = writeln!(out, "{}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }
}

fn pure_value(psi: &PureState<f64>, split: &Bipartition, kernel: Kernel) -> Result<f64, qmono::Error> {
    Ok(match kernel {
        Kernel::Concurrence => concurrence_pure(psi, split)?.value,
        Kernel::Negativity => negativity_pure(psi, split)?.value,
    })
}

/// Runs every suite. `cfg.samples` sets the number of random two-qubit states
/// and of W-class instances (round-robin over `cfg.qubits`); `cfg.oracle_samples`
/// sets the smaller suites.
pub fn run_oracle_check(cfg: &RunConfig) -> Result<OracleReport, CliError> {
    cfg.validate()?;
    let roof = cfg.roof();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut unconverged = 0;
    let mut run = |rho: &qmono::Density, split: &Bipartition, kernel, sense| -> Result<f64, CliError> {
        let mv = roof_extremize(rho, split, kernel, sense, &roof)?;
        if !mv.converged {
            unconverged += 1;
        }
        Ok(mv.value)
    };
    let kernels = [Kernel::Concurrence, Kernel::Negativity];
    let senses = [Sense::Min, Sense::Max];

    let mut collapse = SuiteResult::new("pure-collapse");
    for case in 0..cfg.oracle_samples {
        let n = 2 + case % 2;
        let psi = gaussian_state(n, &mut rng)?;
        let split = Bipartition::first_vs_rest(n)?;
        for kernel in kernels {
            let exact = pure_value(&psi, &split, kernel)?;
            for sense in senses {
                let dev = (run(&psi.projector(), &split, kernel, sense)? - exact).abs();
                collapse.record(dev, || format!("case {case}, {kernel:?} {sense:?}"), &psi);
            }
        }
    }

    let mut wootters = SuiteResult::new("wootters-vs-roof-min");
    let mut assisted = SuiteResult::new("lambda-sum-vs-roof-max");
    let pair_split = Bipartition::first_vs_rest(2)?;
    for case in 0..cfg.samples {
        // reductions of three-qubit pure states have rank at most two
        let psi = gaussian_state(3, &mut rng)?;
        let rho = psi.reduce(&[0, 1])?;
        let exact = concurrence_two_qubit(&rho)?.value;
        let dev = (run(&rho, &pair_split, Kernel::Concurrence, Sense::Min)? - exact).abs();
        wootters.record(dev, || format!("case {case}: qubits 0,1 of a three-qubit state"), &psi);
        let lambda_sum: f64 = spin_flip_lambdas(&rho)?.iter().sum();
        let dev = (run(&rho, &pair_split, Kernel::Concurrence, Sense::Max)? - lambda_sum).abs();
        assisted.record(dev, || format!("case {case}: qubits 0,1 of a three-qubit state"), &psi);
    }

    let mut pair_conc = SuiteResult::new("wclass-pair-concurrence");
    let mut pair_neg = SuiteResult::new("wclass-pair-negativity");
    let mut params_list = Vec::with_capacity(cfg.samples);
    for case in 0..cfg.samples {
        let n = cfg.qubits[case % cfg.qubits.len()];
        params_list.push(sample_wclass::<f64>(n, rng.next_u64())?);
    }
    for (case, params) in params_list.iter().enumerate() {
        let psi = make_wclass(params);
        for j in 1..params.num_qubits() {
            let rho = psi.reduce(&[0, j])?;
            for kernel in kernels {
                let closed = wclass_pair_value(params, j, kernel)?;
                let lo = run(&rho, &pair_split, kernel, Sense::Min)?;
                let hi = run(&rho, &pair_split, kernel, Sense::Max)?;
                let dev = (hi - lo).abs().max((lo - closed).abs()).max((hi - closed).abs());
                let suite = if kernel == Kernel::Concurrence {
                    &mut pair_conc
                } else {
                    &mut pair_neg
                };
                suite.record(dev, || format!("case {case}: pair (A, B{j})"), &psi);
            }
        }
    }

    let mut rest = SuiteResult::new("wclass-one-vs-rest");
    for (case, params) in params_list.iter().take(cfg.oracle_samples).enumerate() {
        let psi = make_wclass(params);
        for subset in [vec![1, 2], vec![1, 2, 3]] {
            let mut keep = vec![0];
            keep.extend(&subset);
            let rho = psi.reduce(&keep)?;
            let split = Bipartition::first_vs_rest(keep.len())?;
            for kernel in kernels {
                let closed = wclass_one_vs_rest(params, &subset, kernel)?;
                let dev = (run(&rho, &split, kernel, Sense::Min)? - closed).abs();
                rest.record(dev, || format!("case {case}: A | B{subset:?} {kernel:?}"), &psi);
            }
        }
    }

    let mut report = OracleReport {
        tolerance: cfg.oracle_tolerance(),
        suites: vec![collapse, wootters, assisted, pair_conc, pair_neg, rest],
        unconverged,
        dumped: None,
    };
    if !report.passed() {
        let worst = report
            .suites
            .iter()
            .filter_map(|s| s.worst.as_ref())
            .max_by(|a, b| a.deviation.total_cmp(&b.deviation))
            .expect("a failing suite has a worst case");
        let path = cfg
            .out
            .clone()
            .unwrap_or_else(|| PathBuf::from("oracle-check-worst.state"));
        save_state(&worst.state, &path).map_err(|e| match e {
            qmono::Error::Io(source) => CliError::Io {
                path: path.clone(),
                source,
            },
            other => CliError::Core(other),
        })?;
        report.dumped = Some(path);
    }
    Ok(report)
}
