//! Single measure evaluation on a state file.

use std::fmt::Write as _;
use std::path::PathBuf;

use qmono::measures::{
    concurrence_assist, concurrence_pure, concurrence_roof, concurrence_two_qubit, cren, crenoa, negativity,
    negativity_pure, RoofConfig,
};
use qmono::states::{format_state, load_state};
use qmono::{Bipartition, MeasureValue};

use crate::csv::fmt_num;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Measure {
    Concurrence,
    Negativity,
    ConcurrenceAssist,
    Cren,
    Crenoa,
}

impl Measure {
    pub fn name(self) -> &'static str {
        match self {
            Measure::Concurrence => "concurrence",
            Measure::Negativity => "negativity",
            Measure::ConcurrenceAssist => "concurrence-assist",
            Measure::Cren => "cren",
            Measure::Crenoa => "crenoa",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ComputeArgs {
    pub state: PathBuf,
    pub measure: Measure,
    /// Side A, indexed within the (possibly reduced) register.
    pub split: Vec<usize>,
    /// Qubits kept before measuring; `None` measures the pure state itself.
    pub keep: Option<Vec<usize>>,
    pub roof: RoofConfig,
    pub show_ensemble: bool,
}

pub fn run_compute(args: &ComputeArgs) -> Result<String, CliError> {
    let psi = load_state::<f64>(&args.state)?;
    let value: MeasureValue<f64> = match &args.keep {
        None => {
            let split = Bipartition::new(&args.split, psi.num_qubits())?;
            match args.measure {
                Measure::Concurrence => concurrence_pure(&psi, &split)?,
                Measure::Negativity => negativity_pure(&psi, &split)?,
                m => roof(m, &psi.projector(), &split, &args.roof)?,
            }
        }
        Some(keep) => {
            let rho = psi.reduce(keep)?;
            let split = Bipartition::new(&args.split, rho.num_qubits())?;
            match args.measure {
                Measure::Concurrence if rho.num_qubits() == 2 => concurrence_two_qubit(&rho)?,
                Measure::Concurrence => concurrence_roof(&rho, &split, &args.roof)?,
                Measure::Negativity => negativity(&rho, &split)?,
                m => roof(m, &rho, &split, &args.roof)?,
            }
        }
    };

    let register = match &args.keep {
        Some(k) => {
            let mut k = k.clone();
            k.sort_unstable();
            format!(" on qubits {k:?}")
        }
        None => String::new(),
    };
    let split = Bipartition::new(&args.split, args.keep.as_ref().map_or(psi.num_qubits(), |k| k.len()))?;
    let mut out = format!(
        "{} [{split}]{register} = {:.17} ({})\n",
        args.measure.name(),
        value.value,
        value.method
    );
    if !value.converged {
        out.push_str("warning: roof optimization stopped on the sweep budget before converging\n");
    }
    if args.show_ensemble {
        if let Some(ens) = &value.ensemble {
            for (k, (w, m)) in ens.weights.iter().zip(&ens.members).enumerate() {
                let _ = writeln!(out, "# member {k} weight {}", fmt_num(*w));
                out.push_str(&format_state(m));
            }
        }
    }
    Ok(out)
}

fn roof(
    m: Measure,
    rho: &qmono::Density,
    split: &Bipartition,
    cfg: &RoofConfig,
) -> Result<MeasureValue<f64>, qmono::Error> {
    match m {
        Measure::ConcurrenceAssist => concurrence_assist(rho, split, cfg),
        Measure::Cren => cren(rho, split, cfg),
        Measure::Crenoa => crenoa(rho, split, cfg),
        Measure::Concurrence => concurrence_roof(rho, split, cfg),
        Measure::Negativity => qmono::measures::negativity(rho, split),
    }
}
