use std::fmt::Write as _;
use std::path::PathBuf;

use qmono::measures::RoofConfig;
use qmono::monogamy::MARGIN_TOL;
use qmono::LhsMode;

use crate::CliError;

/// Which bound families a verification sweep covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Concurrence,
    Negativity,
    Both,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Family::Concurrence => "concurrence",
            Family::Negativity => "negativity",
            Family::Both => "both",
        })
    }
}

/// Deviation allowed between a roof optimization and a closed form.
pub const ORACLE_TOL: f64 = 1e-3;

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub seed: u64,
    /// Total number of sampled instances, spread round-robin over `qubits`.
    pub samples: usize,
    pub x_min: f64,
    pub x_max: f64,
    pub x_step: f64,
    /// Explicit exponent list; replaces the `x_min..x_max` grid when set.
    pub x_values: Option<Vec<f64>>,
    pub restarts: usize,
    pub max_iters: usize,
    pub qubits: Vec<usize>,
    pub out: Option<PathBuf>,
    pub lhs_mode: LhsMode,
    pub family: Family,
    /// Instances checked against the roof oracle (N = 4 in `verify`).
    pub oracle_samples: usize,
    /// Oracle deviation tolerance, default [`ORACLE_TOL`].
    pub tolerance: Option<f64>,
    pub margin_tol: f64,
    /// Use the symmetric W state instead of sampled coefficients.
    pub uniform_w: bool,
    /// Emit one CSV row per subset, bound and exponent.
    pub full: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 42,
            samples: 100,
            x_min: 2.0,
            x_max: 10.0,
            x_step: 0.1,
            x_values: None,
            restarts: 200,
            max_iters: 2000,
            qubits: vec![4, 5, 6],
            out: None,
            lhs_mode: LhsMode::Chain,
            family: Family::Both,
            oracle_samples: 20,
            tolerance: None,
            margin_tol: MARGIN_TOL,
            uniform_w: false,
            full: false,
        }
    }
}

fn round12(x: f64) -> f64 {
    (x * 1e12).round() / 1e12
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        let usage = |m: String| Err(CliError::Usage(m));
        if let Some(xs) = &self.x_values {
            if xs.is_empty() {
                return usage("empty exponent list".into());
            }
            if let Some(x) = xs.iter().find(|x| !(**x >= 2.0) || !x.is_finite()) {
                return usage(format!("domain error: exponent {x} must be >= 2"));
            }
        } else {
            if !(self.x_min >= 2.0) || !self.x_min.is_finite() {
                return usage(format!("domain error: x-min = {} must be >= 2", self.x_min));
            }
            if !(self.x_step > 0.0) || !self.x_step.is_finite() {
                return usage(format!("x-step = {} must be positive", self.x_step));
            }
            if !(self.x_max >= self.x_min) || !self.x_max.is_finite() {
                return usage(format!("x-max = {} must be at least x-min = {}", self.x_max, self.x_min));
            }
            if (self.x_max - self.x_min) / self.x_step > 1e6 {
                return usage("exponent grid has more than a million points".into());
            }
        }
        if self.samples == 0 {
            return usage("samples must be at least 1".into());
        }
        if self.restarts == 0 {
            return usage("restarts must be at least 1".into());
        }
        if self.max_iters == 0 {
            return usage("max-iters must be at least 1".into());
        }
        if self.qubits.is_empty() {
            return usage("qubit list is empty".into());
        }
        if let Some(n) = self.qubits.iter().find(|&&n| !(4..=10).contains(&n)) {
            return usage(format!("qubit count {n} outside 4..=10"));
        }
        if let Some(t) = self.tolerance {
            if !(t > 0.0) || !t.is_finite() {
                return usage(format!("tolerance {t} must be positive"));
            }
        }
        if !(self.margin_tol >= 0.0) || !self.margin_tol.is_finite() {
            return usage(format!("margin tolerance {} must be non-negative", self.margin_tol));
        }
        Ok(())
    }

    /// Exponent grid; points are rounded to 1e-12 so that accumulated step
    /// error does not leak into the output.
    pub fn x_grid(&self) -> Vec<f64> {
        if let Some(xs) = &self.x_values {
            return xs.clone();
        }
        let count = ((self.x_max - self.x_min) / self.x_step + 1e-9).floor() as usize + 1;
        (0..count).map(|k| round12(self.x_min + k as f64 * self.x_step)).collect()
    }

    pub fn roof(&self) -> RoofConfig {
        RoofConfig {
            restarts: self.restarts,
            max_iters: self.max_iters,
            rng_seed: self.seed,
            ..RoofConfig::default()
        }
    }

    pub fn oracle_tolerance(&self) -> f64 {
        self.tolerance.unwrap_or(ORACLE_TOL)
    }

    fn grid_flags(&self) -> String {
        match &self.x_values {
            Some(xs) => {
                let list: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                format!("--x-values {}", list.join(","))
            }
            None => format!("--x-min {} --x-max {} --x-step {}", self.x_min, self.x_max, self.x_step),
        }
    }

    /// Provenance lines (without the `#` prefix): tool version and an
    /// equivalent command line rebuilt from the configuration.
    pub fn provenance(&self, command: &str) -> Vec<String> {
        let mut cmd = format!("qmono {command}");
        match command {
            "fig1" | "fig2" => {
                let _ = write!(cmd, " {}", self.grid_flags());
            }
            "verify" => {
                let q: Vec<String> = self.qubits.iter().map(|n| n.to_string()).collect();
                let _ = write!(
                    cmd,
                    " --seed {} --samples {} --qubits {} {} --restarts {} --max-iters {} --lhs-mode {} --family {} --oracle-samples {} --margin-tol {}",
                    self.seed,
                    self.samples,
                    q.join(","),
                    self.grid_flags(),
                    self.restarts,
                    self.max_iters,
                    self.lhs_mode,
                    self.family,
                    self.oracle_samples,
                    self.margin_tol
                );
                if self.uniform_w {
                    cmd.push_str(" --uniform-w");
                }
                if self.full {
                    cmd.push_str(" --full");
                }
            }
            _ => {}
        }
        vec![
            format!("generated by qmono {}", env!("CARGO_PKG_VERSION")),
            format!("command: {cmd}"),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid() {
        let xs = RunConfig::default().x_grid();
        assert_eq!(xs.len(), 81);
        assert_eq!(xs[0], 2.0);
        assert_eq!(xs[20], 4.0);
        assert_eq!(xs[80], 10.0);
        assert_eq!(xs[3], 2.3);
    }

    #[test]
    fn rejects_small_exponents() {
        let cfg = RunConfig {
            x_min: 1.0,
            ..RunConfig::default()
        };
        assert!(matches!(cfg.validate(), Err(CliError::Usage(m)) if m.contains("domain")));
        let cfg = RunConfig {
            x_values: Some(vec![2.0, 1.5]),
            ..RunConfig::default()
        };
        assert!(cfg.validate().is_err());
        let cfg = RunConfig {
            x_step: 0.0,
            ..RunConfig::default()
        };
        assert!(cfg.validate().is_err());
        assert!(RunConfig::default().validate().is_ok());
    }
}
