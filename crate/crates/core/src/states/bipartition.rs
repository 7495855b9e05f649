use crate::error::{Error, Result};
use crate::linalg::{complement, qubit_mask};

/// Split of a register into side A and its complement B.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bipartition {
    num_qubits: usize,
    side_a: Vec<usize>,
    side_b: Vec<usize>,
}

impl Bipartition {
    /// `side_a` must be non-empty, in range and free of duplicates; B is the rest.
    pub fn new(side_a: &[usize], num_qubits: usize) -> Result<Self> {
        if side_a.is_empty() {
            return Err(Error::arg("side A of a bipartition must be non-empty"));
        }
        qubit_mask(side_a, num_qubits)?;
        let mut a = side_a.to_vec();
        a.sort_unstable();
        let b = complement(&a, num_qubits);
        Ok(Bipartition {
            num_qubits,
            side_a: a,
            side_b: b,
        })
    }

    /// Qubit 0 against all the others.
    pub fn first_vs_rest(num_qubits: usize) -> Result<Self> {
        Self::new(&[0], num_qubits)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn side_a(&self) -> &[usize] {
        &self.side_a
    }

    pub fn side_b(&self) -> &[usize] {
        &self.side_b
    }

    pub(crate) fn check_register(&self, num_qubits: usize) -> Result<()> {
        if self.num_qubits != num_qubits {
            return Err(Error::arg(format!(
                "bipartition is for {} qubits, state has {}",
                self.num_qubits, num_qubits
            )));
        }
        Ok(())
    }
}

impl std::fmt::Display for Bipartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[usize]| v.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{{{}}}|{{{}}}", join(&self.side_a), join(&self.side_b))
    }
}
