//! Line-oriented text format for pure states:
//!
//! ```text
//! # comment
//! qubits 2
//! 0 7.0710678118654746e-1 0.0000000000000000e0
//! 1 0.0000000000000000e0 0.0000000000000000e0
//! ...
//! ```
//!
//! One `<index> <re> <im>` line per basis state, indices ascending from 0.
//! Values are written with 17 significant digits so `f64` round-trips exactly.

use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::{qubits_for_dim, Real};

use super::pure::{norm_of, PureState};

pub fn load_state<T: Real>(path: impl AsRef<Path>) -> Result<PureState<T>> {
    let text = std::fs::read_to_string(path)?;
    parse_state(&text)
}

pub fn save_state<T: Real>(state: &PureState<T>, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, format_state(state))?;
    Ok(())
}

pub fn format_state<T: Real>(state: &PureState<T>) -> String {
    let mut out = format!("qubits {}\n", state.num_qubits());
    for (i, z) in state.amplitudes().iter().enumerate() {
        let _ = writeln!(out, "{i} {:.16e} {:.16e}", z.re.to_f64_lossy(), z.im.to_f64_lossy());
    }
    out
}

pub fn parse_state<T: Real>(text: &str) -> Result<PureState<T>> {
    let perr = |line: usize, message: String| Error::Parse { line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| perr(1, "missing `qubits <n>` header".into()))?;
    let n: usize = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["qubits", n] => n
            .parse()
            .map_err(|_| perr(hline, format!("invalid qubit count `{n}`")))?,
        _ => return Err(perr(hline, format!("expected `qubits <n>`, found `{header}`"))),
    };
    if n == 0 || n > crate::linalg::MAX_QUBITS {
        return Err(perr(hline, format!("qubit count {n} outside 1..={}", crate::linalg::MAX_QUBITS)));
    }
    let dim = 1usize << n;

    let mut amps: Vec<Complex<T>> = Vec::with_capacity(dim);
    let mut last_line = hline;
    for (lineno, line) in lines {
        last_line = lineno;
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [idx, re, im] = fields.as_slice() else {
            return Err(perr(lineno, format!("expected `<index> <re> <im>`, found `{line}`")));
        };
        let idx: usize = idx
            .parse()
            .map_err(|_| perr(lineno, format!("invalid basis index `{idx}`")))?;
        if idx >= dim {
            return Err(perr(
                lineno,
                format!("basis index {idx} out of range, expected {dim} amplitudes for {n} qubits"),
            ));
        }
        if idx != amps.len() {
            return Err(perr(
                lineno,
                format!("basis index {idx} out of order, expected {}", amps.len()),
            ));
        }
        let parse = |s: &str| -> Result<f64> {
            let v: f64 = s
                .parse()
                .map_err(|_| perr(lineno, format!("invalid number `{s}`")))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(perr(lineno, format!("non-finite number `{s}`")))
            }
        };
        amps.push(Complex::new(T::lit(parse(re)?), T::lit(parse(im)?)));
    }
    if amps.len() != dim {
        return Err(perr(
            last_line,
            format!("expected {dim} amplitudes for {n} qubits, found {}", amps.len()),
        ));
    }
    debug_assert_eq!(qubits_for_dim(dim).ok(), Some(n));
    let norm = norm_of(&amps);
    if (norm - T::one()).abs() > T::lit(T::tolerances().norm_tol) {
        return Err(Error::NormViolation {
            norm: norm.to_f64_lossy(),
        });
    }
    PureState::new(amps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{make_wclass, WClassParams};

    #[test]
    fn round_trip_w4() {
        let psi = make_wclass(&WClassParams::<f64>::uniform(4).unwrap());
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("w4.state");
        save_state(&psi, &path).unwrap();
        let back: PureState<f64> = load_state(&path).unwrap();
        assert_eq!(back, psi);
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let p = crate::states::sample_wclass::<f64>(5, 3).unwrap();
        let psi = make_wclass(&p);
        let back: PureState<f64> = parse_state(&format_state(&psi)).unwrap();
        assert_eq!(back.amplitudes(), psi.amplitudes());
    }

    #[test]
    fn count_mismatch() {
        let text = "qubits 2\n0 1 0\n1 0 0\n2 0 0\n";
        match parse_state::<f64>(text) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 4);
                assert!(message.contains("expected 4 amplitudes"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn norm_violation_names_norm() {
        let text = "# half norm\nqubits 1\n0 0.5 0\n1 0 0\n";
        let err = parse_state::<f64>(text).unwrap_err();
        assert!(matches!(err, Error::NormViolation { norm } if (norm - 0.5).abs() < 1e-15));
        assert!(err.to_string().contains("0.5"));
    }

    #[test]
    fn malformed_lines() {
        let cases = [
            ("qubit 1\n0 1 0\n1 0 0\n", 1),
            ("qubits 1\n0 1\n1 0 0\n", 2),
            ("qubits 1\n0 x 0\n1 0 0\n", 2),
            ("qubits 1\n1 0 0\n0 1 0\n", 2),
            ("qubits 1\n0 1 0\n1 0 0\n2 0 0\n", 4),
        ];
        for (text, expected_line) in cases {
            match parse_state::<f64>(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, expected_line, "{text:?}"),
                other => panic!("{text:?}: unexpected {other:?}"),
            }
        }
    }
}
