use crate::error::Result;
use crate::linalg::{jacobi, Real};
use crate::states::{Bipartition, PureState};

use super::MeasureValue;

/// `C = sqrt(2 (1 - Tr rho_A^2))` with `rho_A` the reduction onto side A.
pub fn concurrence_pure<T: Real>(psi: &PureState<T>, split: &Bipartition) -> Result<MeasureValue<T>> {
    split.check_register(psi.num_qubits())?;
    let rho_a = psi.reduced_matrix(split.side_a());
    let purity = rho_a.frobenius_sq();
    let c = (T::lit(2.0) * (T::one() - purity)).max(T::zero()).sqrt();
    Ok(MeasureValue::closed_form(c))
}

/// `N = (Tr sqrt(rho_A))^2 - 1`, equivalently `2 sum_{i<j} sqrt(l_i l_j)`
/// over the Schmidt spectrum.
pub fn negativity_pure<T: Real>(psi: &PureState<T>, split: &Bipartition) -> Result<MeasureValue<T>> {
    split.check_register(psi.num_qubits())?;
    // the smaller side carries no structurally zero eigenvalues, whose
    // rounding noise would enter through the square root
    let side = if split.side_a().len() <= split.side_b().len() {
        split.side_a()
    } else {
        split.side_b()
    };
    let rho_small = psi.reduced_matrix(side);
    let s = jacobi(&rho_small)
        .eigenvalues
        .iter()
        .fold(T::zero(), |acc, &l| acc + l.max(T::zero()).sqrt());
    Ok(MeasureValue::closed_form(s * s - T::one()))
}

/// Converts a doubled-convention negativity `||rho^{T_A}|| - 1` to the
/// halved `(||rho^{T_A}|| - 1) / 2` form.
pub fn to_halved_negativity<T: Real>(doubled: T) -> T {
    doubled / T::lit(2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{make_wclass, WClassParams};
    use approx::assert_abs_diff_eq;

    fn w(n: usize) -> PureState<f64> {
        make_wclass(&WClassParams::uniform(n).unwrap())
    }

    #[test]
    fn bell_values() {
        let b = PureState::<f64>::bell_phi_plus();
        let split = Bipartition::first_vs_rest(2).unwrap();
        assert_abs_diff_eq!(concurrence_pure(&b, &split).unwrap().value, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(negativity_pure(&b, &split).unwrap().value, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(to_halved_negativity(1.0), 0.5);
    }

    #[test]
    fn w4_first_vs_rest() {
        let split = Bipartition::first_vs_rest(4).unwrap();
        let expected = 3f64.sqrt() / 2.0;
        assert_abs_diff_eq!(concurrence_pure(&w(4), &split).unwrap().value, expected, epsilon = 1e-12);
        // spectrum (3/4, 1/4): (sqrt(3)/2 + 1/2)^2 - 1
        let direct = (0.75f64.sqrt() + 0.25f64.sqrt()).powi(2) - 1.0;
        assert_abs_diff_eq!(direct, expected, epsilon = 1e-15);
        assert_abs_diff_eq!(negativity_pure(&w(4), &split).unwrap().value, direct, epsilon = 1e-12);
    }

    #[test]
    fn w5_negativity() {
        let split = Bipartition::first_vs_rest(5).unwrap();
        assert_abs_diff_eq!(negativity_pure(&w(5), &split).unwrap().value, 0.8, epsilon = 1e-12);
    }

    #[test]
    fn product_state_is_zero() {
        let p = PureState::<f64>::basis(3, 5).unwrap();
        let split = Bipartition::new(&[1], 3).unwrap();
        assert_eq!(concurrence_pure(&p, &split).unwrap().value, 0.0);
        assert_eq!(negativity_pure(&p, &split).unwrap().value, 0.0);
    }

    #[test]
    fn split_must_match_register() {
        let split = Bipartition::first_vs_rest(3).unwrap();
        assert!(concurrence_pure(&PureState::<f64>::bell_phi_plus(), &split).is_err());
    }
}
