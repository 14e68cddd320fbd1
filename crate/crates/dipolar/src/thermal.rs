//! Thermal equilibrium density matrices, partial traces to spin pairs,
//! and observable expectations.

use num_complex::Complex64;

use crate::eig::herm_eig;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::spin::basis_iz;

/// Equilibrium state: density matrix plus the log partition function of
/// the reduced Hamiltonian it was built from.
#[derive(Debug, Clone)]
pub struct ThermalState {
    pub rho: ComplexMatrix,
    pub log_z: f64,
}

/// ρ = exp(−h)/Tr exp(−h) for a reduced (dimensionless) Hamiltonian.
///
/// Eigenvalues are shifted by their minimum before exponentiation and
/// log Z is assembled with log-sum-exp, so β, d of order 50 stay finite.
pub fn gibbs(h: &ComplexMatrix) -> Result<ThermalState> {
    let eig = herm_eig(h)?;
    let min = eig
        .eigenvalues
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min);
    let weights: Vec<f64> = eig
        .eigenvalues
        .iter()
        .map(|&lam| (-(lam - min)).exp())
        .collect();
    let norm: f64 = weights.iter().sum();
    let rho = eig.recompose(|lam| (-(lam - min)).exp() / norm);
    let log_z = -min + norm.ln();
    Ok(ThermalState { rho, log_z })
}

/// Reduce an N-spin density matrix to the 4×4 state of sites (a, b),
/// a < b, tracing out every other spin. Site a maps to the first pair
/// slot, matching the spin-model basis convention.
pub fn partial_trace_pair(
    rho: &ComplexMatrix,
    n_spins: usize,
    site_a: usize,
    site_b: usize,
) -> Result<ComplexMatrix> {
    if site_a < 1 || site_b <= site_a || site_b > n_spins {
        return Err(Error::SiteOutOfRange {
            site: if site_a < 1 { site_a } else { site_b },
            n_spins,
        });
    }
    let dim = 1usize << n_spins;
    if rho.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            actual: rho.dim(),
        });
    }
    let shift_a = n_spins - site_a;
    let shift_b = n_spins - site_b;
    let env_sites: Vec<usize> = (1..=n_spins)
        .filter(|&s| s != site_a && s != site_b)
        .collect();
    let env_count = 1usize << env_sites.len();

    let mut out = ComplexMatrix::zeros(4);
    for env in 0..env_count {
        let mut base = 0usize;
        for (pos, &s) in env_sites.iter().enumerate() {
            if (env >> pos) & 1 == 1 {
                base |= 1 << (n_spins - s);
            }
        }
        for a in 0..4 {
            let row = base | ((a >> 1) << shift_a) | ((a & 1) << shift_b);
            for b in 0..4 {
                let col = base | ((b >> 1) << shift_a) | ((b & 1) << shift_b);
                let v = rho[(row, col)];
                out[(a, b)] += v;
            }
        }
    }
    Ok(out)
}

/// M_z = Tr(ρ · Σ_k I_k^z); the observable is diagonal, so only the
/// diagonal of ρ enters.
pub fn magnetization(rho: &ComplexMatrix, n_spins: usize) -> Result<f64> {
    let dim = 1usize << n_spins;
    if rho.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            actual: rho.dim(),
        });
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for idx in 0..dim {
        acc += rho[(idx, idx)] * basis_iz(n_spins, idx);
    }
    assert!(
        acc.im.abs() <= 1e-12,
        "magnetization picked up an imaginary residue: {:e}",
        acc.im
    );
    Ok(acc.re)
}

/// Tr(ρ·O) for a Hermitian observable; the imaginary residue must stay
/// below 1e-10.
pub fn expectation(rho: &ComplexMatrix, obs: &ComplexMatrix) -> Result<f64> {
    if rho.dim() != obs.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            actual: obs.dim(),
        });
    }
    obs.check_hermitian()?;
    let n = rho.dim();
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..n {
        for j in 0..n {
            acc += rho[(i, j)] * obs[(j, i)];
        }
    }
    assert!(
        acc.im.abs() <= 1e-10,
        "expectation picked up an imaginary residue: {:e}",
        acc.im
    );
    Ok(acc.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::kron;
    use crate::spin::{pair_hamiltonian, total_iz, ReducedParams};

    fn transverse_state(beta: f64, d: f64) -> ThermalState {
        gibbs(&pair_hamiltonian(
            &ReducedParams::transverse(beta, d).unwrap(),
        ))
        .unwrap()
    }

    #[test]
    fn zero_hamiltonian_is_maximally_mixed() {
        let st = gibbs(&ComplexMatrix::zeros(4)).unwrap();
        assert!(
            st.rho
                .max_abs_diff(&ComplexMatrix::identity(4).scale_real(0.25))
                < 1e-15
        );
        assert!((st.log_z - 4.0f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn zeeman_boltzmann_weights() {
        let h = ComplexMatrix::diag_real(&[2.0, 0.0, 0.0, -2.0]);
        let st = gibbs(&h).unwrap();
        let z = (-2.0f64).exp() + 1.0 + 1.0 + 2.0f64.exp();
        for (i, w) in [(-2.0f64).exp(), 1.0, 1.0, 2.0f64.exp()]
            .into_iter()
            .enumerate()
        {
            assert!((st.rho[(i, i)].re - w / z).abs() < 1e-15);
        }
    }

    // Z(β,d) = 2e^{−d/4}[cosh(√(16β²+9d²)/4) + e^{d/2}cosh(d/4)];
    // 50-digit value from python/gen_reference_values.py.
    #[test]
    fn log_partition_function_closed_form() {
        let st = transverse_state(1.0, 1.0);
        assert!((st.log_z - 1.721003125757214).abs() < 1e-13);
    }

    #[test]
    fn thermal_state_invariants_on_grid() {
        for &(beta, d) in &[
            (0.0, 0.0),
            (0.5, 2.0),
            (2.0, 0.5),
            (5.0, 5.0),
            (10.0, 10.0),
            (50.0, 50.0),
        ] {
            let h = pair_hamiltonian(&ReducedParams::transverse(beta, d).unwrap());
            let st = gibbs(&h).unwrap();
            assert!(
                (st.rho.trace().re - 1.0).abs() <= 1e-12,
                "trace at ({beta},{d})"
            );
            assert!(st.rho.check_hermitian().is_ok());
            let eig = herm_eig(&st.rho).unwrap();
            assert!(eig.eigenvalues[0] >= -1e-12, "PSD at ({beta},{d})");
            assert!(
                st.rho.commutator_max_abs(&h) <= 1e-10,
                "[rho,h] at ({beta},{d})"
            );
            assert!(st.log_z.is_finite());
        }
    }

    #[test]
    fn partial_trace_identity_for_two_spins() {
        let st = transverse_state(1.3, 2.1);
        let red = partial_trace_pair(&st.rho, 2, 1, 2).unwrap();
        assert!(red.max_abs_diff(&st.rho) == 0.0);
    }

    #[test]
    fn partial_trace_factors_product_state() {
        let st = transverse_state(0.7, 1.9);
        let mixed = ComplexMatrix::identity(2).scale_real(0.5);
        let rho3 = kron(&st.rho, &mixed);
        let red = partial_trace_pair(&rho3, 3, 1, 2).unwrap();
        assert!(red.max_abs_diff(&st.rho) < 1e-14);
        // and tracing out the pair leaves the mixed single spin
        let rho3b = kron(&mixed, &st.rho);
        let red_b = partial_trace_pair(&rho3b, 3, 2, 3).unwrap();
        assert!(red_b.max_abs_diff(&st.rho) < 1e-14);
    }

    #[test]
    fn partial_trace_preserves_trace_and_swap_symmetry() {
        // a swap-symmetric 3-spin state: symmetrized product
        let st = transverse_state(1.0, 3.0);
        let mixed = ComplexMatrix::identity(2).scale_real(0.5);
        let rho3 = kron(&st.rho, &mixed);
        let red = partial_trace_pair(&rho3, 3, 1, 2).unwrap();
        assert!((red.trace().re - 1.0).abs() < 1e-13);
        // the source pair state is swap symmetric, the reduction must be too
        for a in 0..4 {
            for b in 0..4 {
                let swap = |i: usize| ((i & 1) << 1) | (i >> 1);
                assert!((red[(a, b)] - red[(swap(a), swap(b))]).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn partial_trace_site_checks() {
        let st = transverse_state(1.0, 1.0);
        assert!(matches!(
            partial_trace_pair(&st.rho, 2, 2, 2),
            Err(Error::SiteOutOfRange { .. })
        ));
        assert!(matches!(
            partial_trace_pair(&st.rho, 3, 1, 2),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn magnetization_examples() {
        let mixed = ComplexMatrix::identity(4).scale_real(0.25);
        assert_eq!(magnetization(&mixed, 2).unwrap(), 0.0);

        let mut down = ComplexMatrix::zeros(4);
        down[(3, 3)] = Complex64::new(1.0, 0.0);
        assert_eq!(magnetization(&down, 2).unwrap(), -1.0);

        for d in [0.5, 2.0, 7.0] {
            let st = transverse_state(0.0, d);
            assert!(magnetization(&st.rho, 2).unwrap().abs() < 1e-14, "d={d}");
        }
    }

    #[test]
    fn magnetization_matches_expectation_of_total_iz() {
        let st = transverse_state(2.0, 3.0);
        let m = magnetization(&st.rho, 2).unwrap();
        let e = expectation(&st.rho, &total_iz(2)).unwrap();
        assert_eq!(m, e);
    }

    #[test]
    fn magnetization_monotone_and_bounded_in_beta() {
        let mut prev = 0.0;
        for i in 0..40 {
            let beta = 0.25 * i as f64;
            let m = magnetization(&transverse_state(beta, 2.0).rho, 2).unwrap();
            assert!(m <= prev + 1e-12, "monotone at beta={beta}");
            assert!((-1.0..=1e-12).contains(&m), "bounded at beta={beta}");
            prev = m;
        }
    }

    #[test]
    fn expectation_examples() {
        let st = transverse_state(1.0, 2.0);
        assert!((expectation(&st.rho, &ComplexMatrix::identity(4)).unwrap() - 1.0).abs() < 1e-13);

        let sy = ComplexMatrix::from_vec(
            2,
            vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, -1.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(0.0, 0.0),
            ],
        );
        let syy = kron(&sy, &sy);
        let mixed = ComplexMatrix::identity(4).scale_real(0.25);
        assert!(expectation(&mixed, &syy).unwrap().abs() < 1e-15);

        assert!(matches!(
            expectation(&st.rho, &ComplexMatrix::identity(8)),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
