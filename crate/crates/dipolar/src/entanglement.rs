//! Wootters concurrence for two-spin density matrices.

use crate::eig::{herm_eig, psd_sqrt, singular_values};
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Concurrence plus the four sorted λ values behind it.
#[derive(Debug, Clone, PartialEq)]
pub struct ConcurrenceResult {
    /// max(0, λ₁ − λ₂ − λ₃ − λ₄), clamped to [0, 1].
    pub concurrence: f64,
    /// Non-negative, descending.
    pub lambdas: [f64; 4],
}

/// σ_y ⊗ σ_y, the two-spin flip operator.
fn flip_operator() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[
        &[0.0, 0.0, 0.0, -1.0],
        &[0.0, 0.0, 1.0, 0.0],
        &[0.0, 1.0, 0.0, 0.0],
        &[-1.0, 0.0, 0.0, 0.0],
    ])
}

/// Spin-flipped state ρ̃ = (σ_y⊗σ_y) ρ̄ (σ_y⊗σ_y), with ρ̄ the entrywise
/// conjugate in the computational basis.
pub fn spin_flip(rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            actual: rho.dim(),
        });
    }
    let f = flip_operator();
    Ok(&(&f * &rho.conjugate()) * &f)
}

fn validate_density_matrix(rho: &ComplexMatrix) -> Result<()> {
    rho.check_hermitian()
        .map_err(|e| Error::NotDensityMatrix(e.to_string()))?;
    let tr = rho.trace();
    if (tr.re - 1.0).abs() > 1e-8 || tr.im.abs() > 1e-10 {
        return Err(Error::NotDensityMatrix(format!("trace = {tr}, expected 1")));
    }
    let eig = herm_eig(rho).map_err(|e| Error::NotDensityMatrix(e.to_string()))?;
    if eig.eigenvalues[0] < -1e-8 {
        return Err(Error::NotDensityMatrix(format!(
            "negative eigenvalue {:e}",
            eig.eigenvalues[0]
        )));
    }
    Ok(())
}

/// Wootters concurrence of a two-spin density matrix.
///
/// The λᵢ are the square roots of the eigenvalues of √ρ·ρ̃·√ρ, computed
/// as the singular values of √ρ̃·√ρ (whose Gram matrix is exactly that
/// product). Going through singular values keeps the small λᵢ accurate
/// to machine epsilon absolutely; square-rooting near-zero eigenvalues
/// would blow their roundoff up to ~1e-8.
pub fn concurrence(rho: &ComplexMatrix) -> Result<ConcurrenceResult> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            actual: rho.dim(),
        });
    }
    validate_density_matrix(rho)?;
    let flipped = spin_flip(rho)?;
    let root = psd_sqrt(rho).map_err(|e| Error::NotDensityMatrix(e.to_string()))?;
    let root_flipped = psd_sqrt(&flipped).map_err(|e| Error::NotDensityMatrix(e.to_string()))?;
    let b = &root_flipped * &root;
    let sv = singular_values(&b);
    let lambdas = [sv[0], sv[1], sv[2], sv[3]];
    let raw = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
    Ok(ConcurrenceResult {
        concurrence: raw.clamp(0.0, 1.0),
        lambdas,
    })
}

/// Signed Wootters sum λ₁ − λ₂ − λ₃ − λ₄ before the max(0, ·); the
/// quantity whose sign change locates the entanglement boundary.
pub fn concurrence_signed(rho: &ComplexMatrix) -> Result<f64> {
    let r = concurrence(rho)?;
    Ok(r.lambdas[0] - r.lambdas[1] - r.lambdas[2] - r.lambdas[3])
}

/// Closed-form concurrence for X-shaped states (nonzero entries only on
/// the diagonal and anti-diagonal): 2·max(0, |ρ₁₄|−√(ρ₂₂ρ₃₃), |ρ₂₃|−√(ρ₁₁ρ₄₄)).
pub fn concurrence_x_state(rho: &ComplexMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            actual: rho.dim(),
        });
    }
    let mut max_off: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            if i != j && i + j != 3 {
                max_off = max_off.max(rho[(i, j)].norm());
            }
        }
    }
    if max_off > 1e-12 {
        return Err(Error::NotXState { max_off });
    }
    let p = |i: usize| rho[(i, i)].re.max(0.0);
    let c_outer = rho[(0, 3)].norm() - (p(1) * p(2)).sqrt();
    let c_inner = rho[(1, 2)].norm() - (p(0) * p(3)).sqrt();
    Ok(2.0 * c_outer.max(c_inner).max(0.0))
}
