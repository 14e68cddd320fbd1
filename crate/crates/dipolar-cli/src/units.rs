//! Conversion between laboratory parameters (gyromagnetic ratio, field,
//! distance, temperature) and the reduced (β, d) pair. All unit handling
//! lives here; the library itself is dimensionless.

use dipolar::analytic::boundary_d_along_ray;
use dipolar::error::Result;

/// Planck constant, J·s (exact SI).
pub const PLANCK_H: f64 = 6.62607015e-34;
/// Boltzmann constant, J/K (exact SI).
pub const BOLTZMANN_KB: f64 = 1.380649e-23;
/// ħ, J·s.
pub const HBAR: f64 = PLANCK_H / (2.0 * std::f64::consts::PI);
/// μ₀/4π, T·m/A.
pub const MU0_OVER_4PI: f64 = 1e-7;

/// Dipole-dipole coupling frequency (ordinary frequency, kHz) of two
/// like spins with gyromagnetic ratio γ (kHz/G) at distance r (nm):
/// f = (μ₀/4π)·ħ·γ_rad² / (2π·r³).
pub fn dipolar_frequency_khz(gamma_khz_per_gauss: f64, distance_nm: f64) -> f64 {
    // kHz/G → rad/s/T: ×1e3 (Hz), ×2π (angular), ×1e4 (G per T)
    let gamma_rad = gamma_khz_per_gauss * 1e3 * 2.0 * std::f64::consts::PI * 1e4;
    let r = distance_nm * 1e-9;
    MU0_OVER_4PI * HBAR * gamma_rad * gamma_rad / (2.0 * std::f64::consts::PI * r * r * r) / 1e3
}

/// Reduced energy h·f/(k_B·T) for an ordinary frequency in kHz and a
/// temperature in μK. Applied to ω₀ it yields β, to the dipolar
/// frequency it yields d.
pub fn reduced_energy(frequency_khz: f64, temperature_uk: f64) -> f64 {
    PLANCK_H * frequency_khz * 1e3 / (BOLTZMANN_KB * temperature_uk * 1e-6)
}

/// Critical temperature (μK) below which the pair entangles, for a
/// Zeeman frequency ω₀ and a dipolar frequency (both kHz). Cooling at
/// fixed field moves along the ray β/d = ω₀/f_dd in the (β, d) plane;
/// the crossing of the boundary fixes T_c.
pub fn critical_temperature_uk(omega0_khz: f64, dipolar_khz: f64) -> Result<f64> {
    let d_c = boundary_d_along_ray(omega0_khz / dipolar_khz)?;
    Ok(PLANCK_H * dipolar_khz * 1e3 / (BOLTZMANN_KB * d_c) / 1e-6)
}
