//! Closed-form concurrence, magnetization, and entanglement boundary for
//! two spins in a transverse field (θ = π/2, φ = 0), cross-validated
//! against the numerical pipeline.
//!
//! The numerical route (Hamiltonian → Gibbs state → Wootters concurrence)
//! is the ground truth here. Two transcriptions of the closed forms are
//! plausible and they disagree; this module evaluates both, keeps the one
//! the numerics confirm, and reports the rejected reading instead of
//! silently patching it. See `validate_closed_forms`.

use std::sync::OnceLock;

use serde::Serialize;

use crate::entanglement::{concurrence, concurrence_signed};
use crate::error::{Error, Result};
use crate::spin::{pair_hamiltonian, ReducedParams};
use crate::thermal::{gibbs, magnetization};

/// One point of the entanglement phase boundary in the (β, d) plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhasePoint {
    pub d: f64,
    pub beta_c: f64,
}

fn check_domain(beta: f64, d: f64) -> Result<()> {
    if !(beta >= 0.0) {
        return Err(Error::DomainError(format!("beta must be >= 0, got {beta}")));
    }
    if !(d >= 0.0) {
        return Err(Error::DomainError(format!("d must be >= 0, got {d}")));
    }
    if beta == 0.0 && d == 0.0 {
        return Err(Error::DomainError(
            "(beta, d) = (0, 0) is outside the domain".into(),
        ));
    }
    Ok(())
}

/// Hyperbolic branch amplitudes A± entering the closed-form concurrence,
/// in the reading consistent with the spectrum of the thermal state
/// (branch term 3d·sinh(S/4), S = √(16β²+9d²)).
///
/// A₋ goes through the cancellation-free identity
/// A₋ = S / (2(W + 3d·sinh(S/4))) with W = √(16β² + 9d²cosh²(S/4)), and
/// the dominant exponential is factored out for large arguments.
pub fn a_plus_minus(beta: f64, d: f64) -> Result<(f64, f64)> {
    check_domain(beta, d)?;
    let s_tot = (16.0 * beta * beta + 9.0 * d * d).sqrt();
    let q = 0.25 * s_tot;
    let w = if q > 30.0 {
        // factor cosh(q) out of the inner radical so cosh² cannot overflow
        let ch = q.cosh();
        ch * (16.0 * beta * beta / (ch * ch) + 9.0 * d * d).sqrt()
    } else {
        (16.0 * beta * beta + 9.0 * d * d * q.cosh() * q.cosh()).sqrt()
    };
    let t = 3.0 * d * q.sinh();
    let a_plus = (w + t) / (2.0 * s_tot);
    let a_minus = s_tot / (2.0 * (w + t));
    Ok((a_plus, a_minus))
}

/// The alternate transcription of the branch amplitudes, with sinh(S/2)
/// in the branch term. Rejected by validation: its radicand goes negative
/// (the A₋ branch is not even real at (β,d) = (1,1)). Kept so the
/// validation report can document the discrepancy.
pub fn a_plus_minus_alt(beta: f64, d: f64) -> Result<(f64, f64)> {
    check_domain(beta, d)?;
    let s2 = 16.0 * beta * beta + 9.0 * d * d;
    let s_tot = s2.sqrt();
    let w = (16.0 * beta * beta + 9.0 * d * d * (0.25 * s_tot).cosh().powi(2)).sqrt();
    let core = 16.0 * beta * beta + 9.0 * d * d * (0.5 * s_tot).cosh();
    let branch = 6.0 * d * (0.5 * s_tot).sinh() * w;
    let a_plus = 0.5 * ((core + branch) / s2).sqrt();
    let a_minus = 0.5 * ((core - branch) / s2).sqrt();
    Ok((a_plus, a_minus))
}

/// Scaled exponential helper: hyperbolic sums are evaluated relative to
/// the dominant exponent m, so β, d up to the hundreds stay finite.
#[inline]
fn rescaled(x: f64, m: f64) -> f64 {
    (x - m).exp()
}

/// Closed-form concurrence at θ = π/2, φ = 0:
/// C = max{0, (A₊ − A₋ − e^{d/2}cosh(d/4)) / (e^{d/2}cosh(d/4) + cosh(S/4))}.
pub fn concurrence_closed(beta: f64, d: f64) -> Result<f64> {
    check_domain(beta, d)?;
    let s_tot = (16.0 * beta * beta + 9.0 * d * d).sqrt();
    let q = 0.25 * s_tot;
    let m = q.max(0.75 * d);
    // numerator and denominator scaled by 2e^{−m}; A₊ − A₋ = 3d·sinh(S/4)/S
    let branch = 3.0 * d * (rescaled(q, m) - rescaled(-q, m)) / s_tot;
    let gap = rescaled(0.75 * d, m) + rescaled(0.25 * d, m);
    let num = branch - gap;
    let den = gap + rescaled(q, m) + rescaled(-q, m);
    Ok((num / den).max(0.0))
}

/// Small-coupling limit of the closed form: the bracketed expression
/// becomes −1/(2cosh²(β/2)), strictly negative, so the state is always
/// separable and the concurrence is identically zero.
pub fn concurrence_small_d(beta: f64) -> f64 {
    let _ = beta;
    0.0
}

/// The two candidate readings of the closed-form magnetization
/// denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MagnetizationVariant {
    /// Denominator carries √(16β²+9d²); saturates to −1 as β → ∞.
    SqrtDenom,
    /// Denominator carries (16β²+9d²) itself; decays to 0 as β → ∞.
    PlainDenom,
}

impl MagnetizationVariant {
    pub fn name(self) -> &'static str {
        match self {
            MagnetizationVariant::SqrtDenom => "sqrt_denominator",
            MagnetizationVariant::PlainDenom => "plain_denominator",
        }
    }
}

/// Closed-form magnetization at θ = π/2, φ = 0 in the requested reading:
/// M_z = −4β·sinh(S/4) / (D·(cosh(S/4) + e^{d/2}cosh(d/4))) with
/// D = √(16β²+9d²) (SqrtDenom) or D = 16β²+9d² (PlainDenom).
pub fn magnetization_closed_variant(
    beta: f64,
    d: f64,
    variant: MagnetizationVariant,
) -> Result<f64> {
    if !(beta >= 0.0) {
        return Err(Error::DomainError(format!("beta must be >= 0, got {beta}")));
    }
    if !(d > 0.0) {
        return Err(Error::DomainError(format!("d must be > 0, got {d}")));
    }
    let s2 = 16.0 * beta * beta + 9.0 * d * d;
    let s_tot = s2.sqrt();
    let q = 0.25 * s_tot;
    let m = q.max(0.75 * d);
    let denom_scale = match variant {
        MagnetizationVariant::SqrtDenom => s_tot,
        MagnetizationVariant::PlainDenom => s2,
    };
    let num = -4.0 * beta * (rescaled(q, m) - rescaled(-q, m));
    let den = denom_scale
        * (rescaled(q, m) + rescaled(-q, m) + rescaled(0.75 * d, m) + rescaled(0.25 * d, m));
    Ok(num / den)
}

/// Numerical magnetization of the thermal pair state, the oracle the
/// variant selection defers to.
fn magnetization_numeric(beta: f64, d: f64) -> Result<f64> {
    let state = gibbs(&pair_hamiltonian(&ReducedParams::transverse(beta, d)?))?;
    magnetization(&state.rho, 2)
}

/// Pick the denominator reading that matches the numerical oracle; the
/// choice is made once per process and recorded in output metadata.
pub fn selected_magnetization_variant() -> MagnetizationVariant {
    static SELECTED: OnceLock<MagnetizationVariant> = OnceLock::new();
    *SELECTED.get_or_init(|| {
        let probes = [(1.0, 1.0), (2.0, 3.0), (5.0, 0.5), (0.5, 4.0)];
        let mut best = MagnetizationVariant::SqrtDenom;
        let mut best_dev = f64::INFINITY;
        for variant in [
            MagnetizationVariant::SqrtDenom,
            MagnetizationVariant::PlainDenom,
        ] {
            let dev = probes
                .iter()
                .map(|&(beta, d)| {
                    let closed = magnetization_closed_variant(beta, d, variant).unwrap();
                    let numeric = magnetization_numeric(beta, d).unwrap();
                    (closed - numeric).abs()
                })
                .fold(0.0, f64::max);
            if dev < best_dev {
                best_dev = dev;
                best = variant;
            }
        }
        best
    })
}

/// Closed-form magnetization in the oracle-selected reading.
pub fn magnetization_closed(beta: f64, d: f64) -> Result<f64> {
    magnetization_closed_variant(beta, d, selected_magnetization_variant())
}

/// Boundary residual A₊ − A₋ − e^{d/2}cosh(d/4); the entanglement
/// boundary is its zero set.
pub fn boundary_residual(beta: f64, d: f64) -> f64 {
    match a_plus_minus(beta, d) {
        Ok((ap, am)) => ap - am - (0.5 * d).exp() * (0.25 * d).cosh(),
        Err(_) => f64::NAN,
    }
}

/// Same zero set, rescaled by 2e^{−m} so that large (β, d) stay finite
/// during bracketing.
fn boundary_residual_scaled(beta: f64, d: f64) -> f64 {
    let s_tot = (16.0 * beta * beta + 9.0 * d * d).sqrt();
    let q = 0.25 * s_tot;
    let m = q.max(0.75 * d);
    3.0 * d * (rescaled(q, m) - rescaled(-q, m)) / s_tot
        - rescaled(0.75 * d, m)
        - rescaled(0.25 * d, m)
}

const BRACKET_LO: f64 = 1e-6;
const BRACKET_HI: f64 = 100.0;

/// Bisection on [lo, hi] down to floating resolution; the residual at
/// the returned point is then slope-limited, not tolerance-limited.
fn bisect(mut lo: f64, mut hi: f64, f: impl Fn(f64) -> f64) -> Result<f64> {
    let flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::NoRootInBracket { lo, hi });
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fmid = f(mid);
        if fmid == 0.0 {
            return Ok(mid);
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Critical β for a given coupling d from the closed-form boundary
/// condition, bisected on [1e-6, 100].
pub fn boundary_beta_analytic(d: f64) -> Result<PhasePoint> {
    if !(d > 0.0) {
        return Err(Error::DomainError(format!("boundary needs d > 0, got {d}")));
    }
    let beta_c = bisect(BRACKET_LO, BRACKET_HI, |beta| {
        boundary_residual_scaled(beta, d)
    })?;
    Ok(PhasePoint { d, beta_c })
}

/// Critical β from the numerical pipeline: the sign change of the
/// Wootters sum λ₁ − λ₂ − λ₃ − λ₄ of the thermal state.
pub fn boundary_beta_numeric(d: f64) -> Result<PhasePoint> {
    if !(d > 0.0) {
        return Err(Error::DomainError(format!("boundary needs d > 0, got {d}")));
    }
    let signed = |beta: f64| -> f64 {
        let params = ReducedParams::transverse(beta, d).expect("beta from bracket is nonnegative");
        let state = gibbs(&pair_hamiltonian(&params)).expect("pair Hamiltonian is Hermitian");
        concurrence_signed(&state.rho).expect("thermal state is a density matrix")
    };
    let beta_c = bisect(BRACKET_LO, BRACKET_HI, signed)?;
    Ok(PhasePoint { d, beta_c })
}

/// Critical coupling along a ray of fixed β/d. Both β and d scale as 1/T,
/// so a physical sample at fixed field and geometry moves along such a
/// ray as it cools; this turns the boundary into a critical temperature.
pub fn boundary_d_along_ray(beta_over_d: f64) -> Result<f64> {
    if !(beta_over_d > 0.0) {
        return Err(Error::DomainError(format!(
            "ray slope must be positive, got {beta_over_d}"
        )));
    }
    bisect(BRACKET_LO, BRACKET_HI, |d| {
        boundary_residual_scaled(beta_over_d * d, d)
    })
}

/// Comparison of the closed forms against the numerical pipeline on the
/// standard validation grid, plus the fate of the rejected transcription.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub grid_points: usize,
    pub max_concurrence_dev: f64,
    pub max_magnetization_dev: f64,
    pub concurrence_within_1e8: bool,
    pub magnetization_within_1e10: bool,
    pub magnetization_variant: MagnetizationVariant,
    pub alt_branch_real_everywhere: bool,
    pub notes: Vec<String>,
}

/// Run the closed forms against the numerical oracle over
/// β, d ∈ {0.5, 1.0, …, 10.0} (400 points).
pub fn validate_closed_forms() -> Result<ValidationReport> {
    let variant = selected_magnetization_variant();
    let mut max_c_dev: f64 = 0.0;
    let mut max_m_dev: f64 = 0.0;
    let mut alt_real = true;
    for bi in 1..=20 {
        for di in 1..=20 {
            let beta = 0.5 * bi as f64;
            let d = 0.5 * di as f64;
            let state = gibbs(&pair_hamiltonian(&ReducedParams::transverse(beta, d)?))?;
            let c_num = concurrence(&state.rho)?.concurrence;
            let m_num = magnetization(&state.rho, 2)?;
            let c_closed = concurrence_closed(beta, d)?;
            let m_closed = magnetization_closed_variant(beta, d, variant)?;
            max_c_dev = max_c_dev.max((c_closed - c_num).abs());
            max_m_dev = max_m_dev.max((m_closed - m_num).abs());
            let (ap_alt, am_alt) = a_plus_minus_alt(beta, d)?;
            if !ap_alt.is_finite() || !am_alt.is_finite() {
                alt_real = false;
            }
        }
    }
    let mut notes = Vec::new();
    notes.push(format!(
        "magnetization denominator: selected {} (the other reading fails saturation: it gives \
         ~0 instead of ~-1 for beta >> d)",
        variant.name()
    ));
    if !alt_real {
        notes.push(
            "alternate branch-amplitude transcription (sinh of S/2) rejected: its radicand goes \
             negative on the validation grid, so A- is not real there; production uses the \
             sinh(S/4) reading, which the numerical oracle confirms"
                .to_string(),
        );
    }
    Ok(ValidationReport {
        grid_points: 400,
        max_concurrence_dev: max_c_dev,
        max_magnetization_dev: max_m_dev,
        concurrence_within_1e8: max_c_dev <= 1e-8,
        magnetization_within_1e10: max_m_dev <= 1e-10,
        magnetization_variant: variant,
        alt_branch_real_everywhere: alt_real,
        notes,
    })
}

#[cfg(test)]
#[allow(clippy::excessive_precision)] // frozen oracle values keep their full digits
mod tests {
    use super::*;

    // 50-digit reference values from python/gen_reference_values.py.
    const A_PLUS_UNIT: f64 = 1.17408349375462994849772604292;
    const A_MINUS_UNIT: f64 = 0.212932045574134565756027862018;
    const BETA_C_UNIT: f64 = 2.27188320725683989426496474553;
    const C_REF_5_3: f64 = 0.345444023717290542900730711409;
    const M_REF_2_3: f64 = -0.421003638168418168757429286121;
    const M_REF_50_3: f64 = -0.998989035144037763912940209023;

    #[test]
    fn branch_amplitudes_at_unit_point() {
        let (ap, am) = a_plus_minus(1.0, 1.0).unwrap();
        assert!((ap - A_PLUS_UNIT).abs() < 1e-14);
        assert!((am - A_MINUS_UNIT).abs() < 1e-14);
    }

    #[test]
    fn branch_amplitudes_zero_field() {
        // β = 0: S = 3d, W = 3d·cosh(3d/4), so A± collapse to
        // (cosh ± sinh)(3d/4)/2 = e^{±3d/4}/2.
        for d in [0.5, 1.0, 2.0] {
            let (ap, am) = a_plus_minus(0.0, d).unwrap();
            assert!((ap - 0.5 * (0.75 * d).exp()).abs() < 1e-14 * ap, "d={d}");
            assert!((am - 0.5 * (-0.75 * d).exp()).abs() < 1e-14, "d={d}");
        }
    }

    #[test]
    fn branch_amplitudes_stay_finite_at_large_arguments() {
        let (ap, am) = a_plus_minus(40.0, 40.0).unwrap();
        assert!(ap.is_finite() && am.is_finite());
        assert!(ap > 0.0 && am > 0.0);
    }

    #[test]
    fn domain_errors_at_origin_and_negative_inputs() {
        assert!(matches!(a_plus_minus(0.0, 0.0), Err(Error::DomainError(_))));
        assert!(matches!(
            concurrence_closed(0.0, 0.0),
            Err(Error::DomainError(_))
        ));
        assert!(matches!(
            a_plus_minus(-1.0, 1.0),
            Err(Error::DomainError(_))
        ));
    }

    #[test]
    fn alt_transcription_goes_complex_at_unit_point() {
        let (_ap, am) = a_plus_minus_alt(1.0, 1.0).unwrap();
        assert!(
            am.is_nan(),
            "the rejected reading should go complex at (1,1)"
        );
    }

    #[test]
    fn closed_concurrence_zero_in_weak_regime() {
        assert_eq!(concurrence_closed(0.1, 0.1).unwrap(), 0.0);
        assert_eq!(concurrence_closed(0.5, 0.2).unwrap(), 0.0);
    }

    #[test]
    fn closed_concurrence_straddles_boundary_at_unit_coupling() {
        assert_eq!(concurrence_closed(2.26, 1.0).unwrap(), 0.0);
        let above = concurrence_closed(2.28, 1.0).unwrap();
        assert!((above - 1.0850845317213794e-3).abs() < 1e-12);
    }

    #[test]
    fn closed_concurrence_matches_reference_point() {
        let c = concurrence_closed(5.0, 3.0).unwrap();
        assert!((c - C_REF_5_3).abs() < 1e-14);
    }

    #[test]
    fn closed_concurrence_bounded_on_wide_grid() {
        for bi in 0..=20 {
            for di in 0..=20 {
                let beta = bi as f64;
                let d = di as f64;
                if beta == 0.0 && d == 0.0 {
                    continue;
                }
                let c = concurrence_closed(beta, d).unwrap();
                assert!((0.0..=1.0).contains(&c), "C out of range at ({beta},{d})");
            }
        }
    }

    #[test]
    fn small_coupling_limit_is_separable() {
        assert_eq!(concurrence_small_d(0.0), 0.0);
        assert_eq!(concurrence_small_d(10.0), 0.0);
        for beta in [0.1, 1.0, 5.0] {
            assert_eq!(concurrence_closed(beta, 1e-6).unwrap(), 0.0, "beta={beta}");
        }
        // the boundary diverges only logarithmically as d → 0:
        // β_c(1e-6) = 17.668, so β = 20 sits (barely) inside the
        // entangled phase even at this coupling. Reference value from
        // three independent routes (python/gen_reference_values.py).
        let c20 = concurrence_closed(20.0, 1e-6).unwrap();
        assert!((c20 - 3.3377690556375483e-8).abs() < 1e-20);
    }

    #[test]
    fn magnetization_variant_selection_prefers_sqrt_denominator() {
        assert_eq!(
            selected_magnetization_variant(),
            MagnetizationVariant::SqrtDenom
        );
    }

    #[test]
    fn magnetization_closed_examples() {
        assert_eq!(magnetization_closed(0.0, 3.0).unwrap(), 0.0);

        let m = magnetization_closed(2.0, 3.0).unwrap();
        assert!((m - M_REF_2_3).abs() < 1e-14);

        // saturation behavior separates the two readings at large β
        let sqrt_denom =
            magnetization_closed_variant(50.0, 3.0, MagnetizationVariant::SqrtDenom).unwrap();
        let plain_denom =
            magnetization_closed_variant(50.0, 3.0, MagnetizationVariant::PlainDenom).unwrap();
        assert!((sqrt_denom - M_REF_50_3).abs() < 1e-13);
        assert!(plain_denom.abs() < 0.01);

        assert!(matches!(
            magnetization_closed(1.0, 0.0),
            Err(Error::DomainError(_))
        ));
    }

    #[test]
    fn magnetization_closed_matches_numeric_oracle() {
        for &(beta, d) in &[(2.0, 3.0), (0.5, 1.0), (8.0, 2.0), (50.0, 3.0)] {
            let m_closed = magnetization_closed(beta, d).unwrap();
            let m_num = magnetization_numeric(beta, d).unwrap();
            assert!(
                (m_closed - m_num).abs() < 1e-10,
                "({beta},{d}): {m_closed} vs {m_num}"
            );
        }
    }

    #[test]
    fn analytic_boundary_at_unit_coupling() {
        let pt = boundary_beta_analytic(1.0).unwrap();
        assert!((pt.beta_c - BETA_C_UNIT).abs() < 1e-10);
        assert!(boundary_residual(pt.beta_c, 1.0).abs() <= 1e-10);
    }

    #[test]
    fn analytic_boundary_diverges_toward_zero_coupling() {
        let b001 = boundary_beta_analytic(0.01).unwrap().beta_c;
        let b01 = boundary_beta_analytic(0.1).unwrap().beta_c;
        let b1 = boundary_beta_analytic(1.0).unwrap().beta_c;
        assert!(b001 > b01 && b01 > b1);
    }

    #[test]
    fn numeric_boundary_brackets_published_value() {
        let pt = boundary_beta_numeric(1.0).unwrap();
        assert!((2.21..=2.31).contains(&pt.beta_c), "beta_c = {}", pt.beta_c);
    }

    #[test]
    fn numeric_and_analytic_boundaries_agree() {
        for d in [0.5, 1.0, 2.0, 5.0, 10.0] {
            let analytic = boundary_beta_analytic(d).unwrap().beta_c;
            let numeric = boundary_beta_numeric(d).unwrap().beta_c;
            assert!(
                (analytic - numeric).abs() <= 1e-6,
                "d={d}: analytic {analytic} vs numeric {numeric}"
            );
        }
    }

    #[test]
    fn boundary_is_decreasing_in_coupling() {
        let mut prev = f64::INFINITY;
        for i in 1..=20 {
            let d = 0.5 * i as f64;
            let beta_c = boundary_beta_analytic(d).unwrap().beta_c;
            assert!(beta_c < prev, "boundary must fall at d={d}");
            assert!(beta_c > 0.0);
            prev = beta_c;
        }
    }

    #[test]
    fn closed_concurrence_sign_consistent_with_boundary() {
        for d in [0.5, 1.0, 3.0, 7.0] {
            let beta_c = boundary_beta_analytic(d).unwrap().beta_c;
            assert_eq!(
                concurrence_closed(beta_c - 1e-9, d).unwrap(),
                0.0,
                "below, d={d}"
            );
            assert!(
                concurrence_closed(beta_c + 1e-9, d).unwrap() > 0.0,
                "above, d={d}"
            );
        }
    }

    #[test]
    fn concurrence_grows_along_cooling_rays_toward_plateau() {
        // along a ray of fixed d/β = r the concurrence is non-decreasing
        // in 1/T and bounded by its asymptotic plateau 3/√(16/r² + 9)
        for ratio in [3.0, 5.0, 10.0] {
            let plateau = 3.0 / f64::sqrt(16.0 / (ratio * ratio) + 9.0);
            let mut prev = -1.0;
            for i in 1..=60 {
                let d = 0.33 * i as f64;
                let beta = d / ratio;
                let c = concurrence_closed(beta, d).unwrap();
                assert!(
                    c >= prev - 1e-12,
                    "non-decreasing along ray {ratio} at d={d}"
                );
                assert!(c <= plateau + 1e-12, "bounded by plateau on ray {ratio}");
                prev = c;
            }
            assert!(prev > 0.0, "boundary crossed within range on ray {ratio}");
        }
    }

    #[test]
    fn ray_boundary_solver_matches_beta_boundary() {
        // crossing the boundary along β = r·d must satisfy the β-solver too
        for ratio in [2.0, 3.0, 6.0] {
            let d_c = boundary_d_along_ray(ratio).unwrap();
            let beta_c = boundary_beta_analytic(d_c).unwrap().beta_c;
            assert!((beta_c - ratio * d_c).abs() < 1e-8, "ratio={ratio}");
        }
    }

    #[test]
    fn validation_report_confirms_production_readings() {
        let report = validate_closed_forms().unwrap();
        assert_eq!(report.grid_points, 400);
        assert!(
            report.concurrence_within_1e8,
            "max dev {:e}",
            report.max_concurrence_dev
        );
        assert!(
            report.magnetization_within_1e10,
            "max dev {:e}",
            report.max_magnetization_dev
        );
        assert!(!report.alt_branch_real_everywhere);
        assert_eq!(
            report.magnetization_variant,
            MagnetizationVariant::SqrtDenom
        );
        assert!(report.notes.len() >= 2);
    }
}
