//! Spin operators and the reduced Hamiltonian h = H/(k_B·T) for N
//! dipolar-coupled spins 1/2 in an external field along z.
//!
//! Conventions, fixed so that golden outputs are reproducible:
//! basis |m₁m₂…⟩ with spin-up first and site 1 as the leftmost Kronecker
//! factor; ħ = 1; β and the dipolar constant d carry all temperature
//! dependence. The dipolar coupling keeps all terms: the secular part,
//! the single-flip part, and the double-flip part.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{kron, ComplexMatrix};

/// Single-site operator selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinAxisOp {
    /// I_z = diag(+1/2, −1/2)
    Z,
    /// Raising operator I⁺
    Plus,
    /// Lowering operator I⁻
    Minus,
}

fn single_spin(which: SpinAxisOp) -> ComplexMatrix {
    match which {
        SpinAxisOp::Z => ComplexMatrix::diag_real(&[0.5, -0.5]),
        SpinAxisOp::Plus => ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]),
        SpinAxisOp::Minus => ComplexMatrix::from_real_rows(&[&[0.0, 0.0], &[1.0, 0.0]]),
    }
}

/// Embed a single-spin operator at `site` (1-based) into the 2^n space.
pub fn spin_operator(n_spins: usize, site: usize, which: SpinAxisOp) -> Result<ComplexMatrix> {
    if site < 1 || site > n_spins {
        return Err(Error::SiteOutOfRange { site, n_spins });
    }
    let mut op = if site == 1 {
        single_spin(which)
    } else {
        ComplexMatrix::identity(2)
    };
    for s in 2..=n_spins {
        let factor = if s == site {
            single_spin(which)
        } else {
            ComplexMatrix::identity(2)
        };
        op = kron(&op, &factor);
    }
    Ok(op)
}

/// Total I_z observable, Σ_k I_k^z; diagonal in the product basis.
pub fn total_iz(n_spins: usize) -> ComplexMatrix {
    let dim = 1usize << n_spins;
    let mut m = ComplexMatrix::zeros(dim);
    for idx in 0..dim {
        m[(idx, idx)] = Complex64::new(basis_iz(n_spins, idx), 0.0);
    }
    m
}

/// Total-I_z eigenvalue of basis state `idx` (bit 0 ↔ up, site 1 leftmost).
pub fn basis_iz(n_spins: usize, idx: usize) -> f64 {
    let ups = (n_spins as u32 - (idx as u64).count_ones()) as f64;
    ups - n_spins as f64 / 2.0
}

/// Zeeman part in reduced units: β·Σ_k I_k^z.
pub fn zeeman_hamiltonian(n_spins: usize, beta: f64) -> ComplexMatrix {
    total_iz(n_spins).scale_real(beta)
}

/// Spherical coordinates of one inter-spin vector relative to the field
/// axis z; r is in units of the reference distance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairCoords {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
}

/// N sites with pairwise coordinates, ordered (j,k) with j < k
/// lexicographically.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinGeometry {
    n_spins: usize,
    pair_coords: Vec<PairCoords>,
}

impl SpinGeometry {
    pub fn new(n_spins: usize, pair_coords: Vec<PairCoords>) -> Result<Self> {
        if n_spins < 1 {
            return Err(Error::DomainError("need at least one spin".into()));
        }
        let expected = n_spins * (n_spins - 1) / 2;
        if pair_coords.len() != expected {
            return Err(Error::GeometryMismatch {
                expected,
                actual: pair_coords.len(),
            });
        }
        for pc in &pair_coords {
            if !(pc.r > 0.0) {
                return Err(Error::DomainError(format!(
                    "pair distance must be positive, got {}",
                    pc.r
                )));
            }
            if !(0.0..=std::f64::consts::PI).contains(&pc.theta) {
                return Err(Error::DomainError(format!(
                    "theta must lie in [0, pi], got {}",
                    pc.theta
                )));
            }
            if !(0.0..2.0 * std::f64::consts::PI).contains(&pc.phi) {
                return Err(Error::DomainError(format!(
                    "phi must lie in [0, 2pi), got {}",
                    pc.phi
                )));
            }
        }
        Ok(Self {
            n_spins,
            pair_coords,
        })
    }

    /// Two spins at unit separation; the pair orientation for n=2 comes
    /// from `ReducedParams`, so the stored angles are placeholders.
    pub fn two_spins() -> Self {
        Self {
            n_spins: 2,
            pair_coords: vec![PairCoords {
                r: 1.0,
                theta: 0.0,
                phi: 0.0,
            }],
        }
    }

    /// Build from Cartesian site coordinates (units of the reference
    /// distance); pair angles are measured against the z axis.
    pub fn from_sites(sites: &[[f64; 3]]) -> Result<Self> {
        let n = sites.len();
        if n < 1 {
            return Err(Error::DomainError(
                "geometry needs at least one site".into(),
            ));
        }
        let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
        for j in 0..n {
            for k in j + 1..n {
                let dx = sites[k][0] - sites[j][0];
                let dy = sites[k][1] - sites[j][1];
                let dz = sites[k][2] - sites[j][2];
                let r = (dx * dx + dy * dy + dz * dz).sqrt();
                if !(r > 0.0) {
                    return Err(Error::DomainError(format!(
                        "sites {} and {} coincide",
                        j + 1,
                        k + 1
                    )));
                }
                let theta = (dz / r).clamp(-1.0, 1.0).acos();
                let mut phi = dy.atan2(dx);
                if phi < 0.0 {
                    phi += 2.0 * std::f64::consts::PI;
                }
                if phi >= 2.0 * std::f64::consts::PI {
                    phi = 0.0;
                }
                pairs.push(PairCoords { r, theta, phi });
            }
        }
        Self::new(n, pairs)
    }

    pub fn n_spins(&self) -> usize {
        self.n_spins
    }

    pub fn pair_coords(&self) -> &[PairCoords] {
        &self.pair_coords
    }
}

/// Dimensionless model parameters: β = ω₀/(k_B·T) and the dipolar
/// constant at the reference distance, plus the field orientation used
/// for the two-spin case.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedParams {
    pub beta: f64,
    pub d_ref: f64,
    pub theta: f64,
    pub phi: f64,
}

impl ReducedParams {
    /// Negative β (reversed field) is rejected here rather than silently
    /// remapped; the accepted domain is β ≥ 0, d_ref ≥ 0.
    pub fn new(beta: f64, d_ref: f64, theta: f64, phi: f64) -> Result<Self> {
        if !(beta >= 0.0) {
            return Err(Error::DomainError(format!("beta must be >= 0, got {beta}")));
        }
        if !(d_ref >= 0.0) {
            return Err(Error::DomainError(format!("d must be >= 0, got {d_ref}")));
        }
        Ok(Self {
            beta,
            d_ref,
            theta,
            phi,
        })
    }

    pub fn transverse(beta: f64, d_ref: f64) -> Result<Self> {
        Self::new(beta, d_ref, std::f64::consts::FRAC_PI_2, 0.0)
    }
}

/// 4×4 coupling matrix for one pair, in the pair product basis
/// (↑↑, ↑↓, ↓↑, ↓↓), built from the single-spin operator algebra.
fn pair_coupling(theta: f64, phi: f64) -> ComplexMatrix {
    let iz = single_spin(SpinAxisOp::Z);
    let ip = single_spin(SpinAxisOp::Plus);
    let im = single_spin(SpinAxisOp::Minus);

    let cos_t = theta.cos();
    let secular_coeff = 1.0 - 3.0 * cos_t * cos_t;
    let single_coeff = -0.75 * (2.0 * theta).sin();
    let double_coeff = -0.75 * theta.sin() * theta.sin();

    let flip_flop = &kron(&ip, &im) + &kron(&im, &ip);
    let mut h = &kron(&iz, &iz) - &flip_flop.scale_real(0.25);
    h = h.scale_real(secular_coeff);

    let e_miphi = Complex64::from_polar(1.0, -phi);
    let single = &kron(&iz, &ip) + &kron(&ip, &iz);
    let single_term = single.scale(e_miphi * single_coeff);
    h = &h + &(&single_term + &single_term.dagger());

    let e_m2iphi = Complex64::from_polar(1.0, -2.0 * phi);
    let double_term = kron(&ip, &ip).scale(e_m2iphi * double_coeff);
    h = &h + &(&double_term + &double_term.dagger());

    h
}

/// Scatter a 4×4 pair block onto sites (j,k) of the 2^n space, summing
/// over the other spins' configurations.
fn embed_pair_block(h: &mut ComplexMatrix, block: &ComplexMatrix, n: usize, j: usize, k: usize) {
    debug_assert!(j < k && k <= n);
    let shift_j = n - j; // bit position of site j (site 1 = MSB)
    let shift_k = n - k;
    let env_sites: Vec<usize> = (1..=n).filter(|&s| s != j && s != k).collect();
    let env_count = 1usize << env_sites.len();
    for env in 0..env_count {
        let mut base = 0usize;
        for (pos, &s) in env_sites.iter().enumerate() {
            if (env >> pos) & 1 == 1 {
                base |= 1 << (n - s);
            }
        }
        for a in 0..4 {
            for b in 0..4 {
                let v = block[(a, b)];
                if v == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let row = base | ((a >> 1) << shift_j) | ((a & 1) << shift_k);
                let col = base | ((b >> 1) << shift_j) | ((b & 1) << shift_k);
                h[(row, col)] += v;
            }
        }
    }
}

/// Full dipolar Hamiltonian in reduced units, summed over pairs j < k
/// with coupling d_jk = d_ref/r_jk³. For two spins the orientation comes
/// from `params`; for larger systems each pair uses its own geometry
/// angles.
pub fn dipolar_hamiltonian(geom: &SpinGeometry, params: &ReducedParams) -> Result<ComplexMatrix> {
    let n = geom.n_spins();
    let expected = n * (n - 1) / 2;
    if geom.pair_coords().len() != expected {
        return Err(Error::GeometryMismatch {
            expected,
            actual: geom.pair_coords().len(),
        });
    }
    let dim = 1usize << n;
    let mut h = ComplexMatrix::zeros(dim);
    let mut pair_idx = 0usize;
    for j in 1..=n {
        for k in j + 1..=n {
            let pc = geom.pair_coords()[pair_idx];
            pair_idx += 1;
            let coupling = params.d_ref / (pc.r * pc.r * pc.r);
            if coupling == 0.0 {
                continue;
            }
            let (theta, phi) = if n == 2 {
                (params.theta, params.phi)
            } else {
                (pc.theta, pc.phi)
            };
            let block = pair_coupling(theta, phi).scale_real(coupling);
            embed_pair_block(&mut h, &block, n, j, k);
        }
    }
    Ok(h)
}

/// h = h_z + h_dd, Hermitian, in reduced units.
pub fn total_hamiltonian(geom: &SpinGeometry, params: &ReducedParams) -> Result<ComplexMatrix> {
    let hdd = dipolar_hamiltonian(geom, params)?;
    Ok(&zeeman_hamiltonian(geom.n_spins(), params.beta) + &hdd)
}

/// Two-spin reduced Hamiltonian at the given parameters; the workhorse
/// of every sweep.
pub fn pair_hamiltonian(params: &ReducedParams) -> ComplexMatrix {
    total_hamiltonian(&SpinGeometry::two_spins(), params)
        .expect("two-spin geometry is always consistent")
}
