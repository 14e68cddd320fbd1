//! Hermitian eigendecomposition and spectral matrix functions.
//!
//! The solver reduces a complex Hermitian matrix to real symmetric
//! tridiagonal form with Householder reflections, rotates the subdiagonal
//! real with a diagonal phase similarity, and diagonalizes with the
//! implicit-shift QL iteration, accumulating eigenvectors throughout.
//! Eigenvalues come back ascending with stable tie order, so downstream
//! output is reproducible run to run.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Result of a Hermitian eigendecomposition: A = V diag(λ) V†.
#[derive(Debug, Clone)]
pub struct HermitianEigSystem {
    /// Ascending real eigenvalues.
    pub eigenvalues: Vec<f64>,
    /// Unitary matrix whose columns are the corresponding eigenvectors.
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEigSystem {
    /// V diag(f(λ)) V†.
    pub fn recompose(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let v = &self.eigenvectors;
        let n = v.dim();
        let mut scaled = v.clone();
        for (k, &lam) in self.eigenvalues.iter().enumerate() {
            let fk = f(lam);
            for i in 0..n {
                scaled[(i, k)] = v[(i, k)] * fk;
            }
        }
        &scaled * &v.dagger()
    }
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Fails with `NotHermitian` when the input violates the Hermiticity
/// tolerance. Panics only if the QL iteration fails to converge, which
/// does not happen for finite Hermitian input.
pub fn herm_eig(a: &ComplexMatrix) -> Result<HermitianEigSystem> {
    a.check_hermitian()?;
    let n = a.dim();
    if n == 1 {
        return Ok(HermitianEigSystem {
            eigenvalues: vec![a[(0, 0)].re],
            eigenvectors: ComplexMatrix::identity(1),
        });
    }

    let mut work = a.clone();
    // Householder vectors (and their τ) for the later Q accumulation.
    let mut reflectors: Vec<Option<(Vec<Complex64>, f64)>> = Vec::new();

    for k in 0..n.saturating_sub(2) {
        let m = n - k - 1;
        let below: f64 = (k + 2..n).map(|i| work[(i, k)].norm()).sum();
        if below == 0.0 {
            reflectors.push(None);
            continue;
        }
        let mut u: Vec<Complex64> = (0..m).map(|i| work[(k + 1 + i, k)]).collect();
        let norm = u.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let phase = if u[0].norm() > 0.0 {
            u[0] / u[0].norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        let alpha = -phase * norm;
        u[0] -= alpha;
        let unorm_sqr: f64 = u.iter().map(|z| z.norm_sqr()).sum();
        if unorm_sqr == 0.0 {
            reflectors.push(None);
            continue;
        }
        let tau = 2.0 / unorm_sqr;

        // p = τ·B·u on the trailing block B = work[k+1.., k+1..]
        let mut p = vec![ZERO; m];
        for i in 0..m {
            let mut acc = ZERO;
            for j in 0..m {
                acc += work[(k + 1 + i, k + 1 + j)] * u[j];
            }
            p[i] = acc * tau;
        }
        // w = p − (τ/2)(u†p)·u ; the scalar is real for Hermitian blocks
        let udp: Complex64 = u.iter().zip(p.iter()).map(|(ui, pi)| ui.conj() * pi).sum();
        let kappa = 0.5 * tau * udp.re;
        let w: Vec<Complex64> = p
            .iter()
            .zip(u.iter())
            .map(|(pi, ui)| pi - ui * kappa)
            .collect();
        // B ← B − u w† − w u†
        for i in 0..m {
            for j in 0..m {
                let delta = u[i] * w[j].conj() + w[i] * u[j].conj();
                work[(k + 1 + i, k + 1 + j)] -= delta;
            }
        }
        work[(k + 1, k)] = alpha;
        work[(k, k + 1)] = alpha.conj();
        for i in k + 2..n {
            work[(i, k)] = ZERO;
            work[(k, i)] = ZERO;
        }
        reflectors.push(Some((u, tau)));
    }

    // Accumulate Q = H_0 H_1 ··· H_{n-3}
    let mut z = ComplexMatrix::identity(n);
    for k in (0..reflectors.len()).rev() {
        if let Some((u, tau)) = &reflectors[k] {
            let m = u.len();
            for col in 0..n {
                let mut s = ZERO;
                for i in 0..m {
                    s += u[i].conj() * z[(k + 1 + i, col)];
                }
                let s = s * *tau;
                for i in 0..m {
                    let delta = u[i] * s;
                    z[(k + 1 + i, col)] -= delta;
                }
            }
        }
    }

    // Diagonal phase similarity making the subdiagonal real non-negative;
    // fold the phases into the accumulated columns.
    let mut d: Vec<f64> = (0..n).map(|i| work[(i, i)].re).collect();
    let mut e = vec![0.0f64; n];
    let mut col_phase = vec![Complex64::new(1.0, 0.0); n];
    for i in 0..n - 1 {
        let t = work[(i + 1, i)];
        let mag = t.norm();
        e[i] = mag;
        col_phase[i + 1] = if mag > 0.0 {
            t / mag * col_phase[i]
        } else {
            col_phase[i]
        };
    }
    for (i, ph) in col_phase.iter().enumerate() {
        if (ph - Complex64::new(1.0, 0.0)).norm() > 0.0 {
            for row in 0..n {
                let v = z[(row, i)] * ph;
                z[(row, i)] = v;
            }
        }
    }

    ql_implicit(&mut d, &mut e, &mut z);

    // Ascending sort, ties by original index: deterministic output ordering.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).unwrap().then(i.cmp(&j)));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let mut eigenvectors = ComplexMatrix::zeros(n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..n {
            eigenvectors[(row, new_col)] = z[(row, old_col)];
        }
    }

    Ok(HermitianEigSystem {
        eigenvalues,
        eigenvectors,
    })
}

/// Implicit-shift QL on a real symmetric tridiagonal (d, e), rotations
/// accumulated into the columns of `z`. e[i] couples i and i+1.
fn ql_implicit(d: &mut [f64], e: &mut [f64], z: &mut ComplexMatrix) {
    let n = d.len();
    let eps = f64::EPSILON;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            assert!(iter <= 50, "tridiagonal QL iteration failed to converge");
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + if g >= 0.0 { r } else { -r });
            let mut s = 1.0f64;
            let mut c = 1.0f64;
            let mut p = 0.0f64;
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for row in 0..z.dim() {
                    let zf = z[(row, i + 1)];
                    z[(row, i + 1)] = z[(row, i)] * s + zf * c;
                    z[(row, i)] = z[(row, i)] * c - zf * s;
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

/// V diag(f(λ)) V† for Hermitian input; the result is Hermitian when f is real.
pub fn spectral_fn(a: &ComplexMatrix, f: impl Fn(f64) -> f64) -> Result<ComplexMatrix> {
    Ok(herm_eig(a)?.recompose(f))
}

/// Eigenvalue floor below which `psd_sqrt` rejects the input outright.
pub const PSD_REJECT_TOL: f64 = -1e-8;

/// Hermitian PSD square root: B with B² = A. Eigenvalues in [−1e-8, 0)
/// are treated as roundoff and clamped to zero; anything lower is an
/// error. Eigenvalues within a few ulps of zero relative to the largest
/// one are also clamped: square-rooting that noise would inflate it from
/// ~1e-16 to ~1e-8 and pollute rank-deficient square roots.
pub fn psd_sqrt(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = herm_eig(a)?;
    let min = eig
        .eigenvalues
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min);
    if min < PSD_REJECT_TOL {
        return Err(Error::NotPsd {
            min_eigenvalue: min,
        });
    }
    let max = eig.eigenvalues.iter().cloned().fold(0.0, f64::max);
    let floor = 8.0 * f64::EPSILON * max;
    Ok(eig.recompose(|lam| if lam <= floor { 0.0 } else { lam.sqrt() }))
}

/// Singular values of a square matrix, descending, via the Hermitian
/// eigenvalues of [[0, B], [B†, 0]] (which are ±σ). This keeps small
/// singular values accurate to ~machine epsilon absolutely, unlike
/// square-rooting the eigenvalues of B†B.
pub fn singular_values(b: &ComplexMatrix) -> Vec<f64> {
    let n = b.dim();
    let mut embed = ComplexMatrix::zeros(2 * n);
    for i in 0..n {
        for j in 0..n {
            embed[(i, n + j)] = b[(i, j)];
            embed[(n + j, i)] = b[(i, j)].conj();
        }
    }
    let eig = herm_eig(&embed).expect("embedding is Hermitian by construction");
    (0..n)
        .map(|i| eig.eigenvalues[2 * n - 1 - i].max(0.0))
        .collect()
}
