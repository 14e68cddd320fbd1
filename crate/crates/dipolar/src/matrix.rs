//! Dense square complex matrices.
//!
//! All Hamiltonians, density matrices, and operators in this crate are
//! square matrices of dimension 2^N stored row-major. Entries are
//! dimensionless: energies are divided by k_B·T before they get here.

use num_complex::Complex64;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use crate::error::{Error, Result};

/// Relative Hermiticity tolerance: max|A - A†| ≤ HERMITICITY_TOL · max(1, max|A|).
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Square dense complex matrix, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn diag_real(entries: &[f64]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, &x) in entries.iter().enumerate() {
            m[(i, i)] = Complex64::new(x, 0.0);
        }
        m
    }

    /// Build from row-major complex entries; panics unless `data` has dim² elements.
    pub fn from_vec(dim: usize, data: Vec<Complex64>) -> Self {
        assert_eq!(
            data.len(),
            dim * dim,
            "entry container must have dim^2 elements"
        );
        assert!(dim >= 1);
        Self { dim, data }
    }

    /// Build a matrix from real row-major entries.
    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim);
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = Complex64::new(x, 0.0);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conjugate(&self) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise deviation from `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// max|A - A†| over all entries.
    pub fn hermiticity_deviation(&self) -> f64 {
        let n = self.dim;
        let mut dev: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    /// Err(NotHermitian) unless max|A - A†| ≤ tol · max(1, max|A|).
    pub fn check_hermitian(&self) -> Result<()> {
        let dev = self.hermiticity_deviation();
        if dev > HERMITICITY_TOL * self.max_abs().max(1.0) {
            Err(Error::NotHermitian { deviation: dev })
        } else {
            Ok(())
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    pub fn add_assign_scaled(&mut self, other: &Self, factor: Complex64) {
        assert_eq!(self.dim, other.dim);
        for (a, b) in self.data.iter_mut().zip(other.data.iter()) {
            *a += b * factor;
        }
    }

    /// Maximum entry magnitude of the commutator [self, other].
    pub fn commutator_max_abs(&self, other: &Self) -> f64 {
        let ab = self * other;
        let ba = other * self;
        ab.max_abs_diff(&ba)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(rhs.data.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(rhs.data.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(
            self.dim, rhs.dim,
            "matrix product needs matching dimensions"
        );
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self[(i, k)];
                if aik == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += aik * rhs.data[k * n + j];
                }
            }
        }
        out
    }
}

/// Kronecker product: entry ((i·dim_b + k), (j·dim_b + l)) = a(i,j)·b(k,l).
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (na, nb) = (a.dim(), b.dim());
    let n = na * nb;
    let mut out = ComplexMatrix::zeros(n);
    for i in 0..na {
        for j in 0..na {
            let aij = a[(i, j)];
            if aij == Complex64::new(0.0, 0.0) {
                continue;
            }
            for k in 0..nb {
                for l in 0..nb {
                    out[(i * nb + k, j * nb + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sigma_y() -> ComplexMatrix {
        ComplexMatrix::from_vec(2, vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)])
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(kron(&i2, &i2), ComplexMatrix::identity(4));
    }

    #[test]
    fn kron_sigma_y_sigma_y_is_signed_antidiagonal() {
        let f = kron(&sigma_y(), &sigma_y());
        let expected = ComplexMatrix::from_real_rows(&[
            &[0.0, 0.0, 0.0, -1.0],
            &[0.0, 0.0, 1.0, 0.0],
            &[0.0, 1.0, 0.0, 0.0],
            &[-1.0, 0.0, 0.0, 0.0],
        ]);
        assert_eq!(f, expected);
    }

    #[test]
    fn kron_diag_with_identity() {
        let dz = ComplexMatrix::diag_real(&[1.0, -1.0]);
        let got = kron(&dz, &ComplexMatrix::identity(2));
        assert_eq!(got, ComplexMatrix::diag_real(&[1.0, 1.0, -1.0, -1.0]));
    }

    #[test]
    fn kron_is_associative_on_integer_matrices() {
        let a = ComplexMatrix::from_real_rows(&[&[1.0, 2.0], &[3.0, 4.0]]);
        let b = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[-1.0, 2.0]]);
        let d = ComplexMatrix::from_real_rows(&[&[2.0, 0.0], &[5.0, -3.0]]);
        let left = kron(&kron(&a, &b), &d);
        let right = kron(&a, &kron(&b, &d));
        assert_eq!(left, right);
    }

    #[test]
    fn hermiticity_check_catches_asymmetry() {
        let mut m = ComplexMatrix::identity(2);
        m[(0, 1)] = c(0.0, 1.0);
        m[(1, 0)] = c(0.0, 1.0); // should be -i for Hermitian
        assert!(matches!(
            m.check_hermitian(),
            Err(Error::NotHermitian { .. })
        ));
        assert!(sigma_y().check_hermitian().is_ok());
    }

    #[test]
    fn matmul_against_hand_product() {
        let a =
            ComplexMatrix::from_vec(2, vec![c(1.0, 1.0), c(0.0, 2.0), c(3.0, 0.0), c(1.0, -1.0)]);
        let b =
            ComplexMatrix::from_vec(2, vec![c(0.0, 1.0), c(1.0, 0.0), c(2.0, 0.0), c(0.0, -1.0)]);
        let p = &a * &b;
        assert_eq!(p[(0, 0)], c(-1.0, 5.0));
        assert_eq!(p[(0, 1)], c(3.0, 1.0));
        assert_eq!(p[(1, 0)], c(2.0, 1.0));
        assert_eq!(p[(1, 1)], c(2.0, -1.0));
    }

    #[test]
    fn dagger_and_trace() {
        let a =
            ComplexMatrix::from_vec(2, vec![c(1.0, 1.0), c(0.0, 2.0), c(3.0, 0.0), c(1.0, -1.0)]);
        let ad = a.dagger();
        assert_eq!(ad[(0, 1)], c(3.0, 0.0));
        assert_eq!(ad[(1, 0)], c(0.0, -2.0));
        assert_eq!(a.trace(), c(2.0, 0.0));
    }
}
