//! Dense Hermitian matrices for reduced states.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// A dense `dim × dim` complex matrix holding a (possibly joint) reduced state.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    entries: DMatrix<Complex64>,
}

impl DensityMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            entries: DMatrix::zeros(dim, dim),
        }
    }

    /// `I_dim / dim`.
    pub fn maximally_mixed(dim: usize) -> Self {
        let w = Complex64::new(1.0 / dim as f64, 0.0);
        Self {
            entries: DMatrix::from_diagonal_element(dim, dim, w),
        }
    }

    /// `|v⟩⟨v|`.
    pub fn projector(v: &[Complex64]) -> Self {
        let n = v.len();
        Self {
            entries: DMatrix::from_fn(n, n, |r, c| v[r] * v[c].conj()),
        }
    }

    pub fn from_matrix(entries: DMatrix<Complex64>) -> Result<Self> {
        if entries.nrows() != entries.ncols() {
            return Err(Error::DimensionMismatch(format!(
                "density matrix must be square, got {}x{}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        Ok(Self { entries })
    }

    /// Row-major construction from nested rows.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("rows must form a square matrix".into()));
        }
        Ok(Self {
            entries: DMatrix::from_fn(n, n, |r, c| rows[r][c]),
        })
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[(row, col)]
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub(crate) fn add_to(&mut self, row: usize, col: usize, v: Complex64) {
        self.entries[(row, col)] += v;
    }

    /// Adds `weight · other` in place.
    pub fn add_scaled(&mut self, weight: f64, other: &DensityMatrix) -> Result<()> {
        self.check_same_dim(other)?;
        self.entries += other.entries.map(|z| z * weight);
        Ok(())
    }

    pub fn trace(&self) -> Complex64 {
        self.entries.trace()
    }

    /// Maximum absolute entrywise difference; the deviation metric used throughout.
    pub fn max_abs_diff(&self, other: &DensityMatrix) -> Result<f64> {
        self.check_same_dim(other)?;
        Ok(self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Largest `|ρ_rc − conj(ρ_cr)|`.
    pub fn hermiticity_dev(&self) -> f64 {
        let n = self.dim();
        let mut dev = 0.0f64;
        for r in 0..n {
            for c in r..n {
                dev = dev.max((self.entries[(r, c)] - self.entries[(c, r)].conj()).norm());
            }
        }
        dev
    }

    /// Smallest eigenvalue of the Hermitian part. Diagnostic mode only.
    pub fn min_eigenvalue(&self) -> f64 {
        let herm = self.hermitian_part();
        herm.symmetric_eigenvalues()
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }

    /// Trace norm `‖ρ − σ‖₁` of the Hermitian part of the difference. Diagnostic mode only.
    pub fn trace_norm_diff(&self, other: &DensityMatrix) -> Result<f64> {
        self.check_same_dim(other)?;
        let diff = DensityMatrix {
            entries: &self.entries - &other.entries,
        };
        Ok(diff
            .hermitian_part()
            .symmetric_eigenvalues()
            .iter()
            .map(|e| e.abs())
            .sum())
    }

    fn hermitian_part(&self) -> DMatrix<Complex64> {
        (&self.entries + self.entries.adjoint()).map(|z| z * 0.5)
    }

    fn check_same_dim(&self, other: &DensityMatrix) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(format!(
                "matrix dims {} and {} differ",
                self.dim(),
                other.dim()
            )));
        }
        Ok(())
    }
}
