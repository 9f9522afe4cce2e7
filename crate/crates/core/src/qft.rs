//! Dense quantum Fourier transform over a group.
//!
//! Row `g` of the matrix is the image of `|g⟩`: `M[g, g'] = τ^g(g')`. As an
//! amplitude-vector transform, `out[g'] = Σ_g M[g, g'] · a[g]`, i.e.
//! `out = Mᵀ a`.

use num_complex::Complex64;
use serde::Serialize;

use crate::linalg::{self, CMatrix};
use crate::representation::IrrepSet;

#[derive(Debug, Clone, PartialEq)]
pub struct FourierMatrix {
    entries: CMatrix,
}

impl FourierMatrix {
    pub fn from_entries(entries: CMatrix) -> Self {
        assert!(entries.is_square(), "Fourier matrix must be square");
        FourierMatrix { entries }
    }

    pub fn entries(&self) -> &CMatrix {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.nrows()
    }

    /// Conjugate transpose: entry `[g, g'] = conj(M[g', g])`.
    pub fn adjoint(&self) -> FourierMatrix {
        FourierMatrix {
            entries: self.entries.adjoint(),
        }
    }

    /// Applies the map `|g⟩ ↦ Σ_{g'} M[g, g'] |g'⟩` to an amplitude vector.
    pub fn apply(&self, amplitudes: &[Complex64]) -> Vec<Complex64> {
        let n = self.size();
        assert_eq!(amplitudes.len(), n, "vector length must match the matrix");
        (0..n)
            .map(|col| (0..n).map(|row| self.entries[(row, col)] * amplitudes[row]).sum())
            .collect()
    }

    /// `[[re, im], ...]` rows for JSON output.
    pub fn to_pairs(&self) -> Vec<Vec<[f64; 2]>> {
        self.entries
            .row_iter()
            .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
            .collect()
    }
}

/// `M[g, g'] = τ^g(g')`.
pub fn fourier_matrix(set: &IrrepSet) -> FourierMatrix {
    let n = set.group().order();
    FourierMatrix {
        entries: CMatrix::from_fn(n, n, |g, x| set.tau_entry(g, x)),
    }
}

/// The `ℤ_n` Fourier matrix `(1/√n)·ω^{jk}`, used for the query register.
pub fn cyclic_fourier_matrix(n: usize) -> FourierMatrix {
    let scale = 1.0 / (n as f64).sqrt();
    FourierMatrix {
        entries: CMatrix::from_fn(n, n, |j, k| {
            linalg::root_of_unity(((j * k) % n) as i64, n as u64) * scale
        }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UnitarityReport {
    /// max |(MM* - I)[a, b]|
    pub forward: f64,
    /// max |(M*M - I)[a, b]|
    pub backward: f64,
}

impl UnitarityReport {
    pub fn max_deviation(&self) -> f64 {
        self.forward.max(self.backward)
    }

    pub fn passed(&self, tol: f64) -> bool {
        self.max_deviation() < tol
    }
}

pub fn verify_unitary(f: &FourierMatrix) -> UnitarityReport {
    let m = &f.entries;
    let id = CMatrix::identity(m.nrows(), m.ncols());
    UnitarityReport {
        forward: linalg::max_abs_diff(&(m * m.adjoint()), &id),
        backward: linalg::max_abs_diff(&(m.adjoint() * m), &id),
    }
}
