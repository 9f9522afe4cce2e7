//! Small dense complex linear-algebra helpers on top of `nalgebra`.

use nalgebra::DMatrix;
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// `e^{2πi·num/den}`.
pub fn root_of_unity(num: i64, den: u64) -> Complex64 {
    let den = den as i64;
    let r = num.rem_euclid(den) as f64 / den as f64;
    // exact values on the axes keep tables tidy
    match (4.0 * r).fract() == 0.0 {
        true => match (4.0 * r) as u8 {
            0 => ONE,
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        },
        false => Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * r),
    }
}

/// Largest entrywise modulus of `a - b`.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Largest entrywise modulus of `m·m* - I`.
pub fn unitarity_defect(m: &CMatrix) -> f64 {
    let prod = m * m.adjoint();
    max_abs_diff(&prod, &CMatrix::identity(m.nrows(), m.ncols()))
}

pub fn trace(m: &CMatrix) -> Complex64 {
    m.diagonal().iter().sum()
}

pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> CMatrix {
    CMatrix::from_row_iterator(rows, cols, data.iter().map(|&x| Complex64::new(x, 0.0)))
}

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity_on_axes_are_exact() {
        assert_eq!(root_of_unity(0, 8), ONE);
        assert_eq!(root_of_unity(2, 8), Complex64::new(0.0, 1.0));
        assert_eq!(root_of_unity(-1, 4), Complex64::new(0.0, -1.0));
        let w = root_of_unity(1, 3);
        assert!((w - Complex64::new(-0.5, 3f64.sqrt() / 2.0)).norm() < 1e-15);
    }

    #[test]
    fn identity_is_unitary() {
        assert_eq!(unitarity_defect(&CMatrix::identity(3, 3)), 0.0);
    }
}
