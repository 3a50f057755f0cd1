//! Dense symmetric linear algebra shared by the spectral and deformation code.
//!
//! Matrices are `nalgebra::DMatrix` throughout; eigen and singular value
//! decompositions are delegated to `faer`.

use faer::{Mat, Side};
use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// Largest `|m_ij - m_ji|`.
pub fn asymmetry(m: &DMatrix<f64>) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            worst = worst.max((m[(i, j)] - m[(j, i)]).abs());
        }
    }
    worst
}

pub fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0f64, |acc, x| acc.max(x.abs()))
}

/// Rejects non-square or visibly non-symmetric input, then returns the
/// exactly symmetric part.
pub fn symmetrized(m: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    if m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch(format!(
            "expected a square matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    let asym = asymmetry(m);
    if asym > 1e-10 * max_abs(m).max(1.0) {
        return Err(Error::NotSymmetric(asym));
    }
    Ok((m + m.transpose()) * 0.5)
}

fn to_faer(m: &DMatrix<f64>) -> Mat<f64> {
    Mat::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
}

/// Eigenvalues in ascending order with matching eigenvector columns.
pub fn symmetric_eigen(m: &DMatrix<f64>) -> Result<(Vec<f64>, DMatrix<f64>)> {
    let sym = symmetrized(m)?;
    let n = sym.nrows();
    if n == 0 {
        return Ok((Vec::new(), DMatrix::zeros(0, 0)));
    }
    let eig = to_faer(&sym)
        .self_adjoint_eigen(Side::Lower)
        .map_err(|e| Error::InvalidInput(format!("eigen decomposition failed: {e:?}")))?;
    let s = eig.S().column_vector();
    let values = (0..n).map(|i| s[i]).collect();
    let u = eig.U();
    Ok((values, DMatrix::from_fn(n, n, |r, c| u[(r, c)])))
}

/// Singular values in descending order.
pub fn singular_values(m: &DMatrix<f64>) -> Result<Vec<f64>> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Ok(Vec::new());
    }
    let mut sv = to_faer(m)
        .singular_values()
        .map_err(|e| Error::InvalidInput(format!("singular value decomposition failed: {e:?}")))?;
    sv.sort_by(|a, b| b.total_cmp(a));
    Ok(sv)
}

/// `U f(Λ) Uᵀ` for symmetric `m = U Λ Uᵀ`.
pub fn symmetric_function(m: &DMatrix<f64>, f: impl Fn(f64) -> f64) -> Result<DMatrix<f64>> {
    let (values, u) = symmetric_eigen(m)?;
    Ok(reassemble(&values, &u, f))
}

pub(crate) fn reassemble(values: &[f64], u: &DMatrix<f64>, f: impl Fn(f64) -> f64) -> DMatrix<f64> {
    let mut scaled = u.clone();
    for (j, &lambda) in values.iter().enumerate() {
        let fj = f(lambda);
        scaled.column_mut(j).scale_mut(fj);
    }
    scaled * u.transpose()
}

/// Matrix exponential `exp(s·m)` of a symmetric matrix via its spectral decomposition.
pub fn symmetric_expm(m: &DMatrix<f64>, s: f64) -> Result<DMatrix<f64>> {
    symmetric_function(m, |x| (s * x).exp())
}

/// Singular values below `tol · max(1, σ_max)` count towards the nullity.
pub fn nullity(m: &DMatrix<f64>, tol: f64) -> Result<usize> {
    if m.ncols() == 0 {
        return Ok(0);
    }
    if m.nrows() == 0 {
        return Ok(m.ncols());
    }
    let sv = singular_values(m)?;
    let cutoff = tol * sv.first().copied().unwrap_or(0.0).max(1.0);
    let rank = sv.iter().filter(|&&s| s > cutoff).count();
    Ok(m.ncols() - rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigen_is_sorted_and_reconstructs() {
        let m = DMatrix::from_row_slice(3, 3, &[2.0, -1.0, 0.0, -1.0, 2.0, -1.0, 0.0, -1.0, 2.0]);
        let (values, u) = symmetric_eigen(&m).unwrap();
        assert!(values.windows(2).all(|w| w[0] <= w[1]));
        let back = reassemble(&values, &u, |x| x);
        assert!((back - &m).abs().max() < 1e-12);
        let expected = [2.0 - 2f64.sqrt(), 2.0, 2.0 + 2f64.sqrt()];
        for (a, b) in values.iter().zip(expected) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn reconstructs_matrices_with_repeated_eigenvalues() {
        // Dirac matrix of a hollow triangle: eigenvalues ±√3 twice, 0 twice
        let mut d = DMatrix::zeros(6, 6);
        for (e, (a, b)) in [(0, 1), (0, 2), (1, 2)].into_iter().enumerate() {
            for (v, s) in [(a, -1.0), (b, 1.0)] {
                d[(3 + e, v)] = s;
                d[(v, 3 + e)] = s;
            }
        }
        let (values, u) = symmetric_eigen(&d).unwrap();
        assert!((reassemble(&values, &u, |x| x) - &d).abs().max() < 1e-13);
        assert!((u.transpose() * &u - DMatrix::identity(6, 6)).abs().max() < 1e-13);
    }

    #[test]
    fn rejects_asymmetric_and_rectangular() {
        let m = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        assert!(matches!(symmetric_eigen(&m), Err(Error::NotSymmetric(_))));
        assert!(symmetric_eigen(&DMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn expm_of_diagonal() {
        let m = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![0.0, 1.0]));
        let e = symmetric_expm(&m, -2.0).unwrap();
        assert!((e[(0, 0)] - 1.0).abs() < 1e-15);
        assert!((e[(1, 1)] - (-2.0f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn nullity_thresholds_relative_to_largest_singular_value() {
        let m = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![1e6, 1e-3, 0.0]));
        assert_eq!(nullity(&m, 1e-12).unwrap(), 1);
        assert_eq!(nullity(&m, 1e-8).unwrap(), 2);
        assert_eq!(nullity(&DMatrix::zeros(0, 4), 1e-8).unwrap(), 4);
    }
}
