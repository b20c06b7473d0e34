//! Orthonormal reduction onto the hyperplane orthogonal to the all-ones
//! vector.
//!
//! Both the QEC eigenproblem and the conditional minimum of the star
//! quadratic form are extremal eigenvalue problems for a symmetric matrix
//! restricted to `{ z : <1, z> = 0 }`. The restriction is realized with a
//! Helmert-style orthonormal basis: the k-th basis vector has k leading
//! entries `1/sqrt(k(k+1))` followed by a single entry `-k/sqrt(k(k+1))`.

use nalgebra::{DMatrix, DVector};

/// Columns form an orthonormal basis of the all-ones-orthogonal hyperplane
/// in dimension `n` (so the result is `n x (n-1)`). Requires `n >= 2`.
pub(crate) fn helmert_basis(n: usize) -> DMatrix<f64> {
    assert!(n >= 2, "hyperplane basis needs dimension >= 2");
    let mut h = DMatrix::zeros(n, n - 1);
    for k in 1..n {
        let scale = 1.0 / ((k as f64) * (k as f64 + 1.0)).sqrt();
        for i in 0..k {
            h[(i, k - 1)] = scale;
        }
        h[(k, k - 1)] = -(k as f64) * scale;
    }
    h
}

/// An extremal eigenpair of a symmetric matrix restricted to the
/// all-ones-orthogonal hyperplane, mapped back to ambient coordinates.
pub(crate) struct HyperplaneExtremum {
    pub value: f64,
    /// Unit vector orthogonal to all-ones; sign fixed so the first
    /// coordinate of magnitude above 1e-9 is positive.
    pub vector: DVector<f64>,
}

/// Largest (or smallest) eigenvalue of `matrix` on the hyperplane.
///
/// `matrix` must be symmetric of dimension `n >= 2`.
pub(crate) fn extremal_eigen(matrix: &DMatrix<f64>, largest: bool) -> HyperplaneExtremum {
    let h = helmert_basis(matrix.nrows());
    let reduced = h.transpose() * matrix * &h;
    let symmetrized = (&reduced + reduced.transpose()) * 0.5;
    let eig = nalgebra::SymmetricEigen::new(symmetrized);
    let mut best = 0;
    for i in 1..eig.eigenvalues.len() {
        let better = if largest {
            eig.eigenvalues[i] > eig.eigenvalues[best]
        } else {
            eig.eigenvalues[i] < eig.eigenvalues[best]
        };
        if better {
            best = i;
        }
    }
    let mut vector = &h * eig.eigenvectors.column(best);
    vector /= vector.norm();
    fix_sign(&mut vector);
    HyperplaneExtremum {
        value: eig.eigenvalues[best],
        vector,
    }
}

/// Makes the first coordinate of magnitude above 1e-9 positive, for
/// reproducible eigenvector output.
pub(crate) fn fix_sign(v: &mut DVector<f64>) {
    if let Some(first) = v.iter().copied().find(|x| x.abs() > 1e-9) {
        if first < 0.0 {
            *v *= -1.0;
        }
    }
}
