//! Exact quadratic embedding constants of finite graphs.
//!
//! The QE constant is the maximum of `<f, D f>` over unit vectors `f`
//! orthogonal to the all-ones vector, where `D` is the distance matrix.
//! For a finite graph the supremum is attained and equals the largest
//! eigenvalue of `D` restricted to the all-ones-orthogonal hyperplane.
//!
//! For path graphs there is a second route: `QEC(P_{n+1}) = -c_n` where
//! `c_n` is the smallest generalized eigenvalue of the pencil `(M, J + I)`
//! with `M = [2 min(i, j)]`. Both `M` and `J + I` are positive definite,
//! so the pencil reduces to a symmetric eigenproblem through the Cholesky
//! factor of `J + I`. The two routes must agree and are tested against
//! each other.

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

use crate::graph::{distance_matrix, Graph};
use crate::hyperplane;

/// Errors from QEC computations.
#[derive(Debug, Error, PartialEq)]
pub enum QecError {
    /// QEC needs at least two vertices.
    #[error("QEC needs a graph on at least 2 vertices")]
    SingleVertex,
    /// A test vector has the wrong length.
    #[error("vector has {got} entries, graph has {expected} vertices")]
    LengthMismatch { got: usize, expected: usize },
    /// A test vector is (numerically) zero.
    #[error("vector is zero")]
    ZeroVector,
    /// A test vector is not orthogonal to the all-ones vector.
    #[error("vector is not orthogonal to all-ones (defect {defect})")]
    NotOrthogonal { defect: f64 },
    /// The path-family operations need at least two vertices.
    #[error("path operations need n >= 2, got {0}")]
    PathTooShort(usize),
    /// The tree bound check needs a tree.
    #[error("graph is not a tree ({edges} edges on {vertices} vertices)")]
    NotATree { vertices: usize, edges: usize },
}

/// How a QEC value was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QecMethod {
    /// Largest eigenvalue of the distance matrix on the hyperplane.
    ProjectedEigen,
    /// Smallest generalized eigenvalue of the path pencil, negated.
    PathPencil,
}

impl std::fmt::Display for QecMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            QecMethod::ProjectedEigen => "projected_eigen",
            QecMethod::PathPencil => "path_pencil",
        };
        f.write_str(name)
    }
}

/// A computed QE constant with its maximizer.
#[derive(Debug, Clone, PartialEq)]
pub struct QecResult {
    /// The QE constant.
    pub value: f64,
    /// Unit vector orthogonal to all-ones attaining the value; sign fixed
    /// so the first coordinate of magnitude above 1e-9 is positive.
    pub optimizer: Vec<f64>,
    /// Computation route.
    pub method: QecMethod,
    /// `|<f, D f> - value|` at the optimizer.
    pub residual: f64,
}

fn distance_dmatrix(g: &Graph) -> DMatrix<f64> {
    let n = g.vertex_count();
    DMatrix::from_row_slice(n, n, &distance_matrix(g).to_f64_rows())
}

fn quadratic_form(d: &DMatrix<f64>, f: &DVector<f64>) -> f64 {
    (f.transpose() * d * f)[(0, 0)]
}

/// The exact QE constant of a finite graph on at least two vertices.
pub fn qec_exact(g: &Graph) -> Result<QecResult, QecError> {
    if g.vertex_count() < 2 {
        return Err(QecError::SingleVertex);
    }
    let d = distance_dmatrix(g);
    let extremum = hyperplane::extremal_eigen(&d, true);
    let residual = (quadratic_form(&d, &extremum.vector) - extremum.value).abs();
    Ok(QecResult {
        value: extremum.value,
        optimizer: extremum.vector.as_slice().to_vec(),
        method: QecMethod::ProjectedEigen,
        residual,
    })
}

/// The Rayleigh quotient `<f, D f> / <f, f>` of the distance matrix at a
/// feasible direction `f` (nonzero, orthogonal to all-ones).
///
/// Never exceeds the exact QE constant; equals it exactly at a maximizer.
/// The orthogonality defect is measured against `1e-10 * max(1, |f|)` so
/// unnormalized integer vectors with exact zero sum are accepted.
pub fn qec_rayleigh(g: &Graph, f: &[f64]) -> Result<f64, QecError> {
    let n = g.vertex_count();
    if f.len() != n {
        return Err(QecError::LengthMismatch {
            got: f.len(),
            expected: n,
        });
    }
    let v = DVector::from_column_slice(f);
    let norm = v.norm();
    if norm == 0.0 {
        return Err(QecError::ZeroVector);
    }
    let defect = v.sum().abs();
    if defect > 1e-10 * norm.max(1.0) {
        return Err(QecError::NotOrthogonal { defect });
    }
    let d = distance_dmatrix(g);
    Ok(quadratic_form(&d, &v) / (norm * norm))
}

/// QEC of the path graph on `n >= 2` vertices through the matrix pencil.
///
/// Builds `M = [2 min(i, j)]` and `B = J + I` of size `n - 1`, reduces
/// `M x = c B x` with the Cholesky factor `L` of `B` to a symmetric
/// eigenproblem on `L^-1 M L^-T`, and returns `-c_min`. The eigenvector
/// maps back to a vertex function by prepending the negated coordinate
/// sum, which is exactly the change of variables that eliminates the
/// endpoint vertex.
pub fn qec_path_pencil(n: usize) -> Result<QecResult, QecError> {
    if n < 2 {
        return Err(QecError::PathTooShort(n));
    }
    let m = n - 1;
    let mut pencil = DMatrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            pencil[(i, j)] = 2.0 * (i.min(j) + 1) as f64;
        }
    }
    let b = DMatrix::from_element(m, m, 1.0) + DMatrix::identity(m, m);
    let chol = nalgebra::Cholesky::new(b).expect("J + I is positive definite");
    let l = chol.l();
    let y = l
        .solve_lower_triangular(&pencil)
        .expect("Cholesky factor is nonsingular");
    let s = l
        .solve_lower_triangular(&y.transpose())
        .expect("Cholesky factor is nonsingular");
    let symmetrized = (&s + s.transpose()) * 0.5;
    let eig = nalgebra::SymmetricEigen::new(symmetrized);
    let mut best = 0;
    for i in 1..m {
        if eig.eigenvalues[i] < eig.eigenvalues[best] {
            best = i;
        }
    }
    let c = eig.eigenvalues[best];
    let u = eig.eigenvectors.column(best).into_owned();
    let x = l
        .transpose()
        .solve_upper_triangular(&u)
        .expect("Cholesky factor is nonsingular");
    let mut f = DVector::zeros(n);
    f[0] = -x.sum();
    for i in 0..m {
        f[i + 1] = x[i];
    }
    f /= f.norm();
    hyperplane::fix_sign(&mut f);
    let value = -c;
    let d = distance_dmatrix(&crate::graph::named_graph(crate::graph::GraphKind::Path, n).unwrap());
    let residual = (quadratic_form(&d, &f) - value).abs();
    Ok(QecResult {
        value,
        optimizer: f.as_slice().to_vec(),
        method: QecMethod::PathPencil,
        residual,
    })
}

/// Closed-form lower and upper bounds for QEC of the path on `n >= 2`
/// vertices:
///
/// ```text
/// -(2n^4 + 20n^2 - 7 + 15(-1)^n) / (4n^4 - 4 + 15n + 15n(-1)^n)
///     <= QEC(P_n) <= -1/2
/// ```
///
/// The lower bound is evaluated from exact integer numerator and
/// denominator; it is attained at `n = 2` and approaches `-1/2` like the
/// upper bound, which is why the infinite path has QE constant `-1/2`.
pub fn path_qec_bounds(n: usize) -> Result<(f64, f64), QecError> {
    if n < 2 {
        return Err(QecError::PathTooShort(n));
    }
    let n = n as i128;
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let numerator = 2 * n.pow(4) + 20 * n * n - 7 + 15 * sign;
    let denominator = 4 * n.pow(4) - 4 + 15 * n + 15 * n * sign;
    Ok((-(numerator as f64) / (denominator as f64), -0.5))
}

/// The alternating test vector on the path with `n >= 2` vertices:
/// `f(i) = i (n - i) (-1)^i` for `1 <= i <= n - 1` and
/// `f(0) = -sum of the rest`, so the sum is exactly zero.
///
/// Its Rayleigh quotient on `P_n` equals the closed-form lower bound of
/// [`path_qec_bounds`] exactly.
pub fn alternating_witness(n: usize) -> Result<Vec<f64>, QecError> {
    if n < 2 {
        return Err(QecError::PathTooShort(n));
    }
    let mut f = vec![0.0f64; n];
    let mut total = 0i64;
    for (i, slot) in f.iter_mut().enumerate().skip(1) {
        let value = (i as i64) * ((n - i) as i64) * if i % 2 == 0 { 1 } else { -1 };
        *slot = value as f64;
        total += value;
    }
    f[0] = -total as f64;
    Ok(f)
}

/// Whether a tree satisfies the strict tree bound
/// `QEC < -1/(|V| - 1)`; holds for every tree on at least 3 vertices.
pub fn tree_qec_bound_check(g: &Graph) -> Result<bool, QecError> {
    if !g.is_tree() {
        return Err(QecError::NotATree {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
        });
    }
    let qec = qec_exact(g)?;
    Ok(qec.value < -1.0 / (g.vertex_count() as f64 - 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, named_graph, GraphKind};

    fn path(n: usize) -> Graph {
        named_graph(GraphKind::Path, n).unwrap()
    }

    fn check_result_invariants(g: &Graph, result: &QecResult) {
        let norm: f64 = result.optimizer.iter().map(|v| v * v).sum::<f64>().sqrt();
        assert!((norm - 1.0).abs() < 1e-12);
        let sum: f64 = result.optimizer.iter().sum();
        assert!(sum.abs() < 1e-10);
        assert!(result.residual <= 1e-9);
        let rq = qec_rayleigh(g, &result.optimizer).unwrap();
        assert!((rq - result.value).abs() < 1e-9);
        let first = result
            .optimizer
            .iter()
            .copied()
            .find(|v| v.abs() > 1e-9)
            .unwrap();
        assert!(first > 0.0);
    }

    #[test]
    fn known_small_graphs() {
        let k2 = named_graph(GraphKind::Complete, 2).unwrap();
        let r = qec_exact(&k2).unwrap();
        assert!((r.value + 1.0).abs() < 1e-12);
        check_result_invariants(&k2, &r);

        let c4 = named_graph(GraphKind::Cycle, 4).unwrap();
        let r = qec_exact(&c4).unwrap();
        assert!(r.value.abs() < 1e-9);

        let r = qec_exact(&path(4)).unwrap();
        assert!((r.value + (2.0 - 2.0f64.sqrt())).abs() < 1e-10);
        check_result_invariants(&path(4), &r);
    }

    #[test]
    fn complete_graphs_have_constant_minus_one() {
        for n in 2..=10 {
            let kn = named_graph(GraphKind::Complete, n).unwrap();
            let r = qec_exact(&kn).unwrap();
            assert!((r.value + 1.0).abs() < 1e-10, "K_{n}: {}", r.value);
        }
    }

    #[test]
    fn single_vertex_rejected() {
        let k1 = named_graph(GraphKind::Complete, 1).unwrap();
        assert_eq!(qec_exact(&k1), Err(QecError::SingleVertex));
    }

    #[test]
    fn rayleigh_hand_values() {
        let k2 = named_graph(GraphKind::Complete, 2).unwrap();
        let s = 1.0 / 2.0f64.sqrt();
        assert!((qec_rayleigh(&k2, &[s, -s]).unwrap() + 1.0).abs() < 1e-14);

        // The optimizer of P3.
        let s = 1.0 / 6.0f64.sqrt();
        let rq = qec_rayleigh(&path(3), &[s, -2.0 * s, s]).unwrap();
        assert!((rq + 2.0 / 3.0).abs() < 1e-14);
        let exact = qec_exact(&path(3)).unwrap().value;
        assert!((rq - exact).abs() < 1e-12);
    }

    #[test]
    fn rayleigh_rejects_bad_vectors() {
        let k2 = named_graph(GraphKind::Complete, 2).unwrap();
        assert!(matches!(
            qec_rayleigh(&k2, &[1.0, 0.0]),
            Err(QecError::NotOrthogonal { .. })
        ));
        assert_eq!(qec_rayleigh(&k2, &[0.0, 0.0]), Err(QecError::ZeroVector));
        assert!(matches!(
            qec_rayleigh(&k2, &[1.0]),
            Err(QecError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn pencil_matches_closed_forms() {
        assert!((qec_path_pencil(2).unwrap().value + 1.0).abs() < 1e-12);
        let expected5 = -(5.0 - 5.0f64.sqrt()) / 5.0;
        assert!((qec_path_pencil(5).unwrap().value - expected5).abs() < 1e-12);
        let expected10 = -(6.0 + 2.0 * 5.0f64.sqrt() - (50.0 + 22.0 * 5.0f64.sqrt()).sqrt());
        assert!((qec_path_pencil(10).unwrap().value - expected10).abs() < 1e-12);
        assert_eq!(qec_path_pencil(1), Err(QecError::PathTooShort(1)));
    }

    #[test]
    fn pencil_agrees_with_projected_eigen() {
        for n in 2..=24 {
            let via_pencil = qec_path_pencil(n).unwrap();
            let via_eigen = qec_exact(&path(n)).unwrap();
            assert!(
                (via_pencil.value - via_eigen.value).abs() < 1e-10,
                "n = {n}"
            );
            check_result_invariants(&path(n), &via_pencil);
        }
    }

    #[test]
    fn path_bounds_examples() {
        assert_eq!(path_qec_bounds(2).unwrap(), (-1.0, -0.5));
        assert_eq!(path_qec_bounds(3).unwrap(), (-1.0, -0.5));
        let (lower, upper) = path_qec_bounds(200).unwrap();
        assert!((lower + 0.5).abs() < 2e-4);
        assert_eq!(upper, -0.5);
        assert_eq!(path_qec_bounds(1), Err(QecError::PathTooShort(1)));
    }

    #[test]
    fn witness_values_and_identity() {
        assert_eq!(alternating_witness(3).unwrap(), vec![0.0, -2.0, 2.0]);
        assert_eq!(alternating_witness(2).unwrap(), vec![1.0, -1.0]);
        for n in 2..=40 {
            let w = alternating_witness(n).unwrap();
            assert_eq!(w.iter().sum::<f64>(), 0.0);
            let rq = qec_rayleigh(&path(n), &w).unwrap();
            let (lower, _) = path_qec_bounds(n).unwrap();
            assert!((rq - lower).abs() < 1e-10, "n = {n}: {rq} vs {lower}");
        }
    }

    #[test]
    fn tree_bound_check() {
        assert_eq!(tree_qec_bound_check(&path(4)), Ok(true));
        let star = named_graph(GraphKind::Star, 5).unwrap();
        assert_eq!(tree_qec_bound_check(&star), Ok(true));
        let c4 = named_graph(GraphKind::Cycle, 4).unwrap();
        assert!(matches!(
            tree_qec_bound_check(&c4),
            Err(QecError::NotATree { .. })
        ));
        // A tree that is not a path or star.
        let t = build_graph(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(tree_qec_bound_check(&t), Ok(true));
    }
}
