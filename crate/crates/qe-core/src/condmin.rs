//! Conditional minimum of the block quadratic form
//!
//! ```text
//! phi(x_0, x_1, ..., x_r) = sum_j a_j (<x_j, x_j> + <1_j, x_j>^2)
//! ```
//!
//! over vectors `(x_0, x_1, ..., x_r)` on the unit sphere that are
//! orthogonal to the all-ones vector (`x_0` itself does not appear in
//! `phi`). The form is positive semidefinite, so the conditional minimum
//! is the smallest eigenvalue of its matrix restricted to the hyperplane —
//! an eigenvalue computation entirely independent of the minimal-root
//! bisection in [`crate::minroot`], which it must agree with.

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

use crate::hyperplane;

/// Feasibility tolerance for constraint checks on candidate points.
const FEASIBILITY_TOL: f64 = 1e-8;

/// Constraint tolerance enforced on stationary points.
const STATIONARY_CONSTRAINT_TOL: f64 = 1e-10;

/// Errors from instance validation and point checks.
#[derive(Debug, Error, PartialEq)]
pub enum CondMinError {
    /// `a` and `d` differ in length.
    #[error("parameter vectors have mismatched lengths ({a_len} vs {d_len})")]
    LengthMismatch { a_len: usize, d_len: usize },
    /// Zero-length parameter vectors.
    #[error("parameter vectors must be nonempty")]
    EmptyParameters,
    /// A coefficient is not a positive finite real.
    #[error("a[{index}] = {value} must be positive and finite")]
    NonPositiveCoefficient { index: usize, value: f64 },
    /// A coefficient is negative where only zero is allowed.
    #[error("a[{index}] = {value} must be nonnegative")]
    NegativeCoefficient { index: usize, value: f64 },
    /// The degenerate zero-coefficient path needs some `a_j = 0`.
    #[error("all coefficients are positive; use the regular minimizer")]
    NoZeroCoefficient,
    /// A block dimension is zero.
    #[error("d[{index}] must be at least 1")]
    ZeroBlock { index: usize },
    /// A candidate point has blocks of the wrong sizes.
    #[error("block {index} has dimension {got}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        got: usize,
        expected: usize,
    },
    /// A candidate point violates the sphere or sum constraint.
    #[error("point violates constraints: |norm^2 - 1| = {norm_defect}, |sum| = {sum_defect}")]
    InfeasiblePoint { norm_defect: f64, sum_defect: f64 },
}

/// A validated instance: coefficients `a_j > 0` and finite block
/// dimensions `d_j >= 1`. Total dimension is `1 + sum d_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiInstance {
    a: Vec<f64>,
    d: Vec<u32>,
}

impl PhiInstance {
    /// Validates coefficients and block dimensions.
    pub fn new(a: Vec<f64>, d: Vec<u32>) -> Result<Self, CondMinError> {
        if a.len() != d.len() {
            return Err(CondMinError::LengthMismatch {
                a_len: a.len(),
                d_len: d.len(),
            });
        }
        if a.is_empty() {
            return Err(CondMinError::EmptyParameters);
        }
        for (index, &value) in a.iter().enumerate() {
            if !(value > 0.0 && value.is_finite()) {
                return Err(CondMinError::NonPositiveCoefficient { index, value });
            }
        }
        for (index, &dj) in d.iter().enumerate() {
            if dj == 0 {
                return Err(CondMinError::ZeroBlock { index });
            }
        }
        Ok(PhiInstance { a, d })
    }

    /// Number of blocks.
    pub fn r(&self) -> usize {
        self.a.len()
    }

    /// Coefficients.
    pub fn a(&self) -> &[f64] {
        &self.a
    }

    /// Block dimensions.
    pub fn d(&self) -> &[u32] {
        &self.d
    }

    /// Total dimension `1 + sum d_j` of the full variable vector.
    pub fn dimension(&self) -> usize {
        1 + self.d.iter().map(|&dj| dj as usize).sum::<usize>()
    }

    fn check_blocks(&self, xs: &[Vec<f64>]) -> Result<(), CondMinError> {
        if xs.len() != self.d.len() {
            return Err(CondMinError::LengthMismatch {
                a_len: self.d.len(),
                d_len: xs.len(),
            });
        }
        for (index, (x, &dj)) in xs.iter().zip(&self.d).enumerate() {
            if x.len() != dj as usize {
                return Err(CondMinError::DimensionMismatch {
                    index,
                    got: x.len(),
                    expected: dj as usize,
                });
            }
        }
        Ok(())
    }

    /// The matrix of `phi` on the full vector `(x_0, x_1, ..., x_r)`:
    /// a zero row and column for `x_0`, then block `j` equal to
    /// `a_j (I + J)` of size `d_j`.
    fn form_matrix(&self) -> DMatrix<f64> {
        let n = self.dimension();
        let mut q = DMatrix::zeros(n, n);
        let mut offset = 1;
        for (&aj, &dj) in self.a.iter().zip(&self.d) {
            let dj = dj as usize;
            for i in 0..dj {
                for j in 0..dj {
                    q[(offset + i, offset + j)] = if i == j { 2.0 * aj } else { aj };
                }
            }
            offset += dj;
        }
        q
    }
}

/// A point satisfying both constraints together with its multipliers.
///
/// Both constraints are enforced to 1e-10 at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct StationaryPoint {
    /// The distinguished scalar variable.
    pub x0: f64,
    /// The block variables, one vector per block.
    pub xs: Vec<Vec<f64>>,
    /// The sphere multiplier; equals the value of `phi` at the point.
    pub lambda: f64,
    /// The sum-constraint multiplier, `mu = -2 lambda x_0`.
    pub mu: f64,
}

impl StationaryPoint {
    /// Validates the sphere and sum constraints at the point.
    pub fn new(x0: f64, xs: Vec<Vec<f64>>, lambda: f64, mu: f64) -> Result<Self, CondMinError> {
        let (norm_defect, sum_defect) = constraint_defects(x0, &xs);
        if norm_defect > STATIONARY_CONSTRAINT_TOL || sum_defect > STATIONARY_CONSTRAINT_TOL {
            return Err(CondMinError::InfeasiblePoint {
                norm_defect,
                sum_defect,
            });
        }
        Ok(StationaryPoint { x0, xs, lambda, mu })
    }

    /// The conditional value `phi` takes at this point (equal to `lambda`).
    pub fn value(&self) -> f64 {
        self.lambda
    }
}

fn constraint_defects(x0: f64, xs: &[Vec<f64>]) -> (f64, f64) {
    let norm_sq = x0 * x0
        + xs.iter()
            .flat_map(|x| x.iter())
            .map(|v| v * v)
            .sum::<f64>();
    let sum = x0 + xs.iter().flat_map(|x| x.iter()).sum::<f64>();
    ((norm_sq - 1.0).abs(), sum.abs())
}

/// Evaluates `phi`; the value does not depend on `x_0`.
pub fn phi_eval(inst: &PhiInstance, _x0: f64, xs: &[Vec<f64>]) -> Result<f64, CondMinError> {
    inst.check_blocks(xs)?;
    Ok(inst
        .a
        .iter()
        .zip(xs)
        .map(|(&aj, x)| {
            let norm_sq: f64 = x.iter().map(|v| v * v).sum();
            let sum: f64 = x.iter().sum();
            aj * (norm_sq + sum * sum)
        })
        .sum())
}

/// The conditional minimum of `phi` and a minimizer.
///
/// Computed as the smallest eigenvalue of the form matrix restricted to
/// the all-ones-orthogonal hyperplane; the minimizer is the corresponding
/// unit eigenvector mapped back to `(x_0, x_1, ..., x_r)` coordinates with
/// its first significant coordinate made positive.
pub fn cond_min(inst: &PhiInstance) -> StationaryPoint {
    let q = inst.form_matrix();
    let extremum = hyperplane::extremal_eigen(&q, false);
    let (x0, xs) = split_blocks(inst, &extremum.vector);
    let lambda = extremum.value;
    StationaryPoint::new(x0, xs, lambda, -2.0 * lambda * x0)
        .expect("hyperplane eigenvector satisfies both constraints")
}

fn split_blocks(inst: &PhiInstance, z: &DVector<f64>) -> (f64, Vec<Vec<f64>>) {
    let mut xs = Vec::with_capacity(inst.r());
    let mut offset = 1;
    for &dj in &inst.d {
        let dj = dj as usize;
        xs.push(z.as_slice()[offset..offset + dj].to_vec());
        offset += dj;
    }
    (z[0], xs)
}

/// The degenerate case: when some coefficient vanishes (all must be
/// nonnegative) the conditional minimum is exactly zero.
pub fn cond_min_zero_case(a: &[f64], d: &[u32]) -> Result<f64, CondMinError> {
    if a.len() != d.len() {
        return Err(CondMinError::LengthMismatch {
            a_len: a.len(),
            d_len: d.len(),
        });
    }
    if a.is_empty() {
        return Err(CondMinError::EmptyParameters);
    }
    for (index, &value) in a.iter().enumerate() {
        if value < 0.0 || !value.is_finite() {
            return Err(CondMinError::NegativeCoefficient { index, value });
        }
    }
    for (index, &dj) in d.iter().enumerate() {
        if dj == 0 {
            return Err(CondMinError::ZeroBlock { index });
        }
    }
    if a.iter().all(|&value| value > 0.0) {
        return Err(CondMinError::NoZeroCoefficient);
    }
    Ok(0.0)
}

/// Max-norm residual of the stationarity equations at a feasible point.
///
/// With `mu := -2 lambda x_0`, the block-`j` residual is
/// `2 a_j x_j + 2 a_j <1, x_j> 1 - 2 lambda x_j - mu 1`; a near-zero
/// maximum certifies a stationary point of the constrained problem.
pub fn stationarity_residual(
    inst: &PhiInstance,
    x0: f64,
    xs: &[Vec<f64>],
    lambda: f64,
) -> Result<f64, CondMinError> {
    inst.check_blocks(xs)?;
    let (norm_defect, sum_defect) = constraint_defects(x0, xs);
    if norm_defect > FEASIBILITY_TOL || sum_defect > FEASIBILITY_TOL {
        return Err(CondMinError::InfeasiblePoint {
            norm_defect,
            sum_defect,
        });
    }
    let mu = -2.0 * lambda * x0;
    let mut worst = 0.0f64;
    for (&aj, x) in inst.a.iter().zip(xs) {
        let sum: f64 = x.iter().sum();
        for &v in x {
            let res = 2.0 * aj * v + 2.0 * aj * sum - 2.0 * lambda * v - mu;
            worst = worst.max(res.abs());
        }
    }
    Ok(worst)
}

/// Solution shape of the rank-one-shift linear system
/// `(J - alpha I) x = beta 1` on dimension `m`, where `J` is the all-ones
/// matrix.
#[derive(Debug, Clone, PartialEq)]
pub enum JShiftSolution {
    /// `alpha = 0`: particular solution `(beta/m) 1` plus the kernel of
    /// `J`, which has dimension `m - 1` (so the solution is unique for
    /// `m = 1`).
    AffineFamily { particular: f64, kernel_dim: usize },
    /// `alpha = m`, `beta = 0`: every multiple of the all-ones vector
    /// (the eigenvector space of the eigenvalue `m` of `J`).
    SpanOfOnes,
    /// `alpha = m`, `beta != 0`: no solution.
    NoSolution,
    /// `alpha` distinct from 0 and `m`: the unique solution
    /// `coefficient * 1`.
    Unique { coefficient: f64 },
}

/// Case analysis for `(J - alpha I) x = beta 1`, `m >= 1`.
pub fn solve_j_shift(m: usize, alpha: f64, beta: f64) -> JShiftSolution {
    assert!(m >= 1, "dimension must be at least 1");
    let m_f = m as f64;
    if alpha == 0.0 {
        JShiftSolution::AffineFamily {
            particular: beta / m_f,
            kernel_dim: m - 1,
        }
    } else if alpha == m_f {
        if beta == 0.0 {
            JShiftSolution::SpanOfOnes
        } else {
            JShiftSolution::NoSolution
        }
    } else {
        JShiftSolution::Unique {
            coefficient: beta / (m_f - alpha),
        }
    }
}
