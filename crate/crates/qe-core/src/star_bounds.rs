//! Two-sided bounds for the QE constant of a star product in terms of its
//! factors.
//!
//! With factor QE constants `Q_j < 0` and non-root vertex counts `n_j`
//! (`|V_j| - 1`, possibly infinite), the product constant is sandwiched:
//!
//! ```text
//! max_j Q_j  <=  QEC(G_1 * ... * G_r)  <=  -Lambda,
//! ```
//!
//! where `Lambda` is the minimal solution of the equation in
//! [`crate::minroot`] with `a = (-Q_1, ..., -Q_r)` and `d = (n_1, ...,
//! n_r)`. When some factor has `Q_j = 0` the product constant is exactly
//! zero, and the upper-bound equation is never evaluated with a zero
//! coefficient.

use thiserror::Error;

use crate::graph::Graph;
use crate::minroot::{closed_form_r2, min_root, ExtCount, ParamPair};
use crate::qec::{qec_exact, QecError};

/// Internal bisection tolerance; tight enough that the bound values are
/// accurate to about 1e-13 in absolute terms (factor constants lie in
/// `[-1, 0)`).
const BOUND_TOL: f64 = 1e-13;

/// QE constants within this distance above zero are clamped to exactly
/// zero when summarizing a computed factor.
const ZERO_CLAMP_TOL: f64 = 1e-10;

/// Errors from factor validation and bound evaluation.
#[derive(Debug, Error, PartialEq)]
pub enum BoundsError {
    /// A factor QE constant is positive: the factor is not of QE class.
    #[error("factor {index} has positive QE constant {value}; not of QE class")]
    PositiveQec { index: usize, value: f64 },
    /// A non-root vertex count is below 1.
    #[error("factor {index} needs n >= 1 non-root vertices")]
    BadCount { index: usize },
    /// The upper-bound equation is singular at a zero QE constant.
    #[error("factor {index} has QE constant 0; apply the zero rule instead")]
    ZeroQecFactor { index: usize },
    /// No factors given.
    #[error("need at least one factor")]
    NoFactors,
    /// The harmonic bound needs at least two factors.
    #[error("need at least two factors, got {0}")]
    NeedAtLeastTwo(usize),
    /// A factor graph failed its own QEC computation.
    #[error(transparent)]
    Qec(#[from] QecError),
}

/// What the bounds need to know about one factor: its QE constant
/// `q <= 0` and its non-root vertex count `n = |V| - 1 >= 1` (finite or
/// infinite).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FactorSummary {
    q: f64,
    n: ExtCount,
}

impl FactorSummary {
    /// Validates `q <= 0` (finite) and `n >= 1` or infinite.
    pub fn new(q: f64, n: ExtCount) -> Result<Self, BoundsError> {
        if q > 0.0 || !q.is_finite() {
            return Err(BoundsError::PositiveQec { index: 0, value: q });
        }
        if let ExtCount::Finite(value) = n {
            if value < 1.0 || value.is_nan() {
                return Err(BoundsError::BadCount { index: 0 });
            }
        }
        Ok(FactorSummary { q, n })
    }

    /// Summarizes a concrete factor graph: `q` from the exact QEC
    /// computation (clamped to 0 when within 1e-10 above it, absorbing
    /// eigenvalue rounding on QE-class graphs like even cycles) and
    /// `n = |V| - 1`.
    pub fn from_graph(g: &Graph) -> Result<Self, BoundsError> {
        let result = qec_exact(g)?;
        let mut q = result.value;
        if q > 0.0 {
            if q > ZERO_CLAMP_TOL {
                return Err(BoundsError::PositiveQec { index: 0, value: q });
            }
            q = 0.0;
        }
        let n = ExtCount::Finite((g.vertex_count() - 1) as f64);
        Ok(FactorSummary { q, n })
    }

    /// The factor QE constant.
    pub fn q(&self) -> f64 {
        self.q
    }

    /// The non-root vertex count.
    pub fn n(&self) -> ExtCount {
        self.n
    }
}

fn require_nonempty(factors: &[FactorSummary]) -> Result<(), BoundsError> {
    if factors.is_empty() {
        Err(BoundsError::NoFactors)
    } else {
        Ok(())
    }
}

fn strictly_negative_params(factors: &[FactorSummary]) -> Result<ParamPair, BoundsError> {
    require_nonempty(factors)?;
    for (index, factor) in factors.iter().enumerate() {
        if factor.q == 0.0 {
            return Err(BoundsError::ZeroQecFactor { index });
        }
    }
    let a = factors.iter().map(|f| -f.q).collect();
    let d = factors.iter().map(|f| f.n).collect();
    Ok(ParamPair::new(a, d).expect("validated factors form a valid parameter pair"))
}

/// `Lambda`: the minimal solution of the upper-bound equation. The QEC
/// upper bound for the star product is `-Lambda`.
///
/// All factor constants must be strictly negative; a zero factor routes
/// to [`zero_rule`].
pub fn lambda_upper(factors: &[FactorSummary]) -> Result<f64, BoundsError> {
    let p = strictly_negative_params(factors)?;
    Ok(min_root(&p, BOUND_TOL)
        .expect("validated parameters solve cleanly")
        .lambda)
}

/// The sandwich `(max_j Q_j, -Lambda)`; the product QE constant always
/// lies between the two.
pub fn qec_sandwich(factors: &[FactorSummary]) -> Result<(f64, f64), BoundsError> {
    let lambda = lambda_upper(factors)?;
    let lower = factors.iter().map(|f| f.q).fold(f64::NEG_INFINITY, f64::max);
    Ok((lower, -lambda))
}

/// The zero rule: when some factor constant is zero (all being
/// nonpositive by construction), the star-product constant is exactly
/// zero. Returns `None` when no factor constant vanishes.
pub fn zero_rule(factors: &[FactorSummary]) -> Result<Option<f64>, BoundsError> {
    require_nonempty(factors)?;
    Ok(factors.iter().any(|f| f.q == 0.0).then_some(0.0))
}

/// The harmonic upper bound `(1/Q_1 + ... + 1/Q_r)^{-1} < 0` for
/// `r >= 2`; always at least `-Lambda`.
pub fn harmonic_bound(factors: &[FactorSummary]) -> Result<f64, BoundsError> {
    if factors.len() < 2 {
        return Err(BoundsError::NeedAtLeastTwo(factors.len()));
    }
    strictly_negative_params(factors)?;
    Ok(1.0 / factors.iter().map(|f| 1.0 / f.q).sum::<f64>())
}

/// The two-factor upper bound, computed through the numerically stable
/// two-pair closed form (the literal radical subtracts nearly equal
/// quantities when the constants are close and the counts large).
///
/// Always satisfies `max(q1, q2) < q12 < 0`; infinite counts take their
/// limit values, down to `q1 q2 / (q1 + q2)` when both are infinite.
pub fn q12(q1: f64, q2: f64, n1: ExtCount, n2: ExtCount) -> Result<f64, BoundsError> {
    let factors = [FactorSummary::new(q1, n1)?, FactorSummary::new(q2, n2)?];
    for (index, factor) in factors.iter().enumerate() {
        if factor.q == 0.0 {
            return Err(BoundsError::ZeroQecFactor { index });
        }
    }
    let lambda =
        closed_form_r2(-q1, -q2, n1, n2).expect("validated factors form a valid parameter pair");
    Ok(-lambda)
}
