//! The minimal solution `lambda_1(d, a)` of the rational equation
//!
//! ```text
//! sum_{j=1}^r  d_j / (a_j d_j + a_j - lambda)  =  1 / lambda
//! ```
//!
//! with positive real coefficients `a_j`, counts `d_j` that are positive
//! reals or infinite (an infinite count contributes the constant `1/a_j`),
//! and poles at the breakpoints `c_i`, the sorted distinct values of
//! `a_j d_j + a_j`. Between consecutive breakpoints the left-minus-right
//! difference is strictly increasing, so every gap holds exactly one root
//! and bisection converges unconditionally. The minimal root is the one in
//! `(0, c_1)`; it is the quantity that controls star-product QE constants.

use thiserror::Error;

/// Relative tolerance for merging coincident breakpoints.
const BREAKPOINT_MERGE_RTOL: f64 = 1e-14;

/// Bisection iteration cap.
const MAX_BISECT_ITERS: usize = 200;

/// Errors from parameter validation and equation evaluation.
#[derive(Debug, Error, PartialEq)]
pub enum MinRootError {
    /// `a` and `d` differ in length.
    #[error("parameter vectors have mismatched lengths ({a_len} vs {d_len})")]
    LengthMismatch { a_len: usize, d_len: usize },
    /// Zero-length parameter vectors.
    #[error("parameter vectors must be nonempty")]
    EmptyParameters,
    /// A coefficient is not a positive finite real.
    #[error("a[{index}] = {value} must be positive and finite")]
    NonPositiveCoefficient { index: usize, value: f64 },
    /// A count is neither a positive real nor infinite.
    #[error("d[{index}] must be positive or infinite")]
    NonPositiveCount { index: usize },
    /// A tolerance must be positive and finite.
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    /// The equation is only defined for positive `lambda`.
    #[error("lambda = {0} must be positive")]
    NonPositiveLambda(f64),
    /// `lambda` coincides with a breakpoint.
    #[error("lambda = {0} is a pole of the equation")]
    EvalAtPole(f64),
    /// The basic two-sided estimate needs `r >= 2`.
    #[error("need at least two parameter pairs, got {0}")]
    NeedAtLeastTwo(usize),
    /// The sharp estimates need at least one finite count.
    #[error("all counts are infinite; the sharp estimates need a finite one")]
    AllCountsInfinite,
}

/// A count that is either a positive real or infinite.
///
/// Infinity is a distinguished symbolic value, never a large float: the
/// infinite-count limit of an equation term is exactly `1/a_j` and the
/// code treats it as such.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtCount {
    /// A finite positive count.
    Finite(f64),
    /// The infinite count.
    Infinite,
}

impl ExtCount {
    /// A validated finite count.
    pub fn finite(value: f64) -> Result<Self, MinRootError> {
        if value > 0.0 && value.is_finite() {
            Ok(ExtCount::Finite(value))
        } else {
            Err(MinRootError::NonPositiveCount { index: 0 })
        }
    }

    /// Whether this is the infinite count.
    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtCount::Infinite)
    }

    /// The finite value, if any.
    pub fn finite_value(&self) -> Option<f64> {
        match self {
            ExtCount::Finite(v) => Some(*v),
            ExtCount::Infinite => None,
        }
    }

    /// Componentwise truncation `min(self, n)`.
    pub fn min_with(&self, n: f64) -> ExtCount {
        match self {
            ExtCount::Finite(v) => ExtCount::Finite(v.min(n)),
            ExtCount::Infinite => ExtCount::Finite(n),
        }
    }

    /// The ratio `d/(d+1)`, taken as 1 for the infinite count.
    pub fn ratio(&self) -> f64 {
        match self {
            ExtCount::Finite(v) => v / (v + 1.0),
            ExtCount::Infinite => 1.0,
        }
    }
}

impl std::fmt::Display for ExtCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtCount::Finite(v) => write!(f, "{v}"),
            ExtCount::Infinite => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for ExtCount {
    type Err = MinRootError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("inf") {
            return Ok(ExtCount::Infinite);
        }
        s.parse::<f64>()
            .map_err(|_| MinRootError::NonPositiveCount { index: 0 })
            .and_then(ExtCount::finite)
    }
}

/// A validated pair of parameter vectors `a` (positive reals) and `d`
/// (positive reals or infinity) of common length `r >= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamPair {
    a: Vec<f64>,
    d: Vec<ExtCount>,
}

impl ParamPair {
    /// Validates lengths, positivity of every `a_j`, and every count.
    pub fn new(a: Vec<f64>, d: Vec<ExtCount>) -> Result<Self, MinRootError> {
        if a.len() != d.len() {
            return Err(MinRootError::LengthMismatch {
                a_len: a.len(),
                d_len: d.len(),
            });
        }
        if a.is_empty() {
            return Err(MinRootError::EmptyParameters);
        }
        for (index, &value) in a.iter().enumerate() {
            if !(value > 0.0 && value.is_finite()) {
                return Err(MinRootError::NonPositiveCoefficient { index, value });
            }
        }
        for (index, dj) in d.iter().enumerate() {
            if let ExtCount::Finite(v) = dj {
                if !(*v > 0.0 && v.is_finite()) {
                    return Err(MinRootError::NonPositiveCount { index });
                }
            }
        }
        Ok(ParamPair { a, d })
    }

    /// Number of parameter pairs.
    pub fn r(&self) -> usize {
        self.a.len()
    }

    /// The coefficient vector.
    pub fn a(&self) -> &[f64] {
        &self.a
    }

    /// The count vector.
    pub fn d(&self) -> &[ExtCount] {
        &self.d
    }

    /// Whether every count is infinite.
    pub fn all_infinite(&self) -> bool {
        self.d.iter().all(ExtCount::is_infinite)
    }

    /// `(1/a_1 + ... + 1/a_r)^{-1}`, the harmonic lower bound and the
    /// exact minimal root in the all-infinite case.
    pub fn harmonic_value(&self) -> f64 {
        1.0 / self.a.iter().map(|a| 1.0 / a).sum::<f64>()
    }

    /// Smallest coefficient; a strict upper bound for the minimal root
    /// when `r >= 2`.
    pub fn min_coefficient(&self) -> f64 {
        self.a.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Replaces every count by `min(d_j, n)`; the minimal root of the
    /// truncation decreases to the minimal root of `self` as `n` grows.
    pub fn truncated(&self, n: u32) -> ParamPair {
        let n = f64::from(n);
        ParamPair {
            a: self.a.clone(),
            d: self.d.iter().map(|dj| dj.min_with(n)).collect(),
        }
    }
}

/// How a root was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    /// Bracketed bisection on a monotone interval.
    Bisection,
    /// The one-pair closed form `lambda = a_1`.
    ClosedFormR1,
    /// The two-pair closed form.
    ClosedFormR2,
    /// The all-infinite harmonic limit.
    Limit,
}

impl std::fmt::Display for SolveMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            SolveMethod::Bisection => "bisection",
            SolveMethod::ClosedFormR1 => "closed_form_r1",
            SolveMethod::ClosedFormR2 => "closed_form_r2",
            SolveMethod::Limit => "limit",
        };
        f.write_str(name)
    }
}

/// A solved root with its final bracket and residual.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSolution {
    /// The root.
    pub lambda: f64,
    /// Enclosing interval at termination (`lo <= lambda <= hi`).
    pub bracket: (f64, f64),
    /// `|f(lambda)|` at the returned root (0 for exact closed forms).
    pub residual: f64,
    /// How the root was obtained.
    pub method: SolveMethod,
}

/// The two-sided sharp estimates for the minimal root.
///
/// Ordering: `harmonic < lower_est1 <= lower_est2 <= lambda_1 <
/// upper_est1`, with the three lower bounds attaining `lambda_1` exactly
/// when all breakpoints coincide.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SharpBounds {
    /// First-estimate lower bound `(1/c_1 + sum d_j/(a_j d_j + a_j))^{-1}`.
    pub lower_est1: f64,
    /// Refined lower bound through the harmonic value.
    pub lower_est2: f64,
    /// First-estimate strict upper bound `(sum d_j/(a_j d_j + a_j))^{-1}`.
    pub upper_est1: f64,
}

fn check_tol(tol: f64) -> Result<(), MinRootError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(MinRootError::InvalidTolerance(tol))
    }
}

/// Evaluates `f(lambda) = sum_j d_j/(a_j d_j + a_j - lambda) - 1/lambda`.
///
/// Infinite counts contribute the constant `1/a_j`. Evaluation at a
/// non-positive `lambda` or exactly at a breakpoint is an error.
pub fn eval_f(p: &ParamPair, lambda: f64) -> Result<f64, MinRootError> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(MinRootError::NonPositiveLambda(lambda));
    }
    let mut sum = 0.0;
    for (&aj, dj) in p.a.iter().zip(&p.d) {
        match dj {
            ExtCount::Infinite => sum += 1.0 / aj,
            ExtCount::Finite(d) => {
                let denom = aj * (d + 1.0) - lambda;
                if denom == 0.0 {
                    return Err(MinRootError::EvalAtPole(lambda));
                }
                sum += d / denom;
            }
        }
    }
    Ok(sum - 1.0 / lambda)
}

/// Sorted distinct breakpoints `c_1 < ... < c_s`, i.e. the values
/// `a_j d_j + a_j`, with infinity last when some count is infinite.
///
/// Values within relative distance 1e-14 are merged: the rewriting of the
/// equation as a sum over distinct poles requires distinct `c_i`.
pub fn breakpoints(p: &ParamPair) -> Vec<ExtCount> {
    let mut finite: Vec<f64> = p
        .a
        .iter()
        .zip(&p.d)
        .filter_map(|(&aj, dj)| dj.finite_value().map(|d| aj * (d + 1.0)))
        .collect();
    finite.sort_by(|x, y| x.partial_cmp(y).expect("breakpoints are finite"));
    let mut merged: Vec<f64> = Vec::with_capacity(finite.len());
    for value in finite {
        match merged.last() {
            Some(&last) if value - last <= BREAKPOINT_MERGE_RTOL * value.abs().max(last.abs()) => {}
            _ => merged.push(value),
        }
    }
    let mut out: Vec<ExtCount> = merged.into_iter().map(ExtCount::Finite).collect();
    if p.d.iter().any(ExtCount::is_infinite) {
        out.push(ExtCount::Infinite);
    }
    out
}

/// Midpoint bisection on an open interval known to contain exactly one
/// root of the strictly increasing `f`, without evaluating at the
/// endpoints (they may be poles).
fn bisect_open(p: &ParamPair, mut lo: f64, mut hi: f64, tol: f64) -> RootSolution {
    for _ in 0..MAX_BISECT_ITERS {
        if hi - lo <= tol * hi.abs() {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // interval exhausted at floating-point resolution
        }
        // mid is strictly inside a pole-free gap, so eval_f cannot fail
        let fm = eval_f(p, mid).expect("midpoint is not a pole");
        if fm > 0.0 {
            hi = mid;
        } else if fm < 0.0 {
            lo = mid;
        } else {
            return RootSolution {
                lambda: mid,
                bracket: (lo, hi),
                residual: 0.0,
                method: SolveMethod::Bisection,
            };
        }
    }
    let lambda = 0.5 * (lo + hi);
    let residual = eval_f(p, lambda).map(f64::abs).unwrap_or(0.0);
    RootSolution {
        lambda,
        bracket: (lo, hi),
        residual,
        method: SolveMethod::Bisection,
    }
}

/// The minimal solution `lambda_1(d, a)`.
///
/// Bisection runs on `[(sum 1/a_j)^{-1}, min(c_1, min_j a_j)]`, where the
/// equation difference is strictly increasing, non-positive at the left
/// end, and positive at the right end. With one pair the root is exactly
/// `a_1`; with every count infinite it is exactly the harmonic value.
pub fn min_root(p: &ParamPair, tol: f64) -> Result<RootSolution, MinRootError> {
    check_tol(tol)?;
    if p.all_infinite() {
        let lambda = p.harmonic_value();
        return Ok(RootSolution {
            lambda,
            bracket: (lambda, lambda),
            residual: 0.0,
            method: SolveMethod::Limit,
        });
    }
    if p.r() == 1 {
        let lambda = p.a[0];
        return Ok(RootSolution {
            lambda,
            bracket: (lambda, lambda),
            residual: 0.0,
            method: SolveMethod::ClosedFormR1,
        });
    }
    let lo = p.harmonic_value();
    let first_breakpoint = breakpoints(p)
        .first()
        .and_then(ExtCount::finite_value)
        .unwrap_or(f64::INFINITY);
    let hi = p.min_coefficient().min(first_breakpoint);
    Ok(bisect_open(p, lo, hi, tol))
}

/// Every solution of the equation: exactly one root strictly inside each
/// breakpoint gap `(c_{i-1}, c_i)` with `c_0 = 0`, in increasing order.
///
/// When the last breakpoint is infinite the final gap is unbounded and is
/// searched by geometric bracket expansion (the difference tends to the
/// positive constant `sum 1/a_j` over infinite counts, so a sign change
/// always appears). Beyond a finite last breakpoint the difference stays
/// negative and no root exists.
pub fn all_roots(p: &ParamPair, tol: f64) -> Result<Vec<RootSolution>, MinRootError> {
    check_tol(tol)?;
    let cs = breakpoints(p);
    let mut roots = Vec::with_capacity(cs.len());
    let mut left = 0.0;
    for c in &cs {
        match c {
            ExtCount::Finite(right) => {
                roots.push(bisect_open(p, left, *right, tol));
                left = *right;
            }
            ExtCount::Infinite => {
                if left == 0.0 {
                    // No finite poles at all: f = sum 1/a_j - 1/lambda.
                    let lambda = p.harmonic_value();
                    roots.push(RootSolution {
                        lambda,
                        bracket: (lambda, lambda),
                        residual: 0.0,
                        method: SolveMethod::Limit,
                    });
                } else {
                    let mut width = left.max(1.0);
                    let mut hi = left + width;
                    for _ in 0..MAX_BISECT_ITERS {
                        if eval_f(p, hi).expect("beyond all poles") > 0.0 {
                            break;
                        }
                        width *= 2.0;
                        hi = left + width;
                    }
                    roots.push(bisect_open(p, left, hi, tol));
                }
            }
        }
    }
    Ok(roots)
}

/// The two-pair closed form for the minimal root, in its numerically
/// stable version
///
/// ```text
/// lambda_1 = 2 a_1 a_2 / (a_1 + a_2 + sqrt((a_1 - a_2)^2 + 4 r_1 r_2 a_1 a_2))
/// ```
///
/// with `r_j = d_j/(d_j + 1)` (taken as 1 for an infinite count). The
/// alternative algebraic form subtracts nearly equal quantities under the
/// radical; this one does not.
pub fn closed_form_r2(a1: f64, a2: f64, d1: ExtCount, d2: ExtCount) -> Result<f64, MinRootError> {
    let p = ParamPair::new(vec![a1, a2], vec![d1, d2])?;
    let [a1, a2] = [p.a[0], p.a[1]];
    let radical = ((a1 - a2).powi(2) + 4.0 * d1.ratio() * d2.ratio() * a1 * a2).sqrt();
    Ok(2.0 * a1 * a2 / (a1 + a2 + radical))
}

/// The basic two-sided estimate for `r >= 2`:
/// `(sum 1/a_j)^{-1} <= lambda_1 < min_j a_j`, with equality on the left
/// exactly when every count is infinite.
pub fn bounds_basic(p: &ParamPair) -> Result<(f64, f64), MinRootError> {
    if p.r() < 2 {
        return Err(MinRootError::NeedAtLeastTwo(p.r()));
    }
    Ok((p.harmonic_value(), p.min_coefficient()))
}

/// The sharper estimates, defined when some count is finite.
///
/// Equality of either lower bound with `lambda_1` holds exactly when all
/// breakpoints coincide.
pub fn bounds_sharp(p: &ParamPair) -> Result<SharpBounds, MinRootError> {
    let c1 = breakpoints(p)
        .first()
        .and_then(ExtCount::finite_value)
        .ok_or(MinRootError::AllCountsInfinite)?;
    let ratio_sum: f64 = p
        .a
        .iter()
        .zip(&p.d)
        .map(|(&aj, dj)| dj.ratio() / aj)
        .sum();
    let lower_est1 = 1.0 / (1.0 / c1 + ratio_sum);
    let upper_est1 = 1.0 / ratio_sum;
    let lambda0 = p.harmonic_value();
    let refined_sum: f64 = p
        .a
        .iter()
        .zip(&p.d)
        .map(|(&aj, dj)| match dj {
            // d_j (c_1 - lambda_0) / (a_j d_j + a_j - lambda_0), with the
            // infinite-count limit (c_1 - lambda_0) / a_j.
            ExtCount::Finite(d) => d * (c1 - lambda0) / (aj * (d + 1.0) - lambda0),
            ExtCount::Infinite => (c1 - lambda0) / aj,
        })
        .sum();
    let lower_est2 = c1 / (1.0 + refined_sum);
    Ok(SharpBounds {
        lower_est1,
        lower_est2,
        upper_est1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: &[f64], d: &[f64]) -> ParamPair {
        ParamPair::new(
            a.to_vec(),
            d.iter().map(|&v| ExtCount::Finite(v)).collect(),
        )
        .unwrap()
    }

    fn pair_inf(a: &[f64]) -> ParamPair {
        ParamPair::new(a.to_vec(), vec![ExtCount::Infinite; a.len()]).unwrap()
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            ParamPair::new(vec![1.0], vec![]),
            Err(MinRootError::LengthMismatch { .. })
        ));
        assert!(matches!(
            ParamPair::new(vec![], vec![]),
            Err(MinRootError::EmptyParameters)
        ));
        assert!(matches!(
            ParamPair::new(vec![-1.0], vec![ExtCount::Infinite]),
            Err(MinRootError::NonPositiveCoefficient { index: 0, .. })
        ));
        assert!(matches!(
            ParamPair::new(vec![1.0], vec![ExtCount::Finite(0.0)]),
            Err(MinRootError::NonPositiveCount { index: 0 })
        ));
    }

    #[test]
    fn eval_matches_hand_values() {
        let p = pair(&[1.0], &[1.0]);
        assert_eq!(eval_f(&p, 1.0).unwrap(), 0.0);

        let p = pair_inf(&[1.0, 1.0]);
        assert_eq!(eval_f(&p, 0.5).unwrap(), 0.0);

        let p = pair(&[1.0, 1.0], &[2.0, 2.0]);
        assert!((eval_f(&p, 0.5).unwrap() - (-0.4)).abs() < 1e-15);
    }

    #[test]
    fn eval_rejects_poles_and_nonpositive() {
        let p = pair(&[1.0], &[1.0]);
        assert_eq!(eval_f(&p, 2.0), Err(MinRootError::EvalAtPole(2.0)));
        assert_eq!(eval_f(&p, 0.0), Err(MinRootError::NonPositiveLambda(0.0)));
        assert_eq!(eval_f(&p, -1.0), Err(MinRootError::NonPositiveLambda(-1.0)));
    }

    #[test]
    fn breakpoints_sorted_merged_and_infinite() {
        let p = pair(&[1.0, 2.0], &[1.0, 1.0]);
        assert_eq!(
            breakpoints(&p),
            vec![ExtCount::Finite(2.0), ExtCount::Finite(4.0)]
        );

        let p = pair(&[1.0, 1.0], &[2.0, 2.0]);
        assert_eq!(breakpoints(&p), vec![ExtCount::Finite(3.0)]);

        let p = ParamPair::new(vec![1.0], vec![ExtCount::Infinite]).unwrap();
        assert_eq!(breakpoints(&p), vec![ExtCount::Infinite]);
    }

    #[test]
    fn min_root_single_pair_is_exact() {
        let sol = min_root(&pair(&[5.0], &[3.0]), 1e-12).unwrap();
        assert_eq!(sol.lambda, 5.0);
        assert_eq!(sol.method, SolveMethod::ClosedFormR1);
        assert_eq!(sol.residual, 0.0);
    }

    #[test]
    fn min_root_two_pairs_bisection() {
        let sol = min_root(&pair(&[1.0, 1.0], &[2.0, 2.0]), 1e-13).unwrap();
        assert!((sol.lambda - 0.6).abs() < 1e-12);
        assert_eq!(sol.method, SolveMethod::Bisection);
        assert!(sol.bracket.0 <= sol.lambda && sol.lambda <= sol.bracket.1);
    }

    #[test]
    fn min_root_all_infinite_is_harmonic() {
        let p = ParamPair::new(vec![1.0, 2.0], vec![ExtCount::Infinite; 2]).unwrap();
        let sol = min_root(&p, 1e-12).unwrap();
        assert!((sol.lambda - 2.0 / 3.0).abs() < 1e-16);
        assert_eq!(sol.method, SolveMethod::Limit);
        assert_eq!(sol.residual, 0.0);
    }

    #[test]
    fn all_roots_one_per_gap() {
        let p = pair(&[1.0, 2.0], &[1.0, 1.0]);
        let roots = all_roots(&p, 1e-12).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(0.0 < roots[0].lambda && roots[0].lambda < 2.0);
        assert!(2.0 < roots[1].lambda && roots[1].lambda < 4.0);

        let roots = all_roots(&pair(&[1.0], &[1.0]), 1e-12).unwrap();
        assert_eq!(roots.len(), 1);
        assert!((roots[0].lambda - 1.0).abs() < 1e-12);

        // Coincident breakpoints merge into a single gap.
        let roots = all_roots(&pair(&[1.0, 1.0], &[2.0, 2.0]), 1e-13).unwrap();
        assert_eq!(roots.len(), 1);
        assert!((roots[0].lambda - 0.6).abs() < 1e-12);
    }

    #[test]
    fn all_roots_unbounded_gap_with_mixed_counts() {
        let p = ParamPair::new(
            vec![1.0, 1.0],
            vec![ExtCount::Finite(2.0), ExtCount::Infinite],
        )
        .unwrap();
        let roots = all_roots(&p, 1e-13).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].lambda < 3.0 && roots[1].lambda > 3.0);
        for root in &roots {
            assert!(eval_f(&p, root.lambda).unwrap().abs() < 1e-9);
        }
    }

    #[test]
    fn closed_form_two_pairs() {
        let fin = ExtCount::Finite;
        assert!((closed_form_r2(1.0, 1.0, fin(1.0), fin(1.0)).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert!((closed_form_r2(1.0, 1.0, fin(2.0), fin(2.0)).unwrap() - 0.6).abs() < 1e-15);
        assert!(
            (closed_form_r2(1.0, 1.0, ExtCount::Infinite, ExtCount::Infinite).unwrap() - 0.5)
                .abs()
                < 1e-15
        );
    }

    #[test]
    fn basic_bounds() {
        let p = pair(&[1.0, 2.0, 3.0], &[1.0, 1.0, 1.0]);
        let (lo, hi) = bounds_basic(&p).unwrap();
        assert!((lo - 6.0 / 11.0).abs() < 1e-15);
        assert_eq!(hi, 1.0);

        let p = pair(&[2.0, 2.0], &[1.0, 1.0]);
        let (lo, hi) = bounds_basic(&p).unwrap();
        assert_eq!((lo, hi), (1.0, 2.0));
        let lambda = min_root(&p, 1e-12).unwrap().lambda;
        assert!(lo < lambda && lambda < hi);

        assert!(matches!(
            bounds_basic(&pair(&[1.0], &[1.0])),
            Err(MinRootError::NeedAtLeastTwo(1))
        ));
    }

    #[test]
    fn sharp_bounds_worked_example() {
        let p = pair(&[1.0, 1.0], &[2.0, 2.0]);
        let sb = bounds_sharp(&p).unwrap();
        assert!((sb.lower_est1 - 0.6).abs() < 1e-15);
        assert!((sb.lower_est2 - 0.6).abs() < 1e-15);
        assert!((sb.upper_est1 - 0.75).abs() < 1e-15);
    }

    #[test]
    fn sharp_bounds_equal_breakpoint_family() {
        // a_1 (d_1 + 1) = a_2 (d_2 + 1) = 3: both lower bounds hit the root.
        let p = pair(&[1.0, 0.75], &[2.0, 3.0]);
        let sb = bounds_sharp(&p).unwrap();
        let lambda = min_root(&p, 1e-14).unwrap().lambda;
        assert!((sb.lower_est1 - lambda).abs() < 1e-12);
        assert!((sb.lower_est2 - lambda).abs() < 1e-12);
    }

    #[test]
    fn sharp_bounds_need_a_finite_count() {
        assert!(matches!(
            bounds_sharp(&pair_inf(&[1.0, 2.0])),
            Err(MinRootError::AllCountsInfinite)
        ));
    }

    #[test]
    fn truncation() {
        let p = ParamPair::new(
            vec![1.0, 1.0],
            vec![ExtCount::Infinite, ExtCount::Finite(3.0)],
        )
        .unwrap();
        let t = p.truncated(5);
        assert_eq!(t.d(), &[ExtCount::Finite(5.0), ExtCount::Finite(3.0)]);

        let t = pair_inf(&[1.0, 1.0]).truncated(1);
        assert_eq!(t.d(), &[ExtCount::Finite(1.0), ExtCount::Finite(1.0)]);
    }

    #[test]
    fn ext_count_parsing() {
        assert_eq!("inf".parse::<ExtCount>().unwrap(), ExtCount::Infinite);
        assert_eq!("2.5".parse::<ExtCount>().unwrap(), ExtCount::Finite(2.5));
        assert!("0".parse::<ExtCount>().is_err());
        assert!("x".parse::<ExtCount>().is_err());
    }

    #[test]
    fn invalid_tolerance() {
        let p = pair(&[1.0, 1.0], &[1.0, 1.0]);
        assert!(matches!(
            min_root(&p, 0.0),
            Err(MinRootError::InvalidTolerance(_))
        ));
        assert!(matches!(
            all_roots(&p, -1.0),
            Err(MinRootError::InvalidTolerance(_))
        ));
    }
}
