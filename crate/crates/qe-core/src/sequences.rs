//! Exact-arithmetic verification of the combinatorial identities behind
//! the closed-form path bounds, the integer sequence they generate, and
//! the determinant family certifying the `-1/2` upper bound.
//!
//! Everything here is arbitrary-precision integer or rational arithmetic;
//! no floating point. The claims are exact identities, so the tests
//! assert exact equality with zero tolerance.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision signed integer used throughout this module.
pub type ExactInt = BigInt;

/// Arbitrary-precision rational used for closed forms with denominators.
pub type ExactRational = BigRational;

/// The three double/single sums with closed forms used by the path-bound
/// derivation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombSum {
    /// `sum_{i,j=1..n} min(i,j) i(n-i) j(n-j) (-1)^(i+j)`
    /// `= n (2n^4 + 20n^2 - 7 + 15(-1)^n) / 240`.
    MinWeightedAlternating,
    /// `sum_{i,j=1..n} i(n-i) j(n-j) (-1)^(i+j) = (1 + (-1)^n) n^2 / 8`.
    ProductAlternating,
    /// `sum_{i=1..n} i^2 (n-i)^2 = (n^5 - n) / 30`.
    SquaredProducts,
}

fn sign_of(k: u64) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Brute-force evaluation of the sum, exactly. Empty sums (n = 0) are 0.
pub fn comb_sum_brute_force(kind: CombSum, n: u32) -> ExactInt {
    let n = u64::from(n);
    let mut total = BigInt::zero();
    match kind {
        CombSum::MinWeightedAlternating => {
            for i in 1..=n {
                let wi = (i * (n - i)) as i64;
                for j in 1..=n {
                    let wj = (j * (n - j)) as i64;
                    let term =
                        BigInt::from(i.min(j)) * wi * wj * sign_of(i + j);
                    total += term;
                }
            }
        }
        CombSum::ProductAlternating => {
            for i in 1..=n {
                let wi = (i * (n - i)) as i64;
                for j in 1..=n {
                    let wj = (j * (n - j)) as i64;
                    total += BigInt::from(wi) * wj * sign_of(i + j);
                }
            }
        }
        CombSum::SquaredProducts => {
            for i in 1..=n {
                let w = BigInt::from(i * (n - i));
                total += &w * &w;
            }
        }
    }
    total
}

/// The closed form of the sum, as an exact rational.
pub fn comb_sum_closed_form(kind: CombSum, n: u32) -> ExactRational {
    let n = BigInt::from(n);
    let sign = if (&n % 2u8).is_zero() {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    match kind {
        CombSum::MinWeightedAlternating => {
            let inner = 2 * n.pow(4) + 20 * n.pow(2) - 7 + 15 * sign;
            BigRational::new(n * inner, BigInt::from(240))
        }
        CombSum::ProductAlternating => {
            BigRational::new((BigInt::one() + sign) * n.pow(2), BigInt::from(8))
        }
        CombSum::SquaredProducts => BigRational::new(n.pow(5) - n, BigInt::from(30)),
    }
}

/// The alternating power sums `sum_{i=1..n} i^p (-1)^i` for `p = 1, 2, 3`,
/// brute force.
pub fn alt_power_sum(power: u32, n: u32) -> ExactInt {
    assert!((1..=3).contains(&power), "power must be 1, 2, or 3");
    let mut total = BigInt::zero();
    for i in 1..=u64::from(n) {
        total += BigInt::from(i).pow(power) * sign_of(i);
    }
    total
}

/// Closed forms of the alternating power sums.
pub fn alt_power_sum_closed(power: u32, n: u32) -> ExactRational {
    assert!((1..=3).contains(&power), "power must be 1, 2, or 3");
    let n = BigInt::from(n);
    let sign = if (&n % 2u8).is_zero() {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    match power {
        1 => BigRational::new(2 * &n * &sign + &sign - 1, BigInt::from(4)),
        2 => BigRational::new(&n * (&n + 1) * &sign, BigInt::from(2)),
        _ => BigRational::new(
            4 * n.pow(3) * &sign + 6 * n.pow(2) * &sign - &sign + 1,
            BigInt::from(8),
        ),
    }
}

/// `a_n = n (2n^4 + 20n^2 - 7 + 15(-1)^n) / 240`, always an integer.
///
/// Panics if the divisibility by 240 ever failed; that would falsify the
/// closed form rather than be a recoverable condition.
pub fn a_closed(n: u32) -> ExactInt {
    let value = comb_sum_closed_form(CombSum::MinWeightedAlternating, n);
    assert!(
        value.is_integer(),
        "a_{n} is not an integer; closed form falsified"
    );
    value.to_integer()
}

/// Taylor coefficients `0..=max_n` of the rational generating function
///
/// ```text
/// z^2 (1 + z^2)^2 / ((1 + z)^2 (1 - z)^6)
/// ```
///
/// by exact long division: the denominator is expanded to an integer
/// polynomial and the coefficients solve the induced linear recurrence
/// against the numerator `z^2 + 2z^4 + z^6`.
pub fn a_series(max_n: usize) -> Vec<ExactInt> {
    let denominator = poly_mul(
        &poly_mul(&[1, 1], &[1, 1]),               // (1 + z)^2
        &poly_pow(&[1, -1], 6),                    // (1 - z)^6
    );
    debug_assert_eq!(denominator[0], 1);
    let numerator = [0i64, 0, 1, 0, 2, 0, 1];
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let mut value = BigInt::from(*numerator.get(n).unwrap_or(&0));
        for k in 1..denominator.len().min(n + 1) {
            value -= &coeffs[n - k] * denominator[k];
        }
        coeffs.push(value);
    }
    coeffs
}

fn poly_mul(p: &[i64], q: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; p.len() + q.len() - 1];
    for (i, &a) in p.iter().enumerate() {
        for (j, &b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

fn poly_pow(p: &[i64], e: u32) -> Vec<i64> {
    let mut out = vec![1i64];
    for _ in 0..e {
        out = poly_mul(&out, p);
    }
    out
}

/// `b_n = ceil(n^2 / 2)`.
pub fn b_ceil(n: u32) -> ExactInt {
    let sq = BigInt::from(n) * n;
    (sq + 1) / 2
}

/// The self-convolution `sum_{k=0..n} b_k b_{n-k}`; equals `a_n`.
pub fn convolution_check(n: u32) -> ExactInt {
    (0..=n).map(|k| b_ceil(k) * b_ceil(n - k)).sum()
}

/// The matrix `[4 min(i, j) - 1 - delta_ij]` (1-based indices) whose
/// determinants certify positive definiteness of the path pencil at the
/// boundary value `1/2`.
fn min_matrix(n: usize, corner: Option<&ExactInt>) -> Vec<Vec<ExactInt>> {
    let mut rows = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let base = 4 * (i.min(j) as i64 + 1) - 1 - i64::from(i == j);
            *entry = BigInt::from(base);
        }
    }
    if let Some(u) = corner {
        rows[n - 1][n - 1] = u.clone();
    }
    rows
}

/// Exact determinant by Bareiss fraction-free elimination.
fn bareiss_det(mut m: Vec<Vec<ExactInt>>) -> ExactInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(pivot) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, pivot);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let value = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = value;
            }
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// `det [4 min(i, j) - 1 - delta_ij]` of size `n >= 1`; equals `n + 1`.
pub fn det_min_matrix(n: usize) -> ExactInt {
    assert!(n >= 1, "matrix size must be at least 1");
    bareiss_det(min_matrix(n, None))
}

/// The same determinant with the corner entry `(n, n)` replaced by `u`;
/// equals `n u - (n - 1)(4n + 1)`. The unmodified matrix is the case
/// `u = 4n - 2`.
pub fn det_min_matrix_corner(n: usize, u: &ExactInt) -> ExactInt {
    assert!(n >= 1, "matrix size must be at least 1");
    bareiss_det(min_matrix(n, Some(u)))
}
