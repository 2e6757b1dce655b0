//! Arbitrary-precision binomial coefficients and the closed-form face-count
//! bounds for polytopes with few vertices or few facets.
//!
//! Every function here is purely combinatorial: inputs are small integers,
//! outputs are exact `BigInt` values. Nothing in this module looks at
//! coordinates; the geometric side lives in [`crate::kernel`].

use std::fmt;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Shared Pascal-triangle rows, grown on demand. Row `n` holds
/// `C(n, 0) ..= C(n, n)`. Readers take the read lock; growth takes the write
/// lock and extends row by row, so concurrent verifier workers can share one
/// table safely.
static PASCAL_ROWS: RwLock<Vec<Vec<BigInt>>> = RwLock::new(Vec::new());

fn pascal_lookup(n: usize, c: usize) -> BigInt {
    if c > n {
        return BigInt::zero();
    }
    {
        let rows = PASCAL_ROWS.read().unwrap();
        if n < rows.len() {
            return rows[n][c].clone();
        }
    }
    let mut rows = PASCAL_ROWS.write().unwrap();
    while rows.len() <= n {
        let r = rows.len();
        let mut row = vec![BigInt::one(); r + 1];
        for j in 1..r {
            row[j] = &rows[r - 1][j - 1] + &rows[r - 1][j];
        }
        rows.push(row);
    }
    rows[n][c].clone()
}

/// `C(n, c)` with the convention `C(n, c) = 0` for `c > n >= 0`.
///
/// Negative arguments are rejected: every formula in this module keeps its
/// binomial indices nonnegative on its stated domain, so a negative index
/// signals a caller bug rather than a value that should silently vanish.
pub fn binomial(n: i64, c: i64) -> Result<BigInt, FormulaError> {
    if n < 0 || c < 0 {
        return Err(FormulaError::NegativeBinomialIndex { n, c });
    }
    Ok(pascal_lookup(n as usize, c as usize))
}

/// Internal shorthand for formulas whose domain checks already guarantee
/// nonnegative indices.
pub(crate) fn binom(n: i64, c: i64) -> BigInt {
    debug_assert!(n >= 0 && c >= 0, "negative binomial index n={n}, c={c}");
    pascal_lookup(n as usize, c as usize)
}

// ---------------------------------------------------------------------------
// Parameter bundle and errors
// ---------------------------------------------------------------------------

/// The named parameters that appear across the closed-form bounds. Errors
/// carry one of these so a failed call reports the exact offending point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FormulaParams {
    pub d: Option<i64>,
    pub k: Option<i64>,
    pub s: Option<i64>,
    pub a: Option<i64>,
    pub m: Option<i64>,
    pub n_facets: Option<i64>,
}

impl FormulaParams {
    pub fn new() -> Self {
        Self::default()
    }
    pub fn d(mut self, v: i64) -> Self {
        self.d = Some(v);
        self
    }
    pub fn k(mut self, v: i64) -> Self {
        self.k = Some(v);
        self
    }
    pub fn s(mut self, v: i64) -> Self {
        self.s = Some(v);
        self
    }
    pub fn a(mut self, v: i64) -> Self {
        self.a = Some(v);
        self
    }
    pub fn m(mut self, v: i64) -> Self {
        self.m = Some(v);
        self
    }
    pub fn n_facets(mut self, v: i64) -> Self {
        self.n_facets = Some(v);
        self
    }
}

impl fmt::Display for FormulaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut put = |f: &mut fmt::Formatter<'_>, name: &str, v: Option<i64>| {
            if let Some(v) = v {
                if !first {
                    write!(f, ", ").ok();
                }
                first = false;
                write!(f, "{name}={v}").ok();
            }
        };
        put(f, "d", self.d);
        put(f, "k", self.k);
        put(f, "s", self.s);
        put(f, "a", self.a);
        put(f, "m", self.m);
        put(f, "n_facets", self.n_facets);
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("binomial indices must be nonnegative (got n={n}, c={c})")]
    NegativeBinomialIndex { n: i64, c: i64 },
    #[error("{formula}: parameters {params} outside the valid domain: {reason}")]
    OutOfDomain {
        formula: &'static str,
        params: FormulaParams,
        reason: &'static str,
    },
    #[error("face-count vector rejected: {0}")]
    InvalidFaceVector(String),
}

fn out_of_domain(
    formula: &'static str,
    params: FormulaParams,
    reason: &'static str,
) -> FormulaError {
    FormulaError::OutOfDomain {
        formula,
        params,
        reason,
    }
}

// ---------------------------------------------------------------------------
// Face-count vectors
// ---------------------------------------------------------------------------

/// The proper-face counts `(f_0, ..., f_{d-1})` of a `d`-polytope, or a
/// formula-predicted vector of the same shape.
///
/// `realized` records whether the vector claims to count the faces of an
/// actual polytope; realized vectors are validated against the alternating-sum
/// relation `f_0 - f_1 + ... = 1 - (-1)^d` and the trivial bounds
/// `f_0 >= d+1`, `f_{d-1} >= d+1` at construction. Equality ignores the flag
/// and compares shape and counts only, so formula predictions can be compared
/// against enumerated vectors directly.
#[derive(Debug, Clone, Eq)]
pub struct FaceCountVector {
    dim: usize,
    counts: Vec<BigInt>,
    realized: bool,
}

impl PartialEq for FaceCountVector {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.counts == other.counts
    }
}

impl FaceCountVector {
    /// A formula-predicted vector: entries must be nonnegative, nothing else
    /// is assumed.
    pub fn formula(dim: usize, counts: Vec<BigInt>) -> Result<Self, FormulaError> {
        Self::build(dim, counts, false)
    }

    /// A vector that claims to be realized by a `d`-polytope.
    pub fn realized(dim: usize, counts: Vec<BigInt>) -> Result<Self, FormulaError> {
        Self::build(dim, counts, true)
    }

    /// Convenience constructor for realized vectors with small entries.
    pub fn realized_from(dim: usize, counts: &[i64]) -> Result<Self, FormulaError> {
        Self::realized(dim, counts.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn build(dim: usize, counts: Vec<BigInt>, realized: bool) -> Result<Self, FormulaError> {
        if dim == 0 {
            return Err(FormulaError::InvalidFaceVector(
                "dimension must be positive".into(),
            ));
        }
        if counts.len() != dim {
            return Err(FormulaError::InvalidFaceVector(format!(
                "expected {} entries for dimension {}, got {}",
                dim,
                dim,
                counts.len()
            )));
        }
        if let Some(neg) = counts.iter().position(|c| c.is_negative()) {
            return Err(FormulaError::InvalidFaceVector(format!(
                "entry f_{} = {} is negative",
                neg, counts[neg]
            )));
        }
        let v = Self {
            dim,
            counts,
            realized,
        };
        if realized {
            let min = BigInt::from(dim as i64 + 1);
            if v.counts[0] < min || v.counts[dim - 1] < min {
                return Err(FormulaError::InvalidFaceVector(format!(
                    "a {}-polytope needs at least {} vertices and {} facets, got {}",
                    dim, min, min, v
                )));
            }
            if !v.euler_holds() {
                return Err(FormulaError::InvalidFaceVector(format!(
                    "alternating sum of {} is {}, want {}",
                    v,
                    v.alternating_sum(),
                    euler_target(dim)
                )));
            }
        }
        Ok(v)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// `f_k`, panicking on a grade outside `0..dim`.
    pub fn count(&self, k: usize) -> &BigInt {
        &self.counts[k]
    }

    pub fn is_realized(&self) -> bool {
        self.realized
    }

    /// `f_0 - f_1 + f_2 - ...` over the proper grades.
    pub fn alternating_sum(&self) -> BigInt {
        let mut sum = BigInt::zero();
        for (i, c) in self.counts.iter().enumerate() {
            if i % 2 == 0 {
                sum += c;
            } else {
                sum -= c;
            }
        }
        sum
    }

    pub fn euler_holds(&self) -> bool {
        self.alternating_sum() == euler_target(self.dim)
    }

    /// The vector read backwards — the f-vector of the polar dual when this
    /// one is realized.
    pub fn reversed(&self) -> Self {
        let mut counts = self.counts.clone();
        counts.reverse();
        Self {
            dim: self.dim,
            counts,
            realized: self.realized,
        }
    }
}

/// `1 - (-1)^d`, the required alternating sum of proper face counts.
pub fn euler_target(dim: usize) -> BigInt {
    if dim % 2 == 0 {
        BigInt::zero()
    } else {
        BigInt::from(2)
    }
}

impl fmt::Display for FaceCountVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

// ---------------------------------------------------------------------------
// Closed-form bounds
// ---------------------------------------------------------------------------

/// Minimum number of `k`-faces of a `d`-polytope with `n_vertices = d + s`
/// vertices, `1 <= s <= d`:
///
/// `C(d+1, k+1) + C(d, k+1) - C(d+1-s, k+1)` for `1 <= k <= d-1`.
pub fn theta(k: i64, n_vertices: i64, d: i64) -> Result<BigInt, FormulaError> {
    let s = n_vertices - d;
    let params = FormulaParams::new().d(d).k(k).s(s);
    if !(1..=d).contains(&s) {
        return Err(out_of_domain(
            "theta",
            params,
            "needs d+1 <= n_vertices <= 2d",
        ));
    }
    if !(1..=d - 1).contains(&k) {
        return Err(out_of_domain("theta", params, "needs 1 <= k <= d-1"));
    }
    Ok(binom(d + 1, k + 1) + binom(d, k + 1) - binom(d + 1 - s, k + 1))
}

/// Minimum number of `k`-faces of a `d`-polytope with
/// `n_vertices = 2d + s - 1` vertices and at least `d + 3` facets,
/// `2 <= s <= d`:
///
/// `C(d+1, k+1) + 2·C(d, k+1) - C(d+1-s, k+1)` for `1 <= k <= d-1`.
pub fn eta(k: i64, n_vertices: i64, d: i64) -> Result<BigInt, FormulaError> {
    let s = n_vertices - 2 * d + 1;
    let params = FormulaParams::new().d(d).k(k).s(s);
    if !(2..=d).contains(&s) {
        return Err(out_of_domain(
            "eta",
            params,
            "needs 2d+1 <= n_vertices <= 3d-1",
        ));
    }
    if !(1..=d - 1).contains(&k) {
        return Err(out_of_domain("eta", params, "needs 1 <= k <= d-1"));
    }
    Ok(eta_formula(k, s, d))
}

/// The raw binomial expression behind [`eta`], without the domain guard.
///
/// Verification scans evaluate this at boundary indices (for instance `k = 0`,
/// where the expression no longer counts faces of an actual polytope), so it
/// is kept separate from the guarded public entry point.
pub(crate) fn eta_formula(k: i64, s: i64, d: i64) -> BigInt {
    binom(d + 1, k + 1) + 2 * binom(d, k + 1) - binom(d + 1 - s, k + 1)
}

/// Minimum number of `k`-faces of a `d`-polytope with exactly `d + 2` facets
/// and at least `2d + s - 1` vertices, `d >= 4`, `2 <= s <= d-2`. With
/// `a = floor((d+s)/2) + 1`:
///
/// `C(d+1, k+1) + C(d, k+1) + C(d-1, k+1) - C(d-a+2, k+1) - C(d-a+1, k+1)`.
///
/// Every call cross-checks two equivalent writings of the same quantity: the
/// four-term form `C(d+2, k+2) - C(d-a+3, k+2) - C(d-1, k+2) + C(d-a+1, k+2)`
/// (the pyramid-over-product count at `(a, 2)`), and for `s = 3` the version
/// with upper indices `ceil((d+1)/2) - 1` and `ceil((d+1)/2) - 2`.
pub fn tau(k: i64, d: i64, s: i64) -> Result<BigInt, FormulaError> {
    let params = FormulaParams::new().d(d).k(k).s(s);
    if d < 4 {
        return Err(out_of_domain("tau", params, "needs d >= 4"));
    }
    if !(2..=d - 2).contains(&s) {
        return Err(out_of_domain("tau", params, "needs 2 <= s <= d-2"));
    }
    if !(1..=d - 1).contains(&k) {
        return Err(out_of_domain("tau", params, "needs 1 <= k <= d-1"));
    }
    let a = (d + s) / 2 + 1;
    let val = tau_formula(k, s, d);
    let four_term = binom(d + 2, k + 2) - binom(d - a + 3, k + 2) - binom(d - 1, k + 2)
        + binom(d - a + 1, k + 2);
    assert_eq!(
        val, four_term,
        "tau({k}, {d}, {s}): five-term and four-term forms disagree"
    );
    if s == 3 {
        let c1 = (d + 2) / 2 - 1; // ceil((d+1)/2) - 1
        let c2 = c1 - 1;
        let alt = binom(d + 1, k + 1) + binom(d, k + 1) + binom(d - 1, k + 1)
            - binom(c1, k + 1)
            - binom(c2, k + 1);
        assert_eq!(
            val, alt,
            "tau({k}, {d}, {s}): s=3 ceiling form disagrees with the floor form"
        );
    }
    Ok(val)
}

/// The raw binomial expression behind [`tau`], without the domain guard.
/// Verification scans evaluate it at `k = 0` and at dimensions below the
/// guarded minimum, where it is a formal quantity rather than a face count.
pub(crate) fn tau_formula(k: i64, s: i64, d: i64) -> BigInt {
    let a = (d + s) / 2 + 1;
    binom(d + 1, k + 1) + binom(d, k + 1) + binom(d - 1, k + 1)
        - binom(d - a + 2, k + 1)
        - binom(d - a + 1, k + 1)
}

fn pyr_domain(
    formula: &'static str,
    k: i64,
    a: i64,
    m: i64,
    d: i64,
) -> Result<(), FormulaError> {
    let params = FormulaParams::new().d(d).k(k).a(a).m(m);
    if !(2..=d).contains(&a) {
        return Err(out_of_domain(formula, params, "needs 2 <= a <= d"));
    }
    if !(1..=a / 2).contains(&m) {
        return Err(out_of_domain(formula, params, "needs 1 <= m <= floor(a/2)"));
    }
    if !(0..=d - 1).contains(&k) {
        return Err(out_of_domain(formula, params, "needs 0 <= k <= d-1"));
    }
    Ok(())
}

/// Number of `k`-faces of the `(d-a)`-fold pyramid over `T(m) x T(a-m)`, the
/// product of an `m`-simplex and an `(a-m)`-simplex:
///
/// `C(d+2, k+2) - C(d-a+m+1, k+2) - C(d-m+1, k+2) + C(d-a+1, k+2)`
///
/// for `2 <= a <= d`, `1 <= m <= floor(a/2)`, `0 <= k <= d-1`. These are
/// exactly the `d`-polytopes with `d + 2` facets; the polytope has
/// `d + 1 + m(a-m)` vertices, and every call re-checks that the `k = 0`
/// instance of the formula reproduces that count.
pub fn pyr_prod_count(k: i64, a: i64, m: i64, d: i64) -> Result<BigInt, FormulaError> {
    pyr_domain("pyr_prod_count", k, a, m, d)?;
    let count = pyr_prod_formula(k, a, m, d);
    let vertex_count = pyr_prod_formula(0, a, m, d);
    assert_eq!(
        vertex_count,
        BigInt::from(d + 1 + m * (a - m)),
        "pyr_prod_count(a={a}, m={m}, d={d}): k=0 value must equal d+1+m(a-m)"
    );
    Ok(count)
}

fn pyr_prod_formula(k: i64, a: i64, m: i64, d: i64) -> BigInt {
    binom(d + 2, k + 2) - binom(d - a + m + 1, k + 2) - binom(d - m + 1, k + 2)
        + binom(d - a + 1, k + 2)
}

/// Number of `k`-faces of the `(d-a)`-fold pyramid over `T(m) + T(a-m)`, the
/// direct sum of an `m`-simplex and an `(a-m)`-simplex:
///
/// `C(d+2, d-k+1) - C(d-a+m+1, d-k+1) - C(d-m+1, d-k+1) + C(d-a+1, d-k+1)`
///
/// for the same parameter domain as [`pyr_prod_count`]. These are exactly the
/// `d`-polytopes with `d + 2` vertices; the polytope has `d + 1 + m(a-m)`
/// facets. Every call re-checks the polar reflection
/// `pyr_sum_count(k, a, m, d) = pyr_prod_count(d-1-k, a, m, d)`.
pub fn pyr_sum_count(k: i64, a: i64, m: i64, d: i64) -> Result<BigInt, FormulaError> {
    pyr_domain("pyr_sum_count", k, a, m, d)?;
    let count = binom(d + 2, d - k + 1)
        - binom(d - a + m + 1, d - k + 1)
        - binom(d - m + 1, d - k + 1)
        + binom(d - a + 1, d - k + 1);
    let reflected = pyr_prod_count(d - 1 - k, a, m, d)
        .expect("reflected grade stays in the shared domain");
    assert_eq!(
        count, reflected,
        "pyr_sum_count(k={k}, a={a}, m={m}, d={d}) must mirror pyr_prod_count at grade d-1-k"
    );
    Ok(count)
}

/// Barnette's lower bound on the number of `k`-faces of a simple `d`-polytope
/// with `n_facets` facets:
///
/// * `k = 0`: `(d-1)·n_facets - (d+1)(d-2)`;
/// * `1 <= k <= d-2`: `C(d, k+1)·n_facets - C(d+1, k+1)·(d-1-k)`.
///
/// The facet grade `k = d-1` is outside the domain — the bound describes the
/// face counts below the given facet count, so asking for it is a caller bug
/// surfaced as an error.
pub fn barnette_bound(k: i64, d: i64, n_facets: i64) -> Result<BigInt, FormulaError> {
    let params = FormulaParams::new().d(d).k(k).n_facets(n_facets);
    if d < 2 {
        return Err(out_of_domain("barnette_bound", params, "needs d >= 2"));
    }
    if n_facets < d + 1 {
        return Err(out_of_domain(
            "barnette_bound",
            params,
            "needs n_facets >= d+1",
        ));
    }
    if !(0..=d - 2).contains(&k) {
        return Err(out_of_domain(
            "barnette_bound",
            params,
            "needs 0 <= k <= d-2 (the facet grade is the given count, not bounded here)",
        ));
    }
    if k == 0 {
        Ok(BigInt::from((d - 1) * n_facets - (d + 1) * (d - 2)))
    } else {
        Ok(binom(d, k + 1) * n_facets - binom(d + 1, k + 1) * (d - 1 - k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent Pascal-triangle oracle: builds each row iteratively with
    /// plain additions and no shared state with the implementation's table.
    fn pascal_oracle(n_max: usize) -> Vec<Vec<BigInt>> {
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let mut row = vec![BigInt::one()];
            for c in 1..n {
                row.push(&prev[c - 1] + &prev[c]);
            }
            row.push(BigInt::one());
            rows.push(row);
        }
        rows
    }

    fn b(n: i64, c: i64) -> BigInt {
        binomial(n, c).unwrap()
    }

    #[test]
    fn binomial_matches_independent_pascal_oracle() {
        let oracle = pascal_oracle(220);
        for n in 0..=220i64 {
            for c in 0..=n {
                assert_eq!(
                    b(n, c),
                    oracle[n as usize][c as usize],
                    "C({n}, {c}) disagrees with the Pascal oracle"
                );
            }
        }
    }

    #[test]
    fn binomial_edge_cases() {
        assert_eq!(b(0, 0), BigInt::one());
        assert_eq!(b(5, 0), BigInt::one());
        assert_eq!(b(2, 5), BigInt::zero(), "c > n must give 0");
        assert_eq!(b(6, 2), BigInt::from(15));
        assert!(matches!(
            binomial(-1, 0),
            Err(FormulaError::NegativeBinomialIndex { .. })
        ));
        assert!(matches!(
            binomial(3, -2),
            Err(FormulaError::NegativeBinomialIndex { .. })
        ));
    }

    #[test]
    fn pascal_recurrence_holds_up_to_200() {
        for n in 1..=200i64 {
            for c in 1..=n {
                assert_eq!(
                    b(n, c),
                    b(n - 1, c - 1) + b(n - 1, c),
                    "Pascal recurrence fails at C({n}, {c})"
                );
            }
        }
    }

    #[test]
    fn difference_of_binomials_telescopes() {
        // C(n,c) - C(n-a,c) = sum_{i=1..a} C(n-i, c-1), checked with running
        // partial sums so each grid point costs one addition.
        for n in 1..=100i64 {
            for c in 1..=n {
                let mut partial = BigInt::zero();
                for a in 1..=n {
                    partial += b(n - a, c - 1);
                    assert_eq!(
                        b(n, c) - b(n - a, c),
                        partial,
                        "telescoping fails at n={n}, c={c}, a={a}"
                    );
                }
            }
        }
    }

    #[test]
    fn column_sum_identity() {
        // C(n,c) = sum_{i=1..n} C(n-i, c-1): the a = n case of the telescoping
        // identity, restated directly.
        for n in 1..=100i64 {
            for c in 1..=100i64 {
                let mut sum = BigInt::zero();
                for i in 1..=n {
                    sum += b(n - i, c - 1);
                }
                assert_eq!(b(n, c), sum, "column sum fails at n={n}, c={c}");
            }
        }
    }

    #[test]
    fn theta_frozen_values() {
        // 5-polytope on 8 vertices, and the square pyramid (3-polytope on 5).
        assert_eq!(theta(1, 8, 5).unwrap(), BigInt::from(22));
        assert_eq!(theta(1, 5, 3).unwrap(), BigInt::from(8));
        assert_eq!(theta(2, 5, 3).unwrap(), BigInt::from(5));
    }

    #[test]
    fn theta_domain() {
        assert!(theta(1, 5, 5).is_err(), "s = 0 must be rejected");
        assert!(theta(1, 11, 5).is_err(), "s = d+1 must be rejected");
        assert!(theta(0, 8, 5).is_err(), "k = 0 must be rejected");
        assert!(theta(5, 8, 5).is_err(), "k = d must be rejected");
    }

    #[test]
    fn eta_frozen_values() {
        assert_eq!(eta(1, 12, 5).unwrap(), BigInt::from(32));
        assert_eq!(eta(2, 12, 5).unwrap(), BigInt::from(39));
        assert_eq!(eta(1, 7, 3).unwrap(), BigInt::from(11));
        assert_eq!(eta(1, 20, 9).unwrap(), BigInt::from(96));
        assert_eq!(eta(3, 20, 9).unwrap(), BigInt::from(427));
    }

    #[test]
    fn eta_domain() {
        assert!(eta(1, 10, 5).is_err(), "s = 1 must be rejected");
        assert!(eta(1, 15, 5).is_err(), "s = d+1 must be rejected");
        assert!(eta(0, 12, 5).is_err());
        assert!(eta(5, 12, 5).is_err());
    }

    #[test]
    fn tau_frozen_values() {
        assert_eq!(tau(1, 5, 3).unwrap(), BigInt::from(30));
        assert_eq!(tau(3, 5, 3).unwrap(), BigInt::from(21));
        assert_eq!(tau(4, 5, 3).unwrap(), BigInt::from(7));
        assert_eq!(tau(1, 9, 3).unwrap(), BigInt::from(100));
        assert_eq!(tau(3, 9, 3).unwrap(), BigInt::from(405));
    }

    #[test]
    fn tau_domain() {
        assert!(tau(1, 3, 2).is_err(), "d = 3 must be rejected");
        assert!(tau(1, 5, 1).is_err(), "s = 1 must be rejected");
        assert!(tau(1, 5, 4).is_err(), "s = d-1 must be rejected");
        assert!(tau(0, 5, 3).is_err());
        assert!(tau(5, 5, 3).is_err());
    }

    #[test]
    fn tau_internal_forms_agree_on_a_wide_grid() {
        // The s = 3 ceiling form and the four-term form are asserted inside
        // every call; sweeping the grid exercises those asserts.
        for d in 5..=100i64 {
            for k in 1..=d - 1 {
                tau(k, d, 3).unwrap();
            }
        }
        for d in 4..=60i64 {
            for s in 2..=d - 2 {
                for k in 1..=d - 1 {
                    tau(k, d, s).unwrap();
                }
            }
        }
    }

    #[test]
    fn pyr_prod_frozen_values() {
        // T(2) x T(3) itself (a = d = 5) and the 4-dimensional T(2) x T(2).
        assert_eq!(pyr_prod_count(0, 5, 2, 5).unwrap(), BigInt::from(12));
        assert_eq!(pyr_prod_count(1, 5, 2, 5).unwrap(), BigInt::from(30));
        assert_eq!(pyr_prod_count(1, 4, 2, 4).unwrap(), BigInt::from(18));
    }

    #[test]
    fn pyr_sum_frozen_values() {
        // T(1) + T(3): 6 vertices, 14 edges.
        assert_eq!(pyr_sum_count(0, 4, 1, 4).unwrap(), BigInt::from(6));
        assert_eq!(pyr_sum_count(1, 4, 1, 4).unwrap(), BigInt::from(14));
    }

    #[test]
    fn pyr_domain_checks() {
        assert!(pyr_prod_count(0, 1, 1, 5).is_err(), "a = 1 rejected");
        assert!(pyr_prod_count(0, 6, 1, 5).is_err(), "a > d rejected");
        assert!(pyr_prod_count(0, 5, 3, 5).is_err(), "m > floor(a/2) rejected");
        assert!(pyr_prod_count(5, 5, 2, 5).is_err(), "k = d rejected");
        assert!(pyr_sum_count(-1, 5, 2, 5).is_err(), "k < 0 rejected");
    }

    #[test]
    fn pyr_sum_top_grade_counts_facets() {
        // The k = d-1 entry is the facet count d+1+m(a-m); k = 0 is the
        // vertex count d+2.
        for d in 2..=25i64 {
            for a in 2..=d {
                for m in 1..=a / 2 {
                    assert_eq!(
                        pyr_sum_count(d - 1, a, m, d).unwrap(),
                        BigInt::from(d + 1 + m * (a - m)),
                        "facet count at d={d}, a={a}, m={m}"
                    );
                    assert_eq!(
                        pyr_sum_count(0, a, m, d).unwrap(),
                        BigInt::from(d + 2),
                        "vertex count at d={d}, a={a}, m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn pyr_counts_reflect_under_polarity() {
        for d in 2..=40i64 {
            for a in 2..=d {
                for m in 1..=a / 2 {
                    for k in 0..=d - 1 {
                        assert_eq!(
                            pyr_sum_count(k, a, m, d).unwrap(),
                            pyr_prod_count(d - 1 - k, a, m, d).unwrap(),
                            "reflection fails at d={d}, a={a}, m={m}, k={k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn barnette_frozen_values() {
        // The cube: simple 3-polytope with 6 facets, attaining both bounds.
        assert_eq!(barnette_bound(0, 3, 6).unwrap(), BigInt::from(8));
        assert_eq!(barnette_bound(1, 3, 6).unwrap(), BigInt::from(12));
    }

    #[test]
    fn barnette_domain() {
        assert!(barnette_bound(2, 3, 6).is_err(), "k = d-1 rejected");
        assert!(barnette_bound(3, 3, 6).is_err(), "k > d-1 rejected");
        assert!(barnette_bound(-1, 3, 6).is_err());
        assert!(barnette_bound(0, 3, 3).is_err(), "too few facets rejected");
        assert!(barnette_bound(0, 1, 3).is_err(), "d = 1 rejected");
    }

    #[test]
    fn barnette_at_simplex_facet_count_gives_simplex_faces() {
        for d in 2..=30i64 {
            for k in 0..=d - 2 {
                assert_eq!(
                    barnette_bound(k, d, d + 1).unwrap(),
                    b(d + 1, k + 1),
                    "n_facets = d+1 must reproduce the simplex at d={d}, k={k}"
                );
            }
        }
    }

    #[test]
    fn barnette_at_d_plus_3_facets_matches_eta() {
        // A simple d-polytope with d+3 facets has 3d-1 vertices, and the two
        // bounds coincide on every proper grade below the facets.
        for d in 3..=30i64 {
            assert_eq!(
                barnette_bound(0, d, d + 3).unwrap(),
                BigInt::from(3 * d - 1)
            );
            for k in 1..=d - 2 {
                assert_eq!(
                    barnette_bound(k, d, d + 3).unwrap(),
                    eta(k, 3 * d - 1, d).unwrap(),
                    "d={d}, k={k}"
                );
            }
        }
    }

    #[test]
    fn theta_superadditivity_with_equality_only_at_the_ends() {
        // theta_k(d+s-r, d-1) + sum_{i=1..r} C(d+1-i, k) >= theta_k(d+s, d)
        // for 2 <= r <= s <= d, 1 <= k <= d-2. Equality was recorded over the
        // whole grid before being frozen here: r = 2 and r = s are tight at
        // every point (the r = 2 case is the Pascal recurrence, the r = s case
        // is the telescoping identity), and no interior 2 < r < s is ever
        // tight.
        let mut strict_interior = 0u64;
        for d in 3..=40i64 {
            for s in 2..=d {
                for r in 2..=s {
                    // The lower-dimensional vertex count d+s-r stays in the
                    // theta domain: s' = s-r+1 lies in [1, s-1] and s' <= d-1.
                    for k in 1..=d - 2 {
                        let mut lhs = theta(k, d + s - r, d - 1).unwrap();
                        for i in 1..=r {
                            lhs += binom(d + 1 - i, k);
                        }
                        let rhs = theta(k, d + s, d).unwrap();
                        assert!(
                            lhs >= rhs,
                            "superadditivity fails at d={d}, s={s}, r={r}, k={k}: {lhs} < {rhs}"
                        );
                        if r == 2 || r == s {
                            assert_eq!(
                                lhs, rhs,
                                "endpoint r={r} should be tight at d={d}, s={s}, k={k}"
                            );
                        } else {
                            assert!(
                                lhs > rhs,
                                "unexpected tight point at d={d}, s={s}, r={r}, k={k}"
                            );
                            strict_interior += 1;
                        }
                    }
                }
            }
        }
        assert!(strict_interior > 0, "no interior point was ever exercised");
    }

    #[test]
    fn face_vector_construction_and_euler() {
        let good = FaceCountVector::realized_from(3, &[8, 12, 6]).unwrap();
        assert!(good.euler_holds());
        assert_eq!(good.to_string(), "(8, 12, 6)");
        assert_eq!(good.reversed().counts()[0], BigInt::from(6));

        assert!(
            FaceCountVector::realized_from(3, &[8, 13, 6]).is_err(),
            "broken alternating sum must be rejected"
        );
        assert!(
            FaceCountVector::realized_from(3, &[3, 3, 2]).is_err(),
            "too few vertices for the dimension"
        );
        assert!(FaceCountVector::realized_from(2, &[8, 12, 6]).is_err());
        // A formula vector is allowed to break Euler.
        assert!(FaceCountVector::formula(3, vec![8.into(), 13.into(), 6.into()]).is_ok());
    }

    #[test]
    fn theta_at_the_extremes_of_s() {
        // s = 1 reproduces the simplex everywhere; at s = d the subtracted
        // term C(1, k+1) vanishes for every k >= 1.
        for d in 2..=20i64 {
            for k in 1..=d - 1 {
                assert_eq!(theta(k, d + 1, d).unwrap(), b(d + 1, k + 1));
                assert_eq!(
                    theta(k, 2 * d, d).unwrap(),
                    b(d + 1, k + 1) + b(d, k + 1)
                );
            }
        }
    }
}
