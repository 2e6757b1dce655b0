//! Exact integer linear algebra for the small dense matrices that arise from
//! vertex coordinates: rank computation and null-space extraction via
//! fraction-free (Bareiss) elimination. No floating point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Fraction-free row echelon reduction. Returns the reduced matrix and the
/// pivot column chosen for each pivot row, so the rank is the number of
/// pivots. Every intermediate entry is an exact minor of the input, which
/// keeps growth polynomial and all divisions exact.
fn bareiss_echelon(mut m: Vec<Vec<BigInt>>, cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut pivot_cols = Vec::new();
    let mut pr = 0;
    for col in 0..cols {
        if pr == rows {
            break;
        }
        let Some(r) = (pr..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pr, r);
        for r2 in pr + 1..rows {
            for c2 in col + 1..cols {
                let num = &m[pr][col] * &m[r2][c2] - &m[r2][col] * &m[pr][c2];
                debug_assert!(
                    (&num % &prev).is_zero(),
                    "Bareiss division must be exact"
                );
                m[r2][c2] = num / &prev;
            }
            m[r2][col] = BigInt::zero();
        }
        prev = m[pr][col].clone();
        pivot_cols.push(col);
        pr += 1;
    }
    (m, pivot_cols)
}

/// Rank of an integer matrix with `cols` columns (rows may be empty).
pub(crate) fn integer_rank(m: Vec<Vec<BigInt>>, cols: usize) -> usize {
    bareiss_echelon(m, cols).1.len()
}

/// For a matrix of rank exactly `cols - 1`, the integer null-space basis
/// vector with content 1 (entries have gcd 1). Returns `None` when the rank
/// is anything else: a lower rank means the null space is not a line, and
/// full rank means it is trivial.
pub(crate) fn null_space_vector(m: Vec<Vec<BigInt>>, cols: usize) -> Option<Vec<BigInt>> {
    let (e, pivot_cols) = bareiss_echelon(m, cols);
    let rank = pivot_cols.len();
    if rank + 1 != cols {
        return None;
    }
    let free = (0..cols).find(|c| !pivot_cols.contains(c)).expect("one free column");
    let mut x = vec![BigRational::zero(); cols];
    x[free] = BigRational::one();
    for i in (0..rank).rev() {
        let p = pivot_cols[i];
        let mut acc = BigRational::zero();
        for c in p + 1..cols {
            if !e[i][c].is_zero() && !x[c].is_zero() {
                acc += BigRational::from(e[i][c].clone()) * &x[c];
            }
        }
        x[p] = -acc / BigRational::from(e[i][p].clone());
    }
    Some(clear_denominators(&x))
}

/// Scale a rational vector to the integer vector with the same direction and
/// content 1.
fn clear_denominators(x: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for xi in x {
        lcm = lcm.lcm(xi.denom());
    }
    let mut v: Vec<BigInt> = x.iter().map(|xi| xi.numer() * (&lcm / xi.denom())).collect();
    let mut g = BigInt::zero();
    for vi in &v {
        g = g.gcd(vi);
    }
    if !g.is_zero() && !g.is_one() {
        for vi in &mut v {
            *vi = &*vi / &g;
        }
    }
    v
}

/// Divide a set of integers by their common content, in place. Leaves an
/// all-zero slice untouched.
pub(crate) fn reduce_content(values: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for v in values.iter() {
        g = g.gcd(v);
    }
    if !g.is_zero() && !g.is_one() {
        for v in values.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// Flip signs so the first nonzero entry is positive. Used to put hyperplane
/// coefficient vectors into a dedupe-friendly canonical form.
pub(crate) fn sign_normalize(values: &mut [BigInt]) {
    if let Some(first) = values.iter().find(|v| !v.is_zero()) {
        if first.is_negative() {
            for v in values.iter_mut() {
                *v = -&*v;
            }
        }
    }
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = BigInt::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}
