//! Binomial coefficients, factorials and Stirling numbers of the second kind.
//!
//! Everything returns `BigInt`; tables are computed per call so concurrent
//! use needs no synchronization.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// C(n, k) with the usual convention that out-of-range k gives 0.
pub fn choose(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1); // division is exact at every step
    }
    acc
}

/// The whole row C(n, 0..=n), cheaper than n+1 independent calls.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 0..n {
        c = c * (n - k) / (k + 1);
        row.push(c.clone());
    }
    row
}

/// C(n, k). Errors on n < 0; returns 0 for k < 0 or k > n.
pub fn binomial(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::Domain(format!(
            "binomial: n = {n} must be nonnegative"
        )));
    }
    if k < 0 || k > n {
        return Ok(BigInt::zero());
    }
    Ok(choose(n as usize, k as usize))
}

/// Row S(n, 0..=n) of Stirling numbers of the second kind.
///
/// S(n, k) counts partitions of an n-set into k nonempty blocks;
/// S(n, k) = k·S(n−1, k) + S(n−1, k−1) with S(0, 0) = 1.
pub fn stirling_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 1..=n {
        let prev = row;
        let m = prev.len();
        let mut next = vec![BigInt::zero(); m + 1];
        for k in 1..=m {
            let mut v = prev[k - 1].clone();
            if k < m {
                v += &prev[k] * k;
            }
            next[k] = v;
        }
        row = next;
    }
    row
}

/// All rows S(i, k) for i ≤ max_n.
pub fn stirling_triangle(max_n: usize) -> Vec<Vec<BigInt>> {
    let mut tri = Vec::with_capacity(max_n + 1);
    tri.push(vec![BigInt::one()]);
    for n in 1..=max_n {
        let prev = &tri[n - 1];
        let mut next = vec![BigInt::zero(); n + 1];
        for k in 1..=n {
            let mut v = prev[k - 1].clone();
            if k < n {
                v += &prev[k] * k;
            }
            next[k] = v;
        }
        tri.push(next);
    }
    tri
}

/// S(n, k). Errors on n < 0; returns 0 for k < 0 or k > n.
pub fn stirling2(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::Domain(format!(
            "stirling2: n = {n} must be nonnegative"
        )));
    }
    if k < 0 || k > n {
        return Ok(BigInt::zero());
    }
    Ok(stirling_row(n as usize)[k as usize].clone())
}
