//! Exact integer primitives shared by every other module.
//!
//! Everything here works on [`BigInt`] so that no intermediate value of a
//! convolution or alternating sum can overflow.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer used for every count.
pub type ExactInt = BigInt;

/// `C(u, v)`, zero whenever `v < 0` or `v > u`.
pub fn binomial(u: u64, v: i64) -> ExactInt {
    if v < 0 || v as u64 > u {
        return BigInt::zero();
    }
    let v = (v as u64).min(u - v as u64);
    let mut acc = BigInt::one();
    // acc = C(u - v + t, t) after step t; each division is exact.
    for t in 1..=v {
        acc *= u - v + t;
        acc /= t;
    }
    acc
}

/// `(2n - 1)!! = 1 * 3 * ... * (2n - 1)`.
pub fn double_factorial_odd(n: u64) -> Result<ExactInt> {
    if n < 1 {
        return Err(Error::domain("double_factorial_odd", "n must be >= 1"));
    }
    Ok((1..=n).map(|t| BigInt::from(2 * t - 1)).product())
}

/// `i (i + 2) (i + 4) ... (i + 2j - 2)`; the empty product when `j = 0`.
pub fn rising_even_product(i: u64, j: u64) -> ExactInt {
    (0..j).map(|t| BigInt::from(i + 2 * t)).product()
}

pub fn factorial(n: u64) -> ExactInt {
    (1..=n).map(BigInt::from).product()
}

/// `base^exp` with `0^0 = 1`.
pub fn pow(base: u64, exp: u64) -> ExactInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// Every ordered `k`-tuple of positive integers summing to `n`, in
/// lexicographic order. Empty when `k > n` or either argument is zero.
pub fn compositions(n: usize, k: usize) -> Compositions {
    let current = if k == 0 || n < k {
        None
    } else {
        let mut parts = vec![1; k];
        parts[k - 1] = n - (k - 1);
        Some(parts)
    };
    Compositions { current }
}

/// Iterator returned by [`compositions`].
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<usize>>,
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        // Successor: the rightmost slot j < k - 1 whose suffix has a unit to
        // spare grows by one; the suffix restarts at (1, .., 1, rest).
        let mut suffix = out[k - 1];
        for j in (0..k - 1).rev() {
            if suffix > k - 1 - j {
                let mut next = out.clone();
                next[j] += 1;
                next[j + 1..].iter_mut().for_each(|p| *p = 1);
                next[k - 1] = suffix - 1 - (k - 2 - j);
                self.current = Some(next);
                break;
            }
            suffix += out[j];
        }
        Some(out)
    }
}
