//! Explicit formulas for `c_1(n, k)` per family and the standalone binomial /
//! double-factorial identities, each evaluated exactly on both sides.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{
    binomial, double_factorial_odd, factorial, pow, rising_even_product, ExactInt,
};

/// Both sides of an identity instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityResult {
    pub name: &'static str,
    pub parameters: Vec<(&'static str, i64)>,
    pub lhs: ExactInt,
    pub rhs: ExactInt,
    pub holds: bool,
}

impl IdentityResult {
    fn new(
        name: &'static str,
        parameters: Vec<(&'static str, i64)>,
        lhs: ExactInt,
        rhs: ExactInt,
    ) -> Self {
        let holds = lhs == rhs;
        IdentityResult {
            name,
            parameters,
            lhs,
            rhs,
            holds,
        }
    }
}

fn check_nk(op: &'static str, n: usize, k: usize) -> Result<()> {
    if n < 1 || k < 1 || k > n {
        return Err(Error::domain(op, format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(())
}

fn exact_div(
    op: &'static str,
    params: String,
    numerator: ExactInt,
    denominator: ExactInt,
) -> Result<ExactInt> {
    let (q, r) = numerator.div_rem(&denominator);
    if !r.is_zero() {
        return Err(Error::InexactDivision {
            op,
            params,
            numerator: numerator.to_string(),
            denominator: denominator.to_string(),
        });
    }
    Ok(q)
}

/// Row family: `c_1(n, k) = C(ak, n - k)`.
pub fn c1_row(a: u32, n: usize, k: usize) -> Result<ExactInt> {
    check_nk("c1_row", n, k)?;
    if a < 1 {
        return Err(Error::domain("c1_row", "a must be >= 1"));
    }
    Ok(binomial(a as u64 * k as u64, (n - k) as i64))
}

/// Diagonal family: `c_1(n, k) = C(n + ak - k - 1, ak - 1)`.
pub fn c1_diagonal(a: u32, n: usize, k: usize) -> Result<ExactInt> {
    check_nk("c1_diagonal", n, k)?;
    if a < 1 {
        return Err(Error::domain("c1_diagonal", "a must be >= 1"));
    }
    let ak = a as u64 * k as u64;
    Ok(binomial(n as u64 + ak - k as u64 - 1, ak as i64 - 1))
}

/// Central family: `1` on the diagonal, otherwise
/// `2^{n-k} k (k+2) ... (k + 2(n-k-1)) / (n-k)!`.
pub fn c1_central(n: usize, k: usize) -> Result<ExactInt> {
    check_nk("c1_central", n, k)?;
    if k == n {
        return Ok(BigInt::one());
    }
    let d = (n - k) as u64;
    let numerator = pow(2, d) * rising_even_product(k as u64, d);
    exact_div("c1_central", format!("n={n},k={k}"), numerator, factorial(d))
}

/// Central-adjacent family:
/// `(2^{n-k} / n!) sum_{i=0}^{k} (-1)^{k-i} C(k, i) prod_{t=0}^{n-1} (i + 2t)`.
pub fn c1_central_adjacent(n: usize, k: usize) -> Result<ExactInt> {
    check_nk("c1_central_adjacent", n, k)?;
    let sum: ExactInt = (0..=k)
        .map(|i| {
            let term = binomial(k as u64, i as i64) * rising_even_product(i as u64, n as u64);
            if (k - i).is_multiple_of(2) {
                term
            } else {
                -term
            }
        })
        .sum();
    let numerator = pow(2, (n - k) as u64) * sum;
    exact_div(
        "c1_central_adjacent",
        format!("n={n},k={k}"),
        numerator,
        factorial(n as u64),
    )
}

/// `C(u, v) = sum_{i=w}^{u-v+w} C(i-1, w-1) C(u-i, v-w)` for `u >= v >= w >= 1`.
pub fn identity_idd1(u: u64, v: u64, w: u64) -> Result<IdentityResult> {
    if !(u >= v && v >= w && w >= 1) {
        return Err(Error::domain(
            "identity_idd1",
            format!("need u >= v >= w >= 1, got ({u},{v},{w})"),
        ));
    }
    let lhs = binomial(u, v as i64);
    let rhs = (w..=u - v + w)
        .map(|i| binomial(i - 1, (w - 1) as i64) * binomial(u - i, (v - w) as i64))
        .sum();
    Ok(IdentityResult::new(
        "idd1",
        vec![("u", u as i64), ("v", v as i64), ("w", w as i64)],
        lhs,
        rhs,
    ))
}

/// `prod_{i=1}^{n} (n + i) = 2^n (2n - 1)!!`.
pub fn identity_double_factorial(n: u64) -> Result<IdentityResult> {
    let lhs = (1..=n).map(|i| BigInt::from(n + i)).product();
    let rhs = pow(2, n) * double_factorial_odd(n)?;
    Ok(IdentityResult::new(
        "double_factorial",
        vec![("n", n as i64)],
        lhs,
        rhs,
    ))
}

/// `prod_{i=1}^{n} (n + i - 1) = 2^{n-1} (2n - 1)!!`.
pub fn identity_shifted_double_factorial(n: u64) -> Result<IdentityResult> {
    if n < 1 {
        return Err(Error::domain("identity_shifted_double_factorial", "n must be >= 1"));
    }
    let lhs = (1..=n).map(|i| BigInt::from(n + i - 1)).product();
    let rhs = pow(2, n - 1) * double_factorial_odd(n)?;
    Ok(IdentityResult::new(
        "shifted_double_factorial",
        vec![("n", n as i64)],
        lhs,
        rhs,
    ))
}

/// `sum_{i=0}^{k} (-1)^{k-i} C(k, i) i (i+2) ... (i+2j-2) = 0` for `j < k`.
pub fn identity_vanishing(k: u64, j: u64) -> Result<IdentityResult> {
    if k < 1 || j >= k {
        return Err(Error::domain(
            "identity_vanishing",
            format!("need 0 <= j < k, got k={k}, j={j}"),
        ));
    }
    let lhs = (0..=k)
        .map(|i| {
            let term = binomial(k, i as i64) * rising_even_product(i, j);
            if (k - i).is_multiple_of(2) {
                term
            } else {
                -term
            }
        })
        .sum();
    Ok(IdentityResult::new(
        "vanishing",
        vec![("k", k as i64), ("j", j as i64)],
        lhs,
        BigInt::zero(),
    ))
}

/// Central family: `c_1(n, 2) = 4^{n-2}`.
pub fn power_of_four_check(n: usize) -> Result<IdentityResult> {
    if n < 2 {
        return Err(Error::domain("power_of_four_check", "n must be >= 2"));
    }
    Ok(IdentityResult::new(
        "power_of_four",
        vec![("n", n as i64)],
        c1_central(n, 2)?,
        pow(4, n as u64 - 2),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> ExactInt {
        v.into()
    }

    #[test]
    fn row_examples() {
        assert_eq!(c1_row(2, 3, 2).unwrap(), int(4));
        assert_eq!(c1_row(5, 7, 7).unwrap(), int(1));
        assert_eq!(c1_row(2, 4, 1).unwrap(), int(0));
        assert!(c1_row(2, 3, 4).is_err());
        assert!(c1_row(2, 3, 0).is_err());
    }

    #[test]
    fn diagonal_examples() {
        assert_eq!(c1_diagonal(3, 3, 2).unwrap(), int(6));
        assert_eq!(c1_diagonal(2, 3, 2).unwrap(), int(4));
        for a in 1..=5u32 {
            for n in 1..=24usize {
                assert_eq!(
                    c1_diagonal(a, n, 1).unwrap(),
                    binomial(n as u64 + a as u64 - 2, a as i64 - 1)
                );
            }
        }
    }

    #[test]
    fn central_examples() {
        assert_eq!(c1_central(3, 2).unwrap(), int(4));
        assert_eq!(c1_central(3, 1).unwrap(), int(6));
        for n in 1..=10 {
            assert_eq!(c1_central(n, n).unwrap(), int(1));
        }
        for n in 1..=60usize {
            assert_eq!(
                c1_central(n, 1).unwrap(),
                binomial(2 * n as u64 - 2, n as i64 - 1)
            );
        }
    }

    #[test]
    fn central_adjacent_examples() {
        assert_eq!(c1_central_adjacent(3, 2).unwrap(), int(6));
        assert_eq!(c1_central_adjacent(2, 2).unwrap(), int(1));
        assert_eq!(c1_central_adjacent(2, 1).unwrap(), int(3));
        for n in 1..=24 {
            for k in 1..=n {
                assert!(c1_central_adjacent(n, k).unwrap() > int(0), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn exact_division_reports_witness() {
        let err = exact_div("t", "x".into(), int(7), int(2)).unwrap_err();
        assert!(matches!(err, Error::InexactDivision { .. }));
        assert!(err.to_string().contains("7 / 2"));
    }

    #[test]
    fn idd1_examples() {
        let r = identity_idd1(5, 3, 1).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, int(10));
        let r = identity_idd1(1, 1, 1).unwrap();
        assert!(r.holds && r.lhs == int(1));
        let r = identity_idd1(6, 3, 2).unwrap();
        assert!(r.holds && r.rhs == int(20));
        assert!(identity_idd1(3, 4, 1).is_err());
        assert!(identity_idd1(3, 2, 0).is_err());
    }

    #[test]
    fn idd1_exhaustive() {
        for u in 1..=30 {
            for v in 1..=u {
                for w in 1..=v {
                    assert!(identity_idd1(u, v, w).unwrap().holds, "({u},{v},{w})");
                }
            }
        }
    }

    #[test]
    fn double_factorial_identities() {
        let r = identity_double_factorial(1).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(2), int(2)));
        let r = identity_double_factorial(2).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(12), int(12)));
        assert!(identity_double_factorial(5).unwrap().holds);
        let r = identity_shifted_double_factorial(1).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(1), int(1)));
        let r = identity_shifted_double_factorial(2).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(6), int(6)));
        assert!(identity_shifted_double_factorial(6).unwrap().holds);
        assert!(identity_double_factorial(0).is_err());
        assert!(identity_shifted_double_factorial(0).is_err());
    }

    #[test]
    fn vanishing_examples() {
        assert!(identity_vanishing(2, 1).unwrap().holds);
        assert!(identity_vanishing(1, 0).unwrap().holds);
        assert!(identity_vanishing(3, 2).unwrap().holds);
        assert!(identity_vanishing(3, 3).is_err());
        for k in 1..=30 {
            for j in 0..k {
                assert!(identity_vanishing(k, j).unwrap().holds);
            }
        }
        // at j = k the sum is the k-th difference of a monic cubic, k! = 6
        let lhs: ExactInt = (0..=3u64)
            .map(|i| {
                let t = binomial(3, i as i64) * rising_even_product(i, 3);
                if (3 - i) % 2 == 0 { t } else { -t }
            })
            .sum();
        assert_eq!(lhs, int(6));
    }

    #[test]
    fn power_of_four_examples() {
        let r = power_of_four_check(2).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(1), int(1)));
        let r = power_of_four_check(3).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(4), int(4)));
        assert!(power_of_four_check(6).unwrap().holds);
        assert!(power_of_four_check(1).is_err());
    }
}
