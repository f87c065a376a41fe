//! Convolution triangles `c_m(n, k)`, invert transforms `f_m` and the lifts
//! expressing both through `c_1`.
//!
//! The invert transform here is `g(n) = sum_k c(n, k)`, i.e. `G = F / (1 - F)`
//! on ordinary generating functions without constant term.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{FamilySpec, Origin, SeqFn};
use crate::kernel::{binomial, pow, ExactInt};

/// `c_m(n, k)` for `1 <= k <= n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CTriangle {
    m: usize,
    base: FamilySpec,
    n_max: usize,
    /// `rows[n - 1][k - 1] = c(n, k)`
    rows: Vec<Vec<ExactInt>>,
}

impl CTriangle {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn base(&self) -> &FamilySpec {
        &self.base
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Entry `(n, k)`; zero outside the triangle.
    pub fn get(&self, n: usize, k: usize) -> ExactInt {
        self.try_get(n, k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Entry `(n, k)`, or `None` outside `1 <= k <= n <= n_max`.
    pub fn try_get(&self, n: usize, k: usize) -> Option<&ExactInt> {
        if n == 0 || k == 0 {
            return None;
        }
        self.rows.get(n - 1)?.get(k - 1)
    }

    pub fn row(&self, n: usize) -> Option<&[ExactInt]> {
        self.rows.get(n.checked_sub(1)?).map(Vec::as_slice)
    }

    pub fn row_sums(&self) -> Vec<ExactInt> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    /// Long CSV layout with header `n,k,value`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,value\n");
        for (n, row) in self.rows.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                let _ = writeln!(out, "{},{},{}", n + 1, k + 1, v);
            }
        }
        out
    }

    /// One line per `n`: `n` followed by `c(n, 1) .. c(n, n)`, tab-separated.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (n, row) in self.rows.iter().enumerate() {
            let _ = write!(out, "{}", n + 1);
            for v in row {
                let _ = write!(out, "\t{v}");
            }
            out.push('\n');
        }
        out
    }

    /// One line per `n` of space-separated `k,value` pairs.
    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let line: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(k, v)| format!("{},{}", k + 1, v))
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Row-major flattening `c(1,1), c(2,1), c(2,2), ...`.
    pub fn flatten(&self) -> Vec<ExactInt> {
        self.rows.iter().flatten().cloned().collect()
    }
}

/// Builds the triangle of `k`-fold convolutions of `f`.
///
/// Uses `c(n, 1) = f(n)` and `c(n, k) = sum_{i=1}^{n-k+1} f(i) c(n - i, k - 1)`.
pub fn c_triangle(f: &SeqFn, n_max: usize) -> Result<CTriangle> {
    if n_max > f.len() {
        return Err(Error::IndexOutOfRange {
            index: n_max,
            len: f.len(),
        });
    }
    let fv = f.values();
    let mut rows: Vec<Vec<ExactInt>> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut row = Vec::with_capacity(n);
        row.push(fv[n - 1].clone());
        for k in 2..=n {
            let mut acc = BigInt::zero();
            for i in 1..=n - k + 1 {
                // c(n - i, k - 1) lives in rows[n - i - 1][k - 2]
                acc += &fv[i - 1] * &rows[n - i - 1][k - 2];
            }
            row.push(acc);
        }
        rows.push(row);
    }
    Ok(CTriangle {
        m: f.origin().inverts + 1,
        base: f.origin().base.clone(),
        n_max,
        rows,
    })
}

/// `g(n) = sum_{k=1}^{n} c(n, k)` over the full truncation of `f`.
pub fn invert_transform(f: &SeqFn) -> Result<SeqFn> {
    let tri = c_triangle(f, f.len())?;
    Ok(SeqFn::new(
        tri.row_sums(),
        Origin {
            base: f.origin().base.clone(),
            inverts: f.origin().inverts + 1,
        },
    ))
}

/// `f_m(1..=n_max)`: `m` invert transforms applied to `f_0`.
pub fn fm(spec: &FamilySpec, m: usize, n_max: usize) -> Result<SeqFn> {
    let mut f = SeqFn::initial(spec, n_max)?;
    for _ in 0..m {
        f = invert_transform(&f)?;
    }
    Ok(f)
}

/// `c_m` for a family, `m >= 1`.
pub fn cm(spec: &FamilySpec, m: usize, n_max: usize) -> Result<CTriangle> {
    if m < 1 {
        return Err(Error::domain("cm", "m must be >= 1"));
    }
    c_triangle(&fm(spec, m - 1, n_max)?, n_max)
}

fn check_c1(c1: &CTriangle, n: usize, m: usize, op: &'static str) -> Result<()> {
    if c1.m != 1 {
        return Err(Error::domain(op, format!("expected a c_1 triangle, got m={}", c1.m)));
    }
    if m < 1 {
        return Err(Error::domain(op, "m must be >= 1"));
    }
    if n < 1 || n > c1.n_max {
        return Err(Error::IndexOutOfRange {
            index: n,
            len: c1.n_max,
        });
    }
    Ok(())
}

/// `c_m(n, k) = sum_{i=k}^{n} (m-1)^{i-k} C(i-1, k-1) c_1(n, i)`, with `0^0 = 1`.
pub fn lift_cm_from_c1(c1: &CTriangle, m: usize, n: usize, k: usize) -> Result<ExactInt> {
    check_c1(c1, n, m, "lift_cm_from_c1")?;
    if k < 1 || k > n {
        return Err(Error::domain("lift_cm_from_c1", format!("need 1 <= k <= n, got k={k}")));
    }
    Ok((k..=n)
        .map(|i| {
            pow(m as u64 - 1, (i - k) as u64)
                * binomial(i as u64 - 1, k as i64 - 1)
                * c1.get(n, i)
        })
        .sum())
}

/// `f_m(n) = sum_{i=1}^{n} m^{i-1} c_1(n, i)`.
pub fn lift_fm_from_c1(c1: &CTriangle, m: usize, n: usize) -> Result<ExactInt> {
    check_c1(c1, n, m, "lift_fm_from_c1")?;
    Ok((1..=n)
        .map(|i| pow(m as u64, i as u64 - 1) * c1.get(n, i))
        .sum())
}
