//! Initial arithmetic functions `f_0` and the truncated sequences built on them.

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{binomial, ExactInt};

/// Truncation bound used when the caller does not pick one.
pub const DEFAULT_TRUNCATION: usize = 64;

/// Choice of initial family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FamilySpec {
    /// `f_0(n) = C(a, n - 1)`: strictly increasing words over `a` letters.
    Row { a: u32 },
    /// `f_0(n) = C(n + a - 2, a - 1)`: weakly decreasing words over `a` letters.
    Diagonal { a: u32 },
    /// `f_0(n) = C(2n - 2, n - 1)`: balanced binary words of length `2n - 2`.
    Central,
    /// `f_0(n) = C(2n - 1, n)`: binary words of length `2n - 1` with one more 1 than 0.
    CentralAdjacent,
    /// Caller-supplied values, 1-indexed.
    Custom { values: Vec<ExactInt> },
}

impl FamilySpec {
    pub fn row(a: u32) -> Result<Self> {
        if a < 1 {
            return Err(Error::domain("family", "row family needs a >= 1"));
        }
        Ok(FamilySpec::Row { a })
    }

    pub fn diagonal(a: u32) -> Result<Self> {
        if a < 1 {
            return Err(Error::domain("family", "diagonal family needs a >= 1"));
        }
        Ok(FamilySpec::Diagonal { a })
    }

    pub fn custom(values: Vec<ExactInt>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::domain("family", "custom sequence must be nonempty"));
        }
        Ok(FamilySpec::Custom { values })
    }

    /// Reads a custom sequence: one integer per line, blank lines and `#`
    /// comments ignored.
    pub fn custom_from_file(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::custom(parse_values(&text)?)
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Row { .. } => "row",
            FamilySpec::Diagonal { .. } => "diagonal",
            FamilySpec::Central => "central",
            FamilySpec::CentralAdjacent => "central-adjacent",
            FamilySpec::Custom { .. } => "custom",
        }
    }

    /// Every family except `Custom`.
    pub fn is_named(&self) -> bool {
        !matches!(self, FamilySpec::Custom { .. })
    }

    /// Size of the base alphabet of the word model, if there is one.
    pub fn base_alphabet(&self) -> Option<u32> {
        match *self {
            FamilySpec::Row { a } | FamilySpec::Diagonal { a } => Some(a),
            FamilySpec::Central | FamilySpec::CentralAdjacent => Some(2),
            FamilySpec::Custom { .. } => None,
        }
    }

    fn check(&self) -> Result<()> {
        match self {
            FamilySpec::Row { a: 0 } | FamilySpec::Diagonal { a: 0 } => {
                Err(Error::domain("family", "parameter a must be >= 1"))
            }
            FamilySpec::Custom { values } if values.is_empty() => {
                Err(Error::domain("family", "custom sequence must be nonempty"))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Row { a } => write!(f, "row(a={a})"),
            FamilySpec::Diagonal { a } => write!(f, "diagonal(a={a})"),
            FamilySpec::Custom { values } => write!(f, "custom(len={})", values.len()),
            other => f.write_str(other.name()),
        }
    }
}

pub(crate) fn parse_values(text: &str) -> Result<Vec<ExactInt>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v: BigInt = line.parse().map_err(|_| Error::SeqParse {
            line: i + 1,
            msg: format!("not an integer: `{line}`"),
        })?;
        out.push(v);
    }
    Ok(out)
}

/// `f_0(n)` for the given family.
pub fn f0(spec: &FamilySpec, n: usize) -> Result<ExactInt> {
    spec.check()?;
    if n < 1 {
        return Err(Error::domain("f0", "n must be >= 1"));
    }
    let n64 = n as u64;
    Ok(match spec {
        FamilySpec::Row { a } => binomial(*a as u64, n as i64 - 1),
        FamilySpec::Diagonal { a } => binomial(n64 + *a as u64 - 2, *a as i64 - 1),
        FamilySpec::Central => binomial(2 * n64 - 2, n as i64 - 1),
        FamilySpec::CentralAdjacent => binomial(2 * n64 - 1, n as i64),
        FamilySpec::Custom { values } => values
            .get(n - 1)
            .cloned()
            .ok_or(Error::IndexOutOfRange {
                index: n,
                len: values.len(),
            })?,
    })
}

/// Length `l(i - 1)` of the words counted by `f_0(i)`.
pub fn word_length(spec: &FamilySpec, i: usize) -> Result<usize> {
    if i < 1 {
        return Err(Error::domain("word_length", "i must be >= 1"));
    }
    match spec {
        FamilySpec::Row { .. } | FamilySpec::Diagonal { .. } => Ok(i - 1),
        FamilySpec::Central => Ok(2 * i - 2),
        FamilySpec::CentralAdjacent => Ok(2 * i - 1),
        FamilySpec::Custom { .. } => Err(Error::NoWordModel("custom family")),
    }
}

/// Where a [`SeqFn`] came from: a base family and the number of invert
/// transforms applied to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Origin {
    pub base: FamilySpec,
    pub inverts: usize,
}

/// A truncated arithmetic function, indexed from 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqFn {
    values: Vec<ExactInt>,
    origin: Origin,
}

impl SeqFn {
    /// `values[0]` becomes `f(1)`.
    pub fn new(values: Vec<ExactInt>, origin: Origin) -> Self {
        SeqFn { values, origin }
    }

    /// Wraps raw values as an untransformed custom sequence.
    pub fn from_values(values: Vec<ExactInt>) -> Self {
        let origin = Origin {
            base: FamilySpec::Custom {
                values: values.clone(),
            },
            inverts: 0,
        };
        SeqFn { values, origin }
    }

    /// `f_0(1..=len)` for a family.
    pub fn initial(spec: &FamilySpec, len: usize) -> Result<Self> {
        let values = (1..=len).map(|n| f0(spec, n)).collect::<Result<Vec<_>>>()?;
        Ok(SeqFn {
            values,
            origin: Origin {
                base: spec.clone(),
                inverts: 0,
            },
        })
    }

    /// `f(n)` for `1 <= n <= len`.
    pub fn get(&self, n: usize) -> Result<&ExactInt> {
        if n == 0 {
            return Err(Error::IndexOutOfRange {
                index: n,
                len: self.values.len(),
            });
        }
        self.values.get(n - 1).ok_or(Error::IndexOutOfRange {
            index: n,
            len: self.values.len(),
        })
    }

    /// Truncation bound.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[ExactInt] {
        &self.values
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    pub fn starts_with_one(&self) -> bool {
        self.values.first().is_some_and(One::is_one)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> ExactInt {
        v.into()
    }

    #[test]
    fn f0_examples() {
        assert_eq!(f0(&FamilySpec::Row { a: 2 }, 2).unwrap(), int(2));
        assert_eq!(f0(&FamilySpec::Diagonal { a: 3 }, 3).unwrap(), int(6));
        assert_eq!(f0(&FamilySpec::CentralAdjacent, 2).unwrap(), int(3));
        assert_eq!(f0(&FamilySpec::Central, 3).unwrap(), int(6));
    }

    #[test]
    fn f0_custom_out_of_range() {
        let spec = FamilySpec::custom(vec![int(1), int(5)]).unwrap();
        assert_eq!(f0(&spec, 2).unwrap(), int(5));
        assert!(matches!(
            f0(&spec, 3),
            Err(Error::IndexOutOfRange { index: 3, len: 2 })
        ));
        assert!(FamilySpec::custom(vec![]).is_err());
    }

    #[test]
    fn zero_parameter_rejected() {
        assert!(FamilySpec::row(0).is_err());
        assert!(FamilySpec::diagonal(0).is_err());
        assert!(f0(&FamilySpec::Row { a: 0 }, 1).is_err());
    }

    #[test]
    fn family_invariants() {
        for a in 1..=6u32 {
            for n in (a as usize + 2)..40 {
                assert_eq!(f0(&FamilySpec::Row { a }, n).unwrap(), int(0));
            }
        }
        for n in 1..40 {
            assert_eq!(f0(&FamilySpec::Diagonal { a: 1 }, n).unwrap(), int(1));
        }
        for spec in [
            FamilySpec::Row { a: 3 },
            FamilySpec::Diagonal { a: 4 },
            FamilySpec::Central,
            FamilySpec::CentralAdjacent,
        ] {
            assert_eq!(f0(&spec, 1).unwrap(), int(1), "{spec}");
            assert!(SeqFn::initial(&spec, 10).unwrap().starts_with_one());
        }
    }

    fn count_binary(len: u32, pred: impl Fn(u32, u32) -> bool) -> ExactInt {
        (0u32..1 << len)
            .filter(|w| pred(w.count_ones(), len - w.count_ones()))
            .count()
            .into()
    }

    #[test]
    fn central_families_match_binary_word_counts() {
        for n in 1..=9usize {
            let balanced = count_binary(2 * n as u32 - 2, |ones, zeros| ones == zeros);
            assert_eq!(f0(&FamilySpec::Central, n).unwrap(), balanced);
            let skewed = count_binary(2 * n as u32 - 1, |ones, zeros| ones == zeros + 1);
            assert_eq!(f0(&FamilySpec::CentralAdjacent, n).unwrap(), skewed);
        }
    }

    #[test]
    fn word_length_examples() {
        assert_eq!(word_length(&FamilySpec::Row { a: 2 }, 1).unwrap(), 0);
        assert_eq!(word_length(&FamilySpec::Central, 3).unwrap(), 4);
        assert_eq!(word_length(&FamilySpec::CentralAdjacent, 1).unwrap(), 1);
        assert!(matches!(
            word_length(&FamilySpec::Custom { values: vec![int(1)] }, 1),
            Err(Error::NoWordModel(_))
        ));
    }

    #[test]
    fn parse_custom_file_text() {
        let vals = parse_values("# header\n1\n\n 3 \n-2\n").unwrap();
        assert_eq!(vals, vec![int(1), int(3), int(-2)]);
        assert!(matches!(
            parse_values("1\nx\n"),
            Err(Error::SeqParse { line: 2, .. })
        ));
    }
}
