//! OEIS b-file reading, writing and prefix comparison.
//!
//! Format: one `index value` pair per line, LF line endings, optional
//! leading `#` comment lines.

use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::kernel::ExactInt;
use crate::report::{Case, CheckReport};

/// Index shifts tried when aligning a computed sequence with a b-file,
/// in order of preference.
pub const SHIFTS: [i64; 5] = [0, -1, 1, -2, 2];

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BFile {
    entries: Vec<(i64, ExactInt)>,
}

impl BFile {
    pub fn new(entries: Vec<(i64, ExactInt)>) -> Result<Self> {
        if let Some(w) = entries.windows(2).find(|w| w[0].0 >= w[1].0) {
            return Err(Error::BFileParse {
                line: 0,
                msg: format!("indices not strictly increasing: {} then {}", w[0].0, w[1].0),
            });
        }
        Ok(BFile { entries })
    }

    /// Entries `(start + i, values[i])`.
    pub fn from_values(start: i64, values: &[ExactInt]) -> Self {
        BFile {
            entries: values
                .iter()
                .enumerate()
                .map(|(i, v)| (start + i as i64, v.clone()))
                .collect(),
        }
    }

    pub fn entries(&self) -> &[(i64, ExactInt)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: i64) -> Option<&ExactInt> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|p| &self.entries[p].1)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut entries: Vec<(i64, ExactInt)> = Vec::new();
        for (lineno, raw) in text.split('\n').enumerate() {
            let line = raw.strip_suffix('\r').unwrap_or(raw).trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::BFileParse {
                line: lineno + 1,
                msg,
            };
            let mut fields = line.split_whitespace();
            let (Some(i), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(err(format!("expected `index value`, got `{line}`")));
            };
            let index: i64 = i.parse().map_err(|_| err(format!("bad index `{i}`")))?;
            let value: BigInt = v.parse().map_err(|_| err(format!("bad value `{v}`")))?;
            if let Some((prev, _)) = entries.last() {
                if index <= *prev {
                    return Err(err(format!(
                        "index {index} does not follow {prev} in increasing order"
                    )));
                }
            }
            entries.push((index, value));
        }
        Ok(BFile { entries })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, v) in &self.entries {
            let _ = writeln!(out, "{i} {v}");
        }
        out
    }
}

/// Result of aligning `f(1..=N)` with a b-file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alignment {
    /// `f(n)` matched b-file index `n + shift`.
    pub shift: i64,
    /// Number of indices compared.
    pub overlap: usize,
}

/// First shift in [`SHIFTS`] under which every overlapping index agrees
/// and at least `min_overlap` indices overlap.
pub fn align(computed: &[ExactInt], bfile: &BFile, min_overlap: usize) -> Option<Alignment> {
    SHIFTS.iter().find_map(|&shift| {
        let mut overlap = 0;
        for (n, v) in (1i64..).zip(computed) {
            if let Some(b) = bfile.get(n + shift) {
                if b != v {
                    return None;
                }
                overlap += 1;
            }
        }
        (overlap >= min_overlap.max(1)).then_some(Alignment { shift, overlap })
    })
}

/// Compares a computed prefix against a b-file and builds a report with one
/// case per compared index. A constant shift is a pass with the shift noted.
pub fn compare_report(
    label: &str,
    computed: &[ExactInt],
    bfile: &BFile,
    min_overlap: usize,
) -> CheckReport {
    let mut report = CheckReport::new("oeis");
    if computed.is_empty() {
        report.push(Case::skipped(
            format!("oeis:{label}"),
            &[("n_max", 0)],
            "empty comparison",
        ));
        return report;
    }
    match align(computed, bfile, min_overlap) {
        Some(al) => {
            for (n, v) in (1i64..).zip(computed) {
                if let Some(b) = bfile.get(n + al.shift) {
                    report.push(Case::compare(
                        format!("oeis:{label}"),
                        &[("n", n), ("shift", al.shift)],
                        b,
                        v,
                    ));
                }
            }
            if al.shift != 0 {
                report.note(format!(
                    "pass with offset: f(n) matches b-file index n{:+} over {} terms",
                    al.shift, al.overlap
                ));
            } else {
                report.note(format!("aligned without offset over {} terms", al.overlap));
            }
        }
        None => {
            // report shift 0 mismatches as witnesses
            for (n, v) in (1i64..).zip(computed) {
                let expected = bfile
                    .get(n)
                    .map_or_else(|| "<absent>".to_string(), ToString::to_string);
                report.push(Case::compare(
                    format!("oeis:{label}"),
                    &[("n", n), ("shift", 0)],
                    expected,
                    v,
                ));
            }
            report.note(format!(
                "no shift in {SHIFTS:?} aligns the computed prefix with at least {} terms",
                min_overlap.max(1)
            ));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<ExactInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn parse_with_comments() {
        let b = BFile::parse("# A000079\n# powers\n0 1\n1 2\n2 4\n\n").unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(b.get(2), Some(&4.into()));
        assert_eq!(b.render(), "0 1\n1 2\n2 4\n");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(BFile::parse("1 2\n1 3\n"), Err(Error::BFileParse { line: 2, .. })));
        assert!(matches!(BFile::parse("1\n"), Err(Error::BFileParse { line: 1, .. })));
        assert!(matches!(BFile::parse("1 x\n"), Err(Error::BFileParse { .. })));
        assert!(matches!(BFile::parse("1 2 3\n"), Err(Error::BFileParse { .. })));
        assert!(BFile::new(vec![(2, 1.into()), (1, 1.into())]).is_err());
    }

    #[test]
    fn alignment_finds_offset() {
        let pow2 = BFile::from_values(0, &ints(&[1, 2, 4, 8, 16, 32]));
        let ours = ints(&[1, 2, 4, 8]);
        assert_eq!(align(&ours, &pow2, 4), Some(Alignment { shift: -1, overlap: 4 }));
        let a002478 = BFile::from_values(0, &ints(&[1, 1, 3, 6, 13, 28, 60]));
        let ours = ints(&[1, 3, 6, 13, 28]);
        let al = align(&ours, &a002478, 5).unwrap();
        assert_eq!(al.shift, 0);
        let r = compare_report("x", &ours, &a002478, 5);
        assert!(r.passed());
        assert_eq!(r.summary.pass, 5);
        assert!(align(&ints(&[5, 5]), &a002478, 1).is_none());
        let r = compare_report("x", &ints(&[5, 5]), &a002478, 1);
        assert!(!r.passed());
    }

    #[test]
    fn empty_comparison_is_skipped() {
        let r = compare_report("x", &[], &BFile::default(), 1);
        assert_eq!(r.summary.skip, 1);
        assert_eq!(r.summary.pass, 0);
    }

    proptest! {
        #[test]
        fn render_parse_roundtrip(
            start in -5i64..100,
            gaps in proptest::collection::vec(1i64..4, 0..20),
            vals in proptest::collection::vec(any::<i64>(), 20),
        ) {
            let mut idx = start;
            let mut entries = Vec::new();
            for (g, v) in gaps.iter().zip(&vals) {
                entries.push((idx, BigInt::from(*v) * BigInt::from(*v)));
                idx += g;
            }
            let b = BFile::new(entries).unwrap();
            prop_assert_eq!(BFile::parse(&b.render()).unwrap(), b);
        }
    }
}
