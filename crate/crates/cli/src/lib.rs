//! Command implementations behind the `binwords` binary. Each command
//! returns its output (text or a [`CheckReport`]) so it can be tested without
//! spawning a process.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use binwords::bfile::BFile;
use binwords::report::Case;
use binwords::verify::MAX_TRIANGLE_N;
use binwords::{cm, fm, run_oeis, run_suite, Bounds, CheckReport, Error, FamilySpec, Suite};
use clap::ValueEnum;

pub const DEFAULT_OEIS_BASE_URL: &str = "https://oeis.org";

/// Exit status when an OEIS comparison could not run at all.
pub const EXIT_SKIPPED: i32 = 3;

/// Least number of overlapping terms for an OEIS comparison to count.
pub const MIN_OEIS_OVERLAP: usize = 5;

/// Fixtures shipped with the binary, keyed by A-number.
const VENDORED: &[(&str, &str)] = &[
    ("A002478", include_str!("../fixtures/b002478.txt")),
    ("A000079", include_str!("../fixtures/b000079.txt")),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Row,
    Diagonal,
    Central,
    CentralAdjacent,
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Tsv,
    Bfile,
    Json,
}

/// Builds a family from command-line pieces.
pub fn family(kind: FamilyKind, a: Option<u32>, custom: Option<&Path>) -> Result<FamilySpec, Error> {
    let need_a = |name: &str| {
        a.ok_or_else(|| Error::Domain {
            op: "family",
            msg: format!("--a is required for the {name} family"),
        })
    };
    match kind {
        FamilyKind::Row => FamilySpec::row(need_a("row")?),
        FamilyKind::Diagonal => FamilySpec::diagonal(need_a("diagonal")?),
        FamilyKind::Central => Ok(FamilySpec::Central),
        FamilyKind::CentralAdjacent => Ok(FamilySpec::CentralAdjacent),
        FamilyKind::Custom => {
            let path = custom.ok_or_else(|| Error::Domain {
                op: "family",
                msg: "--custom <file> is required for the custom family".into(),
            })?;
            FamilySpec::custom_from_file(path)
        }
    }
}

fn check_n(n_max: usize) -> Result<(), Error> {
    if n_max > MAX_TRIANGLE_N {
        return Err(Error::CapExceeded {
            what: "n-max",
            value: n_max,
            cap: MAX_TRIANGLE_N,
        });
    }
    Ok(())
}

/// `f_m(1..=n_max)` in the requested format.
pub fn cmd_seq(spec: &FamilySpec, m: usize, n_max: usize, format: Format) -> Result<String, Error> {
    check_n(n_max)?;
    let f = fm(spec, m, n_max)?;
    let values = f.values();
    let mut out = String::new();
    match format {
        Format::Plain => {
            for v in values {
                let _ = writeln!(out, "{v}");
            }
        }
        Format::Csv => {
            out.push_str("n,value\n");
            for (n, v) in (1..).zip(values) {
                let _ = writeln!(out, "{n},{v}");
            }
        }
        Format::Tsv => {
            for (n, v) in (1..).zip(values) {
                let _ = writeln!(out, "{n}\t{v}");
            }
        }
        Format::Bfile => out = BFile::from_values(1, values).render(),
        Format::Json => {
            let doc = serde_json::json!({
                "family": spec,
                "m": m,
                "offset": 1,
                "values": values.iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
            out = serde_json::to_string_pretty(&doc).expect("json");
            out.push('\n');
        }
    }
    Ok(out)
}

/// The `c_m` triangle in the requested format.
pub fn cmd_table(spec: &FamilySpec, m: usize, n_max: usize, format: Format) -> Result<String, Error> {
    check_n(n_max)?;
    let tri = cm(spec, m, n_max)?;
    Ok(match format {
        Format::Plain => tri.to_plain(),
        Format::Csv => tri.to_csv(),
        Format::Tsv => tri.to_tsv(),
        Format::Bfile => BFile::from_values(1, &tri.flatten()).render(),
        Format::Json => {
            let rows: Vec<Vec<String>> = (1..=n_max)
                .map(|n| {
                    tri.row(n)
                        .unwrap_or_default()
                        .iter()
                        .map(ToString::to_string)
                        .collect()
                })
                .collect();
            let doc = serde_json::json!({ "family": spec, "m": m, "rows": rows });
            let mut s = serde_json::to_string_pretty(&doc).expect("json");
            s.push('\n');
            s
        }
    })
}

/// Runs a suite; `n_max` overrides every size bound when given.
pub fn cmd_verify(suite: &str, n_max: Option<usize>, parallel: bool) -> Result<CheckReport, Error> {
    let suite: Suite = suite.parse()?;
    let bounds = n_max.map_or_else(Bounds::default, Bounds::uniform);
    run_suite(suite, &bounds, parallel)
}

/// Where a b-file comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BFileSource {
    Path(PathBuf),
    ANumber(String),
}

#[derive(Debug, Clone, Default)]
pub struct OeisOptions {
    pub fixtures: Option<PathBuf>,
    pub fetch: bool,
    /// Defaults to `OEIS_BASE_URL` or [`DEFAULT_OEIS_BASE_URL`].
    pub base_url: Option<String>,
}

/// Normalizes `A2478`, `a002478` or `2478` to `A002478`.
pub fn normalize_anum(s: &str) -> Result<String, Error> {
    let digits = s.trim().trim_start_matches(['A', 'a']);
    let n: u32 = digits.parse().map_err(|_| Error::Domain {
        op: "oeis",
        msg: format!("not an A-number: `{s}`"),
    })?;
    Ok(format!("A{n:06}"))
}

pub fn bfile_url(base: &str, anum: &str) -> String {
    format!("{}/{}/b{}.txt", base.trim_end_matches('/'), anum, &anum[1..])
}

fn fetch(url: &str) -> Result<String, String> {
    let client = reqwest::blocking::Client::builder()
        .timeout(Duration::from_secs(20))
        .build()
        .map_err(|e| e.to_string())?;
    let resp = client.get(url).send().map_err(|e| e.to_string())?;
    if !resp.status().is_success() {
        return Err(format!("HTTP {}", resp.status()));
    }
    resp.text().map_err(|e| e.to_string())
}

/// Loads the b-file text. `Ok(Err(reason))` means unavailable.
pub fn resolve_bfile(source: &BFileSource, opts: &OeisOptions) -> Result<Result<(String, String), String>, Error> {
    match source {
        BFileSource::Path(p) => Ok(Ok((std::fs::read_to_string(p)?, p.display().to_string()))),
        BFileSource::ANumber(raw) => {
            let anum = normalize_anum(raw)?;
            if opts.fetch {
                let base = opts
                    .base_url
                    .clone()
                    .or_else(|| std::env::var("OEIS_BASE_URL").ok())
                    .unwrap_or_else(|| DEFAULT_OEIS_BASE_URL.to_string());
                let url = bfile_url(&base, &anum);
                return Ok(fetch(&url)
                    .map(|t| (t, url.clone()))
                    .map_err(|e| format!("fetch of {url} failed: {e}")));
            }
            if let Some(dir) = &opts.fixtures {
                let p = dir.join(format!("b{}.txt", &anum[1..]));
                if p.exists() {
                    return Ok(Ok((std::fs::read_to_string(&p)?, p.display().to_string())));
                }
            }
            if let Some((_, text)) = VENDORED.iter().find(|(k, _)| *k == anum) {
                return Ok(Ok((text.to_string(), format!("vendored {anum}"))));
            }
            Ok(Err(format!(
                "no fixture for {anum} and network fetch disabled (use --fetch)"
            )))
        }
    }
}

/// Compares `f_m` of a family with a b-file.
pub fn cmd_oeis(
    spec: &FamilySpec,
    m: usize,
    n_max: usize,
    source: &BFileSource,
    opts: &OeisOptions,
) -> Result<CheckReport, Error> {
    let label = match source {
        BFileSource::Path(p) => p.display().to_string(),
        BFileSource::ANumber(a) => normalize_anum(a)?,
    };
    match resolve_bfile(source, opts)? {
        Ok((text, origin)) => {
            let bfile = BFile::parse(&text)?;
            let min = MIN_OEIS_OVERLAP.min(n_max);
            let mut report = run_oeis(spec, m, n_max, &bfile, min)?;
            report.note(format!("b-file source: {origin} ({} entries)", bfile.len()));
            Ok(report)
        }
        Err(why) => {
            let mut report = CheckReport::new("oeis");
            report.push(Case::skipped(
                format!("oeis:{label}"),
                &[("m", m as i64), ("n_max", n_max as i64)],
                &why,
            ));
            report.note(why);
            Ok(report)
        }
    }
}

/// Exit status for an OEIS report: failures beat skips.
pub fn oeis_exit_code(report: &CheckReport) -> i32 {
    if report.summary.fail > 0 {
        1
    } else if report.summary.pass == 0 {
        EXIT_SKIPPED
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anum_normalization() {
        assert_eq!(normalize_anum("A2478").unwrap(), "A002478");
        assert_eq!(normalize_anum("a000079").unwrap(), "A000079");
        assert!(normalize_anum("Axyz").is_err());
        assert_eq!(
            bfile_url("https://oeis.org/", "A002478"),
            "https://oeis.org/A002478/b002478.txt"
        );
    }

    #[test]
    fn family_args() {
        assert!(family(FamilyKind::Row, None, None).is_err());
        assert_eq!(family(FamilyKind::Row, Some(2), None).unwrap(), FamilySpec::Row { a: 2 });
        assert!(family(FamilyKind::Custom, None, None).is_err());
        assert_eq!(
            family(FamilyKind::CentralAdjacent, None, None).unwrap(),
            FamilySpec::CentralAdjacent
        );
    }

    #[test]
    fn vendored_fixtures_parse() {
        for (anum, text) in VENDORED {
            let b = BFile::parse(text).unwrap();
            assert!(b.len() >= 20, "{anum}");
        }
    }
}
