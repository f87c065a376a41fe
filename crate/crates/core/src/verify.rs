//! Verification suites: each compares two independent routes to the same
//! numbers and records one [`Case`] per comparison.

use std::str::FromStr;

use rayon::prelude::*;

use crate::bfile::BFile;
use crate::closed_forms::{
    c1_central, c1_central_adjacent, c1_diagonal, c1_row, identity_double_factorial,
    identity_idd1, identity_shifted_double_factorial, identity_vanishing, power_of_four_check,
    IdentityResult,
};
use crate::error::{Error, Result};
use crate::families::{FamilySpec, SeqFn};
use crate::kernel::{binomial, ExactInt};
use crate::oracles::{
    count_concat_two_peak, count_diag_lattice_paths, count_diag_lattice_paths_to, count_marker_words, count_norise_words,
    count_p3_words, count_p4_words_at_length, count_two_peak_dyck, p4_word_length,
    tally_p1_words, tally_p2_words, tally_p4_words, MAX_DYCK_SEMILENGTH, MAX_WORD_LEN,
};
use crate::report::{Case, CheckReport};
use crate::transforms::{c_triangle, cm, fm, lift_cm_from_c1, lift_fm_from_c1};

/// Largest truncation bound a triangle may be built with.
pub const MAX_TRIANGLE_N: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    ClosedForms,
    Identities,
    Words,
    Paths,
    Lifts,
    All,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::ClosedForms,
        Suite::Identities,
        Suite::Words,
        Suite::Paths,
        Suite::Lifts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ClosedForms => "closed-forms",
            Suite::Identities => "identities",
            Suite::Words => "words",
            Suite::Paths => "paths",
            Suite::Lifts => "lifts",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "closed-forms" => Suite::ClosedForms,
            "identities" => Suite::Identities,
            "words" => Suite::Words,
            "paths" => Suite::Paths,
            "lifts" => Suite::Lifts,
            "all" => Suite::All,
            other => return Err(Error::UnknownSuite(other.to_string())),
        })
    }
}

/// Size bounds for every suite. The defaults are the acceptance ranges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub closed_forms_n: usize,
    pub lifts_n: usize,
    pub lifts_m: usize,
    /// P1/P2 words, `n` (word length `n - 1`).
    pub words_n: usize,
    pub words_m: u32,
    pub words_a: u32,
    /// P3/P4 words.
    pub central_words_n: usize,
    pub marker_n: usize,
    pub norise_a: u32,
    pub norise_len: usize,
    pub idd1_u: u64,
    pub double_factorial_n: u64,
    pub vanishing_k: u64,
    pub power_of_four_n: usize,
    pub central_disguise_n: usize,
    pub dyck_euler_n: usize,
    pub dyck_euler_k: usize,
    /// Lattice identity runs over `n + k <= lattice_sum`.
    pub lattice_sum: usize,
    pub two_peak_s: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            closed_forms_n: 24,
            lifts_n: 16,
            lifts_m: 3,
            words_n: 10,
            words_m: 2,
            words_a: 3,
            central_words_n: 7,
            marker_n: 9,
            norise_a: 5,
            norise_len: 12,
            idd1_u: 30,
            double_factorial_n: 200,
            vanishing_k: 30,
            power_of_four_n: 60,
            central_disguise_n: 60,
            dyck_euler_n: 8,
            dyck_euler_k: 4,
            lattice_sum: 10,
            two_peak_s: 10,
        }
    }
}

impl Bounds {
    /// Every size bound set to `n`; the family parameters (`a`, `m`) keep
    /// their defaults.
    pub fn uniform(n: usize) -> Self {
        let d = Bounds::default();
        Bounds {
            closed_forms_n: n,
            lifts_n: n,
            words_n: n,
            central_words_n: n,
            marker_n: n,
            norise_len: n,
            idd1_u: n as u64,
            double_factorial_n: n as u64,
            vanishing_k: n as u64,
            power_of_four_n: n,
            central_disguise_n: n,
            dyck_euler_n: n,
            lattice_sum: n,
            two_peak_s: n,
            ..d
        }
    }

    /// Rejects bounds that would exceed the enumeration hard caps.
    /// Rejects bounds beyond the hard caps, checking only those `suite` uses.
    pub fn validate(&self, suite: Suite) -> Result<()> {
        let cap = |what: &'static str, value: usize, cap: usize| {
            if value > cap {
                Err(Error::CapExceeded { what, value, cap })
            } else {
                Ok(())
            }
        };
        let uses = |s: Suite| suite == s || suite == Suite::All;
        if uses(Suite::ClosedForms) {
            cap("triangle n (closed-forms)", self.closed_forms_n, MAX_TRIANGLE_N)?;
        }
        if uses(Suite::Lifts) {
            cap("triangle n (lifts)", self.lifts_n, MAX_TRIANGLE_N)?;
        }
        if uses(Suite::Words) {
            cap("P1/P2 word length", self.words_n.saturating_sub(1), MAX_WORD_LEN)?;
            cap("P3 word length", (2 * self.central_words_n).saturating_sub(2), MAX_WORD_LEN)?;
            cap("P4 word length", (2 * self.central_words_n).saturating_sub(1), MAX_WORD_LEN)?;
            cap("marker word length", (2 * self.marker_n).saturating_sub(2), MAX_WORD_LEN)?;
            cap("no-rise word length", self.norise_len, MAX_WORD_LEN)?;
        }
        if uses(Suite::Paths) {
            let euler_semi = self.dyck_euler_n + self.dyck_euler_k.min(self.dyck_euler_n);
            cap("dyck semilength", euler_semi, MAX_DYCK_SEMILENGTH)?;
            cap("dyck semilength", self.two_peak_s, MAX_DYCK_SEMILENGTH)?;
            cap("P3 word length (lattice identity)", (2 * self.lattice_sum).saturating_sub(4), MAX_WORD_LEN)?;
        }
        Ok(())
    }
}

/// The families every triangle-level suite sweeps.
pub fn sweep_families() -> Vec<FamilySpec> {
    let mut v: Vec<FamilySpec> = (1..=4).map(|a| FamilySpec::Row { a }).collect();
    v.extend((1..=4).map(|a| FamilySpec::Diagonal { a }));
    v.push(FamilySpec::Central);
    v.push(FamilySpec::CentralAdjacent);
    v
}

/// Closed form for `c_1(n, k)` of a named family.
pub fn c1_closed_form(spec: &FamilySpec, n: usize, k: usize) -> Result<ExactInt> {
    match spec {
        FamilySpec::Row { a } => c1_row(*a, n, k),
        FamilySpec::Diagonal { a } => c1_diagonal(*a, n, k),
        FamilySpec::Central => c1_central(n, k),
        FamilySpec::CentralAdjacent => c1_central_adjacent(n, k),
        FamilySpec::Custom { .. } => Err(Error::NoWordModel("custom family")),
    }
}

fn fam_params(spec: &FamilySpec) -> Vec<(&'static str, i64)> {
    match spec {
        FamilySpec::Row { a } | FamilySpec::Diagonal { a } => vec![("a", *a as i64)],
        _ => vec![],
    }
}

fn with(base: &[(&'static str, i64)], more: &[(&'static str, i64)]) -> Vec<(&'static str, i64)> {
    base.iter().chain(more).copied().collect()
}

fn identity_case(r: IdentityResult) -> Case {
    Case::compare(format!("identity:{}", r.name), &r.parameters, r.rhs, r.lhs)
}

type Group = Box<dyn Fn() -> Result<(Vec<Case>, Vec<String>)> + Send + Sync>;

fn closed_form_groups(b: &Bounds) -> Vec<Group> {
    let n_max = b.closed_forms_n;
    sweep_families()
        .into_iter()
        .map(|spec| -> Group {
            Box::new(move || {
                let mut cases = Vec::new();
                if n_max == 0 {
                    return Ok((cases, vec![]));
                }
                let tri = c_triangle(&SeqFn::initial(&spec, n_max)?, n_max)?;
                let op = format!("closed_form:{}", spec.name());
                for n in 1..=n_max {
                    for k in 1..=n {
                        let p = with(&fam_params(&spec), &[("n", n as i64), ("k", k as i64)]);
                        cases.push(Case::compare(
                            op.clone(),
                            &p,
                            tri.get(n, k),
                            c1_closed_form(&spec, n, k)?,
                        ));
                    }
                }
                Ok((cases, vec![]))
            })
        })
        .collect()
}

fn lift_groups(b: &Bounds) -> Vec<Group> {
    let (n_max, m_max) = (b.lifts_n, b.lifts_m);
    let mut groups: Vec<Group> = Vec::new();
    for spec in sweep_families() {
        for m in 1..=m_max {
            let spec = spec.clone();
            groups.push(Box::new(move || {
                let mut cases = Vec::new();
                if n_max == 0 {
                    return Ok((cases, vec![]));
                }
                let c1 = cm(&spec, 1, n_max)?;
                let direct = cm(&spec, m, n_max)?;
                let f = fm(&spec, m, n_max)?;
                let base = with(&fam_params(&spec), &[("m", m as i64)]);
                for n in 1..=n_max {
                    cases.push(Case::compare(
                        format!("lift_fm:{}", spec.name()),
                        &with(&base, &[("n", n as i64)]),
                        f.get(n)?,
                        lift_fm_from_c1(&c1, m, n)?,
                    ));
                    for k in 1..=n {
                        cases.push(Case::compare(
                            format!("lift_cm:{}", spec.name()),
                            &with(&base, &[("n", n as i64), ("k", k as i64)]),
                            direct.get(n, k),
                            lift_cm_from_c1(&c1, m, n, k)?,
                        ));
                    }
                }
                Ok((cases, vec![]))
            }));
        }
    }
    groups
}

fn identity_groups(b: &Bounds) -> Vec<Group> {
    let b = b.clone();
    let mut groups: Vec<Group> = Vec::new();
    let u_max = b.idd1_u;
    groups.push(Box::new(move || {
        let mut cases = Vec::new();
        for u in 1..=u_max {
            for v in 1..=u {
                for w in 1..=v {
                    cases.push(identity_case(identity_idd1(u, v, w)?));
                }
            }
        }
        Ok((cases, vec![]))
    }));
    let n_max = b.double_factorial_n;
    groups.push(Box::new(move || {
        let mut cases = Vec::new();
        for n in 1..=n_max {
            cases.push(identity_case(identity_double_factorial(n)?));
            cases.push(identity_case(identity_shifted_double_factorial(n)?));
        }
        Ok((cases, vec![]))
    }));
    let k_max = b.vanishing_k;
    groups.push(Box::new(move || {
        let mut cases = Vec::new();
        for k in 1..=k_max {
            for j in 0..k {
                cases.push(identity_case(identity_vanishing(k, j)?));
            }
        }
        Ok((cases, vec![
            "vanishing identity: right-hand side taken as 0 for all j < k".to_string(),
        ]))
    }));
    let (four, disguise) = (b.power_of_four_n, b.central_disguise_n);
    groups.push(Box::new(move || {
        let mut cases = Vec::new();
        for n in 2..=four {
            cases.push(identity_case(power_of_four_check(n)?));
        }
        for n in 1..=disguise {
            cases.push(Case::compare(
                "identity:central_first_column",
                &[("n", n as i64)],
                binomial(2 * n as u64 - 2, n as i64 - 1),
                c1_central(n, 1)?,
            ));
        }
        Ok((cases, vec![]))
    }));
    groups
}

fn word_groups(b: &Bounds) -> Vec<Group> {
    let b = b.clone();
    let mut groups: Vec<Group> = Vec::new();
    for (prop, tally) in [
        ("p1", tally_p1_words as fn(u32, u32, usize) -> Result<Vec<ExactInt>>),
        ("p2", tally_p2_words),
    ] {
        for a in 1..=b.words_a {
            for m in 1..=b.words_m {
                let n_max = b.words_n;
                groups.push(Box::new(move || {
                    let mut cases = Vec::new();
                    if n_max == 0 {
                        return Ok((cases, vec![]));
                    }
                    let spec = if prop == "p1" {
                        FamilySpec::Row { a }
                    } else {
                        FamilySpec::Diagonal { a }
                    };
                    let tri = cm(&spec, m as usize, n_max)?;
                    let f = fm(&spec, m as usize, n_max)?;
                    let base = [("a", a as i64), ("m", m as i64)];
                    for n in 1..=n_max {
                        let t = tally(a, m, n)?;
                        for k in 1..=n {
                            cases.push(Case::compare(
                                format!("count_{prop}_words"),
                                &with(&base, &[("n", n as i64), ("k", k as i64)]),
                                tri.get(n, k),
                                &t[k - 1],
                            ));
                        }
                        cases.push(Case::compare(
                            format!("count_{prop}_words:total"),
                            &with(&base, &[("n", n as i64)]),
                            f.get(n)?,
                            t.iter().sum::<ExactInt>(),
                        ));
                    }
                    Ok((cases, vec![]))
                }));
            }
        }
    }

    let (a_max, len_max) = (b.norise_a, b.norise_len);
    groups.push(Box::new(move || {
        let mut cases = Vec::new();
        for a in 1..=a_max {
            for len in 0..=len_max {
                let d = count_norise_words(a, len)?;
                let p = [("a", a as i64), ("len", len as i64)];
                cases.push(Case::compare(
                    "count_norise_words:closed_form",
                    &p,
                    binomial((len + a as usize - 1) as u64, a as i64 - 1),
                    &d,
                ));
                if a < a_max {
                    let rec: ExactInt = (0..=len)
                        .map(|i| count_norise_words(a, i))
                        .sum::<Result<ExactInt>>()?;
                    cases.push(Case::compare(
                        "count_norise_words:recurrence",
                        &p,
                        rec,
                        count_norise_words(a + 1, len)?,
                    ));
                }
            }
        }
        Ok((cases, vec![]))
    }));

    let n3 = b.central_words_n;
    groups.push(Box::new(move || {
        let mut cases = Vec::new();
        for n in 1..=n3 {
            for k in 1..=n {
                cases.push(Case::compare(
                    "count_p3_words",
                    &[("n", n as i64), ("k", k as i64)],
                    c1_central(n, k)?,
                    count_p3_words(n, k)?,
                ));
            }
        }
        Ok((cases, vec![]))
    }));
    groups.push(Box::new(move || {
        let mut cases = Vec::new();
        for n in 1..=n3 {
            let t = tally_p4_words(n)?;
            for k in 1..=n {
                cases.push(Case::compare(
                    "count_p4_words",
                    &[("n", n as i64), ("k", k as i64)],
                    c1_central_adjacent(n, k)?,
                    &t[k - 1],
                ));
            }
        }
        let mut notes = vec![format!(
            "P4 words are enumerated at length 2n-1 (blocks of length 2i_t-1 plus k-1 separators), \
             not at the stated length n+k-1; the two agree only when k = n"
        )];
        if n3 >= 2 {
            let stated = count_p4_words_at_length(2, 1)?;
            notes.push(format!(
                "witness: n=2, k=1 at length n+k-1=2 gives {stated} words, at length {} gives {}; c_1(2,1)={}",
                p4_word_length(2),
                count_p4_words_at_length(p4_word_length(2), 1)?,
                c1_central_adjacent(2, 1)?
            ));
        }
        Ok((cases, notes))
    }));

    let nm = b.marker_n;
    groups.push(Box::new(move || {
        let mut cases = Vec::new();
        let mut specs: Vec<FamilySpec> = (1..=3).map(|a| FamilySpec::Row { a }).collect();
        specs.extend((1..=3).map(|a| FamilySpec::Diagonal { a }));
        specs.push(FamilySpec::Central);
        for spec in specs {
            if nm == 0 {
                break;
            }
            let tri = cm(&spec, 1, nm)?;
            for n in 1..=nm {
                for k in 1..=n {
                    cases.push(Case::compare(
                        format!("count_marker_words:{}", spec.name()),
                        &with(&fam_params(&spec), &[("n", n as i64), ("k", k as i64)]),
                        tri.get(n, k),
                        count_marker_words(&spec, n, k)?,
                    ));
                }
            }
        }
        let outcome = match count_marker_words(&FamilySpec::CentralAdjacent, 2, 1) {
            Err(Error::MarkerNotApplicable(_)) => "rejected",
            Err(_) => "error",
            Ok(_) => "accepted",
        };
        cases.push(Case::compare(
            "count_marker_words:central-adjacent",
            &[("n", 2), ("k", 1)],
            "rejected",
            outcome,
        ));
        Ok((cases, vec![]))
    }));
    groups
}

fn path_groups(b: &Bounds) -> Vec<Group> {
    let b = b.clone();
    let mut groups: Vec<Group> = Vec::new();
    let (en, ek) = (b.dyck_euler_n, b.dyck_euler_k);
    groups.push(Box::new(move || {
        let mut cases = Vec::new();
        if en == 0 {
            return Ok((cases, vec![]));
        }
        let tri = cm(&FamilySpec::Diagonal { a: 3 }, 1, en)?;
        for n in 1..=en {
            let words = tally_p2_words(3, 1, n)?;
            for k in 1..=ek.min(n) {
                let p = [("n", n as i64), ("k", k as i64)];
                let dyck = count_concat_two_peak(n, k)?;
                cases.push(Case::compare("euler:p2_vs_two_peak_concat", &p, &words[k - 1], &dyck));
                cases.push(Case::compare("count_concat_two_peak", &p, tri.get(n, k), dyck));
            }
        }
        Ok((cases, vec![]))
    }));
    let s_max = b.two_peak_s;
    groups.push(Box::new(move || {
        let mut cases = Vec::new();
        for s in 2..=s_max {
            cases.push(Case::compare(
                "count_two_peak_dyck",
                &[("s", s as i64)],
                crate::families::f0(&FamilySpec::Diagonal { a: 3 }, s - 1)?,
                count_two_peak_dyck(s)?,
            ));
        }
        Ok((cases, vec![]))
    }));
    let sum = b.lattice_sum;
    groups.push(Box::new(move || {
        let mut cases = Vec::new();
        for n in 1..sum {
            for k in 1..=n.min(sum - n) {
                let p = [("n", n as i64), ("k", k as i64)];
                let lattice = count_diag_lattice_paths(n, k)?;
                cases.push(Case::compare(
                    "euler:p3_vs_diag_lattice",
                    &p,
                    count_p3_words(n, k)?,
                    &lattice,
                ));
                cases.push(Case::compare(
                    "count_diag_lattice_paths",
                    &p,
                    c1_central(n, k)?,
                    lattice,
                ));
            }
        }
        let mut notes = vec![
            "lattice paths end at (n-1, n-1) (blocks of side i_t-1 plus k-1 diagonal steps), \
             not at the stated (n+k-2, n+k-2); the two agree only when k = 1"
                .to_string(),
        ];
        if sum >= 5 {
            notes.push(format!(
                "witness: n=3, k=2 ending at (3,3) gives {} paths, ending at (2,2) gives {}; c_1(3,2)={}",
                count_diag_lattice_paths_to(3, 1),
                count_diag_lattice_paths_to(2, 1),
                c1_central(3, 2)?
            ));
        }
        Ok((cases, notes))
    }));
    groups
}

fn groups_for(suite: Suite, b: &Bounds) -> Vec<Group> {
    match suite {
        Suite::ClosedForms => closed_form_groups(b),
        Suite::Identities => identity_groups(b),
        Suite::Words => word_groups(b),
        Suite::Paths => path_groups(b),
        Suite::Lifts => lift_groups(b),
        Suite::All => Suite::ALL.iter().flat_map(|&s| groups_for(s, b)).collect(),
    }
}

/// Runs a suite. With `parallel`, independent groups run concurrently;
/// cases are merged in group order either way, so output is identical.
pub fn run_suite(suite: Suite, bounds: &Bounds, parallel: bool) -> Result<CheckReport> {
    bounds.validate(suite)?;
    let groups = groups_for(suite, bounds);
    let results: Vec<Result<(Vec<Case>, Vec<String>)>> = if parallel {
        groups.par_iter().map(|g| g()).collect()
    } else {
        groups.iter().map(|g| g()).collect()
    };
    let mut report = CheckReport::new(suite.name());
    for r in results {
        let (cases, notes) = r?;
        report.extend(cases);
        for n in notes {
            report.note(n);
        }
    }
    Ok(report)
}

/// Checks `f_m(1..=n_max)` of a family against a b-file.
pub fn run_oeis(
    spec: &FamilySpec,
    m: usize,
    n_max: usize,
    bfile: &BFile,
    min_overlap: usize,
) -> Result<CheckReport> {
    if n_max > MAX_TRIANGLE_N {
        return Err(Error::CapExceeded {
            what: "sequence n",
            value: n_max,
            cap: MAX_TRIANGLE_N,
        });
    }
    let values = if n_max == 0 {
        Vec::new()
    } else {
        fm(spec, m, n_max)?.values().to_vec()
    };
    let label = format!("{spec},m={m}");
    Ok(crate::bfile::compare_report(&label, &values, bfile, min_overlap))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::ALL.iter().chain([Suite::All].iter()) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
        assert!(matches!("bogus".parse::<Suite>(), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn caps_enforced() {
        assert!(Bounds::default().validate(Suite::All).is_ok());
        assert!(matches!(
            Bounds::uniform(10).validate(Suite::All),
            Err(Error::CapExceeded { .. })
        ));
        assert!(Bounds::uniform(50).validate(Suite::Identities).is_ok());
        assert!(Bounds::uniform(50).validate(Suite::Words).is_err());
        let b = Bounds {
            closed_forms_n: 513,
            ..Bounds::default()
        };
        assert!(b.validate(Suite::ClosedForms).is_err());
        assert!(b.validate(Suite::Words).is_ok());
    }

    #[test]
    fn smoke_all_tiny() {
        let r = run_suite(Suite::All, &Bounds::uniform(3), false).unwrap();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert!(r.summary.pass > 0);
        assert_eq!(r.summary, r.tally());
    }

    #[test]
    fn parallel_matches_sequential() {
        let b = Bounds::uniform(5);
        let seq = run_suite(Suite::All, &b, false).unwrap();
        let par = run_suite(Suite::All, &b, true).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn words_report_carries_p4_note() {
        let r = run_suite(Suite::Words, &Bounds::uniform(4), false).unwrap();
        assert!(r.passed());
        assert!(r.notes.iter().any(|n| n.contains("2n-1") && n.contains("n+k-1")));
    }

    #[test]
    fn oeis_empty_prefix_skipped() {
        let r = run_oeis(&FamilySpec::Row { a: 2 }, 1, 0, &BFile::default(), 1).unwrap();
        assert_eq!(r.summary.skip, 1);
        assert!(r.passed());
    }
}
