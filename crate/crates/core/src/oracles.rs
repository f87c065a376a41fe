//! Brute-force enumerators for the words, Dyck paths and lattice paths the
//! closed forms claim to count.
//!
//! Word oracles are generate-and-filter over the whole word space. A "run"
//! is a maximal contiguous block of base letters between marker letters.
//! Exhaustive loops are partitioned by first letter and summed in a fixed
//! order, so results do not depend on scheduling.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{word_length, FamilySpec};
use crate::kernel::{compositions, ExactInt};

/// Longest word any oracle will enumerate.
pub const MAX_WORD_LEN: usize = 16;

/// Longest Dyck semilength the path oracles will enumerate.
pub const MAX_DYCK_SEMILENGTH: usize = 14;

/// A word over `{0, .., alphabet - 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u8>,
    alphabet: u8,
}

impl Word {
    pub fn new(letters: Vec<u8>, alphabet: u8) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l >= alphabet) {
            return Err(Error::domain(
                "word",
                format!("letter {bad} outside alphabet of size {alphabet}"),
            ));
        }
        Ok(Word { letters, alphabet })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn alphabet(&self) -> u8 {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn count(&self, letter: u8) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }
}

/// How "subwords over the low letters" is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reading {
    /// Each maximal run of low letters must satisfy the property.
    #[default]
    Blocks,
    /// The scattered subsequence of all low letters must satisfy it.
    Subsequence,
}

fn check_len(len: usize) -> Result<()> {
    if len > MAX_WORD_LEN {
        return Err(Error::CapExceeded {
            what: "word length",
            value: len,
            cap: MAX_WORD_LEN,
        });
    }
    Ok(())
}

/// Calls `visit` on every word of length `len` over `{0, .., alphabet - 1}`
/// and sums the per-word tallies it returns (indexed by bucket).
fn tally_words<F>(len: usize, alphabet: u8, buckets: usize, visit: F) -> Vec<u64>
where
    F: Fn(&[u8]) -> Option<usize> + Sync,
{
    let run = |first: Option<u8>| {
        let mut tally = vec![0u64; buckets];
        let mut word = vec![0u8; len];
        let fixed = usize::from(first.is_some());
        if let Some(f) = first {
            word[0] = f;
        }
        loop {
            if let Some(b) = visit(&word) {
                tally[b] += 1;
            }
            // odometer over positions fixed..len
            let mut pos = len;
            loop {
                if pos == fixed {
                    return tally;
                }
                pos -= 1;
                word[pos] += 1;
                if word[pos] < alphabet {
                    break;
                }
                word[pos] = 0;
            }
        }
    };
    if len == 0 || alphabet == 0 {
        return if len == 0 { run(None) } else { vec![0; buckets] };
    }
    let parts: Vec<Vec<u64>> = (0..alphabet).into_par_iter().map(|f| run(Some(f))).collect();
    parts.into_iter().fold(vec![0u64; buckets], |mut acc, p| {
        acc.iter_mut().zip(p).for_each(|(a, b)| *a += b);
        acc
    })
}

fn runs_ok(word: &[u8], low: u8, reading: Reading, ok: impl Fn(u8, u8) -> bool) -> bool {
    match reading {
        Reading::Blocks => word
            .windows(2)
            .all(|w| w[0] >= low || w[1] >= low || ok(w[0], w[1])),
        Reading::Subsequence => {
            let mut prev: Option<u8> = None;
            for &l in word.iter().filter(|&&l| l < low) {
                if let Some(p) = prev {
                    if !ok(p, l) {
                        return false;
                    }
                }
                prev = Some(l);
            }
            true
        }
    }
}

fn check_amnk(op: &'static str, a: u32, m: u32, n: usize, k: Option<usize>) -> Result<()> {
    if a < 1 || n < 1 {
        return Err(Error::domain(op, "need a >= 1 and n >= 1"));
    }
    if a + m > u8::MAX as u32 {
        return Err(Error::domain(op, "alphabet too large"));
    }
    if let Some(k) = k {
        if m < 1 {
            return Err(Error::domain(op, "k requires m >= 1"));
        }
        if k < 1 || k > n {
            return Err(Error::domain(op, format!("need 1 <= k <= n, got k={k}")));
        }
    }
    check_len(n - 1)
}

/// Words of length `n - 1` over `{0, .., a + m - 1}` whose low runs pass
/// `ok`, tallied by the number of top letters.
fn tally_low_runs(
    a: u32,
    m: u32,
    n: usize,
    reading: Reading,
    ok: fn(u8, u8) -> bool,
) -> Vec<u64> {
    let alphabet = (a + m) as u8;
    let top = alphabet - 1;
    let low = a as u8;
    tally_words(n - 1, alphabet, n, |w| {
        runs_ok(w, low, reading, ok).then(|| w.iter().filter(|&&l| l == top).count())
    })
}

fn increasing(x: u8, y: u8) -> bool {
    x < y
}

fn no_rise(x: u8, y: u8) -> bool {
    x >= y
}

fn pick(tally: &[u64], k: Option<usize>) -> ExactInt {
    match k {
        Some(k) => BigInt::from(tally[k - 1]),
        None => tally.iter().map(|&c| BigInt::from(c)).sum(),
    }
}

/// Words of length `n - 1` over `{0, .., a + m - 1}` whose runs of letters
/// below `a` are strictly increasing; with `k`, exactly `k - 1` letters
/// equal `a + m - 1`.
pub fn count_p1_words(a: u32, m: u32, n: usize, k: Option<usize>) -> Result<ExactInt> {
    count_p1_words_with(a, m, n, k, Reading::Blocks)
}

pub fn count_p1_words_with(
    a: u32,
    m: u32,
    n: usize,
    k: Option<usize>,
    reading: Reading,
) -> Result<ExactInt> {
    check_amnk("count_p1_words", a, m, n, k)?;
    Ok(pick(&tally_low_runs(a, m, n, reading, increasing), k))
}

/// Tally of P1 words of length `n - 1` by number of top letters:
/// entry `k - 1` is the count for `k`.
pub fn tally_p1_words(a: u32, m: u32, n: usize) -> Result<Vec<ExactInt>> {
    check_amnk("tally_p1_words", a, m, n, None)?;
    Ok(to_big(tally_low_runs(a, m, n, Reading::Blocks, increasing)))
}

/// As [`count_p1_words`] with weakly decreasing (rise-free) low runs.
pub fn count_p2_words(a: u32, m: u32, n: usize, k: Option<usize>) -> Result<ExactInt> {
    count_p2_words_with(a, m, n, k, Reading::Blocks)
}

pub fn count_p2_words_with(
    a: u32,
    m: u32,
    n: usize,
    k: Option<usize>,
    reading: Reading,
) -> Result<ExactInt> {
    check_amnk("count_p2_words", a, m, n, k)?;
    Ok(pick(&tally_low_runs(a, m, n, reading, no_rise), k))
}

pub fn tally_p2_words(a: u32, m: u32, n: usize) -> Result<Vec<ExactInt>> {
    check_amnk("tally_p2_words", a, m, n, None)?;
    Ok(to_big(tally_low_runs(a, m, n, Reading::Blocks, no_rise)))
}

fn to_big(t: Vec<u64>) -> Vec<ExactInt> {
    t.into_iter().map(BigInt::from).collect()
}

/// Weakly decreasing words of length `len` over `{0, .., a - 1}`.
pub fn count_norise_words(a: u32, len: usize) -> Result<ExactInt> {
    if a < 1 || a > u8::MAX as u32 {
        return Err(Error::domain("count_norise_words", "need 1 <= a <= 255"));
    }
    check_len(len)?;
    let t = tally_words(len, a as u8, 1, |w| {
        w.windows(2).all(|p| p[0] >= p[1]).then_some(0)
    });
    Ok(BigInt::from(t[0]))
}

fn check_nk(op: &'static str, n: usize, k: usize) -> Result<()> {
    if n < 1 || k < 1 || k > n {
        return Err(Error::domain(op, format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(())
}

/// Ternary words of length `2n - k - 1` with exactly `k - 1` letters `2` in
/// which every binary run has as many zeros as ones.
pub fn count_p3_words(n: usize, k: usize) -> Result<ExactInt> {
    check_nk("count_p3_words", n, k)?;
    let len = 2 * n - k - 1;
    check_len(len)?;
    let t = tally_words(len, 3, 1, |w| {
        let mut twos = 0;
        let mut balance = 0i32;
        for &l in w {
            match l {
                2 => {
                    if balance != 0 {
                        return None;
                    }
                    twos += 1;
                }
                1 => balance += 1,
                _ => balance -= 1,
            }
        }
        (balance == 0 && twos == k - 1).then_some(0)
    });
    Ok(BigInt::from(t[0]))
}

/// Word length used by the P4 oracle for given `n`: the blocks have lengths
/// `2 i_t - 1` and there are `k - 1` separators, which totals `2n - 1`.
pub fn p4_word_length(n: usize) -> usize {
    2 * n - 1
}

/// P4 words of length `len` tallied by number of `2`s (buckets `0..buckets`).
fn p4_tally(len: usize, buckets: usize) -> Vec<u64> {
    tally_words(len, 3, buckets, |w| {
        if w.first() == Some(&2) || w.last() == Some(&2) {
            return None;
        }
        let mut twos = 0;
        let mut balance = 0i32;
        for &l in w {
            match l {
                2 => {
                    // closes a run, which must be nonempty with one extra 1
                    if balance != 1 {
                        return None;
                    }
                    balance = 0;
                    twos += 1;
                }
                1 => balance += 1,
                _ => balance -= 1,
            }
        }
        (balance == 1 && twos < buckets).then_some(twos)
    })
}

/// Ternary words of length `2n - 1` with exactly `k - 1` letters `2`, none at
/// either end, no two adjacent, and every binary run having one more `1`
/// than `0`.
pub fn count_p4_words(n: usize, k: usize) -> Result<ExactInt> {
    check_nk("count_p4_words", n, k)?;
    count_p4_words_at_length(p4_word_length(n), k)
}

/// The P4 constraints at an arbitrary word length.
pub fn count_p4_words_at_length(len: usize, k: usize) -> Result<ExactInt> {
    if k < 1 {
        return Err(Error::domain("count_p4_words", "k must be >= 1"));
    }
    check_len(len)?;
    Ok(BigInt::from(p4_tally(len, k)[k - 1]))
}

/// All `k` at once for a fixed `n`; entry `k - 1`.
pub fn tally_p4_words(n: usize) -> Result<Vec<ExactInt>> {
    check_nk("tally_p4_words", n, 1)?;
    check_len(p4_word_length(n))?;
    Ok(to_big(p4_tally(p4_word_length(n), n)))
}

type BlockFilter = Box<dyn Fn(&[u8]) -> bool>;

/// Every word of length `len` over the family's base alphabet that has the
/// family's block property.
fn block_words(spec: &FamilySpec, len: usize) -> Result<Vec<Vec<u8>>> {
    let s = spec.base_alphabet().ok_or(Error::NoWordModel("custom family"))? as u8;
    let keep: BlockFilter = match spec {
        FamilySpec::Row { .. } => Box::new(|w| w.windows(2).all(|p| p[0] < p[1])),
        FamilySpec::Diagonal { .. } => Box::new(|w| w.windows(2).all(|p| p[0] >= p[1])),
        FamilySpec::Central => {
            Box::new(|w| 2 * w.iter().filter(|&&l| l == 1).count() == w.len())
        }
        FamilySpec::CentralAdjacent => {
            Box::new(|w| 2 * w.iter().filter(|&&l| l == 1).count() == w.len() + 1)
        }
        FamilySpec::Custom { .. } => unreachable!(),
    };
    let mut out = Vec::new();
    let mut word = vec![0u8; len];
    loop {
        if keep(&word) {
            out.push(word.clone());
        }
        let mut pos = len;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            word[pos] += 1;
            if word[pos] < s {
                break;
            }
            word[pos] = 0;
        }
    }
}

/// Distinct words `w_1 x w_2 x .. x w_k` built from every composition
/// `i_1 + .. + i_k = n`, where `w_t` ranges over the family's words of
/// length `l(i_t - 1)` and `x` is a fresh marker letter.
///
/// Applies to families whose empty word has the block property (row,
/// diagonal, central).
pub fn count_marker_words(spec: &FamilySpec, n: usize, k: usize) -> Result<ExactInt> {
    match spec {
        FamilySpec::CentralAdjacent => return Err(Error::MarkerNotApplicable("central-adjacent")),
        FamilySpec::Custom { .. } => return Err(Error::NoWordModel("custom family")),
        _ => {}
    }
    check_nk("count_marker_words", n, k)?;
    let marker = spec.base_alphabet().expect("named family") as u8;
    let blocks: Vec<Vec<Vec<u8>>> = (1..=n - k + 1)
        .map(|i| {
            let len = word_length(spec, i)?;
            check_len(len)?;
            block_words(spec, len)
        })
        .collect::<Result<_>>()?;
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    for parts in compositions(n, k) {
        let mut partial: Vec<Vec<u8>> = vec![Vec::new()];
        for (t, &i) in parts.iter().enumerate() {
            let mut next = Vec::with_capacity(partial.len() * blocks[i - 1].len());
            for prefix in &partial {
                for b in &blocks[i - 1] {
                    let mut w = prefix.clone();
                    if t > 0 {
                        w.push(marker);
                    }
                    w.extend_from_slice(b);
                    next.push(w);
                }
            }
            partial = next;
        }
        seen.extend(partial);
    }
    Ok(BigInt::from(seen.len()))
}

/// Up or down step of a Dyck path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DyckStep {
    Up,
    Down,
}

/// A balanced up/down path that never dips below its start.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckPath {
    steps: Vec<DyckStep>,
}

impl DyckPath {
    pub fn new(steps: Vec<DyckStep>) -> Result<Self> {
        let mut h = 0i64;
        for s in &steps {
            h += if *s == DyckStep::Up { 1 } else { -1 };
            if h < 0 {
                return Err(Error::domain("dyck_path", "prefix dips below zero"));
            }
        }
        if h != 0 {
            return Err(Error::domain("dyck_path", "path does not return to zero"));
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[DyckStep] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Occurrences of an up-step immediately followed by a down-step.
    pub fn peaks(&self) -> usize {
        self.steps
            .windows(2)
            .filter(|w| w[0] == DyckStep::Up && w[1] == DyckStep::Down)
            .count()
    }

    /// Splits at every return to height zero.
    pub fn components(&self) -> Vec<DyckPath> {
        let mut out = Vec::new();
        let mut h = 0i64;
        let mut start = 0;
        for (i, s) in self.steps.iter().enumerate() {
            h += if *s == DyckStep::Up { 1 } else { -1 };
            if h == 0 {
                out.push(DyckPath {
                    steps: self.steps[start..=i].to_vec(),
                });
                start = i + 1;
            }
        }
        out
    }
}

/// Every Dyck path of the given semilength.
pub fn dyck_paths(semilength: usize) -> Result<Vec<DyckPath>> {
    if semilength > MAX_DYCK_SEMILENGTH {
        return Err(Error::CapExceeded {
            what: "dyck semilength",
            value: semilength,
            cap: MAX_DYCK_SEMILENGTH,
        });
    }
    fn go(ups: usize, downs: usize, s: usize, cur: &mut Vec<DyckStep>, out: &mut Vec<DyckPath>) {
        if downs == s {
            out.push(DyckPath { steps: cur.clone() });
            return;
        }
        if ups < s {
            cur.push(DyckStep::Up);
            go(ups + 1, downs, s, cur, out);
            cur.pop();
        }
        if downs < ups {
            cur.push(DyckStep::Down);
            go(ups, downs + 1, s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, 0, semilength, &mut Vec::with_capacity(2 * semilength), &mut out);
    Ok(out)
}

/// Dyck paths of semilength `s` with exactly two peaks; zero for `s < 2`.
pub fn count_two_peak_dyck(s: usize) -> Result<ExactInt> {
    if s < 2 {
        return Ok(BigInt::zero());
    }
    Ok(dyck_paths(s)?.iter().filter(|p| p.peaks() == 2).count().into())
}

/// Ways to cut `comps` into `pieces` consecutive groups of exactly two peaks.
fn two_peak_factorizations(comps: &[usize], pieces: usize) -> u64 {
    if comps.is_empty() {
        return u64::from(pieces == 0);
    }
    if pieces == 0 {
        return 0;
    }
    let mut total = 0;
    let mut peaks = 0;
    for (i, &p) in comps.iter().enumerate() {
        peaks += p;
        if peaks == 2 {
            total += two_peak_factorizations(&comps[i + 1..], pieces - 1);
        }
        if peaks >= 2 {
            break;
        }
    }
    total
}

/// Pairs (path, factorization) where a Dyck path of semilength `n + k` is cut
/// into `k` consecutive Dyck factors with exactly two peaks each.
pub fn count_concat_two_peak(n: usize, k: usize) -> Result<ExactInt> {
    check_nk("count_concat_two_peak", n, k)?;
    let total: u64 = dyck_paths(n + k)?
        .iter()
        .map(|p| {
            let peaks: Vec<usize> = p.components().iter().map(DyckPath::peaks).collect();
            two_peak_factorizations(&peaks, k)
        })
        .sum();
    Ok(total.into())
}

/// Lattice step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// `(1, 0)`
    Right,
    /// `(0, 1)`
    Up,
    /// `(1, 1)`
    Diag,
}

/// Steps applied from a start point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    start: (i64, i64),
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: (i64, i64), steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn points(&self) -> Vec<(i64, i64)> {
        let mut p = self.start;
        let mut out = vec![p];
        for s in &self.steps {
            match s {
                Step::Right => p.0 += 1,
                Step::Up => p.1 += 1,
                Step::Diag => {
                    p.0 += 1;
                    p.1 += 1
                }
            }
            out.push(p);
        }
        out
    }

    pub fn end(&self) -> (i64, i64) {
        *self.points().last().expect("nonempty")
    }

    pub fn diag_steps(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::Diag).count()
    }

    /// Every diagonal step departs from a point with equal coordinates.
    pub fn diags_on_main_diagonal(&self) -> bool {
        self.points()
            .iter()
            .zip(&self.steps)
            .all(|(p, s)| *s != Step::Diag || p.0 == p.1)
    }
}

/// Side of the square for the lattice identity: the blocks are paths of
/// side `i_t - 1` joined by `k - 1` diagonal steps, which totals `n - 1`.
pub fn lattice_side(n: usize) -> usize {
    n - 1
}

/// Paths `(0,0) -> (n-1, n-1)` with unit right/up steps and exactly `k - 1`
/// diagonal steps, each taken from the main diagonal.
pub fn count_diag_lattice_paths(n: usize, k: usize) -> Result<ExactInt> {
    check_nk("count_diag_lattice_paths", n, k)?;
    Ok(count_diag_lattice_paths_to(lattice_side(n), k - 1))
}

/// Paths `(0,0) -> (side, side)` with exactly `diags` diagonal steps, each
/// from the main diagonal.
pub fn count_diag_lattice_paths_to(side: usize, diags: usize) -> ExactInt {
    // ways[x][y][d]
    let mut ways = vec![vec![vec![BigInt::zero(); diags + 1]; side + 1]; side + 1];
    ways[0][0][0] = BigInt::from(1);
    for x in 0..=side {
        for y in 0..=side {
            if x + y == 0 {
                continue;
            }
            for d in 0..=diags {
                let mut acc = BigInt::zero();
                if x > 0 {
                    acc += &ways[x - 1][y][d];
                }
                if y > 0 {
                    acc += &ways[x][y - 1][d];
                }
                if x == y && x > 0 && d > 0 {
                    acc += &ways[x - 1][y - 1][d - 1];
                }
                ways[x][y][d] = acc;
            }
        }
    }
    ways[side][side][diags].clone()
}

/// Explicit list of the paths counted by [`count_diag_lattice_paths`].
pub fn diag_lattice_paths(n: usize, k: usize) -> Result<Vec<LatticePath>> {
    check_nk("diag_lattice_paths", n, k)?;
    let side = lattice_side(n) as i64;
    fn go(
        p: (i64, i64),
        left: usize,
        side: i64,
        cur: &mut Vec<Step>,
        out: &mut Vec<LatticePath>,
    ) {
        if p == (side, side) && left == 0 {
            out.push(LatticePath::new((0, 0), cur.clone()));
            return;
        }
        let moves = [(Step::Right, 1, 0), (Step::Up, 0, 1), (Step::Diag, 1, 1)];
        for (s, dx, dy) in moves {
            let q = (p.0 + dx, p.1 + dy);
            if q.0 > side || q.1 > side {
                continue;
            }
            if s == Step::Diag && (left == 0 || p.0 != p.1) {
                continue;
            }
            cur.push(s);
            go(q, left - usize::from(s == Step::Diag), side, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go((0, 0), k - 1, side, &mut Vec::new(), &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::binomial;

    fn int(v: i64) -> ExactInt {
        v.into()
    }

    #[test]
    fn word_validation() {
        assert!(Word::new(vec![0, 1, 2], 3).is_ok());
        assert!(Word::new(vec![0, 3], 3).is_err());
        let w = Word::new(vec![2, 0, 2], 3).unwrap();
        assert_eq!(w.count(2), 2);
        assert_eq!(w.len(), 3);
    }

    #[test]
    fn p1_examples() {
        assert_eq!(count_p1_words(2, 1, 3, None).unwrap(), int(6));
        assert_eq!(count_p1_words(2, 1, 3, Some(1)).unwrap(), int(1));
        assert_eq!(count_p1_words(2, 0, 2, None).unwrap(), int(2));
        assert!(count_p1_words(2, 0, 2, Some(1)).is_err());
        assert!(count_p1_words(2, 1, 3, Some(4)).is_err());
        assert!(count_p1_words(2, 1, 18, None).is_err());
    }

    #[test]
    fn p2_examples() {
        assert_eq!(count_p2_words(2, 0, 3, None).unwrap(), int(3));
        assert_eq!(count_p2_words(3, 1, 3, Some(2)).unwrap(), int(6));
        assert_eq!(count_p2_words(1, 1, 4, None).unwrap(), int(8));
    }

    #[test]
    fn subsequence_reading_differs() {
        // a=2, n=4, k=2: blockwise 6, subsequence reading 3
        assert_eq!(count_p1_words(2, 1, 4, Some(2)).unwrap(), int(6));
        assert_eq!(
            count_p1_words_with(2, 1, 4, Some(2), Reading::Subsequence).unwrap(),
            int(3)
        );
    }

    #[test]
    fn norise_examples_and_recurrence() {
        assert_eq!(count_norise_words(4, 0).unwrap(), int(1));
        assert_eq!(count_norise_words(2, 2).unwrap(), int(3));
        assert_eq!(count_norise_words(3, 2).unwrap(), int(6));
        for a in 1..=4u32 {
            for len in 0..=8usize {
                let d = count_norise_words(a, len).unwrap();
                assert_eq!(d, binomial((len + a as usize - 1) as u64, a as i64 - 1));
                let rec: ExactInt = (0..=len).map(|i| count_norise_words(a, i).unwrap()).sum();
                assert_eq!(count_norise_words(a + 1, len).unwrap(), rec);
            }
        }
    }

    #[test]
    fn p3_examples() {
        assert_eq!(count_p3_words(2, 1).unwrap(), int(2));
        assert_eq!(count_p3_words(3, 2).unwrap(), int(4));
        for n in 1..=6 {
            assert_eq!(count_p3_words(n, n).unwrap(), int(1));
        }
    }

    #[test]
    fn p4_examples() {
        assert_eq!(count_p4_words(2, 1).unwrap(), int(3));
        assert_eq!(count_p4_words(2, 2).unwrap(), int(1));
        assert_eq!(count_p4_words(3, 2).unwrap(), int(6));
        assert_eq!(p4_word_length(2), 3);
        // the length n + k - 1 = 2 admits no word for n = 2, k = 1
        assert_eq!(count_p4_words_at_length(2, 1).unwrap(), int(0));
        let t = tally_p4_words(4).unwrap();
        for k in 1..=4 {
            assert_eq!(t[k - 1], count_p4_words(4, k).unwrap());
        }
    }

    #[test]
    fn marker_examples() {
        assert_eq!(count_marker_words(&FamilySpec::Central, 3, 2).unwrap(), int(4));
        assert_eq!(count_marker_words(&FamilySpec::Row { a: 2 }, 3, 1).unwrap(), int(1));
        for spec in [FamilySpec::Row { a: 2 }, FamilySpec::Diagonal { a: 3 }, FamilySpec::Central] {
            for n in 1..=5 {
                assert_eq!(count_marker_words(&spec, n, n).unwrap(), int(1));
            }
        }
        assert!(matches!(
            count_marker_words(&FamilySpec::CentralAdjacent, 3, 2),
            Err(Error::MarkerNotApplicable(_))
        ));
        assert!(matches!(
            count_marker_words(&FamilySpec::Custom { values: vec![int(1)] }, 1, 1),
            Err(Error::NoWordModel(_))
        ));
    }

    #[test]
    fn dyck_basics() {
        // Catalan numbers
        let catalan = [1, 1, 2, 5, 14, 42, 132];
        for (s, &c) in catalan.iter().enumerate() {
            assert_eq!(dyck_paths(s).unwrap().len(), c);
        }
        use DyckStep::*;
        assert!(DyckPath::new(vec![Down, Up]).is_err());
        assert!(DyckPath::new(vec![Up, Up, Down]).is_err());
        let p = DyckPath::new(vec![Up, Down, Up, Up, Down, Down]).unwrap();
        assert_eq!(p.peaks(), 2);
        assert_eq!(p.components().len(), 2);
        assert_eq!(p.semilength(), 3);
    }

    #[test]
    fn two_peak_examples() {
        assert_eq!(count_two_peak_dyck(1).unwrap(), int(0));
        assert_eq!(count_two_peak_dyck(2).unwrap(), int(1));
        assert_eq!(count_two_peak_dyck(3).unwrap(), int(3));
        assert_eq!(count_two_peak_dyck(4).unwrap(), int(6));
        for s in 2..=9 {
            assert_eq!(count_two_peak_dyck(s).unwrap(), binomial(s as u64, 2));
        }
    }

    #[test]
    fn concat_examples() {
        assert_eq!(count_concat_two_peak(1, 1).unwrap(), int(1));
        assert_eq!(count_concat_two_peak(3, 2).unwrap(), int(6));
        assert_eq!(count_concat_two_peak(2, 1).unwrap(), int(3));
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(count_diag_lattice_paths(1, 1).unwrap(), int(1));
        assert_eq!(count_diag_lattice_paths(3, 2).unwrap(), int(4));
        assert_eq!(count_diag_lattice_paths(3, 1).unwrap(), int(6));
        // the endpoint (n+k-2, n+k-2) = (3,3) would give 16 for n=3, k=2
        assert_eq!(count_diag_lattice_paths_to(3, 1), int(16));
    }

    #[test]
    fn lattice_listing_agrees_with_dp() {
        for n in 1..=5 {
            for k in 1..=n {
                let paths = diag_lattice_paths(n, k).unwrap();
                let side = (n - 1) as i64;
                for p in &paths {
                    assert_eq!(p.end(), (side, side));
                    assert_eq!(p.diag_steps(), k - 1);
                    assert!(p.diags_on_main_diagonal());
                }
                let distinct: HashSet<_> = paths.iter().collect();
                assert_eq!(distinct.len(), paths.len());
                assert_eq!(int(paths.len() as i64), count_diag_lattice_paths(n, k).unwrap());
            }
        }
    }

    #[test]
    fn repeated_calls_agree() {
        assert_eq!(count_p3_words(5, 2).unwrap(), count_p3_words(5, 2).unwrap());
        assert_eq!(
            count_p1_words(3, 2, 7, None).unwrap(),
            count_p1_words(3, 2, 7, None).unwrap()
        );
    }
}
