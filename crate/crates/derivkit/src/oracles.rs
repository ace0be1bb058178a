//! Brute-force permutation enumeration, used as independent ground truth
//! for the polynomial and sequence constructions at small n.
//!
//! Permutations are generated iteratively (lexicographic successor); signed
//! permutations as (permutation, sign mask) pairs. Every oracle has an
//! enumeration cap; exceeding it is an explicit error, never a silent
//! truncation. The `DERIVKIT_ORACLE_CAP` environment variable, when set to
//! an unsigned integer, overrides all default caps.

use std::collections::BTreeMap;
use std::env;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactmath::{rat_big, DensePoly, Rational};
use num_bigint::BigInt;
use num_traits::Zero;

/// Default cap for alternating-permutation counting (10! ≈ 3.6M window scans).
pub const ALTERNATING_CAP: usize = 10;
/// Default cap for descent histograms over the symmetric group.
pub const DESCENT_CAP: usize = 8;
/// Default cap for signed-permutation statistics (2^7·7! = 645,120 scans).
pub const TYPE_B_CAP: usize = 7;
/// Default cap for snake counting.
pub const SNAKE_CAP: usize = 7;
/// Default cap for peak and left-peak histograms.
pub const PEAK_CAP: usize = 8;

/// Environment variable overriding every default cap.
pub const CAP_ENV_VAR: &str = "DERIVKIT_ORACLE_CAP";

fn parse_cap(raw: &str) -> Option<usize> {
    raw.trim().parse().ok()
}

fn effective_cap(default_cap: usize) -> usize {
    env::var(CAP_ENV_VAR)
        .ok()
        .as_deref()
        .and_then(parse_cap)
        .unwrap_or(default_cap)
}

fn check_cap(n: usize, default_cap: usize) -> Result<()> {
    let cap = effective_cap(default_cap);
    if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

/// The permutation statistics the oracles can tabulate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StatKind {
    /// des(π) over S_n.
    Descents,
    /// des_B(σ) over signed permutations, with σ(0) = 0.
    TypeBDescents,
    /// Peak count over the subset of S_n with no double descents,
    /// boundary π(0) = π(n+1) = 0.
    PeaksNoDoubleDescents,
    /// Left peaks: i ∈ [n−1] with π(i−1) < π(i) > π(i+1), π(0) = 0.
    LeftPeaks,
    /// Indicator of the alternating shape π(1) > π(2) < π(3) > ….
    Alternating,
    /// Indicator of the snake shape 0 < π(1) > π(2) < … over signed
    /// permutations.
    Snake,
}

impl StatKind {
    pub fn name(self) -> &'static str {
        match self {
            StatKind::Descents => "descents",
            StatKind::TypeBDescents => "typeB",
            StatKind::PeaksNoDoubleDescents => "peaks",
            StatKind::LeftPeaks => "leftpeaks",
            StatKind::Alternating => "alternating",
            StatKind::Snake => "snakes",
        }
    }

    fn default_cap(self) -> usize {
        match self {
            StatKind::Descents => DESCENT_CAP,
            StatKind::TypeBDescents => TYPE_B_CAP,
            StatKind::PeaksNoDoubleDescents | StatKind::LeftPeaks => PEAK_CAP,
            StatKind::Alternating => ALTERNATING_CAP,
            StatKind::Snake => SNAKE_CAP,
        }
    }

    /// Signed statistics enumerate 2^n·n! objects instead of n!.
    pub fn is_signed(self) -> bool {
        matches!(self, StatKind::TypeBDescents | StatKind::Snake)
    }
}

impl fmt::Display for StatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "descents" => Ok(StatKind::Descents),
            "typeB" => Ok(StatKind::TypeBDescents),
            "peaks" => Ok(StatKind::PeaksNoDoubleDescents),
            "leftpeaks" => Ok(StatKind::LeftPeaks),
            "alternating" => Ok(StatKind::Alternating),
            "snakes" => Ok(StatKind::Snake),
            other => Err(Error::Parse(format!("unknown oracle statistic `{other}`"))),
        }
    }
}

/// Histogram of a permutation statistic over its full ground set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermStatistic {
    pub n: usize,
    pub statistic: StatKind,
    pub histogram: BTreeMap<usize, u64>,
}

impl PermStatistic {
    pub fn total(&self) -> u64 {
        self.histogram.values().sum()
    }

    /// Count at a statistic value (zero when absent).
    pub fn count(&self, value: usize) -> u64 {
        self.histogram.get(&value).copied().unwrap_or(0)
    }
}

/// Iterative lexicographic successor; returns false once the permutation
/// is the last one.
fn next_permutation(perm: &mut [u8]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

fn for_each_permutation(n: usize, mut visit: impl FnMut(&[u8])) {
    let mut perm: Vec<u8> = (1..=n as u8).collect();
    loop {
        visit(&perm);
        if !next_permutation(&mut perm) {
            break;
        }
    }
}

/// Visit every signed permutation as value vector v[i] = ±π(i+1).
fn for_each_signed_permutation(n: usize, mut visit: impl FnMut(&[i8])) {
    let mut values = vec![0i8; n];
    for_each_permutation(n, |perm| {
        for mask in 0u32..(1 << n) {
            for (i, &p) in perm.iter().enumerate() {
                values[i] = if mask & (1 << i) != 0 {
                    -(p as i8)
                } else {
                    p as i8
                };
            }
            visit(&values);
        }
    });
}

fn descents(perm: &[u8]) -> usize {
    perm.windows(2).filter(|w| w[0] > w[1]).count()
}

fn type_b_descents(values: &[i8]) -> usize {
    let mut des = usize::from(values.first().is_some_and(|&v| v < 0));
    des += values.windows(2).filter(|w| w[0] > w[1]).count();
    des
}

fn is_alternating(perm: &[u8]) -> bool {
    // π(1) > π(2) < π(3) > …, vacuously true for n ≤ 1
    perm.windows(2)
        .enumerate()
        .all(|(j, w)| if j % 2 == 0 { w[0] > w[1] } else { w[0] < w[1] })
}

fn is_snake(values: &[i8]) -> bool {
    // 0 < π(1) > π(2) < π(3) > …
    if let Some(&first) = values.first() {
        if first < 0 {
            return false;
        }
    }
    values
        .windows(2)
        .enumerate()
        .all(|(j, w)| if j % 2 == 0 { w[0] > w[1] } else { w[0] < w[1] })
}

/// Peak and double-descent counts with boundary π(0) = π(n+1) = 0.
fn peaks_and_double_descents(perm: &[u8]) -> (usize, usize) {
    let n = perm.len();
    let at = |i: usize| -> i16 {
        if i == 0 || i == n + 1 {
            0
        } else {
            perm[i - 1] as i16
        }
    };
    let mut peaks = 0;
    let mut double_descents = 0;
    for i in 1..=n {
        let (l, c, r) = (at(i - 1), at(i), at(i + 1));
        if l < c && c > r {
            peaks += 1;
        }
        if l > c && c > r {
            double_descents += 1;
        }
    }
    (peaks, double_descents)
}

/// Left peaks: i ∈ [n−1] with π(i−1) < π(i) > π(i+1), π(0) = 0.
fn left_peaks(perm: &[u8]) -> usize {
    let n = perm.len();
    let mut count = 0;
    for i in 1..n {
        let l = if i == 1 { 0 } else { perm[i - 2] as i16 };
        if l < perm[i - 1] as i16 && perm[i - 1] > perm[i] {
            count += 1;
        }
    }
    count
}

/// Full histogram of a statistic over S_n (or the signed permutations).
/// The peak statistic only tallies permutations without double descents.
pub fn statistic_histogram(kind: StatKind, n: usize) -> Result<PermStatistic> {
    if matches!(kind, StatKind::PeaksNoDoubleDescents | StatKind::LeftPeaks) && n == 0 {
        return Err(Error::Domain(format!("{kind}: n must be >= 1")));
    }
    check_cap(n, kind.default_cap())?;
    let mut histogram: BTreeMap<usize, u64> = BTreeMap::new();
    let mut bump = |value: usize| *histogram.entry(value).or_insert(0) += 1;
    match kind {
        StatKind::Descents => for_each_permutation(n, |p| bump(descents(p))),
        StatKind::Alternating => for_each_permutation(n, |p| bump(usize::from(is_alternating(p)))),
        StatKind::LeftPeaks => for_each_permutation(n, |p| bump(left_peaks(p))),
        StatKind::PeaksNoDoubleDescents => for_each_permutation(n, |p| {
            let (peaks, dd) = peaks_and_double_descents(p);
            if dd == 0 {
                bump(peaks);
            }
        }),
        StatKind::TypeBDescents => for_each_signed_permutation(n, |v| bump(type_b_descents(v))),
        StatKind::Snake => for_each_signed_permutation(n, |v| bump(usize::from(is_snake(v)))),
    }
    Ok(PermStatistic {
        n,
        statistic: kind,
        histogram,
    })
}

/// Number of alternating permutations of 1..n; the empty and singleton
/// permutations both count once, matching E_0 = E_1 = 1.
pub fn count_alternating(n: usize) -> Result<u64> {
    Ok(statistic_histogram(StatKind::Alternating, n)?.count(1))
}

/// Σ_π x^(des(π)+1) over S_n for n ≥ 1, and 1 for n = 0.
pub fn descent_polynomial(n: usize) -> Result<DensePoly> {
    let stat = statistic_histogram(StatKind::Descents, n)?;
    if n == 0 {
        return Ok(DensePoly::one());
    }
    Ok(histogram_poly(&stat.histogram, 1))
}

/// Σ_σ x^(des_B(σ)) over all 2^n·n! signed permutations.
pub fn type_b_descent_polynomial(n: usize) -> Result<DensePoly> {
    let stat = statistic_histogram(StatKind::TypeBDescents, n)?;
    Ok(histogram_poly(&stat.histogram, 0))
}

/// Number of type-B snakes; the empty snake counts once, matching s_0 = 1.
pub fn count_snakes(n: usize) -> Result<u64> {
    Ok(statistic_histogram(StatKind::Snake, n)?.count(1))
}

/// Histogram over k of permutations with k peaks and no double descents.
pub fn peak_no_dd_histogram(n: usize) -> Result<PermStatistic> {
    statistic_histogram(StatKind::PeaksNoDoubleDescents, n)
}

/// Histogram over k of permutations with exactly k left peaks.
pub fn left_peak_histogram(n: usize) -> Result<PermStatistic> {
    statistic_histogram(StatKind::LeftPeaks, n)
}

fn histogram_poly(histogram: &BTreeMap<usize, u64>, shift: usize) -> DensePoly {
    let top = histogram.keys().next_back().copied().unwrap_or(0);
    let mut coeffs = vec![Rational::zero(); top + shift + 1];
    for (&value, &count) in histogram {
        coeffs[value + shift] = rat_big(BigInt::from(count));
    }
    DensePoly::from_coeffs(coeffs)
}
