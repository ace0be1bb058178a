//! Registry of the polynomial and numeric identities the crate can verify,
//! plus the verification engine itself.
//!
//! Each identity is checked exactly: polynomial identities by computing the
//! difference of both sides as a [`DensePoly`], numeric ones as a
//! [`Rational`]. A [`VerificationReport`] collects the failing indices with
//! their exact differences; an empty failure list means every index passed.
//! Reports are deterministic — the elapsed field is excluded from equality.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::derivpolys::{
    alternating_from_derivative, alternating_pairs, convolution_pairs,
    derivative_identity_check_with, derivative_pairs, expand_p_in_q, expand_q_in_p, sin_half_pi,
};
use crate::error::{Error, Result};
use crate::eulerian::{
    alt_gamma_form, alt_stirling_form, chebyshev, chebyshev_recurrence_table, eulerian_a_table,
    eulerian_b_table, frobenius_a, frobenius_b, ChebKind,
};
use crate::exactmath::{binomial_row, rat_big, rat_int, DensePoly, Rational};
use crate::sequences::{bernoulli_numbers, euler_numbers, springer_numbers};

/// Whether an identity is indexed by n or by m in its usual statement.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IndexKind {
    N,
    M,
}

impl IndexKind {
    pub fn label(self) -> &'static str {
        match self {
            IndexKind::N => "n",
            IndexKind::M => "m",
        }
    }
}

/// Whether an identity's two sides are compared as whole polynomials or as
/// rational numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Comparison {
    Polynomial,
    Rational,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdentityKind {
    Eq01,
    Eq02,
    Eq03,
    Eq04,
    DerivProp,
    Thm28Even,
    Thm28Odd,
    CorEulerAlternating,
    CorEuler2Pow,
    CorSpringerBernoulli,
    CorEulerRecurrence,
    Pn1Hoffman,
    Qn1Hoffman,
    Convolution,
    Thm32,
    SignTwist,
    FrobeniusA,
    FrobeniusB,
    CorStirlingForm,
    CorGammaForm,
    ChebyshevDuality,
}

/// A named, rangeable identity check.
#[derive(Clone, Copy, Debug)]
pub struct IdentityDescriptor {
    pub kind: IdentityKind,
    pub name: &'static str,
    pub index_kind: IndexKind,
    /// Polynomial-level or rational-number comparison.
    pub comparison: Comparison,
    /// Structural lower bound on the index.
    pub min_index: u32,
    /// Inclusive range swept by default.
    pub default_range: (u32, u32),
    pub description: &'static str,
}

const REGISTRY: &[IdentityDescriptor] = &[
    IdentityDescriptor {
        kind: IdentityKind::Eq01,
        name: "eq01",
        index_kind: IndexKind::N,
        comparison: Comparison::Polynomial,
        min_index: 0,
        default_range: (0, 25),
        description: "Q_2n = (-1)^n + sum_k C(2n,2k+1)(-1)^k P_{2n-2k-1}",
    },
    IdentityDescriptor {
        kind: IdentityKind::Eq02,
        name: "eq02",
        index_kind: IndexKind::N,
        comparison: Comparison::Polynomial,
        min_index: 0,
        default_range: (0, 24),
        description: "Q_{2n+1} = sum_k C(2n+1,2k+1)(-1)^k P_{2n-2k}",
    },
    IdentityDescriptor {
        kind: IdentityKind::Eq03,
        name: "eq03",
        index_kind: IndexKind::M,
        comparison: Comparison::Polynomial,
        min_index: 0,
        default_range: (0, 50),
        description: "sum_k C(2m,2k)(-1)^k P_{2m-2k} - x sum_k C(2m,2k+1)(-1)^k P_{2m-2k-1} = (-1)^m x",
    },
    IdentityDescriptor {
        kind: IdentityKind::Eq04,
        name: "eq04",
        index_kind: IndexKind::M,
        comparison: Comparison::Polynomial,
        min_index: 0,
        default_range: (0, 50),
        description: "x sum_k C(2m+1,2k+1)(-1)^k P_{2m-2k} - sum_k C(2m+1,2k)(-1)^k P_{2m-2k+1} = (-1)^(m+1)",
    },
    IdentityDescriptor {
        kind: IdentityKind::DerivProp,
        name: "deriv_prop",
        index_kind: IndexKind::N,
        comparison: Comparison::Polynomial,
        min_index: 0,
        default_range: (0, 50),
        description: "P_n' = sum C(n,i) Q_i Q_{n-i} and (1+x^2) Q_n' = sum_{i>=1} C(n,i) P_i Q_{n-i}",
    },
    IdentityDescriptor {
        kind: IdentityKind::Thm28Even,
        name: "thm28_even",
        index_kind: IndexKind::N,
        comparison: Comparison::Polynomial,
        min_index: 0,
        default_range: (0, 15),
        description: "(2n+1) P_2n = Q_{2n+1} + Bernoulli-weighted sum of odd-index Q",
    },
    IdentityDescriptor {
        kind: IdentityKind::Thm28Odd,
        name: "thm28_odd",
        index_kind: IndexKind::N,
        comparison: Comparison::Polynomial,
        min_index: 0,
        default_range: (0, 14),
        description: "(2n+2) P_{2n+1} = Q_{2n+2} + Bernoulli-weighted sum of even-index Q - (-4)^(n+1) B_{2n+2}",
    },
    IdentityDescriptor {
        kind: IdentityKind::CorEulerAlternating,
        name: "cor_euler_alternating",
        index_kind: IndexKind::M,
        comparison: Comparison::Rational,
        min_index: 0,
        default_range: (0, 100),
        description: "sum_k C(2m+1,2k)(-1)^k E_{2m-2k+1} = (-1)^m",
    },
    IdentityDescriptor {
        kind: IdentityKind::CorEuler2Pow,
        name: "cor_euler_2pow",
        index_kind: IndexKind::M,
        comparison: Comparison::Rational,
        min_index: 0,
        default_range: (0, 60),
        description: "both alternating 2-power Euler-number sums equal (-1)^m resp. (-1)^(m+1)",
    },
    IdentityDescriptor {
        kind: IdentityKind::CorSpringerBernoulli,
        name: "cor_springer_bernoulli",
        index_kind: IndexKind::N,
        comparison: Comparison::Rational,
        min_index: 0,
        default_range: (0, 30),
        description: "(2n+1) 4^n E_2n and (2n+2) 2^(2n+1) E_{2n+1} against Springer/Bernoulli sums",
    },
    IdentityDescriptor {
        kind: IdentityKind::CorEulerRecurrence,
        name: "cor_euler_recurrence",
        index_kind: IndexKind::N,
        comparison: Comparison::Rational,
        min_index: 0,
        default_range: (0, 30),
        description: "E_{2n+2} = (2n+2) E_{2n+1} - Bernoulli-weighted sum + (-4)^(n+1) B_{2n+2}",
    },
    IdentityDescriptor {
        kind: IdentityKind::Pn1Hoffman,
        name: "pn1_hoffman",
        index_kind: IndexKind::N,
        comparison: Comparison::Rational,
        min_index: 0,
        default_range: (0, 60),
        description: "P_n(1) = 2^n (P_n(0) + Q_n(0))",
    },
    IdentityDescriptor {
        kind: IdentityKind::Qn1Hoffman,
        name: "qn1_hoffman",
        index_kind: IndexKind::N,
        comparison: Comparison::Rational,
        min_index: 0,
        default_range: (0, 60),
        description: "Q_n(1) = -sin(n pi/2) + sum_k C(n,2k)(-1)^k P_{n-2k}(1)",
    },
    IdentityDescriptor {
        kind: IdentityKind::Convolution,
        name: "convolution",
        index_kind: IndexKind::N,
        comparison: Comparison::Polynomial,
        min_index: 0,
        default_range: (0, 60),
        description: "recurrence and convolution constructions of (P_n, Q_n) agree",
    },
    IdentityDescriptor {
        kind: IdentityKind::Thm32,
        name: "thm32",
        index_kind: IndexKind::N,
        comparison: Comparison::Polynomial,
        min_index: 1,
        default_range: (1, 40),
        description: "p_n = (x+1)^(n+1) A_n((x-1)/(x+1)) and q_n = (x+1)^n B_n((x-1)/(x+1))",
    },
    IdentityDescriptor {
        kind: IdentityKind::SignTwist,
        name: "sign_twist",
        index_kind: IndexKind::N,
        comparison: Comparison::Polynomial,
        min_index: 0,
        default_range: (0, 40),
        description: "parity sign-twist of (P_n, Q_n) equals the alternating recurrence",
    },
    IdentityDescriptor {
        kind: IdentityKind::FrobeniusA,
        name: "frobenius_a",
        index_kind: IndexKind::N,
        comparison: Comparison::Polynomial,
        min_index: 1,
        default_range: (1, 40),
        description: "A_n = x sum_k k! S(n,k) (x-1)^(n-k)",
    },
    IdentityDescriptor {
        kind: IdentityKind::FrobeniusB,
        name: "frobenius_b",
        index_kind: IndexKind::N,
        comparison: Comparison::Polynomial,
        min_index: 0,
        default_range: (0, 40),
        description: "B_n = sum_k k! [sum_i C(n,i) 2^i S(i,k)] (x-1)^(n-k)",
    },
    IdentityDescriptor {
        kind: IdentityKind::CorStirlingForm,
        name: "cor_stirling_form",
        index_kind: IndexKind::N,
        comparison: Comparison::Polynomial,
        min_index: 1,
        default_range: (1, 40),
        description: "Stirling forms of p_n and q_n in powers of (x+1) match the recurrence",
    },
    IdentityDescriptor {
        kind: IdentityKind::CorGammaForm,
        name: "cor_gamma_form",
        index_kind: IndexKind::N,
        comparison: Comparison::Polynomial,
        min_index: 1,
        default_range: (1, 40),
        description: "gamma expansions of p_n and q_n in (x^2-1)^k (2x)^j match the recurrence",
    },
    IdentityDescriptor {
        kind: IdentityKind::ChebyshevDuality,
        name: "chebyshev_duality",
        index_kind: IndexKind::N,
        comparison: Comparison::Polynomial,
        min_index: 0,
        default_range: (0, 50),
        description: "binomial sums for T_n, U_n match the three-term recurrence; U_n - U_{n-2} = 2 T_n",
    },
];

/// All registered identities, in fixed registry order.
pub fn registry() -> &'static [IdentityDescriptor] {
    REGISTRY
}

/// Look up a descriptor by its registry name.
pub fn descriptor(name: &str) -> Option<&'static IdentityDescriptor> {
    REGISTRY.iter().find(|d| d.name == name)
}

/// The exact difference recorded for a failing index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Difference {
    Poly(DensePoly),
    Value(Rational),
    /// A construction step failed outright (e.g. a gamma entry came out
    /// negative), so no difference could be formed.
    Construction(String),
}

impl std::fmt::Display for Difference {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Difference::Poly(p) => write!(f, "{p}"),
            Difference::Value(v) => write!(f, "{v}"),
            Difference::Construction(msg) => write!(f, "{msg}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Failure {
    pub index: u32,
    pub difference: Difference,
}

/// Outcome of sweeping one identity over an index range.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub identity: String,
    pub checked_range: (u32, u32),
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn indices_checked(&self) -> u32 {
        self.checked_range.1 - self.checked_range.0 + 1
    }
}

/// Equality ignores the elapsed wall time.
impl PartialEq for VerificationReport {
    fn eq(&self, other: &Self) -> bool {
        self.identity == other.identity
            && self.checked_range == other.checked_range
            && self.failures == other.failures
    }
}

impl Eq for VerificationReport {}

/// Range presets for [`verify_all`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RangeScale {
    Small,
    Default,
    Large,
}

impl std::str::FromStr for RangeScale {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "small" => Ok(RangeScale::Small),
            "default" => Ok(RangeScale::Default),
            "large" => Ok(RangeScale::Large),
            other => Err(Error::Parse(format!("unknown scale `{other}`"))),
        }
    }
}

/// The descriptor's default range under a scale preset: small sweeps a
/// quarter of the default span, large doubles it.
pub fn scaled_range(desc: &IdentityDescriptor, scale: RangeScale) -> (u32, u32) {
    let (lo, hi) = desc.default_range;
    match scale {
        RangeScale::Default => (lo, hi),
        RangeScale::Small => (lo, lo + (hi - lo) / 4),
        RangeScale::Large => (lo, lo + (hi - lo) * 2),
    }
}

/// Verify one identity over a range (inclusive); `None` uses the default.
pub fn verify(name: &str, range: Option<(u32, u32)>) -> Result<VerificationReport> {
    let desc = descriptor(name).ok_or_else(|| Error::UnknownIdentity(name.to_string()))?;
    let (lo, hi) = range.unwrap_or(desc.default_range);
    if lo < desc.min_index || lo > hi {
        return Err(Error::InvalidRange {
            identity: name.to_string(),
            lo,
            hi,
            min: desc.min_index,
        });
    }
    let start = Instant::now();
    let failures = sweep(desc.kind, lo as usize, hi as usize);
    Ok(VerificationReport {
        identity: name.to_string(),
        checked_range: (lo, hi),
        failures,
        elapsed: start.elapsed(),
    })
}

/// Verify every registered identity over its scaled default range, in
/// registry order.
pub fn verify_all(scale: RangeScale) -> Vec<VerificationReport> {
    verify_all_capped(scale, None)
}

/// Like [`verify_all`], optionally clamping every upper bound to `max_n`.
pub fn verify_all_capped(scale: RangeScale, max_n: Option<u32>) -> Vec<VerificationReport> {
    REGISTRY
        .iter()
        .map(|desc| {
            let (lo, mut hi) = scaled_range(desc, scale);
            if let Some(cap) = max_n {
                hi = hi.min(cap).max(lo);
            }
            verify(desc.name, Some((lo, hi))).expect("registry ranges are valid")
        })
        .collect()
}

fn poly_failure(index: usize, diff: DensePoly) -> Option<Failure> {
    (!diff.is_zero()).then_some(Failure {
        index: index as u32,
        difference: Difference::Poly(diff),
    })
}

fn value_failure(index: usize, diff: Rational) -> Option<Failure> {
    (!diff.is_zero()).then_some(Failure {
        index: index as u32,
        difference: Difference::Value(diff),
    })
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn sweep(kind: IdentityKind, lo: usize, hi: usize) -> Vec<Failure> {
    match kind {
        IdentityKind::Eq01 => sweep_theorem22(lo, hi, false),
        IdentityKind::Eq02 => sweep_theorem22(lo, hi, true),
        IdentityKind::Eq03 => sweep_eq03(lo, hi),
        IdentityKind::Eq04 => sweep_eq04(lo, hi),
        IdentityKind::DerivProp => sweep_deriv_prop(lo, hi),
        IdentityKind::Thm28Even => sweep_theorem28(lo, hi, false),
        IdentityKind::Thm28Odd => sweep_theorem28(lo, hi, true),
        IdentityKind::CorEulerAlternating => sweep_cor_euler_alternating(lo, hi),
        IdentityKind::CorEuler2Pow => sweep_cor_euler_2pow(lo, hi),
        IdentityKind::CorSpringerBernoulli => sweep_cor_springer_bernoulli(lo, hi),
        IdentityKind::CorEulerRecurrence => sweep_cor_euler_recurrence(lo, hi),
        IdentityKind::Pn1Hoffman => sweep_pn1_hoffman(lo, hi),
        IdentityKind::Qn1Hoffman => sweep_qn1_hoffman(lo, hi),
        IdentityKind::Convolution => sweep_convolution(lo, hi),
        IdentityKind::Thm32 => sweep_thm32(lo, hi),
        IdentityKind::SignTwist => sweep_sign_twist(lo, hi),
        IdentityKind::FrobeniusA => sweep_frobenius_a(lo, hi),
        IdentityKind::FrobeniusB => sweep_frobenius_b(lo, hi),
        IdentityKind::CorStirlingForm => sweep_alt_route(lo, hi, AltRoute::Stirling),
        IdentityKind::CorGammaForm => sweep_alt_route(lo, hi, AltRoute::Gamma),
        IdentityKind::ChebyshevDuality => sweep_chebyshev(lo, hi),
    }
}

/// eq01 (odd = false) checks Q_{2n}; eq02 (odd = true) checks Q_{2n+1}.
fn sweep_theorem22(lo: usize, hi: usize, odd: bool) -> Vec<Failure> {
    let pairs = derivative_pairs(2 * hi + usize::from(odd));
    (lo..=hi)
        .filter_map(|n| {
            let m = 2 * n + usize::from(odd);
            let rhs = expand_q_in_p(m).reconstruct_with(&pairs);
            poly_failure(n, &pairs[m].q - &rhs)
        })
        .collect()
}

fn sweep_eq03(lo: usize, hi: usize) -> Vec<Failure> {
    let pairs = derivative_pairs(2 * hi);
    let x = DensePoly::x();
    (lo..=hi)
        .filter_map(|m| {
            let row = binomial_row(2 * m);
            let mut even_sum = DensePoly::zero();
            for k in 0..=m {
                let w = rat_big(&row[2 * k] * BigInt::from(sign(k)));
                even_sum = &even_sum + &pairs[2 * m - 2 * k].p.scaled(&w);
            }
            let mut odd_sum = DensePoly::zero();
            for k in 0..m {
                let w = rat_big(&row[2 * k + 1] * BigInt::from(sign(k)));
                odd_sum = &odd_sum + &pairs[2 * m - 2 * k - 1].p.scaled(&w);
            }
            let rhs = x.scaled(&rat_int(sign(m)));
            let diff = &(&even_sum - &(&x * &odd_sum)) - &rhs;
            poly_failure(m, diff)
        })
        .collect()
}

fn sweep_eq04(lo: usize, hi: usize) -> Vec<Failure> {
    let pairs = derivative_pairs(2 * hi + 1);
    let x = DensePoly::x();
    (lo..=hi)
        .filter_map(|m| {
            let row = binomial_row(2 * m + 1);
            let mut odd_weighted = DensePoly::zero();
            let mut even_weighted = DensePoly::zero();
            for k in 0..=m {
                let w_odd = rat_big(&row[2 * k + 1] * BigInt::from(sign(k)));
                odd_weighted = &odd_weighted + &pairs[2 * m - 2 * k].p.scaled(&w_odd);
                let w_even = rat_big(&row[2 * k] * BigInt::from(sign(k)));
                even_weighted = &even_weighted + &pairs[2 * m - 2 * k + 1].p.scaled(&w_even);
            }
            let rhs = DensePoly::constant(rat_int(-sign(m)));
            let diff = &(&(&x * &odd_weighted) - &even_weighted) - &rhs;
            poly_failure(m, diff)
        })
        .collect()
}

fn sweep_deriv_prop(lo: usize, hi: usize) -> Vec<Failure> {
    let pairs = derivative_pairs(hi);
    (lo..=hi)
        .filter_map(|n| {
            let check = derivative_identity_check_with(&pairs, n);
            poly_failure(n, check.tangent_diff).or_else(|| poly_failure(n, check.secant_diff))
        })
        .collect()
}

/// Theorem-2.8 sweep; the index n addresses P-index m = 2n (+1 when odd).
fn sweep_theorem28(lo: usize, hi: usize, odd: bool) -> Vec<Failure> {
    let pairs = derivative_pairs(2 * hi + 1 + usize::from(odd));
    (lo..=hi)
        .filter_map(|n| {
            let m = 2 * n + usize::from(odd);
            let rhs = expand_p_in_q(m).reconstruct_with(&pairs);
            let diff = (&pairs[m].p - &rhs).scaled(&rat_int((m + 1) as i64));
            poly_failure(n, diff)
        })
        .collect()
}

fn sweep_cor_euler_alternating(lo: usize, hi: usize) -> Vec<Failure> {
    let euler = euler_numbers(2 * hi + 2);
    (lo..=hi)
        .filter_map(|m| {
            let row = binomial_row(2 * m + 1);
            let mut acc = BigInt::zero();
            for k in 0..=m {
                acc += &row[2 * k] * &euler[2 * m - 2 * k + 1] * BigInt::from(sign(k));
            }
            acc -= BigInt::from(sign(m));
            value_failure(m, rat_big(acc))
        })
        .collect()
}

fn sweep_cor_euler_2pow(lo: usize, hi: usize) -> Vec<Failure> {
    let euler = euler_numbers(2 * hi + 2);
    let pow2 = |e: usize| BigInt::one() << e;
    (lo..=hi)
        .filter_map(|m| {
            let row_even = binomial_row(2 * m);
            let mut acc = BigInt::zero();
            for k in 0..=m {
                acc += &row_even[2 * k]
                    * &euler[2 * m - 2 * k]
                    * pow2(2 * m - 2 * k)
                    * BigInt::from(sign(k));
            }
            for k in 0..m {
                acc -= &row_even[2 * k + 1]
                    * &euler[2 * m - 2 * k - 1]
                    * pow2(2 * m - 2 * k - 1)
                    * BigInt::from(sign(k));
            }
            acc -= BigInt::from(sign(m));
            if let Some(f) = value_failure(m, rat_big(acc)) {
                return Some(f);
            }

            let row_odd = binomial_row(2 * m + 1);
            let mut acc = BigInt::zero();
            for k in 0..=m {
                acc += &row_odd[2 * k + 1]
                    * &euler[2 * m - 2 * k]
                    * pow2(2 * m - 2 * k)
                    * BigInt::from(sign(k));
                acc -= &row_odd[2 * k]
                    * &euler[2 * m - 2 * k + 1]
                    * pow2(2 * m - 2 * k + 1)
                    * BigInt::from(sign(k));
            }
            acc += BigInt::from(sign(m));
            value_failure(m, rat_big(acc))
        })
        .collect()
}

/// Bernoulli weight C(top, 2i+2)·(−1)^i·(4^(i+1)−2)·B_{2i+2}.
fn bernoulli_weight(row: &[BigInt], bern: &[Rational], i: usize) -> Rational {
    let four_pow = BigInt::from(4).pow((i + 1) as u32);
    let mut w = rat_big(&row[2 * i + 2] * (four_pow - BigInt::from(2))) * &bern[2 * i + 2];
    if i % 2 == 1 {
        w = -w;
    }
    w
}

/// (−4)^(n+1)·B_{2n+2}.
fn minus_four_pow_bernoulli(bern: &[Rational], n: usize) -> Rational {
    let mut c = rat_big(BigInt::from(4).pow((n + 1) as u32)) * &bern[2 * n + 2];
    if n % 2 == 0 {
        c = -c;
    }
    c
}

fn sweep_cor_springer_bernoulli(lo: usize, hi: usize) -> Vec<Failure> {
    let springer = springer_numbers(2 * hi + 3);
    let euler = euler_numbers(2 * hi + 2);
    let bern = bernoulli_numbers(2 * hi + 3);
    (lo..=hi)
        .filter_map(|n| {
            let row_odd = binomial_row(2 * n + 1);
            let mut rhs = rat_big(springer[2 * n + 1].clone());
            for i in 0..n {
                rhs += bernoulli_weight(&row_odd, &bern, i)
                    * rat_big(springer[2 * n - 2 * i - 1].clone());
            }
            let lhs = rat_big(
                BigInt::from(2 * n as i64 + 1) * (BigInt::one() << (2 * n)) * &euler[2 * n],
            );
            if let Some(f) = value_failure(n, lhs - rhs) {
                return Some(f);
            }

            let row_even = binomial_row(2 * n + 2);
            let mut rhs = rat_big(springer[2 * n + 2].clone());
            for i in 0..=n {
                rhs += bernoulli_weight(&row_even, &bern, i)
                    * rat_big(springer[2 * n - 2 * i].clone());
            }
            rhs -= minus_four_pow_bernoulli(&bern, n);
            let lhs = rat_big(
                BigInt::from(2 * n as i64 + 2) * (BigInt::one() << (2 * n + 1)) * &euler[2 * n + 1],
            );
            value_failure(n, lhs - rhs)
        })
        .collect()
}

fn sweep_cor_euler_recurrence(lo: usize, hi: usize) -> Vec<Failure> {
    let euler = euler_numbers(2 * hi + 3);
    let bern = bernoulli_numbers(2 * hi + 3);
    (lo..=hi)
        .filter_map(|n| {
            let row = binomial_row(2 * n + 2);
            let mut rhs = rat_big(BigInt::from(2 * n as i64 + 2) * &euler[2 * n + 1]);
            for i in 0..=n {
                rhs -= bernoulli_weight(&row, &bern, i) * rat_big(euler[2 * n - 2 * i].clone());
            }
            rhs += minus_four_pow_bernoulli(&bern, n);
            value_failure(n, rat_big(euler[2 * n + 2].clone()) - rhs)
        })
        .collect()
}

fn sweep_pn1_hoffman(lo: usize, hi: usize) -> Vec<Failure> {
    let pairs = derivative_pairs(hi);
    let one = rat_int(1);
    let zero = rat_int(0);
    (lo..=hi)
        .filter_map(|n| {
            let lhs = pairs[n].p.eval(&one);
            let rhs =
                (pairs[n].p.eval(&zero) + pairs[n].q.eval(&zero)) * rat_big(BigInt::one() << n);
            value_failure(n, lhs - rhs)
        })
        .collect()
}

fn sweep_qn1_hoffman(lo: usize, hi: usize) -> Vec<Failure> {
    let pairs = derivative_pairs(hi);
    let one = rat_int(1);
    let p_at_one: Vec<Rational> = pairs.iter().map(|pair| pair.p.eval(&one)).collect();
    (lo..=hi)
        .filter_map(|n| {
            let row = binomial_row(n);
            let mut rhs = rat_int(-sin_half_pi(n));
            for k in 0..=n / 2 {
                rhs += rat_big(&row[2 * k] * BigInt::from(sign(k))) * &p_at_one[n - 2 * k];
            }
            value_failure(n, pairs[n].q.eval(&one) - rhs)
        })
        .collect()
}

fn sweep_convolution(lo: usize, hi: usize) -> Vec<Failure> {
    let rec = derivative_pairs(hi);
    let conv = convolution_pairs(hi);
    (lo..=hi)
        .filter_map(|n| {
            poly_failure(n, &rec[n].p - &conv[n].p)
                .or_else(|| poly_failure(n, &rec[n].q - &conv[n].q))
        })
        .collect()
}

fn sweep_thm32(lo: usize, hi: usize) -> Vec<Failure> {
    let alts = alternating_pairs(hi);
    let a_table = eulerian_a_table(hi);
    let b_table = eulerian_b_table(hi);
    let u = DensePoly::from_ints(&[-1, 1]);
    let v = DensePoly::from_ints(&[1, 1]);
    (lo..=hi)
        .filter_map(|n| {
            let p = a_table[n]
                .homogenized_eval(&u, &v, n + 1)
                .expect("deg A_n = n <= n+1");
            let q = b_table[n].homogenized_eval(&u, &v, n).expect("deg B_n = n");
            poly_failure(n, &alts[n].p - &p).or_else(|| poly_failure(n, &alts[n].q - &q))
        })
        .collect()
}

fn sweep_sign_twist(lo: usize, hi: usize) -> Vec<Failure> {
    let pairs = derivative_pairs(hi);
    let alts = alternating_pairs(hi);
    (lo..=hi)
        .filter_map(|n| {
            let twisted = alternating_from_derivative(&pairs[n]);
            poly_failure(n, &alts[n].p - &twisted.p)
                .or_else(|| poly_failure(n, &alts[n].q - &twisted.q))
        })
        .collect()
}

fn sweep_frobenius_a(lo: usize, hi: usize) -> Vec<Failure> {
    let a_table = eulerian_a_table(hi);
    (lo..=hi)
        .filter_map(|n| {
            let frob = frobenius_a(n).expect("sweep starts at n >= 1");
            poly_failure(n, &a_table[n] - &frob)
        })
        .collect()
}

fn sweep_frobenius_b(lo: usize, hi: usize) -> Vec<Failure> {
    let b_table = eulerian_b_table(hi);
    (lo..=hi)
        .filter_map(|n| poly_failure(n, &b_table[n] - &frobenius_b(n)))
        .collect()
}

enum AltRoute {
    Stirling,
    Gamma,
}

fn sweep_alt_route(lo: usize, hi: usize, route: AltRoute) -> Vec<Failure> {
    let alts = alternating_pairs(hi);
    (lo..=hi)
        .filter_map(|n| {
            let built = match route {
                AltRoute::Stirling => alt_stirling_form(n),
                AltRoute::Gamma => alt_gamma_form(n),
            };
            match built {
                Ok(pair) => poly_failure(n, &alts[n].p - &pair.p)
                    .or_else(|| poly_failure(n, &alts[n].q - &pair.q)),
                Err(err) => Some(Failure {
                    index: n as u32,
                    difference: Difference::Construction(err.to_string()),
                }),
            }
        })
        .collect()
}

fn sweep_chebyshev(lo: usize, hi: usize) -> Vec<Failure> {
    let t = chebyshev_recurrence_table(ChebKind::T, hi);
    let u = chebyshev_recurrence_table(ChebKind::U, hi);
    let two = rat_int(2);
    (lo..=hi)
        .filter_map(|n| {
            let sum_t = chebyshev(ChebKind::T, n);
            let sum_u = chebyshev(ChebKind::U, n);
            poly_failure(n, &t[n] - &sum_t)
                .or_else(|| poly_failure(n, &u[n] - &sum_u))
                .or_else(|| {
                    if n >= 2 {
                        poly_failure(n, &(&u[n] - &u[n - 2]) - &t[n].scaled(&two))
                    } else {
                        None
                    }
                })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivpolys::derivative_pair;

    #[test]
    fn registry_names_are_unique() {
        let mut names: Vec<_> = REGISTRY.iter().map(|d| d.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), REGISTRY.len());
        assert_eq!(REGISTRY.len(), 21);
        // the numeric corollaries and special-value identities compare
        // rationals, everything else whole polynomials
        let rational: Vec<_> = REGISTRY
            .iter()
            .filter(|d| d.comparison == Comparison::Rational)
            .map(|d| d.name)
            .collect();
        assert_eq!(
            rational,
            [
                "cor_euler_alternating",
                "cor_euler_2pow",
                "cor_springer_bernoulli",
                "cor_euler_recurrence",
                "pn1_hoffman",
                "qn1_hoffman"
            ]
        );
    }

    #[test]
    fn worked_example_eq03_at_m1() {
        // P_2 − P_0 − 2x·P_1 = −x
        let report = verify("eq03", Some((1, 1))).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        let pairs = derivative_pairs(2);
        let x = DensePoly::x();
        let lhs = &(&pairs[2].p - &pairs[0].p) - &(&x * &pairs[1].p).scaled(&rat_int(2));
        assert_eq!(lhs, x.scaled(&rat_int(-1)));
    }

    #[test]
    fn worked_example_qn1_at_3() {
        // Q_3(1) = 1 + P_3(1) − 3·P_1(1) = 1 + 16 − 6 = 11
        let report = verify("qn1_hoffman", Some((3, 3))).unwrap();
        assert!(report.passed());
        assert_eq!(derivative_pair(3).q.eval(&rat_int(1)), rat_int(11));
    }

    #[test]
    fn worked_example_eq01_at_0() {
        let report = verify("eq01", Some((0, 0))).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn every_identity_passes_a_short_sweep() {
        for desc in registry() {
            let lo = desc.min_index;
            let hi = lo + 6;
            let report = verify(desc.name, Some((lo, hi))).unwrap();
            assert!(
                report.passed(),
                "{} failed: {:?}",
                desc.name,
                report.failures
            );
            assert_eq!(report.indices_checked(), 7);
        }
    }

    #[test]
    fn unknown_identity_and_invalid_range() {
        assert!(matches!(
            verify("eq99", None),
            Err(Error::UnknownIdentity(_))
        ));
        assert!(matches!(
            verify("thm32", Some((0, 5))),
            Err(Error::InvalidRange { .. })
        ));
        assert!(matches!(
            verify("eq01", Some((4, 2))),
            Err(Error::InvalidRange { .. })
        ));
    }

    #[test]
    fn reports_are_deterministic() {
        let a = verify("eq01", Some((0, 8))).unwrap();
        let b = verify("eq01", Some((0, 8))).unwrap();
        assert_eq!(a, b); // elapsed differs, equality ignores it
    }

    #[test]
    fn verify_all_small_covers_at_least_100_indices() {
        let reports = verify_all(RangeScale::Small);
        assert_eq!(reports.len(), REGISTRY.len());
        let total: u32 = reports.iter().map(|r| r.indices_checked()).sum();
        assert!(total >= 100, "only {total} indices");
        assert!(reports.iter().all(VerificationReport::passed));
        // ordering matches the registry
        for (r, d) in reports.iter().zip(REGISTRY) {
            assert_eq!(r.identity, d.name);
        }
    }

    #[test]
    fn capped_sweep_clamps_upper_bounds() {
        let reports = verify_all_capped(RangeScale::Default, Some(3));
        for r in &reports {
            assert!(r.checked_range.1 <= 3.max(r.checked_range.0));
            assert!(r.passed());
        }
    }
}
