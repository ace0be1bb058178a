//! Derivative polynomials for tangent and secant, their hyperbolic and
//! alternating variants, and expansions of each family in the basis formed
//! by the other.
//!
//! The trigonometric pair is defined by
//!
//! ```text
//! P_{n+1} = (1+x²)·P_n′          P_0 = x
//! Q_{n+1} = (1+x²)·Q_n′ + x·Q_n  Q_0 = 1
//! ```
//!
//! so that d^n/dθ^n tan θ = P_n(tan θ) and d^n/dθ^n sec θ = sec θ·Q_n(tan θ).
//! The hyperbolic variants satisfy the same recurrences with 1+x² replaced
//! by 1−x² (and the sign of the x·Q term flipped); the alternating variants
//! use x²−1 and an extra factor 2 in the secant-side recurrence.
//!
//! Putting P_{−1} ≡ 1, the polynomials P_{−1}, P_0, …, P_n form a basis of
//! the space of polynomials of degree ≤ n+1, and Q_0, …, Q_n likewise for
//! degree ≤ n; [`BasisExpansion`] holds coordinates in either basis.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactmath::{binomial_row, factorial, rat_big, rat_int, DensePoly, Rational};
use crate::sequences;

/// One index of a derivative-polynomial family: the tangent-side polynomial
/// `p` (degree n+1) and the secant-side polynomial `q` (degree n).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DerivPair {
    pub n: usize,
    pub p: DensePoly,
    pub q: DensePoly,
}

/// All pairs (P_k, Q_k) for k = 0..=max_n, built by the chain-rule recurrence.
pub fn derivative_pairs(max_n: usize) -> Vec<DerivPair> {
    let one_plus_x2 = DensePoly::from_ints(&[1, 0, 1]);
    let x = DensePoly::x();
    let mut out = Vec::with_capacity(max_n + 1);
    out.push(DerivPair {
        n: 0,
        p: DensePoly::x(),
        q: DensePoly::one(),
    });
    for n in 0..max_n {
        let prev = &out[n];
        let p = &one_plus_x2 * &prev.p.derivative();
        let q = &(&one_plus_x2 * &prev.q.derivative()) + &(&x * &prev.q);
        out.push(DerivPair { n: n + 1, p, q });
    }
    out
}

/// The pair (P_n, Q_n).
///
/// ```
/// use derivkit::derivpolys::derivative_pair;
///
/// let pair = derivative_pair(3);
/// assert_eq!(pair.p.to_string(), "2+8x^2+6x^4");
/// assert_eq!(pair.q.to_string(), "5x+6x^3");
/// ```
pub fn derivative_pair(n: usize) -> DerivPair {
    derivative_pairs(n).pop().unwrap()
}

/// All pairs (P_k, Q_k) for k = 0..=max_n, built from the convolution
/// formulas P_{n+1} = δ_{0n} + Σ C(n,i)·P_i·P_{n−i} and
/// Q_{n+1} = Σ C(n,i)·P_i·Q_{n−i}. Independent of [`derivative_pairs`].
pub fn convolution_pairs(max_n: usize) -> Vec<DerivPair> {
    let mut out = Vec::with_capacity(max_n + 1);
    out.push(DerivPair {
        n: 0,
        p: DensePoly::x(),
        q: DensePoly::one(),
    });
    for n in 0..max_n {
        let row = binomial_row(n);
        // the Kronecker delta contributes only at the very first step
        let mut p = if n == 0 {
            DensePoly::one()
        } else {
            DensePoly::zero()
        };
        let mut q = DensePoly::zero();
        for i in 0..=n {
            let w = rat_big(row[i].clone());
            p = &p + &(&out[i].p * &out[n - i].p).scaled(&w);
            q = &q + &(&out[i].p * &out[n - i].q).scaled(&w);
        }
        out.push(DerivPair { n: n + 1, p, q });
    }
    out
}

/// The pair (P_n, Q_n) by convolution.
pub fn derivative_pair_by_convolution(n: usize) -> DerivPair {
    convolution_pairs(n).pop().unwrap()
}

/// Hyperbolic derivative polynomials: d^n/dθ^n tanh θ = P̃_n(tanh θ) and
/// d^n/dθ^n sech θ = sech θ·Q̃_n(tanh θ).
pub fn hyperbolic_pairs(max_n: usize) -> Vec<DerivPair> {
    let one_minus_x2 = DensePoly::from_ints(&[1, 0, -1]);
    let x = DensePoly::x();
    let mut out = Vec::with_capacity(max_n + 1);
    out.push(DerivPair {
        n: 0,
        p: DensePoly::x(),
        q: DensePoly::one(),
    });
    for n in 0..max_n {
        let prev = &out[n];
        let p = &one_minus_x2 * &prev.p.derivative();
        let q = &(&one_minus_x2 * &prev.q.derivative()) - &(&x * &prev.q);
        out.push(DerivPair { n: n + 1, p, q });
    }
    out
}

pub fn hyperbolic_pair(n: usize) -> DerivPair {
    hyperbolic_pairs(n).pop().unwrap()
}

/// Alternating derivative polynomials: p_{n+1} = (x²−1)·p_n′ with p_0 = x,
/// and q_{n+1} = 2(x²−1)·q_n′ + 2x·q_n with q_0 = 1.
pub fn alternating_pairs(max_n: usize) -> Vec<DerivPair> {
    let x2_minus_one = DensePoly::from_ints(&[-1, 0, 1]);
    let two_x = DensePoly::from_ints(&[0, 2]);
    let two = rat_int(2);
    let mut out = Vec::with_capacity(max_n + 1);
    out.push(DerivPair {
        n: 0,
        p: DensePoly::x(),
        q: DensePoly::one(),
    });
    for n in 0..max_n {
        let prev = &out[n];
        let p = &x2_minus_one * &prev.p.derivative();
        let q = &(&x2_minus_one * &prev.q.derivative()).scaled(&two) + &(&two_x * &prev.q);
        out.push(DerivPair { n: n + 1, p, q });
    }
    out
}

pub fn alternating_pair(n: usize) -> DerivPair {
    alternating_pairs(n).pop().unwrap()
}

/// The sign-twist construction of the alternating pair from (P_n, Q_n).
///
/// Writing P_n = Σ_k p(n, n−2k+1)·x^(n−2k+1), the alternating tangent-side
/// polynomial is p_n = Σ_k p(n, n−2k+1)·(−1)^k·x^(n−2k+1); the secant side
/// additionally scales by 2^n. This realizes the substitution x ↦ ix
/// entirely over the rationals, since nonzero coefficients of P_n
/// (resp. Q_n) sit only at degrees ≡ n+1 (resp. n) mod 2.
pub fn alternating_from_derivative(pair: &DerivPair) -> DerivPair {
    let n = pair.n;
    let p = parity_sign_twist(&pair.p, n + 1);
    let two_pow = rat_big(BigInt::from(2).pow(n as u32));
    let q = parity_sign_twist(&pair.q, n).scaled(&two_pow);
    DerivPair { n, p, q }
}

/// Multiply the coefficient of x^d by (−1)^((anchor−d)/2); the input must
/// have nonzero terms only at d ≡ anchor (mod 2).
fn parity_sign_twist(f: &DensePoly, anchor: usize) -> DensePoly {
    let coeffs = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(d, c)| {
            if c.is_zero() {
                Rational::zero()
            } else {
                debug_assert_eq!(d % 2, anchor % 2);
                if ((anchor - d) / 2) % 2 == 1 {
                    -c
                } else {
                    c.clone()
                }
            }
        })
        .collect();
    DensePoly::from_coeffs(coeffs)
}

/// Exact residuals of the two derivative identities at index n:
/// `tangent_diff` is P_n′ − Σ C(n,i)·Q_i·Q_{n−i} and `secant_diff` is the
/// cleared-denominator form (1+x²)·Q_n′ − Σ_{i≥1} C(n,i)·P_i·Q_{n−i}
/// (identically zero by convention at n = 0, where the identity is vacuous).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivIdentityCheck {
    pub n: usize,
    pub tangent_diff: DensePoly,
    pub secant_diff: DensePoly,
}

impl DerivIdentityCheck {
    pub fn passed(&self) -> bool {
        self.tangent_diff.is_zero() && self.secant_diff.is_zero()
    }
}

pub fn derivative_identity_check(n: usize) -> DerivIdentityCheck {
    derivative_identity_check_with(&derivative_pairs(n), n)
}

/// Same as [`derivative_identity_check`], reusing a prefix table of pairs.
pub fn derivative_identity_check_with(pairs: &[DerivPair], n: usize) -> DerivIdentityCheck {
    let row = binomial_row(n);
    let mut q_conv = DensePoly::zero();
    let mut pq_conv = DensePoly::zero();
    for i in 0..=n {
        let w = rat_big(row[i].clone());
        q_conv = &q_conv + &(&pairs[i].q * &pairs[n - i].q).scaled(&w);
        if i >= 1 {
            pq_conv = &pq_conv + &(&pairs[i].p * &pairs[n - i].q).scaled(&w);
        }
    }
    let tangent_diff = &pairs[n].p.derivative() - &q_conv;
    let secant_diff = if n == 0 {
        DensePoly::zero()
    } else {
        let one_plus_x2 = DensePoly::from_ints(&[1, 0, 1]);
        &(&one_plus_x2 * &pairs[n].q.derivative()) - &pq_conv
    };
    DerivIdentityCheck {
        n,
        tangent_diff,
        secant_diff,
    }
}

/// Which basis a [`BasisExpansion`] refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PolyBasis {
    /// {P_{−1} ≡ 1, P_0, P_1, …}; index −1 is the constant element.
    TangentP,
    /// {Q_0, Q_1, …}.
    SecantQ,
}

/// Coordinates of a polynomial in the P- or Q-basis. Zero coordinates are
/// not stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisExpansion {
    pub basis: PolyBasis,
    pub coords: BTreeMap<i64, Rational>,
}

impl BasisExpansion {
    /// Largest basis index carrying a coordinate.
    pub fn max_index(&self) -> Option<i64> {
        self.coords.keys().next_back().copied()
    }

    /// Σ coords\[i\] · basis_i, building the basis polynomials on demand.
    pub fn reconstruct(&self) -> DensePoly {
        let max = self.max_index().unwrap_or(-1).max(0) as usize;
        self.reconstruct_with(&derivative_pairs(max))
    }

    /// Σ coords\[i\] · basis_i against a prebuilt prefix table of pairs.
    pub fn reconstruct_with(&self, pairs: &[DerivPair]) -> DensePoly {
        let mut acc = DensePoly::zero();
        for (&i, c) in &self.coords {
            let basis_poly = match (self.basis, i) {
                (PolyBasis::TangentP, -1) => DensePoly::one(),
                (PolyBasis::TangentP, _) => pairs[i as usize].p.clone(),
                (PolyBasis::SecantQ, _) => pairs[i as usize].q.clone(),
            };
            acc = &acc + &basis_poly.scaled(c);
        }
        acc
    }
}

/// Expansion of Q_m in the P-basis:
///
/// ```text
/// Q_{2n}   = (−1)^n + Σ_{k=0}^{n−1} C(2n, 2k+1)·(−1)^k·P_{2n−2k−1}
/// Q_{2n+1} =          Σ_{k=0}^{n}   C(2n+1, 2k+1)·(−1)^k·P_{2n−2k}
/// ```
///
/// The constant lives on the basis element P_{−1} ≡ 1.
pub fn expand_q_in_p(m: usize) -> BasisExpansion {
    let mut coords = BTreeMap::new();
    let row = binomial_row(m);
    if m % 2 == 0 {
        let n = m / 2;
        let unit = if n % 2 == 0 { 1 } else { -1 };
        coords.insert(-1, rat_int(unit));
        for k in 0..n {
            let mut c = rat_big(row[2 * k + 1].clone());
            if k % 2 == 1 {
                c = -c;
            }
            coords.insert((m - 2 * k - 1) as i64, c);
        }
    } else {
        let n = (m - 1) / 2;
        for k in 0..=n {
            let mut c = rat_big(row[2 * k + 1].clone());
            if k % 2 == 1 {
                c = -c;
            }
            coords.insert((m - 2 * k - 1) as i64, c);
        }
    }
    BasisExpansion {
        basis: PolyBasis::TangentP,
        coords,
    }
}

/// Expansion of P_m in the Q-basis, from the Bernoulli-weighted identities
///
/// ```text
/// (2n+1)·P_{2n}   = Q_{2n+1} + Σ_{i=0}^{n−1} w_i·Q_{2n−2i−1}
/// (2n+2)·P_{2n+1} = Q_{2n+2} + Σ_{i=0}^{n}   w_i·Q_{2n−2i} − (−4)^(n+1)·B_{2n+2}
/// ```
///
/// with weights w_i = C(m+1, 2i+2)·(−1)^i·(4^(i+1)−2)·B_{2i+2}. The returned
/// coordinates are for P_m itself (everything divided by m+1); the trailing
/// constant in the odd case lands on Q_0 ≡ 1.
pub fn expand_p_in_q(m: usize) -> BasisExpansion {
    let mut coords: BTreeMap<i64, Rational> = BTreeMap::new();
    let bern = sequences::bernoulli_numbers(m + 3);
    let row = binomial_row(m + 1);
    let divisor = rat_int((m + 1) as i64);
    coords.insert((m + 1) as i64, rat_int(1) / &divisor);
    let steps = if m % 2 == 0 { m / 2 } else { m / 2 + 1 };
    for i in 0..steps {
        let four_pow = BigInt::from(4).pow((i + 1) as u32);
        let mut w = rat_big(&row[2 * i + 2] * (four_pow - BigInt::from(2))) * &bern[2 * i + 2];
        if i % 2 == 1 {
            w = -w;
        }
        let idx = (m - 1 - 2 * i) as i64;
        let entry = coords.entry(idx).or_insert_with(Rational::zero);
        *entry += w / &divisor;
    }
    if m % 2 == 1 {
        let n = (m - 1) / 2;
        // −(−4)^(n+1)·B_{2n+2} = (−1)^n·4^(n+1)·B_{2n+2}, folded onto Q_0
        let mut c = rat_big(BigInt::from(4).pow((n + 1) as u32)) * &bern[2 * n + 2];
        if n % 2 == 1 {
            c = -c;
        }
        let entry = coords.entry(0).or_insert_with(Rational::zero);
        *entry += c / &divisor;
    }
    coords.retain(|_, c| !c.is_zero());
    BasisExpansion {
        basis: PolyBasis::SecantQ,
        coords,
    }
}

/// Coordinates of an arbitrary polynomial in {P_{−1}, P_0, …, P_{d−1}}
/// where d = deg f, solved by back-substitution down the degree-triangular
/// system (P_k has degree k+1 and leading coefficient k!).
pub fn p_basis_coords(f: &DensePoly) -> BasisExpansion {
    let mut coords = BTreeMap::new();
    let mut residual = f.clone();
    let pairs = match f.degree() {
        Some(d) if d >= 1 => derivative_pairs(d - 1),
        _ => Vec::new(),
    };
    while let Some(deg) = residual.degree() {
        if deg == 0 {
            coords.insert(-1, residual.constant_term());
            break;
        }
        let c = residual.leading_coeff().unwrap() / rat_big(factorial(deg - 1));
        residual = &residual - &pairs[deg - 1].p.scaled(&c);
        coords.insert((deg - 1) as i64, c);
    }
    BasisExpansion {
        basis: PolyBasis::TangentP,
        coords,
    }
}

/// Exact integer value of sin(nπ/2): the 4-periodic cycle 0, 1, 0, −1.
pub fn sin_half_pi(n: usize) -> i64 {
    match n % 4 {
        1 => 1,
        3 => -1,
        _ => 0,
    }
}
