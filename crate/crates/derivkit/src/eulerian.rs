//! Eulerian polynomials of types A and B, their Frobenius expansions and
//! gamma vectors, the bridge to the alternating derivative polynomials, and
//! Chebyshev polynomials built from the same (x²−1)-basis sums.
//!
//! Type A counts descents over the symmetric group with the x^(des+1)
//! convention, so A_0 = 1 but A_n has zero constant term for n ≥ 1. Type B
//! counts descents of signed permutations including position 0. Both are
//! built from the standard recurrences
//!
//! ```text
//! A_n = n·x·A_{n−1} + x(1−x)·A_{n−1}′
//! B_n = (2nx+1−x)·B_{n−1} + 2x(1−x)·B_{n−1}′
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::derivpolys::DerivPair;
use crate::error::{Error, Result};
use crate::exactmath::{
    binomial_row, rat_big, rat_int, stirling_row, stirling_triangle, DensePoly, Rational,
};

/// A_0..A_{max_n} by the descent recurrence.
pub fn eulerian_a_table(max_n: usize) -> Vec<DensePoly> {
    let x = DensePoly::x();
    let x_one_minus_x = DensePoly::from_ints(&[0, 1, -1]);
    let mut out = Vec::with_capacity(max_n + 1);
    out.push(DensePoly::one());
    for n in 1..=max_n {
        let prev = &out[n - 1];
        let next = &(&x * prev).scaled(&rat_int(n as i64)) + &(&x_one_minus_x * &prev.derivative());
        out.push(next);
    }
    out
}

pub fn eulerian_a(n: usize) -> DensePoly {
    eulerian_a_table(n).pop().unwrap()
}

/// B_0..B_{max_n} by the signed-descent recurrence.
pub fn eulerian_b_table(max_n: usize) -> Vec<DensePoly> {
    let two_x_one_minus_x = DensePoly::from_ints(&[0, 2, -2]);
    let mut out = Vec::with_capacity(max_n + 1);
    out.push(DensePoly::one());
    for n in 1..=max_n {
        let prev = &out[n - 1];
        let linear = DensePoly::from_ints(&[1, 2 * n as i64 - 1]); // 2nx+1−x
        let next = &(&linear * prev) + &(&two_x_one_minus_x * &prev.derivative());
        out.push(next);
    }
    out
}

pub fn eulerian_b(n: usize) -> DensePoly {
    eulerian_b_table(n).pop().unwrap()
}

/// Frobenius expansion A_n = x·Σ_k k!·S(n,k)·(x−1)^(n−k), valid for n ≥ 1
/// (at n = 0 the sum gives x, not A_0 = 1, so that index is rejected).
pub fn frobenius_a(n: usize) -> Result<DensePoly> {
    if n == 0 {
        return Err(Error::Domain("frobenius_a: defined for n >= 1 only".into()));
    }
    let srow = stirling_row(n);
    let x_minus_one = DensePoly::from_ints(&[-1, 1]);
    let mut acc = DensePoly::zero();
    let mut kfact = BigInt::from(1);
    let mut pow = x_minus_one.pow(n); // (x−1)^(n−k) for k = 0
    for (k, s) in srow.iter().enumerate() {
        if k > 1 {
            kfact *= k;
        }
        acc = &acc + &pow.scaled(&rat_big(&kfact * s));
        if k < n {
            // drop one factor of (x−1) by exact division: deg decreases by 1
            pow = divide_by_x_minus_one(&pow);
        }
    }
    Ok(&DensePoly::x() * &acc)
}

/// Frobenius-type expansion B_n = Σ_k k!·[Σ_{i=k}^{n} C(n,i)·2^i·S(i,k)]·(x−1)^(n−k).
pub fn frobenius_b(n: usize) -> DensePoly {
    let tri = stirling_triangle(n);
    let row = binomial_row(n);
    let x_minus_one = DensePoly::from_ints(&[-1, 1]);
    let mut acc = DensePoly::zero();
    let mut kfact = BigInt::from(1);
    let mut pow = x_minus_one.pow(n);
    for k in 0..=n {
        if k > 1 {
            kfact *= k;
        }
        let mut inner = BigInt::from(0);
        let mut two_pow = BigInt::from(2).pow(k as u32);
        for i in k..=n {
            inner += &row[i] * &two_pow * &tri[i][k];
            two_pow *= 2;
        }
        acc = &acc + &pow.scaled(&rat_big(kfact.clone() * inner));
        if k < n {
            pow = divide_by_x_minus_one(&pow);
        }
    }
    acc
}

/// Exact division of a polynomial known to be divisible by (x−1).
fn divide_by_x_minus_one(f: &DensePoly) -> DensePoly {
    // synthetic division at x = 1
    let coeffs = f.coeffs();
    if coeffs.is_empty() {
        return DensePoly::zero();
    }
    let mut out = vec![Rational::zero(); coeffs.len() - 1];
    let mut carry = Rational::zero();
    for d in (1..coeffs.len()).rev() {
        carry += &coeffs[d];
        out[d - 1] = carry.clone();
    }
    debug_assert!((&carry + &coeffs[0]).is_zero(), "not divisible by x-1");
    DensePoly::from_coeffs(out)
}

/// Which gamma expansion a [`GammaVector`] came from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GammaKind {
    /// A_n = Σ_{k=1}^{⌊(n+1)/2⌋} a(n,k)·x^k·(1+x)^(n+1−2k)
    TypeA,
    /// B_n = Σ_{k=0}^{⌊n/2⌋} 4^k·b(n,k)·x^k·(1+x)^(n−2k)
    TypeB,
}

impl GammaKind {
    pub fn name(self) -> &'static str {
        match self {
            GammaKind::TypeA => "typeA",
            GammaKind::TypeB => "typeB",
        }
    }

    /// Smallest k carrying a gamma entry.
    pub fn k_min(self) -> usize {
        match self {
            GammaKind::TypeA => 1,
            GammaKind::TypeB => 0,
        }
    }
}

impl fmt::Display for GammaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GammaKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "typeA" => Ok(GammaKind::TypeA),
            "typeB" => Ok(GammaKind::TypeB),
            other => Err(Error::Parse(format!("unknown gamma kind `{other}`"))),
        }
    }
}

/// Nonnegative integer gamma coefficients of A_n or B_n; entry `gamma[j]`
/// is a(n, k_min+j) resp. b(n, k_min+j).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GammaVector {
    pub kind: GammaKind,
    pub n: usize,
    pub gamma: Vec<BigInt>,
}

impl GammaVector {
    /// The gamma entry for a given k.
    pub fn entry(&self, k: usize) -> Option<&BigInt> {
        k.checked_sub(self.kind.k_min())
            .and_then(|j| self.gamma.get(j))
    }

    /// Histogram view k ↦ gamma_k with zero entries dropped.
    pub fn histogram(&self) -> BTreeMap<usize, BigInt> {
        self.gamma
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(j, v)| (self.kind.k_min() + j, v.clone()))
            .collect()
    }

    /// Σ_k (4^k)·gamma_k·x^k·(1+x)^(M−2k), the defining expansion.
    pub fn reconstruct(&self) -> DensePoly {
        let m = match self.kind {
            GammaKind::TypeA => self.n + 1,
            GammaKind::TypeB => self.n,
        };
        let one_plus_x = DensePoly::from_ints(&[1, 1]);
        let mut acc = DensePoly::zero();
        for (j, g) in self.gamma.iter().enumerate() {
            let k = self.kind.k_min() + j;
            let mut w = rat_big(g.clone());
            if self.kind == GammaKind::TypeB {
                w *= rat_big(BigInt::from(4).pow(k as u32));
            }
            let term = &DensePoly::monomial(w, k) * &one_plus_x.pow(m - 2 * k);
            acc = &acc + &term;
        }
        acc
    }
}

/// Solve f = Σ_{k=k_min}^{⌊m/2⌋} c_k·x^k·(1+x)^(m−2k) for the c_k by
/// peeling coefficients in ascending k; the system is triangular because
/// the k-th basis element starts at degree k. Errors if a nonzero residual
/// survives (f is not in the span, e.g. not palindromic).
pub(crate) fn gamma_solve(f: &DensePoly, m: usize, k_min: usize) -> Result<Vec<Rational>> {
    let one_plus_x = DensePoly::from_ints(&[1, 1]);
    let mut residual = f.clone();
    let mut coords = Vec::new();
    for k in k_min..=m / 2 {
        let c = residual.coeff(k);
        if !c.is_zero() {
            let term = &DensePoly::monomial(c.clone(), k) * &one_plus_x.pow(m - 2 * k);
            residual = &residual - &term;
        }
        coords.push(c);
    }
    if !residual.is_zero() {
        return Err(Error::Domain(format!(
            "gamma_solve: residual {residual} outside the x^k(1+x)^({m}-2k) span"
        )));
    }
    Ok(coords)
}

/// The gamma vector of A_n (kind = TypeA) or B_n (TypeB), n ≥ 1. Fails
/// loudly if any entry comes out negative or non-integral, since both
/// families are gamma-positive with integer coefficients.
pub fn gamma_vector(kind: GammaKind, n: usize) -> Result<GammaVector> {
    if n == 0 {
        return Err(Error::Domain("gamma_vector: n must be >= 1".into()));
    }
    let (f, m) = match kind {
        GammaKind::TypeA => (eulerian_a(n), n + 1),
        GammaKind::TypeB => (eulerian_b(n), n),
    };
    let coords = gamma_solve(&f, m, kind.k_min())?;
    let mut gamma = Vec::with_capacity(coords.len());
    for (j, mut c) in coords.into_iter().enumerate() {
        let k = kind.k_min() + j;
        if kind == GammaKind::TypeB {
            c /= rat_big(BigInt::from(4).pow(k as u32));
        }
        if !c.is_integer() || c.is_negative() {
            return Err(Error::GammaViolation {
                kind: kind.name().to_string(),
                n,
                k,
                value: c.to_string(),
            });
        }
        gamma.push(c.to_integer());
    }
    Ok(GammaVector { kind, n, gamma })
}

/// The alternating pair (p_n, q_n) through the Eulerian change of variables
/// p_n = (x+1)^(n+1)·A_n((x−1)/(x+1)) and q_n = (x+1)^n·B_n((x−1)/(x+1)),
/// n ≥ 1.
pub fn alt_from_eulerian(n: usize) -> Result<DerivPair> {
    if n == 0 {
        return Err(Error::Domain("alt_from_eulerian: n must be >= 1".into()));
    }
    let u = DensePoly::from_ints(&[-1, 1]);
    let v = DensePoly::from_ints(&[1, 1]);
    let p = eulerian_a(n).homogenized_eval(&u, &v, n + 1)?;
    let q = eulerian_b(n).homogenized_eval(&u, &v, n)?;
    Ok(DerivPair { n, p, q })
}

/// The alternating pair rebuilt from gamma vectors:
/// p_n = Σ a(n,k)·(x²−1)^k·(2x)^(n+1−2k) and
/// q_n = Σ 4^k·b(n,k)·(x²−1)^k·(2x)^(n−2k), n ≥ 1.
pub fn alt_gamma_form(n: usize) -> Result<DerivPair> {
    let ga = gamma_vector(GammaKind::TypeA, n)?;
    let gb = gamma_vector(GammaKind::TypeB, n)?;
    let x2_minus_one = DensePoly::from_ints(&[-1, 0, 1]);
    let two_x = DensePoly::from_ints(&[0, 2]);
    let mut p = DensePoly::zero();
    for (j, g) in ga.gamma.iter().enumerate() {
        let k = 1 + j;
        let term = &x2_minus_one.pow(k) * &two_x.pow(n + 1 - 2 * k);
        p = &p + &term.scaled(&rat_big(g.clone()));
    }
    let mut q = DensePoly::zero();
    for (k, g) in gb.gamma.iter().enumerate() {
        let term = &x2_minus_one.pow(k) * &two_x.pow(n - 2 * k);
        let w = rat_big(g * BigInt::from(4).pow(k as u32));
        q = &q + &term.scaled(&w);
    }
    Ok(DerivPair { n, p, q })
}

/// The alternating pair from the Stirling-number forms
/// p_n = (x−1)·Σ_k (−2)^(n−k)·k!·S(n,k)·(x+1)^k and
/// q_n = Σ_k (−2)^(n−k)·k!·[Σ_i C(n,i)·2^i·S(i,k)]·(x+1)^k, n ≥ 1.
pub fn alt_stirling_form(n: usize) -> Result<DerivPair> {
    if n == 0 {
        return Err(Error::Domain("alt_stirling_form: n must be >= 1".into()));
    }
    let tri = stirling_triangle(n);
    let brow = binomial_row(n);
    let one_plus_x = DensePoly::from_ints(&[1, 1]);
    let mut p = DensePoly::zero();
    let mut q = DensePoly::zero();
    let mut kfact = BigInt::from(1);
    let mut pow = DensePoly::one();
    for k in 0..=n {
        if k > 1 {
            kfact *= k;
        }
        let mut minus_two = BigInt::from(-2).pow((n - k) as u32);
        minus_two *= &kfact;
        p = &p + &pow.scaled(&rat_big(&minus_two * &tri[n][k]));
        let mut inner = BigInt::from(0);
        let mut two_pow = BigInt::from(2).pow(k as u32);
        for i in k..=n {
            inner += &brow[i] * &two_pow * &tri[i][k];
            two_pow *= 2;
        }
        q = &q + &pow.scaled(&rat_big(minus_two * inner));
        if k < n {
            pow = &pow * &one_plus_x;
        }
    }
    let x_minus_one = DensePoly::from_ints(&[-1, 1]);
    Ok(DerivPair {
        n,
        p: &x_minus_one * &p,
        q,
    })
}

/// Chebyshev kind selector.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChebKind {
    /// First kind: T_n(cos θ) = cos nθ.
    T,
    /// Second kind: U_n(cos θ) = sin (n+1)θ / sin θ.
    U,
}

/// Chebyshev polynomial by the binomial sums
/// T_n = Σ_k C(n, 2k)·(x²−1)^k·x^(n−2k) and
/// U_n = Σ_k C(n+1, 2k+1)·(x²−1)^k·x^(n−2k).
pub fn chebyshev(kind: ChebKind, n: usize) -> DensePoly {
    let x2_minus_one = DensePoly::from_ints(&[-1, 0, 1]);
    let row = match kind {
        ChebKind::T => binomial_row(n),
        ChebKind::U => binomial_row(n + 1),
    };
    let mut acc = DensePoly::zero();
    for k in 0..=n / 2 {
        let c = match kind {
            ChebKind::T => &row[2 * k],
            ChebKind::U => &row[2 * k + 1],
        };
        let term = &x2_minus_one.pow(k) * &DensePoly::monomial(rat_big(c.clone()), n - 2 * k);
        acc = &acc + &term;
    }
    acc
}

/// T_0..T_{max_n} (or U) by the three-term recurrence
/// F_{n+1} = 2x·F_n − F_{n−1}, an independent construction path.
pub fn chebyshev_recurrence_table(kind: ChebKind, max_n: usize) -> Vec<DensePoly> {
    let two_x = DensePoly::from_ints(&[0, 2]);
    let first = match kind {
        ChebKind::T => DensePoly::x(),
        ChebKind::U => two_x.clone(),
    };
    let mut out = vec![DensePoly::one(), first];
    for n in 1..max_n {
        let next = &(&two_x * &out[n]) - &out[n - 1];
        out.push(next);
    }
    out.truncate(max_n + 1);
    out
}

/// The expected total masses (n!, 2^n·n!) that A_n(1) and B_n(1) must hit.
pub fn eulerian_mass(n: usize) -> (Rational, Rational) {
    let fact = crate::exactmath::factorial(n);
    let b_mass = &fact * BigInt::from(2).pow(n as u32);
    (rat_big(fact), rat_big(b_mass))
}
