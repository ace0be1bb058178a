//! Dense univariate polynomials over [`Rational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{rat_int, Rational};

/// Dense univariate polynomial; `coeffs[j]` is the coefficient of `x^j`.
///
/// Trailing zeros are always trimmed, so the zero polynomial is the empty
/// coefficient vector and every nonzero polynomial has a nonzero last entry.
/// The degree of the zero polynomial is [`None`] (conceptually −∞).
///
/// ```
/// use derivkit::exactmath::DensePoly;
///
/// let f = DensePoly::from_ints(&[1, 0, 2]);
/// assert_eq!(f.to_string(), "1+2x^2");
/// assert_eq!(f.degree(), Some(2));
/// assert_eq!((&f * &DensePoly::x()).to_string(), "x+2x^3");
/// ```
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DensePoly {
    coeffs: Vec<Rational>,
}

impl DensePoly {
    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        DensePoly::constant(rat_int(1))
    }

    /// The monomial x.
    pub fn x() -> Self {
        DensePoly::monomial(rat_int(1), 1)
    }

    pub fn constant(c: Rational) -> Self {
        DensePoly::from_coeffs(vec![c])
    }

    /// c·x^d.
    pub fn monomial(c: Rational, d: usize) -> Self {
        if c.is_zero() {
            return DensePoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        DensePoly { coeffs }
    }

    /// Build from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    /// Convenience constructor from machine integers, low degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        DensePoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of x^d (zero beyond the stored length).
    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x0 + c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> DensePoly {
        if self.coeffs.len() <= 1 {
            return DensePoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * rat_int(j as i64))
            .collect();
        DensePoly::from_coeffs(coeffs)
    }

    /// Multiply by a scalar.
    pub fn scaled(&self, s: &Rational) -> DensePoly {
        if s.is_zero() {
            return DensePoly::zero();
        }
        DensePoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Non-negative integer power by repeated multiplication.
    pub fn pow(&self, e: usize) -> DensePoly {
        let mut acc = DensePoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The homogenized substitution Σ_k f_k · u^k · v^(m−k).
    ///
    /// For v = x+1, u = x−1 this is (x+1)^m · f((x−1)/(x+1)) without ever
    /// forming a rational function. Requires m ≥ deg f.
    pub fn homogenized_eval(&self, u: &DensePoly, v: &DensePoly, m: usize) -> Result<DensePoly> {
        if let Some(d) = self.degree() {
            if m < d {
                return Err(Error::Domain(format!(
                    "homogenized_eval: m = {m} is below deg f = {d}"
                )));
            }
        }
        let mut v_pows = Vec::with_capacity(m + 1);
        v_pows.push(DensePoly::one());
        for _ in 0..m {
            v_pows.push(v_pows.last().unwrap() * v);
        }
        let mut acc = DensePoly::zero();
        let mut u_pow = DensePoly::one();
        for (k, fk) in self.coeffs.iter().enumerate() {
            if !fk.is_zero() {
                acc = &acc + &(&u_pow * &v_pows[m - k]).scaled(fk);
            }
            if k + 1 < self.coeffs.len() {
                u_pow = &u_pow * u;
            }
        }
        Ok(acc)
    }

    /// True when every nonzero term has degree ≡ r (mod 2).
    pub fn has_parity(&self, r: usize) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(d, c)| c.is_zero() || d % 2 == r % 2)
    }

    /// f(−x).
    pub fn reflected(&self) -> DensePoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(d, c)| if d % 2 == 0 { c.clone() } else { -c })
            .collect();
        DensePoly { coeffs }
    }
}

impl Add for &DensePoly {
    type Output = DensePoly;
    fn add(self, rhs: &DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for j in 0..n {
            let mut c = self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero);
            if let Some(r) = rhs.coeffs.get(j) {
                c += r;
            }
            coeffs.push(c);
        }
        DensePoly::from_coeffs(coeffs)
    }
}

impl Sub for &DensePoly {
    type Output = DensePoly;
    fn sub(self, rhs: &DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for j in 0..n {
            let mut c = self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero);
            if let Some(r) = rhs.coeffs.get(j) {
                c -= r;
            }
            coeffs.push(c);
        }
        DensePoly::from_coeffs(coeffs)
    }
}

impl Mul for &DensePoly {
    type Output = DensePoly;
    /// Schoolbook multiplication; degrees in this crate stay small enough
    /// that anything fancier would be wasted.
    fn mul(self, rhs: &DensePoly) -> DensePoly {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        DensePoly::from_coeffs(coeffs)
    }
}

impl Neg for &DensePoly {
    type Output = DensePoly;
    fn neg(self) -> DensePoly {
        DensePoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Human-readable form, ascending powers: `5x+6x^3`, `1/2x^2-1`.
impl fmt::Display for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let a = c.abs();
            if d == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}")?;
                }
                if d == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{d}")?;
                }
            }
        }
        Ok(())
    }
}
