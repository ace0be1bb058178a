//! Exact integer and rational number sequences: Euler (zigzag), Bernoulli
//! and Springer numbers, plus the tangent/secant sub-sequences.
//!
//! Euler numbers come out of the derivative polynomials
//! (E_{2n+1} = P_{2n+1}(0), E_{2n} = Q_{2n}(0)); the boustrophedon triangle
//! provides an independent construction used as a cross-check. Bernoulli
//! numbers use the Stirling-number formula for the z/(e^z−1) convention,
//! so B_1 = −1/2. Springer numbers are Q_n(1).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::derivpolys::derivative_pairs;
use crate::error::{Error, Result};
use crate::exactmath::{rat_big, rat_int, stirling_triangle, Rational};

/// E_0..E_{count−1}, extracted from derivative-polynomial constant terms.
pub fn euler_numbers(count: usize) -> Vec<BigInt> {
    if count == 0 {
        return Vec::new();
    }
    let pairs = derivative_pairs(count - 1);
    pairs
        .iter()
        .map(|pair| {
            let c = if pair.n % 2 == 0 {
                pair.q.constant_term()
            } else {
                pair.p.constant_term()
            };
            assert!(c.is_integer(), "E_{} is not integral", pair.n);
            c.to_integer()
        })
        .collect()
}

pub fn euler_number(n: usize) -> BigInt {
    euler_numbers(n + 1).pop().unwrap()
}

/// E_0..E_{count−1} via the boustrophedon (Seidel) triangle: each row is
/// filled by running partial sums against the previous row reversed, and
/// E_n is the last entry of row n. Independent of the polynomial route.
pub fn euler_zigzag_numbers(count: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return out;
    }
    let mut row = vec![BigInt::one()];
    out.push(BigInt::one());
    for n in 1..count {
        let mut next = vec![BigInt::zero(); n + 1];
        for k in 1..=n {
            next[k] = &next[k - 1] + &row[n - k];
        }
        out.push(next[n].clone());
        row = next;
    }
    out
}

pub fn euler_zigzag_oracle(n: usize) -> BigInt {
    euler_zigzag_numbers(n + 1).pop().unwrap()
}

/// B_0..B_{count−1} with the z/(e^z−1) convention (B_1 = −1/2), via
/// B_n = Σ_k (−1)^k·k!/(k+1)·S(n,k).
pub fn bernoulli_numbers(count: usize) -> Vec<Rational> {
    if count == 0 {
        return Vec::new();
    }
    let tri = stirling_triangle(count - 1);
    let mut out = Vec::with_capacity(count);
    for row in &tri {
        let mut acc = Rational::zero();
        let mut kfact = BigInt::one();
        for (k, s) in row.iter().enumerate() {
            if k > 1 {
                kfact *= k;
            }
            let mut term = rat_big(&kfact * s) / rat_int((k + 1) as i64);
            if k % 2 == 1 {
                term = -term;
            }
            acc += term;
        }
        out.push(acc);
    }
    out
}

pub fn bernoulli(n: usize) -> Rational {
    bernoulli_numbers(n + 1).pop().unwrap()
}

/// Springer numbers s_0..s_{count−1}, where s_n = Q_n(1).
pub fn springer_numbers(count: usize) -> Vec<BigInt> {
    if count == 0 {
        return Vec::new();
    }
    let one = rat_int(1);
    derivative_pairs(count - 1)
        .iter()
        .map(|pair| {
            let v = pair.q.eval(&one);
            assert!(v.is_integer(), "s_{} is not integral", pair.n);
            v.to_integer()
        })
        .collect()
}

pub fn springer_number(n: usize) -> BigInt {
    springer_numbers(n + 1).pop().unwrap()
}

/// The named sequences the crate can tabulate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SequenceKind {
    Euler,
    Bernoulli,
    Springer,
    /// Odd-index Euler numbers E_1, E_3, E_5, …
    Tangent,
    /// Even-index Euler numbers E_0, E_2, E_4, …
    Secant,
}

impl SequenceKind {
    pub fn name(self) -> &'static str {
        match self {
            SequenceKind::Euler => "euler",
            SequenceKind::Bernoulli => "bernoulli",
            SequenceKind::Springer => "springer",
            SequenceKind::Tangent => "tangent",
            SequenceKind::Secant => "secant",
        }
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "euler" => Ok(SequenceKind::Euler),
            "bernoulli" => Ok(SequenceKind::Bernoulli),
            "springer" => Ok(SequenceKind::Springer),
            "tangent" => Ok(SequenceKind::Tangent),
            "secant" => Ok(SequenceKind::Secant),
            other => Err(Error::Parse(format!("unknown sequence `{other}`"))),
        }
    }
}

/// A prefix of one of the named sequences, indexed from 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SequenceTable {
    pub kind: SequenceKind,
    pub values: Vec<Rational>,
}

pub fn sequence_table(kind: SequenceKind, count: usize) -> SequenceTable {
    let values = match kind {
        SequenceKind::Euler => euler_numbers(count).into_iter().map(rat_big).collect(),
        SequenceKind::Bernoulli => bernoulli_numbers(count),
        SequenceKind::Springer => springer_numbers(count).into_iter().map(rat_big).collect(),
        SequenceKind::Tangent => euler_numbers(2 * count)
            .into_iter()
            .skip(1)
            .step_by(2)
            .map(rat_big)
            .collect(),
        SequenceKind::Secant => euler_numbers(2 * count)
            .into_iter()
            .step_by(2)
            .map(rat_big)
            .collect(),
    };
    SequenceTable { kind, values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{choose, rat};
    use num_traits::Signed;

    #[test]
    fn euler_number_examples() {
        assert_eq!(euler_number(4), BigInt::from(5));
        let expected = [1i64, 1, 1, 2, 5, 16];
        assert_eq!(
            euler_numbers(6),
            expected
                .iter()
                .map(|&e| BigInt::from(e))
                .collect::<Vec<_>>()
        );
        assert_eq!(euler_number(7), euler_zigzag_oracle(7));
        assert_eq!(euler_number(7), BigInt::from(272));
    }

    #[test]
    fn zigzag_oracle_examples() {
        assert_eq!(euler_zigzag_oracle(5), BigInt::from(16));
        assert_eq!(euler_zigzag_oracle(1), BigInt::from(1));
        assert_eq!(euler_zigzag_oracle(10), BigInt::from(50521));
    }

    #[test]
    fn zigzag_agrees_with_polynomial_route() {
        assert_eq!(euler_numbers(31), euler_zigzag_numbers(31));
    }

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(3), rat_int(0));
        assert_eq!(bernoulli(0), rat_int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(8), rat(-1, 30));
    }

    #[test]
    fn bernoulli_recurrence_cross_check() {
        // Σ_{k=0}^{n} C(n+1, k)·B_k = 0 for n ≥ 1
        let bern = bernoulli_numbers(41);
        for n in 1..=40usize {
            let mut acc = Rational::zero();
            for (k, b) in bern.iter().take(n + 1).enumerate() {
                acc += rat_big(choose(n + 1, k)) * b;
            }
            assert!(acc.is_zero(), "n = {n}: {acc}");
        }
    }

    #[test]
    fn odd_bernoulli_vanish() {
        let bern = bernoulli_numbers(41);
        for n in (3..41).step_by(2) {
            assert!(bern[n].is_zero(), "B_{n}");
        }
    }

    #[test]
    fn springer_examples() {
        assert_eq!(springer_number(3), BigInt::from(11));
        assert_eq!(springer_number(0), BigInt::from(1));
        assert_eq!(springer_number(5), BigInt::from(361));
        let expected = [1i64, 1, 3, 11, 57, 361, 2763];
        assert_eq!(
            springer_numbers(7),
            expected
                .iter()
                .map(|&e| BigInt::from(e))
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn tables_have_expected_shape() {
        let t = sequence_table(SequenceKind::Tangent, 4);
        assert_eq!(
            t.values,
            vec![rat_int(1), rat_int(2), rat_int(16), rat_int(272)]
        );
        let s = sequence_table(SequenceKind::Secant, 4);
        assert_eq!(
            s.values,
            vec![rat_int(1), rat_int(1), rat_int(5), rat_int(61)]
        );
        // integer sequences really are nonnegative integers
        for kind in [
            SequenceKind::Euler,
            SequenceKind::Springer,
            SequenceKind::Tangent,
            SequenceKind::Secant,
        ] {
            for v in sequence_table(kind, 10).values {
                assert!(v.is_integer() && !v.is_negative());
            }
        }
        let b = sequence_table(SequenceKind::Bernoulli, 5);
        assert_eq!(b.values[4], rat(-1, 30));
        assert!(sequence_table(SequenceKind::Euler, 0).values.is_empty());
    }

    #[test]
    fn kind_round_trips_through_names() {
        for kind in [
            SequenceKind::Euler,
            SequenceKind::Bernoulli,
            SequenceKind::Springer,
            SequenceKind::Tangent,
            SequenceKind::Secant,
        ] {
            assert_eq!(kind.name().parse::<SequenceKind>().unwrap(), kind);
        }
        assert!("cosine".parse::<SequenceKind>().is_err());
    }
}
