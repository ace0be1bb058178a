//! Exact scalar and polynomial arithmetic.
//!
//! The coefficient field everywhere is [`Rational`], an arbitrary-precision
//! rational backed by [`num_rational::BigRational`]. `BigRational` maintains
//! exactly the invariants we need: values are always fully reduced, the
//! denominator is strictly positive, and zero is represented uniquely as 0/1.
//!
//! Polynomials are dense ([`DensePoly`]); every family in this crate is dense
//! within its parity class, so sparse storage would buy nothing.

mod combinat;
mod poly;

pub use combinat::{
    binomial, binomial_row, choose, factorial, stirling2, stirling_row, stirling_triangle,
};
pub use poly::DensePoly;

use num_bigint::BigInt;

/// Arbitrary-precision rational scalar; always reduced, denominator > 0.
pub type Rational = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational p/q from machine integers. Panics on q = 0.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Rational from a big integer.
pub fn rat_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Signed, Zero};

    #[test]
    fn rationals_are_always_reduced_with_positive_denominator() {
        let r = rat(6, -4);
        assert_eq!(r, rat(-3, 2));
        assert!(r.denom().is_positive());
        assert_eq!(r.denom(), &BigInt::from(2));

        let z = rat(0, 7);
        assert!(z.is_zero());
        assert_eq!(z.denom(), &BigInt::one());
    }

    #[test]
    fn zero_is_unique() {
        assert_eq!(rat(0, 3), rat(0, -11));
        assert_eq!(rat(0, 1).to_string(), "0");
    }
}
