//! Exact-arithmetic toolkit for the derivative polynomials of tangent and
//! secant and the combinatorics around them.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere in the crate. The main pieces:
//!
//! - [`exactmath`]: rational scalars, dense univariate polynomials, binomial
//!   and Stirling coefficients.
//! - [`derivpolys`]: the pairs (P_n, Q_n) defined by
//!   d^n/dθ^n tan θ = P_n(tan θ) and d^n/dθ^n sec θ = sec θ · Q_n(tan θ),
//!   their hyperbolic and alternating variants, and expansions of one family
//!   in the basis formed by the other.
//! - [`sequences`]: Euler (zigzag), Bernoulli and Springer numbers.
//! - [`eulerian`]: Eulerian polynomials of types A and B, Frobenius
//!   expansions, gamma vectors, Chebyshev polynomials, and the bridge from
//!   Eulerian polynomials to the alternating derivative polynomials.
//! - [`oracles`]: brute-force permutation enumeration used as independent
//!   ground truth at small sizes.
//! - [`verify`]: a registry of polynomial and numeric identities connecting
//!   all of the above, each checkable exactly over a range of indices.
//! - [`emit`]: csv / json / latex serialization of polynomials, sequences
//!   and verification reports.
//!
//! All functions are pure: no global caches, no shared mutable state, safe
//! for unrestricted concurrent use.

pub mod emit;
pub mod error;
pub mod eulerian;
pub mod exactmath;
pub mod oracles;
pub mod sequences;
pub mod verify;

pub mod derivpolys;

pub use error::{Error, Result};
pub use exactmath::{DensePoly, Rational};

pub use derivpolys::{BasisExpansion, DerivPair, PolyBasis};
pub use eulerian::{GammaKind, GammaVector};
pub use oracles::PermStatistic;
pub use sequences::{SequenceKind, SequenceTable};
pub use verify::{IdentityDescriptor, VerificationReport};
