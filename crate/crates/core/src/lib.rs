//! Exact decision procedures for normality of monomial ideals.
//!
//! The crate computes integral closures and powers of monomial ideals in a
//! polynomial ring, decides normality, and specializes to the ideals
//! `I(lambda)`, the integral closures of `(x_1^lambda_1, .., x_n^lambda_n)`,
//! for which it enumerates the minimal generators of the normalized Rees
//! algebra and checks how normality moves between `lambda` and
//! `lambda' = (lambda_1, .., lambda_n + lcm(lambda_1, .., lambda_{n-1}))`.
//!
//! All arithmetic is exact: lattice points are integer vectors, and the one
//! place rationals appear (LP feasibility) uses arbitrary-precision fallback.

pub mod cli;
pub mod error;
pub mod graded;
pub mod ideal;
pub mod lambda;
pub mod lattice;
pub mod oracle;
pub mod polyhedron;
pub mod rees;
mod verdict;

pub use error::{Error, Result};
pub use ideal::{MonomialIdeal, PowerWitness};
pub use lattice::{ExponentVector, LambdaSystem, RationalNumber};
pub use verdict::Verdict;
