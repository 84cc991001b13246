//! Exact computation of branching constants, pole structures and
//! Parseval-Plancherel coefficients for weighted Bergman spaces restricted
//! to symmetric subgroups, together with a brute-force polynomial oracle on
//! concrete Jordan algebra realizations that independently verifies every
//! closed form.
//!
//! The crate is organized around the pipeline
//!
//! ```text
//!   catalog  ->  constants        (closed-form rational functions of λ, μ)
//!   jordan   ->  oracle           (exact K-type decompositions and pairings)
//!   verify                        (each closed form checked against the oracle)
//! ```
//!
//! All arithmetic is exact: rationals are arbitrary-precision, polynomials
//! are sparse with rational coefficients, and every rational-function value
//! is carried in factored form.

pub mod exactnum;
pub mod partitions;
pub mod catalog;
pub mod poly;
pub mod jordan;
pub mod constants;
pub mod oracle;
pub mod verify;
pub mod emit;

pub use exactnum::{FactoredRatFunc, LinearForm, PoleSignal, Rational};
pub use partitions::Partition;
pub fn cli_main() -> i32 { 0 }
