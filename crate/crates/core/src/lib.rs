//! Exact distance-based topological indices of graphs.
//!
//! Brute-force BFS gives the distance distribution of a graph, from which
//! the Hosoya polynomial and Wiener index follow. For the Jahangir family
//! `J(5, m)` the closed forms are checked against that oracle, and
//! [`family_fit`] re-derives per-distance formulas for any family by exact
//! rational interpolation.
//!
//! Polynomial and interpolation code is generic over the scalar type (see
//! [`scalar`]); the aliases below pick the exact big-number instances used
//! throughout the public API.
//!
//! ```
//! use jahangir_core::{generators::jahangir, hosoya::{hosoya, wiener_index}};
//!
//! let g = jahangir(5, 6).unwrap();
//! assert_eq!(hosoya(&g).unwrap().to_string(), "36x + 57x^2 + 102x^3 + 120x^4 + 108x^5 + 42x^6");
//! assert_eq!(wiener_index(&g).unwrap(), 1728.into());
//! ```

pub mod closed_forms;
pub mod distances;
mod error;
pub mod family_fit;
pub mod generators;
pub mod graph;
pub mod hosoya;
pub mod polynomial;
pub mod scalar;

pub use distances::{DistanceDistribution, OrbitSpec};
pub use error::{Error, Result};
pub use family_fit::{Family, FamilyFormula};
pub use graph::Graph;
pub use polynomial::Polynomial;
pub use scalar::{Field, Scalar};

/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision rational in lowest terms.
pub type Rational = num_rational::BigRational;
/// Hosoya polynomials have exact integer coefficients.
pub type HosoyaPolynomial = Polynomial<Integer>;
pub type RationalPolynomial = Polynomial<Rational>;
/// Per-distance formulas with exact rational coefficients.
pub type ExactFamilyFormula = FamilyFormula<Rational>;
