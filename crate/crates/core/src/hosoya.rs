//! Hosoya polynomial and Wiener index.

use crate::distances::{distance_distribution, DistanceDistribution};
use crate::error::Result;
use crate::graph::Graph;
use crate::polynomial::Polynomial;
use crate::scalar::Scalar;
use crate::{HosoyaPolynomial, Integer};

/// `Σ_k counts[k] x^k` over unordered distinct pairs, so the constant term is
/// always 0.
pub fn from_distribution<T: Scalar>(dd: &DistanceDistribution) -> Polynomial<T> {
    dd.as_slice()
        .iter()
        .map(|&c| T::from_u64(c).expect("pair count fits in the scalar type"))
        .collect()
}

/// Hosoya polynomial of a connected graph.
pub fn hosoya(g: &Graph) -> Result<HosoyaPolynomial> {
    distance_distribution(g).map(|dd| from_distribution(&dd))
}

/// Sum of distances over all unordered vertex pairs, `Σ_k k · counts[k]`.
pub fn wiener_index(g: &Graph) -> Result<Integer> {
    distance_distribution(g).map(|dd| wiener_from_distribution(&dd))
}

pub fn wiener_from_distribution(dd: &DistanceDistribution) -> Integer {
    Integer::from(dd.distance_sum())
}
