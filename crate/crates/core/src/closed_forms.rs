//! Closed-form distance counts, Hosoya polynomial and Wiener index for the
//! `J(5, m)` Jahangir family, and their check against brute-force BFS.
//!
//! Two printed formulas in the original derivation are wrong and are
//! implemented in corrected form; see [`ERRATA`].

use std::ops::RangeInclusive;

use num_rational::Ratio;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::distances::distance_distribution;
use crate::error::{Error, Result};
use crate::generators::jahangir;
use crate::hosoya::{from_distribution, wiener_from_distribution};
use crate::scalar::ToJson;
use crate::{HosoyaPolynomial, Integer, Rational, RationalPolynomial};

/// Diameter of every `J(5, m)`, `m >= 3`.
pub const J5_DIAMETER: usize = 6;

/// A correction applied to a published formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Erratum {
    /// Stable identifier used in reports.
    pub id: &'static str,
    pub printed: &'static str,
    pub corrected: &'static str,
}

pub const ERRATA: [Erratum; 2] = [
    Erratum {
        id: "eq15",
        printed: "d(J5m, 4) = 4m^2 - 2m",
        corrected: "d(J5m, 4) = 4m(m - 1) = 4m^2 - 4m",
    },
    Erratum {
        id: "eq9",
        printed: "|E| = (2|V2| + 3|V3| + 3|Vm|) / 2",
        corrected: "|E| = (2|V2| + 3|V3| + m|Vm|) / 2 = 6m",
    },
];

fn check_m(m: u64) -> Result<()> {
    if m < 3 {
        return Err(Error::invalid(format!("J(5, m) requires m >= 3, got {m}")));
    }
    Ok(())
}

/// Number of unordered vertex pairs of `J(5, m)` at distance `k`.
///
/// | k | count |
/// |---|-------|
/// | 1 | 6m |
/// | 2 | (m² + 13m)/2 |
/// | 3 | 2m² + 5m |
/// | 4 | 4m² − 4m |
/// | 5 | 4m² − 6m |
/// | 6 | 2m² − 5m |
pub fn j5_distance_count(m: u64, k: usize) -> Result<Integer> {
    check_m(m)?;
    let m = Integer::from(m);
    let sq = &m * &m;
    let count = match k {
        1 => 6 * &m,
        // m(m + 13) is always even
        2 => (&sq + 13 * &m) / 2,
        3 => 2 * &sq + 5 * &m,
        4 => 4 * &sq - 4 * &m,
        5 => 4 * &sq - 6 * &m,
        6 => 2 * &sq - 5 * &m,
        _ => {
            return Err(Error::invalid(format!(
                "distance k must lie in 1..=6 for J(5, m), got {k}"
            )))
        }
    };
    Ok(count)
}

pub fn j5_hosoya(m: u64) -> Result<HosoyaPolynomial> {
    check_m(m)?;
    std::iter::once(Ok(Integer::from(0)))
        .chain((1..=J5_DIAMETER).map(|k| j5_distance_count(m, k)))
        .collect::<Result<Vec<_>>>()
        .map(HosoyaPolynomial::new)
}

/// `W(J(5, m)) = 55m² − 42m`.
pub fn j5_wiener(m: u64) -> Result<Integer> {
    check_m(m)?;
    let m = Integer::from(m);
    Ok(55 * &m * &m - 42 * &m)
}

/// The per-distance counts as polynomials in `m`, for `k = 1..=6`.
pub fn j5_count_polynomials() -> Vec<RationalPolynomial> {
    let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
    [
        [r(0, 1), r(6, 1), r(0, 1)],
        [r(0, 1), r(13, 2), r(1, 2)],
        [r(0, 1), r(5, 1), r(2, 1)],
        [r(0, 1), r(-4, 1), r(4, 1)],
        [r(0, 1), r(-6, 1), r(4, 1)],
        [r(0, 1), r(-5, 1), r(2, 1)],
    ]
    .into_iter()
    .map(|cs| RationalPolynomial::new(cs.to_vec()))
    .collect()
}

/// `55m² − 42m` as a polynomial in `m`.
pub fn j5_wiener_polynomial() -> RationalPolynomial {
    RationalPolynomial::new(vec![
        Ratio::from_integer(0.into()),
        Ratio::from_integer((-42).into()),
        Ratio::from_integer(55.into()),
    ])
}

/// Vertex counts of `J(5, m)` grouped by role.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreePartition {
    /// Degree-2 cycle vertices.
    pub periphery: u64,
    /// Degree-3 cycle vertices joined to the center.
    pub hubs: u64,
    /// The center, of degree `m`.
    pub center: u64,
    m: u64,
}

impl DegreePartition {
    /// Edge count from the handshake lemma: `(2·periphery + 3·hubs + m·center) / 2`.
    pub fn handshake_edges(&self) -> u64 {
        (2 * self.periphery + 3 * self.hubs + self.m * self.center) / 2
    }

    pub fn vertex_count(&self) -> u64 {
        self.periphery + self.hubs + self.center
    }
}

pub fn j5_degree_partition(m: u64) -> Result<DegreePartition> {
    check_m(m)?;
    Ok(DegreePartition {
        periphery: 4 * m,
        hubs: m,
        center: 1,
        m,
    })
}

/// Everything the closed forms say about one `J(5, m)`.
#[derive(Debug, Clone, PartialEq)]
pub struct J5Report {
    pub m: u64,
    /// `d(J(5, m), k)` for `k = 1..=6`.
    pub per_k_counts: Vec<Integer>,
    pub hosoya: HosoyaPolynomial,
    pub wiener: Integer,
    pub degree_partition: DegreePartition,
}

impl J5Report {
    pub fn new(m: u64) -> Result<Self> {
        Ok(J5Report {
            m,
            per_k_counts: (1..=J5_DIAMETER)
                .map(|k| j5_distance_count(m, k))
                .collect::<Result<_>>()?,
            hosoya: j5_hosoya(m)?,
            wiener: j5_wiener(m)?,
            degree_partition: j5_degree_partition(m)?,
        })
    }
}

/// Closed form vs. brute force for one `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleCheck {
    pub m: u64,
    pub closed_form: HosoyaPolynomial,
    pub oracle: HosoyaPolynomial,
    pub wiener_closed: Integer,
    pub wiener_oracle: Integer,
    /// Smallest exponent whose coefficients differ.
    pub first_mismatch: Option<usize>,
}

impl OracleCheck {
    pub fn pass(&self) -> bool {
        self.first_mismatch.is_none() && self.wiener_closed == self.wiener_oracle
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "pass": self.pass(),
            "closed_form": self.closed_form.to_json(),
            "oracle": self.oracle.to_json(),
            "wiener_closed": self.wiener_closed.to_json(),
            "wiener_oracle": self.wiener_oracle.to_json(),
            "first_mismatch": self.first_mismatch,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    /// One entry per `m`, ascending.
    pub results: Vec<OracleCheck>,
    pub errata: Vec<Erratum>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(OracleCheck::pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &OracleCheck> {
        self.results.iter().filter(|r| !r.pass())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": "jahangir",
            "n": 5,
            "results": self.results.iter().map(OracleCheck::to_json).collect::<Vec<_>>(),
            "errata": self.errata.iter().map(|e| e.id).collect::<Vec<_>>(),
        })
    }
}

fn check_one(m: u64) -> Result<OracleCheck> {
    let m_usize = usize::try_from(m).map_err(|_| Error::invalid(format!("m = {m} is too large")))?;
    let dd = distance_distribution(&jahangir(5, m_usize)?)?;
    Ok(compare(m, j5_hosoya(m)?, j5_wiener(m)?, &dd))
}

fn compare(
    m: u64,
    closed_form: HosoyaPolynomial,
    wiener_closed: Integer,
    dd: &crate::DistanceDistribution,
) -> OracleCheck {
    let oracle: HosoyaPolynomial = from_distribution(dd);
    let wiener_oracle = wiener_from_distribution(dd);
    let len = closed_form.coefficients().len().max(oracle.coefficients().len());
    let first_mismatch = (0..len).find(|&k| closed_form.coefficient(k) != oracle.coefficient(k));
    OracleCheck {
        m,
        closed_form,
        oracle,
        wiener_closed,
        wiener_oracle,
        first_mismatch,
    }
}

/// Compares the closed forms with BFS on `J(5, m)` for every `m` in the
/// range. Values of `m` are checked in parallel; the report is in `m` order.
pub fn verify_against_oracle(m_range: RangeInclusive<u64>) -> Result<VerificationReport> {
    if m_range.is_empty() {
        return Err(Error::invalid(format!(
            "empty m range {}..{}",
            m_range.start(),
            m_range.end()
        )));
    }
    check_m(*m_range.start())?;
    let results = m_range.into_par_iter().map(check_one).collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport {
        results,
        errata: ERRATA.to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    #[test]
    fn counts() {
        assert_eq!(j5_distance_count(6, 2).unwrap(), int(57));
        assert_eq!(j5_distance_count(3, 1).unwrap(), int(18));
        assert_eq!(j5_distance_count(3, 4).unwrap(), int(24));
        assert!(j5_distance_count(3, 0).is_err());
        assert!(j5_distance_count(3, 7).is_err());
        assert!(j5_distance_count(2, 1).is_err());
    }

    #[test]
    fn hosoya_and_wiener() {
        assert_eq!(
            j5_hosoya(6).unwrap().to_string(),
            "36x + 57x^2 + 102x^3 + 120x^4 + 108x^5 + 42x^6"
        );
        assert_eq!(
            j5_hosoya(3).unwrap().to_string(),
            "18x + 24x^2 + 33x^3 + 24x^4 + 18x^5 + 3x^6"
        );
        assert_eq!(
            j5_hosoya(4).unwrap().to_string(),
            "24x + 34x^2 + 52x^3 + 48x^4 + 40x^5 + 12x^6"
        );
        assert_eq!(j5_wiener(6).unwrap(), int(1728));
        assert_eq!(j5_wiener(3).unwrap(), int(369));
        assert_eq!(j5_wiener(4).unwrap(), int(712));
        assert!(j5_wiener(2).is_err());
        assert!(j5_hosoya(1).is_err());
    }

    #[test]
    fn partition() {
        let p = j5_degree_partition(6).unwrap();
        assert_eq!((p.periphery, p.hubs, p.center), (24, 6, 1));
        let p = j5_degree_partition(3).unwrap();
        assert_eq!((p.periphery, p.hubs, p.center), (12, 3, 1));
        let p = j5_degree_partition(10).unwrap();
        assert_eq!((p.periphery, p.hubs, p.center), (40, 10, 1));
        assert_eq!(p.handshake_edges(), 60);
        assert_eq!(p.vertex_count(), 51);
        assert!(j5_degree_partition(2).is_err());
    }

    #[test]
    fn conservation_and_identity() {
        for m in 3..=100u64 {
            let h = j5_hosoya(m).unwrap();
            let n = 5 * m + 1;
            assert_eq!(h.evaluate(&int(1)), Integer::from(n * (n - 1) / 2), "m = {m}");
            assert_eq!(h.derivative_at_one(), j5_wiener(m).unwrap(), "m = {m}");
            assert_eq!(j5_degree_partition(m).unwrap().handshake_edges(), 6 * m);
        }
    }

    #[test]
    fn polynomial_forms_agree_with_direct_formulas() {
        let polys = j5_count_polynomials();
        for m in 3..=100u64 {
            let at = Rational::from_integer(m.into());
            for (i, p) in polys.iter().enumerate() {
                let want = Rational::from_integer(j5_distance_count(m, i + 1).unwrap());
                assert_eq!(p.evaluate(&at), want);
            }
            assert_eq!(
                j5_wiener_polynomial().evaluate(&at),
                Rational::from_integer(j5_wiener(m).unwrap())
            );
        }
    }

    #[test]
    fn report() {
        let r = J5Report::new(6).unwrap();
        assert_eq!(r.per_k_counts.iter().sum::<Integer>(), int(465));
        assert_eq!(r.per_k_counts[0], int(36));
        assert_eq!(r.wiener, r.hosoya.derivative_at_one());
    }

    #[test]
    fn verify_small_ranges() {
        let r = verify_against_oracle(3..=3).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.results.len(), 1);
        let ids: Vec<_> = r.errata.iter().map(|e| e.id).collect();
        assert_eq!(ids, ["eq15", "eq9"]);
        assert!(matches!(verify_against_oracle(2..=5), Err(Error::InvalidParameter(_))));
        assert!(matches!(
            verify_against_oracle(RangeInclusive::new(5, 4)),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn report_json_shape() {
        let v = verify_against_oracle(3..=4).unwrap().to_json();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["family", "n", "results", "errata"]);
        assert_eq!(v["results"][0]["oracle"].to_string(), "[0,18,24,33,24,18,3]");
        assert_eq!(v["results"][1]["wiener_oracle"], 712);
        assert_eq!(v["errata"].to_string(), r#"["eq15","eq9"]"#);
    }

    #[test]
    fn mismatch_reporting() {
        let dd = distance_distribution(&jahangir(5, 4).unwrap()).unwrap();
        // the uncorrected distance-4 count 4m^2 - 2m
        let printed: HosoyaPolynomial = (0..=6)
            .map(|k| match k {
                0 => int(0),
                4 => int(4 * 16 - 2 * 4),
                k => j5_distance_count(4, k).unwrap(),
            })
            .collect();
        let check = compare(4, printed, j5_wiener(4).unwrap(), &dd);
        assert_eq!(check.first_mismatch, Some(4));
        assert!(!check.pass());
        assert_eq!(check.to_json()["pass"], false);
        assert_eq!(check.to_json()["first_mismatch"], 4);

        let check = compare(4, j5_hosoya(4).unwrap(), int(713), &dd);
        assert_eq!(check.first_mismatch, None);
        assert!(!check.pass());
    }
}
