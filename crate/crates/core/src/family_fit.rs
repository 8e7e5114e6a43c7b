//! Recovering per-distance count formulas for a parametric graph family by
//! exact interpolation over sampled family members.
//!
//! The workflow: [`sample_counts`] runs BFS on a few members, [`fit`]
//! interpolates each distance layer's count as a polynomial in the family
//! parameter, and [`verify_formula`] checks the result on held-out members.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::distances::{distance_distribution, DistanceDistribution};
use crate::error::{Error, Result};
use crate::generators;
use crate::graph::Graph;
use crate::polynomial::Polynomial;
use crate::scalar::{Field, ToJson};

/// A graph family indexed by one integer parameter `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `J(n, m)` with fixed spacing `n`.
    Jahangir { n: usize },
    /// `m` is the cycle length.
    Cycle,
    /// `m` is the vertex count.
    Path,
    /// `m` is the number of leaves.
    Star,
    /// `m` is the vertex count.
    Complete,
    /// `m` is the number of spokes.
    Wheel,
    /// `m` is the vertex count.
    RandomConnected { edge_probability: Ratio<u64>, seed: u64 },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Jahangir { .. } => "jahangir",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Star => "star",
            Family::Complete => "complete",
            Family::Wheel => "wheel",
            Family::RandomConnected { .. } => "random",
        }
    }

    pub fn generate(&self, m: u64) -> Result<Graph> {
        let k = usize::try_from(m).map_err(|_| Error::invalid(format!("parameter {m} is too large")))?;
        match *self {
            Family::Jahangir { n } => generators::jahangir(n, k),
            Family::Cycle => generators::cycle(k),
            Family::Path => generators::path(k),
            Family::Star => generators::star(k),
            Family::Complete => generators::complete(k),
            Family::Wheel => generators::wheel(k),
            Family::RandomConnected { edge_probability, seed } => {
                generators::random_connected(k, edge_probability, seed)
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Family::Jahangir { n } => json!({ "name": self.name(), "n": n }),
            Family::RandomConnected { edge_probability, seed } => json!({
                "name": self.name(),
                "edge_probability": edge_probability.to_json(),
                "seed": seed,
            }),
            _ => json!({ "name": self.name() }),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Jahangir { n } => write!(f, "jahangir(n={n})"),
            Family::RandomConnected { edge_probability, seed } => {
                write!(f, "random(p={edge_probability}, seed={seed})")
            }
            other => f.write_str(other.name()),
        }
    }
}

/// Observed distance distributions keyed by family parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleTable {
    family: Family,
    rows: BTreeMap<u64, DistanceDistribution>,
}

impl SampleTable {
    pub fn new(family: Family) -> Self {
        SampleTable {
            family,
            rows: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, m: u64, distribution: DistanceDistribution) -> Result<()> {
        if self.rows.contains_key(&m) {
            return Err(Error::DuplicateSampleParameter(m));
        }
        self.rows.insert(m, distribution);
        Ok(())
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Sampled parameters, ascending.
    pub fn parameters(&self) -> impl Iterator<Item = u64> + '_ {
        self.rows.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Largest distance observed in any sample.
    pub fn max_k(&self) -> usize {
        self.rows.values().map(|d| d.diameter()).max().unwrap_or(0)
    }

    /// Pair count at distance `k` for parameter `m`; distances beyond a
    /// sample's own diameter read as 0.
    pub fn count(&self, m: u64, k: usize) -> Option<u64> {
        self.rows.get(&m).map(|d| d.count(k))
    }

    pub fn distribution(&self, m: u64) -> Option<&DistanceDistribution> {
        self.rows.get(&m)
    }
}

/// Brute-force distance distributions for each requested family member.
pub fn sample_counts(family: Family, m_values: &[u64]) -> Result<SampleTable> {
    let mut table = SampleTable::new(family);
    let mut seen = std::collections::BTreeSet::new();
    if let Some(&dup) = m_values.iter().find(|&&m| !seen.insert(m)) {
        return Err(Error::DuplicateSampleParameter(dup));
    }
    let rows = m_values
        .par_iter()
        .map(|&m| Ok((m, distance_distribution(&family.generate(m)?)?)))
        .collect::<Result<Vec<_>>>()?;
    for (m, dd) in rows {
        table.insert(m, dd)?;
    }
    Ok(table)
}

/// Per-distance count polynomials in the family parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyFormula<F> {
    pub family: Family,
    pub fitted_degree: usize,
    /// `per_k[k - 1]` gives the number of pairs at distance `k`.
    pub per_k: Vec<Polynomial<F>>,
    /// Parameters the formula was fitted on, ascending.
    pub valid_domain: Vec<u64>,
}

impl<F: Field> FamilyFormula<F> {
    pub fn max_k(&self) -> usize {
        self.per_k.len()
    }

    /// Polynomial for distance `k`; zero past `max_k`.
    pub fn count_polynomial(&self, k: usize) -> Polynomial<F> {
        match k {
            0 => Polynomial::zero(),
            k => self.per_k.get(k - 1).cloned().unwrap_or_default(),
        }
    }

    pub fn predict(&self, m: u64, k: usize) -> F {
        self.count_polynomial(k).evaluate(&scalar(m))
    }

    /// Wiener index as a polynomial in the parameter: `Σ_k k · p_k(m)`.
    pub fn wiener_polynomial(&self) -> Polynomial<F> {
        self.per_k.iter().enumerate().fold(Polynomial::zero(), |acc, (i, p)| {
            &acc + &(p * &scalar::<F>(i as u64 + 1))
        })
    }

    /// Total pair count `Σ_k p_k(m)`.
    pub fn pair_polynomial(&self) -> Polynomial<F> {
        self.per_k.iter().fold(Polynomial::zero(), |acc, p| &acc + p)
    }
}

impl<F: Field + ToJson> FamilyFormula<F> {
    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family.to_json(),
            "degree": self.fitted_degree,
            "valid_domain": self.valid_domain,
            "max_k": self.max_k(),
            "per_k": self
                .per_k
                .iter()
                .enumerate()
                .map(|(i, p)| json!({ "k": i + 1, "coefficients": p.to_json() }))
                .collect::<Vec<_>>(),
            "wiener": self.wiener_polynomial().to_json(),
        })
    }
}

impl<F: Field> fmt::Display for FamilyFormula<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "family {} fitted with degree {} on m = {:?}",
            self.family, self.fitted_degree, self.valid_domain
        )?;
        for (i, p) in self.per_k.iter().enumerate() {
            writeln!(f, "d({}) = {}", i + 1, p.display_in("m"))?;
        }
        write!(f, "W = {}", self.wiener_polynomial().display_in("m"))
    }
}

fn scalar<F: Field>(v: u64) -> F {
    F::from_u64(v).expect("parameter representable in the field")
}

/// Newton divided differences through `(xs[i], ys[i])`, expanded to the
/// monomial basis.
fn interpolate<F: Field>(xs: &[F], ys: &[F]) -> Polynomial<F> {
    let n = xs.len();
    let mut table = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            table[i] = (table[i].clone() - table[i - 1].clone()) / (xs[i].clone() - xs[i - level].clone());
        }
    }
    // nested form: c0 + (x - x0)(c1 + (x - x1)(c2 + ...))
    let mut coeffs: Vec<F> = Vec::with_capacity(n);
    for j in (0..n).rev() {
        // coeffs := coeffs * (x - xs[j]) + table[j]
        let mut next = vec![F::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = next[i + 1].clone() + c.clone();
            next[i] = next[i].clone() - c.clone() * xs[j].clone();
        }
        next[0] = next[0].clone() + table[j].clone();
        coeffs = next;
    }
    Polynomial::new(coeffs)
}

/// Fits a polynomial of degree at most `degree` to every distance layer.
///
/// Interpolates through the `degree + 1` smallest sampled parameters; any
/// further samples must be reproduced exactly or the fit fails with
/// [`Error::SampleNotReproduced`]. Samples whose diameter is below the
/// table's `max_k` count as 0 at the missing distances.
pub fn fit<F: Field>(samples: &SampleTable, degree: usize) -> Result<FamilyFormula<F>> {
    let needed = degree + 1;
    if samples.len() < needed {
        return Err(Error::InsufficientSamples {
            degree,
            needed,
            got: samples.len(),
        });
    }
    let params: Vec<u64> = samples.parameters().collect();
    let xs: Vec<F> = params[..needed].iter().map(|&m| scalar(m)).collect();

    let mut per_k = Vec::with_capacity(samples.max_k());
    for k in 1..=samples.max_k() {
        let ys: Vec<F> = params[..needed]
            .iter()
            .map(|&m| scalar(samples.count(m, k).unwrap()))
            .collect();
        let poly = interpolate(&xs, &ys);
        for &m in &params {
            let observed = scalar::<F>(samples.count(m, k).unwrap());
            if !agrees(&poly.evaluate(&scalar(m)), &observed) {
                return Err(Error::SampleNotReproduced { m, k });
            }
        }
        per_k.push(poly);
    }
    Ok(FamilyFormula {
        family: samples.family(),
        fitted_degree: degree,
        per_k,
        valid_domain: params,
    })
}

/// Exact equality for exact fields, a relative tolerance otherwise.
fn agrees<F: Field>(a: &F, b: &F) -> bool {
    if F::EXACT {
        return a == b;
    }
    let diff = (a.clone() - b.clone()).abs();
    let scale = a.abs().max_ref(&b.abs()).max_ref(&F::one());
    diff <= scale * F::from_f64(1e-9).unwrap_or_else(F::zero)
}

trait MaxRef: Sized {
    fn max_ref(self, other: &Self) -> Self;
}

impl<F: PartialOrd + Clone> MaxRef for F {
    fn max_ref(self, other: &Self) -> Self {
        if *other > self {
            other.clone()
        } else {
            self
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch<F> {
    pub m: u64,
    pub k: usize,
    pub predicted: F,
    pub observed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FormulaCheck<F> {
    pub holdout: Vec<u64>,
    pub comparisons: usize,
    pub mismatches: Vec<Mismatch<F>>,
}

impl<F> FormulaCheck<F> {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl<F: ToJson> FormulaCheck<F> {
    pub fn to_json(&self) -> Value {
        json!({
            "holdout": self.holdout,
            "pass": self.pass(),
            "comparisons": self.comparisons,
            "mismatches": self
                .mismatches
                .iter()
                .map(|x| json!({
                    "m": x.m,
                    "k": x.k,
                    "predicted": x.predicted.to_json(),
                    "observed": x.observed,
                }))
                .collect::<Vec<_>>(),
        })
    }
}

/// Compares predictions with brute-force counts on held-out parameters.
///
/// Every distance from 1 up to the larger of the formula's `max_k` and the
/// holdout graph's diameter is compared.
pub fn verify_formula<F: Field>(formula: &FamilyFormula<F>, holdout: &[u64]) -> Result<FormulaCheck<F>> {
    if let Some(m) = holdout.iter().find(|m| formula.valid_domain.contains(m)) {
        return Err(Error::invalid(format!(
            "holdout parameter {m} was used to fit the formula"
        )));
    }
    let observed = sample_counts(formula.family, holdout)?;
    let mut comparisons = 0;
    let mut mismatches = Vec::new();
    for &m in holdout {
        let dd = observed.distribution(m).expect("sampled above");
        for k in 1..=formula.max_k().max(dd.diameter()) {
            comparisons += 1;
            let predicted = formula.predict(m, k);
            let count = dd.count(k);
            if !agrees(&predicted, &scalar(count)) {
                mismatches.push(Mismatch {
                    m,
                    k,
                    predicted,
                    observed: count,
                });
            }
        }
    }
    Ok(FormulaCheck {
        holdout: holdout.to_vec(),
        comparisons,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type Q = Ratio<i64>;

    fn j5() -> Family {
        Family::Jahangir { n: 5 }
    }

    /// Lagrange form evaluated pointwise, independent of the Newton route.
    fn lagrange_at(xs: &[Q], ys: &[Q], at: Q) -> Q {
        let mut total = Q::from(0);
        for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
            let mut term = *yi;
            for (j, xj) in xs.iter().enumerate() {
                if i != j {
                    term = term * (at - xj) / (xi - xj);
                }
            }
            total += term;
        }
        total
    }

    #[test]
    fn interpolation_matches_lagrange() {
        let xs: Vec<Q> = [1, 3, 4, 7].map(Q::from).to_vec();
        let ys: Vec<Q> = [2, -1, 5, 0].map(Q::from).to_vec();
        let p = interpolate(&xs, &ys);
        assert!(p.degree().unwrap() <= 3);
        for t in -5..12 {
            assert_eq!(p.evaluate(&Q::from(t)), lagrange_at(&xs, &ys, Q::from(t)));
        }
    }

    #[test]
    fn sample_rows() {
        let t = sample_counts(j5(), &[6]).unwrap();
        assert_eq!(t.distribution(6).unwrap().by_distance(), &[36, 57, 102, 120, 108, 42]);
        let t = sample_counts(j5(), &[3]).unwrap();
        assert_eq!(t.distribution(3).unwrap().by_distance(), &[18, 24, 33, 24, 18, 3]);
        let t = sample_counts(Family::Cycle, &[5]).unwrap();
        assert_eq!(t.distribution(5).unwrap().by_distance(), &[5, 5]);
        assert_eq!(sample_counts(j5(), &[3, 4, 3]), Err(Error::DuplicateSampleParameter(3)));
        assert!(matches!(sample_counts(j5(), &[2]), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn fit_j5_layers() {
        let t = sample_counts(j5(), &[3, 4, 5]).unwrap();
        let f: FamilyFormula<Rational> = fit(&t, 2).unwrap();
        assert_eq!(f.max_k(), 6);
        assert_eq!(f.count_polynomial(6).display_in("m").to_string(), "-5m + 2m^2");
        assert_eq!(f.count_polynomial(4).display_in("m").to_string(), "-4m + 4m^2");
        assert_eq!(f.count_polynomial(2).display_in("m").to_string(), "(13/2)m + (1/2)m^2");
        assert_eq!(f.wiener_polynomial().display_in("m").to_string(), "-42m + 55m^2");
    }

    #[test]
    fn fit_is_generic_over_fields() {
        let t = sample_counts(j5(), &[3, 4, 5]).unwrap();
        let small: FamilyFormula<Q> = fit(&t, 2).unwrap();
        assert_eq!(
            small.count_polynomial(2).coefficients(),
            &[Q::from(0), Q::new(13, 2), Q::new(1, 2)]
        );
        let approx: FamilyFormula<f64> = fit(&t, 2).unwrap();
        let w = approx.wiener_polynomial();
        assert!((w.coefficient(2) - 55.0).abs() < 1e-9);
        assert!((w.coefficient(1) + 42.0).abs() < 1e-9);
        assert!(verify_formula(&approx, &[9]).unwrap().pass());
    }

    #[test]
    fn constant_family() {
        let dd = DistanceDistribution::from_counts([5, 5]);
        let mut t = SampleTable::new(Family::Cycle);
        t.insert(1, dd.clone()).unwrap();
        t.insert(2, dd.clone()).unwrap();
        assert_eq!(t.insert(2, dd), Err(Error::DuplicateSampleParameter(2)));
        let f: FamilyFormula<Q> = fit(&t, 0).unwrap();
        assert_eq!(f.count_polynomial(1).coefficients(), &[Q::from(5)]);
        assert_eq!(f.count_polynomial(2).coefficients(), &[Q::from(5)]);
    }

    #[test]
    fn fit_errors() {
        let t = sample_counts(j5(), &[3, 4]).unwrap();
        assert_eq!(
            fit::<Q>(&t, 2),
            Err(Error::InsufficientSamples {
                degree: 2,
                needed: 3,
                got: 2
            })
        );
        // a line through m = 3, 4 misses the quadratic at m = 5
        let t = sample_counts(j5(), &[3, 4, 5]).unwrap();
        assert!(matches!(fit::<Q>(&t, 1), Err(Error::SampleNotReproduced { m: 5, .. })));
        // extra samples that do lie on the curve are accepted
        let t = sample_counts(j5(), &[3, 4, 5, 9]).unwrap();
        assert_eq!(fit::<Q>(&t, 2).unwrap().valid_domain, vec![3, 4, 5, 9]);
    }

    #[test]
    fn missing_layers_read_as_zero() {
        // cycle diameters grow with length: C3 has no distance-2 pairs
        let t = sample_counts(Family::Cycle, &[3, 4, 5]).unwrap();
        assert_eq!(t.max_k(), 2);
        assert_eq!(t.count(3, 2), Some(0));
        let f: FamilyFormula<Q> = fit(&t, 2).unwrap();
        assert_eq!(f.predict(3, 2), Q::from(0));
        assert_eq!(f.predict(4, 2), Q::from(2));
    }

    #[test]
    fn verify_cases() {
        let t = sample_counts(j5(), &[3, 4, 5]).unwrap();
        let f: FamilyFormula<Q> = fit(&t, 2).unwrap();
        let check = verify_formula(&f, &[6]).unwrap();
        assert!(check.pass());
        assert_eq!(check.comparisons, 6);
        let empty = verify_formula(&f, &[]).unwrap();
        assert!(empty.pass());
        assert_eq!(empty.comparisons, 0);
        assert!(matches!(verify_formula(&f, &[5]), Err(Error::InvalidParameter(_))));

        // underfit: line through m = 3, 4 only
        let t = sample_counts(j5(), &[3, 4]).unwrap();
        let line: FamilyFormula<Q> = fit(&t, 1).unwrap();
        let check = verify_formula(&line, &[6]).unwrap();
        assert!(!check.pass());
        assert!(check.mismatches.iter().any(|x| x.k == 6 && x.observed == 42));
    }

    #[test]
    fn verify_compares_layers_beyond_formula() {
        let t = sample_counts(Family::Path, &[2, 3]).unwrap();
        let f: FamilyFormula<Q> = fit(&t, 1).unwrap();
        // path(5) has distances up to 4 but the formula only knows k <= 2
        let check = verify_formula(&f, &[5]).unwrap();
        assert_eq!(check.comparisons, 4);
        assert!(check.mismatches.iter().any(|x| x.k == 4 && x.observed == 1));
    }

    #[test]
    fn json_layout() {
        let t = sample_counts(j5(), &[3, 4, 5]).unwrap();
        let f: FamilyFormula<Rational> = fit(&t, 2).unwrap();
        let v = f.to_json();
        assert_eq!(v["family"].to_string(), r#"{"name":"jahangir","n":5}"#);
        assert_eq!(
            v["per_k"][1]["coefficients"].to_string(),
            r#"[{"num":0,"den":1},{"num":13,"den":2},{"num":1,"den":2}]"#
        );
        assert_eq!(v["per_k"][1]["k"], 2);
    }
}
