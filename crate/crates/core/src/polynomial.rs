//! Dense univariate polynomials over a [`Scalar`].

use std::fmt;

use num_traits::Zero;

use crate::scalar::{Scalar, ToJson};

/// Polynomial with coefficients indexed by exponent, starting at 0.
///
/// Trailing zero coefficients are always trimmed, so structural equality is
/// polynomial equality and the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coefficients: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coefficients: Vec<T>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Polynomial { coefficients }
    }

    pub fn zero() -> Self {
        Polynomial {
            coefficients: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Largest exponent with a nonzero coefficient; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coefficients
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coefficient(&self, k: usize) -> T {
        self.coefficients.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading_coefficient(&self) -> Option<&T> {
        self.coefficients.last()
    }

    /// Horner evaluation.
    pub fn evaluate(&self, at: &T) -> T {
        self.coefficients
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    /// `p'(1) = Σ k · c_k`.
    pub fn derivative_at_one(&self) -> T {
        self.coefficients
            .iter()
            .enumerate()
            .skip(1)
            .fold(T::zero(), |acc, (k, c)| acc + from_index::<T>(k) * c.clone())
    }

    pub fn derivative(&self) -> Self {
        Polynomial::new(
            self.coefficients
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| from_index::<T>(k) * c.clone())
                .collect(),
        )
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coefficients.iter().map(f).collect())
    }

    /// Renders ascending powers of `var`, e.g. `36x + 57x^2`, omitting zero
    /// terms. Negative coefficients print as subtraction; coefficients whose
    /// rendering contains `/` are parenthesized.
    pub fn display_in<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        Display { poly: self, var }
    }
}

fn from_index<T: Scalar>(k: usize) -> T {
    T::from_usize(k).expect("exponent fits in the scalar type")
}

impl<T: Scalar> Default for Polynomial<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> FromIterator<T> for Polynomial<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        Polynomial::new(iter.into_iter().collect())
    }
}

impl<T: Scalar> std::ops::Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        (0..len).map(|k| self.coefficient(k) + rhs.coefficient(k)).collect()
    }
}

impl<T: Scalar> std::ops::Mul<&T> for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: &T) -> Polynomial<T> {
        self.coefficients.iter().map(|c| c.clone() * rhs.clone()).collect()
    }
}

struct Display<'a, T> {
    poly: &'a Polynomial<T>,
    var: &'a str,
}

impl<T: Scalar> fmt::Display for Display<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.poly.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = *c < T::zero();
            let magnitude = if negative { T::zero() - c.clone() } else { c.clone() };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;

            let text = magnitude.to_string();
            if k == 0 {
                f.write_str(&text)?;
                continue;
            }
            if !magnitude.is_one() {
                if text.contains('/') {
                    write!(f, "({text})")?;
                } else {
                    f.write_str(&text)?;
                }
            }
            f.write_str(self.var)?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_in("x").fmt(f)
    }
}

impl<T: Scalar + ToJson> Polynomial<T> {
    /// Coefficient array from exponent 0.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coefficients.iter().map(ToJson::to_json).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::Ratio;

    fn int(cs: &[i64]) -> Polynomial<BigInt> {
        cs.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = int(&[0, 1, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p, int(&[0, 1]));
        assert!(int(&[0, 0]).is_zero());
        assert_eq!(int(&[]).degree(), None);
    }

    #[test]
    fn evaluation() {
        let h = int(&[0, 36, 57, 102, 120, 108, 42]);
        assert_eq!(h.evaluate(&BigInt::from(1)), BigInt::from(465));
        assert_eq!(h.derivative_at_one(), BigInt::from(1728));
        assert_eq!(h.derivative().evaluate(&BigInt::from(1)), BigInt::from(1728));
        assert_eq!(int(&[]).evaluate(&BigInt::from(9)), BigInt::from(0));
        assert_eq!(int(&[0, 1]).evaluate(&BigInt::from(5)), BigInt::from(5));
        assert_eq!(int(&[0, 1]).derivative_at_one(), BigInt::from(1));
        // 2 - 3x + x^2 at -2
        assert_eq!(int(&[2, -3, 1]).evaluate(&BigInt::from(-2)), BigInt::from(12));
    }

    #[test]
    fn generic_over_machine_scalars() {
        let p: Polynomial<i64> = Polynomial::new(vec![0, 18, 24, 33, 24, 18, 3]);
        assert_eq!(p.derivative_at_one(), 369);
        let q: Polynomial<f64> = Polynomial::new(vec![0.0, 0.5, 0.25]);
        assert_eq!(q.evaluate(&2.0), 2.0);
    }

    #[test]
    fn text_rendering() {
        assert_eq!(
            int(&[0, 36, 57, 102, 120, 108, 42]).to_string(),
            "36x + 57x^2 + 102x^3 + 120x^4 + 108x^5 + 42x^6"
        );
        assert_eq!(int(&[0, 1]).to_string(), "x");
        assert_eq!(int(&[]).to_string(), "0");
        assert_eq!(int(&[-1, 0, -5, 2]).to_string(), "-1 - 5x^2 + 2x^3");
        assert_eq!(int(&[0, -5, 2]).display_in("m").to_string(), "-5m + 2m^2");
        let half: Polynomial<Ratio<i64>> = Polynomial::new(vec![Ratio::from(0), Ratio::new(13, 2), Ratio::new(1, 2)]);
        assert_eq!(half.display_in("m").to_string(), "(13/2)m + (1/2)m^2");
    }

    #[test]
    fn json_rendering() {
        assert_eq!(int(&[0, 1, 2]).to_json().to_string(), "[0,1,2]");
        let r: Polynomial<Ratio<i64>> = Polynomial::new(vec![Ratio::new(1, 2)]);
        assert_eq!(r.to_json().to_string(), r#"[{"num":1,"den":2}]"#);
        let big: Polynomial<BigInt> = Polynomial::new(vec![BigInt::from(10).pow(30)]);
        assert_eq!(big.to_json().to_string(), "[1000000000000000000000000000000]");
    }

    #[test]
    fn arithmetic() {
        let a = int(&[1, 2]);
        let b = int(&[0, -2, 3]);
        assert_eq!(&a + &b, int(&[1, 0, 3]));
        assert_eq!(&a * &BigInt::from(0), int(&[]));
    }
}
