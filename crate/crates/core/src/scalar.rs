//! Scalar abstractions shared by the polynomial and interpolation code.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// A coefficient type for [`Polynomial`](crate::Polynomial).
///
/// Integer scalars (`i64`, `BigInt`) are enough for Hosoya polynomials;
/// interpolation needs a [`Field`].
pub trait Scalar: Num + Clone + Debug + Display + PartialOrd + FromPrimitive {}

impl<T> Scalar for T where T: Num + Clone + Debug + Display + PartialOrd + FromPrimitive {}

/// Scalars with exact or approximate division.
///
/// Implemented for the rational types and for `f32`/`f64`. Integers are
/// deliberately excluded since `Div` truncates there.
pub trait Field: Scalar + Signed {
    /// Whether arithmetic in this field is exact.
    const EXACT: bool;
}

impl<T> Field for Ratio<T>
where
    T: Clone + Integer + Signed + Debug + Display + FromPrimitive,
    Ratio<T>: FromPrimitive,
{
    const EXACT: bool = true;
}

impl Field for f32 {
    const EXACT: bool = false;
}

impl Field for f64 {
    const EXACT: bool = false;
}

/// Conversion into a JSON value, exact for integers and rationals.
pub trait ToJson {
    fn to_json(&self) -> serde_json::Value;
}

fn json_integer(digits: String) -> serde_json::Value {
    // arbitrary_precision keeps big integers verbatim
    serde_json::Value::Number(digits.parse().expect("integer literal is valid JSON"))
}

macro_rules! int_to_json {
    ($($t:ty)*) => ($(
        impl ToJson for $t {
            fn to_json(&self) -> serde_json::Value {
                json_integer(self.to_string())
            }
        }
    )*)
}

int_to_json!(i32 i64 i128 u32 u64 u128 usize BigInt);

impl<T> ToJson for Ratio<T>
where
    T: ToJson + Clone + Integer,
{
    fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "num": self.numer().to_json(), "den": self.denom().to_json() })
    }
}

impl ToJson for f64 {
    fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self)
    }
}

impl ToJson for f32 {
    fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self)
    }
}
