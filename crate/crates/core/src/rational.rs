//! Exact rational scalars and their text/JSON renderings.
//!
//! Every numeric quantity in this crate is an arbitrary-precision rational;
//! decimals never appear in any output.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the reduced fraction `num/den`.
///
/// Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Render a rational as `p/q`, collapsing to `p` when the denominator is one.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A big integer as a JSON number when it fits, else a decimal string.
pub(crate) fn bigint_json(v: &BigInt) -> Value {
    i64::try_from(v)
        .map(Value::from)
        .or_else(|_| u64::try_from(v).map(Value::from))
        .unwrap_or_else(|_| Value::from(v.to_string()))
}

pub(crate) fn biguint_json(v: &BigUint) -> Value {
    u64::try_from(v)
        .map(Value::from)
        .unwrap_or_else(|_| Value::from(v.to_string()))
}

/// A rational as the JSON object `{"num": p, "den": q}`.
pub(crate) fn rational_json(r: &Rational) -> Value {
    json!({ "num": bigint_json(r.numer()), "den": bigint_json(r.denom()) })
}
