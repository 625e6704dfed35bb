//! Text forms of rationals: `"num/den"` for JSON, reduced `3/2` or `3` for
//! display.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::Rational;

/// Always `num/den`, e.g. `"3/1"`, `"-1/2"`.
pub fn to_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Integers without a denominator.
pub fn to_display(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        to_string(q)
    }
}

/// Accepts `"3"`, `"3/1"`, `"-6/4"` (reduced on parse).
pub fn parse(s: &str) -> Result<Rational> {
    let bad = |why: &str| Error::Parse(format!("rational {s:?}: {why}"));
    let (num, den) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| bad("bad denominator"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}
