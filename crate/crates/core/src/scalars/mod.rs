//! Exact scalars: rationals, cyclotomic fields Q(ζ_N) and Laurent
//! polynomials in a framing variable `t`.

mod cyclotomic;
mod laurent;
mod poly;

pub use cyclotomic::{Cyclotomic, CyclotomicField};
pub use laurent::LaurentPoly;
pub use poly::{cyclotomic_poly, RatPoly};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::Rational;

/// Parses `"p/q"`, `"p"` or `"-p/q"` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || AlgebraError::MalformedScalar(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(AlgebraError::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// Always renders as `"p/q"`, including integers (`"5/1"`).
pub fn rational_to_json_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Human form: `"5"`, `"-3/2"`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
