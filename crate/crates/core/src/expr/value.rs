use std::fmt;

use num_traits::Zero;

use super::error::ExprError;
use crate::braids::BraidAlgebraElement;
use crate::iterants::Iterant;
use crate::{Cyclotomic, LaurentPoly};

/// Result of evaluating an expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(LaurentPoly),
    Iterant(Iterant<LaurentPoly>),
    Braid(BraidAlgebraElement),
}

fn type_error(msg: impl Into<String>) -> ExprError {
    ExprError::Type(msg.into())
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Iterant(_) => "iterant",
            Value::Braid(_) => "framed braid",
        }
    }

    /// The value as an exact scalar in Q(ζ_N), if it is one.
    pub fn as_cyclotomic(&self) -> Option<Cyclotomic> {
        match self {
            Value::Scalar(p) => p.as_constant(),
            Value::Iterant(x) => x.as_scalar().and_then(|p| p.as_constant()),
            Value::Braid(_) => None,
        }
    }

    /// The iterant with `t`-free coefficients.
    pub fn to_cyclotomic_iterant(&self) -> Result<Iterant<Cyclotomic>, ExprError> {
        match self {
            Value::Iterant(x) => x
                .try_map(|p| {
                    p.as_constant().ok_or_else(|| {
                        crate::AlgebraError::Specialization(format!("coefficient {p} still involves t"))
                    })
                })
                .map_err(Into::into),
            other => Err(type_error(format!("expected an iterant, got a {}", other.kind()))),
        }
    }

    /// Collapses a multiple of the unit iterant, or the zero braid, to a scalar.
    pub fn normalized(self) -> Value {
        match self {
            Value::Braid(x) if x.is_zero() => Value::Scalar(LaurentPoly::zero()),
            Value::Iterant(x) => match x.as_scalar() {
                Some(c) => Value::Scalar(c),
                None => Value::Iterant(x),
            },
            other => other,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Scalar(p) => p.is_zero(),
            Value::Iterant(x) => x.is_zero(),
            Value::Braid(x) => x.is_zero(),
        }
    }

    /// Six-place decimals for every coefficient; `None` while `t` is free.
    pub fn decimal(&self) -> Option<String> {
        let dec = |p: &LaurentPoly| p.as_constant().map(|c| c.to_decimal_string());
        match self {
            Value::Scalar(p) => dec(p),
            Value::Iterant(x) => {
                let g = x.group();
                let mut parts = Vec::new();
                for (e, v) in x.terms() {
                    let entries = v.iter().map(dec).collect::<Option<Vec<_>>>()?;
                    let label = if e == g.identity() { String::new() } else { g.label(e).to_string() };
                    parts.push(format!("[{}]{label}", entries.join(",")));
                }
                Some(if parts.is_empty() { "0".into() } else { parts.join(" + ") })
            }
            Value::Braid(_) => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(p) => write!(f, "{p}"),
            Value::Iterant(x) => write!(f, "{x}"),
            Value::Braid(x) => write!(f, "{x}"),
        }
    }
}

/// Lifts scalars to the algebra of the other operand.
fn align(a: Value, b: Value) -> Result<(Value, Value), ExprError> {
    Ok(match (a, b) {
        (Value::Scalar(c), Value::Iterant(x)) => (Value::Iterant(Iterant::scalar(x.group(), c)), Value::Iterant(x)),
        (Value::Iterant(x), Value::Scalar(c)) => {
            let s = Iterant::scalar(x.group(), c);
            (Value::Iterant(x), Value::Iterant(s))
        }
        (Value::Scalar(c), Value::Braid(x)) => (Value::Braid(BraidAlgebraElement::scalar(x.strands(), c)), Value::Braid(x)),
        (Value::Braid(x), Value::Scalar(c)) => {
            let s = BraidAlgebraElement::scalar(x.strands(), c);
            (Value::Braid(x), Value::Braid(s))
        }
        (a @ Value::Iterant(_), b @ Value::Braid(_)) | (a @ Value::Braid(_), b @ Value::Iterant(_)) => {
            return Err(type_error(format!("cannot combine a {} with a {}", a.kind(), b.kind())))
        }
        pair => pair,
    })
}

pub fn add(a: Value, b: Value) -> Result<Value, ExprError> {
    Ok(match align(a, b)? {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x + &y),
        (Value::Iterant(x), Value::Iterant(y)) => Value::Iterant(x.add(&y)?),
        (Value::Braid(x), Value::Braid(y)) => Value::Braid(x.add(&y)?),
        _ => unreachable!("aligned"),
    })
}

pub fn neg(a: Value) -> Value {
    match a {
        Value::Scalar(x) => Value::Scalar(-x),
        Value::Iterant(x) => Value::Iterant(x.neg()),
        Value::Braid(x) => Value::Braid(x.neg()),
    }
}

pub fn sub(a: Value, b: Value) -> Result<Value, ExprError> {
    add(a, neg(b))
}

pub fn mul(a: Value, b: Value) -> Result<Value, ExprError> {
    Ok(match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x * &y),
        (Value::Scalar(c), Value::Iterant(x)) | (Value::Iterant(x), Value::Scalar(c)) => Value::Iterant(x.scale(&c)),
        (Value::Scalar(c), Value::Braid(x)) | (Value::Braid(x), Value::Scalar(c)) => Value::Braid(x.scale(&c)),
        (Value::Iterant(x), Value::Iterant(y)) => Value::Iterant(x.mul(&y)?),
        (Value::Braid(x), Value::Braid(y)) => Value::Braid(x.mul(&y)?),
        (a, b) => return Err(type_error(format!("cannot multiply a {} by a {}", a.kind(), b.kind()))),
    })
}

pub fn pow(a: Value, e: i64) -> Result<Value, ExprError> {
    Ok(match a {
        Value::Scalar(x) => Value::Scalar(x.pow(e)?),
        Value::Braid(x) => Value::Braid(x.pow(e)?),
        Value::Iterant(x) => {
            if e >= 0 {
                let e = u32::try_from(e).map_err(|_| type_error("exponent too large"))?;
                Value::Iterant(x.pow(e))
            } else {
                let exact = Value::Iterant(x).to_cyclotomic_iterant()?;
                Value::Iterant(exact.powi(e)?.map(|c| LaurentPoly::constant(c.clone())))
            }
        }
    })
}

pub fn commutator(a: Value, b: Value, anti: bool) -> Result<Value, ExprError> {
    let ab = mul(a.clone(), b.clone())?;
    let ba = mul(b, a)?;
    if anti {
        add(ab, ba)
    } else {
        sub(ab, ba)
    }
}
