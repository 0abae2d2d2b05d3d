//! Laurent polynomials in the framing variable `t` over Q(ζ_N).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Cyclotomic;
use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;

/// Sparse `Σ c_k t^k`, `k ∈ Z`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Cyclotomic>,
}

impl LaurentPoly {
    pub fn monomial(coeff: Cyclotomic, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// `t^k`
    pub fn t_pow(k: i64) -> Self {
        Self::monomial(Cyclotomic::one(), k)
    }

    pub fn constant(c: Cyclotomic) -> Self {
        Self::monomial(c, 0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Cyclotomic)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: i64) -> Cyclotomic {
        self.terms.get(&k).cloned().unwrap_or_else(Cyclotomic::zero)
    }

    /// `(coefficient, exponent)` when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(&Cyclotomic, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, c)| (c, *k))
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Cyclotomic> {
        match self.terms.len() {
            0 => Some(Cyclotomic::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Evaluates at `t = value`; the map is a ring homomorphism.
    pub fn specialize(&self, value: &Cyclotomic) -> Result<Cyclotomic> {
        let needs_inverse = self.min_exponent().is_some_and(|k| k < 0);
        let inv = if needs_inverse {
            Some(value.inv().map_err(|_| {
                AlgebraError::Specialization(format!("t = {value} is not invertible but negative powers of t occur"))
            })?)
        } else {
            None
        };
        let mut acc = Cyclotomic::zero();
        for (&k, c) in &self.terms {
            let base = if k < 0 { inv.as_ref().unwrap() } else { value };
            acc = acc + c * &base.pow(k.abs())?;
        }
        Ok(acc)
    }

    /// Inverse of a monomial `c t^k`; other elements are not units.
    pub fn inv(&self) -> Result<LaurentPoly> {
        match self.as_monomial() {
            Some((c, k)) => Ok(Self::monomial(c.inv()?, -k)),
            None => Err(AlgebraError::NotInvertible),
        }
    }

    pub fn pow(&self, e: i64) -> Result<LaurentPoly> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok((0..e.unsigned_abs()).fold(LaurentPoly::one(), |acc, _| &acc * &base))
    }

    fn insert_add(terms: &mut BTreeMap<i64, Cyclotomic>, k: i64, c: Cyclotomic) {
        let sum = match terms.remove(&k) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            terms.insert(k, sum);
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (&k, c) in &rhs.terms {
            LaurentPoly::insert_add(&mut terms, k, c.clone());
        }
        LaurentPoly { terms }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                LaurentPoly::insert_add(&mut terms, a + b, ca * cb);
            }
        }
        LaurentPoly { terms }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::t_pow(0)
    }
}

impl From<Cyclotomic> for LaurentPoly {
    fn from(c: Cyclotomic) -> Self {
        LaurentPoly::constant(c)
    }
}

impl Scalar for LaurentPoly {
    fn from_int(n: i64) -> Self {
        LaurentPoly::constant(n.into())
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (&k, c)) in self.terms.iter().rev().enumerate() {
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) if !c.is_compound() => (true, rest.to_string()),
                _ => (false, cs),
            };
            let body = if var.is_empty() {
                if c.is_compound() && n > 0 { format!("({mag})") } else { mag }
            } else if mag == "1" {
                var
            } else if c.is_compound() {
                format!("({mag}) {var}")
            } else {
                format!("{mag} {var}")
            };
            match (n == 0, neg) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct LaurentRepr {
    terms: BTreeMap<String, Cyclotomic>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LaurentRepr { terms: self.terms.iter().map(|(k, c)| (k.to_string(), c.clone())).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error;
        let repr = LaurentRepr::deserialize(d)?;
        let mut terms = BTreeMap::new();
        for (k, c) in repr.terms {
            let k: i64 = k.parse().map_err(|_| D::Error::custom(format!("bad exponent {k:?}")))?;
            LaurentPoly::insert_add(&mut terms, k, c);
        }
        Ok(LaurentPoly { terms })
    }
}
