//! Exact arithmetic in Q(ζ_N).
//!
//! An element is stored in the power basis `1, ζ, …, ζ^{d-1}` where
//! `d = deg Φ_N`, always fully reduced modulo `Φ_N`. Because the form is
//! canonical, equality within one order is coefficient-wise. Operands of
//! different orders are first embedded into Q(ζ_lcm).
//!
//! Each order gets a cached table with the power-basis coordinates of
//! `ζ^k` for `0 ≤ k < N`; products are computed as cyclic convolutions in
//! `Q[x]/(x^N − 1)` and then folded through that table.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{cyclotomic_poly, RatPoly};
use super::{format_rational, parse_rational, rational_to_f64, rational_to_json_string};
use crate::error::{AlgebraError, Result};
use crate::scalar::{Field, Scalar};
use crate::Rational;

struct FieldData {
    order: u32,
    degree: usize,
    phi: RatPoly,
    /// `powers[k]` = coordinates of ζ^k, for k in 0..order.
    powers: Vec<Vec<i64>>,
}

impl FieldData {
    fn build(order: u32) -> Self {
        let phi = cyclotomic_poly(order);
        let degree = phi.degree().unwrap();
        let low: Vec<i64> = phi.coeffs()[..degree]
            .iter()
            .map(|c| c.to_integer().to_i64().expect("cyclotomic coefficient overflow"))
            .collect();
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by x, then replace x^degree by −(lower part of Φ)
            let top = cur[degree - 1];
            for j in (1..degree).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for j in 0..degree {
                    cur[j] -= top * low[j];
                }
            }
        }
        FieldData { order, degree, phi, powers }
    }

    /// Folds an exponent-indexed accumulator (length `order`) into the basis.
    fn reduce(&self, acc: Vec<Rational>) -> Vec<Rational> {
        debug_assert_eq!(acc.len(), self.order as usize);
        let mut out: Vec<Rational> = vec![Rational::zero(); self.degree];
        for (k, c) in acc.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < self.degree {
                out[k] += c;
                continue;
            }
            for (j, &m) in self.powers[k].iter().enumerate() {
                if m != 0 {
                    out[j] += &c * Rational::from_integer(m.into());
                }
            }
        }
        out
    }
}

fn field(order: u32) -> Arc<FieldData> {
    static FIELDS: OnceLock<RwLock<HashMap<u32, Arc<FieldData>>>> = OnceLock::new();
    let cache = FIELDS.get_or_init(Default::default);
    if let Some(f) = cache.read().unwrap().get(&order) {
        return f.clone();
    }
    let built = Arc::new(FieldData::build(order));
    cache.write().unwrap().entry(order).or_insert(built).clone()
}

/// Degree of Φ_N (Euler's totient of N).
pub fn field_degree(order: u32) -> usize {
    field(order).degree
}

/// An element of the cyclotomic field Q(ζ_N).
#[derive(Clone)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Builds `Σ coeffs[k]·ζ_N^k`. Exponents at or beyond `deg Φ_N` are
    /// reduced, so any non-empty coefficient list is accepted.
    pub fn new(order: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if order == 0 {
            return Err(AlgebraError::MalformedScalar("order must be positive".into()));
        }
        if coeffs.is_empty() {
            return Err(AlgebraError::MalformedScalar(format!(
                "empty coefficient list for order {order}"
            )));
        }
        let f = field(order);
        let mut acc = vec![Rational::zero(); order as usize];
        for (k, c) in coeffs.into_iter().enumerate() {
            acc[k % order as usize] += c;
        }
        Ok(Cyclotomic { order, coeffs: f.reduce(acc) })
    }

    pub fn from_ints(order: u32, coeffs: &[i64]) -> Result<Self> {
        Self::new(order, coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn rational(r: Rational) -> Self {
        Cyclotomic { order: 1, coeffs: vec![r] }
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::rational(Rational::new(num.into(), den.into()))
    }

    /// ζ_N^k; `k` may be negative.
    pub fn zeta(order: u32, k: i64) -> Self {
        assert!(order >= 1, "root of unity order must be positive");
        let f = field(order);
        let e = k.rem_euclid(order as i64) as usize;
        let coeffs = f.powers[e].iter().map(|&m| Rational::from_integer(m.into())).collect();
        Cyclotomic { order, coeffs }
    }

    /// The imaginary unit ζ_4.
    pub fn i() -> Self {
        Self::zeta(4, 1)
    }

    /// ω = ζ_3.
    pub fn omega() -> Self {
        Self::zeta(3, 1)
    }

    /// √3 = ζ_12 − ζ_12^5.
    pub fn sqrt3() -> Self {
        Self::zeta(12, 1) - Self::zeta(12, 5)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Power-basis coordinates, length `deg Φ_N`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Embeds into Q(ζ_M). Panics unless `order | m`.
    pub fn embed(&self, m: u32) -> Cyclotomic {
        assert!(m.is_multiple_of(self.order), "cannot embed Q(ζ_{}) into Q(ζ_{m})", self.order);
        if m == self.order {
            return self.clone();
        }
        let factor = (m / self.order) as usize;
        let f = field(m);
        let mut acc = vec![Rational::zero(); m as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            acc[k * factor] = c.clone();
        }
        Cyclotomic { order: m, coeffs: f.reduce(acc) }
    }

    /// The same element expressed in Q(ζ_n), if it lies in that subfield.
    pub fn try_restrict(&self, n: u32) -> Option<Cyclotomic> {
        if n == 0 || !self.order.is_multiple_of(n) {
            return None;
        }
        if n == self.order {
            return Some(self.clone());
        }
        let big = field(self.order);
        let small = field(n);
        let factor = (self.order / n) as usize;
        // columns: coordinates of ζ_n^j = ζ_N^{j·factor}
        let rows = big.degree;
        let cols = small.degree;
        let mut aug: Vec<Vec<Rational>> = (0..rows)
            .map(|r| {
                let mut row: Vec<Rational> = (0..cols)
                    .map(|j| Rational::from_integer(big.powers[j * factor][r].into()))
                    .collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        let solution = solve_augmented(&mut aug, cols)?;
        Some(Cyclotomic { order: n, coeffs: solution })
    }

    /// Representation in the smallest Q(ζ_d), d | N, that contains it.
    pub fn minimal(&self) -> Cyclotomic {
        (1..=self.order)
            .filter(|d| self.order.is_multiple_of(*d))
            .find_map(|d| self.try_restrict(d))
            .unwrap_or_else(|| self.clone())
    }

    /// Some(r) when the element is the rational r.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Complex conjugation, ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Cyclotomic {
        if self.order <= 2 {
            return self.clone();
        }
        let n = self.order as usize;
        let f = field(self.order);
        let mut acc = vec![Rational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            acc[(n - k) % n] = c.clone();
        }
        Cyclotomic { order: self.order, coeffs: f.reduce(acc) }
    }

    pub fn inv(&self) -> Result<Cyclotomic> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.order <= 2 {
            return Ok(Self::rational(self.coeffs[0].recip()).embed(self.order));
        }
        let f = field(self.order);
        let p = RatPoly::new(self.coeffs.clone());
        let (g, s) = p.gcd_and_inverse_factor(&f.phi);
        debug_assert!(g.degree() == Some(0), "Φ_N is irreducible");
        let mut coeffs = s.coeffs().to_vec();
        coeffs.resize(f.degree, Rational::zero());
        Ok(Cyclotomic { order: self.order, coeffs })
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Cyclotomic> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Cyclotomic::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Floating-point value as `(re, im)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.order as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, c)| {
            let v = rational_to_f64(c);
            let ang = 2.0 * std::f64::consts::PI * k as f64 / n;
            (re + v * ang.cos(), im + v * ang.sin())
        })
    }

    /// Six-place decimal rendering, e.g. `0.866025` or `0.500000-0.866025i`.
    pub fn to_decimal_string(&self) -> String {
        let (re, im) = self.to_complex();
        let tidy = |x: f64| if x.abs() < 5e-7 { 0.0 } else { x };
        let (re, im) = (tidy(re), tidy(im));
        match (re == 0.0, im == 0.0) {
            (_, true) => format!("{re:.6}"),
            (true, false) => format!("{im:.6}i"),
            (false, false) => {
                let sign = if im < 0.0 { '-' } else { '+' };
                format!("{re:.6}{sign}{:.6}i", im.abs())
            }
        }
    }

    /// True when the printed form has more than one term.
    pub fn is_compound(&self) -> bool {
        self.minimal().coeffs.iter().filter(|c| !c.is_zero()).count() > 1
    }

    fn same_order_pair(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let m = a.order.lcm(&b.order);
        (a.embed(m), b.embed(m))
    }

    fn zip_with(&self, rhs: &Cyclotomic, op: impl Fn(&Rational, &Rational) -> Rational) -> Cyclotomic {
        if self.order == rhs.order {
            let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| op(a, b)).collect();
            return Cyclotomic { order: self.order, coeffs };
        }
        let (a, b) = Self::same_order_pair(self, rhs);
        a.zip_with(&b, op)
    }

    fn mul_impl(&self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.order != rhs.order {
            // rationals scale without embedding the other side twice
            if let Some(r) = self.as_rational_if_order_one() {
                return rhs.scale(&r);
            }
            if let Some(r) = rhs.as_rational_if_order_one() {
                return self.scale(&r);
            }
            let (a, b) = Self::same_order_pair(self, rhs);
            return a.mul_impl(&b);
        }
        let n = self.order as usize;
        if n <= 2 {
            return Cyclotomic { order: self.order, coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]] };
        }
        let mut acc = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    acc[(i + j) % n] += a * b;
                }
            }
        }
        Cyclotomic { order: self.order, coeffs: field(self.order).reduce(acc) }
    }

    fn as_rational_if_order_one(&self) -> Option<Rational> {
        (self.order == 1).then(|| self.coeffs[0].clone())
    }

    pub fn scale(&self, r: &Rational) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }
}

fn solve_augmented(aug: &mut [Vec<Rational>], cols: usize) -> Option<Vec<Rational>> {
    let rows = aug.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !aug[i][c].is_zero()) else { continue };
        aug.swap(r, p);
        let inv = aug[r][c].recip();
        for x in aug[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !aug[i][c].is_zero() {
                let k = aug[i][c].clone();
                for j in 0..=cols {
                    let d = &k * &aug[r][j];
                    aug[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if aug[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = aug[row][cols].clone();
    }
    Some(x)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::same_order_pair(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({}; {})", self.order, self)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.minimal();
        let symbol = |k: usize| match (m.order, k) {
            (4, 1) => "i".to_string(),
            (3, 1) => "w".to_string(),
            _ => format!("zeta({},{})", m.order, k),
        };
        let mut first = true;
        for (k, c) in m.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            let body = if k == 0 {
                format_rational(&mag)
            } else if mag.is_one() {
                symbol(k)
            } else {
                format!("{} {}", format_rational(&mag), symbol(k))
            };
            match (first, neg) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::rational(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::rational(Rational::one())
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::rational(Rational::from_integer(n.into()))
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Cyclotomic::rational(r)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Add<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.mul_impl(rhs)
    }
}

impl Div<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    /// Panics on division by zero; use [`Cyclotomic::inv`] to handle it.
    fn div(self, rhs: &Cyclotomic) -> Cyclotomic {
        self * &rhs.inv().expect("cyclotomic division by zero")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Scalar for Cyclotomic {
    fn from_int(n: i64) -> Self {
        n.into()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Field for Cyclotomic {
    fn checked_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    order: u32,
    coeffs: Vec<String>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicRepr {
            order: self.order,
            coeffs: self.coeffs.iter().map(rational_to_json_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error;
        let repr = CyclotomicRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Cyclotomic::new(repr.order, coeffs).map_err(D::Error::custom)
    }
}

/// A chosen ambient field Q(ζ_N) with checked access to its roots of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    order: u32,
}

impl CyclotomicField {
    pub fn new(order: u32) -> Result<Self> {
        if order == 0 {
            return Err(AlgebraError::MalformedScalar("order must be positive".into()));
        }
        Ok(CyclotomicField { order })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        field_degree(self.order)
    }

    pub fn require(&self, root: u32) -> Result<()> {
        if root != 0 && self.order.is_multiple_of(root) {
            Ok(())
        } else {
            Err(AlgebraError::MissingRoot { needed: root, order: self.order })
        }
    }

    pub fn contains(&self, x: &Cyclotomic) -> bool {
        self.order.is_multiple_of(x.order) || self.order.is_multiple_of(x.minimal().order())
    }

    /// ζ_m^k, embedded in this field.
    pub fn root(&self, m: u32, k: i64) -> Result<Cyclotomic> {
        self.require(m)?;
        Ok(Cyclotomic::zeta(m, k).embed(self.order))
    }

    pub fn i(&self) -> Result<Cyclotomic> {
        self.root(4, 1)
    }

    pub fn omega(&self) -> Result<Cyclotomic> {
        self.root(3, 1)
    }

    pub fn sqrt3(&self) -> Result<Cyclotomic> {
        self.require(12)?;
        Ok(Cyclotomic::sqrt3().embed(self.order))
    }

    pub fn embed(&self, x: &Cyclotomic) -> Result<Cyclotomic> {
        let m = x.minimal();
        if !self.order.is_multiple_of(m.order()) {
            return Err(AlgebraError::MissingRoot { needed: m.order(), order: self.order });
        }
        Ok(m.embed(self.order))
    }

    pub fn from_int(&self, n: i64) -> Cyclotomic {
        Cyclotomic::from(n).embed(self.order)
    }

    pub fn ratio(&self, num: i64, den: i64) -> Cyclotomic {
        Cyclotomic::ratio(num, den).embed(self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn prime_field_case() {
        let five = Cyclotomic::from_ints(1, &[5]).unwrap();
        assert_eq!(five, Cyclotomic::from(5));
        assert_eq!(five.as_rational(), Some(r(5)));
    }

    #[test]
    fn imaginary_unit() {
        let i = Cyclotomic::from_ints(4, &[0, 1]).unwrap();
        assert_eq!(&i * &i, Cyclotomic::from(-1));
        assert_eq!(i, Cyclotomic::i());
        assert_eq!(i.to_string(), "i");
    }

    #[test]
    fn empty_coefficients_rejected() {
        assert!(matches!(Cyclotomic::new(4, vec![]), Err(AlgebraError::MalformedScalar(_))));
        assert!(Cyclotomic::new(0, vec![r(1)]).is_err());
    }

    /// ζ12 − ζ12^5 squared, checked by reducing (x − x^5)^2 modulo the
    /// hand-written Φ12 = x^4 − x^2 + 1.
    #[test]
    fn sqrt3_in_q_zeta12() {
        let phi12 = RatPoly::from_ints(&[1, 0, -1, 0, 1]);
        let p = RatPoly::from_ints(&[0, 1, 0, 0, 0, -1]);
        assert_eq!(p.mul(&p).rem(&phi12), RatPoly::from_ints(&[3]));

        let s = Cyclotomic::from_ints(12, &[0, 1, 0, 0, 0, -1]).unwrap();
        assert_eq!(&s * &s, Cyclotomic::from(3));
        assert_eq!(s, Cyclotomic::sqrt3());
    }

    #[test]
    fn field_identities() {
        let w = Cyclotomic::omega();
        assert!((Cyclotomic::one() + w.clone() + &w * &w).is_zero());
        assert_eq!(Cyclotomic::zeta(3, 1).conj(), Cyclotomic::zeta(3, 2));
        let s = Cyclotomic::sqrt3();
        assert_eq!(&s.inv().unwrap() * &s, Cyclotomic::one());
        assert_eq!(Cyclotomic::zero().inv(), Err(AlgebraError::DivisionByZero));
        assert_eq!(Cyclotomic::from(2).inv().unwrap(), Cyclotomic::ratio(1, 2));
    }

    #[test]
    fn mixed_orders_embed() {
        let i = Cyclotomic::i();
        let w = Cyclotomic::omega();
        let p = &i * &w;
        assert_eq!(p.order(), 12);
        assert_eq!(p, Cyclotomic::zeta(12, 7));
        assert_eq!(Cyclotomic::zeta(12, 3), i);
        assert_eq!(Cyclotomic::zeta(6, 2), w);
    }

    #[test]
    fn restrict_round_trip() {
        let x = Cyclotomic::from_ints(4, &[3, -2]).unwrap();
        let big = x.embed(12);
        assert_eq!(big.try_restrict(4).unwrap().coeffs(), x.coeffs());
        assert!(Cyclotomic::sqrt3().try_restrict(4).is_none());
        assert!(Cyclotomic::sqrt3().try_restrict(3).is_none());
        assert_eq!(Cyclotomic::zeta(12, 6).minimal().order(), 1);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Cyclotomic::ratio(-3, 2).to_string(), "-3/2");
        assert_eq!(Cyclotomic::sqrt3().to_string(), "2 zeta(12,1) - zeta(12,3)");
        assert_eq!(Cyclotomic::zeta(6, 1).to_string(), "1 + w");
        assert_eq!(Cyclotomic::zero().to_string(), "0");
        assert_eq!(Cyclotomic::sqrt3().to_decimal_string(), "1.732051");
        assert_eq!(Cyclotomic::zeta(3, 1).to_decimal_string(), "-0.500000+0.866025i");
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(Cyclotomic::from_ints(4, &[1, -2]).unwrap()).unwrap();
        assert_eq!(v, serde_json::json!({"order": 4, "coeffs": ["1/1", "-2/1"]}));
        let back: Cyclotomic = serde_json::from_value(v).unwrap();
        assert_eq!(back, Cyclotomic::from_ints(4, &[1, -2]).unwrap());
    }

    #[test]
    fn field_checks_roots() {
        let f = CyclotomicField::new(6).unwrap();
        assert!(f.i().is_err());
        assert_eq!(f.omega().unwrap().order(), 6);
        assert!(matches!(f.sqrt3(), Err(AlgebraError::MissingRoot { needed: 12, order: 6 })));
    }

    fn arb_cyc(order: u32) -> impl Strategy<Value = Cyclotomic> {
        let d = field_degree(order);
        proptest::collection::vec((-5i64..=5, 1i64..=3), d)
            .prop_map(move |v| {
                Cyclotomic::new(order, v.into_iter().map(|(p, q)| Rational::new(p.into(), q.into())).collect())
                    .unwrap()
            })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_cyc(12), b in arb_cyc(12), c in arb_cyc(12)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        }

        #[test]
        fn conj_is_multiplicative_involution(a in arb_cyc(12), b in arb_cyc(5)) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        }

        #[test]
        fn inverse_law(a in arb_cyc(7)) {
            prop_assume!(!a.is_zero());
            prop_assert_eq!(&a * &a.inv().unwrap(), Cyclotomic::one());
        }

        #[test]
        fn embed_then_restrict(a in arb_cyc(4), m in 1u32..5) {
            let big = a.embed(4 * m);
            let back = big.try_restrict(4).unwrap();
            prop_assert_eq!(back.coeffs(), a.coeffs());
        }
    }
}
