//! Dense univariate polynomials over the rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::scalars::format_rational;
use crate::Rational;

/// Coefficients are stored lowest degree first with no trailing zeros, so
/// the zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![Rational::zero(); n + 1];
        c[0] = -Rational::one();
        c[n] = Rational::one();
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_default();
                let b = rhs.coeffs.get(i).cloned().unwrap_or_default();
                a + b
            })
            .collect();
        Self::new(c)
    }

    pub fn neg(&self) -> Self {
        RatPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead = divisor.lead().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let q = &rem[top] / &lead;
            let shift = top - dd;
            for (k, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] -= &q * d;
            }
            quot[shift] = q;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Extended Euclid: returns `(g, s)` with `s·self ≡ g (mod modulus)`,
    /// `g` monic.
    pub fn gcd_and_inverse_factor(&self, modulus: &Self) -> (Self, Self) {
        let (mut r0, mut r1) = (modulus.clone(), self.rem(modulus));
        let (mut s0, mut s1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        match r0.lead().cloned() {
            Some(l) => {
                let inv = l.recip();
                (r0.scale(&inv), s0.scale(&inv))
            }
            None => (r0, s0),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{}", format_rational(&mag))?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// The N-th cyclotomic polynomial, by exact division of `x^N - 1` by `Φ_d`
/// for every proper divisor `d` of `N`.
pub fn cyclotomic_poly(n: u32) -> RatPoly {
    assert!(n >= 1, "cyclotomic_poly: order must be positive");
    let mut memo: BTreeMap<usize, RatPoly> = BTreeMap::new();
    for d in divisors(n as usize) {
        let mut p = RatPoly::x_pow_minus_one(d);
        for (_, phi) in memo.range(..d).filter(|(e, _)| d % **e == 0) {
            let (q, r) = p.div_rem(phi);
            debug_assert!(r.is_zero());
            p = q;
        }
        memo.insert(d, p);
    }
    memo.remove(&(n as usize)).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), RatPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), RatPoly::from_ints(&[1, 1]));
        assert_eq!(cyclotomic_poly(4), RatPoly::from_ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(3), RatPoly::from_ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(12).to_string(), "x^4 - x^2 + 1");
    }

    /// Independent oracle for Φ_12: divide x^12 − 1 by the hand-written
    /// Φ_1 Φ_2 Φ_3 Φ_4 Φ_6 product.
    #[test]
    fn phi12_by_explicit_division() {
        let lower = [
            RatPoly::from_ints(&[-1, 1]),
            RatPoly::from_ints(&[1, 1]),
            RatPoly::from_ints(&[1, 1, 1]),
            RatPoly::from_ints(&[1, 0, 1]),
            RatPoly::from_ints(&[1, -1, 1]),
        ];
        let prod = lower.iter().fold(RatPoly::one(), |acc, p| acc.mul(p));
        let (q, r) = RatPoly::x_pow_minus_one(12).div_rem(&prod);
        assert!(r.is_zero());
        assert_eq!(q, RatPoly::from_ints(&[1, 0, -1, 0, 1]));
        assert_eq!(q, cyclotomic_poly(12));
    }

    #[test]
    fn degree_is_totient() {
        let phi = |n: u32| (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count();
        for n in 1..=30 {
            assert_eq!(cyclotomic_poly(n).degree(), Some(phi(n)), "n={n}");
        }
    }

    #[test]
    fn inverse_factor() {
        let m = RatPoly::from_ints(&[1, 0, 1]);
        let a = RatPoly::from_ints(&[1, 1]);
        let (g, s) = a.gcd_and_inverse_factor(&m);
        assert_eq!(g, RatPoly::one());
        assert_eq!(a.mul(&s).rem(&m), RatPoly::one());
    }
}
