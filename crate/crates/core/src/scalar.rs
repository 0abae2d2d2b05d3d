//! Coefficient traits for the generic matrix and iterant layers.
//!
//! Everything above this module is written against [`Scalar`] (a commutative
//! ring with unit) or [`Field`]. Exact work uses [`Cyclotomic`] or
//! [`Rational`]; `f32`/`f64` are supported for quick numerical experiments.
//!
//! [`Cyclotomic`]: crate::Cyclotomic
//! [`Rational`]: crate::Rational

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::Rational;

/// A commutative ring with unit.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_int(n: i64) -> Self;

    fn add_ref(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }
}

/// A [`Scalar`] in which every nonzero element is invertible.
pub trait Field: Scalar + Div<Output = Self> {
    fn checked_inv(&self) -> Option<Self>;
}

macro_rules! float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn from_int(n: i64) -> Self {
                n as $t
            }
        }

        impl Field for $t {
            fn checked_inv(&self) -> Option<Self> {
                if *self == 0.0 { None } else { Some(1.0 / *self) }
            }
        }
    )*};
}

float_scalar!(f32, f64);

impl Scalar for Rational {
    fn from_int(n: i64) -> Self {
        Rational::from_integer(n.into())
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Field for Rational {
    fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Complex conjugation; the identity on real scalar types.
pub trait Conj {
    fn conj(&self) -> Self;
}

macro_rules! real_conj {
    ($($t:ty),*) => {$(
        impl Conj for $t {
            fn conj(&self) -> Self {
                self.clone()
            }
        }
    )*};
}

real_conj!(f32, f64, Rational);

impl Conj for crate::Cyclotomic {
    fn conj(&self) -> Self {
        crate::Cyclotomic::conj(self)
    }
}
