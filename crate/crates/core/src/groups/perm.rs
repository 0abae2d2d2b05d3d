//! Permutations of `{1, …, n}` acting on the right.
//!
//! `i·p` is the image of `i` under `p`, and products compose left to right:
//! `i·(pq) = (i·p)·q`. Storage is 0-based; everything user-facing
//! (cycle notation, JSON image arrays) is 1-based.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{AlgebraError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &j in &images {
            if j >= n || std::mem::replace(&mut seen[j], true) {
                return Err(AlgebraError::InvalidGroup(format!("not a bijection: {images:?}")));
            }
        }
        Ok(Perm { images })
    }

    /// From 1-based images, e.g. `[2, 1, 4, 3]` for (1 2)(3 4).
    pub fn from_images_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(AlgebraError::InvalidGroup("image 0 in a 1-based permutation".into()));
        }
        Self::from_images(images.iter().map(|i| i - 1).collect())
    }

    /// From disjoint 1-based cycles, e.g. `&[&[1, 2], &[3, 4]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(AlgebraError::IndexOutOfRange { index: a.max(b), max: n });
                }
                if std::mem::replace(&mut touched[a - 1], true) {
                    return Err(AlgebraError::InvalidGroup(format!("cycles are not disjoint at {a}")));
                }
                images[a - 1] = b - 1;
            }
        }
        Self::from_images(images)
    }

    /// The adjacent transposition `(k k+1)`, 1-based `k`.
    pub fn adjacent_transposition(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(AlgebraError::IndexOutOfRange { index: k, max: n.saturating_sub(1) });
        }
        Self::from_cycles(n, &[&[k, k + 1]])
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `i·p` for 0-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(AlgebraError::DegreeMismatch { expected: self.degree(), found: other.degree() });
        }
        Ok(Perm { images: self.images.iter().map(|&i| other.images[i]).collect() })
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Non-trivial cycles, 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Parses `"(1 2)(3 4)"`, `"(12)(34)"` (single digits) or `"()"`.
    pub fn parse_cycles(n: usize, s: &str) -> Result<Perm> {
        let bad = || AlgebraError::InvalidGroup(format!("bad cycle notation {s:?}"));
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body_end = rest.find(')').ok_or_else(bad)?;
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let body = &body[..body_end - 1];
            let points: Vec<usize> = if body.contains([' ', ',']) {
                body.split([' ', ','])
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse().map_err(|_| bad()))
                    .collect::<Result<_>>()?
            } else {
                body.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_>>()?
            };
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = rest[body_end + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Self::from_cycles(n, &refs)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images_one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(d)?;
        Perm::from_images_one_based(&images).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Perm {
        Perm::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn klein_products() {
        let s = cyc(4, &[&[1, 2], &[3, 4]]);
        let l = cyc(4, &[&[1, 3], &[2, 4]]);
        assert_eq!(s.compose(&l).unwrap(), cyc(4, &[&[1, 4], &[2, 3]]));
    }

    /// Images of 1, 2, 3 traced by hand: 1→2→3, 2→3→1, 3→1→2.
    #[test]
    fn three_cycle_squared() {
        let c = cyc(3, &[&[1, 2, 3]]);
        let sq = c.compose(&c).unwrap();
        assert_eq!(sq.images_one_based(), vec![3, 1, 2]);
        assert_eq!(sq, cyc(3, &[&[1, 3, 2]]));
    }

    #[test]
    fn composition_order_is_left_to_right() {
        let a = cyc(3, &[&[1, 2]]);
        let b = cyc(3, &[&[2, 3]]);
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.compose(&b).unwrap().apply(0), 2);
    }

    #[test]
    fn errors() {
        assert!(Perm::identity(3).compose(&Perm::identity(4)).is_err());
        assert!(Perm::from_images(vec![0, 0]).is_err());
        assert!(Perm::from_cycles(3, &[&[1, 4]]).is_err());
    }

    #[test]
    fn cycle_notation() {
        let p = cyc(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(p.to_string(), "(1 2)(3 4)");
        assert_eq!(Perm::parse_cycles(4, "(12)(34)").unwrap(), p);
        assert_eq!(Perm::parse_cycles(4, "(1 2)(3 4)").unwrap(), p);
        assert_eq!(Perm::parse_cycles(3, "()").unwrap(), Perm::identity(3));
        assert_eq!(serde_json::to_string(&p).unwrap(), "[2,1,4,3]");
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Perm> {
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Perm::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn group_laws(p in arb_perm(6), q in arb_perm(6), r in arb_perm(6)) {
            let e = Perm::identity(6);
            prop_assert_eq!(p.compose(&e).unwrap(), p.clone());
            prop_assert_eq!(p.compose(&p.inverse()).unwrap(), e);
            let lhs = p.compose(&q).unwrap().compose(&r).unwrap();
            let rhs = p.compose(&q.compose(&r).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
