use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::groups::Perm;

/// One letter `σ_k^{±1}` with 1-based generator index `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn sign(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inverted(self) -> Letter {
        Letter { inverse: !self.inverse, ..self }
    }
}

/// A word in `σ_1, …, σ_{n−1}` on `n` strands, kept freely reduced.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    /// `σ_k^{sign}`; `sign` must be `±1`.
    pub fn generator(strands: usize, k: i64, sign: i64) -> Result<Self> {
        Self::from_pairs(strands, &[(k, sign)])
    }

    /// Builds a word from `(k, ±1)` pairs and reduces it.
    pub fn from_pairs(strands: usize, pairs: &[(i64, i64)]) -> Result<Self> {
        let mut letters = Vec::with_capacity(pairs.len());
        for &(k, sign) in pairs {
            if k < 1 || k as usize >= strands {
                return Err(AlgebraError::InvalidGenerator { generator: k, strands });
            }
            if sign != 1 && sign != -1 {
                return Err(AlgebraError::InvalidGenerator { generator: k * sign, strands });
            }
            letters.push(Letter { generator: k as usize, inverse: sign < 0 });
        }
        Ok(BraidWord { strands, letters }.reduced())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// `(k, ±1)` pairs, the JSON form.
    pub fn pairs(&self) -> Vec<(i64, i64)> {
        self.letters.iter().map(|l| (l.generator as i64, l.sign())).collect()
    }

    /// Exponent sum: `#σ − #σ⁻¹`.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(Letter::sign).sum()
    }

    fn reduced(self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for l in self.letters {
            if out.last() == Some(&l.inverted()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    fn check_strands(&self, other: &Self) -> Result<()> {
        if self.strands != other.strands {
            return Err(AlgebraError::StrandMismatch { left: self.strands, right: other.strands });
        }
        Ok(())
    }

    /// Concatenation followed by free reduction.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_strands(rhs)?;
        let letters = self.letters.iter().chain(&rhs.letters).copied().collect();
        Ok(BraidWord { strands: self.strands, letters }.reduced())
    }

    pub fn inverse(&self) -> Self {
        let letters = self.letters.iter().rev().map(|l| l.inverted()).collect();
        BraidWord { strands: self.strands, letters }
    }

    /// The underlying permutation: `σ_k^{±1} ↦ (k k+1)`, read left to right.
    pub fn permutation(&self) -> Perm {
        self.letters.iter().fold(Perm::identity(self.strands), |acc, l| {
            let t = Perm::adjacent_transposition(self.strands, l.generator).expect("validated generator");
            acc.compose(&t).expect("same degree")
        })
    }
}

/// Prints `s1 s2^-1`, or `1` for the empty word.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| if l.inverse { format!("s{}^-1", l.generator) } else { format!("s{}", l.generator) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord<{}>({self})", self.strands)
    }
}
