use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::word::BraidWord;
use crate::error::{AlgebraError, Result};
use crate::groups::Perm;
use crate::iterants::CoefficientDisplay;
use crate::LaurentPoly;

/// One Laurent polynomial in `t` per strand.
pub type LaurentVector = Vec<LaurentPoly>;

/// `b^p` with `(b^p)_i = b_{i·p}`: the vector that appears on the left
/// when `b` is slid up through a braid whose permutation is `p`.
pub fn slide_left(b: &[LaurentPoly], p: &Perm) -> LaurentVector {
    (0..b.len()).map(|i| b[p.apply(i)].clone()).collect()
}

fn hadamard(a: &[LaurentPoly], b: &[LaurentPoly]) -> LaurentVector {
    a.iter().zip(b).map(|(x, y)| x * y).collect()
}

fn render_vector(v: &[LaurentPoly]) -> String {
    let body: Vec<String> = v.iter().map(CoefficientDisplay::render).collect();
    format!("[{}]", body.join(","))
}

/// A framed braid `v·W` in normal form: the framing sits entirely on the
/// left of a freely reduced word.
#[derive(Clone, PartialEq, Eq)]
pub struct FramedBraid {
    framing: LaurentVector,
    word: BraidWord,
}

impl FramedBraid {
    pub fn new(framing: LaurentVector, word: BraidWord) -> Result<Self> {
        if framing.len() != word.strands() {
            return Err(AlgebraError::DegreeMismatch { expected: word.strands(), found: framing.len() });
        }
        Ok(FramedBraid { framing, word })
    }

    /// `W·v`, normalized by sliding `v` to the left of `W`.
    pub fn from_right(word: BraidWord, framing: LaurentVector) -> Result<Self> {
        let n = word.strands();
        Self::from_word(word).mul(&Self::new(framing, BraidWord::identity(n))?)
    }

    pub fn from_word(word: BraidWord) -> Self {
        let framing = vec![LaurentPoly::one(); word.strands()];
        FramedBraid { framing, word }
    }

    /// `[t^{a_1}, …, t^{a_n}]·W`.
    pub fn with_exponents(exponents: &[i64], word: BraidWord) -> Result<Self> {
        Self::new(exponents.iter().map(|&a| LaurentPoly::t_pow(a)).collect(), word)
    }

    pub fn identity(strands: usize) -> Self {
        Self::from_word(BraidWord::identity(strands))
    }

    pub fn strands(&self) -> usize {
        self.word.strands()
    }

    pub fn framing(&self) -> &[LaurentPoly] {
        &self.framing
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    /// `(uW)(vV) = (u · v^{π(W)}) (WV)`, the word freely reduced.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        let word = self.word.mul(&rhs.word)?;
        let slid = slide_left(&rhs.framing, &self.word.permutation());
        Ok(FramedBraid { framing: hadamard(&self.framing, &slid), word })
    }

    /// Defined when every framing entry is a unit `c·t^a`.
    pub fn inverse(&self) -> Result<Self> {
        let inv: LaurentVector = self.framing.iter().map(LaurentPoly::inv).collect::<Result<_>>()?;
        let w = self.word.inverse();
        let framing = slide_left(&inv, &w.permutation());
        Ok(FramedBraid { framing, word: w })
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        (0..e.unsigned_abs()).try_fold(Self::identity(self.strands()), |acc, _| acc.mul(&base))
    }
}

impl fmt::Display for FramedBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_vector(&self.framing))?;
        if !self.word.is_identity() {
            write!(f, "{}", self.word)?;
        }
        Ok(())
    }
}

impl fmt::Debug for FramedBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FramedBraid<{}>({self})", self.strands())
    }
}

/// An element of the framed braid algebra: a finite sum `Σ v_k W_k` with
/// Laurent framing vectors (scalars are absorbed into the vectors).
#[derive(Clone, PartialEq, Eq)]
pub struct BraidAlgebraElement {
    strands: usize,
    terms: BTreeMap<BraidWord, LaurentVector>,
}

impl BraidAlgebraElement {
    pub fn zero(strands: usize) -> Self {
        BraidAlgebraElement { strands, terms: BTreeMap::new() }
    }

    pub fn one(strands: usize) -> Self {
        FramedBraid::identity(strands).into()
    }

    /// `c` times the identity braid.
    pub fn scalar(strands: usize, c: LaurentPoly) -> Self {
        Self::from_terms(strands, [(vec![c; strands], BraidWord::identity(strands))]).expect("matching lengths")
    }

    pub fn from_terms(
        strands: usize,
        terms: impl IntoIterator<Item = (LaurentVector, BraidWord)>,
    ) -> Result<Self> {
        let mut out = Self::zero(strands);
        for (v, w) in terms {
            if w.strands() != strands {
                return Err(AlgebraError::StrandMismatch { left: strands, right: w.strands() });
            }
            if v.len() != strands {
                return Err(AlgebraError::DegreeMismatch { expected: strands, found: v.len() });
            }
            out.accumulate(w, v);
        }
        Ok(out)
    }

    fn accumulate(&mut self, w: BraidWord, v: LaurentVector) {
        let sum = match self.terms.remove(&w) {
            Some(old) => old.iter().zip(&v).map(|(a, b)| a + b).collect(),
            None => v,
        };
        if !sum.iter().all(Zero::is_zero) {
            self.terms.insert(w, sum);
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BraidWord, &[LaurentPoly])> {
        self.terms.iter().map(|(w, v)| (w, v.as_slice()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single framed braid, when there is exactly one term.
    pub fn as_framed(&self) -> Option<FramedBraid> {
        let mut it = self.terms.iter();
        match (it.next(), it.next()) {
            (Some((w, v)), None) => Some(FramedBraid { framing: v.clone(), word: w.clone() }),
            _ => None,
        }
    }

    fn check(&self, rhs: &Self) -> Result<()> {
        if self.strands != rhs.strands {
            return Err(AlgebraError::StrandMismatch { left: self.strands, right: rhs.strands });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        let mut out = self.clone();
        for (w, v) in &rhs.terms {
            out.accumulate(w.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.scale(&-LaurentPoly::one())
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.strands);
        for (w, v) in &self.terms {
            out.accumulate(w.clone(), v.iter().map(|x| x * c).collect());
        }
        out
    }

    /// Bilinear extension of [`FramedBraid::mul`].
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        let mut out = Self::zero(self.strands);
        for (w1, v1) in &self.terms {
            let p = w1.permutation();
            for (w2, v2) in &rhs.terms {
                out.accumulate(w1.mul(w2)?, hadamard(v1, &slide_left(v2, &p)));
            }
        }
        Ok(out)
    }

    /// Negative powers need a single invertible framed braid.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            let x = self.as_framed().ok_or(AlgebraError::NotInvertible)?;
            return Ok(x.pow(e)?.into());
        }
        (0..e).try_fold(Self::one(self.strands), |acc, _| acc.mul(self))
    }

    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        self.mul(rhs)?.sub(&rhs.mul(self)?)
    }

    pub fn anticommutator(&self, rhs: &Self) -> Result<Self> {
        self.mul(rhs)?.add(&rhs.mul(self)?)
    }
}

impl From<FramedBraid> for BraidAlgebraElement {
    fn from(x: FramedBraid) -> Self {
        let mut out = Self::zero(x.strands());
        out.accumulate(x.word, x.framing);
        out
    }
}

/// Terms as `[v]W` joined by ` + `, identity word first; zero prints `0`.
impl fmt::Display for BraidAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut words: Vec<&BraidWord> = self.terms.keys().collect();
        words.sort_by_key(|w| (w.letters().len(), *w));
        for (n, w) in words.into_iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", FramedBraid { framing: self.terms[w].clone(), word: w.clone() })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidAlgebraElement<{}>({self})", self.strands)
    }
}
