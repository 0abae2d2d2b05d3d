use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::Serialize;

use super::framed::{BraidAlgebraElement, FramedBraid};
use super::word::{BraidWord, Letter};
use crate::check::Check;
use crate::error::{AlgebraError, Result};
use crate::groups::{Elem, Group, Perm};
use crate::iterants::Iterant;
use crate::scalars::CyclotomicField;
use crate::su3::{gell_mann, transposition_embedding};
use crate::{Cyclotomic, LaurentPoly};

/// `S_n` acting naturally, built once per `n`.
pub fn symmetric_target(n: usize) -> Result<Arc<Group>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Group>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(g) = cache.lock().expect("group cache").get(&n) {
        return Ok(g.clone());
    }
    let g = Arc::new(Group::symmetric_natural(n)?);
    cache.lock().expect("group cache").insert(n, g.clone());
    Ok(g)
}

fn element(g: &Group, p: &Perm) -> Elem {
    g.element_for_perm(p).expect("S_n contains every permutation of n points")
}

/// `π̂(Σ v_k W_k) = Σ v_k·π(W_k)` over `S_n`, framings kept as Laurent vectors.
pub fn pi_hat(x: &BraidAlgebraElement) -> Result<Iterant<LaurentPoly>> {
    let g = symmetric_target(x.strands())?;
    let terms = x.terms().map(|(w, v)| (element(&g, &w.permutation()), v.to_vec()));
    Iterant::from_terms(&g, terms)
}

/// [`pi_hat`] followed by `t ↦ value`.
pub fn pi_hat_at(x: &BraidAlgebraElement, t: &Cyclotomic) -> Result<Iterant<Cyclotomic>> {
    pi_hat(x)?.try_map(|p| p.specialize(t))
}

/// How the two-slot framing `[t,t]` attached to `σ_k` is read on `n` strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FramingReading {
    /// `[t, …, t]`: the scalar `t`.
    Constant,
    /// `[t, t, 1, …, 1]` for every generator.
    Padded,
    /// `t` on the two strands that `σ_k` crosses, `1` elsewhere.
    Local,
}

impl FramingReading {
    pub const ALL: [FramingReading; 3] = [FramingReading::Constant, FramingReading::Padded, FramingReading::Local];

    pub fn vector(self, n: usize, k: usize, t: &Cyclotomic) -> Vec<Cyclotomic> {
        (0..n)
            .map(|i| {
                let framed = match self {
                    FramingReading::Constant => true,
                    FramingReading::Padded => i < 2,
                    FramingReading::Local => i + 1 == k || i == k,
                };
                if framed {
                    t.clone()
                } else {
                    Cyclotomic::one()
                }
            })
            .collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            FramingReading::Constant => "constant [t,...,t]",
            FramingReading::Padded => "padded [t,t,1,...]",
            FramingReading::Local => "local (t on the crossing strands)",
        }
    }
}

fn t_inverse(t: &Cyclotomic) -> Result<Cyclotomic> {
    if t.is_zero() {
        return Err(AlgebraError::NotInvertible);
    }
    t.inv()
}

/// `ρ(σ_k^{±1})` under a reading, as an iterant over `S_n`.
pub fn rho_letter(n: usize, l: Letter, t: &Cyclotomic, reading: FramingReading) -> Result<Iterant<Cyclotomic>> {
    let g = symmetric_target(n)?;
    let tk = Perm::adjacent_transposition(n, l.generator)?;
    let base = if l.inverse { t_inverse(t)? } else { t.clone() };
    Iterant::monomial(&g, reading.vector(n, l.generator, &base), element(&g, &tk))
}

/// `ρ` with an explicit reading of the generator framings.
pub fn rho_with(x: &BraidAlgebraElement, t: &Cyclotomic, reading: FramingReading) -> Result<Iterant<Cyclotomic>> {
    t_inverse(t)?;
    let n = x.strands();
    let g = symmetric_target(n)?;
    let mut acc = Iterant::zero(&g);
    for (w, v) in x.terms() {
        let framing = v.iter().map(|p| p.specialize(t)).collect::<Result<Vec<_>>>()?;
        let mut term = Iterant::vector(&g, framing)?;
        for &l in w.letters() {
            term = term.mul(&rho_letter(n, l, t, reading)?)?;
        }
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// `ρ(σ_k) = [t,…,t]·T_k`, `ρ(σ_k⁻¹) = [t⁻¹,…,t⁻¹]·T_k`, extended
/// multiplicatively and linearly.
pub fn rho(x: &BraidAlgebraElement, t: &Cyclotomic) -> Result<Iterant<Cyclotomic>> {
    rho_with(x, t, FramingReading::Constant)
}

/// `ρ` followed by `T₁ ↦ P`, `T₂ ↦ Q`, landing in the iterants over
/// `C₃ = {1, A, B}` that carry the Gell-Mann matrices.
pub fn embed_su3(x: &BraidAlgebraElement, t: &Cyclotomic) -> Result<Iterant<Cyclotomic>> {
    if x.strands() != 3 {
        return Err(AlgebraError::WrongGroup(format!("three strands, got {}", x.strands())));
    }
    let t_inv = t_inverse(t)?;
    let set = gell_mann(&CyclotomicField::new(12)?)?;
    let (p, q, _) = transposition_embedding(&set)?;
    let g = set.group.clone();
    let mut acc = Iterant::zero(&g);
    for (w, v) in x.terms() {
        let framing = v.iter().map(|p| p.specialize(t)).collect::<Result<Vec<_>>>()?;
        let mut term = Iterant::vector(&g, framing)?;
        for l in w.letters() {
            let image = if l.generator == 1 { &p } else { &q };
            let scale = if l.inverse { &t_inv } else { t };
            term = term.mul(&image.scale(scale))?;
        }
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// Braid relations and inverse pairs under `ρ` with the given reading.
pub fn rho_relation_checks(n: usize, t: &Cyclotomic, reading: FramingReading) -> Result<Vec<Check>> {
    let gen = |k: usize, inverse: bool| rho_letter(n, Letter { generator: k, inverse }, t, reading);
    let g = symmetric_target(n)?;
    let one = Iterant::one(&g);
    let mut out = Vec::new();
    for k in 1..n - 1 {
        let (a, b) = (gen(k, false)?, gen(k + 1, false)?);
        out.push(Check::equal(
            format!("rho(s{k} s{} s{k}) = rho(s{} s{k} s{})", k + 1, k + 1, k + 1),
            &(&(&a * &b) * &a),
            &(&(&b * &a) * &b),
        ));
    }
    for j in 1..n {
        for k in j + 2..n {
            let (a, b) = (gen(j, false)?, gen(k, false)?);
            out.push(Check::equal(format!("rho(s{j} s{k}) = rho(s{k} s{j})"), &(&a * &b), &(&b * &a)));
        }
    }
    for k in 1..n {
        let (a, b) = (gen(k, false)?, gen(k, true)?);
        out.push(Check::equal(format!("rho(s{k}) rho(s{k}^-1) = 1"), &(&a * &b), &one));
        out.push(Check::equal(format!("rho(s{k}^-1) rho(s{k}) = 1"), &(&b * &a), &one));
    }
    Ok(out)
}

/// Outcome of comparing a product against a factorization.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FactorizationReport {
    pub holds: bool,
    pub product: String,
    pub factors_product: String,
}

/// Whether the product of `factors` has the normal form of `product`.
pub fn verify_factorization(product: &FramedBraid, factors: &[FramedBraid]) -> Result<FactorizationReport> {
    let folded = factors.iter().try_fold(FramedBraid::identity(product.strands()), |acc, f| acc.mul(f))?;
    Ok(FactorizationReport {
        holds: folded == *product,
        product: product.to_string(),
        factors_product: folded.to_string(),
    })
}

/// Every word of length at most `max_len` over `σ_1^{±1}, …, σ_{n−1}^{±1}`,
/// as unreduced letter sequences.
pub fn all_letter_sequences(n: usize, max_len: usize) -> Vec<Vec<Letter>> {
    let alphabet: Vec<Letter> =
        (1..n).flat_map(|k| [false, true].map(|inverse| Letter { generator: k, inverse })).collect();
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<Letter>| {
                alphabet.iter().map(move |&l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// The braid word spelled by a letter sequence (freely reduced).
pub fn word_of(n: usize, letters: &[Letter]) -> Result<BraidWord> {
    let pairs: Vec<(i64, i64)> = letters.iter().map(|l| (l.generator as i64, l.sign())).collect();
    BraidWord::from_pairs(n, &pairs)
}
