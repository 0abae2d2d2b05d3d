use std::sync::RwLock;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::framed::{FramedBraid, LaurentVector};
use super::word::BraidWord;
use crate::error::{AlgebraError, Result};
use crate::scalars::parse_rational;
use crate::{Cyclotomic, LaurentPoly};

/// Particle record: `{"name": "e+", "strands": 3, "framing": ["t^1","t^1","t^1"],
/// "word": [[1,1],[2,-1]]}`. The framing is read as sitting on the left.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParticleJson {
    pub name: String,
    pub strands: usize,
    pub framing: Vec<String>,
    pub word: Vec<[i64; 2]>,
}

impl ParticleJson {
    pub fn from_braid(name: &str, x: &FramedBraid) -> Result<Self> {
        Ok(ParticleJson {
            name: name.to_string(),
            strands: x.strands(),
            framing: x.framing().iter().map(format_framing_entry).collect::<Result<_>>()?,
            word: x.word().pairs().into_iter().map(|(k, s)| [k, s]).collect(),
        })
    }

    pub fn to_braid(&self) -> Result<FramedBraid> {
        let pairs: Vec<(i64, i64)> = self.word.iter().map(|[k, s]| (*k, *s)).collect();
        let word = BraidWord::from_pairs(self.strands, &pairs)?;
        let framing = self.framing.iter().map(|s| parse_framing_entry(s)).collect::<Result<_>>()?;
        FramedBraid::new(framing, word)
    }
}

/// Parses `1`, `t`, `t^-2`, `3/2 t^4 - t + 1` (rational coefficients).
pub fn parse_framing_entry(s: &str) -> Result<LaurentPoly> {
    let bad = || AlgebraError::MalformedScalar(format!("framing entry {s:?}"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad());
    }
    let mut pieces = Vec::new();
    let mut start = 0;
    let bytes = compact.as_bytes();
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
            pieces.push(&compact[start..i]);
            start = i;
        }
    }
    pieces.push(&compact[start..]);
    let mut acc = LaurentPoly::default();
    for piece in pieces {
        let piece = piece.strip_prefix('+').unwrap_or(piece);
        let (coeff, exp) = match piece.split_once('t') {
            None => (piece, 0),
            Some((c, rest)) => {
                let exp = match rest {
                    "" => 1,
                    r => r.strip_prefix('^').and_then(|e| e.parse::<i64>().ok()).ok_or_else(bad)?,
                };
                (c, exp)
            }
        };
        let c = match coeff {
            "" => Cyclotomic::one(),
            "-" => -Cyclotomic::one(),
            c => Cyclotomic::rational(parse_rational(c).map_err(|_| bad())?),
        };
        acc = &acc + &LaurentPoly::monomial(c, exp);
    }
    Ok(acc)
}

/// `t^a` for unit monomials, otherwise the polynomial; coefficients must
/// be rational.
pub fn format_framing_entry(x: &LaurentPoly) -> Result<String> {
    if x.terms().any(|(_, c)| c.as_rational().is_none()) {
        return Err(AlgebraError::MalformedScalar(format!("framing {x} has irrational coefficients")));
    }
    Ok(match x.as_monomial() {
        Some((c, 0)) if c.is_one() => "1".to_string(),
        Some((c, k)) if c.is_one() => format!("t^{k}"),
        _ => x.to_string(),
    })
}

fn constant(strands: usize, exp: i64) -> LaurentVector {
    vec![LaurentPoly::t_pow(exp); strands]
}

/// `e⁺ = [t,t,t]σ₁σ₂⁻¹`.
pub fn positron() -> FramedBraid {
    let word = BraidWord::from_pairs(3, &[(1, 1), (2, -1)]).expect("valid word");
    FramedBraid::new(constant(3, 1), word).expect("three strands")
}

/// `e⁻ = σ₂σ₁⁻¹[t⁻¹,t⁻¹,t⁻¹]`, normalized with the framing on the left.
pub fn electron() -> FramedBraid {
    let word = BraidWord::from_pairs(3, &[(2, 1), (1, -1)]).expect("valid word");
    FramedBraid::from_right(word, constant(3, -1)).expect("three strands")
}

/// `γ = [1,1,1]`, the identity.
pub fn photon() -> FramedBraid {
    FramedBraid::identity(3)
}

/// The particles that ship with the library.
pub fn builtin_particles() -> Vec<(String, FramedBraid)> {
    vec![("e+".into(), positron()), ("e-".into(), electron()), ("gamma".into(), photon())]
}

/// A builtin particle by name.
pub fn particle(name: &str) -> Result<FramedBraid> {
    builtin_particles().into_iter().find(|(n, _)| n == name).map(|(_, x)| x).ok_or_else(|| {
        AlgebraError::UnknownParticle {
            name: name.to_string(),
            known: builtin_particles().into_iter().map(|(n, _)| n).collect::<Vec<_>>().join(", "),
        }
    })
}

/// Append-only registry of named framed braids. Registration takes a
/// write lock; lookups share a read lock.
#[derive(Debug)]
pub struct Catalogue {
    entries: RwLock<Vec<(String, FramedBraid)>>,
}

impl Default for Catalogue {
    fn default() -> Self {
        Catalogue { entries: RwLock::new(builtin_particles()) }
    }
}

impl Catalogue {
    pub fn empty() -> Self {
        Catalogue { entries: RwLock::new(Vec::new()) }
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.read().expect("catalogue lock").iter().map(|(n, _)| n.clone()).collect()
    }

    pub fn get(&self, name: &str) -> Result<FramedBraid> {
        let entries = self.entries.read().expect("catalogue lock");
        entries.iter().find(|(n, _)| n == name).map(|(_, x)| x.clone()).ok_or_else(|| {
            AlgebraError::UnknownParticle {
                name: name.to_string(),
                known: entries.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>().join(", "),
            }
        })
    }

    /// Adds a particle; names already present are rejected.
    pub fn register(&self, name: &str, x: FramedBraid) -> Result<()> {
        let mut entries = self.entries.write().expect("catalogue lock");
        if entries.iter().any(|(n, _)| n == name) {
            return Err(AlgebraError::DuplicateParticle(name.to_string()));
        }
        entries.push((name.to_string(), x));
        Ok(())
    }

    pub fn register_json(&self, p: &ParticleJson) -> Result<()> {
        self.register(&p.name, p.to_braid()?)
    }

    /// Loads a single record or an array of records; returns the names added.
    pub fn load_json(&self, text: &str) -> Result<Vec<String>> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum OneOrMany {
            One(ParticleJson),
            Many(Vec<ParticleJson>),
        }
        let records = match serde_json::from_str(text).map_err(|e| AlgebraError::Json(e.to_string()))? {
            OneOrMany::One(p) => vec![p],
            OneOrMany::Many(ps) => ps,
        };
        let parsed = records.iter().map(|p| Ok((p.name.clone(), p.to_braid()?))).collect::<Result<Vec<_>>>()?;
        let mut added = Vec::new();
        for (name, x) in parsed {
            self.register(&name, x)?;
            added.push(name);
        }
        Ok(added)
    }

    pub fn to_json(&self) -> Result<Vec<ParticleJson>> {
        let entries = self.entries.read().expect("catalogue lock");
        entries.iter().map(|(n, x)| ParticleJson::from_braid(n, x)).collect()
    }
}
