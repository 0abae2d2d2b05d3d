//! Quantum constructions on top of the iterant and matrix core.
//!
//! Matrix units and the two-level operators (Pauli, fermion, Majorana),
//! three quaternion constructions, clock/shift parafermion pairs for any
//! order `n ≥ 2`, and the Minkowski observable. Where an iterant form
//! exists it is provided next to the matrix form.

mod minkowski;
mod parafermion;
mod projectors;
mod quaternions;

use std::sync::Arc;

pub use minkowski::{expected_char_poly, minkowski_observable};
pub use parafermion::{monomial_rank, parafermion_iterants, parafermion_pair};
pub use projectors::{
    c2, fermion_ops, majorana_pair, pauli_ops, spectral_assemble, two_level_bindings, two_level_iterants,
    PauliOps, ProjectorBasis,
};
pub use quaternions::{
    iota_to_klein_identification, klein_in_s4, quaternions_iota, quaternions_klein, quaternions_signed_perm,
    realify, QuaternionTriple,
};

use crate::error::{AlgebraError, Result};
use crate::groups::Group;
use crate::iterants::Iterant;
use crate::scalars::{parse_rational, CyclotomicField};
use crate::Cyclotomic;

/// Names accepted by [`construction`]; `n` and `T,X,Y,Z` are parameters.
pub const CONSTRUCTIONS: &[&str] = &[
    "pauli",
    "fermion",
    "majorana",
    "quaternion:klein",
    "quaternion:iota",
    "quaternion:signed",
    "parafermion:n",
    "minkowski(T,X,Y,Z)",
];

/// A named construction: its group and the iterants it binds.
#[derive(Clone, Debug)]
pub struct Construction {
    pub name: String,
    pub group: Arc<Group>,
    pub bindings: Vec<(String, Iterant<Cyclotomic>)>,
}

fn pick(all: Vec<(String, Iterant<Cyclotomic>)>, names: &[&str]) -> Vec<(String, Iterant<Cyclotomic>)> {
    all.into_iter().filter(|(k, _)| names.contains(&k.as_str())).collect()
}

fn triple(name: &str, q: QuaternionTriple) -> Construction {
    Construction {
        name: name.to_string(),
        group: q.i.group().clone(),
        bindings: vec![("I".into(), q.i), ("J".into(), q.j), ("K".into(), q.k)],
    }
}

/// Looks up a construction from the registry (see [`CONSTRUCTIONS`]).
pub fn construction(name: &str, field: &CyclotomicField) -> Result<Construction> {
    let key: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    let two_level = |names: &[&str]| -> Result<Construction> {
        field.require(4)?;
        let g = c2();
        Ok(Construction { name: key.clone(), group: g.clone(), bindings: pick(two_level_bindings(&g)?, names) })
    };
    match key.as_str() {
        "pauli" => two_level(&["P", "Q", "R", "S", "X", "Y", "Z", "Sx", "Sy", "Sz"]),
        "fermion" => two_level(&["P", "Q", "R", "S", "c", "cdag", "N"]),
        "majorana" => two_level(&["R", "S", "n1", "n2"]),
        "quaternion:klein" => Ok(triple(&key, quaternions_klein())),
        "quaternion:iota" => Ok(triple(&key, quaternions_iota(field)?)),
        "quaternion:signed" => Ok(triple(&key, quaternions_signed_perm())),
        _ => {
            if let Some(n) = key.strip_prefix("parafermion:") {
                let n: u32 = n.parse().map_err(|_| AlgebraError::UnsupportedGroup(name.to_string()))?;
                let [e, h] = parafermion_iterants(n, field)?;
                return Ok(Construction {
                    name: key.clone(),
                    group: e.group().clone(),
                    bindings: vec![("e".into(), e), ("h".into(), h)],
                });
            }
            if let Some(args) = key.strip_prefix("minkowski(").and_then(|s| s.strip_suffix(')')) {
                let vals: Vec<Cyclotomic> = args
                    .split(',')
                    .map(|a| parse_rational(a).map(Cyclotomic::rational))
                    .collect::<Result<_>>()?;
                if vals.len() != 4 {
                    return Err(AlgebraError::DegreeMismatch { expected: 4, found: vals.len() });
                }
                let h = minkowski_observable(field, &vals[0], &vals[1], &vals[2], &vals[3])?;
                return Ok(Construction { name: key.clone(), group: h.group().clone(), bindings: vec![("H".into(), h)] });
            }
            Err(AlgebraError::UnsupportedGroup(format!(
                "unknown construction {name:?}; known: {}",
                CONSTRUCTIONS.join(", ")
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_lookups() {
        let f = CyclotomicField::new(12).unwrap();
        for name in ["pauli", "fermion", "majorana", "quaternion:klein", "quaternion:iota", "quaternion:signed"] {
            assert!(!construction(name, &f).unwrap().bindings.is_empty(), "{name}");
        }
        let p = construction("parafermion:3", &f).unwrap();
        assert_eq!(p.group.order(), 3);
        let m = construction("minkowski(2, 1, 1, 1)", &f).unwrap();
        assert_eq!(m.bindings[0].1.det2().unwrap(), Cyclotomic::from(1));
        assert!(construction("parafermion:5", &f).is_err());
        assert!(construction("minkowski(1,2)", &f).is_err());
        assert!(construction("octonion", &f).is_err());
    }
}
