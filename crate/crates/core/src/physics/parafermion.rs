use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::groups::Group;
use crate::iterants::{Iterant, Matrix};
use crate::scalars::CyclotomicField;
use crate::Cyclotomic;

type M = Matrix<Cyclotomic>;

/// Clock `e = diag(1, ω, …, ω^{n−1})` and shift `η` (row `i` has its 1 in
/// column `i − 1`, indices mod `n`) with `ω = ζ_n`, so that
/// `eⁿ = ηⁿ = 1` and `eη = ω ηe`.
pub fn parafermion_pair(n: u32, field: &CyclotomicField) -> Result<(M, M)> {
    let [e, eta] = parafermion_iterants(n, field)?;
    Ok((e.to_matrix(), eta.to_matrix()))
}

/// The same pair as iterants over `C_n`: `e = [1, ω, …, ω^{n−1}]` and
/// `η = S^{n−1}`.
pub fn parafermion_iterants(n: u32, field: &CyclotomicField) -> Result<[Iterant<Cyclotomic>; 2]> {
    if n < 2 {
        return Err(AlgebraError::UnsupportedGroup(format!("parafermion order {n}; need n >= 2")));
    }
    field.require(n)?;
    let g = Arc::new(Group::cyclic(n as usize)?);
    let clock = (0..n as i64).map(|k| field.root(n, k)).collect::<Result<Vec<_>>>()?;
    let e = Iterant::vector(&g, clock)?;
    // element k of the cyclic group is S^k
    Ok([e, Iterant::element(&g, crate::Elem(n as usize - 1))])
}

/// Rank of the `n²` flattened monomials `e^a η^b`, `0 ≤ a, b < n`.
pub fn monomial_rank(e: &M, eta: &M) -> Result<usize> {
    let n = e.rows();
    let mut rows = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let m = e.pow(a as u32)?.mul(&eta.pow(b as u32)?)?;
            rows.push(m.entries().to_vec());
        }
    }
    Ok(M::from_rows(rows)?.rank())
}
