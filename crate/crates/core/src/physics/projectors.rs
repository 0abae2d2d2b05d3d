use std::sync::Arc;

use num_traits::One;

use crate::error::{AlgebraError, Result};
use crate::groups::Group;
use crate::iterants::{Iterant, Matrix};
use crate::Cyclotomic;

type M = Matrix<Cyclotomic>;
type It = Iterant<Cyclotomic>;

/// The matrix units `U^{pq} = |p⟩⟨q|` for `p, q ∈ {0, …, n−1}`.
#[derive(Clone, Debug)]
pub struct ProjectorBasis {
    n: usize,
    units: Vec<M>,
}

impl ProjectorBasis {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(AlgebraError::Shape("projector basis of dimension 0".into()));
        }
        let units = (0..n * n).map(|k| M::unit(n, k / n, k % n)).collect();
        Ok(ProjectorBasis { n, units })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    /// `U^{pq}` (0-based, like the kets `|0⟩, |1⟩, …`).
    pub fn unit(&self, p: usize, q: usize) -> &M {
        &self.units[p * self.n + q]
    }

    /// `P_p = U^{pp}`
    pub fn projector(&self, p: usize) -> &M {
        self.unit(p, p)
    }

    /// The basis column `|p⟩`.
    pub fn ket(&self, p: usize) -> M {
        let mut v = M::zeros(self.n, 1);
        v.set(p, 0, Cyclotomic::one());
        v
    }

    /// Checks `U^{pq}U^{rs} = δ_{qr}U^{ps}` for all indices, completeness,
    /// idempotence and orthogonality; returns the first violation.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let n = self.n;
        let zero = M::zeros(n, n);
        for p in 0..n {
            for q in 0..n {
                for r in 0..n {
                    for s in 0..n {
                        let lhs = self.unit(p, q) * self.unit(r, s);
                        let rhs = if q == r { self.unit(p, s).clone() } else { zero.clone() };
                        if lhs != rhs {
                            return Err(format!("U^{p}{q} U^{r}{s} != delta_{q}{r} U^{p}{s}"));
                        }
                    }
                }
            }
        }
        let total = (0..n).fold(zero.clone(), |acc, p| &acc + self.projector(p));
        if total != M::identity(n) {
            return Err("projectors do not sum to the identity".into());
        }
        for p in 0..n {
            if self.projector(p) * self.projector(p) != *self.projector(p) {
                return Err(format!("P_{p} is not idempotent"));
            }
            for q in (0..n).filter(|&q| q != p) {
                if !(self.projector(p) * self.projector(q)).is_zero() {
                    return Err(format!("P_{p} P_{q} != 0"));
                }
            }
        }
        Ok(())
    }
}

/// `H = Σ e_i P_i`.
pub fn spectral_assemble(eigenvalues: &[Cyclotomic], basis: &ProjectorBasis) -> Result<M> {
    if eigenvalues.len() != basis.dimension() {
        return Err(AlgebraError::DegreeMismatch { expected: basis.dimension(), found: eigenvalues.len() });
    }
    let n = basis.dimension();
    Ok(eigenvalues.iter().enumerate().fold(M::zeros(n, n), |acc, (p, e)| &acc + &basis.projector(p).scale(e)))
}

/// Two-level operators built from `P = U^{00}`, `Q = U^{11}`,
/// `R = U^{01}`, `S = U^{10}`.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliOps {
    /// `R + S`
    pub x: M,
    /// `−i(R − S)`
    pub y: M,
    /// `P − Q`
    pub z: M,
    /// `(R + S)/2`
    pub sx: M,
    /// `(R − S)/(2i)`
    pub sy: M,
    /// `(P − Q)/2`
    pub sz: M,
}

fn two_level() -> (M, M, M, M) {
    let b = ProjectorBasis::new(2).expect("n = 2");
    (b.unit(0, 0).clone(), b.unit(1, 1).clone(), b.unit(0, 1).clone(), b.unit(1, 0).clone())
}

pub fn pauli_ops() -> PauliOps {
    let (p, q, r, s) = two_level();
    let i = Cyclotomic::i();
    let half = Cyclotomic::ratio(1, 2);
    let z = &p - &q;
    let x = &r + &s;
    let y = (&r - &s).scale(&-i.clone());
    let sx = x.scale(&half);
    let sy = (&r - &s).scale(&(&half * &i.inv().expect("i is a unit")));
    let sz = z.scale(&half);
    PauliOps { x, y, z, sx, sy, sz }
}

/// `(c, c†, N) = (S, R, RS)`.
pub fn fermion_ops() -> (M, M, M) {
    let (_, _, r, s) = two_level();
    let n = &r * &s;
    (s, r, n)
}

/// `(η₁, η₂) = (R + S, i(R − S))`.
pub fn majorana_pair() -> (M, M) {
    let (_, _, r, s) = two_level();
    (&r + &s, (&r - &s).scale(&Cyclotomic::i()))
}

/// The order-2 group `{1, h}` used for every two-level iterant.
pub fn c2() -> Arc<Group> {
    Arc::new(Group::cyclic(2).expect("C2"))
}

fn ints(xs: &[i64]) -> Vec<Cyclotomic> {
    xs.iter().map(|&x| Cyclotomic::from(x)).collect()
}

/// `P = [1,0]`, `Q = [0,1]`, `R = [1,0]h`, `S = [0,1]h` over `C₂`.
pub fn two_level_iterants(g: &Arc<Group>) -> Result<[It; 4]> {
    Ok([
        It::vector(g, ints(&[1, 0]))?,
        It::vector(g, ints(&[0, 1]))?,
        It::labelled(g, ints(&[1, 0]), "h")?,
        It::labelled(g, ints(&[0, 1]), "h")?,
    ])
}

/// Named two-level iterants: the Pauli family, the fermion triple and
/// the Majorana pair.
pub fn two_level_bindings(g: &Arc<Group>) -> Result<Vec<(String, It)>> {
    let [p, q, r, s] = two_level_iterants(g)?;
    let i = Cyclotomic::i();
    let half = Cyclotomic::ratio(1, 2);
    let x = &r + &s;
    let y = (&r - &s).scale(&-i.clone());
    let z = &p - &q;
    let sy = (&r - &s).scale(&(&half * &i.inv()?));
    let n = &r * &s;
    let eta2 = (&r - &s).scale(&i);
    let named = [
        ("P", p.clone()),
        ("Q", q),
        ("R", r.clone()),
        ("S", s.clone()),
        ("X", x.clone()),
        ("Y", y),
        ("Z", z.clone()),
        ("Sx", x.scale(&half)),
        ("Sy", sy),
        ("Sz", z.scale(&half)),
        ("c", s),
        ("cdag", r),
        ("N", n),
        ("n1", x),
        ("n2", eta2),
    ];
    Ok(named.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
}
