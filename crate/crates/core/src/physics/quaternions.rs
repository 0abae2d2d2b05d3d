use std::sync::Arc;

use crate::check::Check;
use crate::error::{AlgebraError, Result};
use crate::groups::{Group, Perm};
use crate::iterants::{Iterant, Matrix};
use crate::scalars::CyclotomicField;
use crate::Cyclotomic;

type It = Iterant<Cyclotomic>;

/// Three iterants meant to satisfy the quaternion relations.
#[derive(Clone, Debug, PartialEq)]
pub struct QuaternionTriple {
    pub i: It,
    pub j: It,
    pub k: It,
}

impl QuaternionTriple {
    /// `I² = J² = K² = IJK = −1` and the six cyclic product rules.
    pub fn relations(&self) -> Vec<Check> {
        let g = self.i.group();
        let minus_one = It::scalar(g, Cyclotomic::from(-1));
        let (i, j, k) = (&self.i, &self.j, &self.k);
        vec![
            Check::equal("I^2 = -1", &(i * i), &minus_one),
            Check::equal("J^2 = -1", &(j * j), &minus_one),
            Check::equal("K^2 = -1", &(k * k), &minus_one),
            Check::equal("IJK = -1", &(&(i * j) * k), &minus_one),
            Check::equal("IJ = K", &(i * j), k),
            Check::equal("JI = -K", &(j * i), &-k),
            Check::equal("JK = I", &(j * k), i),
            Check::equal("KJ = -I", &(k * j), &-i),
            Check::equal("KI = J", &(k * i), j),
            Check::equal("IK = -J", &(i * k), &-j),
        ]
    }

    pub fn matrices(&self) -> [Matrix<Cyclotomic>; 3] {
        [self.i.to_matrix(), self.j.to_matrix(), self.k.to_matrix()]
    }
}

fn signs(xs: [i64; 4]) -> Vec<Cyclotomic> {
    xs.iter().map(|&x| Cyclotomic::from(x)).collect()
}

const ALPHA: [i64; 4] = [1, -1, -1, 1];
const BETA: [i64; 4] = [1, 1, -1, -1];
const GAMMA: [i64; 4] = [1, -1, 1, -1];

/// `I = αA, J = βB, K = γC` over the Klein four group acting regularly.
pub fn quaternions_klein() -> QuaternionTriple {
    let g = Arc::new(Group::klein4());
    let term = |v, l| It::labelled(&g, signs(v), l).expect("klein labels");
    QuaternionTriple { i: term(ALPHA, "A"), j: term(BETA, "B"), k: term(GAMMA, "C") }
}

/// `I = ιε, J = εη, K = ιη` over `C₂`, with `ι = ζ₄` a commuting scalar.
pub fn quaternions_iota(field: &CyclotomicField) -> Result<QuaternionTriple> {
    let iota = field.i()?;
    let g = crate::physics::c2();
    let eps = It::vector(&g, vec![Cyclotomic::from(1), Cyclotomic::from(-1)])?;
    let eta = It::element(&g, g.find("h").expect("h"));
    Ok(QuaternionTriple { i: eps.scale(&iota), j: &eps * &eta, k: eta.scale(&iota) })
}

/// The elements `s = (12)(34)`, `l = (13)(24)`, `t = (14)(23)` of `S₄`
/// acting naturally.
pub fn klein_in_s4(g: &Group) -> Result<[crate::Elem; 3]> {
    let find = |cycles: &[&[usize]]| -> Result<crate::Elem> {
        let p = Perm::from_cycles(4, cycles)?;
        g.element_for_perm(&p).ok_or_else(|| AlgebraError::WrongGroup(format!("{p} not in {}", g.name())))
    };
    Ok([find(&[&[1, 2], &[3, 4]])?, find(&[&[1, 3], &[2, 4]])?, find(&[&[1, 4], &[2, 3]])?])
}

/// `I = [+1,−1,−1,+1]s, J = [+1,+1,−1,−1]l, K = [+1,−1,+1,−1]t` over `S₄`.
/// The identification with [`quaternions_klein`] is `A ↔ s, B ↔ l, C ↔ t`.
pub fn quaternions_signed_perm() -> QuaternionTriple {
    let g = Arc::new(Group::symmetric_natural(4).expect("S4"));
    let [s, l, t] = klein_in_s4(&g).expect("klein subgroup of S4");
    let term = |v, e| It::monomial(&g, signs(v), e).expect("degree 4");
    QuaternionTriple { i: term(ALPHA, s), j: term(BETA, l), k: term(GAMMA, t) }
}

/// Replaces each entry `a + bι` of a Q(i) matrix by the block `[[a, −b], [b, a]]`.
pub fn realify(m: &Matrix<Cyclotomic>) -> Result<Matrix<Cyclotomic>> {
    let mut out = Matrix::zeros(2 * m.rows(), 2 * m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let x = m.get(r, c).minimal();
            if 4 % x.order() != 0 {
                return Err(AlgebraError::MissingRoot { needed: x.order(), order: 4 });
            }
            let x = x.embed(4);
            let a = Cyclotomic::rational(x.coeffs()[0].clone());
            let b = Cyclotomic::rational(x.coeffs()[1].clone());
            out.set(2 * r, 2 * c, a.clone());
            out.set(2 * r, 2 * c + 1, -b.clone());
            out.set(2 * r + 1, 2 * c, b);
            out.set(2 * r + 1, 2 * c + 1, a);
        }
    }
    Ok(out)
}

/// The change of basis `D = diag(1, −1, 1, −1)` with
/// `D·realify(M_ι(X))·D = M_klein(X)` for `X ∈ {I, J, K}`.
pub fn iota_to_klein_identification() -> Matrix<Cyclotomic> {
    Matrix::diag(&signs([1, -1, 1, -1]))
}
