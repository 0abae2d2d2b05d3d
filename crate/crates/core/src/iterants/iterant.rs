use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::{perm_matrix, Matrix};
use crate::error::{AlgebraError, Result};
use crate::groups::{builtin_group, Elem, Group, GroupJson};
use crate::scalar::{Field, Scalar};

/// An element `Σ_g v_g·g` of the iterant algebra over a group with a
/// permutation action of degree `n`; each `v_g` has length `n`.
///
/// Products follow `(a g)(b h) = (a·b^g)(gh)` where `b^g` slides `b` to the
/// left of `g` (see [`Group::slide_left`]). With this rule the map
/// `Σ v_g g ↦ Σ diag(v_g)·M_g` is an algebra homomorphism.
#[derive(Clone)]
pub struct Iterant<F> {
    group: Arc<Group>,
    terms: BTreeMap<Elem, Vec<F>>,
}

fn same_group(a: &Arc<Group>, b: &Arc<Group>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<F: Scalar> Iterant<F> {
    pub fn zero(group: &Arc<Group>) -> Self {
        Iterant { group: group.clone(), terms: BTreeMap::new() }
    }

    pub fn one(group: &Arc<Group>) -> Self {
        Self::scalar(group, F::one())
    }

    /// `c` times the unit: the constant vector `[c, …, c]` on the identity.
    pub fn scalar(group: &Arc<Group>, c: F) -> Self {
        let v = vec![c; group.degree()];
        Self::monomial(group, v, group.identity()).expect("degree matches")
    }

    /// `v·g`
    pub fn monomial(group: &Arc<Group>, v: Vec<F>, g: Elem) -> Result<Self> {
        let mut x = Self::zero(group);
        x.accumulate(g, v)?;
        Ok(x)
    }

    /// `v·1`
    pub fn vector(group: &Arc<Group>, v: Vec<F>) -> Result<Self> {
        Self::monomial(group, v, group.identity())
    }

    /// `[1, …, 1]·g`
    pub fn element(group: &Arc<Group>, g: Elem) -> Self {
        Self::monomial(group, vec![F::one(); group.degree()], g).expect("degree matches")
    }

    /// Looks the element up by label.
    pub fn labelled(group: &Arc<Group>, v: Vec<F>, label: &str) -> Result<Self> {
        let g = group
            .find(label)
            .ok_or_else(|| AlgebraError::WrongGroup(format!("no element {label:?} in {}", group.name())))?;
        Self::monomial(group, v, g)
    }

    pub fn from_terms(group: &Arc<Group>, terms: impl IntoIterator<Item = (Elem, Vec<F>)>) -> Result<Self> {
        let mut x = Self::zero(group);
        for (g, v) in terms {
            x.accumulate(g, v)?;
        }
        Ok(x)
    }

    /// The basic idempotent `e_i` (1-based): a 1 in slot `i` on the identity.
    pub fn basic_idempotent(group: &Arc<Group>, i: usize) -> Result<Self> {
        let n = group.degree();
        if i == 0 || i > n {
            return Err(AlgebraError::IndexOutOfRange { index: i, max: n });
        }
        let mut v = vec![F::zero(); n];
        v[i - 1] = F::one();
        Self::vector(group, v)
    }

    fn accumulate(&mut self, g: Elem, v: Vec<F>) -> Result<()> {
        if v.len() != self.group.degree() {
            return Err(AlgebraError::DegreeMismatch { expected: self.group.degree(), found: v.len() });
        }
        if g.0 >= self.group.order() {
            return Err(AlgebraError::IndexOutOfRange { index: g.0 + 1, max: self.group.order() });
        }
        let sum = match self.terms.remove(&g) {
            Some(old) => old.iter().zip(&v).map(|(a, b)| a.add_ref(b)).collect(),
            None => v,
        };
        if !sum.iter().all(F::is_zero) {
            self.terms.insert(g, sum);
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Elem, &[F])> {
        self.terms.iter().map(|(g, v)| (*g, v.as_slice()))
    }

    pub fn coefficient(&self, g: Elem) -> Option<&[F]> {
        self.terms.get(&g).map(Vec::as_slice)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` when the element is `c` times the unit.
    pub fn as_scalar(&self) -> Option<F> {
        if self.terms.is_empty() {
            return Some(F::zero());
        }
        if self.terms.len() != 1 {
            return None;
        }
        let v = self.terms.get(&self.group.identity())?;
        v.iter().all(|x| *x == v[0]).then(|| v[0].clone())
    }

    fn check_group(&self, rhs: &Self) -> Result<()> {
        if !same_group(&self.group, &rhs.group) {
            return Err(AlgebraError::GroupMismatch {
                left: self.group.name().to_string(),
                right: rhs.group.name().to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_group(rhs)?;
        let mut out = self.clone();
        for (g, v) in &rhs.terms {
            out.accumulate(*g, v.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn scale(&self, k: &F) -> Self {
        self.map(|x| k.mul_ref(x))
    }

    /// Applies `f` to every coefficient, dropping vectors that become zero.
    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Iterant<G> {
        self.try_map(|x| Ok(f(x))).expect("infallible map")
    }

    pub fn try_map<G: Scalar>(&self, f: impl Fn(&F) -> Result<G>) -> Result<Iterant<G>> {
        let mut terms = BTreeMap::new();
        for (g, v) in &self.terms {
            let w: Vec<G> = v.iter().map(&f).collect::<Result<_>>()?;
            if !w.iter().all(G::is_zero) {
                terms.insert(*g, w);
            }
        }
        Ok(Iterant { group: self.group.clone(), terms })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_group(rhs)?;
        let mut out = Self::zero(&self.group);
        for (g, a) in &self.terms {
            for (h, b) in &rhs.terms {
                let slid = self.group.slide_left(b, *g)?;
                let v = a.iter().zip(&slid).map(|(x, y)| x.mul_ref(y)).collect();
                out.accumulate(self.group.mul(*g, *h), v)?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.group), |acc, _| acc.mul(self).expect("same group"))
    }

    /// `xy − yx`
    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        self.mul(rhs)?.sub(&rhs.mul(self)?)
    }

    /// `xy + yx`
    pub fn anticommutator(&self, rhs: &Self) -> Result<Self> {
        self.mul(rhs)?.add(&rhs.mul(self)?)
    }

    /// `Σ_g diag(v_g)·M_g`.
    pub fn to_matrix(&self) -> Matrix<F> {
        let n = self.degree();
        let mut m = Matrix::<F>::zeros(n, n);
        for (g, v) in &self.terms {
            let p = self.group.action(*g);
            for (i, x) in v.iter().enumerate() {
                let j = p.apply(i);
                let cell = m.get(i, j).add_ref(x);
                m.set(i, j, cell);
            }
        }
        m
    }

    /// The unique iterant with the given matrix image; needs an action
    /// whose permutation matrices tile the square.
    pub fn from_matrix(m: &Matrix<F>, group: &Arc<Group>) -> Result<Self> {
        let n = group.degree();
        if m.rows() != n || m.cols() != n {
            return Err(AlgebraError::Shape(format!(
                "{}x{} matrix for a group acting in degree {n}",
                m.rows(),
                m.cols()
            )));
        }
        let (uncovered, overlapping) = group.tiling_defects();
        if !uncovered.is_empty() || !overlapping.is_empty() {
            return Err(AlgebraError::Decomposition { uncovered, overlapping });
        }
        let terms = group.elements().map(|g| {
            let p = group.action(g);
            (g, (0..n).map(|i| m.get(i, p.apply(i)).clone()).collect())
        });
        Self::from_terms(group, terms)
    }

    /// Trace of the matrix image.
    pub fn trace(&self) -> F {
        self.to_matrix().trace().expect("square")
    }

    fn require_two_slot(&self) -> Result<Elem> {
        let g = &self.group;
        let swap = g.elements().find(|&e| e != g.identity());
        match swap {
            Some(s) if g.order() == 2 && g.degree() == 2 && !g.action(s).is_identity() => Ok(s),
            _ => Err(AlgebraError::WrongGroup(format!(
                "the conjugate needs the order-2 group with the swap action, got {}",
                g.name()
            ))),
        }
    }

    /// For `Z = A + Bη` returns `Ā − Bη`, where `Ā` swaps the two slots of
    /// `A`. The matrix image is the classical adjoint.
    pub fn conj2(&self) -> Result<Self> {
        let eta = self.require_two_slot()?;
        let mut out = Self::zero(&self.group);
        if let Some(a) = self.terms.get(&self.group.identity()) {
            out.accumulate(self.group.identity(), vec![a[1].clone(), a[0].clone()])?;
        }
        if let Some(b) = self.terms.get(&eta) {
            out.accumulate(eta, b.iter().map(|x| -x.clone()).collect())?;
        }
        Ok(out)
    }

    /// The scalar `D(Z)` with `Z·Z̄ = D(Z)·1`.
    pub fn det2(&self) -> Result<F> {
        let prod = self.mul(&self.conj2()?)?;
        prod.as_scalar().ok_or_else(|| AlgebraError::WrongGroup("Z·conj(Z) is not scalar".into()))
    }
}

impl<F: Field> Iterant<F> {
    /// Multiplicative inverse. Uses the matrix image when the action tiles
    /// the square, and the monomial rule `(a g)^{-1} = (a^{-1})^{g^{-1}} g^{-1}`
    /// otherwise.
    pub fn inverse(&self) -> Result<Self> {
        if self.group.action_tiles() {
            let inv = self.to_matrix().inverse()?;
            return Self::from_matrix(&inv, &self.group);
        }
        if self.terms.len() == 1 {
            let (g, a) = self.terms.iter().next().unwrap();
            let a_inv: Vec<F> = a.iter().map(|x| x.checked_inv().ok_or(AlgebraError::NotInvertible)).collect::<Result<_>>()?;
            let g_inv = self.group.inv(*g);
            return Self::monomial(&self.group, self.group.slide_left(&a_inv, g_inv)?, g_inv);
        }
        Err(AlgebraError::NotInvertible)
    }

    /// Integer power; negative exponents go through [`Iterant::inverse`].
    pub fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        Ok(base.pow(e.unsigned_abs() as u32))
    }
}

impl<F: Scalar> PartialEq for Iterant<F> {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.terms == other.terms
    }
}

/// Matrix image of a bare group element.
pub fn element_matrix<F: Scalar>(group: &Group, g: Elem) -> Matrix<F> {
    perm_matrix(group.action(g))
}

macro_rules! iterant_op {
    ($tr:ident $m:ident) => {
        impl<F: Scalar> $tr<&Iterant<F>> for &Iterant<F> {
            type Output = Iterant<F>;

            /// Panics on a group mismatch; use the inherent method to get a `Result`.
            fn $m(self, rhs: &Iterant<F>) -> Iterant<F> {
                Iterant::$m(self, rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

iterant_op!(Add add);
iterant_op!(Sub sub);
iterant_op!(Mul mul);

impl<F: Scalar> Neg for &Iterant<F> {
    type Output = Iterant<F>;
    fn neg(self) -> Iterant<F> {
        Iterant::neg(self)
    }
}

/// Formatting of coefficients inside iterant output.
pub trait CoefficientDisplay {
    /// Rendering as a standalone summand.
    fn render(&self) -> String;
    /// Whether the rendering has several summands and needs parentheses
    /// when followed by more terms.
    fn is_compound_display(&self) -> bool;
}

impl CoefficientDisplay for crate::Cyclotomic {
    fn render(&self) -> String {
        self.to_string()
    }

    fn is_compound_display(&self) -> bool {
        self.is_compound()
    }
}

impl CoefficientDisplay for crate::LaurentPoly {
    fn render(&self) -> String {
        self.to_string()
    }

    fn is_compound_display(&self) -> bool {
        self.terms().count() > 1 || self.terms().any(|(_, c)| c.is_compound())
    }
}

impl CoefficientDisplay for crate::Rational {
    fn render(&self) -> String {
        crate::scalars::format_rational(self)
    }

    fn is_compound_display(&self) -> bool {
        false
    }
}

macro_rules! float_display {
    ($($t:ty),*) => {$(
        impl CoefficientDisplay for $t {
            fn render(&self) -> String {
                self.to_string()
            }

            fn is_compound_display(&self) -> bool {
                false
            }
        }
    )*};
}

float_display!(f32, f64);

/// Prints `[a,b,c] + [d,e,f]S + [g,h,k]S^2`; a constant vector on the
/// identity prints as its scalar, so the unit prints as `1`.
impl<F: Scalar + CoefficientDisplay> fmt::Display for Iterant<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let id = self.group.identity();
        let mut order: Vec<Elem> = self.terms.keys().copied().collect();
        order.sort_by_key(|&g| (g != id, g));
        let many = order.len() > 1;
        for (n, g) in order.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let v = &self.terms[g];
            if *g == id && v.iter().all(|x| *x == v[0]) {
                let c = &v[0];
                if many && c.is_compound_display() {
                    write!(f, "({})", c.render())?;
                } else {
                    write!(f, "{}", c.render())?;
                }
                continue;
            }
            let body: Vec<String> = v.iter().map(CoefficientDisplay::render).collect();
            write!(f, "[{}]", body.join(","))?;
            if *g != id {
                write!(f, "{}", self.group.label(*g))?;
            }
        }
        Ok(())
    }
}

impl<F: Scalar + CoefficientDisplay> fmt::Debug for Iterant<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Iterant<{}>({self})", self.group.name())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum GroupRef {
    Name(String),
    Inline(GroupJson),
}

#[derive(Serialize, Deserialize)]
struct TermRepr<F> {
    elem: String,
    vector: Vec<F>,
}

#[derive(Serialize, Deserialize)]
struct IterantRepr<F> {
    group: GroupRef,
    terms: Vec<TermRepr<F>>,
}

impl<F: Scalar + Serialize> Serialize for Iterant<F> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IterantRepr {
            group: GroupRef::Inline(self.group.to_json()),
            terms: self
                .terms
                .iter()
                .map(|(g, v)| TermRepr { elem: self.group.label(*g).to_string(), vector: v.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, F: Scalar + Deserialize<'de>> Deserialize<'de> for Iterant<F> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = IterantRepr::<F>::deserialize(d)?;
        let group = match repr.group {
            GroupRef::Name(name) => builtin_group(&name),
            GroupRef::Inline(json) => Group::from_json(json),
        }
        .map_err(D::Error::custom)?;
        let group = Arc::new(group);
        let mut x = Iterant::zero(&group);
        for t in repr.terms {
            let g = group.find(&t.elem).ok_or_else(|| D::Error::custom(format!("unknown element {:?}", t.elem)))?;
            x.accumulate(g, t.vector).map_err(D::Error::custom)?;
        }
        Ok(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Cyclotomic;

    type It = Iterant<Cyclotomic>;

    fn c(n: i64) -> Cyclotomic {
        Cyclotomic::from(n)
    }

    fn v(xs: &[i64]) -> Vec<Cyclotomic> {
        xs.iter().map(|&x| c(x)).collect()
    }

    fn c2() -> Arc<Group> {
        Arc::new(Group::cyclic(2).unwrap())
    }

    fn c3() -> Arc<Group> {
        Arc::new(Group::cyclic(3).unwrap())
    }

    #[test]
    fn iterant_i_squares_to_minus_one() {
        let g = c2();
        let i = It::labelled(&g, v(&[1, -1]), "h").unwrap();
        assert_eq!(&i * &i, It::scalar(&g, c(-1)));
        assert_eq!((&i * &i).as_scalar(), Some(c(-1)));
    }

    #[test]
    fn idempotent_products_of_half_swaps() {
        let g = c2();
        let a = It::labelled(&g, v(&[1, 0]), "h").unwrap();
        let b = It::labelled(&g, v(&[0, 1]), "h").unwrap();
        assert_eq!(&a * &b, It::vector(&g, v(&[1, 0])).unwrap());
        assert_eq!(&b * &a, It::vector(&g, v(&[0, 1])).unwrap());
    }

    #[test]
    fn basic_idempotents() {
        let g = c2();
        let e1 = It::basic_idempotent(&g, 1).unwrap();
        let e2 = It::basic_idempotent(&g, 2).unwrap();
        assert_eq!(&e1 * &e1, e1);
        assert!((&e1 * &e2).is_zero());
        assert_eq!(&e1 + &e2, It::one(&g));
        let eta = It::element(&g, g.find("h").unwrap());
        assert_eq!(&e1 * &eta, &eta * &e2);
        assert!(It::basic_idempotent(&g, 3).is_err());
        assert!(It::basic_idempotent(&g, 0).is_err());
    }

    #[test]
    fn two_by_two_matrix_image() {
        let g = c2();
        let z = &It::vector(&g, v(&[1, 2])).unwrap() + &It::labelled(&g, v(&[3, 4]), "h").unwrap();
        assert_eq!(z.to_matrix(), Matrix::from_ints(&[&[1, 3], &[4, 2]]));
    }

    #[test]
    fn three_by_three_matrix_image() {
        let g = c3();
        let x = It::from_terms(
            &g,
            [
                (Elem(0), v(&[1, 2, 3])),
                (Elem(1), v(&[4, 5, 6])),
                (Elem(2), v(&[7, 8, 9])),
            ],
        )
        .unwrap();
        // rows (a,d,g), (h,b,e), (f,k,c) with a..k = 1,2,3 | 4,5,6 | 7,8,9
        assert_eq!(x.to_matrix(), Matrix::from_ints(&[&[1, 4, 7], &[8, 2, 5], &[6, 9, 3]]));
        assert_eq!(It::from_matrix(&x.to_matrix(), &g).unwrap(), x);
        assert_eq!(x.to_string(), "[1,2,3] + [4,5,6]S + [7,8,9]S^2");
    }

    #[test]
    fn shift_matrix_decomposes_to_generator() {
        let g = c3();
        let s = Matrix::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        assert_eq!(It::from_matrix(&s, &g).unwrap(), It::element(&g, g.find("S").unwrap()));
        assert_eq!(It::from_matrix(&Matrix::identity(3), &g).unwrap(), It::one(&g));
    }

    #[test]
    fn non_tiling_action_is_rejected() {
        let g = Arc::new(Group::symmetric_natural(3).unwrap());
        let err = It::from_matrix(&Matrix::identity(3), &g).unwrap_err();
        match err {
            AlgebraError::Decomposition { uncovered, overlapping } => {
                assert!(uncovered.is_empty());
                assert_eq!(overlapping.len(), 9);
            }
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn conjugate_and_determinant() {
        let g = c2();
        let z = &It::vector(&g, v(&[2, 3])).unwrap() + &It::labelled(&g, v(&[1, 5]), "h").unwrap();
        assert_eq!(z.conj2().unwrap().to_matrix(), Matrix::from_ints(&[&[3, -1], &[-5, 2]]));
        assert_eq!(z.det2().unwrap(), c(1));
        assert_eq!(It::one(&g).det2().unwrap(), c(1));
        assert_eq!(It::one(&g).conj2().unwrap(), It::one(&g));
        assert!(It::one(&c3()).conj2().is_err());
    }

    #[test]
    fn clifford_pair_anticommutes() {
        let g = c2();
        let eta = It::element(&g, g.find("h").unwrap());
        let eps = It::vector(&g, v(&[1, -1])).unwrap();
        assert!(eta.anticommutator(&eps).unwrap().is_zero());
        assert!(eta.commutator(&eta).unwrap().is_zero());
        assert_eq!(It::vector(&g, v(&[2, 7])).unwrap().trace(), c(9));
    }

    #[test]
    fn group_mismatch_is_an_error() {
        let x = It::one(&c2());
        let y = It::one(&c3());
        assert!(matches!(x.mul(&y), Err(AlgebraError::GroupMismatch { .. })));
        assert!(x.add(&y).is_err());
    }

    #[test]
    fn printing() {
        let g = c2();
        assert_eq!(It::one(&g).to_string(), "1");
        assert_eq!(It::zero(&g).to_string(), "0");
        let w = &It::scalar(&g, Cyclotomic::omega() + c(1)) + &It::element(&g, Elem(1));
        assert_eq!(w.to_string(), "(1 + w) + [1,1]h");
        let c6 = Arc::new(Group::cyclic(6).unwrap());
        assert_eq!(It::element(&c6, Elem(3)).to_string(), "[1,1,1,1,1,1]S^3");
    }

    #[test]
    fn inverses() {
        let g = c3();
        let x = &It::vector(&g, v(&[1, 2, 3])).unwrap() + &It::element(&g, Elem(1));
        assert_eq!(&x * &x.inverse().unwrap(), It::one(&g));
        let s3 = Arc::new(Group::symmetric_natural(3).unwrap());
        let t = It::monomial(&s3, v(&[2, 3, 5]), s3.find("T1 T2").unwrap()).unwrap();
        assert_eq!(&t * &t.inverse().unwrap(), It::one(&s3));
        assert_eq!(&t.powi(-2).unwrap() * &t.powi(2).unwrap(), It::one(&s3));
    }

    #[test]
    fn json_round_trip() {
        let g = c3();
        let x = &It::vector(&g, v(&[1, 0, 0])).unwrap() + &It::element(&g, Elem(2));
        let json = serde_json::to_value(&x).unwrap();
        assert_eq!(json["terms"][1]["elem"], "S^2");
        let back: It = serde_json::from_value(json).unwrap();
        assert_eq!(back, x);
        let by_name = serde_json::json!({"group": "C3", "terms": [{"elem": "S", "vector": [
            {"order": 1, "coeffs": ["1/1"]}, {"order": 1, "coeffs": ["1/1"]}, {"order": 1, "coeffs": ["1/1"]}
        ]}]});
        let s: It = serde_json::from_value(by_name).unwrap();
        assert_eq!(s.to_string(), "[1,1,1]S");
    }
}
