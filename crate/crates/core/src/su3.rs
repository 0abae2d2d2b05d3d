//! Gell-Mann matrices as iterants over `C₃ = {1, A, B}`.
//!
//! `A` is the 3-cycle whose matrix has its 1s at (1,2), (2,3), (3,1), and
//! `B = A²`. Each `λ_a` is a sum of at most two terms `[x,y,z]A` and
//! `[x,y,z]B` (or a diagonal vector). Structure constants are derived from
//! exact commutators rather than tabulated.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::check::Check;
use crate::error::{AlgebraError, Result};
use crate::groups::Group;
use crate::iterants::Iterant;
use crate::scalars::CyclotomicField;
use crate::Cyclotomic;

type It = Iterant<Cyclotomic>;

/// `C₃` with elements labelled `1, A, B`.
pub fn c3_ab() -> Arc<Group> {
    let labels = ["1", "A", "B"].map(String::from).to_vec();
    Arc::new(Group::cyclic_with_labels(labels).expect("C3").with_name("C3"))
}

#[derive(Clone, Debug)]
pub struct GellMannSet {
    pub group: Arc<Group>,
    pub field: CyclotomicField,
    /// `λ₁ … λ₈` at indices `0 … 7`.
    pub lambdas: Vec<It>,
    /// `F_a = λ_a / 2`.
    pub f: Vec<It>,
}

fn vecs(g: &Arc<Group>, terms: &[([Cyclotomic; 3], &str)]) -> It {
    terms.iter().fold(It::zero(g), |acc, (v, label)| {
        let t = if label.is_empty() {
            It::vector(g, v.to_vec())
        } else {
            It::labelled(g, v.to_vec(), label)
        };
        &acc + &t.expect("degree 3")
    })
}

/// The eight iterant formulas; needs `12 | order` for `i` and `√3`.
pub fn gell_mann(field: &CyclotomicField) -> Result<GellMannSet> {
    field.require(12)?;
    let g = c3_ab();
    let i = field.i()?;
    let o = field.from_int(0);
    let l = field.from_int(1);
    let ni = -i.clone();
    let inv_sqrt3 = field.sqrt3()?.inv()?;
    let lambdas = vec![
        vecs(&g, &[([l.clone(), o.clone(), o.clone()], "A"), ([o.clone(), l.clone(), o.clone()], "B")]),
        vecs(&g, &[([ni.clone(), o.clone(), o.clone()], "A"), ([o.clone(), i.clone(), o.clone()], "B")]),
        vecs(&g, &[([l.clone(), -l.clone(), o.clone()], "")]),
        vecs(&g, &[([l.clone(), o.clone(), o.clone()], "B"), ([o.clone(), o.clone(), l.clone()], "A")]),
        vecs(&g, &[([i.clone(), o.clone(), o.clone()], "B"), ([o.clone(), o.clone(), ni.clone()], "A")]),
        vecs(&g, &[([o.clone(), l.clone(), o.clone()], "A"), ([o.clone(), o.clone(), l.clone()], "B")]),
        vecs(&g, &[([o.clone(), ni, o.clone()], "A"), ([o.clone(), o.clone(), i], "B")]),
        vecs(&g, &[([l.clone(), l, field.from_int(-2)], "")]).scale(&inv_sqrt3),
    ];
    let half = field.ratio(1, 2);
    let f = lambdas.iter().map(|x| x.scale(&half)).collect();
    Ok(GellMannSet { group: g, field: *field, lambdas, f })
}

impl GellMannSet {
    /// `tr(λ_a λ_b)` for 1-based `a, b`.
    pub fn trace_form(&self, a: usize, b: usize) -> Cyclotomic {
        (&self.lambdas[a - 1] * &self.lambdas[b - 1]).trace()
    }

    /// `tr(λ_a λ_b) = 2δ_ab` over all 64 pairs, and each `λ_a` traceless
    /// and Hermitian.
    pub fn orthonormality_checks(&self) -> Vec<Check> {
        let mut out = Vec::new();
        for a in 1..=8 {
            let m = self.lambdas[a - 1].to_matrix();
            out.push(Check::equal(format!("tr(l{a}) = 0"), &m.trace().expect("square"), &Cyclotomic::from(0)));
            out.push(Check::new(format!("l{a} is Hermitian"), m.is_hermitian(), ""));
        }
        for a in 1..=8 {
            for b in 1..=8 {
                let expected = Cyclotomic::from(if a == b { 2 } else { 0 });
                out.push(Check::equal(format!("tr(l{a} l{b}) = {expected}"), &self.trace_form(a, b), &expected));
            }
        }
        out
    }
}

/// Totally antisymmetric `f_abc`, 1-based indices.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants {
    full: Vec<Cyclotomic>,
}

impl StructureConstants {
    fn idx(a: usize, b: usize, c: usize) -> usize {
        ((a - 1) * 8 + (b - 1)) * 8 + (c - 1)
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &Cyclotomic {
        &self.full[Self::idx(a, b, c)]
    }

    /// Nonzero entries with `a < b < c`.
    pub fn basis_entries(&self) -> Vec<((usize, usize, usize), Cyclotomic)> {
        let mut out = Vec::new();
        for a in 1..=8 {
            for b in a + 1..=8 {
                for c in b + 1..=8 {
                    let v = self.get(a, b, c);
                    if !num_traits::Zero::is_zero(v) {
                        out.push(((a, b, c), v.clone()));
                    }
                }
            }
        }
        out
    }

    /// Sign behaviour under all six index permutations, for every triple.
    pub fn is_totally_antisymmetric(&self) -> bool {
        let mut ok = true;
        for a in 1..=8 {
            for b in 1..=8 {
                for c in 1..=8 {
                    let v = self.get(a, b, c);
                    let neg = -v.clone();
                    ok &= self.get(b, c, a) == v && self.get(c, a, b) == v;
                    ok &= *self.get(b, a, c) == neg && *self.get(a, c, b) == neg && *self.get(c, b, a) == neg;
                }
            }
        }
        ok
    }

    pub fn to_json(&self) -> StructureTableJson {
        StructureTableJson {
            entries: self
                .basis_entries()
                .into_iter()
                .map(|((a, b, c), v)| StructureEntryJson {
                    indices: [a, b, c],
                    decimal: v.to_decimal_string(),
                    exact: v.to_string(),
                    value: v,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureEntryJson {
    pub indices: [usize; 3],
    pub value: Cyclotomic,
    pub exact: String,
    pub decimal: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureTableJson {
    pub entries: Vec<StructureEntryJson>,
}

/// `f_abc = −2i·tr([F_a, F_b] F_c)`, then checks that
/// `[F_a, F_b] − i Σ_c f_abc F_c` vanishes for every pair.
pub fn derive_structure_constants(set: &GellMannSet) -> Result<StructureConstants> {
    let i = set.field.i()?;
    let minus_two_i = &i * &Cyclotomic::from(-2);
    let mut full = vec![Cyclotomic::from(0); 512];
    for a in 1..=8 {
        for b in 1..=8 {
            let comm = set.f[a - 1].commutator(&set.f[b - 1])?;
            let mut expansion = It::zero(&set.group);
            for c in 1..=8 {
                let v = &minus_two_i * &(&comm * &set.f[c - 1]).trace();
                expansion = &expansion + &set.f[c - 1].scale(&(&i * &v));
                full[StructureConstants::idx(a, b, c)] = v;
            }
            if comm != expansion {
                return Err(AlgebraError::NotClosed { a, b });
            }
        }
    }
    Ok(StructureConstants { full })
}

/// The printed table of nonzero values, as `(a, b, c, value)`. The
/// radical entries `f₄₅₈`, `f₆₇₈` are left out; see [`radical_reading`].
pub fn reference_table() -> Vec<(usize, usize, usize, Cyclotomic)> {
    let h = |n| Cyclotomic::ratio(n, 2);
    vec![
        (1, 2, 3, Cyclotomic::from(1)),
        (1, 4, 7, h(1)),
        (1, 5, 6, h(-1)),
        (2, 4, 6, h(1)),
        (2, 5, 7, h(1)),
        (3, 4, 5, h(1)),
        (3, 6, 7, h(-1)),
    ]
}

/// Which radical a structure constant equals: `√3/2`, `−√3/2`, `√(3/2)`,
/// `−√(3/2)` or none of these. `√(3/2)` is not in any cyclotomic field
/// containing `√3` alone, so the test compares squares and signs.
pub fn radical_reading(x: &Cyclotomic) -> &'static str {
    let sq = x * x;
    let half_sqrt3 = &Cyclotomic::sqrt3() * &Cyclotomic::ratio(1, 2);
    if *x == half_sqrt3 {
        "sqrt(3)/2"
    } else if *x == -half_sqrt3 {
        "-sqrt(3)/2"
    } else if sq == Cyclotomic::ratio(3, 2) {
        // a real square root of 3/2; sign from the decimal value
        if x.to_complex().0 > 0.0 { "sqrt(3/2)" } else { "-sqrt(3/2)" }
    } else {
        "neither sqrt(3)/2 nor sqrt(3/2)"
    }
}

/// `T±, U±, V±, T₃, Y`.
#[derive(Clone, Debug, PartialEq)]
pub struct CartanWeyl {
    pub t_plus: It,
    pub t_minus: It,
    pub u_plus: It,
    pub u_minus: It,
    pub v_plus: It,
    pub v_minus: It,
    pub t3: It,
    pub y: It,
}

impl CartanWeyl {
    pub fn named(&self) -> [(&'static str, &It); 8] {
        [
            ("Tp", &self.t_plus),
            ("Tm", &self.t_minus),
            ("Up", &self.u_plus),
            ("Um", &self.u_minus),
            ("Vp", &self.v_plus),
            ("Vm", &self.v_minus),
            ("T3", &self.t3),
            ("Y", &self.y),
        ]
    }
}

/// From the λ's: `T± = F₁ ± iF₂`, `U± = F₆ ± iF₇`, `V± = F₄ ± iF₅`,
/// `T₃ = F₃`, `Y = (2/√3)F₈`.
pub fn cartan_weyl(set: &GellMannSet) -> Result<CartanWeyl> {
    let i = set.field.i()?;
    let f = |a: usize| &set.f[a - 1];
    let pm = |a: usize, b: usize| (f(a) + &f(b).scale(&i), f(a) - &f(b).scale(&i));
    let (t_plus, t_minus) = pm(1, 2);
    let (u_plus, u_minus) = pm(6, 7);
    let (v_plus, v_minus) = pm(4, 5);
    let two_over_sqrt3 = &Cyclotomic::from(2) * &set.field.sqrt3()?.inv()?;
    Ok(CartanWeyl {
        t_plus,
        t_minus,
        u_plus,
        u_minus,
        v_plus,
        v_minus,
        t3: f(3).clone(),
        y: f(8).scale(&two_over_sqrt3),
    })
}

/// The direct iterant formulas `T₊ = [1,0,0]A`, `T₋ = [0,1,0]B`, … .
pub fn cartan_weyl_formulas(set: &GellMannSet) -> Result<CartanWeyl> {
    let g = &set.group;
    let e = |k: usize| {
        let mut v = vec![Cyclotomic::from(0); 3];
        v[k] = Cyclotomic::from(1);
        v
    };
    let t = |k, l| It::labelled(g, e(k), l);
    let inv_sqrt3 = set.field.sqrt3()?.inv()?;
    Ok(CartanWeyl {
        t_plus: t(0, "A")?,
        t_minus: t(1, "B")?,
        u_plus: t(1, "A")?,
        u_minus: t(2, "B")?,
        v_plus: t(2, "A")?,
        v_minus: t(0, "B")?,
        t3: It::vector(g, vec![Cyclotomic::ratio(1, 2), Cyclotomic::ratio(-1, 2), Cyclotomic::from(0)])?,
        y: It::vector(g, vec![Cyclotomic::from(1), Cyclotomic::from(1), Cyclotomic::from(-2)])?.scale(&inv_sqrt3),
    })
}

pub fn cartan_weyl_checks(set: &GellMannSet) -> Result<Vec<Check>> {
    let from_lambdas = cartan_weyl(set)?;
    let formulas = cartan_weyl_formulas(set)?;
    Ok(from_lambdas
        .named()
        .iter()
        .zip(formulas.named())
        .map(|((name, x), (_, y))| Check::equal(format!("{name} = {y}"), *x, y))
        .collect())
}

/// The transpositions `P = [0,0,1] + T₊ + T₋` (1 2), `Q = [1,0,0] + U₊ + U₋`
/// (2 3) and `R = [0,1,0] + V₊ + V₋` (1 3).
pub fn transposition_embedding(set: &GellMannSet) -> Result<(It, It, It)> {
    let cw = cartan_weyl(set)?;
    let g = &set.group;
    let slot = |k: usize| {
        let mut v = vec![Cyclotomic::from(0); 3];
        v[k] = Cyclotomic::from(1);
        It::vector(g, v)
    };
    let p = &(&slot(2)? + &cw.t_plus) + &cw.t_minus;
    let q = &(&slot(0)? + &cw.u_plus) + &cw.u_minus;
    let r = &(&slot(1)? + &cw.v_plus) + &cw.v_minus;
    Ok((p, q, r))
}

/// `P² = Q² = R² = 1`, `A = QP`, `B = PQ`, `R = PQP = QPQ` and closure of
/// `{1, A, B, P, Q, R}`.
pub fn transposition_checks(set: &GellMannSet) -> Result<Vec<Check>> {
    let (p, q, r) = transposition_embedding(set)?;
    let g = &set.group;
    let one = It::one(g);
    let a = It::labelled(g, vec![Cyclotomic::from(1); 3], "A")?;
    let b = It::labelled(g, vec![Cyclotomic::from(1); 3], "B")?;
    let mut out = vec![
        Check::equal("P^2 = 1", &(&p * &p), &one),
        Check::equal("Q^2 = 1", &(&q * &q), &one),
        Check::equal("R^2 = 1", &(&r * &r), &one),
        Check::equal("A = QP", &(&q * &p), &a),
        Check::equal("B = PQ", &(&p * &q), &b),
        Check::equal("R = PQP", &(&(&p * &q) * &p), &r),
        Check::equal("PQP = QPQ", &(&(&p * &q) * &p), &(&(&q * &p) * &q)),
    ];
    let six = [one, a, b, p.clone(), q.clone(), r];
    let closed = six.iter().all(|x| six.iter().all(|y| six.contains(&(x * y))));
    out.push(Check::new("{1, A, B, P, Q, R} closed under products", closed, ""));
    let generated = generated_by(&[p, q]);
    out.push(Check::new(
        "P, Q generate all six",
        generated.len() == 6 && six.iter().all(|x| generated.contains(x)),
        format!("{} elements generated", generated.len()),
    ));
    Ok(out)
}

fn generated_by(gens: &[It]) -> Vec<It> {
    let mut found = vec![It::one(gens[0].group())];
    let mut frontier = found.clone();
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = &x * g;
            if !found.contains(&y) {
                found.push(y.clone());
                frontier.push(y);
            }
        }
    }
    found
}

/// Antisymmetry and the printed table, in a fixed order.
pub fn structure_checks(table: &StructureConstants) -> Vec<Check> {
    let mut out = vec![Check::new("f is totally antisymmetric", table.is_totally_antisymmetric(), "")];
    for (a, b, c, v) in reference_table() {
        out.push(Check::equal(format!("f{a}{b}{c} = {v}"), table.get(a, b, c), &v));
    }
    let listed: BTreeMap<(usize, usize, usize), ()> =
        reference_table().iter().map(|(a, b, c, _)| ((*a, *b, *c), ())).chain([((4, 5, 8), ()), ((6, 7, 8), ())]).collect();
    let extra: Vec<String> = table
        .basis_entries()
        .into_iter()
        .filter(|(k, _)| !listed.contains_key(k))
        .map(|((a, b, c), v)| format!("f{a}{b}{c} = {v}"))
        .collect();
    out.push(Check::new("no unlisted nonzero entries", extra.is_empty(), extra.join("; ")));
    out
}
