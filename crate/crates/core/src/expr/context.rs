use std::collections::BTreeMap;
use std::sync::Arc;

use super::error::ExprError;
use super::parser::is_keyword;
use super::value::Value;
use crate::braids::{BraidAlgebraElement, BraidWord, Catalogue, FramedBraid};
use crate::error::AlgebraError;
use crate::groups::{builtin_group, Group};
use crate::iterants::Iterant;
use crate::physics::{c2, construction, quaternions_klein, two_level_bindings};
use crate::scalars::CyclotomicField;
use crate::su3::{c3_ab, cartan_weyl, gell_mann};
use crate::{Cyclotomic, LaurentPoly};

/// The algebra an expression is evaluated in.
#[derive(Clone, Debug)]
pub enum Algebra {
    Iterants(Arc<Group>),
    /// Framed braids on this many strands.
    Braids(usize),
}

/// Group or strand count, scalar field, name bindings and particle catalogue.
#[derive(Clone, Debug)]
pub struct Context {
    name: String,
    field: CyclotomicField,
    algebra: Algebra,
    bindings: BTreeMap<String, Value>,
    catalogue: Arc<Catalogue>,
}

/// Context names understood by [`Context::new`] besides builtin group names.
pub const CONTEXTS: &[&str] = &[
    "C2",
    "C<n>",
    "C3 | su3",
    "klein4",
    "S<n> | S<n>nat",
    "FB<n>",
    "pauli",
    "fermion",
    "majorana",
    "quaternion:klein | quaternion:iota | quaternion:signed",
    "parafermion:<n>",
    "minkowski(T,X,Y,Z)",
];

fn lift(x: &Iterant<Cyclotomic>) -> Value {
    Value::Iterant(x.map(|c| LaurentPoly::constant(c.clone())))
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !is_keyword(s)
}

impl Context {
    /// Resolves a context name at scalar order `order` (see [`CONTEXTS`]).
    pub fn new(spec: &str, order: u32) -> Result<Context, ExprError> {
        let field = CyclotomicField::new(order)?;
        let key: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
        let lower = key.to_lowercase();
        if let Some(n) = lower.strip_prefix("fb") {
            let n: usize = n.parse().map_err(|_| AlgebraError::UnsupportedGroup(spec.to_string()))?;
            if !(2..=8).contains(&n) {
                return Err(AlgebraError::UnsupportedGroup(format!("{spec}: strands must be 2..=8")).into());
            }
            let mut ctx = Context::bare(&key, field, Algebra::Braids(n));
            for k in 1..n {
                let w = BraidWord::generator(n, k as i64, 1)?;
                ctx.bind(&format!("s{k}"), Value::Braid(FramedBraid::from_word(w).into()));
            }
            return Ok(ctx);
        }
        if lower == "c3" || lower == "su3" {
            return Ok(Context::su3(&key, field));
        }
        if lower == "c2" || lower == "degree-2" {
            return Context::two_level(&key, field, None);
        }
        if let Ok(c) = construction(&key, &field) {
            let mut ctx = if c.group.name() == c2().name() {
                Context::two_level(&key, field, Some(&[]))?
            } else {
                Context::from_group(&key, field, c.group.clone())
            };
            for (n, x) in &c.bindings {
                ctx.bind(n, lift(x));
            }
            return Ok(ctx);
        }
        let group = builtin_group(&key).map_err(|_| {
            AlgebraError::UnsupportedGroup(format!("unknown context {spec:?}; known: {}", CONTEXTS.join(", ")))
        })?;
        let is_klein = group.name() == Group::klein4().name();
        let mut ctx = Context::from_group(&key, field, Arc::new(group));
        if is_klein {
            let q = quaternions_klein();
            ctx.bind("I", lift(&q.i));
            ctx.bind("J", lift(&q.j));
            ctx.bind("K", lift(&q.k));
        }
        Ok(ctx)
    }

    fn bare(name: &str, field: CyclotomicField, algebra: Algebra) -> Context {
        Context {
            name: name.to_string(),
            field,
            algebra,
            bindings: BTreeMap::new(),
            catalogue: Arc::new(Catalogue::default()),
        }
    }

    /// Binds every identifier-shaped element label and `e1 … e_n`.
    pub fn from_group(name: &str, field: CyclotomicField, group: Arc<Group>) -> Context {
        let mut ctx = Context::bare(name, field, Algebra::Iterants(group.clone()));
        for g in group.elements() {
            let label = group.label(g);
            if is_identifier(label) {
                ctx.bind(label, Value::Iterant(Iterant::element(&group, g)));
            }
        }
        for i in 1..=group.degree() {
            let e = Iterant::basic_idempotent(&group, i).expect("index in range");
            ctx.bind(&format!("e{i}"), Value::Iterant(e));
        }
        ctx
    }

    /// `C₂ = {1, h}` with `e = [1,−1]`; the two-level operators when `4 | N`,
    /// restricted to `only` when given.
    fn two_level(name: &str, field: CyclotomicField, only: Option<&[&str]>) -> Result<Context, ExprError> {
        let g = c2();
        let mut ctx = Context::from_group(name, field, g.clone());
        let eps = Iterant::vector(&g, vec![Cyclotomic::from(1), Cyclotomic::from(-1)])?;
        ctx.bind("e", lift(&eps));
        if field.require(4).is_ok() {
            for (n, x) in two_level_bindings(&g)? {
                if only.is_none_or(|names| names.contains(&n.as_str())) {
                    ctx.bind(&n, lift(&x));
                }
            }
        }
        Ok(ctx)
    }

    /// `C₃ = {1, A, B}` (with `S` an alias of `A`) and `P, Q, R`, and when `12 | N` the Gell-Mann
    /// matrices `l1 … l8`, `F1 … F8` and `Tp, Tm, Up, Um, Vp, Vm, T3, Y`.
    fn su3(name: &str, field: CyclotomicField) -> Context {
        let g = c3_ab();
        let mut ctx = Context::from_group(name, field, g.clone());
        let slot = |v: [i64; 3]| v.map(Cyclotomic::from).to_vec();
        let transposition = |d: [i64; 3], a: [i64; 3], b: [i64; 3]| {
            Iterant::from_terms(&g, [(g.identity(), slot(d)), (g.find("A").unwrap(), slot(a)), (g.find("B").unwrap(), slot(b))])
                .expect("degree 3")
        };
        // S names the same 3-cycle as A
        ctx.bind("S", Value::Iterant(Iterant::element(&g, g.find("A").expect("A"))));
        ctx.bind("P", lift(&transposition([0, 0, 1], [1, 0, 0], [0, 1, 0])));
        ctx.bind("Q", lift(&transposition([1, 0, 0], [0, 1, 0], [0, 0, 1])));
        ctx.bind("R", lift(&transposition([0, 1, 0], [0, 0, 1], [1, 0, 0])));
        if let Ok(set) = gell_mann(&field) {
            for (k, (l, f)) in set.lambdas.iter().zip(&set.f).enumerate() {
                ctx.bind(&format!("l{}", k + 1), lift(l));
                ctx.bind(&format!("F{}", k + 1), lift(f));
            }
            let cw = cartan_weyl(&set).expect("Gell-Mann set is complete");
            for (n, x) in cw.named() {
                ctx.bind(n, lift(x));
            }
        }
        ctx
    }

    pub fn bind(&mut self, name: &str, value: Value) {
        self.bindings.insert(name.to_string(), value);
    }

    pub fn with_catalogue(mut self, catalogue: Arc<Catalogue>) -> Self {
        self.catalogue = catalogue;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn catalogue(&self) -> &Arc<Catalogue> {
        &self.catalogue
    }

    pub fn names(&self) -> Vec<&str> {
        self.bindings.keys().map(String::as_str).collect()
    }

    pub fn lookup(&self, name: &str) -> Option<Value> {
        if let Some(v) = self.bindings.get(name) {
            return Some(v.clone());
        }
        match self.algebra {
            Algebra::Braids(n) => self.particle(name).ok().filter(|x| x.strands() == n).map(Value::Braid),
            Algebra::Iterants(_) => None,
        }
    }

    pub fn particle(&self, name: &str) -> Result<BraidAlgebraElement, ExprError> {
        Ok(self.catalogue.get(name)?.into())
    }
}
