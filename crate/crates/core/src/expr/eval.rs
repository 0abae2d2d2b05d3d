use super::context::{Algebra, Context};
use super::error::ExprError;
use super::parser::{parse, Expr};
use super::value::{self, Value};
use crate::braids::{BraidAlgebraElement, BraidWord};
use crate::error::AlgebraError;
use crate::iterants::Iterant;
use crate::{Cyclotomic, LaurentPoly};

fn scalar(ctx: &Context, x: Cyclotomic) -> Result<Value, ExprError> {
    let field = ctx.field();
    if !field.contains(&x) {
        let needed = x.minimal().order();
        return Err(AlgebraError::MissingRoot { needed, order: field.order() }.into());
    }
    Ok(Value::Scalar(LaurentPoly::constant(x)))
}

fn vector(ctx: &Context, items: &[Expr]) -> Result<Value, ExprError> {
    let mut entries = Vec::with_capacity(items.len());
    for item in items {
        match eval_raw(item, ctx)?.normalized() {
            Value::Scalar(p) => entries.push(p),
            other => {
                return Err(ExprError::Type(format!("vector entries must be scalars; {item} is a {}", other.kind())))
            }
        }
    }
    match ctx.algebra() {
        Algebra::Iterants(g) => Ok(Value::Iterant(Iterant::vector(g, entries)?)),
        Algebra::Braids(n) => {
            let x = BraidAlgebraElement::from_terms(*n, [(entries, BraidWord::identity(*n))])?;
            Ok(Value::Braid(x))
        }
    }
}

fn eval_raw(e: &Expr, ctx: &Context) -> Result<Value, ExprError> {
    let bin = |a: &Expr, b: &Expr| -> Result<(Value, Value), ExprError> { Ok((eval_raw(a, ctx)?, eval_raw(b, ctx)?)) };
    match e {
        Expr::Number(r) => Ok(Value::Scalar(LaurentPoly::constant(Cyclotomic::rational(r.clone())))),
        Expr::I => scalar(ctx, Cyclotomic::i()),
        Expr::W => scalar(ctx, Cyclotomic::omega()),
        Expr::Zeta(n, k) => scalar(ctx, Cyclotomic::zeta(*n, *k)),
        Expr::T => Ok(Value::Scalar(LaurentPoly::t_pow(1))),
        Expr::Vector(items) => vector(ctx, items),
        Expr::Name(name, at) => ctx.lookup(name).ok_or_else(|| ExprError::Unbound {
            name: name.clone(),
            pos: at.0,
            context: ctx.name().to_string(),
        }),
        Expr::Quoted(name, _) => match ctx.algebra() {
            Algebra::Braids(n) => {
                let x = ctx.particle(name)?;
                if x.strands() != *n {
                    return Err(AlgebraError::StrandMismatch { left: *n, right: x.strands() }.into());
                }
                Ok(Value::Braid(x))
            }
            Algebra::Iterants(_) => {
                Err(ExprError::Type(format!("particle \"{name}\" needs a framed braid context such as FB3")))
            }
        },
        Expr::Add(a, b) => bin(a, b).and_then(|(x, y)| value::add(x, y)),
        Expr::Sub(a, b) => bin(a, b).and_then(|(x, y)| value::sub(x, y)),
        Expr::Mul(a, b) => bin(a, b).and_then(|(x, y)| value::mul(x, y)),
        Expr::Neg(a) => Ok(value::neg(eval_raw(a, ctx)?)),
        Expr::Pow(a, k) => value::pow(eval_raw(a, ctx)?, *k),
        Expr::Comm(a, b) => bin(a, b).and_then(|(x, y)| value::commutator(x, y, false)),
        Expr::Acomm(a, b) => bin(a, b).and_then(|(x, y)| value::commutator(x, y, true)),
    }
}

/// Evaluates exactly; multiples of the unit iterant come back as scalars.
pub fn eval(e: &Expr, ctx: &Context) -> Result<Value, ExprError> {
    Ok(eval_raw(e, ctx)?.normalized())
}

/// [`parse`] then [`eval`].
pub fn eval_str(input: &str, ctx: &Context) -> Result<Value, ExprError> {
    eval(&parse(input)?, ctx)
}
