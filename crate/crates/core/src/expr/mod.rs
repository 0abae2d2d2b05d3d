//! A small expression language for iterants and framed braids.
//!
//! ```text
//! expr   := unary (("+" | "-") unary)*
//! unary  := "-" unary | term
//! term   := jux ("*" jux)*                     explicit product
//! jux    := factor factor*                     juxtaposition binds tighter
//! factor := base ("^" ["-"] int)?
//! base   := rational | "i" | "w" | "t" | "zeta(" int "," int ")"
//!         | name | "\"" particle "\"" | "[" expr ("," expr)* "]"
//!         | "comm(" expr "," expr ")" | "acomm(" expr "," expr ")"
//!         | "{" expr "," expr "}" | "(" expr ")"
//! ```
//!
//! Square brackets always build a vector; commutators use `comm(x,y)`.
//! Names resolve in a [`Context`], which fixes the group (or the strand
//! count), the scalar field Q(ζ_N) and the generator bindings.

mod context;
mod error;
mod eval;
mod lexer;
mod parser;
mod value;

pub use context::{Algebra, Context, CONTEXTS};
pub use error::{ExprError, ParseError};
pub use eval::{eval, eval_str};
pub use lexer::{tokenize, Pos, Tok, Token};
pub use parser::{is_keyword, parse, At, Expr};
pub use value::Value;
