use std::fmt;

use super::error::ParseError;
use super::lexer::{tokenize, Pos, Tok, Token};
use crate::scalars::{format_rational, parse_rational};
use crate::Rational;

/// A source position that never takes part in AST equality.
#[derive(Clone, Copy, Debug, Default)]
pub struct At(pub Pos);

impl PartialEq for At {
    fn eq(&self, _: &At) -> bool {
        true
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Number(Rational),
    /// `i = ζ₄`
    I,
    /// `w = ω = ζ₃`
    W,
    /// The framing variable.
    T,
    /// `zeta(N,k) = ζ_N^k`
    Zeta(u32, i64),
    Vector(Vec<Expr>),
    Name(String, At),
    Quoted(String, At),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64),
    /// `comm(x,y) = xy − yx`
    Comm(Box<Expr>, Box<Expr>),
    /// `{x,y}` or `acomm(x,y)`: `xy + yx`
    Acomm(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn name(s: &str) -> Expr {
        Expr::Name(s.to_string(), At::default())
    }

    pub fn int(n: i64) -> Expr {
        Expr::Number(Rational::from_integer(n.into()))
    }

    fn level(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Neg(_) => 2,
            Expr::Mul(..) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }
}

const KEYWORDS: &[&str] = &["i", "w", "t", "zeta", "comm", "acomm"];

/// True for names the grammar reserves.
pub fn is_keyword(s: &str) -> bool {
    KEYWORDS.contains(&s)
}

fn starts_factor(t: &Tok) -> bool {
    matches!(t, Tok::Number(_) | Tok::Ident(_) | Tok::Quoted(_) | Tok::LParen | Tok::LBracket | Tok::LBrace)
}

fn factor_start() -> Vec<String> {
    ["number", "name", "'('", "'['", "'{'"].map(String::from).to_vec()
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, expected: Vec<String>) -> ParseError {
        let t = self.peek();
        ParseError::at(t.pos, format!("unexpected {}", t.tok.describe()), expected)
    }

    fn expect(&mut self, tok: Tok, open: Option<(&str, Pos)>, also: &[&str]) -> Result<(), ParseError> {
        if self.peek().tok == tok {
            self.bump();
            return Ok(());
        }
        let mut expected: Vec<String> = also.iter().map(|s| s.to_string()).collect();
        expected.push(Tok::describe(&tok));
        let mut err = self.unexpected(expected);
        if let Some((delim, pos)) = open {
            err.message = format!("{}; unbalanced '{delim}' opened at {pos}", err.message);
        }
        Err(err)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek().tok == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.term()
    }

    /// Explicit `*` joins juxtaposed groups: `a b * c d = (a b)(c d)`.
    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.juxtaposition()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.juxtaposition()?));
        }
        Ok(lhs)
    }

    fn juxtaposition(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while starts_factor(&self.peek().tok) {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.base()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let e = self.signed_int("exponent")?;
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn signed_int(&mut self, what: &str) -> Result<i64, ParseError> {
        let negative = if self.peek().tok == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let t = self.peek().clone();
        match &t.tok {
            Tok::Number(s) if !s.contains('/') => {
                self.bump();
                let n: i64 =
                    s.parse().map_err(|_| ParseError::at(t.pos, format!("{what} {s} out of range"), vec![]))?;
                Ok(if negative { -n } else { n })
            }
            _ => Err(self.unexpected(vec![format!("integer {what}")])),
        }
    }

    fn pair(&mut self, open: Pos, close: Tok, delim: &str) -> Result<(Expr, Expr), ParseError> {
        let a = self.expr()?;
        self.expect(Tok::Comma, Some((delim, open)), &["operator"])?;
        let b = self.expr()?;
        self.expect(close, Some((delim, open)), &["operator"])?;
        Ok((a, b))
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Number(s) => {
                self.bump();
                let r = parse_rational(s)
                    .map_err(|e| ParseError::at(t.pos, format!("malformed rational {s}: {e}"), vec![]))?;
                Ok(Expr::Number(r))
            }
            Tok::Quoted(s) => {
                self.bump();
                Ok(Expr::Quoted(s.clone(), At(t.pos)))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, Some(("(", t.pos)), &["operator"])?;
                Ok(e)
            }
            Tok::LBracket => {
                self.bump();
                let mut items = vec![self.expr()?];
                loop {
                    match self.peek().tok {
                        Tok::Comma => {
                            self.bump();
                            items.push(self.expr()?);
                        }
                        Tok::RBracket => {
                            self.bump();
                            return Ok(Expr::Vector(items));
                        }
                        _ => {
                            let mut err = self.unexpected(vec!["operator".into(), "','".into(), "']'".into()]);
                            err.message = format!("{}; unbalanced '[' opened at {}", err.message, t.pos);
                            return Err(err);
                        }
                    }
                }
            }
            Tok::LBrace => {
                self.bump();
                let (a, b) = self.pair(t.pos, Tok::RBrace, "{")?;
                Ok(Expr::Acomm(Box::new(a), Box::new(b)))
            }
            Tok::Ident(name) => {
                self.bump();
                match name.as_str() {
                    "i" => Ok(Expr::I),
                    "w" => Ok(Expr::W),
                    "t" => Ok(Expr::T),
                    "zeta" => {
                        let open = self.peek().pos;
                        self.expect(Tok::LParen, None, &[])?;
                        let n = self.signed_int("root order")?;
                        if n <= 0 || n > u32::MAX as i64 {
                            return Err(ParseError::at(t.pos, format!("root order {n} must be positive"), vec![]));
                        }
                        self.expect(Tok::Comma, Some(("(", open)), &[])?;
                        let k = self.signed_int("power")?;
                        self.expect(Tok::RParen, Some(("(", open)), &[])?;
                        Ok(Expr::Zeta(n as u32, k))
                    }
                    "comm" | "acomm" => {
                        let open = self.peek().pos;
                        self.expect(Tok::LParen, None, &[])?;
                        let (a, b) = self.pair(open, Tok::RParen, "(")?;
                        Ok(if name == "comm" {
                            Expr::Comm(Box::new(a), Box::new(b))
                        } else {
                            Expr::Acomm(Box::new(a), Box::new(b))
                        })
                    }
                    _ => Ok(Expr::Name(name.clone(), At(t.pos))),
                }
            }
            _ => Err(self.unexpected(factor_start())),
        }
    }
}

/// Parses one expression; trailing input is an error.
pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(input)?;
    let mut p = Parser { toks, at: 0 };
    if p.peek().tok == Tok::Eof {
        return Err(p.unexpected(factor_start()));
    }
    let e = p.expr()?;
    if p.peek().tok != Tok::Eof {
        let expected = ["operator", "end of input"].map(String::from).to_vec();
        let t = p.peek();
        let mut err = ParseError::at(t.pos, format!("unexpected {}", t.tok.describe()), expected);
        if matches!(t.tok, Tok::RParen | Tok::RBracket | Tok::RBrace) {
            err.message = format!("{}; unbalanced closing delimiter", err.message);
        }
        return Err(err);
    }
    Ok(e)
}

struct Wrapped<'a>(&'a Expr, u8);

impl fmt::Display for Wrapped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.level() < self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Prints with the fewest parentheses that re-parse to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Number(r) => write!(f, "{}", format_rational(r)),
            Expr::I => write!(f, "i"),
            Expr::W => write!(f, "w"),
            Expr::T => write!(f, "t"),
            Expr::Zeta(n, k) => write!(f, "zeta({n},{k})"),
            Expr::Vector(items) => {
                let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
                write!(f, "[{}]", parts.join(","))
            }
            Expr::Name(s, _) => write!(f, "{s}"),
            Expr::Quoted(s, _) => write!(f, "\"{s}\""),
            Expr::Add(a, b) => write!(f, "{} + {}", Wrapped(a, 1), Wrapped(b, 2)),
            Expr::Sub(a, b) => write!(f, "{} - {}", Wrapped(a, 1), Wrapped(b, 2)),
            Expr::Neg(a) => write!(f, "-{}", Wrapped(a, 2)),
            Expr::Mul(a, b) => match b.as_ref() {
                Expr::Mul(_, inner) if matches!(inner.as_ref(), Expr::Mul(..)) => {
                    write!(f, "{} * ({b})", Wrapped(a, 3))
                }
                Expr::Mul(..) => write!(f, "{} * {b}", Wrapped(a, 3)),
                _ => write!(f, "{} {}", Wrapped(a, 3), Wrapped(b, 4)),
            },
            Expr::Pow(a, e) => write!(f, "{}^{e}", Wrapped(a, 5)),
            Expr::Comm(a, b) => write!(f, "comm({a}, {b})"),
            Expr::Acomm(a, b) => write!(f, "{{{a}, {b}}}"),
        }
    }
}
