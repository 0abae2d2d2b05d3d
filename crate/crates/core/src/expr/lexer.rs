use std::fmt;

use super::error::ParseError;

/// 1-based line and column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    /// Digits, optionally `/digits`.
    Number(String),
    Ident(String),
    /// A double-quoted name such as `"e+"`.
    Quoted(String),
    Plus,
    Minus,
    Star,
    Caret,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Number(s) => format!("number {s}"),
            Tok::Ident(s) => format!("name {s}"),
            Tok::Quoted(s) => format!("name \"{s}\""),
            Tok::Eof => "end of input".into(),
            other => format!("'{}'", other.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Caret => "^",
            Tok::Comma => ",",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            _ => "",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
    /// Position of the last character of the token.
    pub last: Pos,
}

pub fn tokenize(input: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;
    let mut last = Pos { line: 1, col: 0 };
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '/' {
                i += 1;
                let den_start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i == den_start {
                    return Err(ParseError::at(
                        Pos { line, col: col + (i - start) },
                        "malformed rational: missing denominator",
                        vec!["digits".into()],
                    ));
                }
                let text: String = chars[start..i].iter().collect();
                if chars[den_start..i].iter().all(|&d| d == '0') {
                    return Err(ParseError::at(pos, format!("malformed rational {text}: zero denominator"), vec![]));
                }
            }
            if i < chars.len() && chars[i] == '.' {
                return Err(ParseError::at(
                    Pos { line, col: col + (i - start) },
                    "malformed rational: decimals are not exact, write p/q",
                    vec![],
                ));
            }
            Tok::Number(chars[start..i].iter().collect())
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if c == '"' {
            i += 1;
            while i < chars.len() && chars[i] != '"' && chars[i] != '\n' {
                i += 1;
            }
            if i >= chars.len() || chars[i] != '"' {
                return Err(ParseError::at(pos, "unterminated quoted name", vec!["'\"'".into()]));
            }
            i += 1;
            Tok::Quoted(chars[start + 1..i - 1].iter().collect())
        } else {
            i += 1;
            match c {
                '+' => Tok::Plus,
                '-' | '\u{2212}' => Tok::Minus,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                ',' => Tok::Comma,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                other => return Err(ParseError::at(pos, format!("unexpected character {other:?}"), vec![])),
            }
        };
        col += i - start;
        last = Pos { line, col: col - 1 };
        out.push(Token { tok, pos, last });
    }
    // end of input is reported at the last character consumed
    let end = if last.col == 0 { Pos { line, col } } else { last };
    out.push(Token { tok: Tok::Eof, pos: end, last: end });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<Tok> {
        tokenize(s).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn basic_tokens() {
        assert_eq!(
            toks("[1,-1/2]h^-1"),
            vec![
                Tok::LBracket,
                Tok::Number("1".into()),
                Tok::Comma,
                Tok::Minus,
                Tok::Number("1/2".into()),
                Tok::RBracket,
                Tok::Ident("h".into()),
                Tok::Caret,
                Tok::Minus,
                Tok::Number("1".into()),
                Tok::Eof
            ]
        );
        assert_eq!(toks("\"e+\" Sx"), vec![Tok::Quoted("e+".into()), Tok::Ident("Sx".into()), Tok::Eof]);
    }

    #[test]
    fn positions() {
        let t = tokenize("a\n  bc").unwrap();
        assert_eq!(t[1].pos, Pos { line: 2, col: 3 });
        assert_eq!(t[2].pos, Pos { line: 2, col: 4 });
        assert_eq!(tokenize("[x,y").unwrap().last().unwrap().pos, Pos { line: 1, col: 4 });
    }

    #[test]
    fn lexical_errors() {
        assert_eq!(tokenize("1 + 2/").unwrap_err().pos, Pos { line: 1, col: 7 });
        assert_eq!(tokenize("3/0").unwrap_err().pos, Pos { line: 1, col: 1 });
        assert!(tokenize("1.5").unwrap_err().message.contains("decimals"));
        assert_eq!(tokenize("a # b").unwrap_err().pos, Pos { line: 1, col: 3 });
        assert!(tokenize("\"e+").is_err());
    }
}
