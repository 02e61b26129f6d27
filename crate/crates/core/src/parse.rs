//! The ideal file format and the command-line value syntaxes.
//!
//! ```text
//! ring <name>+ ;  char <nat> ;  ideal <mono> (, <mono>)* ;
//! <mono> = term ('*' term)*      term = name ('^' nat)?
//! ```
//!
//! Whitespace is insignificant and `#` starts a comment running to the end
//! of the line. Declared order is variable order, first variable largest.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::FieldSpec;
use crate::monomial::{Monomial, MonomialIdeal, Ring};
use crate::oracle::LinearForm;

const KEYWORDS: [&str; 3] = ["ring", "char", "ideal"];

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Name(String),
    Nat(String),
    Sym(char),
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
        } else if c.is_whitespace() {
            chars.next();
            column += 1;
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                chars.next();
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c) = chars
                .peek()
                .filter(|c| c.is_ascii_alphanumeric() || **c == '_')
            {
                s.push(c);
                chars.next();
                column += 1;
            }
            out.push(Token {
                tok: Tok::Name(s),
                line: l,
                column: col,
            });
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek().filter(|c| c.is_ascii_digit()) {
                s.push(c);
                chars.next();
                column += 1;
            }
            out.push(Token {
                tok: Tok::Nat(s),
                line: l,
                column: col,
            });
        } else if matches!(c, ';' | ',' | '*' | '^') {
            chars.next();
            column += 1;
            out.push(Token {
                tok: Tok::Sym(c),
                line: l,
                column: col,
            });
        } else {
            return Err(err(l, col, format!("unexpected character {c:?}")));
        }
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn describe(tok: &Tok) -> String {
        match tok {
            Tok::Name(s) => format!("`{s}`"),
            Tok::Nat(s) => format!("`{s}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::End => "end of input".to_string(),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        let t = self.next();
        match &t.tok {
            Tok::Name(s) if s == kw => Ok(()),
            other => Err(err(
                t.line,
                t.column,
                format!("expected `{kw}`, found {}", Self::describe(other)),
            )),
        }
    }

    fn symbol(&mut self, c: char) -> Result<()> {
        let t = self.next();
        match t.tok {
            Tok::Sym(s) if s == c => Ok(()),
            ref other => Err(err(
                t.line,
                t.column,
                format!("expected `{c}`, found {}", Self::describe(other)),
            )),
        }
    }

    fn nat(&mut self, what: &str) -> Result<(u64, Token)> {
        let t = self.next();
        match &t.tok {
            Tok::Nat(s) => s
                .parse::<u64>()
                .map(|v| (v, t.clone()))
                .map_err(|_| err(t.line, t.column, format!("{what} `{s}` is too large"))),
            other => Err(err(
                t.line,
                t.column,
                format!("expected {what}, found {}", Self::describe(other)),
            )),
        }
    }
}

/// Parse an ideal file into its ring and minimalized ideal.
pub fn parse_ideal_file(text: &str) -> Result<(Ring, MonomialIdeal)> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        pos: 0,
    };

    p.keyword("ring")?;
    let mut names: Vec<String> = Vec::new();
    loop {
        let t = p.next();
        match &t.tok {
            Tok::Sym(';') if !names.is_empty() => break,
            Tok::Name(s) if KEYWORDS.contains(&s.as_str()) => {
                return Err(err(
                    t.line,
                    t.column,
                    format!("`{s}` is reserved and cannot name a variable"),
                ))
            }
            Tok::Name(s) if names.contains(s) => {
                return Err(err(
                    t.line,
                    t.column,
                    format!("variable `{s}` declared twice"),
                ))
            }
            Tok::Name(s) => names.push(s.clone()),
            other => {
                return Err(err(
                    t.line,
                    t.column,
                    format!(
                        "expected a variable name, found {}",
                        Parser::describe(other)
                    ),
                ))
            }
        }
    }

    p.keyword("char")?;
    let (characteristic, at) = p.nat("a characteristic")?;
    let ring = Ring::with_names(names, characteristic)
        .map_err(|e| err(at.line, at.column, e.to_string()))?;
    p.symbol(';')?;

    p.keyword("ideal")?;
    let n = ring.num_vars();
    let mut gens = Vec::new();
    loop {
        if gens.is_empty() && matches!(p.peek().tok, Tok::Sym(';') | Tok::End) {
            let t = p.peek();
            return Err(err(t.line, t.column, "ideal needs at least one generator"));
        }
        let mut exps = vec![0u32; n];
        loop {
            let t = p.next();
            let i = match &t.tok {
                Tok::Name(s) => ring
                    .names()
                    .iter()
                    .position(|v| v == s)
                    .ok_or_else(|| err(t.line, t.column, format!("unknown variable `{s}`")))?,
                other => {
                    return Err(err(
                        t.line,
                        t.column,
                        format!("expected a variable, found {}", Parser::describe(other)),
                    ))
                }
            };
            let e = if p.peek().tok == Tok::Sym('^') {
                p.next();
                let e = p.peek().clone();
                match &e.tok {
                    Tok::Nat(s) => {
                        p.next();
                        s.parse::<u32>().map_err(|_| {
                            err(e.line, e.column, format!("exponent `{s}` is too large"))
                        })?
                    }
                    other => {
                        return Err(err(
                            e.line,
                            e.column,
                            format!(
                                "malformed exponent: expected a natural number, found {}",
                                Parser::describe(other)
                            ),
                        ))
                    }
                }
            } else {
                1
            };
            exps[i] = exps[i]
                .checked_add(e)
                .ok_or_else(|| err(t.line, t.column, "exponent is too large"))?;
            if p.peek().tok == Tok::Sym('*') {
                p.next();
            } else {
                break;
            }
        }
        gens.push(Monomial::new(exps));
        let t = p.next();
        match t.tok {
            Tok::Sym(',') => continue,
            Tok::Sym(';') => break,
            ref other => {
                return Err(err(
                    t.line,
                    t.column,
                    format!("expected `,` or `;`, found {}", Parser::describe(other)),
                ))
            }
        }
    }
    let t = p.next();
    if t.tok != Tok::End {
        return Err(err(
            t.line,
            t.column,
            format!("unexpected {} after the ideal", Parser::describe(&t.tok)),
        ));
    }
    let ideal = MonomialIdeal::minimalize(gens, &ring)?;
    Ok((ring, ideal))
}

fn grammar_monomial(ring: &Ring, u: &Monomial) -> String {
    if u.is_unit() {
        format!("{}^0", ring.names()[0])
    } else {
        ring.fmt_monomial(u)
    }
}

/// Render an ideal in the file format. The zero ideal has no rendering.
pub fn print_ideal_file(ideal: &MonomialIdeal) -> Option<String> {
    if ideal.is_zero() {
        return None;
    }
    let ring = ideal.ring();
    let gens: Vec<String> = ideal
        .gens()
        .iter()
        .map(|u| grammar_monomial(ring, u))
        .collect();
    Some(format!(
        "ring {};\nchar {};\nideal {};\n",
        ring.names().join(" "),
        ring.characteristic(),
        gens.join(", ")
    ))
}

/// `a1,a2,...,an` as a linear form in `n` variables.
pub fn parse_element(text: &str, n: usize) -> Result<LinearForm> {
    let coefficients = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::InvalidLinearForm(format!("`{}` is not an integer", s.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    if coefficients.len() != n {
        return Err(Error::InvalidLinearForm(format!(
            "expected {n} coefficients, found {}",
            coefficients.len()
        )));
    }
    Ok(LinearForm::new(coefficients))
}

/// `q` or `gf:<p>`.
pub fn parse_field(text: &str) -> Result<FieldSpec> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Rationals);
    }
    let p = t
        .strip_prefix("gf:")
        .or_else(|| t.strip_prefix("GF:"))
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| {
            err(
                1,
                1,
                format!("field must be `q` or `gf:<prime>`, found `{t}`"),
            )
        })?;
    FieldSpec::prime(p)
}
