//! Expressions over `s`, `t`, `e` and instance files.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := power (('*' | '/') power)*
//! power  := atom ('^' '-'? digits)?
//! atom   := 's' | 't' | 'e' | digits | '(' expr ')' | '-' atom
//! ```
//!
//! An instance file has one `key = expr` per line for the keys `delta`,
//! `phiE`, `beta` and `alpha`. Blank lines and `#` comments are skipped.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::kfield::KElem;
use crate::lfield::{FieldInstance, LElem};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Expr {
    S,
    T,
    E,
    Const(bool),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, i64, usize),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    /// Column of `src[0]` within its line, 1-based.
    col0: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, at: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.col0 + at,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(b'+' | b'-') = self.peek() {
            self.pos += 1;
            lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.power()?), at);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.pos;
        let neg = self.peek() == Some(b'-');
        if neg {
            self.pos += 1;
        }
        self.skip_ws();
        let n = self.digits()?;
        let n = i64::try_from(n).map_err(|_| self.err(at, "exponent too large"))?;
        Ok(Expr::Pow(Box::new(base), if neg { -n } else { n }, at))
    }

    fn digits(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected());
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| self.err(start, "number too large"))
    }

    fn unexpected(&self) -> Error {
        match self.src.get(self.pos) {
            None => self.err(self.pos, "unexpected end of line"),
            Some(&c) => self.err(self.pos, format!("unexpected character '{}'", c as char)),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let c = self.peek();
        match c {
            Some(b's') | Some(b't') | Some(b'e') => {
                self.pos += 1;
                Ok(match c {
                    Some(b's') => Expr::S,
                    Some(b't') => Expr::T,
                    _ => Expr::E,
                })
            }
            Some(b'0'..=b'9') => Ok(Expr::Const(self.digits()? % 2 == 1)),
            Some(b'-') => {
                self.pos += 1;
                self.atom()
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.unexpected());
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(self.unexpected()),
        }
    }
}

fn parse_at(src: &str, line: usize, col0: usize) -> Result<Expr> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        line,
        col0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.unexpected());
    }
    Ok(e)
}

impl Expr {
    fn uses_e(&self) -> bool {
        match self {
            Expr::E => true,
            Expr::S | Expr::T | Expr::Const(_) => false,
            Expr::Add(a, b) | Expr::Mul(a, b) | Expr::Div(a, b, _) => a.uses_e() || b.uses_e(),
            Expr::Pow(a, ..) => a.uses_e(),
        }
    }

    /// Evaluate in `L = K[e]/(e^2 + e + delta)`.
    fn eval(&self, delta: &KElem, line: usize, col0: usize) -> Result<LElem> {
        let inst = FieldInstance {
            delta: delta.clone(),
            ..FieldInstance::default()
        };
        let at = |col: usize, m: &str| Error::Parse {
            line,
            column: col0 + col,
            message: m.into(),
        };
        Ok(match self {
            Expr::S => LElem::from_k(KElem::s()),
            Expr::T => LElem::from_k(KElem::t()),
            Expr::E => LElem::e(),
            Expr::Const(b) => {
                if *b {
                    LElem::one()
                } else {
                    LElem::zero()
                }
            }
            Expr::Add(a, b) => a.eval(delta, line, col0)?.add(&b.eval(delta, line, col0)?),
            Expr::Mul(a, b) => inst.mul(&a.eval(delta, line, col0)?, &b.eval(delta, line, col0)?),
            Expr::Div(a, b, col) => {
                let d = inst
                    .inv(&b.eval(delta, line, col0)?)
                    .map_err(|_| at(*col, "division by zero"))?;
                inst.mul(&a.eval(delta, line, col0)?, &d)
            }
            Expr::Pow(a, n, col) => {
                let mut base = a.eval(delta, line, col0)?;
                if *n < 0 {
                    base = inst.inv(&base).map_err(|_| at(*col, "division by zero"))?;
                }
                let (mut acc, mut k) = (LElem::one(), n.unsigned_abs());
                while k > 0 {
                    if k & 1 == 1 {
                        acc = inst.mul(&acc, &base);
                    }
                    base = inst.square(&base);
                    k >>= 1;
                }
                acc
            }
        })
    }
}

/// Parse an expression in `s` and `t`.
pub fn parse_k(src: &str) -> Result<KElem> {
    let e = parse_at(src, 1, 1)?;
    if e.uses_e() {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "e is not allowed here".into(),
        });
    }
    Ok(e.eval(&KElem::zero(), 1, 1)?.c0)
}

/// Parse an element of `L` for the given `delta`.
pub fn parse_l(src: &str, delta: &KElem) -> Result<LElem> {
    parse_at(src, 1, 1)?.eval(delta, 1, 1)
}

const KEYS: [&str; 4] = ["delta", "phiE", "beta", "alpha"];

/// Parse an instance file. Validation is separate.
pub fn parse_instance(text: &str) -> Result<FieldInstance> {
    let mut found: HashMap<&str, (Expr, usize, usize)> = HashMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some(eq) = content.find('=') else {
            return Err(Error::Parse {
                line,
                column: content.len() + 1,
                message: "expected '='".into(),
            });
        };
        let key = content[..eq].trim();
        let Some(&key) = KEYS.iter().find(|k| **k == key) else {
            let col = content.len() - content.trim_start().len() + 1;
            return Err(Error::Parse {
                line,
                column: col,
                message: format!("unknown key '{key}'"),
            });
        };
        if found.contains_key(key) {
            return Err(Error::Parse {
                line,
                column: 1,
                message: format!("duplicate key '{key}'"),
            });
        }
        let col0 = eq + 2;
        found.insert(key, (parse_at(&content[eq + 1..], line, col0)?, line, col0));
    }
    let take = |k: &str| {
        found
            .get(k)
            .ok_or_else(|| Error::Instance(format!("missing key '{k}'")))
    };
    let scalar = |k: &str, delta: &KElem| -> Result<KElem> {
        let (e, line, col0) = take(k)?;
        let v = e.eval(delta, *line, *col0)?;
        if !v.in_k() {
            return Err(Error::Instance(format!("{k} = {v} is not in K")));
        }
        Ok(v.c0)
    };
    let (de, line, col0) = take("delta")?;
    if de.uses_e() {
        return Err(Error::Parse {
            line: *line,
            column: *col0,
            message: "delta must not involve e".into(),
        });
    }
    let delta = scalar("delta", &KElem::zero())?;
    let (pe, line, col0) = take("phiE")?;
    Ok(FieldInstance {
        phi_e: pe.eval(&delta, *line, *col0)?,
        beta: scalar("beta", &delta)?,
        alpha: scalar("alpha", &delta)?,
        delta,
    })
}
