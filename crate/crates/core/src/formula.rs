//! Exact evaluator for the typeset coefficient formulas.
//!
//! Formulas are plain text with `+ - * / ^`, parentheses, integer literals,
//! identifiers and the functions `poch(a, n)` and `binom(n, k)`.
//! Juxtaposition multiplies (`2 b1 (n-1)`) at the same precedence as `*`.
//! Values are polynomials, so the same text can be instantiated with the
//! lattice variables left symbolic or bound to points.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactfield::{Rational, C};
use crate::poly::MultiPoly;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
    LParen,
    RParen,
    Comma,
}

#[derive(Debug, Clone)]
enum Expr {
    Num(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Bin(char, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Call(String, Vec<Expr>),
}

const FUNCTIONS: [&str; 2] = ["poch", "binom"];

#[derive(Debug, Clone)]
pub struct Formula {
    source: String,
    expr: Expr,
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().collect();
            out.push(Tok::Num(s.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            out.push(Tok::Ident(chars[start..k].iter().collect()));
        } else {
            out.push(match c {
                '+' | '-' | '*' | '/' | '^' => Tok::Op(c),
                '(' | '[' | '{' => Tok::LParen,
                ')' | ']' | '}' => Tok::RParen,
                ',' => Tok::Comma,
                _ => return Err(Error::Parse(format!("unexpected character {c:?} in formula"))),
            });
            k += 1;
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.next() {
            Some(ref got) if *got == t => Ok(()),
            got => Err(Error::Parse(format!("expected {t:?}, found {got:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(Tok::Op(op @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Op(op @ ('*' | '/'))) => {
                    let op = *op;
                    self.pos += 1;
                    let rhs = self.unary()?;
                    lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Num(_) | Tok::Ident(_) | Tok::LParen) => {
                    let rhs = self.power()?;
                    lhs = Expr::Bin('*', Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let e = match self.next() {
                Some(Tok::Num(n)) => n,
                Some(Tok::LParen) => {
                    let n = match self.next() {
                        Some(Tok::Num(n)) => n,
                        t => return Err(Error::Parse(format!("exponent must be a literal, found {t:?}"))),
                    };
                    self.expect(Tok::RParen)?;
                    n
                }
                t => return Err(Error::Parse(format!("exponent must be a literal, found {t:?}"))),
            };
            let e: u32 = e.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(Expr::Num(n)),
            Some(Tok::Ident(name)) => {
                if FUNCTIONS.contains(&name.as_str()) {
                    self.expect(Tok::LParen)?;
                    let mut args = vec![self.expr()?];
                    while let Some(Tok::Comma) = self.peek() {
                        self.pos += 1;
                        args.push(self.expr()?);
                    }
                    self.expect(Tok::RParen)?;
                    Ok(Expr::Call(name, args))
                } else {
                    Ok(Expr::Var(name))
                }
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            t => Err(Error::Parse(format!("unexpected token {t:?}"))),
        }
    }
}

/// Variable bindings: each identifier maps to a polynomial in a fixed number of variables.
pub struct Bindings {
    nvars: usize,
    vars: HashMap<String, MultiPoly>,
}

impl Bindings {
    pub fn new(nvars: usize) -> Self {
        Bindings { nvars, vars: HashMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn scalar(&mut self, name: &str, value: impl Into<C>) -> &mut Self {
        self.vars.insert(name.to_string(), MultiPoly::constant(self.nvars, value.into()));
        self
    }

    pub fn rational(&mut self, name: &str, value: &Rational) -> &mut Self {
        self.scalar(name, C::from(value))
    }

    /// Binds `name` to the k-th polynomial variable.
    pub fn variable(&mut self, name: &str, k: usize) -> &mut Self {
        self.vars.insert(name.to_string(), MultiPoly::var(self.nvars, k));
        self
    }

    pub fn poly(&mut self, name: &str, p: MultiPoly) -> &mut Self {
        assert_eq!(p.nvars(), self.nvars);
        self.vars.insert(name.to_string(), p);
        self
    }

    /// Binds `i` to the imaginary unit.
    pub fn imaginary_unit(&mut self) -> &mut Self {
        self.scalar("i", C::i())
    }
}

impl Formula {
    pub fn parse(src: &str) -> Result<Self> {
        let toks = tokenize(src)?;
        let mut p = Parser { toks, pos: 0 };
        let expr = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(Error::Parse(format!("trailing input in formula {src:?}")));
        }
        Ok(Formula { source: src.to_string(), expr })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn eval(&self, b: &Bindings) -> Result<MultiPoly> {
        eval_expr(&self.expr, b)
    }

    /// Evaluates to a scalar; every identifier must be bound to a constant.
    pub fn eval_scalar(&self, b: &Bindings) -> Result<C> {
        let p = self.eval(b)?;
        p.as_constant()
            .ok_or_else(|| Error::Usage(format!("formula {:?} is not constant", self.source)))
    }
}

fn constant_arg(p: &MultiPoly, what: &str) -> Result<C> {
    p.as_constant().ok_or_else(|| Error::Usage(format!("{what} must be constant")))
}

fn nonneg_int(p: &MultiPoly, what: &str) -> Result<usize> {
    constant_arg(p, what)?
        .to_usize()
        .ok_or_else(|| Error::Usage(format!("{what} must be a nonnegative integer")))
}

fn eval_expr(e: &Expr, b: &Bindings) -> Result<MultiPoly> {
    let nv = b.nvars;
    Ok(match e {
        Expr::Num(n) => MultiPoly::constant(nv, C::real(Rational::from_integer(n.clone()))),
        Expr::Var(name) => b
            .vars
            .get(name)
            .cloned()
            .ok_or_else(|| Error::Usage(format!("unbound formula variable {name:?}")))?,
        Expr::Neg(x) => -eval_expr(x, b)?,
        Expr::Pow(x, k) => eval_expr(x, b)?.pow(*k),
        Expr::Bin(op, l, r) => {
            let l = eval_expr(l, b)?;
            let r = eval_expr(r, b)?;
            match op {
                '+' => &l + &r,
                '-' => &l - &r,
                '*' => &l * &r,
                '/' => {
                    let d = constant_arg(&r, "divisor")?;
                    l.scale(&d.inv()?)
                }
                _ => unreachable!("operator set is closed"),
            }
        }
        Expr::Call(name, args) => {
            let vals: Vec<MultiPoly> = args.iter().map(|a| eval_expr(a, b)).collect::<Result<_>>()?;
            match (name.as_str(), vals.as_slice()) {
                ("poch", [a, n]) => {
                    let n = nonneg_int(n, "Pochhammer length")?;
                    let one = MultiPoly::one(nv);
                    let mut acc = MultiPoly::one(nv);
                    let mut t = a.clone();
                    for _ in 0..n {
                        acc = &acc * &t;
                        t = &t + &one;
                    }
                    acc
                }
                ("binom", [n, k]) => {
                    let n = nonneg_int(n, "binomial top")?;
                    let k = nonneg_int(k, "binomial bottom")?;
                    MultiPoly::constant(nv, C::from(crate::exactfield::binomial(n, k)))
                }
                _ => return Err(Error::Usage(format!("bad call {name} with {} arguments", vals.len()))),
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scalar(src: &str, vars: &[(&str, i64)]) -> C {
        let mut b = Bindings::new(0);
        for (k, v) in vars {
            b.scalar(k, C::from_int(*v));
        }
        Formula::parse(src).unwrap().eval_scalar(&b).unwrap()
    }

    #[test]
    fn precedence_and_juxtaposition() {
        assert_eq!(scalar("-1/16 (k-n-1)", &[("k", 1), ("n", 4)]), C::frac(1, 4));
        assert_eq!(scalar("2 k n - 3^2", &[("k", 2), ("n", 5)]), C::from_int(11));
        assert_eq!(scalar("-b^2", &[("b", 3)]), C::from_int(-9));
        assert_eq!(scalar("a -b", &[("a", 3), ("b", 1)]), C::from_int(2));
        assert_eq!(scalar("poch(a, 3) binom(4, 2)", &[("a", 2)]), C::from_int(144));
    }

    #[test]
    fn symbolic_variables() {
        let mut b = Bindings::new(2);
        b.variable("x", 0).variable("y", 1).scalar("c", C::from_int(2));
        let p = Formula::parse("(x+c) (y-1)").unwrap().eval(&b).unwrap();
        assert_eq!(p.eval(&[C::from_int(1), C::from_int(4)]), C::from_int(9));
    }

    #[test]
    fn errors() {
        assert!(Formula::parse("a +").is_err());
        assert!(Formula::parse("a $ b").is_err());
        let b = Bindings::new(0);
        assert!(Formula::parse("q").unwrap().eval(&b).is_err());
    }
}
