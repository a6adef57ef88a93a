//! Expression parser for polynomials, operators and monomial ideals.
//!
//! Grammar: integer literals, identifiers, `+ - * ^`, parentheses, and `/`
//! by a constant subexpression. Juxtaposition is only accepted as `)(`.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{ring_vars, Polynomial, Rational, UnivariatePoly};
use crate::newton::MonomialIdeal;
use crate::weyl::fs::param_role;
use crate::weyl::{WeylElement, WeylRing};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    col: usize,
}

fn lex(src: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: Tok::Num(digits.parse().expect("digits")),
                col,
            });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                col,
            });
        } else if "+-*/^()".contains(c) {
            out.push(Token { tok: Tok::Op(c), col });
            i += 1;
        } else {
            return Err(Error::Syntax {
                column: col,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Expr {
    Num(BigInt),
    Var(String, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// Division by a constant subexpression; the column is that of `/`.
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, u32),
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.col)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            column: self.col(),
            message: message.into(),
        }
    }

    fn unexpected(&self) -> Error {
        match self.peek() {
            None => self.error("unexpected end of input"),
            Some(Tok::Num(n)) => self.error(format!("unexpected number `{n}`")),
            Some(Tok::Ident(s)) => self.error(format!("unexpected identifier `{s}`")),
            Some(Tok::Op(c)) => self.error(format!("unexpected `{c}`")),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let closed = self.pos > 0 && self.toks[self.pos - 1].tok == Tok::Op(')');
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.peek() == Some(&Tok::Op('/')) {
                let col = self.col();
                self.pos += 1;
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), col);
            } else if closed && self.peek() == Some(&Tok::Op('(')) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                let e = n.to_u32().ok_or_else(|| self.error("exponent too large"))?;
                self.pos += 1;
                Ok(Expr::Pow(Box::new(base), e))
            }
            _ => Err(self.error("exponent must be a nonnegative integer literal")),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Var(s, col))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(e)
            }
            _ => Err(self.unexpected()),
        }
    }
}

fn parse_expr(src: &str) -> Result<Expr> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.chars().count() + 1,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.unexpected());
    }
    Ok(e)
}

fn constant_value(e: &Expr) -> Option<Rational> {
    Some(match e {
        Expr::Num(n) => Rational::from_integer(n.clone()),
        Expr::Var(..) => return None,
        Expr::Neg(a) => -constant_value(a)?,
        Expr::Add(a, b) => constant_value(a)? + constant_value(b)?,
        Expr::Sub(a, b) => constant_value(a)? - constant_value(b)?,
        Expr::Mul(a, b) => constant_value(a)? * constant_value(b)?,
        Expr::Div(a, b, _) => {
            let d = constant_value(b)?;
            if d.is_zero() {
                return None;
            }
            constant_value(a)? / d
        }
        Expr::Pow(a, k) => num_traits::pow(constant_value(a)?, *k as usize),
    })
}

fn identifiers(e: &Expr, out: &mut Vec<(String, usize)>) {
    match e {
        Expr::Num(_) => {}
        Expr::Var(s, c) => out.push((s.clone(), *c)),
        Expr::Neg(a) | Expr::Pow(a, _) => identifiers(a, out),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b, _) => {
            identifiers(a, out);
            identifiers(b, out);
        }
    }
}

/// Values an expression can be evaluated into.
trait Value: Sized {
    fn constant(&self, c: Rational) -> Self;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn power(&self, k: u32) -> Self;
    fn scaled(&self, c: &Rational) -> Self;
}

impl Value for Polynomial {
    fn constant(&self, c: Rational) -> Self {
        Polynomial::constant(self.vars().clone(), c)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn power(&self, k: u32) -> Self {
        self.pow(k)
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

impl Value for WeylElement {
    fn constant(&self, c: Rational) -> Self {
        WeylElement::constant(self.ring(), c)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn power(&self, k: u32) -> Self {
        self.pow(k)
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

/// Evaluates `e`; `zero` fixes the ring and `leaf` resolves identifiers.
fn evaluate<T: Value>(e: &Expr, zero: &T, leaf: &dyn Fn(&str, usize) -> Result<T>) -> Result<T> {
    Ok(match e {
        Expr::Num(n) => zero.constant(Rational::from_integer(n.clone())),
        Expr::Var(s, c) => leaf(s, *c)?,
        Expr::Neg(a) => zero.minus(&evaluate(a, zero, leaf)?),
        Expr::Add(a, b) => evaluate(a, zero, leaf)?.plus(&evaluate(b, zero, leaf)?),
        Expr::Sub(a, b) => evaluate(a, zero, leaf)?.minus(&evaluate(b, zero, leaf)?),
        Expr::Mul(a, b) => evaluate(a, zero, leaf)?.times(&evaluate(b, zero, leaf)?),
        Expr::Div(a, b, col) => {
            let d = constant_value(b).ok_or_else(|| Error::Syntax {
                column: *col,
                message: "division is only allowed by a nonzero constant".into(),
            })?;
            evaluate(a, zero, leaf)?.scaled(&(Rational::from_integer(1.into()) / d))
        }
        Expr::Pow(a, k) => evaluate(a, zero, leaf)?.power(*k),
    })
}

/// Checks a variable list: identifiers, nonempty, no repeats.
pub fn parse_vars(names: &[String]) -> Result<Arc<[String]>> {
    if names.is_empty() {
        return Err(Error::usage("--vars must list at least one variable"));
    }
    let mut seen = BTreeSet::new();
    for v in names {
        let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(Error::usage(format!("`{v}` is not a valid variable name")));
        }
        if !seen.insert(v.as_str()) {
            return Err(Error::usage(format!("variable `{v}` listed twice")));
        }
    }
    Ok(ring_vars(names))
}

/// Parses a polynomial whose identifiers are drawn from `vars`.
pub fn parse_polynomial(src: &str, vars: &Arc<[String]>) -> Result<Polynomial> {
    let e = parse_expr(src)?;
    let zero = Polynomial::zero(vars.clone());
    evaluate(&e, &zero, &|name, col| {
        vars.iter()
            .position(|v| v == name)
            .map(|i| Polynomial::var(vars.clone(), i))
            .ok_or_else(|| Error::UnknownIdentifier {
                name: name.into(),
                column: col,
            })
    })
}

/// Parses a polynomial in `s`.
pub fn parse_bfunction(src: &str) -> Result<UnivariatePoly> {
    let p = parse_polynomial(src, &ring_vars(&["s"]))?;
    let deg = p.total_degree().unwrap_or(0) as usize;
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (m, c) in p.terms() {
        coeffs[m.exponents()[0] as usize] = c.clone();
    }
    Ok(UnivariatePoly::new(coeffs))
}

/// Parses operators over `vars`: `d<x>` is the derivation in `x`, and `s`,
/// `s<i>`, `s<i><j>` are the exponent parameters for `r` functions.
/// All operators share one ring whose parameters are those that occur.
pub fn parse_operators(srcs: &[String], vars: &Arc<[String]>, r: usize) -> Result<Vec<WeylElement>> {
    let exprs = srcs.iter().map(|s| parse_expr(s)).collect::<Result<Vec<_>>>()?;
    let ds: Vec<String> = vars.iter().map(|x| format!("d{x}")).collect();
    let mut params = BTreeSet::new();
    for e in &exprs {
        let mut ids = Vec::new();
        identifiers(e, &mut ids);
        for (name, col) in ids {
            if vars.contains(&name) || ds.contains(&name) {
                continue;
            }
            if param_role(&name, r).is_none() {
                return Err(Error::UnknownIdentifier { name, column: col });
            }
            params.insert(name);
        }
    }
    let ring = WeylRing::with_names(vars.to_vec(), ds, params.into_iter().collect())?;
    let zero = WeylElement::zero(&ring);
    exprs
        .iter()
        .map(|e| {
            evaluate(e, &zero, &|name, _| {
                let i = ring.index_of(name).expect("identifier collected above");
                Ok(WeylElement::generator(&ring, i))
            })
        })
        .collect()
}

/// Parses a comma-separated list of monomials, e.g. `x1*x2, x2*x3`.
pub fn parse_monomial_ideal(src: &str, vars: &Arc<[String]>) -> Result<MonomialIdeal> {
    let mut gens = Vec::new();
    let mut offset = 0;
    for piece in src.split(',') {
        let p = parse_polynomial(piece, vars).map_err(|e| shift_column(e, offset))?;
        let width = piece.chars().count();
        if p.terms().len() != 1 {
            return Err(Error::Syntax {
                column: offset + 1,
                message: format!("`{}` is not a monomial", piece.trim()),
            });
        }
        gens.push(p.terms().keys().next().expect("one term").clone());
        offset += width + 1;
    }
    MonomialIdeal::new(vars.clone(), gens)
}

fn shift_column(e: Error, by: usize) -> Error {
    match e {
        Error::Syntax { column, message } => Error::Syntax {
            column: column + by,
            message,
        },
        Error::UnknownIdentifier { name, column } => Error::UnknownIdentifier {
            name,
            column: column + by,
        },
        other => other,
    }
}

/// Parses a rational such as `5/6` or `-1`.
pub fn parse_rational(src: &str) -> Result<Rational> {
    let e = parse_expr(src)?;
    constant_value(&e).ok_or_else(|| Error::usage(format!("`{src}` is not a rational constant")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn xy() -> Arc<[String]> {
        ring_vars(&["x", "y"])
    }

    #[test]
    fn cusp_and_coefficients() {
        let f = parse_polynomial("x^2+y^3", &xy()).unwrap();
        assert_eq!(f.to_string(), "y^3+x^2");
        let g = parse_polynomial("(1/2)*x^2", &xy()).unwrap();
        assert_eq!(g.terms().values().next().unwrap(), &rat(1, 2));
        assert_eq!(parse_polynomial("-x^2", &xy()).unwrap().to_string(), "-x^2");
    }

    #[test]
    fn errors_carry_columns() {
        let e = parse_polynomial("x^2 + z", &xy()).unwrap_err();
        assert_eq!(e, Error::UnknownIdentifier { name: "z".into(), column: 7 });
        let e = parse_polynomial("2x", &xy()).unwrap_err();
        assert!(matches!(e, Error::Syntax { column: 2, .. }));
        let e = parse_polynomial("x/y", &xy()).unwrap_err();
        assert!(matches!(e, Error::Syntax { column: 2, .. }));
        let e = parse_polynomial("(x+1", &xy()).unwrap_err();
        assert!(matches!(e, Error::Syntax { column: 5, .. }));
        let e = parse_polynomial("x^y", &xy()).unwrap_err();
        assert!(matches!(e, Error::Syntax { column: 3, .. }));
    }

    #[test]
    fn juxtaposed_parentheses() {
        let b = parse_bfunction("(s+1)(s+5/6)(s+7/6)").unwrap();
        assert_eq!(b.coeffs()[0], rat(35, 36));
        assert!(parse_bfunction("(s+1) s").is_err());
    }

    #[test]
    fn operators_do_not_commute() {
        let ops = parse_operators(&["dx*x".into(), "x*dx".into(), "s*dy".into()], &xy(), 1).unwrap();
        assert_eq!(ops[0].to_string(), "x*dx+1");
        assert_eq!(ops[1].to_string(), "x*dx");
        assert_eq!(ops[2].ring().params(), &["s".to_string()]);
        let e = parse_operators(&["dz".into()], &xy(), 1).unwrap_err();
        assert!(matches!(e, Error::UnknownIdentifier { .. }));
    }

    #[test]
    fn monomial_lists() {
        let v = ring_vars(&["x1", "x2", "x3"]);
        let a = parse_monomial_ideal("x1*x2,x2*x3,x1*x3", &v).unwrap();
        assert_eq!(a.generators().len(), 3);
        let e = parse_monomial_ideal("x1, x2+x3", &v).unwrap_err();
        assert!(matches!(e, Error::Syntax { column: 4, .. }));
        let e = parse_monomial_ideal("x1, x4", &v).unwrap_err();
        assert_eq!(e, Error::UnknownIdentifier { name: "x4".into(), column: 5 });
    }
}
