//! Canonical text syntax for scalars, polynomials, rational functions and
//! skew elements, e.g. `(h1^2 - h2)/(h1 - 1)` or `1/(h1 - h2) * (e(1,0) - e(0,1))`.
//!
//! One grammar, three evaluators. Display output of the corresponding types
//! parses back to an equal value.

use crate::error::{Error, Result};
use crate::lattice::LatticeElement;
use crate::poly::{Poly, PolyRing};
use crate::ratfun::RatFun;
use crate::scalars::{Scalar, ScalarField};
use crate::skew::{SkewContext, SkewElement};
use num::{BigInt, BigRational};
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Token::Star));
                i += 1;
            }
            '/' => {
                out.push((i, Token::Slash));
                i += 1;
            }
            '^' => {
                out.push((i, Token::Caret));
                i += 1;
            }
            '(' => {
                out.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Token::RParen));
                i += 1;
            }
            ',' => {
                out.push((i, Token::Comma));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = input[start..i].parse().map_err(|_| Error::Parse {
                    pos: start,
                    msg: "invalid integer".into(),
                })?;
                out.push((start, Token::Int(n)));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((start, Token::Ident(input[start..i].to_string())));
            }
            other => {
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub enum Expr {
    Int(BigInt),
    Name(String),
    Lattice(Vec<i64>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or_else(|| self.tokens.last().map(|(p, _)| p + 1).unwrap_or(0))
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Token) -> Result<()> {
        let pos = self.here();
        match self.bump() {
            Some(got) if got == t => Ok(()),
            got => Err(Error::Parse {
                pos,
                msg: format!("expected {t:?}, found {got:?}"),
            }),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
                }
                Some(Token::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    let rhs = self.factor()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
                }
                Some(Token::Slash) => {
                    self.bump();
                    let rhs = self.factor()?;
                    lhs = Expr::Div(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        if matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            let inner = self.factor()?;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        let mut base = self.primary()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            let pos = self.here();
            let neg = if matches!(self.peek(), Some(Token::Minus)) {
                self.bump();
                true
            } else {
                false
            };
            let Some(Token::Int(n)) = self.bump() else {
                return Err(Error::Parse {
                    pos,
                    msg: "expected integer exponent".into(),
                });
            };
            let e: i64 = n.try_into().map_err(|_| Error::Parse {
                pos,
                msg: "exponent too large".into(),
            })?;
            base = Expr::Pow(Box::new(base), if neg { -e } else { e });
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr> {
        let pos = self.here();
        match self.bump() {
            Some(Token::Int(n)) => Ok(Expr::Int(n)),
            Some(Token::Ident(name)) => {
                if name == "e" && matches!(self.peek(), Some(Token::LParen)) {
                    self.bump();
                    let mut coords = Vec::new();
                    loop {
                        let neg = if matches!(self.peek(), Some(Token::Minus)) {
                            self.bump();
                            true
                        } else {
                            false
                        };
                        let cpos = self.here();
                        let Some(Token::Int(n)) = self.bump() else {
                            return Err(Error::Parse {
                                pos: cpos,
                                msg: "expected integer lattice coordinate".into(),
                            });
                        };
                        let v: i64 = n.try_into().map_err(|_| Error::Parse {
                            pos: cpos,
                            msg: "coordinate too large".into(),
                        })?;
                        coords.push(if neg { -v } else { v });
                        match self.bump() {
                            Some(Token::Comma) => continue,
                            Some(Token::RParen) => break,
                            _ => {
                                return Err(Error::Parse {
                                    pos: self.here(),
                                    msg: "expected `,` or `)` in lattice element".into(),
                                })
                            }
                        }
                    }
                    Ok(Expr::Lattice(coords))
                } else {
                    Ok(Expr::Name(name))
                }
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            got => Err(Error::Parse {
                pos,
                msg: format!("expected a value, found {got:?}"),
            }),
        }
    }
}

pub fn parse_expr(input: &str) -> Result<Expr> {
    let tokens = tokenize(input)?;
    let mut p = Parser { tokens, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse {
            pos: p.here(),
            msg: "trailing input".into(),
        });
    }
    Ok(e)
}

/// Evaluate in the scalar field (no ring variables, no lattice atoms).
pub fn eval_scalar(expr: &Expr, field: &Arc<ScalarField>) -> Result<Scalar> {
    match expr {
        Expr::Int(n) => Ok(Scalar::from_rational(
            field,
            BigRational::from_integer(n.clone()),
        )),
        Expr::Name(name) => {
            if name == "zeta" {
                Ok(Scalar::zeta(field))
            } else {
                Scalar::parameter(field, name).ok_or_else(|| Error::Parse {
                    pos: 0,
                    msg: format!("unknown name `{name}` in a scalar expression"),
                })
            }
        }
        Expr::Lattice(_) => Err(Error::Parse {
            pos: 0,
            msg: "lattice element in a scalar expression".into(),
        }),
        Expr::Neg(x) => Ok(-&eval_scalar(x, field)?),
        Expr::Add(a, b) => Ok(&eval_scalar(a, field)? + &eval_scalar(b, field)?),
        Expr::Sub(a, b) => Ok(&eval_scalar(a, field)? - &eval_scalar(b, field)?),
        Expr::Mul(a, b) => Ok(&eval_scalar(a, field)? * &eval_scalar(b, field)?),
        Expr::Div(a, b) => eval_scalar(a, field)?.div(&eval_scalar(b, field)?),
        Expr::Pow(a, e) => eval_scalar(a, field)?.pow(*e),
    }
}

/// Evaluate to a rational function over the given ring.
pub fn eval_ratfun(expr: &Expr, ring: &Arc<PolyRing>) -> Result<RatFun> {
    match expr {
        Expr::Int(n) => Ok(RatFun::from_poly(Poly::constant(
            ring,
            Scalar::from_rational(ring.field(), BigRational::from_integer(n.clone())),
        ))),
        Expr::Name(name) => {
            if let Some(i) = ring.var_index(name) {
                Ok(RatFun::from_poly(Poly::var(ring, i)))
            } else if name == "zeta" {
                Ok(RatFun::from_poly(Poly::constant(
                    ring,
                    Scalar::zeta(ring.field()),
                )))
            } else if let Some(s) = Scalar::parameter(ring.field(), name) {
                Ok(RatFun::from_poly(Poly::constant(ring, s)))
            } else {
                Err(Error::Parse {
                    pos: 0,
                    msg: format!("unknown name `{name}`"),
                })
            }
        }
        Expr::Lattice(_) => Err(Error::Parse {
            pos: 0,
            msg: "lattice element outside a skew expression".into(),
        }),
        Expr::Neg(x) => Ok(-&eval_ratfun(x, ring)?),
        Expr::Add(a, b) => Ok(&eval_ratfun(a, ring)? + &eval_ratfun(b, ring)?),
        Expr::Sub(a, b) => Ok(&eval_ratfun(a, ring)? - &eval_ratfun(b, ring)?),
        Expr::Mul(a, b) => Ok(&eval_ratfun(a, ring)? * &eval_ratfun(b, ring)?),
        Expr::Div(a, b) => eval_ratfun(a, ring)?.div(&eval_ratfun(b, ring)?),
        Expr::Pow(a, e) => eval_ratfun(a, ring)?.try_pow(*e),
    }
}

/// Evaluate to a polynomial; fails when a denominator survives.
pub fn eval_poly(expr: &Expr, ring: &Arc<PolyRing>) -> Result<Poly> {
    let rf = eval_ratfun(expr, ring)?;
    rf.to_poly().ok_or_else(|| {
        Error::NotPolynomial(format!("{}", rf.den()), format!("{}", rf.num()))
    })
}

/// Evaluate to a skew element; `e(a1,...,an)` atoms are lattice monomials.
pub fn eval_skew(expr: &Expr, ctx: &Arc<SkewContext>) -> Result<SkewElement> {
    match expr {
        Expr::Lattice(coords) => {
            if coords.len() != ctx.rank() {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!(
                        "lattice element has {} coordinates, context has rank {}",
                        coords.len(),
                        ctx.rank()
                    ),
                });
            }
            Ok(SkewElement::monomial(
                ctx,
                RatFun::one(ctx.ring()),
                LatticeElement(coords.clone()),
            ))
        }
        Expr::Int(_) | Expr::Name(_) => {
            let f = eval_ratfun(expr, ctx.ring())?;
            Ok(SkewElement::from_ratfun(ctx, f))
        }
        Expr::Neg(x) => Ok(-&eval_skew(x, ctx)?),
        Expr::Add(a, b) => Ok(&eval_skew(a, ctx)? + &eval_skew(b, ctx)?),
        Expr::Sub(a, b) => Ok(&eval_skew(a, ctx)? - &eval_skew(b, ctx)?),
        Expr::Mul(a, b) => eval_skew(a, ctx)?.try_mul(&eval_skew(b, ctx)?),
        Expr::Div(a, b) => {
            let den = eval_skew(b, ctx)?;
            eval_skew(a, ctx)?.try_mul(&den.inv_unit()?)
        }
        Expr::Pow(a, e) => {
            let base = eval_skew(a, ctx)?;
            if *e >= 0 {
                base.try_pow(*e as u32)
            } else {
                base.inv_unit()?.try_pow((-e) as u32)
            }
        }
    }
}

pub fn parse_scalar(input: &str, field: &Arc<ScalarField>) -> Result<Scalar> {
    eval_scalar(&parse_expr(input)?, field)
}

pub fn parse_ratfun(input: &str, ring: &Arc<PolyRing>) -> Result<RatFun> {
    eval_ratfun(&parse_expr(input)?, ring)
}

pub fn parse_poly(input: &str, ring: &Arc<PolyRing>) -> Result<Poly> {
    eval_poly(&parse_expr(input)?, ring)
}

pub fn parse_skew(input: &str, ctx: &Arc<SkewContext>) -> Result<SkewElement> {
    eval_skew(&parse_expr(input)?, ctx)
}
