//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr   := [+|-] term { (+|-) term }
//! term   := power { * power }
//! power  := atom [ ^ nat ]
//! atom   := number | variable | ( expr )
//! number := nat [ / nat ]
//! ```
//!
//! Juxtaposition is not implicit multiplication: `2x` and `x y` are syntax
//! errors. Exponents must be nonnegative integers. Parsing expands the
//! expression fully into the canonical term representation.

use crate::error::{Error, Result};
use crate::poly::{Polynomial, RingContext};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Eof,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next(&mut self) -> Result<(Tok, usize)> {
        self.skip_ws();
        let start = self.pos;
        let Some(&c) = self.src.get(self.pos) else {
            return Ok((Tok::Eof, start));
        };
        self.pos += 1;
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while self.src.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Tok::Int(text.parse().unwrap())
            }
            c if c.is_ascii_alphabetic() => {
                while self
                    .src
                    .get(self.pos)
                    .is_some_and(|&b| b.is_ascii_alphanumeric() || b == b'_')
                {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Tok::Ident(text.to_string())
            }
            _ => {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("unexpected character `{}`", c as char),
                })
            }
        };
        Ok((tok, start))
    }
}

struct Parser<'a> {
    ring: &'a RingContext,
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &(Tok, usize) {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let order = self.ring.order();
        let mut negate = false;
        match self.peek().0 {
            Tok::Plus => {
                self.bump();
            }
            Tok::Minus => {
                self.bump();
                negate = true;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek().0 {
                Tok::Plus => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t, order);
                }
                Tok::Minus => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t, order);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let order = self.ring.order();
        let mut acc = self.power()?;
        while self.peek().0 == Tok::Star {
            self.bump();
            let p = self.power()?;
            acc = acc.mul(&p, order);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek().0 != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (tok, pos) = self.bump();
        let exp = match tok {
            Tok::Int(n) => u32::try_from(&n).map_err(|_| Error::Parse {
                pos,
                msg: "exponent too large".into(),
            })?,
            Tok::Minus => return Err(Error::NegativeExponent { pos }),
            other => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("expected integer exponent, found {other:?}"),
                })
            }
        };
        if base.is_zero() {
            return Ok(if exp == 0 {
                Polynomial::one(self.ring.nvars())
            } else {
                Polynomial::zero()
            });
        }
        Ok(base.pow(exp, self.ring.order()))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::Int(n) => {
                // optional `/ denominator` makes a rational literal
                let mut value = BigRational::from_integer(n);
                if self.peek().0 == Tok::Slash {
                    self.bump();
                    let (tok, dpos) = self.bump();
                    match tok {
                        Tok::Int(d) if !d.is_zero() => {
                            value /= BigRational::from_integer(d);
                        }
                        Tok::Int(_) => {
                            return Err(Error::Parse {
                                pos: dpos,
                                msg: "zero denominator".into(),
                            })
                        }
                        other => {
                            return Err(Error::Parse {
                                pos: dpos,
                                msg: format!("expected integer denominator, found {other:?}"),
                            })
                        }
                    }
                }
                Ok(Polynomial::constant(value, self.ring.nvars()))
            }
            Tok::Ident(name) => match self.ring.var_index(&name) {
                Some(i) => Ok(Polynomial::variable(self.ring.nvars(), i)),
                None => Err(Error::UnknownVariable { name, pos }),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                let (tok, pos) = self.bump();
                if tok != Tok::RParen {
                    return Err(Error::Parse {
                        pos,
                        msg: "expected `)`".into(),
                    });
                }
                Ok(inner)
            }
            other => Err(Error::Parse {
                pos,
                msg: format!("expected a number, variable, or `(`, found {other:?}"),
            }),
        }
    }
}

/// Parses an expression into the expanded, canonical polynomial.
pub fn parse_polynomial(text: &str, ring: &RingContext) -> Result<Polynomial> {
    let mut lexer = Lexer::new(text);
    let mut toks = Vec::new();
    loop {
        let t = lexer.next()?;
        let done = t.0 == Tok::Eof;
        toks.push(t);
        if done {
            break;
        }
    }
    let mut p = Parser { ring, toks, at: 0 };
    let poly = p.expr()?;
    let (tok, pos) = p.peek().clone();
    if tok != Tok::Eof {
        return Err(Error::Parse {
            pos,
            msg: format!("unexpected trailing input, found {tok:?}"),
        });
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, rat_frac};
    use crate::poly::{Monomial, Term};
    use proptest::prelude::*;

    fn ring() -> RingContext {
        RingContext::standard(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn parses_binomial_generator() {
        let r = ring();
        let f = parse_polynomial("y^3 - x^3*z", &r).unwrap();
        assert_eq!(f.terms().len(), 2);
        assert_eq!(f.to_text(&r), "-x^3*z + y^3"); // grevlex: x^3 z > y^3
    }

    #[test]
    fn parses_zero_and_expands() {
        let r = ring();
        assert!(parse_polynomial("0", &r).unwrap().is_zero());
        let f = parse_polynomial("(x+y)^2 - x^2 - 2*x*y", &r).unwrap();
        assert_eq!(f.to_text(&r), "y^2");
    }

    #[test]
    fn rational_literals() {
        let r = ring();
        let f = parse_polynomial("1/2*x - 3/4", &r).unwrap();
        assert_eq!(f.terms()[0].coef, rat_frac(1, 2));
        assert_eq!(f.terms()[1].coef, rat_frac(-3, 4));
    }

    #[test]
    fn error_positions() {
        let r = ring();
        match parse_polynomial("x + w", &r) {
            Err(Error::UnknownVariable { name, pos }) => {
                assert_eq!(name, "w");
                assert_eq!(pos, 4);
            }
            other => panic!("expected unknown-variable error, got {other:?}"),
        }
        assert!(matches!(
            parse_polynomial("x^-2", &r),
            Err(Error::NegativeExponent { pos: 2 })
        ));
        assert!(matches!(
            parse_polynomial("x y", &r),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_polynomial("2x", &r),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_polynomial("1/0", &r),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_polynomial("x^99999999999", &r),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_polynomial("x + $", &r),
            Err(Error::Parse { pos: 4, .. })
        ));
        assert!(matches!(parse_polynomial("", &r), Err(Error::Parse { .. })));
    }

    #[test]
    fn unary_minus_binds_leading_term() {
        let r = ring();
        let f = parse_polynomial("-x*y + z", &r).unwrap();
        let g = parse_polynomial("z - x*y", &r).unwrap();
        assert_eq!(f, g);
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        let term = (
            -9i64..10,
            proptest::collection::vec(0u32..4, 3).prop_map(Monomial::from_exponents),
        );
        proptest::collection::vec(term, 0..6).prop_map(|ts| {
            Polynomial::from_terms(
                ts.into_iter()
                    .map(|(c, mono)| Term { coef: rat(c), mono })
                    .collect(),
                &crate::poly::MonomialOrder::Grevlex,
            )
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(f in arb_poly()) {
            let r = ring();
            let text = f.to_text(&r);
            let back = parse_polynomial(&text, &r).unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
