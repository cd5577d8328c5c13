//! Inline class syntax: `3*x1^2*x3 @ 1 - x2 @ 0`.
//!
//! ```text
//! class  := ws [sign] term (sign term)*
//! term   := factor ('*' factor)* '@' index
//! factor := integer | 'x' index ['^' integer]
//! sign   := '+' | '-'
//! ```
//!
//! Whitespace may appear between any two tokens. Variables are 1-based
//! facet indices and sector indices follow the canonical `sectors` order,
//! with the untwisted sector at 0.

use num_bigint::BigInt;
use num_traits::One;
use toric_orbifold::{CrClass, Monomial, Polynomial, SectorId, ToricOrbifold};

/// A malformed class, positioned at a 1-based character column.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("ParseError at column {column}: {message}")]
pub struct ClassError {
    pub column: usize,
    pub message: String,
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    orb: &'a ToricOrbifold,
}

impl Cursor<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ClassError> {
        Err(ClassError {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self, what: &str) -> Result<String, ClassError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(format!("expected {what}"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn index(&mut self, what: &str) -> Result<(usize, usize), ClassError> {
        self.skip_ws();
        let column = self.pos;
        let s = self.digits(what)?;
        match s.parse() {
            Ok(k) => Ok((k, column)),
            Err(_) => Err(ClassError {
                column: column + 1,
                message: format!("{what} out of range"),
            }),
        }
    }

    fn term(&mut self, sign: BigInt) -> Result<(SectorId, Polynomial), ClassError> {
        let m = self.orb.num_vars();
        let mut coeff = sign;
        let mut exps = vec![0u32; m];
        loop {
            match self.peek() {
                Some('x') => {
                    self.pos += 1;
                    let (i, column) = self.index("a variable index")?;
                    if i == 0 || i > m {
                        return Err(ClassError {
                            column: column + 1,
                            message: format!("variable x{i} outside x1..x{m}"),
                        });
                    }
                    let e: u32 = if self.eat('^') {
                        let (e, column) = self.index("an exponent")?;
                        e.try_into().map_err(|_| ClassError {
                            column: column + 1,
                            message: "exponent too large".into(),
                        })?
                    } else {
                        1
                    };
                    exps[i - 1] += e;
                }
                Some(c) if c.is_ascii_digit() => {
                    let c: BigInt = self.digits("an integer")?.parse().expect("digits");
                    coeff *= c;
                }
                _ => return self.err("expected an integer or a variable"),
            }
            if !self.eat('*') {
                break;
            }
        }
        if !self.eat('@') {
            return self.err("expected `*` or `@`");
        }
        let (g, column) = self.index("a sector index")?;
        if g >= self.orb.sectors().len() {
            return Err(ClassError {
                column: column + 1,
                message: format!(
                    "sector index {g} outside 0..{}",
                    self.orb.sectors().len() - 1
                ),
            });
        }
        Ok((SectorId(g), Polynomial::term(coeff, Monomial::new(exps))))
    }
}

/// Parses a class and reduces each component in its sector module.
pub fn parse_class(text: &str, orb: &ToricOrbifold) -> Result<CrClass, ClassError> {
    let mut cur = Cursor {
        chars: text.chars().collect(),
        pos: 0,
        orb,
    };
    let mut terms = Vec::new();
    let mut sign = BigInt::one();
    if cur.eat('-') {
        sign = -sign;
    } else {
        cur.eat('+');
    }
    loop {
        terms.push(cur.term(sign)?);
        sign = if cur.eat('+') {
            BigInt::one()
        } else if cur.eat('-') {
            -BigInt::one()
        } else if cur.peek().is_none() {
            break;
        } else {
            return cur.err("expected `+`, `-` or end of input");
        };
    }
    Ok(CrClass::from_components(orb, terms).expect("indices checked while parsing"))
}
