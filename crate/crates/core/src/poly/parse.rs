use num_bigint::BigInt;
use num_traits::Zero;

use super::{Polynomial, Var};
use crate::arith::{Field, Rational};
use crate::error::{Error, Result};

/// Parse the polynomial grammar: integer and `a/b` literals, the variables
/// `x` and `y`, `+ - * ^` and parentheses. Multiplication is never
/// implicit. Precedence from tightest: `^`, unary `-`, `*`, binary `+ -`.
pub fn parse_polynomial<F: Field>(text: &str, field: &F) -> Result<Polynomial<F>> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, field };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    src: &'a [u8],
    pos: usize,
    field: &'a F,
}

impl<F: Field> Parser<'_, F> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax { position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial<F>> {
        if self.eat(b'-') {
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits().ok_or_else(|| self.error("expected exponent"))?;
        let e: u32 = digits.parse().map_err(|_| Error::Syntax { position: start, message: "exponent too large".into() })?;
        if self.peek() == Some(b'^') {
            return Err(self.error("chained exponent"));
        }
        Ok(base.pow(e))
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let num: BigInt = self.digits().expect("digit").parse().expect("decimal");
                let mut value = Rational::from_integer(num);
                if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    let den: BigInt = self.digits().ok_or_else(|| self.error("expected denominator"))?.parse().expect("decimal");
                    if den.is_zero() {
                        return Err(Error::Syntax { position: start, message: "zero denominator".into() });
                    }
                    value /= Rational::from_integer(den);
                }
                let c = self
                    .field
                    .from_rational(&value)
                    .ok_or_else(|| Error::CoefficientNotInField(value.to_string()))?;
                Ok(Polynomial::constant(self.field.clone(), c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_') {
                    self.pos += 1;
                }
                match &self.src[start..self.pos] {
                    b"x" => Ok(Polynomial::var(self.field.clone(), Var::X)),
                    b"y" => Ok(Polynomial::var(self.field.clone(), Var::Y)),
                    other => Err(Error::UnknownVariable(String::from_utf8_lossy(other).into_owned())),
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, Rationals};

    #[test]
    fn grammar_examples() {
        let g = parse_polynomial("y^2 - x*(x^2-1)", &Rationals).unwrap();
        assert_eq!(g.to_string(), "y^2 - x^3 + x");
        assert!(parse_polynomial("0", &Rationals).unwrap().is_zero());
        let f = parse_polynomial("(y-1)^2*(y-2)", &PrimeField::new(7)).unwrap();
        assert_eq!(f.to_string(), "y^3 + 3*y^2 + 5*y + 5");
    }

    #[test]
    fn precedence() {
        let p = |s| parse_polynomial(s, &Rationals).unwrap().to_string();
        assert_eq!(p("-x^2"), "-x^2");
        assert_eq!(p("-2*3 + 1/2"), "-11/2");
        assert_eq!(p("2*-x"), "-2*x");
        assert_eq!(p("1 - 2 - 3"), "-4");
        assert_eq!(p("3/6*y"), "1/2*y");
    }

    #[test]
    fn errors() {
        assert_eq!(parse_polynomial("2x", &Rationals), Err(Error::Syntax { position: 1, message: "unexpected trailing input".into() }));
        assert_eq!(parse_polynomial("z + 1", &Rationals), Err(Error::UnknownVariable("z".into())));
        assert!(matches!(parse_polynomial("(x + 1", &Rationals), Err(Error::Syntax { position: 6, .. })));
        assert!(matches!(parse_polynomial("x^2^3", &Rationals), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("1/0", &Rationals), Err(Error::Syntax { .. })));
        assert_eq!(parse_polynomial("1/7", &PrimeField::new(7)), Err(Error::CoefficientNotInField("1/7".into())));
    }
}
