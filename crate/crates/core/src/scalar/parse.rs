//! Text grammar for scalars: integers, `INT/INT`, the symbol `t`, powers,
//! `+ - * /` and parentheses.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::Scalar;
use crate::error::ScalarError;

/// Parses a scalar such as `-1/3`, `2*t` or `(t^2-1)/(t+1)`.
pub fn parse_scalar(input: &str) -> Result<Scalar, ScalarError> {
    let mut p = Parser {
        src: input,
        chars: input.char_indices().peekable(),
    };
    let value = p.expr()?;
    p.skip_ws();
    if let Some((i, c)) = p.chars.peek().copied() {
        return Err(p.error(format!("unexpected '{c}' at offset {i}")));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a str,
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
}

impl Parser<'_> {
    fn error(&self, message: String) -> ScalarError {
        ScalarError::Parse {
            input: self.src.to_string(),
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|(_, c)| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().map(|&(_, c)| c)
    }

    fn expr(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.chars.next();
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.chars.next();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.chars.next();
                    acc = &acc * &self.unary()?;
                }
                Some('/') => {
                    self.chars.next();
                    let rhs = self.unary()?;
                    acc = acc.checked_div(&rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, ScalarError> {
        match self.peek() {
            Some('-') => {
                self.chars.next();
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.chars.next();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Scalar, ScalarError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.chars.next();
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.error("exponent must be a small non-negative integer".into()))?;
            let mut acc = Scalar::one();
            for _ in 0..e {
                acc = &acc * &base;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Scalar, ScalarError> {
        match self.peek() {
            Some('(') => {
                self.chars.next();
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("missing ')'".into()));
                }
                self.chars.next();
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Scalar::Rational(BigRational::from_integer(n)))
            }
            Some(c) if c.is_alphabetic() => {
                let mut name = String::new();
                while let Some(&(_, c)) = self.chars.peek() {
                    if c.is_alphanumeric() || c == '_' {
                        name.push(c);
                        self.chars.next();
                    } else {
                        break;
                    }
                }
                if name == "t" {
                    Ok(Scalar::parameter())
                } else {
                    Err(ScalarError::UnknownSymbol(name))
                }
            }
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input".into())),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ScalarError> {
        let mut digits = String::new();
        while let Some(&(_, c)) = self.chars.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.chars.next();
            } else {
                break;
            }
        }
        digits.parse().map_err(|_| self.error("expected an integer".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Poly;

    #[test]
    fn grammar_examples() {
        assert_eq!(parse_scalar("-1/3").unwrap(), Scalar::ratio(-1, 3).unwrap());
        assert_eq!(parse_scalar("2*t").unwrap().to_string(), "2*t");
        assert_eq!(
            parse_scalar("t^2-1").unwrap(),
            Scalar::from_poly(Poly::from_i64(&[-1, 0, 1]))
        );
        assert_eq!(parse_scalar("(t^2-1)/(t-1)").unwrap().to_string(), "t+1");
        assert_eq!(parse_scalar(" 4 / -6 ").unwrap(), Scalar::ratio(-2, 3).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_scalar("1/0"), Err(ScalarError::DivisionByZero)));
        assert!(matches!(parse_scalar("mu"), Err(ScalarError::UnknownSymbol(_))));
        assert!(matches!(parse_scalar("t*s"), Err(ScalarError::UnknownSymbol(_))));
        assert!(parse_scalar("(1+t").is_err());
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("1 2").is_err());
    }
}
