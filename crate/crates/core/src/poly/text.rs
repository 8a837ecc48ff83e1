//! Canonical text form: terms in descending graded-lex order, written like
//! `3/2*x0^2*x1 - x2 + 5`. The parser accepts exactly this syntax (with free
//! whitespace), so `parse(render(p)) == p`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MultiPoly, PolyError};
use crate::rational::{format_rational, Rational};

impl MultiPoly {
    /// Renders with custom variable names.
    pub fn render_with<F: Fn(usize) -> String>(&self, name: F) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (exps, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            let mut factors = Vec::new();
            let constant = exps.iter().all(|&e| e == 0);
            if constant || !abs.is_one() {
                factors.push(format_rational(&abs));
            }
            for (v, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(name(v)),
                    _ => factors.push(format!("{}^{e}", name(v))),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parses the canonical form. With `nvars = None` the variable count is
    /// one more than the largest index used (0 for constants).
    pub fn parse(text: &str, nvars: Option<usize>) -> Result<MultiPoly, PolyError> {
        let terms = Parser::new(text).terms()?;
        let used = terms
            .iter()
            .flat_map(|(vars, _)| vars.iter().map(|&(v, _)| v + 1))
            .max()
            .unwrap_or(0);
        let nvars = match nvars {
            Some(n) if n < used => {
                return Err(PolyError::VarOutOfRange {
                    var: used - 1,
                    nvars: n,
                })
            }
            Some(n) => n,
            None => used,
        };
        let mut p = MultiPoly::zero(nvars);
        for (vars, c) in terms {
            let mut e = vec![0u32; nvars];
            for (v, k) in vars {
                e[v] += k;
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }
}

impl FromStr for MultiPoly {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MultiPoly::parse(s, None)
    }
}

type RawTerm = (Vec<(usize, u32)>, Rational);

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> PolyError {
        PolyError::Parse {
            offset: self.pos,
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

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn terms(&mut self) -> Result<Vec<RawTerm>, PolyError> {
        let mut out = Vec::new();
        let mut negative = self.eat(b'-');
        loop {
            let (vars, c) = self.term()?;
            out.push((vars, if negative { -c } else { c }));
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return Err(self.error("expected `+` or `-`")),
            }
            self.pos += 1;
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<RawTerm, PolyError> {
        let mut coeff = Rational::one();
        let mut vars = Vec::new();
        loop {
            match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    let idx = self
                        .digits()
                        .ok_or_else(|| self.error("expected variable index"))?;
                    let v: usize = idx
                        .parse()
                        .map_err(|_| self.error("variable index too large"))?;
                    let mut e = 1u32;
                    if self.eat(b'^') {
                        let d = self
                            .digits()
                            .ok_or_else(|| self.error("expected exponent"))?;
                        e = d.parse().map_err(|_| self.error("exponent too large"))?;
                    }
                    vars.push((v, e));
                }
                Some(b) if b.is_ascii_digit() => {
                    let num: BigInt = self.digits().unwrap().parse().unwrap();
                    let mut den = BigInt::one();
                    if self.eat(b'/') {
                        den = self
                            .digits()
                            .ok_or_else(|| self.error("expected denominator"))?
                            .parse()
                            .unwrap();
                        if den.is_zero() {
                            return Err(self.error("zero denominator"));
                        }
                    }
                    coeff *= Rational::new(num, den);
                }
                _ => return Err(self.error("expected a number or variable")),
            }
            if !self.eat(b'*') {
                return Ok((vars, coeff));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn render_examples() {
        let p = MultiPoly::from_terms(
            2,
            [
                (vec![2, 1], frac(3, 2)),
                (vec![0, 1], frac(-1, 1)),
                (vec![0, 0], frac(5, 1)),
            ],
        );
        assert_eq!(p.to_string(), "3/2*x0^2*x1 - x1 + 5");
        assert_eq!((-&p).to_string(), "-3/2*x0^2*x1 + x1 - 5");
        assert_eq!(MultiPoly::zero(4).to_string(), "0");
        assert_eq!(MultiPoly::constant(1, frac(-2, 3)).to_string(), "-2/3");
    }

    #[test]
    fn parse_examples() {
        let p = MultiPoly::parse("3/2*x0^2*x1 - x1 + 5", None).unwrap();
        assert_eq!(p.nvars(), 2);
        assert_eq!(p.to_string(), "3/2*x0^2*x1 - x1 + 5");
        let q = MultiPoly::parse(" x0 * x0 + 2 * x0*x1 ", Some(3)).unwrap();
        assert_eq!(q.nvars(), 3);
        assert_eq!(q.to_string(), "x0^2 + 2*x0*x1");
        assert_eq!(
            MultiPoly::parse("x1 - x1", None).unwrap(),
            MultiPoly::zero(2)
        );
        assert!(matches!(
            MultiPoly::parse("x3", Some(2)),
            Err(PolyError::VarOutOfRange { var: 3, nvars: 2 })
        ));
        assert!(matches!(
            MultiPoly::parse("x0 +", None),
            Err(PolyError::Parse { .. })
        ));
        assert!(matches!(
            MultiPoly::parse("1/0", None),
            Err(PolyError::Parse { .. })
        ));
        assert!(matches!(
            MultiPoly::parse("y0", None),
            Err(PolyError::Parse { offset: 0, .. })
        ));
    }
}
