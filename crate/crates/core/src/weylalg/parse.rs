//! A small expression language for algebra elements.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ('^' integer)?
//! atom   := x1 | y1 | x2 | y2 | z1 | z2 | zeta | rational | '(' expr ')'
//! ```
//!
//! Rationals are written `p` or `p/q`, optionally in double quotes; `zeta`
//! is the primitive `l`-th root of unity generating the multiparameters.

use crate::error::{Error, Result};
use crate::field::parse_rational;

use super::element::{generator, z_element, AlgebraElement, Gen};
use super::spec::AlgebraSpec;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Num(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() || c == '"' {
            i += 1;
        } else if c.is_ascii_alphabetic() {
            let st = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Tok::Ident(chars[st..i].iter().collect()));
        } else if c.is_ascii_digit() {
            let st = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                i += 1;
            }
            out.push(Tok::Num(chars[st..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!(
                "unexpected character `{c}` in expression"
            )));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    spec: &'a AlgebraSpec,
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser<'_> {
    fn peek_op(&self, c: char) -> bool {
        self.toks.get(self.pos) == Some(&Tok::Op(c))
    }

    fn expect_op(&mut self, c: char) -> Result<()> {
        if self.peek_op(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "expected `{c}` at token {}",
                self.pos
            )))
        }
    }

    fn expr(&mut self) -> Result<AlgebraElement> {
        let mut acc = self.term()?;
        loop {
            if self.peek_op('+') {
                self.pos += 1;
                acc = &acc + &self.term()?;
            } else if self.peek_op('-') {
                self.pos += 1;
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<AlgebraElement> {
        let mut acc = self.factor()?;
        while self.peek_op('*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<AlgebraElement> {
        if self.peek_op('-') {
            self.pos += 1;
            return Ok(self.factor()?.scale(&self.spec.scalar(-1)));
        }
        let base = self.atom()?;
        if !self.peek_op('^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = self.peek_op('-');
        if neg {
            self.pos += 1;
        }
        let paren = self.peek_op('(');
        if paren {
            self.pos += 1;
        }
        let neg = neg || {
            let inner = self.peek_op('-');
            if inner {
                self.pos += 1;
            }
            inner
        };
        let n: u32 = match self.toks.get(self.pos) {
            Some(Tok::Num(s)) => s
                .parse()
                .map_err(|_| Error::Parse(format!("invalid exponent `{s}`")))?,
            _ => return Err(Error::Parse("expected an integer exponent".into())),
        };
        self.pos += 1;
        if paren {
            self.expect_op(')')?;
        }
        if !neg {
            return Ok(base.pow(n));
        }
        let c = match (base.len(), base.terms().iter().next()) {
            (1, Some((m, c))) if m.degree() == 0 => c.clone(),
            _ => {
                return Err(Error::Parse(
                    "negative powers apply only to nonzero scalars".into(),
                ))
            }
        };
        let v = c.pow(-(n as i64))?;
        Ok(AlgebraElement::constant(self.spec, v))
    }

    fn atom(&mut self) -> Result<AlgebraElement> {
        let tok = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::Parse("unexpected end of expression".into()))?;
        self.pos += 1;
        match tok {
            Tok::Op('(') => {
                let e = self.expr()?;
                self.expect_op(')')?;
                Ok(e)
            }
            Tok::Num(s) => Ok(AlgebraElement::constant(
                self.spec,
                crate::field::Scalar::from_rational(self.spec.field(), parse_rational(&s)?),
            )),
            Tok::Ident(id) => match id.as_str() {
                "zeta" => Ok(AlgebraElement::constant(self.spec, self.spec.zeta(1))),
                "z1" => z_element(self.spec, 1),
                "z2" => z_element(self.spec, 2),
                other => Gen::parse(other)
                    .map(|g| generator(self.spec, g))
                    .ok_or_else(|| Error::Parse(format!("unknown identifier `{other}`"))),
            },
            Tok::Op(c) => Err(Error::Parse(format!("unexpected `{c}`"))),
        }
    }
}

/// Parses and evaluates `src` to its PBW normal form in `spec`.
pub fn parse_element(spec: &AlgebraSpec, src: &str) -> Result<AlgebraElement> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { spec, toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weylalg::element::PbwMonomial;
    use crate::weylalg::spec::Flavor;

    fn spec() -> AlgebraSpec {
        AlgebraSpec::new(Flavor::A2, 2, 3, 3, 2, 0).unwrap()
    }

    #[test]
    fn product_of_generators() {
        let s = spec();
        let e = parse_element(&s, "x1*y1").unwrap();
        assert_eq!(e.coeff(&PbwMonomial::new(1, 1, 0, 0)), s.q1());
        assert_eq!(e.coeff(&PbwMonomial::ONE), s.scalar(1));
        assert_eq!(e.len(), 2);
    }

    #[test]
    fn scalars_powers_and_signs() {
        let s = spec();
        let e = parse_element(&s, "\"1/2\"*zeta^2*x2^3 - 1/2*zeta^2*x2^3").unwrap();
        assert!(e.is_zero());
        let e = parse_element(&s, "zeta^-1 * zeta").unwrap();
        assert_eq!(e, AlgebraElement::one(&s));
        let e = parse_element(&s, "(x1 + y1)^2 - x1^2 - y1^2 - x1*y1 - y1*x1").unwrap();
        assert!(e.is_zero());
        assert_eq!(parse_element(&s, "z1").unwrap(), z_element(&s, 1).unwrap());
    }

    #[test]
    fn errors() {
        let s = spec();
        for bad in [
            "", "x3", "x1 *", "x1^y1", "(x1", "x1 ^ -1", "1/0", "x1 $ y1",
        ] {
            assert!(
                matches!(parse_element(&s, bad), Err(Error::Parse(_))),
                "{bad}"
            );
        }
    }
}
