//! Polynomial expressions in `t` for `integrate --poly`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' digits)?
//! atom   := digits | 't' | 'v' | 'P' digits | '(' expr ')'
//! ```
//!
//! `t` is the shifted generator, `v = t + a`, and `Pk` is the degree-k
//! special polynomial. Division is only by constants.

use qhyper_core::{special_polynomial, Error, Params, Result, Scalar, VPoly};

const MAX_INDEX: u64 = 256;

pub fn parse_poly(src: &str, p: &Params) -> Result<VPoly> {
    let mut parser = Parser {
        src: src.as_bytes(),
        pos: 0,
        p,
    };
    let out = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    p: &'a Params,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at offset {} in {:?}",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
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

    fn digits(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("integer too large"))
    }

    fn expr(&mut self) -> Result<VPoly> {
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

    fn term(&mut self) -> Result<VPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let d = self.unary()?;
                let c = match d.degree() {
                    Some(0) => d.coeff(0),
                    _ => return Err(self.error("division by a non-constant or zero")),
                };
                acc = acc.scale(&c.inv().expect("nonzero constant"));
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<VPoly> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let n = self.digits()?;
        if n > 64 {
            return Err(self.error("exponent above 64"));
        }
        Ok((0..n).fold(VPoly::one(), |acc, _| &acc * &base))
    }

    fn unary(&mut self) -> Result<VPoly> {
        if self.eat(b'-') {
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn atom(&mut self) -> Result<VPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(b't') => {
                self.pos += 1;
                Ok(VPoly::monomial(1))
            }
            Some(b'v') => {
                self.pos += 1;
                Ok(VPoly::new(vec![self.p.a().clone(), Scalar::one()]))
            }
            Some(b'P') => {
                self.pos += 1;
                let k = self.digits()?;
                if k > MAX_INDEX {
                    return Err(self.error("special polynomial index above 256"));
                }
                Ok(special_polynomial(k as u32, self.p)?.poly().clone())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                let n = i64::try_from(n).map_err(|_| self.error("integer too large"))?;
                Ok(VPoly::constant(Scalar::from_int(n)))
            }
            _ => Err(self.error("expected a number, t, v, Pk or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Params {
        Params::ints(2, 1, 1).unwrap()
    }

    #[test]
    fn arithmetic() {
        let f = parse_poly("3/4*t^2 - (t - 1)", &p()).unwrap();
        let s = Scalar::ratio;
        assert_eq!(f, VPoly::new(vec![s(1, 1), s(-1, 1), s(3, 4)]));
        assert_eq!(parse_poly("-2", &p()).unwrap(), VPoly::constant(s(-2, 1)));
        assert_eq!(parse_poly("-t^2", &p()).unwrap(), VPoly::term(s(-1, 1), 2));
        assert_eq!(parse_poly("2*-t", &p()).unwrap(), VPoly::term(s(-2, 1), 1));
    }

    #[test]
    fn v_is_shifted() {
        let p = p();
        assert_eq!(
            parse_poly("v", &p).unwrap(),
            VPoly::new(vec![p.a().clone(), Scalar::one()])
        );
        assert_eq!(parse_poly("P1", &p).unwrap(), parse_poly("v", &p).unwrap());
    }

    #[test]
    fn special_products() {
        let p = p();
        let f = parse_poly("P2*P3", &p).unwrap();
        assert_eq!(f.degree(), Some(5));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "t +", "x", "t/t", "(t", "t^", "1/0", "t t"] {
            assert!(matches!(parse_poly(bad, &p()), Err(Error::Parse(_))), "{bad}");
        }
    }
}
