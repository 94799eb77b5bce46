//! Text form `c * X0^a0*X1^a1*...*Xn^an + ...` with `c` written `num/den`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::{Poly, Rational};

fn format_rational(c: &Rational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// Canonical text: terms largest first, every exponent written out.
pub fn format_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<String> = p
        .terms()
        .map(|(m, c)| format!("{} * {}", format_rational(c), m))
        .collect();
    terms.join(" + ")
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
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

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(format!("column {}", self.pos + 1), msg)
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }
}

/// Parses the text form. Coefficients may be `n` or `n/d`; a missing
/// coefficient means 1; variables may be written `Xi` (exponent 1) and
/// absent variables have exponent 0.
pub fn parse_poly(text: &str, nvars: usize) -> Result<Poly> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut p = Poly::zero(nvars);
    if cur.peek().is_none() {
        return Err(cur.err("empty polynomial"));
    }
    let mut first = true;
    loop {
        let mut negative = false;
        if cur.eat(b'+') {
            if first {
                return Err(cur.err("leading '+'"));
            }
        } else if cur.eat(b'-') {
            negative = true;
        } else if !first {
            return Err(cur.err("expected '+' or '-' between terms"));
        }
        if !first && negative && cur.peek() == Some(b'-') {
            return Err(cur.err("doubled sign"));
        }
        if first && cur.peek() == Some(b'-') && negative {
            return Err(cur.err("doubled sign"));
        }
        // a sign after '+' belongs to the coefficient, e.g. "+ -3/1 * X0^2"
        if cur.eat(b'-') {
            negative = !negative;
        }
        first = false;

        let mut coeff = Rational::one();
        let mut have_coeff = false;
        if let Some(num) = cur.digits() {
            let num: BigInt = num.parse().map_err(|_| cur.err("bad numerator"))?;
            let mut c = Rational::from_integer(num);
            if cur.eat(b'/') {
                let den = cur.digits().ok_or_else(|| cur.err("expected denominator"))?;
                let den: BigInt = den.parse().map_err(|_| cur.err("bad denominator"))?;
                if den.is_zero() {
                    return Err(cur.err("zero denominator"));
                }
                c = Rational::new(c.to_integer(), den);
            }
            coeff = c;
            have_coeff = true;
        }
        let mut exps = vec![0u32; nvars];
        let mut have_var = false;
        loop {
            if have_coeff || have_var {
                if cur.peek() == Some(b'*') {
                    cur.pos += 1;
                } else {
                    break;
                }
            }
            match cur.peek() {
                Some(b'X') | Some(b'x') => {
                    cur.pos += 1;
                    let idx = cur.digits().ok_or_else(|| cur.err("expected variable index"))?;
                    let idx: usize = idx.parse().map_err(|_| cur.err("bad variable index"))?;
                    if idx >= nvars {
                        return Err(cur.err(format!("variable X{idx} outside X0..X{}", nvars - 1)));
                    }
                    let e = if cur.eat(b'^') {
                        let e = cur.digits().ok_or_else(|| cur.err("expected exponent"))?;
                        e.parse::<u32>().map_err(|_| cur.err("bad exponent"))?
                    } else {
                        1
                    };
                    exps[idx] += e;
                    have_var = true;
                }
                _ if have_coeff || have_var => return Err(cur.err("expected a variable after '*'")),
                _ => return Err(cur.err("expected a coefficient or a variable")),
            }
        }
        if negative {
            coeff = -coeff;
        }
        p.add_term(Monomial::new(exps), coeff);
        if cur.peek().is_none() {
            break;
        }
    }
    Ok(p)
}
