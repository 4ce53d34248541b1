//! Text form of monomials: `term := "1" | factor ("*" factor)*`,
//! `factor := varname ("^" positive-integer)?`. Whitespace is ignored.

use std::fmt;

use crate::kernel::monomial::Monomial;
use crate::kernel::ring::GradedRing;
use crate::kernel::EXPONENT_LIMIT;

/// A grammar violation at a 1-based character column of the input string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialSyntaxError {
    pub column: usize,
    pub message: String,
}

impl fmt::Display for MonomialSyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for MonomialSyntaxError {}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn err(&self, message: impl Into<String>) -> MonomialSyntaxError {
        MonomialSyntaxError {
            column: self.column(),
            message: message.into(),
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &str {
        let start = self.pos;
        while self.pos < self.chars.len() && f(self.chars[self.pos].1) {
            self.pos += 1;
        }
        let lo = self.chars.get(start).map_or(self.src.len(), |&(b, _)| b);
        let hi = self.chars.get(self.pos).map_or(self.src.len(), |&(b, _)| b);
        &self.src[lo..hi]
    }
}

pub fn parse_monomial(ring: &GradedRing, text: &str) -> Result<Monomial, MonomialSyntaxError> {
    let mut cur = Cursor {
        chars: text.char_indices().collect(),
        pos: 0,
        src: text,
    };
    let mut exps = vec![0u32; ring.nvars()];
    match cur.peek() {
        None => return Err(cur.err("empty monomial")),
        Some('1') => {
            cur.pos += 1;
            return match cur.peek() {
                None => Ok(Monomial::new(exps)),
                Some(c) => Err(cur.err(format!("unexpected {c:?} after unit monomial"))),
            };
        }
        _ => {}
    }
    loop {
        cur.skip_ws();
        let col = cur.column();
        let name = cur.take_while(|c| c.is_ascii_alphanumeric() || c == '_').to_string();
        if name.is_empty() || !name.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_') {
            return Err(MonomialSyntaxError {
                column: col,
                message: "expected a variable name".into(),
            });
        }
        let var = ring.index_of(&name).ok_or(MonomialSyntaxError {
            column: col,
            message: format!("unknown variable {name:?}"),
        })?;
        let mut e = 1u32;
        if cur.peek() == Some('^') {
            cur.pos += 1;
            cur.skip_ws();
            let col = cur.column();
            let digits = cur.take_while(|c| c.is_ascii_digit()).to_string();
            let value: u64 = digits.parse().map_err(|_| MonomialSyntaxError {
                column: col,
                message: "expected a positive integer exponent".into(),
            })?;
            if value == 0 {
                return Err(MonomialSyntaxError {
                    column: col,
                    message: "exponent must be positive".into(),
                });
            }
            e = u32::try_from(value)
                .ok()
                .filter(|&v| v <= EXPONENT_LIMIT)
                .ok_or(MonomialSyntaxError {
                    column: col,
                    message: format!("exponent exceeds {EXPONENT_LIMIT}"),
                })?;
        }
        exps[var] = exps[var]
            .checked_add(e)
            .filter(|&v| v <= EXPONENT_LIMIT)
            .ok_or(MonomialSyntaxError {
                column: col,
                message: format!("exponent exceeds {EXPONENT_LIMIT}"),
            })?;
        match cur.peek() {
            None => return Ok(Monomial::new(exps)),
            Some('*') => cur.pos += 1,
            Some(c) => return Err(cur.err(format!("unexpected {c:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        let r = GradedRing::standard(vec!["X", "Y", "Z"]).unwrap();
        assert_eq!(parse_monomial(&r, "1").unwrap(), Monomial::one(3));
        assert_eq!(
            parse_monomial(&r, " X * Y^4 ").unwrap(),
            Monomial::new(vec![1, 4, 0])
        );
        assert_eq!(
            parse_monomial(&r, "X*X^2*Z").unwrap(),
            Monomial::new(vec![3, 0, 1])
        );
        assert_eq!(parse_monomial(&r, "X^0").unwrap_err().column, 3);
        assert!(parse_monomial(&r, "W").is_err());
        assert!(parse_monomial(&r, "").is_err());
        assert!(parse_monomial(&r, "X*").is_err());
        assert!(parse_monomial(&r, "1*X").is_err());
        assert!(parse_monomial(&r, "X^-1").is_err());
        assert!(parse_monomial(&r, "X Y").is_err());
    }

    #[test]
    fn format_round_trip() {
        let r = GradedRing::standard(vec!["X", "Y", "Z"]).unwrap();
        for s in ["1", "X", "Y*Z^2", "X^3*Y^4*Z^11"] {
            let m = parse_monomial(&r, s).unwrap();
            assert_eq!(r.format(&m), s);
        }
    }
}
