//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*      division only by nonzero constants
//! unary := ('+' | '-') unary | power
//! power := atom ('^' integer)?
//! atom  := number | identifier | '(' expr ')'
//! ```

use std::collections::BTreeSet;
use std::sync::Arc;

use super::poly::Poly;
use super::SchemeError;
use crate::scalar::Scalar;
use crate::Rational;

struct Parser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
    vars: &'a Arc<Vec<String>>,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> SchemeError {
        let at = self.chars.get(self.pos).map_or(self.src.len(), |(i, _)| *i);
        SchemeError::Syntax {
            position: at,
            message: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn expr(&mut self) -> Result<Poly<Rational>, SchemeError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                '-' => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly<Rational>, SchemeError> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.bump();
                    acc = acc.mul(&self.unary()?);
                }
                '/' => {
                    self.bump();
                    let at = self.pos;
                    let d = self.unary()?;
                    if !d.is_constant() || d.is_zero() {
                        self.pos = at;
                        return Err(self.err("division by a non-constant or zero"));
                    }
                    let c = d.coeff(&vec![0; self.vars.len()]);
                    acc = acc.scale(&(Rational::from_i64(1) / c));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly<Rational>, SchemeError> {
        match self.peek() {
            Some('-') => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Some('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly<Rational>, SchemeError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.chars.len() && self.chars[self.pos].1.is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("expected a nonnegative integer exponent"));
            }
            let text: String = self.chars[start..self.pos].iter().map(|(_, c)| c).collect();
            let n: u32 = text.parse().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly<Rational>, SchemeError> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.bump();
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].1.is_ascii_digit() {
                    self.pos += 1;
                }
                let text: String = self.chars[start..self.pos].iter().map(|(_, c)| c).collect();
                let n: num_bigint::BigInt = text.parse().map_err(|_| self.err("bad number"))?;
                Ok(Poly::constant(self.vars, Rational::from_integer(n)))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len() && {
                    let c = self.chars[self.pos].1;
                    c.is_alphanumeric() || c == '_'
                } {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().map(|(_, c)| c).collect();
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(Poly::var(self.vars, i)),
                    None => {
                        self.pos = start;
                        Err(SchemeError::UnknownVariable(name))
                    }
                }
            }
            Some(c) => Err(self.err(format!("unexpected '{c}'"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses `text` as a polynomial in `vars`.
pub fn parse_poly(text: &str, vars: &Arc<Vec<String>>) -> Result<Poly<Rational>, SchemeError> {
    let mut p = Parser {
        src: text,
        chars: text.char_indices().collect(),
        pos: 0,
        vars,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Identifiers occurring in the texts, sorted.
pub fn infer_vars<'a>(texts: impl IntoIterator<Item = &'a str>) -> Arc<Vec<String>> {
    let mut names = BTreeSet::new();
    for t in texts {
        let mut cur = String::new();
        let mut in_number = false;
        for c in t.chars().chain(std::iter::once(' ')) {
            if cur.is_empty() && c.is_ascii_digit() {
                in_number = true;
            }
            if c.is_alphanumeric() || c == '_' {
                if !in_number {
                    cur.push(c);
                }
            } else {
                if !cur.is_empty() {
                    names.insert(std::mem::take(&mut cur));
                }
                in_number = false;
            }
        }
    }
    Arc::new(names.into_iter().collect())
}

/// Parses a comma-separated variable list.
pub fn parse_vars(text: &str) -> Result<Arc<Vec<String>>, SchemeError> {
    let vars: Vec<String> = text.split(',').map(|s| s.trim().to_string()).collect();
    for v in &vars {
        let ok = v
            .chars()
            .next()
            .is_some_and(|c| c.is_alphabetic() || c == '_')
            && v.chars().all(|c| c.is_alphanumeric() || c == '_');
        if !ok {
            return Err(SchemeError::Syntax {
                position: 0,
                message: format!("bad variable name {v:?}"),
            });
        }
    }
    let unique: BTreeSet<&String> = vars.iter().collect();
    if unique.len() != vars.len() {
        return Err(SchemeError::Syntax {
            position: 0,
            message: "repeated variable".into(),
        });
    }
    Ok(Arc::new(vars))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Arc<Vec<String>> {
        Arc::new(vec!["x".into(), "y".into()])
    }

    #[test]
    fn examples() {
        let r = xy();
        assert_eq!(parse_poly("x^2+y^3", &r).unwrap().to_string(), "y^3 + x^2");
        assert!(parse_poly("x*y - y*x", &r).unwrap().is_zero());
        assert_eq!(
            parse_poly("(x+y)^2", &r).unwrap().to_string(),
            "x^2 + 2*x*y + y^2"
        );
        assert_eq!(
            parse_poly("-3/2*x + 1", &r).unwrap().to_string(),
            "-3/2*x + 1"
        );
        assert_eq!(parse_poly("2^3*x", &r).unwrap().to_string(), "8*x");
        assert_eq!(parse_poly("-x^2", &r).unwrap().to_string(), "-x^2");
    }

    #[test]
    fn errors() {
        let r = xy();
        assert_eq!(
            parse_poly("x + z", &r).unwrap_err(),
            SchemeError::UnknownVariable("z".into())
        );
        match parse_poly("x + * y", &r).unwrap_err() {
            SchemeError::Syntax { position, .. } => assert_eq!(position, 4),
            e => panic!("{e:?}"),
        }
        assert!(parse_poly("(x + y", &r).is_err());
        assert!(parse_poly("x / y", &r).is_err());
        assert!(parse_poly("x^", &r).is_err());
        assert!(parse_poly("x y", &r).is_err());
    }

    #[test]
    fn variables() {
        assert_eq!(
            *infer_vars(["y^2 + x1*x", "3*z"]),
            vec!["x", "x1", "y", "z"]
        );
        assert_eq!(*parse_vars("x, y").unwrap(), vec!["x", "y"]);
        assert!(parse_vars("x,x").is_err());
        assert!(parse_vars("1x").is_err());
    }
}
