//! Group grammar: `1/r(a1,...,an)` or `r1xr2x...xrk:a11,...,a1n;...;ak1,...,akn`.

use std::fmt;

use mckay_core::quiver::AbelianGroupData;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecError {
    /// 1-based column of the offending token.
    pub column: usize,
    pub token: String,
    pub expected: String,
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.token.is_empty() {
            write!(
                f,
                "unexpected end of group spec at column {}: expected {}",
                self.column, self.expected
            )
        } else {
            write!(
                f,
                "unexpected token '{}' at column {} of group spec: expected {}",
                self.token, self.column, self.expected
            )
        }
    }
}

impl std::error::Error for SpecError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Sym(char),
}

struct Lexer {
    toks: Vec<(usize, String, Tok)>,
    pos: usize,
    end: usize,
}

impl Lexer {
    fn new(src: &str) -> Result<Self, SpecError> {
        let chars: Vec<char> = src.chars().collect();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit()
                || (c == '-' && chars.get(i + 1).is_some_and(char::is_ascii_digit))
            {
                let start = i;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let value = text.parse().map_err(|_| SpecError {
                    column: start + 1,
                    token: text.clone(),
                    expected: "an integer that fits in 64 bits".into(),
                })?;
                toks.push((start + 1, text, Tok::Int(value)));
            } else if "/(),;:xX".contains(c) {
                toks.push((i + 1, c.to_string(), Tok::Sym(c.to_ascii_lowercase())));
                i += 1;
            } else {
                // Report the whole unknown run, e.g. `abc` rather than `a`.
                let start = i;
                while i < chars.len() && !chars[i].is_whitespace() && !"/(),;:".contains(chars[i]) {
                    i += 1;
                }
                return Err(SpecError {
                    column: start + 1,
                    token: chars[start..i].iter().collect(),
                    expected: "an integer or one of / ( ) , ; : x".into(),
                });
            }
        }
        Ok(Self {
            toks,
            pos: 0,
            end: chars.len() + 1,
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.2)
    }

    fn error(&self, expected: &str) -> SpecError {
        match self.toks.get(self.pos) {
            Some((column, text, _)) => SpecError {
                column: *column,
                token: text.clone(),
                expected: expected.into(),
            },
            None => SpecError {
                column: self.end,
                token: String::new(),
                expected: expected.into(),
            },
        }
    }

    fn int(&mut self, what: &str) -> Result<i64, SpecError> {
        match self.peek() {
            Some(&Tok::Int(v)) => {
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.error(what)),
        }
    }

    fn sym(&mut self, c: char) -> Result<(), SpecError> {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("'{c}'")))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        let hit = self.peek() == Some(&Tok::Sym(c));
        if hit {
            self.pos += 1;
        }
        hit
    }

    fn int_list(&mut self, sep: char) -> Result<Vec<i64>, SpecError> {
        let mut out = vec![self.int("a weight")?];
        while self.eat(sep) {
            out.push(self.int("a weight")?);
        }
        Ok(out)
    }

    fn finish(&self) -> Result<(), SpecError> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }
}

/// Parsed but not yet validated: orders and the k×n weight matrix.
pub fn parse_spec(src: &str) -> Result<(Vec<i64>, Vec<Vec<i64>>), SpecError> {
    let mut lx = Lexer::new(src)?;
    let first = lx.int("a group order")?;
    if lx.peek() == Some(&Tok::Sym('/')) {
        if first != 1 {
            lx.pos -= 1;
            return Err(lx.error("'1' in the cyclic form 1/r(...)"));
        }
        lx.sym('/')?;
        let r = lx.int("the group order r")?;
        lx.sym('(')?;
        let weights = lx.int_list(',')?;
        lx.sym(')')?;
        lx.finish()?;
        return Ok((vec![r], vec![weights]));
    }
    let mut orders = vec![first];
    while lx.eat('x') {
        orders.push(lx.int("a cyclic factor order")?);
    }
    lx.sym(':')?;
    let mut rows = vec![lx.int_list(',')?];
    while lx.eat(';') {
        rows.push(lx.int_list(',')?);
    }
    lx.finish()?;
    Ok((orders, rows))
}

/// Parses and validates a group spec. Returns the diagnostic text on failure.
pub fn parse_group(src: &str) -> Result<AbelianGroupData, String> {
    let (orders, weights) = parse_spec(src).map_err(|e| e.to_string())?;
    if weights.len() != orders.len() {
        return Err(format!(
            "group spec has {} cyclic factors but {} weight rows",
            orders.len(),
            weights.len()
        ));
    }
    AbelianGroupData::new(orders, weights).map_err(|e| format!("invalid group '{src}': {e}"))
}
