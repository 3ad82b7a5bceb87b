//! Partition literals: `7,1,1,1`, `[7,1,1,1]` and `7,1^3`.

use std::fmt;

use specht_core::Partition;

/// A parse failure at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiteralError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for LiteralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at byte {}", self.message, self.offset)
    }
}

impl std::error::Error for LiteralError {}

/// A parsed literal together with the text it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionLiteral {
    pub source: String,
    pub partition: Partition,
}

impl PartitionLiteral {
    pub fn parse(s: &str) -> Result<Self, LiteralError> {
        Ok(PartitionLiteral {
            source: s.to_string(),
            partition: parse_partition_literal(s)?,
        })
    }

    pub fn canonical(&self) -> String {
        render(&self.partition)
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, message: impl Into<String>) -> LiteralError {
        LiteralError {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn number(&mut self, what: &str) -> Result<usize, LiteralError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(format!("expected {what}")));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        let value: usize = text.parse().map_err(|_| LiteralError {
            offset: start,
            message: format!("{what} {text} is too large"),
        })?;
        if value == 0 {
            return Err(LiteralError {
                offset: start,
                message: format!("{what} must be positive"),
            });
        }
        Ok(value)
    }
}

/// Parses a partition literal. Empty input (or `[]`) is the empty partition.
pub fn parse_partition_literal(s: &str) -> Result<Partition, LiteralError> {
    let mut c = Cursor { s: s.as_bytes(), pos: 0 };
    c.skip_ws();
    let bracketed = c.eat(b'[');
    let mut parts: Vec<usize> = Vec::new();
    c.skip_ws();
    let closes = |c: &Cursor<'_>| c.peek().is_none() || (bracketed && c.peek() == Some(b']'));
    if !closes(&c) {
        loop {
            c.skip_ws();
            let start = c.pos;
            let value = c.number("part")?;
            c.skip_ws();
            let mult = if c.eat(b'^') {
                c.skip_ws();
                c.number("multiplicity")?
            } else {
                1
            };
            if parts.last().is_some_and(|&prev| prev < value) {
                return Err(LiteralError {
                    offset: start,
                    message: format!("parts must be non-increasing, {value} follows {}", parts[parts.len() - 1]),
                });
            }
            parts.extend(std::iter::repeat_n(value, mult));
            c.skip_ws();
            if c.eat(b',') {
                continue;
            }
            if closes(&c) {
                break;
            }
            return Err(c.error(format!("unexpected character {:?}", c.peek().map(char::from).unwrap_or(' '))));
        }
    }
    if bracketed && !c.eat(b']') {
        return Err(c.error("expected ']'"));
    }
    c.skip_ws();
    if c.peek().is_some() {
        return Err(c.error("trailing input"));
    }
    Partition::new(parts).map_err(|e| LiteralError {
        offset: 0,
        message: e.to_string(),
    })
}

/// Canonical exponent form, e.g. `7,1^3`; the empty partition renders as `""`.
pub fn render(mu: &Partition) -> String {
    mu.exponent_form()
        .into_iter()
        .map(|(v, m)| if m == 1 { v.to_string() } else { format!("{v}^{m}") })
        .collect::<Vec<_>>()
        .join(",")
}
