//! Text form: `0` or `seg (+ seg)*` with `seg := [int] | [int,int]`, each
//! optionally followed by `@name` or `@name^`. Whitespace is ignored.

use crate::error::{Error, Result};
use crate::multisegment::{LineLabel, Multisegment};
use crate::segment::Segment;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some('-') | Some('+')) {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text = &self.src[start..self.pos];
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("expected integer")
        })
    }

    fn label(&mut self) -> Result<Option<LineLabel>> {
        if !self.eat('@') {
            return Ok(None);
        }
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !(c.is_alphanumeric() || c == '_') {
                break;
            }
            self.pos += c.len_utf8();
        }
        if self.pos == start {
            return self.err("expected line name after '@'");
        }
        let name = &self.src[start..self.pos];
        let dual = self.eat('^');
        Ok(Some(LineLabel::new(name, dual)))
    }

    fn segment(&mut self) -> Result<Segment> {
        self.skip_ws();
        let at = self.pos;
        self.expect('[')?;
        let a = self.int()?;
        let b = if self.eat(',') { self.int()? } else { a };
        self.expect(']')?;
        Segment::new(a, b).map_err(|_| Error::domain(format!("void segment [{a},{b}] at byte {at}")))
    }
}

/// Parses the text form of a multisegment.
pub fn parse_multisegment(text: &str) -> Result<Multisegment> {
    let mut cur = Cursor { src: text, pos: 0 };
    let mut line: Option<LineLabel> = None;
    let mut merge = |l: Option<LineLabel>| -> Result<()> {
        if let Some(l) = l {
            match &line {
                Some(prev) => Multisegment::check_same_line(prev, &l)?,
                None => line = Some(l),
            }
        }
        Ok(())
    };
    let mut segs = Vec::new();
    cur.skip_ws();
    if cur.peek() == Some('0') {
        cur.pos += 1;
        merge(cur.label()?)?;
    } else {
        loop {
            segs.push(cur.segment()?);
            merge(cur.label()?)?;
            if !cur.eat('+') {
                break;
            }
        }
    }
    cur.skip_ws();
    if cur.pos != text.len() {
        return cur.err("unexpected trailing input");
    }
    Ok(Multisegment::from_segments_on(line.unwrap_or_default(), segs))
}

/// Parses a single segment such as `[2,5]` or `[3]`.
pub fn parse_segment(text: &str) -> Result<Segment> {
    let mut cur = Cursor { src: text, pos: 0 };
    let s = cur.segment()?;
    cur.skip_ws();
    if cur.pos != text.len() {
        return cur.err("unexpected trailing input");
    }
    Ok(s)
}

/// Renders a multisegment in canonical text form.
pub fn format_multisegment(m: &Multisegment) -> String {
    m.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_forms() {
        let m = parse_multisegment("[0,4]+[1,5]").unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(parse_multisegment("[3]").unwrap().segments(), &[Segment::point(3)]);
        assert!(parse_multisegment("0").unwrap().is_empty());
        assert_eq!(parse_multisegment(" [ -2 , 1 ] + [3] ").unwrap().to_string(), "[-2,1]+[3]");
    }

    #[test]
    fn labels() {
        let m = parse_multisegment("[1,2]@sigma^+[3]").unwrap();
        assert_eq!(m.line(), &LineLabel::new("sigma", true));
        assert_eq!(m.to_string(), "[1,2]+[3]@sigma^");
        assert!(matches!(parse_multisegment("[1]@x+[2]@y"), Err(Error::Domain(_))));
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse_multisegment("[1,2]+"), Err(Error::Parse { offset: 6, message: "expected '['".into() }));
        assert!(matches!(parse_multisegment("[1,2"), Err(Error::Parse { offset: 4, .. })));
        assert!(matches!(parse_multisegment("[3,2]"), Err(Error::Domain(_))));
        assert!(matches!(parse_multisegment("[a]"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_multisegment("0 0"), Err(Error::Parse { offset: 2, .. })));
    }
}
