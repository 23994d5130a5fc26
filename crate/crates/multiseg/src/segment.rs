use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A non-void integer interval `[a,b]` of exponents on a cuspidal line.
///
/// Ordering is lexicographic on `(a, b)`, which is the canonical order used by
/// [`Multisegment`](crate::Multisegment).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    a: i64,
    b: i64,
}

impl Segment {
    /// Builds `[a,b]`, rejecting the void case `b < a`.
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if b < a {
            return Err(Error::domain(format!("void segment [{a},{b}]")));
        }
        Ok(Segment { a, b })
    }

    /// Builds `[a,b]` if non-void.
    pub fn try_new(a: i64, b: i64) -> Option<Self> {
        (b >= a).then_some(Segment { a, b })
    }

    /// The singleton `[a]`.
    pub const fn point(a: i64) -> Self {
        Segment { a, b: a }
    }

    pub(crate) const fn raw(a: i64, b: i64) -> Self {
        Segment { a, b }
    }

    pub const fn start(self) -> i64 {
        self.a
    }

    pub const fn end(self) -> i64 {
        self.b
    }

    /// Relative length `b - a + 1`.
    #[allow(clippy::len_without_is_empty)]
    pub const fn len(self) -> i64 {
        self.b - self.a + 1
    }

    pub const fn contains_point(self, x: i64) -> bool {
        self.a <= x && x <= self.b
    }

    pub const fn contains(self, other: Segment) -> bool {
        self.a <= other.a && other.b <= self.b
    }

    /// Neither segment contains the other and their union is a segment.
    pub fn linked(self, other: Segment) -> bool {
        if self.contains(other) || other.contains(self) {
            return false;
        }
        let (lo, hi) = if self.a <= other.a { (self, other) } else { (other, self) };
        hi.a <= lo.b + 1
    }

    /// `self ≺ other`: `a < a'`, `b < b'` and `a' <= b + 1`.
    pub const fn precedes(self, other: Segment) -> bool {
        self.a < other.a && self.b < other.b && other.a <= self.b + 1
    }

    /// `Δ^-`, dropping the last point.
    pub fn shrink_right(self) -> Option<Segment> {
        Segment::try_new(self.a, self.b - 1)
    }

    /// `^-Δ`, dropping the first point.
    pub fn shrink_left(self) -> Option<Segment> {
        Segment::try_new(self.a + 1, self.b)
    }

    /// `Δ^+`, adding a point on the right.
    pub const fn grow_right(self) -> Segment {
        Segment { a: self.a, b: self.b + 1 }
    }

    /// `^+Δ`, adding a point on the left.
    pub const fn grow_left(self) -> Segment {
        Segment { a: self.a - 1, b: self.b }
    }

    /// `θ([a,b]) = [-b,-a]`.
    pub const fn theta(self) -> Segment {
        Segment { a: -self.b, b: -self.a }
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a == self.b {
            write!(f, "[{}]", self.a)
        } else {
            write!(f, "[{},{}]", self.a, self.b)
        }
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Segment {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.a, self.b).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Segment {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (a, b) = <(i64, i64)>::deserialize(d)?;
        Segment::new(a, b).map_err(serde::de::Error::custom)
    }
}
