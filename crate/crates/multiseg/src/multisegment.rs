use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::segment::Segment;

/// Opaque cuspidal-line identifier with a flag for the contragredient line.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct LineLabel {
    pub name: Arc<str>,
    pub dual: bool,
}

impl LineLabel {
    pub const DEFAULT_NAME: &'static str = "rho";

    pub fn new(name: &str, dual: bool) -> Self {
        LineLabel { name: Arc::from(name), dual }
    }

    /// The same line with the dual flag flipped.
    pub fn toggled(&self) -> Self {
        LineLabel { name: self.name.clone(), dual: !self.dual }
    }

    pub fn is_default(&self) -> bool {
        !self.dual && &*self.name == Self::DEFAULT_NAME
    }
}

impl Default for LineLabel {
    fn default() -> Self {
        LineLabel::new(Self::DEFAULT_NAME, false)
    }
}

impl fmt::Display for LineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.name, if self.dual { "^" } else { "" })
    }
}

/// A finite multiset of non-void segments on one line, kept in canonical
/// order (ascending by start, then end).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(from = "RawMultisegment")]
pub struct Multisegment {
    line: LineLabel,
    segs: Vec<Segment>,
}

#[derive(Deserialize)]
struct RawMultisegment {
    #[serde(default)]
    line: LineLabel,
    segs: Vec<Segment>,
}

impl From<RawMultisegment> for Multisegment {
    fn from(raw: RawMultisegment) -> Self {
        Multisegment::from_segments_on(raw.line, raw.segs)
    }
}

impl Multisegment {
    /// The empty multisegment on the default line.
    pub fn new() -> Self {
        Self::default()
    }

    pub fn empty_on(line: LineLabel) -> Self {
        Multisegment { line, segs: Vec::new() }
    }

    pub fn from_segments<I: IntoIterator<Item = Segment>>(segs: I) -> Self {
        Self::from_segments_on(LineLabel::default(), segs)
    }

    pub fn from_segments_on<I: IntoIterator<Item = Segment>>(line: LineLabel, segs: I) -> Self {
        let mut segs: Vec<Segment> = segs.into_iter().collect();
        segs.sort_unstable();
        Multisegment { line, segs }
    }

    /// Builds from `(a,b)` pairs, rejecting void pairs.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        let segs = pairs.iter().map(|&(a, b)| Segment::new(a, b)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_segments(segs))
    }

    /// Restores canonical order after deserialization or manual edits.
    pub fn normalized(mut self) -> Self {
        self.segs.sort_unstable();
        self
    }

    pub(crate) fn from_sorted(line: LineLabel, segs: Vec<Segment>) -> Self {
        debug_assert!(segs.windows(2).all(|w| w[0] <= w[1]));
        Multisegment { line, segs }
    }

    pub(crate) fn with_segments(&self, segs: Vec<Segment>) -> Self {
        Self::from_segments_on(self.line.clone(), segs)
    }

    pub fn line(&self) -> &LineLabel {
        &self.line
    }

    pub fn on_line(mut self, line: LineLabel) -> Self {
        self.line = line;
        self
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segs
    }

    pub fn iter(&self) -> impl Iterator<Item = Segment> + '_ {
        self.segs.iter().copied()
    }

    /// Number of segments `|m|`.
    pub fn len(&self) -> usize {
        self.segs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segs.is_empty()
    }

    /// Total relative length.
    pub fn rel_len(&self) -> i64 {
        self.segs.iter().map(|s| s.len()).sum()
    }

    pub fn min_start(&self) -> Option<i64> {
        self.segs.first().map(|s| s.start())
    }

    pub fn max_end(&self) -> Option<i64> {
        self.segs.iter().map(|s| s.end()).max()
    }

    pub fn count(&self, seg: Segment) -> usize {
        let lo = self.segs.partition_point(|s| *s < seg);
        let hi = self.segs.partition_point(|s| *s <= seg);
        hi - lo
    }

    pub fn contains(&self, seg: Segment) -> bool {
        self.segs.binary_search(&seg).is_ok()
    }

    /// Adds one copy of `seg`.
    pub fn insert(&mut self, seg: Segment) {
        let at = self.segs.partition_point(|s| *s <= seg);
        self.segs.insert(at, seg);
    }

    /// Adds `seg` if present; void values are ignored.
    pub fn insert_opt(&mut self, seg: Option<Segment>) {
        if let Some(s) = seg {
            self.insert(s);
        }
    }

    /// Removes one copy of `seg`; returns whether it was present.
    pub fn remove(&mut self, seg: Segment) -> bool {
        match self.segs.binary_search(&seg) {
            Ok(i) => {
                self.segs.remove(i);
                true
            }
            Err(_) => false,
        }
    }

    pub fn with(&self, seg: Segment) -> Self {
        let mut m = self.clone();
        m.insert(seg);
        m
    }

    pub fn without(&self, seg: Segment) -> Option<Self> {
        let mut m = self.clone();
        m.remove(seg).then_some(m)
    }

    /// Multiset sum; the line of `self` is kept.
    pub fn sum(&self, other: &Multisegment) -> Self {
        let mut segs = self.segs.clone();
        segs.extend_from_slice(&other.segs);
        self.with_segments(segs)
    }

    /// Multiset difference, or `None` if `other` is not a sub-multiset.
    pub fn difference(&self, other: &Multisegment) -> Option<Self> {
        let mut m = self.clone();
        for s in other.iter() {
            if !m.remove(s) {
                return None;
            }
        }
        Some(m)
    }

    pub fn is_submultiset_of(&self, other: &Multisegment) -> bool {
        other.difference(self).is_some()
    }

    /// `m[i]`: segments starting at `i`.
    pub fn slice_start(&self, i: i64) -> Self {
        self.filter(|s| s.start() == i)
    }

    /// `m⟨i⟩`: segments ending at `i`.
    pub fn slice_end(&self, i: i64) -> Self {
        self.filter(|s| s.end() == i)
    }

    /// `m_{[a,b]}`: segments `[a',b']` with `a <= a' <= b+1 <= b'+1`.
    pub fn window(&self, a: i64, b: i64) -> Self {
        self.filter(|s| a <= s.start() && s.start() <= b + 1 && b <= s.end())
    }

    /// `(m^{<=x}, m^{>x})`, split by end point.
    pub fn split_at_end(&self, x: i64) -> (Self, Self) {
        (self.filter(|s| s.end() <= x), self.filter(|s| s.end() > x))
    }

    pub fn filter(&self, mut keep: impl FnMut(Segment) -> bool) -> Self {
        Self::from_sorted(self.line.clone(), self.segs.iter().copied().filter(|s| keep(*s)).collect())
    }

    /// `m^-`: every segment shrunk on the right, voids dropped.
    pub fn shrink_right_all(&self) -> Self {
        self.with_segments(self.segs.iter().filter_map(|s| s.shrink_right()).collect())
    }

    /// `m^+`: every segment grown on the right.
    pub fn grow_right_all(&self) -> Self {
        self.with_segments(self.segs.iter().map(|s| s.grow_right()).collect())
    }

    /// `Θ`: `[a,b] ↦ [-b,-a]` on the dual line.
    pub fn theta(&self) -> Self {
        Self::from_segments_on(self.line.toggled(), self.segs.iter().map(|s| s.theta()))
    }

    /// All distinct sub-multisets, each listed once.
    pub fn sub_multisets(&self) -> Vec<Multisegment> {
        let mut groups: Vec<(Segment, usize)> = Vec::new();
        for s in self.iter() {
            match groups.last_mut() {
                Some((g, n)) if *g == s => *n += 1,
                _ => groups.push((s, 1)),
            }
        }
        let mut out = vec![Vec::new()];
        for (s, n) in groups {
            let mut next = Vec::with_capacity(out.len() * (n + 1));
            for base in &out {
                for k in 0..=n {
                    let mut v: Vec<Segment> = base.clone();
                    v.extend(std::iter::repeat_n(s, k));
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter().map(|v| Self::from_sorted(self.line.clone(), v)).collect()
    }

    /// Rejects mixing lines; used by parsers that see per-segment labels.
    pub(crate) fn check_same_line(a: &LineLabel, b: &LineLabel) -> Result<()> {
        if a != b {
            return Err(Error::domain(format!("segments on different lines: {a} and {b}")));
        }
        Ok(())
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.segs.is_empty() {
            write!(f, "0")?;
        } else {
            for (i, s) in self.segs.iter().enumerate() {
                if i > 0 {
                    write!(f, "+")?;
                }
                write!(f, "{s}")?;
            }
        }
        if !self.line.is_default() {
            write!(f, "@{}", self.line)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Multisegment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::parse::parse_multisegment(s)
    }
}

/// Result of a derivative: a multisegment, or `Infinity` when the derivative vanishes.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum DerivOutcome {
    Finite(Multisegment),
    Infinity,
}

impl DerivOutcome {
    pub fn is_infinity(&self) -> bool {
        matches!(self, DerivOutcome::Infinity)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_infinity()
    }

    pub fn finite(self) -> Option<Multisegment> {
        match self {
            DerivOutcome::Finite(m) => Some(m),
            DerivOutcome::Infinity => None,
        }
    }

    pub fn as_finite(&self) -> Option<&Multisegment> {
        match self {
            DerivOutcome::Finite(m) => Some(m),
            DerivOutcome::Infinity => None,
        }
    }

    pub fn map(self, f: impl FnOnce(Multisegment) -> Multisegment) -> Self {
        match self {
            DerivOutcome::Finite(m) => DerivOutcome::Finite(f(m)),
            DerivOutcome::Infinity => DerivOutcome::Infinity,
        }
    }

    pub fn and_then(self, f: impl FnOnce(Multisegment) -> DerivOutcome) -> Self {
        match self {
            DerivOutcome::Finite(m) => f(m),
            DerivOutcome::Infinity => DerivOutcome::Infinity,
        }
    }
}

impl From<Option<Multisegment>> for DerivOutcome {
    fn from(m: Option<Multisegment>) -> Self {
        m.map_or(DerivOutcome::Infinity, DerivOutcome::Finite)
    }
}

impl fmt::Display for DerivOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DerivOutcome::Finite(m) => fmt::Display::fmt(m, f),
            DerivOutcome::Infinity => write!(f, "infinity"),
        }
    }
}
