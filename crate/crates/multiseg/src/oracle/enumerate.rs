use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multisegment::Multisegment;
use crate::segment::Segment;

/// Limits of an exhaustive universe of multisegments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UniverseBounds {
    /// Smallest allowed start.
    pub lo: i64,
    /// Largest allowed end.
    pub hi: i64,
    pub max_segments: usize,
    /// Upper bound on the total relative length.
    pub max_total_length: i64,
}

impl Default for UniverseBounds {
    fn default() -> Self {
        UniverseBounds { lo: 0, hi: 4, max_segments: 4, max_total_length: 10 }
    }
}

impl UniverseBounds {
    pub fn new(lo: i64, hi: i64, max_segments: usize, max_total_length: i64) -> Result<Self> {
        let b = UniverseBounds { lo, hi, max_segments, max_total_length };
        b.validate()?;
        Ok(b)
    }

    pub fn validate(&self) -> Result<()> {
        if self.lo > self.hi {
            return Err(Error::domain(format!("empty support window: lo = {} > hi = {}", self.lo, self.hi)));
        }
        if self.max_segments == 0 || self.max_total_length <= 0 {
            return Err(Error::domain("max_segments and max_total_length must be positive"));
        }
        Ok(())
    }

    /// Every segment inside `[lo, hi]`, in canonical order.
    pub fn segments(&self) -> Vec<Segment> {
        (self.lo..=self.hi).flat_map(|a| (a..=self.hi).map(move |b| Segment::raw(a, b))).collect()
    }

    /// Every window `[a,b]` with `lo - 1 <= a <= b <= hi + 1`, in canonical order.
    pub fn windows(&self) -> Vec<Segment> {
        let (lo, hi) = (self.lo - 1, self.hi + 1);
        (lo..=hi).flat_map(|a| (a..=hi).map(move |b| Segment::raw(a, b))).collect()
    }
}

/// Every multisegment within `bounds`, each exactly once: by number of
/// segments, then lexicographically on the canonical segment sequence.
pub fn enumerate(bounds: &UniverseBounds) -> impl Iterator<Item = Multisegment> {
    universe(bounds).into_iter()
}

/// [`enumerate`] collected into a vector.
pub fn universe(bounds: &UniverseBounds) -> Vec<Multisegment> {
    let segs = bounds.segments();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    for size in 0..=bounds.max_segments {
        fill(&segs, 0, size, bounds.max_total_length, &mut cur, &mut out);
    }
    out
}

fn fill(segs: &[Segment], from: usize, left: usize, budget: i64, cur: &mut Vec<Segment>, out: &mut Vec<Multisegment>) {
    if left == 0 {
        out.push(Multisegment::from_segments(cur.iter().copied()));
        return;
    }
    for (i, s) in segs.iter().enumerate().skip(from) {
        if s.len() > budget {
            continue;
        }
        cur.push(*s);
        fill(segs, i, left - 1, budget - s.len(), cur, out);
        cur.pop();
    }
}
