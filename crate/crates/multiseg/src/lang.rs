//! Derivatives and integrals in the Langlands classification.

use crate::error::{Error, Result};
use crate::multisegment::{DerivOutcome, Multisegment};
use crate::mutation::{self, Mutation};
use crate::segment::Segment;

fn longest_starting_at(m: &Multisegment, a: i64) -> Option<Segment> {
    m.iter().filter(|s| s.start() == a).last()
}

fn shortest_starting_at(m: &Multisegment, a: i64) -> Option<Segment> {
    m.iter().find(|s| s.start() == a)
}

/// One step of the tds process at `c`: removes the longest segment of `m[c+1]`
/// together with the longest segment of `m[c]` preceding it.
pub fn tds_step(m: &Multisegment, c: i64) -> Option<(Multisegment, Segment, Segment)> {
    let upper = if mutation::active(Mutation::TdsPicksShortest) {
        shortest_starting_at(m, c + 1)?
    } else {
        longest_starting_at(m, c + 1)?
    };
    let lower = m.iter().filter(|s| s.start() == c && s.precedes(upper)).last()?;
    let mut rest = m.clone();
    rest.remove(lower);
    rest.remove(upper);
    Some((rest, lower, upper))
}

fn tds_exhaust(m: &Multisegment, c: i64) -> Multisegment {
    let mut cur = m.clone();
    while let Some((next, _, _)) = tds_step(&cur, c) {
        cur = next;
    }
    cur
}

/// Right derivative at the single point `a`.
pub fn rho_derivative_lang(m: &Multisegment, a: i64) -> DerivOutcome {
    let rest = tds_exhaust(m, a);
    match shortest_starting_at(&rest, a) {
        Some(star) => {
            let mut out = m.clone();
            out.remove(star);
            out.insert_opt(star.shrink_left());
            DerivOutcome::Finite(out)
        }
        None => DerivOutcome::Infinity,
    }
}

/// `ε` at a point, read off the tds fixed point as `|m_k[a]|`.
pub fn epsilon_r_point(m: &Multisegment, a: i64) -> usize {
    tds_exhaust(m, a).slice_start(a).len()
}

/// An upward sequence `Δ_1 ≺ … ≺ Δ_r` of maximally linked segments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpwardSequence {
    pub segs: Vec<Segment>,
}

impl UpwardSequence {
    /// Removable-free section of entry `j`.
    pub fn rf(&self, j: usize) -> Option<Segment> {
        let cur = self.segs[j];
        match self.segs.get(j + 1) {
            None => Some(cur),
            Some(next) => {
                let gap = if mutation::active(Mutation::RfUpperBoundOffByOne) { 1 } else { 2 };
                Segment::try_new(cur.start(), next.start() - gap)
            }
        }
    }

    /// Non-free section of entry `j`, the complement of [`rf`](Self::rf).
    pub fn nf(&self, j: usize) -> Option<Segment> {
        let cur = self.segs[j];
        self.segs.get(j + 1).and_then(|next| Segment::try_new(next.start() - 1, cur.end()))
    }
}

/// The upward sequence of `n` with the smallest starting point.
pub fn upward_sequence(n: &Multisegment) -> Result<UpwardSequence> {
    let first_start = n.min_start().ok_or_else(|| Error::domain("upward sequence of empty multisegment"))?;
    let mut segs = vec![longest_starting_at(n, first_start).expect("start present")];
    loop {
        let prev = *segs.last().expect("non-empty");
        let next_start = n.iter().filter(|s| prev.precedes(*s)).map(|s| s.start()).min();
        match next_start {
            Some(a) => segs.push(longest_starting_at(n, a).expect("start present")),
            None => break,
        }
    }
    Ok(UpwardSequence { segs })
}

/// Peels upward sequences until nothing is left.
pub fn upward_sequences(n: &Multisegment) -> Vec<UpwardSequence> {
    let mut rows = Vec::new();
    let mut cur = n.clone();
    while !cur.is_empty() {
        let row = upward_sequence(&cur).expect("non-empty");
        for s in &row.segs {
            cur.remove(*s);
        }
        rows.push(row);
    }
    rows
}

/// Right St-derivative `D_[a,b]` in the Langlands classification.
pub fn st_derivative_lang(m: &Multisegment, d: Segment) -> DerivOutcome {
    if d.len() == 1 {
        return rho_derivative_lang(m, d.start());
    }
    st_derivative_lang_by_sequences(m, d)
}

/// The sequence-based St-derivative without the single-point shortcut.
pub fn st_derivative_lang_by_sequences(m: &Multisegment, d: Segment) -> DerivOutcome {
    let (a, b) = (d.start(), d.end());
    let rows = upward_sequences(&m.window(a, b));
    let mut picked: Vec<Segment> = Vec::new();
    let mut target = b;
    let mut row_bound = rows.len();
    'select: loop {
        for i in (0..row_bound).rev() {
            let row = &rows[i];
            let hit = |j: usize| row.segs[j].start() <= target && row.rf(j).is_some_and(|rf| rf.end() >= target);
            for (j, seg) in row.segs.iter().enumerate() {
                if hit(j) {
                    debug_assert!((j + 1..row.segs.len()).all(|k| !hit(k)), "two entries of one row contain {target}");
                    picked.push(*seg);
                    target = seg.start() - 1;
                    row_bound = i + 1;
                    continue 'select;
                }
            }
        }
        break;
    }
    let Some(last) = picked.last() else {
        return DerivOutcome::Infinity;
    };
    if last.start() != a && !mutation::active(Mutation::SkipSelectionReachesStart) {
        return DerivOutcome::Infinity;
    }
    let mut out = m.clone();
    let mut left = b + 1;
    for seg in &picked {
        out.remove(*seg);
        out.insert_opt(Segment::try_new(left, seg.end()));
        left = seg.start();
    }
    DerivOutcome::Finite(out)
}

/// One step of the tus process at `c`: removes the shortest segment of `n[c]`
/// together with the shortest segment of `n[c+1]` it precedes.
pub fn tus_step(n: &Multisegment, c: i64) -> Option<(Multisegment, Segment, Segment)> {
    let lower = shortest_starting_at(n, c)?;
    let upper = n.iter().find(|s| s.start() == c + 1 && lower.precedes(*s))?;
    let mut rest = n.clone();
    rest.remove(lower);
    rest.remove(upper);
    Some((rest, lower, upper))
}

/// Right integral at the single point `c`.
pub fn rho_integral_lang(n: &Multisegment, c: i64) -> Multisegment {
    let mut cur = n.clone();
    while let Some((next, _, _)) = tus_step(&cur, c) {
        cur = next;
    }
    let mut out = n.clone();
    match longest_starting_at(&cur, c + 1) {
        Some(star) => {
            out.remove(star);
            out.insert(star.grow_left());
        }
        None => out.insert(Segment::point(c)),
    }
    out
}

/// A downward sequence `Δ_1 ≻ Δ_2 ≻ …` of minimally linked segments, listed
/// from the largest start down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DownwardSequence {
    pub segs: Vec<Segment>,
}

impl DownwardSequence {
    /// Addable-free points of entry `q` relative to the window start `a`, as
    /// an inclusive range (empty when `lo > hi`).
    pub fn af(&self, q: usize, a: i64) -> (i64, i64) {
        let cur = self.segs[q];
        match self.segs.get(q + 1) {
            Some(next) => (next.start() + 1, cur.start() - 1),
            None => (a, cur.start() - 1),
        }
    }
}

/// The downward sequence of `n` with the largest starting point.
pub fn downward_sequence(n: &Multisegment) -> Result<DownwardSequence> {
    let top =
        n.iter().map(|s| s.start()).max().ok_or_else(|| Error::domain("downward sequence of empty multisegment"))?;
    let mut segs = vec![shortest_starting_at(n, top).expect("start present")];
    loop {
        let prev = *segs.last().expect("non-empty");
        let next_start = n.iter().filter(|s| s.precedes(prev)).map(|s| s.start()).max();
        match next_start {
            Some(a) => {
                let pick = n.iter().find(|s| s.start() == a && s.precedes(prev)).expect("start present");
                segs.push(pick);
            }
            None => break,
        }
    }
    Ok(DownwardSequence { segs })
}

/// Peels downward sequences until nothing is left.
pub fn downward_sequences(n: &Multisegment) -> Vec<DownwardSequence> {
    let mut rows = Vec::new();
    let mut cur = n.clone();
    while !cur.is_empty() {
        let row = downward_sequence(&cur).expect("non-empty");
        for s in &row.segs {
            cur.remove(*s);
        }
        rows.push(row);
    }
    rows
}

/// Right St-integral `I_[a,b]` in the Langlands classification.
pub fn st_integral_lang(m: &Multisegment, d: Segment) -> Multisegment {
    if d.len() == 1 {
        return rho_integral_lang(m, d.start());
    }
    st_integral_lang_by_sequences(m, d)
}

/// The sequence-based St-integral without the single-point shortcut.
pub fn st_integral_lang_by_sequences(m: &Multisegment, d: Segment) -> Multisegment {
    let (a, b) = (d.start(), d.end());
    let rows = downward_sequences(&m.window(a, b));
    let mut picked: Vec<Segment> = Vec::new();
    let mut point = a;
    let mut row_bound = rows.len();
    'select: loop {
        for p in (0..row_bound).rev() {
            let row = &rows[p];
            for q in 0..row.segs.len() {
                let (lo, hi) = row.af(q, a);
                if lo <= point && point <= hi {
                    picked.push(row.segs[q]);
                    point = row.segs[q].start();
                    row_bound = p;
                    continue 'select;
                }
            }
        }
        break;
    }
    let mut out = m.clone();
    let mut left = a;
    for seg in &picked {
        out.remove(*seg);
        out.insert(Segment::raw(left, seg.end()));
        left = seg.start();
    }
    out.insert_opt(Segment::try_new(left, b));
    out
}

/// Left derivative, `Θ ∘ D_{θ(d)} ∘ Θ`.
pub fn derivative_left_lang(m: &Multisegment, d: Segment) -> DerivOutcome {
    st_derivative_lang(&m.theta(), d.theta()).map(|n| n.theta())
}

/// Left integral, `Θ ∘ I_{θ(d)} ∘ Θ`.
pub fn integral_left_lang(m: &Multisegment, d: Segment) -> Multisegment {
    st_integral_lang(&m.theta(), d.theta()).theta()
}
