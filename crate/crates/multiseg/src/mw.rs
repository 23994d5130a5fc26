//! The Mœglin–Waldspurger algorithm, the Zelevinsky involution and
//! linked-by-mapping matchings.

use crate::error::{Error, Result};
use crate::multisegment::Multisegment;
use crate::segment::Segment;

/// One step of the MW algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MwStep {
    /// The segment `Δ(m) = [b-k, b]` split off by this step.
    pub first_segment: Segment,
    /// The participating segments `Δ_0, Δ_1, …, Δ_k`, by decreasing end.
    pub participating: Vec<Segment>,
    /// `D^MW(m)`: every participant shrunk on the right.
    pub reduced: Multisegment,
}

/// Runs one MW step on a non-empty multisegment.
pub fn mw_step(m: &Multisegment) -> Result<MwStep> {
    let top = m.max_end().ok_or_else(|| Error::domain("MW step on the empty multisegment"))?;
    let mut chain: Vec<Segment> = Vec::new();
    let mut end = top;
    loop {
        let next = chain.last().copied();
        let pick = m.iter().filter(|s| s.end() == end && next.is_none_or(|n| s.precedes(n))).last();
        match pick {
            Some(s) => chain.push(s),
            None => break,
        }
        end -= 1;
    }
    let k = chain.len() as i64 - 1;
    let mut reduced = m.clone();
    for s in &chain {
        reduced.remove(*s);
        reduced.insert_opt(s.shrink_right());
    }
    Ok(MwStep { first_segment: Segment::raw(top - k, top), participating: chain, reduced })
}

/// `(D^MW)^r(m)`, or `None` if the multisegment empties before `r` steps.
pub fn mw_iterate(m: &Multisegment, r: usize) -> Option<Multisegment> {
    let mut cur = m.clone();
    for _ in 0..r {
        cur = mw_step(&cur).ok()?.reduced;
    }
    Some(cur)
}

/// The Zelevinsky involution `m ↦ m^#`.
pub fn involution(m: &Multisegment) -> Multisegment {
    let mut cur = m.clone();
    let mut out = Multisegment::empty_on(m.line().clone());
    while !cur.is_empty() {
        let step = mw_step(&cur).expect("non-empty");
        out.insert(step.first_segment);
        cur = step.reduced;
    }
    out
}

/// `ε^MW_Δ(m)`: the multiplicity of `Δ` in `m^#`.
pub fn epsilon_mw(m: &Multisegment, d: Segment) -> usize {
    involution(m).count(d)
}

/// Whether there is an injection `f: n1 → n2` with `Δ ≺ f(Δ)` for all `Δ`.
///
/// When each side has a common end the sorted greedy pass is exact; otherwise a
/// maximum bipartite matching is computed.
pub fn linked_by_mapping(n1: &Multisegment, n2: &Multisegment) -> bool {
    if n1.len() > n2.len() {
        return false;
    }
    let single_end = |n: &Multisegment| n.iter().all(|s| Some(s.end()) == n.max_end());
    if single_end(n1) && single_end(n2) {
        greedy_linked(n1, n2)
    } else {
        matching_size(n1.segments(), n2.segments()) == n1.len()
    }
}

fn greedy_linked(n1: &Multisegment, n2: &Multisegment) -> bool {
    let mut used = vec![false; n2.len()];
    for s in n1.iter() {
        let slot = n2.segments().iter().enumerate().find(|(i, t)| !used[*i] && s.precedes(**t));
        match slot {
            Some((i, _)) => used[i] = true,
            None => return false,
        }
    }
    true
}

fn matching_size(left: &[Segment], right: &[Segment]) -> usize {
    fn augment(u: usize, left: &[Segment], right: &[Segment], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for v in 0..right.len() {
            if !seen[v] && left[u].precedes(right[v]) {
                seen[v] = true;
                if owner[v].is_none_or(|w| augment(w, left, right, seen, owner)) {
                    owner[v] = Some(u);
                    return true;
                }
            }
        }
        false
    }
    let mut owner = vec![None; right.len()];
    (0..left.len())
        .filter(|&u| {
            let mut seen = vec![false; right.len()];
            augment(u, left, right, &mut seen, &mut owner)
        })
        .count()
}

/// Whether `n1 ≤ m⟨k-1⟩` and `n2 ≤ m⟨k⟩` are minimally linked in `m`.
///
/// `n1` must be linked to `n2` by a mapping, have the largest size among
/// sub-multisets of `m⟨k-1⟩` linked to `n2`, and no other such sub-multiset of
/// the same size may have pointwise larger or equal starts (one strictly).
pub fn minimally_linked(n1: &Multisegment, n2: &Multisegment, m: &Multisegment, k: i64) -> Result<bool> {
    let lower = m.slice_end(k - 1);
    if !n1.is_submultiset_of(&lower) || !n2.is_submultiset_of(&m.slice_end(k)) {
        return Err(Error::domain("minimal linkedness needs n1 in m<k-1> and n2 in m<k>"));
    }
    if !linked_by_mapping(n1, n2) {
        return Ok(false);
    }
    if matching_size(lower.segments(), n2.segments()) > n1.len() {
        return Ok(false);
    }
    let beaten = lower
        .sub_multisets()
        .into_iter()
        .any(|c| c.len() == n1.len() && c != *n1 && dominates(&c, n1) && linked_by_mapping(&c, n2));
    Ok(!beaten)
}

/// `lhs < rhs` in the minimality order: pointwise larger or equal starts.
fn dominates(lhs: &Multisegment, rhs: &Multisegment) -> bool {
    lhs.iter().zip(rhs.iter()).all(|(x, y)| y.start() <= x.start())
}

/// Every `n1 ≤ m⟨k-1⟩` minimally linked to `n2`, found by exhaustive search.
pub fn minimal_partners(n2: &Multisegment, m: &Multisegment, k: i64) -> Vec<Multisegment> {
    m.slice_end(k - 1).sub_multisets().into_iter().filter(|c| minimally_linked(c, n2, m, k).unwrap_or(false)).collect()
}
