//! Derivatives and integrals in the Zelevinsky classification.

use crate::multisegment::{DerivOutcome, Multisegment};
use crate::mutation::{self, Mutation};
use crate::segment::Segment;

/// The longest segment of `m⟨end⟩`, optionally required to be preceded by `prev`.
fn longest_ending_at(m: &Multisegment, end: i64, prev: Option<Segment>) -> Option<Segment> {
    m.iter().find(|s| s.end() == end && prev.is_none_or(|p| p.precedes(*s)))
}

/// The shortest segment of `m⟨end⟩`, optionally required to precede `next`.
fn shortest_ending_at(m: &Multisegment, end: i64, next: Option<Segment>) -> Option<Segment> {
    m.iter().filter(|s| s.end() == end && next.is_none_or(|n| s.precedes(n))).last()
}

/// A chain of segments with consecutive ends `lo, lo+1, …, hi`, each
/// preceding the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborChain {
    pub lo: i64,
    pub hi: i64,
    pub segs: Vec<Segment>,
}

/// The upward removal chain of `m` from end `lo` to end `hi`, taking the
/// longest admissible segment at each end; `None` if it breaks.
pub fn removal_upward_chain(m: &Multisegment, lo: i64, hi: i64) -> Option<NeighborChain> {
    let mut segs = Vec::new();
    let mut prev = None;
    for e in lo..=hi {
        let s = longest_ending_at(m, e, prev)?;
        segs.push(s);
        prev = Some(s);
    }
    Some(NeighborChain { lo, hi, segs })
}

/// The downward chain of `m` from end `hi` down to end `lo`, taking the
/// shortest admissible segment at each end; `None` if it breaks. Segments are
/// listed by increasing end.
pub fn downward_chain(m: &Multisegment, lo: i64, hi: i64) -> Option<NeighborChain> {
    let mut segs = Vec::new();
    let mut next = None;
    for e in (lo..=hi).rev() {
        let s = shortest_ending_at(m, e, next)?;
        segs.push(s);
        next = Some(s);
    }
    segs.reverse();
    Some(NeighborChain { lo, hi, segs })
}

fn remove_all(m: &mut Multisegment, segs: &[Segment]) {
    for s in segs {
        m.remove(*s);
    }
}

/// Right St-derivative `D_[a,b]` in the Zelevinsky classification.
pub fn st_derivative_zel(m: &Multisegment, d: Segment) -> DerivOutcome {
    let (a, b) = (d.start(), d.end());
    let chain_lo = if mutation::active(Mutation::ZelChainStartsAtA) { a } else { a - 1 };
    let mut rest = m.clone();
    while let Some(chain) = removal_upward_chain(&rest, chain_lo, b) {
        remove_all(&mut rest, &chain.segs);
    }
    let Some(chosen) = downward_chain(&rest, a, b) else {
        return DerivOutcome::Infinity;
    };
    let mut out = m.clone();
    for s in &chosen.segs {
        out.remove(*s);
        out.insert_opt(s.shrink_right());
    }
    DerivOutcome::Finite(out)
}

/// Right St-integral `I_[a,b]` in the Zelevinsky classification.
pub fn st_integral_zel(m: &Multisegment, d: Segment) -> Multisegment {
    let (a, b) = (d.start(), d.end());
    let mut rest = m.clone();
    while let Some(chain) = downward_chain(&rest, a - 1, b) {
        remove_all(&mut rest, &chain.segs);
    }
    let drop_void = mutation::active(Mutation::ZelIntegralDropsVoidSingleton);
    let mut out = m.clone();
    let mut prev: Option<Segment> = None;
    for e in (a - 1)..b {
        let pick = if e == a - 1 || prev.is_some() { longest_ending_at(&rest, e, prev) } else { None };
        match pick {
            Some(s) => {
                out.remove(s);
                out.insert(s.grow_right());
            }
            None if !drop_void => out.insert(Segment::point(e + 1)),
            None => {}
        }
        prev = pick;
    }
    out
}

/// Left derivative, `Θ ∘ D_{θ(d)} ∘ Θ`.
pub fn derivative_left_zel(m: &Multisegment, d: Segment) -> DerivOutcome {
    st_derivative_zel(&m.theta(), d.theta()).map(|n| n.theta())
}

/// Left integral, `Θ ∘ I_{θ(d)} ∘ Θ`.
pub fn integral_left_zel(m: &Multisegment, d: Segment) -> Multisegment {
    st_integral_zel(&m.theta(), d.theta()).theta()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Multisegment {
        s.parse().unwrap()
    }

    fn seg(a: i64, b: i64) -> Segment {
        Segment::new(a, b).unwrap()
    }

    #[test]
    fn derivative_examples() {
        let x = m("[0,4]+[2,4]+[2,5]+[2,5]+[3,5]+[4,5]");
        assert_eq!(
            st_derivative_zel(&x, seg(5, 5)),
            DerivOutcome::Finite(x.without(seg(4, 5)).unwrap().with(seg(4, 4)))
        );
        let y = m("[0,4]+[3,4]+[2,5]+[3,5]+[4,6]");
        assert_eq!(st_derivative_zel(&y, seg(4, 6)), DerivOutcome::Finite(m("[0,3]+[3,4]+[2,5]+[3,4]+[4,5]")));
        let z = m("[0,4]+[2,5]+[3,5]+[4,6]");
        assert_eq!(st_derivative_zel(&z, seg(5, 6)), DerivOutcome::Infinity);
    }

    #[test]
    fn integral_examples() {
        let x = m("[0,2]+[0,1]+[0,1]+[1,2]+[1]+[2,3]");
        let expect = x.without(seg(0, 1)).unwrap().with(seg(0, 2)).with(seg(3, 3));
        assert_eq!(st_integral_zel(&x, seg(2, 3)), expect);
        assert_eq!(st_integral_zel(&m("0"), seg(1, 3)), m("[1]+[2]+[3]"));
        assert_eq!(st_integral_zel(&m("[1]"), seg(2, 2)), m("[1,2]"));
    }

    #[test]
    fn chains() {
        let x = m("[1,2]+[2,3]+[0,3]");
        let up = removal_upward_chain(&x, 2, 3).unwrap();
        assert_eq!(up.segs, vec![seg(1, 2), seg(2, 3)]);
        let down = downward_chain(&x, 2, 3).unwrap();
        assert_eq!(down.segs, vec![seg(1, 2), seg(2, 3)]);
        assert!(removal_upward_chain(&x, 3, 4).is_none());
    }
}
