//! Exotic duality `𝔻_r` exchanging right integrals with left derivatives.

use crate::error::{Error, Result};
use crate::multisegment::Multisegment;
use crate::segment::Segment;

/// Whether `m = m_{[a,b]}`.
pub fn good_range(m: &Multisegment, d: Segment) -> bool {
    m.window(d.start(), d.end()).len() == m.len()
}

/// A value of `r` large enough for every dual segment to be non-void and
/// disjoint from the exponent range of `m` and `d`.
pub fn r0(m: &Multisegment, d: Segment) -> i64 {
    let hi = m.max_end().map_or(d.end(), |e| e.max(d.end()));
    let lo = m.min_start().map_or(d.start(), |s| s.min(d.start()));
    hi - lo + d.len() + 3
}

/// `𝔻_r(m) = {[-r+b'+1, a'-1] : [a',b'] ∈ m}` on the same line.
pub fn dual_dr(m: &Multisegment, r: i64) -> Result<Multisegment> {
    if r <= 0 {
        return Err(Error::domain("r must be positive"));
    }
    let mut out = Multisegment::empty_on(m.line().clone());
    for s in m.iter() {
        let image = Segment::try_new(-r + s.end() + 1, s.start() - 1)
            .ok_or_else(|| Error::domain(format!("r = {r} is too small: the image of {s} is void")))?;
        out.insert(image);
    }
    Ok(out)
}

/// `𝔻_r^{[a,b]}(m) = 𝔻_r(m) + [b-r+1, b]`.
pub fn dual_dr_seg(m: &Multisegment, r: i64, d: Segment) -> Result<Multisegment> {
    let extra = Segment::try_new(d.end() - r + 1, d.end())
        .ok_or_else(|| Error::domain(format!("r = {r} is too small for the window {d}")))?;
    Ok(dual_dr(m, r)?.with(extra))
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
    fn examples() {
        assert_eq!(dual_dr(&m("[2,4]+[1,7]"), 10).unwrap(), m("[-5,1]+[-2,0]"));
        assert_eq!(dual_dr_seg(&m("[2,4]+[1,7]"), 10, seg(0, 1)).unwrap(), m("[-5,1]+[-2,0]+[-8,1]"));
        assert_eq!(dual_dr(&m("[2,6]+[1,5]"), 15).unwrap(), m("[-8,1]+[-9,0]"));
        assert_eq!(dual_dr_seg(&m("[2,6]+[1,5]"), 15, seg(1, 4)).unwrap(), m("[-8,1]+[-9,0]+[-10,4]"));
        assert_eq!(dual_dr_seg(&m("0"), 5, seg(1, 2)).unwrap(), m("[-2,2]"));
        assert!(dual_dr(&m("[1,7]"), 3).is_err());
    }

    #[test]
    fn good_range_checks() {
        assert!(good_range(&m("[2,4]+[1,7]"), seg(0, 1)));
        assert!(good_range(&m("0"), seg(3, 4)));
        assert!(!good_range(&m("[0]"), seg(1, 2)));
        assert!(r0(&m("[2,4]+[1,7]"), seg(0, 1)) > 7);
    }
}
