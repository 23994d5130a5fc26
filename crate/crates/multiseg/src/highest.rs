//! Highest derivative multisegments and highest Bernstein–Zelevinsky derivatives.

use crate::calculus::Classification;
use crate::lang::upward_sequences;
use crate::multisegment::Multisegment;
use crate::mw::involution;
use crate::segment::Segment;

/// `𝔡(m)`: the sum of the non-free sections of all upward sequences of `m`.
/// `L(𝔡(m))` is the highest derivative of `L(m)`.
pub fn hd_lang(m: &Multisegment) -> Multisegment {
    let mut out = Multisegment::empty_on(m.line().clone());
    for row in upward_sequences(m) {
        for j in 0..row.segs.len() {
            out.insert_opt(row.nf(j));
        }
    }
    out
}

/// `H^Zel(m)`, the highest derivative multisegment of `Z(m)`.
pub fn hd_zel(m: &Multisegment) -> Multisegment {
    let mut rest = m.clone();
    let mut out = Multisegment::empty_on(m.line().clone());
    while let Some(first_end) = rest.iter().map(|s| s.end()).min() {
        let mut cur = rest.iter().find(|s| s.end() == first_end).expect("end present");
        rest.remove(cur);
        loop {
            let next = rest.iter().find(|s| s.end() == cur.end() + 1 && cur.precedes(*s));
            match next {
                Some(s) => {
                    rest.remove(s);
                    cur = s;
                }
                None => break,
            }
        }
        out.insert(Segment::raw(first_end, cur.end()));
    }
    out
}

/// The multisegment of the highest Bernstein–Zelevinsky derivative.
pub fn bz_highest(m: &Multisegment, class: Classification) -> Multisegment {
    match class {
        Classification::Lang => hd_lang(m),
        Classification::Zel => m.shrink_right_all(),
    }
}

/// Whether the Zelevinsky-side derivative `D_[a,b]` is non-zero, read off
/// `H^Zel(m)`: it must contain some `[a,c]` with `c >= b`.
pub fn derivative_nonzero_by_hd(m: &Multisegment, d: Segment) -> bool {
    hd_zel(m).iter().any(|s| s.start() == d.start() && s.end() >= d.end())
}

/// The highest derivative multisegment of `L(m) = Z(m^#)`.
pub fn hd_of_l(m: &Multisegment) -> Multisegment {
    hd_zel(&involution(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Multisegment {
        s.parse().unwrap()
    }

    #[test]
    fn hd_lang_examples() {
        let big = m("[1,5]+[1,5]+[2,5]+[3,4]+[3,6]+[4,6]+[5,6]+[6,7]");
        assert_eq!(hd_lang(&big), m("[2,5]+[3,5]+[4,5]+[5,6]"));
        assert_eq!(hd_lang(&m("[1,4]+[3,6]+[7,9]")), m("[2,4]+[6]"));
        assert_eq!(hd_lang(&m("[1,2]+[2]+[4,5]")), m("0"));
    }

    #[test]
    fn hd_zel_examples() {
        assert_eq!(hd_zel(&m("[1,4]+[2,5]+[3,4]+[2,6]")), m("[4,5]+[4]+[6]"));
        assert_eq!(hd_zel(&m("[1,5]+[2,3]+[8]")), m("[5]+[3]+[8]"));
        assert_eq!(hd_zel(&m("[3]")), m("[3]"));
    }

    #[test]
    fn bz_and_criterion() {
        assert_eq!(bz_highest(&m("[1,4]+[3]"), Classification::Zel), m("[1,3]"));
        assert_eq!(bz_highest(&m("[1,4]+[3,6]+[7,9]"), Classification::Lang), m("[2,4]+[6]"));
        assert!(derivative_nonzero_by_hd(&m("[3]"), Segment::point(3)));
        assert!(!derivative_nonzero_by_hd(&m("[3]"), Segment::new(2, 3).unwrap()));
    }
}
