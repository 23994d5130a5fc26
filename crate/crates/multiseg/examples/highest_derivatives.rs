//! Highest derivative multisegments and highest Bernstein-Zelevinsky derivatives.

use multiseg::highest::{bz_highest, derivative_nonzero_by_hd, hd_lang, hd_of_l, hd_zel};
use multiseg::{Classification, Multisegment, Segment};

fn main() -> multiseg::Result<()> {
    for text in ["[1,2]+[2,3]+[3,4]+[4,5]+[5,6]", "[1,2]+[2]+[4,5]", "[3,5]+[4,5]+[4,6]"] {
        let m: Multisegment = text.parse()?;
        println!("m = {m}");
        println!("  d(m)           = {}", hd_lang(&m));
        println!("  H^Zel(m)       = {}", hd_zel(&m));
        println!("  hd of L(m)     = {}", hd_of_l(&m));
        println!("  BZ, Zelevinsky = {}", bz_highest(&m, Classification::Zel));
        let d = Segment::new(m.min_start().unwrap_or(0), m.min_start().unwrap_or(0) + 1)?;
        println!("  D^Zel_{d} non-zero: {}", derivative_nonzero_by_hd(&m, d));
    }
    Ok(())
}
