//! Exotic duality exchanging right integrals with left derivatives.

use multiseg::duality::{dual_dr, dual_dr_seg, good_range, r0};
use multiseg::{derivative, lang, Classification, Multisegment, Segment, Side};

fn main() -> multiseg::Result<()> {
    let m: Multisegment = "[1,5]+[2,6]".parse()?;
    let d = Segment::new(1, 4)?;
    println!("m = {m}, d = {d}, good range: {}", good_range(&m, d));

    let r = r0(&m, d);
    let up = lang::st_integral_lang(&m, d);
    println!("r = {r}");
    println!("I_d(m)        = {up}");
    println!("D_r(m)        = {}", dual_dr(&m, r)?);
    println!("D_r^d(m)      = {}", dual_dr_seg(&m, r, d)?);
    println!("D_r(I_d(m))   = {}", dual_dr(&up, r)?);

    let source = if up.len() == m.len() { dual_dr(&m, r)? } else { dual_dr_seg(&m, r, d)? };
    let left = derivative(&source, d, Classification::Lang, Side::L);
    println!("left D_d(...) = {left}");
    Ok(())
}
