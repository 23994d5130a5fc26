//! Derivatives and integrals in the Langlands classification.

use multiseg::lang::{st_derivative_lang, st_integral_lang, upward_sequences};
use multiseg::{derivative, epsilon_r, eta_vector, Classification, Multisegment, Segment, Side};

fn main() -> multiseg::Result<()> {
    let m: Multisegment = "[0,5]+[0,4]+[1,2]+[2,6]+[2,3]".parse()?;
    let d = Segment::new(0, 2)?;

    println!("m = {m}, d = {d}");
    for (i, row) in upward_sequences(&m.window(0, 2)).iter().enumerate() {
        println!("upward sequence {}: {:?}", i + 1, row.segs);
    }

    let n = st_derivative_lang(&m, d);
    println!("D_d(m)      = {n}");
    if let Some(n) = n.finite() {
        println!("I_d(D_d(m)) = {}", st_integral_lang(&n, d));
    }
    println!("I_d(m)      = {}", st_integral_lang(&m, d));

    let left = derivative(&m, Segment::new(2, 3)?, Classification::Lang, Side::L);
    println!("left D_[2,3](m) = {left}");
    println!("eps_[0](m)  = {}", epsilon_r(&m, Segment::point(0), Classification::Lang, Side::R));
    println!("eta_[0,2](m) = {:?}", eta_vector(&m, d, Classification::Lang, Side::R));
    Ok(())
}
