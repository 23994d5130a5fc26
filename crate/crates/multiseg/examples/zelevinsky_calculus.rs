//! Derivatives and integrals in the Zelevinsky classification.

use multiseg::zel::{st_derivative_zel, st_integral_zel};
use multiseg::{Multisegment, Segment};

fn main() -> multiseg::Result<()> {
    let m: Multisegment = "[0,4]+[2,5]+[3,5]+[4,6]".parse()?;
    for (a, b) in [(4, 6), (3, 5), (5, 6)] {
        let d = Segment::new(a, b)?;
        let n = st_derivative_zel(&m, d);
        println!("D_{d}(m) = {n}");
        let up = st_integral_zel(&m, d);
        println!("I_{d}(m) = {up}, and back: {}", st_derivative_zel(&up, d));
    }
    Ok(())
}
