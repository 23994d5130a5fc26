//! The Moeglin-Waldspurger algorithm and the Zelevinsky involution.

use multiseg::mw::{epsilon_mw, involution, minimal_partners, mw_step};
use multiseg::{zel, Multisegment};

fn main() -> multiseg::Result<()> {
    let m: Multisegment = "[0,2]+[2,4]+[2,5]+[3,5]+[4,6]".parse()?;
    let step = mw_step(&m)?;
    println!("m            = {m}");
    println!("first        = {}", step.first_segment);
    println!("participants = {:?}", step.participating);
    println!("reduced      = {}", step.reduced);
    println!("D^Zel_first  = {}", zel::st_derivative_zel(&m, step.first_segment));

    let sharp = involution(&m);
    println!("m^#          = {sharp}");
    println!("(m^#)^#      = {}", involution(&sharp));
    println!("eps^MW_[4,6] = {}", epsilon_mw(&m, step.first_segment));

    let x: Multisegment = "[1,2]+[2,2]+[3,3]+[2,3]".parse()?;
    let n2: Multisegment = "[3]".parse()?;
    println!("minimal partners of {n2} in {x}: {:?}", minimal_partners(&n2, &x, 3));
    Ok(())
}
