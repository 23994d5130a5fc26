//! Parsing, canonical printing, slices and the map Θ to the dual line.

use multiseg::{parse_multisegment, Multisegment, Segment};

fn main() -> multiseg::Result<()> {
    let m = parse_multisegment("[2,4] + [0,1] + [1,3] + [2,4]")?;
    println!("canonical      {m}");
    println!("segments       {}", m.len());
    println!("length         {}", m.rel_len());
    println!("starting at 2  {}", m.slice_start(2));
    println!("ending at 3    {}", m.slice_end(3));
    println!("window [1,2]   {}", m.window(1, 2));
    println!("theta          {}", m.theta());
    println!("theta twice    {}", m.theta().theta());

    let (x, y) = (Segment::new(0, 1)?, Segment::new(1, 3)?);
    println!("{x} precedes {y}: {}", x.precedes(y));
    println!("{x} linked to {y}: {}", x.linked(y));

    let labelled: Multisegment = "[1,2]@sigma+[3]@sigma".parse()?;
    println!("labelled       {labelled}");

    match parse_multisegment("[1,2]+[3") {
        Ok(_) => unreachable!(),
        Err(e) => println!("bad input      {e}"),
    }
    Ok(())
}
