//! Exhaustive law checking over a small universe.
//!
//! Usage: `law_check [lo hi max_segments max_total_length [law-filter]]`.

use multiseg::oracle::{enumerate, run_laws, UniverseBounds};

fn main() -> multiseg::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let num = |i: usize, default: i64| args.get(i).and_then(|s| s.parse().ok()).unwrap_or(default);
    let bounds = UniverseBounds::new(num(0, 0), num(1, 3), num(2, 3) as usize, num(3, 6))?;
    println!("{} multisegments", enumerate(&bounds).count());
    let report = run_laws(&bounds, args.get(4).map(String::as_str));
    print!("{}", report.to_text());
    Ok(())
}
