//! h-fold sumsets of a small set, and how fast they grow.

use approxgroup::{card_lower_bound, hfold, IntSet, Result, SumsetSequence};

fn main() -> Result<()> {
    let a: IntSet = "0,3,5".parse()?;
    println!("A = {a}");

    let mut seq = SumsetSequence::new(a.clone())?;
    for h in 1..=6 {
        let s = seq.get(h)?;
        let runs: Vec<String> = s.runs().map(|(u, v)| if u == v { u.to_string() } else { format!("[{u},{v}]") }).collect();
        println!("{h}A  |{:>3}| >= {:>2}   {}", s.len(), card_lower_bound(a.len(), h), runs.join(" "));
    }

    // Sumsets commute with affine maps.
    let b = a.dilate(4)?.translate(-7)?;
    assert_eq!(hfold(&b, 5)?, hfold(&a, 5)?.dilate(4)?.translate(-35)?);
    Ok(())
}
