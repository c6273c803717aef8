//! The explicit certificates: singletons, pairs at r = 3, progressions at
//! r = 2, and the linear-block pattern.

use approxgroup::{verify, x_ap_r2, x_linear, x_pair_r3, x_singleton, IntSet, LinearPattern, Result};

fn main() -> Result<()> {
    let x = x_singleton(5, 4)?;
    println!("A = {{5}}, r = 4: X = {x}");
    assert!(verify(&IntSet::singleton(5), 4, &x)?);

    let x = x_pair_r3(-1, 6)?;
    println!("A = {{-1, 6}}, r = 3: X = {x}");
    assert!(verify(&IntSet::from([-1, 6]), 3, &x)?);

    let ap: IntSet = (0..6).map(|i| 4 + 3 * i).collect();
    let x = x_ap_r2(4, 3, 5)?;
    println!("A = {ap}, r = 2: X = {x}");
    assert!(verify(&ap, 2, &x)?);

    // Anything of the form {u0} ∪ [u, v] ∪ {v0}, plus points between the
    // ends, shares one family of certificates.
    let p = LinearPattern::new(0, 3, 8, 12)?;
    let a: IntSet = [0, 3, 4, 5, 6, 7, 8, 10, 12].into();
    assert!(p.matches(&a));
    for r in 2..=4 {
        let ell = p.min_ell(r)?;
        let x = x_linear(&p, r, ell)?;
        println!("block of {} inside [0, 12], r = {r}: ell = {ell}, X = {x}", p.block());
        assert!(verify(&a, r, &x)?);
    }
    Ok(())
}
