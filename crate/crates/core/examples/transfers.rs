//! Moving a certificate along translations, dilations and smaller r.

use approxgroup::{minimal_cover, transfer_dilate, transfer_downgrade, transfer_translate, verify, IntSet, Result};

fn main() -> Result<()> {
    let a: IntSet = "0,1,3".parse()?;
    let r = 3;
    let x = minimal_cover(&a, r, 5)?.unwrap().x;
    println!("A = {a}, r = {r}: X = {x}");

    let shifted = a.translate(10)?;
    let xt = transfer_translate(&x, 10, r)?;
    println!("A + 10 = {shifted}: X = {xt}");
    assert!(verify(&shifted, r, &xt)?);

    let scaled = a.dilate(5)?.translate(-2)?;
    let xd = transfer_dilate(&x, 5, -2, r)?;
    println!("5A - 2 = {scaled}: X = {xd}");
    assert!(verify(&scaled, r, &xd)?);

    // A certificate for r also yields one for each smaller r.
    for lower in 1..r {
        let xl = transfer_downgrade(&x, r, lower, a.max().unwrap())?;
        println!("r = {lower}: X = {xl}  verified = {}", verify(&a, lower, &xl)?);
    }
    Ok(())
}
