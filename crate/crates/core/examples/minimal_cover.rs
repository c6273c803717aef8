//! Exact and greedy covers of rA by translates of A.

use approxgroup::{classify_small_ell, greedy_cover, minimal_cover, IntSet, Result};

fn main() -> Result<()> {
    for (lit, r) in [("0,1,2,3", 2), ("0,1,2,3", 3), ("0,7", 3), ("0,1,3", 2), ("0,2,3,7,11", 2)] {
        let a: IntSet = lit.parse()?;
        let exact = minimal_cover(&a, r, 6)?.expect("ell_max large enough");
        let greedy = greedy_cover(&a, r)?;
        let small = classify_small_ell(&a, r)?;
        println!(
            "A = {a:<18} r = {r}  min ell {}  X = {:<14} greedy {}  (r,2) by closed form: {}",
            exact.ell,
            exact.x.to_string(),
            greedy.ell,
            small.ell2.is_some()
        );
        assert!(exact.verified && greedy.verified);
    }
    Ok(())
}
