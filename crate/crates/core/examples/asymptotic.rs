//! Every finite set becomes an (r, r + 1)-approximate group once h is past
//! a computable threshold.

use approxgroup::{AsymptoticPlan, IntSet, Result};

fn main() -> Result<()> {
    let a: IntSet = "-4,2,11,14".parse()?;
    for r in 2..=4 {
        let plan = AsymptoticPlan::new(&a, r, None)?;
        println!(
            "r = {r}: h0 = {} (empirical), h1 = {} from {}/{}",
            plan.stabilization.h0_empirical, plan.h1, plan.h1_numerator, plan.h1_denominator
        );
        for cert in plan.certificates(plan.h1..=plan.h1 + 2)? {
            println!("  h = {:>3}: X = {}  verified = {}", cert.fold, cert.x, cert.verified);
            assert!(cert.verified && cert.x.len() == r as usize + 1);
        }
    }
    Ok(())
}
