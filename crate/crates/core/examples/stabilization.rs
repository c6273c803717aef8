//! Watch hA settle into fringe, interval, fringe.

use approxgroup::{find_stabilization, normalize, IntSet, Result, SweepParams};

fn main() -> Result<()> {
    let a: IntSet = std::env::args().nth(1).as_deref().unwrap_or("12,18,22").parse()?;
    let n = normalize(&a)?;
    println!("A = {a}  ->  {} + {} * {}", n.a0, n.d, n.reduced);

    let params = SweepParams::defaults_for(n.astar);
    let report = find_stabilization(&n, params)?;
    let st = &report.structure;
    println!("stable from h = {} (observed over {} folds, not proven)", report.h0_empirical, report.window);
    println!("C = {}, D = {}", st.c, st.d);
    println!("C_set = {}", st.c_set);
    println!("D_set = {}", st.d_set);

    for st in &report.per_h {
        let (u, v) = st.middle();
        println!("  h = {:>2}: middle [{u}, {v}]", st.h);
        assert_eq!(st.reconstruct()?, approxgroup::hfold(&n.reduced, st.h)?);
    }
    Ok(())
}
