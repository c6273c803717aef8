//! The CLI report types, driven from the library.

use approxgroup::cli::{cmd_analyze, cmd_certify, SweepArgs};

fn main() -> serde_json::Result<()> {
    for report in [cmd_analyze("0,3,5", SweepArgs::default()), cmd_certify("0,1,2,3", 2, 4, None), cmd_analyze("1,x", SweepArgs::default())] {
        println!("{}", serde_json::to_string(&report)?);
        eprintln!("exit code {}", report.exit_code);
    }
    Ok(())
}
