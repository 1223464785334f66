//! Runs every acceptance criterion at full size and prints one line each.

use std::process::ExitCode;

use parkposet::verify::{run, Scale, CRITERIA};
use rayon::prelude::*;

fn main() -> ExitCode {
    let mut outcomes: Vec<_> = CRITERIA
        .par_iter()
        .map(|&(id, _)| run(id, Scale::full()))
        .collect();
    outcomes.sort_by_key(|o| o.id);
    let mut failed = 0;
    for o in &outcomes {
        println!("{}  [{:.2}s]", o.line(), o.seconds);
        failed += usize::from(!o.passed);
    }
    println!("acceptance: {} passed, {} failed", outcomes.len() - failed, failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
