//! The randomized property suite: norm inequalities, embedding scalings,
//! multiplier bounds and ansatz properties, all on seeded random fields.
//!
//! cargo run --release --example property_suite

use fracsh::study::{run_property_suite, StudyConfig};

fn main() {
    let config = StudyConfig {
        seed: 7,
        ..StudyConfig::default()
    };
    let report = run_property_suite(&config).unwrap();
    let mut failed = 0;
    for c in &report.checks {
        println!(
            "{} {:44} {}",
            if c.pass { "pass" } else { "FAIL" },
            c.name,
            c.detail
        );
        if !c.pass {
            failed += 1;
        }
    }
    println!();
    println!(
        "{}/{} checks passed at seed {}",
        report.checks.len() - failed,
        report.checks.len(),
        report.seed
    );
    std::process::exit(if failed == 0 { 0 } else { 4 });
}
