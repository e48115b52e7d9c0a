//! Run every identity in the verification harness at reduced bounds and
//! print a one-line summary per identity.
//!
//! Run with: `cargo run --release --example verify_identities`

use catabij::verify::{check_identity, Identity, VerifyConfig};

fn main() {
    let config = VerifyConfig {
        max_cells: 10,
        max_polygon: 10,
        jobs: 2,
    };
    println!(
        "bounds: {} cells, {}-gons, {} jobs\n",
        config.max_cells, config.max_polygon, config.jobs
    );
    for identity in Identity::ALL {
        let report = check_identity(identity, &config);
        let failed = report.cells.iter().filter(|c| !c.pass).count();
        println!(
            "{:<24} {:>4} cells  {}",
            report.identity,
            report.cells.len(),
            if failed == 0 {
                "pass".to_string()
            } else {
                format!("{failed} FAILED")
            }
        );
        if let Some(cell) = report.cells.iter().find(|c| !c.pass) {
            println!("  first failure: {} {:?}", cell.label, cell.counts);
        }
    }
}
