//! Exhaustive search over all complements at n = 3, compared with the
//! constructed designs, then the full verification suite.
//!
//! ```bash
//! cargo run --release --example oracle_search
//! ```

use qcdesign::oracle::{brute_force_ma, compare_wlp, verify_theorems};
use qcdesign::regsel::ma_design;

fn main() -> qcdesign::Result<()> {
    for q in [50, 51, 53] {
        let report = brute_force_ma(3, q, 64)?;
        let built = ma_design(3, 64, q)?;
        println!(
            "q = {q}: {} candidates, {} optimal complements, pipeline {:?}",
            report.candidates_examined,
            report.optimal_complements.len(),
            compare_wlp(&built.wlp, &report.best_wlp)?
        );
    }

    let report = verify_theorems(2)?;
    for c in &report.claims {
        println!("{} {:<22} {}", if c.passed { "ok  " } else { "FAIL" }, c.claim, c.detail);
    }
    Ok(())
}
