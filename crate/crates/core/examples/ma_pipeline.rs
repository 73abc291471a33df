//! End to end: pick the complement, build the design, write it to a catalog
//! directory and read it back.
//!
//! ```bash
//! cargo run --release --example ma_pipeline -- /tmp/qc-designs
//! ```

use std::path::PathBuf;

use qcdesign::catalog::{read_record, write_design};
use qcdesign::regsel::{factor_range, ma_design};

fn main() -> qcdesign::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);

    for (n, runs) in [(4, 128), (4, 256)] {
        let (_, lo, hi) = factor_range(n, runs)?;
        println!("{runs} runs: factor counts {lo}..={hi}");
    }

    for (n, runs, q) in [(4, 128, 103), (4, 256, 228), (4, 256, 231)] {
        let ma = ma_design(n, runs, q)?;
        let (json, _csv, record) = write_design(&dir, &ma, false)?;
        println!(
            "q = {q}: complement size {}, B = {}, A3 = {}, A4 = {}, resolution {}",
            ma.deficiency,
            ma.b().map_or("-".to_owned(), |b| b.to_string()),
            ma.wlp.term(3),
            ma.wlp.term(4),
            record.resolution
        );
        let back = read_record(&json)?;
        back.verify()?;
        println!("  {} verified", json.display());
    }
    Ok(())
}
