//! Regular designs generated by B, their word counts, and the choice of B
//! for even and odd factor counts.
//!
//! ```bash
//! cargo run --release --example regular_selection
//! ```

use qcdesign::gray::Parity;
use qcdesign::regsel::{e2r, parse_b_notation, regular_wlp, select_b, table1, theorem2_key};

fn main() -> qcdesign::Result<()> {
    let candidates = [
        "1 2 12 3 13 4 14 234 1234",
        "1 2 12 3 13 4 24 34 1234",
        "1 2 12 3 13 23 4 14 234",
        "1 2 12 3 13 23 4 14 24",
        "1 2 12 3 13 23 123 4 14",
    ];
    for text in candidates {
        let b = parse_b_notation(text, 4)?;
        let w = regular_wlp(&b);
        println!("{b:<28} WLP {:?}  pair sums {:?}  E4 = {}", w.from_three(), theorem2_key(&b), e2r(&b, 2));
    }

    for parity in [Parity::Even, Parity::Odd] {
        let sel = select_b(5, 10, parity)?;
        println!(
            "{parity:?}: B = {} key {:?} ({} of {} candidates optimal)",
            sel.b, sel.key, sel.optimal_count, sel.candidates
        );
    }

    for row in table1(4)? {
        println!("deficiency {:>2}: {}", row.deficiency, row.b);
    }
    Ok(())
}
