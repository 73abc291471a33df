//! Row sums of the complement, the third-moment quantity F3 and its bound.
//!
//! ```bash
//! cargo run --example complementary_sets
//! ```

use qcdesign::compset::{lemma1_check, theorem_bound, ComplementProfile};
use qcdesign::gray::Parity;
use qcdesign::z4::{complement, enumerate_omega, parse_vectors, ComplementSet, ReferenceKind};

fn main() -> qcdesign::Result<()> {
    let n = 3;
    let omega = enumerate_omega(n)?;
    for text in ["100 120 102 122", "100 120 001 010"] {
        let sbar = ComplementSet::new(n, ReferenceKind::Full, parse_vectors(text)?)?;
        let p = ComplementProfile::new(&sbar, Parity::Even)?;
        println!(
            "{text}: even {}, classes {:?}, F3 = {}, bound = {}",
            sbar.is_even(),
            p.class_sizes(),
            p.f3(),
            theorem_bound(n, sbar.len(), Parity::Even)
        );

        let s: Vec<_> = omega.vectors.iter().filter(|g| !sbar.vectors.contains(g)).cloned().collect();
        println!("  row-sum identity holds: {}", lemma1_check(&s, &sbar, Parity::Even)?);
        let mbar = p.m_bar(5);
        println!("  mbar_3..5 = {mbar:?}");
    }

    // the complement of a selection, with a designated odd-role column
    let chosen = parse_vectors("001 010 011")?;
    let rest = complement(&chosen, &omega)?.with_odd_role("100".parse()?)?;
    let odd = ComplementProfile::new(&rest, Parity::Odd)?;
    println!("complement of 3 columns: {} members, F3_odd = {}", rest.len(), odd.f3());

    let small = ComplementSet::new(2, ReferenceKind::Full, parse_vectors("01 10")?)?;
    let dump = ComplementProfile::new(&small, Parity::Even)?.diagnostic_json();
    println!("{}", serde_json::to_string_pretty(&dump)?);
    Ok(())
}
