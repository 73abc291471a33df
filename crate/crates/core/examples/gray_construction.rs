//! Gray-map construction of even, odd and half-run designs.
//!
//! ```bash
//! cargo run --example gray_construction
//! ```

use qcdesign::gray::{construct, gray_pair, halve, GeneratorMatrix, Parity};
use qcdesign::z4::parse_vectors;

fn main() -> qcdesign::Result<()> {
    for z in 0..4 {
        println!("{z} -> {:?}", gray_pair(z)?);
    }

    let g = GeneratorMatrix::new(2, parse_vectors("10 12")?)?;
    let even = construct(&g, Parity::Even)?;
    let odd = construct(&g, Parity::Odd)?;
    println!("even design: {} runs x {} factors", even.runs(), even.factors());
    println!("odd design:  {} runs x {} factors", odd.runs(), odd.factors());

    // last row of G is even, so runs u and u + 2e_n coincide
    let half = halve(&even, &g)?;
    println!("half design: {} runs x {} factors", half.runs(), half.factors());
    for r in 0..half.runs() {
        let label = half.row_label(r).expect("Z4-indexed rows");
        println!("  {label}  {:?}", half.row(r));
    }

    let mut csv = Vec::new();
    half.write_csv(&mut csv, true)?;
    print!("{}", String::from_utf8_lossy(&csv));
    Ok(())
}
