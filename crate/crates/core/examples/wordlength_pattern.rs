//! Exact wordlength patterns by direct enumeration and by the distance
//! distribution, plus resolution, projectivity and moments.
//!
//! ```bash
//! cargo run --release --example wordlength_pattern
//! ```

use std::time::Instant;

use qcdesign::regsel::ma_design;
use qcdesign::wlp::{max_aliasing, moments, projectivity_at_least, resolution, wlp_direct, wlp_distance};

fn main() -> qcdesign::Result<()> {
    let ma = ma_design(4, 128, 103)?;
    let d = &ma.design;

    let t = Instant::now();
    let fast = wlp_distance(d)?;
    println!("distance route: {:?}", t.elapsed());

    let t = Instant::now();
    let slow = wlp_direct(d, 4)?;
    println!("direct route (k <= 4): {:?}", t.elapsed());

    assert_eq!(fast.truncated(4), slow);
    print!("{slow}");

    println!("rho_3,max = {}", max_aliasing(d, 3)?);
    println!("resolution = {}", resolution(d));
    println!("projectivity >= 3: {}", projectivity_at_least(d, 3));

    let m = moments(d, 5)?;
    println!("m_3 = {}, m_4 = {}, m_5 = {}", m.m(3), m.m(4), m.m(5));

    println!("{}", serde_json::to_string(&fast.truncated(6))?);
    Ok(())
}
