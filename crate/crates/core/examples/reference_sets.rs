//! Admissible generator columns and even complements.
//!
//! ```bash
//! cargo run --example reference_sets
//! ```

use qcdesign::z4::{build_even_set, enumerate_omega, enumerate_omega0, is_even_set, parse_vectors};

fn main() -> qcdesign::Result<()> {
    let omega = enumerate_omega(2)?;
    let listed: Vec<String> = omega.vectors.iter().map(|g| g.to_string()).collect();
    println!("Omega for n = 2: {}", listed.join(" "));

    for n in 2..=5 {
        println!(
            "n = {n}: |Omega| = {:>3}, |Omega_0| = {:>3}, largest even set = {}",
            enumerate_omega(n)?.len(),
            enumerate_omega0(n)?.len(),
            1 << (n - 1)
        );
    }

    let even = build_even_set(4, 6)?;
    let members: Vec<String> = even.vectors.iter().map(|g| g.to_string()).collect();
    println!("an even set of size 6 at n = 4: {}", members.join(" "));
    println!("is even: {}", even.is_even());

    let mixed = parse_vectors("01 10")?;
    println!("{{01, 10}} even: {}", is_even_set(&mixed));
    Ok(())
}
