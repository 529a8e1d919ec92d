//! Number of distinct maps on D_n generated by S_2n, with the parity census
//! behind it.
//!
//! `cargo run --example class_sequence -- 10`

use sigma_dyck::partitions::{class_size_for, num_classes, parity_census, ParityPair};

fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    for n in 1..=max_n {
        println!("n={n:<2} {}", num_classes(n));
    }
    let n = 4;
    println!("parity census for n={n}:");
    for a in 1..=n {
        for b in 1..=n {
            let perms = parity_census(n, a, b);
            if perms != 0u32.into() {
                let size = class_size_for(n, ParityPair { a, b });
                println!(
                    "  ({a},{b}) perms {perms:>6}  class size {size:>5}  classes {}",
                    &perms / &size
                );
            }
        }
    }
}
