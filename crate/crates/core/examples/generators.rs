//! Permutations sending a fixed base path to each target, and the
//! double factorial identity over all paths.
//!
//! `cargo run --example generators -- 3`

use sigma_dyck::dyck::enumerate_paths;
use sigma_dyck::partitions::{count_generators, double_factorial_identity_check, generators, l_weight};
use sigma_dyck::DyckPath;

fn main() -> sigma_dyck::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let q = DyckPath::zigzag(n);
    println!("base path {q}");
    for p in enumerate_paths(n)? {
        let gens = generators(&p, &q)?;
        println!(
            "{p}  L={}  |C_P|={}  listed={}",
            l_weight(&p),
            count_generators(&p),
            gens.len()
        );
    }
    for m in 1..=8 {
        let c = double_factorial_identity_check(m)?;
        println!("n={m}: sum of L_P = {}  (2n-1)!! = {}", c.lhs, c.rhs);
    }
    Ok(())
}
