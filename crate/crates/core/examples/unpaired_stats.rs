//! Unpaired steps in circular windows against heights.
//!
//! `cargo run --example unpaired_stats -- 3`

use sigma_dyck::stats::{equidistribution, height_level_count, umax_table};
use sigma_dyck::EnumCap;

fn main() -> sigma_dyck::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    for row in umax_table(n, EnumCap::DEFAULT)? {
        println!("{} | {} | {:?}", row.path, row.peak, row.umax);
    }
    let (a, k) = (2, n);
    let e = equidistribution(n, a, k, EnumCap::DEFAULT)?;
    println!(
        "u_(a={a},k={k}) histogram {}",
        serde_json::to_string(&e.unpaired).unwrap_or_default()
    );
    println!(
        "h_k histogram         {}",
        serde_json::to_string(&e.heights).unwrap_or_default()
    );
    println!("transport holds: {}", e.transport_failures.is_empty());
    for l in 0..=k {
        println!("paths with h_{k} = {l}: {}", height_level_count(n, k, l));
    }
    Ok(())
}
