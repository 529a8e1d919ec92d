//! Circularly-connected permutations: recognition, counting and inversion.
//!
//! `cargo run --example ccp_inverse -- 162354 uududd`

use sigma_dyck::ccp::{ccp_certificate, count_ccps, invert_traced, iter_ccps};
use sigma_dyck::{sigma_path, DyckPath, EnumCap, Perm};

fn main() -> sigma_dyck::Result<()> {
    let mut args = std::env::args().skip(1);
    let sigma = Perm::parse(&args.next().unwrap_or_else(|| "162354".into()))?;
    let p = DyckPath::parse(&args.next().unwrap_or_else(|| "uududd".into()))?;

    let Some(cert) = ccp_certificate(&sigma) else {
        println!("{sigma} is not circularly connected");
        return Ok(());
    };
    for (k, b) in cert.blocks.iter().enumerate() {
        println!("prefix {:>2}: arc {:?}", k + 1, b.elements().collect::<Vec<_>>());
    }

    let (q, trace) = invert_traced(&sigma, &p)?;
    for s in &trace {
        println!(
            "down step {} at point {}: endpoints {:?}, partner {}",
            s.k, s.sigma_k, s.endpoints, s.v
        );
    }
    println!("preimage of {p} is {q}; sigma(q) = {}", sigma_path(&sigma, &q)?);

    for n in 1..=5 {
        let listed = iter_ccps(n, EnumCap::DEFAULT)?.count();
        println!("n={n}: {listed} CCPs (n * 2^(2n-1) = {})", count_ccps(n));
    }
    Ok(())
}
