//! Apply a permutation to a Dyck path and inspect the permuted chord diagram.
//!
//! `cargo run --example sigma_path -- 1,4,2,8,5,7,6,3 uuddudud`

use sigma_dyck::{permuted_rep, rep_as_path, sigma_path, DyckPath, Perm};

fn main() -> sigma_dyck::Result<()> {
    let mut args = std::env::args().skip(1);
    let sigma = Perm::parse(&args.next().unwrap_or_else(|| "1,4,2,8,5,7,6,3".into()))?;
    let d = DyckPath::parse(&args.next().unwrap_or_else(|| "uuddudud".into()))?;

    println!("sigma      {sigma}");
    println!("D          {d}");
    println!("sigma(D)   {}", sigma_path(&sigma, &d)?);
    println!("tau_D      {}", d.tunneling());
    println!("D^sigma    {}", permuted_rep(&d, &sigma)?);
    match rep_as_path(&d, &sigma)? {
        Some(q) => println!(
            "D^sigma is the path {q}, equal to sigma^-1(D) = {}",
            sigma_path(&sigma.inverse(), &d)?
        ),
        None => println!("D^sigma has crossing chords"),
    }
    Ok(())
}
