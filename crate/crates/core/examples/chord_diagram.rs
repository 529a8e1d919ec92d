//! Tunnel pairs and an ASCII chord diagram of a path, optionally relabelled.
//!
//! `cargo run --example chord_diagram -- uududd 362154`

use sigma_dyck::cli::render_chords;
use sigma_dyck::{DyckPath, Perm};

fn main() -> sigma_dyck::Result<()> {
    let mut args = std::env::args().skip(1);
    let d = DyckPath::parse(&args.next().unwrap_or_else(|| "uuduuddd".into()))?;
    let sigma = args.next().map(|s| Perm::parse(&s)).transpose()?;

    println!("heights    {:?}", d.heights());
    println!("tunneling  {}", d.tunneling());
    print!("{}", render_chords(&d, sigma.as_ref())?);
    Ok(())
}
