//! Rotations and reflections acting on chord diagrams.
//!
//! `cargo run --example dihedral_orbits -- 4`

use sigma_dyck::dihedral::{dihedral_group, elements, orbits, preserves_paths};
use sigma_dyck::perm::all_perms;
use sigma_dyck::EnumCap;

fn main() -> sigma_dyck::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for e in elements(n) {
        println!(
            "rho^{}{:<7} {}",
            e.rotation,
            if e.reflected { " omega" } else { "" },
            e.to_perm()
        );
    }
    for o in orbits(n, EnumCap::DEFAULT)? {
        println!(
            "orbit of size {:>2}: {}",
            o.len(),
            o.iter().map(|d| d.word()).collect::<Vec<_>>().join(" ")
        );
    }
    let group = dihedral_group(3);
    let keep: Vec<_> = all_perms(6)
        .filter(|g| preserves_paths(g, 3).unwrap_or(false))
        .collect();
    println!(
        "n=3: {} of 720 permutations keep every diagram non-crossing; all in G: {}",
        keep.len(),
        keep.iter().all(|g| group.contains(g))
    );
    Ok(())
}
