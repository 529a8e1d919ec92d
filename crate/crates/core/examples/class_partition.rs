//! The uniform partition of S_2n: parity, families, class keys and
//! brute-force classes.
//!
//! `cargo run --example class_partition -- 13275468 53271468`

use sigma_dyck::partitions::{
    are_friends, class_key, class_size, class_size_histogram, family, find_destroying_triple, parity, BruteClasses,
};
use sigma_dyck::{EnumCap, Perm};

fn main() -> sigma_dyck::Result<()> {
    let mut args = std::env::args().skip(1);
    let lam = Perm::parse(&args.next().unwrap_or_else(|| "13275468".into()))?;
    let mu = Perm::parse(&args.next().unwrap_or_else(|| "53271468".into()))?;

    for s in [&lam, &mu] {
        let par = parity(s);
        println!("{s}: parity ({},{}), class size {}", par.a, par.b, class_size(s)?);
        println!("  key {:?}", class_key(s)?);
        println!(
            "  family {:?}",
            family(s)?.iter().map(Perm::to_string).collect::<Vec<_>>()
        );
    }
    println!("friends: {}", are_friends(&lam, &mu));
    match find_destroying_triple(&lam, &mu) {
        Some(t) => println!(
            "destroying triple ({},{},{}) with witness {:?}",
            t.i,
            t.j,
            t.k,
            t.witness(lam.len())
        ),
        None => println!("no destroying triple"),
    }

    let classes = BruteClasses::compute(3, EnumCap::DEFAULT)?;
    println!(
        "n=3: {} classes, sizes {:?}",
        classes.count(),
        class_size_histogram(&classes)
    );
    Ok(())
}
