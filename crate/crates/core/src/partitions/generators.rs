//! The fixed-base partition: for fixed `Q`, which permutations send `Q` to `P`.

use num_bigint::BigUint;
use num_traits::One;

use crate::count::{factorial, odd_double_factorial, pow2};
use crate::dyck::{iter_paths, DyckPath, EnumCap, Step};
use crate::error::{Error, Result};
use crate::pairing::Pairing;
use crate::perm::Perm;

/// Product of the heights just before each down step (equivalently just
/// after each up step).
pub fn l_weight(p: &DyckPath) -> BigUint {
    let h = p.heights();
    p.down_positions().iter().fold(BigUint::one(), |acc, &d| acc * h[d - 1])
}

/// Result of summing `l_weight` over `D_n` against `(2n-1)!!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub ok: bool,
}

pub fn double_factorial_identity_check(n: usize) -> Result<IdentityCheck> {
    double_factorial_identity_check_capped(n, EnumCap::DEFAULT)
}

pub fn double_factorial_identity_check_capped(n: usize, cap: EnumCap) -> Result<IdentityCheck> {
    let lhs: BigUint = iter_paths(n, cap)?.map(|p| l_weight(&p)).sum();
    let rhs = odd_double_factorial(n);
    let ok = lhs == rhs;
    Ok(IdentityCheck { lhs, rhs, ok })
}

/// `|{sigma : sigma(Q) = P}| = 2^n n! L_P`, independent of `Q`.
pub fn count_generators(p: &DyckPath) -> BigUint {
    let n = p.n();
    pow2(n) * factorial(n) * l_weight(p)
}

/// Largest generator set [`generators`] will materialize.
pub const GENERATOR_LIMIT: u64 = 20_000_000;

/// Every `sigma` with `sigma(q) = p`.
///
/// Up positions of `p` first receive one representative from each tunnel of
/// `q` (an ordering of the tunnels and an endpoint per tunnel); then each
/// down position, left to right, closes one of the still-open tunnels whose
/// representative sits at an earlier up position.
pub fn generators(p: &DyckPath, q: &DyckPath) -> Result<Vec<Perm>> {
    generators_capped(p, q, EnumCap::DEFAULT)
}

pub fn generators_capped(p: &DyckPath, q: &DyckPath, cap: EnumCap) -> Result<Vec<Perm>> {
    if p.len() != q.len() {
        return Err(Error::SizeMismatch {
            perm: p.len(),
            path: q.len(),
        });
    }
    let n = p.n();
    cap.check(n)?;
    let count = count_generators(p);
    if count > BigUint::from(GENERATOR_LIMIT) {
        return Err(Error::TooMany {
            count: count.to_string(),
            limit: GENERATOR_LIMIT,
        });
    }
    let tq = q.tunneling();
    let chords = tq.chords();
    let ups = p.up_positions();
    let m = p.len();

    let mut out = Vec::new();
    let mut images = vec![0usize; m];
    let mut used = vec![false; n];
    assign_ups(0, &ups, &chords, &mut used, &mut images, &mut |images| {
        close_downs(p, &tq, images, &mut out);
    });
    Ok(out)
}

fn assign_ups(
    i: usize,
    ups: &[usize],
    chords: &[(usize, usize)],
    used: &mut [bool],
    images: &mut [usize],
    emit: &mut dyn FnMut(&mut [usize]),
) {
    if i == ups.len() {
        emit(images);
        return;
    }
    for c in 0..chords.len() {
        if used[c] {
            continue;
        }
        used[c] = true;
        for end in [chords[c].0, chords[c].1] {
            images[ups[i] - 1] = end;
            assign_ups(i + 1, ups, chords, used, images, emit);
        }
        used[c] = false;
    }
    images[ups[i] - 1] = 0;
}

fn close_downs(p: &DyckPath, tq: &Pairing, images: &mut [usize], out: &mut Vec<Perm>) {
    let m = p.len();
    let mut open: Vec<usize> = Vec::new();
    fn go(
        k: usize,
        m: usize,
        p: &DyckPath,
        tq: &Pairing,
        images: &mut [usize],
        open: &mut Vec<usize>,
        out: &mut Vec<Perm>,
    ) {
        if k > m {
            out.push(Perm::from_images_unchecked(images.to_vec()));
            return;
        }
        match p.step(k) {
            Step::Up => {
                open.push(images[k - 1]);
                go(k + 1, m, p, tq, images, open, out);
                open.pop();
            }
            Step::Down => {
                for idx in 0..open.len() {
                    let rep = open.swap_remove(idx);
                    images[k - 1] = tq.partner(rep);
                    go(k + 1, m, p, tq, images, open, out);
                    open.push(rep);
                    let last = open.len() - 1;
                    open.swap(idx, last);
                }
                images[k - 1] = 0;
            }
        }
    }
    go(1, m, p, tq, images, &mut open, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::enumerate_paths;
    use crate::perm::all_perms;
    use crate::sigma::sigma_path;
    use std::collections::BTreeSet;

    fn p(s: &str) -> DyckPath {
        DyckPath::parse(s).unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(l_weight(&p("uuuddd")), BigUint::from(6u32));
        assert_eq!(l_weight(&p("ududud")), BigUint::from(1u32));
        assert_eq!(l_weight(&p("uududd")), BigUint::from(4u32));
        assert_eq!(l_weight(&p("uuddud")), BigUint::from(2u32));
        assert_eq!(l_weight(&p("uduudd")), BigUint::from(2u32));
    }

    #[test]
    fn weight_is_product_of_heights_after_ups() {
        for d in enumerate_paths(6).unwrap() {
            let h = d.heights();
            let alt: BigUint = d.up_positions().iter().fold(BigUint::one(), |acc, &u| acc * h[u]);
            assert_eq!(alt, l_weight(&d));
        }
    }

    #[test]
    fn identity_values() {
        let c = double_factorial_identity_check(3).unwrap();
        assert_eq!((c.lhs.clone(), c.ok), (BigUint::from(15u32), true));
        let c = double_factorial_identity_check(1).unwrap();
        assert_eq!((c.lhs, c.rhs, c.ok), (BigUint::one(), BigUint::one(), true));
        let c = double_factorial_identity_check(6).unwrap();
        assert_eq!(c.lhs, BigUint::from(10395u32));
        assert!(c.ok);
    }

    #[test]
    fn counts() {
        assert_eq!(count_generators(&p("uuuddd")), BigUint::from(288u32));
        assert_eq!(count_generators(&p("ududud")), BigUint::from(48u32));
        let total: BigUint = enumerate_paths(3).unwrap().iter().map(count_generators).sum();
        assert_eq!(total, BigUint::from(720u32));
    }

    #[test]
    fn algorithm_matches_brute_force() {
        for n in 1..=3 {
            let paths = enumerate_paths(n).unwrap();
            let perms: Vec<Perm> = all_perms(2 * n).collect();
            for q in &paths {
                for target in &paths {
                    let brute: BTreeSet<Perm> = perms
                        .iter()
                        .filter(|s| &sigma_path(s, q).unwrap() == target)
                        .cloned()
                        .collect();
                    let gen = generators(target, q).unwrap();
                    let gen_set: BTreeSet<Perm> = gen.iter().cloned().collect();
                    assert_eq!(gen.len(), gen_set.len(), "duplicates for {target} from {q}");
                    assert_eq!(gen_set, brute, "{target} from {q}");
                    assert_eq!(BigUint::from(gen.len()), count_generators(target));
                }
            }
        }
    }
}
