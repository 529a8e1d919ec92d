//! The uniform partition: permutations generating the same map on all of `D_n`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::parity::{parity, ParityPair};
use crate::count::{binomial_signed, factorial};
use crate::dyck::{enumerate_paths_capped, DyckPath, EnumCap};
use crate::error::{Error, Result};
use crate::perm::{all_perms, Perm};
use crate::sigma::sigma_path_bits;

/// Canonical fingerprint of a class, read directly off the permutation.
///
/// Depending on the parity `(a, b)`:
/// * `a = b = n`: parity alone.
/// * `a = b = n-1`: parity and the unordered centre pair `{sigma_n, sigma_{n+1}}`
///   (stored in `middle`, sorted).
/// * otherwise, with `A = max(a, 2)` and `B = max(b, 2)`: the first `A`
///   entries as a set, the entries `A+1 ..= 2n-B` in order, and the last `B`
///   entries as a set. Widening a side of size 1 to 2 absorbs the family swap
///   on that side.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClassKey {
    pub parity: ParityPair,
    pub prefix_class: Vec<usize>,
    pub middle: Vec<usize>,
    pub suffix_class: Vec<usize>,
}

fn require_n3(m: usize) -> Result<usize> {
    let n = m / 2;
    if n < 3 {
        return Err(Error::SizeTooSmall { n, min: 3 });
    }
    Ok(n)
}

fn sorted(xs: &[usize]) -> Vec<usize> {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v
}

pub fn class_key(sigma: &Perm) -> Result<ClassKey> {
    let n = require_n3(sigma.len())?;
    let m = 2 * n;
    let s = sigma.images();
    let par = parity(sigma);
    let key = if par.a == n && par.b == n {
        ClassKey {
            parity: par,
            prefix_class: vec![],
            middle: vec![],
            suffix_class: vec![],
        }
    } else if par.a == n - 1 && par.b == n - 1 {
        ClassKey {
            parity: par,
            prefix_class: vec![],
            middle: sorted(&s[n - 1..n + 1]),
            suffix_class: vec![],
        }
    } else {
        let head = par.a.max(2);
        let tail = par.b.max(2);
        ClassKey {
            parity: par,
            prefix_class: sorted(&s[..head]),
            middle: s[head..m - tail].to_vec(),
            suffix_class: sorted(&s[m - tail..]),
        }
    };
    Ok(key)
}

/// Class size from the parity alone.
pub fn class_size(sigma: &Perm) -> Result<BigUint> {
    let n = require_n3(sigma.len())?;
    Ok(class_size_for(n, parity(sigma)))
}

pub fn class_size_for(n: usize, par: ParityPair) -> BigUint {
    let ParityPair { a, b } = par;
    if a == n && b == n {
        BigUint::from(2u32) * factorial(n) * factorial(n)
    } else if a == n - 1 && b == n - 1 {
        BigUint::from(2u32) * factorial(n - 1) * factorial(n - 1)
    } else {
        factorial(a.max(2)) * factorial(b.max(2))
    }
}

/// `C(2n-2-a-b, n-2) + C(2n-2-a-b, n-1-a)`, zero when out of range.
fn census_binomials(n: usize, a: usize, b: usize) -> BigUint {
    let top = 2 * n as i64 - 2 - a as i64 - b as i64;
    binomial_signed(top, n as i64 - 2) + binomial_signed(top, n as i64 - 1 - a as i64)
}

/// Number of permutations of `[2n]` with parity `(a, b)`.
pub fn parity_census(n: usize, a: usize, b: usize) -> BigUint {
    if n == 0 || a == 0 || b == 0 || a > n || b > n {
        return BigUint::zero();
    }
    let base = BigUint::from(2u32) * factorial(n) * factorial(n);
    if a == n && b == n {
        base
    } else if a < n && b < n {
        base * census_binomials(n, a, b)
    } else {
        BigUint::zero()
    }
}

/// Number of distinct maps `sigma(.)` over `sigma` in `S_2n`.
///
/// The closed form holds for `n >= 3`; the two smaller values come from
/// exhaustive search.
pub fn num_classes(n: usize) -> BigUint {
    match n {
        0 | 1 => return BigUint::one(),
        2 => return BigUint::from(3u32),
        _ => {}
    }
    let nn = factorial(n) * factorial(n);
    let mut sum = BigUint::zero();
    for a in 1..n {
        for b in 1..n {
            let denom = factorial(a.max(2)) * factorial(b.max(2));
            sum += &nn / denom * census_binomials(n, a, b);
        }
    }
    // 1 - n^2 + 2 * sum, kept non-negative.
    BigUint::one() + BigUint::from(2u32) * sum - BigUint::from(n * n)
}

/// Image of every path under `sigma`, bit-packed, in enumeration order.
pub fn fingerprint(sigma: &Perm, tunnels: &[Vec<usize>]) -> Vec<u64> {
    tunnels.iter().map(|t| sigma_path_bits(sigma.images(), t)).collect()
}

fn tunnels_of(paths: &[DyckPath]) -> Vec<Vec<usize>> {
    paths.iter().map(|d| d.tunneling().as_slice().to_vec()).collect()
}

/// Ground truth: `lam(D) = mu(D)` for every `D` in `D_n`.
pub fn same_class_bruteforce(lam: &Perm, mu: &Perm, n: usize) -> Result<bool> {
    Ok(same_class_witness(lam, mu, n)?.is_none())
}

/// A path on which the two maps differ, if any.
pub fn same_class_witness(lam: &Perm, mu: &Perm, n: usize) -> Result<Option<DyckPath>> {
    for s in [lam, mu] {
        if s.len() != 2 * n {
            return Err(Error::SizeMismatch {
                perm: s.len(),
                path: 2 * n,
            });
        }
    }
    let paths = enumerate_paths_capped(n, EnumCap::DEFAULT)?;
    Ok(paths.into_iter().find(|d| {
        let t = d.tunneling();
        sigma_path_bits(lam.images(), t.as_slice()) != sigma_path_bits(mu.images(), t.as_slice())
    }))
}

/// Every permutation of `[2n]` grouped by the map it generates.
#[derive(Debug, Clone)]
pub struct BruteClasses {
    pub n: usize,
    pub paths: Vec<DyckPath>,
    /// Classes ordered by their smallest member; members ascending.
    pub classes: Vec<Vec<Perm>>,
}

impl BruteClasses {
    /// Exhaustive over `S_2n`; `n <= 4` keeps this to a few seconds.
    pub fn compute(n: usize, cap: EnumCap) -> Result<Self> {
        cap.check(n)?;
        let paths = enumerate_paths_capped(n, cap)?;
        let tunnels = tunnels_of(&paths);
        let perms: Vec<Perm> = all_perms(2 * n).collect();
        let prints: Vec<Vec<u64>> = perms.par_iter().map(|s| fingerprint(s, &tunnels)).collect();
        let mut index: HashMap<&[u64], usize> = HashMap::new();
        let mut classes: Vec<Vec<Perm>> = Vec::new();
        // all_perms is lexicographic, so classes come out ordered by least member.
        for (sigma, fp) in perms.into_iter().zip(&prints) {
            let id = *index.entry(fp.as_slice()).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[id].push(sigma);
        }
        Ok(BruteClasses { n, paths, classes })
    }

    pub fn count(&self) -> usize {
        self.classes.len()
    }
}

/// Histogram of class sizes: size -> number of classes of that size.
pub fn class_size_histogram(classes: &BruteClasses) -> std::collections::BTreeMap<usize, usize> {
    let mut hist = std::collections::BTreeMap::new();
    for c in &classes.classes {
        *hist.entry(c.len()).or_insert(0) += 1;
    }
    hist
}
