//! Parity, families, friends and destroying triples.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pairing::wrap;
use crate::perm::Perm;

/// `(a, b)`: the first parity change reading from the left, and from the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ParityPair {
    pub a: usize,
    pub b: usize,
}

pub fn parity(sigma: &Perm) -> ParityPair {
    let s = sigma.images();
    let m = s.len();
    let a = (1..m).find(|&i| s[i - 1] % 2 != s[i] % 2).expect("both parities occur");
    let b = (1..m)
        .find(|&j| s[m - j] % 2 != s[m - j - 1] % 2)
        .expect("both parities occur");
    ParityPair { a, b }
}

fn require_n3(sigma: &Perm) -> Result<()> {
    let n = sigma.len() / 2;
    if n < 3 {
        return Err(Error::SizeTooSmall { n, min: 3 });
    }
    Ok(())
}

/// The four permutations obtained by optionally swapping the first two and
/// the last two entries.
pub fn family(sigma: &Perm) -> Result<BTreeSet<Perm>> {
    require_n3(sigma)?;
    let m = sigma.len();
    let mut out = BTreeSet::new();
    for swap_head in [false, true] {
        for swap_tail in [false, true] {
            let mut images = sigma.images().to_vec();
            if swap_head {
                images.swap(0, 1);
            }
            if swap_tail {
                images.swap(m - 2, m - 1);
            }
            out.insert(Perm::from_images_unchecked(images));
        }
    }
    Ok(out)
}

/// Canonical member of the family: both swappable pairs sorted ascending.
pub fn family_representative(sigma: &Perm) -> Result<Perm> {
    require_n3(sigma)?;
    let m = sigma.len();
    let mut images = sigma.images().to_vec();
    if images[0] > images[1] {
        images.swap(0, 1);
    }
    if images[m - 2] > images[m - 1] {
        images.swap(m - 2, m - 1);
    }
    Ok(Perm::from_images_unchecked(images))
}

/// Same parity `(a, b)`, same first `a` entries as a set, identical entries
/// on positions `a+1 ..= 2n-b`.
pub fn are_friends(lam: &Perm, mu: &Perm) -> bool {
    if lam.len() != mu.len() {
        return false;
    }
    let par = parity(lam);
    if parity(mu) != par {
        return false;
    }
    let m = lam.len();
    let head = |s: &Perm| s.images()[..par.a].iter().copied().collect::<BTreeSet<_>>();
    head(lam) == head(mu) && lam.images()[par.a..m - par.b] == mu.images()[par.a..m - par.b]
}

/// A triple `i < j < k` with values `P, P+1` (cyclically adjacent) on one
/// permutation and an opposite-parity pair `Q, R` on the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DestroyingTriple {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// `P`; its neighbour `P + 1` wraps to 1 past `2n`.
    pub p: usize,
    pub q: usize,
    pub r: usize,
    /// True when the adjacent pair sits on the first permutation at `(i, j)`
    /// and the opposite-parity pair on the second at `(j, k)`; false for the
    /// swapped configuration.
    pub adjacent_on_first: bool,
}

impl DestroyingTriple {
    pub fn witness(&self, m: usize) -> (usize, usize, usize, usize) {
        (self.p, wrap(self.p + 1, m), self.q, self.r)
    }
}

/// `Some(P)` when `{x, y} = {P, P+1}` cyclically.
fn adjacent_base(x: usize, y: usize, m: usize) -> Option<usize> {
    if wrap(x + 1, m) == y {
        Some(x)
    } else if wrap(y + 1, m) == x {
        Some(y)
    } else {
        None
    }
}

/// First destroying triple in lexicographic `(i, j, k)` order.
pub fn find_destroying_triple(lam: &Perm, mu: &Perm) -> Option<DestroyingTriple> {
    if lam.len() != mu.len() {
        return None;
    }
    let m = lam.len();
    let (l, u) = (lam.images(), mu.images());
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                let triple = |p, q, r, adjacent_on_first| DestroyingTriple {
                    i: i + 1,
                    j: j + 1,
                    k: k + 1,
                    p,
                    q,
                    r,
                    adjacent_on_first,
                };
                let distinct = |p: usize, q: usize, r: usize| {
                    let s: BTreeSet<usize> = [p, wrap(p + 1, m), q, r].into();
                    s.len() == 4 && q % 2 != r % 2
                };
                if let Some(p) = adjacent_base(l[i], l[j], m) {
                    if distinct(p, u[j], u[k]) {
                        return Some(triple(p, u[j], u[k], true));
                    }
                }
                if let Some(p) = adjacent_base(u[j], u[k], m) {
                    if distinct(p, l[i], l[j]) {
                        return Some(triple(p, l[i], l[j], false));
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_perms;

    fn perm(s: &str) -> Perm {
        Perm::parse(s).unwrap()
    }

    #[test]
    fn parity_examples() {
        assert_eq!(parity(&perm("13275468")), ParityPair { a: 2, b: 3 });
        assert_eq!(parity(&perm("12345678")), ParityPair { a: 1, b: 1 });
        assert_eq!(parity(&perm("13572468")), ParityPair { a: 4, b: 4 });
    }

    #[test]
    fn family_examples() {
        let fam: Vec<String> = family(&perm("12345678"))
            .unwrap()
            .iter()
            .map(|s| s.images().iter().map(|x| x.to_string()).collect())
            .collect();
        assert_eq!(fam, ["12345678", "12345687", "21345678", "21345687"]);
        assert!(matches!(family(&perm("1234")), Err(Error::SizeTooSmall { .. })));
    }

    #[test]
    fn families_partition_s6() {
        let mut cells: BTreeSet<BTreeSet<Perm>> = BTreeSet::new();
        for s in all_perms(6) {
            let f = family(&s).unwrap();
            assert_eq!(f.len(), 4);
            assert!(f.contains(&s));
            assert!(f
                .iter()
                .all(|t| family_representative(t).unwrap() == family_representative(&s).unwrap()));
            cells.insert(f);
        }
        assert_eq!(cells.len(), 720 / 4);
    }

    #[test]
    fn friends_examples() {
        assert!(are_friends(&perm("13275468"), &perm("31275846")));
        assert!(!are_friends(&perm("13275468"), &perm("53271468")));
        assert!(are_friends(&perm("13275468"), &perm("13275468")));
    }

    #[test]
    fn destroying_triple_examples() {
        let t = find_destroying_triple(&perm("13275468"), &perm("53271468")).unwrap();
        assert_eq!((t.i, t.j, t.k), (3, 5, 8));
        assert_eq!((t.p, t.q, t.r), (8, 2, 5));
        assert_eq!(t.witness(8), (8, 1, 2, 5));
        assert!(!t.adjacent_on_first);
        let s = perm("13275468");
        assert_eq!(find_destroying_triple(&s, &s), None);
        assert_eq!(find_destroying_triple(&s, &perm("31275846")), None);
    }
}
