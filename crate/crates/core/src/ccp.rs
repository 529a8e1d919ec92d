//! Circularly-connected permutations (CCPs): recognition, enumeration and
//! the inverse of the maps they generate.
//!
//! A permutation is circularly connected when every prefix set
//! `{sigma_1, ..., sigma_k}` is an arc of the circle `1 -> 2 -> ... -> 2n -> 1`.
//! Exactly these permutations generate bijections of `D_n`.

use std::collections::HashSet;

use num_bigint::BigUint;

use crate::count::pow2;
use crate::dyck::{iter_paths, DyckPath, EnumCap, Step};
use crate::error::{Error, Result};
use crate::pairing::{wrap, Block, Pairing};
use crate::perm::Perm;
use crate::sigma::sigma_path_bits;

/// The arcs `sigma_[k]` witnessing that `perm` is a CCP.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CcpCertificate {
    pub perm: Perm,
    /// `blocks[k-1]` is the arc `sigma_[k]`.
    pub blocks: Vec<Block>,
}

/// Arcs of every prefix, or `None` when some prefix is not an arc.
pub fn ccp_certificate(sigma: &Perm) -> Option<CcpCertificate> {
    let m = sigma.len();
    let mut blocks = Vec::with_capacity(m);
    let mut block = Block::new(sigma.at(1), 1, m);
    blocks.push(block);
    for k in 2..=m {
        let x = sigma.at(k);
        if x == wrap(block.end() + 1, m) {
            block = Block::new(block.start, block.size + 1, m);
        } else if x == wrap(block.start + m - 1, m) {
            block = Block::new(x, block.size + 1, m);
        } else {
            return None;
        }
        blocks.push(block);
    }
    Some(CcpCertificate {
        perm: sigma.clone(),
        blocks,
    })
}

pub fn is_ccp(sigma: &Perm) -> bool {
    ccp_certificate(sigma).is_some()
}

/// `n * 2^(2n-1)`, the number of CCPs of `[2n]`.
pub fn count_ccps(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::from(0u32);
    }
    pow2(2 * n - 1) * n
}

/// Streams the CCPs of `[2n]`: `sigma_1` ascending, then the extension
/// choices for `sigma_2 .. sigma_{2n-1}` read as a binary number, most
/// significant first, ascending. Bit 0 extends clockwise, bit 1
/// counterclockwise.
#[derive(Debug, Clone)]
pub struct Ccps {
    m: usize,
    first: usize,
    mask: u64,
}

impl Iterator for Ccps {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        let m = self.m;
        let choices = m.saturating_sub(2);
        if self.first > m {
            return None;
        }
        let (first, mask) = (self.first, self.mask);
        self.mask += 1;
        if self.mask == 1u64 << choices {
            self.mask = 0;
            self.first += 1;
        }
        let mut images = Vec::with_capacity(m);
        images.push(first);
        let (mut lo, mut hi) = (first, first);
        for k in 2..=m {
            let ccw = k < m && (mask >> (choices - (k - 1))) & 1 == 1;
            if ccw {
                lo = wrap(lo + m - 1, m);
                images.push(lo);
            } else {
                hi = wrap(hi + 1, m);
                images.push(hi);
            }
        }
        Some(Perm::from_images_unchecked(images))
    }
}

pub fn iter_ccps(n: usize, cap: EnumCap) -> Result<Ccps> {
    if n == 0 {
        return Err(Error::SizeTooSmall { n, min: 1 });
    }
    cap.check(n)?;
    Ok(Ccps {
        m: 2 * n,
        first: 1,
        mask: 0,
    })
}

pub fn enumerate_ccps(n: usize) -> Result<Vec<Perm>> {
    Ok(iter_ccps(n, EnumCap::DEFAULT)?.collect())
}

/// One down-step iteration of the inverse construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvertStep {
    pub k: usize,
    pub sigma_k: usize,
    /// Endpoints of `sigma_[k-1]` adjacent to `sigma_k`; two only when the
    /// arc is everything except `sigma_k`.
    pub endpoints: Vec<usize>,
    /// Partner found from the chosen (counterclockwise) endpoint.
    pub v: usize,
    /// Partner found from the clockwise endpoint when there were two.
    pub v_alt: Option<usize>,
}

/// Circular doubly linked list over the still-unpaired points.
struct Unpaired {
    next: Vec<usize>,
    prev: Vec<usize>,
}

impl Unpaired {
    fn new(m: usize) -> Self {
        Unpaired {
            next: (0..=m).map(|x| if x == 0 { 0 } else { wrap(x + 1, m) }).collect(),
            prev: (0..=m).map(|x| if x == 0 { 0 } else { wrap(x + m - 1, m) }).collect(),
        }
    }

    fn remove(&mut self, x: usize) {
        let (p, q) = (self.prev[x], self.next[x]);
        self.next[p] = q;
        self.prev[q] = p;
    }
}

/// Finds `Q` with `sigma(Q) = p`. `sigma` must be a CCP.
pub fn invert(sigma: &Perm, p: &DyckPath) -> Result<DyckPath> {
    invert_traced(sigma, p).map(|(q, _)| q)
}

/// [`invert`] together with the per-iteration choices.
pub fn invert_traced(sigma: &Perm, p: &DyckPath) -> Result<(DyckPath, Vec<InvertStep>)> {
    if sigma.len() != p.len() {
        return Err(Error::SizeMismatch {
            perm: sigma.len(),
            path: p.len(),
        });
    }
    let cert = ccp_certificate(sigma).ok_or_else(|| Error::NotCcp(sigma.to_string()))?;
    let m = sigma.len();
    let mut partner = vec![0usize; m];
    let mut unpaired = Unpaired::new(m);
    let mut trace = Vec::with_capacity(p.n());

    for k in 1..=m {
        if p.step(k) == Step::Up {
            continue;
        }
        // k >= 2 since a Dyck path starts with an up step.
        let block = cert.blocks[k - 2];
        let x = sigma.at(k);
        let ccw_end = block.end();
        let cw_end = block.start;
        let at_ccw = wrap(ccw_end + 1, m) == x;
        let at_cw = wrap(cw_end + m - 1, m) == x;
        let endpoints: Vec<usize> = [(at_ccw, ccw_end), (at_cw, cw_end)]
            .into_iter()
            .filter_map(|(hit, w)| hit.then_some(w))
            .collect();
        // From the end of the arc walk backwards; from its start walk forwards.
        let from_ccw = at_ccw.then(|| unpaired.prev[x]);
        let from_cw = at_cw.then(|| unpaired.next[x]);
        let (v, v_alt) = match (from_ccw, from_cw) {
            (Some(a), b) => (a, b),
            (None, Some(b)) => (b, None),
            (None, None) => unreachable!("a CCP prefix arc is adjacent to its next entry"),
        };
        debug_assert!(v_alt.is_none_or(|b| b == v), "endpoint choices disagree");
        debug_assert!(block.contains(v) && partner[v - 1] == 0);
        partner[x - 1] = v;
        partner[v - 1] = x;
        unpaired.remove(x);
        unpaired.remove(v);
        trace.push(InvertStep {
            k,
            sigma_k: x,
            endpoints,
            v,
            v_alt,
        });
    }
    let q = Pairing::new(partner)
        .expect("every point is paired")
        .to_path()
        .expect("the constructed pairing is non-crossing");
    Ok((q, trace))
}

/// Brute force: does `sigma` send distinct paths of `D_n` to distinct paths?
pub fn is_injective_on_paths(sigma: &Perm, n: usize) -> Result<bool> {
    is_injective_on_paths_capped(sigma, n, EnumCap::DEFAULT)
}

pub fn is_injective_on_paths_capped(sigma: &Perm, n: usize, cap: EnumCap) -> Result<bool> {
    if sigma.len() != 2 * n {
        return Err(Error::SizeMismatch {
            perm: sigma.len(),
            path: 2 * n,
        });
    }
    let mut seen = HashSet::new();
    for d in iter_paths(n, cap)? {
        if !seen.insert(sigma_path_bits(sigma.images(), d.tunneling().as_slice())) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::enumerate_paths;
    use crate::perm::all_perms;
    use crate::sigma::sigma_path;

    fn perm(s: &str) -> Perm {
        Perm::parse(s).unwrap()
    }

    fn p(s: &str) -> DyckPath {
        DyckPath::parse(s).unwrap()
    }

    /// Prefix sets checked against every arc of the right size.
    fn is_ccp_by_arcs(sigma: &Perm) -> bool {
        let m = sigma.len();
        (1..=m).all(|k| {
            let prefix = sigma.prefix_set(k).unwrap();
            (1..=m).any(|s| {
                Block::new(s, k, m)
                    .elements()
                    .collect::<std::collections::BTreeSet<_>>()
                    == prefix
            })
        })
    }

    /// Walks the arc from the chosen endpoint with a plain paired flag array.
    fn invert_naive(sigma: &Perm, p: &DyckPath, prefer_cw: bool) -> DyckPath {
        let m = sigma.len();
        let mut partner = vec![0usize; m + 1];
        for k in 1..=m {
            if p.step(k) == Step::Up {
                continue;
            }
            let x = sigma.at(k);
            let prefix: Vec<usize> = sigma.images()[..k - 1].to_vec();
            let left = wrap(x + m - 1, m);
            let right = wrap(x + 1, m);
            let has_left = prefix.contains(&left);
            let has_right = prefix.contains(&right);
            let go_right = has_right && (prefer_cw || !has_left);
            let mut w = if go_right { right } else { left };
            while partner[w] != 0 {
                assert!(prefix.contains(&w));
                w = if go_right { wrap(w + 1, m) } else { wrap(w + m - 1, m) };
            }
            assert!(prefix.contains(&w));
            partner[x] = w;
            partner[w] = x;
        }
        Pairing::new(partner[1..].to_vec()).unwrap().to_path().unwrap()
    }

    #[test]
    fn recognition_examples() {
        assert!(is_ccp(&perm("213645")));
        assert!(!is_ccp(&perm("236145")));
        assert!(is_ccp(&Perm::identity(8)));
        assert!(is_ccp(&perm("162354")));
    }

    #[test]
    fn recognition_matches_arc_oracle() {
        for m in [2, 4, 6] {
            for sigma in all_perms(m) {
                assert_eq!(is_ccp(&sigma), is_ccp_by_arcs(&sigma), "{sigma}");
            }
        }
    }

    #[test]
    fn certificate_blocks() {
        let c = ccp_certificate(&perm("162354")).unwrap();
        assert_eq!(c.blocks.len(), 6);
        for (k, b) in c.blocks.iter().enumerate() {
            assert_eq!(b.size, k + 1);
            let set: std::collections::BTreeSet<_> = b.elements().collect();
            assert_eq!(set, c.perm.prefix_set(k + 1).unwrap());
        }
    }

    #[test]
    fn enumeration() {
        let one: Vec<String> = enumerate_ccps(1).unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(one, ["1,2", "2,1"]);
        for n in 1..=6 {
            let all = enumerate_ccps(n).unwrap();
            assert_eq!(BigUint::from(all.len()), count_ccps(n));
            assert!(all.iter().all(is_ccp));
            let distinct: HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
        }
        assert_eq!(count_ccps(3), BigUint::from(96u32));
        assert_eq!(count_ccps(5), BigUint::from(2560u32));
        let filtered = all_perms(6).filter(is_ccp).count();
        assert_eq!(filtered, 96);
    }

    #[test]
    fn invert_examples() {
        let (q, trace) = invert_traced(&perm("162354"), &p("uududd")).unwrap();
        assert_eq!(q.word(), "ududud");
        let rows: Vec<_> = trace.iter().map(|s| (s.k, s.sigma_k, s.v)).collect();
        assert_eq!(rows, vec![(3, 2, 1), (5, 5, 6), (6, 4, 3)]);
        assert_eq!(trace[2].endpoints.len(), 2);
        assert_eq!(trace[2].v_alt, Some(3));
        assert_eq!(invert(&perm("234561"), &p("uududd")).unwrap().word(), "ududud");
        for d in enumerate_paths(4).unwrap() {
            assert_eq!(invert(&Perm::identity(8), &d).unwrap(), d);
        }
    }

    #[test]
    fn invert_errors() {
        assert!(matches!(invert(&perm("236145"), &p("uududd")), Err(Error::NotCcp(_))));
        assert!(matches!(
            invert(&perm("1234"), &p("uududd")),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn invert_round_trips_and_matches_naive() {
        for n in 1..=4 {
            let paths = enumerate_paths(n).unwrap();
            for sigma in enumerate_ccps(n).unwrap() {
                for d in &paths {
                    let (q, trace) = invert_traced(&sigma, d).unwrap();
                    assert_eq!(&sigma_path(&sigma, &q).unwrap(), d);
                    assert_eq!(q, invert_naive(&sigma, d, false));
                    assert_eq!(q, invert_naive(&sigma, d, true));
                    for step in &trace {
                        if step.endpoints.len() == 2 {
                            assert_eq!(step.k, 2 * n);
                            assert_eq!(step.v_alt, Some(step.v));
                        }
                    }
                    let image = sigma_path(&sigma, d).unwrap();
                    assert_eq!(&invert(&sigma, &image).unwrap(), d);
                }
            }
        }
    }

    #[test]
    fn injectivity_examples() {
        assert!(is_injective_on_paths(&perm("213645"), 3).unwrap());
        assert!(!is_injective_on_paths(&perm("236145"), 3).unwrap());
        for n in 1..=6 {
            assert!(is_injective_on_paths(&Perm::identity(2 * n), n).unwrap());
        }
    }

    #[test]
    fn characterization_s6() {
        for sigma in all_perms(6) {
            assert_eq!(is_injective_on_paths(&sigma, 3).unwrap(), is_ccp(&sigma), "{sigma}");
        }
    }
}
