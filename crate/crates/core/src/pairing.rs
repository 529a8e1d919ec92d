//! Fixed-point-free involutions on `[2n]` (chord diagrams) and circular blocks.

use std::fmt;
use std::str::FromStr;

use crate::dyck::{DyckPath, Step};
use crate::error::{Error, Result};
use crate::perm::parse_list;

/// A perfect matching of `[2n]`, stored as the 1-based partner of each point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pairing {
    partner: Vec<usize>,
}

impl Pairing {
    /// Validates that `partner` (1-based images) is a fixed-point-free involution.
    pub fn new(partner: Vec<usize>) -> Result<Self> {
        let m = partner.len();
        if m == 0 || m % 2 == 1 {
            return Err(Error::InvalidPairing(format!(
                "needs an even positive number of points, got {m}"
            )));
        }
        for (i, &p) in partner.iter().enumerate() {
            let k = i + 1;
            if p == 0 || p > m {
                return Err(Error::InvalidPairing(format!("image {p} of {k} outside 1..={m}")));
            }
            if p == k {
                return Err(Error::InvalidPairing(format!("{k} is a fixed point")));
            }
            if partner[p - 1] != k {
                return Err(Error::InvalidPairing(format!(
                    "{k} -> {p} but {p} -> {}",
                    partner[p - 1]
                )));
            }
        }
        Ok(Pairing { partner })
    }

    pub(crate) fn from_partner_unchecked(partner: Vec<usize>) -> Self {
        debug_assert!(Pairing::new(partner.clone()).is_ok());
        Pairing { partner }
    }

    /// Builds the pairing from a list of chords.
    pub fn from_chords(m: usize, chords: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![0usize; m];
        for &(a, b) in chords {
            if a == 0 || b == 0 || a > m || b > m {
                return Err(Error::InvalidPairing(format!("chord ({a},{b}) outside 1..={m}")));
            }
            partner[a - 1] = b;
            partner[b - 1] = a;
        }
        Pairing::new(partner)
    }

    pub fn parse(text: &str) -> Result<Self> {
        Pairing::new(parse_list(text).map_err(Error::InvalidPairing)?)
    }

    /// Number of points, `2n`.
    pub fn len(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    /// Partner of the 1-based point `k`.
    pub fn partner(&self, k: usize) -> usize {
        self.partner[k - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.partner
    }

    /// Chords `(k, l)` with `k < l`, sorted by `k`.
    pub fn chords(&self) -> Vec<(usize, usize)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|(i, &p)| i + 1 < p)
            .map(|(i, &p)| (i + 1, p))
            .collect()
    }

    /// A pair of crossing chords, if any.
    ///
    /// Sweeps the points in order with a stack of open chords; a closing
    /// point that does not close the most recent open chord crosses it.
    pub fn crossing(&self) -> Option<((usize, usize), (usize, usize))> {
        let mut open: Vec<usize> = Vec::with_capacity(self.n());
        for k in 1..=self.len() {
            let p = self.partner(k);
            if p > k {
                open.push(k);
            } else {
                let top = open.pop().expect("each closing point has an opener");
                if top != p {
                    return Some(((p, k), (top, self.partner(top))));
                }
            }
        }
        None
    }

    /// True iff no two chords cross on the circle.
    pub fn is_noncrossing(&self) -> bool {
        self.crossing().is_none()
    }

    /// The unique Dyck path whose tunneling is this pairing.
    pub fn to_path(&self) -> Result<DyckPath> {
        if let Some(((a, b), (c, d))) = self.crossing() {
            return Err(Error::CrossingPairing(a, b, c, d));
        }
        let steps = (1..=self.len())
            .map(|k| if k < self.partner(k) { Step::Up } else { Step::Down })
            .collect();
        Ok(DyckPath::from_steps_unchecked(steps))
    }
}

/// Free-function form of [`Pairing::is_noncrossing`].
pub fn is_noncrossing(t: &Pairing) -> bool {
    t.is_noncrossing()
}

pub fn path_from_tunneling(t: &Pairing) -> Result<DyckPath> {
    t.to_path()
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.partner)
    }
}

impl FromStr for Pairing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Pairing::parse(s)
    }
}

pub(crate) fn write_list(f: &mut fmt::Formatter<'_>, items: &[usize]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// The circular arc `{start, start+1, ..., start+size-1}` of `[modulus]`,
/// wrapping past `modulus` back to 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Block {
    pub start: usize,
    pub size: usize,
    pub modulus: usize,
}

impl Block {
    pub fn new(start: usize, size: usize, modulus: usize) -> Self {
        debug_assert!((1..=modulus).contains(&start) && size <= modulus);
        Block { start, size, modulus }
    }

    pub fn contains(&self, x: usize) -> bool {
        let offset = (x + self.modulus - self.start) % self.modulus;
        offset < self.size
    }

    /// Last element clockwise. Meaningless for an empty block.
    pub fn end(&self) -> usize {
        wrap(self.start + self.size - 1, self.modulus)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.size).map(move |i| wrap(self.start + i, self.modulus))
    }

    /// The arc running clockwise from `a` to `b`, both included.
    pub fn between(a: usize, b: usize, modulus: usize) -> Self {
        let size = (b + modulus - a) % modulus + 1;
        Block::new(a, size, modulus)
    }
}

/// Maps any integer representative into `[1, m]`.
pub fn wrap(x: usize, m: usize) -> usize {
    (x + m - 1) % m + 1
}

/// Signed variant of [`wrap`].
pub fn wrap_signed(x: i64, m: usize) -> usize {
    ((x - 1).rem_euclid(m as i64) + 1) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Every chord pair checked against the interleaving condition.
    fn crosses_by_pairs(t: &Pairing) -> bool {
        let ch = t.chords();
        ch.iter()
            .any(|&(a, b)| ch.iter().any(|&(c, d)| a < c && c < b && b < d))
    }

    #[test]
    fn noncrossing_examples() {
        assert!(Pairing::parse("2,1,4,3,6,5").unwrap().is_noncrossing());
        assert!(!Pairing::parse("5,6,4,3,1,2").unwrap().is_noncrossing());
        assert!(Pairing::parse("2,1").unwrap().is_noncrossing());
    }

    #[test]
    fn closure_definition_agrees() {
        // A chord (c, t(c)) is non-crossing iff both arcs it cuts are closed under t.
        let closed = |t: &Pairing| {
            (1..=t.len()).all(|c| {
                let p = t.partner(c);
                [Block::between(c, p, t.len()), Block::between(p, c, t.len())]
                    .iter()
                    .all(|b| b.elements().all(|x| b.contains(t.partner(x))))
            })
        };
        for t in all_pairings(8) {
            assert_eq!(t.is_noncrossing(), closed(&t), "{t}");
            assert_eq!(t.is_noncrossing(), !crosses_by_pairs(&t), "{t}");
        }
    }

    pub(crate) fn all_pairings(m: usize) -> Vec<Pairing> {
        fn go(partner: &mut Vec<usize>, out: &mut Vec<Pairing>) {
            let Some(i) = partner.iter().position(|&p| p == 0) else {
                out.push(Pairing::new(partner.clone()).unwrap());
                return;
            };
            for j in i + 1..partner.len() {
                if partner[j] == 0 {
                    partner[i] = j + 1;
                    partner[j] = i + 1;
                    go(partner, out);
                    partner[i] = 0;
                    partner[j] = 0;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut vec![0; m], &mut out);
        out
    }

    #[test]
    fn pairing_count_is_double_factorial() {
        assert_eq!(all_pairings(8).len(), 105);
        assert_eq!(all_pairings(8).iter().filter(|t| t.is_noncrossing()).count(), 14);
    }

    #[test]
    fn to_path_examples() {
        assert_eq!(
            Pairing::parse("2,1,4,3,6,5").unwrap().to_path().unwrap().word(),
            "ududud"
        );
        assert_eq!(Pairing::parse("2,1").unwrap().to_path().unwrap().word(), "ud");
        assert_eq!(
            Pairing::parse("8,3,2,7,6,5,4,1").unwrap().to_path().unwrap().word(),
            "uuduuddd"
        );
        assert!(matches!(
            Pairing::parse("5,6,4,3,1,2").unwrap().to_path(),
            Err(Error::CrossingPairing(..))
        ));
    }

    #[test]
    fn invalid_pairings() {
        assert!(Pairing::parse("1,2").is_err());
        assert!(Pairing::parse("2,3,1").is_err());
        assert!(Pairing::parse("2,1,4").is_err());
        assert!(Pairing::parse("3,1,2,4").is_err());
    }

    #[test]
    fn blocks() {
        let b = Block::new(5, 3, 6);
        assert_eq!(b.elements().collect::<Vec<_>>(), vec![5, 6, 1]);
        assert!(b.contains(1) && !b.contains(2));
        assert_eq!(b.end(), 1);
        assert_eq!(Block::between(6, 2, 6).elements().collect::<Vec<_>>(), vec![6, 1, 2]);
        assert_eq!(wrap(0, 6), 6);
        assert_eq!(wrap_signed(-1, 6), 5);
    }

    proptest! {
        #[test]
        fn block_membership_matches_elements(m in 1usize..20, start in 1usize..20, size in 0usize..20) {
            let (start, size) = ((start - 1) % m + 1, size % (m + 1));
            let b = Block::new(start, size, m);
            let listed: Vec<usize> = b.elements().collect();
            prop_assert_eq!(listed.len(), size);
            for x in 1..=m {
                prop_assert_eq!(b.contains(x), listed.contains(&x));
            }
            if size > 0 {
                prop_assert_eq!(Block::between(b.start, b.end(), m), b);
            }
        }

        #[test]
        fn wrap_agrees_with_signed(x in 0usize..1000, m in 1usize..30) {
            let w = wrap(x, m);
            prop_assert!((1..=m).contains(&w));
            prop_assert_eq!(w % m, x % m);
            prop_assert_eq!(wrap_signed(x as i64, m), w);
            prop_assert_eq!(wrap_signed(x as i64 - 7 * m as i64, m), w);
        }
    }
}
