//! Permutations of `[m]` in 1-based one-line notation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{check_index, Error, Result};
use crate::pairing::{write_list, Pairing};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        if m == 0 {
            return Err(Error::InvalidPerm("empty permutation".into()));
        }
        let mut seen = vec![false; m];
        for &x in &images {
            if x == 0 || x > m {
                return Err(Error::InvalidPerm(format!("entry {x} outside 1..={m}")));
            }
            if std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::InvalidPerm(format!("entry {x} repeated")));
            }
        }
        Ok(Perm { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Perm::new(images.clone()).is_ok());
        Perm { images }
    }

    /// Comma-separated entries, or a bare digit string when every entry is a
    /// single digit (`14285763`).
    pub fn parse(text: &str) -> Result<Self> {
        Perm::new(parse_list(text).map_err(Error::InvalidPerm)?)
    }

    pub fn identity(m: usize) -> Self {
        Perm {
            images: (1..=m).collect(),
        }
    }

    /// Number of points permuted.
    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `sigma_k` for 1-based `k`.
    pub fn at(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Perm { images: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Perm {
            images: other.images.iter().map(|&x| self.at(x)).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Perm {
        (0..e).fold(Perm::identity(self.len()), |acc, _| self.compose(&acc))
    }

    /// The prefix set `{sigma_1, ..., sigma_k}`.
    pub fn prefix_set(&self, k: usize) -> Result<BTreeSet<usize>> {
        check_index(k, 1, self.len())?;
        Ok(self.images[..k].iter().copied().collect())
    }

    /// Conjugates a pairing: `self ∘ t ∘ self^{-1}`, i.e. each chord
    /// `(k, l)` becomes `(self(k), self(l))`.
    pub fn conjugate(&self, t: &Pairing) -> Pairing {
        assert_eq!(self.len(), t.len());
        let mut partner = vec![0; self.len()];
        for k in 1..=self.len() {
            partner[self.at(k) - 1] = self.at(t.partner(k));
        }
        Pairing::from_partner_unchecked(partner)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.images)
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Perm::parse(s)
    }
}

/// All permutations of `[m]` in lexicographic order.
pub fn all_perms(m: usize) -> impl Iterator<Item = Perm> {
    (1..=m).permutations(m).map(|images| Perm { images })
}

pub(crate) fn parse_list(text: &str) -> std::result::Result<Vec<usize>, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("empty list".into());
    }
    if !text.contains(',') && text.chars().all(|c| c.is_ascii_digit()) {
        return Ok(text.chars().map(|c| c as usize - '0' as usize).collect());
    }
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad entry {tok:?}: {e}"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_forms() {
        let a = Perm::parse("1,4,2,8,5,7,6,3").unwrap();
        assert_eq!(Perm::parse("14285763").unwrap(), a);
        assert_eq!(a.to_string(), "1,4,2,8,5,7,6,3");
        assert!(Perm::parse("1,1").is_err());
        assert!(Perm::parse("0,1").is_err());
        assert!(Perm::parse("1,x").is_err());
        assert_eq!(Perm::parse("10,9,8,7,6,5,4,3,2,1").unwrap().len(), 10);
    }

    #[test]
    fn prefix_sets() {
        let s = Perm::parse("14285763").unwrap();
        assert_eq!(s.prefix_set(2).unwrap(), BTreeSet::from([1, 4]));
        assert_eq!(s.prefix_set(8).unwrap(), (1..=8).collect());
        assert_eq!(
            Perm::parse("162354").unwrap().prefix_set(4).unwrap(),
            BTreeSet::from([1, 6, 2, 3])
        );
        assert!(s.prefix_set(0).is_err());
        assert!(s.prefix_set(9).is_err());
    }

    #[test]
    fn group_laws() {
        let a = Perm::parse("362154").unwrap();
        let b = Perm::parse("234561").unwrap();
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(b.compose(&a).at(1), b.at(a.at(1)));
        assert!(b.pow(6).is_identity());
        assert_eq!(all_perms(4).count(), 24);
    }

    fn arb_perm() -> impl Strategy<Value = Perm> {
        (1usize..=12)
            .prop_flat_map(|m| Just((1..=m).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Perm::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn inverse_and_composition(a in arb_perm(), k in 0usize..5) {
            let m = a.len();
            prop_assert!(a.compose(&a.inverse()).is_identity());
            prop_assert!(a.inverse().compose(&a).is_identity());
            let p = a.pow(k);
            prop_assert_eq!(p.compose(&a), a.pow(k + 1));
            for x in 1..=m {
                prop_assert_eq!(a.inverse().at(a.at(x)), x);
            }
        }

        #[test]
        fn prefix_sets_grow_by_one(a in arb_perm()) {
            for k in 1..=a.len() {
                let s = a.prefix_set(k).unwrap();
                prop_assert_eq!(s.len(), k);
                prop_assert!(s.contains(&a.at(k)));
            }
        }
    }
}
