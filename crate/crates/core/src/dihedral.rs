//! Rotations and reflections of the circle `[2n]` acting on circular
//! representations.
//!
//! `rho_k = k + 1` and `omega_k = 2n - k` (both mod `2n`, into `[1, 2n]`).
//! These generate a group of `4n` permutations for `n >= 2` (the two
//! generators coincide with the identity or each other when `n = 1`), and
//! they are exactly the permutations that send every path's chord diagram
//! to another path's chord diagram.

use std::collections::BTreeSet;

use crate::dyck::{iter_paths, DyckPath, EnumCap};
use crate::error::Result;
use crate::pairing::wrap;
use crate::perm::Perm;
use crate::sigma::{permuted_rep, rep_as_path};

pub fn rho(n: usize) -> Perm {
    let m = 2 * n;
    Perm::from_images_unchecked((1..=m).map(|k| wrap(k + 1, m)).collect())
}

pub fn omega(n: usize) -> Perm {
    let m = 2 * n;
    Perm::from_images_unchecked((1..=m).map(|k| wrap(m + m - k, m)).collect())
}

/// `rho^rotation` or `rho^rotation ∘ omega`, kept in normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElement {
    pub n: usize,
    pub rotation: usize,
    pub reflected: bool,
}

impl DihedralElement {
    pub fn identity(n: usize) -> Self {
        DihedralElement {
            n,
            rotation: 0,
            reflected: false,
        }
    }

    pub fn new(n: usize, rotation: usize, reflected: bool) -> Self {
        DihedralElement {
            n,
            rotation: rotation % (2 * n),
            reflected,
        }
    }

    /// `self ∘ other`, using `omega ∘ rho^r = rho^{-r} ∘ omega`.
    pub fn compose(self, other: DihedralElement) -> DihedralElement {
        let m = 2 * self.n;
        let r = if self.reflected {
            m - other.rotation % m
        } else {
            other.rotation
        };
        DihedralElement::new(self.n, self.rotation + r, self.reflected ^ other.reflected)
    }

    pub fn inverse(self) -> DihedralElement {
        let m = 2 * self.n;
        if self.reflected {
            self
        } else {
            DihedralElement::new(self.n, m - self.rotation, false)
        }
    }

    pub fn to_perm(self) -> Perm {
        let m = 2 * self.n;
        let images = (1..=m)
            .map(|k| {
                let base = if self.reflected { wrap(m + m - k, m) } else { k };
                wrap(base + self.rotation, m)
            })
            .collect();
        Perm::from_images_unchecked(images)
    }
}

/// All normal forms, rotations first.
pub fn elements(n: usize) -> Vec<DihedralElement> {
    [false, true]
        .into_iter()
        .flat_map(|f| (0..2 * n).map(move |r| DihedralElement::new(n, r, f)))
        .collect()
}

/// The distinct permutations generated by [`rho`] and [`omega`].
pub fn dihedral_group(n: usize) -> BTreeSet<Perm> {
    elements(n).into_iter().map(DihedralElement::to_perm).collect()
}

/// First path whose representation under `g` has crossing chords.
pub fn crossing_witness(g: &Perm, n: usize, cap: EnumCap) -> Result<Option<DyckPath>> {
    for d in iter_paths(n, cap)? {
        if !permuted_rep(&d, g)?.is_noncrossing() {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// True iff `D^g` is a path for every `D` in `D_n`.
pub fn preserves_paths(g: &Perm, n: usize) -> Result<bool> {
    Ok(crossing_witness(g, n, EnumCap::DEFAULT)?.is_none())
}

/// `{ path of D^g : g in G }`.
pub fn action_orbit(d: &DyckPath) -> BTreeSet<DyckPath> {
    dihedral_group(d.n())
        .iter()
        .map(|g| {
            rep_as_path(d, g)
                .expect("sizes agree")
                .expect("rotations and reflections keep chords non-crossing")
        })
        .collect()
}

/// Orbits of the action partitioning `D_n`, each listed in path order.
pub fn orbits(n: usize, cap: EnumCap) -> Result<Vec<BTreeSet<DyckPath>>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for d in iter_paths(n, cap)? {
        if seen.contains(&d) {
            continue;
        }
        let orbit = action_orbit(&d);
        seen.extend(orbit.iter().cloned());
        out.push(orbit);
    }
    Ok(out)
}
