//! Permutation-generated maps on Dyck paths.
//!
//! A permutation `sigma` of `[2n]` turns a Dyck path `D` into a new path
//! `sigma(D)` by reading the steps of `D` in the order `sigma_1, sigma_2, ...`
//! and writing an up step when a tunnel is opened, a down step when it is
//! closed. The crate provides:
//!
//! * [`dyck`] and [`pairing`]: paths, tunnelings, chord diagrams, enumeration.
//! * [`sigma`]: the map itself and permuted circular representations.
//! * [`ccp`]: circularly-connected permutations, the generators of bijective
//!   maps, with an inverse algorithm.
//! * [`partitions`]: the two partitions of `S_2n` induced by the maps and
//!   their closed-form class sizes.
//! * [`dihedral`]: the rotation/reflection group acting on chord diagrams.
//! * [`stats`]: unpaired steps in circular windows and their equidistribution
//!   with heights.
//!
//! ```
//! use sigma_dyck::{sigma_path, DyckPath, Perm};
//!
//! let sigma = Perm::parse("1,4,2,8,5,7,6,3").unwrap();
//! let d = DyckPath::parse("uuddudud").unwrap();
//! assert_eq!(sigma_path(&sigma, &d).unwrap().word(), "uduuuddd");
//! ```

pub mod ccp;
pub mod cli;
pub mod count;
pub mod dihedral;
pub mod dyck;
pub mod error;
pub mod pairing;
pub mod partitions;
pub mod perm;
pub mod sigma;
pub mod stats;
pub mod verify;

pub use ccp::{count_ccps, enumerate_ccps, invert, is_ccp, is_injective_on_paths};
pub use dyck::{catalan, enumerate_paths, DyckPath, EnumCap, Step};
pub use error::{Error, Result};
pub use pairing::{Block, Pairing};
pub use perm::Perm;
pub use sigma::{compose_action_check, permuted_rep, rep_as_path, sigma_path};
