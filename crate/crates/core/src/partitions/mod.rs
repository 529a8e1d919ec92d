//! Two partitions of `S_2n` induced by sigma-paths.
//!
//! * [`generators`]: for a fixed base path `Q`, group permutations by `sigma(Q)`.
//!   Class sizes are `2^n n! L_P`, which sums to `(2n)!` and yields the
//!   height-product identity `sum L_P = (2n-1)!!`.
//! * [`classes`]: group permutations by the whole map `sigma(.)`. Classes are
//!   determined by parity, families and friends, with sizes depending only
//!   on the parity.

pub mod classes;
pub mod generators;
pub mod parity;

pub use classes::{
    class_key, class_size, class_size_for, class_size_histogram, fingerprint, num_classes, parity_census,
    same_class_bruteforce, same_class_witness, BruteClasses, ClassKey,
};
pub use generators::{
    count_generators, double_factorial_identity_check, double_factorial_identity_check_capped, generators,
    generators_capped, l_weight, IdentityCheck, GENERATOR_LIMIT,
};
pub use parity::{
    are_friends, family, family_representative, find_destroying_triple, parity, DestroyingTriple, ParityPair,
};
