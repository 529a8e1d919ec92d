//! Permutation-generated maps on Dyck paths and permuted circular
//! representations.

use crate::dyck::{DyckPath, Step};
use crate::error::{Error, Result};
use crate::pairing::Pairing;
use crate::perm::Perm;

fn check_sizes(sigma: &Perm, d: &DyckPath) -> Result<()> {
    if sigma.len() != d.len() {
        return Err(Error::SizeMismatch {
            perm: sigma.len(),
            path: d.len(),
        });
    }
    Ok(())
}

/// The sigma-path of `d`: step `k` is up iff the tunnel partner of step
/// `sigma_k` has not been read among `sigma_1..sigma_k`.
pub fn sigma_path(sigma: &Perm, d: &DyckPath) -> Result<DyckPath> {
    check_sizes(sigma, d)?;
    Ok(sigma_path_with(sigma, &d.tunneling()))
}

/// [`sigma_path`] against a precomputed tunneling, for hot loops.
pub fn sigma_path_with(sigma: &Perm, tunnel: &Pairing) -> DyckPath {
    let m = sigma.len();
    let mut read = vec![false; m + 1];
    let steps = sigma
        .images()
        .iter()
        .map(|&x| {
            read[x] = true;
            if read[tunnel.partner(x)] {
                Step::Down
            } else {
                Step::Up
            }
        })
        .collect();
    DyckPath::from_steps_unchecked(steps)
}

/// Bit-packed form of [`sigma_path_with`] (bit `k-1` set iff step `k` is down).
pub fn sigma_path_bits(sigma: &[usize], tunnel: &[usize]) -> u64 {
    let mut read: u64 = 0;
    let mut out: u64 = 0;
    for (k, &x) in sigma.iter().enumerate() {
        read |= 1 << (x - 1);
        if read & (1 << (tunnel[x - 1] - 1)) != 0 {
            out |= 1 << k;
        }
    }
    out
}

/// The tunneling of `D^sigma`: every chord `(k, l)` of `d` becomes
/// `(sigma_k, sigma_l)`. The result may cross.
pub fn permuted_rep(d: &DyckPath, sigma: &Perm) -> Result<Pairing> {
    check_sizes(sigma, d)?;
    Ok(sigma.conjugate(&d.tunneling()))
}

/// The path drawn by `D^sigma`, when it is one.
pub fn rep_as_path(d: &DyckPath, sigma: &Perm) -> Result<Option<DyckPath>> {
    let rep = permuted_rep(d, sigma)?;
    if !rep.is_noncrossing() {
        return Ok(None);
    }
    let path = rep.to_path()?;
    debug_assert_eq!(Some(&path), sigma_path(&sigma.inverse(), d).ok().as_ref());
    Ok(Some(path))
}

/// Checks `D^(lam ∘ mu) = (D^mu)^lam`, which requires `D^mu` to be a path.
pub fn compose_action_check(d: &DyckPath, lam: &Perm, mu: &Perm) -> Result<bool> {
    check_sizes(lam, d)?;
    let inner = rep_as_path(d, mu)?
        .ok_or_else(|| Error::HypothesisViolated(format!("{d}^{mu} is not the representation of a path")))?;
    let lhs = permuted_rep(d, &lam.compose(mu))?;
    let rhs = permuted_rep(&inner, lam)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::enumerate_paths;
    use crate::perm::all_perms;
    use proptest::prelude::*;

    fn p(s: &str) -> DyckPath {
        DyckPath::parse(s).unwrap()
    }

    fn perm(s: &str) -> Perm {
        Perm::parse(s).unwrap()
    }

    /// Literal reading of the definition: scan the prefix set each time.
    fn sigma_path_naive(sigma: &Perm, d: &DyckPath) -> String {
        let t = d.tunneling();
        (1..=sigma.len())
            .map(|k| {
                let prefix = &sigma.images()[..k];
                if prefix.contains(&t.partner(sigma.at(k))) {
                    'd'
                } else {
                    'u'
                }
            })
            .collect()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(
            sigma_path(&perm("14285763"), &p("uuddudud")).unwrap().word(),
            "uduuuddd"
        );
        assert_eq!(sigma_path(&perm("162354"), &p("ududud")).unwrap().word(), "uududd");
        assert_eq!(
            permuted_rep(&p("uududd"), &perm("362154")).unwrap().to_string(),
            "5,6,4,3,1,2"
        );
        assert_eq!(
            permuted_rep(&p("ududud"), &perm("234561")).unwrap().to_string(),
            "6,3,2,5,4,1"
        );
    }

    #[test]
    fn identity_fixes_paths() {
        for n in 1..=5 {
            let id = Perm::identity(2 * n);
            for d in enumerate_paths(n).unwrap() {
                assert_eq!(sigma_path(&id, &d).unwrap(), d);
                assert_eq!(permuted_rep(&d, &id).unwrap(), d.tunneling());
                assert_eq!(rep_as_path(&d, &id).unwrap(), Some(d.clone()));
            }
        }
    }

    #[test]
    fn rep_as_path_examples() {
        assert_eq!(rep_as_path(&p("uududd"), &perm("362154")).unwrap(), None);
        assert_eq!(rep_as_path(&p("ududud"), &perm("234561")).unwrap(), Some(p("uududd")));
    }

    #[test]
    fn size_mismatch() {
        assert_eq!(
            sigma_path(&perm("1234"), &p("ud")),
            Err(Error::SizeMismatch { perm: 4, path: 2 })
        );
        assert!(permuted_rep(&p("ud"), &perm("123")).is_err());
    }

    #[test]
    fn compose_action_examples() {
        let d = p("ududud");
        let id = Perm::identity(6);
        for lam in all_perms(6).step_by(37) {
            assert!(compose_action_check(&d, &lam, &id).unwrap());
        }
        let rot = perm("234561");
        assert!(compose_action_check(&d, &rot, &rot).unwrap());
        let rot2 = rot.compose(&rot);
        assert!(compose_action_check(&p("uuuddd"), &rot2, &rot).unwrap());
        assert!(matches!(
            compose_action_check(&p("uududd"), &rot, &perm("362154")),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn exhaustive_small_n() {
        for n in 1..=3 {
            let paths = enumerate_paths(n).unwrap();
            for sigma in all_perms(2 * n) {
                for d in &paths {
                    let out = sigma_path(&sigma, d).unwrap();
                    assert_eq!(out.word(), sigma_path_naive(&sigma, d));
                    let bits = sigma_path_bits(sigma.images(), d.tunneling().as_slice());
                    assert_eq!(bits, out.to_bits());
                    if let Some(q) = rep_as_path(d, &sigma).unwrap() {
                        assert_eq!(q, sigma_path(&sigma.inverse(), d).unwrap());
                    }
                }
            }
        }
    }

    fn arb_case() -> impl Strategy<Value = (Perm, DyckPath)> {
        (1usize..=8)
            .prop_flat_map(|n| {
                let m = 2 * n;
                (
                    Just((1..=m).collect::<Vec<_>>()).prop_shuffle(),
                    proptest::collection::vec(any::<bool>(), m),
                )
            })
            .prop_map(|(images, coins)| (Perm::new(images).unwrap(), random_path(&coins)))
    }

    /// Turns a coin sequence into a Dyck path by clamping at the axis and the budget.
    pub(crate) fn random_path(coins: &[bool]) -> DyckPath {
        let n = coins.len() / 2;
        let (mut ups, mut downs) = (0, 0);
        let steps = coins
            .iter()
            .map(|&c| {
                let up = ups < n && (c || ups == downs);
                if up {
                    ups += 1;
                    Step::Up
                } else {
                    downs += 1;
                    Step::Down
                }
            })
            .collect();
        DyckPath::from_steps(steps).unwrap()
    }

    proptest! {
        #[test]
        fn sigma_path_is_dyck((sigma, d) in arb_case()) {
            let out = sigma_path(&sigma, &d).unwrap();
            prop_assert!(DyckPath::from_steps(out.steps().to_vec()).is_ok());
            prop_assert_eq!(out.up_positions().len(), d.n());
        }

        #[test]
        fn conjugation_identity((sigma, d) in arb_case()) {
            let rep = permuted_rep(&d, &sigma).unwrap();
            let t = d.tunneling();
            let inv = sigma.inverse();
            for x in 1..=d.len() {
                prop_assert_eq!(rep.partner(x), sigma.at(t.partner(inv.at(x))));
            }
        }
    }
}
