//! Invariant suites run by `sigma-dyck verify`.
//!
//! Each suite checks one family of properties at a fixed half-length `n`,
//! exhaustively where the search space is small and on a seeded random
//! sample otherwise. Failures carry concrete counterexamples.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::ccp::{count_ccps, invert_traced, is_ccp, iter_ccps};
use crate::count::{catalan, factorial};
use crate::dihedral::{crossing_witness, dihedral_group, omega, rho};
use crate::dyck::{enumerate_paths_capped, DyckPath, EnumCap};
use crate::error::Result;
use crate::pairing::Pairing;
use crate::partitions::{
    class_key, class_size, count_generators, double_factorial_identity_check_capped, family, find_destroying_triple,
    generators_capped, num_classes, parity, BruteClasses,
};
use crate::perm::{all_perms, Perm};
use crate::sigma::{rep_as_path, sigma_path, sigma_path_with};
use crate::stats::{equidistribution, height_histogram, height_level_count, umax_histograms};

/// Largest `n` for which suites sweep all of `S_2n`.
pub const EXHAUSTIVE_PERM_N: usize = 4;
/// Random permutations drawn when `S_2n` is too large to sweep.
pub const SAMPLE_SIZE: usize = 10_000;
pub const SEED: u64 = 0x5eed_d7c4;

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub results: Value,
    pub witnesses: Vec<Value>,
}

impl SuiteOutcome {
    fn new(name: &'static str, results: Value, witnesses: Vec<Value>) -> Self {
        SuiteOutcome {
            name,
            passed: witnesses.is_empty(),
            results,
            witnesses,
        }
    }
}

pub const SUITES: &[&str] = &[
    "dyck",
    "noncrossing",
    "sigma",
    "ccp",
    "identity",
    "generators",
    "classes",
    "family",
    "dihedral",
    "stats",
];

pub fn run_suite(name: &str, n: usize, cap: EnumCap) -> Result<Option<SuiteOutcome>> {
    let out = match name {
        "dyck" => dyck_suite(n, cap)?,
        "noncrossing" => noncrossing_suite(n),
        "sigma" => sigma_suite(n, cap)?,
        "ccp" => ccp_suite(n, cap)?,
        "identity" => identity_suite(n, cap)?,
        "generators" => generators_suite(n, cap)?,
        "classes" => classes_suite(n, cap)?,
        "family" => family_suite(n)?,
        "dihedral" => dihedral_suite(n, cap)?,
        "stats" => stats_suite(n, cap)?,
        _ => return Ok(None),
    };
    Ok(Some(out))
}

pub fn run_all(n: usize, cap: EnumCap) -> Result<Vec<SuiteOutcome>> {
    SUITES
        .iter()
        .map(|s| run_suite(s, n, cap).map(|o| o.expect("registered suite")))
        .collect()
}

/// All of `S_2n` for small `n`, else a seeded sample.
fn perm_pool(n: usize) -> (Vec<Perm>, bool) {
    let m = 2 * n;
    if n <= EXHAUSTIVE_PERM_N {
        return (all_perms(m).collect(), true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ n as u64);
    let mut base: Vec<usize> = (1..=m).collect();
    let pool = (0..SAMPLE_SIZE)
        .map(|_| {
            base.shuffle(&mut rng);
            Perm::new(base.clone()).expect("shuffle of 1..=m")
        })
        .collect();
    (pool, false)
}

fn dyck_suite(n: usize, cap: EnumCap) -> Result<SuiteOutcome> {
    let paths = enumerate_paths_capped(n, cap)?;
    let mut bad = Vec::new();
    for d in &paths {
        let t = d.tunneling();
        let round_trip = t.to_path().ok().as_ref() == Some(d);
        let heights = d.heights();
        let gaps_ok = t.chords().iter().all(|&(k, l)| (l - k) % 2 == 1);
        if !round_trip || !t.is_noncrossing() || heights[d.len()] != 0 || !gaps_ok {
            bad.push(json!({ "path": d.word(), "tunneling": t.to_string() }));
        }
    }
    let count_ok = BigUint::from(paths.len()) == catalan(n);
    if !count_ok {
        bad.push(json!({ "paths": paths.len(), "catalan": catalan(n).to_string() }));
    }
    Ok(SuiteOutcome::new("dyck", json!({ "paths": paths.len() }), bad))
}

fn all_pairings(m: usize) -> Vec<Pairing> {
    fn go(partner: &mut Vec<usize>, out: &mut Vec<Pairing>) {
        let Some(i) = partner.iter().position(|&p| p == 0) else {
            out.push(Pairing::new(partner.clone()).expect("complete matching"));
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

/// Stack recognition against the all-pairs interleaving test.
fn noncrossing_suite(n: usize) -> SuiteOutcome {
    if n > 6 {
        return SuiteOutcome::new("noncrossing", json!({ "skipped": "n > 6" }), vec![]);
    }
    let mut bad = Vec::new();
    let mut noncrossing = 0usize;
    let pairings = all_pairings(2 * n);
    for t in &pairings {
        let ch = t.chords();
        let crosses = ch
            .iter()
            .any(|&(a, b)| ch.iter().any(|&(c, d)| a < c && c < b && b < d));
        if t.is_noncrossing() == crosses {
            bad.push(json!({ "pairing": t.to_string() }));
        }
        if !crosses {
            noncrossing += 1;
        }
    }
    if BigUint::from(noncrossing) != catalan(n) {
        bad.push(json!({ "noncrossing": noncrossing, "catalan": catalan(n).to_string() }));
    }
    SuiteOutcome::new(
        "noncrossing",
        json!({ "pairings": pairings.len(), "noncrossing": noncrossing }),
        bad,
    )
}

fn sigma_suite(n: usize, cap: EnumCap) -> Result<SuiteOutcome> {
    let paths = enumerate_paths_capped(n, cap)?;
    let (pool, exhaustive) = perm_pool(n);
    let bad: Vec<Value> = pool
        .par_iter()
        .flat_map_iter(|sigma| {
            let inv = sigma.inverse();
            paths.iter().filter_map(move |d| {
                let out = sigma_path(sigma, d).ok()?;
                let dyck = DyckPath::from_steps(out.steps().to_vec()).is_ok();
                let rep_consistent = match rep_as_path(d, sigma).ok()? {
                    Some(q) => sigma_path(&inv, d).ok()? == q,
                    None => true,
                };
                (!dyck || !rep_consistent).then(|| json!({ "sigma": sigma.to_string(), "path": d.word() }))
            })
        })
        .collect();
    Ok(SuiteOutcome::new(
        "sigma",
        json!({ "perms": pool.len(), "exhaustive": exhaustive, "paths": paths.len() }),
        bad,
    ))
}

fn ccp_suite(n: usize, cap: EnumCap) -> Result<SuiteOutcome> {
    let paths = enumerate_paths_capped(n, cap)?;
    let tunnels: Vec<Pairing> = paths.iter().map(|d| d.tunneling()).collect();
    let mut bad = Vec::new();

    let ccps: Vec<Perm> = iter_ccps(n, cap)?.collect();
    if BigUint::from(ccps.len()) != count_ccps(n) {
        bad.push(json!({ "enumerated": ccps.len(), "formula": count_ccps(n).to_string() }));
    }

    // Characterization: injective on D_n exactly for CCPs.
    let (pool, exhaustive) = perm_pool(n);
    let mismatches: Vec<Value> = pool
        .par_iter()
        .chain(ccps.par_iter())
        .filter_map(|sigma| {
            let images: HashSet<DyckPath> = tunnels.iter().map(|t| sigma_path_with(sigma, t)).collect();
            let injective = images.len() == paths.len();
            (injective != is_ccp(sigma)).then(|| json!({ "sigma": sigma.to_string(), "injective": injective }))
        })
        .collect();
    bad.extend(mismatches);

    // Inverse round trip and the last-iteration endpoint agreement.
    if n <= 6 {
        let failures: Vec<Value> = ccps
            .par_iter()
            .flat_map_iter(|sigma| {
                paths.iter().filter_map(move |p| {
                    let (q, trace) = invert_traced(sigma, p).ok()?;
                    let back = sigma_path(sigma, &q).ok()?;
                    let agree = trace.iter().all(|s| s.v_alt.is_none_or(|alt| alt == s.v));
                    (back != *p || !agree).then(|| json!({ "sigma": sigma.to_string(), "path": p.word() }))
                })
            })
            .collect();
        bad.extend(failures);
    }
    Ok(SuiteOutcome::new(
        "ccp",
        json!({ "ccps": ccps.len(), "perms_checked": pool.len(), "exhaustive": exhaustive }),
        bad,
    ))
}

fn identity_suite(n: usize, cap: EnumCap) -> Result<SuiteOutcome> {
    let c = double_factorial_identity_check_capped(n, cap)?;
    let results = json!({ "lhs": c.lhs.to_string(), "rhs": c.rhs.to_string() });
    let bad = if c.ok { vec![] } else { vec![results.clone()] };
    Ok(SuiteOutcome::new("identity", results, bad))
}

fn generators_suite(n: usize, cap: EnumCap) -> Result<SuiteOutcome> {
    let paths = enumerate_paths_capped(n, cap)?;
    let mut bad = Vec::new();
    let total: BigUint = paths.iter().map(count_generators).sum();
    if total != factorial(2 * n) {
        bad.push(json!({ "sum": total.to_string(), "factorial": factorial(2 * n).to_string() }));
    }
    if n > EXHAUSTIVE_PERM_N {
        return Ok(SuiteOutcome::new(
            "generators",
            json!({ "sum": total.to_string(), "brute_force": false }),
            bad,
        ));
    }
    let q = &paths[0];
    let tq = q.tunneling();
    let mut brute: HashMap<DyckPath, usize> = HashMap::new();
    for sigma in all_perms(2 * n) {
        *brute.entry(sigma_path_with(&sigma, &tq)).or_default() += 1;
    }
    for p in &paths {
        let expect = count_generators(p);
        let got = brute.get(p).copied().unwrap_or(0);
        let listed = generators_capped(p, q, cap)?;
        let sound = listed.iter().all(|s| sigma_path_with(s, &tq) == *p);
        if BigUint::from(got) != expect || BigUint::from(listed.len()) != expect || !sound {
            bad.push(json!({ "p": p.word(), "q": q.word(), "formula": expect.to_string(), "brute": got, "listed": listed.len() }));
        }
    }
    Ok(SuiteOutcome::new(
        "generators",
        json!({ "sum": total.to_string(), "brute_force": true, "q": q.word() }),
        bad,
    ))
}

fn classes_suite(n: usize, cap: EnumCap) -> Result<SuiteOutcome> {
    if n > EXHAUSTIVE_PERM_N {
        return Ok(SuiteOutcome::new(
            "classes",
            json!({ "skipped": "n > 4", "formula": num_classes(n).to_string() }),
            vec![],
        ));
    }
    let classes = BruteClasses::compute(n, cap)?;
    let mut bad = Vec::new();
    if BigUint::from(classes.count()) != num_classes(n) {
        bad.push(json!({ "brute": classes.count(), "formula": num_classes(n).to_string() }));
    }
    if n >= 3 {
        let mut key_owner = HashMap::new();
        for (id, class) in classes.classes.iter().enumerate() {
            let par = parity(&class[0]);
            if class.len() < 4 || class.len() % 4 != 0 {
                bad.push(json!({ "class_of": class[0].to_string(), "size": class.len() }));
            }
            for s in class {
                if parity(s) != par {
                    bad.push(json!({ "parity_split": [class[0].to_string(), s.to_string()] }));
                }
                if class_size(s)? != BigUint::from(class.len()) {
                    bad.push(
                        json!({ "sigma": s.to_string(), "size": class.len(), "formula": class_size(s)?.to_string() }),
                    );
                }
                if let Some(prev) = key_owner.insert(class_key(s)?, id) {
                    if prev != id {
                        bad.push(json!({ "key_collision": s.to_string() }));
                    }
                }
            }
            // A destroying triple separates same-parity permutations.
            if class.len() >= 2 && find_destroying_triple(&class[0], &class[class.len() - 1]).is_some() {
                bad.push(
                    json!({ "destroying_within_class": [class[0].to_string(), class[class.len() - 1].to_string()] }),
                );
            }
        }
        if key_owner.values().collect::<HashSet<_>>().len() != classes.count() || key_owner.len() != classes.count() {
            bad.push(json!({ "keys": key_owner.len(), "classes": classes.count() }));
        }
    }
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for c in &classes.classes {
        *sizes.entry(c.len()).or_default() += 1;
    }
    Ok(SuiteOutcome::new(
        "classes",
        json!({ "classes": classes.count(), "size_histogram": sizes }),
        bad,
    ))
}

fn family_suite(n: usize) -> Result<SuiteOutcome> {
    if !(3..=EXHAUSTIVE_PERM_N).contains(&n) {
        return Ok(SuiteOutcome::new(
            "family",
            json!({ "skipped": "needs 3 <= n <= 4" }),
            vec![],
        ));
    }
    let mut bad = Vec::new();
    let mut cells = HashSet::new();
    for s in all_perms(2 * n) {
        let f = family(&s)?;
        if f.len() != 4 || !f.contains(&s) {
            bad.push(json!({ "sigma": s.to_string() }));
        }
        cells.insert(f.into_iter().collect::<Vec<_>>());
    }
    let expected = factorial(2 * n) / 4u32;
    if BigUint::from(cells.len()) != expected {
        bad.push(json!({ "cells": cells.len(), "expected": expected.to_string() }));
    }
    Ok(SuiteOutcome::new("family", json!({ "cells": cells.len() }), bad))
}

fn dihedral_suite(n: usize, cap: EnumCap) -> Result<SuiteOutcome> {
    let group = dihedral_group(n);
    let paths = enumerate_paths_capped(n, cap)?;
    let mut bad = Vec::new();
    let (pool, exhaustive) = perm_pool(n);
    let mismatches: Vec<Value> = pool
        .par_iter()
        .filter_map(|g| {
            let witness = crossing_witness(g, n, cap).ok()?;
            let member = group.contains(g);
            (witness.is_none() != member)
                .then(|| json!({ "g": g.to_string(), "member": member, "witness": witness.map(|d| d.word()) }))
        })
        .collect();
    bad.extend(mismatches);
    for g in &group {
        if crossing_witness(g, n, cap)?.is_some() {
            bad.push(json!({ "member_crosses": g.to_string() }));
        }
    }
    let (r, w) = (rho(n), omega(n));
    for d in &paths {
        let mut x = d.clone();
        for _ in 0..2 * n {
            x = sigma_path(&r, &x)?;
        }
        let ww = sigma_path(&w, &sigma_path(&w, d)?)?;
        let rwr = sigma_path(&r, &sigma_path(&w, &sigma_path(&r, d)?)?)?;
        if x != *d || ww != *d || rwr != sigma_path(&w, d)? {
            bad.push(json!({ "relations_fail_on": d.word() }));
        }
    }
    Ok(SuiteOutcome::new(
        "dihedral",
        json!({ "group_order": group.len(), "perms_checked": pool.len(), "exhaustive": exhaustive }),
        bad,
    ))
}

fn stats_suite(n: usize, cap: EnumCap) -> Result<SuiteOutcome> {
    let m = 2 * n;
    let mut bad = Vec::new();
    for a in 1..=m {
        for k in 1..=m {
            let e = equidistribution(n, a, k, cap)?;
            if !e.holds() {
                bad.push(json!({ "a": a, "k": k, "transport_failures": e.transport_failures }));
            }
        }
        let (u, h) = umax_histograms(n, a, cap)?;
        if u != h {
            bad.push(json!({ "umax_a": a, "umax": u, "peaks": h }));
        }
    }
    for k in 1..=m {
        let hist = height_histogram(n, k, cap)?;
        for l in 0..=m {
            if height_level_count(n, k, l) != hist.get(l) {
                bad.push(json!({ "k": k, "l": l, "closed_form": height_level_count(n, k, l).to_string(), "brute": hist.get(l).to_string() }));
            }
        }
    }
    Ok(SuiteOutcome::new("stats", json!({ "windows": m * m }), bad))
}
