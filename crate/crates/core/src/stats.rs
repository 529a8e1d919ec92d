//! Unpaired steps in circular windows, and their transport to heights.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::count::binomial;
use crate::dyck::{iter_paths, DyckPath, EnumCap};
use crate::error::{check_index, Result};
use crate::pairing::wrap;
use crate::perm::Perm;
use crate::sigma::sigma_path;

/// Level -> number of paths at that level.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StatHistogram {
    pub level_counts: BTreeMap<usize, BigUint>,
}

/// Serialized as `{"level": "count"}` with decimal-string counts.
impl Serialize for StatHistogram {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_map(self.level_counts.iter().map(|(l, c)| (l.to_string(), c.to_string())))
    }
}

impl StatHistogram {
    pub fn add(&mut self, level: usize) {
        *self.level_counts.entry(level).or_insert_with(BigUint::zero) += 1u32;
    }

    pub fn get(&self, level: usize) -> BigUint {
        self.level_counts.get(&level).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.level_counts.values().sum()
    }
}

impl FromIterator<usize> for StatHistogram {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut h = StatHistogram::default();
        iter.into_iter().for_each(|l| h.add(l));
        h
    }
}

/// `(unpaired, internal pairs)` for the window of `k` steps starting at `a`.
fn window_tally(p: &DyckPath, a: usize, k: usize) -> (usize, usize) {
    let m = p.len();
    let t = p.tunneling();
    let mut inside = vec![false; m + 1];
    for i in 0..k {
        inside[wrap(a + i, m)] = true;
    }
    let unpaired = (0..k).filter(|&i| !inside[t.partner(wrap(a + i, m))]).count();
    let internal = (k - unpaired) / 2;
    (unpaired, internal)
}

/// Number of steps among the `k` circularly consecutive steps from `a`
/// whose tunnel partner lies outside that window.
pub fn unpaired_count(p: &DyckPath, a: usize, k: usize) -> Result<usize> {
    check_index(a, 1, p.len())?;
    check_index(k, 1, p.len())?;
    let (unpaired, internal) = window_tally(p, a, k);
    debug_assert_eq!(unpaired, k - 2 * internal);
    Ok(unpaired)
}

/// The rotation `sigma_j = a + j - 1`, which sends every window
/// `{a, ..., a+k-1}` to the first `k` positions at once.
pub fn stat_sigma(a: usize, k: usize, n: usize) -> Result<Perm> {
    let m = 2 * n;
    check_index(a, 1, m)?;
    check_index(k, 1, m)?;
    Ok(Perm::from_images_unchecked(
        (1..=m).map(|j| wrap(a + j - 1, m)).collect(),
    ))
}

/// Height of the highest peak.
pub fn peak_height(p: &DyckPath) -> usize {
    p.peak_height()
}

/// Largest unpaired count over all window lengths starting at `a`.
pub fn u_max(p: &DyckPath, a: usize) -> Result<usize> {
    check_index(a, 1, p.len())?;
    Ok((1..=p.len()).map(|k| window_tally(p, a, k).0).max().unwrap_or(0))
}

/// Both histograms compared by [`equidistribution_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Equidistribution {
    pub unpaired: StatHistogram,
    pub heights: StatHistogram,
    /// Paths where `u_{a,k}(P) != h_k(sigma^(a)(P))`.
    pub transport_failures: Vec<String>,
}

impl Equidistribution {
    pub fn holds(&self) -> bool {
        self.unpaired == self.heights && self.transport_failures.is_empty()
    }
}

pub fn equidistribution(n: usize, a: usize, k: usize, cap: EnumCap) -> Result<Equidistribution> {
    let sigma = stat_sigma(a, k, n)?;
    let mut unpaired = StatHistogram::default();
    let mut heights = StatHistogram::default();
    let mut transport_failures = Vec::new();
    for p in iter_paths(n, cap)? {
        let u = unpaired_count(&p, a, k)?;
        unpaired.add(u);
        heights.add(p.height(k)?);
        if sigma_path(&sigma, &p)?.height(k)? != u {
            transport_failures.push(p.word());
        }
    }
    Ok(Equidistribution {
        unpaired,
        heights,
        transport_failures,
    })
}

/// Histograms of `u_{a,k}` and `h_k` agree over `D_n`, and the rotation
/// transports one statistic to the other path by path.
pub fn equidistribution_check(n: usize, a: usize, k: usize) -> Result<bool> {
    Ok(equidistribution(n, a, k, EnumCap::DEFAULT)?.holds())
}

/// `(u_max^(a) histogram, peak height histogram)` over `D_n`.
pub fn umax_histograms(n: usize, a: usize, cap: EnumCap) -> Result<(StatHistogram, StatHistogram)> {
    let mut umax = StatHistogram::default();
    let mut peaks = StatHistogram::default();
    for p in iter_paths(n, cap)? {
        umax.add(u_max(&p, a)?);
        peaks.add(p.peak_height());
    }
    Ok((umax, peaks))
}

pub fn umax_equidistribution_check(n: usize, a: usize) -> Result<bool> {
    let (u, h) = umax_histograms(n, a, EnumCap::DEFAULT)?;
    Ok(u == h)
}

/// Closed-form number of paths in `D_n` with `h_k = l`:
/// `(l+1)^2 / ((k+1)(2n-k+1)) * C(k+1, (k+l)/2 + 1) * C(2n-k+1, n - (k+l)/2)`,
/// zero when `k + l` is odd.
pub fn height_level_count(n: usize, k: usize, l: usize) -> BigUint {
    let m = 2 * n;
    if k > m || (k + l) % 2 == 1 {
        return BigUint::zero();
    }
    let half = (k + l) / 2;
    if half > n {
        return BigUint::zero();
    }
    let num = BigInt::from((l + 1) * (l + 1))
        * BigInt::from(binomial(k + 1, half + 1))
        * BigInt::from(binomial(m - k + 1, n - half));
    let den = BigInt::from((k + 1) * (m - k + 1));
    let value = BigRational::new(num, den);
    assert!(value.is_integer(), "non-integral level count for n={n} k={k} l={l}");
    value.to_integer().to_biguint().expect("counts are non-negative")
}

/// One row of the `u_max` table: the path, its peak height and `u_max^(a)` for `a = 1..=2n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UmaxRow {
    pub path: String,
    pub peak: usize,
    pub umax: Vec<usize>,
}

pub fn umax_table(n: usize, cap: EnumCap) -> Result<Vec<UmaxRow>> {
    iter_paths(n, cap)?
        .map(|p| {
            let umax = (1..=p.len()).map(|a| u_max(&p, a)).collect::<Result<Vec<_>>>()?;
            Ok(UmaxRow {
                path: p.word(),
                peak: p.peak_height(),
                umax,
            })
        })
        .collect()
}

/// Heights histogram over `D_n` at position `k`, for checking [`height_level_count`].
pub fn height_histogram(n: usize, k: usize, cap: EnumCap) -> Result<StatHistogram> {
    iter_paths(n, cap)?
        .map(|p| p.height(k))
        .collect::<Result<StatHistogram>>()
}
