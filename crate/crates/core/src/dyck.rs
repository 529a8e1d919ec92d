//! Dyck words: validation, heights, tunnelings and exhaustive enumeration.
//!
//! Positions are 1-based in every public signature. A path of half-length
//! `n` has steps `1..=2n`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{check_index, Error, Result};
use crate::pairing::Pairing;

/// A single lattice step. `Up < Down`, so the derived order on paths is the
/// lexicographic order used by [`enumerate_paths`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn symbol(self) -> char {
        match self {
            Step::Up => 'u',
            Step::Down => 'd',
        }
    }

    fn from_char(ch: char) -> Option<Step> {
        match ch {
            'u' | 'U' | '(' => Some(Step::Up),
            'd' | 'D' | ')' => Some(Step::Down),
            _ => None,
        }
    }
}

/// A Dyck path of half-length `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    /// Validates a step sequence.
    pub fn from_steps(steps: Vec<Step>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::Empty);
        }
        if steps.len() % 2 == 1 {
            return Err(Error::OddLength(steps.len()));
        }
        let ups = steps.iter().filter(|&&s| s == Step::Up).count();
        let downs = steps.len() - ups;
        if ups != downs {
            return Err(Error::Unbalanced { ups, downs });
        }
        let mut h: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            h += if *s == Step::Up { 1 } else { -1 };
            if h < 0 {
                return Err(Error::PrefixViolation { pos: i + 1 });
            }
        }
        Ok(DyckPath { steps })
    }

    /// Parses a Dyck word over `u`/`d` (also `U`/`D` and `(`/`)`).
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let mut steps = Vec::with_capacity(text.len());
        for (i, ch) in text.chars().enumerate() {
            match Step::from_char(ch) {
                Some(s) => steps.push(s),
                None => return Err(Error::NonAlphabet { ch, pos: i + 1 }),
            }
        }
        Self::from_steps(steps)
    }

    /// `(ud)^n`
    pub fn zigzag(n: usize) -> Self {
        let steps = (0..2 * n)
            .map(|i| if i % 2 == 0 { Step::Up } else { Step::Down })
            .collect();
        DyckPath { steps }
    }

    /// `u^n d^n`
    pub fn pyramid(n: usize) -> Self {
        let steps = (0..2 * n).map(|i| if i < n { Step::Up } else { Step::Down }).collect();
        DyckPath { steps }
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(Self::from_steps(steps.clone()).is_ok());
        DyckPath { steps }
    }

    /// Half-length.
    pub fn n(&self) -> usize {
        self.steps.len() / 2
    }

    /// Number of steps, `2n`.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Step at 1-based position `k`.
    pub fn step(&self, k: usize) -> Step {
        self.steps[k - 1]
    }

    pub fn word(&self) -> String {
        self.steps.iter().map(|s| s.symbol()).collect()
    }

    /// Height after the first `k` steps; `k = 0` gives 0.
    pub fn height(&self, k: usize) -> Result<usize> {
        check_index(k, 0, self.len())?;
        let downs = self.steps[..k].iter().filter(|&&s| s == Step::Down).count();
        Ok(k - 2 * downs)
    }

    /// Heights after every prefix, index `k` holding `h_k` for `k` in `0..=2n`.
    pub fn heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut h = 0usize;
        out.push(0);
        for s in &self.steps {
            match s {
                Step::Up => h += 1,
                Step::Down => h -= 1,
            }
            out.push(h);
        }
        out
    }

    pub fn up_positions(&self) -> Vec<usize> {
        self.positions_of(Step::Up)
    }

    pub fn down_positions(&self) -> Vec<usize> {
        self.positions_of(Step::Down)
    }

    fn positions_of(&self, which: Step) -> Vec<usize> {
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == which)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// The tunnel pairing: each down step is matched with the nearest
    /// unmatched up step to its left.
    pub fn tunneling(&self) -> Pairing {
        let m = self.len();
        let mut partner = vec![0usize; m];
        let mut open = Vec::with_capacity(self.n());
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                Step::Up => open.push(i),
                Step::Down => {
                    let j = open.pop().expect("valid Dyck path");
                    partner[i] = j + 1;
                    partner[j] = i + 1;
                }
            }
        }
        Pairing::from_partner_unchecked(partner)
    }

    /// Bit `k-1` is set iff step `k` is a down step. Only for `2n <= 64`.
    pub fn to_bits(&self) -> u64 {
        assert!(self.len() <= 64);
        self.steps
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, s)| if *s == Step::Down { acc | (1 << i) } else { acc })
    }

    /// Highest height reached.
    pub fn peak_height(&self) -> usize {
        self.heights().into_iter().max().unwrap_or(0)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DyckPath::parse(s)
    }
}

/// The largest half-length an exhaustive enumeration accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumCap(pub usize);

impl EnumCap {
    pub const DEFAULT: EnumCap = EnumCap(12);

    pub fn check(self, n: usize) -> Result<()> {
        if n > self.0 {
            return Err(Error::CapExceeded { n, cap: self.0 });
        }
        Ok(())
    }
}

impl Default for EnumCap {
    fn default() -> Self {
        EnumCap::DEFAULT
    }
}

/// Streams the Dyck paths of half-length `n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct DyckPaths {
    current: Option<Vec<Step>>,
    n: usize,
}

impl DyckPaths {
    fn new(n: usize) -> Self {
        DyckPaths {
            current: Some(DyckPath::pyramid(n).steps),
            n,
        }
    }

    /// Rightmost up step that may become a down step; the tail is then
    /// refilled with as many ups as remain, followed by downs.
    fn advance(steps: &mut [Step], n: usize) -> bool {
        let m = steps.len();
        let mut ups_before = vec![0usize; m + 1];
        for i in 0..m {
            ups_before[i + 1] = ups_before[i] + usize::from(steps[i] == Step::Up);
        }
        for i in (0..m).rev() {
            if steps[i] != Step::Up {
                continue;
            }
            let ups = ups_before[i];
            let height_before = 2 * ups - i;
            if height_before == 0 {
                continue;
            }
            steps[i] = Step::Down;
            let remaining_ups = n - ups;
            for (j, s) in steps.iter_mut().enumerate().skip(i + 1) {
                *s = if j - i <= remaining_ups { Step::Up } else { Step::Down };
            }
            return true;
        }
        false
    }
}

impl Iterator for DyckPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let steps = self.current.take()?;
        let mut succ = steps.clone();
        if Self::advance(&mut succ, self.n) {
            self.current = Some(succ);
        }
        Some(DyckPath::from_steps_unchecked(steps))
    }
}

/// Lazily enumerates all Dyck paths of half-length `n`.
pub fn iter_paths(n: usize, cap: EnumCap) -> Result<DyckPaths> {
    if n == 0 {
        return Err(Error::SizeTooSmall { n, min: 1 });
    }
    cap.check(n)?;
    Ok(DyckPaths::new(n))
}

/// All Dyck paths of half-length `n`, lexicographic with `u < d`.
pub fn enumerate_paths(n: usize) -> Result<Vec<DyckPath>> {
    enumerate_paths_capped(n, EnumCap::DEFAULT)
}

pub fn enumerate_paths_capped(n: usize, cap: EnumCap) -> Result<Vec<DyckPath>> {
    Ok(iter_paths(n, cap)?.collect())
}

pub fn catalan(n: usize) -> BigUint {
    crate::count::catalan(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> DyckPath {
        DyckPath::parse(s).unwrap()
    }

    #[test]
    fn parse_accepts_all_alphabets() {
        let a = p("uuduuddd");
        assert_eq!(a.n(), 4);
        assert_eq!(a.word(), "uuduuddd");
        assert_eq!(p("UUDUUDDD"), a);
        assert_eq!(p("(()(()))"), a);
        assert_eq!(p("ud").n(), 1);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(DyckPath::parse("duud"), Err(Error::PrefixViolation { pos: 1 }));
        assert_eq!(DyckPath::parse("uud"), Err(Error::OddLength(3)));
        assert_eq!(DyckPath::parse("uuud"), Err(Error::Unbalanced { ups: 3, downs: 1 }));
        assert_eq!(DyckPath::parse("uxdd"), Err(Error::NonAlphabet { ch: 'x', pos: 2 }));
        assert_eq!(DyckPath::parse(""), Err(Error::Empty));
    }

    #[test]
    fn tunneling_examples() {
        assert_eq!(p("uuduuddd").tunneling().to_string(), "8,3,2,7,6,5,4,1");
        assert_eq!(p("ud").tunneling().to_string(), "2,1");
        assert_eq!(p("uududd").tunneling().to_string(), "6,3,2,5,4,1");
    }

    #[test]
    fn heights() {
        let a = p("uuduuddd");
        assert_eq!(a.height(5), Ok(3));
        assert_eq!(a.height(7), Ok(1));
        assert_eq!(a.height(0), Ok(0));
        assert_eq!(a.height(8), Ok(0));
        assert!(matches!(a.height(9), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn positions() {
        assert_eq!(p("uududd").up_positions(), vec![1, 2, 4]);
        assert_eq!(p("ud").down_positions(), vec![2]);
        assert_eq!(p("uuuddd").up_positions(), vec![1, 2, 3]);
    }

    #[test]
    fn enumeration_order_and_counts() {
        let words: Vec<String> = enumerate_paths(3).unwrap().iter().map(|d| d.word()).collect();
        assert_eq!(words, ["uuuddd", "uududd", "uuddud", "uduudd", "ududud"]);
        assert_eq!(enumerate_paths(1).unwrap(), vec![p("ud")]);
        assert_eq!(enumerate_paths(4).unwrap().len(), 14);
        for n in 1..=10 {
            let all = enumerate_paths(n).unwrap();
            assert_eq!(BigUint::from(all.len()), catalan(n));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn enumeration_cap() {
        assert_eq!(enumerate_paths(13).unwrap_err(), Error::CapExceeded { n: 13, cap: 12 });
        assert!(enumerate_paths_capped(3, EnumCap(2)).is_err());
        assert!(enumerate_paths(0).is_err());
    }

    #[test]
    fn tunnel_pairs_have_odd_gap() {
        for d in enumerate_paths(6).unwrap() {
            let t = d.tunneling();
            for k in 1..=d.len() {
                let l = t.partner(k);
                if k < l {
                    assert_eq!(d.step(k), Step::Up);
                    assert_eq!(d.step(l), Step::Down);
                    assert_eq!((l - k) % 2, 1);
                }
            }
        }
    }
}
