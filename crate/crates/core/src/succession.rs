//! Generating-tree succession systems and the counting tables they induce.
//!
//! A succession system is a root label plus rewriting rules; the level-`n`
//! population of its generating tree counts the objects of size `n`. The
//! rules here may depend on the parent's level (the inversion-refined system
//! needs `n − p`), so the engine threads the level through.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::min;

use num_bigint::BigUint;
use num_traits::Zero;

/// A label: a tuple of small integers (arity 1 to 3 in the systems here).
pub type Label = Vec<i64>;

/// Root label plus a rule producing each label's ordered children; `level`
/// is the parent's level (the root sits at level 0).
pub struct SuccessionSystem {
    pub root: Label,
    pub rules: Box<dyn Fn(usize, &Label) -> Vec<Label>>,
}

impl SuccessionSystem {
    /// System (p) ⇝ (p+1), (p−1): 132-avoiding involutions by fixed points,
    /// equally Dyck word prefixes by up-step surplus.
    pub fn fixed_points() -> SuccessionSystem {
        SuccessionSystem {
            root: vec![0],
            rules: Box::new(|_level, label| {
                let p = label[0];
                if p == 0 {
                    vec![vec![1]]
                } else {
                    vec![vec![p + 1], vec![p - 1]]
                }
            }),
        }
    }

    /// System (p,i) ⇝ (p+1, i+n−p), (p−1, i+n−p+1): refined by inversions.
    pub fn inversions() -> SuccessionSystem {
        SuccessionSystem {
            root: vec![0, 0],
            rules: Box::new(|level, label| {
                let n = level as i64;
                let (p, i) = (label[0], label[1]);
                if p == 0 {
                    vec![vec![1, i + n - p]]
                } else {
                    vec![vec![p + 1, i + n - p], vec![p - 1, i + n - p + 1]]
                }
            }),
        }
    }

    /// System (p,r,b) ⇝ (p+1, r+b, 1), (p−1, r+1−b, 0): refined by rises,
    /// with the indicator b telling whether the middle block is empty.
    pub fn rises() -> SuccessionSystem {
        SuccessionSystem {
            root: vec![0, 0, 0],
            rules: Box::new(|_level, label| {
                let (p, r, b) = (label[0], label[1], label[2]);
                if p == 0 {
                    vec![vec![1, r + b, 1]]
                } else {
                    vec![vec![p + 1, r + b, 1], vec![p - 1, r + 1 - b, 0]]
                }
            }),
        }
    }

    /// The k-bounded system: (p) ⇝ (p+1), (p−1) for 1 ≤ p ≤ k−2 and
    /// (k−1) ⇝ (k−2); counts involutions avoiding both 132 and 12…k.
    pub fn bounded(k: usize) -> SuccessionSystem {
        let cap = k as i64 - 1;
        SuccessionSystem {
            root: vec![0],
            rules: Box::new(move |_level, label| {
                let p = label[0];
                if p == 0 {
                    vec![vec![1]]
                } else if p < cap {
                    vec![vec![p + 1], vec![p - 1]]
                } else {
                    vec![vec![p - 1]]
                }
            }),
        }
    }
}

/// Exact label counts at level `n` of the generating tree (root at level 0).
pub fn level_counts(system: &SuccessionSystem, n: usize) -> BTreeMap<Label, BigUint> {
    let mut level: BTreeMap<Label, BigUint> = BTreeMap::new();
    level.insert(system.root.clone(), BigUint::from(1u32));
    for depth in 0..n {
        let mut next: BTreeMap<Label, BigUint> = BTreeMap::new();
        for (label, count) in &level {
            for child in (system.rules)(depth, label) {
                let entry = next.entry(child).or_insert_with(BigUint::zero);
                *entry += count;
            }
        }
        level = next;
    }
    level
}

/// Total population of level `n`.
pub fn level_total(system: &SuccessionSystem, n: usize) -> BigUint {
    level_counts(system, n).values().sum()
}

/// Binomial coefficient with the usual conventions (0 outside the triangle).
pub fn binomial(n: usize, k: isize) -> BigUint {
    if k < 0 || k as usize > n {
        return BigUint::zero();
    }
    let k = min(k as usize, n - k as usize);
    let mut result = BigUint::from(1u32);
    for i in 0..k {
        result = result * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    result
}

/// Ballot number `a_{n,p} = C(n, (n+p)/2) − C(n, (n+p)/2 + 1)`: the number
/// of 132-avoiding involutions of length `n` with `p` fixed points. Zero
/// when `n` and `p` have different parities or `p > n`.
pub fn ballot_count(n: usize, p: usize) -> BigUint {
    if p > n || (n + p) % 2 != 0 {
        return BigUint::zero();
    }
    let half = ((n + p) / 2) as isize;
    let a = binomial(n, half);
    let b = binomial(n, half + 1);
    a - b
}

/// Table of `a'(n, p, i)`: 132-avoiding involutions of length `n` with `p`
/// fixed points and `i` inversions, built from the inversion-refined system.
pub struct InversionTable {
    pub n_max: usize,
    /// `counts[n][p][i]`; `i` ranges over `0 ..= n(n−1)/2`.
    pub counts: Vec<Vec<Vec<u64>>>,
}

/// Builds the full `a'` table up to length `n_max` by forward propagation:
/// a label `(p, i)` at level `n` sends mass to `(p+1, i+n−p)` and, when
/// `p ≥ 1`, to `(p−1, i+n−p+1)`.
pub fn dp_inversions(n_max: usize) -> InversionTable {
    let width = |n: usize| n * n.saturating_sub(1) / 2 + 1;
    let mut counts: Vec<Vec<Vec<u64>>> = (0..=n_max)
        .map(|n| vec![vec![0u64; width(n)]; n + 2])
        .collect();
    counts[0][0][0] = 1;
    for n in 0..n_max {
        for p in 0..=n {
            for i in 0..width(n) {
                let c = counts[n][p][i];
                if c == 0 {
                    continue;
                }
                let up = i + n - p;
                counts[n + 1][p + 1][up] += c;
                if p >= 1 {
                    counts[n + 1][p - 1][up + 1] += c;
                }
            }
        }
    }
    InversionTable { n_max, counts }
}

impl InversionTable {
    pub fn count(&self, n: usize, p: usize, i: usize) -> u64 {
        self.counts
            .get(n)
            .and_then(|by_p| by_p.get(p))
            .and_then(|by_i| by_i.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// Number of even (`parity = 0`) or odd (`parity = 1`) involutions in
    /// the 132-avoiders of length `n`.
    pub fn parity_total(&self, n: usize, parity: usize) -> u64 {
        self.counts[n]
            .iter()
            .map(|by_i| {
                by_i.iter()
                    .enumerate()
                    .filter(|(i, _)| i % 2 == parity)
                    .map(|(_, &c)| c)
                    .sum::<u64>()
            })
            .sum()
    }
}

/// Table of `a''(n, p, r, b)`: refined by rises and the middle-block
/// indicator.
pub struct RiseTable {
    pub n_max: usize,
    /// `counts[n][p][r][b]`.
    pub counts: Vec<Vec<Vec<[u64; 2]>>>,
}

pub fn dp_rises(n_max: usize) -> RiseTable {
    let mut counts: Vec<Vec<Vec<[u64; 2]>>> = (0..=n_max)
        .map(|n| vec![vec![[0u64; 2]; n + 1]; n + 2])
        .collect();
    counts[0][0][0][0] = 1;
    for n in 0..n_max {
        for p in 0..=n {
            for r in 0..=n {
                for b in 0..2 {
                    let c = counts[n][p][r][b];
                    if c == 0 {
                        continue;
                    }
                    counts[n + 1][p + 1][r + b][1] += c;
                    if p >= 1 {
                        counts[n + 1][p - 1][r + 1 - b][0] += c;
                    }
                }
            }
        }
    }
    RiseTable { n_max, counts }
}

impl RiseTable {
    pub fn count(&self, n: usize, p: usize, r: usize, b: usize) -> u64 {
        self.counts
            .get(n)
            .and_then(|by_p| by_p.get(p))
            .and_then(|by_r| by_r.get(r))
            .map(|by_b| by_b[b])
            .unwrap_or(0)
    }

    /// Involutions of length `n` in the 132-avoiders with exactly `r` rises.
    pub fn rise_total(&self, n: usize, r: usize) -> u64 {
        self.counts[n]
            .iter()
            .map(|by_r| by_r.get(r).map(|b| b[0] + b[1]).unwrap_or(0))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_counts_basics() {
        let s = SuccessionSystem::fixed_points();
        assert_eq!(level_total(&s, 0), BigUint::from(1u32));
        assert_eq!(level_total(&s, 4), BigUint::from(6u32));
        // Level totals are the central binomial coefficients.
        for n in 0..=16 {
            assert_eq!(level_total(&s, n), binomial(n, (n / 2) as isize), "n = {n}");
        }
    }

    #[test]
    fn level_counts_match_ballot_numbers() {
        let s = SuccessionSystem::fixed_points();
        for n in 0..=16 {
            let by_label = level_counts(&s, n);
            for p in 0..=n {
                let expected = ballot_count(n, p);
                let observed = by_label.get(&vec![p as i64]).cloned().unwrap_or_default();
                assert_eq!(observed, expected, "n = {n}, p = {p}");
            }
        }
    }

    #[test]
    fn ballot_examples() {
        assert_eq!(ballot_count(4, 2), BigUint::from(3u32));
        for n in 0..=16 {
            assert_eq!(ballot_count(n, n), BigUint::from(1u32));
            let row: BigUint = (0..=n).map(|p| ballot_count(n, p)).sum();
            assert_eq!(row, binomial(n, (n / 2) as isize), "row sum at n = {n}");
        }
    }

    #[test]
    fn bounded_system_small_counts() {
        // k = 3: each reachable p in {0,1,2} carries 2^((n-1)/2 floored).
        let s = SuccessionSystem::bounded(3);
        for n in 1..=12 {
            let by_label = level_counts(&s, n);
            let expected = BigUint::from(2u32).pow(((n - 1) / 2) as u32);
            for p in 0..=2i64 {
                if (p as usize) % 2 == n % 2 && p as usize <= n {
                    assert_eq!(by_label.get(&vec![p]).cloned().unwrap_or_default(), expected);
                }
            }
        }
    }

    #[test]
    fn dp_inversions_small() {
        let table = dp_inversions(5);
        assert_eq!(table.count(1, 1, 0), 1);
        assert_eq!((0..=1).map(|i| table.count(1, 1, i)).sum::<u64>(), 1);
        // n = 5: six even, four odd.
        assert_eq!(table.parity_total(5, 0), 6);
        assert_eq!(table.parity_total(5, 1), 4);
    }

    #[test]
    fn dp_rises_small() {
        let table = dp_rises(3);
        assert_eq!(table.count(0, 0, 0, 0), 1);
        // n = 3: one involution for each rise count 0, 1, 2.
        for r in 0..=2 {
            assert_eq!(table.rise_total(3, r), 1, "r = {r}");
        }
    }
}
