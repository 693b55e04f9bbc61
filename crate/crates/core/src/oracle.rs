//! Brute-force enumeration: the ground truth every closed form is checked
//! against.
//!
//! Involutions are generated directly from their cycle structure (choose the
//! partner of the largest unplaced point, or fix it), not by filtering all
//! permutations; that reaches length 14 comfortably. Pattern constraints are
//! applied by the plain occurrence counter from `perm`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::Error;
use crate::perm::{PatternSpec, Permutation, Statistics};
use crate::Result;

/// Which objects to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObjectClass {
    Involutions,
    Permutations,
}

/// A statistic to tally in a distribution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statistic {
    FixedPoints,
    Inversions,
    /// 0 for even, 1 for odd.
    Parity,
    Rises,
    Descents,
    RtlMaxima,
    LtrMinima,
    /// Occurrence count of an arbitrary pattern.
    Occurrences(PatternSpec),
}

impl Statistic {
    pub fn parse(text: &str) -> Result<Statistic> {
        Ok(match text {
            "fixed_points" => Statistic::FixedPoints,
            "inversions" => Statistic::Inversions,
            "parity" => Statistic::Parity,
            "rises" => Statistic::Rises,
            "descents" => Statistic::Descents,
            "rtl_maxima" => Statistic::RtlMaxima,
            "ltr_minima" => Statistic::LtrMinima,
            other => match other.strip_prefix("occ:") {
                Some(p) => Statistic::Occurrences(PatternSpec::parse(p)?),
                None => return Err(Error::Parse(format!("unknown statistic {text:?}"))),
            },
        })
    }

    fn evaluate(&self, p: &Permutation, stats: &Statistics) -> u64 {
        match self {
            Statistic::FixedPoints => stats.fixed_points as u64,
            Statistic::Inversions => p.inversions() as u64,
            Statistic::Parity => (p.inversions() % 2) as u64,
            Statistic::Rises => stats.rises as u64,
            Statistic::Descents => stats.descents as u64,
            Statistic::RtlMaxima => stats.rtl_maxima as u64,
            Statistic::LtrMinima => stats.ltr_minima as u64,
            Statistic::Occurrences(t) => p.count_occurrences(t) as u64,
        }
    }
}

/// Enumeration bounds; exceeding one is an error, never a silent cutoff.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub involutions: usize,
    pub permutations: usize,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits { involutions: 12, permutations: 9 }
    }
}

impl Limits {
    /// Bounds wide enough for the full verification suite.
    pub fn verification() -> Limits {
        Limits { involutions: 14, permutations: 9 }
    }

    fn check(&self, class: ObjectClass, n: usize) -> Result<()> {
        let limit = match class {
            ObjectClass::Involutions => self.involutions,
            ObjectClass::Permutations => self.permutations,
        };
        if n > limit {
            Err(Error::LimitExceeded { requested: n, limit })
        } else {
            Ok(())
        }
    }
}

/// One enumeration request: objects of length `n` in the class, avoiding
/// every pattern in `avoid`, containing each `(pattern, count)` in `contain`
/// exactly `count` times.
#[derive(Clone, Debug)]
pub struct CountQuery {
    pub class: ObjectClass,
    pub n: usize,
    pub avoid: Vec<PatternSpec>,
    pub contain: Vec<(PatternSpec, usize)>,
    pub stats: Vec<Statistic>,
}

impl CountQuery {
    pub fn new(class: ObjectClass, n: usize) -> CountQuery {
        CountQuery { class, n, avoid: Vec::new(), contain: Vec::new(), stats: Vec::new() }
    }

    pub fn avoiding(mut self, pattern: PatternSpec) -> CountQuery {
        self.avoid.push(pattern);
        self
    }

    pub fn containing(mut self, pattern: PatternSpec, count: usize) -> CountQuery {
        self.contain.push((pattern, count));
        self
    }

    pub fn tallying(mut self, stat: Statistic) -> CountQuery {
        self.stats.push(stat);
        self
    }

    fn admits(&self, p: &Permutation) -> bool {
        self.avoid.iter().all(|t| !p.contains(t))
            && self
                .contain
                .iter()
                .all(|(t, count)| p.count_occurrences(t) == *count)
    }
}

/// Streams every involution of `{1,…,n}` in cycle-construction order.
pub fn for_each_involution(n: usize, visit: &mut impl FnMut(&Permutation)) {
    let mut values: Vec<usize> = (1..=n).collect();
    let mut free: Vec<usize> = (1..=n).rev().collect();
    build_involutions(&mut values, &mut free, visit);
}

fn build_involutions(
    values: &mut Vec<usize>,
    free: &mut Vec<usize>,
    visit: &mut impl FnMut(&Permutation),
) {
    let Some(largest) = free.pop() else {
        let p = Permutation::from_one_line(values.clone()).expect("involution construction");
        visit(&p);
        return;
    };
    // Leave `largest` fixed.
    build_involutions(values, free, visit);
    // Or pair it with any smaller free point.
    for i in 0..free.len() {
        let partner = free.remove(i);
        values[largest - 1] = partner;
        values[partner - 1] = largest;
        build_involutions(values, free, visit);
        values[largest - 1] = largest;
        values[partner - 1] = partner;
        free.insert(i, partner);
    }
    free.push(largest);
}

/// Streams every permutation of `{1,…,n}`.
pub fn for_each_permutation(n: usize, visit: &mut impl FnMut(&Permutation)) {
    let mut values: Vec<usize> = (1..=n).collect();
    permute(&mut values, 0, visit);
}

fn permute(values: &mut Vec<usize>, at: usize, visit: &mut impl FnMut(&Permutation)) {
    if at == values.len() {
        let p = Permutation::from_one_line(values.clone()).expect("permutation construction");
        visit(&p);
        return;
    }
    for i in at..values.len() {
        values.swap(at, i);
        permute(values, at + 1, visit);
        values.swap(at, i);
    }
}

/// Runs a query, streaming each qualifying object exactly once.
pub fn enumerate(
    query: &CountQuery,
    limits: &Limits,
    visit: &mut impl FnMut(&Permutation),
) -> Result<()> {
    limits.check(query.class, query.n)?;
    let mut filtered = |p: &Permutation| {
        if query.admits(p) {
            visit(p);
        }
    };
    match query.class {
        ObjectClass::Involutions => for_each_involution(query.n, &mut filtered),
        ObjectClass::Permutations => for_each_permutation(query.n, &mut filtered),
    }
    Ok(())
}

/// Collects the qualifying objects of a query.
pub fn collect(query: &CountQuery, limits: &Limits) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    enumerate(query, limits, &mut |p| out.push(p.clone()))?;
    Ok(out)
}

/// Counts the qualifying objects of a query.
pub fn count(query: &CountQuery, limits: &Limits) -> Result<u64> {
    let mut total = 0u64;
    enumerate(query, limits, &mut |_| total += 1)?;
    Ok(total)
}

/// Exact joint tally of the query's statistics.
pub fn distribution(query: &CountQuery, limits: &Limits) -> Result<BTreeMap<Vec<u64>, u64>> {
    let mut table: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
    enumerate(query, limits, &mut |p| {
        let stats = p.statistics();
        let key: Vec<u64> = query.stats.iter().map(|s| s.evaluate(p, &stats)).collect();
        *table.entry(key).or_insert(0) += 1;
    })?;
    Ok(table)
}

/// Telephone numbers `T(n) = T(n−1) + (n−1)·T(n−2)`: all involutions.
pub fn telephone_number(n: usize) -> u64 {
    let mut prev = 1u64;
    let mut curr = 1u64;
    if n == 0 {
        return 1;
    }
    for m in 2..=n {
        let next = curr + (m as u64 - 1) * prev;
        prev = curr;
        curr = next;
    }
    curr
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::pattern_132;

    #[test]
    fn involution_counts_are_telephone_numbers() {
        for n in 0..=9 {
            let mut count = 0u64;
            let mut all_involutions = true;
            for_each_involution(n, &mut |p| {
                count += 1;
                all_involutions &= p.is_involution();
            });
            assert!(all_involutions);
            assert_eq!(count, telephone_number(n), "n = {n}");
        }
        assert_eq!(telephone_number(14), 2390480);
    }

    #[test]
    fn involutions_are_distinct() {
        let mut seen = alloc::collections::BTreeSet::new();
        for_each_involution(6, &mut |p| {
            assert!(seen.insert(p.clone()), "duplicate {p}");
        });
        assert_eq!(seen.len(), 76);
    }

    #[test]
    fn avoiding_involutions_match_central_binomials() {
        let limits = Limits::default();
        let expected = [1u64, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252];
        for (n, &e) in expected.iter().enumerate() {
            let q = CountQuery::new(ObjectClass::Involutions, n).avoiding(pattern_132());
            assert_eq!(count(&q, &limits).unwrap(), e, "n = {n}");
        }
    }

    #[test]
    fn small_enumeration_explicit() {
        let limits = Limits::default();
        let q = CountQuery::new(ObjectClass::Involutions, 3);
        let mut all = collect(&q, &limits).unwrap();
        all.sort();
        let expected = ["1 2 3", "1 3 2", "2 1 3", "3 2 1"];
        assert_eq!(
            all,
            expected
                .iter()
                .map(|t| Permutation::parse(t).unwrap())
                .collect::<Vec<_>>()
        );

        let empty = collect(&CountQuery::new(ObjectClass::Involutions, 0), &limits).unwrap();
        assert_eq!(empty, vec![Permutation::empty()]);
    }

    #[test]
    fn fixed_point_distribution_is_ballot() {
        let limits = Limits::default();
        let q = CountQuery::new(ObjectClass::Involutions, 4)
            .avoiding(pattern_132())
            .tallying(Statistic::FixedPoints);
        let table = distribution(&q, &limits).unwrap();
        assert_eq!(table.get(&vec![0]), Some(&2));
        assert_eq!(table.get(&vec![2]), Some(&3));
        assert_eq!(table.get(&vec![4]), Some(&1));
    }

    #[test]
    fn contain_constraints() {
        let limits = Limits::default();
        // Involutions of length 4 containing 1-3-2 exactly once: only 1324.
        let q = CountQuery::new(ObjectClass::Involutions, 4).containing(pattern_132(), 1);
        let objects = collect(&q, &limits).unwrap();
        assert_eq!(objects, vec![Permutation::parse("1 3 2 4").unwrap()]);
    }

    #[test]
    fn limits_are_hard() {
        let limits = Limits { involutions: 5, permutations: 4 };
        let q = CountQuery::new(ObjectClass::Involutions, 6);
        assert!(matches!(
            count(&q, &limits),
            Err(Error::LimitExceeded { requested: 6, limit: 5 })
        ));
        let q = CountQuery::new(ObjectClass::Permutations, 5);
        assert!(count(&q, &limits).is_err());
    }

    #[test]
    fn permutation_enumeration() {
        let limits = Limits::default();
        let q = CountQuery::new(ObjectClass::Permutations, 5).avoiding(pattern_132());
        // 132-avoiding permutations are counted by Catalan numbers.
        assert_eq!(count(&q, &limits).unwrap(), 42);
    }
}
