//! Permutations, involutions, their statistics, and pattern occurrence
//! counting for classical and dashed (generalized) patterns.
//!
//! Positions and values are one-indexed throughout, matching the standard
//! one-line notation `π = π_1 π_2 … π_n`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::Result;

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Vec<usize>,
}

/// Parity of the inversion count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// The counting statistics of a permutation, all per the classical
/// definitions: `rises + descents = n − 1` for nonempty permutations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Statistics {
    pub rises: usize,
    pub descents: usize,
    pub fixed_points: usize,
    pub rtl_maxima: usize,
    pub ltr_minima: usize,
}

impl Permutation {
    /// Builds a permutation from one-line notation, validating that the
    /// values are exactly `{1, …, n}`.
    pub fn from_one_line(values: Vec<usize>) -> Result<Permutation> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation(format!("{values:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { values })
    }

    /// The empty permutation.
    pub fn empty() -> Permutation {
        Permutation { values: Vec::new() }
    }

    /// The identity permutation of length `n`.
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    /// Builds an involution from its cycle structure: `pairs` are the
    /// 2-cycles (as position pairs), every other position is fixed.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Permutation> {
        let mut values: Vec<usize> = (1..=n).collect();
        for &(a, b) in pairs {
            if a == 0 || b == 0 || a > n || b > n || a == b {
                return Err(Error::Domain(format!("bad pair ({a}, {b}) for n = {n}")));
            }
            values[a - 1] = b;
            values[b - 1] = a;
        }
        Permutation::from_one_line(values)
    }

    /// Parses space-separated one-line notation, e.g. `"4 3 5 1 2"`.
    pub fn parse(text: &str) -> Result<Permutation> {
        let values = text
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad entry {t:?} in permutation")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_one_line(values)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// One-line notation as a slice of one-indexed values.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `π(i)` with a one-indexed position.
    pub fn image(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// Position of value `v` (one-indexed): `π⁻¹(v)`.
    pub fn preimage(&self, v: usize) -> usize {
        self.values.iter().position(|&x| x == v).expect("value in range") + 1
    }

    pub fn is_involution(&self) -> bool {
        (1..=self.len()).all(|i| self.image(self.image(i)) == i)
    }

    /// `|{(i, j) : i < j, π_i > π_j}|`.
    pub fn inversions(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.values[i] > self.values[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn parity(&self) -> Parity {
        if self.inversions() % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Positions `i` with `π_i = i`, counted.
    pub fn fixed_points(&self) -> usize {
        self.values
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v == i + 1)
            .count()
    }

    pub fn statistics(&self) -> Statistics {
        let n = self.len();
        let v = &self.values;
        let mut rises = 0;
        let mut descents = 0;
        for j in 0..n.saturating_sub(1) {
            if v[j] < v[j + 1] {
                rises += 1;
            } else {
                descents += 1;
            }
        }
        let mut rtl_maxima = 0;
        let mut max_so_far = 0;
        for &x in v.iter().rev() {
            if x > max_so_far {
                rtl_maxima += 1;
                max_so_far = x;
            }
        }
        let mut ltr_minima = 0;
        let mut min_so_far = usize::MAX;
        for &x in v.iter() {
            if x < min_so_far {
                ltr_minima += 1;
                min_so_far = x;
            }
        }
        Statistics {
            rises,
            descents,
            fixed_points: self.fixed_points(),
            rtl_maxima,
            ltr_minima,
        }
    }

    /// The right-to-left maxima, in increasing value order `m_1 < … < m_s`.
    pub fn rtl_maxima_values(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut max_so_far = 0;
        // Scanning from the right, every new running maximum is larger, so
        // the list comes out ascending.
        for &x in self.values.iter().rev() {
            if x > max_so_far {
                out.push(x);
                max_so_far = x;
            }
        }
        out
    }

    /// Number of subsequences of `self` order-isomorphic to `pattern` and
    /// satisfying its adjacency constraints.
    ///
    /// Plain depth-first search over index subsequences; this is the oracle
    /// for every counting identity in the crate, so it stays obvious.
    pub fn count_occurrences(&self, pattern: &PatternSpec) -> usize {
        let mut chosen = Vec::with_capacity(pattern.len());
        self.occurrence_dfs(pattern, 0, &mut chosen, &mut |_| true)
    }

    pub fn avoids(&self, patterns: &[PatternSpec]) -> bool {
        patterns.iter().all(|t| !self.contains(t))
    }

    pub fn contains(&self, pattern: &PatternSpec) -> bool {
        let mut chosen = Vec::with_capacity(pattern.len());
        // Stop the search as soon as one occurrence is found.
        self.occurrence_dfs(pattern, 0, &mut chosen, &mut |c| c == 0) > 0
    }

    /// Extends a partial occurrence one pattern letter at a time.
    /// `keep_going(count_so_far)` lets `contains` abort after the first hit.
    fn occurrence_dfs(
        &self,
        pattern: &PatternSpec,
        next_letter: usize,
        chosen: &mut Vec<usize>,
        keep_going: &mut impl FnMut(usize) -> bool,
    ) -> usize {
        let k = pattern.len();
        if next_letter == k {
            return 1;
        }
        let n = self.len();
        let mut count = 0;
        let start = match chosen.last() {
            None => 0,
            Some(&prev) if pattern.adjacent(next_letter - 1) => {
                if prev + 1 >= n {
                    return 0;
                }
                prev + 1
            }
            Some(&prev) => prev + 1,
        };
        let end = if next_letter > 0 && pattern.adjacent(next_letter - 1) {
            (start + 1).min(n)
        } else {
            n
        };
        for i in start..end {
            if self.extends_pattern(pattern, chosen, i) {
                chosen.push(i);
                count += self.occurrence_dfs(pattern, next_letter + 1, chosen, keep_going);
                chosen.pop();
                if !keep_going(count) {
                    return count;
                }
            }
        }
        count
    }

    /// Does appending position `i` keep `chosen` order-isomorphic to the
    /// pattern prefix?
    fn extends_pattern(&self, pattern: &PatternSpec, chosen: &[usize], i: usize) -> bool {
        let next = chosen.len();
        let vi = self.values[i];
        for (j, &c) in chosen.iter().enumerate() {
            let vj = self.values[c];
            if (pattern.letters[j] < pattern.letters[next]) != (vj < vi) {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// A classical or dashed pattern: `letters` is a permutation of `{1,…,k}`,
/// `adjacency[i]` says whether pattern letters `i` and `i+1` must occupy
/// adjacent positions in the host (a dash in the text form means "false").
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PatternSpec {
    letters: Vec<usize>,
    adjacency: Vec<bool>,
}

impl PatternSpec {
    pub fn new(letters: Vec<usize>, adjacency: Vec<bool>) -> Result<PatternSpec> {
        if letters.is_empty() {
            return Err(Error::Domain("empty pattern".to_string()));
        }
        if adjacency.len() + 1 != letters.len() {
            return Err(Error::Domain(format!(
                "pattern of {} letters needs {} adjacency flags, got {}",
                letters.len(),
                letters.len() - 1,
                adjacency.len()
            )));
        }
        Permutation::from_one_line(letters.clone())
            .map_err(|_| Error::NotAPermutation(format!("pattern letters {letters:?}")))?;
        Ok(PatternSpec { letters, adjacency })
    }

    /// A classical pattern: every gap is a dash.
    pub fn classical(letters: &[usize]) -> Result<PatternSpec> {
        let adjacency = vec![false; letters.len().saturating_sub(1)];
        PatternSpec::new(letters.to_vec(), adjacency)
    }

    /// The monotone pattern `1-2-…-k`.
    pub fn monotone(k: usize) -> PatternSpec {
        PatternSpec::classical(&(1..=k).collect::<Vec<_>>()).expect("k >= 1")
    }

    /// The pattern `2-1-3-4-…-k` (first two letters swapped), `k ≥ 2`.
    pub fn prefix_swapped(k: usize) -> PatternSpec {
        let mut letters: Vec<usize> = (1..=k).collect();
        letters.swap(0, 1);
        PatternSpec::classical(&letters).expect("k >= 2")
    }

    /// The rotated pattern `(d+1, d+2, …, k, 1, 2, …, d)`.
    /// `rotation(k, 1)` is `2-3-…-k-1`.
    pub fn rotation(k: usize, d: usize) -> Result<PatternSpec> {
        if d == 0 || d >= k {
            return Err(Error::BadParameter(format!(
                "rotation needs 1 <= d < k, got k = {k}, d = {d}"
            )));
        }
        let letters: Vec<usize> = (d + 1..=k).chain(1..=d).collect();
        PatternSpec::classical(&letters)
    }

    /// Parses digit-and-dash syntax: `"1-3-2"` is classical, `"12-43"` makes
    /// the letters inside each dashless run adjacent. Digits above 9 are not
    /// supported; build longer patterns with the constructors.
    pub fn parse(text: &str) -> Result<PatternSpec> {
        let mut letters = Vec::new();
        let mut adjacency = Vec::new();
        let mut prev_was_digit = false;
        for ch in text.chars() {
            match ch {
                '1'..='9' => {
                    if prev_was_digit {
                        adjacency.push(true);
                    }
                    letters.push(ch as usize - '0' as usize);
                    prev_was_digit = true;
                }
                '-' => {
                    if !prev_was_digit {
                        return Err(Error::Parse(format!("misplaced dash in pattern {text:?}")));
                    }
                    adjacency.push(false);
                    prev_was_digit = false;
                }
                _ => return Err(Error::Parse(format!("bad character {ch:?} in pattern {text:?}"))),
            }
        }
        if !prev_was_digit {
            return Err(Error::Parse(format!("pattern {text:?} ends with a dash")));
        }
        PatternSpec::new(letters, adjacency)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Must pattern letters `gap` and `gap + 1` (zero-indexed) be adjacent in
    /// the host?
    pub fn adjacent(&self, gap: usize) -> bool {
        self.adjacency[gap]
    }

    pub fn is_classical(&self) -> bool {
        self.adjacency.iter().all(|&a| !a)
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 && !self.adjacency[i - 1] {
                write!(f, "-")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// The pattern `1-3-2`, the pivot of the whole crate.
pub fn pattern_132() -> PatternSpec {
    PatternSpec::classical(&[1, 3, 2]).expect("valid")
}

/// Block decomposition of a 132-avoiding involution (or of an involution
/// containing 132 exactly once) around the position of its maximum value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockDecomposition {
    /// `π_n = n`; `inner` is `π` restricted to the first `n − 1` positions.
    LastIsMax { inner: Permutation },
    /// `π = (β, n, γ, δ, j)` with `δ = β⁻¹`: `beta` and `gamma` are
    /// normalized to permutations of their own lengths, `j` is the position
    /// of `n` (and the final value of `π`).
    Blocks {
        beta: Permutation,
        gamma: Permutation,
        j: usize,
    },
    /// `π = (β, m, 2m+1, γ, m+1)` with `γ = β⁻¹` and `n = 2m + 1`; only
    /// arises for involutions containing 132 exactly once.
    OddPivot { beta: Permutation, m: usize },
}

/// Which precondition `block_decompose` enforces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompositionMode {
    /// Input must be a 132-avoiding involution.
    Avoiding,
    /// Input must be an involution containing 132 exactly once.
    OneOccurrence,
}

/// Normalizes a window of values to a permutation of `{1, …, len}` by rank.
fn normalize(window: &[usize]) -> Permutation {
    let mut sorted: Vec<usize> = window.to_vec();
    sorted.sort_unstable();
    let values = window
        .iter()
        .map(|v| sorted.binary_search(v).expect("present") + 1)
        .collect();
    Permutation { values }
}

/// Splits an involution around the position `j` of its maximum per the block
/// decomposition, validating every structural claim along the way.
pub fn block_decompose(p: &Permutation, mode: DecompositionMode) -> Result<BlockDecomposition> {
    let pat = pattern_132();
    let occurrences = p.count_occurrences(&pat);
    match mode {
        DecompositionMode::Avoiding if occurrences != 0 => {
            return Err(Error::Domain(format!("{p} contains 1-3-2")));
        }
        DecompositionMode::OneOccurrence if occurrences != 1 => {
            return Err(Error::Domain(format!(
                "{p} contains 1-3-2 {occurrences} times, need exactly 1"
            )));
        }
        _ => {}
    }
    if !p.is_involution() {
        return Err(Error::Domain(format!("{p} is not an involution")));
    }
    let n = p.len();
    if n == 0 {
        return Err(Error::Domain("empty permutation has no maximum".to_string()));
    }
    let j = p.preimage(n);
    if j == n {
        let inner = normalize(&p.values()[..n - 1]);
        return Ok(BlockDecomposition::LastIsMax { inner });
    }
    if 2 * j <= n {
        // π = (β, n, γ, δ, j): β on values n−j+1..n−1, γ on j+1..n−j,
        // δ = β⁻¹ on 1..j−1, and π_n = j.
        if p.image(n) != j {
            return Err(Error::Domain(format!("{p}: expected final value {j}")));
        }
        let beta_window = &p.values()[..j - 1];
        if beta_window.iter().any(|&v| v < n - j + 1) {
            return Err(Error::Domain(format!("{p}: leading block not on top values")));
        }
        let gamma_window = &p.values()[j..n - j];
        if gamma_window.iter().any(|&v| v <= j || v > n - j) {
            return Err(Error::Domain(format!("{p}: middle block out of range")));
        }
        let beta = normalize(beta_window);
        let delta = normalize(&p.values()[n - j..n - 1]);
        for i in 1..j {
            if delta.image(beta.image(i)) != i {
                return Err(Error::Domain(format!("{p}: trailing block is not the inverse")));
            }
        }
        let gamma = normalize(gamma_window);
        return Ok(BlockDecomposition::Blocks { beta, gamma, j });
    }
    // Only the one-occurrence mode admits the odd pivot shape
    // (β, m, 2m+1, γ, m+1) with n = 2m + 1 and j = m + 1.
    if mode == DecompositionMode::OneOccurrence && n % 2 == 1 && j == (n + 1) / 2 {
        let m = n / 2;
        if p.image(m) == m && p.image(n) == m + 1 {
            let beta = normalize(&p.values()[..m - 1]);
            let gamma = normalize(&p.values()[m + 1..n - 1]);
            for i in 1..m {
                if gamma.image(beta.image(i)) != i {
                    return Err(Error::Domain(format!("{p}: odd pivot blocks not inverse")));
                }
            }
            return Ok(BlockDecomposition::OddPivot { beta, m });
        }
    }
    Err(Error::Domain(format!(
        "{p}: maximum at position {j} does not fit any decomposition case"
    )))
}

/// Reassembles what `block_decompose` split; the round trip is the identity
/// on its domain.
pub fn block_reassemble(decomposition: &BlockDecomposition, n: usize) -> Result<Permutation> {
    match decomposition {
        BlockDecomposition::LastIsMax { inner } => {
            if inner.len() + 1 != n {
                return Err(Error::Domain("length mismatch".to_string()));
            }
            let mut values = inner.values().to_vec();
            values.push(n);
            Permutation::from_one_line(values)
        }
        BlockDecomposition::Blocks { beta, gamma, j } => {
            let j = *j;
            if beta.len() != j - 1 || gamma.len() + 2 * j != n {
                return Err(Error::Domain("length mismatch".to_string()));
            }
            let mut values = Vec::with_capacity(n);
            for i in 1..j {
                values.push(beta.image(i) + n - j);
            }
            values.push(n);
            for i in 1..=gamma.len() {
                values.push(gamma.image(i) + j);
            }
            for v in 1..j {
                values.push(beta.preimage(v));
            }
            values.push(j);
            Permutation::from_one_line(values)
        }
        BlockDecomposition::OddPivot { beta, m } => {
            let m = *m;
            if n != 2 * m + 1 || beta.len() + 1 != m {
                return Err(Error::Domain("length mismatch".to_string()));
            }
            let mut values = Vec::with_capacity(n);
            for i in 1..m {
                values.push(beta.image(i) + m + 1);
            }
            values.push(m);
            values.push(n);
            for v in 1..m {
                values.push(beta.preimage(v));
            }
            values.push(m + 1);
            Permutation::from_one_line(values)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Permutation {
        Permutation::parse(text).unwrap()
    }

    #[test]
    fn involution_checks() {
        assert!(p("1 3 2").is_involution());
        assert!(!p("4 3 5 1 2").is_involution());
        assert!(Permutation::empty().is_involution());
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(p("4 3 5 1 2").inversions(), 7);
        assert_eq!(Permutation::identity(6).inversions(), 0);
        assert_eq!(p("1 3 2").inversions(), 1);
    }

    #[test]
    fn parity_values() {
        assert_eq!(Permutation::identity(4).parity(), Parity::Even);
        assert_eq!(p("1 3 2").parity(), Parity::Odd);
        assert_eq!(p("2 1").parity(), Parity::Odd);
    }

    #[test]
    fn statistics_of_43512() {
        let s = p("4 3 5 1 2").statistics();
        // Two right-to-left maxima: 5 and 2.
        assert_eq!(s.rtl_maxima, 2);
        assert_eq!(s.rises, 2);
        assert_eq!(s.descents, 2);
    }

    #[test]
    fn statistics_of_identity() {
        let s = Permutation::identity(7).statistics();
        assert_eq!(s.rises, 6);
        assert_eq!(s.fixed_points, 7);
        assert_eq!(s.rtl_maxima, 1);
        assert_eq!(s.ltr_minima, 1);
    }

    #[test]
    fn occurrences_from_the_definitions() {
        // 31542 contains 1-3-2 four times: 354, 154, 152, 142.
        let t = PatternSpec::parse("1-3-2").unwrap();
        assert_eq!(p("3 1 5 4 2").count_occurrences(&t), 4);
        assert_eq!(p("3 4 5 2 1").count_occurrences(&t), 0);

        // 3542176 has one occurrence of 12-43 (3576) but two of 1-2-4-3.
        let host = p("3 5 4 2 1 7 6");
        assert_eq!(host.count_occurrences(&PatternSpec::parse("12-43").unwrap()), 1);
        assert_eq!(host.count_occurrences(&PatternSpec::parse("1-2-4-3").unwrap()), 2);
    }

    #[test]
    fn avoidance() {
        let t = pattern_132();
        assert!(p("3 4 5 2 1").avoids(core::slice::from_ref(&t)));
        assert!(!p("3 1 5 4 2").avoids(core::slice::from_ref(&t)));
        assert!(Permutation::empty().avoids(core::slice::from_ref(&t)));
    }

    #[test]
    fn adjacency_counts_rises() {
        // Fully adjacent 12 counts exactly the rises.
        let adj12 = PatternSpec::parse("12").unwrap();
        for text in ["4 3 5 1 2", "1 2 3 4", "2 1 4 3"] {
            let q = p(text);
            assert_eq!(q.count_occurrences(&adj12), q.statistics().rises);
        }
    }

    #[test]
    fn inversions_complement_identity() {
        // inversions + occurrences of 1-2 = n(n-1)/2.
        let asc = PatternSpec::parse("1-2").unwrap();
        for text in ["4 3 5 1 2", "1 3 2", "2 1"] {
            let q = p(text);
            let n = q.len();
            assert_eq!(q.inversions() + q.count_occurrences(&asc), n * (n - 1) / 2);
        }
    }

    #[test]
    fn pattern_constructors() {
        assert_eq!(PatternSpec::monotone(4).to_string(), "1-2-3-4");
        assert_eq!(PatternSpec::prefix_swapped(4).to_string(), "2-1-3-4");
        assert_eq!(PatternSpec::rotation(4, 1).unwrap().to_string(), "2-3-4-1");
        assert_eq!(PatternSpec::rotation(5, 2).unwrap().to_string(), "3-4-5-1-2");
        assert!(PatternSpec::rotation(3, 3).is_err());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(PatternSpec::parse("1--2").is_err());
        assert!(PatternSpec::parse("-12").is_err());
        assert!(PatternSpec::parse("1-2-").is_err());
        assert!(PatternSpec::parse("1-x").is_err());
        assert!(PatternSpec::parse("1-1").is_err());
        assert!(Permutation::parse("1 1").is_err());
        assert!(Permutation::parse("0 1").is_err());
    }

    #[test]
    fn block_decomposition_cases() {
        // 21: the cycle form with empty blocks and j = 1.
        match block_decompose(&p("2 1"), DecompositionMode::Avoiding).unwrap() {
            BlockDecomposition::Blocks { beta, gamma, j } => {
                assert!(beta.is_empty());
                assert!(gamma.is_empty());
                assert_eq!(j, 1);
            }
            other => panic!("unexpected {other:?}"),
        }

        // 123: last value is the maximum.
        match block_decompose(&p("1 2 3"), DecompositionMode::Avoiding).unwrap() {
            BlockDecomposition::LastIsMax { inner } => assert_eq!(inner, p("1 2")),
            other => panic!("unexpected {other:?}"),
        }

        // 45312 = (β, 5, γ, δ, 2) with β = one top value and γ a fixed point.
        match block_decompose(&p("4 5 3 1 2"), DecompositionMode::Avoiding).unwrap() {
            BlockDecomposition::Blocks { beta, gamma, j } => {
                assert_eq!(beta, p("1"));
                assert_eq!(gamma, p("1"));
                assert_eq!(j, 2);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn block_reassembly_round_trips() {
        for text in ["2 1", "1 2 3", "4 5 3 1 2", "3 4 1 2", "1"] {
            let q = p(text);
            let d = block_decompose(&q, DecompositionMode::Avoiding).unwrap();
            assert_eq!(block_reassemble(&d, q.len()).unwrap(), q);
        }
        // 132 contains the pattern once and decomposes via the odd pivot.
        let q = p("1 3 2");
        let d = block_decompose(&q, DecompositionMode::OneOccurrence).unwrap();
        assert!(matches!(d, BlockDecomposition::OddPivot { m: 1, .. }));
        assert_eq!(block_reassemble(&d, 3).unwrap(), q);
    }

    #[test]
    fn block_decompose_rejects_wrong_mode() {
        assert!(block_decompose(&p("1 3 2"), DecompositionMode::Avoiding).is_err());
        assert!(block_decompose(&p("1 2 3"), DecompositionMode::OneOccurrence).is_err());
        assert!(block_decompose(&p("4 3 5 1 2"), DecompositionMode::Avoiding).is_err());
    }
}
