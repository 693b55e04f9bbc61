//! Lattice words over `{Up, Down}`: Dyck word prefixes, bilateral words, the
//! separator-moving bijection between them, and the word statistics that
//! carry involution statistics.
//!
//! Text form uses `U` for an up step (the paper's `x`) and `D` for a down
//! step (the overlined letter).
//!
//! Both word families factor into Dyck-word segments around *separators*:
//!
//! - a Dyck prefix is `w₀ x w₁ x … x wₚ` where `p = #U − #D` and the `i`-th
//!   separator is the up step leaving level `i − 1` for the last time;
//! - a bilateral word is `w₀ x̄ w₁ x̄ … x̄ w_q x w_{q+1} x … x w_{q+r}` where
//!   the down separators are the first-passage steps to depths `−1 … −q`.
//!
//! The bijection [`xi`] keeps every factor in place and flips the first
//! `⌈p/2⌉` separators from up to down.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::Result;

/// One lattice step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    fn flip(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }
}

/// A finite word over `{Up, Down}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeWord {
    steps: Vec<Step>,
}

/// Which of the word families a given word belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub dyck_prefix: bool,
    pub dyck_word: bool,
    pub bilateral: bool,
}

impl Classification {
    /// True when the word is in none of the three families.
    pub fn is_other(&self) -> bool {
        !self.dyck_prefix && !self.dyck_word && !self.bilateral
    }
}

impl LatticeWord {
    pub fn new(steps: Vec<Step>) -> LatticeWord {
        LatticeWord { steps }
    }

    pub fn empty() -> LatticeWord {
        LatticeWord { steps: Vec::new() }
    }

    /// Parses a string over `{U, D}`.
    pub fn parse(text: &str) -> Result<LatticeWord> {
        let steps = text
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                _ => Err(Error::Parse(format!("bad step {c:?} in word {text:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticeWord { steps })
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn ups(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::Up).count()
    }

    pub fn downs(&self) -> usize {
        self.len() - self.ups()
    }

    /// Final height `#U − #D`.
    pub fn surplus(&self) -> isize {
        self.ups() as isize - self.downs() as isize
    }

    pub fn classify(&self) -> Classification {
        let mut height: isize = 0;
        let mut min_height: isize = 0;
        for &s in &self.steps {
            height += if s == Step::Up { 1 } else { -1 };
            min_height = min_height.min(height);
        }
        let dyck_prefix = min_height >= 0;
        Classification {
            dyck_prefix,
            dyck_word: dyck_prefix && height == 0,
            bilateral: height == 0 || height == -1,
        }
    }

    pub fn is_dyck_prefix(&self) -> bool {
        self.classify().dyck_prefix
    }

    pub fn is_dyck_word(&self) -> bool {
        self.classify().dyck_word
    }

    pub fn is_bilateral(&self) -> bool {
        self.classify().bilateral
    }

    /// `−min(0, minimal prefix height)`: how far the word dips below the
    /// axis. Zero on Dyck prefixes; `⌈p/2⌉` on the bilateral image of a
    /// prefix with surplus `p`.
    pub fn min_nonpositive_height(&self) -> usize {
        let mut height: isize = 0;
        let mut min_height: isize = 0;
        for &s in &self.steps {
            height += if s == Step::Up { 1 } else { -1 };
            min_height = min_height.min(height);
        }
        (-min_height) as usize
    }

    /// Adjacent equal pairs `UU` in `w·U` plus adjacent pairs `DD` in `w`
    /// (overlaps counted). On the bilateral image of an involution this is
    /// its number of rises.
    pub fn double_step_count(&self) -> usize {
        let mut count = 0;
        for pair in self.steps.windows(2) {
            if pair[0] == pair[1] {
                count += 1;
            }
        }
        // The appended up step forms one more pair when w ends with U.
        if self.steps.last() == Some(&Step::Up) {
            count += 1;
        }
        count
    }
}

impl fmt::Display for LatticeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return write!(f, "(empty)");
        }
        for &s in &self.steps {
            write!(f, "{}", if s == Step::Up { 'U' } else { 'D' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for LatticeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A word split into Dyck factors and separator steps.
///
/// `pieces[i]` is the factor before the `i`-th separator; the last factor
/// follows the final separator. `separators[i]` is the direction of the
/// `i`-th separator, so the original word is
/// `pieces[0] separators[0] pieces[1] … separators[k-1] pieces[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub pieces: Vec<LatticeWord>,
    pub separators: Vec<Step>,
}

impl Factorization {
    pub fn assemble(&self) -> LatticeWord {
        let mut steps = Vec::new();
        for (i, piece) in self.pieces.iter().enumerate() {
            if i > 0 {
                steps.push(self.separators[i - 1]);
            }
            steps.extend_from_slice(piece.steps());
        }
        LatticeWord::new(steps)
    }
}

/// Marks each position as a separator or not, for a word whose every factor
/// between separators must be a Dyck word. Down separators are the
/// first-passage steps to new depths; up separators are the steps leaving a
/// level for the last time, counted from the lowest point on.
fn separator_positions(w: &LatticeWord) -> Vec<bool> {
    let n = w.len();
    let mut height = vec![0isize; n + 1];
    for (i, &s) in w.steps().iter().enumerate() {
        height[i + 1] = height[i] + if s == Step::Up { 1 } else { -1 };
    }
    let min_height = *height.iter().min().unwrap_or(&0);
    let final_height = height[n];
    let mut is_separator = vec![false; n];
    // First passage down to −1, −2, …, min.
    let mut target = -1;
    for i in 0..n {
        if height[i + 1] == target && target >= min_height {
            is_separator[i] = true;
            target -= 1;
        }
    }
    // Last departure up from min, min+1, …, final−1.
    for level in min_height..final_height {
        let last_at = (0..=n).rev().find(|&i| height[i] == level).expect("level visited");
        is_separator[last_at] = true;
        debug_assert_eq!(w.steps()[last_at], Step::Up);
    }
    is_separator
}

/// Factors a Dyck prefix or bilateral word into Dyck factors around its
/// separators. Errors when the word is in neither family.
pub fn factorize(w: &LatticeWord) -> Result<Factorization> {
    let class = w.classify();
    if !class.dyck_prefix && !class.bilateral {
        return Err(Error::Domain(format!(
            "{w} is neither a Dyck prefix nor a bilateral word"
        )));
    }
    let is_separator = separator_positions(w);
    let mut pieces = vec![LatticeWord::empty()];
    let mut separators = Vec::new();
    for (i, &s) in w.steps().iter().enumerate() {
        if is_separator[i] {
            separators.push(s);
            pieces.push(LatticeWord::empty());
        } else {
            pieces.last_mut().expect("nonempty").steps.push(s);
        }
    }
    debug_assert!(pieces.iter().all(|p| p.is_dyck_word()));
    Ok(Factorization { pieces, separators })
}

/// The Chottin–Cori style bijection from Dyck prefixes to bilateral words:
/// flip the first `⌈p/2⌉` of the `p` up separators to down steps, keeping
/// every Dyck factor in place.
pub fn xi(w: &LatticeWord) -> Result<LatticeWord> {
    if !w.is_dyck_prefix() {
        return Err(Error::Domain(format!("xi needs a Dyck prefix, got {w}")));
    }
    let mut f = factorize(w)?;
    let p = f.separators.len();
    for s in f.separators.iter_mut().take(p.div_ceil(2)) {
        *s = s.flip();
    }
    Ok(f.assemble())
}

/// Inverse of [`xi`]: flip every down separator of a bilateral word back up.
pub fn xi_inv(b: &LatticeWord) -> Result<LatticeWord> {
    if !b.is_bilateral() {
        return Err(Error::Domain(format!("xi_inv needs a bilateral word, got {b}")));
    }
    let mut f = factorize(b)?;
    for s in f.separators.iter_mut() {
        *s = Step::Up;
    }
    Ok(f.assemble())
}

/// The recursive statistic `i(w)` on Dyck prefixes ("right Dyck steps"),
/// which equals the inversion count of the involution in correspondence.
///
/// `i(ε) = 0`; write `w = w₀ x w₁ x … x wₚ`. If `w₀ = ε`, drop the leading
/// separator and add the length of the remaining factors. Otherwise
/// `w₀ = x w₀′ x̄ w₀″` by first return, and removing that matched pair costs
/// the two displayed lengths.
pub fn right_dyck_steps(w: &LatticeWord) -> Result<usize> {
    if !w.is_dyck_prefix() {
        return Err(Error::Domain(format!(
            "right_dyck_steps needs a Dyck prefix, got {w}"
        )));
    }
    let f = factorize(w)?;
    Ok(right_dyck_steps_of_factors(&f.pieces))
}

fn right_dyck_steps_of_factors(pieces: &[LatticeWord]) -> usize {
    if pieces.len() <= 1 && pieces.iter().all(|p| p.is_empty()) {
        return 0;
    }
    let tail_len: usize = pieces[1..].iter().map(|p| p.len()).sum();
    if pieces[0].is_empty() {
        // w = x w₁ x … x wₚ.
        return tail_len + right_dyck_steps_of_factors(&pieces[1..]);
    }
    // w₀ = x w₀′ x̄ w₀″ by first return.
    let steps = pieces[0].steps();
    let mut depth = 0isize;
    let mut close = 0;
    for (i, &s) in steps.iter().enumerate() {
        depth += if s == Step::Up { 1 } else { -1 };
        if depth == 0 {
            close = i;
            break;
        }
    }
    let inner = LatticeWord::new(steps[1..close].to_vec());
    let after = LatticeWord::new(steps[close + 1..].to_vec());
    // |w₀′ x̄ w₀″ w₁…wₚ| + |w₀″ w₁…wₚ|, then recurse on w₀′w₀″ x w₁ x … x wₚ.
    let first = inner.len() + 1 + after.len() + tail_len;
    let second = after.len() + tail_len;
    let mut merged_steps = inner.steps().to_vec();
    merged_steps.extend_from_slice(after.steps());
    let mut new_pieces = vec![LatticeWord::new(merged_steps)];
    new_pieces.extend_from_slice(&pieces[1..]);
    first + second + right_dyck_steps_of_factors(&new_pieces)
}

/// Splits a bilateral word `w` into `(u, v)`: in `w·U`, `u` collects the
/// letter following each up step and `v` the letter following each down
/// step, in order.
pub fn split_uv(w: &LatticeWord) -> Result<(LatticeWord, LatticeWord)> {
    if !w.is_bilateral() {
        return Err(Error::Domain(format!("split_uv needs a bilateral word, got {w}")));
    }
    let mut extended = w.steps().to_vec();
    extended.push(Step::Up);
    let mut u = Vec::new();
    let mut v = Vec::new();
    for pair in extended.windows(2) {
        match pair[0] {
            Step::Up => u.push(pair[1]),
            Step::Down => v.push(pair[1]),
        }
    }
    Ok((LatticeWord::new(u), LatticeWord::new(v)))
}

/// Rebuilds the bilateral word from a `(u, v)` pair; inverse of [`split_uv`].
/// The first letter is forced: exactly one choice lets the interleaving
/// consume both words and end on the appended up step.
pub fn merge_uv(u: &LatticeWord, v: &LatticeWord) -> Result<LatticeWord> {
    let mut candidates = Vec::new();
    for first in [Step::Up, Step::Down] {
        if let Some(w) = try_merge(u, v, first) {
            candidates.push(w);
        }
    }
    match candidates.len() {
        1 => Ok(candidates.pop().expect("one candidate")),
        0 => Err(Error::Domain(format!("({u}, {v}) is not a split pair"))),
        _ => Err(Error::Domain(format!("({u}, {v}) has an ambiguous merge"))),
    }
}

fn try_merge(u: &LatticeWord, v: &LatticeWord, first: Step) -> Option<LatticeWord> {
    let n = u.len() + v.len();
    if n == 0 {
        return if first == Step::Up { Some(LatticeWord::empty()) } else { None };
    }
    let mut word = vec![first];
    let (mut iu, mut iv) = (0, 0);
    for _ in 0..n {
        let last = *word.last().expect("nonempty");
        let next = match last {
            Step::Up => {
                let s = *u.steps().get(iu)?;
                iu += 1;
                s
            }
            Step::Down => {
                let s = *v.steps().get(iv)?;
                iv += 1;
                s
            }
        };
        word.push(next);
    }
    // All letters consumed and the final (appended) letter is the up step.
    if iu == u.len() && iv == v.len() && word.pop() == Some(Step::Up) {
        let w = LatticeWord::new(word);
        w.is_bilateral().then_some(w)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> LatticeWord {
        LatticeWord::parse(text).unwrap()
    }

    #[test]
    fn classification() {
        let c = w("UUDD").classify();
        assert!(c.dyck_prefix && c.dyck_word && c.bilateral);
        let c = w("DDUU").classify();
        assert!(!c.dyck_prefix && !c.dyck_word && c.bilateral);
        let c = LatticeWord::empty().classify();
        assert!(c.dyck_prefix && c.dyck_word && c.bilateral);
        let c = w("DDD").classify();
        assert!(c.is_other());
    }

    #[test]
    fn xi_on_the_worked_example() {
        assert_eq!(xi(&w("UDUUUDUDUUUDDU")).unwrap(), w("UDDDUDUDUUUDDU"));
        assert_eq!(xi_inv(&w("UDDDUDUDUUUDDU")).unwrap(), w("UDUUUDUDUUUDDU"));
    }

    #[test]
    fn xi_on_all_length_four_words() {
        let pairs = [
            ("UUUU", "DDUU"),
            ("UUUD", "DUUD"),
            ("UUDU", "DUDU"),
            ("UUDD", "UUDD"),
            ("UDUU", "UDDU"),
            ("UDUD", "UDUD"),
        ];
        for (prefix, bilateral) in pairs {
            assert_eq!(xi(&w(prefix)).unwrap(), w(bilateral), "xi({prefix})");
            assert_eq!(xi_inv(&w(bilateral)).unwrap(), w(prefix), "xi_inv({bilateral})");
        }
    }

    #[test]
    fn xi_fixes_dyck_words() {
        for text in ["UUDD", "UDUD", "UUDUDD"] {
            assert_eq!(xi(&w(text)).unwrap(), w(text));
        }
        assert_eq!(xi(&LatticeWord::empty()).unwrap(), LatticeWord::empty());
    }

    #[test]
    fn xi_rejects_non_prefixes() {
        assert!(xi(&w("DU")).is_err());
        assert!(xi_inv(&w("UUU")).is_err());
    }

    #[test]
    fn xi_preserves_factors() {
        // Length and the factor multiset survive; only separators move.
        for text in ["UDUUUDUDUUUDDU", "UUUU", "UDUU", "UUDUDU"] {
            let word = w(text);
            let image = xi(&word).unwrap();
            assert_eq!(image.len(), word.len());
            let mut a = factorize(&word).unwrap().pieces;
            let mut b = factorize(&image).unwrap().pieces;
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn right_dyck_steps_base_cases() {
        assert_eq!(right_dyck_steps(&LatticeWord::empty()).unwrap(), 0);
        assert_eq!(right_dyck_steps(&w("UU")).unwrap(), 0);
        assert_eq!(right_dyck_steps(&w("UD")).unwrap(), 1);
        assert!(right_dyck_steps(&w("DU")).is_err());
    }

    #[test]
    fn double_steps() {
        assert_eq!(w("DUUD").double_step_count(), 1);
        assert_eq!(w("UUDD").double_step_count(), 2);
        assert_eq!(LatticeWord::empty().double_step_count(), 0);
        assert_eq!(w("D").double_step_count(), 0);
        assert_eq!(w("U").double_step_count(), 1);
    }

    #[test]
    fn split_uv_examples() {
        let (u, v) = split_uv(&w("DUUD")).unwrap();
        assert_eq!(u, w("UD"));
        assert_eq!(v, w("UU"));
        assert_eq!(merge_uv(&u, &v).unwrap(), w("DUUD"));

        let (u, v) = split_uv(&LatticeWord::empty()).unwrap();
        assert!(u.is_empty() && v.is_empty());
        assert_eq!(merge_uv(&u, &v).unwrap(), LatticeWord::empty());

        // Resolved by the reconstruction rule: UD splits as u = D, v = U.
        let (u, v) = split_uv(&w("UD")).unwrap();
        assert_eq!(u, w("D"));
        assert_eq!(v, w("U"));
        assert_eq!(merge_uv(&u, &v).unwrap(), w("UD"));
    }

    #[test]
    fn split_uv_shape() {
        for text in ["DUUD", "UDDU", "DUDU", "UUDD", "UDUDD", "DD"] {
            let word = w(text);
            if !word.is_bilateral() {
                continue;
            }
            let n = word.len();
            let (u, v) = split_uv(&word).unwrap();
            assert_eq!(u.len(), n / 2);
            assert_eq!(v.len(), n.div_ceil(2));
            if !v.is_empty() {
                assert_eq!(*v.steps().last().unwrap(), Step::Up);
            }
            assert_eq!(merge_uv(&u, &v).unwrap(), word);
        }
    }

    #[test]
    fn min_nonpositive_height_examples() {
        assert_eq!(w("UUDD").min_nonpositive_height(), 0);
        assert_eq!(w("DDUU").min_nonpositive_height(), 2);
        assert_eq!(w("UDDDUDUDUUUDDU").min_nonpositive_height(), 2);
    }
}
