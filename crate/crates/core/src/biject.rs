//! The explicit bijections: growth steps shared by 132-avoiding involutions
//! and Dyck word prefixes, the tree isomorphism `phi` between them, the
//! reduction `psi` for involutions containing 132 exactly once, one-stack
//! sorting, and the right-to-left-maxima surgery maps.
//!
//! A 132-avoiding involution with `p` fixed points splits as
//! `π = π′ π″ x π‴` where `|π′| = (n − p)/2`, `π″` holds only cycle partners
//! of `π′`, and `x` is the first fixed point. Both growth steps act at the
//! seam after `π′`: one inserts a fixed point there, the other replaces the
//! first fixed point by a 2-cycle opening there. The same two moves on word
//! side are `w ↦ xw` and `w₀ x w₁ x … ↦ x w₀ x̄ w₁ x …`, and `phi` is the
//! identification of the two generating trees.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::Error;
use crate::perm::{pattern_132, Permutation};
use crate::words::{factorize, LatticeWord, Step};
use crate::Result;

/// The two succession moves of the generating tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthStep {
    /// Insert a new fixed point right after `π′` (word side: prepend an up
    /// step). Keeps the inversion parity.
    InsertFixedPoint,
    /// Replace the first fixed point by a 2-cycle opening right after `π′`
    /// (word side: prepend an up step and flip the first separator down).
    /// Flips the inversion parity; needs at least one fixed point.
    FixedPointToCycle,
}

fn check_avoiding_involution(p: &Permutation, what: &str) -> Result<()> {
    if !p.is_involution() {
        return Err(Error::Domain(format!("{what}: {p} is not an involution")));
    }
    if p.contains(&pattern_132()) {
        return Err(Error::Domain(format!("{what}: {p} contains 1-3-2")));
    }
    Ok(())
}

/// Position right after `π′`, where both growth steps act.
fn seam(p: &Permutation) -> usize {
    (p.len() - p.fixed_points()) / 2 + 1
}

/// Position of the first fixed point, if any.
fn first_fixed_point(p: &Permutation) -> Option<usize> {
    (1..=p.len()).find(|&i| p.image(i) == i)
}

/// Inserts a new fixed point at position `q`; old positions `≥ q` shift up.
fn insert_fixed(p: &Permutation, q: usize) -> Permutation {
    grow_cycles(p, q, None)
}

/// Inserts a new element at position `q` paired with the element currently
/// at position `t ≥ q` (which must be a fixed point).
fn insert_cycle(p: &Permutation, q: usize, t: usize) -> Permutation {
    debug_assert!(q <= t && p.image(t) == t);
    grow_cycles(p, q, Some(t))
}

fn grow_cycles(p: &Permutation, q: usize, cycle_with: Option<usize>) -> Permutation {
    let n = p.len();
    let shift = |u: usize| if u >= q { u + 1 } else { u };
    let mut values: Vec<usize> = (1..=n + 1).collect();
    for i in 1..=n {
        let j = p.image(i);
        if Some(i) == cycle_with {
            values[q - 1] = shift(i);
            values[shift(i) - 1] = q;
        } else if i != j {
            values[shift(i) - 1] = shift(j);
        }
    }
    if cycle_with.is_none() {
        values[q - 1] = q;
    }
    Permutation::from_one_line(values).expect("cycle surgery keeps a permutation")
}

/// Removes position `q`; `q` must be a fixed point.
fn delete_fixed(p: &Permutation, q: usize) -> Permutation {
    debug_assert_eq!(p.image(q), q);
    shrink_cycles(p, q)
}

/// Removes position `q`; its partner `p(q) > q` becomes a fixed point.
fn delete_cycle(p: &Permutation, q: usize) -> Permutation {
    debug_assert!(p.image(q) > q);
    shrink_cycles(p, q)
}

fn shrink_cycles(p: &Permutation, q: usize) -> Permutation {
    let n = p.len();
    let shift = |u: usize| if u > q { u - 1 } else { u };
    let mut values: Vec<usize> = (1..=n - 1).collect();
    for i in 1..=n {
        if i == q {
            continue;
        }
        let j = p.image(i);
        if j != q && i != j {
            values[shift(i) - 1] = shift(j);
        }
    }
    Permutation::from_one_line(values).expect("cycle surgery keeps a permutation")
}

/// Applies one growth step to a 132-avoiding involution.
pub fn grow_involution(p: &Permutation, step: GrowthStep) -> Result<Permutation> {
    check_avoiding_involution(p, "grow_involution")?;
    let q = seam(p);
    match step {
        GrowthStep::InsertFixedPoint => Ok(insert_fixed(p, q)),
        GrowthStep::FixedPointToCycle => {
            let t = first_fixed_point(p).ok_or_else(|| {
                Error::Domain(format!("grow_involution: {p} has no fixed point to cycle"))
            })?;
            Ok(insert_cycle(p, q, t))
        }
    }
}

/// Applies one growth step to a Dyck word prefix.
pub fn grow_word(w: &LatticeWord, step: GrowthStep) -> Result<LatticeWord> {
    if !w.is_dyck_prefix() {
        return Err(Error::Domain(format!("grow_word: {w} is not a Dyck prefix")));
    }
    match step {
        GrowthStep::InsertFixedPoint => {
            let mut steps = Vec::with_capacity(w.len() + 1);
            steps.push(Step::Up);
            steps.extend_from_slice(w.steps());
            Ok(LatticeWord::new(steps))
        }
        GrowthStep::FixedPointToCycle => {
            let f = factorize(w)?;
            if f.separators.is_empty() {
                return Err(Error::Domain(format!(
                    "grow_word: {w} has no up separator to flip"
                )));
            }
            // w₀ x w₁ x … x wₚ  ↦  x w₀ x̄ w₁ x w₂ … x wₚ
            let mut steps = Vec::with_capacity(w.len() + 1);
            steps.push(Step::Up);
            steps.extend_from_slice(f.pieces[0].steps());
            steps.push(Step::Down);
            for (i, piece) in f.pieces.iter().enumerate().skip(1) {
                if i > 1 {
                    steps.push(Step::Up);
                }
                steps.extend_from_slice(piece.steps());
            }
            Ok(LatticeWord::new(steps))
        }
    }
}

/// Undoes the growth step that produced `p`, returning the parent and the
/// step. Every nonempty 132-avoiding involution is exactly one of the two
/// child shapes: the inserted fixed point sits right at the seam (`π″ = ε`),
/// anything else is a cycle child.
pub fn parent_involution(p: &Permutation) -> Result<(Permutation, GrowthStep)> {
    check_avoiding_involution(p, "parent_involution")?;
    if p.is_empty() {
        return Err(Error::Domain("the empty involution is the root".to_string()));
    }
    let q = seam(p);
    if first_fixed_point(p) == Some(q) {
        Ok((delete_fixed(p, q), GrowthStep::InsertFixedPoint))
    } else {
        // Cycle children carry the new element at the seam position of the
        // grown object, which is one left of the current seam.
        let q = q - 1;
        if p.image(q) <= q {
            return Err(Error::Domain(format!(
                "parent_involution: {p} does not match either child shape"
            )));
        }
        Ok((delete_cycle(p, q), GrowthStep::FixedPointToCycle))
    }
}

/// Undoes the growth step that produced `w`.
pub fn parent_word(w: &LatticeWord) -> Result<(LatticeWord, GrowthStep)> {
    if !w.is_dyck_prefix() {
        return Err(Error::Domain(format!("parent_word: {w} is not a Dyck prefix")));
    }
    if w.is_empty() {
        return Err(Error::Domain("the empty word is the root".to_string()));
    }
    let f = factorize(w)?;
    if f.pieces[0].is_empty() {
        // w = x w₁ x … x wₚ: drop the leading separator.
        let steps = w.steps()[1..].to_vec();
        Ok((LatticeWord::new(steps), GrowthStep::InsertFixedPoint))
    } else {
        // w₀ = x w₀′ x̄ w₀″ by first return; parent is w₀′ x w₀″ x w₁ x ….
        let piece = f.pieces[0].steps();
        let mut depth = 0isize;
        let mut close = 0;
        for (i, &s) in piece.iter().enumerate() {
            depth += if s == Step::Up { 1 } else { -1 };
            if depth == 0 {
                close = i;
                break;
            }
        }
        let mut steps = Vec::with_capacity(w.len() - 1);
        steps.extend_from_slice(&piece[1..close]);
        steps.push(Step::Up);
        steps.extend_from_slice(&piece[close + 1..]);
        steps.extend_from_slice(&w.steps()[piece.len()..]);
        Ok((LatticeWord::new(steps), GrowthStep::FixedPointToCycle))
    }
}

/// The generating-tree bijection from 132-avoiding involutions to Dyck word
/// prefixes: replay the growth path of `p` on the word side.
pub fn phi(p: &Permutation) -> Result<LatticeWord> {
    check_avoiding_involution(p, "phi")?;
    let mut steps_taken = Vec::new();
    let mut current = p.clone();
    while !current.is_empty() {
        let (parent, step) = parent_involution(&current)?;
        steps_taken.push(step);
        current = parent;
    }
    let mut word = LatticeWord::empty();
    for &step in steps_taken.iter().rev() {
        word = grow_word(&word, step)?;
    }
    Ok(word)
}

/// Inverse of [`phi`].
pub fn phi_inv(w: &LatticeWord) -> Result<Permutation> {
    if !w.is_dyck_prefix() {
        return Err(Error::Domain(format!("phi_inv: {w} is not a Dyck prefix")));
    }
    let mut steps_taken = Vec::new();
    let mut current = w.clone();
    while !current.is_empty() {
        let (parent, step) = parent_word(&current)?;
        steps_taken.push(step);
        current = parent;
    }
    let mut p = Permutation::empty();
    for &step in steps_taken.iter().rev() {
        p = grow_involution(&p, step)?;
    }
    Ok(p)
}

/// The reduction for involutions containing 132 exactly once (with at least
/// one fixed point): the unique occurrence is `x z y` with `x` the first
/// fixed point, `z = π(x+1) > x + 1` and `y = x + 1`; replacing those three
/// letters by one fixed point lands in the 132-avoiders two shorter, with
/// the same number of fixed points and `i − 2n + 2p + 3` inversions.
pub fn psi(p: &Permutation) -> Result<Permutation> {
    if !p.is_involution() {
        return Err(Error::Domain(format!("psi: {p} is not an involution")));
    }
    let occurrences = p.count_occurrences(&pattern_132());
    if occurrences != 1 {
        return Err(Error::Domain(format!(
            "psi: {p} contains 1-3-2 {occurrences} times, need exactly 1"
        )));
    }
    let x = first_fixed_point(p)
        .ok_or_else(|| Error::Domain(format!("psi: {p} has no fixed point")))?;
    let n = p.len();
    let y = x + 1;
    if y > n {
        return Err(Error::Domain(format!("psi: {p} has no letter after its fixed point")));
    }
    let z = p.image(y);
    if z <= y {
        return Err(Error::Domain(format!(
            "psi: {p} does not have the x z … y shape at its first fixed point"
        )));
    }
    // Delete positions/values {x, x+1, z}; insert the fixed point z − 2.
    let renumber = |u: usize| if u < x { u } else { u - 2 };
    let mut values = alloc::vec![0usize; n - 2];
    for i in 1..=n {
        if i == x || i == y || i == z {
            continue;
        }
        values[renumber(i) - 1] = renumber(p.image(i));
    }
    values[z - 2 - 1] = z - 2;
    let sigma = Permutation::from_one_line(values).expect("psi output is a permutation");
    debug_assert!(sigma.is_involution());
    Ok(sigma)
}

/// One-stack sorting of a 132-avoiding permutation, read right to left; the
/// stack keeps its entries increasing from top to bottom and every pop must
/// release the smallest value not yet output. Insertions are up steps and
/// deletions down steps, so the record is a Dyck word of length `2n` whose
/// primitive factor count is the number of right-to-left maxima.
pub fn stack_sort_word(p: &Permutation) -> Result<LatticeWord> {
    let mut stack: Vec<usize> = Vec::new();
    let mut word = Vec::with_capacity(2 * p.len());
    let mut next_out = 1;
    let pop = |stack: &mut Vec<usize>, next_out: &mut usize, word: &mut Vec<Step>| {
        let top = stack.pop().expect("pop from nonempty stack");
        word.push(Step::Down);
        if top == *next_out {
            *next_out += 1;
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "stack sorting failed: {p} contains 1-3-2"
            )))
        }
    };
    for &v in p.values().iter().rev() {
        while let Some(&top) = stack.last() {
            if top < v {
                pop(&mut stack, &mut next_out, &mut word)?;
            } else {
                break;
            }
        }
        stack.push(v);
        word.push(Step::Up);
    }
    while !stack.is_empty() {
        pop(&mut stack, &mut next_out, &mut word)?;
    }
    Ok(LatticeWord::new(word))
}

/// Which surgery produced the image of [`rtl_lemma_map`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RtlLemmaCase {
    /// Even length, `2l+1` maxima → odd length, `2l+3` maxima.
    EvenToOdd,
    /// Odd length, one fixed point, `2l+1` maxima → even length, no fixed
    /// point, `2l+2` maxima.
    OddToEvenNoFixed,
    /// Odd length, three or more fixed points, `2l+1` maxima → even length,
    /// `2l+3` maxima.
    OddToEvenMoreFixed,
}

/// Image of the right-to-left-maxima surgery, with the case that applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RtlLemmaImage {
    pub result: Permutation,
    pub case: RtlLemmaCase,
}

/// The surgery behind the odd-maxima counting: grow a 132-avoiding
/// involution with an odd number `2l+1` of right-to-left maxima by one
/// letter, replacing one clustered fixed point by a 2-cycle. The three
/// disjoint cases (by length parity and fixed point count) are bijections
/// onto their stated codomains.
pub fn rtl_lemma_map(p: &Permutation) -> Result<RtlLemmaImage> {
    check_avoiding_involution(p, "rtl_lemma_map")?;
    if p.is_empty() {
        return Err(Error::Domain("rtl_lemma_map: empty input".to_string()));
    }
    let maxima = p.rtl_maxima_values();
    let s = maxima.len();
    if s % 2 == 0 {
        return Err(Error::Domain(format!(
            "rtl_lemma_map: {p} has an even number of right-to-left maxima"
        )));
    }
    let l = (s - 1) / 2;
    // m_0 = 0; the middle maximum m_{l+1} is the last fixed point.
    let m_lower = if l == 0 { 0 } else { maxima[l - 1] };
    let m_mid = maxima[l];
    if p.image(m_mid) != m_mid {
        return Err(Error::Domain(format!(
            "rtl_lemma_map: middle maximum of {p} is not a fixed point"
        )));
    }
    let fixed: Vec<usize> = (1..=p.len()).filter(|&i| p.image(i) == i).collect();
    if p.len() % 2 == 0 {
        // Even length with odd maxima always has at least two fixed points.
        let x = fixed[fixed.len() - 2];
        let q = m_lower + m_mid - x;
        Ok(RtlLemmaImage {
            result: insert_cycle(p, q, m_mid),
            case: RtlLemmaCase::EvenToOdd,
        })
    } else if fixed.len() == 1 {
        let q = (m_lower + m_mid + 1) / 2;
        Ok(RtlLemmaImage {
            result: insert_cycle(p, q, m_mid),
            case: RtlLemmaCase::OddToEvenNoFixed,
        })
    } else {
        let x = fixed[fixed.len() - 2];
        let q = m_lower + m_mid - x;
        Ok(RtlLemmaImage {
            result: insert_cycle(p, q, m_mid),
            case: RtlLemmaCase::OddToEvenMoreFixed,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Permutation {
        Permutation::parse(text).unwrap()
    }

    fn w(text: &str) -> LatticeWord {
        LatticeWord::parse(text).unwrap()
    }

    #[test]
    fn growth_at_length_one() {
        let one = p("1");
        assert_eq!(grow_involution(&one, GrowthStep::InsertFixedPoint).unwrap(), p("1 2"));
        assert_eq!(grow_involution(&one, GrowthStep::FixedPointToCycle).unwrap(), p("2 1"));
        assert_eq!(
            grow_involution(&Permutation::empty(), GrowthStep::InsertFixedPoint).unwrap(),
            p("1")
        );
        assert!(grow_involution(&Permutation::empty(), GrowthStep::FixedPointToCycle).is_err());
    }

    #[test]
    fn growth_inversion_deltas() {
        // Insert adds n − p inversions, cycle adds n − p + 1.
        for text in ["1 2", "2 1", "2 1 3 4", "3 4 1 2", "4 5 3 1 2"] {
            let q = p(text);
            let n = q.len();
            let fp = q.fixed_points();
            let grown = grow_involution(&q, GrowthStep::InsertFixedPoint).unwrap();
            assert_eq!(grown.inversions(), q.inversions() + n - fp);
            if fp > 0 {
                let grown = grow_involution(&q, GrowthStep::FixedPointToCycle).unwrap();
                assert_eq!(grown.inversions(), q.inversions() + n - fp + 1);
            }
        }
    }

    #[test]
    fn word_growth() {
        assert_eq!(grow_word(&w("U"), GrowthStep::InsertFixedPoint).unwrap(), w("UU"));
        assert_eq!(grow_word(&w("U"), GrowthStep::FixedPointToCycle).unwrap(), w("UD"));
        assert_eq!(
            grow_word(&LatticeWord::empty(), GrowthStep::InsertFixedPoint).unwrap(),
            w("U")
        );
        assert!(grow_word(&w("UD"), GrowthStep::FixedPointToCycle).is_err());
    }

    #[test]
    fn parents_invert_growth() {
        for text in ["1", "1 2", "2 1", "2 1 3 4", "3 4 1 2", "4 5 3 1 2", "3 2 1 4 5"] {
            let q = p(text);
            for step in [GrowthStep::InsertFixedPoint, GrowthStep::FixedPointToCycle] {
                if step == GrowthStep::FixedPointToCycle && q.fixed_points() == 0 {
                    continue;
                }
                let child = grow_involution(&q, step).unwrap();
                let (back, back_step) = parent_involution(&child).unwrap();
                assert_eq!(back, q, "child {child} of {q}");
                assert_eq!(back_step, step);
            }
        }
    }

    #[test]
    fn phi_small_values() {
        assert_eq!(phi(&p("1")).unwrap(), w("U"));
        assert_eq!(phi(&p("1 2")).unwrap(), w("UU"));
        assert_eq!(phi(&p("2 1")).unwrap(), w("UD"));
        assert_eq!(phi(&Permutation::empty()).unwrap(), LatticeWord::empty());
        assert_eq!(phi_inv(&w("UD")).unwrap(), p("2 1"));
        assert!(phi(&p("1 3 2")).is_err());
        assert!(phi_inv(&w("DU")).is_err());
    }

    #[test]
    fn psi_base_case() {
        assert_eq!(psi(&p("1 3 2")).unwrap(), p("1"));
        // Inversion bookkeeping: 1 − 2·3 + 2·1 + 3 = 0.
        assert_eq!(p("1").inversions(), 0);
        assert!(psi(&p("1 2 3")).is_err());
        assert!(psi(&p("2 1 4 3")).is_err());
    }

    #[test]
    fn psi_preserves_fixed_points() {
        let q = p("1 3 2 4 5");
        let image = psi(&q).unwrap();
        assert_eq!(image, p("1 2 3"));
        assert_eq!(image.fixed_points(), q.fixed_points() - 2 + 2 - 2 + 2);
        // p = 3 on both sides; inversions 1 − 10 + 6 + 3 = 0.
        assert_eq!(image.fixed_points(), 3);
        assert_eq!(image.inversions(), 0);
    }

    #[test]
    fn stack_sorting_worked_example() {
        assert_eq!(stack_sort_word(&p("4 3 5 1 2")).unwrap(), w("UUDDUUDUDD"));
        // One right-to-left maximum, so one primitive factor.
        assert_eq!(stack_sort_word(&Permutation::identity(3)).unwrap(), w("UUUDDD"));
        assert_eq!(stack_sort_word(&p("3 2 1")).unwrap(), w("UDUDUD"));
        assert!(stack_sort_word(&p("1 3 2")).is_err());
        assert!(stack_sort_word(&p("3 1 5 4 2")).is_err());
    }

    #[test]
    fn rtl_lemma_paper_examples() {
        // Length 20, five maxima → length 21, seven maxima.
        let pi = p("19 18 20 17 15 13 14 10 9 8 11 12 6 7 5 16 4 2 1 3");
        let sigma = p("20 19 21 18 16 14 15 17 11 10 9 12 13 6 7 5 8 4 2 1 3");
        let image = rtl_lemma_map(&pi).unwrap();
        assert_eq!(image.result, sigma);
        assert_eq!(image.case, RtlLemmaCase::EvenToOdd);
        assert_eq!(image.result.rtl_maxima_values(), alloc::vec![3, 4, 8, 13, 17, 18, 21]);

        // Length 19, one fixed point → length 20, six maxima, no fixed point.
        let pi = p("18 17 19 14 15 16 11 10 12 8 7 9 13 4 5 6 2 1 3");
        let sigma = p("19 18 20 15 16 17 12 11 13 14 8 7 9 10 4 5 6 2 1 3");
        let image = rtl_lemma_map(&pi).unwrap();
        assert_eq!(image.result, sigma);
        assert_eq!(image.case, RtlLemmaCase::OddToEvenNoFixed);
        assert_eq!(image.result.fixed_points(), 0);

        // Length 13, three fixed points → length 14, five maxima.
        let pi = p("12 13 10 9 6 5 7 8 4 3 11 1 2");
        let sigma = p("13 14 11 10 12 7 6 8 9 4 3 5 1 2");
        let image = rtl_lemma_map(&pi).unwrap();
        assert_eq!(image.result, sigma);
        assert_eq!(image.case, RtlLemmaCase::OddToEvenMoreFixed);
        assert_eq!(image.result.rtl_maxima_values(), alloc::vec![2, 5, 9, 12, 14]);
    }

    #[test]
    fn rtl_lemma_rejects_even_maxima() {
        assert!(rtl_lemma_map(&p("2 1")).is_err());
        assert!(rtl_lemma_map(&p("1 3 2")).is_err());
    }
}
