//! Closed-form counts: the binomial, Fibonacci, and power formulas that
//! accompany the generating functions, plus the small number-theoretic
//! helpers (Catalan, Motzkin, central binomials).

use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::succession::binomial;
use crate::Result;

fn big(n: usize) -> BigInt {
    BigInt::from(n)
}

/// `C(n, k)` with signed `k` (zero outside the triangle).
fn binom(n: usize, k: isize) -> BigInt {
    BigInt::from(binomial(n, k))
}

/// Floor of `a / 4` for possibly negative `a`.
fn floor_quarter(a: isize) -> isize {
    a.div_euclid(4)
}

/// Catalan number `C_m`.
pub fn catalan_number(m: usize) -> BigUint {
    binomial(2 * m, m as isize) / BigUint::from(m + 1)
}

/// Central binomial coefficient `C(n, ⌊n/2⌋)`: the number of 132-avoiding
/// involutions of length `n`.
pub fn central_binomial(n: usize) -> BigUint {
    binomial(n, (n / 2) as isize)
}

/// Motzkin numbers `1, 1, 2, 4, 9, 21, …` by the convolution recurrence
/// `M_{n+1} = M_n + Σ_k M_k M_{n−1−k}`.
pub fn motzkin_number(n: usize) -> BigUint {
    let mut m: Vec<BigUint> = alloc::vec![BigUint::one()];
    for i in 0..n {
        let mut next = m[i].clone();
        for k in 0..i {
            next += &m[k] * &m[i - 1 - k];
        }
        m.push(next);
    }
    m[n].clone()
}

/// Fibonacci with `F_0 = F_1 = 1`, extended to small negative indices by
/// the recurrence (`F_{-1} = 0`, `F_{-2} = 1`).
pub fn fibonacci(m: isize) -> BigInt {
    if m < -2 {
        // Not needed by any formula here.
        panic!("fibonacci index {m} out of supported range");
    }
    let mut prev = BigInt::one(); // F_{-2}
    let mut curr = BigInt::zero(); // F_{-1}
    for _ in -1..m {
        let next = &prev + &curr;
        prev = curr;
        curr = next;
    }
    curr
}

/// Even 132-avoiding involutions of length `n`: `C(n−1, 2⌊(n+1)/4⌋)`.
pub fn even_avoiders(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    binom(n - 1, 2 * floor_quarter(n as isize + 1))
}

/// Odd 132-avoiding involutions of length `n`: `C(n−1, 1 + 2⌊(n−2)/4⌋)`.
pub fn odd_avoiders(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::zero();
    }
    binom(n - 1, 1 + 2 * floor_quarter(n as isize - 2))
}

/// 132-avoiding involutions of length `n` with `r` rises:
/// `C(⌊n/2⌋, ⌊(r+1)/2⌋)·C(⌊(n−1)/2⌋, ⌊r/2⌋)`.
pub fn avoiders_by_rises(n: usize, r: usize) -> BigInt {
    if n == 0 {
        return if r == 0 { BigInt::one() } else { BigInt::zero() };
    }
    binom(n / 2, ((r + 1) / 2) as isize) * binom((n - 1) / 2, (r / 2) as isize)
}

/// Even involutions containing 132 exactly once: `C(n−3, 1 + 2⌊(n−5)/4⌋)`
/// for `n ≥ 5`, zero before.
pub fn even_one_occurrence(n: usize) -> BigInt {
    if n < 5 {
        return BigInt::zero();
    }
    binom(n - 3, 1 + 2 * floor_quarter(n as isize - 5))
}

/// Odd involutions containing 132 exactly once: `C(n−3, 2⌊(n−3)/4⌋)` for
/// `n ≥ 3`, zero before.
pub fn odd_one_occurrence(n: usize) -> BigInt {
    if n < 3 {
        return BigInt::zero();
    }
    binom(n - 3, 2 * floor_quarter(n as isize - 3))
}

/// The discrete form of the even-once count,
/// `½·C_{⌊(n−2)/2⌋}·(½⌊n/2⌋(3 + (−1)^{n+1}) − 1 − (−1)^{C(n−3,2)})`,
/// valid for `n ≥ 3`. The Catalan index is a floor: the quoted expression
/// only type-checks at even `n` otherwise.
pub fn even_one_occurrence_discrete(n: usize) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::BadParameter(format!(
            "the discrete even-once formula starts at n = 3, got {n}"
        )));
    }
    let half = big(n / 2);
    let swing = if n % 2 == 0 { big(1) } else { big(2) }; // ½(3 + (−1)^{n+1})
    let pair_parity = (n as isize - 3) * (n as isize - 4) / 2;
    let sign = if pair_parity % 2 == 0 { big(1) } else { -big(1) };
    let inner = half * swing - big(1) - sign;
    let total = BigInt::from(catalan_number((n - 2) / 2)) * inner;
    let (q, r) = total.div_rem(&big(2));
    if !r.is_zero() {
        return Err(Error::Series(format!(
            "discrete even-once value at n = {n} is not an integer"
        )));
    }
    Ok(q)
}

/// Right-to-left maxima law on 132-avoiding involutions: the number with
/// `s` maxima at length `n` (`1 ≤ s ≤ n`).
pub fn avoiders_by_rtl_maxima(n: usize, s: usize) -> BigInt {
    if s == 0 || s > n {
        return if n == 0 && s == 0 { BigInt::one() } else { BigInt::zero() };
    }
    if n % 2 == 1 && s % 2 == 0 {
        return BigInt::zero();
    }
    if s % 2 == 0 {
        let top = n - 1 - s / 2;
        binom(top, (n / 2) as isize - 1) - binom(top, (n / 2) as isize)
    } else {
        binom(n - 1 - (s - 1) / 2, (n / 2) as isize)
    }
}

/// 132-avoiding permutations of length `n` with `s` right-to-left maxima:
/// the ballot number `a_{2n−s−1, s−1}`.
pub fn permutations_by_rtl_maxima(n: usize, s: usize) -> BigInt {
    if n == 0 {
        return if s == 0 { BigInt::one() } else { BigInt::zero() };
    }
    if s == 0 || s > n {
        return BigInt::zero();
    }
    BigInt::from(crate::succession::ballot_count(2 * n - s - 1, s - 1))
}

/// `|I_n(132, 12…k)|` restricted to `p` fixed points, for `k ∈ {3,4,5}`:
/// the 2-power / Fibonacci / 3-power table.
pub fn bounded_by_fixed_points(k: usize, n: usize, p: usize) -> Result<BigInt> {
    if !(3..=5).contains(&k) {
        return Err(Error::BadParameter(format!(
            "the fixed-point table covers k in 3..=5, got {k}"
        )));
    }
    if p > n || p % 2 != n % 2 || p >= k {
        return Ok(BigInt::zero());
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let value = match k {
        3 => BigInt::from(2u32).pow(((n - 1) / 2) as u32),
        4 => match p {
            0 | 3 => fibonacci(n as isize - 2),
            _ => fibonacci(n as isize - 1),
        },
        _ => {
            let pow = BigInt::from(3u32).pow(((n - 1) / 2) as u32);
            match p {
                2 => BigInt::from(3u32).pow((n / 2 - 1) as u32),
                0 | 1 => (pow + big(1)) / big(2),
                _ => (pow - big(1)) / big(2),
            }
        }
    };
    Ok(value)
}

/// Even (`true`) or odd involutions avoiding both 132 and `12…k` of length
/// `n = 4l + residue`: the quoted sequences for `k ∈ {3,4,5}`.
pub fn bounded_by_parity(k: usize, n: usize, even: bool) -> Result<BigInt> {
    if !(3..=5).contains(&k) {
        return Err(Error::BadParameter(format!(
            "the parity table covers k in 3..=5, got {k}"
        )));
    }
    if n == 0 {
        return Ok(if even { BigInt::one() } else { BigInt::zero() });
    }
    // Index residues 1, 2, 3, 4 within n = 4l + residue.
    let l = ((n - 1) / 4) as u32;
    let residue = (n - 1) % 4; // 0 → 4l+1, …, 3 → 4l+4
    let two = |e: u32| BigInt::from(2u32).pow(e);
    let three = |e: u32| BigInt::from(3u32).pow(e);
    let value = match (k, even) {
        (3, true) => [two(2 * l), two(2 * l), big(0), two(2 * l + 1)][residue].clone(),
        (3, false) => [big(0), two(2 * l), two(2 * l + 1), two(2 * l + 1)][residue].clone(),
        (4, true) => [
            fibonacci(4 * l as isize),
            fibonacci(4 * l as isize + 1),
            fibonacci(4 * l as isize + 1),
            fibonacci(4 * l as isize + 2),
        ][residue]
            .clone(),
        (4, false) => [
            fibonacci(4 * l as isize - 1),
            fibonacci(4 * l as isize),
            fibonacci(4 * l as isize + 2),
            fibonacci(4 * l as isize + 3),
        ][residue]
            .clone(),
        (5, true) => [
            (three(2 * l) + big(1)) / big(2),
            three(2 * l),
            (three(2 * l + 1) - big(1)) / big(2),
            three(2 * l + 1),
        ][residue]
            .clone(),
        (5, false) => [
            (three(2 * l) - big(1)) / big(2),
            three(2 * l),
            (three(2 * l + 1) + big(1)) / big(2),
            three(2 * l + 1),
        ][residue]
            .clone(),
        _ => unreachable!(),
    };
    Ok(value)
}

/// 132-avoiding involutions containing `1-2` exactly once:
/// `(1 + (−1)ⁿ)/2` for `n ≥ 1`.
pub fn once_ascending_pair(n: usize) -> BigInt {
    if n >= 1 && n % 2 == 0 {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

/// 132-avoiding involutions containing `1-2` exactly twice:
/// `(2n − 3 − (−1)ⁿ)/4` for `n ≥ 1`.
pub fn twice_ascending_pair(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::zero();
    }
    let sign: i64 = if n % 2 == 0 { 1 } else { -1 };
    BigInt::from((2 * n as i64 - 3 - sign) / 4)
}

/// 132-avoiding involutions with exactly one adjacent rise:
/// `(2n − 1 + (−1)ⁿ)/4`.
pub fn once_adjacent_rise(n: usize) -> BigInt {
    let sign: i64 = if n % 2 == 0 { 1 } else { -1 };
    BigInt::from((2 * n as i64 - 1 + sign) / 4)
}

/// 132-avoiding involutions with exactly two adjacent rises:
/// `(2n(n−2) + 1 − (−1)ⁿ)/8`.
pub fn twice_adjacent_rise(n: usize) -> BigInt {
    let n = n as i64;
    let sign: i64 = if n % 2 == 0 { 1 } else { -1 };
    BigInt::from((2 * n * (n - 2) + 1 - sign) / 8)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_binomials() {
        assert_eq!(even_avoiders(5), big(6));
        assert_eq!(odd_avoiders(5), big(4));
        assert_eq!(even_avoiders(0), big(1));
        assert_eq!(odd_avoiders(1), big(0));
        // Splits sum to the central binomial coefficient.
        for n in 0..=14 {
            assert_eq!(
                even_avoiders(n) + odd_avoiders(n),
                BigInt::from(central_binomial(n)),
                "n = {n}"
            );
        }
    }

    #[test]
    fn rises_row_sums() {
        for n in 1..=14 {
            let row: BigInt = (0..n).map(|r| avoiders_by_rises(n, r)).sum();
            assert_eq!(row, BigInt::from(central_binomial(n)), "n = {n}");
        }
        for r in [0, 1, 2] {
            assert_eq!(avoiders_by_rises(3, r), big(1));
        }
    }

    #[test]
    fn one_occurrence_small_values() {
        assert_eq!(odd_one_occurrence(3), big(1));
        assert_eq!(even_one_occurrence(3), big(0));
        assert_eq!(even_one_occurrence(5), big(2));
        assert_eq!(even_one_occurrence(6), big(3));
        // Statement form agrees with the discrete form from n = 3 on.
        for n in 3..=20 {
            assert_eq!(
                even_one_occurrence_discrete(n).unwrap(),
                even_one_occurrence(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn rtl_maxima_values() {
        assert_eq!(avoiders_by_rtl_maxima(3, 1), big(2));
        assert_eq!(avoiders_by_rtl_maxima(3, 2), big(0));
        assert_eq!(avoiders_by_rtl_maxima(3, 3), big(1));
        for n in 1..=14 {
            let row: BigInt = (1..=n).map(|s| avoiders_by_rtl_maxima(n, s)).sum();
            assert_eq!(row, BigInt::from(central_binomial(n)), "n = {n}");
        }
    }

    #[test]
    fn motzkin_values() {
        let expected = [1u32, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(motzkin_number(n), BigUint::from(e), "n = {n}");
        }
    }

    #[test]
    fn bounded_tables_small() {
        assert_eq!(bounded_by_fixed_points(3, 4, 0).unwrap(), big(2));
        assert_eq!(bounded_by_fixed_points(3, 4, 2).unwrap(), big(2));
        assert_eq!(bounded_by_fixed_points(4, 4, 0).unwrap(), big(2));
        assert_eq!(bounded_by_fixed_points(4, 4, 2).unwrap(), big(3));
        assert_eq!(bounded_by_fixed_points(5, 4, 2).unwrap(), big(3));
        assert_eq!(bounded_by_fixed_points(5, 3, 1).unwrap(), big(2));
        assert_eq!(bounded_by_fixed_points(5, 3, 3).unwrap(), big(1));
        // Parity split at k = 4, n = 4: two even, three odd.
        assert_eq!(bounded_by_parity(4, 4, true).unwrap(), big(2));
        assert_eq!(bounded_by_parity(4, 4, false).unwrap(), big(3));
    }

    #[test]
    fn adjacent_rise_formulas() {
        assert_eq!(once_adjacent_rise(4), big(2));
        assert_eq!(twice_adjacent_rise(3), big(1));
        assert_eq!(once_ascending_pair(4), big(1));
        assert_eq!(twice_ascending_pair(3), big(1));
        assert_eq!(twice_ascending_pair(4), big(1));
    }
}
