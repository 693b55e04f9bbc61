//! The generating-function catalog: even/odd involutions avoiding (or
//! containing exactly once) 132, crossed with avoiding (or containing
//! exactly once) a second pattern from the monotone, prefix-swapped, and
//! rotated families.
//!
//! Naming: `Ie`/`Io`/`I` are even/odd/all 132-avoiding involutions,
//! `Je`/`Jo`/`J` the involutions containing 132 exactly once. `12k` is the
//! monotone pattern `1-2-…-k`, `2134k` the prefix-swapped one, `rot` the
//! rotation `(d+1 … k 1 … d)`, `23k1` its `d = 1` case, and a `_once`
//! suffix means the second pattern occurs exactly once instead of never.
//!
//! Every entry is computed as an exact truncated series. Where an even part
//! and an independent total are both known, the odd part is their
//! difference; the brute-force verification recounts all three.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;


use crate::error::Error;
use crate::Result;

use super::poly::{q_poly, r_k, rat, Poly};
use super::{catalan_series, Series};

/// Resolution of the two readings of the rotated-pattern theorem: its proof
/// equation and its displayed statement disagree on which of `d` and `k−d`
/// drives the prefactor. The proof reading is the one the brute force
/// confirms; the statement reading is kept for the record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RotationReading {
    #[default]
    Proof,
    Statement,
}

/// A family's even series, plus the odd part and total when the family has
/// an independent formula for them.
#[derive(Clone, Debug)]
pub struct FamilySeries {
    pub even: Series,
    pub odd: Option<Series>,
    pub total: Option<Series>,
}

fn x_series(order: usize) -> Series {
    Series::monomial(rat(1), 1, order)
}

fn poly_series(coeffs: &[i64], order: usize) -> Series {
    Poly::from_integers(coeffs).to_series(order)
}

/// `R_k(−x²)` as a series.
fn rk_neg_sq(k: usize, order: usize) -> Series {
    r_k(k)
        .substitute_square(true)
        .to_series(order)
        .expect("q_k(0) = 1")
}

/// `R_k(x²)` as a series.
fn rk_sq(k: usize, order: usize) -> Series {
    r_k(k)
        .substitute_square(false)
        .to_series(order)
        .expect("q_k(0) = 1")
}

/// `R^e_k(x²)` as a series.
fn rke_sq(k: usize, order: usize) -> Series {
    r_k(k)
        .even_part()
        .substitute_square(false)
        .to_series(order)
        .expect("q_k(0)q_k(0) = 1")
}

/// `R^o_k(x²)` as a series.
fn rko_sq(k: usize, order: usize) -> Series {
    r_k(k)
        .odd_part()
        .substitute_square(false)
        .to_series(order)
        .expect("q_k(0)q_k(0) = 1")
}

/// `I_{12…k}(x) = Σ_{j=0}^{k−1} x^{k−1−j} q_j(x²) / q_k(x²)`: all
/// involutions avoiding 132 and the monotone pattern. The prefix-swapped
/// class is counted by the same expression.
fn monotone_total(k: usize, order: usize) -> Series {
    let mut num = Series::zero(order);
    for j in 0..k {
        let piece = q_poly(j)
            .substitute_square(false)
            .to_series(order)
            .mul_xpow(k - 1 - j);
        num = num.add(&piece);
    }
    let den = q_poly(k).substitute_square(false).to_series(order);
    num.div(&den).expect("q_k(0) = 1")
}

/// `I_{12…k;1}(x) = x^k / q_k(x²)`: avoiding 132, containing the monotone
/// pattern exactly once.
fn monotone_once_total(k: usize, order: usize) -> Series {
    let den = q_poly(k).substitute_square(false).to_series(order);
    Series::one(order).div(&den).expect("q_k(0) = 1").mul_xpow(k)
}

/// `J_{12…m}(x) = Σ_{j=1}^{m−2} x^{m+1−j} q_j(x²) / q_m(x²)`: avoiding the
/// monotone pattern, containing 132 exactly once.
fn j_monotone_total(m: usize, order: usize) -> Series {
    let mut num = Series::zero(order);
    for j in 1..=m.saturating_sub(2) {
        let piece = q_poly(j)
            .substitute_square(false)
            .to_series(order)
            .mul_xpow(m + 1 - j);
        num = num.add(&piece);
    }
    let den = q_poly(m).substitute_square(false).to_series(order);
    num.div(&den).expect("q_m(0) = 1")
}

/// The central binomial series `Σ C(n,⌊n/2⌋) xⁿ = 2/(1 − 2x + √(1−4x²))`:
/// all 132-avoiding involutions by length.
pub fn central_binomial_series(order: usize) -> Series {
    let root = poly_series(&[1, 0, -4], order).sqrt().expect("constant 1");
    let den = poly_series(&[1, -2], order).add(&root);
    debug_assert!(den.coefficient(0) == rat(2));
    poly_series(&[2], order).div(&den).expect("constant 2")
}

/// Even/odd/all 132-avoiding involutions with no second pattern.
fn family_empty(order: usize) -> FamilySeries {
    let c_sq = catalan_series(order).substitute_square(false);
    let c_neg = catalan_series(order).substitute_square(true);
    let num = poly_series(&[2, -2], order).sub(&c_sq.sub(&c_neg).mul_xpow(2));
    let den = poly_series(&[1, -1], order)
        .add(&c_neg.mul_xpow(2))
        .mul(&poly_series(&[1, -1], order).sub(&c_sq.mul_xpow(2)))
        .scale(&rat(2));
    let even = num.div(&den).expect("constant 2");
    let total = central_binomial_series(order);
    let odd = total.sub(&even);
    FamilySeries { even, odd: Some(odd), total: Some(total) }
}

/// Avoiding 132 and `1-2-…-k`.
fn family_monotone(k: usize, order: usize) -> Result<FamilySeries> {
    if k == 0 {
        return Err(Error::BadParameter("monotone pattern needs k >= 1".into()));
    }
    let mut even = Series::zero(order);
    for j in 0..k {
        let mut term = Series::one(order).add(
            &rke_sq(k - 1 - j, order)
                .mul(&monotone_total(k - j, order))
                .mul_xpow(2),
        );
        for i in k - j..=k {
            term = term.mul(&rk_neg_sq(i, order));
        }
        even = even.add(&term.mul_xpow(j));
    }
    let total = monotone_total(k, order);
    let odd = total.sub(&even);
    Ok(FamilySeries { even, odd: Some(odd), total: Some(total) })
}

/// Avoiding 132 and `2-1-3-4-…-k`.
fn family_prefix_swapped(k: usize, order: usize) -> Result<FamilySeries> {
    if k < 2 {
        return Err(Error::BadParameter("prefix-swapped pattern needs k >= 2".into()));
    }
    let mut even = Series::zero(order);
    if k >= 3 {
        for j in 0..=k - 3 {
            let mut term = Series::one(order).add(
                &rke_sq(k - 1 - j, order)
                    .mul(&monotone_total(k - j, order))
                    .mul_xpow(2),
            );
            for i in k - j..=k {
                term = term.mul(&rk_neg_sq(i, order));
            }
            even = even.add(&term.mul_xpow(j));
        }
    }
    // The unrolled base: x^{k−2}·R₂(x)·Π_{j=3}^k R_j(−x²).
    let mut base = Series::one(order)
        .div(&poly_series(&[1, -1], order))
        .expect("constant 1");
    for j in 3..=k {
        base = base.mul(&rk_neg_sq(j, order));
    }
    even = even.add(&base.mul_xpow(k - 2));
    let total = monotone_total(k, order);
    let odd = total.sub(&even);
    Ok(FamilySeries { even, odd: Some(odd), total: Some(total) })
}

/// Avoiding 132 and the rotation `(d+1, …, k, 1, …, d)`, `1 ≤ d ≤ k/2`.
fn family_rotation(
    k: usize,
    d: usize,
    reading: RotationReading,
    order: usize,
) -> Result<FamilySeries> {
    if d == 0 || 2 * d > k {
        return Err(Error::BadParameter(format!(
            "rotation family needs 1 <= d <= k/2, got k = {k}, d = {d}"
        )));
    }
    // The proof equation hangs the prefactor on d, the statement on k − d;
    // they coincide when d = k − d.
    let (p, q) = match reading {
        RotationReading::Proof => (d, k - d),
        RotationReading::Statement => (k - d, d),
    };
    let mono = monotone_total(k - d, order);
    let mono_even = family_monotone(k - d, order)?.even;
    let total = {
        let num = Series::one(order).add(
            &rk_sq(q - 1, order)
                .sub(&rk_sq(p - 1, order))
                .mul(&mono)
                .mul_xpow(2),
        );
        let den = Series::one(order)
            .sub(&x_series(order))
            .sub(&rk_sq(p - 1, order).mul_xpow(2));
        num.div(&den)?
    };
    let even = {
        let prefactor = {
            let r = rk_neg_sq(p, order);
            let den = Series::one(order).sub(&r.mul_xpow(1));
            r.div(&den)?
        };
        let inner = Series::one(order)
            .add(&rke_sq(p - 1, order).mul(&total).mul_xpow(2))
            .add(
                &rk_neg_sq(p - 1, order)
                    .sub(&rk_neg_sq(q - 1, order))
                    .mul(&mono_even)
                    .mul_xpow(2),
            )
            .add(
                &rke_sq(q - 1, order)
                    .sub(&rke_sq(p - 1, order))
                    .mul(&mono)
                    .mul_xpow(2),
            );
        prefactor.mul(&inner)
    };
    let odd = total.sub(&even);
    Ok(FamilySeries { even, odd: Some(odd), total: Some(total) })
}

/// Avoiding 132, containing `1-2-…-k` exactly once.
fn family_monotone_once(k: usize, order: usize) -> Result<FamilySeries> {
    if k == 0 {
        return Err(Error::BadParameter("monotone pattern needs k >= 1".into()));
    }
    let even = if k == 1 {
        // The single length-1 involution has no inversions.
        x_series(order)
    } else {
        // Unroll Ie_k = R_k(−x²)(x·Ie_{k−1} + x²·R^e_{k−1}(x²)·I_{12…k;1})
        // from the k = 2 base x²/(1 − x⁴).
        let mut even = poly_series(&[0, 0, 1], order)
            .div(&poly_series(&[1, 0, 0, 0, -1], order))
            .expect("constant 1");
        for m in 3..=k {
            let total_m = monotone_once_total(m, order);
            even = rk_neg_sq(m, order).mul(
                &even
                    .mul_xpow(1)
                    .add(&rke_sq(m - 1, order).mul(&total_m).mul_xpow(2)),
            );
        }
        even
    };
    let total = monotone_once_total(k, order);
    let odd = total.sub(&even);
    Ok(FamilySeries { even, odd: Some(odd), total: Some(total) })
}

/// Avoiding 132, containing `2-1-3-4-…-k` exactly once.
fn family_prefix_swapped_once(k: usize, order: usize) -> Result<FamilySeries> {
    if k < 2 {
        return Err(Error::BadParameter("prefix-swapped pattern needs k >= 2".into()));
    }
    let mut even = Series::zero(order);
    for j in 3..=k {
        let mut term = rke_sq(j - 1, order)
            .div(&q_poly(j).substitute_square(false).to_series(order))
            .expect("q_j(0) = 1");
        for i in j..=k {
            term = term.mul(&rk_neg_sq(i, order));
        }
        even = even.add(&term.mul_xpow(k + 2));
    }
    even = even.mul(&poly_series(&[1, 0, -1], order));
    let total = if k == 2 {
        // Exactly one inversion and no 132 pins the object to 2134…n:
        // one per length from 2 on.
        poly_series(&[0, 0, 1], order)
            .div(&poly_series(&[1, -1], order))
            .expect("constant 1")
    } else {
        // Derived total: x^k · Π_{i=3}^k R_i(x²).
        let mut t = Series::one(order);
        for i in 3..=k {
            t = t.mul(&rk_sq(i, order));
        }
        t.mul_xpow(k)
    };
    let odd = total.sub(&even);
    Ok(FamilySeries { even, odd: Some(odd), total: Some(total) })
}

/// Avoiding 132, containing `2-3-…-k-1` exactly once.
fn family_rot1_once(k: usize, order: usize) -> Result<FamilySeries> {
    if k < 3 {
        return Err(Error::BadParameter("the rotated pattern needs k >= 3".into()));
    }
    let inner = family_monotone_once(k - 2, order)?;
    let geometric = Series::one(order)
        .div(&poly_series(&[1, -1], order))
        .expect("constant 1");
    let even = geometric
        .mul(inner.odd.as_ref().expect("monotone-once has an odd part"))
        .mul_xpow(3);
    let total = geometric.mul(&monotone_once_total(k - 2, order)).mul_xpow(3);
    let odd = total.sub(&even);
    Ok(FamilySeries { even, odd: Some(odd), total: Some(total) })
}

/// Containing 132 exactly once, no second pattern. The even part is the
/// two-square-roots expression; the total comes from the reduction to
/// 132-avoiders two letters shorter with at least one fixed point.
fn family_j_empty(order: usize) -> FamilySeries {
    let root_minus = poly_series(&[1, 0, -4], order).sqrt().expect("constant 1");
    let root_plus = poly_series(&[1, 0, 4], order).sqrt().expect("constant 1");
    let num = {
        poly_series(&[1, -2], order)
            .add(&root_minus.mul_xpow(1))
            .add(&root_plus.mul_xpow(1))
            .sub(&root_minus.mul(&root_plus))
            .mul_xpow(1)
    };
    let den = poly_series(&[1, -2], order)
        .add(&root_plus)
        .mul(&poly_series(&[1, -2], order).add(&root_minus));
    // The denominator's constant term is 4; checked, not assumed.
    assert!(den.coefficient(0) == rat(4));
    let even = num.div(&den).expect("constant 4");
    let total = central_binomial_series(order)
        .sub(&catalan_series(order).substitute_square(false))
        .mul_xpow(2);
    let odd = total.sub(&even);
    FamilySeries { even, odd: Some(odd), total: Some(total) }
}

/// Solves the coupled even/odd linear system shared by the families that
/// contain 132 exactly once and avoid a second pattern:
///
/// ```text
/// (1 − A)·Je − B·Jo = x·Je' + x³·R^o_{m−1}(x²)
/// −B·Je + (1 − A)·Jo = x·Jo' + x³·R^e_{m−1}(x²)
/// ```
///
/// with `A = x²R^o_{m−1}(x²)`, `B = x²R^e_{m−1}(x²)`.
fn j_family_step(
    m: usize,
    prev_even: &Series,
    prev_odd: &Series,
    order: usize,
) -> (Series, Series) {
    let a = rko_sq(m - 1, order).mul_xpow(2);
    let b = rke_sq(m - 1, order).mul_xpow(2);
    let rhs_e = prev_even
        .mul_xpow(1)
        .add(&rko_sq(m - 1, order).mul_xpow(3));
    let rhs_o = prev_odd
        .mul_xpow(1)
        .add(&rke_sq(m - 1, order).mul_xpow(3));
    let one_minus_a = Series::one(order).sub(&a);
    let det = one_minus_a.mul(&one_minus_a).sub(&b.mul(&b));
    let even = one_minus_a
        .mul(&rhs_e)
        .add(&b.mul(&rhs_o))
        .div(&det)
        .expect("det(0) = 1");
    let odd = b
        .mul(&rhs_e)
        .add(&one_minus_a.mul(&rhs_o))
        .div(&det)
        .expect("det(0) = 1");
    (even, odd)
}

/// Containing 132 exactly once, avoiding `1-2-…-k`.
fn family_j_monotone(k: usize, order: usize) -> Result<FamilySeries> {
    if k == 0 {
        return Err(Error::BadParameter("monotone pattern needs k >= 1".into()));
    }
    let mut even = Series::zero(order);
    let mut odd = Series::zero(order);
    for m in 3..=k {
        (even, odd) = j_family_step(m, &even, &odd, order);
    }
    let total = j_monotone_total(k, order);
    Ok(FamilySeries { even, odd: Some(odd), total: Some(total) })
}

/// Containing 132 exactly once, avoiding `2-1-3-4-…-k`.
fn family_j_prefix_swapped(k: usize, order: usize) -> Result<FamilySeries> {
    if k < 3 {
        return Err(Error::BadParameter(
            "the prefix-swapped J family starts at k = 3".into(),
        ));
    }
    // Base: Je_213 = x⁵/(1−4x⁴) and Jo_213 = x³(1−2x⁴)/(1−4x⁴).
    let quartic = poly_series(&[1, 0, 0, 0, -4], order);
    let mut even = poly_series(&[0, 0, 0, 0, 0, 1], order)
        .div(&quartic)
        .expect("constant 1");
    let mut odd = poly_series(&[0, 0, 0, 1, 0, 0, 0, -2], order)
        .div(&quartic)
        .expect("constant 1");
    let mut total = poly_series(&[0, 0, 0, 1, 0, 1, 0, -2], order)
        .div(&quartic)
        .expect("constant 1");
    for m in 4..=k {
        (even, odd) = j_family_step(m, &even, &odd, order);
        total = rk_sq(m, order).mul(
            &total
                .mul_xpow(1)
                .add(&rk_sq(m - 1, order).mul_xpow(3)),
        );
    }
    Ok(FamilySeries { even, odd: Some(odd), total: Some(total) })
}

/// Containing 132 exactly once, avoiding `2-3-…-k-1`.
fn family_j_rot1(k: usize, order: usize) -> Result<FamilySeries> {
    if k < 2 {
        return Err(Error::BadParameter("the rotated pattern needs k >= 2".into()));
    }
    let j_mono = if k - 1 >= 2 {
        family_j_monotone(k - 1, order)?.even
    } else {
        Series::zero(order)
    };
    let geometric = Series::one(order)
        .div(&poly_series(&[1, -1], order))
        .expect("constant 1");
    let even = geometric
        .mul(
            &rko_sq(k - 2, order)
                .mul_xpow(1)
                .add(&rke_sq(k - 2, order).mul(&j_monotone_total(k - 1, order)))
                .sub(&rk_neg_sq(k - 2, order).mul(&j_mono)),
        )
        .mul_xpow(2);
    // Derived total: x³·R_{k−2}(x²)·R_{k−1}(x²)/(1 − x·R_{k−1}(x²)).
    let total = {
        let den = Series::one(order).sub(&rk_sq(k - 1, order).mul_xpow(1));
        rk_sq(k - 2, order)
            .mul(&rk_sq(k - 1, order))
            .div(&den)?
            .mul_xpow(3)
    };
    let odd = total.sub(&even);
    Ok(FamilySeries { even, odd: Some(odd), total: Some(total) })
}

/// Containing both 132 and `2-1-3-4-…-k` exactly once.
fn family_j_prefix_swapped_once(k: usize, order: usize) -> Result<FamilySeries> {
    if k < 2 {
        return Err(Error::BadParameter("prefix-swapped pattern needs k >= 2".into()));
    }
    let mut even = Series::zero(order);
    for j in 2..=k.saturating_sub(1) {
        let mut term = rke_sq(j, order)
            .div(&q_poly(j + 1).substitute_square(false).to_series(order))
            .expect("q(0) = 1");
        for i in j + 1..=k {
            term = term.mul(&rk_neg_sq(i, order));
        }
        even = even.add(&term.mul_xpow(k + 3));
    }
    even = even.mul(&poly_series(&[1, 0, -1], order));
    let total = if k == 2 {
        // Exactly one inversion forming the unique 132: one object per
        // length from 3 on.
        poly_series(&[0, 0, 0, 1], order)
            .div(&poly_series(&[1, -1], order))
            .expect("constant 1")
    } else {
        let mut t = Series::one(order);
        for i in 3..=k {
            t = t.mul(&rk_sq(i, order));
        }
        t.mul_xpow(k + 1)
    };
    let odd = total.sub(&even);
    Ok(FamilySeries { even, odd: Some(odd), total: Some(total) })
}

/// Containing 132 exactly once and the second pattern exactly once, for the
/// monotone and rotated families: the even counts vanish identically.
fn family_j_vanishing(k: usize, order: usize) -> Result<FamilySeries> {
    if k < 2 {
        return Err(Error::BadParameter("pattern needs k >= 2".into()));
    }
    Ok(FamilySeries { even: Series::zero(order), odd: None, total: None })
}

/// Looks up a catalog family by base name.
pub fn family(
    name: &str,
    k: Option<usize>,
    d: Option<usize>,
    reading: RotationReading,
    order: usize,
) -> Result<FamilySeries> {
    let need_k = || k.ok_or_else(|| Error::BadParameter(format!("{name} needs --k")));
    match name {
        "empty" => Ok(family_empty(order)),
        "12k" => family_monotone(need_k()?, order),
        "2134k" => family_prefix_swapped(need_k()?, order),
        "rot" => {
            let d = d.ok_or_else(|| Error::BadParameter("rot needs --d".into()))?;
            family_rotation(need_k()?, d, reading, order)
        }
        "12k_once" => family_monotone_once(need_k()?, order),
        "2134k_once" => family_prefix_swapped_once(need_k()?, order),
        "23k1_once" => family_rot1_once(need_k()?, order),
        "J_empty" => Ok(family_j_empty(order)),
        "J_12k" => family_j_monotone(need_k()?, order),
        "J_2134k" => family_j_prefix_swapped(need_k()?, order),
        "J_23k1" => family_j_rot1(need_k()?, order),
        "J_12k_once" | "J_23k1_once" => family_j_vanishing(need_k()?, order),
        "J_2134k_once" => family_j_prefix_swapped_once(need_k()?, order),
        _ => Err(Error::UnknownName(format!("family {name:?}"))),
    }
}

/// All catalog entry names accepted by [`gf_catalog`].
pub fn catalog_names() -> Vec<&'static str> {
    alloc::vec![
        "Ie_empty", "Io_empty", "I_empty",
        "Ie_12k", "Io_12k", "I_12k",
        "Ie_2134k", "Io_2134k", "I_2134k",
        "Ie_rot", "Io_rot", "I_rot",
        "Ie_12k_once", "Io_12k_once", "I_12k_once",
        "Ie_2134k_once", "Io_2134k_once", "I_2134k_once",
        "Ie_23k1_once", "Io_23k1_once", "I_23k1_once",
        "Je_empty", "Jo_empty", "J_empty",
        "Je_12k", "Jo_12k", "J_12k",
        "Je_2134k", "Jo_2134k", "J_2134k",
        "Je_23k1", "Jo_23k1", "J_23k1",
        "Je_12k_once", "Je_23k1_once",
        "Je_2134k_once", "Jo_2134k_once", "J_2134k_once",
    ]
}

/// Evaluates one named catalog entry to an exact truncated series.
pub fn gf_catalog(
    name: &str,
    k: Option<usize>,
    d: Option<usize>,
    reading: RotationReading,
    order: usize,
) -> Result<Series> {
    let (prefix, base) = split_name(name)?;
    let fam = family(&base, k, d, reading, order)?;
    let series = match prefix {
        Part::Even => fam.even,
        Part::Odd => fam.odd.ok_or_else(|| {
            Error::UnknownName(format!("{name}: no odd companion for this family"))
        })?,
        Part::Total => fam.total.ok_or_else(|| {
            Error::UnknownName(format!("{name}: no total companion for this family"))
        })?,
    };
    Ok(series)
}

enum Part {
    Even,
    Odd,
    Total,
}

fn split_name(name: &str) -> Result<(Part, String)> {
    let (part, who, rest) = if let Some(rest) = name.strip_prefix("Ie_") {
        (Part::Even, 'I', rest)
    } else if let Some(rest) = name.strip_prefix("Io_") {
        (Part::Odd, 'I', rest)
    } else if let Some(rest) = name.strip_prefix("I_") {
        (Part::Total, 'I', rest)
    } else if let Some(rest) = name.strip_prefix("Je_") {
        (Part::Even, 'J', rest)
    } else if let Some(rest) = name.strip_prefix("Jo_") {
        (Part::Odd, 'J', rest)
    } else if let Some(rest) = name.strip_prefix("J_") {
        (Part::Total, 'J', rest)
    } else {
        return Err(Error::UnknownName(format!("catalog entry {name:?}")));
    };
    let base = if who == 'I' {
        String::from(rest)
    } else {
        format!("J_{rest}")
    };
    Ok((part, base))
}

/// The counting-series sanity check: exact rational arithmetic must land on
/// nonnegative integers whenever the series counts something.
pub fn assert_counting_series(s: &Series) -> Result<()> {
    if s.has_nonnegative_integer_coefficients() {
        Ok(())
    } else {
        Err(Error::Series(
            "catalog series has a negative or non-integer coefficient".into(),
        ))
    }
}

/// `R_k` as a series satisfies its own functional equation; used by the
/// verification targets.
pub fn r_k_functional_equation_holds(k: usize, order: usize) -> bool {
    let lhs = rk_series(k, order);
    let rhs_den = Series::one(order).sub(&rk_series(k - 1, order).mul_xpow(1));
    match Series::one(order).div(&rhs_den) {
        Ok(rhs) => lhs.agrees_with(&rhs, order),
        Err(_) => false,
    }
}

/// `R_k(x)` as a series.
pub fn rk_series(k: usize, order: usize) -> Series {
    r_k(k).to_series(order).expect("q_k(0) = 1")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(s: &Series, upto: usize) -> Vec<i64> {
        use num_traits::ToPrimitive;
        (0..=upto)
            .map(|n| {
                let c = s.coefficient(n);
                assert!(c.is_integer(), "non-integer coefficient {c} at {n}");
                c.to_integer().to_i64().unwrap()
            })
            .collect()
    }

    #[test]
    fn monotone_even_k2_is_the_quoted_rational_function() {
        // Ie_12 = (1+x)/(1−x⁴): 1, 1, 0, 0, 1, 1, 0, 0, …
        let fam = family_monotone(2, 11).unwrap();
        assert_eq!(coeffs(&fam.even, 11), [1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0]);
        // Io_12 = x²(1+x)/(1−x⁴).
        assert_eq!(coeffs(fam.odd.as_ref().unwrap(), 7), [0, 0, 1, 1, 0, 0, 1, 1]);
    }

    #[test]
    fn monotone_even_k3_expansion() {
        // Ie_123 = (1+x+x²−2x⁴)/(1−4x⁴): 1,1,1,0,2,4,4,0,8,…
        let fam = family_monotone(3, 8).unwrap();
        assert_eq!(coeffs(&fam.even, 8), [1, 1, 1, 0, 2, 4, 4, 0, 8]);
    }

    #[test]
    fn rotation_even_231_matches_example() {
        // Ie_231 = (x⁴−x³+x²−x+1)/((1−x)²(1+x²)).
        let fam = family_rotation(3, 1, RotationReading::Proof, 10).unwrap();
        let num = Poly::from_integers(&[1, -1, 1, -1, 1]).to_series(10);
        let den = Poly::from_integers(&[1, -1])
            .mul(&Poly::from_integers(&[1, -1]))
            .mul(&Poly::from_integers(&[1, 0, 1]))
            .to_series(10);
        let expected = num.div(&den).unwrap();
        assert!(fam.even.agrees_with(&expected, 10));
        // The statement reading disagrees with the worked example.
        let other = family_rotation(3, 1, RotationReading::Statement, 10).unwrap();
        assert!(!other.even.agrees_with(&expected, 10));
    }

    #[test]
    fn rotation_readings_coincide_when_symmetric() {
        let a = family_rotation(4, 2, RotationReading::Proof, 12).unwrap();
        let b = family_rotation(4, 2, RotationReading::Statement, 12).unwrap();
        assert!(a.even.agrees_with(&b.even, 12));
    }

    #[test]
    fn monotone_once_small_cases() {
        // Ie_12;1 = x²/(1−x⁴), Io_12;1 = x⁴/(1−x⁴).
        let fam = family_monotone_once(2, 9).unwrap();
        assert_eq!(coeffs(&fam.even, 9), [0, 0, 1, 0, 0, 0, 1, 0, 0, 0]);
        assert_eq!(coeffs(fam.odd.as_ref().unwrap(), 9), [0, 0, 0, 0, 1, 0, 0, 0, 1, 0]);

        // Ie_1234;1 = x⁴(x⁴+1)/((1+3x²+x⁴)(1−3x²+x⁴)) = x⁴(1+x⁴)/(1−7x⁴+x⁸).
        let fam = family_monotone_once(4, 12).unwrap();
        assert_eq!(
            coeffs(&fam.even, 12),
            [0, 0, 0, 0, 1, 0, 0, 0, 8, 0, 0, 0, 55]
        );
    }

    #[test]
    fn prefix_swapped_once_matches_example() {
        // Ie_2134;1 = x⁶(2−x⁴)/((1+3x²+x⁴)(1−3x²+x⁴)).
        let fam = family_prefix_swapped_once(4, 14).unwrap();
        let num = Poly::from_integers(&[0, 0, 0, 0, 0, 0, 2, 0, 0, 0, -1]).to_series(14);
        let den = Poly::from_integers(&[1, 0, 3, 0, 1])
            .mul(&Poly::from_integers(&[1, 0, -3, 0, 1]))
            .to_series(14);
        let expected = num.div(&den).unwrap();
        assert!(fam.even.agrees_with(&expected, 14));
    }

    #[test]
    fn rot1_once_examples() {
        // Ie_231;1 = 0 and Ie_2341;1 = x⁷/((1−x)(1−x⁴)).
        let fam = family_rot1_once(3, 10).unwrap();
        assert_eq!(coeffs(&fam.even, 10), [0; 11]);
        let fam = family_rot1_once(4, 12).unwrap();
        let expected = Poly::from_integers(&[0, 0, 0, 0, 0, 0, 0, 1])
            .to_series(12)
            .div(
                &Poly::from_integers(&[1, -1])
                    .mul(&Poly::from_integers(&[1, 0, 0, 0, -1]))
                    .to_series(12),
            )
            .unwrap();
        assert!(fam.even.agrees_with(&expected, 12));
    }

    #[test]
    fn j_monotone_small() {
        // Je_12 = 0; Je_123 = 2x⁵/(1−4x⁴).
        let fam = family_j_monotone(2, 8).unwrap();
        assert_eq!(coeffs(&fam.even, 8), [0; 9]);
        let fam = family_j_monotone(3, 13).unwrap();
        assert_eq!(coeffs(&fam.even, 13), [0, 0, 0, 0, 0, 2, 0, 0, 0, 8, 0, 0, 0, 32]);
        // Identity: even + odd = the quoted total.
        let rebuilt = fam.even.add(fam.odd.as_ref().unwrap());
        assert!(rebuilt.agrees_with(fam.total.as_ref().unwrap(), 13));
    }

    #[test]
    fn j_prefix_swapped_base() {
        let fam = family_j_prefix_swapped(3, 9).unwrap();
        // Je_213 = x⁵/(1−4x⁴); Jo_213 = x³(1−2x⁴)/(1−4x⁴).
        assert_eq!(coeffs(&fam.even, 9), [0, 0, 0, 0, 0, 1, 0, 0, 0, 4]);
        assert_eq!(coeffs(fam.odd.as_ref().unwrap(), 9), [0, 0, 0, 1, 0, 0, 0, 2, 0, 0]);
        let rebuilt = fam.even.add(fam.odd.as_ref().unwrap());
        assert!(rebuilt.agrees_with(fam.total.as_ref().unwrap(), 9));
    }

    #[test]
    fn j_prefix_swapped_once_example() {
        // Je_213;1 = x⁶/(1−4x⁴): 1 at n = 6, 4 at n = 10.
        let fam = family_j_prefix_swapped_once(3, 10).unwrap();
        assert_eq!(coeffs(&fam.even, 10), [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 4]);
    }

    #[test]
    fn j_empty_low_coefficients() {
        // 0,0,0,1,1,3,… in total; even split 0,0,0,0,0,2,3,4,5,…
        let fam = family_j_empty(12);
        assert_eq!(coeffs(&fam.even, 12), [0, 0, 0, 0, 0, 2, 3, 4, 5, 20, 35, 56, 84]);
        assert_eq!(
            coeffs(fam.total.as_ref().unwrap(), 8),
            [0, 0, 0, 1, 1, 3, 4, 10, 15]
        );
    }

    #[test]
    fn catalog_dispatch_and_unknown_names() {
        assert!(gf_catalog("Ie_12k", Some(2), None, RotationReading::Proof, 6).is_ok());
        assert!(gf_catalog("nonsense", None, None, RotationReading::Proof, 6).is_err());
        assert!(gf_catalog("Ie_12k", None, None, RotationReading::Proof, 6).is_err());
        assert!(gf_catalog("Jo_12k_once", Some(3), None, RotationReading::Proof, 6).is_err());
        assert!(gf_catalog("Ie_rot", Some(5), Some(3), RotationReading::Proof, 6).is_err());
    }

    #[test]
    fn functional_equation_for_rk() {
        for k in 1..=8 {
            assert!(r_k_functional_equation_holds(k, 20), "k = {k}");
        }
    }

    #[test]
    fn every_total_is_a_counting_series() {
        for k in 2..=5 {
            for base in ["12k", "2134k", "12k_once", "2134k_once"] {
                let fam = family(base, Some(k), None, RotationReading::Proof, 12).unwrap();
                assert_counting_series(&fam.even).unwrap();
                assert_counting_series(fam.total.as_ref().unwrap()).unwrap();
            }
        }
    }
}
