//! The multivariate continued fractions counting monotone-pattern
//! occurrences on 132-avoiding objects, evaluated as truncated bivariate
//! series.
//!
//! The formal variables `x_1, x_2, …` track occurrences of `1-2-…-k`
//! (C family) or of `12-3-…-k` with an adjacent first pair (D family).
//! A *specialization* assigns each `x_k` a monomial in the two tracked
//! variables; all but finitely many must be 1, and `x_1`'s monomial must
//! have positive degree so the recursions terminate.
//!
//! The functional equations evaluated here:
//!
//! ```text
//! C_S(x₁,x₂,…) = 1 / (1 − x₁·C_S(x₁x₂, x₂x₃, …))
//! C_I(x₁,x₂,…) = (1 + x₁·C_I(x₁x₂, x₂x₃, …))
//!                / (1 − x₁²·C_S(x₁²x₂², x₂²x₃², …))
//! D_S(x₁,x₂,…) = 1 / (1 − x₁ + x₁x₂ − x₁x₂·D_S(x₁, x₂x₃, x₃x₄, …))
//! D_I(x₁,x₂,…) = (1 + x₁ − x₁x₂ + x₁x₂·D_I(x₁, x₂x₃, x₃x₄, …))
//!                / (1 − x₁² + x₁²x₂² − x₁²x₂²·D_S(x₁², x₂²x₃², x₃²x₄², …))
//! ```
//!
//! Each recursion level multiplies everything below it by a monomial of
//! positive degree, so once the accumulated monomial leaves the truncation
//! box the subtree is irrelevant and evaluation stops.

use alloc::format;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::error::Error;
use crate::Result;

use super::bivariate::BiSeries;
use super::{catalan_series, Poly, Series};

/// A monomial `x^a · y^b` in the two tracked variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub x: usize,
    pub y: usize,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub fn times(self, rhs: Monomial) -> Monomial {
        Monomial { x: self.x + rhs.x, y: self.y + rhs.y }
    }

    pub fn squared(self) -> Monomial {
        self.times(self)
    }

    pub fn degree(self) -> usize {
        self.x + self.y
    }

    fn fits(self, order_x: usize, order_y: usize) -> bool {
        self.x <= order_x && self.y <= order_y
    }

    fn to_series(self, order_x: usize, order_y: usize) -> BiSeries {
        BiSeries::monomial(
            BigRational::from_integer(1.into()),
            self.x,
            self.y,
            order_x,
            order_y,
        )
    }
}

/// Assignments for `x_1, x_2, …`; entries beyond the list are 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specialization {
    weights: Vec<Monomial>,
}

impl Specialization {
    pub fn new(weights: Vec<Monomial>) -> Result<Specialization> {
        let first = weights.first().copied().unwrap_or(Monomial::ONE);
        if first.degree() == 0 {
            return Err(Error::BadParameter(
                "the x_1 assignment needs positive degree, or the recursion never ends".into(),
            ));
        }
        Ok(Specialization { weights })
    }

    /// `x_1 = x`, everything else 1: tracks length alone.
    pub fn length_only() -> Specialization {
        Specialization { weights: alloc::vec![Monomial { x: 1, y: 0 }] }
    }

    /// `x_1 = x`, `x_2 = y`, rest 1: joint (length, occurrences of the
    /// second pattern).
    pub fn length_and_second() -> Specialization {
        Specialization {
            weights: alloc::vec![Monomial { x: 1, y: 0 }, Monomial { x: 0, y: 1 }],
        }
    }

    fn weight(&self, k: usize) -> Monomial {
        self.weights.get(k - 1).copied().unwrap_or(Monomial::ONE)
    }

    fn nontrivial_len(&self) -> usize {
        self.weights.len()
    }
}

/// Internal: a finite window of weights. Entries beyond the window are 1,
/// and every shift shrinks the window by one, so the window length is
/// stable over the whole evaluation.
#[derive(Clone)]
struct Weights {
    w: Vec<Monomial>,
}

impl Weights {
    fn from_spec(spec: &Specialization, len: usize) -> Weights {
        let w = (1..=len.max(1)).map(|k| spec.weight(k)).collect();
        Weights { w }
    }

    fn first(&self) -> Monomial {
        self.w.first().copied().unwrap_or(Monomial::ONE)
    }

    fn second(&self) -> Monomial {
        self.w.get(1).copied().unwrap_or(Monomial::ONE)
    }

    /// `(x₁x₂, x₂x₃, …)`.
    fn shift_all(&self) -> Weights {
        let w = (0..self.w.len())
            .map(|i| {
                let next = self.w.get(i + 1).copied().unwrap_or(Monomial::ONE);
                self.w[i].times(next)
            })
            .collect();
        Weights { w }
    }

    /// `(x₁, x₂x₃, x₃x₄, …)`: the first slot stays put.
    fn shift_tail(&self) -> Weights {
        let mut out = self.shift_all();
        if let Some(slot) = out.w.first_mut() {
            *slot = self.first();
        }
        out
    }

    /// Squares every entry.
    fn squared(&self) -> Weights {
        Weights { w: self.w.iter().map(|m| m.squared()).collect() }
    }
}

struct Evaluator {
    order_x: usize,
    order_y: usize,
}

impl Evaluator {
    fn one(&self) -> BiSeries {
        BiSeries::one(self.order_x, self.order_y)
    }

    /// `C_S`; `acc` is the product of all monomials multiplying this
    /// subexpression in the enclosing levels.
    fn c_s(&self, w: &Weights, acc: Monomial) -> Result<BiSeries> {
        if !acc.fits(self.order_x, self.order_y) {
            return Ok(self.one());
        }
        let x1 = w.first();
        let inner = self.c_s(&w.shift_all(), acc.times(x1))?;
        let den = self
            .one()
            .sub(&inner.mul(&x1.to_series(self.order_x, self.order_y)));
        self.one().div(&den)
    }

    fn c_i(&self, w: &Weights, acc: Monomial) -> Result<BiSeries> {
        if !acc.fits(self.order_x, self.order_y) {
            return Ok(self.one());
        }
        let x1 = w.first();
        let inner = self.c_i(&w.shift_all(), acc.times(x1))?;
        let num = self
            .one()
            .add(&inner.mul(&x1.to_series(self.order_x, self.order_y)));
        let s_inner = self.c_s(&w.shift_all().squared(), acc.times(x1.squared()))?;
        let den = self
            .one()
            .sub(&s_inner.mul(&x1.squared().to_series(self.order_x, self.order_y)));
        num.div(&den)
    }

    fn d_s(&self, w: &Weights, acc: Monomial) -> Result<BiSeries> {
        if !acc.fits(self.order_x, self.order_y) {
            return Ok(self.one());
        }
        let (x1, x2) = (w.first(), w.second());
        let x1x2 = x1.times(x2);
        let inner = self.d_s(&w.shift_tail(), acc.times(x1x2))?;
        let den = self
            .one()
            .sub(&x1.to_series(self.order_x, self.order_y))
            .add(&x1x2.to_series(self.order_x, self.order_y))
            .sub(&inner.mul(&x1x2.to_series(self.order_x, self.order_y)));
        self.one().div(&den)
    }

    fn d_i(&self, w: &Weights, acc: Monomial) -> Result<BiSeries> {
        if !acc.fits(self.order_x, self.order_y) {
            return Ok(self.one());
        }
        let (x1, x2) = (w.first(), w.second());
        let x1x2 = x1.times(x2);
        let inner = self.d_i(&w.shift_tail(), acc.times(x1x2))?;
        let num = self
            .one()
            .add(&x1.to_series(self.order_x, self.order_y))
            .sub(&x1x2.to_series(self.order_x, self.order_y))
            .add(&inner.mul(&x1x2.to_series(self.order_x, self.order_y)));
        // Denominator: 1 − x₁² + x₁²x₂² − x₁²x₂²·D_S(x₁², x₂²x₃², …).
        let sq = Weights {
            w: {
                let mut v = w.shift_tail().squared().w;
                if let Some(slot) = v.first_mut() {
                    *slot = x1.squared();
                }
                v
            },
        };
        let s_inner = self.d_s(&sq, acc.times(x1x2.squared()))?;
        let den = self
            .one()
            .sub(&x1.squared().to_series(self.order_x, self.order_y))
            .add(&x1x2.squared().to_series(self.order_x, self.order_y))
            .sub(&s_inner.mul(&x1x2.squared().to_series(self.order_x, self.order_y)));
        num.div(&den)
    }
}

/// Which continued fraction to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfKind {
    /// All 132-avoiding permutations, variables counting `1-2-…-k`.
    CS,
    /// 132-avoiding involutions, variables counting `1-2-…-k`.
    CI,
    /// All 132-avoiding permutations, `x_k` counting `12-3-…-k`.
    DS,
    /// 132-avoiding involutions, `x_k` counting `12-3-…-k`.
    DI,
}

impl CfKind {
    pub fn parse(name: &str) -> Result<CfKind> {
        match name {
            "C_S" | "CS" => Ok(CfKind::CS),
            "C_I" | "CI" => Ok(CfKind::CI),
            "D_S" | "DS" => Ok(CfKind::DS),
            "D_I" | "DI" => Ok(CfKind::DI),
            _ => Err(Error::UnknownName(format!("continued fraction {name:?}"))),
        }
    }
}

/// Evaluates one of the four continued fractions under a specialization.
pub fn cf_catalog(
    kind: CfKind,
    spec: &Specialization,
    order_x: usize,
    order_y: usize,
) -> Result<BiSeries> {
    let eval = Evaluator { order_x, order_y };
    // The window only ever shrinks under shifts, so the specialization's
    // nontrivial span is a big enough window.
    let w = Weights::from_spec(spec, spec.nontrivial_len());
    match kind {
        CfKind::CS => eval.c_s(&w, Monomial::ONE),
        CfKind::CI => eval.c_i(&w, Monomial::ONE),
        CfKind::DS => eval.d_s(&w, Monomial::ONE),
        CfKind::DI => eval.d_i(&w, Monomial::ONE),
    }
}

/// The joint distribution of (length, right-to-left maxima) on 132-avoiding
/// involutions:
///
/// ```text
/// Σ x^n y^s  =  Σ_j x^{2j} C(x²)^j y^{2j}
///             + Σ_j x^{2j+1} C(x²)^j y^{2j+1} / (1 − x − x²C(x²))
/// ```
pub fn rtl_gf(order: usize) -> BiSeries {
    let cat_sq = catalan_series(order).substitute_square(false);
    let odd_factor = {
        let den = Series::one(order)
            .sub(&Poly::x().to_series(order))
            .sub(&cat_sq.mul_xpow(2));
        Series::one(order).div(&den).expect("unit constant term")
    };
    let mut out = BiSeries::zero(order, order);
    let mut cat_power = Series::one(order);
    for j in 0..=order / 2 {
        let even_slice = cat_power.mul_xpow(2 * j);
        out = out.add(&BiSeries::from_x_series(&even_slice, 2 * j, order, order));
        if 2 * j + 1 <= order {
            let odd_slice = cat_power.mul(&odd_factor).mul_xpow(2 * j + 1);
            out = out.add(&BiSeries::from_x_series(&odd_slice, 2 * j + 1, order, order));
        }
        cat_power = cat_power.mul(&cat_sq);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::poly::rat;
    use super::*;

    #[test]
    fn c_s_length_only_is_catalan() {
        let s = cf_catalog(CfKind::CS, &Specialization::length_only(), 10, 0).unwrap();
        let expected = catalan_series(10);
        for n in 0..=10 {
            assert_eq!(s.coefficient(n, 0), expected.coefficient(n), "n = {n}");
        }
    }

    #[test]
    fn c_i_length_only_is_central_binomial() {
        let s = cf_catalog(CfKind::CI, &Specialization::length_only(), 10, 0).unwrap();
        let expected = [1, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(s.coefficient(n, 0), rat(e), "n = {n}");
        }
    }

    #[test]
    fn d_families_at_y_one_match_c_length_series() {
        // Forgetting the second variable leaves plain length counts.
        let di = cf_catalog(CfKind::DI, &Specialization::length_and_second(), 8, 30).unwrap();
        let marginal = di.at_y_one();
        let expected = [1, 1, 2, 3, 6, 10, 20, 35, 70];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(marginal.coefficient(n), rat(e), "n = {n}");
        }
        let ds = cf_catalog(CfKind::DS, &Specialization::length_and_second(), 7, 25).unwrap();
        let marginal = ds.at_y_one();
        let catalan = catalan_series(7);
        for n in 0..=7 {
            assert_eq!(marginal.coefficient(n), catalan.coefficient(n), "n = {n}");
        }
    }

    #[test]
    fn rtl_gf_small_slices() {
        let g = rtl_gf(8);
        // (n, s) = (3, 1) → 2, (3, 3) → 1, (3, 2) → 0.
        assert_eq!(g.coefficient(3, 1), rat(2));
        assert_eq!(g.coefficient(3, 3), rat(1));
        assert_eq!(g.coefficient(3, 2), rat(0));
        // Row sums are the central binomial coefficients.
        let expected = [1, 1, 2, 3, 6, 10, 20, 35, 70];
        let sums = g.at_y_one();
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(sums.coefficient(n), rat(e), "n = {n}");
        }
    }
}
