//! Truncated formal power series with exact rational coefficients, and the
//! generating-function machinery built on them.
//!
//! A [`Series`] knows its coefficients `c_0 … c_N` exactly; `N` is the
//! truncation order. Arithmetic never extends the known order: binary
//! operations truncate to the shorter operand.

pub mod bivariate;
pub mod catalog;
pub mod cf;
pub mod closed;
pub mod poly;

pub use bivariate::BiSeries;
pub use poly::{chebyshev_u, q_poly, r_k, Poly, RationalFunction};

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

/// A power series known exactly through `x^order()`.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

impl Series {
    /// Builds a series from `order + 1` coefficients `c_0 … c_order`.
    pub fn from_coefficients(coeffs: Vec<BigRational>) -> Series {
        assert!(!coeffs.is_empty(), "a series carries at least its constant term");
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Series {
        Series { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Series {
        Series::monomial(BigRational::one(), 0, order)
    }

    /// `c·x^k` truncated at `order`.
    pub fn monomial(c: BigRational, k: usize, order: usize) -> Series {
        let mut s = Series::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Drops knowledge beyond `order`.
    pub fn truncate(&self, order: usize) -> Series {
        let keep = order.min(self.order());
        Series { coeffs: self.coeffs[..=keep].to_vec() }
    }

    fn common_order(&self, rhs: &Series) -> usize {
        self.order().min(rhs.order())
    }

    pub fn add(&self, rhs: &Series) -> Series {
        let order = self.common_order(rhs);
        let coeffs = (0..=order)
            .map(|k| self.coefficient(k) + rhs.coefficient(k))
            .collect();
        Series { coeffs }
    }

    pub fn sub(&self, rhs: &Series) -> Series {
        let order = self.common_order(rhs);
        let coeffs = (0..=order)
            .map(|k| self.coefficient(k) - rhs.coefficient(k))
            .collect();
        Series { coeffs }
    }

    pub fn neg(&self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Series {
        Series { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, rhs: &Series) -> Series {
        let order = self.common_order(rhs);
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Series { coeffs }
    }

    /// Multiplication by `x^k` (shifting up, truncating at the order).
    pub fn mul_xpow(&self, k: usize) -> Series {
        let order = self.order();
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for i in 0..=order.saturating_sub(k) {
            if k <= order {
                coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        Series { coeffs }
    }

    pub fn pow(&self, e: usize) -> Series {
        let mut result = Series::one(self.order());
        for _ in 0..e {
            result = result.mul(self);
        }
        result
    }

    /// Division; the divisor needs a nonzero constant term.
    pub fn div(&self, rhs: &Series) -> Result<Series> {
        let c0 = rhs.coefficient(0);
        if c0.is_zero() {
            return Err(Error::Series(
                "division by a series with zero constant term".into(),
            ));
        }
        let order = self.common_order(rhs);
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for k in 0..=order {
            let mut acc = self.coefficient(k);
            for j in 1..=k {
                let b = rhs.coefficient(j);
                if !b.is_zero() {
                    acc -= b * &coeffs[k - j];
                }
            }
            coeffs[k] = acc / &c0;
        }
        Ok(Series { coeffs })
    }

    /// Square root of a series with constant term 1, one order per step:
    /// `s_k = (a_k − Σ_{j=1}^{k−1} s_j s_{k−j}) / 2`.
    pub fn sqrt(&self) -> Result<Series> {
        if !self.coefficient(0).is_one() {
            return Err(Error::Series(format!(
                "sqrt needs constant term 1, got {}",
                self.coefficient(0)
            )));
        }
        let order = self.order();
        let two = poly::rat(2);
        let mut coeffs = vec![BigRational::zero(); order + 1];
        coeffs[0] = BigRational::one();
        for k in 1..=order {
            let mut acc = self.coefficient(k);
            for j in 1..k {
                acc -= &coeffs[j] * &coeffs[k - j];
            }
            coeffs[k] = acc / &two;
        }
        Ok(Series { coeffs })
    }

    /// `f(s·x²)` with `s = ±1`, truncated at the same order.
    pub fn substitute_square(&self, negate: bool) -> Series {
        let order = self.order();
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for k in 0..=order / 2 {
            let c = self.coefficient(k);
            coeffs[2 * k] = if negate && k % 2 == 1 { -c } else { c };
        }
        Series { coeffs }
    }

    /// Even part `(f(x) + f(−x))/2`: zero out the odd coefficients.
    pub fn even_part(&self) -> Series {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { BigRational::zero() })
            .collect();
        Series { coeffs }
    }

    /// Odd part `(f(x) − f(−x))/2`: zero out the even coefficients.
    pub fn odd_part(&self) -> Series {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { c.clone() } else { BigRational::zero() })
            .collect();
        Series { coeffs }
    }

    /// Exact division by `x^k`; the first `k` coefficients must vanish and
    /// the result is known to `order − k` only.
    pub fn div_xpow(&self, k: usize) -> Result<Series> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::Series(format!("series is not divisible by x^{k}")));
        }
        if k > self.order() {
            return Err(Error::Series(format!(
                "dividing by x^{k} leaves no known coefficients"
            )));
        }
        Ok(Series { coeffs: self.coeffs[k..].to_vec() })
    }

    /// The coefficients as integers, if they all are.
    pub fn integer_coefficients(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// True when every known coefficient is a nonnegative integer (the
    /// counting-series sanity check).
    pub fn has_nonnegative_integer_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer() && !c.is_negative())
    }

    /// Equality of the coefficients through `min(orders, through)`.
    pub fn agrees_with(&self, rhs: &Series, through: usize) -> bool {
        let order = self.common_order(rhs).min(through);
        (0..=order).all(|k| self.coefficient(k) == rhs.coefficient(k))
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] + O(x^{})", self.order() + 1)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Renders a coefficient exactly: integers plainly, otherwise `p/q`.
pub fn coefficient_string(c: &BigRational) -> String {
    if c.is_integer() {
        format!("{}", c.to_integer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// The Catalan number series `1, 1, 2, 5, 14, …` via the fixed point of
/// `C = 1 + x·C²`, converging one order per iteration (this dodges the
/// removable singularity of the closed form at the origin).
pub fn catalan_series(order: usize) -> Series {
    let one = Series::one(order);
    let mut c = one.clone();
    for _ in 0..=order {
        c = one.add(&c.mul(&c).mul_xpow(1));
    }
    c
}

/// The Fibonacci series `1/(1 − x − x²)`: `1, 1, 2, 3, 5, …`.
pub fn fibonacci_series(order: usize) -> Series {
    let den = Poly::from_integers(&[1, -1, -1]).to_series(order);
    Series::one(order).div(&den).expect("unit constant term")
}

#[cfg(test)]
mod tests {
    use super::poly::rat;
    use super::*;

    #[test]
    fn catalan_numbers() {
        let c = catalan_series(8);
        let expected = [1, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (k, &e) in expected.iter().enumerate() {
            assert_eq!(c.coefficient(k), rat(e));
        }
    }

    #[test]
    fn catalan_agrees_with_sqrt_form() {
        // (1 − sqrt(1 − 4x)) / (2x), computed as a series, to order 30.
        let order = 31;
        let inner = Poly::from_integers(&[1, -4]).to_series(order);
        let top = Series::one(order).sub(&inner.sqrt().unwrap());
        let c = top.div_xpow(1).unwrap().scale(&(rat(1) / rat(2)));
        assert!(catalan_series(30).agrees_with(&c, 30));
    }

    #[test]
    fn fibonacci_numbers() {
        let f = fibonacci_series(9);
        let expected = [1, 1, 2, 3, 5, 8, 13, 21, 34, 55];
        for (k, &e) in expected.iter().enumerate() {
            assert_eq!(f.coefficient(k), rat(e));
        }
    }

    #[test]
    fn even_part_of_geometric() {
        // even part of 1/(1−x) is 1/(1−x²): 1, 0, 1, 0, …
        let g = Poly::from_integers(&[1, -1]).to_series(9);
        let even = Series::one(9).div(&g).unwrap().even_part();
        for k in 0..=9 {
            assert_eq!(even.coefficient(k), rat(if k % 2 == 0 { 1 } else { 0 }));
        }
    }

    #[test]
    fn division_requires_unit() {
        let x = Series::monomial(rat(1), 1, 4);
        assert!(Series::one(4).div(&x).is_err());
        assert!(x.sqrt().is_err());
    }

    #[test]
    fn orders_shrink_to_the_minimum() {
        let a = Series::one(10);
        let b = Series::one(4);
        assert_eq!(a.mul(&b).order(), 4);
        assert_eq!(a.add(&b).order(), 4);
        assert_eq!(a.div(&b).unwrap().order(), 4);
    }

    #[test]
    fn substitute_square_signs() {
        // f = 1 + x + x²  ->  f(−x²) = 1 − x² + x⁴.
        let f = Poly::from_integers(&[1, 1, 1]).to_series(4);
        let g = f.substitute_square(true);
        assert_eq!(g.coefficient(0), rat(1));
        assert_eq!(g.coefficient(2), rat(-1));
        assert_eq!(g.coefficient(4), rat(1));
    }
}
