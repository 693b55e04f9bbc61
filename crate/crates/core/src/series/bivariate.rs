//! Bivariate truncated series, rectangular in the two exponents.
//!
//! The second variable typically counts pattern occurrences, which can reach
//! `n(n−1)/2` at length `n`, so the `y`-order is independent of the
//! `x`-order rather than capped by total degree.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Error;
use crate::Result;

use super::Series;

/// A series in `x` and `y`, known exactly for `x`-degree ≤ `order_x` and
/// `y`-degree ≤ `order_y`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiSeries {
    order_x: usize,
    order_y: usize,
    /// `coeffs[i][j]` is the coefficient of `x^i y^j`.
    coeffs: Vec<Vec<BigRational>>,
}

impl BiSeries {
    pub fn zero(order_x: usize, order_y: usize) -> BiSeries {
        BiSeries {
            order_x,
            order_y,
            coeffs: vec![vec![BigRational::zero(); order_y + 1]; order_x + 1],
        }
    }

    pub fn one(order_x: usize, order_y: usize) -> BiSeries {
        BiSeries::monomial(BigRational::from_integer(1.into()), 0, 0, order_x, order_y)
    }

    pub fn monomial(
        c: BigRational,
        xpow: usize,
        ypow: usize,
        order_x: usize,
        order_y: usize,
    ) -> BiSeries {
        let mut s = BiSeries::zero(order_x, order_y);
        if xpow <= order_x && ypow <= order_y {
            s.coeffs[xpow][ypow] = c;
        }
        s
    }

    /// Embeds a univariate series in `x` at a fixed `y`-power.
    pub fn from_x_series(s: &Series, ypow: usize, order_x: usize, order_y: usize) -> BiSeries {
        let mut out = BiSeries::zero(order_x, order_y);
        if ypow <= order_y {
            for i in 0..=order_x.min(s.order()) {
                out.coeffs[i][ypow] = s.coefficient(i);
            }
        }
        out
    }

    pub fn order_x(&self) -> usize {
        self.order_x
    }

    pub fn order_y(&self) -> usize {
        self.order_y
    }

    pub fn coefficient(&self, xpow: usize, ypow: usize) -> BigRational {
        self.coeffs
            .get(xpow)
            .and_then(|row| row.get(ypow))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn set_coefficient(&mut self, xpow: usize, ypow: usize, c: BigRational) {
        if xpow <= self.order_x && ypow <= self.order_y {
            self.coeffs[xpow][ypow] = c;
        }
    }

    pub fn add(&self, rhs: &BiSeries) -> BiSeries {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &BiSeries) -> BiSeries {
        self.zip(rhs, |a, b| a - b)
    }

    fn zip(&self, rhs: &BiSeries, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> BiSeries {
        let order_x = self.order_x.min(rhs.order_x);
        let order_y = self.order_y.min(rhs.order_y);
        let mut out = BiSeries::zero(order_x, order_y);
        for i in 0..=order_x {
            for j in 0..=order_y {
                out.coeffs[i][j] = f(&self.coeffs[i][j], &rhs.coeffs[i][j]);
            }
        }
        out
    }

    pub fn mul(&self, rhs: &BiSeries) -> BiSeries {
        let order_x = self.order_x.min(rhs.order_x);
        let order_y = self.order_y.min(rhs.order_y);
        let mut out = BiSeries::zero(order_x, order_y);
        for i1 in 0..=order_x {
            for j1 in 0..=order_y {
                let a = &self.coeffs[i1][j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=order_x - i1 {
                    for j2 in 0..=order_y - j1 {
                        let b = &rhs.coeffs[i2][j2];
                        if !b.is_zero() {
                            let prod = a * b;
                            out.coeffs[i1 + i2][j1 + j2] += prod;
                        }
                    }
                }
            }
        }
        out
    }

    /// Multiplies by the monomial `x^a y^b` (truncating).
    pub fn mul_monomial(&self, a: usize, b: usize) -> BiSeries {
        let mut out = BiSeries::zero(self.order_x, self.order_y);
        for i in 0..=self.order_x {
            for j in 0..=self.order_y {
                if self.coeffs[i][j].is_zero() {
                    continue;
                }
                if i + a <= self.order_x && j + b <= self.order_y {
                    out.coeffs[i + a][j + b] = self.coeffs[i][j].clone();
                }
            }
        }
        out
    }

    /// Division; the divisor's constant term (in both variables) must be
    /// nonzero. Solves row by row in total degree.
    pub fn div(&self, rhs: &BiSeries) -> Result<BiSeries> {
        let c0 = rhs.coefficient(0, 0);
        if c0.is_zero() {
            return Err(Error::Series(
                "bivariate division by a series with zero constant term".into(),
            ));
        }
        let order_x = self.order_x.min(rhs.order_x);
        let order_y = self.order_y.min(rhs.order_y);
        let mut out = BiSeries::zero(order_x, order_y);
        // q[i][j] = (a[i][j] − Σ_{(k,l) < (i,j)} b[i−k][j−l]·q[k][l]) / b[0][0]
        for i in 0..=order_x {
            for j in 0..=order_y {
                let mut acc = self.coefficient(i, j);
                for k in 0..=i {
                    for l in 0..=j {
                        if k == i && l == j {
                            continue;
                        }
                        let b = rhs.coefficient(i - k, j - l);
                        if !b.is_zero() {
                            acc -= b * &out.coeffs[k][l];
                        }
                    }
                }
                out.coeffs[i][j] = acc / &c0;
            }
        }
        Ok(out)
    }

    /// Sets `y = 1`: sums each row into a univariate series in `x`.
    pub fn at_y_one(&self) -> Series {
        let coeffs = self
            .coeffs
            .iter()
            .map(|row| row.iter().fold(BigRational::zero(), |acc, c| acc + c))
            .collect();
        Series::from_coefficients(coeffs)
    }

    /// The coefficient of `y^j` as a univariate series in `x`.
    pub fn y_slice(&self, j: usize) -> Series {
        let coeffs = (0..=self.order_x).map(|i| self.coefficient(i, j)).collect();
        Series::from_coefficients(coeffs)
    }

    pub fn has_nonnegative_integer_coefficients(&self) -> bool {
        use num_traits::Signed;
        self.coeffs
            .iter()
            .flatten()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::super::poly::rat;
    use super::*;

    #[test]
    fn multiply_and_divide() {
        // (1 + xy)·(1 + xy) = 1 + 2xy + x²y².
        let one = BiSeries::one(4, 4);
        let xy = BiSeries::monomial(rat(1), 1, 1, 4, 4);
        let f = one.add(&xy);
        let sq = f.mul(&f);
        assert_eq!(sq.coefficient(1, 1), rat(2));
        assert_eq!(sq.coefficient(2, 2), rat(1));
        assert_eq!(sq.coefficient(1, 0), rat(0));
        let back = sq.div(&f).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn geometric_in_two_variables() {
        // 1/(1 − xy) has 1 on the diagonal.
        let one = BiSeries::one(5, 5);
        let xy = BiSeries::monomial(rat(1), 1, 1, 5, 5);
        let g = one.div(&one.sub(&xy)).unwrap();
        for i in 0..=5 {
            for j in 0..=5 {
                assert_eq!(g.coefficient(i, j), rat(if i == j { 1 } else { 0 }));
            }
        }
    }

    #[test]
    fn y_one_specialization() {
        let one = BiSeries::one(3, 3);
        let xy = BiSeries::monomial(rat(1), 1, 1, 3, 3);
        let x = BiSeries::monomial(rat(1), 1, 0, 3, 3);
        let f = one.add(&xy).add(&x);
        let s = f.at_y_one();
        assert_eq!(s.coefficient(0), rat(1));
        assert_eq!(s.coefficient(1), rat(2));
    }
}
