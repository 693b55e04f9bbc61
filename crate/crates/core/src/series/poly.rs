//! Dense polynomials and rational functions over exact rationals, plus the
//! Chebyshev-flavoured family behind the catalog.
//!
//! `R_k(x) = q_{k-1}(x)/q_k(x)` where `q_0 = q_1 = 1` and
//! `q_k = q_{k-1} − x·q_{k-2}`; the `q_k` are the Chebyshev polynomials of
//! the second kind in disguise: `q_k(x²) = x^k · U_k(1/(2x))`. `R_k`
//! satisfies `R_k = 1/(1 − x·R_{k-1})` with `R_0 = 0` and counts
//! 132-avoiding permutations that also avoid a monotone pattern of length k.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Error;
use crate::Result;

use super::Series;

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Polynomial with exact rational coefficients, lowest degree first.
/// The zero polynomial is an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(rat(1))
    }

    pub fn constant(c: BigRational) -> Poly {
        Poly::new(vec![c])
    }

    pub fn x() -> Poly {
        Poly::new(vec![rat(0), rat(1)])
    }

    pub fn from_integers(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coefficient(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coefficient(k) + rhs.coefficient(k))
            .collect();
        Poly::new(coeffs)
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(−x)`: negate the odd-degree coefficients.
    pub fn negate_argument(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// `p(s·x²)` with `s = ±1`.
    pub fn substitute_square(&self, negate: bool) -> Poly {
        let mut coeffs = vec![BigRational::zero(); 2 * self.coeffs.len().max(1) - 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            let sign = if negate && k % 2 == 1 { -c.clone() } else { c.clone() };
            coeffs[2 * k] = sign;
        }
        Poly::new(coeffs)
    }

    /// Truncated power series of the polynomial itself.
    pub fn to_series(&self, order: usize) -> Series {
        let coeffs = (0..=order).map(|k| self.coefficient(k)).collect();
        Series::from_coefficients(coeffs)
    }
}

/// Quotient of two polynomials. Not kept in lowest terms; the denominators
/// built here stay tiny.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    pub num: Poly,
    pub den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<RationalFunction> {
        if den.is_zero() {
            return Err(Error::Series("zero denominator".into()));
        }
        Ok(RationalFunction { num, den })
    }

    pub fn zero() -> RationalFunction {
        RationalFunction { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> RationalFunction {
        RationalFunction { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> RationalFunction {
        RationalFunction { num: p, den: Poly::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction {
            num: self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            den: self.den.mul(&rhs.den),
        }
    }

    pub fn sub(&self, rhs: &RationalFunction) -> RationalFunction {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction {
            num: self.num.mul(&rhs.num),
            den: self.den.mul(&rhs.den),
        }
    }

    pub fn div(&self, rhs: &RationalFunction) -> Result<RationalFunction> {
        if rhs.is_zero() {
            return Err(Error::Series("division by the zero rational function".into()));
        }
        Ok(RationalFunction {
            num: self.num.mul(&rhs.den),
            den: self.den.mul(&rhs.num),
        })
    }

    pub fn negate_argument(&self) -> RationalFunction {
        RationalFunction {
            num: self.num.negate_argument(),
            den: self.den.negate_argument(),
        }
    }

    /// `f(s·x²)` with `s = ±1`.
    pub fn substitute_square(&self, negate: bool) -> RationalFunction {
        RationalFunction {
            num: self.num.substitute_square(negate),
            den: self.den.substitute_square(negate),
        }
    }

    /// Even part `(f(x) + f(−x))/2`, exactly.
    pub fn even_part(&self) -> RationalFunction {
        let flipped = self.negate_argument();
        self.add(&flipped).scale(&(rat(1) / rat(2)))
    }

    /// Odd part `(f(x) − f(−x))/2`, exactly.
    pub fn odd_part(&self) -> RationalFunction {
        let flipped = self.negate_argument();
        self.sub(&flipped).scale(&(rat(1) / rat(2)))
    }

    pub fn scale(&self, c: &BigRational) -> RationalFunction {
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Expands to a truncated series; the denominator needs a nonzero
    /// constant term.
    pub fn to_series(&self, order: usize) -> Result<Series> {
        if self.den.coefficient(0).is_zero() {
            return Err(Error::Series(format!(
                "denominator {:?} has zero constant term",
                self.den
            )));
        }
        self.num.to_series(order).div(&self.den.to_series(order))
    }

    /// Exact equality via cross-multiplication.
    pub fn equivalent(&self, rhs: &RationalFunction) -> bool {
        self.num.mul(&rhs.den) == rhs.num.mul(&self.den)
    }
}

/// Chebyshev polynomial of the second kind: `U_0 = 1`, `U_1 = 2t`,
/// `U_r = 2t·U_{r-1} − U_{r-2}`.
pub fn chebyshev_u(r: usize) -> Poly {
    let two_t = Poly::from_integers(&[0, 2]);
    let mut prev = Poly::one();
    if r == 0 {
        return prev;
    }
    let mut current = two_t.clone();
    for _ in 2..=r {
        let next = two_t.mul(&current).sub(&prev);
        prev = current;
        current = next;
    }
    current
}

/// The denominator family: `q_0 = q_1 = 1`, `q_k = q_{k-1} − x·q_{k-2}`.
pub fn q_poly(k: usize) -> Poly {
    let x = Poly::x();
    let mut prev = Poly::one();
    if k == 0 {
        return prev;
    }
    let mut current = Poly::one();
    for _ in 2..=k {
        let next = current.sub(&x.mul(&prev));
        prev = current;
        current = next;
    }
    current
}

/// `R_k = q_{k-1}/q_k` for `k ≥ 1`, `R_0 = 0`.
pub fn r_k(k: usize) -> RationalFunction {
    if k == 0 {
        return RationalFunction::zero();
    }
    RationalFunction { num: q_poly(k - 1), den: q_poly(k) }
}

/// `R_k(−x²)` as a rational function, the workhorse substitution of the
/// even/odd catalog.
pub fn r_k_neg_sq(k: usize) -> RationalFunction {
    r_k(k).substitute_square(true)
}

/// `R^e_k(x²)`: the even part of `R_k`, evaluated at `x²`.
pub fn r_k_even_sq(k: usize) -> RationalFunction {
    r_k(k).even_part().substitute_square(false)
}

/// `R^o_k(x²)`: the odd part of `R_k`, evaluated at `x²`.
pub fn r_k_odd_sq(k: usize) -> RationalFunction {
    r_k(k).odd_part().substitute_square(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chebyshev_small() {
        assert_eq!(chebyshev_u(0), Poly::from_integers(&[1]));
        assert_eq!(chebyshev_u(1), Poly::from_integers(&[0, 2]));
        assert_eq!(chebyshev_u(2), Poly::from_integers(&[-1, 0, 4]));
        assert_eq!(chebyshev_u(3), Poly::from_integers(&[0, -4, 0, 8]));
    }

    #[test]
    fn q_is_chebyshev_in_disguise() {
        // q_k(y) = Σ_i c_{k,i} 2^{−i} y^{(k−i)/2} where U_k(t) = Σ c_{k,i} t^i.
        for k in 0..=8 {
            let u = chebyshev_u(k);
            let mut expected = Poly::zero();
            for (i, c) in u.coefficients().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                assert_eq!((k - i) % 2, 0, "U_k has parity k");
                let scaled = c / BigRational::from_integer(BigInt::from(2).pow(i as u32));
                let mut mono = vec![BigRational::zero(); (k - i) / 2 + 1];
                mono[(k - i) / 2] = scaled;
                expected = expected.add(&Poly::new(mono));
            }
            assert_eq!(q_poly(k), expected, "k = {k}");
        }
    }

    #[test]
    fn r_k_small_values() {
        assert!(r_k(1).equivalent(&RationalFunction::one()));
        let r2 = RationalFunction::new(Poly::one(), Poly::from_integers(&[1, -1])).unwrap();
        assert!(r_k(2).equivalent(&r2));
        let r3 = RationalFunction::new(
            Poly::from_integers(&[1, -1]),
            Poly::from_integers(&[1, -2]),
        )
        .unwrap();
        assert!(r_k(3).equivalent(&r3));
    }

    #[test]
    fn r_k_functional_equation() {
        // R_k = 1/(1 − x R_{k-1}) exactly.
        let x = RationalFunction::from_poly(Poly::x());
        for k in 1..=8 {
            let rhs = RationalFunction::one()
                .div(&RationalFunction::one().sub(&x.mul(&r_k(k - 1))))
                .unwrap();
            assert!(r_k(k).equivalent(&rhs), "k = {k}");
        }
    }

    #[test]
    fn even_plus_odd_reconstructs() {
        for k in 0..=6 {
            let whole = r_k(k);
            let rebuilt = whole.even_part().add(&whole.odd_part());
            assert!(whole.equivalent(&rebuilt), "k = {k}");
        }
    }
}
