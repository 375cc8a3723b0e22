//! Truncated power series with exact rational coefficients.
//!
//! A series carries its truncation order explicitly; binary operations
//! truncate to the minimum of the two orders.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{factorial, Rational};
use crate::error::{Error, Result};

/// Power series in `h` truncated at a stated order `N`: exactly the
/// coefficients of `h^0 .. h^N` are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<Rational>, // length order + 1
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            order,
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Builds from ascending coefficients, padding with zeros or truncating
    /// to the stated order.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn mul(&self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![Rational::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
            }
        }
        TruncSeries { order, coeffs }
    }

    pub fn add(&self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
            .collect();
        TruncSeries { order, coeffs }
    }

    pub fn sub(&self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
            .collect();
        TruncSeries { order, coeffs }
    }

    pub fn scale(&self, s: &Rational) -> TruncSeries {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Multiplicative inverse up to the truncation order. Errors when the
    /// constant term is zero.
    pub fn inverse(&self) -> Result<TruncSeries> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv_a0 = a0.recip();
        let mut coeffs = vec![Rational::zero(); self.order + 1];
        coeffs[0] = inv_a0.clone();
        for n in 1..=self.order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc += &self.coeffs[k] * &coeffs[n - k];
            }
            coeffs[n] = -(acc * &inv_a0);
        }
        Ok(TruncSeries {
            order: self.order,
            coeffs,
        })
    }

    /// `self^k` by repeated squaring; the truncation order is preserved.
    pub fn pow(&self, k: usize) -> TruncSeries {
        let mut result = TruncSeries::one(self.order);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Divides by `h^k`; the first `k` coefficients must vanish. The order
    /// drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<TruncSeries> {
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::InvalidInput(
                "series not divisible by the requested power of h".into(),
            ));
        }
        Ok(TruncSeries {
            order: self.order - k,
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// log of a series with constant term 1, via log(1+x) = Σ (-1)^(k+1) x^k / k.
    pub(crate) fn log(&self) -> Result<TruncSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::InvalidInput(
                "series log requires constant term 1".into(),
            ));
        }
        let mut x = self.clone();
        x.coeffs[0] = Rational::zero();
        let mut acc = TruncSeries::zero(self.order);
        let mut xpow = TruncSeries::one(self.order);
        for k in 1..=self.order {
            xpow = xpow.mul(&x);
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&xpow.scale(&Rational::new(BigInt::from(sign), BigInt::from(k as u64))));
        }
        Ok(acc)
    }
}

/// 1 − e^{−a·h} truncated at order `n`: Σ_{k=1..n} (−1)^{k+1} a^k h^k / k!.
pub fn one_minus_exp_neg(a: i64, n: usize) -> TruncSeries {
    let mut coeffs = vec![Rational::zero(); n + 1];
    let mut apow = BigInt::one();
    for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
        apow *= a;
        let sign = if k % 2 == 1 { 1 } else { -1 };
        *c = Rational::new(sign * &apow, factorial(k));
    }
    TruncSeries::from_coeffs(n, coeffs)
}
