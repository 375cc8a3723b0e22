//! Exact rational arithmetic, dense univariate polynomials, and truncated
//! power series. Everything downstream computes in this substrate; there is
//! no floating point anywhere in the crate.

mod series;
mod unipoly;

pub use series::{one_minus_exp_neg, TruncSeries};
pub use unipoly::UniPoly;

use num_bigint::BigInt;
use num_traits::One;

/// Arbitrary-precision rational. `num`'s `BigRational` keeps values in lowest
/// terms with a positive denominator after every operation, which is exactly
/// the normalization contract the rest of the crate relies on.
pub type Rational = num_rational::BigRational;

/// Small rational literal.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a rational.
pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

pub fn factorial(m: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=m {
        acc *= k as u64;
    }
    acc
}

/// binom(n, k) as a big integer; 0 when k > n.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * ((n - i) as u64) / ((i + 1) as u64);
    }
    acc
}

/// The degree-`m` polynomial binom(t + m, m) = ∏_{k=1..m} (t + k) / m!.
pub fn binom_poly(m: usize) -> UniPoly {
    let mut p = UniPoly::one();
    for k in 1..=m {
        p = &p * &UniPoly::from_coeffs(vec![rat_int(k as i64), rat_int(1)]);
    }
    &p * &Rational::new(BigInt::one(), factorial(m))
}
