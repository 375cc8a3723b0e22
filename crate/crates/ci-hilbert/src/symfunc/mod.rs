//! Symmetric-polynomial machinery: elementary, complete homogeneous, and
//! monomial bases in c variables, with exact conversions and evaluations.

mod avar;
mod epoly;
mod mpoly;

pub use avar::{symmetrize_to_e, AVarPoly};
pub use epoly::{EPoly, EVector};
pub use mpoly::{m_multiply, MPoly, Partition};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;
use crate::sequence::DegreeSequence;

/// Integer values of (e_1, ..., e_c) at a degree sequence, via the
/// coefficient recurrence for ∏ (x + a_i).
pub fn elementary_values(seq: &DegreeSequence) -> EVector {
    let c = seq.codim();
    let mut e = vec![BigInt::zero(); c + 1];
    e[0] = BigInt::one();
    let mut used = 0usize;
    for &a in seq.entries() {
        used += 1;
        for k in (1..=used).rev() {
            let carry = &e[k - 1] * a;
            e[k] += carry;
        }
    }
    EVector::new(e[1..].to_vec())
}

/// The complete homogeneous symmetric polynomial h_j in the elementary
/// basis, via h_j = Σ_{i=1..min(j,c)} (−1)^{i−1} e_i h_{j−i}, h_0 = 1.
pub fn complete_homogeneous_epoly(j: usize, c: usize) -> EPoly {
    let mut h: Vec<EPoly> = Vec::with_capacity(j + 1);
    h.push(EPoly::one(c));
    for m in 1..=j {
        let mut acc = EPoly::zero(c);
        for i in 1..=m.min(c) {
            let sign = if i % 2 == 1 {
                Rational::one()
            } else {
                -Rational::one()
            };
            let term = EPoly::var(c, i).mul_trunc(&h[m - i], None);
            acc = &acc + &term.scale(&sign);
        }
        h.push(acc);
    }
    h.pop().expect("at least h_0 present")
}

/// Re-expresses an e-basis polynomial in the monomial symmetric basis, by
/// expanding each e-monomial as a product of M-basis elements (e_i = M_{1^i}).
pub fn e_to_monomial(p: &EPoly) -> MPoly {
    let c = p.nvars();
    let mut out = MPoly::zero(c);
    for (exps, coeff) in p.terms() {
        let mut m = MPoly::constant(c, Rational::one());
        for (j, &k) in exps.iter().enumerate() {
            let basis = MPoly::basis(c, Partition::new(vec![1; j + 1]));
            for _ in 0..k {
                m = m_multiply(&m, &basis);
            }
        }
        out = out.add(&m.scale(coeff));
    }
    out
}

/// Sufficient positivity criterion: every M-coefficient is ≥ 0 and at least
/// one is > 0. Such a function is positive at every positive integer point.
pub fn is_positive_on_positive_integers(p: &MPoly) -> bool {
    !p.is_zero() && p.terms().all(|(_, c)| c.is_positive())
}
