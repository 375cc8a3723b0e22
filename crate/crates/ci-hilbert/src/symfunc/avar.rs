//! Explicit polynomials in the underlying variables a_1 .. a_c, used as the
//! expansion target for symmetric-function conversions and for the
//! fundamental-theorem reduction to the elementary basis.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::epoly::EPoly;
use super::mpoly::{distinct_placements, MPoly, Partition};
use crate::algebra::Rational;
use crate::error::{Error, Result};

/// Polynomial in a_1 .. a_c, optionally truncated at a stated total degree
/// (terms above the bound are dropped by every operation).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AVarPoly {
    nvars: usize,
    trunc: Option<u32>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

fn total_degree(exps: &[u32]) -> u32 {
    exps.iter().sum()
}

impl AVarPoly {
    pub fn zero(nvars: usize, trunc: Option<u32>) -> Self {
        AVarPoly {
            nvars,
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize, trunc: Option<u32>) -> Self {
        let mut p = AVarPoly::zero(nvars, trunc);
        p.add_term(vec![0; nvars], Rational::one());
        p
    }

    /// The variable a_j (1-based).
    pub fn var(nvars: usize, j: usize, trunc: Option<u32>) -> Self {
        let mut exps = vec![0; nvars];
        exps[j - 1] = 1;
        let mut p = AVarPoly::zero(nvars, trunc);
        p.add_term(exps, Rational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn trunc(&self) -> Option<u32> {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: Rational) {
        assert_eq!(exps.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        if let Some(cap) = self.trunc {
            if total_degree(&exps) > cap {
                return;
            }
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &AVarPoly) -> AVarPoly {
        assert_eq!(self.nvars, rhs.nvars, "mixed variable counts");
        let mut out = AVarPoly::zero(self.nvars, combine_trunc(self.trunc, rhs.trunc));
        for (e, c) in self.terms.iter().chain(rhs.terms.iter()) {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &AVarPoly) -> AVarPoly {
        self.add(&rhs.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> AVarPoly {
        if s.is_zero() {
            return AVarPoly::zero(self.nvars, self.trunc);
        }
        AVarPoly {
            nvars: self.nvars,
            trunc: self.trunc,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * s))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &AVarPoly) -> AVarPoly {
        assert_eq!(self.nvars, rhs.nvars, "mixed variable counts");
        let trunc = combine_trunc(self.trunc, rhs.trunc);
        let mut out = AVarPoly::zero(self.nvars, trunc);
        for (ea, ca) in &self.terms {
            let da = total_degree(ea);
            for (eb, cb) in &rhs.terms {
                if let Some(cap) = trunc {
                    if da + total_degree(eb) > cap {
                        continue;
                    }
                }
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    /// The terms of the given total degree, as an exact polynomial.
    pub fn homogeneous_part(&self, d: u32) -> AVarPoly {
        AVarPoly {
            nvars: self.nvars,
            trunc: None,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| total_degree(e) == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// The elementary symmetric polynomial e_j expanded in the a-variables.
    pub fn elementary(nvars: usize, j: usize, trunc: Option<u32>) -> AVarPoly {
        let mut p = AVarPoly::zero(nvars, trunc);
        for placement in distinct_placements(&vec![1; j], nvars) {
            p.add_term(placement, Rational::one());
        }
        p
    }

    /// Expands a polynomial in e_1..e_c into the a-variables.
    pub fn from_epoly(p: &EPoly, trunc: Option<u32>) -> AVarPoly {
        let c = p.nvars();
        let mut out = AVarPoly::zero(c, trunc);
        for (exps, coeff) in p.terms() {
            let mut m = AVarPoly::one(c, trunc);
            for (j, &k) in exps.iter().enumerate() {
                for _ in 0..k {
                    m = m.mul(&AVarPoly::elementary(c, j + 1, trunc));
                }
            }
            out = out.add(&m.scale(coeff));
        }
        out
    }

    /// Expands an M-basis symmetric function into the a-variables.
    pub fn from_mpoly(p: &MPoly) -> AVarPoly {
        let c = p.nvars();
        let mut out = AVarPoly::zero(c, None);
        for (lambda, coeff) in p.terms() {
            for placement in distinct_placements(lambda.parts(), c) {
                out.add_term(placement, coeff.clone());
            }
        }
        out
    }

    /// Collects a symmetric a-polynomial back into the M basis. Errors when
    /// the monomials of some orbit do not share a coefficient.
    pub fn to_mpoly(&self) -> Result<MPoly> {
        let mut out = MPoly::zero(self.nvars);
        let mut seen: BTreeMap<Partition, Rational> = BTreeMap::new();
        for (exps, coeff) in &self.terms {
            let lambda = Partition::new(exps.clone());
            match seen.get(&lambda) {
                None => {
                    seen.insert(lambda, coeff.clone());
                }
                Some(c) if c == coeff => {}
                Some(_) => return Err(Error::NotSymmetric),
            }
        }
        for (lambda, coeff) in seen {
            // Every orbit member must actually be present.
            let orbit = distinct_placements(lambda.parts(), self.nvars).len();
            let present = self
                .terms
                .keys()
                .filter(|e| Partition::new((*e).clone()) == lambda)
                .count();
            if orbit != present {
                return Err(Error::NotSymmetric);
            }
            out.add_term(lambda, coeff);
        }
        Ok(out)
    }
}

fn combine_trunc(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

/// Rewrites a symmetric polynomial in elementary symmetric polynomials by
/// the classical leading-term reduction: repeatedly subtract
/// c·e_1^{λ1−λ2}·e_2^{λ2−λ3}⋯ matching the lex-leading monomial. The leading
/// partition strictly decreases, so the loop terminates; a lex-leading
/// monomial with increasing exponents witnesses a non-symmetric input.
pub fn symmetrize_to_e(p: &AVarPoly) -> Result<EPoly> {
    let c = p.nvars();
    let mut rest = p.clone();
    rest.trunc = None;
    let mut out = EPoly::zero(c);
    while !rest.is_zero() {
        let (lead, coeff) = rest
            .terms
            .iter()
            .next_back()
            .map(|(e, v)| (e.clone(), v.clone()))
            .expect("nonzero polynomial has a leading term");
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric);
        }
        // Exponents of the matching e-monomial: successive differences.
        let mut eexps = vec![0u32; c];
        for j in 0..c {
            let next = if j + 1 < c { lead[j + 1] } else { 0 };
            eexps[j] = lead[j] - next;
        }
        let emono = EPoly::monomial(c, eexps.clone(), coeff.clone());
        rest = rest.sub(&AVarPoly::from_epoly(&emono, None));
        out.add_term(eexps, coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat_int;

    fn avar_terms(nvars: usize, terms: &[(&[u32], i64)]) -> AVarPoly {
        let mut p = AVarPoly::zero(nvars, None);
        for &(exps, c) in terms {
            p.add_term(exps.to_vec(), rat_int(c));
        }
        p
    }

    #[test]
    fn power_sum_two_vars() {
        // a1^2 + a2^2 = e1^2 - 2 e2
        let p = avar_terms(2, &[(&[2, 0], 1), (&[0, 2], 1)]);
        let q = symmetrize_to_e(&p).unwrap();
        let mut expect = EPoly::zero(2);
        expect.add_term(vec![2, 0], rat_int(1));
        expect.add_term(vec![0, 1], rat_int(-2));
        assert_eq!(q, expect);
    }

    #[test]
    fn product_two_vars() {
        // a1 a2 = e2
        let p = avar_terms(2, &[(&[1, 1], 1)]);
        assert_eq!(symmetrize_to_e(&p).unwrap(), EPoly::var(2, 2));
    }

    #[test]
    fn mixed_cubic_three_vars() {
        // Σ_{i≠j} a_i^2 a_j = e1 e2 - 3 e3
        let mut p = AVarPoly::zero(3, None);
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    let mut exps = vec![0u32; 3];
                    exps[i] = 2;
                    exps[j] = 1;
                    p.add_term(exps, rat_int(1));
                }
            }
        }
        let q = symmetrize_to_e(&p).unwrap();
        let mut expect = EPoly::zero(3);
        expect.add_term(vec![1, 1, 0], rat_int(1));
        expect.add_term(vec![0, 0, 1], rat_int(-3));
        assert_eq!(q, expect);
    }

    #[test]
    fn non_symmetric_rejected() {
        let p = avar_terms(2, &[(&[2, 0], 1), (&[0, 1], 1)]);
        assert!(matches!(symmetrize_to_e(&p), Err(Error::NotSymmetric)));
        let q = avar_terms(2, &[(&[1, 0], 1)]);
        assert!(matches!(symmetrize_to_e(&q), Err(Error::NotSymmetric)));
    }

    #[test]
    fn truncation_drops_high_degree() {
        let a1 = AVarPoly::var(2, 1, Some(2));
        let sq = a1.mul(&a1);
        assert_eq!(sq.num_terms(), 1);
        let cube = sq.mul(&a1);
        assert!(cube.is_zero());
    }

    #[test]
    fn mpoly_round_trip() {
        let m = MPoly::basis(3, Partition::new(vec![2, 1]));
        let expanded = AVarPoly::from_mpoly(&m);
        assert_eq!(expanded.num_terms(), 6);
        assert_eq!(expanded.to_mpoly().unwrap(), m);
    }
}
