//! Monomial symmetric polynomials M_λ and their products.
//!
//! For a partition λ = (λ_1, ..., λ_p) with p ≤ c, M_λ in c variables is the
//! sum of all distinct monomials whose exponent pattern is λ. Products in
//! this basis depend on c, so every value carries its variable count.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;

/// Weakly decreasing positive parts; the empty partition indexes the
/// constant M = 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The padded exponent vector of length `c`.
    pub fn padded(&self, c: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(c, 0);
        v
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All distinct arrangements of the parts of `parts` (padded with zeros) into
/// `c` slots. These are exactly the exponent vectors of the monomials of M_λ.
pub(crate) fn distinct_placements(parts: &[u32], c: usize) -> Vec<Vec<u32>> {
    if parts.len() > c {
        return Vec::new();
    }
    let mut padded = parts.to_vec();
    padded.resize(c, 0);
    padded.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(c);
    fn rec(remaining: &mut Vec<u32>, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining.is_empty() {
            out.push(current.clone());
            return;
        }
        let mut i = 0;
        while i < remaining.len() {
            // Skip duplicate values to keep arrangements distinct.
            if i > 0 && remaining[i] == remaining[i - 1] {
                i += 1;
                continue;
            }
            let v = remaining.remove(i);
            current.push(v);
            rec(remaining, current, out);
            current.pop();
            remaining.insert(i, v);
            i += 1;
        }
    }
    rec(&mut padded, &mut current, &mut out);
    out
}

/// Partitions of `w` with at most `max_parts` parts.
pub(crate) fn partitions_at_most(w: u32, max_parts: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut acc = Vec::new();
    fn rec(left: u32, max_part: u32, slots: usize, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(acc.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        let hi = left.min(max_part);
        for p in (1..=hi).rev() {
            acc.push(p);
            rec(left - p, p, slots - 1, acc, out);
            acc.pop();
        }
    }
    rec(w, w, max_parts, &mut acc, &mut out);
    out
}

/// Symmetric function in the M_λ basis for a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Partition, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = MPoly::zero(nvars);
        p.add_term(Partition::new(vec![]), c);
        p
    }

    /// The basis element M_λ itself; zero when λ has more than `nvars` parts.
    pub fn basis(nvars: usize, lambda: Partition) -> Self {
        let mut p = MPoly::zero(nvars);
        if lambda.num_parts() <= nvars {
            p.add_term(lambda, Rational::one());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: Rational) {
        assert!(
            lambda.num_parts() <= self.nvars,
            "partition has more parts than variables"
        );
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
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

    pub fn add(&self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars, "mixed variable counts");
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> MPoly {
        if s.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), c * s))
                .collect(),
        }
    }

    /// Value at positive integer points (or any integers).
    pub fn evaluate(&self, values: &[BigInt]) -> Rational {
        assert_eq!(values.len(), self.nvars, "mixed variable counts");
        let mut acc = Rational::zero();
        for (lambda, coeff) in &self.terms {
            let mut basis_val = BigInt::zero();
            for placement in distinct_placements(lambda.parts(), self.nvars) {
                let mut m = BigInt::one();
                for (v, &k) in values.iter().zip(&placement) {
                    if k > 0 {
                        m *= v.pow(k);
                    }
                }
                basis_val += m;
            }
            acc += coeff * Rational::from_integer(basis_val);
        }
        acc
    }

    /// Terms in canonical order: weight descending, then lexicographically
    /// descending on parts.
    pub fn canonical_terms(&self) -> Vec<(Partition, Rational)> {
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .map(|(l, c)| (l.clone(), c.clone()))
            .collect();
        terms.sort_by(|(a, _), (b, _)| {
            b.weight()
                .cmp(&a.weight())
                .then_with(|| b.0.cmp(&a.0))
        });
        terms
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (lambda, coeff)) in self.canonical_terms().iter().enumerate() {
            if i == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = coeff.abs();
            if lambda.num_parts() == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "M{lambda}")?;
            } else {
                write!(f, "{a}*M{lambda}")?;
            }
        }
        Ok(())
    }
}

/// Product of two basis elements as a list of (partition, multiplicity).
///
/// The coefficient of M_ν in M_λ·M_μ counts, for one fixed monomial of
/// pattern ν, the pairs of a λ-patterned and a μ-patterned monomial whose
/// exponents add up to it.
fn basis_product(lambda: &Partition, mu: &Partition, c: usize) -> Vec<(Partition, u64)> {
    let w = lambda.weight() + mu.weight();
    let placements = distinct_placements(lambda.parts(), c);
    let mut out = Vec::new();
    for nu in partitions_at_most(w, c) {
        let target = nu.padded(c);
        let mut count = 0u64;
        for x in &placements {
            let mut rest: Vec<u32> = Vec::with_capacity(c);
            let mut ok = true;
            for (t, a) in target.iter().zip(x) {
                if t < a {
                    ok = false;
                    break;
                }
                let d = t - a;
                if d > 0 {
                    rest.push(d);
                }
            }
            if !ok {
                continue;
            }
            rest.sort_unstable_by(|a, b| b.cmp(a));
            if rest == mu.parts() {
                count += 1;
            }
        }
        if count > 0 {
            out.push((nu, count));
        }
    }
    out
}

/// Exact product in the M basis; multiplicities are counted for the fixed
/// number of variables shared by both factors.
pub fn m_multiply(x: &MPoly, y: &MPoly) -> MPoly {
    assert_eq!(x.nvars, y.nvars, "mixed variable counts");
    let c = x.nvars;
    let mut out = MPoly::zero(c);
    for (lambda, ca) in &x.terms {
        for (mu, cb) in &y.terms {
            let coeff = ca * cb;
            for (nu, count) in basis_product(lambda, mu, c) {
                out.add_term(nu, &coeff * Rational::from_integer(BigInt::from(count)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat_int;

    fn m(nvars: usize, parts: &[u32]) -> MPoly {
        MPoly::basis(nvars, Partition::new(parts.to_vec()))
    }

    fn term(parts: &[u32], c: i64) -> (Partition, Rational) {
        (Partition::new(parts.to_vec()), rat_int(c))
    }

    fn from_terms(nvars: usize, terms: &[(&[u32], i64)]) -> MPoly {
        let mut p = MPoly::zero(nvars);
        for &(parts, c) in terms {
            let (l, r) = term(parts, c);
            p.add_term(l, r);
        }
        p
    }

    #[test]
    fn placements_count() {
        assert_eq!(distinct_placements(&[1, 1, 1], 6).len(), 20); // C(6,3)
        assert_eq!(distinct_placements(&[2, 1], 6).len(), 30); // 6*5
        assert_eq!(distinct_placements(&[1], 6).len(), 6);
        assert!(distinct_placements(&[1, 1, 1], 2).is_empty());
    }

    #[test]
    fn listed_products_codim_six() {
        // M_{1,1,1}^2 = 20 M_{1^6} + 6 M_{2,1,1,1,1} + 2 M_{2,2,1,1} + M_{2,2,2}
        let p = m_multiply(&m(6, &[1, 1, 1]), &m(6, &[1, 1, 1]));
        assert_eq!(
            p,
            from_terms(
                6,
                &[
                    (&[1, 1, 1, 1, 1, 1], 20),
                    (&[2, 1, 1, 1, 1], 6),
                    (&[2, 2, 1, 1], 2),
                    (&[2, 2, 2], 1),
                ]
            )
        );

        // M_{2,1}·M_{1,1,1} = 4 M_{2,1,1,1,1} + 2 M_{2,2,1,1} + 3 M_{3,1,1,1} + M_{3,2,1}.
        // The M_{3,1,1,1} multiplicity is 3: a1^3 a2 a3 a4 arises from
        // a1^2*a2 · a1a3a4, a1^2*a3 · a1a2a4, and a1^2*a4 · a1a2a3.
        let p = m_multiply(&m(6, &[2, 1]), &m(6, &[1, 1, 1]));
        assert_eq!(
            p,
            from_terms(
                6,
                &[
                    (&[2, 1, 1, 1, 1], 4),
                    (&[2, 2, 1, 1], 2),
                    (&[3, 1, 1, 1], 3),
                    (&[3, 2, 1], 1),
                ]
            )
        );

        // M_1·M_{2,1,1,1} = 4 M_{2,1,1,1,1} + 2 M_{2,2,1,1} + M_{3,1,1,1}
        let p = m_multiply(&m(6, &[1]), &m(6, &[2, 1, 1, 1]));
        assert_eq!(
            p,
            from_terms(
                6,
                &[
                    (&[2, 1, 1, 1, 1], 4),
                    (&[2, 2, 1, 1], 2),
                    (&[3, 1, 1, 1], 1),
                ]
            )
        );
    }

    #[test]
    fn listed_products_match_all_ones_evaluation() {
        // Independent check of the multiplicities: evaluating at the all-ones
        // point turns each M_λ into its number of distinct placements.
        let ones = vec![BigInt::from(1); 6];
        for (l, r) in [
            (&[1u32, 1, 1][..], &[1u32, 1, 1][..]),
            (&[2, 1][..], &[1, 1, 1][..]),
            (&[1][..], &[2, 1, 1, 1][..]),
        ] {
            let a = m(6, l);
            let b = m(6, r);
            let prod = m_multiply(&a, &b);
            assert_eq!(
                prod.evaluate(&ones),
                a.evaluate(&ones) * b.evaluate(&ones)
            );
        }
    }

    #[test]
    fn product_respects_variable_count() {
        // In two variables M_{1,1} = e_2 and M_1^2 = M_2 + 2 M_{1,1}.
        let p = m_multiply(&m(2, &[1]), &m(2, &[1]));
        assert_eq!(p, from_terms(2, &[(&[2], 1), (&[1, 1], 2)]));
        // In one variable the M_{1,1} component vanishes.
        let p = m_multiply(&m(1, &[1]), &m(1, &[1]));
        assert_eq!(p, from_terms(1, &[(&[2], 1)]));
    }

    #[test]
    fn display_order() {
        let p = from_terms(6, &[(&[1, 1, 1, 1, 1, 1], 16), (&[3, 2, 1], 1), (&[2, 2, 2], 2)]);
        assert_eq!(
            p.to_string(),
            "M[3,2,1] + 2*M[2,2,2] + 16*M[1,1,1,1,1,1]"
        );
    }
}
