//! Polynomials in the elementary symmetric generators e_1 .. e_c.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;

/// Integer values of (e_1, ..., e_c) at some degree sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EVector {
    values: Vec<BigInt>,
}

impl EVector {
    pub fn new(values: Vec<BigInt>) -> Self {
        EVector { values }
    }

    pub fn codim(&self) -> usize {
        self.values.len()
    }

    /// Value of e_j, 1-based.
    pub fn get(&self, j: usize) -> &BigInt {
        &self.values[j - 1]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

impl fmt::Display for EVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Polynomial in e_1 .. e_c with rational coefficients. Terms are keyed by
/// the exponent vector (index 0 holds the exponent of e_1); zero coefficients
/// are never stored. The weight of a term is Σ j·(exponent of e_j).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

pub(crate) fn exponent_weight(exps: &[u32]) -> u32 {
    exps.iter()
        .enumerate()
        .map(|(j, &k)| (j as u32 + 1) * k)
        .sum()
}

impl EPoly {
    pub fn zero(nvars: usize) -> Self {
        EPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = EPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        EPoly::constant(nvars, Rational::one())
    }

    /// The generator e_j (1-based). Requires 1 ≤ j ≤ nvars.
    pub fn var(nvars: usize, j: usize) -> Self {
        assert!(j >= 1 && j <= nvars, "e_{j} out of range for {nvars} vars");
        let mut exps = vec![0; nvars];
        exps[j - 1] = 1;
        let mut p = EPoly::zero(nvars);
        p.add_term(exps, Rational::one());
        p
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, coeff: Rational) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = EPoly::zero(nvars);
        p.add_term(exps, coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
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

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: Rational) {
        assert_eq!(exps.len(), self.nvars);
        if coeff.is_zero() {
            return;
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

    pub fn scale(&self, s: &Rational) -> EPoly {
        if s.is_zero() {
            return EPoly::zero(self.nvars);
        }
        EPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * s))
                .collect(),
        }
    }

    /// Largest term weight; zero for the zero polynomial.
    pub fn max_weight(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| exponent_weight(e))
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous_of_weight(&self, w: u32) -> bool {
        self.terms.keys().all(|e| exponent_weight(e) == w)
    }

    /// Product with terms above `weight_cap` discarded.
    pub fn mul_trunc(&self, rhs: &EPoly, weight_cap: Option<u32>) -> EPoly {
        assert_eq!(self.nvars, rhs.nvars, "mixed variable counts");
        let mut out = EPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            let wa = exponent_weight(ea);
            for (eb, cb) in &rhs.terms {
                if let Some(cap) = weight_cap {
                    if wa + exponent_weight(eb) > cap {
                        continue;
                    }
                }
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn pow_trunc(&self, k: u32, weight_cap: Option<u32>) -> EPoly {
        let mut out = EPoly::one(self.nvars);
        for _ in 0..k {
            out = out.mul_trunc(self, weight_cap);
        }
        out
    }

    /// Keeps only terms of the given weight.
    pub fn homogeneous_part(&self, w: u32) -> EPoly {
        EPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| exponent_weight(e) == w)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes polynomials for the generators: e_j ↦ args[j-1]. All
    /// arguments must share a variable count, which becomes the result's.
    pub fn substitute(&self, args: &[EPoly]) -> EPoly {
        assert_eq!(args.len(), self.nvars);
        let out_vars = args.first().map(|p| p.nvars).unwrap_or(0);
        assert!(args.iter().all(|p| p.nvars == out_vars));
        let mut out = EPoly::zero(out_vars);
        for (exps, coeff) in &self.terms {
            let mut term = EPoly::constant(out_vars, coeff.clone());
            for (j, &k) in exps.iter().enumerate() {
                if k > 0 {
                    term = term.mul_trunc(&args[j].pow_trunc(k, None), None);
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Splits by powers of e_j (1-based): returns [p_0, p_1, ...] with
    /// self = Σ p_k · e_j^k and no e_j occurring in any p_k.
    pub fn split_by_var(&self, j: usize) -> Vec<EPoly> {
        let mut parts: Vec<EPoly> = Vec::new();
        for (exps, coeff) in &self.terms {
            let k = exps[j - 1] as usize;
            while parts.len() <= k {
                parts.push(EPoly::zero(self.nvars));
            }
            let mut stripped = exps.clone();
            stripped[j - 1] = 0;
            parts[k].add_term(stripped, coeff.clone());
        }
        if parts.is_empty() {
            parts.push(EPoly::zero(self.nvars));
        }
        parts
    }

    /// Value at integer e-values.
    pub fn evaluate(&self, e: &EVector) -> Rational {
        assert_eq!(e.codim(), self.nvars, "mixed variable counts");
        let mut acc = Rational::zero();
        for (exps, coeff) in &self.terms {
            let mut m = BigInt::one();
            for (j, &k) in exps.iter().enumerate() {
                if k > 0 {
                    m *= e.values[j].pow(k);
                }
            }
            acc += coeff * Rational::from_integer(m);
        }
        acc
    }

    /// Terms in canonical order: weight descending, then exponent vector
    /// lexicographically descending.
    pub fn canonical_terms(&self) -> Vec<(Vec<u32>, Rational)> {
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        terms.sort_by(|(a, _), (b, _)| {
            exponent_weight(b)
                .cmp(&exponent_weight(a))
                .then_with(|| b.cmp(a))
        });
        terms
    }

    /// Canonical rendering: when the coefficients have a common denominator
    /// greater than one it is pulled out as a trailing factor, with the sign
    /// chosen so the leading coefficient of the inner polynomial is positive,
    /// e.g. `(2*e1^2 - e2) * (1/12)` or `(e1) * (-1/2)`.
    pub fn canonical_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let terms = self.canonical_terms();
        let mut den_lcm = BigInt::one();
        for (_, c) in &terms {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut sign = BigInt::one();
        if den_lcm.is_one() {
            // No factor to pull out; render coefficients inline.
            return render_terms(&terms, &Rational::one());
        }
        if terms[0].1.is_negative() {
            sign = -sign;
        }
        let factor = Rational::new(sign, den_lcm);
        let body = render_terms(&terms, &factor);
        format!("({body}) * ({factor})")
    }
}

fn render_terms(terms: &[(Vec<u32>, Rational)], factor: &Rational) -> String {
    let mut body = String::new();
    for (i, (exps, coeff)) in terms.iter().enumerate() {
        let reduced = coeff / factor;
        if i == 0 {
            if reduced.is_negative() {
                body.push('-');
            }
        } else if reduced.is_negative() {
            body.push_str(" - ");
        } else {
            body.push_str(" + ");
        }
        let a = reduced.abs();
        let mono = render_e_monomial(exps);
        if mono.is_empty() {
            body.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                body.push_str(&a.to_string());
                body.push('*');
            }
            body.push_str(&mono);
        }
    }
    body
}

fn render_e_monomial(exps: &[u32]) -> String {
    let mut parts = Vec::new();
    for (j, &k) in exps.iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(format!("e{}", j + 1)),
            _ => parts.push(format!("e{}^{}", j + 1, k)),
        }
    }
    parts.join("*")
}

impl Add for &EPoly {
    type Output = EPoly;
    fn add(self, rhs: &EPoly) -> EPoly {
        assert_eq!(self.nvars, rhs.nvars, "mixed variable counts");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &EPoly {
    type Output = EPoly;
    fn sub(self, rhs: &EPoly) -> EPoly {
        assert_eq!(self.nvars, rhs.nvars, "mixed variable counts");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &EPoly {
    type Output = EPoly;
    fn neg(self) -> EPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &EPoly {
    type Output = EPoly;
    fn mul(self, rhs: &EPoly) -> EPoly {
        self.mul_trunc(rhs, None)
    }
}

impl fmt::Display for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_text())
    }
}
