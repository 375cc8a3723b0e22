//! Todd polynomials and the modified Todd invariants of complete
//! intersections.
//!
//! For a degree sequence (a_1, ..., a_c) the invariants are
//! Λ_i = deg X · T_i(C_1, ..., C_i), where T_i is the i-th formal Todd
//! polynomial and C_j is (−1)^j times the degree-j complete homogeneous
//! symmetric polynomial of the sequence. They are independent of the ambient
//! dimension and carry the same information as the Hilbert polynomial. The
//! normalized form is Λ̃_0 = e_c and Λ̃_i = Λ_i / deg X for i > 0.
//!
//! One sign subtlety: the source statement of the multiplicativity identity
//! drops the (−1)^j on C_j, but the listed Λ̃ tables (Λ̃_1 = −e_1/2 in every
//! codimension) force the signed convention, which is what this module uses.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

use crate::algebra::{factorial, one_minus_exp_neg, Rational, TruncSeries};
use crate::error::{Error, Result};
use crate::sequence::DegreeSequence;
use crate::symfunc::{complete_homogeneous_epoly, EPoly, EVector};

/// Values Λ̃_0 .. Λ̃_m for one degree sequence (or candidate thereof).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaVector {
    c: usize,
    values: Vec<Rational>,
}

impl LambdaVector {
    pub fn new(c: usize, values: Vec<Rational>) -> Self {
        LambdaVector { c, values }
    }

    pub fn codim(&self) -> usize {
        self.c
    }

    /// Number of stored indices, i.e. m + 1.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, i: usize) -> Result<&Rational> {
        self.values.get(i).ok_or(Error::MissingInvariant(i))
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// Ambient Todd coefficients q_0 .. q_m of Td((1+h)^{n+1}) = (h/(1−e^{−h}))^{n+1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QVector {
    n: usize,
    values: Vec<Rational>,
}

impl QVector {
    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.values[i]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// Coefficients C_0 .. C_m of 1/c(N) = ∏ 1/(1 + a_i h); C_j is (−1)^j times
/// the degree-j complete homogeneous symmetric polynomial of the sequence.
pub fn inv_normal_chern_coeffs(seq: &DegreeSequence, m: usize) -> Vec<Rational> {
    let mut prod = TruncSeries::one(m);
    for &a in seq.entries() {
        let factor = TruncSeries::from_coeffs(m, vec![Rational::one(), crate::algebra::rat_int(a as i64)]);
        prod = prod.mul(&factor);
    }
    let inv = prod.inverse().expect("constant term is 1");
    inv.coeffs().to_vec()
}

/// The series h/(1−e^{−h}) truncated at the given order.
fn todd_unit_series(order: usize) -> TruncSeries {
    one_minus_exp_neg(1, order + 1)
        .shift_down(1)
        .expect("series starts at h")
        .inverse()
        .expect("constant term is 1")
}

/// Power sums p_1 .. p_k in the elementary basis of `c` variables, by the
/// Newton identity p_k = Σ_{i<k} (−1)^{i−1} e_i p_{k−i} + (−1)^{k−1} k e_k.
fn power_sums_in_e(k: usize, c: usize) -> Vec<EPoly> {
    let mut p: Vec<EPoly> = vec![EPoly::zero(c)]; // index 0 unused
    for m in 1..=k {
        let mut acc = EPoly::zero(c);
        for i in 1..m.min(c + 1) {
            let sign = if i % 2 == 1 {
                Rational::one()
            } else {
                -Rational::one()
            };
            acc = &acc + &EPoly::var(c, i).mul_trunc(&p[m - i], None).scale(&sign);
        }
        if m <= c {
            let sign = if m % 2 == 1 {
                Rational::one()
            } else {
                -Rational::one()
            };
            acc = &acc + &EPoly::var(c, m).scale(&(sign * Rational::from_integer(BigInt::from(m))));
        }
        p.push(acc);
    }
    p
}

fn compute_todd_t(j: usize) -> EPoly {
    if j == 0 {
        return EPoly::one(0);
    }
    // log(x/(1−e^{−x})) = Σ s_k x^k, so the product over Chern roots is
    // exp(Σ_k s_k p_k) with p_k the power sums, everything truncated at
    // weight j.
    let s = todd_unit_series(j).log().expect("constant term 1");
    let p = power_sums_in_e(j, j);
    let mut x = EPoly::zero(j);
    for k in 1..=j {
        let sk = s.coeff(k);
        if !sk.is_zero() {
            x = &x + &p[k].scale(&sk);
        }
    }
    let cap = Some(j as u32);
    let mut t = EPoly::one(j);
    let mut xpow = EPoly::one(j);
    for m in 1..=j {
        xpow = xpow.mul_trunc(&x, cap);
        t = &t + &xpow.scale(&Rational::new(BigInt::one(), factorial(m)));
    }
    t.homogeneous_part(j as u32)
}

static TODD_T_CACHE: Lazy<Mutex<HashMap<usize, Arc<EPoly>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The j-th formal Todd polynomial T_j(ε_1, ..., ε_j): the degree-j part of
/// ∏ b_i/(1−e^{−b_i}) written in the elementary symmetric functions of the
/// b_i. Computed once per j and cached.
pub fn todd_t(j: usize) -> Arc<EPoly> {
    let mut cache = TODD_T_CACHE.lock().expect("todd cache poisoned");
    cache
        .entry(j)
        .or_insert_with(|| Arc::new(compute_todd_t(j)))
        .clone()
}

/// Λ̃_i^c as a weight-i polynomial in e_1 .. e_c: e_c for i = 0, and
/// T_i(C_1, ..., C_i) rewritten in the elementary basis for i > 0.
pub fn lambda_symbolic(c: usize, i: usize) -> EPoly {
    assert!(c >= 1, "codimension must be positive");
    if i == 0 {
        return EPoly::var(c, c);
    }
    let t = todd_t(i);
    let args: Vec<EPoly> = (1..=i)
        .map(|j| {
            let sign = if j % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            complete_homogeneous_epoly(j, c).scale(&sign)
        })
        .collect();
    t.substitute(&args)
}

/// Λ̃_0 .. Λ̃_imax of a degree sequence, via the multiplicativity identity
/// Λ_i = [h^{i+c}] ∏_j (1 − e^{−a_j h}); then Λ̃_0 = Λ_0 = e_c and
/// Λ̃_i = Λ_i / e_c for i > 0.
pub fn lambda_numeric(seq: &DegreeSequence, imax: usize) -> LambdaVector {
    let c = seq.codim();
    let order = imax + c;
    let mut prod = TruncSeries::one(order);
    for &a in seq.entries() {
        prod = prod.mul(&one_minus_exp_neg(a as i64, order));
    }
    let lam0 = prod.coeff(c);
    debug_assert_eq!(lam0, Rational::from_integer(seq.product()));
    let mut values = Vec::with_capacity(imax + 1);
    values.push(lam0.clone());
    for i in 1..=imax {
        values.push(prod.coeff(c + i) / &lam0);
    }
    LambdaVector::new(c, values)
}

/// First m+1 coefficients of (h/(1−e^{−h}))^{n+1}.
pub fn ambient_todd_q(n: usize, m: usize) -> QVector {
    let q = todd_unit_series(m).pow(n + 1);
    QVector {
        n,
        values: q.coeffs().to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int};
    use crate::symfunc::elementary_values;

    fn seq(entries: &[u32]) -> DegreeSequence {
        DegreeSequence::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn chern_inverse_coeffs() {
        let cs = inv_normal_chern_coeffs(&seq(&[2, 3]), 2);
        assert_eq!(cs, vec![rat_int(1), rat_int(-5), rat_int(19)]);
        let cs = inv_normal_chern_coeffs(&seq(&[3]), 2);
        assert_eq!(cs, vec![rat_int(1), rat_int(-3), rat_int(9)]);
    }

    #[test]
    fn todd_t_small() {
        assert_eq!(*todd_t(0), EPoly::one(0));
        assert_eq!(*todd_t(1), EPoly::var(1, 1).scale(&rat(1, 2)));
        // T_2 = (ε_1^2 + ε_2)/12
        let mut t2 = EPoly::zero(2);
        t2.add_term(vec![2, 0], rat(1, 12));
        t2.add_term(vec![0, 1], rat(1, 12));
        assert_eq!(*todd_t(2), t2);
    }

    /// Direct numeric oracle: [h^j] ∏ b_i h/(1−e^{−b_i h}).
    fn todd_product_coeff(roots: &[u32], j: usize) -> Rational {
        let mut prod = TruncSeries::one(j);
        for &b in roots {
            let f = one_minus_exp_neg(b as i64, j + 1)
                .shift_down(1)
                .unwrap()
                .inverse()
                .unwrap()
                .scale(&rat_int(b as i64));
            prod = prod.mul(&f);
        }
        prod.coeff(j)
    }

    #[test]
    fn todd_t_matches_series_oracle() {
        let tuples: &[&[u32]] = &[
            &[1],
            &[2, 3],
            &[1, 4, 6],
            &[2, 2, 5, 7],
            &[1, 2, 3, 4, 5],
            &[3, 1, 4, 1, 5, 9],
        ];
        for roots in tuples {
            let e = elementary_values(&seq(roots));
            for j in 1..=roots.len().min(6) {
                let evec = EVector::new(e.values()[..j].to_vec());
                let symbolic = todd_t(j).evaluate(&evec);
                assert_eq!(symbolic, todd_product_coeff(roots, j), "roots {roots:?} j={j}");
            }
        }
    }

    #[test]
    fn lambda_symbolic_small_goldens() {
        // Λ̃_0^3 = e3, Λ̃_1^3 = (e1)(−1/2), Λ̃_2^3 = (2e1^2 − e2)(1/12)
        assert_eq!(lambda_symbolic(3, 0), EPoly::var(3, 3));
        assert_eq!(lambda_symbolic(3, 1), EPoly::var(3, 1).scale(&rat(-1, 2)));
        let mut lam2 = EPoly::zero(3);
        lam2.add_term(vec![2, 0, 0], rat(2, 12));
        lam2.add_term(vec![0, 1, 0], rat(-1, 12));
        assert_eq!(lambda_symbolic(3, 2), lam2);
        // Λ̃_4^4 = (6e1^4 − 9e1^2e2 + 2e2^2 − e1e3 + e4)/720
        let mut lam4 = EPoly::zero(4);
        lam4.add_term(vec![4, 0, 0, 0], rat(6, 720));
        lam4.add_term(vec![2, 1, 0, 0], rat(-9, 720));
        lam4.add_term(vec![0, 2, 0, 0], rat(2, 720));
        lam4.add_term(vec![1, 0, 1, 0], rat(-1, 720));
        lam4.add_term(vec![0, 0, 0, 1], rat(1, 720));
        assert_eq!(lambda_symbolic(4, 4), lam4);
    }

    #[test]
    fn lambda_numeric_examples() {
        let lv = lambda_numeric(&seq(&[2, 5, 9]), 1);
        assert_eq!(lv.get(0).unwrap(), &rat_int(90));
        assert_eq!(lv.get(1).unwrap(), &rat_int(-8));
        let lv = lambda_numeric(&seq(&[2, 3]), 2);
        assert_eq!(lv.get(2).unwrap(), &rat(11, 3));
    }

    #[test]
    fn symbolic_and_numeric_paths_agree() {
        let cases: &[&[u32]] = &[&[2, 5, 9], &[3, 3, 10], &[2, 6, 7, 15], &[4, 4, 15, 15, 22]];
        for entries in cases {
            let s = seq(entries);
            let e = elementary_values(&s);
            let lv = lambda_numeric(&s, 6);
            for i in 0..=6 {
                assert_eq!(
                    lambda_symbolic(s.codim(), i).evaluate(&e),
                    *lv.get(i).unwrap(),
                    "{s} i={i}"
                );
            }
        }
    }

    #[test]
    fn ambient_q_values() {
        for n in 0..=20 {
            let q = ambient_todd_q(n, 2.min(n + 1));
            assert_eq!(q.get(0), &rat_int(1));
            assert_eq!(q.get(1), &rat(n as i64 + 1, 2));
        }
        // n = 0 gives the unit Todd series itself, whose coefficients are the
        // Bernoulli-number values 1, 1/2, 1/12, 0, -1/720, 0, 1/30240, 0,
        // -1/1209600.
        let q = ambient_todd_q(0, 8);
        assert_eq!(
            q.values(),
            &[
                rat_int(1),
                rat(1, 2),
                rat(1, 12),
                rat_int(0),
                rat(-1, 720),
                rat_int(0),
                rat(1, 30240),
                rat_int(0),
                rat(-1, 1209600),
            ]
        );
        // (h/(1−e^{−h}))^2: coefficient of h^2 is 2·(1/12) + (1/2)^2 = 5/12.
        assert_eq!(ambient_todd_q(1, 2).get(2), &rat(5, 12));
    }
}
