//! Degree-sequence recovery from a Hilbert polynomial: the firmness
//! classification, closed-form solvers for codimension ≤ 6, and an
//! exhaustive fallback enumerator.
//!
//! The closed forms recover e_c, e_1, e_2 directly from Λ̃_0, Λ̃_1, Λ̃_2, then
//! peel off the remaining elementary values: linearly from Λ̃_4 (c = 4), via
//! a quadratic in e_3 after substituting e_4 = e_1e_3 + K (c = 5, smaller
//! root), and via a cubic in e_3 after a second substitution for e_5 (c = 6,
//! enumerate-and-verify with the largest-root rule as a cross-check). The
//! quadratic and cubic are generated from the symbolic Λ̃ polynomials rather
//! than transcribed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{rat_int, Rational, UniPoly};
use crate::error::{Error, Result};
use crate::hilbert::{hilbert_koszul, lambda_from_mu, HilbertPoly};
use crate::sequence::DegreeSequence;
use crate::symfunc::{e_to_monomial, is_positive_on_positive_integers, EPoly, EVector};
use crate::todd::{lambda_numeric, lambda_symbolic, LambdaVector};
use once_cell::sync::Lazy;

/// What is known about recovery at a given (codimension, ambient) pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Firmness {
    KnownFirm,
    KnownNotFirm,
    Unknown,
}

impl std::fmt::Display for Firmness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Firmness::KnownFirm => "known-firm",
            Firmness::KnownNotFirm => "known-not-firm",
            Firmness::Unknown => "unknown",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecoveryStatus {
    Unique,
    Multiple,
    None,
}

impl std::fmt::Display for RecoveryStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RecoveryStatus::Unique => "unique",
            RecoveryStatus::Multiple => "multiple",
            RecoveryStatus::None => "none",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecoveryOutcome {
    pub status: RecoveryStatus,
    pub sequences: Vec<DegreeSequence>,
    pub firmness: Firmness,
}

/// Minimal ambient dimension making each codimension firm. Codimensions ≥ 7
/// are absent: whether they are ever firm is open.
pub fn nc_table() -> &'static BTreeMap<usize, usize> {
    static TABLE: Lazy<BTreeMap<usize, usize>> =
        Lazy::new(|| BTreeMap::from([(1, 1), (2, 3), (3, 5), (4, 8), (5, 11), (6, 14)]));
    &TABLE
}

/// Classifies (c, n). Firm for c ≤ 6 iff n ≥ N_c; below that witnesses
/// exist down to n = c (where the polynomial is the constant degree).
pub fn is_firm(c: usize, n: usize) -> Result<Firmness> {
    if c == 0 || n < c {
        return Err(Error::CodimensionExceedsAmbient { c, n });
    }
    match nc_table().get(&c) {
        Some(&nc) if n >= nc => Ok(Firmness::KnownFirm),
        Some(_) => Ok(Firmness::KnownNotFirm),
        None => Ok(Firmness::Unknown),
    }
}

fn rational_to_integer(r: &Rational, what: &str) -> Result<BigInt> {
    if !r.denom().is_one() {
        return Err(Error::NotRealizable(format!("{what} = {r} is not an integer")));
    }
    Ok(r.numer().clone())
}

fn rational_to_positive_integer(r: &Rational, what: &str) -> Result<BigInt> {
    let v = rational_to_integer(r, what)?;
    if !v.is_positive() {
        return Err(Error::NotRealizable(format!("{what} = {v} is not positive")));
    }
    Ok(v)
}

/// Substitutes a univariate polynomial (in one unknown) for each generator.
fn epoly_subst(p: &EPoly, subs: &[UniPoly]) -> UniPoly {
    assert_eq!(subs.len(), p.nvars());
    let mut acc = UniPoly::zero();
    for (exps, coeff) in p.terms() {
        let mut term = UniPoly::constant(coeff.clone());
        for (j, &k) in exps.iter().enumerate() {
            for _ in 0..k {
                term = &term * &subs[j];
            }
        }
        acc = &acc + &term;
    }
    acc
}

fn upoly_const(r: &Rational) -> UniPoly {
    UniPoly::constant(r.clone())
}

fn upoly_x() -> UniPoly {
    UniPoly::from_coeffs(vec![Rational::zero(), Rational::one()])
}

/// K := −e_1e_3 + e_4, extracted from Λ̃_4 once e_1 and e_2 are known: the
/// symbolic Λ̃_4 is linear in e_3 and e_4 with those exact coefficients.
fn scratch_k(c: usize, e1: &Rational, e2: &Rational, lam4: &Rational) -> Rational {
    let p4 = lambda_symbolic(c, 4);
    let mut subs = vec![UniPoly::zero(); c];
    subs[0] = upoly_const(e1);
    subs[1] = upoly_const(e2);
    let base = epoly_subst(&p4, &subs);
    debug_assert_eq!(base.degree(), None.or(Some(0)).filter(|_| !base.is_zero()).or(Some(0)));
    (lam4 - base.coeff(0)) * rat_int(720)
}

/// Integer roots of a rational-coefficient polynomial of degree ≤ 3, exact.
fn integer_roots(p: &UniPoly) -> Vec<BigInt> {
    // Clear denominators.
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let coeffs: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    match coeffs.len() {
        0 | 1 => Vec::new(), // constant (the zero polynomial has no isolated roots)
        2 => {
            let (q, r) = (-&coeffs[0]).div_rem(&coeffs[1]);
            if r.is_zero() {
                vec![q]
            } else {
                Vec::new()
            }
        }
        3 => integer_roots_quadratic(&coeffs),
        4 => integer_roots_cubic(&coeffs),
        _ => unreachable!("solver polynomials have degree at most 3"),
    }
}

fn integer_roots_quadratic(c: &[BigInt]) -> Vec<BigInt> {
    // a x^2 + b x + c0 = 0
    let (c0, b, a) = (&c[0], &c[1], &c[2]);
    let disc = b * b - BigInt::from(4) * a * c0;
    if disc.is_negative() {
        return Vec::new();
    }
    let s = disc.sqrt();
    if &s * &s != disc {
        return Vec::new();
    }
    let two_a = BigInt::from(2) * a;
    let mut out = Vec::new();
    for root_num in [-b + &s, -b - &s] {
        let (q, r) = root_num.div_rem(&two_a);
        if r.is_zero() && !out.contains(&q) {
            out.push(q);
        }
    }
    out.sort();
    out
}

fn eval_coeffs(c: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for coeff in c.iter().rev() {
        acc = acc * x + coeff;
    }
    acc
}

/// Finds the integer zero of a polynomial monotone on [lo, hi], if any.
fn root_in_monotone(c: &[BigInt], mut lo: BigInt, mut hi: BigInt) -> Option<BigInt> {
    if lo > hi {
        return None;
    }
    let flo = eval_coeffs(c, &lo);
    if flo.is_zero() {
        return Some(lo);
    }
    let fhi = eval_coeffs(c, &hi);
    if fhi.is_zero() {
        return Some(hi);
    }
    if flo.sign() == fhi.sign() {
        return None;
    }
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) / 2;
        let fm = eval_coeffs(c, &mid);
        if fm.is_zero() {
            return Some(mid);
        }
        if fm.sign() == flo.sign() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    None
}

/// Integer roots of a genuine cubic, by exact bisection of the (at most
/// three) monotone segments. Segment boundaries come from a floor-sqrt
/// approximation of the critical points, with a pointwise scan over the
/// few integers around each boundary to absorb the rounding.
fn integer_roots_cubic(coeffs: &[BigInt]) -> Vec<BigInt> {
    let mut c = coeffs.to_vec();
    if c[3].is_negative() {
        for v in &mut c {
            *v = -v.clone();
        }
    }
    // Cauchy bound on root magnitude: 1 + max |c_i| / c_3.
    let maxabs = c[..3].iter().map(|v| v.abs()).max().unwrap_or_default();
    let bound: BigInt = &maxabs / &c[3] + 2;
    let lo = -&bound;
    let hi = bound.clone();

    let mut roots = Vec::new();
    let mut push = |r: BigInt, roots: &mut Vec<BigInt>| {
        if !roots.contains(&r) {
            roots.push(r);
        }
    };

    // Critical points of c3 x^3 + c2 x^2 + c1 x + c0: roots of
    // 3c3 x^2 + 2c2 x + c1; discriminant/4 = c2^2 − 3c3c1.
    let disc = &c[2] * &c[2] - BigInt::from(3) * &c[3] * &c[1];
    if disc.is_positive() {
        let s = disc.sqrt();
        let three_a = BigInt::from(3) * &c[3];
        let x_minus_approx: BigInt = (-&c[2] - &s).div_floor(&three_a);
        let x_plus_approx: BigInt = (-&c[2] + &s).div_floor(&three_a);
        // Guaranteed-monotone cores, plus pointwise scans on the margins.
        let m = BigInt::from(2);
        let seg1_hi = &x_minus_approx - &m;
        let seg2_lo = &x_minus_approx + &m;
        let seg2_hi = &x_plus_approx - &m;
        let seg3_lo = &x_plus_approx + &m;
        if let Some(r) = root_in_monotone(&c, lo.clone(), seg1_hi.clone().min(hi.clone())) {
            push(r, &mut roots);
        }
        if let Some(r) = root_in_monotone(&c, seg2_lo.clone().max(lo.clone()), seg2_hi.clone().min(hi.clone())) {
            push(r, &mut roots);
        }
        if let Some(r) = root_in_monotone(&c, seg3_lo.clone().max(lo.clone()), hi.clone()) {
            push(r, &mut roots);
        }
        for center in [&x_minus_approx, &x_plus_approx] {
            let mut x = center - &m;
            while x <= center + &m {
                if x >= lo && x <= hi && eval_coeffs(&c, &x).is_zero() {
                    push(x.clone(), &mut roots);
                }
                x += 1;
            }
        }
    } else if let Some(r) = root_in_monotone(&c, lo, hi) {
        // No interior critical points: strictly increasing.
        push(r, &mut roots);
    }
    roots.sort();
    roots
}

/// Positive divisors of n in ascending order.
fn positive_divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Inverts the Vieta map: the multiset of positive integer roots of
/// t^c − e_1 t^{c−1} + e_2 t^{c−2} − ... + (−1)^c e_c, found by testing
/// divisors of e_c with synthetic division (multiplicity by repetition).
pub fn roots_from_e(e: &EVector) -> Result<DegreeSequence> {
    let c = e.codim();
    if !e.get(c).is_positive() {
        return Err(Error::NotRealizable(format!(
            "product invariant {} is not positive",
            e.get(c)
        )));
    }
    // Monic coefficients, ascending: (−1)^c e_c, ..., −e_1, 1.
    let mut coeffs = vec![BigInt::zero(); c + 1];
    coeffs[c] = BigInt::one();
    for j in 1..=c {
        let sign = if j % 2 == 1 { -1 } else { 1 };
        coeffs[c - j] = sign * e.get(j);
    }
    let ec = e
        .get(c)
        .to_u64()
        .ok_or_else(|| Error::NotRealizable("degree product too large to factor".into()))?;
    let mut roots = Vec::with_capacity(c);
    for d in positive_divisors(ec) {
        let r = BigInt::from(d);
        // Divide out (t − d) as often as it goes.
        while roots.len() < c && eval_coeffs(&coeffs, &r).is_zero() {
            let mut quotient = vec![BigInt::zero(); coeffs.len() - 1];
            let mut carry = BigInt::zero();
            for i in (0..coeffs.len() - 1).rev() {
                carry = &coeffs[i + 1] + &carry * &r;
                quotient[i] = carry.clone();
            }
            coeffs = quotient;
            let deg: u32 = d
                .try_into()
                .map_err(|_| Error::NotRealizable(format!("root {d} out of range")))?;
            roots.push(deg);
        }
        if roots.len() == c {
            break;
        }
    }
    if roots.len() != c {
        return Err(Error::NotRealizable(
            "polynomial does not split into positive integer roots".into(),
        ));
    }
    DegreeSequence::new(roots)
}

/// Solves for (e_1, ..., e_c) from the Λ̃ prefix, for c ≤ 6. Requires the
/// indices {0} for c = 1, {0,1} for c = 2, {0,1,2} for c = 3, plus {4} for
/// c = 4, {4,6} for c = 5 and {4,6,8} for c = 6.
pub fn solve_e(lv: &LambdaVector) -> Result<EVector> {
    let c = lv.codim();
    match c {
        1 => {
            let e1 = rational_to_positive_integer(lv.get(0)?, "e1")?;
            Ok(EVector::new(vec![e1]))
        }
        2 => {
            let e1 = rational_to_positive_integer(&(lv.get(1)? * rat_int(-2)), "e1")?;
            let e2 = rational_to_positive_integer(lv.get(0)?, "e2")?;
            Ok(EVector::new(vec![e1, e2]))
        }
        3..=6 => solve_e_high(lv),
        _ => Err(Error::InconsistentInvariants(format!(
            "no closed-form solver for codimension {c}"
        ))),
    }
}

fn solve_e_high(lv: &LambdaVector) -> Result<EVector> {
    let c = lv.codim();
    let ec = rational_to_positive_integer(lv.get(0)?, &format!("e{c}"))?;
    let e1 = rational_to_positive_integer(&(lv.get(1)? * rat_int(-2)), "e1")?;
    let e1r = Rational::from_integer(e1.clone());
    let e2r = &e1r * &e1r * rat_int(2) - lv.get(2)? * rat_int(12);
    let e2 = rational_to_positive_integer(&e2r, "e2")?;
    if c == 3 {
        return Ok(EVector::new(vec![e1, e2, ec]));
    }

    let e2r = Rational::from_integer(e2.clone());
    let ecr = Rational::from_integer(ec.clone());
    let k = scratch_k(c, &e1r, &e2r, lv.get(4)?);

    if c == 4 {
        // Λ̃_4 is linear in e_3: e_1 e_3 = e_4 − K.
        let e3 = rational_to_positive_integer(&((&ecr - &k) / &e1r), "e3")?;
        return Ok(EVector::new(vec![e1, e2, e3, ec]));
    }

    if c == 5 {
        // Substitute e_4 = e_1 x + K into Λ̃_6 and solve the quadratic in
        // x = e_3; the true value is the smaller root since the root
        // average is e_1e_2 and e_1e_2 − e_3 > 0.
        let p6 = lambda_symbolic(5, 6);
        let subs = vec![
            upoly_const(&e1r),
            upoly_const(&e2r),
            upoly_x(),
            &upoly_x().scale(&e1r) + &upoly_const(&k),
            upoly_const(&ecr),
        ];
        let q = epoly_subst(&p6, &subs);
        let equation = &q - &UniPoly::constant(lv.get(6)?.clone());
        let scaled = equation.scale(&rat_int(60480));
        debug_assert_eq!(scaled.coeff(2), Rational::one());
        debug_assert_eq!(scaled.coeff(1), -(&e1r * &e2r) * rat_int(2));
        let roots = integer_roots(&scaled);
        let e3 = roots
            .first()
            .cloned()
            .filter(|r| r.is_positive())
            .ok_or_else(|| {
                Error::NotRealizable("quadratic has no positive integer root".into())
            })?;
        let e3r = Rational::from_integer(e3.clone());
        let e4 = rational_to_positive_integer(&(&e1r * &e3r + &k), "e4")?;
        return Ok(EVector::new(vec![e1, e2, e3, e4, ec]));
    }

    // c == 6. Substitute e_4 = e_1 x + K into Λ̃_6, solve for e_5 as a
    // quadratic in x (the equation is linear in e_5), then substitute both
    // into Λ̃_8 to get a cubic in x = e_3.
    let p6 = lambda_symbolic(6, 6);
    let by_e5 = p6.split_by_var(5);
    if by_e5.len() != 2 {
        return Err(Error::InconsistentInvariants(
            "expected the sixth invariant to be linear in e5".into(),
        ));
    }
    let e4_of_x = &upoly_x().scale(&e1r) + &upoly_const(&k);
    let base_subs = |with_e5: &UniPoly| {
        vec![
            upoly_const(&e1r),
            upoly_const(&e2r),
            upoly_x(),
            e4_of_x.clone(),
            with_e5.clone(),
            upoly_const(&ecr),
        ]
    };
    let p60 = epoly_subst(&by_e5[0], &base_subs(&UniPoly::zero()));
    let rho = epoly_subst(&by_e5[1], &base_subs(&UniPoly::zero()));
    if rho.degree() != Some(0) {
        return Err(Error::InconsistentInvariants(
            "e5 coefficient is not a known constant".into(),
        ));
    }
    let rho = rho.coeff(0);
    let e5_of_x = (&UniPoly::constant(lv.get(6)?.clone()) - &p60).scale(&rho.recip());
    // K' is e_5 + e_3^2/(2e_1) − e_2e_3, which must be free of x.
    let kprime_poly = &e5_of_x
        - &(&upoly_x().scale(&e2r)
            - &(&upoly_x() * &upoly_x()).scale(&(rat_int(2) * &e1r).recip()));
    if kprime_poly.degree().unwrap_or(0) > 0 {
        return Err(Error::InconsistentInvariants(
            "e5 substitution did not reduce to a known constant".into(),
        ));
    }

    let p8 = lambda_symbolic(6, 8);
    let cubic_subs = vec![
        upoly_const(&e1r),
        upoly_const(&e2r),
        upoly_x(),
        e4_of_x.clone(),
        e5_of_x.clone(),
        upoly_const(&ecr),
    ];
    let g = epoly_subst(&p8, &cubic_subs);
    let equation = &g - &UniPoly::constant(lv.get(8)?.clone());
    if equation.degree() != Some(3) {
        return Err(Error::InconsistentInvariants(
            "expected a cubic in e3 after substitution".into(),
        ));
    }
    let roots = integer_roots(&equation);

    // Enumerate-and-verify: each positive integer root back-substitutes to a
    // candidate e-vector, which must produce a genuine sequence matching all
    // given invariants.
    let mut survivors: Vec<(BigInt, EVector)> = Vec::new();
    for r in roots.iter().filter(|r| r.is_positive()) {
        let x = Rational::from_integer(r.clone());
        let e4 = match rational_to_positive_integer(&e4_of_x.eval(&x), "e4") {
            Ok(v) => v,
            Err(_) => continue,
        };
        let e5 = match rational_to_positive_integer(&e5_of_x.eval(&x), "e5") {
            Ok(v) => v,
            Err(_) => continue,
        };
        let ev = EVector::new(vec![
            e1.clone(),
            e2.clone(),
            r.clone(),
            e4,
            e5,
            ec.clone(),
        ]);
        let seq = match roots_from_e(&ev) {
            Ok(s) => s,
            Err(_) => continue,
        };
        if lambda_numeric(&seq, lv.len() - 1).values() == lv.values() {
            survivors.push((r.clone(), ev));
        }
    }
    match survivors.len() {
        0 => Err(Error::NotRealizable(
            "no cubic root yields a consistent sequence".into(),
        )),
        1 => {
            let (e3, ev) = survivors.pop().expect("one survivor");
            // Cross-checks from the root-selection analysis: the true e_3 is
            // the largest root, and (e_1e_2 − e_3)e_3 − e_1(e_1e_4 − e_5) > 0.
            if let Some(largest) = roots.last() {
                if largest != &e3 {
                    return Err(Error::InconsistentInvariants(
                        "survivor is not the largest cubic root".into(),
                    ));
                }
            }
            let sign = (&e1r * &e2r - Rational::from_integer(e3.clone()))
                * Rational::from_integer(e3)
                - &e1r
                    * (&e1r * Rational::from_integer(ev.get(4).clone())
                        - Rational::from_integer(ev.get(5).clone()));
            if !sign.is_positive() {
                return Err(Error::InconsistentInvariants(
                    "sign test for the cubic root selection failed".into(),
                ));
            }
            Ok(ev)
        }
        _ => Err(Error::InconsistentInvariants(format!(
            "{} cubic roots survive verification",
            survivors.len()
        ))),
    }
}

/// Enumerates multisets of `c` positive entries with the given sum, entries
/// ascending, each at most `max_entry`.
pub(crate) fn for_each_multiset_with_sum<F: FnMut(&[u32])>(
    c: usize,
    sum: u32,
    max_entry: u32,
    f: &mut F,
) {
    fn rec<F: FnMut(&[u32])>(buf: &mut Vec<u32>, slots: usize, left: u32, min: u32, max: u32, f: &mut F) {
        if slots == 1 {
            if left >= min && left <= max {
                buf.push(left);
                f(buf);
                buf.pop();
            }
            return;
        }
        let hi = (left / slots as u32).min(max);
        for v in min..=hi {
            buf.push(v);
            rec(buf, slots - 1, left - v, v, max, f);
            buf.pop();
        }
    }
    if c == 0 || sum < c as u32 {
        return;
    }
    let mut buf = Vec::with_capacity(c);
    rec(&mut buf, c, sum, 1, max_entry, f);
}

/// Enumerates multisets of `c` positive entries (ascending, ≤ `max_entry`)
/// whose product is `n`.
fn for_each_factorization<F: FnMut(&[u32])>(n: u64, c: usize, max_entry: u64, f: &mut F) {
    fn rec<F: FnMut(&[u32])>(buf: &mut Vec<u32>, slots: usize, left: u64, min: u64, max: u64, f: &mut F) {
        if slots == 1 {
            if left >= min && left <= max && left <= u32::MAX as u64 {
                buf.push(left as u32);
                f(buf);
                buf.pop();
            }
            return;
        }
        let mut v = min;
        while v * v <= left || slots == 1 {
            // v can appear as the smallest remaining factor only while
            // v^slots ≤ left; the simple square bound suffices here.
            if v > max {
                break;
            }
            if left % v == 0 && v <= u32::MAX as u64 {
                buf.push(v as u32);
                rec(buf, slots - 1, left / v, v, max, f);
                buf.pop();
            }
            v += 1;
        }
        // The remaining slots could also all absorb values above sqrt(left):
        // handled by the slots == 1 base case through recursion order.
        if slots > 1 {
            // Allow the case where all remaining factors equal `left` is not
            // needed; but a single factor above sqrt may pair with ones.
            if left >= min.max(2) && left <= max && left <= u32::MAX as u64 {
                // smallest remaining factor equals left only if the rest are
                // ones, which min ≥ 2 excludes; when min == 1 the loop above
                // already visited v = 1.
                if min * min > left && left % left == 0 {
                    buf.push(left as u32);
                    // all remaining slots must be ≥ left and multiply to 1:
                    // impossible unless slots == 1, so nothing to do here.
                    buf.pop();
                }
            }
        }
    }
    if c == 0 {
        return;
    }
    let mut buf = Vec::with_capacity(c);
    rec(&mut buf, c, n, 1, max_entry, f);
}

/// All degree sequences whose Hilbert polynomial in P^n equals `p`. For
/// n > c the sum e_1 = −2Λ̃_1 bounds the search; at n = c the polynomial is
/// the constant degree and a cap on entries is required.
pub fn recover_all(p: &HilbertPoly, cap: Option<u32>) -> Result<Vec<DegreeSequence>> {
    let lv = match lambda_from_mu(p) {
        Ok(lv) => lv,
        Err(Error::NotCompleteIntersectionPolynomial(_)) => return Ok(Vec::new()),
        Err(e) => return Err(e),
    };
    recover_all_from(p, &lv, cap)
}

fn recover_all_from(
    p: &HilbertPoly,
    lv: &LambdaVector,
    cap: Option<u32>,
) -> Result<Vec<DegreeSequence>> {
    let c = p.codim();
    let n = p.ambient();
    let d = p.dim();
    let ec = match rational_to_positive_integer(lv.get(0)?, "degree") {
        Ok(v) => v,
        Err(_) => return Ok(Vec::new()),
    };

    let mut found = Vec::new();
    if d == 0 {
        let cap = match cap {
            Some(cap) => cap as u64,
            None => {
                return Err(Error::UnboundedSearch(
                    "at n = c the key is the degree alone; supply an entry cap".into(),
                ))
            }
        };
        let ec = match ec.to_u64() {
            Some(v) => v,
            None => {
                return Err(Error::UnboundedSearch(
                    "constant degree too large to enumerate factorizations".into(),
                ))
            }
        };
        for_each_factorization(ec, c, cap, &mut |entries| {
            found.push(DegreeSequence::new(entries.to_vec()).expect("positive entries"));
        });
        found.sort();
        return Ok(found);
    }

    let e1 = match rational_to_positive_integer(&(lv.get(1)? * rat_int(-2)), "e1") {
        Ok(v) => v,
        Err(_) => return Ok(Vec::new()),
    };
    let sum = match e1.to_u64().and_then(|v| u32::try_from(v).ok()) {
        Some(v) if v as u64 >= c as u64 => v,
        Some(_) => return Ok(Vec::new()),
        None => {
            return Err(Error::UnboundedSearch(
                "degree sum too large to enumerate".into(),
            ))
        }
    };
    // Cheap integer filters before the full polynomial comparison.
    let e2 = if d >= 2 {
        let e1r = Rational::from_integer(e1.clone());
        let v = &e1r * &e1r * rat_int(2) - lv.get(2)? * rat_int(12);
        match rational_to_integer(&v, "e2") {
            Ok(v) => Some(v),
            Err(_) => return Ok(Vec::new()),
        }
    } else {
        None
    };

    let mut candidates = Vec::new();
    for_each_multiset_with_sum(c, sum, cap.unwrap_or(u32::MAX), &mut |entries| {
        let mut prod = BigInt::one();
        for &a in entries {
            prod *= a;
        }
        if prod != ec {
            return;
        }
        if let Some(e2) = &e2 {
            let mut acc = BigInt::zero();
            for i in 0..entries.len() {
                for j in i + 1..entries.len() {
                    acc += entries[i] as u64 * entries[j] as u64;
                }
            }
            if &acc != e2 {
                return;
            }
        }
        candidates.push(DegreeSequence::new(entries.to_vec()).expect("positive entries"));
    });

    for seq in candidates {
        if &hilbert_koszul(&seq, n)? == p {
            found.push(seq);
        }
    }
    found.sort();
    Ok(found)
}

/// Full recovery pipeline: Λ̃ from the polynomial, the closed-form solver on
/// firm pairs, the exhaustive enumerator elsewhere, and re-verification of
/// every reported sequence.
pub fn recover(p: &HilbertPoly) -> Result<RecoveryOutcome> {
    let c = p.codim();
    let n = p.ambient();
    let firmness = is_firm(c, n)?;
    let lv = match lambda_from_mu(p) {
        Ok(lv) => lv,
        Err(Error::NotCompleteIntersectionPolynomial(_)) => {
            return Ok(RecoveryOutcome {
                status: RecoveryStatus::None,
                sequences: Vec::new(),
                firmness,
            })
        }
        Err(e) => return Err(e),
    };

    if firmness == Firmness::KnownFirm {
        // n ≥ N_c guarantees exactly the Λ̃ indices the solver needs.
        let seq = match solve_e(&lv).and_then(|e| roots_from_e(&e)) {
            Ok(seq) => seq,
            Err(Error::InconsistentInvariants(m)) => {
                return Err(Error::InconsistentInvariants(m))
            }
            Err(_) => {
                return Ok(RecoveryOutcome {
                    status: RecoveryStatus::None,
                    sequences: Vec::new(),
                    firmness,
                })
            }
        };
        if &hilbert_koszul(&seq, n)? == p {
            return Ok(RecoveryOutcome {
                status: RecoveryStatus::Unique,
                sequences: vec![seq],
                firmness,
            });
        }
        return Ok(RecoveryOutcome {
            status: RecoveryStatus::None,
            sequences: Vec::new(),
            firmness,
        });
    }

    let cap = if p.dim() == 0 {
        lv.get(0)?.to_integer().to_u32()
    } else {
        None
    };
    let sequences = recover_all_from(p, &lv, cap)?;
    let status = match sequences.len() {
        0 => RecoveryStatus::None,
        1 => RecoveryStatus::Unique,
        _ => RecoveryStatus::Multiple,
    };
    Ok(RecoveryOutcome {
        status,
        sequences,
        firmness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::elementary_values;

    fn seq(entries: &[u32]) -> DegreeSequence {
        DegreeSequence::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn nc_table_and_parity() {
        let t = nc_table();
        assert_eq!(t[&1], 1);
        assert_eq!(t[&2], 3);
        assert_eq!(t[&3], 5);
        assert_eq!(t[&4], 8);
        assert_eq!(t[&5], 11);
        assert_eq!(t[&6], 14);
        assert!(t.get(&7).is_none());
        for c in 3..=6 {
            assert_eq!(t[&c] % 2, c % 2, "parity at c={c}");
        }
    }

    #[test]
    fn firmness_classification() {
        assert_eq!(is_firm(2, 3).unwrap(), Firmness::KnownFirm);
        assert_eq!(is_firm(3, 4).unwrap(), Firmness::KnownNotYetOrNot());
        assert_eq!(is_firm(7, 20).unwrap(), Firmness::Unknown);
        assert_eq!(is_firm(2, 2).unwrap(), Firmness::KnownNotFirm);
        assert_eq!(is_firm(1, 1).unwrap(), Firmness::KnownFirm);
        assert!(is_firm(3, 2).is_err());
    }

    #[test]
    fn solve_small_codims() {
        for entries in [&[2u32, 5, 9][..], &[3, 3, 10], &[1, 1, 7], &[4, 4, 4]] {
            let s = seq(entries);
            let lv = lambda_numeric(&s, 2);
            assert_eq!(solve_e(&lv).unwrap(), elementary_values(&s), "{s}");
        }
        let s = seq(&[6]);
        assert_eq!(solve_e(&lambda_numeric(&s, 0)).unwrap(), elementary_values(&s));
        let s = seq(&[2, 7]);
        assert_eq!(solve_e(&lambda_numeric(&s, 1)).unwrap(), elementary_values(&s));
    }

    #[test]
    fn solve_codim_four_and_five() {
        for entries in [&[2u32, 6, 7, 15][..], &[3, 3, 10, 14], &[1, 2, 3, 4]] {
            let s = seq(entries);
            let lv = lambda_numeric(&s, 4);
            assert_eq!(solve_e(&lv).unwrap(), elementary_values(&s), "{s}");
        }
        for entries in [&[4u32, 4, 15, 15, 22][..], &[3, 6, 11, 20, 20], &[1, 1, 2, 2, 3]] {
            let s = seq(entries);
            let lv = lambda_numeric(&s, 6);
            assert_eq!(solve_e(&lv).unwrap(), elementary_values(&s), "{s}");
        }
    }

    #[test]
    fn solve_codim_six() {
        for entries in [
            &[46u32, 36, 32, 15, 12, 5][..],
            &[45, 40, 24, 23, 8, 6],
            &[1, 2, 3, 4, 5, 6],
            &[2, 2, 2, 2, 2, 2],
        ] {
            let s = seq(entries);
            let lv = lambda_numeric(&s, 8);
            assert_eq!(solve_e(&lv).unwrap(), elementary_values(&s), "{s}");
        }
    }

    #[test]
    fn quadratic_sign_lemma() {
        // e1e2 − e3 expands to M_{2,1} + 2 M_{1,1,1}: positive at positive
        // integer points, so the smaller quadratic root is always the true
        // e3 for c = 5.
        let mut p = EPoly::zero(5);
        p.add_term(vec![1, 1, 0, 0, 0], rat_int(1));
        p.add_term(vec![0, 0, 1, 0, 0], rat_int(-1));
        let m = e_to_monomial(&p);
        assert!(is_positive_on_positive_integers(&m));
    }

    #[test]
    fn roots_from_e_cases() {
        let e = EVector::new(vec![BigInt::from(16), BigInt::from(73), BigInt::from(90)]);
        assert_eq!(roots_from_e(&e).unwrap(), seq(&[2, 5, 9]));
        let e = EVector::new(vec![BigInt::from(3), BigInt::from(3), BigInt::from(1)]);
        assert_eq!(roots_from_e(&e).unwrap(), seq(&[1, 1, 1]));
        let e = EVector::new(vec![BigInt::from(5), BigInt::from(7)]);
        assert!(matches!(roots_from_e(&e), Err(Error::NotRealizable(_))));
    }

    #[test]
    fn integer_root_finding() {
        // (x − 3)(x − 5)(x + 11) = x^3 + 3x^2 − 73x + 165
        let p = UniPoly::from_coeffs(vec![
            rat_int(165),
            rat_int(-73),
            rat_int(3),
            rat_int(1),
        ]);
        assert_eq!(
            integer_roots(&p),
            vec![BigInt::from(-11), BigInt::from(3), BigInt::from(5)]
        );
        // Rational coefficients clear correctly: (x − 2)(x − 1/2) scaled.
        let p = UniPoly::from_coeffs(vec![rat_int(1), crate::algebra::rat(-5, 2), rat_int(1)]);
        assert_eq!(integer_roots(&p), vec![BigInt::from(2)]);
        // No integer roots.
        let p = UniPoly::from_coeffs(vec![rat_int(7), rat_int(-5), rat_int(1)]);
        assert!(integer_roots(&p).is_empty());
        // Triple root.
        let p = UniPoly::from_coeffs(vec![rat_int(-8), rat_int(12), rat_int(-6), rat_int(1)]);
        assert_eq!(integer_roots(&p), vec![BigInt::from(2)]);
    }

    #[test]
    fn recover_examples() {
        // Example pair at (3,4): both sequences share 90t − 495.
        let p = hilbert_koszul(&seq(&[2, 5, 9]), 4).unwrap();
        let out = recover(&p).unwrap();
        assert_eq!(out.status, RecoveryStatus::Multiple);
        assert_eq!(out.firmness, Firmness::KnownNotFirm);
        assert_eq!(out.sequences, vec![seq(&[2, 5, 9]), seq(&[3, 3, 10])]);

        // The same data at (4,8), which is firm.
        let p = hilbert_koszul(&seq(&[3, 3, 10, 14]), 8).unwrap();
        let out = recover(&p).unwrap();
        assert_eq!(out.status, RecoveryStatus::Unique);
        assert_eq!(out.firmness, Firmness::KnownFirm);
        assert_eq!(out.sequences, vec![seq(&[3, 3, 10, 14])]);

        // Points in the plane: constant polynomial 4.
        let p = hilbert_koszul(&seq(&[2, 2]), 2).unwrap();
        let out = recover(&p).unwrap();
        assert_eq!(out.status, RecoveryStatus::Multiple);
        assert_eq!(out.sequences, vec![seq(&[1, 4]), seq(&[2, 2])]);
    }

    #[test]
    fn recover_all_examples() {
        let p = hilbert_koszul(&seq(&[2, 5, 9]), 4).unwrap();
        assert_eq!(
            recover_all(&p, None).unwrap(),
            vec![seq(&[2, 5, 9]), seq(&[3, 3, 10])]
        );
        let p = hilbert_koszul(&seq(&[2, 6, 7, 15]), 7).unwrap();
        assert_eq!(
            recover_all(&p, None).unwrap(),
            vec![seq(&[2, 6, 7, 15]), seq(&[3, 3, 10, 14])]
        );
        let p = hilbert_koszul(&seq(&[1, 1]), 3).unwrap();
        assert_eq!(recover_all(&p, None).unwrap(), vec![seq(&[1, 1])]);
        // n = c without a cap is refused.
        let p = hilbert_koszul(&seq(&[2, 2]), 2).unwrap();
        assert!(matches!(
            recover_all(&p, None),
            Err(Error::UnboundedSearch(_))
        ));
    }
}
