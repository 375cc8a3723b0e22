//! Hilbert polynomials and series of complete intersections, by two
//! independent routes, plus the triangular transform between the μ
//! coefficients and the Λ̃ invariants, duality and parity checks, and
//! series-based recovery under the regularity hypothesis.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{binom_poly, binomial, factorial, rat_int, Rational, UniPoly};
use crate::error::{Error, Result};
use crate::sequence::DegreeSequence;
use crate::todd::{ambient_todd_q, lambda_numeric, LambdaVector};

/// Hilbert polynomial of a codimension-`c` complete intersection in P^n,
/// stored by the paper-facing convention: `mu[i]` is the coefficient of
/// t^{d−i} where d = n − c, so `mu[0]` is the leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPoly {
    n: usize,
    c: usize,
    mu: Vec<Rational>,
}

impl HilbertPoly {
    pub fn new(n: usize, c: usize, mu: Vec<Rational>) -> Result<Self> {
        if c == 0 || c > n {
            return Err(Error::CodimensionExceedsAmbient { c, n });
        }
        if mu.len() != n - c + 1 {
            return Err(Error::InvalidInput(format!(
                "expected {} coefficients for n={n}, c={c}, got {}",
                n - c + 1,
                mu.len()
            )));
        }
        Ok(HilbertPoly { n, c, mu })
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn codim(&self) -> usize {
        self.c
    }

    /// Dimension of the variety, the degree of the polynomial bound.
    pub fn dim(&self) -> usize {
        self.n - self.c
    }

    /// μ_i, the coefficient of t^{d−i}.
    pub fn mu(&self, i: usize) -> &Rational {
        &self.mu[i]
    }

    pub fn mu_coeffs(&self) -> &[Rational] {
        &self.mu
    }

    pub fn to_unipoly(&self) -> UniPoly {
        let d = self.dim();
        let mut coeffs = vec![Rational::zero(); d + 1];
        for (i, m) in self.mu.iter().enumerate() {
            coeffs[d - i] = m.clone();
        }
        UniPoly::from_coeffs(coeffs)
    }

    fn from_unipoly(n: usize, c: usize, p: &UniPoly) -> Result<Self> {
        let d = n - c;
        if p.degree().unwrap_or(0) > d {
            return Err(Error::InvalidInput(
                "polynomial degree exceeds the variety dimension".into(),
            ));
        }
        let mu = (0..=d).map(|i| p.coeff(d - i)).collect();
        HilbertPoly::new(n, c, mu)
    }

    pub fn eval_int(&self, t: i64) -> Rational {
        self.to_unipoly().eval(&rat_int(t))
    }

    /// Descending-power rendering, e.g. `90*t - 495`.
    pub fn render(&self) -> String {
        self.to_unipoly().to_string()
    }
}

impl std::fmt::Display for HilbertPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// The numerator ∏ (1 − t^{a_i}) of the Hilbert series written over
/// (1 − t)^{n+1}; integer coefficients, ascending powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesNumerator {
    coeffs: Vec<BigInt>,
}

impl SeriesNumerator {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while matches!(coeffs.last(), Some(c) if c.is_zero()) {
            coeffs.pop();
        }
        SeriesNumerator { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

/// Hilbert polynomial through the Koszul resolution: the alternating
/// inclusion-exclusion sum Σ_S (−1)^{|S|} binom(t − Σ_{i∈S} a_i + n, n).
/// Subsets are grouped by their degree sum first, so repeated degrees
/// collapse.
pub fn hilbert_koszul(seq: &DegreeSequence, n: usize) -> Result<HilbertPoly> {
    let c = seq.codim();
    if c > n {
        return Err(Error::CodimensionExceedsAmbient { c, n });
    }
    // Signed subset counts per degree sum.
    let total: usize = seq.sum() as usize;
    let mut counts = vec![0i64; total + 1];
    counts[0] = 1;
    for &a in seq.entries() {
        let a = a as usize;
        for s in (0..=total - a).rev() {
            if counts[s] != 0 {
                counts[s + a] -= counts[s];
            }
        }
    }
    let base = binom_poly(n);
    let mut acc = UniPoly::zero();
    for (s, &count) in counts.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let shifted = base.compose_linear(&Rational::one(), &rat_int(-(s as i64)));
        acc = &acc + &shifted.scale(&rat_int(count));
    }
    // The top c coefficients cancel identically.
    HilbertPoly::from_unipoly(n, c, &acc)
}

/// μ coefficients from Λ̃ invariants through the lower-triangular system
/// μ_i = Σ_{j≤i} q_{i−j} Λ_j / (d−i)!, with Λ_0 = Λ̃_0 and Λ_j = Λ̃_0·Λ̃_j.
pub fn mu_from_lambda(lv: &LambdaVector, n: usize) -> Result<HilbertPoly> {
    let c = lv.codim();
    if c > n {
        return Err(Error::CodimensionExceedsAmbient { c, n });
    }
    let d = n - c;
    if lv.len() < d + 1 {
        return Err(Error::MissingInvariant(lv.len()));
    }
    let q = ambient_todd_q(n, d);
    let lam0 = lv.get(0)?.clone();
    let lambda: Vec<Rational> = (0..=d)
        .map(|j| {
            if j == 0 {
                lam0.clone()
            } else {
                &lam0 * lv.values().get(j).expect("length checked")
            }
        })
        .collect();
    let mut mu = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let mut acc = Rational::zero();
        for (j, lam) in lambda.iter().enumerate().take(i + 1) {
            acc += q.get(i - j) * lam;
        }
        mu.push(acc / Rational::from_integer(factorial(d - i)));
    }
    HilbertPoly::new(n, c, mu)
}

/// Inverts `mu_from_lambda` by forward substitution. Errors when Λ̃_0 (the
/// degree) is not a positive integer.
pub fn lambda_from_mu(p: &HilbertPoly) -> Result<LambdaVector> {
    let d = p.dim();
    let q = ambient_todd_q(p.n, d);
    let mut lambda: Vec<Rational> = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let mut acc = p.mu(i) * Rational::from_integer(factorial(d - i));
        for (j, lam) in lambda.iter().enumerate() {
            acc -= q.get(i - j) * lam;
        }
        lambda.push(acc);
    }
    let lam0 = lambda[0].clone();
    if !lam0.denom().is_one() || !lam0.numer().is_positive() {
        return Err(Error::NotCompleteIntersectionPolynomial(format!(
            "leading invariant {lam0} is not a positive integer"
        )));
    }
    let values = lambda
        .iter()
        .enumerate()
        .map(|(j, lam)| if j == 0 { lam.clone() } else { lam / &lam0 })
        .collect();
    Ok(LambdaVector::new(p.c, values))
}

/// Hilbert polynomial through Riemann–Roch: numeric Λ̃ invariants pushed
/// through the triangular transform.
pub fn hilbert_hrr(seq: &DegreeSequence, n: usize) -> Result<HilbertPoly> {
    let c = seq.codim();
    if c > n {
        return Err(Error::CodimensionExceedsAmbient { c, n });
    }
    mu_from_lambda(&lambda_numeric(seq, n - c), n)
}

/// Integer coefficients of ∏ (1 − t^{a_i}).
pub fn series_numerator(seq: &DegreeSequence) -> SeriesNumerator {
    let total = seq.sum() as usize;
    let mut coeffs = vec![BigInt::zero(); total + 1];
    coeffs[0] = BigInt::one();
    for &a in seq.entries() {
        let a = a as usize;
        for s in (0..=total - a).rev() {
            if !coeffs[s].is_zero() {
                let carry = coeffs[s].clone();
                coeffs[s + a] -= carry;
            }
        }
    }
    SeriesNumerator::new(coeffs)
}

/// Recovers the degree multiset from a numerator of the form ∏ (1 − t^{a_i})
/// by repeatedly stripping the factor of the smallest nonzero degree.
pub fn degrees_from_numerator(num: &SeriesNumerator) -> Result<DegreeSequence> {
    let mut coeffs = num.coeffs().to_vec();
    if coeffs.is_empty() || !coeffs[0].is_one() {
        return Err(Error::NotCompleteIntersectionNumerator(
            "constant term is not 1".into(),
        ));
    }
    let mut degrees = Vec::new();
    while coeffs.len() > 1 {
        let a = match coeffs.iter().skip(1).position(|c| !c.is_zero()) {
            Some(k) => k + 1,
            None => {
                return Err(Error::NotCompleteIntersectionNumerator(
                    "nonconstant polynomial with a single term".into(),
                ))
            }
        };
        // Exact division by (1 − t^a): q_i = num_i + q_{i−a}.
        let qlen = coeffs.len() - a;
        let mut q = vec![BigInt::zero(); qlen];
        for i in 0..qlen {
            let mut v = coeffs[i].clone();
            if i >= a {
                v += q[i - a].clone();
            }
            q[i] = v;
        }
        // Remainder check: the recurrence must also annihilate the tail.
        for i in qlen..coeffs.len() {
            let expect = if i >= a {
                -q[i - a].clone()
            } else {
                BigInt::zero()
            };
            if coeffs[i] != expect {
                return Err(Error::NotCompleteIntersectionNumerator(format!(
                    "division by 1 - t^{a} leaves a remainder"
                )));
            }
        }
        if !q[0].is_one() {
            return Err(Error::NotCompleteIntersectionNumerator(
                "quotient constant term is not 1".into(),
            ));
        }
        degrees.push(a as u32);
        coeffs = q;
        while matches!(coeffs.last(), Some(c) if c.is_zero()) {
            coeffs.pop();
        }
    }
    if degrees.is_empty() {
        return Err(Error::NotCompleteIntersectionNumerator(
            "numerator is constant".into(),
        ));
    }
    DegreeSequence::new(degrees)
}

/// Serre-duality functional equation: P(t) = (−1)^d P(k − t) with
/// k = Σ a_i − n − 1.
pub fn duality_check(seq: &DegreeSequence, n: usize) -> Result<bool> {
    let p = hilbert_koszul(seq, n)?;
    let k = seq.sum() as i64 - n as i64 - 1;
    let d = p.dim();
    let poly = p.to_unipoly();
    let reflected = poly.compose_linear(&rat_int(-1), &rat_int(k));
    let sign = if d % 2 == 0 { 1 } else { -1 };
    Ok(poly == reflected.scale(&rat_int(sign)))
}

/// Predicts the odd coefficient μ_ℓ from μ_0 .. μ_{ℓ−1}:
/// 2(d−ℓ)! μ_ℓ = −Σ_{i<ℓ} (d−i)!/(ℓ−i)! · k^{ℓ−i} · μ_i, with the twist
/// k = −2μ_1/(d·μ_0) recovered from the linear coefficient. The prefix must
/// reach μ_1 even for ℓ = 1, since k itself comes from there (making the
/// ℓ = 1 case an identity).
pub fn odd_mu_from_even(mu_prefix: &[Rational], d: usize, ell: usize) -> Result<Rational> {
    if ell % 2 == 0 || ell > d {
        return Err(Error::InvalidInput(format!(
            "index {ell} is not an odd value bounded by the dimension {d}"
        )));
    }
    if mu_prefix.len() < ell.max(2) {
        return Err(Error::InvalidInput(format!(
            "need {} leading coefficients, got {}",
            ell.max(2),
            mu_prefix.len()
        )));
    }
    if mu_prefix[0].is_zero() {
        return Err(Error::InvalidInput("leading coefficient is zero".into()));
    }
    let k = -(&mu_prefix[1] * rat_int(2)) / (&mu_prefix[0] * rat_int(d as i64));
    let mut acc = Rational::zero();
    let mut kpow = Rational::one();
    // Accumulate from i = ℓ−1 down so k powers build incrementally.
    for i in (0..ell).rev() {
        kpow *= &k;
        let coeff = Rational::new(factorial(d - i), factorial(ell - i));
        acc += coeff * &kpow * &mu_prefix[i];
    }
    Ok(-acc / (Rational::from_integer(factorial(d - ell)) * rat_int(2)))
}

/// Degree-sequence recovery under the regularity hypothesis Σ a_i ≤ n, where
/// polynomial values at t ≥ 0 coincide with the Hilbert function: rebuilds
/// the series numerator as N_j = Σ_m (−1)^m binom(n+1, m) P(j−m) and strips
/// its factors. Verified by a full round trip.
pub fn recover_via_regularity(p: &HilbertPoly) -> Result<DegreeSequence> {
    let n = p.n;
    let poly = p.to_unipoly();
    let mut values = Vec::with_capacity(n + 1);
    for j in 0..=n as i64 {
        let v = poly.eval(&rat_int(j));
        if !v.denom().is_one() {
            return Err(Error::RegularityHypothesisViolated(format!(
                "non-integer value {v} at t = {j}"
            )));
        }
        values.push(v.to_integer());
    }
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut acc = BigInt::zero();
        for m in 0..=j.min(n + 1) {
            let term = binomial(n + 1, m) * &values[j - m];
            if m % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        coeffs.push(acc);
    }
    let num = SeriesNumerator::new(coeffs);
    let seq = degrees_from_numerator(&num)
        .map_err(|e| Error::RegularityHypothesisViolated(e.to_string()))?;
    if seq.sum() > n as u64 {
        return Err(Error::RegularityHypothesisViolated(format!(
            "degree sum {} exceeds ambient dimension {n}",
            seq.sum()
        )));
    }
    if seq.codim() != p.c || &hilbert_koszul(&seq, n)? != p {
        return Err(Error::RegularityHypothesisViolated(
            "round-trip verification failed".into(),
        ));
    }
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn seq(entries: &[u32]) -> DegreeSequence {
        DegreeSequence::new(entries.to_vec()).unwrap()
    }

    fn hp(n: usize, c: usize, mu: &[i64]) -> HilbertPoly {
        HilbertPoly::new(n, c, mu.iter().map(|&m| rat_int(m)).collect()).unwrap()
    }

    #[test]
    fn koszul_known_polynomials() {
        assert_eq!(hilbert_koszul(&seq(&[2, 5, 9]), 4).unwrap(), hp(4, 3, &[90, -495]));
        assert_eq!(hilbert_koszul(&seq(&[2, 2]), 2).unwrap(), hp(2, 2, &[4]));
        assert_eq!(hilbert_koszul(&seq(&[1, 4]), 2).unwrap(), hp(2, 2, &[4]));
        // Linear sections cut out a smaller projective space.
        for n in 3..=6 {
            let p = hilbert_koszul(&seq(&[1, 1, 1]), n).unwrap();
            assert_eq!(p.to_unipoly(), binom_poly(n - 3));
        }
        assert_eq!(
            hilbert_koszul(&seq(&[46, 36, 32, 15, 12, 5]), 12).unwrap(),
            hp(
                12,
                6,
                &[
                    66240,
                    -26429760,
                    4792795200,
                    -495690148800,
                    30434011089120,
                    -1041907113767520,
                    15429613604601120,
                ]
            )
        );
        assert!(matches!(
            hilbert_koszul(&seq(&[2, 3, 4]), 2),
            Err(Error::CodimensionExceedsAmbient { .. })
        ));
    }

    #[test]
    fn hrr_known_polynomials() {
        assert_eq!(
            hilbert_hrr(&seq(&[2, 6, 7, 15]), 7).unwrap(),
            hp(7, 4, &[210, -6930, 92295, -456225])
        );
        assert_eq!(
            hilbert_hrr(&seq(&[4, 4, 15, 15, 22]), 9).unwrap(),
            hp(9, 5, &[3300, -330000, 13952400, -285120000, 2328530380])
        );
        assert_eq!(
            hilbert_hrr(&seq(&[3, 6, 11, 20, 20]), 10).unwrap(),
            hp(
                10,
                5,
                &[660, -80850, 4486900, -135666300, 2188295670, -14860251560]
            )
        );
    }

    #[test]
    fn dual_routes_agree_on_samples() {
        let cases: &[(&[u32], usize)] = &[
            (&[2, 5, 9], 4),
            (&[3, 3, 10], 4),
            (&[2, 6, 7, 15], 7),
            (&[7], 9),
            (&[1, 1, 2, 2, 3], 11),
        ];
        for &(entries, n) in cases {
            let s = seq(entries);
            assert_eq!(
                hilbert_koszul(&s, n).unwrap(),
                hilbert_hrr(&s, n).unwrap(),
                "{s} in P^{n}"
            );
        }
    }

    #[test]
    fn lambda_mu_round_trip() {
        let p = hp(4, 3, &[90, -495]);
        let lv = lambda_from_mu(&p).unwrap();
        assert_eq!(lv.get(0).unwrap(), &rat_int(90));
        assert_eq!(lv.get(1).unwrap(), &rat_int(-8));
        assert_eq!(mu_from_lambda(&lv, 4).unwrap(), p);

        // μ_0 = Λ̃_0 / d!
        let p = hilbert_koszul(&seq(&[2, 3, 4]), 9).unwrap();
        let lv = lambda_from_mu(&p).unwrap();
        assert_eq!(
            p.mu(0),
            &(lv.get(0).unwrap() / Rational::from_integer(factorial(6)))
        );
        assert_eq!(mu_from_lambda(&lv, 9).unwrap(), p);

        // A point in P^1 has the constant polynomial 1.
        let p = hilbert_koszul(&seq(&[1]), 1).unwrap();
        assert_eq!(p, hp(1, 1, &[1]));
        let lv = lambda_from_mu(&p).unwrap();
        assert_eq!(mu_from_lambda(&lv, 1).unwrap(), p);

        // Fractional leading invariant is rejected.
        let bad = HilbertPoly::new(4, 3, vec![rat(1, 7), rat_int(0)]).unwrap();
        assert!(matches!(
            lambda_from_mu(&bad),
            Err(Error::NotCompleteIntersectionPolynomial(_))
        ));
    }

    #[test]
    fn numerator_and_inverse() {
        let num = series_numerator(&seq(&[2, 3]));
        let want: Vec<BigInt> = [1, 0, -1, -1, 0, 1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(num.coeffs(), &want[..]);
        assert_eq!(degrees_from_numerator(&num).unwrap(), seq(&[2, 3]));

        let num = series_numerator(&seq(&[1]));
        let want: Vec<BigInt> = [1, -1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(num.coeffs(), &want[..]);
        assert_eq!(degrees_from_numerator(&num).unwrap(), seq(&[1]));

        let num = series_numerator(&seq(&[2, 2]));
        let want: Vec<BigInt> = [1, 0, -2, 0, 1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(num.coeffs(), &want[..]);

        assert_eq!(
            degrees_from_numerator(&series_numerator(&seq(&[3, 3, 10]))).unwrap(),
            seq(&[3, 3, 10])
        );

        // 1 − t − t^2 is not a product of cyclotomic-style factors.
        let bad = SeriesNumerator::new(vec![BigInt::from(1), BigInt::from(-1), BigInt::from(-1)]);
        assert!(degrees_from_numerator(&bad).is_err());
    }

    #[test]
    fn duality_holds_and_perturbation_breaks_it() {
        for &(entries, n) in &[
            (&[2, 5, 9][..], 4usize),
            (&[2, 6, 7, 15][..], 7),
            (&[3, 4][..], 6),
            (&[1, 1][..], 3),
        ] {
            assert!(duality_check(&seq(entries), n).unwrap());
        }
        // Hand-check for (2,5,9) in P^4: k = 11, and 90t − 495 is fixed by
        // t ↦ 11 − t up to the (−1)^d sign.
        let p = hp(4, 3, &[90, -495]).to_unipoly();
        let reflected = p.compose_linear(&rat_int(-1), &rat_int(11));
        assert_eq!(p, reflected.scale(&rat_int(-1)));
        // Perturbed constant term violates the functional equation.
        let bad = hp(4, 3, &[90, -494]).to_unipoly();
        let reflected = bad.compose_linear(&rat_int(-1), &rat_int(11));
        assert_ne!(bad, reflected.scale(&rat_int(-1)));
    }

    #[test]
    fn odd_coefficient_prediction() {
        // ℓ = 1 is self-consistent by construction of k.
        let p = hilbert_koszul(&seq(&[2, 3, 4]), 9).unwrap();
        let mu1 = odd_mu_from_even(&p.mu_coeffs()[..2], p.dim(), 1).unwrap();
        assert_eq!(&mu1, p.mu(1));

        // Example coefficients: μ_3 of (2,6,7,15) in P^7.
        let prefix = vec![rat_int(210), rat_int(-6930), rat_int(92295)];
        assert_eq!(odd_mu_from_even(&prefix, 3, 3).unwrap(), rat_int(-456225));

        // Dual oracle at d = 5.
        let p = hilbert_koszul(&seq(&[2, 3, 7]), 8).unwrap();
        let mu5 = odd_mu_from_even(&p.mu_coeffs()[..5], 5, 5).unwrap();
        assert_eq!(&mu5, p.mu(5));

        assert!(odd_mu_from_even(&prefix, 3, 2).is_err());
    }

    #[test]
    fn regularity_recovery() {
        let p = hilbert_koszul(&seq(&[2, 3, 4]), 9).unwrap();
        assert_eq!(recover_via_regularity(&p).unwrap(), seq(&[2, 3, 4]));

        let p = hilbert_koszul(&seq(&[1, 1]), 3).unwrap();
        assert_eq!(recover_via_regularity(&p).unwrap(), seq(&[1, 1]));

        // Σ a_i = 16 > 4 violates the hypothesis.
        let p = hilbert_koszul(&seq(&[2, 5, 9]), 4).unwrap();
        assert!(matches!(
            recover_via_regularity(&p),
            Err(Error::RegularityHypothesisViolated(_))
        ));

        // Boundary case Σ a_i = n is included.
        let p = hilbert_koszul(&seq(&[2, 3, 4]), 9).unwrap();
        assert_eq!(recover_via_regularity(&p).unwrap(), seq(&[2, 3, 4]));
    }

    #[test]
    fn integer_valued_at_integers() {
        for &(entries, n) in &[(&[2, 5, 9][..], 4usize), (&[3, 7][..], 8), (&[4][..], 6)] {
            let p = hilbert_koszul(&seq(entries), n).unwrap();
            for t in -20..=20 {
                assert!(p.eval_int(t).denom().is_one(), "{p} at t={t}");
            }
        }
    }
}
