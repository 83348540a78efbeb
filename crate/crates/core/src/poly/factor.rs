//! Canonical factorization of `x^m − λ₀` through its roots in a splitting field.
//!
//! With `o` the order of `λ₀` and `N = m·o`, the roots of `x^m − λ₀` are the
//! powers `ζ^a` of a primitive `N`-th root of unity `ζ` with `a ≡ k (mod o)`,
//! where `ζ^{mk} = λ₀`. They live in `F_{q^d}`, `d = ord_N(q)`. Each orbit of
//! the exponents under `a ↦ qa (mod N)` gives one irreducible factor over
//! `F_q`. Every choice in the construction (the extension modulus, `ζ`) is the
//! canonically smallest one, so the output is deterministic.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use super::{FieldPoly, RingPoly};
use crate::arith;
use crate::chainring::{RingContext, RingElement};
use crate::gf::{FieldContext, FieldElement};
use crate::{Error, Result};

/// The distinct monic irreducible factors of `x^m − λ₀`, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    lambda0: FieldElement,
    m: u64,
    factors: Vec<FieldPoly>,
    cyclotomic_classes: usize,
}

impl Factorization {
    pub fn lambda0(&self) -> FieldElement {
        self.lambda0
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn factors(&self) -> &[FieldPoly] {
        &self.factors
    }

    /// Number of irreducible factors `l`.
    pub fn l(&self) -> usize {
        self.factors.len()
    }

    /// Number of `q`-cyclotomic classes modulo `m`, reported for comparison
    /// with [`Self::l`]; the two agree when `λ₀ = 1` but not in general.
    pub fn cyclotomic_class_count(&self) -> usize {
        self.cyclotomic_classes
    }

    pub fn class_count_agrees(&self) -> bool {
        self.cyclotomic_classes == self.factors.len()
    }

    /// Position of a monic factor in the canonical order.
    pub fn index_of(&self, g: &FieldPoly) -> Option<usize> {
        self.factors.binary_search(g).ok()
    }

    pub fn product(&self, f: &FieldContext) -> FieldPoly {
        self.factors
            .iter()
            .fold(FieldPoly::one(), |acc, g| acc.mul(g, f))
    }
}

/// A [`Factorization`] of `x^m − λ₀` read as `x^{mp^s} − λ₁ = ∏ f_i^{p^s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepeatedFactorization {
    pub base: Factorization,
    pub s: u32,
    pub lambda1: FieldElement,
    /// `p^s`.
    pub multiplicity: u64,
}

impl RepeatedFactorization {
    pub fn n(&self) -> u64 {
        self.base.m * self.multiplicity
    }

    /// Expands `(x^m − λ₀)^{p^s}` and compares it with `x^{mp^s} − λ₁`.
    pub fn expansion_holds(&self, f: &FieldContext) -> bool {
        let lhs = FieldPoly::binomial(f, self.base.m as usize, self.base.lambda0)
            .pow(self.multiplicity, f);
        lhs == FieldPoly::binomial(f, self.n() as usize, self.lambda1)
    }
}

/// Self-reciprocal factors `g_i` and reciprocal pairs `(h_j, h_j*)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocalSplit {
    pub selfrec: Vec<FieldPoly>,
    /// `(h_j, h_j*)` with `h_j` the canonically smaller member.
    pub pairs: Vec<(FieldPoly, FieldPoly)>,
}

impl ReciprocalSplit {
    pub fn k(&self) -> usize {
        self.selfrec.len()
    }

    pub fn t(&self) -> usize {
        self.pairs.len()
    }
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible_by_trial_division(g: &FieldPoly, f: &FieldContext) -> bool {
    let Some(d) = g.degree() else { return false };
    if d == 0 {
        return false;
    }
    let q = f.order();
    for dd in 1..=d / 2 {
        let mut digits = vec![0u32; dd];
        loop {
            let mut coeffs: Vec<FieldElement> = digits
                .iter()
                .map(|&c| f.from_encoding(c).expect("digit below q"))
                .collect();
            coeffs.push(FieldElement::ONE);
            if g.rem(&FieldPoly::new(coeffs), f).expect("monic divisor").is_zero() {
                return false;
            }
            if !increment(&mut digits, q) {
                break;
            }
        }
    }
    true
}

/// Base-`q` odometer, least significant digit first. Returns false on wrap.
fn increment(digits: &mut [u32], q: u32) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < q {
            return true;
        }
        *d = 0;
    }
    false
}

/// Rabin's test: `x^{q^d} ≡ x (mod g)` and `gcd(x^{q^{d/ℓ}} − x, g) = 1` for
/// every prime `ℓ | d`.
pub fn is_irreducible(g: &FieldPoly, f: &FieldContext) -> bool {
    let Some(d) = g.degree() else { return false };
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let q = BigUint::from(f.order());
    let x = FieldPoly::monomial(FieldElement::ONE, 1);
    // frob[i] = x^{q^i} mod g
    let mut frob = vec![x.rem(g, f).expect("g nonzero")];
    for i in 1..=d {
        let next = frob[i - 1].pow_mod(&q, g, f).expect("g nonzero");
        frob.push(next);
    }
    if frob[d] != frob[0] {
        return false;
    }
    arith::prime_factors(d as u64).into_iter().all(|l| {
        let h = frob[d / l as usize].sub(&x, f);
        h.gcd(g, f).degree() == Some(0)
    })
}

/// Canonical monic irreducible of degree `d` over `F_q` (minimal low
/// coefficients in the base-`q` reading).
fn canonical_irreducible(d: usize, f: &FieldContext) -> FieldPoly {
    let mut digits = vec![0u32; d];
    loop {
        let mut coeffs: Vec<FieldElement> = digits
            .iter()
            .map(|&c| f.from_encoding(c).expect("digit below q"))
            .collect();
        coeffs.push(FieldElement::ONE);
        let g = FieldPoly::new(coeffs);
        if is_irreducible(&g, f) {
            return g;
        }
        assert!(increment(&mut digits, f.order()), "irreducibles exist in every degree");
    }
}

/// `F_q[y]/(modulus)`.
struct Extension<'a> {
    f: &'a FieldContext,
    modulus: FieldPoly,
}

impl Extension<'_> {
    fn mul(&self, a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
        a.mul(b, self.f).rem(&self.modulus, self.f).expect("modulus nonzero")
    }

    fn pow(&self, a: &FieldPoly, k: &BigUint) -> FieldPoly {
        a.pow_mod(k, &self.modulus, self.f).expect("modulus nonzero")
    }

    fn is_one(&self, a: &FieldPoly) -> bool {
        *a == FieldPoly::one()
    }

    /// A primitive `n`-th root of unity, found as `g^{(q^d−1)/n}` for the
    /// canonically first `g` that yields one.
    fn root_of_unity(&self, n: u64) -> FieldPoly {
        let d = self.modulus.degree().expect("modulus nonzero");
        let group_order = BigUint::from(self.f.order()).pow(d as u32) - BigUint::one();
        let cofactor = &group_order / n;
        let primes = arith::prime_factors(n);
        let mut digits = vec![0u32; d];
        while increment(&mut digits, self.f.order()) {
            let g = FieldPoly::new(
                digits
                    .iter()
                    .map(|&c| self.f.from_encoding(c).expect("digit below q"))
                    .collect(),
            );
            let z = self.pow(&g, &cofactor);
            if primes
                .iter()
                .all(|&l| !self.is_one(&self.pow(&z, &BigUint::from(n / l))))
            {
                return z;
            }
        }
        unreachable!("the multiplicative group of F_(q^d) is cyclic of order divisible by n")
    }
}

/// Factors `x^m − λ₀` over `F_q` into distinct monic irreducibles, canonically
/// ordered. Requires `gcd(m, p) = 1` (so the binomial is squarefree) and `λ₀ ≠ 0`.
pub fn factor_binomial(f: &FieldContext, m: u64, lambda0: FieldElement) -> Result<Factorization> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    if m.is_multiple_of(f.p() as u64) {
        return Err(Error::NotCoprime { m, p: f.p() as u64 });
    }
    f.check(lambda0)?;
    let o = f
        .element_order(lambda0)
        .map_err(|_| Error::InvalidParameter("λ₀ must be nonzero".into()))?;
    let q = f.order() as u64;
    let n_big = m * o;
    let d = arith::multiplicative_order(q % n_big, n_big).expect("N is coprime to q") as usize;
    let ext = Extension {
        f,
        modulus: canonical_irreducible(d, f),
    };
    let zeta = ext.root_of_unity(n_big);
    let mut powers = Vec::with_capacity(n_big as usize);
    let mut z = FieldPoly::one();
    for _ in 0..n_big {
        powers.push(z.clone());
        z = ext.mul(&z, &zeta);
    }
    let target = FieldPoly::constant(lambda0);
    let k = (0..o)
        .find(|&k| powers[((m * k) % n_big) as usize] == target)
        .ok_or_else(|| Error::Internal("ζ^m does not generate ⟨λ₀⟩".into()))?;

    let mut seen = vec![false; n_big as usize];
    let mut factors = Vec::new();
    for j in 0..m {
        let start = k + o * j;
        if seen[start as usize] {
            continue;
        }
        // ∏_{a in orbit} (x − ζ^a), coefficients in the extension.
        let mut acc: Vec<FieldPoly> = vec![FieldPoly::one()];
        let mut a = start;
        while !seen[a as usize] {
            seen[a as usize] = true;
            let root = &powers[a as usize];
            let mut next = vec![FieldPoly::zero(); acc.len() + 1];
            for (i, c) in acc.iter().enumerate() {
                next[i + 1] = next[i + 1].add(c, f);
                next[i] = next[i].sub(&ext.mul(c, root), f);
            }
            acc = next;
            a = a * q % n_big;
        }
        let coeffs = acc
            .iter()
            .map(|c| match c.degree() {
                None => Ok(FieldElement::ZERO),
                Some(0) => Ok(c.coeff(0)),
                Some(_) => Err(Error::Internal("orbit polynomial not defined over F_q".into())),
            })
            .collect::<Result<Vec<_>>>()?;
        factors.push(FieldPoly::new(coeffs));
    }
    factors.sort();
    let fac = Factorization {
        lambda0,
        m,
        factors,
        cyclotomic_classes: arith::cyclotomic_classes(q, m).len(),
    };
    if fac.product(f) != FieldPoly::binomial(f, m as usize, lambda0) {
        return Err(Error::Internal(format!("factors of x^{m} - λ₀ do not multiply back")));
    }
    Ok(fac)
}

/// Partitions the factors into self-reciprocal ones and reciprocal pairs.
/// Reciprocals of factors of `x^m − λ₀` divide `x^m − λ₀^{-1}`, so this
/// needs `λ₀² = 1`.
pub fn split_reciprocal(fac: &Factorization, f: &FieldContext) -> Result<ReciprocalSplit> {
    if f.mul(fac.lambda0, fac.lambda0) != f.one() {
        return Err(Error::Precondition("the reciprocal split needs λ₀² = 1".into()));
    }
    let mut selfrec = Vec::new();
    let mut pairs = Vec::new();
    for g in &fac.factors {
        let star = g.monic_reciprocal(f)?;
        if star == *g {
            selfrec.push(g.clone());
        } else if *g < star {
            if fac.index_of(&star).is_none() {
                return Err(Error::Internal("reciprocal of a factor is not a factor".into()));
            }
            pairs.push((g.clone(), star));
        }
    }
    Ok(ReciprocalSplit { selfrec, pairs })
}

/// `x^{mp^s} − λ₁ = (x^m − λ₀)^{p^s}` with `λ₀` the `p^s`-th root of `λ₁`.
pub fn repeated_factorization(
    f: &FieldContext,
    m: u64,
    s: u32,
    lambda1: FieldElement,
) -> Result<RepeatedFactorization> {
    let lambda0 = f.ps_root(lambda1, s)?;
    let multiplicity = arith::checked_pow(f.p() as u64, s as u64)
        .ok_or_else(|| Error::InvalidParameter(format!("p^{s} overflows")))?;
    Ok(RepeatedFactorization {
        base: factor_binomial(f, m, lambda0)?,
        s,
        lambda1,
        multiplicity,
    })
}

/// `(α₀^{-1}x^m − 1)^{p^s} = uρ` in `R[x]/(x^n − λ)`, with the observed
/// nilpotency index of `α₀^{-1}x^m − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotencyWitness {
    pub alpha0: FieldElement,
    pub rho: RingElement,
    pub index: u64,
}

pub fn nilpotency_witness(
    rc: &RingContext,
    m: u64,
    s: u32,
    lambda: &RingElement,
) -> Result<NilpotencyWitness> {
    rc.check(lambda)?;
    let f = rc.field();
    if rc.e() < 2 {
        return Err(Error::Hypothesis("e ≥ 2 is needed for a nonzero u-part".into()));
    }
    if !rc.is_unit(lambda) {
        return Err(Error::NotUnit);
    }
    if lambda.part(1).is_zero() {
        return Err(Error::Hypothesis("the u-part α₂ of λ is zero".into()));
    }
    let ps = arith::checked_pow(f.p() as u64, s as u64)
        .ok_or_else(|| Error::InvalidParameter(format!("p^{s} overflows")))?;
    let n = (m * ps) as usize;
    let alpha0 = f.ps_root(lambda.part(0), s)?;
    let mut coeffs = vec![rc.zero(); m as usize + 1];
    coeffs[0] = rc.neg(&rc.one());
    coeffs[m as usize] = rc.constant(f.inv(alpha0)?);
    let base = RingPoly::new(coeffs).reduce(n, lambda, rc);

    let power = base.pow_mod(ps, n, lambda, rc);
    let c = match power.degree() {
        None => rc.zero(),
        Some(0) => power.coeff(0, rc),
        Some(_) => {
            return Err(Error::Internal(
                "(α₀^{-1}x^m − 1)^{p^s} is not a constant".into(),
            ))
        }
    };
    if !c.part(0).is_zero() {
        return Err(Error::Internal("(α₀^{-1}x^m − 1)^{p^s} is not in ⟨u⟩".into()));
    }
    let mut parts = c.parts()[1..].to_vec();
    parts.push(FieldElement::ZERO);
    let rho = rc.from_parts(parts)?;
    if !rc.is_unit(&rho) {
        return Err(Error::Internal("ρ is not a unit".into()));
    }

    let bound = rc.e() as u64 * ps;
    let mut acc = base.clone();
    let mut index = 1;
    while !acc.is_zero() {
        if index > bound {
            return Err(Error::Internal(format!("not nilpotent within {bound} steps")));
        }
        acc = acc.mul_mod(&base, n, lambda, rc);
        index += 1;
    }
    Ok(NilpotencyWitness { alpha0, rho, index })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    fn ints(f: &FieldContext, c: &[i64]) -> FieldPoly {
        FieldPoly::from_ints(f, c)
    }

    #[test]
    fn rabin_agrees_with_trial_division() {
        for (p, r, max_deg) in [(2u64, 1u32, 8usize), (3, 1, 5), (2, 2, 4), (5, 1, 3)] {
            let f = make_field(p, r).unwrap();
            for d in 1..=max_deg {
                let mut digits = vec![0u32; d];
                loop {
                    let mut coeffs: Vec<FieldElement> =
                        digits.iter().map(|&c| f.from_encoding(c).unwrap()).collect();
                    coeffs.push(FieldElement::ONE);
                    let g = FieldPoly::new(coeffs);
                    assert_eq!(is_irreducible(&g, &f), is_irreducible_by_trial_division(&g, &f));
                    if !increment(&mut digits, f.order()) {
                        break;
                    }
                }
            }
        }
    }

    #[test]
    fn factor_examples() {
        let f3 = make_field(3, 1).unwrap();
        let fac = factor_binomial(&f3, 2, FieldElement::ONE).unwrap();
        assert_eq!(fac.factors(), &[ints(&f3, &[1, 1]), ints(&f3, &[2, 1])]);
        let fac = factor_binomial(&f3, 4, FieldElement::ONE).unwrap();
        assert_eq!(
            fac.factors(),
            &[ints(&f3, &[1, 1]), ints(&f3, &[2, 1]), ints(&f3, &[1, 0, 1])]
        );
        let f5 = make_field(5, 1).unwrap();
        let fac = factor_binomial(&f5, 2, f5.from_int(2)).unwrap();
        assert_eq!(fac.factors(), &[ints(&f5, &[3, 0, 1])]);
        assert_eq!(
            factor_binomial(&f3, 3, FieldElement::ONE).unwrap_err(),
            Error::NotCoprime { m: 3, p: 3 }
        );
        assert!(factor_binomial(&f3, 2, FieldElement::ZERO).is_err());
    }

    #[test]
    fn split_examples() {
        let f3 = make_field(3, 1).unwrap();
        let s = split_reciprocal(&factor_binomial(&f3, 2, FieldElement::ONE).unwrap(), &f3).unwrap();
        assert_eq!((s.k(), s.t()), (2, 0));
        let s = split_reciprocal(&factor_binomial(&f3, 4, FieldElement::ONE).unwrap(), &f3).unwrap();
        assert_eq!((s.k(), s.t()), (3, 0));
        let f7 = make_field(7, 1).unwrap();
        let s = split_reciprocal(&factor_binomial(&f7, 3, FieldElement::ONE).unwrap(), &f7).unwrap();
        assert_eq!((s.k(), s.t()), (1, 1));
        assert_eq!(s.selfrec, vec![ints(&f7, &[-1, 1])]);
        assert_eq!(s.pairs, vec![(ints(&f7, &[-4, 1]), ints(&f7, &[-2, 1]))]);
    }

    #[test]
    fn repeated_factorization_examples() {
        let f2 = make_field(2, 1).unwrap();
        let rf = repeated_factorization(&f2, 1, 1, FieldElement::ONE).unwrap();
        assert_eq!(rf.multiplicity, 2);
        assert_eq!(rf.base.factors(), &[ints(&f2, &[1, 1])]);
        assert!(rf.expansion_holds(&f2));
        let f3 = make_field(3, 1).unwrap();
        let rf = repeated_factorization(&f3, 1, 1, f3.from_int(2)).unwrap();
        assert_eq!(rf.base.lambda0(), f3.from_int(2));
        assert_eq!(rf.base.factors(), &[ints(&f3, &[1, 1])]);
        assert!(rf.expansion_holds(&f3));
        let rf = repeated_factorization(&f3, 2, 1, FieldElement::ONE).unwrap();
        assert_eq!(rf.base.l(), 2);
        assert!(rf.expansion_holds(&f3));
    }

    #[test]
    fn nilpotency_examples() {
        let r = RingContext::new(make_field(2, 1).unwrap(), 2).unwrap();
        let lambda = r.parse_element("1;1").unwrap();
        let w = nilpotency_witness(&r, 1, 1, &lambda).unwrap();
        assert_eq!((w.rho.clone(), w.index), (r.one(), 4));
        let r3 = RingContext::new(make_field(3, 1).unwrap(), 2).unwrap();
        let lambda = r3.parse_element("1;1").unwrap();
        let w = nilpotency_witness(&r3, 1, 1, &lambda).unwrap();
        assert_eq!((w.rho.clone(), w.index), (r3.one(), 6));
        assert!(matches!(
            nilpotency_witness(&r3, 1, 1, &r3.one()),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn cyclotomic_count_is_reported_separately() {
        let f5 = make_field(5, 1).unwrap();
        let one = factor_binomial(&f5, 4, FieldElement::ONE).unwrap();
        assert!(one.class_count_agrees());
        // x^2 - 2 is irreducible over F_5 but Z_2 has two 5-classes.
        let two = factor_binomial(&f5, 2, f5.from_int(2)).unwrap();
        assert_eq!((two.l(), two.cyclotomic_class_count()), (1, 2));
        assert!(!two.class_count_agrees());
    }
}
