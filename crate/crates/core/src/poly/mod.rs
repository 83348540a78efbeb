//! Polynomials over `F_{p^r}` and over `R`, reciprocals, and the canonical
//! factorization of `x^m − λ₀`.

mod factor;
mod ring_poly;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigUint;

use crate::gf::{FieldContext, FieldElement};
use crate::{Error, Result};

pub use factor::{
    factor_binomial, is_irreducible, is_irreducible_by_trial_division, nilpotency_witness,
    repeated_factorization, split_reciprocal, Factorization, NilpotencyWitness,
    ReciprocalSplit, RepeatedFactorization,
};
pub use ring_poly::RingPoly;

/// Dense polynomial over `F_{p^r}`, constant term first, no trailing zeros.
///
/// The order is canonical: by degree, then by the coefficient vector read as a
/// base-`q` integer with the constant term least significant.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FieldPoly {
    coeffs: Vec<FieldElement>,
}

impl Ord for FieldPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for FieldPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FieldPoly {
    pub fn new(mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        FieldPoly { coeffs }
    }

    pub fn zero() -> Self {
        FieldPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(FieldElement::ONE)
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::new(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(c: FieldElement, k: usize) -> Self {
        let mut coeffs = vec![FieldElement::ZERO; k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// Polynomial with prime-subfield coefficients given as integers.
    pub fn from_ints(f: &FieldContext, coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| f.from_int(c)).collect())
    }

    /// `x^m − λ`.
    pub fn binomial(f: &FieldContext, m: usize, lambda: FieldElement) -> Self {
        let mut coeffs = vec![FieldElement::ZERO; m + 1];
        coeffs[m] = FieldElement::ONE;
        coeffs[0] = f.sub(coeffs[0], lambda);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(FieldElement::ONE)
    }

    pub fn add(&self, other: &Self, f: &FieldContext) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn neg(&self, f: &FieldContext) -> Self {
        Self::new(self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn sub(&self, other: &Self, f: &FieldContext) -> Self {
        self.add(&other.neg(f), f)
    }

    pub fn scale(&self, c: FieldElement, f: &FieldContext) -> Self {
        Self::new(self.coeffs.iter().map(|&a| f.mul(c, a)).collect())
    }

    pub fn mul(&self, other: &Self, f: &FieldContext) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::new(out)
    }

    pub fn divmod(&self, divisor: &Self, f: &FieldContext) -> Result<(Self, Self)> {
        let lead = divisor.leading().ok_or(Error::ZeroPolynomialDivisor)?;
        let lead_inv = f.inv(lead)?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![FieldElement::ZERO; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + dd], lead_inv);
            quot[k] = c;
            if c.is_zero() {
                continue;
            }
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = f.sub(rem[k + i], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, divisor: &Self, f: &FieldContext) -> Result<Self> {
        Ok(self.divmod(divisor, f)?.1)
    }

    pub fn divides(&self, other: &Self, f: &FieldContext) -> bool {
        !self.is_zero() && other.rem(self, f).is_ok_and(|r| r.is_zero())
    }

    /// Scales to leading coefficient 1; the zero polynomial stays zero.
    pub fn monic(&self, f: &FieldContext) -> Self {
        match self.leading() {
            Some(l) => self.scale(f.inv(l).expect("leading coefficient is nonzero"), f),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self, f: &FieldContext) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, f).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn pow(&self, mut k: u64, f: &FieldContext) -> Self {
        let mut acc = Self::one();
        let mut b = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b, f);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b, f);
            }
        }
        acc
    }

    /// `self^k mod modulus`.
    pub fn pow_mod(&self, k: &BigUint, modulus: &Self, f: &FieldContext) -> Result<Self> {
        let mut acc = Self::one().rem(modulus, f)?;
        let base = self.rem(modulus, f)?;
        for i in (0..k.bits()).rev() {
            acc = acc.mul(&acc, f).rem(modulus, f)?;
            if k.bit(i) {
                acc = acc.mul(&base, f).rem(modulus, f)?;
            }
        }
        Ok(acc)
    }

    pub fn eval(&self, x: FieldElement, f: &FieldContext) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `f*(x) = x^{deg f} f(1/x)`: the coefficient vector reversed. Requires a
    /// nonzero constant term, so the degree is preserved.
    pub fn reciprocal(&self) -> Result<Self> {
        match self.coeffs.first() {
            Some(c) if !c.is_zero() => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                Ok(Self::new(coeffs))
            }
            _ => Err(Error::ZeroConstantTerm),
        }
    }

    /// `f*` scaled to be monic.
    pub fn monic_reciprocal(&self, f: &FieldContext) -> Result<Self> {
        Ok(self.reciprocal()?.monic(f))
    }

    /// Whether `f*` and `f` agree up to a unit scalar.
    pub fn is_self_reciprocal(&self, f: &FieldContext) -> Result<bool> {
        Ok(self.monic_reciprocal(f)? == self.monic(f))
    }

    /// Text form `c₀,c₁,…,c_d`, each coefficient by its base-`p` encoding.
    pub fn format(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| format!("{}", c.encoding())).collect();
        parts.join(",")
    }

    pub fn parse(f: &FieldContext, text: &str) -> Result<Self> {
        let mut coeffs = Vec::new();
        for tok in text.trim().split(',') {
            let tok = tok.trim();
            let code: u32 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {tok:?}")))?;
            coeffs.push(
                f.from_encoding(code)
                    .map_err(|_| Error::Parse(format!("coefficient {code} is not below q")))?,
            );
        }
        Ok(Self::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn euclidean_operations_over_f3() {
        let f = make_field(3, 1).unwrap();
        let a = FieldPoly::from_ints(&f, &[-1, 1]);
        let b = FieldPoly::from_ints(&f, &[1, 1]);
        assert_eq!(a.mul(&b, &f), FieldPoly::from_ints(&f, &[2, 0, 1]));
        let sq = FieldPoly::from_ints(&f, &[-1, 0, 1]);
        assert_eq!(sq.gcd(&a, &f), FieldPoly::from_ints(&f, &[2, 1]));
        let x3 = FieldPoly::monomial(FieldElement::ONE, 3);
        let (q, r) = x3.divmod(&FieldPoly::from_ints(&f, &[1, 0, 1]), &f).unwrap();
        assert_eq!(q, FieldPoly::from_ints(&f, &[0, 1]));
        assert_eq!(r, FieldPoly::from_ints(&f, &[0, 2]));
        assert_eq!(x3.divmod(&FieldPoly::zero(), &f), Err(Error::ZeroPolynomialDivisor));
    }

    #[test]
    fn reciprocals() {
        let f3 = make_field(3, 1).unwrap();
        let g = FieldPoly::from_ints(&f3, &[1, 2, 0, 1]);
        assert_eq!(g.reciprocal().unwrap(), FieldPoly::from_ints(&f3, &[1, 0, 2, 1]));
        let a = FieldPoly::from_ints(&f3, &[1, 1]);
        assert_eq!(a.reciprocal().unwrap(), a);
        let b = FieldPoly::from_ints(&f3, &[2, 1]);
        assert_eq!(
            a.mul(&b, &f3).reciprocal().unwrap(),
            a.reciprocal().unwrap().mul(&b.reciprocal().unwrap(), &f3)
        );
        assert_eq!(
            FieldPoly::from_ints(&f3, &[0, 1]).reciprocal(),
            Err(Error::ZeroConstantTerm)
        );
    }

    #[test]
    fn self_reciprocity_is_up_to_scalars() {
        let f5 = make_field(5, 1).unwrap();
        assert!(FieldPoly::from_ints(&f5, &[1, 1]).is_self_reciprocal(&f5).unwrap());
        assert!(!FieldPoly::from_ints(&f5, &[2, 1]).is_self_reciprocal(&f5).unwrap());
        assert_eq!(
            FieldPoly::from_ints(&f5, &[2, 1]).monic_reciprocal(&f5).unwrap(),
            FieldPoly::from_ints(&f5, &[3, 1])
        );
        assert!(FieldPoly::from_ints(&f5, &[1, 0, 1]).is_self_reciprocal(&f5).unwrap());
        // x - 1 has reciprocal 1 - x, a scalar multiple.
        assert!(FieldPoly::from_ints(&f5, &[-1, 1]).is_self_reciprocal(&f5).unwrap());
    }

    #[test]
    fn canonical_order() {
        let f = make_field(3, 1).unwrap();
        let mut v = [FieldPoly::from_ints(&f, &[1, 0, 1]),
            FieldPoly::from_ints(&f, &[2, 1]),
            FieldPoly::from_ints(&f, &[1, 1]),
            FieldPoly::from_ints(&f, &[0, 2, 1])];
        v.sort();
        assert_eq!(v[0], FieldPoly::from_ints(&f, &[1, 1]));
        assert_eq!(v[1], FieldPoly::from_ints(&f, &[2, 1]));
        assert_eq!(v[2], FieldPoly::from_ints(&f, &[1, 0, 1]));
    }

    #[test]
    fn text_form() {
        let f9 = make_field(3, 2).unwrap();
        let p = FieldPoly::parse(&f9, "5,0,1").unwrap();
        assert_eq!(p.format(), "5,0,1");
        assert_eq!(p.degree(), Some(2));
        assert!(FieldPoly::parse(&f9, "9").is_err());
    }
}
