use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::FieldPoly;
use crate::chainring::{RingContext, RingElement};
use crate::{Error, Result};

/// Dense polynomial over `R`, constant term first, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RingPoly {
    coeffs: Vec<RingElement>,
}

impl RingPoly {
    pub fn new(mut coeffs: Vec<RingElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RingPoly { coeffs }
    }

    pub fn zero() -> Self {
        RingPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: RingElement) -> Self {
        Self::new(vec![c])
    }

    /// Embeds a polynomial over the residue field.
    pub fn from_field_poly(g: &FieldPoly, rc: &RingContext) -> Self {
        Self::new(g.coeffs().iter().map(|&c| rc.constant(c)).collect())
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, rc: &RingContext) -> RingElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| rc.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self, rc: &RingContext) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| rc.add(&self.coeff(i, rc), &other.coeff(i, rc)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self, rc: &RingContext) -> Self {
        let neg = Self::new(other.coeffs.iter().map(|c| rc.neg(c)).collect());
        self.add(&neg, rc)
    }

    pub fn scale(&self, c: &RingElement, rc: &RingContext) -> Self {
        Self::new(self.coeffs.iter().map(|a| rc.mul(c, a)).collect())
    }

    pub fn mul(&self, other: &Self, rc: &RingContext) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![rc.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = rc.add(&out[i + j], &rc.mul(a, b));
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, mut k: u64, rc: &RingContext) -> Self {
        let mut acc = Self::constant(rc.one());
        let mut b = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b, rc);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b, rc);
            }
        }
        acc
    }

    /// Reduction modulo `x^n − λ`, using `x^n = λ`.
    pub fn reduce(&self, n: usize, lambda: &RingElement, rc: &RingContext) -> Self {
        let mut c = self.coeffs.clone();
        for i in (n..c.len()).rev() {
            let top = core::mem::replace(&mut c[i], rc.zero());
            if !top.is_zero() {
                c[i - n] = rc.add(&c[i - n], &rc.mul(lambda, &top));
            }
        }
        Self::new(c)
    }

    pub fn mul_mod(&self, other: &Self, n: usize, lambda: &RingElement, rc: &RingContext) -> Self {
        self.mul(other, rc).reduce(n, lambda, rc)
    }

    pub fn pow_mod(&self, mut k: u64, n: usize, lambda: &RingElement, rc: &RingContext) -> Self {
        let mut acc = Self::constant(rc.one()).reduce(n, lambda, rc);
        let mut b = self.reduce(n, lambda, rc);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_mod(&b, n, lambda, rc);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul_mod(&b, n, lambda, rc);
            }
        }
        acc
    }

    /// Coefficient vector of length `n` of the reduction modulo `x^n − λ`.
    pub fn to_word(&self, n: usize, lambda: &RingElement, rc: &RingContext) -> Vec<RingElement> {
        let red = self.reduce(n, lambda, rc);
        (0..n).map(|i| red.coeff(i, rc)).collect()
    }

    pub fn from_word(word: &[RingElement]) -> Self {
        Self::new(word.to_vec())
    }

    /// The polynomials `P_j` over the residue field with `self = Σ u^j P_j`.
    pub fn u_components(&self, rc: &RingContext) -> Vec<FieldPoly> {
        (0..rc.e() as usize)
            .map(|j| FieldPoly::new(self.coeffs.iter().map(|c| c.part(j)).collect()))
            .collect()
    }

    pub fn from_u_components(parts: &[FieldPoly], rc: &RingContext) -> Result<Self> {
        if parts.len() > rc.e() as usize {
            return Err(Error::Parse(alloc::format!(
                "{} u-components given but e = {}",
                parts.len(),
                rc.e()
            )));
        }
        let len = parts.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
        let coeffs = (0..len)
            .map(|i| {
                let mut v = rc.zero().parts().to_vec();
                for (j, p) in parts.iter().enumerate() {
                    v[j] = p.coeff(i);
                }
                rc.from_parts(v)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    /// Text form: the `u`-components in [`FieldPoly`] text form joined by `|`.
    pub fn format(&self, rc: &RingContext) -> String {
        let parts: Vec<String> = self.u_components(rc).iter().map(FieldPoly::format).collect();
        parts.join("|")
    }

    pub fn parse(rc: &RingContext, text: &str) -> Result<Self> {
        let parts = text
            .split('|')
            .map(|t| FieldPoly::parse(rc.field(), t))
            .collect::<Result<Vec<_>>>()?;
        Self::from_u_components(&parts, rc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn reduction_uses_lambda() {
        let rc = RingContext::new(make_field(2, 1).unwrap(), 2).unwrap();
        let lambda = rc.parse_element("1;1").unwrap();
        // (x + 1)^2 = x^2 + 1 ≡ λ + 1 = u
        let g = RingPoly::parse(&rc, "1,1").unwrap();
        let sq = g.pow_mod(2, 2, &lambda, &rc);
        assert_eq!(sq, RingPoly::constant(rc.u_power(1)));
        assert_eq!(sq.format(&rc), "0|1");
    }

    #[test]
    fn text_round_trip() {
        let rc = RingContext::new(make_field(3, 1).unwrap(), 3).unwrap();
        let g = RingPoly::parse(&rc, "1,2|0,1|2").unwrap();
        assert_eq!(g.format(&rc), "1,2|0,1|2");
        assert_eq!(g.coeff(0, &rc), rc.parse_element("1;0;2").unwrap());
        assert!(RingPoly::parse(&rc, "1|1|1|1").is_err());
        assert_eq!(RingPoly::parse(&rc, "0").unwrap(), RingPoly::zero());
    }
}
