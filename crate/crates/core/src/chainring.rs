//! The chain ring `R = F_{p^r}[u]/(u^e)`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::gf::{FieldContext, FieldElement};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingContext {
    field: FieldContext,
    e: u32,
    size: u64,
}

/// `v₀ + u v₁ + … + u^{e−1} v_{e−1}`; `parts[i]` is the coefficient of `u^i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingElement {
    parts: Vec<FieldElement>,
}

impl RingElement {
    pub fn parts(&self) -> &[FieldElement] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> FieldElement {
        self.parts[i]
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|v| v.is_zero())
    }

    /// Whether the element lies in the residue field (all `u`-parts above `u⁰` vanish).
    pub fn is_constant(&self) -> bool {
        self.parts[1..].iter().all(|v| v.is_zero())
    }
}

impl RingContext {
    pub fn new(field: FieldContext, e: u32) -> Result<Self> {
        if e == 0 {
            return Err(Error::ZeroNilpotency);
        }
        let size = crate::arith::checked_pow(field.order() as u64, e as u64)
            .ok_or(Error::RingTooLarge)?;
        Ok(RingContext { field, e, size })
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// `|R| = p^{re}`.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn zero(&self) -> RingElement {
        RingElement {
            parts: vec![FieldElement::ZERO; self.e as usize],
        }
    }

    pub fn one(&self) -> RingElement {
        self.constant(FieldElement::ONE)
    }

    pub fn constant(&self, a: FieldElement) -> RingElement {
        let mut x = self.zero();
        x.parts[0] = a;
        x
    }

    /// `u^k` (zero once `k ≥ e`).
    pub fn u_power(&self, k: u32) -> RingElement {
        let mut x = self.zero();
        if k < self.e {
            x.parts[k as usize] = FieldElement::ONE;
        }
        x
    }

    pub fn from_parts(&self, parts: Vec<FieldElement>) -> Result<RingElement> {
        if parts.len() != self.e as usize || !parts.iter().all(|&v| self.field.contains(v)) {
            return Err(Error::ContextMismatch);
        }
        Ok(RingElement { parts })
    }

    pub fn check(&self, a: &RingElement) -> Result<()> {
        if a.parts.len() == self.e as usize && a.parts.iter().all(|&v| self.field.contains(v)) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        assert_eq!(a.parts.len(), b.parts.len(), "ring context mismatch");
        let parts = a
            .parts
            .iter()
            .zip(&b.parts)
            .map(|(&x, &y)| self.field.add(x, y))
            .collect();
        RingElement { parts }
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        RingElement {
            parts: a.parts.iter().map(|&x| self.field.neg(x)).collect(),
        }
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.add(a, &self.neg(b))
    }

    /// Truncated product: terms with `u^k`, `k ≥ e`, vanish.
    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        assert_eq!(a.parts.len(), b.parts.len(), "ring context mismatch");
        let e = self.e as usize;
        let mut parts = vec![FieldElement::ZERO; e];
        for (i, &x) in a.parts.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.parts[..e - i].iter().enumerate() {
                parts[i + j] = self.field.add(parts[i + j], self.field.mul(x, y));
            }
        }
        RingElement { parts }
    }

    pub fn scale(&self, c: FieldElement, a: &RingElement) -> RingElement {
        RingElement {
            parts: a.parts.iter().map(|&x| self.field.mul(c, x)).collect(),
        }
    }

    /// Multiplication by `u`.
    pub fn shift_u(&self, a: &RingElement) -> RingElement {
        let mut parts = vec![FieldElement::ZERO; self.e as usize];
        parts[1..].copy_from_slice(&a.parts[..self.e as usize - 1]);
        RingElement { parts }
    }

    pub fn pow(&self, a: &RingElement, mut k: u64) -> RingElement {
        let mut acc = self.one();
        let mut b = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            k >>= 1;
        }
        acc
    }

    /// Units are exactly the elements outside `⟨u⟩`.
    pub fn is_unit(&self, a: &RingElement) -> bool {
        !a.parts[0].is_zero()
    }

    /// Writes `a = v₀(1 + ν)` with `ν` nilpotent and sums the geometric series
    /// `Σ_{k<e} (−ν)^k`.
    pub fn inv(&self, a: &RingElement) -> Result<RingElement> {
        if !self.is_unit(a) {
            return Err(Error::NotUnit);
        }
        let v0_inv = self.field.inv(a.parts[0])?;
        let mut nu = self.scale(v0_inv, a);
        nu.parts[0] = FieldElement::ZERO;
        let minus_nu = self.neg(&nu);
        let mut term = self.one();
        let mut sum = self.one();
        for _ in 1..self.e {
            term = self.mul(&term, &minus_nu);
            sum = self.add(&sum, &term);
        }
        Ok(self.scale(v0_inv, &sum))
    }

    /// Largest `k` with `a ∈ ⟨u^k⟩`; `e` for zero.
    pub fn valuation(&self, a: &RingElement) -> u32 {
        a.parts
            .iter()
            .position(|v| !v.is_zero())
            .map_or(self.e, |k| k as u32)
    }

    /// Homogeneous weight: `0` on zero, `p^{r(e−1)}` on the nonzero socle
    /// `⟨u^{e−1}⟩`, `p^{r(e−2)}(p^r − 1)` elsewhere. For `e = 1` every nonzero
    /// element has weight 1.
    pub fn homogeneous_weight(&self, a: &RingElement) -> u64 {
        if a.is_zero() {
            return 0;
        }
        if self.e == 1 {
            return 1;
        }
        let q = self.field.order() as u64;
        if self.valuation(a) == self.e - 1 {
            q.pow(self.e - 1)
        } else {
            q.pow(self.e - 2) * (q - 1)
        }
    }

    pub fn vector_weight(&self, v: &[RingElement]) -> u64 {
        v.iter().map(|a| self.homogeneous_weight(a)).sum()
    }

    /// Encoding in `[0, |R|)`: part `i` contributes `enc(v_i)·q^i`.
    pub fn encode(&self, a: &RingElement) -> u64 {
        let q = self.field.order() as u64;
        a.parts
            .iter()
            .rev()
            .fold(0u64, |acc, v| acc * q + v.encoding() as u64)
    }

    pub fn decode(&self, mut code: u64) -> RingElement {
        let q = self.field.order() as u64;
        let parts = (0..self.e)
            .map(|_| {
                let v = (code % q) as u32;
                code /= q;
                self.field.from_encoding(v).expect("encoding below q")
            })
            .collect();
        RingElement { parts }
    }

    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.size).map(|c| self.decode(c))
    }

    /// Text form `v₀;v₁;…` with each part in field text form.
    pub fn format_element(&self, a: &RingElement) -> String {
        let parts: Vec<String> = a.parts.iter().map(|&v| self.field.format_element(v)).collect();
        parts.join(";")
    }

    /// Parses `v₀;v₁;…` (parts optionally parenthesised). Fewer than `e` parts
    /// leave the higher `u`-parts zero.
    pub fn parse_element(&self, text: &str) -> Result<RingElement> {
        let pieces: Vec<&str> = text.trim().split(';').collect();
        if pieces.len() > self.e as usize {
            return Err(Error::Parse(format!(
                "{} u-parts given but e = {}",
                pieces.len(),
                self.e
            )));
        }
        let mut x = self.zero();
        for (i, piece) in pieces.iter().enumerate() {
            x.parts[i] = self.field.parse_element(piece)?;
        }
        Ok(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    fn ring(p: u64, r: u32, e: u32) -> RingContext {
        RingContext::new(make_field(p, r).unwrap(), e).unwrap()
    }

    #[test]
    fn products_truncate() {
        let r2 = ring(2, 1, 2);
        let a = r2.parse_element("1;1").unwrap();
        assert_eq!(r2.mul(&a, &a), r2.one());
        let r3 = ring(3, 1, 2);
        let a = r3.parse_element("1;1").unwrap();
        assert_eq!(r3.mul(&a, &a), r3.parse_element("1;2").unwrap());
        let r = ring(3, 1, 4);
        assert!(r.mul(&r.u_power(1), &r.u_power(3)).is_zero());
    }

    #[test]
    fn inverses() {
        let r2 = ring(2, 1, 2);
        assert!(!r2.is_unit(&r2.u_power(1)));
        assert_eq!(r2.inv(&r2.u_power(1)), Err(Error::NotUnit));
        let a = r2.parse_element("1;1").unwrap();
        assert_eq!(r2.inv(&a).unwrap(), a);
        let r3 = ring(3, 1, 3);
        let a = r3.parse_element("1;1").unwrap();
        assert_eq!(r3.inv(&a).unwrap(), r3.parse_element("1;2;1").unwrap());
    }

    #[test]
    fn unit_test_matches_exhaustive_search() {
        for (p, r, e) in [(2, 1, 2), (2, 1, 3), (3, 1, 2), (3, 1, 3), (2, 2, 2), (3, 2, 2), (5, 1, 2)] {
            let rc = ring(p, r, e);
            let all: Vec<RingElement> = rc.elements().collect();
            let mut units = 0u64;
            for a in &all {
                let has_inverse = all.iter().any(|b| rc.mul(a, b) == rc.one());
                assert_eq!(has_inverse, rc.is_unit(a));
                if has_inverse {
                    units += 1;
                    assert_eq!(rc.mul(a, &rc.inv(a).unwrap()), rc.one());
                }
            }
            let q = rc.field().order() as u64;
            assert_eq!(units, q.pow(e - 1) * (q - 1));
        }
    }

    #[test]
    fn homogeneous_weights() {
        let r = ring(2, 1, 2);
        assert_eq!(r.homogeneous_weight(&r.one()), 1);
        assert_eq!(r.homogeneous_weight(&r.u_power(1)), 2);
        assert_eq!(r.homogeneous_weight(&r.zero()), 0);
        let r = ring(3, 1, 2);
        assert_eq!(r.homogeneous_weight(&r.parse_element("1;1").unwrap()), 2);
        assert_eq!(r.homogeneous_weight(&r.u_power(1)), 3);
        let r = ring(3, 1, 3);
        assert_eq!(r.homogeneous_weight(&r.u_power(1)), 6);
        assert_eq!(r.homogeneous_weight(&r.u_power(2)), 9);
        let f = ring(5, 1, 1);
        assert_eq!(f.homogeneous_weight(&f.one()), 1);
    }

    #[test]
    fn weight_is_constant_off_and_on_the_socle() {
        for (p, r, e) in [(2, 1, 3), (3, 1, 2), (2, 2, 2)] {
            let rc = ring(p, r, e);
            let mut socle = None;
            let mut rest = None;
            for a in rc.elements().filter(|a| !a.is_zero()) {
                let w = rc.homogeneous_weight(&a);
                let slot = if rc.valuation(&a) == e - 1 { &mut socle } else { &mut rest };
                assert_eq!(*slot.get_or_insert(w), w);
            }
        }
    }

    #[test]
    fn vector_weights() {
        let r = ring(2, 1, 2);
        assert_eq!(r.vector_weight(&[r.zero(), r.zero()]), 0);
        assert_eq!(r.vector_weight(&[r.one(), r.u_power(1)]), 3);
        assert_eq!(r.vector_weight(&vec![r.u_power(1); 5]), 10);
    }

    #[test]
    fn text_round_trip_and_errors() {
        let r = ring(3, 2, 3);
        let a = r.parse_element("(1,2);0,1").unwrap();
        assert_eq!(r.format_element(&a), "1,2;0,1;0,0");
        assert!(r.parse_element("1;1;1;1").is_err());
        assert_eq!(r.decode(r.encode(&a)), a);
        assert!(RingContext::new(make_field(2, 1).unwrap(), 0).is_err());
    }
}
