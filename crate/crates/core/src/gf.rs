//! The residue field `F_{p^r}`.
//!
//! Elements are stored by their base-`p` encoding `c₀ + c₁p + … + c_{r−1}p^{r−1}`
//! of the coefficient vector over the canonical modulus, so a [`FieldElement`]
//! is `Copy` and its `Ord` is the canonical order used for every tie-break in
//! the crate. Elements do not know their field; every operation goes through
//! a [`FieldContext`].

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::{Error, Result};

/// Largest field order for which log tables are built.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Base-`p` encoding of the coefficient vector, constant coefficient least significant.
    pub fn encoding(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug)]
struct Inner {
    p: u32,
    r: u32,
    q: u32,
    /// Monic modulus over `F_p`, constant term first, length `r + 1`.
    modulus: Vec<u32>,
    /// `p^i` for `i < r`.
    place: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    primitive: FieldElement,
}

/// `F_{p^r}` with its canonical modulus and log tables. Cloning is cheap.
#[derive(Clone, Debug)]
pub struct FieldContext {
    inner: Arc<Inner>,
}

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        self.inner.p == other.inner.p && self.inner.r == other.inner.r
    }
}

impl Eq for FieldContext {}

/// Builds `F_{p^r}` with the canonical modulus: the monic irreducible of degree
/// `r` whose low coefficients `(c₀, …, c_{r−1})`, read as a base-`p` integer with
/// `c₀` least significant, are minimal. For `r = 1` the modulus is `x`.
pub fn make_field(p: u64, r: u32) -> Result<FieldContext> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !(1..=6).contains(&r) {
        return Err(Error::DegreeOutOfRange(r));
    }
    let q = arith::checked_pow(p, r as u64).filter(|&q| q <= MAX_FIELD_ORDER);
    let q = q.ok_or_else(|| Error::FieldTooLarge(p.saturating_pow(r)))? as u32;
    let p = p as u32;
    let modulus = if r == 1 {
        vec![0, 1]
    } else {
        canonical_modulus(p, r)
    };
    let place: Vec<u32> = (0..r).map(|i| p.pow(i)).collect();
    let mut inner = Inner {
        p,
        r,
        q,
        modulus,
        place,
        exp: Vec::new(),
        log: Vec::new(),
        primitive: FieldElement::ONE,
    };
    let primitive = (1..q)
        .map(FieldElement)
        .find(|&g| is_generator(&inner, g))
        .expect("the multiplicative group of a finite field is cyclic");
    let mut exp = Vec::with_capacity((q - 1) as usize);
    let mut log = vec![0u32; q as usize];
    let mut x = FieldElement::ONE;
    for i in 0..q - 1 {
        exp.push(x.0);
        log[x.0 as usize] = i;
        x = slow_mul(&inner, x, primitive);
    }
    inner.exp = exp;
    inner.log = log;
    inner.primitive = primitive;
    Ok(FieldContext {
        inner: Arc::new(inner),
    })
}

fn canonical_modulus(p: u32, r: u32) -> Vec<u32> {
    let total = p.pow(r);
    for low in 0..total {
        let mut f: Vec<u32> = (0..r).map(|i| (low / p.pow(i)) % p).collect();
        f.push(1);
        if prime_poly_irreducible(p, &f) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Remainder of `a` modulo monic `m` over `F_p`.
fn prime_poly_rem(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
    let mut a: Vec<u32> = a.to_vec();
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = a.pop().unwrap();
        if lead != 0 {
            let base = a.len() - dm;
            for (i, &c) in m[..dm].iter().enumerate() {
                a[base + i] = (a[base + i] + p - (lead * c) % p) % p;
            }
        }
    }
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn prime_poly_irreducible(p: u32, f: &[u32]) -> bool {
    let d = f.len() - 1;
    for dd in 1..=d / 2 {
        for low in 0..p.pow(dd as u32) {
            let mut g: Vec<u32> = (0..dd as u32).map(|i| (low / p.pow(i)) % p).collect();
            g.push(1);
            if prime_poly_rem(p, f, &g).is_empty() {
                return false;
            }
        }
    }
    true
}

fn digits_of(inner: &Inner, a: u32) -> Vec<u32> {
    (0..inner.r as usize)
        .map(|i| (a / inner.place[i]) % inner.p)
        .collect()
}

fn from_digits(inner: &Inner, d: &[u32]) -> u32 {
    d.iter().zip(&inner.place).map(|(c, w)| c * w).sum()
}

fn slow_mul(inner: &Inner, a: FieldElement, b: FieldElement) -> FieldElement {
    let p = inner.p;
    let (da, db) = (digits_of(inner, a.0), digits_of(inner, b.0));
    let mut prod = vec![0u32; 2 * inner.r as usize];
    for (i, x) in da.iter().enumerate() {
        for (j, y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let mut rem = prime_poly_rem(p, &prod, &inner.modulus);
    rem.resize(inner.r as usize, 0);
    FieldElement(from_digits(inner, &rem))
}

fn slow_pow(inner: &Inner, a: FieldElement, mut k: u64) -> FieldElement {
    let mut acc = FieldElement::ONE;
    let mut b = a;
    while k > 0 {
        if k & 1 == 1 {
            acc = slow_mul(inner, acc, b);
        }
        b = slow_mul(inner, b, b);
        k >>= 1;
    }
    acc
}

fn is_generator(inner: &Inner, g: FieldElement) -> bool {
    let order = (inner.q - 1) as u64;
    arith::prime_factors(order)
        .into_iter()
        .all(|l| slow_pow(inner, g, order / l) != FieldElement::ONE)
}

impl FieldContext {
    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn r(&self) -> u32 {
        self.inner.r
    }

    /// Field order `p^r`.
    pub fn order(&self) -> u32 {
        self.inner.q
    }

    /// Monic modulus over `F_p`, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        a.0 < self.inner.q
    }

    pub fn check(&self, a: FieldElement) -> Result<FieldElement> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    pub fn from_encoding(&self, code: u32) -> Result<FieldElement> {
        self.check(FieldElement(code))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.inner.p as i64) as u32)
    }

    /// The element whose coefficient vector over the modulus is `digits`
    /// (constant coefficient first, at most `r` entries, each below `p`).
    pub fn from_digits(&self, digits: &[u32]) -> Result<FieldElement> {
        if digits.len() > self.inner.r as usize {
            return Err(Error::Parse(format!(
                "{} coefficients given for a degree-{} field",
                digits.len(),
                self.inner.r
            )));
        }
        if let Some(&d) = digits.iter().find(|&&d| d >= self.inner.p) {
            return Err(Error::Parse(format!("digit {d} is not below p = {}", self.inner.p)));
        }
        Ok(FieldElement(from_digits(&self.inner, digits)))
    }

    pub fn digits(&self, a: FieldElement) -> Vec<u32> {
        digits_of(&self.inner, a.0)
    }

    /// The class of `x` modulo the field modulus; `None` for prime fields.
    pub fn poly_generator(&self) -> Option<FieldElement> {
        (self.inner.r > 1).then_some(FieldElement(self.inner.p))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.contains(a) && self.contains(b));
        let inner = &*self.inner;
        if inner.r == 1 {
            return FieldElement((a.0 + b.0) % inner.p);
        }
        if inner.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let mut out = 0;
        for &w in &inner.place {
            let s = ((a.0 / w) % inner.p + (b.0 / w) % inner.p) % inner.p;
            out += s * w;
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        debug_assert!(self.contains(a));
        let inner = &*self.inner;
        if inner.p == 2 {
            return a;
        }
        let mut out = 0;
        for &w in &inner.place {
            let d = (a.0 / w) % inner.p;
            out += ((inner.p - d) % inner.p) * w;
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.contains(a) && self.contains(b));
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let inner = &*self.inner;
        let n = inner.q - 1;
        let s = inner.log[a.0 as usize] + inner.log[b.0 as usize];
        FieldElement(inner.exp[(s % n) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let inner = &*self.inner;
        let n = inner.q - 1;
        let l = inner.log[a.0 as usize];
        Ok(FieldElement(inner.exp[((n - l) % n) as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^k`, with `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, k: u64) -> FieldElement {
        if k == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let inner = &*self.inner;
        let n = (inner.q - 1) as u64;
        let l = inner.log[a.0 as usize] as u64;
        let e = (l as u128 * (k % n) as u128 % n as u128) as usize;
        FieldElement(inner.exp[e])
    }

    /// `a^{-k}` for nonzero `a`.
    pub fn pow_neg(&self, a: FieldElement, k: u64) -> Result<FieldElement> {
        Ok(self.pow(self.inv(a)?, k))
    }

    /// Discrete logarithm to the base of [`Self::primitive_element`].
    pub fn dlog(&self, a: FieldElement) -> Option<u32> {
        (!a.is_zero()).then(|| self.inner.log[a.0 as usize])
    }

    /// The generator of `F_{p^r}^*` that is minimal in the canonical order.
    pub fn primitive_element(&self) -> FieldElement {
        self.inner.primitive
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: FieldElement) -> Result<u64> {
        let l = self.dlog(a).ok_or(Error::ZeroInverse)? as u64;
        let n = (self.inner.q - 1) as u64;
        Ok(n / arith::gcd(l, n))
    }

    /// The canonically smallest `x` with `x^n = λ`, if one exists. A root
    /// exists iff `gcd(n, p^r − 1)` divides the discrete log of `λ`.
    pub fn nth_root(&self, lambda: FieldElement, n: u64) -> Result<Option<FieldElement>> {
        if n == 0 {
            return Err(Error::InvalidParameter("root degree n must be positive".into()));
        }
        let i = self.dlog(lambda).ok_or(Error::InvalidParameter("λ must be nonzero".into()))?
            as u64;
        let order = (self.inner.q - 1) as u64;
        let g = arith::gcd(n % order, order);
        if !i.is_multiple_of(g) {
            return Ok(None);
        }
        // n·j ≡ i (mod order) has g solutions j₀ + k·order/g.
        let step = order / g;
        let j0 = if step == 1 {
            0
        } else {
            let inv = arith::inv_mod((n / g) % step, step).expect("n/g is coprime to order/g");
            ((i / g) as u128 * inv as u128 % step as u128) as u64
        };
        let root = (0..g)
            .map(|k| FieldElement(self.inner.exp[(j0 + k * step) as usize]))
            .min();
        Ok(root)
    }

    /// Whether `x² = −1` is solvable.
    pub fn minus_one_is_square(&self) -> bool {
        let minus_one = self.neg(FieldElement::ONE);
        matches!(self.nth_root(minus_one, 2), Ok(Some(_)))
    }

    /// The unique `λ₀` with `λ₀^{p^s} = λ`, computed as `λ^t` where `t` inverts
    /// `p^s` modulo `p^r − 1`.
    pub fn ps_root(&self, lambda: FieldElement, s: u32) -> Result<FieldElement> {
        if lambda.is_zero() {
            return Err(Error::InvalidParameter("λ must be nonzero".into()));
        }
        let order = (self.inner.q - 1) as u64;
        let ps = arith::pow_mod(self.inner.p as u64, s as u64, order);
        let t = arith::inv_mod(ps, order).expect("p is coprime to p^r - 1");
        Ok(self.pow(lambda, if order == 1 { 1 } else { t }))
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.inner.q).map(FieldElement)
    }

    /// Text form `c₀,…,c_{r−1}`.
    pub fn format_element(&self, a: FieldElement) -> String {
        let d = self.digits(a);
        let parts: Vec<String> = d.iter().map(|c| format!("{c}")).collect();
        parts.join(",")
    }

    /// Parses the text form `c₀,…,c_{k}` with `k < r`; missing high digits are zero.
    pub fn parse_element(&self, text: &str) -> Result<FieldElement> {
        let text = text.trim().trim_start_matches('(').trim_end_matches(')');
        let mut digits = Vec::new();
        for tok in text.split(',') {
            let tok = tok.trim();
            let d: u32 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad field digit {tok:?}")))?;
            digits.push(d);
        }
        self.from_digits(&digits)
    }

    /// Text form of the field: `p^r` followed by the modulus coefficient list.
    pub fn describe(&self) -> String {
        let m: Vec<String> = self.inner.modulus.iter().map(|c| format!("{c}")).collect();
        format!("{}^{} [{}]", self.inner.p, self.inner.r, m.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64, r: u32) -> FieldContext {
        make_field(p, r).unwrap()
    }

    #[test]
    fn canonical_moduli() {
        assert_eq!(f(2, 1).modulus(), &[0, 1]);
        assert_eq!(f(3, 2).modulus(), &[1, 0, 1]);
        assert_eq!(f(5, 1).order(), 5);
        // x^2 + x + 1 is the only irreducible quadratic over F_2.
        assert_eq!(f(2, 2).modulus(), &[1, 1, 1]);
        // x^3 + x + 1 beats x^3 + x^2 + 1 in the base-2 reading.
        assert_eq!(f(2, 3).modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn field_construction_errors() {
        assert_eq!(make_field(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(make_field(2, 0).unwrap_err(), Error::DegreeOutOfRange(0));
        assert_eq!(make_field(2, 7).unwrap_err(), Error::DegreeOutOfRange(7));
        assert!(matches!(make_field(257, 2), Err(Error::FieldTooLarge(_))));
    }

    #[test]
    fn basic_arithmetic() {
        let f3 = f(3, 1);
        let two = f3.from_int(2);
        assert_eq!(f3.mul(two, two), FieldElement::ONE);
        let f9 = f(3, 2);
        let x = f9.from_digits(&[0, 1]).unwrap();
        assert_eq!(f9.mul(x, x), f9.from_int(2));
        let f5 = f(5, 1);
        assert_eq!(f5.inv(f5.from_int(2)).unwrap(), f5.from_int(3));
        assert_eq!(f5.inv(FieldElement::ZERO), Err(Error::ZeroInverse));
    }

    #[test]
    fn primitive_elements() {
        assert_eq!(f(2, 1).primitive_element(), FieldElement::ONE);
        assert_eq!(f(5, 1).primitive_element(), f(5, 1).from_int(2));
        assert_eq!(f(7, 1).primitive_element(), f(7, 1).from_int(3));
    }

    #[test]
    fn roots() {
        let f5 = f(5, 1);
        assert_eq!(f5.nth_root(f5.from_int(4), 2).unwrap(), Some(f5.from_int(2)));
        assert_eq!(f5.nth_root(f5.from_int(2), 2).unwrap(), None);
        assert_eq!(f5.nth_root(FieldElement::ONE, 7).unwrap(), Some(FieldElement::ONE));
        assert!(f5.nth_root(FieldElement::ZERO, 2).is_err());
        assert!(f5.minus_one_is_square());
        assert!(!f(3, 1).minus_one_is_square());
        assert!(f(2, 1).minus_one_is_square());
        let f3 = f(3, 1);
        assert_eq!(f3.ps_root(f3.from_int(2), 1).unwrap(), f3.from_int(2));
        assert_eq!(f5.ps_root(f5.from_int(3), 1).unwrap(), f5.from_int(3));
        assert_eq!(f(2, 1).ps_root(FieldElement::ONE, 5).unwrap(), FieldElement::ONE);
    }

    #[test]
    fn text_forms() {
        let f9 = f(3, 2);
        let a = f9.parse_element("2,1").unwrap();
        assert_eq!(f9.format_element(a), "2,1");
        assert_eq!(f9.parse_element("1").unwrap(), FieldElement::ONE);
        assert!(f9.parse_element("3").is_err());
        assert!(f9.parse_element("1,1,1").is_err());
        assert_eq!(f9.describe(), "3^2 [1,0,1]");
    }
}
