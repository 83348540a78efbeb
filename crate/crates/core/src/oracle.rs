//! Brute-force ground truth on tiny instances.
//!
//! Everything here works on explicit sets of words in `R^n`, with no use of
//! factorizations or code-level theory: ideals are grown as fixpoints under
//! addition, multiplication by the generators `θ` (of `F_q` over `F_p`), `u`
//! and `x` (the constacyclic shift); duals are found by testing every vector of
//! `R^n`.
//!
//! A word is stored as an integer whose base-`p` digits, most significant
//! first, run over coordinates `0..n`, then `u`-parts, then field digits
//! `c₀..c_{r−1}`. Integer order is therefore the lexicographic order of the
//! digit expansion.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::chainring::{RingContext, RingElement};
use crate::poly::RingPoly;
use crate::{Error, Result};

/// Cap on `|R|^n` for single closures and exhaustive duals.
pub const CLOSURE_CAP: u128 = 1 << 24;
/// Cap on `|R|^n` for [`all_ideals`].
pub const ENUMERATION_CAP: u128 = 1 << 16;

/// The ambient module `R[x]/(x^n − λ)`, viewed as `R^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambient {
    ring: RingContext,
    n: usize,
    lambda: RingElement,
    size: u128,
}

impl Ambient {
    pub fn new(ring: RingContext, n: usize, lambda: RingElement) -> Result<Self> {
        ring.check(&lambda)?;
        if n == 0 {
            return Err(Error::InvalidParameter("length n must be positive".into()));
        }
        if !ring.is_unit(&lambda) {
            return Err(Error::NotUnit);
        }
        let size = (ring.size() as u128)
            .checked_pow(n as u32)
            .unwrap_or(u128::MAX);
        Ok(Ambient {
            ring,
            n,
            lambda,
            size,
        })
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &RingElement {
        &self.lambda
    }

    /// `|R|^n`, saturating.
    pub fn size(&self) -> u128 {
        self.size
    }

    /// The same space with `λ` replaced by `λ^{-1}`, where duals live.
    pub fn dual(&self) -> Ambient {
        let lambda = self.ring.inv(&self.lambda).expect("λ is a unit");
        Ambient {
            lambda,
            ..self.clone()
        }
    }

    fn require(&self, cap: u128) -> Result<()> {
        if self.size > cap {
            Err(Error::CapExceeded {
                size: self.size,
                cap,
            })
        } else {
            Ok(())
        }
    }

    fn p(&self) -> u64 {
        self.ring.field().p() as u64
    }

    fn total_digits(&self) -> usize {
        self.n * self.ring.e() as usize * self.ring.field().r() as usize
    }

    pub fn encode(&self, word: &[RingElement]) -> u64 {
        assert_eq!(word.len(), self.n, "word length");
        let p = self.p();
        let f = self.ring.field();
        let mut code = 0u64;
        for c in word {
            for &v in c.parts() {
                for d in f.digits(v) {
                    code = code * p + d as u64;
                }
            }
        }
        code
    }

    pub fn decode(&self, mut code: u64) -> Vec<RingElement> {
        let p = self.p();
        let f = self.ring.field();
        let (e, r) = (self.ring.e() as usize, f.r() as usize);
        let mut digits = vec![0u32; self.total_digits()];
        for d in digits.iter_mut().rev() {
            *d = (code % p) as u32;
            code /= p;
        }
        digits
            .chunks(e * r)
            .map(|coord| {
                let parts = coord
                    .chunks(r)
                    .map(|fd| f.from_digits(fd).expect("digits below p"))
                    .collect();
                self.ring.from_parts(parts).expect("e parts")
            })
            .collect()
    }

    fn add_codes(&self, mut a: u64, mut b: u64) -> u64 {
        let p = self.p();
        if p == 2 {
            return a ^ b;
        }
        let (mut out, mut place) = (0u64, 1u64);
        for _ in 0..self.total_digits() {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    /// `(c₀, …, c_{n−1}) ↦ (λc_{n−1}, c₀, …, c_{n−2})`, i.e. multiplication by `x`.
    pub fn shift(&self, word: &[RingElement]) -> Vec<RingElement> {
        let mut out = Vec::with_capacity(self.n);
        out.push(self.ring.mul(&self.lambda, &word[self.n - 1]));
        out.extend_from_slice(&word[..self.n - 1]);
        out
    }

    pub fn scale(&self, c: &RingElement, word: &[RingElement]) -> Vec<RingElement> {
        word.iter().map(|a| self.ring.mul(c, a)).collect()
    }

    /// Standard inner product `Σ vᵢwᵢ`.
    pub fn inner_product(&self, v: &[RingElement], w: &[RingElement]) -> RingElement {
        v.iter()
            .zip(w)
            .fold(self.ring.zero(), |acc, (a, b)| {
                self.ring.add(&acc, &self.ring.mul(a, b))
            })
    }

    /// Images of a word under the ring-generating multiplications `x`, `u`, `θ`.
    fn generator_images(&self, word: &[RingElement]) -> Vec<Vec<RingElement>> {
        let mut out = vec![self.shift(word)];
        if self.ring.e() > 1 {
            out.push(self.scale(&self.ring.u_power(1), word));
        }
        if let Some(theta) = self.ring.field().poly_generator() {
            out.push(self.scale(&self.ring.constant(theta), word));
        }
        out
    }
}

/// An explicit set of words, kept sorted, with an `F_p`-basis when the set is additive.
#[derive(Clone, Debug)]
pub struct CodewordSet {
    ambient: Ambient,
    words: Vec<u64>,
    basis: Vec<u64>,
}

impl PartialEq for CodewordSet {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.words == other.words
    }
}

impl Eq for CodewordSet {}

impl CodewordSet {
    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Encoded words in canonical order.
    pub fn codes(&self) -> &[u64] {
        &self.words
    }

    pub fn basis_codes(&self) -> &[u64] {
        &self.basis
    }

    pub fn contains_code(&self, code: u64) -> bool {
        self.words.binary_search(&code).is_ok()
    }

    pub fn contains(&self, word: &[RingElement]) -> bool {
        self.contains_code(self.ambient.encode(word))
    }

    pub fn words(&self) -> impl Iterator<Item = Vec<RingElement>> + '_ {
        self.words.iter().map(|&c| self.ambient.decode(c))
    }

    pub fn basis(&self) -> Vec<Vec<RingElement>> {
        self.basis.iter().map(|&c| self.ambient.decode(c)).collect()
    }

    /// Whether the set is a submodule: exact comparison with the closure of its basis.
    pub fn is_ideal(&self) -> Result<bool> {
        Ok(close_codes(&self.ambient, self.basis.clone())?.words == self.words)
    }
}

struct BitSet(Vec<u64>);

impl BitSet {
    fn new(size: u128) -> Self {
        BitSet(vec![0; (size as usize).div_ceil(64)])
    }

    fn insert(&mut self, i: u64) -> bool {
        let (w, b) = ((i / 64) as usize, i % 64);
        let fresh = self.0[w] & (1 << b) == 0;
        self.0[w] |= 1 << b;
        fresh
    }

    fn contains(&self, i: u64) -> bool {
        self.0[(i / 64) as usize] & (1 << (i % 64)) != 0
    }
}

/// Grows the `F_p`-span of `gens` until it is closed under `x`, `u` and `θ`.
fn close_codes(ambient: &Ambient, gens: Vec<u64>) -> Result<CodewordSet> {
    ambient.require(CLOSURE_CAP)?;
    let p = ambient.p();
    let mut seen = BitSet::new(ambient.size);
    seen.insert(0);
    let mut words = vec![0u64];
    let mut basis = Vec::new();
    let mut queue: VecDeque<u64> = gens.into();
    while let Some(g) = queue.pop_front() {
        if seen.contains(g) {
            continue;
        }
        basis.push(g);
        let coset_base = words.len();
        let mut step = g;
        for _ in 1..p {
            for i in 0..coset_base {
                let v = ambient.add_codes(words[i], step);
                seen.insert(v);
                words.push(v);
            }
            step = ambient.add_codes(step, g);
        }
        let word = ambient.decode(g);
        for image in ambient.generator_images(&word) {
            queue.push_back(ambient.encode(&image));
        }
    }
    words.sort_unstable();
    Ok(CodewordSet {
        ambient: ambient.clone(),
        words,
        basis,
    })
}

/// Smallest set containing the generators and closed under addition,
/// `R`-scalars and the constacyclic shift: the ideal they generate in
/// `R[x]/(x^n − λ)`.
pub fn close_ideal(ambient: &Ambient, generators: &[RingPoly]) -> Result<CodewordSet> {
    ambient.require(CLOSURE_CAP)?;
    let rc = &ambient.ring;
    let gens = generators
        .iter()
        .map(|g| ambient.encode(&g.to_word(ambient.n, &ambient.lambda, rc)))
        .collect();
    close_codes(ambient, gens)
}

pub fn close_words(ambient: &Ambient, generators: &[Vec<RingElement>]) -> Result<CodewordSet> {
    ambient.require(CLOSURE_CAP)?;
    let gens = generators.iter().map(|w| ambient.encode(w)).collect();
    close_codes(ambient, gens)
}

/// The set of all `F_p`-combinations of the given words (no shift or scalar closure).
pub fn additive_span(ambient: &Ambient, generators: &[Vec<RingElement>]) -> Result<CodewordSet> {
    ambient.require(CLOSURE_CAP)?;
    let codes: Vec<u64> = generators.iter().map(|w| ambient.encode(w)).collect();
    Ok(span_of(ambient, codes.into_iter()))
}

fn span_of(ambient: &Ambient, codes: impl Iterator<Item = u64>) -> CodewordSet {
    let p = ambient.p();
    let mut seen = BitSet::new(ambient.size);
    seen.insert(0);
    let mut words = vec![0u64];
    let mut basis = Vec::new();
    for g in codes {
        if seen.contains(g) {
            continue;
        }
        basis.push(g);
        let coset_base = words.len();
        let mut step = g;
        for _ in 1..p {
            for i in 0..coset_base {
                let v = ambient.add_codes(words[i], step);
                seen.insert(v);
                words.push(v);
            }
            step = ambient.add_codes(step, g);
        }
    }
    words.sort_unstable();
    CodewordSet {
        ambient: ambient.clone(),
        words,
        basis,
    }
}

/// Every ideal of `R[x]/(x^n − λ)`, ordered by size then by word list.
///
/// Principal ideals come from single-element closures (skipping elements
/// already known to be associates: unit multiples of `x^k·a`), and the rest
/// from pairwise joins taken to a fixpoint. Every ideal of a finite ring is a
/// finite join of principal ideals, so the result is complete.
pub fn all_ideals(ambient: &Ambient) -> Result<Vec<CodewordSet>> {
    ambient.require(ENUMERATION_CAP)?;
    let rc = &ambient.ring;
    let units: Vec<RingElement> = rc.elements().filter(|a| rc.is_unit(a)).collect();
    let mut visited = BitSet::new(ambient.size);
    let mut found: BTreeMap<Vec<u64>, CodewordSet> = BTreeMap::new();
    for code in 0..ambient.size as u64 {
        if visited.contains(code) {
            continue;
        }
        let ideal = close_codes(ambient, vec![code])?;
        let mut w = ambient.decode(code);
        for _ in 0..ambient.n {
            for c in &units {
                visited.insert(ambient.encode(&ambient.scale(c, &w)));
            }
            w = ambient.shift(&w);
        }
        found.entry(ideal.words.clone()).or_insert(ideal);
    }
    let mut list: Vec<CodewordSet> = found.values().cloned().collect();
    let mut idx = 0;
    while idx < list.len() {
        for j in 0..idx {
            let mut gens = list[idx].basis.clone();
            gens.extend_from_slice(&list[j].basis);
            let joined = close_codes(ambient, gens)?;
            if !found.contains_key(&joined.words) {
                found.insert(joined.words.clone(), joined.clone());
                list.push(joined);
            }
        }
        idx += 1;
    }
    list.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.words.cmp(&b.words)));
    Ok(list)
}

/// All `v ∈ R^n` with `[v, w] = 0` for every `w ∈ C`. The inner product is
/// bilinear, so testing `v` against a spanning set of `C` decides this.
/// The result lives in the `λ^{-1}` ambient.
pub fn exhaustive_dual(c: &CodewordSet) -> Result<CodewordSet> {
    let ambient = &c.ambient;
    ambient.require(CLOSURE_CAP)?;
    let spanning: Vec<Vec<RingElement>> = if c.basis.is_empty() && c.words.len() > 1 {
        c.words().collect()
    } else {
        c.basis()
    };
    let dual_ambient = ambient.dual();
    let codes = (0..ambient.size as u64).filter(|&v| {
        let word = ambient.decode(v);
        spanning
            .iter()
            .all(|b| ambient.inner_product(&word, b).is_zero())
    });
    Ok(span_of(&dual_ambient, codes))
}

/// Whether the set is closed under the constacyclic shift.
pub fn check_constacyclic(c: &CodewordSet) -> bool {
    c.words()
        .all(|w| c.contains(&c.ambient.shift(&w)))
}

/// Homogeneous weight → number of words.
pub fn weight_histogram(c: &CodewordSet) -> BTreeMap<u64, u64> {
    let rc = &c.ambient.ring;
    let mut hist = BTreeMap::new();
    for w in c.words() {
        *hist.entry(rc.vector_weight(&w)).or_insert(0) += 1;
    }
    hist
}

/// Image of a set under a coordinatewise map into another ambient.
pub fn map_set(
    c: &CodewordSet,
    target: &Ambient,
    map: impl Fn(&[RingElement]) -> Vec<RingElement>,
) -> Result<CodewordSet> {
    target.require(CLOSURE_CAP)?;
    let mut words: Vec<u64> = c.words().map(|w| target.encode(&map(&w))).collect();
    words.sort_unstable();
    words.dedup();
    let basis = c.basis().iter().map(|w| target.encode(&map(w))).collect();
    Ok(CodewordSet {
        ambient: target.clone(),
        words,
        basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    fn ambient(p: u64, r: u32, e: u32, n: usize, lambda: &str) -> Ambient {
        let rc = RingContext::new(make_field(p, r).unwrap(), e).unwrap();
        let l = rc.parse_element(lambda).unwrap();
        Ambient::new(rc, n, l).unwrap()
    }

    #[test]
    fn codec_round_trip_and_order() {
        let a = ambient(3, 2, 2, 2, "1");
        let rc = a.ring().clone();
        let w = vec![rc.parse_element("1,2;0,1").unwrap(), rc.parse_element("2;1,1").unwrap()];
        assert_eq!(a.decode(a.encode(&w)), w);
        // First coordinate, u⁰ part, c₀ is the most significant digit.
        let hi = vec![rc.one(), rc.zero()];
        let lo = vec![rc.zero(), rc.parse_element("2,2;2,2").unwrap()];
        assert!(a.encode(&hi) > a.encode(&lo));
    }

    #[test]
    fn closure_examples() {
        let a = ambient(2, 1, 2, 2, "1;1");
        let rc = a.ring().clone();
        assert_eq!(close_ideal(&a, &[RingPoly::zero()]).unwrap().len(), 1);
        let g = RingPoly::parse(&rc, "1,1").unwrap();
        assert_eq!(close_ideal(&a, &[g]).unwrap().len(), 8);
        let one = RingPoly::constant(rc.one());
        assert_eq!(close_ideal(&a, &[one]).unwrap().len(), 16);
    }

    #[test]
    fn ideal_counts() {
        assert_eq!(all_ideals(&ambient(2, 1, 2, 2, "1;1")).unwrap().len(), 5);
        assert_eq!(all_ideals(&ambient(2, 1, 2, 1, "1")).unwrap().len(), 3);
        assert_eq!(all_ideals(&ambient(2, 1, 1, 2, "1")).unwrap().len(), 3);
    }

    #[test]
    fn duals() {
        let a = ambient(2, 1, 2, 2, "1;1");
        let rc = a.ring().clone();
        let zero = close_ideal(&a, &[]).unwrap();
        let full = close_ideal(&a, &[RingPoly::constant(rc.one())]).unwrap();
        assert_eq!(exhaustive_dual(&zero).unwrap().len(), 16);
        assert_eq!(exhaustive_dual(&full).unwrap().len(), 1);
        let c = close_ideal(&a, &[RingPoly::parse(&rc, "1,1").unwrap()]).unwrap();
        let d = exhaustive_dual(&c).unwrap();
        let expected = close_ideal(&a, &[RingPoly::parse(&rc, "0|1,1").unwrap()]).unwrap();
        assert_eq!(d.codes(), expected.codes());
        assert_eq!(d.len(), 2);
    }

    #[test]
    fn shift_closure_checks() {
        let a = ambient(2, 1, 2, 2, "1;1");
        let rc = a.ring().clone();
        assert!(check_constacyclic(&close_ideal(&a, &[]).unwrap()));
        assert!(check_constacyclic(&close_ideal(&a, &[RingPoly::constant(rc.one())]).unwrap()));
        let lone = additive_span(&a, &[vec![rc.one(), rc.zero()]]).unwrap();
        assert!(!check_constacyclic(&lone));
        assert!(!lone.is_ideal().unwrap());
    }

    #[test]
    fn histograms() {
        let a = ambient(2, 1, 2, 1, "1");
        let rc = a.ring().clone();
        assert_eq!(
            weight_histogram(&close_ideal(&a, &[]).unwrap()),
            BTreeMap::from([(0, 1)])
        );
        let full = close_ideal(&a, &[RingPoly::constant(rc.one())]).unwrap();
        assert_eq!(weight_histogram(&full), BTreeMap::from([(0, 1), (1, 2), (2, 1)]));
    }

    #[test]
    fn caps_are_enforced() {
        let big = ambient(2, 1, 2, 9, "1");
        assert!(matches!(all_ideals(&big), Err(Error::CapExceeded { .. })));
        let huge = ambient(3, 1, 3, 6, "1");
        assert!(matches!(close_ideal(&huge, &[]), Err(Error::CapExceeded { .. })));
    }
}
