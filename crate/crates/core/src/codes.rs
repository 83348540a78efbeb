//! Constacyclic codes over `R`: parameters, principal codes and their duals,
//! counting, self-duality, generator towers, and the isometry to cyclic codes.
//!
//! Two kinds of shift constant are handled. A field constant `λ ∈ F_q^*`
//! gives codes described by towers `⟨F₀, uF₁, …, u^{e−1}F_{e−1}⟩`. A unit
//! `λ = α₁ + uα₂ + …` with `α₂ ≠ 0` makes `R[x]/(x^n − λ)` a principal ideal
//! ring whose ideals are `⟨∏ f_i^{s_i}⟩`, with `f_i` the irreducible factors of
//! `x^m − α₀` and `α₀^{p^s} = α₁`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::arith;
use crate::chainring::{RingContext, RingElement};
use crate::gf::FieldElement;
use crate::oracle::{self, Ambient, CodewordSet};
use crate::poly::{
    self, Factorization, FieldPoly, ReciprocalSplit, RepeatedFactorization, RingPoly,
};
use crate::{Error, Result};

/// Largest supported code length.
pub const MAX_LENGTH: u64 = 1 << 20;

/// Largest number of codes [`self_dual_generators`] will materialize.
pub const MAX_SELF_DUAL_LISTING: u128 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LambdaKind {
    /// `λ ∈ F_q^*`.
    FieldConstant,
    /// `λ = α₁ + uα₂ + …` with `α₂ ≠ 0`.
    UnitWithNonzeroU1,
    /// Any other unit (`α₂ = 0` but a higher part is nonzero); only the
    /// oracle applies.
    Other,
}

impl LambdaKind {
    pub fn name(self) -> &'static str {
        match self {
            LambdaKind::FieldConstant => "field-constant",
            LambdaKind::UnitWithNonzeroU1 => "unit-with-nonzero-u1",
            LambdaKind::Other => "other",
        }
    }
}

/// `n = m·p^s`, `λ`, and the factorization `x^n − α₁ = ∏ f_i^{p^s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeParams {
    ring: RingContext,
    m: u64,
    s: u32,
    ps: u64,
    n: usize,
    lambda: RingElement,
    kind: LambdaKind,
    repeated: RepeatedFactorization,
}

impl CodeParams {
    pub fn new(ring: RingContext, m: u64, s: u32, lambda: RingElement) -> Result<Self> {
        ring.check(&lambda)?;
        let f = ring.field();
        let p = f.p() as u64;
        if m == 0 {
            return Err(Error::InvalidParameter("m must be positive".into()));
        }
        if arith::gcd(m, p) != 1 {
            return Err(Error::NotCoprime { m, p });
        }
        if !ring.is_unit(&lambda) {
            return Err(Error::NotUnit);
        }
        let ps = arith::checked_pow(p, s as u64)
            .filter(|&ps| m.checked_mul(ps).is_some_and(|n| n <= MAX_LENGTH))
            .ok_or_else(|| {
                Error::InvalidParameter(format!("length m·p^s exceeds {MAX_LENGTH}"))
            })?;
        let kind = if lambda.is_constant() {
            LambdaKind::FieldConstant
        } else if !lambda.part(1).is_zero() {
            LambdaKind::UnitWithNonzeroU1
        } else {
            LambdaKind::Other
        };
        let repeated = poly::repeated_factorization(f, m, s, lambda.part(0))?;
        Ok(CodeParams {
            ring,
            m,
            s,
            ps,
            n: (m * ps) as usize,
            lambda,
            kind,
            repeated,
        })
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// `p^s`.
    pub fn ps(&self) -> u64 {
        self.ps
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &RingElement {
        &self.lambda
    }

    pub fn kind(&self) -> LambdaKind {
        self.kind
    }

    /// `α₁`, the residue of `λ`.
    pub fn alpha1(&self) -> FieldElement {
        self.lambda.part(0)
    }

    /// The `p^s`-th root `α₀` of `α₁`.
    pub fn alpha0(&self) -> FieldElement {
        self.repeated.base.lambda0()
    }

    /// Canonical factorization of `x^m − α₀`.
    pub fn factorization(&self) -> &Factorization {
        &self.repeated.base
    }

    pub fn repeated(&self) -> &RepeatedFactorization {
        &self.repeated
    }

    /// Largest exponent `e·p^s` of a factor.
    pub fn max_exponent(&self) -> u64 {
        self.ring.e() as u64 * self.ps
    }

    pub fn lambda_squared_is_one(&self) -> bool {
        self.ring.mul(&self.lambda, &self.lambda) == self.ring.one()
    }

    /// The same length over `λ^{-1}`, where duals live.
    pub fn inverse(&self) -> Result<CodeParams> {
        CodeParams::new(self.ring.clone(), self.m, self.s, self.ring.inv(&self.lambda)?)
    }

    /// `R[x]/(x^n − λ)` as an oracle ambient.
    pub fn ambient(&self) -> Result<Ambient> {
        Ambient::new(self.ring.clone(), self.n, self.lambda.clone())
    }

    /// `log_p |R|^n = r·e·n`.
    pub fn ambient_exponent(&self) -> u64 {
        self.ring.field().r() as u64 * self.ring.e() as u64 * self.n as u64
    }

    fn require_kind(&self, kind: LambdaKind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::KindMismatch {
                expected: kind.name(),
            })
        }
    }
}

/// `⟨∏ f_i^{s_i}⟩` with `0 ≤ s_i ≤ e·p^s`, exponents in factor order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalCode {
    params: CodeParams,
    exponents: Vec<u64>,
}

impl PrincipalCode {
    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// `∏ f_i^{s_i}` over the residue field.
    pub fn generator_residue(&self) -> FieldPoly {
        let f = self.params.ring.field();
        self.params
            .factorization()
            .factors()
            .iter()
            .zip(&self.exponents)
            .fold(FieldPoly::one(), |acc, (g, &k)| acc.mul(&g.pow(k, f), f))
    }

    /// `∏ f_i^{s_i}` in `R[x]`.
    pub fn generator(&self) -> RingPoly {
        RingPoly::from_field_poly(&self.generator_residue(), &self.params.ring)
    }
}

pub fn build_principal(params: &CodeParams, exponents: &[u64]) -> Result<PrincipalCode> {
    params.require_kind(LambdaKind::UnitWithNonzeroU1)?;
    let l = params.factorization().l();
    if exponents.len() != l {
        return Err(Error::ExponentCount {
            expected: l,
            found: exponents.len(),
        });
    }
    let max = params.max_exponent();
    if let Some((index, &value)) = exponents.iter().enumerate().find(|(_, &v)| v > max) {
        return Err(Error::ExponentOutOfRange { index, value, max });
    }
    Ok(PrincipalCode {
        params: params.clone(),
        exponents: exponents.to_vec(),
    })
}

/// `|C|` from `p^{r(en − Σ s_i deg f_i)}`, next to the value of the
/// printed formula `p^{re(n − Σ s_i deg f_i)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CardinalityReport {
    pub value: BigUint,
    pub exponent: u64,
    pub printed_exponent: i64,
    /// `None` when the printed exponent is negative.
    pub printed_value: Option<BigUint>,
    pub differs: bool,
}

pub fn principal_cardinality(c: &PrincipalCode) -> CardinalityReport {
    let params = &c.params;
    let (r, e, n) = (
        params.ring.field().r() as u64,
        params.ring.e() as u64,
        params.n as u64,
    );
    let p = BigUint::from(params.ring.field().p());
    let used: u64 = params
        .factorization()
        .factors()
        .iter()
        .zip(&c.exponents)
        .map(|(g, &k)| k * g.degree().unwrap_or(0) as u64)
        .sum();
    let exponent = r * (e * n - used);
    let printed_exponent = (r * e) as i64 * (n as i64 - used as i64);
    let printed_value =
        u32::try_from(printed_exponent).ok().map(|k| p.pow(k));
    CardinalityReport {
        value: p.pow(exponent as u32),
        exponent,
        printed_exponent,
        printed_value,
        differs: printed_exponent != exponent as i64,
    }
}

/// `(e·p^s + 1)^l`.
pub fn count_codes(params: &CodeParams) -> Result<BigUint> {
    params.require_kind(LambdaKind::UnitWithNonzeroU1)?;
    let base = BigUint::from(params.max_exponent() + 1);
    Ok(base.pow(params.factorization().l() as u32))
}

/// Every exponent vector in `[0, e·p^s]^l`, lexicographically.
pub fn all_exponent_vectors(params: &CodeParams) -> Vec<Vec<u64>> {
    let l = params.factorization().l();
    let max = params.max_exponent();
    let mut out = Vec::new();
    let mut v = vec![0u64; l];
    loop {
        out.push(v.clone());
        let Some(i) = (0..l).rev().find(|&i| v[i] < max) else {
            break;
        };
        v[i] += 1;
        for x in &mut v[i + 1..] {
            *x = 0;
        }
    }
    out
}

/// The dual as a principal code over `λ^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualDescription {
    pub code: PrincipalCode,
    pub lambda_inv: RingElement,
}

/// `C^⊥ = ⟨∏ (f_i*)^{e·p^s − s_i}⟩` in `R[x]/(x^n − λ^{-1})`; the monic
/// reciprocals `f_i*` are exactly the factors of `x^m − α₀^{-1}`.
pub fn dual_principal(c: &PrincipalCode) -> Result<DualDescription> {
    let params = &c.params;
    let f = params.ring.field();
    let dual_params = params.inverse()?;
    let max = params.max_exponent();
    let mut exponents = vec![0u64; c.exponents.len()];
    for (g, &k) in params.factorization().factors().iter().zip(&c.exponents) {
        let star = g.monic_reciprocal(f)?;
        let j = dual_params
            .factorization()
            .index_of(&star)
            .ok_or_else(|| Error::Internal("reciprocal of a factor is not a factor".into()))?;
        exponents[j] = max - k;
    }
    Ok(DualDescription {
        code: build_principal(&dual_params, &exponents)?,
        lambda_inv: dual_params.lambda,
    })
}

/// Generators of the code whose component at `f_i` is the local ideal
/// `L(a_i) = ⟨u^c f_i^d, u^{c+1}⟩` with `a_i = c·p^s + d`.
///
/// `E_i = ∏_{j≠i} f_j^{e·p^s}` vanishes on every other component and is a
/// unit on the `f_i` one, so each `E_i·L(a_i)` lands in its own component.
/// (For a field constant `f_j^{p^s}` would do; when `α₂ ≠ 0`, `f_j^{p^s}` is
/// only `u` times a unit.) The `L(a)` form a chain of length `e·p^s` and
/// `ann L(a) = L(e·p^s − a)`. In the principal case `L(a) = ⟨f_i^a⟩`.
pub fn local_exponent_generators(params: &CodeParams, local: &[u64]) -> Result<Vec<RingPoly>> {
    let rc = &params.ring;
    let f = rc.field();
    let factors = params.factorization().factors();
    if local.len() != factors.len() {
        return Err(Error::ExponentCount {
            expected: factors.len(),
            found: local.len(),
        });
    }
    let max = params.max_exponent();
    let ps = params.ps;
    let mut gens = Vec::new();
    for (i, &a) in local.iter().enumerate() {
        if a > max {
            return Err(Error::ExponentOutOfRange {
                index: i,
                value: a,
                max,
            });
        }
        let others = factors
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(FieldPoly::one(), |acc, (_, g)| acc.mul(&g.pow(max, f), f));
        let (c, d) = ((a / ps) as u32, a % ps);
        if c < rc.e() {
            let g = others.mul(&factors[i].pow(d, f), f);
            gens.push(RingPoly::from_field_poly(&g, rc).scale(&rc.u_power(c), rc));
        }
        if d > 0 && c + 1 < rc.e() {
            gens.push(RingPoly::from_field_poly(&others, rc).scale(&rc.u_power(c + 1), rc));
        }
    }
    Ok(gens)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SelfDualMethod {
    /// `λ² ≠ 1`: the dual is `λ^{-1}`-constacyclic, a different family.
    NotApplicable,
    /// `|C|² = |R|^n` needs `en` even.
    Parity,
    /// `p` and `e` odd: decided by the absence of self-reciprocal factors.
    Criterion,
    /// Exhaustive search over all ideals.
    Oracle,
    /// Outside the criterion and beyond the oracle caps.
    Undecided,
}

impl SelfDualMethod {
    pub fn name(self) -> &'static str {
        match self {
            SelfDualMethod::NotApplicable => "not-applicable",
            SelfDualMethod::Parity => "parity",
            SelfDualMethod::Criterion => "criterion",
            SelfDualMethod::Oracle => "oracle",
            SelfDualMethod::Undecided => "undecided",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfDualReport {
    /// `None` when not applicable or undecided.
    pub exists: Option<bool>,
    pub method: SelfDualMethod,
    pub reason: String,
    /// `"q^i ≡ -1 mod m"` when such an `i` exists and `α₀ = 1`.
    pub witness: Option<String>,
    pub split: Option<ReciprocalSplit>,
    /// Set on the criterion path when `λ` is not of the unit-with-`α₂ ≠ 0`
    /// kind: for odd `p`, `λ² = 1` forces `λ = ±1`.
    pub hypotheses_vacuous: bool,
    pub criterion: Option<bool>,
    pub oracle: Option<bool>,
    /// Number of self-dual ideals found by exhaustive search.
    pub oracle_count: Option<usize>,
}

/// The self-dual ideals among all ideals, by exhaustive search.
pub fn oracle_self_dual_ideals(params: &CodeParams) -> Result<Vec<CodewordSet>> {
    if !params.lambda_squared_is_one() {
        return Err(Error::Precondition("self-duality needs λ² = 1".into()));
    }
    let ambient = params.ambient()?;
    let size = ambient.size();
    let mut out = Vec::new();
    for c in oracle::all_ideals(&ambient)? {
        if (c.len() as u128) * (c.len() as u128) != size {
            continue;
        }
        if oracle::exhaustive_dual(&c)?.codes() == c.codes() {
            out.push(c);
        }
    }
    Ok(out)
}

pub fn self_dual_exists(params: &CodeParams) -> Result<SelfDualReport> {
    let f = params.ring.field();
    let (p, e) = (f.p() as u64, params.ring.e() as u64);
    let mut report = SelfDualReport {
        exists: None,
        method: SelfDualMethod::NotApplicable,
        reason: String::new(),
        witness: None,
        split: None,
        hypotheses_vacuous: false,
        criterion: None,
        oracle: None,
        oracle_count: None,
    };
    if !params.lambda_squared_is_one() {
        report.reason = "λ² ≠ 1: the dual of a λ-constacyclic code is λ^{-1}-constacyclic".into();
        return Ok(report);
    }
    if (e * params.n as u64) % 2 == 1 {
        report.exists = Some(false);
        report.method = SelfDualMethod::Parity;
        report.reason = "en is odd, so |C|² = |R|^n is impossible".into();
        return Ok(report);
    }

    let oracle_result = match oracle_self_dual_ideals(params) {
        Ok(found) => Some(found.len()),
        Err(Error::CapExceeded { .. }) => None,
        Err(err) => return Err(err),
    };
    report.oracle_count = oracle_result;
    report.oracle = oracle_result.map(|k| k > 0);

    if p % 2 == 1 && e % 2 == 1 {
        let split = poly::split_reciprocal(params.factorization(), f)?;
        let criterion = split.k() == 0;
        report.method = SelfDualMethod::Criterion;
        report.criterion = Some(criterion);
        report.hypotheses_vacuous = params.kind != LambdaKind::UnitWithNonzeroU1;
        if params.alpha0() == f.one() {
            let q = f.order() as u64;
            report.witness = arith::minus_one_power_witness(q, params.m)
                .map(|i| format!("{q}^{i} ≡ -1 mod {}", params.m));
        }
        report.reason = if criterion {
            "x^m − α₀ has no self-reciprocal irreducible factor".into()
        } else {
            format!(
                "self-reciprocal factor {} of x^m − α₀",
                split.selfrec[0].format()
            )
        };
        report.split = Some(split);
        report.exists = report.oracle.or(Some(criterion));
        if report.oracle.is_some_and(|o| o != criterion) {
            report.reason = format!("{}; exhaustive search disagrees", report.reason);
        }
        return Ok(report);
    }

    match oracle_result {
        Some(count) => {
            report.method = SelfDualMethod::Oracle;
            report.exists = Some(count > 0);
            report.reason = format!("{count} self-dual ideals found by exhaustive search");
        }
        None => {
            report.method = SelfDualMethod::Undecided;
            report.reason = "outside the odd p, odd e criterion and beyond the oracle cap".into();
        }
    }
    Ok(report)
}

/// One self-dual code: a choice `b_j` per reciprocal pair `(h_j, h_j*)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfDualCode {
    pub choice: Vec<u64>,
    /// Local exponent per factor, in factor order.
    pub exponents: Vec<u64>,
    /// Set in the principal ideal case.
    pub principal: Option<PrincipalCode>,
    pub generators: Vec<RingPoly>,
}

/// The codes with exponent `b_j` at `h_j`, `e·p^s − b_j` at `h_j*`, and
/// `e·p^s / 2` at every self-reciprocal factor, for all `b ∈ [0, e·p^s]^t`.
///
/// In the principal case these are `⟨∏ h_j^{b_j} h_j*^{e·p^s − b_j} ∏ g_i^{e·p^s/2}⟩`;
/// for a field constant `λ` the same exponents are realised through
/// [`local_exponent_generators`].
pub fn self_dual_generators(params: &CodeParams) -> Result<Vec<SelfDualCode>> {
    self_dual_family(params, None)
}

/// The first `limit` codes of [`self_dual_generators`], in the same order,
/// with no cap on the size of the whole family.
pub fn self_dual_generators_first(params: &CodeParams, limit: usize) -> Result<Vec<SelfDualCode>> {
    self_dual_family(params, Some(limit))
}

/// `(e·p^s + 1)^t`, the size of the [`self_dual_generators`] family.
pub fn self_dual_family_size(params: &CodeParams) -> Result<BigUint> {
    let (split, max) = self_dual_split(params)?;
    Ok(BigUint::from(max + 1).pow(split.t() as u32))
}

fn self_dual_split(params: &CodeParams) -> Result<(ReciprocalSplit, u64)> {
    if !params.lambda_squared_is_one() {
        return Err(Error::Precondition("self-duality needs λ² = 1".into()));
    }
    if params.kind == LambdaKind::Other {
        return Err(Error::KindMismatch {
            expected: "field-constant or unit-with-nonzero-u1",
        });
    }
    let split = poly::split_reciprocal(params.factorization(), params.ring.field())?;
    let max = params.max_exponent();
    if split.k() > 0 && max % 2 == 1 {
        return Err(Error::Precondition(format!(
            "self-reciprocal factor {} with e·p^s odd",
            split.selfrec[0].format()
        )));
    }
    Ok((split, max))
}

fn self_dual_family(params: &CodeParams, limit: Option<usize>) -> Result<Vec<SelfDualCode>> {
    let (split, max) = self_dual_split(params)?;
    let fac = params.factorization();
    let t = split.t();
    let total = (max as u128 + 1).checked_pow(t as u32).unwrap_or(u128::MAX);
    let limit = match limit {
        Some(limit) => limit,
        None if total > MAX_SELF_DUAL_LISTING => {
            return Err(Error::CapExceeded {
                size: total,
                cap: MAX_SELF_DUAL_LISTING,
            });
        }
        None => total as usize,
    };
    if limit == 0 {
        return Ok(Vec::new());
    }
    let index = |g: &FieldPoly| {
        fac.index_of(g)
            .ok_or_else(|| Error::Internal("split factor missing from factorization".into()))
    };
    let mut base = vec![0u64; fac.l()];
    for g in &split.selfrec {
        base[index(g)?] = max / 2;
    }
    let mut pair_index = Vec::with_capacity(t);
    for (h, hs) in &split.pairs {
        pair_index.push((index(h)?, index(hs)?));
    }

    let mut out = Vec::with_capacity(total.min(limit as u128) as usize);
    let mut choice = vec![0u64; t];
    loop {
        let mut exponents = base.clone();
        for (&b, &(i, j)) in choice.iter().zip(&pair_index) {
            exponents[i] = b;
            exponents[j] = max - b;
        }
        let (principal, generators) = if params.kind == LambdaKind::UnitWithNonzeroU1 {
            let code = build_principal(params, &exponents)?;
            let g = code.generator();
            (Some(code), vec![g])
        } else {
            (None, local_exponent_generators(params, &exponents)?)
        };
        out.push(SelfDualCode {
            choice: choice.clone(),
            exponents,
            principal,
            generators,
        });
        if out.len() == limit {
            break;
        }
        let Some(i) = (0..t).rev().find(|&i| choice[i] < max) else {
            break;
        };
        choice[i] += 1;
        for x in &mut choice[i + 1..] {
            *x = 0;
        }
    }
    Ok(out)
}

/// Exhaustive check that a code equals its dual.
pub fn verify_self_dual(params: &CodeParams, code: &SelfDualCode) -> Result<bool> {
    let ambient = params.ambient()?;
    let c = oracle::close_ideal(&ambient, &code.generators)?;
    let d = oracle::exhaustive_dual(&c)?;
    Ok(d.ambient() == c.ambient() && d.codes() == c.codes())
}

/// `⟨F₀, uF₁, …, u^{e−1}F_{e−1}⟩` for a field-constant `λ`, with monic
/// `F_i | x^n − λ` and `F_i | F₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerCode {
    params: CodeParams,
    tower: Vec<FieldPoly>,
}

impl TowerCode {
    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    pub fn tower(&self) -> &[FieldPoly] {
        &self.tower
    }

    /// `u^i F_i` in `R[x]`.
    pub fn generators(&self) -> Vec<RingPoly> {
        let rc = &self.params.ring;
        self.tower
            .iter()
            .enumerate()
            .map(|(i, g)| RingPoly::from_field_poly(g, rc).scale(&rc.u_power(i as u32), rc))
            .collect()
    }

    /// Whether `F_{i+1} | F_i` for every `i`.
    pub fn is_chain(&self) -> bool {
        let f = self.params.ring.field();
        self.tower.windows(2).all(|w| w[1].divides(&w[0], f))
    }

    /// The same code written with `G_i = gcd(F₀, …, F_i)`, which is a chain:
    /// `u^i G_i` is an `F_q[x]`-combination of the `u^i F_j`, `j ≤ i`.
    pub fn canonical(&self) -> TowerCode {
        let f = self.params.ring.field();
        let mut acc = self.tower[0].clone();
        let tower = self
            .tower
            .iter()
            .map(|g| {
                acc = acc.gcd(g, f);
                acc.clone()
            })
            .collect();
        TowerCode {
            params: self.params.clone(),
            tower,
        }
    }
}

pub fn tower_code(params: &CodeParams, tower: &[FieldPoly]) -> Result<TowerCode> {
    params.require_kind(LambdaKind::FieldConstant)?;
    let f = params.ring.field();
    let e = params.ring.e() as usize;
    if tower.len() != e {
        return Err(Error::ExponentCount {
            expected: e,
            found: tower.len(),
        });
    }
    let modulus = FieldPoly::binomial(f, params.n, params.alpha1());
    let mut monic = Vec::with_capacity(e);
    for (i, g) in tower.iter().enumerate() {
        if g.is_zero() || !g.divides(&modulus, f) {
            return Err(Error::NotADivisor(i));
        }
        monic.push(g.monic(f));
    }
    if let Some(i) = (1..e).find(|&i| !monic[i].divides(&monic[0], f)) {
        return Err(Error::TowerCondition(i));
    }
    Ok(TowerCode {
        params: params.clone(),
        tower: monic,
    })
}

/// `p^{r·Σ(n − deg F_i)}`, asserted only for chains `F_{i+1} | F_i`.
pub fn tower_cardinality(c: &TowerCode) -> Option<BigUint> {
    if !c.is_chain() {
        return None;
    }
    let f = c.params.ring.field();
    let n = c.params.n as u64;
    let exponent: u64 = c
        .tower
        .iter()
        .map(|g| n - g.degree().unwrap_or(0) as u64)
        .sum::<u64>()
        * f.r() as u64;
    Some(BigUint::from(f.p()).pow(exponent as u32))
}

/// Whether two towers give the same code: equal canonical forms decide
/// "yes"; otherwise the oracle compares the ideals.
pub fn same_tower_code(a: &TowerCode, b: &TowerCode) -> Result<bool> {
    if a.params != b.params {
        return Err(Error::ContextMismatch);
    }
    if a.canonical().tower == b.canonical().tower {
        return Ok(true);
    }
    let ambient = a.params.ambient()?;
    let ca = oracle::close_ideal(&ambient, &a.generators())?;
    let cb = oracle::close_ideal(&ambient, &b.generators())?;
    Ok(ca == cb)
}

/// `φ(f)(x) = f(δ₀^{-1}x)` from `R[x]/(x^n − 1)` to `R[x]/(x^n − λ)`, with
/// `δ₀^n = λ ∈ F_q^*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceMap {
    ring: RingContext,
    n: usize,
    delta0: FieldElement,
    /// `δ₀^{-i}` for `i < n`.
    scales: Vec<FieldElement>,
}

impl EquivalenceMap {
    pub fn new(params: &CodeParams, delta0: FieldElement) -> Result<Self> {
        params.require_kind(LambdaKind::FieldConstant)?;
        let f = params.ring.field();
        f.check(delta0)?;
        if delta0.is_zero() || f.pow(delta0, params.n as u64) != params.alpha1() {
            return Err(Error::NotAnNthRoot);
        }
        let step = f.inv(delta0)?;
        let mut scales = Vec::with_capacity(params.n);
        let mut acc = f.one();
        for _ in 0..params.n {
            scales.push(acc);
            acc = f.mul(acc, step);
        }
        Ok(EquivalenceMap {
            ring: params.ring.clone(),
            n: params.n,
            delta0,
            scales,
        })
    }

    pub fn delta0(&self) -> FieldElement {
        self.delta0
    }

    /// Scales coefficient `i` by `δ₀^{-i}`; inputs should be reduced
    /// modulo `x^n − 1`.
    pub fn apply_poly(&self, g: &RingPoly) -> RingPoly {
        let f = self.ring.field();
        let mut scale = f.one();
        let step = f.inv(self.delta0).expect("δ₀ is nonzero");
        let coeffs = g
            .coeffs()
            .iter()
            .map(|c| {
                let out = self.ring.scale(scale, c);
                scale = f.mul(scale, step);
                out
            })
            .collect();
        RingPoly::new(coeffs)
    }

    pub fn apply_word(&self, word: &[RingElement]) -> Vec<RingElement> {
        word.iter()
            .zip(&self.scales)
            .map(|(c, &k)| self.ring.scale(k, c))
            .collect()
    }

    /// Image of a cyclic tower: `F_i ↦` monic `F_i(δ₀^{-1}x)`.
    pub fn apply_tower(&self, target: &CodeParams, c: &TowerCode) -> Result<TowerCode> {
        let f = self.ring.field();
        let step = f.inv(self.delta0)?;
        let tower: Vec<FieldPoly> = c
            .tower
            .iter()
            .map(|g| {
                let mut scale = f.one();
                let coeffs = g
                    .coeffs()
                    .iter()
                    .map(|&a| {
                        let out = f.mul(a, scale);
                        scale = f.mul(scale, step);
                        out
                    })
                    .collect();
                FieldPoly::new(coeffs).monic(f)
            })
            .collect();
        tower_code(target, &tower)
    }
}

/// Whether `λ`-constacyclic codes are equivalent to cyclic ones through
/// `x ↦ δ₀^{-1}x`, with the two sufficient criteria reported alongside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceDecision {
    pub equivalent: bool,
    /// Canonical `n`-th root of `λ`.
    pub delta0: Option<FieldElement>,
    /// `n` odd and `λ` an `m`-th power.
    pub criterion_odd: bool,
    /// `m ≡ 2 (mod 4)`, `q ≡ 1 (mod 4)` and `λ` an `m`-th power.
    pub criterion_even: bool,
    /// Canonical `n`-th root of `−λ`.
    pub minus_delta0: Option<FieldElement>,
    pub reason: String,
}

pub fn equivalent_to_cyclic(params: &CodeParams) -> Result<EquivalenceDecision> {
    params.require_kind(LambdaKind::FieldConstant)?;
    let f = params.ring.field();
    let lambda = params.alpha1();
    let (n, m) = (params.n as u64, params.m);
    let mth_power = f.nth_root(lambda, m)?.is_some();
    let criterion_odd = n % 2 == 1 && mth_power;
    let criterion_even = m % 4 == 2 && f.order() % 4 == 1 && mth_power;
    let delta0 = f.nth_root(lambda, n)?;
    let minus_delta0 = f.nth_root(f.neg(lambda), n)?;
    let reason = match delta0 {
        Some(d) => format!("δ₀ = {} satisfies δ₀^n = λ", f.format_element(d)),
        None => "λ has no n-th root in the residue field".into(),
    };
    Ok(EquivalenceDecision {
        equivalent: delta0.is_some(),
        delta0,
        criterion_odd,
        criterion_even,
        minus_delta0,
        reason,
    })
}
