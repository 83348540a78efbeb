//! Named oracle cross-checks run by `rrcodes verify`.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rrcodes_core::codes::{self, CodeParams, LambdaKind};
use rrcodes_core::gf::make_field;
use rrcodes_core::oracle::{self, Ambient};
use rrcodes_core::{poly, FieldPoly, Result, RingContext};
use serde_json::{json, Value};

pub struct Case {
    pub name: &'static str,
    pub p: u64,
    pub r: u32,
    pub e: u32,
    pub s: u32,
    pub m: u64,
    pub lambda: &'static str,
}

pub const CASES: &[Case] = &[
    Case { name: "f2-e2-s1", p: 2, r: 1, e: 2, s: 1, m: 1, lambda: "1;1" },
    Case { name: "f2-e2-m3", p: 2, r: 1, e: 2, s: 0, m: 3, lambda: "1;1" },
    Case { name: "f3-e2-s1", p: 3, r: 1, e: 2, s: 1, m: 1, lambda: "1;1" },
    Case { name: "f2-e3-s1", p: 2, r: 1, e: 3, s: 1, m: 1, lambda: "1;1" },
    Case { name: "f5-negacyclic-m2", p: 5, r: 1, e: 2, s: 0, m: 2, lambda: "4" },
    Case { name: "f3-constacyclic-s1", p: 3, r: 1, e: 2, s: 1, m: 1, lambda: "2" },
    Case { name: "f9-negacyclic-m4", p: 3, r: 2, e: 1, s: 0, m: 4, lambda: "2" },
    Case { name: "f5-e3-selfdual", p: 5, r: 1, e: 3, s: 0, m: 2, lambda: "4" },
];

pub fn find(name: &str) -> Option<&'static Case> {
    CASES.iter().find(|c| c.name == name)
}

struct Checks(Vec<Value>);

impl Checks {
    fn record(&mut self, invariant: &str, outcome: Result<(bool, String)>) {
        let (pass, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
        self.0.push(json!({ "invariant": invariant, "pass": pass, "detail": detail }));
    }
}

impl Case {
    fn params(&self) -> Result<CodeParams> {
        let rc = RingContext::new(make_field(self.p, self.r)?, self.e)?;
        let lambda = rc.parse_element(self.lambda)?;
        CodeParams::new(rc, self.m, self.s, lambda)
    }

    pub fn run(&self) -> Value {
        let mut checks = Checks(Vec::new());
        match self.params() {
            Ok(pr) => {
                checks.record("constacyclic-closure", ideals_are_shift_closed(&pr));
                checks.record("dual-size-and-involution", oracle_duality(&pr));
                match pr.kind() {
                    LambdaKind::UnitWithNonzeroU1 => {
                        checks.record("count", count(&pr));
                        checks.record("cardinality-and-distinctness", cardinality(&pr));
                        checks.record("dual-generator", dual_generator(&pr));
                        checks.record("nilpotency", nilpotency(&pr));
                    }
                    LambdaKind::FieldConstant => {
                        checks.record("tower-cardinality", towers(&pr));
                        checks.record("isometry", isometry(&pr));
                    }
                    LambdaKind::Other => {}
                }
                if pr.lambda_squared_is_one() {
                    checks.record("self-dual", self_dual(&pr));
                }
            }
            Err(e) => checks.record("parameters", Err(e)),
        }
        let pass = checks.0.iter().all(|c| c["pass"] == true);
        json!({
            "case": self.name,
            "params": {
                "p": self.p, "r": self.r, "e": self.e, "s": self.s, "m": self.m,
                "lambda": self.lambda,
            },
            "checks": checks.0,
            "pass": pass,
        })
    }
}

fn ideals_are_shift_closed(pr: &CodeParams) -> Result<(bool, String)> {
    let ideals = oracle::all_ideals(&pr.ambient()?)?;
    let ok = ideals.iter().all(oracle::check_constacyclic);
    Ok((ok, format!("{} ideals enumerated", ideals.len())))
}

fn oracle_duality(pr: &CodeParams) -> Result<(bool, String)> {
    let ambient = pr.ambient()?;
    let ideals = oracle::all_ideals(&ambient)?;
    let mut ok = true;
    for c in &ideals {
        let d = oracle::exhaustive_dual(c)?;
        ok &= c.len() as u128 * d.len() as u128 == ambient.size();
        ok &= oracle::exhaustive_dual(&d)? == *c;
    }
    Ok((ok, format!("|C||C⊥| = |R|^n and (C⊥)⊥ = C on {} ideals", ideals.len())))
}

fn count(pr: &CodeParams) -> Result<(bool, String)> {
    let found = oracle::all_ideals(&pr.ambient()?)?.len();
    let formula = codes::count_codes(pr)?;
    Ok((
        BigUint::from(found) == formula,
        format!("oracle {found}, (e·p^s + 1)^l = {formula}"),
    ))
}

fn cardinality(pr: &CodeParams) -> Result<(bool, String)> {
    let ambient = pr.ambient()?;
    let vectors = codes::all_exponent_vectors(pr);
    let mut ok = true;
    let mut seen = BTreeSet::new();
    for v in &vectors {
        let c = codes::build_principal(pr, v)?;
        let set = oracle::close_ideal(&ambient, &[c.generator()])?;
        ok &= BigUint::from(set.len()) == codes::principal_cardinality(&c).value;
        seen.insert(set.codes().to_vec());
    }
    ok &= seen.len() == vectors.len();
    Ok((ok, format!("{} exponent vectors, {} distinct ideals", vectors.len(), seen.len())))
}

fn dual_generator(pr: &CodeParams) -> Result<(bool, String)> {
    let ambient = pr.ambient()?;
    let dual_ambient = ambient.dual();
    let vectors = codes::all_exponent_vectors(pr);
    let mut ok = true;
    for v in &vectors {
        let c = codes::build_principal(pr, v)?;
        let set = oracle::close_ideal(&ambient, &[c.generator()])?;
        let d = codes::dual_principal(&c)?;
        ok &= oracle::close_ideal(&dual_ambient, &[d.code.generator()])?
            == oracle::exhaustive_dual(&set)?;
    }
    Ok((ok, format!("{} dual generators against exhaustive duals", vectors.len())))
}

fn nilpotency(pr: &CodeParams) -> Result<(bool, String)> {
    let w = poly::nilpotency_witness(pr.ring(), pr.m(), pr.s(), pr.lambda())?;
    Ok((
        pr.ring().is_unit(&w.rho) && w.index == pr.max_exponent(),
        format!("index {}, e·p^s = {}", w.index, pr.max_exponent()),
    ))
}

fn monic_divisors(pr: &CodeParams) -> Vec<FieldPoly> {
    let f = pr.ring().field();
    let mut divs = vec![FieldPoly::one()];
    for g in pr.factorization().factors() {
        divs = divs
            .iter()
            .flat_map(|d| (0..=pr.ps()).map(move |k| d.mul(&g.pow(k, f), f)))
            .collect();
    }
    divs
}

fn towers(pr: &CodeParams) -> Result<(bool, String)> {
    let ambient = pr.ambient()?;
    let f = pr.ring().field();
    let mut chains: Vec<Vec<FieldPoly>> = vec![vec![]];
    let divs = monic_divisors(pr);
    for _ in 0..pr.ring().e() {
        chains = chains
            .iter()
            .flat_map(|t| {
                divs.iter()
                    .filter(|d| t.last().is_none_or(|last| d.divides(last, f)))
                    .map(move |d| {
                        let mut t = t.clone();
                        t.push(d.clone());
                        t
                    })
            })
            .collect();
    }
    let mut ok = true;
    let mut seen = BTreeSet::new();
    for t in &chains {
        let c = codes::tower_code(pr, t)?;
        let set = oracle::close_ideal(&ambient, &c.generators())?;
        ok &= codes::tower_cardinality(&c) == Some(BigUint::from(set.len()));
        seen.insert(set.codes().to_vec());
    }
    ok &= seen.len() == chains.len();
    Ok((ok, format!("{} chain towers, {} distinct codes", chains.len(), seen.len())))
}

fn isometry(pr: &CodeParams) -> Result<(bool, String)> {
    let decision = codes::equivalent_to_cyclic(pr)?;
    let Some(delta0) = decision.delta0 else {
        return Ok((true, "no n-th root of λ; nothing to check".into()));
    };
    let map = codes::EquivalenceMap::new(pr, delta0)?;
    let target = pr.ambient()?;
    let cyclic = Ambient::new(pr.ring().clone(), pr.n(), pr.ring().one())?;
    let images: BTreeSet<u64> = (0..cyclic.size() as u64)
        .map(|c| target.encode(&map.apply_word(&cyclic.decode(c))))
        .collect();
    let mut ok = images.len() as u128 == target.size();
    let ideals = oracle::all_ideals(&cyclic)?;
    for c in &ideals {
        let image = oracle::map_set(c, &target, |w| map.apply_word(w))?;
        ok &= image.is_ideal()? && oracle::check_constacyclic(&image);
        ok &= oracle::weight_histogram(c) == oracle::weight_histogram(&image);
    }
    Ok((
        ok,
        format!(
            "δ₀ = {}; bijective, {} ideals mapped to ideals with equal weight histograms",
            pr.ring().field().format_element(delta0),
            ideals.len()
        ),
    ))
}

fn self_dual(pr: &CodeParams) -> Result<(bool, String)> {
    let report = codes::self_dual_exists(pr)?;
    let mut ok = match (report.criterion, report.oracle) {
        (Some(c), Some(o)) => c == o,
        _ => true,
    };
    let mut verified = 0;
    if report.exists == Some(true) {
        for code in codes::self_dual_generators(pr)? {
            ok &= codes::verify_self_dual(pr, &code)?;
            verified += 1;
        }
    }
    Ok((
        ok,
        format!(
            "exists {} by {}; {verified} generated codes verified self-dual",
            match report.exists {
                Some(true) => "yes",
                Some(false) => "no",
                None => "undecided",
            },
            report.method.name()
        ),
    ))
}
