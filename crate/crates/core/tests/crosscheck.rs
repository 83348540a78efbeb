//! Theorem-level constructions against exhaustive enumeration.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rrcodes_core::codes::{self, CodeParams, SelfDualMethod};
use rrcodes_core::gf::make_field;
use rrcodes_core::oracle;
use rrcodes_core::{FieldPoly, RingContext, RingPoly};

fn params(p: u64, r: u32, e: u32, s: u32, m: u64, lambda: &str) -> CodeParams {
    let rc = RingContext::new(make_field(p, r).unwrap(), e).unwrap();
    let l = rc.parse_element(lambda).unwrap();
    CodeParams::new(rc, m, s, l).unwrap()
}

#[test]
fn distinct_exponents_give_distinct_ideals() {
    for (p, e, s, m) in [(2, 2, 1, 1), (2, 2, 0, 3), (3, 2, 1, 1), (2, 3, 1, 1), (2, 2, 0, 7)] {
        let pr = params(p, 1, e, s, m, "1;1");
        let amb = pr.ambient().unwrap();
        let vectors = codes::all_exponent_vectors(&pr);
        let sets: BTreeSet<Vec<u64>> = vectors
            .iter()
            .map(|v| {
                let c = codes::build_principal(&pr, v).unwrap();
                oracle::close_ideal(&amb, &[c.generator()]).unwrap().codes().to_vec()
            })
            .collect();
        assert_eq!(sets.len(), vectors.len(), "p={p} e={e} s={s} m={m}");
        assert_eq!(BigUint::from(sets.len()), codes::count_codes(&pr).unwrap());
    }
}

#[test]
fn local_generators_match_principal_generators() {
    let pr = params(2, 1, 2, 0, 3, "1;1");
    let amb = pr.ambient().unwrap();
    for v in codes::all_exponent_vectors(&pr) {
        let c = codes::build_principal(&pr, &v).unwrap();
        let principal = oracle::close_ideal(&amb, &[c.generator()]).unwrap();
        let local = codes::local_exponent_generators(&pr, &v).unwrap();
        assert_eq!(oracle::close_ideal(&amb, &local).unwrap(), principal, "{v:?}");
    }
}

#[test]
fn dual_generator_for_lambda_squared_not_one() {
    // λ = 1 + u over F_3: λ² = 1 + 2u ≠ 1, the dual lives over λ^{-1}.
    let pr = params(3, 1, 2, 1, 1, "1;1");
    assert!(!pr.lambda_squared_is_one());
    let amb = pr.ambient().unwrap();
    for v in codes::all_exponent_vectors(&pr) {
        let c = codes::build_principal(&pr, &v).unwrap();
        let set = oracle::close_ideal(&amb, &[c.generator()]).unwrap();
        let d = codes::dual_principal(&c).unwrap();
        let expected = oracle::close_ideal(&amb.dual(), &[d.code.generator()]).unwrap();
        assert_eq!(oracle::exhaustive_dual(&set).unwrap(), expected);
    }
}

#[test]
fn self_dual_generators_are_self_dual() {
    let cases = [
        (3, 1, 3, 0, 4, "2"),
        (3, 1, 1, 1, 4, "2"),
        (5, 1, 3, 0, 2, "4"),
        (2, 1, 2, 0, 3, "1"),
        (2, 1, 2, 1, 1, "1"),
        (2, 1, 2, 1, 1, "1;1"),
        (2, 1, 1, 1, 3, "1"),
    ];
    for (p, r, e, s, m, l) in cases {
        let pr = params(p, r, e, s, m, l);
        let report = codes::self_dual_exists(&pr).unwrap();
        assert_eq!(report.exists, Some(true), "{p},{e},{s},{m},{l}");
        let gens = codes::self_dual_generators(&pr).unwrap();
        assert!(!gens.is_empty());
        for g in &gens {
            assert!(codes::verify_self_dual(&pr, g).unwrap(), "{p},{e},{s},{m},{l}: {:?}", g.choice);
        }
        if let Some(count) = report.oracle_count {
            if report.method == SelfDualMethod::Criterion {
                // The theorem's family is all of them here.
                assert_eq!(count, gens.len());
            }
        }
    }
}

#[test]
fn bounded_listing_is_a_prefix() {
    let pr = params(3, 1, 1, 1, 8, "2");
    let all = codes::self_dual_generators(&pr).unwrap();
    assert_eq!(BigUint::from(all.len()), codes::self_dual_family_size(&pr).unwrap());
    for k in [0, 1, 3, all.len(), all.len() + 5] {
        let first = codes::self_dual_generators_first(&pr, k).unwrap();
        assert_eq!(first[..], all[..k.min(all.len())]);
    }
}

#[test]
fn criterion_agrees_with_search_where_both_run() {
    for (p, e, s, m, l) in [(3, 1, 1, 2, "2"), (3, 1, 1, 2, "1"), (3, 3, 0, 2, "2"), (5, 3, 0, 2, "4"), (5, 1, 0, 4, "4")] {
        let report = codes::self_dual_exists(&params(p, 1, e, s, m, l)).unwrap();
        assert_eq!(report.method, SelfDualMethod::Criterion);
        assert!(report.hypotheses_vacuous);
        assert_eq!(report.oracle, report.criterion, "{p},{e},{s},{m},{l}");
    }
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

#[test]
fn towers_against_closures() {
    for (p, e, s, m) in [(2, 2, 1, 1), (2, 3, 1, 1), (3, 2, 1, 1), (2, 2, 0, 3)] {
        let pr = params(p, 1, e, s, m, "1");
        let amb = pr.ambient().unwrap();
        let divs = monic_divisors(&pr);
        let mut towers: Vec<Vec<FieldPoly>> = vec![vec![]];
        for _ in 0..e {
            towers = towers
                .iter()
                .flat_map(|t| {
                    divs.iter().map(move |d| {
                        let mut t = t.clone();
                        t.push(d.clone());
                        t
                    })
                })
                .collect();
        }
        let mut chain_codes = BTreeSet::new();
        let mut chains = 0;
        for t in towers {
            let Ok(tc) = codes::tower_code(&pr, &t) else { continue };
            let set = oracle::close_ideal(&amb, &tc.generators()).unwrap();
            let canonical = tc.canonical();
            assert!(canonical.is_chain());
            assert_eq!(oracle::close_ideal(&amb, &canonical.generators()).unwrap(), set);
            if tc.is_chain() {
                let card = codes::tower_cardinality(&tc).unwrap();
                assert_eq!(card, BigUint::from(set.len()));
                chain_codes.insert(set.codes().to_vec());
                chains += 1;
            } else {
                assert_eq!(codes::tower_cardinality(&tc), None);
            }
        }
        // Distinct chains give distinct codes.
        assert_eq!(chain_codes.len(), chains, "p={p} e={e} s={s} m={m}");
    }
}

#[test]
fn towers_alias_under_the_weaker_condition() {
    let pr = params(2, 1, 3, 1, 1, "1");
    let f = pr.ring().field().clone();
    let x1 = FieldPoly::from_ints(&f, &[1, 1]);
    let x1sq = x1.pow(2, &f);
    let a = codes::tower_code(&pr, &[x1sq.clone(), x1.clone(), x1sq.clone()]).unwrap();
    let b = codes::tower_code(&pr, &[x1sq, x1.clone(), x1]).unwrap();
    assert!(!a.is_chain() && b.is_chain());
    assert_ne!(a.tower(), b.tower());
    assert!(codes::same_tower_code(&a, &b).unwrap());
    let amb = pr.ambient().unwrap();
    assert_eq!(
        oracle::close_ideal(&amb, &a.generators()).unwrap(),
        oracle::close_ideal(&amb, &b.generators()).unwrap()
    );
}

#[test]
fn equivalence_maps_towers_to_towers() {
    let pr = params(3, 1, 2, 1, 1, "2");
    let cyclic = params(3, 1, 2, 1, 1, "1");
    let d = codes::equivalent_to_cyclic(&pr).unwrap();
    let map = codes::EquivalenceMap::new(&pr, d.delta0.unwrap()).unwrap();
    let f = pr.ring().field().clone();
    let x1 = FieldPoly::from_ints(&f, &[2, 1]);
    let t = codes::tower_code(&cyclic, &[x1.pow(2, &f), x1.clone()]).unwrap();
    let image = map.apply_tower(&pr, &t).unwrap();
    let target = pr.ambient().unwrap();
    let source = oracle::close_ideal(&cyclic.ambient().unwrap(), &t.generators()).unwrap();
    let mapped = oracle::map_set(&source, &target, |w| map.apply_word(w)).unwrap();
    assert_eq!(oracle::close_ideal(&target, &image.generators()).unwrap(), mapped);
    let rc = pr.ring().clone();
    let g = RingPoly::parse(&rc, "1,1").unwrap();
    assert_eq!(
        map.apply_poly(&g).to_word(pr.n(), pr.lambda(), &rc),
        map.apply_word(&g.to_word(pr.n(), &rc.one(), &rc))
    );
}
