//! JSON encodings. A field element is its digit array `[c0, …, c_{r−1}]`, a
//! ring element the array of its `e` u-parts, a polynomial the array of its
//! coefficients, constant term first.

use num_bigint::BigUint;
use rrcodes_core::codes::{CardinalityReport, PrincipalCode, SelfDualCode, TowerCode};
use rrcodes_core::{
    FieldContext, FieldElement, FieldPoly, ReciprocalSplit, RingContext, RingElement, RingPoly,
};
use serde_json::{json, Value};

pub fn field_element(f: &FieldContext, a: FieldElement) -> Value {
    json!(f.digits(a))
}

pub fn field_poly(f: &FieldContext, g: &FieldPoly) -> Value {
    Value::Array(g.coeffs().iter().map(|&c| field_element(f, c)).collect())
}

pub fn ring_element(rc: &RingContext, a: &RingElement) -> Value {
    Value::Array(
        a.parts()
            .iter()
            .map(|&c| field_element(rc.field(), c))
            .collect(),
    )
}

pub fn ring_poly(rc: &RingContext, g: &RingPoly) -> Value {
    Value::Array(g.coeffs().iter().map(|c| ring_element(rc, c)).collect())
}

/// A number when it fits in `u64`, a decimal string otherwise.
pub fn big(x: &BigUint) -> Value {
    match u64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

pub fn principal(c: &PrincipalCode) -> Value {
    let rc = c.params().ring();
    let g = c.generator();
    json!({
        "kind": "principal",
        "exponents": c.exponents(),
        "generator": ring_poly(rc, &g),
        "generator_text": g.format(rc),
    })
}

pub fn tower(c: &TowerCode) -> Value {
    let f = c.params().ring().field();
    json!({
        "kind": "tower",
        "tower": c.tower().iter().map(|g| field_poly(f, g)).collect::<Vec<_>>(),
    })
}

pub fn cardinality(report: &CardinalityReport) -> Value {
    let mut out = json!({
        "value": big(&report.value),
        "exponent": report.exponent,
    });
    if report.differs {
        out["uncorrected"] = json!({
            "exponent": report.printed_exponent,
            "value": report.printed_value.as_ref().map(big),
        });
    }
    out
}

pub fn split(f: &FieldContext, s: &ReciprocalSplit) -> Value {
    json!({
        "k": s.k(),
        "t": s.t(),
        "self_reciprocal": s.selfrec.iter().map(|g| g.format()).collect::<Vec<_>>(),
        "pairs": s.pairs.iter().map(|(h, hs)| json!([h.format(), hs.format()])).collect::<Vec<_>>(),
        "self_reciprocal_polys": s.selfrec.iter().map(|g| field_poly(f, g)).collect::<Vec<_>>(),
    })
}

pub fn self_dual_code(rc: &RingContext, c: &SelfDualCode) -> Value {
    json!({
        "choice": c.choice,
        "exponents": c.exponents,
        "generators": c.generators.iter().map(|g| ring_poly(rc, g)).collect::<Vec<_>>(),
        "generators_text": c.generators.iter().map(|g| g.format(rc)).collect::<Vec<_>>(),
    })
}
