//! JSON renderings for `--json` output.

use lpa_core::{Field, Report, RingElement, SkewRing};
use serde_json::{json, Value};

pub fn report(r: &Report) -> Value {
    json!({
        "name": r.name,
        "passed": r.passed(),
        "checks": r.checks,
        "failed": r.failed,
        "witnesses": r.witnesses,
        "notes": r.notes,
    })
}

/// The printed normal form plus one entry per degree.
pub fn element<F: Field>(ring: &SkewRing<'_, F>, x: &RingElement<F::Elem>) -> Value {
    let graph = ring.graph();
    let terms: Vec<Value> = x
        .terms()
        .map(|(s, f)| {
            json!({
                "degree": s.display(graph).to_string(),
                "coefficient": ring.space().display(f).to_string(),
            })
        })
        .collect();
    json!({ "expr": ring.to_expr(x).to_string(), "terms": terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{fixture, E1};
    use lpa_core::Rationals;

    #[test]
    fn element_shape() {
        let g = fixture(E1);
        let ring = SkewRing::new(&g, Rationals);
        let x = ring.generator_named("e1", false).unwrap();
        let v = element(&ring, &x);
        assert_eq!(v["expr"], "e1");
        assert_eq!(v["terms"][0]["degree"], "e1");
        assert_eq!(v["terms"][0]["coefficient"], "1*1_[v1]");
    }

    #[test]
    fn report_shape() {
        let mut r = Report::new("demo");
        r.check(false, || "bad".into());
        let v = report(&r);
        assert_eq!(v["passed"], false);
        assert_eq!(v["witnesses"][0], "bad");
    }
}
