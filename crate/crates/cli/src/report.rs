//! The single JSON object written to stdout per invocation.
//!
//! Keys are sorted (serde_json's default map is ordered), all numbers are
//! integers, and nothing depends on wall-clock time or thread scheduling.

use modp_gl2::charcycle::{CycleVector, MinimalPrime};
use modp_gl2::lattice::{Subspace, SubrepProfile};
use modp_gl2::tuples::AffineTuple;
use modp_gl2::weights::{Params, SerreWeight, ToralCharacter};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Value,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, witness: impl Into<Value>) -> Self {
        Check {
            name: name.into(),
            passed,
            witness: witness.into(),
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "status": if self.passed { "pass" } else { "fail" },
            "witness": self.witness,
        })
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    command: String,
    params: Map<String, Value>,
    results: Map<String, Value>,
    checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            params: Map::new(),
            results: Map::new(),
            checks: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.results.insert(key.to_string(), value.into());
        self
    }

    pub fn check(&mut self, check: Check) -> &mut Self {
        self.checks.push(check);
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "params": self.params,
            "results": self.results,
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn render(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.to_json()).expect("plain JSON values");
        text.push('\n');
        text
    }
}

pub fn weight(w: &SerreWeight) -> Value {
    json!({ "digits": w.digits(), "twist": w.twist() })
}

pub fn character(chi: &ToralCharacter) -> Value {
    json!([chi.a_exp(), chi.d_exp()])
}

pub fn tuple(lambda: &AffineTuple, params: &Params) -> Value {
    json!(lambda.tokens(params))
}

pub fn subspace(s: &Subspace) -> Value {
    json!({ "dim": s.dim(), "basis": s.basis() })
}

pub fn profile(prof: &SubrepProfile) -> Value {
    json!({
        "kind": prof.kind().as_str(),
        "dims": prof.dims(),
        "spaces": prof.spaces().iter().map(subspace).collect::<Vec<_>>(),
    })
}

pub fn cycle(z: &CycleVector) -> Value {
    let coeffs: Map<String, Value> = z
        .coeffs()
        .iter()
        .map(|(q, c)| (q.to_string(), json!(c)))
        .collect();
    Value::Object(coeffs)
}

pub fn prime(q: &MinimalPrime) -> Value {
    json!(q.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_check_marks_report() {
        let mut rep = Report::new("x");
        rep.check(Check::new("ok", true, Value::Null));
        assert!(rep.passed());
        rep.check(Check::new("bad", false, 3));
        assert!(!rep.passed());
        assert_eq!(rep.to_json()["checks"][1]["status"], "fail");
    }

    #[test]
    fn keys_are_sorted() {
        let mut rep = Report::new("x");
        rep.result("zeta", 1).result("alpha", 2);
        let text = rep.render();
        assert!(text.find("alpha").unwrap() < text.find("zeta").unwrap());
        assert!(text.find("\"checks\"").unwrap() < text.find("\"command\"").unwrap());
    }
}
