//! The one record schema every subcommand renders: name, inputs, value,
//! citation, rounding, status, detail. Values are exact decimal integers or
//! exact fractions; nothing is ever printed in scientific notation.

use std::collections::BTreeMap;

use jordanlab_core::bounds::BoundReport;
use jordanlab_core::verifier::Verdict;
use serde_json::{json, Value};

#[derive(Debug, Clone)]
pub struct Record {
    pub name: String,
    pub inputs: BTreeMap<String, Value>,
    pub value: String,
    pub citation: String,
    pub rounding: String,
    pub status: String,
    pub detail: Value,
    /// Text-format decoration only; never serialized.
    pub runtime_ms: Option<u128>,
}

impl Record {
    pub fn new(name: impl Into<String>) -> Self {
        Record {
            name: name.into(),
            inputs: BTreeMap::new(),
            value: String::new(),
            citation: String::new(),
            rounding: "exact".to_string(),
            status: "ok".to_string(),
            detail: Value::Null,
            runtime_ms: None,
        }
    }

    pub fn input_num(mut self, key: &str, v: u64) -> Self {
        self.inputs.insert(key.to_string(), json!(v));
        self
    }

    pub fn input_str(mut self, key: &str, v: impl Into<String>) -> Self {
        self.inputs.insert(key.to_string(), json!(v.into()));
        self
    }

    pub fn value(mut self, v: impl ToString) -> Self {
        self.value = v.to_string();
        self
    }

    pub fn citation(mut self, v: impl Into<String>) -> Self {
        self.citation = v.into();
        self
    }

    pub fn status(mut self, v: impl Into<String>) -> Self {
        self.status = v.into();
        self
    }

    pub fn detail(mut self, v: Value) -> Self {
        self.detail = v;
        self
    }

    pub fn from_report(r: &BoundReport) -> Self {
        let mut rec = Record::new(r.name);
        for (k, v) in &r.inputs {
            rec.inputs.insert(k.to_string(), json!(v));
        }
        rec.value = r.value.to_string();
        rec.citation = r.formula.to_string();
        rec.rounding = r.rounding.unwrap_or("exact").to_string();
        if !r.notes.is_empty() {
            let notes: BTreeMap<String, Value> = r
                .notes
                .iter()
                .map(|(k, v)| (k.to_string(), json!(v)))
                .collect();
            rec.detail = Value::Object(notes.into_iter().collect());
        }
        rec
    }

    pub fn from_verdict(v: &Verdict) -> Self {
        let mut rec = Record::new(v.claim_id.clone());
        for (k, val) in &v.inputs {
            rec.inputs.insert(k.clone(), json!(val));
        }
        rec.value = v.headline.clone().unwrap_or_default();
        rec.citation = citation_for_claim(&v.claim_id).to_string();
        rec.rounding = if v.claim_id.starts_with("elliptic-point-count") {
            "floor(2*sqrt(q)) computed as isqrt(4q)".to_string()
        } else {
            "exact".to_string()
        };
        rec.status = v.status.to_string();
        rec.detail = v.evidence.clone();
        rec.runtime_ms = Some(v.runtime_ms);
        rec
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "name": self.name,
            "inputs": self.inputs,
            "value": self.value,
            "citation": self.citation,
            "rounding": self.rounding,
            "status": self.status,
            "detail": self.detail,
        })
    }
}

fn citation_for_claim(claim_id: &str) -> &'static str {
    if claim_id.starts_with("coprime-orders") {
        "orders coprime to p in PGL_2(F_q) divide q^2 - 1"
    } else if claim_id.starts_with("psl2-contains") {
        "PSL_2(F_q) has an element of order (q+1)/2 (odd q) or q+1 (even q)"
    } else if claim_id.starts_with("pgl2-normal-abelian") {
        "every subgroup has a normal abelian subgroup of index <= max(q*(q^2-1), 60)"
    } else if claim_id.starts_with("pgl2-subgroup-classification") {
        "every subgroup is dihedral, A4/S4/A5, PSL_2, PGL_2, or p-group x| cyclic"
    } else if claim_id.starts_with("elliptic-point-count") {
        "|N - (q+1)| <= floor(2*sqrt(q)) for every smooth Weierstrass cubic"
    } else if claim_id.starts_with("heisenberg-witness-family") {
        "|G| = q^(n+2m+3), |Z| = q^(n+1), abelian index >= q^(m+1)"
    } else {
        ""
    }
}
