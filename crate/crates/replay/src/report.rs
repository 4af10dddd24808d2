//! The elimination report and its versioned JSON document.

use dnull_sym::{Polynomial, Rational};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::assignment::AssignmentCertificate;
use crate::checkpoint::{Checkpoint, Expected, SideCondition, Status};
use crate::config::ReplayConfig;
use crate::eliminate::{CrossCheck, Verdict};
use crate::master::SignAudit;

pub const REPORT_FORMAT: &str = "dnull-elimination-report";
pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone)]
pub struct EliminationReport {
    pub config: ReplayConfig,
    pub assignment: Option<AssignmentCertificate>,
    pub sign_audit: Vec<SignAudit>,
    pub checkpoints: Vec<Checkpoint>,
    pub curve9: Polynomial,
    pub curve12: Polynomial,
    pub reduced9: Polynomial,
    pub reduced12: Polynomial,
    /// Factors divided out before the resultant, with the multiplicities
    /// removed from each curve.
    pub removed_factors: Vec<(Polynomial, u32, u32)>,
    pub final_resultant: Polynomial,
    pub side_conditions: Vec<SideCondition>,
    pub verdict: Verdict,
    pub cross_checks: Vec<CrossCheck>,
}

impl EliminationReport {
    pub fn checkpoint(&self, id: &str) -> Option<&Checkpoint> {
        self.checkpoints.iter().find(|c| c.id == id)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Checkpoint> {
        self.checkpoints
            .iter()
            .filter(|c| c.status == Status::Mismatch)
    }

    /// Distinct side-condition expressions in first-recorded order.
    pub fn distinct_side_conditions(&self) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = Vec::new();
        for s in &self.side_conditions {
            if !out.contains(&s.expr) {
                out.push(s.expr.clone());
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let keep = self.config.keep_intermediates;
        let checkpoints: Vec<Value> = self
            .checkpoints
            .iter()
            .map(|c| checkpoint_json(c, keep))
            .collect();
        let side: Vec<Value> = self
            .side_conditions
            .iter()
            .map(|s| json!({ "expr": s.expr.to_string(), "origin": s.origin, "reason": s.reason }))
            .collect();
        let removed: Vec<Value> = self
            .removed_factors
            .iter()
            .map(|(p, a, b)| json!({ "factor": p.to_string(), "from-nine": a, "from-twelve": b }))
            .collect();
        let vars = ["H", "beta", "a"];
        json!({
            "format": REPORT_FORMAT,
            "version": REPORT_VERSION,
            "config": serde_json::to_value(&self.config).expect("plain data"),
            "assignment": self.assignment.as_ref().map(|a| serde_json::to_value(a).expect("plain data")),
            "sign-audit": serde_json::to_value(&self.sign_audit).expect("plain data"),
            "checkpoints": checkpoints,
            "curves": {
                "nine": poly_summary(&self.curve9, &vars, keep),
                "twelve": poly_summary(&self.curve12, &vars, keep),
                "nine-reduced": poly_summary(&self.reduced9, &vars, keep),
                "twelve-reduced": poly_summary(&self.reduced12, &vars, keep),
                "removed-factors": removed,
            },
            "final-resultant": poly_summary(&self.final_resultant, &vars, keep),
            "side-conditions": side,
            "cross-checks": serde_json::to_value(&self.cross_checks).expect("plain data"),
            "verdict": serde_json::to_value(self.verdict).expect("plain data"),
        })
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        s.push('\n');
        s
    }

    /// Plain-text rendering: one line per checkpoint, then the verdict.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "replay n = {}  reading = {:?}\n",
            self.config.n, self.config.reading
        ));
        for c in &self.checkpoints {
            let unit = c
                .unit
                .as_ref()
                .map(|u| format!("  unit {u}"))
                .unwrap_or_default();
            out.push_str(&format!(
                "{:<34} {:<16}{}\n",
                c.id,
                status_name(c.status),
                unit
            ));
            if c.status == Status::Mismatch || c.status == Status::Failed {
                out.push_str(&format!(
                    "    derived:  {}\n    expected: {}\n",
                    c.derived,
                    c.expected_text()
                ));
            }
        }
        out.push_str("side conditions (nonzero):\n");
        for p in self.distinct_side_conditions() {
            out.push_str(&format!("    {p}\n"));
        }
        let r = &self.final_resultant;
        out.push_str(&format!(
            "final resultant: {} terms, degree {} in H\n",
            r.len(),
            r.degree_in(0).unwrap_or(0)
        ));
        if self.config.keep_intermediates {
            out.push_str(&format!("    {r}\n"));
        }
        out.push_str(&format!("verdict: {}\n", verdict_name(self.verdict)));
        out
    }
}

pub fn status_name(s: Status) -> &'static str {
    match s {
        Status::ExactMatch => "exact-match",
        Status::MatchUpToUnit => "match-up-to-unit",
        Status::StructuralOnly => "structural-only",
        Status::Mismatch => "mismatch",
        Status::Failed => "failed",
    }
}

pub fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::HLocallyConstant => "H-locally-constant",
        Verdict::Inconclusive => "inconclusive",
    }
}

fn checkpoint_json(c: &Checkpoint, keep: bool) -> Value {
    let mut m = Map::new();
    m.insert("id".into(), json!(c.id));
    m.insert("title".into(), json!(c.title));
    m.insert("status".into(), json!(status_name(c.status)));
    m.insert(
        "unit".into(),
        c.unit
            .as_ref()
            .map(Rational::to_string)
            .map_or(Value::Null, Value::from),
    );
    if let Expected::Predicate(p) = &c.expected {
        m.insert("predicate".into(), json!(p));
    }
    if let Some(note) = &c.note {
        m.insert("note".into(), json!(note));
    }
    let show = keep || matches!(c.status, Status::Mismatch | Status::Failed);
    if show {
        m.insert("derived".into(), json!(c.derived.to_string()));
        m.insert("expected".into(), json!(c.expected_text()));
    }
    Value::Object(m)
}

/// Size, degrees and a digest of the canonical text; the text itself when kept.
pub fn poly_summary(p: &Polynomial, vars: &[&str], keep: bool) -> Value {
    let text = p.to_string();
    let digest = Sha256::digest(text.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    let mut degrees = Map::new();
    for v in vars {
        if let Ok(Some(d)) = p.degree_in_name(v) {
            degrees.insert((*v).into(), json!(d));
        } else if p.ring().contains(v) {
            degrees.insert((*v).into(), json!(0));
        }
    }
    let mut m = Map::new();
    m.insert("terms".into(), json!(p.len()));
    m.insert("total-degree".into(), json!(p.total_degree().unwrap_or(0)));
    m.insert("degrees".into(), Value::Object(degrees));
    m.insert("max-coeff-bits".into(), json!(p.max_coeff_bits()));
    m.insert("sha256".into(), json!(hex));
    if keep {
        m.insert("text".into(), json!(text));
    }
    Value::Object(m)
}
