//! Report documents with expected-versus-computed checks, and the table of
//! published reference values the checks are compared against.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::field::FieldRecord;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// A published table or stated value.
    Reference,
    /// A closed-form count or parameter evaluated at this q.
    Formula,
    /// Follows from definitions alone.
    Definition,
    /// Another enumeration route computed in the same run.
    Independent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub claim: String,
    pub expected: String,
    pub basis: Basis,
    /// The expression behind a `Formula` expectation.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub formula: Option<String>,
    pub computed: String,
    pub pass: bool,
}

impl Check {
    pub fn new(claim: impl Into<String>, basis: Basis, expected: impl ToString, computed: impl ToString) -> Check {
        let expected = expected.to_string();
        let computed = computed.to_string();
        Check { claim: claim.into(), pass: expected == computed, expected, basis, formula: None, computed }
    }

    pub fn with_formula(mut self, formula: impl Into<String>) -> Check {
        self.formula = Some(formula.into());
        self
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub field: FieldRecord,
    pub command: String,
    pub checks: Vec<Check>,
    /// Command-specific results.
    pub data: BTreeMap<String, serde_json::Value>,
    pub timings_ms: BTreeMap<String, u64>,
}

impl ReportDocument {
    pub fn new(field: FieldRecord, command: impl Into<String>) -> ReportDocument {
        ReportDocument {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            field,
            command: command.into(),
            checks: Vec::new(),
            data: BTreeMap::new(),
            timings_ms: BTreeMap::new(),
        }
    }

    pub fn check(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn put(&mut self, key: &str, value: impl Serialize) {
        self.data.insert(key.to_string(), serde_json::to_value(value).expect("report values serialize"));
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per check.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("claim,basis,expected,computed,pass\n");
        for c in &self.checks {
            let basis = serde_json::to_value(c.basis).expect("basis serializes");
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                csv_field(&c.claim),
                basis.as_str().unwrap_or_default(),
                csv_field(&c.expected),
                csv_field(&c.computed),
                c.pass
            );
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} (m={}, poly={:#x})\n", self.command, self.field.m, self.field.reduction_poly);
        for (k, v) in &self.data {
            let _ = writeln!(out, "  {k}: {v}");
        }
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "  [{tag}] {}: expected {} computed {}", c.claim, c.expected, c.computed);
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Published weight distributions as `(weight, count)` pairs; weights not
/// listed have count zero.
pub mod reference {
    pub const DUAL_Q16: &[(usize, u64)] = &[
        (0, 1),
        (11, 12240),
        (12, 35700),
        (13, 244800),
        (14, 1203600),
        (15, 3292560),
        (16, 6398715),
        (17, 5589600),
    ];

    pub const PRIMAL_Q16: &[(usize, u64)] = &[
        (0, 1),
        (5, 1020),
        (7, 224400),
        (8, 3730650),
        (9, 55370700),
        (10, 669519840),
        (11, 6378704640),
        (12, 47857084200),
        (13, 276083558100),
        (14, 1183224112800),
        (15, 3549668972400),
        (16, 6655630071165),
        (17, 5872614694500),
    ];

    pub const DUAL_Q32: &[(usize, u64)] = &[
        (0, 1),
        (27, 1014816),
        (28, 1268520),
        (29, 20296320),
        (30, 64609952),
        (31, 210132384),
        (32, 399584823),
        (33, 376835008),
    ];

    /// Published design parameters `(q, t, k, lambda)`.
    pub const DESIGNS: &[(u64, usize, usize, u64)] = &[(16, 3, 5, 1), (16, 3, 11, 198), (32, 4, 6, 12), (32, 4, 27, 14040)];

    pub fn dual_distribution(q: u64) -> Option<&'static [(usize, u64)]> {
        match q {
            16 => Some(DUAL_Q16),
            32 => Some(DUAL_Q32),
            _ => None,
        }
    }

    pub fn primal_distribution(q: u64) -> Option<&'static [(usize, u64)]> {
        (q == 16).then_some(PRIMAL_Q16)
    }

    pub fn design_lambda(q: u64, t: usize, k: usize) -> Option<u64> {
        DESIGNS.iter().find(|d| d.0 == q && d.1 == t && d.2 == k).map(|d| d.3)
    }

    /// Dense `[A_0, .., A_n]` from a sparse table.
    pub fn dense(table: &[(usize, u64)], n: usize) -> Vec<u64> {
        let mut out = vec![0; n + 1];
        for &(w, c) in table {
            out[w] = c;
        }
        out
    }
}
