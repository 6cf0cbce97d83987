//! Uniform machine-readable reports over every verification.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::asymptotics::{derive_recursion_oracle, verify_coincidence};
use crate::error::Result;
use crate::families::{verify_centralizer, verify_equivariance, verify_parity, verify_uniqueness};
use crate::geometry::verify_geometry;
use crate::lie::LieAlgebraContext;
use crate::minkowski::verify_special_values;
use crate::pbw::{lemmas, EnvelopingAlgebra};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Brackets,
    Equivariance,
    Uniqueness,
    Parity,
    Centralizer,
    SpecialValues,
    Residue,
    Geometry,
    Lemmas,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Brackets,
        Suite::Equivariance,
        Suite::Uniqueness,
        Suite::Parity,
        Suite::Centralizer,
        Suite::SpecialValues,
        Suite::Residue,
        Suite::Geometry,
        Suite::Lemmas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Brackets => "brackets",
            Suite::Equivariance => "equivariance",
            Suite::Uniqueness => "uniqueness",
            Suite::Parity => "parity",
            Suite::Centralizer => "centralizer",
            Suite::SpecialValues => "special-values",
            Suite::Residue => "residue",
            Suite::Geometry => "geometry",
            Suite::Lemmas => "lemmas",
        }
    }

    /// Whether the suite is indexed by an order `N` as well as by `n`.
    pub fn uses_order(self) -> bool {
        !matches!(self, Suite::Brackets | Suite::Geometry | Suite::Lemmas | Suite::Centralizer)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub n: usize,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    /// Nonzero residues or counterexamples; empty on pass.
    pub residues: Vec<Value>,
    pub details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn sort_key(&self) -> (String, usize, Option<u32>) {
        (self.check.clone(), self.n, self.order)
    }
}

/// Parameters of one verification cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cell {
    pub suite: Suite,
    pub n: usize,
    pub order: Option<u32>,
    /// Degree bound for the centralizer and bound on powers for the lemmas.
    pub max_degree: u32,
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

struct Outcome {
    pass: bool,
    residues: Vec<Value>,
    details: Value,
}

fn outcome<T: Serialize>(pass: bool, residues: Vec<Value>, details: &T) -> Outcome {
    Outcome { pass, residues, details: to_value(details) }
}

fn evaluate(cell: &Cell) -> Result<Outcome> {
    let n = cell.n;
    let order = cell.order.unwrap_or(0);
    Ok(match cell.suite {
        Suite::Brackets => {
            let ctx = LieAlgebraContext::new(n)?;
            let table = ctx.verify_bracket_table();
            let structure = ctx.structure_violations();
            let failed: Vec<Value> =
                table.iter().filter(|c| !c.pass).map(|c| json!(c.relation)).collect();
            let details = json!({
                "dimension": ctx.dim(),
                "relations": table.len(),
                "structure": structure,
            });
            let pass = failed.is_empty() && structure.is_empty() && ctx.dim() == n * (n + 1) / 2;
            Outcome { pass, residues: failed, details }
        }
        Suite::Equivariance => {
            let r = verify_equivariance(n, order)?;
            outcome(r.pass(), r.residues.iter().map(to_value).collect(), &r)
        }
        Suite::Uniqueness => {
            let r = verify_uniqueness(n, order)?;
            outcome(r.pass(), Vec::new(), &r)
        }
        Suite::Parity => {
            let r = verify_parity(n, order)?;
            let failed = r.iter().filter(|c| !c.pass).map(to_value).collect();
            outcome(r.iter().all(|c| c.pass), failed, &r)
        }
        Suite::Centralizer => {
            let r = verify_centralizer(n, cell.max_degree)?;
            outcome(r.pass(), Vec::new(), &r)
        }
        Suite::SpecialValues => {
            let r = verify_special_values(n, order)?;
            let failed = r.iter().filter(|c| !c.pass()).map(to_value).collect();
            outcome(r.iter().all(|c| c.pass()), failed, &r)
        }
        Suite::Residue => {
            let coincidence = verify_coincidence(n, order)?;
            let (_, oracle) = derive_recursion_oracle(n, (order as usize / 2).max(1))?;
            let details = json!({ "coincidence": coincidence, "oracle": oracle });
            outcome(coincidence.pass() && oracle.pass(), Vec::new(), &details)
        }
        Suite::Geometry => {
            let r = verify_geometry(n, 100)?;
            outcome(r.pass(), Vec::new(), &r)
        }
        Suite::Lemmas => {
            let alg = EnvelopingAlgebra::new(n + 1)?;
            let mut checks = lemmas::y_powers(&alg, cell.max_degree)?;
            checks.extend(lemmas::delta_powers(&alg, cell.max_degree)?);
            let failed = checks.iter().filter(|c| !c.pass).map(to_value).collect();
            outcome(checks.iter().all(|c| c.pass), failed, &checks)
        }
    })
}

/// Runs one cell; errors become reports with status `error`.
pub fn run(cell: &Cell) -> Report {
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), json!(cell.n));
    if let Some(order) = cell.order {
        params.insert("N".to_string(), json!(order));
    }
    if matches!(cell.suite, Suite::Centralizer | Suite::Lemmas) {
        params.insert("max_degree".to_string(), json!(cell.max_degree));
    }
    if cell.suite == Suite::SpecialValues {
        params.insert("family_order".to_string(), json!(2 * cell.order.unwrap_or(0)));
    }
    let (status, residues, details) = match evaluate(cell) {
        Ok(o) => (if o.pass { Status::Pass } else { Status::Fail }, o.residues, o.details),
        Err(e) => (Status::Error, vec![json!(e.to_string())], Value::Null),
    };
    Report {
        check: cell.suite.name().to_string(),
        n: cell.n,
        order: cell.order,
        params,
        status,
        residues,
        details,
        timing_ms: None,
    }
}

/// The full document written by the command line tool.
pub fn document(reports: &[Report], note: Option<&str>) -> Value {
    let passed = reports.iter().filter(|r| r.passed()).count();
    let mut doc = json!({
        "schema": SCHEMA_VERSION,
        "status": if passed == reports.len() { "pass" } else { "fail" },
        "total": reports.len(),
        "passed": passed,
        "reports": reports,
    });
    if let Some(note) = note {
        doc["note"] = json!(note);
    }
    doc
}
