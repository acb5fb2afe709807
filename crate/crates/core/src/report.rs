//! Verification reports and their JSON / CSV / text renderings.
//!
//! JSON layout: `{"subject": .., "checks": [{name, residual, tolerance, pass}], "computed": {..}}`.
//! CSV layout: header `check,residual,tolerance,pass`, one row per check in
//! report order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    /// Passes iff `residual < tolerance`. Non-finite residuals are stored as
    /// `f64::MAX` and fail.
    pub fn new(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        let residual = if residual.is_finite() { residual } else { f64::MAX };
        Self {
            name: name.into(),
            residual,
            tolerance,
            pass: residual < tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub subject: String,
    pub checks: Vec<Check>,
    pub computed: BTreeMap<String, Value>,
}

/// Decimal rendering with 17 significant digits.
pub fn decimal(x: f64) -> String {
    format!("{x:.16e}")
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        Self {
            subject: subject.into(),
            checks: Vec::new(),
            computed: BTreeMap::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn set(&mut self, key: impl Into<String>, value: Value) {
        self.computed.insert(key.into(), value);
    }

    /// Records a scalar with its decimal form and, when known, its closed form.
    pub fn set_scalar(&mut self, key: impl Into<String>, value: f64, symbolic: Option<&str>) {
        let mut entry = json!({ "value": value, "decimal": decimal(value) });
        if let Some(s) = symbolic {
            entry["symbolic"] = Value::String(s.to_string());
        }
        self.computed.insert(key.into(), entry);
    }

    pub fn set_list(&mut self, key: impl Into<String>, values: &[f64]) {
        self.computed.insert(
            key.into(),
            json!({
                "values": values,
                "decimals": values.iter().map(|&v| decimal(v)).collect::<Vec<_>>(),
            }),
        );
    }

    pub fn scalar(&self, key: &str) -> Option<f64> {
        self.computed.get(key)?.get("value")?.as_f64()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("check,residual,tolerance,pass\n");
        for c in &self.checks {
            let _ = writeln!(out, "{},{:e},{:e},{}", c.name, c.residual, c.tolerance, c.pass);
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "subject: {}", self.subject);
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
        for c in &self.checks {
            let _ = writeln!(
                out,
                "  [{}] {:<width$}  residual {:>10.3e}  tol {:>8.1e}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.residual,
                c.tolerance,
            );
        }
        for (k, v) in &self.computed {
            let rendered = match v.get("decimal").or_else(|| v.get("decimals")) {
                Some(d) => {
                    let sym = v.get("symbolic").and_then(Value::as_str).map(|s| format!("  ({s})")).unwrap_or_default();
                    format!("{}{sym}", d)
                }
                None => v.to_string(),
            };
            let _ = writeln!(out, "  {k} = {rendered}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_iff_residual_below_tolerance() {
        assert!(Check::new("a", 1e-9, 1e-8).pass);
        assert!(!Check::new("a", 1e-8, 1e-8).pass);
        let nan = Check::new("a", f64::NAN, 1.0);
        assert!(!nan.pass);
        assert_eq!(nan.residual, f64::MAX);
    }

    #[test]
    fn csv_header_and_rows() {
        let mut r = VerificationReport::new("x");
        r.push(Check::new("bitension", 1e-12, 1e-8));
        let csv = r.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("check,residual,tolerance,pass"));
        assert_eq!(lines.next(), Some("bitension,1e-12,1e-8,true"));
    }

    #[test]
    fn decimal_has_seventeen_digits() {
        let d = decimal(2.0 / 3.0);
        assert_eq!(d, "6.6666666666666663e-1");
    }
}
