//! Deterministic report emission.
//!
//! Every command produces the same record: the command name, the term
//! order, invariants and basis as canonical polynomial strings, an optional
//! degree, warnings (always present, possibly empty) and the elapsed time.
//! The JSON rendering is byte-stable for a fixed input and seed except for
//! the `elapsed_ms` field; the text rendering shows the same strings plus
//! free-form detail lines.

use serde::Serialize;

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub order: String,
    pub invariants: Vec<String>,
    pub basis: Vec<String>,
    pub degree: Option<usize>,
    pub warnings: Vec<String>,
    pub elapsed_ms: u128,
    /// Extra human-readable lines; text output only.
    #[serde(skip)]
    pub detail: Vec<String>,
}

impl Report {
    pub fn new(command: &str, order: &str) -> Self {
        Report {
            command: command.into(),
            order: order.into(),
            invariants: Vec::new(),
            basis: Vec::new(),
            degree: None,
            warnings: Vec::new(),
            elapsed_ms: 0,
            detail: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("command: {}", self.command));
        line(format!("order: {}", self.order));
        for d in &self.detail {
            line(d.clone());
        }
        if !self.invariants.is_empty() {
            line("invariants:".into());
            for i in &self.invariants {
                line(format!("  {i}"));
            }
        }
        if !self.basis.is_empty() {
            line("basis:".into());
            for b in &self.basis {
                line(format!("  {b}"));
            }
        }
        if let Some(d) = self.degree {
            line(format!("degree: {d}"));
        }
        for w in &self.warnings {
            line(format!("warning: {w}"));
        }
        line(format!("elapsed_ms: {}", self.elapsed_ms));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_keeps_empty_warning_list() {
        let r = Report::new("invariants", "grevlex");
        let json = r.to_json();
        assert!(json.contains("\"warnings\": []"));
        assert!(json.contains("\"degree\": null"));
        assert!(!json.contains("detail"));
    }

    #[test]
    fn text_shows_the_same_strings() {
        let mut r = Report::new("invariants", "grevlex");
        r.invariants.push("z2/z1".into());
        r.detail.push("orbit dimension 1".into());
        let text = r.to_text();
        assert!(text.contains("command: invariants"));
        assert!(text.contains("orbit dimension 1"));
        assert!(text.contains("  z2/z1"));
        assert!(text.contains("elapsed_ms:"));
    }
}
