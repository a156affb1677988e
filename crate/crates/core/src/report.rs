//! Check reports: an ordered list of named identities, each either passing
//! or carrying the first counterexample found.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::exactlin::{format_rational, Rational, Vector};

/// The first basis tuple on which an identity failed, with both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
    pub lhs: Vector,
    pub rhs: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
}

/// Every tuple of `0..sizes[0] × 0..sizes[1] × …` in lexicographic order.
/// An empty `sizes` yields the single empty tuple.
pub fn index_tuples(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &s in sizes {
        let mut next = Vec::with_capacity(out.len() * s);
        for t in &out {
            for i in 0..s {
                let mut u = t.clone();
                u.push(i);
                next.push(u);
            }
        }
        out = next;
    }
    out
}

/// Labels `prefix0, prefix1, …`.
pub fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn entry(&self, name: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Whether the named entry exists and passed.
    pub fn passes(&self, name: &str) -> bool {
        self.entry(name).is_some_and(|e| e.passed)
    }

    pub fn failed_names(&self) -> Vec<&str> {
        self.entries.iter().filter(|e| !e.passed).map(|e| e.name.as_str()).collect()
    }

    pub fn push_pass(&mut self, name: impl Into<String>) {
        self.entries.push(CheckEntry { name: name.into(), passed: true, counterexample: None });
    }

    pub fn push_fail(&mut self, name: impl Into<String>, cx: Counterexample) {
        self.entries.push(CheckEntry { name: name.into(), passed: false, counterexample: Some(cx) });
    }

    /// Evaluates `sides` on every tuple drawn from `spaces` (one label set per
    /// argument position) and records the first tuple where the two sides differ.
    pub fn check<F>(&mut self, name: impl Into<String>, spaces: &[&[String]], mut sides: F)
    where
        F: FnMut(&[usize]) -> (Vector, Vector),
    {
        let sizes: Vec<usize> = spaces.iter().map(|s| s.len()).collect();
        for t in index_tuples(&sizes) {
            let (lhs, rhs) = sides(&t);
            if lhs != rhs {
                let labels = t.iter().zip(spaces).map(|(&i, s)| s[i].clone()).collect();
                self.push_fail(name, Counterexample { indices: t, labels, lhs, rhs });
                return;
            }
        }
        self.push_pass(name);
    }

    /// Runs several sub-identities under one entry name; the first failure wins.
    pub fn check_all(&mut self, name: impl Into<String>, parts: Vec<CheckReport>) {
        let name = name.into();
        for p in parts {
            if let Some(e) = p.entries.into_iter().find(|e| !e.passed) {
                self.push_fail(name, e.counterexample.expect("failed entries carry a counterexample"));
                return;
            }
        }
        self.push_pass(name);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    /// Copy with every entry name prefixed.
    pub fn prefixed(self, prefix: &str) -> CheckReport {
        CheckReport {
            entries: self
                .entries
                .into_iter()
                .map(|mut e| {
                    e.name = format!("{prefix}{}", e.name);
                    e
                })
                .collect(),
        }
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            if e.passed {
                let _ = writeln!(s, "PASS  {}", e.name);
            } else {
                let _ = writeln!(s, "FAIL  {}", e.name);
                if let Some(cx) = &e.counterexample {
                    let _ = writeln!(s, "      at ({})", cx.labels.join(", "));
                    let _ = writeln!(s, "      lhs = {}", fmt_vec(&cx.lhs));
                    let _ = writeln!(s, "      rhs = {}", fmt_vec(&cx.rhs));
                }
            }
        }
        s
    }

    /// One JSON object per line; keys are sorted by the serializer.
    pub fn render_records(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            let cx = match &e.counterexample {
                None => Value::Null,
                Some(cx) => json!({
                    "indices": cx.indices,
                    "labels": cx.labels,
                    "lhs": rational_strings(&cx.lhs),
                    "rhs": rational_strings(&cx.rhs),
                }),
            };
            let rec = json!({
                "check": e.name,
                "status": if e.passed { "pass" } else { "fail" },
                "counterexample": cx,
            });
            s.push_str(&rec.to_string());
            s.push('\n');
        }
        s
    }
}

pub(crate) fn rational_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub(crate) fn fmt_vec(v: &[Rational]) -> String {
    format!("[{}]", rational_strings(v).join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;

    #[test]
    fn first_counterexample_is_lexicographic() {
        let labels = numbered("e", 3);
        let mut r = CheckReport::new();
        r.check("sum-small", &[&labels, &labels], |t| (vec![int((t[0] + t[1]) as i64)], vec![int(((t[0] + t[1]) % 3) as i64)]));
        let e = &r.entries[0];
        assert!(!e.passed);
        let cx = e.counterexample.as_ref().unwrap();
        assert_eq!(cx.indices, vec![1, 2]);
        assert_eq!(cx.labels, vec!["e1", "e2"]);
        assert!(!r.passed());
    }

    #[test]
    fn empty_spaces_check_once() {
        let mut r = CheckReport::new();
        let mut calls = 0;
        r.check("scalar", &[], |_| {
            calls += 1;
            (vec![], vec![])
        });
        assert_eq!(calls, 1);
        assert!(r.passed());
        assert_eq!(index_tuples(&[2, 0]).len(), 0);
    }

    #[test]
    fn records_are_sorted_json_lines() {
        let mut r = CheckReport::new();
        r.push_pass("a");
        let line = r.render_records();
        assert_eq!(line, "{\"check\":\"a\",\"counterexample\":null,\"status\":\"pass\"}\n");
    }
}
