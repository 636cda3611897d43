use std::collections::BTreeMap;
use std::fmt;

use crate::linear::{is_zero_vec, Scalar};

/// Default number of violations kept per report.
pub const DEFAULT_CAP: usize = 16;

/// One failing instance of an axiom: which identity, at which basis indices,
/// and the coefficient vector of `lhs - rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    pub indices: Vec<usize>,
    pub defect: Vec<Scalar>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(usize::to_string).collect();
        let def: Vec<String> = self.defect.iter().map(Scalar::to_string).collect();
        write!(f, "{} at ({}): [{}]", self.axiom, idx.join(", "), def.join(", "))
    }
}

/// Outcome of an axiom check. `ok()` holds iff no identity failed anywhere;
/// at most `cap` violations are stored but every failure is counted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    violations: Vec<Violation>,
    failures: BTreeMap<String, usize>,
    cap: usize,
}

impl Default for AxiomReport {
    fn default() -> Self {
        AxiomReport::with_cap(DEFAULT_CAP)
    }
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cap(cap: usize) -> Self {
        AxiomReport {
            violations: Vec::new(),
            failures: BTreeMap::new(),
            cap,
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// Failure count per axiom name.
    pub fn failures(&self) -> &BTreeMap<String, usize> {
        &self.failures
    }

    /// Total number of failing instances, including those beyond the cap.
    pub fn count(&self) -> usize {
        self.failures.values().sum()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    /// Names of the identities that failed at least once.
    pub fn failed_axioms(&self) -> impl Iterator<Item = &str> {
        self.failures.keys().map(String::as_str)
    }

    /// Whether the named identity held on every instance.
    pub fn holds(&self, axiom: &str) -> bool {
        !self.failures.contains_key(axiom)
    }

    /// Records `defect` under `axiom` if it is nonzero.
    pub fn check(&mut self, axiom: &str, indices: &[usize], defect: Vec<Scalar>) {
        if is_zero_vec(&defect) {
            return;
        }
        *self.failures.entry(axiom.to_string()).or_default() += 1;
        if self.violations.len() < self.cap {
            self.violations.push(Violation {
                axiom: axiom.to_string(),
                indices: indices.to_vec(),
                defect,
            });
        }
    }

    pub fn merge(&mut self, other: AxiomReport) {
        for (k, n) in other.failures {
            *self.failures.entry(k).or_default() += n;
        }
        for v in other.violations {
            if self.violations.len() < self.cap {
                self.violations.push(v);
            }
        }
    }

    /// Same report with every axiom name written as `prefix/name`.
    pub fn prefixed(self, prefix: &str) -> AxiomReport {
        AxiomReport {
            violations: self
                .violations
                .into_iter()
                .map(|mut v| {
                    v.axiom = format!("{prefix}/{}", v.axiom);
                    v
                })
                .collect(),
            failures: self
                .failures
                .into_iter()
                .map(|(k, n)| (format!("{prefix}/{k}"), n))
                .collect(),
            cap: self.cap,
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return write!(f, "ok");
        }
        write!(f, "{} violation(s)", self.count())?;
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::int;

    #[test]
    fn zero_defects_are_not_recorded() {
        let mut r = AxiomReport::new();
        r.check("x", &[0], vec![int(0), int(0)]);
        assert!(r.ok());
        r.check("x", &[1], vec![int(0), int(2)]);
        assert!(!r.ok());
        assert!(!r.holds("x"));
        assert!(r.holds("y"));
    }

    #[test]
    fn cap_limits_storage_not_counting() {
        let mut r = AxiomReport::with_cap(2);
        for i in 0..5 {
            r.check("x", &[i], vec![int(1)]);
        }
        assert_eq!(r.violations().len(), 2);
        assert_eq!(r.count(), 5);
    }

    #[test]
    fn prefix_and_merge() {
        let mut a = AxiomReport::new();
        let mut b = AxiomReport::new();
        b.check("jacobi", &[0, 1, 2], vec![int(1)]);
        a.merge(b.prefixed("lie"));
        assert!(!a.holds("lie/jacobi"));
        assert_eq!(a.violations()[0].axiom, "lie/jacobi");
    }
}
