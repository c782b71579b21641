use std::collections::BTreeMap;

use rayon::prelude::*;
use torsion_maxwell::report::VerificationReport;
use torsion_maxwell::scalar::{rat, Rational};

use crate::checks;
use crate::error::CliError;
use crate::scenario::{self, Scenario};

/// Inputs shared by every check in one run.
#[derive(Clone, Debug)]
pub struct Context {
    pub seed: u64,
    /// Random cases per randomized suite.
    pub count: usize,
    pub scenarios: Vec<Scenario>,
    pub a0: Vec<Rational>,
    /// Corrupts one sign inside the randomized suites.
    pub inject_fault: bool,
}

impl Default for Context {
    fn default() -> Self {
        Self {
            seed: 1,
            count: 50,
            scenarios: scenario::bundled(),
            a0: vec![rat(0, 1), rat(1, 10), rat(-1, 4), rat(3, 7)],
            inject_fault: false,
        }
    }
}

/// A named verification routine.
pub trait Check: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn run(&self, ctx: &Context) -> VerificationReport;
}

#[derive(Default)]
pub struct CheckRegistry {
    checks: BTreeMap<&'static str, Box<dyn Check>>,
}

impl CheckRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Replaces any check registered under the same name.
    pub fn register(&mut self, check: Box<dyn Check>) {
        self.checks.insert(check.name(), check);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Check> {
        self.checks.get(name).map(|c| c.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.checks.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Check> {
        self.checks.values().map(|c| c.as_ref())
    }

    /// Runs the named checks in parallel; reports come back sorted by name.
    pub fn run(&self, names: &[&str], ctx: &Context) -> Result<Vec<VerificationReport>, CliError> {
        let selected = names
            .iter()
            .map(|n| self.get(n).ok_or_else(|| CliError::UnknownCheck(n.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let mut reports: Vec<_> = selected.par_iter().map(|c| c.run(ctx)).collect();
        reports.sort_by(|a, b| a.check.cmp(&b.check));
        Ok(reports)
    }

    pub fn run_all(&self, ctx: &Context) -> Vec<VerificationReport> {
        let names: Vec<_> = self.names().collect();
        self.run(&names, ctx).expect("registered names")
    }
}

pub fn default_registry() -> CheckRegistry {
    let mut registry = CheckRegistry::new();
    for check in checks::all() {
        registry.register(check);
    }
    registry
}

#[cfg(test)]
mod tests {
    use super::*;
    use torsion_maxwell::report::ReportBuilder;

    struct Named(&'static str, &'static str);

    impl Check for Named {
        fn name(&self) -> &'static str {
            self.0
        }
        fn summary(&self) -> &'static str {
            self.1
        }
        fn run(&self, _ctx: &Context) -> VerificationReport {
            let mut report = ReportBuilder::new(self.0, "test");
            report.note(self.1);
            report.finish()
        }
    }

    #[test]
    fn same_name_replaces_and_order_is_by_name() {
        let mut registry = CheckRegistry::new();
        registry.register(Box::new(Named("b", "first")));
        registry.register(Box::new(Named("a", "x")));
        registry.register(Box::new(Named("b", "second")));
        assert_eq!(registry.names().collect::<Vec<_>>(), ["a", "b"]);
        let reports = registry.run(&["b", "a"], &Context::default()).unwrap();
        assert_eq!(reports.iter().map(|r| r.check.as_str()).collect::<Vec<_>>(), ["a", "b"]);
        assert_eq!(reports[1].notes, ["second"]);
    }

    #[test]
    fn unknown_name_is_an_error() {
        let err = default_registry().run(&["nope"], &Context::default()).unwrap_err();
        assert!(matches!(err, CliError::UnknownCheck(_)));
    }
}
