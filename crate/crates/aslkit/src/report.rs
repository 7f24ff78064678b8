//! Machine-readable verification reports shared by the suites and the CLI.

use serde::Serialize;

/// Outcome of one verification suite run. The counts always satisfy
/// passed + |failures| + |inconclusive| = instances.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub instances: usize,
    pub passed: usize,
    pub failures: Vec<Failure>,
    pub inconclusive: Vec<String>,
    pub config: Config,
}

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub instance: String,
    pub expected: String,
    pub got: String,
}

/// Echo of every knob that influenced the run, for reproducibility.
#[derive(Debug, Clone, Serialize, Default)]
pub struct Config {
    pub caps: Vec<(String, String)>,
    pub field: String,
    pub seed: Option<u64>,
}

impl VerificationReport {
    pub fn new(suite: &str, config: Config) -> VerificationReport {
        VerificationReport {
            suite: suite.to_string(),
            instances: 0,
            passed: 0,
            failures: Vec::new(),
            inconclusive: Vec::new(),
            config,
        }
    }

    pub fn pass(&mut self) {
        self.instances += 1;
        self.passed += 1;
    }

    pub fn fail(&mut self, instance: &str, expected: &str, got: &str) {
        self.instances += 1;
        self.failures.push(Failure {
            instance: instance.to_string(),
            expected: expected.to_string(),
            got: got.to_string(),
        });
    }

    pub fn inconclusive(&mut self, instance: &str) {
        self.instances += 1;
        self.inconclusive.push(instance.to_string());
    }

    /// Record a boolean check as one instance.
    pub fn check(&mut self, instance: &str, expected: &str, got: &str, ok: bool) {
        if ok {
            self.pass();
        } else {
            self.fail(instance, expected, got);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failures.is_empty() && self.inconclusive.is_empty()
    }

    /// 0 all pass; 1 counterexample found; 2 inconclusive only.
    pub fn exit_code(&self) -> i32 {
        if !self.failures.is_empty() {
            1
        } else if !self.inconclusive.is_empty() {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn summary(&self) -> String {
        let mut s = format!(
            "suite {}: {} instances, {} passed, {} failed, {} inconclusive\n",
            self.suite,
            self.instances,
            self.passed,
            self.failures.len(),
            self.inconclusive.len()
        );
        for f in &self.failures {
            s.push_str(&format!(
                "  FAIL {} (expected {}, got {})\n",
                f.instance, f.expected, f.got
            ));
        }
        for i in &self.inconclusive {
            s.push_str(&format!("  INCONCLUSIVE {}\n", i));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_exit_codes() {
        let mut r = VerificationReport::new("demo", Config::default());
        r.pass();
        assert_eq!(r.exit_code(), 0);
        r.inconclusive("cap hit");
        assert_eq!(r.exit_code(), 2);
        r.fail("bad", "true", "false");
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.instances, 3);
        assert_eq!(r.passed + r.failures.len() + r.inconclusive.len(), r.instances);
    }

    #[test]
    fn json_has_config_echo() {
        let mut cfg = Config::default();
        cfg.field = "q".into();
        cfg.caps.push(("max_p".into(), "5".into()));
        let r = VerificationReport::new("demo", cfg);
        let json = r.to_json();
        assert!(json.contains("\"suite\": \"demo\""));
        assert!(json.contains("max_p"));
    }
}
