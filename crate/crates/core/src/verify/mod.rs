//! Seeded randomized verification suites and their reports.
//!
//! Every trial draws from its own ChaCha stream `(seed, trial)`, so a
//! report does not depend on how trials are scheduled across threads.

pub mod gen;
mod suites;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use gen::{conjugate_k1, noncommuting_k1_library, trial_rng, Gen, DEFAULT_BOUND};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    Det1,
    Det2,
    Det3,
    Det4,
    Lemma1,
    Lemma2,
    Cocycle,
    Integrability,
}

impl Theorem {
    pub const ALL: [Theorem; 8] = [
        Theorem::Det1,
        Theorem::Det2,
        Theorem::Det3,
        Theorem::Det4,
        Theorem::Lemma1,
        Theorem::Lemma2,
        Theorem::Cocycle,
        Theorem::Integrability,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Det1 => "det1",
            Theorem::Det2 => "det2",
            Theorem::Det3 => "det3",
            Theorem::Det4 => "det4",
            Theorem::Lemma1 => "lemma1",
            Theorem::Lemma2 => "lemma2",
            Theorem::Cocycle => "cocycle",
            Theorem::Integrability => "integrability",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Theorem, String> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown theorem `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Note,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Note => "NOTE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub status: Status,
    /// `None` for findings that do not belong to a single trial.
    pub trial: Option<u64>,
    pub input: String,
    pub expected: String,
    pub actual: String,
    pub note: String,
}

impl Finding {
    pub fn fail(input: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>, note: &str) -> Finding {
        Finding {
            status: Status::Fail,
            trial: None,
            input: input.into(),
            expected: expected.into(),
            actual: actual.into(),
            note: note.to_string(),
        }
    }

    pub fn note(input: impl Into<String>, note: impl Into<String>) -> Finding {
        Finding {
            status: Status::Note,
            trial: None,
            input: input.into(),
            expected: String::new(),
            actual: String::new(),
            note: note.into(),
        }
    }

    pub fn pass(input: impl Into<String>, note: impl Into<String>) -> Finding {
        Finding { status: Status::Pass, ..Finding::note(input, note) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub trials: u64,
    pub passed: u64,
    pub failures: u64,
    pub seed: u64,
    pub findings: Vec<Finding>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.failures == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<VerificationReport, serde_json::Error> {
        serde_json::from_str(s)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theorem: {}", self.theorem)?;
        writeln!(f, "seed: {}", self.seed)?;
        writeln!(f, "trials: {}", self.trials)?;
        writeln!(f, "passed: {}", self.passed)?;
        writeln!(f, "failures: {}", self.failures)?;
        for x in &self.findings {
            let trial = x.trial.map_or("-".to_string(), |t| t.to_string());
            writeln!(f, "[{}] trial {}: {}", x.status, trial, x.note)?;
            if !x.input.is_empty() {
                writeln!(f, "    input: {}", x.input)?;
            }
            if !x.expected.is_empty() || !x.actual.is_empty() {
                writeln!(f, "    expected: {}", x.expected)?;
                writeln!(f, "    actual: {}", x.actual)?;
            }
        }
        write!(f, "result: {}", if self.ok() { "PASS" } else { "FAIL" })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    /// Worker threads; `None` uses rayon's default pool.
    pub threads: Option<usize>,
    pub bound: i64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { threads: None, bound: DEFAULT_BOUND }
    }
}

pub fn run(theorem: Theorem, trials: u64, seed: u64, opts: RunOptions) -> VerificationReport {
    let work = || -> Vec<Vec<Finding>> {
        (0..trials)
            .into_par_iter()
            .map(|t| {
                let mut g = Gen::new(seed, t, opts.bound);
                let mut out = suites::trial(theorem, &mut g, t);
                for f in &mut out {
                    f.trial = Some(t);
                }
                out
            })
            .collect()
    };
    let per_trial = match opts.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(work),
        None => work(),
    };
    let failed_trials = per_trial.iter().filter(|f| f.iter().any(|x| x.status == Status::Fail)).count() as u64;
    let mut findings = suites::global(theorem, seed);
    findings.extend(per_trial.into_iter().flatten());
    let failures = findings.iter().filter(|f| f.status == Status::Fail).count() as u64;
    VerificationReport { theorem, trials, passed: trials - failed_trials, failures, seed, findings }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_small() {
        for th in Theorem::ALL {
            let r = run(th, 12, 42, RunOptions::default());
            assert!(r.ok(), "{r}");
        }
    }

    #[test]
    fn json_round_trip_and_thread_independence() {
        let a = run(Theorem::Det1, 16, 7, RunOptions { threads: Some(1), ..Default::default() });
        let b = run(Theorem::Det1, 16, 7, RunOptions { threads: Some(4), ..Default::default() });
        assert_eq!(a.to_json(), b.to_json());
        let back = VerificationReport::from_json(&a.to_json()).unwrap();
        assert_eq!(back.to_json(), a.to_json());
        assert_eq!("det4".parse::<Theorem>(), Ok(Theorem::Det4));
    }
}
