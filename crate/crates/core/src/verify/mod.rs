//! Reproducible check suites with machine-readable reports.

mod gp;
mod lemma;
mod sds;
mod structure;
mod tts;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

pub use gp::{table_rows, TableRow};
pub use sds::{parity_case_words, ParityCase};
pub use structure::apollonian_orbit_size;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Lemma,
    Tts,
    Sds,
    Structure,
    Gp,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [Suite::Lemma, Suite::Tts, Suite::Sds, Suite::Structure, Suite::Gp];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma => "lemma",
            Suite::Tts => "tts",
            Suite::Sds => "sds",
            Suite::Structure => "structure",
            Suite::Gp => "gp",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    /// Upper limit on disk counts; each family of checks also has its own cap.
    pub max_n: usize,
    /// Random pairs per disk count for the sampled solver checks.
    pub samples: usize,
    pub seed: u64,
}

impl Default for Params {
    fn default() -> Params {
        Params { max_n: 8, samples: 1000, seed: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Observed value kept as evidence; never fails the suite.
    Recorded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub expected: String,
    pub observed: String,
    pub status: Status,
    pub ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub recorded: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub params: Params,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl VerifyReport {
    fn new(suite: Suite, params: Params, mut checks: Vec<Check>) -> VerifyReport {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
        let (passed, failed, recorded) = (count(Status::Pass), count(Status::Fail), count(Status::Recorded));
        let summary = Summary { total: checks.len(), passed, failed, recorded, ok: failed == 0 };
        VerifyReport { suite, params, checks, summary }
    }

    pub fn ok(&self) -> bool {
        self.summary.ok
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (max-n {}, samples {}, seed {})", self.suite, self.params.max_n, self.params.samples, self.params.seed)?;
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Recorded => "NOTE",
            };
            write!(f, "{tag} {} expected={} observed={}", c.id, c.expected, c.observed)?;
            if let Some(ms) = c.ms {
                write!(f, " ({ms} ms)")?;
            }
            writeln!(f)?;
        }
        let s = &self.summary;
        write!(
            f,
            "{} checks: {} passed, {} failed, {} recorded: {}",
            s.total,
            s.passed,
            s.failed,
            s.recorded,
            if s.ok { "OK" } else { "FAILED" }
        )
    }
}

/// What one check found.
pub(crate) struct Outcome {
    expected: String,
    observed: String,
    status: Status,
}

impl Outcome {
    pub(crate) fn eq<T: PartialEq + fmt::Display>(expected: T, observed: T) -> Outcome {
        let status = if expected == observed { Status::Pass } else { Status::Fail };
        Outcome { expected: expected.to_string(), observed: observed.to_string(), status }
    }

    /// A claim described by `expected` that holds iff `ok`.
    pub(crate) fn holds(expected: impl fmt::Display, observed: impl fmt::Display, ok: bool) -> Outcome {
        let status = if ok { Status::Pass } else { Status::Fail };
        Outcome { expected: expected.to_string(), observed: observed.to_string(), status }
    }

    pub(crate) fn recorded(expected: impl fmt::Display, observed: impl fmt::Display) -> Outcome {
        Outcome { expected: expected.to_string(), observed: observed.to_string(), status: Status::Recorded }
    }
}

pub(crate) struct Recorder {
    params: Params,
    timings: bool,
    checks: Vec<Check>,
    streams: u64,
}

impl Recorder {
    fn new(params: Params, timings: bool) -> Recorder {
        Recorder { params, timings, checks: Vec::new(), streams: 0 }
    }

    pub(crate) fn params(&self) -> Params {
        self.params
    }

    /// A generator seeded from the report seed, on a stream of its own.
    pub(crate) fn rng(&mut self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.params.seed);
        rng.set_stream(self.streams);
        self.streams += 1;
        rng
    }

    pub(crate) fn check(&mut self, id: impl Into<String>, run: impl FnOnce() -> Result<Outcome>) {
        let start = Instant::now();
        let outcome = run().unwrap_or_else(|e| Outcome { expected: "no error".into(), observed: e.to_string(), status: Status::Fail });
        let ms = self.timings.then(|| start.elapsed().as_millis() as u64);
        self.checks.push(Check { id: id.into(), expected: outcome.expected, observed: outcome.observed, status: outcome.status, ms });
    }
}

pub fn run_suite(suite: Suite, params: Params) -> Result<VerifyReport> {
    run_suite_with(suite, params, false)
}

/// Runs a suite; `timings` fills in per-check wall-clock milliseconds.
pub fn run_suite_with(suite: Suite, params: Params, timings: bool) -> Result<VerifyReport> {
    if params.max_n == 0 {
        return Err(Error::InvalidArgument("--max-n must be at least 1".into()));
    }
    let mut rec = Recorder::new(params, timings);
    let parts: &[Suite] = if suite == Suite::All { &Suite::EACH } else { std::slice::from_ref(&suite) };
    for part in parts {
        match part {
            Suite::Lemma => lemma::run(&mut rec),
            Suite::Tts => tts::run(&mut rec),
            Suite::Sds => sds::run(&mut rec),
            Suite::Structure => structure::run(&mut rec),
            Suite::Gp => gp::run(&mut rec),
            Suite::All => unreachable!(),
        }
    }
    Ok(VerifyReport::new(suite, params, rec.checks))
}

pub fn verify_lemma_classic(max_n: usize) -> Result<VerifyReport> {
    run_suite(Suite::Lemma, Params { max_n, ..Params::default() })
}

pub fn verify_tts(max_n: usize) -> Result<VerifyReport> {
    run_suite(Suite::Tts, Params { max_n, ..Params::default() })
}

pub fn verify_sds(max_n: usize) -> Result<VerifyReport> {
    run_suite(Suite::Sds, Params { max_n, ..Params::default() })
}

pub fn verify_structure(max_n: usize) -> Result<VerifyReport> {
    run_suite(Suite::Structure, Params { max_n, ..Params::default() })
}

pub fn verify_gp(max_n: usize, samples: usize, seed: u64) -> Result<VerifyReport> {
    run_suite(Suite::Gp, Params { max_n, samples, seed })
}

/// `n` zero-padded so that ids sort numerically.
pub(crate) fn nid(n: usize) -> String {
    format!("n{n:02}")
}
