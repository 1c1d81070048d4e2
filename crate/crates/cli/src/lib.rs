//! Batch driver: expands a job into (statement, n or p, trial) tuples, runs
//! them across a worker pool and renders the reports.

use std::io::Write;
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use supercong::congruence::{sample_point, sample_rational, trial_rng};
use supercong::padic::{displayed_precision, integer_lift, is_odd_prime, verify_padic, HEAVY_FACTORS};
use supercong::theorems::{describe, verify_instance, Arity, Instance, StatementId, VerifyReport};

/// Sampling attempts per trial before giving up on a statement.
pub const MAX_RESAMPLES: usize = 32;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Verify(#[from] supercong::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// `None` as a list means "the statement's small defaults".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub statements: Vec<StatementId>,
    pub n_list: Option<Vec<u32>>,
    pub p_list: Option<Vec<u64>>,
    pub trials: u64,
    pub seed: u64,
    pub precision: Option<u32>,
    pub heavy_ok: bool,
    pub workers: Option<usize>,
}

impl JobSpec {
    pub fn single(id: StatementId) -> Self {
        JobSpec {
            statements: vec![id],
            n_list: None,
            p_list: None,
            trials: 1,
            seed: 0,
            precision: None,
            heavy_ok: false,
            workers: None,
        }
    }

    pub fn all_small() -> Self {
        JobSpec { statements: StatementId::ALL.to_vec(), ..Self::single(StatementId::ThmA) }
    }

    fn is_suite(&self) -> bool {
        self.statements.len() > 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Task {
    order: usize,
    id: StatementId,
    x: u64,
    trial: u64,
}

fn check_prime(id: StatementId, p: u64) -> Result<()> {
    let ok = match id {
        StatementId::LongRamakrishna => is_odd_prime(p) && p != 3,
        _ => is_odd_prime(p) && p % 6 == 1,
    };
    if !ok {
        return Err(CliError::Usage(format!("{id}: p = {p} is not an admissible prime")));
    }
    if matches!(id, StatementId::CorA | StatementId::CorAa) && p < 7 {
        return Err(CliError::Usage(format!("{id}: p = {p} < 7")));
    }
    Ok(())
}

/// The precision a p-adic job runs at, checked against the displayed one.
fn precision_for(id: StatementId, requested: Option<u32>) -> Result<u32> {
    let shown = displayed_precision(id)?;
    match requested {
        Some(n) if n == 0 || n > shown => {
            Err(CliError::Usage(format!("{id} is stated modulo p^{shown}; precision {n} is out of range")))
        }
        Some(n) => Ok(n),
        None => Ok(shown),
    }
}

/// Checks every input and expands the job into tasks. Nothing is verified
/// here, so all usage errors surface before any work starts.
fn plan(job: &JobSpec) -> Result<Vec<Task>> {
    if job.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    if job.statements.is_empty() {
        return Err(CliError::Usage("no statement selected".into()));
    }
    let suite = job.is_suite();
    let mut tasks = Vec::new();
    for id in job.statements.iter().copied() {
        let order = StatementId::ALL.iter().position(|s| *s == id).expect("listed");
        let xs: Vec<u64> = if id.is_padic() {
            if job.n_list.is_some() && !suite {
                return Err(CliError::Usage(format!("{id} takes --p, not --n")));
            }
            let n = precision_for(id, job.precision)?;
            let ps = job.p_list.clone().unwrap_or_else(|| id.small_ps().to_vec());
            let mut keep = Vec::new();
            for p in ps {
                match check_prime(id, p) {
                    Ok(()) => keep.push(p),
                    Err(_) if suite => continue,
                    Err(e) => return Err(e),
                }
                if matches!(id, StatementId::VanhammeD2 | StatementId::LongRamakrishna) && !job.heavy_ok {
                    let m = integer_lift(p, n, &supercong::exact::rat(1, 3))?;
                    if m > HEAVY_FACTORS {
                        return Err(CliError::Usage(format!(
                            "{id} at p = {p}, precision {n} needs a Γ_p product of {m} factors; pass --heavy-ok"
                        )));
                    }
                }
            }
            keep
        } else {
            if job.p_list.is_some() && !suite {
                return Err(CliError::Usage(format!("{id} takes --n, not --p")));
            }
            let ns = job.n_list.clone().unwrap_or_else(|| id.small_ns().to_vec());
            let mut keep = Vec::new();
            for n in ns {
                match id.check_n(n) {
                    Ok(()) => keep.push(n as u64),
                    // a suite applies an explicit list only where it fits
                    Err(_) if suite => continue,
                    Err(e) => return Err(CliError::Usage(e.to_string())),
                }
            }
            keep
        };
        let trials = if id.is_padic() || id.arity() == Arity::None { 1 } else { job.trials };
        for x in xs {
            for trial in 0..trials {
                tasks.push(Task { order, id, x, trial });
            }
        }
    }
    tasks.sort();
    Ok(tasks)
}

/// Errors that mean "these parameters collide", not "the claim is false".
fn is_resample(e: &supercong::Error) -> bool {
    use supercong::Error::*;
    matches!(e, Undecidable(_) | NotCoprime | Degenerate(_) | VanishingFactor)
}

fn run_task(job: &JobSpec, task: Task) -> Result<VerifyReport> {
    let start = Instant::now();
    let id = task.id;
    let (parameters, check) = if id.is_padic() {
        let n = precision_for(id, job.precision)?;
        let check = verify_padic(id, task.x, Some(n), job.heavy_ok)?;
        (format!("p={} N={n}", task.x), check)
    } else {
        let n = task.x as u32;
        let randomized = id.arity() != Arity::None;
        let mut rng = trial_rng(job.seed, id.as_str(), task.trial);
        let mut attempt = 0;
        loop {
            let inst = Instance {
                n,
                point: sample_point(&mut rng),
                d: sample_rational(&mut rng),
                t: rng.gen_range(1..=2),
            };
            match verify_instance(id, &inst) {
                Ok(check) => {
                    let mut params = describe(id, &inst);
                    if randomized {
                        params.push_str(&format!(" seed={} trial={}", job.seed, task.trial));
                    }
                    break (params, check);
                }
                Err(e) if randomized && is_resample(&e) && attempt + 1 < MAX_RESAMPLES => attempt += 1,
                Err(e) => return Err(e.into()),
            }
        }
    };
    Ok(VerifyReport {
        statement: id,
        parameters,
        modulus_degree: check.modulus_degree,
        ok: check.ok,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Validates the job, then runs one report per (statement, n or p, trial).
/// Reports come back sorted by statement, then n or p, then trial.
pub fn run(job: &JobSpec) -> Result<Vec<VerifyReport>> {
    let tasks = plan(job)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = job.workers {
        builder = builder.num_threads(w.max(1));
    }
    let pool = builder.build().map_err(|e| CliError::Usage(format!("worker pool: {e}")))?;
    // par_iter().collect() keeps input order, so the result is already sorted
    pool.install(|| tasks.par_iter().map(|t| run_task(job, *t)).collect())
}

#[derive(Serialize)]
struct JsonReport<'a> {
    statement: &'a str,
    parameters: &'a str,
    modulus_degree: usize,
    ok: bool,
    elapsed_ms: u64,
}

pub fn emit_report(reports: &[VerifyReport], format: Format, out: &mut impl Write) -> std::io::Result<()> {
    match format {
        Format::Text => {
            for r in reports {
                writeln!(out, "{} {} {} {}", r.statement, r.parameters, r.ok, r.elapsed_ms)?;
            }
        }
        Format::Json => {
            let rows: Vec<_> = reports
                .iter()
                .map(|r| JsonReport {
                    statement: r.statement.as_str(),
                    parameters: &r.parameters,
                    modulus_degree: r.modulus_degree,
                    ok: r.ok,
                    elapsed_ms: r.elapsed_ms,
                })
                .collect();
            serde_json::to_writer_pretty(&mut *out, &rows).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

/// 0 if every report holds, 1 otherwise.
pub fn exit_code(reports: &[VerifyReport]) -> i32 {
    if reports.iter().all(|r| r.ok) {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(ok: bool) -> VerifyReport {
        VerifyReport {
            statement: StatementId::ThmA,
            parameters: "n=4".into(),
            modulus_degree: 18,
            ok,
            elapsed_ms: 3,
        }
    }

    #[test]
    fn empty_json() {
        let mut buf = Vec::new();
        emit_report(&[], Format::Json, &mut buf).unwrap();
        assert_eq!(buf, b"[]\n");
    }

    #[test]
    fn json_key_order() {
        let mut buf = Vec::new();
        emit_report(&[report(true)], Format::Json, &mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        let keys = ["\"statement\"", "\"parameters\"", "\"modulus_degree\"", "\"ok\"", "\"elapsed_ms\""];
        let pos: Vec<_> = keys.iter().map(|k| s.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert!(s.ends_with("}\n]\n"));
    }

    #[test]
    fn text_line() {
        let mut buf = Vec::new();
        emit_report(&[report(false)], Format::Text, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "thm-a n=4 false 3\n");
        assert_eq!(exit_code(&[report(true), report(false)]), 1);
        assert_eq!(exit_code(&[]), 0);
    }

    #[test]
    fn plan_validates_before_work() {
        let mut job = JobSpec::single(StatementId::ThmA);
        job.n_list = Some(vec![5]);
        assert!(matches!(plan(&job), Err(CliError::Usage(_))));
        job.n_list = Some(vec![4]);
        job.trials = 0;
        assert!(matches!(plan(&job), Err(CliError::Usage(_))));

        let mut lr = JobSpec::single(StatementId::LongRamakrishna);
        lr.p_list = Some(vec![13]);
        assert!(matches!(plan(&lr), Err(CliError::Usage(_))));
        lr.heavy_ok = true;
        assert_eq!(plan(&lr).unwrap().len(), 1);

        let mut cor = JobSpec::single(StatementId::CorA);
        cor.precision = Some(7);
        assert!(plan(&cor).is_err());
    }

    #[test]
    fn trials_only_for_randomized() {
        let mut job = JobSpec::single(StatementId::ThmA);
        job.n_list = Some(vec![1, 4]);
        job.trials = 5;
        assert_eq!(plan(&job).unwrap().len(), 2);
        job.statements = vec![StatementId::LemmaB];
        job.n_list = Some(vec![4]);
        assert_eq!(plan(&job).unwrap().len(), 5);
    }
}
