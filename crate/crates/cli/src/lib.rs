//! Command-line front end: argument model and dispatch.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use hopfcalc::cohen::{combinatorial_james_hopf, is_in_h_n, represent, GroupWord};
use hopfcalc::freealg::AlgebraContext;
use hopfcalc::hopfcheck::{
    check_cmn_congruence, check_h2_beta4, check_hopf_whitehead_vanishing, check_obstruction_formula,
    check_power_map_triviality, check_trace_lemmas, CheckReport, Status,
};
use hopfcalc::modarith::{is_prime, CoefficientRing};

/// Exit status when every executed check passed (skipped checks do not count).
pub const EXIT_PASS: i32 = 0;
/// Exit status when some check failed.
pub const EXIT_FAIL: i32 = 1;
/// Exit status for malformed arguments or inputs outside a check's hypothesis.
pub const EXIT_USAGE: i32 = 2;

/// Hopf invariants, convolution powers and Cohen groups at desk scale.
#[derive(Debug, Clone, Parser)]
#[command(name = "hopfcalc", version)]
pub struct RunConfiguration {
    #[command(subcommand)]
    pub command: Command,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write the output to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Run identity checks.
    #[command(subcommand)]
    Verify(Verify),
    /// Parse and print a tensor algebra element in canonical form.
    Eval {
        /// Element text, e.g. "3*x1.x2 - x2.x1".
        #[arg(long)]
        expr: String,
        /// Coefficient modulus; 0 means the integers.
        #[arg(long, default_value_t = 0, value_parser = parse_modulus)]
        modulus: u64,
        /// Number of generators.
        #[arg(long)]
        dim: u32,
        /// Degree bound of the truncation.
        #[arg(long)]
        degree: usize,
    },
    /// Print the combinatorial James–Hopf image of a word of K_n.
    HopfWord {
        /// Group word, e.g. "[x1,x2] x3^2".
        #[arg(long)]
        word: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: usize,
    },
    /// Print the square-zero representation of a word of K_n(k).
    Represent {
        #[arg(long)]
        word: String,
        #[arg(long)]
        n: u32,
        /// Block size of the generators.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Coefficient modulus; 0 means the integers.
        #[arg(long, default_value_t = 0, value_parser = parse_modulus)]
        modulus: u64,
    },
    /// Decide whether a word of K_n lies in H_n (all faces agree).
    MemberHn {
        #[arg(long)]
        word: String,
        #[arg(long)]
        n: u32,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum Verify {
    /// The full desk-scale grid.
    All(AllArgs),
    /// H_k of the n-fold bracket and commutator vanish when k does not divide n.
    HopfWhitehead {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Partition formula, printed expression and S2∘Φ for H2 of the 4-fold bracket.
    H2Beta4,
    /// Id^{*p^(r+t)} is the convolution unit below length p^(t+1) over Z/p^r.
    Power {
        #[arg(long, value_parser = parse_prime)]
        p: u64,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        dim: u32,
    },
    /// Id^{*p^(r+t)} on x1...x_{p^(t+1)} is a scalar multiple of the trace.
    Obstruction {
        #[arg(long, value_parser = parse_prime)]
        p: u64,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        t: u32,
    },
    /// Lie trace is congruent to the trace mod p in arity p^t.
    Cmn {
        #[arg(long, value_parser = parse_prime)]
        p: u64,
        #[arg(long)]
        t: u32,
    },
    /// Two-sided absorption of group algebra elements by the symmetrizer.
    Trace {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Args)]
pub struct AllArgs {
    /// Trials for the trace check in the grid.
    #[arg(long, default_value_t = 200)]
    pub trials: u32,
    /// Seed for the trace check in the grid.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

fn parse_prime(s: &str) -> Result<u64, String> {
    let p: u64 = s.parse().map_err(|e| format!("{e}"))?;
    if is_prime(p) {
        Ok(p)
    } else {
        Err(format!("{p} is not a prime"))
    }
}

fn parse_modulus(s: &str) -> Result<u64, String> {
    let m: u64 = s.parse().map_err(|e| format!("{e}"))?;
    if m == 1 {
        Err("modulus must be 0 (integers) or at least 2".into())
    } else {
        Ok(m)
    }
}

/// What a run produced: the report stream and the process exit status.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
    /// Reports of executed checks, in canonical order.
    pub reports: Vec<CheckReport>,
}

type Job = Box<dyn FnOnce() -> hopfcalc::Result<CheckReport> + Send>;

/// Every check of `verify all`.
pub fn full_grid(trials: u32, seed: u64) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for (n, k) in [(3, 2), (4, 3), (5, 2), (5, 3), (5, 4), (7, 2)] {
        jobs.push(Box::new(move || check_hopf_whitehead_vanishing(n, k)));
    }
    jobs.push(Box::new(|| Ok(check_h2_beta4())));
    for (p, r, t, dim) in [(2, 1, 1, 3), (3, 1, 0, 2), (2, 2, 0, 1), (2, 1, 2, 5)] {
        jobs.push(Box::new(move || check_power_map_triviality(p, r, t, dim)));
    }
    for (p, r, t) in [(2, 1, 0), (2, 2, 0), (2, 1, 1)] {
        jobs.push(Box::new(move || check_obstruction_formula(p, r, t)));
    }
    for (p, t) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
        jobs.push(Box::new(move || check_cmn_congruence(p, t)));
    }
    jobs.push(Box::new(move || check_trace_lemmas(5, trials, seed)));
    jobs
}

/// Run independent checks on worker threads and return reports in canonical order.
pub fn run_checks(jobs: Vec<Job>) -> hopfcalc::Result<Vec<CheckReport>> {
    let results: Vec<hopfcalc::Result<CheckReport>> = std::thread::scope(|s| {
        let handles: Vec<_> = jobs.into_iter().map(|j| s.spawn(j)).collect();
        handles.into_iter().map(|h| h.join().expect("check panicked")).collect()
    });
    let mut reports = results.into_iter().collect::<hopfcalc::Result<Vec<_>>>()?;
    reports.sort_by_key(|r| r.sort_key());
    Ok(reports)
}

fn render_reports(reports: &[CheckReport], json: bool) -> String {
    if json {
        return serde_json::to_string_pretty(reports).expect("reports serialize") + "\n";
    }
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    let count = |s| reports.iter().filter(|r| r.status == s).count();
    out.push_str(&format!(
        "{} checks: {} passed, {} failed, {} skipped\n",
        reports.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Skipped)
    ));
    out
}

fn render_value(key: &str, value: String, json: bool) -> String {
    if json {
        serde_json::json!({ key: value }).to_string() + "\n"
    } else {
        value + "\n"
    }
}

fn usage(message: impl std::fmt::Display) -> RunOutput {
    RunOutput {
        stdout: String::new(),
        stderr: format!("error: {message}\n"),
        exit_code: EXIT_USAGE,
        reports: Vec::new(),
    }
}

fn verify_jobs(v: &Verify) -> Vec<Job> {
    match *v {
        Verify::All(AllArgs { trials, seed }) => full_grid(trials, seed),
        Verify::HopfWhitehead { n, k } => vec![Box::new(move || check_hopf_whitehead_vanishing(n, k))],
        Verify::H2Beta4 => vec![Box::new(|| Ok(check_h2_beta4()))],
        Verify::Power { p, r, t, dim } => vec![Box::new(move || check_power_map_triviality(p, r, t, dim))],
        Verify::Obstruction { p, r, t } => vec![Box::new(move || check_obstruction_formula(p, r, t))],
        Verify::Cmn { p, t } => vec![Box::new(move || check_cmn_congruence(p, t))],
        Verify::Trace { n, trials, seed } => vec![Box::new(move || check_trace_lemmas(n, trials, seed))],
    }
}

fn ring(modulus: u64) -> hopfcalc::Result<CoefficientRing> {
    CoefficientRing::new(modulus)
}

/// Execute the configured subcommand. Output is returned rather than printed,
/// except that `--out` writes the stream to the given file.
pub fn run(config: &RunConfiguration) -> RunOutput {
    let json = config.json;
    let computed: hopfcalc::Result<(String, i32, Vec<CheckReport>)> = match &config.command {
        Command::Verify(v) => run_checks(verify_jobs(v)).map(|reports| {
            let code = if reports.iter().any(|r| r.status == Status::Fail) {
                EXIT_FAIL
            } else {
                EXIT_PASS
            };
            (render_reports(&reports, json), code, reports)
        }),
        Command::Eval {
            expr,
            modulus,
            dim,
            degree,
        } => ring(*modulus)
            .and_then(|r| AlgebraContext::new(*dim, *degree, r))
            .and_then(|ctx| ctx.parse(expr))
            .map(|e| (render_value("value", e.to_string(), json), EXIT_PASS, Vec::new())),
        Command::HopfWord { word, n, k } => GroupWord::parse(*n, 1, word)
            .and_then(|w| combinatorial_james_hopf(&w, *k))
            .map(|h| (render_value("value", h.to_string(), json), EXIT_PASS, Vec::new())),
        Command::Represent { word, n, k, modulus } => ring(*modulus).and_then(|r| {
            GroupWord::parse(*n, *k, word)
                .map(|w| (render_value("value", represent(&w, r).to_string(), json), EXIT_PASS, Vec::new()))
        }),
        Command::MemberHn { word, n } => GroupWord::parse(*n, 1, word)
            .and_then(|w| is_in_h_n(&w))
            .map(|b| {
                let text = if json {
                    serde_json::json!({ "member": b }).to_string() + "\n"
                } else {
                    format!("{b}\n")
                };
                (text, EXIT_PASS, Vec::new())
            }),
    };
    let (text, exit_code, reports) = match computed {
        Ok(v) => v,
        Err(e) => return usage(e),
    };
    match &config.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => RunOutput {
                stdout: String::new(),
                stderr: String::new(),
                exit_code,
                reports,
            },
            Err(e) => usage(format!("cannot write {}: {e}", path.display())),
        },
        None => RunOutput {
            stdout: text,
            stderr: String::new(),
            exit_code,
            reports,
        },
    }
}
