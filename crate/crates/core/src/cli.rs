//! Command-line frontend: argument parsing, JSON reports and exit codes.
//!
//! Every command produces a [`Report`] with the keys `command`, `input`,
//! `status` and `result`. Exit codes: 0 ok, 1 negative answer or failed
//! verification, 2 invalid input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::construct::{x_ap_r2, x_linear, x_pair_r3, x_singleton, AsymptoticPlan, LinearPattern};
use crate::cover::{classify_small_ell, minimal_cover, verify, SmallEllClassification};
use crate::error::Error;
use crate::intset::{normalize, IntSet, NormalizedSet};
use crate::structure::{find_stabilization, SweepParams};
use crate::sumset::hfold;

#[derive(Debug, Parser)]
#[command(name = "approxgroup", version, about = "Sumset structure and approximate-group certificates")]
pub struct Cli {
    /// Emit one JSON report per input instead of a table.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normalize a set and find the eventual structure of its sumsets.
    Analyze {
        /// Set literal such as `0,3,5`, or `@path` with one literal per line.
        #[arg(allow_hyphen_values = true)]
        set: String,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Find a minimum (r, ell) certificate by exact search.
    Certify {
        #[arg(allow_hyphen_values = true)]
        set: String,
        #[arg(long = "r")]
        r: u32,
        #[arg(long = "ell-max")]
        ell_max: usize,
        /// Certify the h-fold sumset instead of the set itself.
        #[arg(long = "h")]
        h: Option<u32>,
    },
    /// Emit (r, r + 1) certificates for hA over a range of h.
    Asymptotic {
        #[arg(allow_hyphen_values = true)]
        set: String,
        #[arg(long = "r")]
        r: u32,
        #[arg(long = "h-from")]
        h_from: u32,
        #[arg(long = "h-to")]
        h_to: u32,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Evaluate a closed-form certificate.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
}

#[derive(Debug, Clone, Copy, Default, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub window: Option<u32>,
    #[arg(long)]
    pub hmax: Option<u32>,
}

impl SweepArgs {
    fn resolve(&self, astar: i64) -> SweepParams {
        let defaults = SweepParams::defaults_for(astar);
        SweepParams {
            window: self.window.unwrap_or(defaults.window),
            hmax: self.hmax.unwrap_or(defaults.hmax),
        }
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum ConstructKind {
    /// `{(r - 1) a0}` for the singleton `{a0}`.
    Singleton {
        #[arg(long, allow_hyphen_values = true)]
        a0: i64,
        #[arg(long = "r")]
        r: u32,
    },
    /// `{2 a0, 2 a1}` for the pair `{a0, a1}` at r = 3.
    Pair {
        #[arg(long, allow_hyphen_values = true)]
        a0: i64,
        #[arg(long, allow_hyphen_values = true)]
        a1: i64,
    },
    /// Two translates covering 2A for `A = {a0 + i d : i < k}`.
    Ap {
        #[arg(long, allow_hyphen_values = true)]
        a0: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        k: u32,
    },
    /// Translates of `[u, v]` tiling `[r u0, r v0]`.
    Linear {
        #[arg(long, allow_hyphen_values = true)]
        u0: i64,
        #[arg(long, allow_hyphen_values = true)]
        u: i64,
        #[arg(long, allow_hyphen_values = true)]
        v: i64,
        #[arg(long, allow_hyphen_values = true)]
        v0: i64,
        #[arg(long = "r")]
        r: u32,
        /// Defaults to the least admissible value.
        #[arg(long)]
        ell: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    None,
    Error,
}

/// One command invocation on one input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub input: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    /// Exit code this report maps to.
    pub exit_code: i32,
    #[serde(flatten)]
    pub outcome: Outcome,
}

/// Command name and its result record, serialized as `command` and `result`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", content = "result", rename_all = "lowercase")]
pub enum Outcome {
    Analyze(Option<AnalyzeResult>),
    Certify(Option<CertifyResult>),
    Asymptotic(Option<AsymptoticResult>),
    Construct(Option<ConstructResult>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeResult {
    pub normalized: NormalizedSet,
    pub window: Option<u32>,
    pub hmax: Option<u32>,
    pub structure: Option<StructureSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureSummary {
    /// Observed over `window` consecutive folds, not proven.
    pub h0_empirical: u32,
    #[serde(rename = "C")]
    pub c: i64,
    #[serde(rename = "D")]
    pub d: i64,
    #[serde(rename = "C_set")]
    pub c_set: IntSet,
    #[serde(rename = "D_set")]
    pub d_set: IntSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyResult {
    pub r: u32,
    /// Fold count of the certified set; 1 means the input itself.
    pub h: u32,
    pub ell_max: usize,
    pub set_size: usize,
    pub target_size: usize,
    /// `ceil(|rA| / |A|)`.
    pub cardinality_floor: usize,
    pub min_ell: Option<usize>,
    pub x: Option<IntSet>,
    pub verified: Option<bool>,
    pub classification: SmallEllClassification,
    /// Whether the closed-form classification matches exact search at ell = 1, 2.
    pub classification_agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsymptoticResult {
    pub r: u32,
    pub normalized: NormalizedSet,
    pub window: Option<u32>,
    pub hmax: Option<u32>,
    pub h0_empirical: Option<u32>,
    #[serde(rename = "C")]
    pub c: Option<i64>,
    #[serde(rename = "D")]
    pub d: Option<i64>,
    pub h1: u32,
    pub h1_numerator: i64,
    pub h1_denominator: i64,
    pub h_from: u32,
    pub h_to: u32,
    /// `h_from` raised to `h1` when it was lower.
    pub clamped_from: u32,
    pub certificates: Vec<AsymptoticEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsymptoticEntry {
    pub h: u32,
    pub ell: usize,
    pub x: IntSet,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructResult {
    pub kind: String,
    pub x: IntSet,
    /// The set the construction was checked against.
    pub checked_set: IntSet,
    pub r: u32,
    pub verified: bool,
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Parse(_) | Error::PreconditionViolated(_) | Error::HBelowThreshold { .. } | Error::EmptySet => 2,
        Error::NoStabilization { .. } | Error::AmbiguousStructure { .. } | Error::Overflow(_) => 1,
    }
}

impl Report {
    fn ok(input: &str, outcome: Outcome) -> Report {
        Report { input: input.to_string(), status: Status::Ok, message: None, exit_code: 0, outcome }
    }

    fn failed(input: &str, outcome: Outcome, err: &Error) -> Report {
        Report {
            input: input.to_string(),
            status: Status::Error,
            message: Some(err.to_string()),
            exit_code: exit_code_for(err),
            outcome,
        }
    }

    pub fn command(&self) -> &'static str {
        match self.outcome {
            Outcome::Analyze(_) => "analyze",
            Outcome::Certify(_) => "certify",
            Outcome::Asymptotic(_) => "asymptotic",
            Outcome::Construct(_) => "construct",
        }
    }

    /// Human-readable rendering.
    pub fn table(&self) -> String {
        let mut out = String::new();
        let status = match self.status {
            Status::Ok => "ok",
            Status::None => "none",
            Status::Error => "error",
        };
        let _ = writeln!(out, "{:<14} {}", "command", self.command());
        let _ = writeln!(out, "{:<14} {}", "input", self.input);
        let _ = writeln!(out, "{:<14} {}", "status", status);
        if let Some(m) = &self.message {
            let _ = writeln!(out, "{:<14} {}", "message", m);
        }
        let mut row = |k: &str, v: String| {
            let _ = writeln!(out, "{k:<14} {v}");
        };
        match &self.outcome {
            Outcome::Analyze(Some(res)) => {
                let n = &res.normalized;
                row("a0", n.a0.to_string());
                row("d", n.d.to_string());
                row("reduced", n.reduced.to_string());
                row("a*", n.astar.to_string());
                if let (Some(w), Some(hm)) = (res.window, res.hmax) {
                    row("window", w.to_string());
                    row("hmax", hm.to_string());
                }
                if let Some(s) = &res.structure {
                    row("h0 (empirical)", s.h0_empirical.to_string());
                    row("C", s.c.to_string());
                    row("D", s.d.to_string());
                    row("C_set", s.c_set.to_string());
                    row("D_set", s.d_set.to_string());
                }
            }
            Outcome::Certify(Some(res)) => {
                row("r", res.r.to_string());
                row("h", res.h.to_string());
                row("|A|, |rA|", format!("{}, {}", res.set_size, res.target_size));
                row("ell floor", res.cardinality_floor.to_string());
                row("min ell", res.min_ell.map_or(format!("> {}", res.ell_max), |e| e.to_string()));
                if let Some(x) = &res.x {
                    row("X", x.to_string());
                }
                row("(r,1)", yes_no(res.classification.ell1.is_some()));
                row("(r,2)", yes_no(res.classification.ell2.is_some()));
                row("cross-check", if res.classification_agrees { "agrees" } else { "DISAGREES" }.into());
            }
            Outcome::Asymptotic(Some(res)) => {
                row("r", res.r.to_string());
                row("h1", format!("{} (quotient {}/{})", res.h1, res.h1_numerator, res.h1_denominator));
                if let (Some(h0), Some(c), Some(d)) = (res.h0_empirical, res.c, res.d) {
                    row("h0 (empirical)", h0.to_string());
                    row("C, D", format!("{c}, {d}"));
                }
                if res.clamped_from != res.h_from {
                    row("clamped", format!("h_from {} -> {}", res.h_from, res.clamped_from));
                }
                for e in &res.certificates {
                    let mark = if e.verified { "verified" } else { "FAILED" };
                    row(&format!("h = {}", e.h), format!("{} {mark}", e.x));
                }
            }
            Outcome::Construct(Some(res)) => {
                row("kind", res.kind.clone());
                row("X", res.x.to_string());
                row("checked on", format!("{} (r = {})", res.checked_set, res.r));
                row("verified", yes_no(res.verified));
            }
            _ => {}
        }
        out
    }
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

/// Normalizes and sweeps; singletons skip the sweep.
pub fn cmd_analyze(input: &str, sweep: SweepArgs) -> Report {
    let empty = Outcome::Analyze(None);
    let set = match input.parse::<IntSet>() {
        Ok(s) => s,
        Err(e) => return Report::failed(input, empty, &e),
    };
    let normalized = match normalize(&set) {
        Ok(n) => n,
        Err(e) => return Report::failed(input, empty, &e),
    };
    if normalized.reduced.len() < 2 {
        let mut rep = Report::ok(
            input,
            Outcome::Analyze(Some(AnalyzeResult { normalized, window: None, hmax: None, structure: None })),
        );
        rep.message = Some("singleton: every hA is a single point, structure analysis skipped".into());
        return rep;
    }
    let params = sweep.resolve(normalized.astar);
    let structure = find_stabilization(&normalized, params);
    let mut result = AnalyzeResult { normalized, window: Some(params.window), hmax: Some(params.hmax), structure: None };
    match structure {
        Ok(rep) => {
            let s = rep.structure;
            result.structure = Some(StructureSummary {
                h0_empirical: rep.h0_empirical,
                c: s.c,
                d: s.d,
                c_set: s.c_set,
                d_set: s.d_set,
            });
            Report::ok(input, Outcome::Analyze(Some(result)))
        }
        Err(e) => Report::failed(input, Outcome::Analyze(Some(result)), &e),
    }
}

/// Exact minimum certificate plus the closed-form classification.
pub fn cmd_certify(input: &str, r: u32, ell_max: usize, h: Option<u32>) -> Report {
    let run = || -> crate::Result<(CertifyResult, Status)> {
        let base: IntSet = input.parse()?;
        let fold = h.unwrap_or(1);
        let set = hfold(&base, fold)?;
        let classification = classify_small_ell(&set, r)?;
        let best = minimal_cover(&set, r, ell_max)?;
        let up_to_two = match &best {
            Some(c) if c.x.len() <= 2 => best.clone(),
            Some(_) => None,
            None if ell_max >= 2 => None,
            None => minimal_cover(&set, r, 2)?,
        };
        let exact1 = up_to_two.as_ref().is_some_and(|c| c.x.len() == 1);
        let exact2 = up_to_two.is_some();
        let classification_agrees = exact1 == classification.ell1.is_some() && exact2 == classification.ell2.is_some();
        let target_size = hfold(&set, r)?.len();
        let status = if best.is_some() { Status::Ok } else { Status::None };
        Ok((
            CertifyResult {
                r,
                h: fold,
                ell_max,
                set_size: set.len(),
                target_size,
                cardinality_floor: crate::cover::cardinality_floor(target_size, set.len()),
                min_ell: best.as_ref().map(|c| c.x.len()),
                verified: best.as_ref().map(|c| c.verified),
                x: best.map(|c| c.x),
                classification,
                classification_agrees,
            },
            status,
        ))
    };
    match run() {
        Ok((res, status)) => {
            let mut rep = Report::ok(input, Outcome::Certify(None));
            rep.status = status;
            if status == Status::None {
                rep.exit_code = 1;
                rep.message = Some(format!("no certificate with at most {ell_max} translates"));
            }
            if !res.classification_agrees || res.verified == Some(false) {
                rep.status = Status::Error;
                rep.exit_code = 1;
                rep.message = Some("closed-form classification disagrees with exact search".into());
            }
            rep.outcome = Outcome::Certify(Some(res));
            rep
        }
        Err(e) => Report::failed(input, Outcome::Certify(None), &e),
    }
}

/// Per-h `(r, r + 1)` certificates from a single plan.
pub fn cmd_asymptotic(input: &str, r: u32, h_from: u32, h_to: u32, sweep: SweepArgs) -> Report {
    let empty = Outcome::Asymptotic(None);
    let run = || -> crate::Result<AsymptoticResult> {
        let set: IntSet = input.parse()?;
        if r < 2 {
            return Err(Error::PreconditionViolated(format!("r >= 2 required, got {r}")));
        }
        if h_from == 0 || h_from > h_to {
            return Err(Error::PreconditionViolated(format!("need 1 <= h_from <= h_to, got {h_from}..{h_to}")));
        }
        let normalized = normalize(&set)?;
        if normalized.reduced.len() < 2 {
            let certificates = (h_from..=h_to)
                .map(|h| {
                    let cert = crate::construct::asymptotic_cert(&set, r, h)?;
                    Ok(AsymptoticEntry { h, ell: cert.ell, x: cert.x, verified: cert.verified })
                })
                .collect::<crate::Result<Vec<_>>>()?;
            return Ok(AsymptoticResult {
                r,
                normalized,
                window: None,
                hmax: None,
                h0_empirical: None,
                c: None,
                d: None,
                h1: 1,
                h1_numerator: 0,
                h1_denominator: 0,
                h_from,
                h_to,
                clamped_from: h_from,
                certificates,
            });
        }
        let params = sweep.resolve(normalized.astar);
        let mut plan = AsymptoticPlan::new(&set, r, Some(params))?;
        let clamped_from = h_from.max(plan.h1);
        if clamped_from <= h_to {
            plan.populate(clamped_from..=h_to)?;
        }
        let st = &plan.stabilization.structure;
        Ok(AsymptoticResult {
            r,
            window: Some(params.window),
            hmax: Some(params.hmax),
            h0_empirical: Some(plan.stabilization.h0_empirical),
            c: Some(st.c),
            d: Some(st.d),
            h1: plan.h1,
            h1_numerator: plan.h1_numerator,
            h1_denominator: plan.h1_denominator,
            h_from,
            h_to,
            clamped_from,
            certificates: plan
                .certificates
                .into_iter()
                .map(|(h, c)| AsymptoticEntry { h, ell: c.ell, x: c.x, verified: c.verified })
                .collect(),
            normalized: plan.normalized,
        })
    };
    match run() {
        Ok(res) => {
            let failed = res.certificates.iter().filter(|c| !c.verified).count();
            let clamped = res.clamped_from != res.h_from;
            let empty_range = res.clamped_from > res.h_to;
            let mut rep = Report::ok(input, Outcome::Asymptotic(Some(res)));
            if failed > 0 {
                rep.status = Status::Error;
                rep.exit_code = 1;
                rep.message = Some(format!("{failed} certificate(s) failed verification"));
            } else if empty_range {
                rep.message = Some("requested range lies entirely below h1".into());
            } else if clamped {
                rep.message = Some("h_from clamped up to h1".into());
            }
            rep
        }
        Err(e) => Report::failed(input, empty, &e),
    }
}

/// Builds a closed-form `X` and checks it on the smallest matching set.
pub fn cmd_construct(kind: &ConstructKind) -> Report {
    let input = describe(kind);
    let run = || -> crate::Result<ConstructResult> {
        let (name, x, checked_set, r) = match *kind {
            ConstructKind::Singleton { a0, r } => ("singleton", x_singleton(a0, r)?, IntSet::singleton(a0), r),
            ConstructKind::Pair { a0, a1 } => ("pair", x_pair_r3(a0, a1)?, IntSet::from([a0, a1]), 3),
            ConstructKind::Ap { a0, d, k } => {
                let x = x_ap_r2(a0, d, k)?;
                let ap = (0..k as i64)
                    .map(|i| i.checked_mul(d).and_then(|s| s.checked_add(a0)).ok_or(Error::Overflow("progression")))
                    .collect::<crate::Result<IntSet>>()?;
                ("ap", x, ap, 2)
            }
            ConstructKind::Linear { u0, u, v, v0, r, ell } => {
                let p = LinearPattern::new(u0, u, v, v0)?;
                let ell = match ell {
                    Some(e) => e,
                    None => p.min_ell(r)?,
                };
                let x = x_linear(&p, r, ell)?;
                let base = IntSet::interval(u, v).union(&IntSet::from([u0, v0]));
                ("linear", x, base, r)
            }
        };
        let verified = verify(&checked_set, r, &x)?;
        Ok(ConstructResult { kind: name.into(), x, checked_set, r, verified })
    };
    match run() {
        Ok(res) => {
            let ok = res.verified;
            let mut rep = Report::ok(&input, Outcome::Construct(Some(res)));
            if !ok {
                rep.status = Status::Error;
                rep.exit_code = 1;
                rep.message = Some("construction failed verification".into());
            }
            rep
        }
        Err(e) => Report::failed(&input, Outcome::Construct(None), &e),
    }
}

fn describe(kind: &ConstructKind) -> String {
    match *kind {
        ConstructKind::Singleton { a0, r } => format!("singleton a0={a0} r={r}"),
        ConstructKind::Pair { a0, a1 } => format!("pair a0={a0} a1={a1}"),
        ConstructKind::Ap { a0, d, k } => format!("ap a0={a0} d={d} k={k}"),
        ConstructKind::Linear { u0, u, v, v0, r, ell } => {
            let ell = ell.map_or("min".to_string(), |e| e.to_string());
            format!("linear u0={u0} u={u} v={v} v0={v0} r={r} ell={ell}")
        }
    }
}

/// Expands `@path` into one literal per nonblank, non-`#` line.
pub fn expand_inputs(arg: &str) -> Result<Vec<String>, String> {
    let Some(path) = arg.strip_prefix('@') else {
        return Ok(vec![arg.to_string()]);
    };
    let text = std::fs::read_to_string(Path::new(path)).map_err(|e| format!("{path}: {e}"))?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect())
}

/// Runs one parsed invocation, returning its reports in input order.
pub fn execute(cli: &Cli) -> Result<Vec<Report>, String> {
    let per_input = |set: &str, f: &dyn Fn(&str) -> Report| -> Result<Vec<Report>, String> {
        Ok(expand_inputs(set)?.iter().map(|s| f(s)).collect())
    };
    match &cli.command {
        Command::Analyze { set, sweep } => per_input(set, &|s| cmd_analyze(s, *sweep)),
        Command::Certify { set, r, ell_max, h } => per_input(set, &|s| cmd_certify(s, *r, *ell_max, *h)),
        Command::Asymptotic { set, r, h_from, h_to, sweep } => {
            per_input(set, &|s| cmd_asymptotic(s, *r, *h_from, *h_to, *sweep))
        }
        Command::Construct { kind } => Ok(vec![cmd_construct(kind)]),
    }
}

/// Entry point shared by the binary and tests. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let reports = match execute(&cli) {
        Ok(r) => r,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    for rep in &reports {
        let _ = if cli.json {
            writeln!(out, "{}", serde_json::to_string(rep).expect("reports serialize"))
        } else {
            writeln!(out, "{}", rep.table())
        };
    }
    reports.iter().map(|r| r.exit_code).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn no_sweep() -> SweepArgs {
        SweepArgs { window: None, hmax: None }
    }

    #[test]
    fn analyze_reports() {
        let rep = cmd_analyze("0,3,5", no_sweep());
        assert_eq!(rep.status, Status::Ok);
        let Outcome::Analyze(Some(res)) = &rep.outcome else { panic!() };
        let s = res.structure.as_ref().unwrap();
        assert_eq!((s.h0_empirical, s.c, s.d), (3, 8, 4));
        assert_eq!(s.c_set, IntSet::from([0, 3, 5, 6]));
        assert_eq!(s.d_set, IntSet::from([0, 2]));
        assert_eq!((res.window, res.hmax), (Some(5), Some(1250)));

        let rep = cmd_analyze("5", no_sweep());
        assert_eq!((rep.status, rep.exit_code), (Status::Ok, 0));
        let Outcome::Analyze(Some(res)) = &rep.outcome else { panic!() };
        assert_eq!(res.normalized.astar, 0);
        assert!(res.structure.is_none() && rep.message.is_some());

        let rep = cmd_analyze("0,1", no_sweep());
        let Outcome::Analyze(Some(res)) = &rep.outcome else { panic!() };
        let s = res.structure.as_ref().unwrap();
        assert_eq!((s.c, s.d), (0, 0));
        assert!(s.c_set.is_empty() && s.d_set.is_empty());
    }

    #[test]
    fn analyze_errors() {
        assert_eq!(cmd_analyze("0,x", no_sweep()).exit_code, 2);
        let rep = cmd_analyze("0,3,5", SweepArgs { window: Some(5), hmax: Some(3) });
        assert_eq!((rep.status, rep.exit_code), (Status::Error, 1));
    }

    #[test]
    fn certify_reports() {
        let rep = cmd_certify("0,1,2,3", 2, 4, None);
        let Outcome::Certify(Some(res)) = &rep.outcome else { panic!() };
        assert_eq!(res.min_ell, Some(2));
        assert_eq!(res.x, Some(IntSet::from([-1, 3])));
        assert!(res.classification_agrees);

        let rep = cmd_certify("0,1,2,3", 3, 2, None);
        assert_eq!((rep.status, rep.exit_code), (Status::None, 1));

        let rep = cmd_certify("0,1,2,3", 3, 4, None);
        let Outcome::Certify(Some(res)) = &rep.outcome else { panic!() };
        assert_eq!((res.min_ell, res.cardinality_floor), (Some(3), 3));

        assert_eq!(cmd_certify("0,1", 1, 4, None).exit_code, 2);
    }

    #[test]
    fn asymptotic_reports() {
        let rep = cmd_asymptotic("0,3,5", 2, 7, 12, no_sweep());
        assert_eq!(rep.exit_code, 0);
        let Outcome::Asymptotic(Some(res)) = &rep.outcome else { panic!() };
        assert_eq!(res.certificates.len(), 6);
        assert!(res.certificates.iter().all(|c| c.verified && c.x.len() == 3));

        let rep = cmd_asymptotic("0,1", 4, 1, 3, no_sweep());
        let Outcome::Asymptotic(Some(res)) = &rep.outcome else { panic!() };
        assert!(res.certificates.iter().all(|c| c.verified && c.x.len() == 5));

        let rep = cmd_asymptotic("0,3,5", 2, 1, 8, no_sweep());
        let Outcome::Asymptotic(Some(res)) = &rep.outcome else { panic!() };
        assert_eq!((res.clamped_from, res.certificates.len()), (7, 2));

        assert_eq!(cmd_asymptotic("0,3,5", 2, 9, 8, no_sweep()).exit_code, 2);
        assert_eq!(cmd_asymptotic("4", 2, 1, 2, no_sweep()).exit_code, 0);
    }

    #[test]
    fn construct_reports() {
        let rep = cmd_construct(&ConstructKind::Linear { u0: 0, u: 2, v: 5, v0: 7, r: 2, ell: None });
        let Outcome::Construct(Some(res)) = &rep.outcome else { panic!() };
        assert_eq!(res.x, IntSet::from([-2, 2, 6, 10]));
        assert!(res.verified);
        let rep = cmd_construct(&ConstructKind::Linear { u0: 0, u: 2, v: 5, v0: 7, r: 2, ell: Some(3) });
        assert_eq!(rep.exit_code, 2);
        let rep = cmd_construct(&ConstructKind::Ap { a0: 5, d: 3, k: 3 });
        let Outcome::Construct(Some(res)) = &rep.outcome else { panic!() };
        assert_eq!(res.checked_set, IntSet::from([5, 8, 11]));
        assert!(res.verified);
    }

    #[test]
    fn report_json_shape() {
        let rep = cmd_certify("0,1,2,3", 3, 2, None);
        let v: serde_json::Value = serde_json::to_value(&rep).unwrap();
        for key in ["command", "input", "status", "result"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["command"], "certify");
        assert_eq!(v["status"], "none");
        let back: Report = serde_json::from_value(v).unwrap();
        assert_eq!(back, rep);
    }
}
