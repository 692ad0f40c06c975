//! Batch front end: `info`, `generators`, `syzygies`, `verify`, `sweep`.
//!
//! Exit codes: 0 when every check passes, 1 on any failed check, 2 on bad
//! input (unparseable flags, or parameters violating the curve hypotheses).

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::generators::{GeneratorSet, PatilLabel, PatilSet};
use crate::polyring::serial::{poly_to_json, TermJson};
use crate::polyring::{OrderContext, Polynomial};
use crate::report::{ParamsSummary, VerificationReport};
use crate::syzygy::{ModuleContext, ModuleTermJson, SyzygySet};
use crate::{
    par, verify_all, CurveParams, Error, VerifyOptions, DEFAULT_IMAGE_SAMPLES, DEFAULT_SEED,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct CurveArgs {
    #[arg(long)]
    pub m0: u64,
    #[arg(long)]
    pub d: u64,
    #[arg(long)]
    pub p: usize,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    /// Exponent cap for the standard-monomial and excluded-form enumerations.
    #[arg(long, default_value_t = 6)]
    pub bound: u32,
    /// Random single-term elements for the leading-image check.
    #[arg(long, default_value_t = DEFAULT_IMAGE_SAMPLES)]
    pub samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Skip the per-member minimal-generation check (one Buchberger run each).
    #[arg(long)]
    pub skip_minimal_generation: bool,
}

impl CheckArgs {
    fn options(&self) -> VerifyOptions {
        VerifyOptions {
            bound: Some(self.bound),
            image_samples: self.samples,
            seed: self.seed,
            minimal_generation: !self.skip_minimal_generation,
        }
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Curve parameters and the minimal multiple relations of m_p and m_0.
    Info {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The generating sets G' and G with leading terms.
    Generators {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The syzygy generators A, B, L with leading terms and counts.
    Syzygies {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// All checks for one parameter triple.
    Verify {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        checks: CheckArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// All checks over a range of (p, a, b, d); m0 = a*p + b.
    Sweep {
        #[arg(long)]
        p: IntRange,
        #[arg(long)]
        a: IntRange,
        /// Upper end may be `p`, e.g. `1..p`.
        #[arg(long)]
        b: IntRange,
        #[arg(long)]
        d: IntRange,
        #[command(flatten)]
        checks: CheckArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Clone, Parser)]
#[command(
    name = "monocurve",
    version,
    about = "Gröbner bases and syzygies of arithmetic-sequence monomial curves"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

/// End of an inclusive range; `P` stands for the current value of `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RangeEnd {
    Value(u64),
    P,
}

/// Inclusive range `lo..hi` (or a single value).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRange {
    pub lo: RangeEnd,
    pub hi: RangeEnd,
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let end = |t: &str| -> std::result::Result<RangeEnd, String> {
            let t = t.trim();
            if t == "p" {
                Ok(RangeEnd::P)
            } else {
                t.parse::<u64>()
                    .map(RangeEnd::Value)
                    .map_err(|_| format!("bad range endpoint {t:?}"))
            }
        };
        match s.split_once("..") {
            Some((lo, hi)) => Ok(IntRange {
                lo: end(lo)?,
                hi: end(hi.trim_start_matches('='))?,
            }),
            None => {
                let v = end(s)?;
                Ok(IntRange { lo: v, hi: v })
            }
        }
    }
}

impl IntRange {
    fn values(&self, p: Option<u64>) -> std::result::Result<Vec<u64>, String> {
        let get = |e: RangeEnd| match (e, p) {
            (RangeEnd::Value(v), _) => Ok(v),
            (RangeEnd::P, Some(p)) => Ok(p),
            (RangeEnd::P, None) => Err("`p` is only allowed as an endpoint of --b".to_string()),
        };
        Ok((get(self.lo)?..=get(self.hi)?).collect())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LabelledPoly {
    pub label: String,
    pub poly: Vec<TermJson>,
    pub leading: Vec<u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorsDump {
    pub params: ParamsSummary,
    pub g_prime: Vec<LabelledPoly>,
    pub patil: Vec<LabelledPoly>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LabelledElement {
    pub label: String,
    pub element: Vec<ModuleTermJson>,
    pub leading: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SyzygiesDump {
    pub params: ParamsSummary,
    pub counts: SyzygyCounts,
    pub members: Vec<LabelledElement>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
pub struct SyzygyCounts {
    pub a: usize,
    pub b: usize,
    pub l: usize,
    pub total: usize,
}

fn labelled_poly(label: String, f: &Polynomial) -> LabelledPoly {
    LabelledPoly {
        label,
        poly: poly_to_json(f),
        leading: f
            .lead()
            .map(|(m, _)| m.exponents().to_vec())
            .unwrap_or_default(),
    }
}

pub fn generators_dump(params: &CurveParams) -> GeneratorsDump {
    let ctx = OrderContext::new(params.clone());
    let set = GeneratorSet::build(&ctx);
    let patil = PatilSet::build(&ctx);
    GeneratorsDump {
        params: params.into(),
        g_prime: set
            .labelled()
            .into_iter()
            .map(|(s, f)| {
                let label = match s {
                    crate::syzygy::BasisSymbol::Psi(j) => format!("psi(b,{j})"),
                    crate::syzygy::BasisSymbol::Phi(i, j) => format!("phi({i},{j})"),
                };
                labelled_poly(label, f)
            })
            .collect(),
        patil: patil
            .members
            .iter()
            .map(|(l, f)| {
                let label = match l {
                    PatilLabel::Xi(i, j) => format!("xi({i},{j})"),
                    PatilLabel::Phi(i) => format!("phi_{i}"),
                    PatilLabel::Psi(j) => format!("psi_b,{j}"),
                    PatilLabel::Theta => "theta".to_string(),
                };
                labelled_poly(label, f)
            })
            .collect(),
    }
}

/// Rebuilds `G'` from a dump and runs the Gröbner-basis checks on it.
pub fn reverify_generators_dump(dump: &GeneratorsDump) -> crate::Result<VerificationReport> {
    let params = CurveParams::new(dump.params.m0, dump.params.d, dump.params.p)?;
    let ctx = OrderContext::new(params);
    let polys = dump
        .g_prime
        .iter()
        .map(|lp| ctx.poly_from_json(&lp.poly))
        .collect::<crate::Result<Vec<_>>>()?;
    Ok(crate::generators::check_g_prime(&ctx, &polys))
}

pub fn syzygies_dump(params: &CurveParams) -> SyzygiesDump {
    let ctx = ModuleContext::new(params.clone());
    let set = SyzygySet::build(&ctx);
    SyzygiesDump {
        params: params.into(),
        counts: SyzygyCounts {
            a: set.a.len(),
            b: set.b.len(),
            l: set.l.len(),
            total: set.len(),
        },
        members: set
            .labelled()
            .into_iter()
            .map(|(label, h)| LabelledElement {
                label: label.to_string(),
                element: ctx.element_to_json(h),
                leading: h.lead().map(|(t, _)| t.to_string()).unwrap_or_default(),
            })
            .collect(),
    }
}

fn info_json(params: &CurveParams) -> serde_json::Value {
    let top = params.min_multiple_of_top();
    let base = params.min_multiple_of_base();
    json!({
        "params": params,
        "top_relation": {
            "found": top,
            "closed_form": params.predicted_top_relation(),
            "matches": top == params.predicted_top_relation(),
        },
        "base_relation": {
            "found": base,
            "a_plus_d_closed_form": params.a_plus_d_base_relation(),
            "matches_a_plus_d": base == params.a_plus_d_base_relation(),
            "matches_a_plus_d_plus_1": base == params.derived_base_relation(),
        },
    })
}

fn info_text(params: &CurveParams) -> String {
    let mut s = String::new();
    let c = params;
    let _ = writeln!(
        s,
        "p = {}, m0 = {}, d = {}, a = {}, b = {}",
        c.p, c.m0, c.d, c.a, c.b
    );
    let _ = writeln!(s, "generators: {:?}", c.generators);
    let t = c.min_multiple_of_top();
    let tp = c.predicted_top_relation();
    let _ = writeln!(
        s,
        "min multiple of m_p: {}*{} = {}*{} + m_{}  (closed form (a+1, a+d, p-b) = ({}, {}, {}): {})",
        t.top, c.top(), t.base, c.m0, t.index, tp.top, tp.base, tp.index,
        if t == tp { "match" } else { "MISMATCH" }
    );
    let bm = c.min_multiple_of_base();
    let bs = c.a_plus_d_base_relation();
    let _ =
        writeln!(
        s,
        "min multiple of m_0: {}*{} = {}*{} + m_{}  (closed form (a+d, a, b) = ({}, {}, {}): {})",
        bm.base, c.m0, bm.top, c.top(), bm.index, bs.base, bs.top, bs.index,
        if bm == bs { "match" } else { "MISMATCH, search gives n = a+d+1" }
    );
    s
}

fn generators_text(dump: &GeneratorsDump, params: &CurveParams) -> String {
    let ctx = OrderContext::new(params.clone());
    let mut s = String::new();
    let _ = writeln!(s, "G' ({} elements):", dump.g_prime.len());
    for lp in &dump.g_prime {
        let f = ctx.poly_from_json(&lp.poly).expect("own dump");
        let lt = f.lead().map(|(m, _)| m.to_string()).unwrap_or_default();
        let _ = writeln!(s, "  {:<12} {}    LT = {}", lp.label, f, lt);
    }
    let _ = writeln!(s, "G ({} elements):", dump.patil.len());
    for lp in &dump.patil {
        let f = ctx.poly_from_json(&lp.poly).expect("own dump");
        let _ = writeln!(s, "  {:<12} {}", lp.label, f);
    }
    s
}

fn syzygies_text(params: &CurveParams) -> String {
    let ctx = ModuleContext::new(params.clone());
    let set = SyzygySet::build(&ctx);
    let mut s = String::new();
    let _ = writeln!(
        s,
        "|A| = {}, |B| = {}, |L| = {}, total {}",
        set.a.len(),
        set.b.len(),
        set.l.len(),
        set.len()
    );
    for (label, h) in set.labelled() {
        let lt = h.lead().map(|(t, _)| t.to_string()).unwrap_or_default();
        let _ = writeln!(s, "  {:<14} {}    LT = {}", label.to_string(), h, lt);
    }
    s
}

fn report_text(report: &VerificationReport) -> String {
    let mut s = String::new();
    for c in &report.checks {
        let tag = if c.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "[{tag}] {:<36} {}", c.check, c.detail);
        if let Some(w) = &c.witness {
            for v in w {
                let _ = writeln!(s, "         witness: {v}");
            }
        }
    }
    s
}

#[derive(Debug, Clone, Serialize)]
struct SweepEntry {
    p: u64,
    a: u64,
    b: u64,
    d: u64,
    m0: u64,
    outcome: SweepOutcome,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
enum SweepOutcome {
    Pass { report: VerificationReport },
    Fail { report: VerificationReport },
    Skipped { reason: String },
}

fn sweep_entries(
    p: &IntRange,
    a: &IntRange,
    b: &IntRange,
    d: &IntRange,
) -> std::result::Result<Vec<(u64, u64, u64, u64)>, String> {
    let mut out = Vec::new();
    for pv in p.values(None)? {
        for av in a.values(None)? {
            for bv in b.values(Some(pv))? {
                for dv in d.values(None)? {
                    out.push((pv, av, bv, dv));
                }
            }
        }
    }
    Ok(out)
}

fn run_sweep(entries: &[(u64, u64, u64, u64)], opts: &VerifyOptions) -> Vec<SweepEntry> {
    par::map(entries, |&(p, a, b, d)| {
        let m0 = a * p + b;
        let outcome = if !(1..=p).contains(&b) {
            SweepOutcome::Skipped {
                reason: format!("b = {b} outside [1, p]"),
            }
        } else {
            match CurveParams::new(m0, d, p as usize) {
                Err(e) => SweepOutcome::Skipped {
                    reason: e.to_string(),
                },
                Ok(params) => {
                    let report = verify_all(&params, opts);
                    if report.passed() {
                        SweepOutcome::Pass { report }
                    } else {
                        SweepOutcome::Fail { report }
                    }
                }
            }
        };
        SweepEntry {
            p,
            a,
            b,
            d,
            m0,
            outcome,
        }
    })
}

fn params_from(curve: &CurveArgs) -> crate::Result<CurveParams> {
    CurveParams::new(curve.m0, curve.d, curve.p)
}

fn emit(out: &OutputArgs, stdout: &mut dyn Write, text: &str) -> std::io::Result<()> {
    match &out.output {
        Some(path) => std::fs::write(path, text),
        None => stdout.write_all(text.as_bytes()),
    }
}

fn input_error(err: &mut dyn Write, e: &Error) -> i32 {
    let _ = writeln!(err, "error: {e}");
    EXIT_INPUT
}

/// Executes one command, writing results to `stdout` (or the `--output`
/// file) and diagnostics to `stderr`. Returns the process exit code.
pub fn run(config: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let (out, text, code) = match &config.command {
        Command::Info { curve, out } => {
            let params = match params_from(curve) {
                Ok(p) => p,
                Err(e) => return input_error(stderr, &e),
            };
            let text = match out.format {
                Format::Json => serde_json::to_string_pretty(&info_json(&params)).unwrap() + "\n",
                Format::Text => info_text(&params),
            };
            (out, text, EXIT_OK)
        }
        Command::Generators { curve, out } => {
            let params = match params_from(curve) {
                Ok(p) => p,
                Err(e) => return input_error(stderr, &e),
            };
            let dump = generators_dump(&params);
            let text = match out.format {
                Format::Json => serde_json::to_string_pretty(&dump).unwrap() + "\n",
                Format::Text => generators_text(&dump, &params),
            };
            (out, text, EXIT_OK)
        }
        Command::Syzygies { curve, out } => {
            let params = match params_from(curve) {
                Ok(p) => p,
                Err(e) => return input_error(stderr, &e),
            };
            let text = match out.format {
                Format::Json => {
                    serde_json::to_string_pretty(&syzygies_dump(&params)).unwrap() + "\n"
                }
                Format::Text => syzygies_text(&params),
            };
            (out, text, EXIT_OK)
        }
        Command::Verify { curve, checks, out } => {
            let params = match params_from(curve) {
                Ok(p) => p,
                Err(e) => return input_error(stderr, &e),
            };
            let report = verify_all(&params, &checks.options());
            let code = if report.passed() {
                EXIT_OK
            } else {
                EXIT_FAILED
            };
            let text = match out.format {
                Format::Json => {
                    let dump = syzygies_dump(&params);
                    serde_json::to_string_pretty(&json!({
                        "params": ParamsSummary::from(&params),
                        "passed": report.passed(),
                        "syzygy_counts": dump.counts,
                        "syzygies": dump.members,
                        "checks": report.checks,
                    }))
                    .unwrap()
                        + "\n"
                }
                Format::Text => {
                    let mut s = info_text(&params);
                    s.push_str(&report_text(&report));
                    let _ = writeln!(
                        s,
                        "{}",
                        if report.passed() {
                            "ALL PASS"
                        } else {
                            "FAILED"
                        }
                    );
                    s
                }
            };
            (out, text, code)
        }
        Command::Sweep {
            p,
            a,
            b,
            d,
            checks,
            out,
        } => {
            let entries = match sweep_entries(p, a, b, d) {
                Ok(e) => e,
                Err(msg) => return input_error(stderr, &Error::Parse(msg)),
            };
            let results = run_sweep(&entries, &checks.options());
            let count =
                |f: fn(&SweepOutcome) -> bool| results.iter().filter(|r| f(&r.outcome)).count();
            let passed = count(|o| matches!(o, SweepOutcome::Pass { .. }));
            let failed = count(|o| matches!(o, SweepOutcome::Fail { .. }));
            let skipped = count(|o| matches!(o, SweepOutcome::Skipped { .. }));
            let code = if failed == 0 { EXIT_OK } else { EXIT_FAILED };
            let text = match out.format {
                Format::Json => serde_json::to_string_pretty(&json!({
                    "entries": results,
                    "summary": {"total": results.len(), "passed": passed, "failed": failed, "skipped": skipped},
                }))
                .unwrap()
                    + "\n",
                Format::Text => {
                    let mut s = String::new();
                    for r in &results {
                        let head = format!("p={} a={} b={} d={} m0={}", r.p, r.a, r.b, r.d, r.m0);
                        match &r.outcome {
                            SweepOutcome::Pass { report } => {
                                let _ = writeln!(s, "PASS {head} ({} checks)", report.checks.len());
                            }
                            SweepOutcome::Fail { report } => {
                                let _ = writeln!(s, "FAIL {head}");
                                for f in report.failures() {
                                    let _ = writeln!(s, "     {}: {}", f.check, f.detail);
                                }
                            }
                            SweepOutcome::Skipped { reason } => {
                                let _ = writeln!(s, "SKIP {head} ({reason})");
                            }
                        }
                    }
                    let _ = writeln!(s, "\n{:<10}{:>8}", "total", results.len());
                    let _ = writeln!(s, "{:<10}{:>8}", "passed", passed);
                    let _ = writeln!(s, "{:<10}{:>8}", "failed", failed);
                    let _ = writeln!(s, "{:<10}{:>8}", "skipped", skipped);
                    s
                }
            };
            (out, text, code)
        }
    };
    if let Err(e) = emit(out, stdout, &text) {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_INPUT;
    }
    code
}
