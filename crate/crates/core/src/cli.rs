//! Command-line front end.
//!
//! Subcommands: `analyze`, `orthogonality`, `parseval`, `reparam`,
//! `random-suite`. Every JSON document embeds the configuration that produced
//! it, and every float is written with 17 significant digits.
//!
//! Exit codes: 0 when every check passes, 2 when a check is violated, 1 for
//! usage, input or parse errors.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::curve::{
    arc_constraint_residual, make_family, make_reparam, max_speed_deviation, reparametrize_unit_speed,
    CurveDescriptor, CurveSpec,
};
use crate::error::Error;
use crate::isoperimetric::{hurwitz_report_with, plot_samples, HurwitzSettings, IsoperimetricReport};
use crate::quadrature::PeriodicRule;
use crate::random::{case_rng, random_coeffs, random_regular_curve};
use crate::spectral::{
    deriv_parseval_check_with, orthogonality_table_with, parseval_check_with, wirtinger_check_with,
    EQUALITY_WITNESS_TOL,
};
use crate::trigseries::FourierCoeffs;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "isoperimetry", version, about = "Numerical checks of the isoperimetric inequality")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Absolute tolerance for quadrature and identity checks.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,

    /// Fourier order for coefficient extraction.
    #[arg(long, global = true, default_value_t = 32)]
    pub order: usize,

    /// Grid size: arc-length knots, simplicity polygon and plot samples.
    #[arg(long, global = true, default_value_t = 1024)]
    pub grid: usize,

    /// Seed for random inputs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Starting trapezoid grid for the spectral checks.
    #[arg(long, global = true, default_value_t = 64)]
    pub min_nodes: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the full chain on one or more curve specs.
    Analyze {
        /// Curve JSON file (one object or an array); `-` for stdin.
        input: Option<PathBuf>,
        /// Inline curve JSON.
        #[arg(long)]
        spec: Option<String>,
    },
    /// Tabulate the trigonometric orthogonality integrals.
    Orthogonality {
        #[arg(long, default_value_t = 8)]
        max_order: usize,
    },
    /// Parseval and Wirtinger checks on a coefficient file.
    Parseval {
        /// Coefficient JSON file; `-` for stdin.
        input: Option<PathBuf>,
        /// Use a seeded random zero-mean series of this order instead.
        #[arg(long)]
        random: Option<usize>,
    },
    /// Reparametrize a curve by arc length and emit `(θ, f, g, f', g')` samples.
    Reparam {
        input: Option<PathBuf>,
        #[arg(long)]
        spec: Option<String>,
    },
    /// Seeded property battery over random series and curves.
    RandomSuite {
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

/// The configuration echoed into every report.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: &'static str,
    pub tol: f64,
    pub order: usize,
    pub grid: usize,
    pub seed: u64,
    pub min_nodes: usize,
    pub format: Format,
}

impl RunConfig {
    fn from_cli(cli: &Cli) -> Result<Self, String> {
        if !(cli.tol > 0.0) {
            return Err(format!("--tol must be positive, got {}", cli.tol));
        }
        if cli.grid < 64 {
            return Err(format!("--grid must be at least 64, got {}", cli.grid));
        }
        if cli.order == 0 {
            return Err("--order must be positive".into());
        }
        if cli.min_nodes == 0 {
            return Err("--min-nodes must be positive".into());
        }
        let command = match cli.command {
            Command::Analyze { .. } => "analyze",
            Command::Orthogonality { .. } => "orthogonality",
            Command::Parseval { .. } => "parseval",
            Command::Reparam { .. } => "reparam",
            Command::RandomSuite { .. } => "random-suite",
        };
        Ok(Self {
            command,
            tol: cli.tol,
            order: cli.order,
            grid: cli.grid,
            seed: cli.seed,
            min_nodes: cli.min_nodes,
            format: cli.format,
        })
    }

    fn hurwitz(&self) -> HurwitzSettings {
        HurwitzSettings {
            fourier_order: self.order,
            tol: self.tol,
            knots: self.grid,
            simplicity_samples: self.grid,
        }
    }

    fn rule(&self) -> PeriodicRule {
        PeriodicRule::new(self.min_nodes, self.tol).expect("validated")
    }
}

/// One curve as read from JSON: a family descriptor plus optional id and
/// orientation flag.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveInput {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    #[serde(flatten)]
    pub shape: CurveDescriptor,
    #[serde(default)]
    pub reversed: bool,
}

impl CurveInput {
    pub fn build(&self) -> crate::Result<CurveSpec> {
        let c = make_family(&self.shape)?;
        if self.reversed {
            c.reversed()
        } else {
            Ok(c)
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    Many(Vec<Value>),
    One(Value),
}

/// Parses a curve document: one curve object or an array of them.
pub fn parse_curves(text: &str) -> Result<Vec<CurveInput>, String> {
    let doc: OneOrMany = serde_json::from_str(text).map_err(|e| format!("malformed JSON: {e}"))?;
    let items = match doc {
        OneOrMany::Many(v) => v,
        OneOrMany::One(v) => vec![v],
    };
    items
        .into_iter()
        .enumerate()
        .map(|(i, v)| parse_curve(i, v))
        .collect()
}

fn parse_curve(index: usize, v: Value) -> Result<CurveInput, String> {
    let kind = v.get("kind").and_then(Value::as_str).map(str::to_owned);
    serde_json::from_value::<CurveInput>(v).map_err(|e| match kind {
        Some(k) => format!("curve {index} (kind `{k}`): {e}"),
        None => format!("curve {index}: {e}"),
    })
}

/// Entry point used by the binary. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = write!(stderr, "{e}");
            return code;
        }
    };
    let config = match RunConfig::from_cli(&cli) {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_INPUT;
        }
    };
    let outcome = match &cli.command {
        Command::Analyze { input, spec } => cmd_analyze(&config, input.as_ref(), spec.as_deref()),
        Command::Orthogonality { max_order } => cmd_orthogonality(&config, *max_order),
        Command::Parseval { input, random } => cmd_parseval(&config, input.as_ref(), *random),
        Command::Reparam { input, spec } => cmd_reparam(&config, input.as_ref(), spec.as_deref()),
        Command::RandomSuite { count } => cmd_random_suite(&config, *count),
    };
    match outcome {
        Ok(Output { text, code, notices }) => {
            for n in notices {
                let _ = writeln!(stderr, "notice: {n}");
            }
            let written = match &cli.out {
                Some(path) => fs::write(path, &text),
                None => stdout.write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: cannot write output: {e}");
                return EXIT_INPUT;
            }
            code
        }
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INPUT
        }
    }
}

/// Rendered output of one subcommand.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub code: i32,
    pub notices: Vec<String>,
}

type CmdResult = Result<Output, String>;

fn read_input(path: Option<&PathBuf>, inline: Option<&str>) -> Result<String, String> {
    match (path, inline) {
        (Some(_), Some(_)) => Err("give either an input file or --spec, not both".into()),
        (None, Some(s)) => Ok(s.to_owned()),
        (Some(p), None) if p.as_os_str() == "-" => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| format!("cannot read stdin: {e}"))?;
            Ok(s)
        }
        (Some(p), None) => fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display())),
        (None, None) => Err("missing input: pass a file path, `-`, or --spec".into()),
    }
}

fn curve_label(input: &CurveInput, index: usize) -> String {
    input.id.clone().unwrap_or_else(|| format!("curve-{index}"))
}

#[derive(Serialize)]
struct AnalyzeRow {
    id: String,
    curve: CurveInput,
    report: IsoperimetricReport,
}

pub fn cmd_analyze(config: &RunConfig, input: Option<&PathBuf>, spec: Option<&str>) -> CmdResult {
    let text = read_input(input, spec)?;
    let curves = parse_curves(&text)?;
    let settings = config.hurwitz();
    let rows: Vec<AnalyzeRow> = curves
        .into_par_iter()
        .enumerate()
        .map(|(i, c)| {
            let id = curve_label(&c, i);
            let report = c
                .build()
                .and_then(|curve| hurwitz_report_with(&curve, &settings))
                .map_err(|e| format!("{id}: {e}"))?;
            Ok(AnalyzeRow { id, curve: c, report })
        })
        .collect::<Result<_, String>>()?;

    let all_ok = rows.iter().all(|r| r.report.chain_ok);
    let notices = rows
        .iter()
        .flat_map(|r| r.report.warnings.iter().map(move |w| format!("{}: {w}", r.id)))
        .collect();
    let text = match config.format {
        Format::Json => to_json(&json!({ "config": config, "reports": rows, "all_chain_ok": all_ok })),
        Format::Csv => {
            let mut s = String::from("curve_id,L,A,ratio,deficit,chain_ok\n");
            for r in &rows {
                let rep = &r.report;
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    csv_field(&r.id),
                    num(rep.length),
                    num(rep.area_shoelace),
                    num(rep.ratio),
                    num(rep.deficit),
                    rep.chain_ok
                );
            }
            s
        }
    };
    Ok(Output {
        text,
        code: if all_ok { EXIT_OK } else { EXIT_VIOLATION },
        notices,
    })
}

pub fn cmd_orthogonality(config: &RunConfig, max_order: usize) -> CmdResult {
    if max_order == 0 {
        return Err("--max-order must be at least 1".into());
    }
    let table = orthogonality_table_with(max_order, &config.rule()).map_err(|e| e.to_string())?;
    let max_residual = table.iter().map(|e| e.residual).fold(0.0, f64::max);
    let ok = max_residual <= config.tol;
    let text = match config.format {
        Format::Json => to_json(&json!({
            "config": config,
            "max_order": max_order,
            "entries": table,
            "max_residual": max_residual,
            "ok": ok,
        })),
        Format::Csv => {
            let mut s = String::from("kind,n,m,computed,expected,residual\n");
            for e in &table {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    e.kind.label(),
                    e.n,
                    e.m,
                    num(e.computed),
                    num(e.expected),
                    num(e.residual)
                );
            }
            s
        }
    };
    Ok(Output {
        text,
        code: if ok { EXIT_OK } else { EXIT_VIOLATION },
        notices: Vec::new(),
    })
}

pub fn cmd_parseval(config: &RunConfig, input: Option<&PathBuf>, random: Option<usize>) -> CmdResult {
    let coeffs = match random {
        Some(0) => return Err("--random order must be positive".into()),
        Some(order) => random_coeffs(&mut case_rng(config.seed, 0), order, true),
        None => {
            let text = read_input(input, None)?;
            serde_json::from_str::<FourierCoeffs>(&text).map_err(|e| format!("invalid coefficient file: {e}"))?
        }
    };
    let rule = config.rule();
    let tol = config.tol;
    let parseval = parseval_check_with(&coeffs, &rule).map_err(|e| e.to_string())?;
    let (dl, dr) = deriv_parseval_check_with(&coeffs, &rule).map_err(|e| e.to_string())?;
    let deriv_residual = (dl - dr).abs();

    let mut notices = Vec::new();
    let wirtinger = match wirtinger_check_with(&coeffs, tol, &rule) {
        Ok(w) => Some(w),
        Err(Error::ZeroMeanViolated { a0, .. }) => {
            notices.push(format!("Wirtinger check skipped: series has nonzero mean (a0 = {a0:e})"));
            None
        }
        Err(e) => return Err(e.to_string()),
    };

    let ok = parseval.residual <= tol * parseval.rhs.max(1.0)
        && parseval.cross_term.abs() <= tol * parseval.rhs.max(1.0)
        && deriv_residual <= tol * dr.max(1.0)
        && wirtinger
            .as_ref()
            .is_none_or(|w| w.slack >= -tol * w.int_fprime_sq.max(1.0));

    let text = match config.format {
        Format::Json => to_json(&json!({
            "config": config,
            "coeffs": coeffs,
            "parseval": parseval,
            "deriv_parseval": { "lhs": dl, "rhs": dr, "residual": deriv_residual },
            "wirtinger": wirtinger,
            "notices": notices,
            "ok": ok,
        })),
        Format::Csv => {
            let mut s = String::from("quantity,value\n");
            let mut row = |k: &str, v: f64| {
                let _ = writeln!(s, "{k},{}", num(v));
            };
            row("parseval_lhs", parseval.lhs);
            row("parseval_rhs", parseval.rhs);
            row("parseval_residual", parseval.residual);
            row("cross_term", parseval.cross_term);
            row("deriv_parseval_lhs", dl);
            row("deriv_parseval_rhs", dr);
            if let Some(w) = &wirtinger {
                row("wirtinger_int_f_sq", w.int_f_sq);
                row("wirtinger_int_fprime_sq", w.int_fprime_sq);
                row("wirtinger_slack", w.slack);
                row("wirtinger_tail_energy", w.tail_energy);
            }
            s
        }
    };
    Ok(Output {
        text,
        code: if ok { EXIT_OK } else { EXIT_VIOLATION },
        notices,
    })
}

pub fn cmd_reparam(config: &RunConfig, input: Option<&PathBuf>, spec: Option<&str>) -> CmdResult {
    let text = read_input(input, spec)?;
    let curves = parse_curves(&text)?;
    let [curve] = <[CurveInput; 1]>::try_from(curves)
        .map_err(|v| format!("reparam takes exactly one curve, got {}", v.len()))?;
    let base = curve.build().map_err(|e| e.to_string())?;
    let unit = reparametrize_unit_speed(&base, config.grid).map_err(|e| e.to_string())?;
    let rc = make_reparam(&unit).map_err(|e| e.to_string())?;
    let residual = arc_constraint_residual(&rc);
    let rows = plot_samples(&rc, config.grid);
    let ok = residual <= crate::curve::REPARAM_SPEED_TOL;

    let text = match config.format {
        Format::Json => to_json(&json!({
            "config": config,
            "curve": curve,
            "L": rc.length(),
            "speed_deviation": max_speed_deviation(&unit),
            "arc_constraint_residual": residual,
            "samples": rows
                .iter()
                .map(|r| json!({"theta": r[0], "f": r[1], "g": r[2], "df": r[3], "dg": r[4]}))
                .collect::<Vec<_>>(),
            "ok": ok,
        })),
        Format::Csv => {
            let mut s = String::from("theta,f,g,df,dg\n");
            for r in &rows {
                let _ = writeln!(s, "{},{},{},{},{}", num(r[0]), num(r[1]), num(r[2]), num(r[3]), num(r[4]));
            }
            s
        }
    };
    Ok(Output {
        text,
        code: if ok { EXIT_OK } else { EXIT_VIOLATION },
        notices: Vec::new(),
    })
}

/// Named checks in the random battery, in report order.
pub const SUITE_CHECKS: [&str; 9] = [
    "parseval",
    "parseval_cross_term",
    "deriv_parseval",
    "wirtinger",
    "wirtinger_witness",
    "ibp",
    "chain",
    "scale_invariance",
    "translation_invariance",
];

#[derive(Debug, Clone, Serialize)]
struct CheckOutcome {
    check: &'static str,
    value: f64,
    passed: bool,
}

fn outcome(check: &'static str, value: f64, passed: bool) -> CheckOutcome {
    CheckOutcome { check, value, passed }
}

/// Runs every check for case `index`; each case has its own RNG stream.
fn suite_case(seed: u64, index: u64, settings: &HurwitzSettings) -> crate::Result<Vec<CheckOutcome>> {
    let mut rng = case_rng(seed, index);
    let rule = PeriodicRule::new(64, 1e-12)?;
    let mut out = Vec::with_capacity(SUITE_CHECKS.len());

    let n = rand::Rng::gen_range(&mut rng, 1..=64);
    let c = random_coeffs(&mut rng, n, false);
    let p = parseval_check_with(&c, &rule)?;
    out.push(outcome("parseval", p.residual, p.residual <= 1e-9));
    out.push(outcome("parseval_cross_term", p.cross_term.abs(), p.cross_term.abs() <= 1e-10));

    let n = rand::Rng::gen_range(&mut rng, 1..=32);
    let c = random_coeffs(&mut rng, n, true);
    let (dl, dr) = deriv_parseval_check_with(&c, &rule)?;
    out.push(outcome("deriv_parseval", (dl - dr).abs(), (dl - dr).abs() <= 1e-9));

    // Every fourth case is a pure first harmonic to exercise the equality case.
    let w_coeffs = if index.is_multiple_of(4) {
        FourierCoeffs::zeros(0)
            .with_cos(1, rand::Rng::gen_range(&mut rng, -1.0..=1.0))
            .with_sin(1, rand::Rng::gen_range(&mut rng, -1.0..=1.0))
    } else {
        c
    };
    let w = wirtinger_check_with(&w_coeffs, EQUALITY_WITNESS_TOL, &rule)?;
    out.push(outcome("wirtinger", -w.slack, w.slack >= -1e-9));
    let pure = w.tail_energy <= EQUALITY_WITNESS_TOL;
    out.push(outcome("wirtinger_witness", w.tail_energy, w.equality_witness.is_some() == pure));

    let curve = random_regular_curve(&mut rng, 4).curve;
    let r = hurwitz_report_with(&curve, settings)?;
    let ibp_bound = 1e-8 * (1.0 + r.area_simplified.abs());
    out.push(outcome("ibp", r.ibp_residual, r.ibp_residual <= ibp_bound));
    let chain = r.chain_ok
        && 4.0 * std::f64::consts::PI * r.area_shoelace.abs() <= r.length * r.length * (1.0 + 1e-8)
        && r.area_simplified <= r.amgm_bound + 1e-9
        && r.amgm_bound <= r.wirtinger_bound + 1e-9
        && r.final_bound_residual <= 1e-8 * r.length * r.length;
    out.push(outcome("chain", r.ratio, chain));

    let mut worst_scale: f64 = 0.0;
    for factor in [0.5, 2.0] {
        let s = hurwitz_report_with(&curve.scaled(factor)?, settings)?;
        worst_scale = worst_scale.max((s.ratio - r.ratio).abs());
    }
    out.push(outcome("scale_invariance", worst_scale, worst_scale <= 1e-8));

    let dx = rand::Rng::gen_range(&mut rng, -3.0..=3.0);
    let dy = rand::Rng::gen_range(&mut rng, -3.0..=3.0);
    let t = hurwitz_report_with(&curve.translated(dx, dy)?, settings)?;
    let worst_translation = (t.length - r.length)
        .abs()
        .max((t.area_shoelace.abs() - r.area_shoelace.abs()).abs())
        .max((t.ratio - r.ratio).abs());
    out.push(outcome("translation_invariance", worst_translation, worst_translation <= 1e-9));
    Ok(out)
}

#[derive(Serialize)]
struct CheckSummary {
    name: &'static str,
    passed: usize,
    failed: usize,
    worst: f64,
}

#[derive(Serialize)]
struct SuiteFailure {
    seed: u64,
    case: u64,
    check: String,
    value: f64,
}

pub fn cmd_random_suite(config: &RunConfig, count: usize) -> CmdResult {
    if count == 0 {
        return Err("--count must be at least 1".into());
    }
    let settings = HurwitzSettings {
        fourier_order: config.order,
        tol: config.tol,
        knots: config.grid,
        simplicity_samples: 64,
    };
    let cases: Vec<crate::Result<Vec<CheckOutcome>>> = (0..count as u64)
        .into_par_iter()
        .map(|i| suite_case(config.seed, i, &settings))
        .collect();

    let mut summaries: Vec<CheckSummary> = SUITE_CHECKS
        .iter()
        .map(|&name| CheckSummary {
            name,
            passed: 0,
            failed: 0,
            worst: 0.0,
        })
        .collect();
    let mut failures = Vec::new();
    for (i, case) in cases.into_iter().enumerate() {
        match case {
            Ok(outcomes) => {
                for o in outcomes {
                    let s = summaries.iter_mut().find(|s| s.name == o.check).expect("known check");
                    s.worst = s.worst.max(o.value);
                    if o.passed {
                        s.passed += 1;
                    } else {
                        s.failed += 1;
                        failures.push(SuiteFailure {
                            seed: config.seed,
                            case: i as u64,
                            check: o.check.to_owned(),
                            value: o.value,
                        });
                    }
                }
            }
            Err(e) => failures.push(SuiteFailure {
                seed: config.seed,
                case: i as u64,
                check: format!("error: {e}"),
                value: f64::NAN,
            }),
        }
    }
    let ok = failures.is_empty();
    let text = match config.format {
        Format::Json => to_json(&json!({
            "config": config,
            "count": count,
            "checks": summaries,
            "failures": failures,
            "ok": ok,
        })),
        Format::Csv => {
            let mut s = String::from("check,passed,failed,worst\n");
            for c in &summaries {
                let _ = writeln!(s, "{},{},{},{}", c.name, c.passed, c.failed, num(c.worst));
            }
            for f in &failures {
                let _ = writeln!(s, "# failure seed={} case={} check={}", f.seed, f.case, f.check);
            }
            s
        }
    };
    Ok(Output {
        text,
        code: if ok { EXIT_OK } else { EXIT_VIOLATION },
        notices: Vec::new(),
    })
}

/// Decimal with 17 significant digits.
pub fn num(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        v.to_string()
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

/// Pretty JSON whose floats carry 17 significant digits.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, PreciseFormatter::default());
    value.serialize(&mut ser).expect("in-memory serialization");
    let mut s = String::from_utf8(buf).expect("serde_json emits UTF-8");
    s.push('\n');
    s
}

#[derive(Default)]
struct PreciseFormatter {
    pretty: serde_json::ser::PrettyFormatter<'static>,
}

macro_rules! delegate {
    ($($name:ident($($arg:ident: $ty:ty),*);)*) => {
        $(
            fn $name<W: ?Sized + Write>(&mut self, w: &mut W $(, $arg: $ty)*) -> io::Result<()> {
                self.pretty.$name(w $(, $arg)*)
            }
        )*
    };
}

impl serde_json::ser::Formatter for PreciseFormatter {
    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        w.write_all(num(value).as_bytes())
    }

    fn write_f32<W: ?Sized + Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(w, value as f64)
    }

    delegate! {
        begin_array();
        end_array();
        begin_array_value(first: bool);
        end_array_value();
        begin_object();
        end_object();
        begin_object_key(first: bool);
        end_object_key();
        begin_object_value();
        end_object_value();
    }
}
