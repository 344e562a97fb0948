//! Command-line front end: constants, lengths, arc traces, fundamental-domain
//! polylines, orbits under the mapping-class-group generators, and the
//! numeric claim verifier. Data goes to stdout (or --out), diagnostics to
//! stderr. Exit codes: 0 success, 1 verification failures, 2 usage errors,
//! 3 runtime errors.

mod output;

use std::fs;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use output::{fmt_sig, to_csv, to_json, OutputFormat};
use teichcurve::{
    apply_word, boundary_polyline, c0, genus_constants, minsky_embed, reduce_to_f0, trace_arc,
    triple_point, verify, ArcKind, BoundaryGeodesic, FnPoint, Genus, VerifyConfig, Word,
};

/// Genus cap: past a million, cos(π/(g+1)) saturates toward 1 in double
/// precision and the constants lose meaning.
const GENUS_CAP: u32 = 1_000_000;

#[derive(Parser)]
#[command(
    name = "teichcurve",
    version,
    about = "Systole geometry of a symmetric Teichmüller curve in Fenchel-Nielsen coordinates"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Genus constants c0, c1, c_half and the triple point (c_M, u_M).
    Constants(ConstantsArgs),
    /// Geodesic lengths of the four candidate families plus dual coordinates.
    Lengths(LengthsArgs),
    /// Sample one systole-tie arc up to the triple point.
    Trace(TraceArgs),
    /// Fundamental-domain boundary polylines and spine arcs in the half plane.
    Domain(DomainArgs),
    /// Apply a generator word to a base point and reduce the result.
    Orbit(OrbitArgs),
    /// Run the numeric claim battery and emit a report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CommonOut {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

fn genus_arg() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(2..=GENUS_CAP as i64)
}

#[derive(Args)]
struct ConstantsArgs {
    #[arg(long, value_parser = genus_arg())]
    genus: u32,
    #[command(flatten)]
    out: CommonOut,
}

#[derive(Args)]
#[command(group(ArgGroup::new("twist").required(true).multiple(false)))]
struct LengthsArgs {
    #[arg(long, value_parser = genus_arg())]
    genus: u32,
    /// Half cuff length.
    #[arg(long)]
    c: f64,
    /// Twist parameter.
    #[arg(long, group = "twist")]
    t: Option<f64>,
    /// Slope u = t/c; mutually exclusive with --t.
    #[arg(long, group = "twist")]
    u: Option<f64>,
    #[command(flatten)]
    out: CommonOut,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ArcChoice {
    BetaGamma,
    AlphaGamma,
}

#[derive(Args)]
struct TraceArgs {
    #[arg(long, value_parser = genus_arg())]
    genus: u32,
    /// Which tie locus to trace.
    #[arg(long, value_enum)]
    arc: ArcChoice,
    /// Number of samples, uniform in c.
    #[arg(long, default_value_t = 64)]
    samples: usize,
    #[command(flatten)]
    out: CommonOut,
}

#[derive(Args)]
struct DomainArgs {
    #[arg(long, value_parser = genus_arg())]
    genus: u32,
    /// Samples per polyline.
    #[arg(long, default_value_t = 64)]
    samples: usize,
    #[command(flatten)]
    out: CommonOut,
}

#[derive(Args)]
struct OrbitArgs {
    #[arg(long, value_parser = genus_arg())]
    genus: u32,
    /// Comma-separated word over A, a, G, g, R, F (D_α, D_α⁻¹, D_γ, D_γ⁻¹,
    /// reflection, dual swap), applied left to right.
    #[arg(long)]
    word: String,
    /// Base point "c,t"; defaults to the triple point.
    #[arg(long)]
    base: Option<String>,
    #[command(flatten)]
    out: CommonOut,
}

#[derive(Args)]
struct VerifyArgs {
    /// Genus to verify; repeatable.
    #[arg(long = "genus", value_parser = genus_arg(), default_values_t = [2u32, 3, 5])]
    genus: Vec<u32>,
    /// Grid resolution for the sweep claims.
    #[arg(long, default_value_t = 200)]
    grid: usize,
    /// Seed for the randomized claims.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run a single claim instead of the whole battery.
    #[arg(long)]
    claim: Option<String>,
    #[command(flatten)]
    out: CommonOut,
}

enum AppError {
    Usage(String),
    Runtime(teichcurve::Error),
}

impl From<teichcurve::Error> for AppError {
    fn from(e: teichcurve::Error) -> Self {
        AppError::Runtime(e)
    }
}

type AppResult<T> = Result<T, AppError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Runtime(e)) => {
            eprintln!("error: {e}");
            let mut src = std::error::Error::source(&e);
            while let Some(s) = src {
                eprintln!("  caused by: {s}");
                src = s.source();
            }
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> AppResult<u8> {
    match cli.cmd {
        Cmd::Constants(a) => cmd_constants(a),
        Cmd::Lengths(a) => cmd_lengths(a),
        Cmd::Trace(a) => cmd_trace(a),
        Cmd::Domain(a) => cmd_domain(a),
        Cmd::Orbit(a) => cmd_orbit(a),
        Cmd::Verify(a) => cmd_verify(a),
    }
}

fn emit(out: &CommonOut, text: String) -> AppResult<u8> {
    match &out.out {
        Some(path) => fs::write(path, text).map_err(|e| {
            AppError::Runtime(teichcurve::Error::InvalidArgument(format!(
                "cannot write {path}: {e}"
            )))
        })?,
        None => print!("{text}"),
    }
    Ok(0)
}

#[derive(Serialize)]
struct ConstantsRow {
    genus: u32,
    c0: f64,
    c1: f64,
    c_half: f64,
    c_m: f64,
    u_m: f64,
}

fn cmd_constants(a: ConstantsArgs) -> AppResult<u8> {
    let genus = Genus::new(a.genus)?;
    let k = genus_constants(genus)?;
    let tp = triple_point(genus)?;
    let row = ConstantsRow {
        genus: a.genus,
        c0: k.c0,
        c1: k.c1,
        c_half: k.c_half,
        c_m: tp.c_m,
        u_m: tp.u_m,
    };
    let text = match a.out.format {
        OutputFormat::Json => to_json(&row),
        OutputFormat::Csv => to_csv(
            &["genus", "c0", "c1", "c_half", "c_m", "u_m"],
            &[vec![
                a.genus.to_string(),
                fmt_sig(row.c0),
                fmt_sig(row.c1),
                fmt_sig(row.c_half),
                fmt_sig(row.c_m),
                fmt_sig(row.u_m),
            ]],
        ),
    };
    emit(&a.out, text)
}

#[derive(Serialize)]
struct LengthsRow {
    genus: u32,
    c: f64,
    t: f64,
    u: f64,
    lengths: teichcurve::LengthReport,
    dual: teichcurve::DualCoords,
}

fn cmd_lengths(a: LengthsArgs) -> AppResult<u8> {
    let genus = Genus::new(a.genus)?;
    let t = match (a.t, a.u) {
        (Some(t), None) => t,
        (None, Some(u)) => u * a.c,
        _ => unreachable!("clap group enforces exactly one"),
    };
    let p = FnPoint::new(genus, a.c, t)?;
    let lengths = p.lengths()?;
    let dual = p.dual()?;
    let row = LengthsRow {
        genus: a.genus,
        c: a.c,
        t,
        u: p.u(),
        lengths,
        dual,
    };
    let text = match a.out.format {
        OutputFormat::Json => to_json(&row),
        OutputFormat::Csv => to_csv(
            &[
                "genus", "c", "t", "u", "l_alpha", "l_beta", "l_gamma", "l_delta", "s", "c_alpha",
                "t_alpha", "s_alpha",
            ],
            &[vec![
                a.genus.to_string(),
                fmt_sig(a.c),
                fmt_sig(t),
                fmt_sig(row.u),
                fmt_sig(lengths.alpha),
                fmt_sig(lengths.beta),
                fmt_sig(lengths.gamma),
                fmt_sig(lengths.delta),
                fmt_sig(dual.s),
                fmt_sig(dual.c_alpha),
                fmt_sig(dual.t_alpha),
                fmt_sig(dual.s_alpha),
            ]],
        ),
    };
    emit(&a.out, text)
}

#[derive(Serialize)]
struct TraceRow {
    c: f64,
    u: f64,
    t: f64,
    l_alpha: f64,
    l_beta: f64,
    l_gamma: f64,
    l_delta: f64,
}

fn cmd_trace(a: TraceArgs) -> AppResult<u8> {
    let genus = Genus::new(a.genus)?;
    let kind = match a.arc {
        ArcChoice::BetaGamma => ArcKind::BetaGamma,
        ArcChoice::AlphaGamma => ArcKind::AlphaGamma,
    };
    let tp = triple_point(genus)?;
    let arc = trace_arc(genus, kind, tp.c_m, a.samples)?;
    let mut rows = Vec::with_capacity(arc.samples.len());
    for p in &arc.samples {
        let l = FnPoint::new(genus, p.c, p.t())?.lengths()?;
        rows.push(TraceRow {
            c: p.c,
            u: p.u,
            t: p.t(),
            l_alpha: l.alpha,
            l_beta: l.beta,
            l_gamma: l.gamma,
            l_delta: l.delta,
        });
    }
    let text = match a.out.format {
        OutputFormat::Json => to_json(&rows),
        OutputFormat::Csv => to_csv(
            &["c", "u", "t", "l_alpha", "l_beta", "l_gamma", "l_delta"],
            &rows
                .iter()
                .map(|r| {
                    vec![
                        fmt_sig(r.c),
                        fmt_sig(r.u),
                        fmt_sig(r.t),
                        fmt_sig(r.l_alpha),
                        fmt_sig(r.l_beta),
                        fmt_sig(r.l_gamma),
                        fmt_sig(r.l_delta),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
    };
    emit(&a.out, text)
}

#[derive(Serialize)]
struct PolyPoint {
    c: f64,
    t: f64,
    x: f64,
    y: f64,
}

#[derive(Serialize)]
struct Polyline {
    name: String,
    points: Vec<PolyPoint>,
}

#[derive(Serialize)]
struct DomainOut {
    genus: u32,
    polylines: Vec<Polyline>,
}

fn cmd_domain(a: DomainArgs) -> AppResult<u8> {
    let genus = Genus::new(a.genus)?;
    let n = a.samples;
    let mut polylines = Vec::new();
    let frame = (0.125f64, 8.0f64);
    for tag in BoundaryGeodesic::ALL {
        let range = match tag {
            BoundaryGeodesic::LDiagonal => (c0(genus), frame.1),
            _ => frame,
        };
        let pts = boundary_polyline(genus, tag, range, n)?;
        let points = pts
            .iter()
            .map(|p| PolyPoint {
                c: 1.0 / p.y,
                t: p.x / p.y,
                x: p.x,
                y: p.y,
            })
            .collect();
        polylines.push(Polyline {
            name: tag.name().to_string(),
            points,
        });
    }
    let tp = triple_point(genus)?;
    for (kind, name) in [
        (ArcKind::BetaGamma, "spine_beta_gamma"),
        (ArcKind::AlphaGamma, "spine_alpha_gamma"),
    ] {
        let arc = trace_arc(genus, kind, tp.c_m, n)?;
        let mut points = Vec::with_capacity(arc.samples.len());
        for p in &arc.samples {
            let e = minsky_embed(p.c, p.t())?;
            points.push(PolyPoint {
                c: p.c,
                t: p.t(),
                x: e.x,
                y: e.y,
            });
        }
        polylines.push(Polyline {
            name: name.to_string(),
            points,
        });
    }
    let out = DomainOut {
        genus: a.genus,
        polylines,
    };
    let text = match a.out.format {
        OutputFormat::Json => to_json(&out),
        OutputFormat::Csv => to_csv(
            &["name", "c", "t", "x", "y"],
            &out.polylines
                .iter()
                .flat_map(|pl| {
                    pl.points.iter().map(|p| {
                        vec![
                            pl.name.clone(),
                            fmt_sig(p.c),
                            fmt_sig(p.t),
                            fmt_sig(p.x),
                            fmt_sig(p.y),
                        ]
                    })
                })
                .collect::<Vec<_>>(),
        ),
    };
    emit(&a.out, text)
}

#[derive(Serialize)]
struct OrbitStep {
    step: usize,
    letter: String,
    c: f64,
    t: f64,
    x: f64,
    y: f64,
}

#[derive(Serialize)]
struct OrbitOut {
    genus: u32,
    word: String,
    base: (f64, f64),
    trajectory: Vec<OrbitStep>,
    reduced_c: f64,
    reduced_t: f64,
    reduction_word: String,
}

fn cmd_orbit(a: OrbitArgs) -> AppResult<u8> {
    let genus = Genus::new(a.genus)?;
    let word: Word = a
        .word
        .parse()
        .map_err(|e: teichcurve::Error| AppError::Usage(format!("bad --word: {e}")))?;
    let (bc, bt) = match &a.base {
        Some(s) => {
            let parts: Vec<&str> = s.split(',').collect();
            let parse = |v: &str| -> Result<f64, AppError> {
                v.trim()
                    .parse()
                    .map_err(|_| AppError::Usage(format!("bad --base component '{v}'")))
            };
            if parts.len() != 2 {
                return Err(AppError::Usage(format!(
                    "--base expects \"c,t\", got '{s}'"
                )));
            }
            (parse(parts[0])?, parse(parts[1])?)
        }
        None => {
            let tp = triple_point(genus)?;
            (tp.c_m, tp.c_m * tp.u_m)
        }
    };
    let (_, trajectory) = apply_word(genus, &word, bc, bt)?;
    let steps: Vec<OrbitStep> = trajectory
        .iter()
        .enumerate()
        .map(|(i, (c, t))| {
            let e = minsky_embed(*c, *t).expect("trajectory stays at positive cuff");
            OrbitStep {
                step: i,
                letter: if i == 0 {
                    String::new()
                } else {
                    word.0[i - 1].code().to_string()
                },
                c: *c,
                t: *t,
                x: e.x,
                y: e.y,
            }
        })
        .collect();
    let last = trajectory
        .last()
        .copied()
        .expect("trajectory is never empty");
    let red = reduce_to_f0(genus, last.0, last.1, 100_000)?;
    let out = OrbitOut {
        genus: a.genus,
        word: word.to_string(),
        base: (bc, bt),
        trajectory: steps,
        reduced_c: red.c,
        reduced_t: red.t,
        reduction_word: red.word.to_string(),
    };
    let text = match a.out.format {
        OutputFormat::Json => to_json(&out),
        OutputFormat::Csv => {
            let mut rows: Vec<Vec<String>> = out
                .trajectory
                .iter()
                .map(|s| {
                    vec![
                        s.step.to_string(),
                        s.letter.clone(),
                        fmt_sig(s.c),
                        fmt_sig(s.t),
                        fmt_sig(s.x),
                        fmt_sig(s.y),
                    ]
                })
                .collect();
            let re = minsky_embed(red.c, red.t)?;
            rows.push(vec![
                "reduced".to_string(),
                out.reduction_word.clone(),
                fmt_sig(red.c),
                fmt_sig(red.t),
                fmt_sig(re.x),
                fmt_sig(re.y),
            ]);
            to_csv(&["step", "letter", "c", "t", "x", "y"], &rows)
        }
    };
    emit(&a.out, text)
}

#[derive(Serialize)]
struct VerifySummary {
    total: usize,
    passed: usize,
    failed: usize,
    genus: Vec<u32>,
    grid_n: usize,
    seed: u64,
}

#[derive(Serialize)]
struct VerifyOut {
    claims: Vec<verify::ClaimResult>,
    summary: VerifySummary,
}

fn cmd_verify(a: VerifyArgs) -> AppResult<u8> {
    let cfg = VerifyConfig {
        genus_list: a.genus.clone(),
        grid_n: a.grid,
        seed: a.seed,
    };
    let claims = match &a.claim {
        Some(id) => {
            if !verify::claim_ids().contains(&id.as_str()) {
                return Err(AppError::Usage(format!(
                    "unknown claim '{id}'; known claims: {}",
                    verify::claim_ids().join(", ")
                )));
            }
            verify::run_claim(id, &cfg)?
        }
        None => verify::run_all(&cfg)?,
    };
    let passed = claims.iter().filter(|c| c.passed).count();
    let failed = claims.len() - passed;
    let out = VerifyOut {
        summary: VerifySummary {
            total: claims.len(),
            passed,
            failed,
            genus: a.genus.clone(),
            grid_n: a.grid,
            seed: a.seed,
        },
        claims,
    };
    let text = match a.out.format {
        OutputFormat::Json => to_json(&out),
        OutputFormat::Csv => to_csv(
            &[
                "claim_id",
                "genus",
                "passed",
                "worst_residual",
                "witness_c",
                "witness_t",
                "details",
            ],
            &out.claims
                .iter()
                .map(|c| {
                    vec![
                        c.claim_id.clone(),
                        c.genus.to_string(),
                        c.passed.to_string(),
                        fmt_sig(c.worst_residual),
                        c.witness.map(|w| fmt_sig(w.0)).unwrap_or_default(),
                        c.witness.map(|w| fmt_sig(w.1)).unwrap_or_default(),
                        c.details.clone(),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
    };
    emit(&a.out, text)?;
    Ok(if failed == 0 { 0 } else { 1 })
}
