use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use sympsum_core::calculus::bmy_report;
use sympsum_core::dsl::{self, Phase, Value};
use sympsum_core::geography;
use sympsum_core::pipeline::{self, Check, Mode, Severity};
use sympsum_core::ManifoldRecord;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Exact characteristic-number calculus for 4-manifold surgeries.
#[derive(Parser)]
#[command(name = "sympsum", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a .geo construction script.
    Build(BuildArgs),
    /// Check every closed form and tabulated value of the K_n family.
    VerifyPaper {
        /// Emit the checks as a JSON array.
        #[arg(long)]
        json: bool,
    },
    /// Characteristic numbers of K_n over a range of n.
    Geography {
        #[arg(long)]
        n_min: u64,
        #[arg(long)]
        n_max: u64,
        /// Write CSV here instead of standard output.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Also write an SVG scatter of (chi_h, c1^2).
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Knot surgeries on K_n with torus and twist knots, compared by SW ledger.
    Exotic {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        count: usize,
    },
}

#[derive(Args)]
struct BuildArgs {
    script: PathBuf,
    /// Evaluate at this value of n.
    #[arg(long, conflicts_with = "symbolic")]
    n: Option<u64>,
    /// Keep n symbolic (the default).
    #[arg(long)]
    symbolic: bool,
}

/// An error with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn failed(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_FAIL,
            message: message.into(),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::failed(format!("{e:#}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = io::stdout();
    let mut out = out.lock();
    let result = match cli.command {
        Command::Build(args) => build(args, &mut out),
        Command::VerifyPaper { json } => verify(json, &mut out),
        Command::Geography { n_min, n_max, csv, svg } => geography_cmd(n_min, n_max, csv, svg, &mut out),
        Command::Exotic { n, count } => exotic(n, count, &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("sympsum: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn build(args: BuildArgs, out: &mut impl Write) -> Result<u8, Failure> {
    let src = fs::read_to_string(&args.script)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", args.script.display())))?;
    let mode = match args.n {
        Some(n) if n < 2 => return Err(Failure::usage(format!("--n {n}: constructions need n >= 2"))),
        Some(n) => Mode::numeric(n),
        None => Mode::Symbolic,
    };
    let name = args.script.display().to_string();
    let script = dsl::parse(&src).map_err(|d| Failure::usage(format!("{name}:{d}")))?;
    let ev = dsl::evaluate(&script, &mode).map_err(|d| {
        let msg = format!("{name}:{d}");
        if d.phase == Phase::Eval {
            Failure::failed(msg)
        } else {
            Failure::usage(msg)
        }
    })?;
    write_value(&ev.report, out).context("writing output")?;
    writeln!(out, "# {} ({})", ev.report_label, ev.mode).context("writing output")?;
    Ok(0)
}

fn write_value(v: &Value, out: &mut impl Write) -> io::Result<()> {
    match v {
        Value::Manifold(m) => write_manifold(m, out),
        Value::Scalar(s) => writeln!(out, "value = {s}"),
        Value::Surface(s) => {
            writeln!(out, "genus = {}", s.genus)?;
            writeln!(out, "self_int = {}", s.self_int)
        }
        Value::Knot(k) => writeln!(out, "knot = {k}"),
    }
}

fn write_manifold(m: &ManifoldRecord, out: &mut impl Write) -> io::Result<()> {
    writeln!(out, "c2 = {}", m.c2())?;
    writeln!(out, "c1^2 = {}", m.c1sq())?;
    writeln!(out, "chi_h = {}", m.chi_h())?;
    writeln!(out, "sigma = {}", m.sigma())?;
    if let Ok(b) = bmy_report(m) {
        writeln!(out, "bmy: ratio {}, gap {}, {}", b.ratio, b.gap, b.side)?;
    }
    writeln!(out, "simply connected: {}", m.simply_connected)?;
    writeln!(out, "symplectic: {}", m.symplectic)?;
    if let Some(sw) = &m.sw {
        writeln!(out, "sw = {sw}")?;
    }
    for s in m.surfaces.values() {
        writeln!(out, "surface {s}")?;
    }
    Ok(())
}

fn check_line(c: &Check) -> String {
    let status = match (c.pass, c.severity) {
        (true, _) => "PASS",
        (false, Severity::Warning) => "WARN",
        (false, Severity::Hard) => "FAIL",
    };
    format!("{status} {}: expected {}, got {}", c.name, c.expected, c.got)
}

fn verify(json: bool, out: &mut impl Write) -> Result<u8, Failure> {
    let report = pipeline::verify_paper().context("running the constructions")?;
    if json {
        let rows: Vec<_> = report.checks.iter().map(Check::row).collect();
        serde_json::to_writer_pretty(&mut *out, &rows).context("writing json")?;
        writeln!(out).context("writing output")?;
    } else {
        for c in &report.checks {
            writeln!(out, "{}", check_line(c)).context("writing output")?;
        }
        let warnings: Vec<_> = report.warnings().collect();
        if !warnings.is_empty() {
            writeln!(out, "\nwarnings:").context("writing output")?;
            for w in warnings {
                writeln!(out, "  {}", w.name).context("writing output")?;
                if let Some(note) = &w.note {
                    writeln!(out, "    {note}").context("writing output")?;
                }
            }
        }
        let failed = report.failures().count();
        writeln!(out, "\n{} checks, {failed} failed", report.checks.len()).context("writing output")?;
    }
    for w in report.warnings() {
        eprintln!("warning: {}: expected {}, got {}", w.name, w.expected, w.got);
    }
    Ok(if report.all_pass() { 0 } else { EXIT_FAIL })
}

fn geography_cmd(
    n_min: u64,
    n_max: u64,
    csv: Option<PathBuf>,
    svg: Option<PathBuf>,
    out: &mut impl Write,
) -> Result<u8, Failure> {
    if n_min < 2 || n_min > n_max {
        return Err(Failure::usage(format!(
            "need 2 <= --n-min <= --n-max, got {n_min}..{n_max}"
        )));
    }
    let rows = geography::scan(n_min, n_max).context("scanning")?;
    let text = geography::to_csv(&rows);
    match csv {
        Some(path) => fs::write(&path, &text).with_context(|| format!("writing {}", path.display()))?,
        None => out.write_all(text.as_bytes()).context("writing output")?,
    }
    if let Some(path) = svg {
        fs::write(&path, geography::render_svg(&rows)).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(0)
}

fn exotic(n: u64, count: usize, out: &mut impl Write) -> Result<u8, Failure> {
    if n < 2 || count == 0 {
        return Err(Failure::usage("need --n >= 2 and --count >= 1"));
    }
    let r = pipeline::exotic_family(n, count).context("building the family")?;
    let mut w = || -> io::Result<()> {
        writeln!(out, "base sw = {}", r.base_sw)?;
        for (i, e) in r.entries.iter().enumerate() {
            let class = if e.symplectic { "symplectic" } else { "non-symplectic" };
            writeln!(out, "{i:>4} {:<12} {class:<15} monic={:<5} sw = {}", e.knot.to_string(), e.monic, e.sw)?;
        }
        for note in &r.notes {
            writeln!(out, "note: {note}")?;
        }
        writeln!(
            out,
            "{} entries: {} symplectic, {} non-symplectic, {} collisions",
            r.entries.len(),
            r.symplectic_count(),
            r.non_symplectic_count(),
            r.collisions.len()
        )
    };
    w().context("writing output")?;
    let ok = r.pairwise_distinct() && r.symplectic_count() == count && r.non_symplectic_count() == count;
    Ok(if ok { 0 } else { EXIT_FAIL })
}
