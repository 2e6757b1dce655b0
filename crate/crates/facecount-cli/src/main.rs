//! Command-line front end for the `facecount` library: family construction,
//! f-vector queries, claim-verification suites, and formula tables.
//!
//! Exit codes: 0 on success, 1 when a verification check or oracle
//! comparison fails, 2 on argument or environment errors.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use facecount::combinatorics::{eta, tau, FaceCountVector};
use facecount::families::FamilySpec;
use facecount::json::{DumpJson, FaceCountJson};
use facecount::verifier::{check_tau_minimality, CheckReport, Suite};

/// Candidate subsets above which the brute-force kernel is refused without
/// `--force`.
const SCAN_LIMIT: u128 = 10_000_000;

/// Environment variable consulted for the worker count when `--workers` is
/// not given.
const WORKERS_ENV: &str = "FACECOUNT_WORKERS";

#[derive(Parser)]
#[command(
    name = "facecount",
    version,
    about = "Exact face counts for polytopes with few vertices: formulas, \
             certified constructions, and verification suites"
)]
struct Cli {
    /// Output format for fvector, verify, and table (dump always emits JSON)
    #[arg(long, value_enum, default_value_t = Format::Md, global = true)]
    format: Format,

    /// Write output to a file instead of stdout
    #[arg(long, value_name = "PATH", global = true)]
    out: Option<PathBuf>,

    /// Worker threads; overrides the FACECOUNT_WORKERS environment variable
    /// (0 or unset: one per core)
    #[arg(long, value_name = "N", global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Print the closed-form f-vector of a family member, optionally
    /// cross-checked against the brute-force kernel
    Fvector {
        /// Family spec, e.g. `j:s=3,d=5` or `tmprod:d=5,a=5,m=2`
        spec: String,

        /// Also construct the polytope and count every face by brute force
        #[arg(long)]
        oracle: bool,

        /// Run the oracle even above the subset-scan safety limit
        #[arg(long, requires = "oracle")]
        force: bool,
    },

    /// Run claim-verification suites and report failures and witnesses
    Verify {
        /// Suite name, or `all` for every suite at its default grid
        #[arg(long)]
        suite: String,

        /// Override the suite's grid bound (single suite only)
        #[arg(long, value_name = "N")]
        d_max: Option<i64>,

        /// Restrict the tau-minimality scan to these s values
        #[arg(long, value_name = "S1,S2,...", value_delimiter = ',')]
        s_set: Option<Vec<i64>>,
    },

    /// Emit a table of formula values over a dimension range
    Table {
        /// Which table to emit
        #[arg(long, value_enum)]
        which: Which,

        /// Inclusive dimension range `A..B`, or a single dimension `A`
        #[arg(long, value_name = "A..B")]
        d: DimRange,
    },

    /// Emit the exact vertex description, vertex-facet incidences, and
    /// f-vector of a family member as JSON
    Dump {
        /// Family spec, e.g. `simplex:d=3`
        spec: String,

        /// Build even above the subset-scan safety limit
        #[arg(long)]
        force: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    /// eta_k at 2d+2 vertices, the bound away from the minimal facet count
    Eta,
    /// tau_k at 2d+2 vertices (s = 3), the bound at d+2 facets
    Tau,
    /// Both bounds side by side with their order relation
    Dichotomy,
    /// The designated tau minimiser (a, 2) and its vertex count per (d, s)
    Minimisers,
}

#[derive(Clone, Copy)]
struct DimRange {
    lo: i64,
    hi: i64,
}

impl FromStr for DimRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_end = |t: &str| {
            t.parse::<i64>()
                .map_err(|_| format!("`{t}` is not an integer"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse_end(a)?, parse_end(b)?),
            None => {
                let v = parse_end(s)?;
                (v, v)
            }
        };
        if lo < 1 {
            return Err(format!("dimensions start at 1, got {lo}"));
        }
        if hi < lo {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(DimRange { lo, hi })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    configure_workers(cli.workers)?;
    let (text, code) = match &cli.command {
        Command::Fvector {
            spec,
            oracle,
            force,
        } => cmd_fvector(spec, *oracle, *force, cli.format)?,
        Command::Verify {
            suite,
            d_max,
            s_set,
        } => cmd_verify(suite, *d_max, s_set.as_deref(), cli.format)?,
        Command::Table { which, d } => (cmd_table(*which, *d, cli.format)?, ExitCode::SUCCESS),
        Command::Dump { spec, force } => (cmd_dump(spec, *force)?, ExitCode::SUCCESS),
    };
    match &cli.out {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(code)
}

fn configure_workers(flag: Option<usize>) -> Result<()> {
    let n = match flag {
        Some(n) => Some(n),
        None => match std::env::var(WORKERS_ENV) {
            Ok(text) => Some(text.parse::<usize>().with_context(|| {
                format!("{WORKERS_ENV}=`{text}` is not a worker count")
            })?),
            Err(_) => None,
        },
    };
    if let Some(n) = n {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("worker pool already configured")?;
    }
    Ok(())
}

/// `C(n, d)` with saturation: any overflow is far above [`SCAN_LIMIT`]
/// anyway.
fn candidate_subsets(n: i64, d: i64) -> u128 {
    if d < 0 || d > n {
        return 0;
    }
    let d = d.min(n - d) as u128;
    let n = n as u128;
    let mut c: u128 = 1;
    for i in 0..d {
        c = match c.checked_mul(n - i) {
            Some(x) => x / (i + 1),
            None => return u128::MAX,
        };
    }
    c
}

fn guard_scan(spec: &FamilySpec, force: bool) -> Result<()> {
    let scans = candidate_subsets(spec.vertex_count_expected(), spec.dim());
    if scans > SCAN_LIMIT && !force {
        bail!(
            "building `{spec}` scans {scans} vertex subsets, above the safety \
             limit of {SCAN_LIMIT}; pass --force to proceed"
        );
    }
    Ok(())
}

fn parse_spec(text: &str) -> Result<FamilySpec> {
    text.parse::<FamilySpec>().map_err(Into::into)
}

fn cmd_fvector(
    spec_text: &str,
    oracle: bool,
    force: bool,
    format: Format,
) -> Result<(String, ExitCode)> {
    let spec = parse_spec(spec_text)?;
    let formula = spec.expected_fvector()?;
    let oracle_vector: Option<FaceCountVector> = if oracle {
        guard_scan(&spec, force)?;
        let p = spec.build()?;
        Some(p.face_lattice().f_vector().clone())
    } else {
        None
    };
    let verdict = match (&formula, &oracle_vector) {
        (Some(f), Some(o)) => Some(f == o),
        _ => None,
    };

    let text = match format {
        Format::Md => {
            let mut t = format!("## fvector {spec}\n\n");
            match &formula {
                Some(f) => writeln!(t, "- formula: {f}").unwrap(),
                None => writeln!(t, "- formula: no closed-form prediction").unwrap(),
            }
            if let Some(o) = &oracle_vector {
                writeln!(t, "- oracle: {o}").unwrap();
            }
            match verdict {
                Some(true) => writeln!(t, "- verdict: MATCH").unwrap(),
                Some(false) => writeln!(t, "- verdict: MISMATCH").unwrap(),
                None => {}
            }
            t
        }
        Format::Json => {
            let value = serde_json::json!({
                "spec": spec.to_string(),
                "formula": formula.as_ref().map(FaceCountJson::from_vector),
                "oracle": oracle_vector.as_ref().map(FaceCountJson::from_vector),
                "verdict": verdict.map(|ok| if ok { "MATCH" } else { "MISMATCH" }),
            });
            let mut t = serde_json::to_string_pretty(&value)?;
            t.push('\n');
            t
        }
        Format::Csv => {
            let dim = spec.dim() as usize;
            let mut t = String::from("spec,k,formula,oracle\n");
            for k in 0..dim {
                let cell = |v: &Option<FaceCountVector>| {
                    v.as_ref()
                        .map(|f| f.counts()[k].to_string())
                        .unwrap_or_default()
                };
                writeln!(
                    t,
                    "{},{k},{},{}",
                    csv_escape(&spec.to_string()),
                    cell(&formula),
                    cell(&oracle_vector)
                )
                .unwrap();
            }
            t
        }
    };
    let code = if verdict == Some(false) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    };
    Ok((text, code))
}

fn cmd_verify(
    suite: &str,
    d_max: Option<i64>,
    s_set: Option<&[i64]>,
    format: Format,
) -> Result<(String, ExitCode)> {
    let reports: Vec<CheckReport> = if suite.eq_ignore_ascii_case("all") {
        if d_max.is_some() {
            bail!("--d-max cannot be combined with --suite all; run the suite alone");
        }
        if s_set.is_some() {
            bail!("--s-set cannot be combined with --suite all");
        }
        let mut all = Vec::with_capacity(Suite::ALL.len());
        for s in Suite::ALL {
            all.push(s.run(None)?);
        }
        all
    } else {
        let parsed: Suite = suite.parse()?;
        let report = match (parsed, s_set) {
            (Suite::TauMinimality, Some(set)) => {
                let dm = d_max
                    .or_else(|| Suite::TauMinimality.default_d_max())
                    .expect("tau-minimality has a default grid");
                check_tau_minimality(dm, Some(set))?
            }
            (_, Some(_)) => bail!("--s-set only applies to the tau-minimality suite"),
            (s, None) => s.run(d_max)?,
        };
        vec![report]
    };

    let failed = reports.iter().any(|r| !r.passed());
    let text = match format {
        Format::Md => {
            let mut t = String::new();
            for r in &reports {
                t.push_str(&r.to_markdown());
                t.push('\n');
            }
            t
        }
        Format::Json => {
            let mut t = serde_json::to_string_pretty(&reports)?;
            t.push('\n');
            t
        }
        Format::Csv => {
            let mut t = String::from("suite,points_checked,failures,equality_witnesses,status\n");
            for r in &reports {
                writeln!(
                    t,
                    "{},{},{},{},{}",
                    csv_escape(&r.claim_id),
                    r.points_checked,
                    r.failures.len(),
                    r.equality_witnesses.len(),
                    if r.passed() { "PASS" } else { "FAIL" }
                )
                .unwrap();
            }
            t
        }
    };
    let code = if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    };
    Ok((text, code))
}

fn cmd_table(which: Which, range: DimRange, format: Format) -> Result<String> {
    let need_at_least = |min: i64, what: &str| -> Result<()> {
        if range.lo < min {
            bail!("the {what} table needs d >= {min}, got {}", range.lo);
        }
        Ok(())
    };
    let (columns, rows): (Vec<&str>, Vec<Vec<String>>) = match which {
        Which::Eta => {
            need_at_least(3, "eta")?;
            let mut rows = Vec::new();
            for d in range.lo..=range.hi {
                for k in 1..d {
                    rows.push(vec![
                        d.to_string(),
                        k.to_string(),
                        eta(k, 2 * d + 2, d)?.to_string(),
                    ]);
                }
            }
            (vec!["d", "k", "eta"], rows)
        }
        Which::Tau => {
            need_at_least(5, "tau")?;
            let mut rows = Vec::new();
            for d in range.lo..=range.hi {
                for k in 1..d {
                    rows.push(vec![
                        d.to_string(),
                        k.to_string(),
                        tau(k, d, 3)?.to_string(),
                    ]);
                }
            }
            (vec!["d", "k", "tau"], rows)
        }
        Which::Dichotomy => {
            need_at_least(9, "dichotomy")?;
            let mut rows = Vec::new();
            for d in range.lo..=range.hi {
                for k in 1..d {
                    let e = eta(k, 2 * d + 2, d)?;
                    let t = tau(k, d, 3)?;
                    let relation = match e.cmp(&t) {
                        std::cmp::Ordering::Less => "eta<tau",
                        std::cmp::Ordering::Equal => "eta=tau",
                        std::cmp::Ordering::Greater => "eta>tau",
                    };
                    rows.push(vec![
                        d.to_string(),
                        k.to_string(),
                        e.to_string(),
                        t.to_string(),
                        relation.to_string(),
                    ]);
                }
            }
            (vec!["d", "k", "eta", "tau", "relation"], rows)
        }
        Which::Minimisers => {
            need_at_least(4, "minimisers")?;
            let mut rows = Vec::new();
            for d in range.lo..=range.hi {
                for s in 2..=d - 2 {
                    let a = (d + s) / 2 + 1;
                    let f0 = d + 2 * ((d + s) / 2) - 1;
                    let attains = if (d + s) % 2 == 0 { "yes" } else { "no" };
                    rows.push(vec![
                        d.to_string(),
                        s.to_string(),
                        a.to_string(),
                        "2".to_string(),
                        f0.to_string(),
                        attains.to_string(),
                    ]);
                }
            }
            (vec!["d", "s", "a", "m", "f_0", "attains_threshold"], rows)
        }
    };
    Ok(render_table(&columns, &rows, format))
}

fn render_table(columns: &[&str], rows: &[Vec<String>], format: Format) -> String {
    match format {
        Format::Md => {
            let mut t = String::new();
            writeln!(t, "| {} |", columns.join(" | ")).unwrap();
            writeln!(t, "|{}", " --- |".repeat(columns.len())).unwrap();
            for row in rows {
                writeln!(t, "| {} |", row.join(" | ")).unwrap();
            }
            t
        }
        Format::Csv => {
            let mut t = String::new();
            writeln!(t, "{}", columns.join(",")).unwrap();
            for row in rows {
                let cells: Vec<String> = row.iter().map(|c| csv_escape(c)).collect();
                writeln!(t, "{}", cells.join(",")).unwrap();
            }
            t
        }
        Format::Json => {
            let value = serde_json::json!({
                "columns": columns,
                "rows": rows,
            });
            let mut t = serde_json::to_string_pretty(&value).expect("tables serialize");
            t.push('\n');
            t
        }
    }
}

fn cmd_dump(spec_text: &str, force: bool) -> Result<String> {
    let spec = parse_spec(spec_text)?;
    guard_scan(&spec, force)?;
    let p = spec.build()?;
    let dump = DumpJson::new(&spec.to_string(), &p);
    let mut text = serde_json::to_string_pretty(&dump)?;
    text.push('\n');
    Ok(text)
}

fn csv_escape(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}
