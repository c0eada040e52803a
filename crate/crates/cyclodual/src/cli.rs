//! Command-line surface: build constructions, reproduce parameter tables,
//! compute minimum distances of described codes, re-verify reports, and
//! expose factorization/coset utilities.
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad input,
//! 3 theorem-check violation.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::construct::{self, ConstructError, PipelineOutput};
use crate::cyclo;
use crate::gf;
use crate::mindist::{
    self, DEFAULT_BZ_BUDGET, DEFAULT_EXHAUSTIVE_BUDGET, DEFAULT_WITNESS_BUDGET,
};
use crate::polyring;
use crate::report::{
    self, distance_json, realize, verify_report, CodeDescriptor, ConstructionReport,
    DistanceJson, DistanceOptions, Engine, ReportError,
};

#[derive(Parser)]
#[command(
    name = "cyclodual",
    version,
    about = "Construct and verify self-dual cyclic and linear codes over finite fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Auto,
    Exhaustive,
    Bz,
    Witness,
    Halves,
    None,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Auto => Engine::Auto,
            EngineArg::Exhaustive => Engine::Exhaustive,
            EngineArg::Bz => Engine::Bz,
            EngineArg::Witness => Engine::Witness,
            EngineArg::Halves => Engine::Halves,
            EngineArg::None => Engine::None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Thm51,
    Thm52,
    Thm62,
    Thm72,
}

#[derive(Args)]
struct EngineOpts {
    /// Distance engine
    #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
    engine: EngineArg,
    /// Codeword budget for exhaustive enumeration
    #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_BUDGET)]
    exhaustive_budget: u128,
    /// Combination budget for the certified information-set engine
    #[arg(long, default_value_t = DEFAULT_BZ_BUDGET)]
    bz_budget: u128,
    /// Combination budget for randomized witness search
    #[arg(long, default_value_t = DEFAULT_WITNESS_BUDGET)]
    witness_budget: u64,
    /// Seed for randomized witness search
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Target weight for witness search (defaults to the structural bound)
    #[arg(long)]
    target: Option<u64>,
}

impl EngineOpts {
    fn to_options(&self) -> DistanceOptions {
        DistanceOptions {
            engine: self.engine.into(),
            exhaustive_budget: self.exhaustive_budget,
            bz_budget: self.bz_budget,
            witness_budget: self.witness_budget,
            seed: self.seed,
            target: self.target,
        }
    }
}

#[derive(Args)]
struct OutputOpts {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run a construction pipeline and report the resulting code
    Build {
        construction: Family,
        /// Field order q (thm51/thm62) or subfield order q1 (thm52)
        #[arg(long)]
        q: Option<u64>,
        /// Extension exponent m (odd)
        #[arg(long)]
        m: Option<u64>,
        /// Divisor mu of q^m - 1
        #[arg(long)]
        mu: Option<u64>,
        /// Prime length n = 7 (mod 8) (thm72)
        #[arg(long)]
        n: Option<u64>,
        #[command(flatten)]
        engine: EngineOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Emit one row per parameter tuple of a family
    Table {
        family: Family,
        /// Field order q (thm51; default 2)
        #[arg(long)]
        q: Option<u64>,
        /// Largest odd m to include (thm51; default 5)
        #[arg(long)]
        m_max: Option<u64>,
        /// Divisor mu (thm51; default 1)
        #[arg(long)]
        mu: Option<u64>,
        /// Explicit lengths (thm72; default 7 23 31 47 71 79 103)
        #[arg(long, num_args = 0..)]
        n: Vec<u64>,
        #[command(flatten)]
        engine: EngineOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Compute the minimum distance of a code given by a descriptor file
    Mindist {
        /// JSON code descriptor ({"kind":"cyclic",...} or {"kind":"linear",...})
        file: PathBuf,
        #[command(flatten)]
        engine: EngineOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Independently re-verify a report produced by `build --format json`
    Verify {
        /// JSON construction report
        file: PathBuf,
    },
    /// Factor x^n - 1 into minimal polynomials over F_q
    Factor {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// List the q-cyclotomic cosets modulo n
    Cosets {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        output: OutputOpts,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Failure {
        Failure { code: 2, message: msg.into() }
    }
}

impl From<ConstructError> for Failure {
    fn from(e: ConstructError) -> Failure {
        let code = match e {
            ConstructError::TheoremViolation(_) => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<ReportError> for Failure {
    fn from(e: ReportError) -> Failure {
        match e {
            ReportError::Construct(c) => c.into(),
            other => Failure { code: 2, message: other.to_string() },
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure { code: 2, message: e.to_string() }
    }
}

pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn dispatch(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Build { construction, q, m, mu, n, engine, output } => {
            let start = Instant::now();
            let out = run_pipeline(construction, q, m, mu, n)?;
            let rep = report::build_report(&out, &engine.to_options())?;
            let runtime_ms = start.elapsed().as_millis();
            emit(&output, &render_report(&rep, output.format, runtime_ms))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { family, q, m_max, mu, n, engine, output } => {
            let tuples = table_tuples(family, q, m_max, mu, &n)?;
            let mut rows = Vec::new();
            for t in tuples {
                let start = Instant::now();
                let out = run_pipeline(family, t.0, t.1, t.2, t.3)?;
                let rep = report::build_report(&out, &engine.to_options())?;
                rows.push((rep, start.elapsed().as_millis()));
            }
            emit(&output, &render_table(&rows, output.format))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Mindist { file, engine, output } => {
            let text = fs::read_to_string(&file)?;
            let desc: CodeDescriptor = serde_json::from_str(&text)
                .map_err(|e| Failure::usage(format!("malformed descriptor: {e}")))?;
            let realized = realize(&desc)?;
            let g = realized.code.generator_matrix();
            let opts = engine.to_options();
            let result = match opts.engine {
                Engine::Exhaustive => mindist::exhaustive_min_weight(&g, opts.exhaustive_budget),
                Engine::Bz => mindist::brouwer_zimmermann(&g, opts.bz_budget),
                Engine::Witness => mindist::witness_search(
                    &g,
                    opts.target.unwrap_or(1),
                    opts.seed,
                    opts.witness_budget,
                    None,
                ),
                _ => {
                    let q = g.field().order() as u128;
                    if q.checked_pow(g.k() as u32).map_or(false, |c| c <= opts.exhaustive_budget) {
                        mindist::exhaustive_min_weight(&g, opts.exhaustive_budget)
                    } else {
                        mindist::brouwer_zimmermann(&g, opts.bz_budget)
                    }
                }
            }
            .map_err(|e| Failure::usage(e.to_string()))?;
            #[derive(Serialize)]
            struct MindistOutput {
                #[serde(flatten)]
                distance: DistanceJson,
                #[serde(skip_serializing_if = "Option::is_none")]
                note: Option<String>,
            }
            let payload = MindistOutput {
                distance: distance_json(&result, g.field()),
                note: realized.note,
            };
            emit(&output, &format!("{}\n", serde_json::to_string_pretty(&payload).unwrap()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { file } => {
            let text = fs::read_to_string(&file)?;
            let rep: ConstructionReport = serde_json::from_str(&text)
                .map_err(|e| Failure::usage(format!("malformed report: {e}")))?;
            let failures = verify_report(&rep)?;
            if failures.is_empty() {
                println!("ok: all properties verified");
                Ok(ExitCode::SUCCESS)
            } else {
                for f in &failures {
                    println!("{f}: FAIL");
                }
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Factor { q, n, output } => {
            let field = gf::field_of_order(q).map_err(|e| Failure::usage(e.to_string()))?;
            let factors = polyring::factor_xn_minus_1(&field, n)
                .map_err(|e| Failure::usage(e.to_string()))?;
            let text = match output.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct FactorRow {
                        leader: u64,
                        coeffs: Vec<u64>,
                    }
                    let rows: Vec<FactorRow> = factors
                        .iter()
                        .map(|(l, f)| FactorRow {
                            leader: *l,
                            coeffs: f.coeffs().iter().map(|c| field.index_of(c)).collect(),
                        })
                        .collect();
                    format!("{}\n", serde_json::to_string_pretty(&rows).unwrap())
                }
                _ => {
                    let mut s = String::new();
                    for (l, f) in &factors {
                        s.push_str(&format!("{l}: {f:?}\n"));
                    }
                    s
                }
            };
            emit(&output, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Cosets { q, n, output } => {
            let partition =
                cyclo::cyclotomic_cosets(q, n).map_err(|e| Failure::usage(e.to_string()))?;
            let text = match output.format {
                Format::Json => {
                    format!("{}\n", serde_json::to_string_pretty(partition.cosets()).unwrap())
                }
                _ => {
                    let mut s = String::new();
                    for coset in partition.cosets() {
                        let items: Vec<String> = coset.iter().map(u64::to_string).collect();
                        s.push_str(&format!("{{{}}}\n", items.join(", ")));
                    }
                    s
                }
            };
            emit(&output, &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_pipeline(
    family: Family,
    q: Option<u64>,
    m: Option<u64>,
    mu: Option<u64>,
    n: Option<u64>,
) -> Result<PipelineOutput, Failure> {
    let need = |v: Option<u64>, name: &str| {
        v.ok_or_else(|| Failure::usage(format!("missing required flag --{name}")))
    };
    let out = match family {
        Family::Thm51 => construct::thm51_pipeline(need(q, "q")?, need(m, "m")?, need(mu, "mu")?)?,
        Family::Thm52 => construct::thm52_pipeline(need(q, "q")?, need(m, "m")?, need(mu, "mu")?)?,
        Family::Thm62 => construct::thm62_pipeline(need(q, "q")?, need(m, "m")?, need(mu, "mu")?)?,
        Family::Thm72 => construct::thm72_pipeline(need(n, "n")?)?,
    };
    Ok(out)
}

type Tuple = (Option<u64>, Option<u64>, Option<u64>, Option<u64>);

fn table_tuples(
    family: Family,
    q: Option<u64>,
    m_max: Option<u64>,
    mu: Option<u64>,
    n: &[u64],
) -> Result<Vec<Tuple>, Failure> {
    match family {
        Family::Thm72 => {
            let lengths: Vec<u64> = if n.is_empty() {
                vec![7, 23, 31, 47, 71, 79, 103]
            } else {
                n.to_vec()
            };
            Ok(lengths.iter().map(|&len| (None, None, None, Some(len))).collect())
        }
        Family::Thm51 => {
            let q = q.unwrap_or(2);
            let mu = mu.unwrap_or(1);
            let m_max = m_max.unwrap_or(5);
            Ok((3..=m_max)
                .step_by(2)
                .map(|m| (Some(q), Some(m), Some(mu), None))
                .collect())
        }
        _ => Err(Failure::usage("table supports the thm51 and thm72 families")),
    }
}

fn params_string(rep: &ConstructionReport) -> String {
    rep.params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_report(rep: &ConstructionReport, format: Format, runtime_ms: u128) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(rep).unwrap()),
        Format::Csv => {
            let mut s = String::from(CSV_HEADER);
            s.push_str(&csv_row(rep, runtime_ms));
            s
        }
        Format::Text => {
            let d = &rep.distance;
            let dist = match (&d.status[..], d.d) {
                ("exact", Some(d)) => format!("exact d = {d}"),
                _ => format!("bounds [{}, {}]", d.lb, d.ub),
            };
            let mut s = String::new();
            s.push_str(&format!("construction: {} ({})\n", rep.construction, params_string(rep)));
            s.push_str(&format!(
                "code: [{}, {}] over F_{} ({})\n",
                rep.n2,
                rep.k,
                field_order(rep),
                match rep.code {
                    CodeDescriptor::Cyclic { .. } => "cyclic",
                    CodeDescriptor::Linear { .. } => "linear",
                }
            ));
            s.push_str(&format!(
                "component: [{}, {}], dual dimension {}\n",
                component_len(rep),
                rep.component_k,
                rep.component_dual_k
            ));
            if let Some(delta) = rep.delta {
                s.push_str(&format!("designed distance: {delta}\n"));
            }
            s.push_str(&format!("bound: {} ({})\n", rep.bound, rep.bound_kind));
            s.push_str(&format!("distance: {dist} ({}, work {})\n", d.verification, d.work));
            s.push_str(&format!("self_dual ({}): {}\n", rep.mode, rep.self_dual));
            let checks: Vec<String> =
                rep.checks.iter().map(|(k, v)| format!("{k}={v}")).collect();
            s.push_str(&format!("checks: {}\n", checks.join(" ")));
            s
        }
    }
}

const CSV_HEADER: &str =
    "construction,params,n,k,bound_kind,bound,distance_status,d_or_ub,runtime_ms\n";

fn csv_row(rep: &ConstructionReport, runtime_ms: u128) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{}\n",
        rep.construction,
        params_string(rep).replace(' ', ";"),
        rep.n2,
        rep.k,
        rep.bound_kind,
        rep.bound,
        rep.distance.status,
        rep.distance.d.unwrap_or(rep.distance.ub),
        runtime_ms
    )
}

fn field_order(rep: &ConstructionReport) -> u64 {
    let lit = match &rep.code {
        CodeDescriptor::Cyclic { field, .. } | CodeDescriptor::Linear { field, .. } => field,
    };
    lit.tower
        .iter()
        .fold(lit.p, |acc, level| acc.pow(level.degree as u32))
}

fn component_len(rep: &ConstructionReport) -> usize {
    match &rep.component {
        CodeDescriptor::Cyclic { n, .. } | CodeDescriptor::Linear { n, .. } => *n,
    }
}

fn render_table(rows: &[(ConstructionReport, u128)], format: Format) -> String {
    match format {
        Format::Json => {
            let reports: Vec<&ConstructionReport> = rows.iter().map(|(r, _)| r).collect();
            format!("{}\n", serde_json::to_string_pretty(&reports).unwrap())
        }
        _ => {
            // text and CSV share the fixed-column table
            let mut s = String::from(CSV_HEADER);
            for (rep, ms) in rows {
                s.push_str(&csv_row(rep, *ms));
            }
            s
        }
    }
}

fn emit(output: &OutputOpts, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}
