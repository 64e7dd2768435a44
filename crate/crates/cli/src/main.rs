use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use heckelab::finitegeom::{
    count_max_isotropic, dl_bullet_points, dl_points, enumerate_window, max_isotropic_closed_form,
    classify, meeting_closed_form, window_size, HermSpace, LatticeKind, SemilinearPair,
};
use heckelab::hecke::tables::{dnumber_table, operator_table, satake_matrix_table, Cell, QSpec, Table};
use heckelab::hecke::{closed_form, eval_phi, named_operator, NamedOp, SatakeParam};
use heckelab::scalar::{is_prime, Fp};
use heckelab::verify::{run_suite, Ranges, Status, Suite};

#[derive(Parser, Debug)]
#[command(name = "heckelab", version, about = "Exact Hecke-algebra, Satake and lattice-count computations")]
struct Cli {
    /// TOML or JSON configuration file; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output format for tables, evaluations and counts.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for every random choice.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a table of d-numbers, Satake matrix entries or operator expansions.
    Tables {
        #[arg(value_enum)]
        kind: TableKind,
        /// Largest r for the d-number table.
        #[arg(long, default_value_t = 4)]
        r_max: u32,
        /// Rank N for the Satake matrix and operator tables.
        #[arg(long = "N", default_value_t = 4)]
        n: u32,
        /// `symbolic` or an integer value of q.
        #[arg(long, default_value = "symbolic")]
        q: String,
    },
    /// Run a verification suite and print its JSON report.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        r_max: Option<u32>,
        #[arg(long)]
        k_max: Option<u32>,
        #[arg(long)]
        q_max: Option<u32>,
        /// Caps every N-indexed range.
        #[arg(long = "N")]
        n: Option<u32>,
        #[arg(long)]
        prime: Option<u64>,
        /// Record wall time in the report (which then differs between runs).
        #[arg(long)]
        timing: bool,
    },
    /// Evaluate φ_α of a named operator over F_p.
    Eval {
        #[arg(long = "N")]
        n: u32,
        #[arg(long)]
        op: String,
        /// Comma-separated α_1..α_r (completed by inverses) or all N entries.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        alpha: Vec<i64>,
        #[arg(long)]
        prime: Option<u64>,
        /// The value of q in F_p.
        #[arg(long, default_value_t = 3)]
        q: i64,
    },
    /// Exhaustive finite-geometry counts with their closed forms.
    Count {
        #[arg(value_enum)]
        kind: CountKind,
        #[arg(long)]
        q: u32,
        #[arg(long = "N")]
        n: usize,
        /// Subspace dimension (isotropic; defaults to ⌊N/2⌋) or rank h (dl).
        #[arg(long)]
        dim: Option<usize>,
        /// Codimension of the intersection (meeting).
        #[arg(long, default_value_t = 0)]
        s: usize,
        /// Kernel dimension of the pairing (dl, dlbullet).
        #[arg(long, default_value_t = 0)]
        d: usize,
        /// Extension degree, 1 or 2 (dl, dlbullet).
        #[arg(long, default_value_t = 1)]
        e: u32,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableKind {
    Dnumbers,
    #[value(alias = "satake_matrix")]
    SatakeMatrix,
    Operators,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CountKind {
    Isotropic,
    Meeting,
    Dl,
    Dlbullet,
    Window,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    #[default]
    Csv,
    Json,
}

/// File configuration. Every field is optional; flags override it.
#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct Config {
    format: Option<Format>,
    seed: Option<u64>,
    prime: Option<u64>,
    /// One of error, warn, info, debug; `HECKELAB_LOG` wins over this.
    log: Option<String>,
    ranges: Option<Ranges>,
}

const DEFAULT_SEED: u64 = 0;
const DEFAULT_PRIME: u64 = 10007;

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: heckelab::Error| e.to_string())
}

fn load_config(path: Option<&Path>) -> Result<Config> {
    let Some(path) = path else { return Ok(Config::default()) };
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let is_json = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"));
    let cfg = if is_json {
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?
    } else {
        toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))?
    };
    Ok(cfg)
}

fn init_logging(cfg: &Config) {
    let default = cfg.log.clone().unwrap_or_else(|| "warn".into());
    let env = env_logger::Env::new().filter_or("HECKELAB_LOG", default);
    let _ = env_logger::Builder::from_env(env).format_timestamp(None).try_init();
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut so = io::stdout().lock();
            so.write_all(text.as_bytes())?;
            Ok(so.flush()?)
        }
    }
}

fn csv_text(header: &[String], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn render_table(t: &Table, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(t)? + "\n"),
        Format::Csv => {
            let rows: Vec<Vec<String>> = t.rows.iter().map(|r| r.iter().map(Cell::display).collect()).collect();
            csv_text(&t.columns, &rows)
        }
    }
}

/// One record, as a JSON object or a two-line CSV with the keys as header.
fn render_record(record: &serde_json::Map<String, Value>, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(record)? + "\n"),
        Format::Csv => {
            let header: Vec<String> = record.keys().cloned().collect();
            let row: Vec<String> = record
                .values()
                .map(|v| match v {
                    Value::String(s) => s.clone(),
                    Value::Null => String::new(),
                    other => other.to_string(),
                })
                .collect();
            csv_text(&header, &[row])
        }
    }
}

fn parse_q(q: &str) -> Result<QSpec> {
    if q.eq_ignore_ascii_case("symbolic") {
        return Ok(QSpec::Symbolic);
    }
    let v: i64 = q.parse().with_context(|| format!("--q must be `symbolic` or an integer, got {q:?}"))?;
    Ok(QSpec::Integer(v))
}

fn record(pairs: Vec<(&str, Value)>) -> serde_json::Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// Runs the command; `Ok(false)` means the command ran but reported a failure.
fn run(cli: Cli) -> Result<bool> {
    let cfg = load_config(cli.config.as_deref())?;
    init_logging(&cfg);
    let format = cli.format.or(cfg.format).unwrap_or_default();
    let seed = cli.seed.or(cfg.seed).unwrap_or(DEFAULT_SEED);
    let out = cli.out.as_deref();
    match cli.command {
        Command::Tables { kind, r_max, n, q } => {
            let qs = parse_q(&q)?;
            let table = match kind {
                TableKind::Dnumbers => dnumber_table(r_max, qs)?,
                TableKind::SatakeMatrix => satake_matrix_table(n, qs)?,
                TableKind::Operators => operator_table(n, qs)?,
            };
            emit(out, &render_table(&table, format)?)?;
            Ok(true)
        }
        Command::Verify { suite, r_max, k_max, q_max, n, prime, timing } => {
            let mut ranges = cfg.ranges.clone().unwrap_or_default();
            if let Some(p) = prime.or(cfg.prime) {
                ranges.prime = p;
            }
            if let Some(r) = r_max {
                ranges.set_r_max(r);
            }
            if let Some(k) = k_max {
                ranges.k_max = k;
            }
            if let Some(q) = q_max {
                ranges.q_max = q;
            }
            if let Some(n) = n {
                ranges.cap_n(n);
            }
            let report = run_suite(suite, &ranges, seed, timing);
            emit(out, &(report.to_json() + "\n"))?;
            eprintln!(
                "{}: {} passed, {} failed, {} skipped",
                report.suite,
                report.count(Status::Pass),
                report.count(Status::Fail),
                report.count(Status::Skipped)
            );
            for f in report.failures() {
                eprintln!("FAIL {} {}: {}", f.id, f.params, f.witness);
            }
            Ok(report.passed())
        }
        Command::Eval { n, op, alpha, prime, q } => {
            let p = prime.or(cfg.prime).unwrap_or(DEFAULT_PRIME);
            if !is_prime(p) {
                return Err(heckelab::Error::Domain(format!("{p} is not prime")).into());
            }
            let op: NamedOp = op.parse()?;
            let e = named_operator(op, n)?;
            let entries: Vec<Fp> = alpha.iter().map(|&a| Fp::new(a, p)).collect();
            let param = if entries.len() == n as usize && n > 1 {
                SatakeParam::inert(entries)?
            } else {
                SatakeParam::inert_from_half(&Fp::new(1, p), &entries, n as usize)?
            };
            let qf = Fp::new(q, p);
            let value = eval_phi(&e, &param, &qf)?;
            let closed = closed_form(op, n, &param, &qf)?;
            let matched = closed.map(|c| c == value);
            let rec = record(vec![
                ("N", json!(n)),
                ("op", json!(op.name())),
                ("p", json!(p)),
                ("q", json!(qf.value())),
                ("alpha", json!(param.alphas().iter().map(Fp::value).collect::<Vec<_>>())),
                ("phi", json!(value.value())),
                ("closed_form", json!(closed.map(|c| c.value()))),
                ("match", json!(matched)),
            ]);
            emit(out, &render_record(&rec, format)?)?;
            Ok(matched != Some(false))
        }
        Command::Count { kind, q, n, dim, s, d, e } => {
            let (parameter, count, closed): (String, u64, Option<String>) = match kind {
                CountKind::Isotropic => {
                    let k = dim.unwrap_or(n / 2);
                    let c = HermSpace::new(q, n)?.count_isotropic(k)?;
                    let cf = (k == n / 2).then(|| max_isotropic_closed_form(q, n).to_string());
                    debug_assert!(k != n / 2 || c == count_max_isotropic(q, n)?);
                    (format!("dim={k}"), c, cf)
                }
                CountKind::Meeting => {
                    let c = HermSpace::new(q, n)?
                        .meeting_histogram()?
                        .get(s)
                        .copied()
                        .ok_or_else(|| heckelab::Error::Domain(format!("s = {s} exceeds ⌊N/2⌋")))?;
                    (format!("s={s}"), c, Some(meeting_closed_form(q, n, s)?.to_string()))
                }
                CountKind::Dl => {
                    let h = dim.unwrap_or(n.div_ceil(2));
                    let pair = SemilinearPair::new(q, n, d)?;
                    (format!("h={h};d={d};e={e}"), dl_points(&pair, h, e)?, None)
                }
                CountKind::Dlbullet => {
                    let pair = SemilinearPair::new(q, n, d)?;
                    (format!("d={d};e={e}"), dl_bullet_points(&pair, e)?, None)
                }
                CountKind::Window => {
                    let all = enumerate_window(q, n)?;
                    let circ = all.iter().filter(|l| classify(l) == LatticeKind::Circ).count();
                    let bullet = all.iter().filter(|l| classify(l) == LatticeKind::Bullet).count();
                    (
                        format!("m=2;circ={circ};bullet={bullet}"),
                        all.len() as u64,
                        Some(window_size(q, n).to_string()),
                    )
                }
            };
            let matched = closed.as_ref().map(|c| *c == count.to_string());
            let rec = record(vec![
                ("q", json!(q)),
                ("N", json!(n)),
                ("parameter", json!(parameter)),
                ("count", json!(count)),
                ("closed_form", json!(closed)),
                ("match", json!(matched)),
            ]);
            emit(out, &render_record(&rec, format)?)?;
            Ok(matched != Some(false))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            let usage = matches!(e.downcast_ref::<heckelab::Error>(), Some(heckelab::Error::Domain(_)));
            ExitCode::from(if usage { 2 } else { 1 })
        }
    }
}
