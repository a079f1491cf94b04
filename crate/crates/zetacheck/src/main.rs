//! Command-line front end: table generation, single-value queries, zero
//! location and the verification suites.
//!
//! Exit status: 0 on success (reported findings included), 1 when a
//! verification check fails, 2 on configuration or usage errors.

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use zetacheck::primes::Sieve;
use zetacheck::report::{exit_status, render_report, run_suite, RunConfig, Suite};
use zetacheck::series::basel_partial;
use zetacheck::tables::{emit_table, generate_rows, Format, Layout, NaturalRow};
use zetacheck::tvalue::{
    recurrence_shift, t_band, t_nonprime, t_prime, Direction, RecurrenceQuery,
};
use zetacheck::zeta::locate_zeros;
use zetacheck::Kind;

#[derive(Parser)]
#[command(
    name = "zetacheck",
    version,
    about = "Prime-table and zeta-series verification"
)]
struct Cli {
    /// Plain key=value defaults file; keys match the flags
    /// (limit, format, out, tol, golden)
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Sieve limit (default 1000000)
    #[arg(long, global = true)]
    limit: Option<u64>,

    /// Output format: tsv, csv or markdown (default tsv)
    #[arg(long, global = true)]
    format: Option<String>,

    /// Write output to a file instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Golden-comparison tolerance (default 5e-10)
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Directory holding the golden tables and erratum ledger
    /// (default "golden")
    #[arg(long, global = true)]
    golden: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate and emit table rows for a range of naturals
    Table {
        #[arg(long, default_value_t = 1)]
        from: u64,
        #[arg(long, default_value_t = 100)]
        to: u64,
        /// Row layout: mixed, primes_only or band
        #[arg(long, default_value = "mixed")]
        layout: String,
    },
    /// Emit the primes-only table for the first COUNT primes
    Primes {
        #[arg(long, default_value_t = 1000)]
        count: u64,
    },
    /// t value of one natural number (--n) or of the m-th prime (--m)
    Tvalue {
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
    },
    /// Band edges t0 = pi/(2 ln p) and 2 t0 for the m-th prime
    Band {
        #[arg(long)]
        m: u64,
    },
    /// Subscript recurrence demo starting from F = -m(m+1)
    Recurrence {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: u64,
    },
    /// Locate critical-line zeros up to t-max
    Zeros {
        #[arg(long = "t-max", default_value_t = 30.0)]
        t_max: f64,
        #[arg(long, default_value_t = 0.25)]
        step: f64,
    },
    /// Basel partial sum and Euler's coefficient contrast
    Basel {
        #[arg(long, default_value_t = 1000)]
        terms: u64,
    },
    /// Run a verification suite: tables, identities, corollaries, zeros
    /// or all
    Verify { suite: String },
}

#[derive(Default)]
struct Settings {
    limit: Option<u64>,
    format: Option<String>,
    out: Option<PathBuf>,
    tol: Option<f64>,
    golden: Option<PathBuf>,
}

fn parse_config_file(path: &PathBuf) -> Result<Settings, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    let mut s = Settings::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!("config line {}: expected key=value", idx + 1));
        };
        let (key, value) = (key.trim(), value.trim());
        match key {
            "limit" => {
                s.limit = Some(
                    value
                        .parse()
                        .map_err(|_| format!("config line {}: bad limit '{value}'", idx + 1))?,
                )
            }
            "format" => s.format = Some(value.to_string()),
            "out" => s.out = Some(PathBuf::from(value)),
            "tol" => {
                s.tol = Some(
                    value
                        .parse()
                        .map_err(|_| format!("config line {}: bad tol '{value}'", idx + 1))?,
                )
            }
            "golden" => s.golden = Some(PathBuf::from(value)),
            other => return Err(format!("config line {}: unknown key '{other}'", idx + 1)),
        }
    }
    Ok(s)
}

fn resolve(cli: &Cli) -> Result<Settings, String> {
    let base = match &cli.config {
        Some(path) => parse_config_file(path)?,
        None => Settings::default(),
    };
    Ok(Settings {
        limit: cli.limit.or(base.limit),
        format: cli.format.clone().or(base.format),
        out: cli.out.clone().or(base.out),
        tol: cli.tol.or(base.tol),
        golden: cli.golden.clone().or(base.golden),
    })
}

fn write_out(text: &str, out: &Option<PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn prime_rows(sieve: &Sieve, count: u64) -> zetacheck::Result<Vec<NaturalRow>> {
    sieve
        .prime_entries()
        .into_iter()
        .take(count as usize)
        .map(|e| {
            Ok(NaturalRow {
                n: e.p,
                kind: Kind::Prime,
                ordinal: e.m,
                t: t_prime(e.m, e.p)?.t,
            })
        })
        .collect()
}

// upper bound for the n-th prime, generous for small n
fn nth_prime_bound(n: u64) -> u64 {
    if n < 6 {
        return 16;
    }
    let nf = n as f64;
    (nf * (nf.ln() + nf.ln().ln())).ceil() as u64 + 16
}

fn run(cli: &Cli, settings: &Settings) -> Result<i32, String> {
    let err_str = |e: zetacheck::Error| e.to_string();
    let format: Format = settings
        .format
        .as_deref()
        .unwrap_or("tsv")
        .parse()
        .map_err(err_str)?;

    match &cli.command {
        Command::Table { from, to, layout } => {
            let layout: Layout = layout.parse().map_err(err_str)?;
            let limit = settings.limit.unwrap_or(1_000_000).max(*to);
            let sieve = Sieve::new(limit).map_err(err_str)?;
            let rows = generate_rows(*from, *to, &sieve).map_err(err_str)?;
            let doc = emit_table(&rows, format, layout).map_err(err_str)?;
            write_out(&doc, &settings.out).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Primes { count } => {
            let limit = settings.limit.unwrap_or(0).max(nth_prime_bound(*count));
            let sieve = Sieve::new(limit).map_err(err_str)?;
            if (sieve.prime_entries().len() as u64) < *count {
                return Err(format!(
                    "sieve limit {limit} holds fewer than {count} primes; raise --limit"
                ));
            }
            let rows = prime_rows(&sieve, *count).map_err(err_str)?;
            let doc = emit_table(&rows, format, Layout::PrimesOnly).map_err(err_str)?;
            write_out(&doc, &settings.out).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Tvalue { n, m } => {
            let text = match (n, m) {
                (Some(n), None) => {
                    let limit = settings.limit.unwrap_or(1_000_000).max(*n);
                    let sieve = Sieve::new(limit).map_err(err_str)?;
                    let c = sieve.classify_natural(*n).map_err(err_str)?;
                    let t = match c.kind {
                        Kind::Prime => t_prime(c.ordinal, *n).map_err(err_str)?.t,
                        Kind::NonPrime => t_nonprime(c.ordinal, *n).map_err(err_str)?.t,
                    };
                    format!("n={n} kind={} ordinal={} t={:.10}\n", c.kind, c.ordinal, t)
                }
                (None, Some(m)) => {
                    let limit = settings.limit.unwrap_or(0).max(nth_prime_bound(*m));
                    let sieve = Sieve::new(limit).map_err(err_str)?;
                    let p = sieve.nth_prime(*m).ok_or_else(|| {
                        format!("sieve limit {limit} holds fewer than {m} primes")
                    })?;
                    let t = t_prime(*m, p).map_err(err_str)?.t;
                    format!("m={m} p={p} t={t:.10}\n")
                }
                _ => return Err("pass exactly one of --n or --m".into()),
            };
            write_out(&text, &settings.out).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Band { m } => {
            let limit = settings.limit.unwrap_or(0).max(nth_prime_bound(*m));
            let sieve = Sieve::new(limit).map_err(err_str)?;
            let p = sieve
                .nth_prime(*m)
                .ok_or_else(|| format!("sieve limit {limit} holds fewer than {m} primes"))?;
            let band = t_band(p).map_err(err_str)?;
            let t = t_prime(*m, p).map_err(err_str)?.t;
            let text = format!(
                "m={m} p={p} t0={:.10} t={t:.10} stationary={:.10} inside={}\n",
                band.t0,
                band.stationary,
                band.t0 < t && t < band.stationary
            );
            write_out(&text, &settings.out).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Recurrence { m, k } => {
            if *m == 0 || *k == 0 {
                return Err("recurrence requires m >= 1 and k >= 1".into());
            }
            let f = -((m * (m + 1)) as f64);
            let fwd = recurrence_shift(RecurrenceQuery { f_start: f, k: *k }, Direction::Forward)
                .map_err(err_str)?;
            let back = recurrence_shift(
                RecurrenceQuery {
                    f_start: fwd,
                    k: *k,
                },
                Direction::Backward,
            )
            .map_err(err_str)?;
            let closed = -(((m + k) * (m + k + 1)) as f64);
            let text = format!(
                "m={m} k={k} F_m={f:.6} F_m+k={fwd:.6} closed_form={closed:.6} back={back:.6} round_trip_ok={}\n",
                (back - f).abs() <= 1e-12 * f.abs()
            );
            write_out(&text, &settings.out).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Zeros { t_max, step } => {
            let tol = settings.tol.unwrap_or(1e-10).max(1e-12);
            let scan = locate_zeros(*t_max, *step, tol).map_err(err_str)?;
            let mut text = String::new();
            for (i, z) in scan.zeros.iter().enumerate() {
                text.push_str(&format!(
                    "zero {} t={:.10} bracket=({:.4},{:.4}) |zeta|={:.3e}\n",
                    i + 1,
                    z.refined_t,
                    z.t_lo,
                    z.t_hi,
                    z.residual
                ));
            }
            text.push_str(&format!(
                "found={} expected~{:.2}\n",
                scan.zeros.len(),
                scan.expected_count
            ));
            if let Some(w) = &scan.completeness_warning {
                text.push_str(&format!("warning: {w}\n"));
            }
            write_out(&text, &settings.out).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Basel { terms } => {
            let b = basel_partial(*terms).map_err(err_str)?;
            let text = format!(
                "n={} partial={:.12} coeff_lhs={:.12} coeff_rhs_partial={:.12}\n",
                b.n_terms, b.partial, b.coeff_lhs, b.coeff_rhs_partial
            );
            write_out(&text, &settings.out).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse().map_err(err_str)?;
            let mut cfg = RunConfig::default();
            if let Some(limit) = settings.limit {
                cfg.sieve_limit = limit;
            }
            if let Some(tol) = settings.tol {
                cfg.golden_tolerance = tol;
            }
            if let Some(golden) = &settings.golden {
                cfg.golden_dir = golden.clone();
            }
            cfg.validate().map_err(err_str)?;
            let records = run_suite(cfg, suite).map_err(err_str)?;
            let report = render_report(&records);
            write_out(&report, &settings.out).map_err(|e| e.to_string())?;
            Ok(exit_status(&records))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let settings = match resolve(&cli) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("zetacheck: {msg}");
            return ExitCode::from(2);
        }
    };
    match run(&cli, &settings) {
        Ok(code) => ExitCode::from(code as u8),
        Err(msg) => {
            eprintln!("zetacheck: {msg}");
            ExitCode::from(2)
        }
    }
}
