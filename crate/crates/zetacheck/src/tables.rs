//! Table generation, emission and golden-file regression.
//!
//! Golden files are digitized copies of previously published tables, stored
//! as TSV with a fixed header `table_id n kind ordinal t_printed` (UTF-8,
//! `inf` for the n = 1 sentinel). Three table ids are understood:
//!
//! * `mixed`  — one row per natural number n, both branches;
//! * `primes` — the primes-only table, n is the prime and ordinal is m;
//! * `band`   — the t0 table, t_printed is t0 = pi/(2 ln p).
//!
//! Comparison recomputes every golden row from the formula layer and
//! classifies it `match`, `erratum` (a known misprint listed in the erratum
//! ledger `errata.tsv`) or `unresolved`. Printed values are compared as
//! parsed decimals with an absolute tolerance, not as strings, to absorb
//! final-digit rounding styles. Zero unresolved rows is the passing state.

use crate::primes::{Kind, Sieve};
use crate::tvalue::{t_band, t_nonprime, t_prime};
use crate::{Error, Result};
use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Default absolute tolerance for printed-vs-recomputed comparison; the
/// tables print ten decimals, so half an ulp of print rounding is 5e-11.
pub const GOLDEN_TOLERANCE: f64 = 5e-10;

/// One generated table row. `t` is infinite exactly for n = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NaturalRow {
    pub n: u64,
    pub kind: Kind,
    pub ordinal: u64,
    pub t: f64,
}

/// Output encodings for [`emit_table`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Tsv,
    Csv,
    Markdown,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tsv" => Ok(Format::Tsv),
            "csv" => Ok(Format::Csv),
            "markdown" | "md" => Ok(Format::Markdown),
            other => Err(Error::UnknownFormat(other.into())),
        }
    }
}

/// Column layouts for [`emit_table`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    Mixed,
    PrimesOnly,
    Band,
}

impl FromStr for Layout {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mixed" => Ok(Layout::Mixed),
            "primes_only" | "primes" => Ok(Layout::PrimesOnly),
            "band" => Ok(Layout::Band),
            other => Err(Error::UnknownLayout(other.into())),
        }
    }
}

fn row_for(n: u64, sieve: &Sieve) -> Result<NaturalRow> {
    let c = sieve.classify_natural(n)?;
    let t = match c.kind {
        Kind::Prime => t_prime(c.ordinal, n)?.t,
        Kind::NonPrime => t_nonprime(c.ordinal, n)?.t,
    };
    Ok(NaturalRow {
        n,
        kind: c.kind,
        ordinal: c.ordinal,
        t,
    })
}

/// One row per natural number in n_from..=n_to, classification and t from
/// the formula layer.
pub fn generate_rows(n_from: u64, n_to: u64, sieve: &Sieve) -> Result<Vec<NaturalRow>> {
    if n_from == 0 || n_from > n_to || n_to > sieve.limit() {
        return Err(Error::Range {
            lo: n_from,
            hi: n_to,
            limit: sieve.limit(),
        });
    }
    #[cfg(feature = "parallel")]
    {
        (n_from..=n_to)
            .into_par_iter()
            .map(|n| row_for(n, sieve))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (n_from..=n_to).map(|n| row_for(n, sieve)).collect()
    }
}

fn fmt_t(t: f64) -> String {
    if t.is_infinite() {
        "inf".into()
    } else {
        format!("{t:.10}")
    }
}

/// Render rows in a stable column order; t printed with ten decimals
/// (round half to even), infinity as `inf`.
pub fn emit_table(rows: &[NaturalRow], format: Format, layout: Layout) -> Result<String> {
    let picked: Vec<&NaturalRow> = match layout {
        Layout::Mixed => rows.iter().collect(),
        Layout::PrimesOnly | Layout::Band => {
            rows.iter().filter(|r| r.kind == Kind::Prime).collect()
        }
    };
    if picked.is_empty() {
        return Err(Error::EmptyRows);
    }

    let header: &[&str] = match layout {
        Layout::Mixed => &["n", "m", "eta", "t"],
        Layout::PrimesOnly => &["m", "p", "t"],
        Layout::Band => &["m", "p", "t", "t0"],
    };
    let mut lines: Vec<Vec<String>> = Vec::with_capacity(picked.len() + 1);
    for r in &picked {
        let cells = match layout {
            Layout::Mixed => {
                let (m, eta) = match r.kind {
                    Kind::Prime => (r.ordinal.to_string(), String::new()),
                    Kind::NonPrime => (String::new(), r.ordinal.to_string()),
                };
                vec![r.n.to_string(), m, eta, fmt_t(r.t)]
            }
            Layout::PrimesOnly => vec![r.ordinal.to_string(), r.n.to_string(), fmt_t(r.t)],
            Layout::Band => {
                let band = t_band(r.n)?;
                vec![
                    r.ordinal.to_string(),
                    r.n.to_string(),
                    fmt_t(r.t),
                    fmt_t(band.t0),
                ]
            }
        };
        lines.push(cells);
    }

    let mut out = String::new();
    match format {
        Format::Tsv | Format::Csv => {
            let sep = if format == Format::Tsv { '\t' } else { ',' };
            writeln!(out, "{}", header.join(&sep.to_string())).unwrap();
            for cells in lines {
                writeln!(out, "{}", cells.join(&sep.to_string())).unwrap();
            }
        }
        Format::Markdown => {
            writeln!(out, "| {} |", header.join(" | ")).unwrap();
            writeln!(out, "|{}|", vec!["---"; header.len()].join("|")).unwrap();
            for cells in lines {
                writeln!(out, "| {} |", cells.join(" | ")).unwrap();
            }
        }
    }
    Ok(out)
}

/// Parse a document produced by [`emit_table`] back into rows.
pub fn parse_table(text: &str, format: Format, layout: Layout) -> Result<Vec<NaturalRow>> {
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let cells: Vec<String> = match format {
            Format::Tsv => raw.split('\t').map(str::to_string).collect(),
            Format::Csv => raw.split(',').map(str::to_string).collect(),
            Format::Markdown => {
                let trimmed = raw.trim().trim_matches('|');
                if trimmed
                    .chars()
                    .all(|c| c == '-' || c == '|' || c.is_whitespace())
                {
                    continue; // separator row
                }
                trimmed.split('|').map(|c| c.trim().to_string()).collect()
            }
        };
        if idx == 0 || cells.first().map(|c| c.trim().parse::<u64>().is_err()) == Some(true) {
            continue; // header
        }
        let parse_u64 = |cell: &str| -> Result<u64> {
            cell.trim().parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("expected integer, got '{cell}'"),
            })
        };
        let parse_t = |cell: &str| -> Result<f64> {
            let c = cell.trim();
            if c == "inf" {
                return Ok(f64::INFINITY);
            }
            c.parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("expected decimal, got '{cell}'"),
            })
        };
        let row = match layout {
            Layout::Mixed => {
                if cells.len() != 4 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("expected 4 columns, got {}", cells.len()),
                    });
                }
                let n = parse_u64(&cells[0])?;
                let (kind, ordinal) = if !cells[1].trim().is_empty() {
                    (Kind::Prime, parse_u64(&cells[1])?)
                } else {
                    (Kind::NonPrime, parse_u64(&cells[2])?)
                };
                NaturalRow {
                    n,
                    kind,
                    ordinal,
                    t: parse_t(&cells[3])?,
                }
            }
            Layout::PrimesOnly | Layout::Band => {
                let want = if layout == Layout::Band { 4 } else { 3 };
                if cells.len() != want {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("expected {want} columns, got {}", cells.len()),
                    });
                }
                NaturalRow {
                    n: parse_u64(&cells[1])?,
                    kind: Kind::Prime,
                    ordinal: parse_u64(&cells[0])?,
                    t: parse_t(&cells[2])?,
                }
            }
        };
        rows.push(row);
    }
    Ok(rows)
}

/// One digitized golden row; `t_printed` keeps the published decimal text.
#[derive(Debug, Clone, PartialEq)]
pub struct GoldenRow {
    pub table_id: String,
    pub n: u64,
    pub kind: Kind,
    pub ordinal: u64,
    pub t_printed: String,
}

const GOLDEN_HEADER: &str = "table_id\tn\tkind\tordinal\tt_printed";

/// Parse a golden TSV document, validating the header and every field.
pub fn parse_golden(text: &str) -> Result<Vec<GoldenRow>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h == GOLDEN_HEADER => {}
        Some((_, h)) => {
            return Err(Error::Parse {
                line: 1,
                msg: format!("bad golden header '{h}'"),
            })
        }
        None => {
            return Err(Error::Parse {
                line: 1,
                msg: "empty golden file".into(),
            })
        }
    }
    let mut rows = Vec::new();
    for (idx, raw) in lines {
        let line = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let cells: Vec<&str> = raw.split('\t').collect();
        if cells.len() != 5 {
            return Err(Error::Parse {
                line,
                msg: format!("expected 5 tab-separated fields, got {}", cells.len()),
            });
        }
        let n = cells[1].parse().map_err(|_| Error::Parse {
            line,
            msg: format!("bad n '{}'", cells[1]),
        })?;
        let kind = match cells[2] {
            "prime" => Kind::Prime,
            "nonprime" => Kind::NonPrime,
            other => {
                return Err(Error::Parse {
                    line,
                    msg: format!("bad kind '{other}'"),
                })
            }
        };
        let ordinal = cells[3].parse().map_err(|_| Error::Parse {
            line,
            msg: format!("bad ordinal '{}'", cells[3]),
        })?;
        if cells[4] != "inf" && cells[4].parse::<f64>().is_err() {
            return Err(Error::Parse {
                line,
                msg: format!("bad t value '{}'", cells[4]),
            });
        }
        rows.push(GoldenRow {
            table_id: cells[0].to_string(),
            n,
            kind,
            ordinal,
            t_printed: cells[4].to_string(),
        });
    }
    Ok(rows)
}

/// Ledger of known misprints: (table_id, n) -> explanatory note.
#[derive(Debug, Clone, Default)]
pub struct ErrataLedger {
    map: HashMap<(String, u64), String>,
}

impl ErrataLedger {
    pub fn note(&self, table_id: &str, n: u64) -> Option<&str> {
        self.map.get(&(table_id.to_string(), n)).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// Parse the erratum ledger (`table_id n note` TSV with header).
pub fn parse_errata(text: &str) -> Result<ErrataLedger> {
    let mut map = HashMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if line == 1 || raw.trim().is_empty() {
            continue;
        }
        let cells: Vec<&str> = raw.split('\t').collect();
        if cells.len() != 3 {
            return Err(Error::Parse {
                line,
                msg: format!("expected 3 tab-separated fields, got {}", cells.len()),
            });
        }
        let n = cells[1].parse().map_err(|_| Error::Parse {
            line,
            msg: format!("bad n '{}'", cells[1]),
        })?;
        map.insert((cells[0].to_string(), n), cells[2].to_string());
    }
    Ok(ErrataLedger { map })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiffStatus {
    Match,
    Erratum,
    Unresolved,
}

impl std::fmt::Display for DiffStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DiffStatus::Match => write!(f, "match"),
            DiffStatus::Erratum => write!(f, "erratum"),
            DiffStatus::Unresolved => write!(f, "unresolved"),
        }
    }
}

/// One golden row compared against recomputation.
#[derive(Debug, Clone, PartialEq)]
pub struct GoldenDiff {
    pub table_id: String,
    pub n: u64,
    pub printed: String,
    pub recomputed: f64,
    pub abs_delta: f64,
    pub status: DiffStatus,
    pub note: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GoldenSummary {
    pub rows: usize,
    pub matches: usize,
    pub errata: usize,
    pub unresolved: usize,
}

fn recompute(row: &GoldenRow, sieve: &Sieve) -> Result<std::result::Result<f64, String>> {
    match row.table_id.as_str() {
        "mixed" => {
            let c = sieve.classify_natural(row.n)?;
            if c.kind != row.kind || c.ordinal != row.ordinal {
                return Ok(Err(format!(
                    "classification disagrees: sieve says {} ordinal {}",
                    c.kind, c.ordinal
                )));
            }
            let t = match c.kind {
                Kind::Prime => t_prime(c.ordinal, row.n)?.t,
                Kind::NonPrime => t_nonprime(c.ordinal, row.n)?.t,
            };
            Ok(Ok(t))
        }
        "primes" => {
            if sieve.nth_prime(row.ordinal) != Some(row.n) {
                return Ok(Err(format!(
                    "prime index disagrees: sieve prime {} is {:?}",
                    row.ordinal,
                    sieve.nth_prime(row.ordinal)
                )));
            }
            Ok(Ok(t_prime(row.ordinal, row.n)?.t))
        }
        "band" => Ok(Ok(t_band(row.n)?.t0)),
        other => Err(Error::Domain(format!("unknown golden table id '{other}'"))),
    }
}

/// Recompute every golden row, attach ledger notes and classify. Any
/// mismatch outside the ledger is `unresolved` and fails verification.
pub fn compare_golden(
    rows: &[GoldenRow],
    ledger: &ErrataLedger,
    tolerance: f64,
    sieve: &Sieve,
) -> Result<(Vec<GoldenDiff>, GoldenSummary)> {
    if tolerance <= 0.0 {
        return Err(Error::Domain(format!(
            "comparison tolerance must be positive, got {tolerance}"
        )));
    }
    let mut diffs = Vec::with_capacity(rows.len());
    let mut summary = GoldenSummary::default();
    for row in rows {
        let printed_val = if row.t_printed == "inf" {
            f64::INFINITY
        } else {
            row.t_printed
                .parse::<f64>()
                .expect("validated at parse time")
        };
        let (recomputed, delta, mismatch_note) = match recompute(row, sieve)? {
            Ok(v) => {
                let delta = if v.is_infinite() && printed_val.is_infinite() {
                    0.0
                } else {
                    (v - printed_val).abs()
                };
                (v, delta, None)
            }
            Err(msg) => (f64::NAN, f64::INFINITY, Some(msg)),
        };
        let ledger_note = ledger.note(&row.table_id, row.n).map(str::to_string);
        let status = if delta <= tolerance && mismatch_note.is_none() {
            DiffStatus::Match
        } else if ledger_note.is_some() {
            DiffStatus::Erratum
        } else {
            DiffStatus::Unresolved
        };
        summary.rows += 1;
        match status {
            DiffStatus::Match => summary.matches += 1,
            DiffStatus::Erratum => summary.errata += 1,
            DiffStatus::Unresolved => summary.unresolved += 1,
        }
        diffs.push(GoldenDiff {
            table_id: row.table_id.clone(),
            n: row.n,
            printed: row.t_printed.clone(),
            recomputed,
            abs_delta: delta,
            status,
            note: mismatch_note.or(ledger_note),
        });
    }
    Ok((diffs, summary))
}

/// Load `mixed.tsv`, `primes.tsv` and `band.tsv` from a golden directory.
pub fn load_golden_dir(dir: &Path) -> Result<Vec<GoldenRow>> {
    let mut rows = Vec::new();
    for name in ["mixed.tsv", "primes.tsv", "band.tsv"] {
        let path = dir.join(name);
        let text = std::fs::read_to_string(&path)?;
        rows.extend(parse_golden(&text)?);
    }
    Ok(rows)
}

/// Load the erratum ledger `errata.tsv` from a golden directory; a missing
/// file is an empty ledger.
pub fn load_errata(dir: &Path) -> Result<ErrataLedger> {
    let path = dir.join("errata.tsv");
    if !path.exists() {
        return Ok(ErrataLedger::default());
    }
    parse_errata(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sieve() -> Sieve {
        Sieve::new(10_000).unwrap()
    }

    #[test]
    fn generates_first_rows() {
        let rows = generate_rows(1, 4, &sieve()).unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[0].kind, Kind::NonPrime);
        assert_eq!(rows[0].ordinal, 1);
        assert!(rows[0].t.is_infinite());
        assert_eq!((rows[1].kind, rows[1].ordinal), (Kind::Prime, 1));
        assert!((rows[1].t - 3.3992701063703954).abs() < 1e-12);
        assert!((rows[2].t - 1.6963574117515417).abs() < 1e-12);
        assert_eq!((rows[3].kind, rows[3].ordinal), (Kind::NonPrime, 2));
        assert!((rows[3].t - 0.8879495234665518).abs() < 1e-12);
    }

    #[test]
    fn row_9_and_delegation() {
        let rows = generate_rows(9, 9, &sieve()).unwrap();
        assert_eq!((rows[0].kind, rows[0].ordinal), (Kind::NonPrime, 5));
        assert!((rows[0].t - 0.6693120588593804).abs() < 1e-12);
        let rows = generate_rows(2, 2, &sieve()).unwrap();
        assert_eq!(rows[0].t, t_prime(1, 2).unwrap().t);
    }

    #[test]
    fn rejects_bad_ranges() {
        let sv = sieve();
        assert!(generate_rows(0, 5, &sv).is_err());
        assert!(generate_rows(5, 4, &sv).is_err());
        assert!(generate_rows(1, 20_000, &sv).is_err());
    }

    #[test]
    fn emits_csv_primes_layout() {
        let rows = generate_rows(1, 4, &sieve()).unwrap();
        let doc = emit_table(&rows, Format::Csv, Layout::PrimesOnly).unwrap();
        let mut lines = doc.lines();
        assert_eq!(lines.next(), Some("m,p,t"));
        assert_eq!(lines.next(), Some("1,2,3.3992701064"));
        assert_eq!(lines.next(), Some("2,3,1.6963574118"));
    }

    #[test]
    fn emits_band_layout_with_t0() {
        let rows = generate_rows(1, 3, &sieve()).unwrap();
        let doc = emit_table(&rows, Format::Tsv, Layout::Band).unwrap();
        let m2 = doc.lines().nth(2).unwrap();
        assert_eq!(m2, "2\t3\t1.6963574118\t1.4298004337");
    }

    #[test]
    fn emits_infinity_sentinel_and_markdown() {
        let rows = generate_rows(1, 2, &sieve()).unwrap();
        let doc = emit_table(&rows, Format::Tsv, Layout::Mixed).unwrap();
        assert!(doc.contains("1\t\t1\tinf"));
        let md = emit_table(&rows, Format::Markdown, Layout::Mixed).unwrap();
        assert!(md.starts_with("| n | m | eta | t |"));
        assert!(md.contains("| 1 |  | 1 | inf |"));
    }

    #[test]
    fn emit_rejects_empty_and_emission_is_deterministic() {
        assert!(matches!(
            emit_table(&[], Format::Tsv, Layout::Mixed),
            Err(Error::EmptyRows)
        ));
        let rows = generate_rows(1, 50, &sieve()).unwrap();
        let a = emit_table(&rows, Format::Tsv, Layout::Mixed).unwrap();
        let b = emit_table(&rows, Format::Tsv, Layout::Mixed).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn emit_parse_round_trip() {
        let rows = generate_rows(1, 60, &sieve()).unwrap();
        for format in [Format::Tsv, Format::Csv, Format::Markdown] {
            let doc = emit_table(&rows, format, Layout::Mixed).unwrap();
            let back = parse_table(&doc, format, Layout::Mixed).unwrap();
            let doc2 = emit_table(&back, format, Layout::Mixed).unwrap();
            assert_eq!(doc, doc2);
            assert_eq!(back.len(), rows.len());
        }
    }

    #[test]
    fn golden_parse_reports_line_numbers() {
        let bad = "table_id\tn\tkind\tordinal\tt_printed\nmixed\t2\tprime\t1\t3.39\nmixed\tx\tprime\t1\t3.39\n";
        match parse_golden(bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_golden("wrong header\n").is_err());
    }

    #[test]
    fn compare_classifies_match_erratum_unresolved() {
        let sv = sieve();
        let golden = "table_id\tn\tkind\tordinal\tt_printed\n\
                      mixed\t2\tprime\t1\t3.3992701060\n\
                      mixed\t9\tnonprime\t5\t0.9999999999\n\
                      mixed\t10\tnonprime\t6\t0.5000000000\n";
        let rows = parse_golden(golden).unwrap();
        let ledger = parse_errata("table_id\tn\tnote\nmixed\t9\tknown misprint\n").unwrap();
        let (diffs, summary) = compare_golden(&rows, &ledger, GOLDEN_TOLERANCE, &sv).unwrap();
        assert_eq!(diffs[0].status, DiffStatus::Match);
        assert_eq!(diffs[1].status, DiffStatus::Erratum);
        assert_eq!(diffs[1].note.as_deref(), Some("known misprint"));
        assert_eq!(diffs[2].status, DiffStatus::Unresolved);
        assert_eq!(
            summary,
            GoldenSummary {
                rows: 3,
                matches: 1,
                errata: 1,
                unresolved: 1
            }
        );
    }

    #[test]
    fn infinity_rows_match() {
        let sv = sieve();
        let golden = "table_id\tn\tkind\tordinal\tt_printed\nmixed\t1\tnonprime\t1\tinf\n";
        let rows = parse_golden(golden).unwrap();
        let (diffs, _) =
            compare_golden(&rows, &ErrataLedger::default(), GOLDEN_TOLERANCE, &sv).unwrap();
        assert_eq!(diffs[0].status, DiffStatus::Match);
        assert_eq!(diffs[0].abs_delta, 0.0);
    }
}
