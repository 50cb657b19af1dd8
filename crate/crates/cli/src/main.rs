//! `catalan`: tables, trees and verification runs from the command line.
//!
//! Exit status is 0 on success, 1 when a verification check fails, and 2 on
//! any usage error.

mod render;

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use catalan_core::asymptotics::{estimate, ratio_diagnostics};
use catalan_core::logic_oracle::Caps;
use catalan_core::parity::verify_parity;
use catalan_core::series::{catalan_gf, expand_a_closed_form, naturals_gf, sqrt_one_minus_4x};
use catalan_core::tree_model::{build_shape, decorate};
use catalan_core::verify::{self, Suite};
use catalan_core::{Fruit, SeqEngine, SeqKind};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::render::Table;

#[derive(Parser)]
#[command(name = "catalan", version, about = "Catalan-derived sequences, trees and their verification")]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Csv,
    Json,
    Markdown,
    Dot,
    /// Same as `table`; the symbolic notation for `tree`.
    Text,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    C,
    G,
    F,
    T,
    A,
    Af,
    At,
}

impl From<KindArg> for SeqKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::C => SeqKind::C,
            KindArg::G => SeqKind::G,
            KindArg::F => SeqKind::F,
            KindArg::T => SeqKind::T,
            KindArg::A => SeqKind::A,
            KindArg::Af => SeqKind::AF,
            KindArg::At => SeqKind::AT,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FruitArg {
    F,
    T,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Oracle,
    Parity,
    Series,
    Asymptotics,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::Parity => Suite::Parity,
            SuiteArg::Series => Suite::Series,
            SuiteArg::Asymptotics => Suite::Asymptotics,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SeriesArg {
    /// The closed form for the Catalan-tree component counts.
    A,
    /// (1 - sqrt(1 - 4x)) / 2
    C,
    /// x / (1 - x)^2
    N,
    /// sqrt(1 - 4x)
    Sqrt,
}

#[derive(Subcommand)]
enum Command {
    /// Print a range of one sequence.
    Seq {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = 0)]
        from: usize,
        #[arg(long, default_value_t = 10)]
        to: usize,
    },
    /// Print the rows f_2..f_rows of the triangle of summands of f_n.
    Triangle {
        #[arg(long, default_value_t = 6)]
        rows: usize,
    },
    /// Print the Catalan tree A_n, optionally with fruit.
    Tree {
        n: usize,
        #[arg(long, value_enum)]
        fruit: Option<FruitArg>,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long = "max-n")]
        max_n: Option<usize>,
    },
    /// Expand a generating function.
    Series {
        #[arg(long, default_value_t = 10)]
        terms: usize,
        #[arg(long, value_enum, default_value = "a")]
        which: SeriesArg,
    },
    /// Parity verdicts for one sequence.
    Parity {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long = "max-n", default_value_t = 64)]
        max_n: usize,
    },
    /// Asymptotic estimates, or growth diagnostics with --diagnostics.
    Asymp {
        #[arg(long, value_enum, default_value = "f")]
        kind: KindArg,
        #[arg(long, default_value_t = 1)]
        from: usize,
        #[arg(long, default_value_t = 10)]
        to: usize,
        #[arg(long)]
        diagnostics: bool,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<catalan_core::Error> for Failure {
    fn from(e: catalan_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<String, (String, Failure)>;

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

/// The `{"kind", "n", "value"}` record shared by every sequence-like output.
#[derive(Serialize)]
struct Record {
    kind: String,
    n: usize,
    value: String,
}

fn records_table(records: &[Record]) -> Table {
    let mut t = Table::new(["kind", "n", "value"]);
    for r in records {
        t.push(vec![r.kind.clone(), r.n.to_string(), r.value.clone()]);
    }
    t
}

fn row_label(kind: &str) -> String {
    match kind {
        "c" => "C_n".into(),
        "af" => "a_n(f_n)".into(),
        "at" => "a_n(t_n)".into(),
        "sqrt" => "sqrt(1-4x)".into(),
        other => format!("{other}_n"),
    }
}

fn emit_records(records: &[Record], format: OutputFormat) -> Result<String, Failure> {
    match format {
        OutputFormat::Json => Ok(serde_json::to_string(records).expect("records serialize") + "\n"),
        OutputFormat::Csv => Ok(records_table(records).to_csv()),
        OutputFormat::Table | OutputFormat::Text | OutputFormat::Markdown => {
            // One row of indices and one of values, as in a published table.
            let label = records.first().map(|r| row_label(&r.kind)).unwrap_or_default();
            let mut t = Table::new(["n".to_owned(), label]);
            for r in records {
                t.push(vec![r.n.to_string(), r.value.clone()]);
            }
            let wide = t.transposed();
            Ok(if format == OutputFormat::Markdown {
                wide.to_markdown()
            } else {
                wide.to_boxed_text()
            })
        }
        OutputFormat::Dot => usage("dot output is only available for `tree`"),
    }
}

fn cmd_seq(engine: &SeqEngine, kind: SeqKind, from: usize, to: usize, format: OutputFormat) -> Result<String, Failure> {
    let rows = engine.table(kind, from, to)?;
    let records: Vec<Record> = rows
        .into_iter()
        .map(|(n, v)| Record {
            kind: kind.tag().to_owned(),
            n,
            value: v.to_string(),
        })
        .collect();
    emit_records(&records, format)
}

#[derive(Serialize)]
struct TriangleRecord {
    kind: &'static str,
    n: usize,
    value: String,
    terms: Vec<String>,
}

fn cmd_triangle(engine: &SeqEngine, rows: usize, format: OutputFormat) -> Result<String, Failure> {
    if rows < 2 {
        return usage(format!("--rows must be at least 2 (got {rows})"));
    }
    let records: Vec<TriangleRecord> = (2..=rows)
        .map(|n| {
            let row = engine.triangle_row(n)?;
            Ok(TriangleRecord {
                kind: "f",
                n,
                value: row.sum().to_string(),
                terms: row.terms.iter().map(ToString::to_string).collect(),
            })
        })
        .collect::<Result<_, catalan_core::Error>>()?;
    match format {
        OutputFormat::Json => Ok(serde_json::to_string(&records).expect("records serialize") + "\n"),
        OutputFormat::Csv => {
            let mut t = Table::new(["n", "f_n", "i", "term"]);
            for r in &records {
                for (i, term) in r.terms.iter().enumerate() {
                    t.push(vec![r.n.to_string(), r.value.clone(), (i + 1).to_string(), term.clone()]);
                }
            }
            Ok(t.to_csv())
        }
        OutputFormat::Markdown => {
            let mut t = Table::new(
                ["n".to_owned(), "f_n".to_owned()]
                    .into_iter()
                    .chain((1..rows).map(|i| format!("T(n,{i})"))),
            );
            for r in &records {
                let mut cells = vec![r.n.to_string(), r.value.clone()];
                cells.extend(r.terms.iter().cloned());
                cells.resize(rows + 1, String::new());
                t.push(cells);
            }
            Ok(t.to_markdown())
        }
        OutputFormat::Table | OutputFormat::Text => Ok(staggered_triangle(&records)),
        OutputFormat::Dot => usage("dot output is only available for `tree`"),
    }
}

/// Row sums on the left, terms staggered so each row sits between the terms
/// of the row above.
fn staggered_triangle(records: &[TriangleRecord]) -> String {
    let cell = records
        .iter()
        .flat_map(|r| r.terms.iter())
        .map(String::len)
        .max()
        .unwrap_or(1);
    let labels: Vec<String> = records.iter().map(|r| format!("f_{} = {}:", r.n, r.value)).collect();
    let label_width = labels.iter().map(String::len).max().unwrap_or(0);
    let rows = records.last().map_or(2, |r| r.n);
    let mut out = String::new();
    for (r, label) in records.iter().zip(&labels) {
        let mut line = format!("{label:<label_width$}");
        line.push_str(&" ".repeat((rows - r.n) * cell));
        for term in &r.terms {
            let _ = write!(line, " {term:>cell$}{}", " ".repeat(cell));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn cmd_tree(engine: &SeqEngine, caps: &Caps, n: usize, fruit: Option<Fruit>, format: OutputFormat) -> Result<String, Failure> {
    if n == 0 {
        return usage("the Catalan tree is defined for n >= 1");
    }
    let shape = build_shape(n, engine)?;
    let dot = match format {
        OutputFormat::Dot => true,
        OutputFormat::Text | OutputFormat::Table => false,
        other => return usage(format!("`tree` supports --format text or dot, not {other:?}")),
    };
    if dot && n > caps.product {
        return usage(format!(
            "n = {n} exceeds the drawing cap of {} (set CATALAN_MAX_N to raise it)",
            caps.product
        ));
    }
    let text = match fruit {
        Some(fruit) => {
            let tree = decorate(&shape, fruit, caps)?;
            if dot {
                tree.to_dot()
            } else {
                tree.symbolic_repr() + "\n"
            }
        }
        None if dot => shape.to_dot(),
        None => shape.symbolic_repr() + "\n",
    };
    Ok(text)
}

fn cmd_verify(engine: &SeqEngine, caps: &Caps, suite: Suite, max_n: Option<usize>, format: OutputFormat) -> CmdResult {
    let report = verify::run(suite, max_n, caps, engine).map_err(|e| (String::new(), e.into()))?;
    let text = match format {
        OutputFormat::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        _ => report.to_string(),
    };
    if report.passed() {
        Ok(text)
    } else {
        Err((text, Failure::Verification))
    }
}

fn cmd_series(terms: usize, which: SeriesArg, format: OutputFormat) -> Result<String, Failure> {
    let (kind, series) = match which {
        SeriesArg::A => ("a", expand_a_closed_form(terms)?),
        SeriesArg::C => ("c", catalan_gf(terms)),
        SeriesArg::N => ("n", naturals_gf(terms)),
        SeriesArg::Sqrt => ("sqrt", sqrt_one_minus_4x(terms)),
    };
    let records: Vec<Record> = series
        .integer_coeffs()?
        .into_iter()
        .enumerate()
        .map(|(k, c)| Record {
            kind: kind.to_owned(),
            n: k,
            value: c.to_string(),
        })
        .collect();
    emit_records(&records, format)
}

fn cmd_parity(kind: SeqKind, max_n: usize, format: OutputFormat) -> CmdResult {
    let fail = |e: catalan_core::Error| (String::new(), e.into());
    let verdicts = verify_parity(kind, max_n).map_err(fail)?;
    let all_agree = verdicts.iter().all(|v| v.agrees);
    let text = match format {
        OutputFormat::Json => serde_json::to_string(&verdicts).expect("verdicts serialize") + "\n",
        OutputFormat::Dot => return Err((String::new(), Failure::Usage("dot output is only available for `tree`".into()))),
        other => {
            let mut t = Table::new(["kind", "n", "observed", "predicted", "agrees"]);
            for v in &verdicts {
                t.push(vec![
                    v.kind.tag().to_owned(),
                    v.n.to_string(),
                    v.observed.to_string(),
                    v.predicted.to_string(),
                    v.agrees.to_string(),
                ]);
            }
            match other {
                OutputFormat::Csv => t.to_csv(),
                OutputFormat::Markdown => t.to_markdown(),
                _ => t.to_text(),
            }
        }
    };
    if all_agree {
        Ok(text)
    } else {
        Err((text, Failure::Verification))
    }
}

fn cmd_asymp(
    engine: &SeqEngine,
    kind: SeqKind,
    from: usize,
    to: usize,
    diagnostics: bool,
    format: OutputFormat,
) -> Result<String, Failure> {
    if from > to {
        return usage(format!("invalid range: from ({from}) exceeds to ({to})"));
    }
    let mut t;
    let json;
    if diagnostics {
        let rows = (from.max(2)..=to)
            .map(|n| ratio_diagnostics(n, engine))
            .collect::<Result<Vec<_>, _>>()?;
        t = Table::new(["n", "growth_c", "growth_f", "growth_t", "t_over_f"]);
        for d in &rows {
            t.push(vec![
                d.n.to_string(),
                d.growth_c.to_string(),
                d.growth_f.to_string(),
                d.growth_t.to_string(),
                d.t_over_f.to_string(),
            ]);
        }
        json = serde_json::to_string(&rows).expect("diagnostics serialize");
    } else {
        if !matches!(kind, SeqKind::C | SeqKind::A | SeqKind::F | SeqKind::T) {
            return usage(format!("no asymptotic formula for kind {kind}"));
        }
        let rows = (from.max(1)..=to)
            .map(|n| estimate(kind, n, engine))
            .collect::<Result<Vec<_>, _>>()?;
        t = Table::new(["kind", "n", "estimate", "ln_estimate", "exact_ratio"]);
        for e in &rows {
            t.push(vec![
                e.kind.tag().to_owned(),
                e.n.to_string(),
                e.estimate.to_string(),
                e.ln_estimate.to_string(),
                e.exact_ratio.to_string(),
            ]);
        }
        json = serde_json::to_string(&rows).expect("estimates serialize");
    }
    match format {
        OutputFormat::Json => Ok(json + "\n"),
        OutputFormat::Csv => Ok(t.to_csv()),
        OutputFormat::Markdown => Ok(t.to_markdown()),
        OutputFormat::Table | OutputFormat::Text => Ok(t.to_text()),
        OutputFormat::Dot => usage("dot output is only available for `tree`"),
    }
}

fn run(cli: Cli) -> CmdResult {
    let engine = SeqEngine::new();
    let caps = Caps::from_env();
    let plain = |r: Result<String, Failure>| r.map_err(|f| (String::new(), f));
    let fmt = |default| cli.format.unwrap_or(default);
    match cli.command {
        Command::Seq { kind, from, to } => plain(cmd_seq(&engine, kind.into(), from, to, fmt(OutputFormat::Table))),
        Command::Triangle { rows } => plain(cmd_triangle(&engine, rows, fmt(OutputFormat::Table))),
        Command::Tree { n, fruit } => {
            let fruit = fruit.map(|f| match f {
                FruitArg::F => Fruit::F,
                FruitArg::T => Fruit::T,
            });
            plain(cmd_tree(&engine, &caps, n, fruit, fmt(OutputFormat::Text)))
        }
        Command::Verify { suite, max_n } => cmd_verify(&engine, &caps, suite.into(), max_n, fmt(OutputFormat::Text)),
        Command::Series { terms, which } => plain(cmd_series(terms, which, fmt(OutputFormat::Table))),
        Command::Parity { kind, max_n } => cmd_parity(kind.into(), max_n, fmt(OutputFormat::Table)),
        Command::Asymp {
            kind,
            from,
            to,
            diagnostics,
        } => plain(cmd_asymp(&engine, kind.into(), from, to, diagnostics, fmt(OutputFormat::Table))),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let (text, code) = match run(cli) {
        Ok(text) => (text, ExitCode::SUCCESS),
        Err((text, Failure::Verification)) => (text, ExitCode::from(1)),
        Err((_, Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(2);
    }
    code
}
