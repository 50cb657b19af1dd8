//! Verification suites: each one runs a family of checks over a range and
//! reports a verdict per check.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::asymptotics::{estimate, ratio_diagnostics, t_over_f_limit};
use crate::bigcount::BigCount;
use crate::error::{Error, Result};
use crate::logic_oracle::{census, enumerate_trees, product_counts, Caps, Census, CountMode};
use crate::parity::{mod2_engine, residue_mismatches, verify_against, Mod2Table};
use crate::seqcore::{SeqEngine, SeqKind};
use crate::series::{
    catalan_gf, compare_with_sequence, expand_a_closed_form, naturals_gf, series_add, series_mul, series_sub,
    sqrt_one_minus_4x, Series,
};

pub const DEFAULT_TRUTH_TABLE_MAX: usize = 8;
pub const DEFAULT_PRODUCT_MAX: usize = 13;
pub const DEFAULT_PARITY_MAX: usize = 4096;
pub const DEFAULT_PARITY_FULL_MAX: usize = 512;
pub const DEFAULT_SERIES_ORDER: usize = 64;
pub const DEFAULT_ASYMPTOTIC_N: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Oracle,
    Parity,
    Series,
    Asymptotics,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Parity => "parity",
            Suite::Series => "series",
            Suite::Asymptotics => "asymptotics",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Suite::Oracle, Suite::Parity, Suite::Series, Suite::Asymptotics, Suite::All]
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse {
                what: "verification suite",
                input: s.to_owned(),
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub range: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
    /// Observations that are reported but not asserted.
    pub notes: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn check(&mut self, suite: Suite, name: &str, range: String, passed: bool, detail: String) {
        self.checks.push(Check {
            suite,
            name: name.to_owned(),
            range,
            passed,
            detail,
        });
    }

    fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "{verdict}  [{}] {} ({})", c.suite, c.name, c.range)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        for note in &self.notes {
            writeln!(f, "note  {note}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        writeln!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

/// `max_n` overrides a suite's default range: the truth-table range for
/// `oracle`, the mod-2 range for `parity`, the order for `series`, and the
/// largest index for `asymptotics`.
pub fn run(suite: Suite, max_n: Option<usize>, caps: &Caps, engine: &SeqEngine) -> Result<Report> {
    match suite {
        Suite::Oracle => {
            let tt = max_n.unwrap_or(DEFAULT_TRUTH_TABLE_MAX);
            let product = DEFAULT_PRODUCT_MAX.max(tt).min(caps.product.max(tt));
            oracle_suite(tt, product, caps, engine)
        }
        Suite::Parity => {
            let max = max_n.unwrap_or(DEFAULT_PARITY_MAX);
            parity_suite(max, DEFAULT_PARITY_FULL_MAX.min(max), engine)
        }
        Suite::Series => series_suite(max_n.unwrap_or(DEFAULT_SERIES_ORDER), engine),
        Suite::Asymptotics => asymptotics_suite(max_n.unwrap_or(DEFAULT_ASYMPTOTIC_N), engine),
        Suite::All => {
            let mut report = Report::default();
            for s in [Suite::Oracle, Suite::Parity, Suite::Series, Suite::Asymptotics] {
                report.extend(run(s, None, caps, engine)?);
            }
            Ok(report)
        }
    }
}

fn mismatch_detail(bad: &[usize]) -> String {
    match bad.first() {
        None => String::new(),
        Some(first) => format!("{} mismatches, first at n = {first}", bad.len()),
    }
}

fn census_matches(c: &Census, engine: &SeqEngine) -> (bool, bool, bool) {
    let n = c.n;
    let totals = c.totals.f == engine.f_false(n) && c.totals.t == engine.t_true(n) && c.totals.g == engine.g_total(n);
    let (sums, sizes) = if n >= 2 {
        let row = engine.triangle_row(n).expect("n >= 2");
        let sums = c.groups.iter().map(|g| g.false_sum()).eq(row.terms.iter().cloned());
        let sizes = c
            .groups
            .iter()
            .all(|g| BigCount::from(g.trees.len()) == &engine.catalan(g.split) * &engine.catalan(n - g.split));
        (sums, sizes)
    } else {
        (true, c.tree_count() == 1)
    };
    (totals, sums, sizes)
}

/// Brute-force census against the recurrences.
pub fn oracle_suite(tt_max: usize, product_max: usize, caps: &Caps, engine: &SeqEngine) -> Result<Report> {
    let suite = Suite::Oracle;
    let mut report = Report::default();

    let mut bad_totals = Vec::new();
    let mut bad_rows = Vec::new();
    let mut bad_trees = Vec::new();
    for n in 1..=tt_max {
        let c = census(n, CountMode::TruthTable, caps)?;
        let (totals, sums, _) = census_matches(&c, engine);
        if !totals {
            bad_totals.push(n);
        }
        if !sums {
            bad_rows.push(n);
        }
        for tc in c.trees() {
            if product_counts(&tc.tree) != *tc {
                bad_trees.push(n);
                break;
            }
        }
    }
    let range = format!("n = 1..{tt_max}");
    report.check(
        suite,
        "truth-table census totals equal f_n, t_n, g_n",
        range.clone(),
        bad_totals.is_empty(),
        mismatch_detail(&bad_totals),
    );
    report.check(
        suite,
        "truth-table split sums equal triangle rows",
        range.clone(),
        bad_rows.is_empty(),
        mismatch_detail(&bad_rows),
    );
    report.check(
        suite,
        "per-tree truth table equals product rule",
        range,
        bad_trees.is_empty(),
        mismatch_detail(&bad_trees),
    );

    let mut bad_totals = Vec::new();
    let mut bad_rows = Vec::new();
    let mut bad_sizes = Vec::new();
    let mut order_free = true;
    for n in 1..=product_max {
        let c = census(n, CountMode::Product, caps)?;
        let (totals, sums, sizes) = census_matches(&c, engine);
        if !totals {
            bad_totals.push(n);
        }
        if !sums {
            bad_rows.push(n);
        }
        if !sizes {
            bad_sizes.push(n);
        }
        // Reversed-order aggregation must give the same totals.
        let reversed: BigCount = c.trees().collect::<Vec<_>>().into_iter().rev().map(|t| &t.false_rows).sum();
        order_free &= reversed == c.totals.f;
        debug_assert_eq!(c.tree_count(), enumerate_trees(n, caps)?.count());
    }
    let range = format!("n = 1..{product_max}");
    report.check(
        suite,
        "product census totals equal f_n, t_n, g_n",
        range.clone(),
        bad_totals.is_empty(),
        mismatch_detail(&bad_totals),
    );
    report.check(
        suite,
        "product split sums equal triangle rows",
        range.clone(),
        bad_rows.is_empty(),
        mismatch_detail(&bad_rows),
    );
    report.check(
        suite,
        "split group sizes equal C_i * C_(n-i)",
        range.clone(),
        bad_sizes.is_empty(),
        mismatch_detail(&bad_sizes),
    );
    report.check(
        suite,
        "census totals independent of aggregation order",
        range,
        order_free,
        String::new(),
    );
    Ok(report)
}

fn verdict_failures(table: &Mod2Table, kinds: &[SeqKind]) -> Result<Vec<usize>> {
    let mut bad = Vec::new();
    for &kind in kinds {
        bad.extend(verify_against(table, kind)?.into_iter().filter(|v| !v.agrees).map(|v| v.n));
    }
    bad.sort_unstable();
    bad.dedup();
    Ok(bad)
}

/// Parity predictions against the mod-2 engine, and the engine against full
/// values on the smaller range.
pub fn parity_suite(max_n: usize, full_max: usize, engine: &SeqEngine) -> Result<Report> {
    let suite = Suite::Parity;
    let mut report = Report::default();
    let table = mod2_engine(max_n)?;
    let range = format!("n = 1..{max_n}");

    let bad = verdict_failures(&table, &[SeqKind::C])?;
    report.check(
        suite,
        "C_n odd iff n = 1 or n = 2^i",
        range.clone(),
        bad.is_empty(),
        mismatch_detail(&bad),
    );
    let bad = verdict_failures(&table, &[SeqKind::A])?;
    report.check(
        suite,
        "a_n odd iff n odd or n = 2^i",
        range.clone(),
        bad.is_empty(),
        mismatch_detail(&bad),
    );
    let bad = verdict_failures(&table, &[SeqKind::F])?;
    report.check(
        suite,
        "f_n odd iff n = 1 or n = 2^i",
        range.clone(),
        bad.is_empty(),
        mismatch_detail(&bad),
    );
    let preserved: Vec<usize> = (1..=max_n)
        .filter(|&n| !(table.f[n] == table.c[n] && table.t[n] == table.c[n]))
        .collect();
    report.check(
        suite,
        "f_n and t_n preserve the parity of C_n",
        range.clone(),
        preserved.is_empty(),
        mismatch_detail(&preserved),
    );
    let bad = verdict_failures(&table, &[SeqKind::G])?;
    report.check(suite, "g_n even", range.clone(), bad.is_empty(), mismatch_detail(&bad));
    let bad = verdict_failures(&table, &[SeqKind::AF, SeqKind::AT])?;
    report.check(
        suite,
        "a_n(f_n) and a_n(t_n) odd iff n odd",
        format!("n = 2..{max_n}"),
        bad.is_empty(),
        mismatch_detail(&bad),
    );

    let mut bad = Vec::new();
    for kind in SeqKind::ALL {
        bad.extend(residue_mismatches(&table, engine, kind, full_max));
    }
    bad.sort_unstable();
    bad.dedup();
    report.check(
        suite,
        "mod-2 residues equal full values",
        format!("n = 0..{full_max}"),
        bad.is_empty(),
        mismatch_detail(&bad),
    );

    report.notes.push(
        "a_1(f_1) = a_1(t_1) = 2 is even although n = 1 is odd; the fruitful-total parity claim is checked from n = 2"
            .to_owned(),
    );
    Ok(report)
}

/// The closed form for `A(x)` against `a_n` and against `C(x) + N(x) - x`.
pub fn series_suite(order: usize, engine: &SeqEngine) -> Result<Report> {
    let suite = Suite::Series;
    let mut report = Report::default();
    let range = format!("K = {order}");

    let sqrt = sqrt_one_minus_4x(order);
    let squared = series_mul(&sqrt, &sqrt)?;
    report.check(
        suite,
        "sqrt(1 - 4x) squared equals 1 - 4x",
        range.clone(),
        squared == Series::polynomial(&[1, -4], order),
        String::new(),
    );

    let closed = match expand_a_closed_form(order) {
        Ok(s) => s,
        Err(e) => {
            report.check(suite, "closed-form coefficients are integers", range, false, e.to_string());
            return Ok(report);
        }
    };
    report.check(
        suite,
        "closed-form coefficients are integers",
        range.clone(),
        true,
        String::new(),
    );
    let bad: Vec<usize> = compare_with_sequence(&closed, SeqKind::A, engine)
        .into_iter()
        .filter(|&(_, ok)| !ok)
        .map(|(k, _)| k)
        .collect();
    report.check(
        suite,
        "closed-form coefficients equal a_n",
        format!("n = 0..{order}"),
        bad.is_empty(),
        mismatch_detail(&bad),
    );
    let identity = series_sub(
        &series_add(&catalan_gf(order), &naturals_gf(order))?,
        &Series::polynomial(&[0, 1], order),
    )?;
    report.check(
        suite,
        "closed form equals C(x) + N(x) - x",
        range,
        identity == closed,
        String::new(),
    );
    Ok(report)
}

fn relative_error(value: f64, target: f64) -> f64 {
    ((value - target) / target).abs()
}

/// Trend checks on the asymptotic formulas up to index `max_n`.
pub fn asymptotics_suite(max_n: usize, engine: &SeqEngine) -> Result<Report> {
    let suite = Suite::Asymptotics;
    let mut report = Report::default();
    let limit = t_over_f_limit();

    // Warm the memo in one pass.
    engine.f_false(max_n);

    let ratios: Vec<f64> = (6..=max_n)
        .map(|n| ratio_diagnostics(n, engine).map(|d| d.t_over_f))
        .collect::<Result<_>>()?;
    let increasing = ratios.windows(2).all(|w| w[0] < w[1]);
    let below = ratios.iter().all(|&r| r < limit);
    report.check(
        suite,
        "t_n / f_n increasing and below 2 + sqrt 3",
        format!("n = 6..{max_n}"),
        increasing && below,
        String::new(),
    );

    let last = ratio_diagnostics(max_n.max(2), engine)?;
    let err = relative_error(last.t_over_f, limit);
    report.check(
        suite,
        "t_n / f_n within 0.5% of 2 + sqrt 3",
        format!("n = {}", last.n),
        err < 0.005,
        format!("t/f = {:.7}, relative error {err:.2e}", last.t_over_f),
    );
    let err = relative_error(last.growth_f, 8.0);
    report.check(
        suite,
        "f_n / f_(n-1) within 1% of 8",
        format!("n = {}", last.n),
        err < 0.01,
        format!("growth = {:.6}", last.growth_f),
    );
    let err = relative_error(last.growth_c, 4.0);
    report.check(
        suite,
        "C_n / C_(n-1) within 1% of 4",
        format!("n = {}", last.n),
        err < 0.01,
        format!("growth = {:.6}", last.growth_c),
    );

    let out_of_band: Vec<usize> = (50..=max_n)
        .filter(|&n| {
            let r = estimate(SeqKind::F, n, engine).map(|e| e.exact_ratio).unwrap_or(f64::NAN);
            !(r > 0.8 && r < 1.2)
        })
        .collect();
    report.check(
        suite,
        "f_n / estimate within (0.8, 1.2)",
        format!("n = 50..{max_n}"),
        out_of_band.is_empty(),
        mismatch_detail(&out_of_band),
    );

    let samples: Vec<usize> = [50, 100, 200, 400].into_iter().filter(|&n| n <= max_n).collect();
    let distances: Vec<f64> = samples
        .iter()
        .map(|&n| estimate(SeqKind::F, n, engine).map(|e| (e.exact_ratio - 1.0).abs()))
        .collect::<Result<_>>()?;
    report.check(
        suite,
        "f_n / estimate drifts monotonically toward 1",
        format!("n in {samples:?}"),
        distances.windows(2).all(|w| w[1] < w[0]),
        distances
            .iter()
            .map(|d| format!("{d:.5}"))
            .collect::<Vec<_>>()
            .join(", "),
    );

    let c_ratios: Vec<f64> = samples
        .iter()
        .map(|&n| estimate(SeqKind::C, n, engine).map(|e| e.exact_ratio))
        .collect::<Result<_>>()?;
    let bounded = c_ratios.iter().all(|&r| r > 0.2 && r < 0.3);
    let flattening = c_ratios
        .windows(3)
        .all(|w| (w[2] - w[1]).abs() < (w[1] - w[0]).abs());
    report.check(
        suite,
        "C_n / estimate bounded and flattening",
        format!("n in {samples:?}"),
        bounded && flattening,
        c_ratios
            .iter()
            .map(|r| format!("{r:.5}"))
            .collect::<Vec<_>>()
            .join(", "),
    );
    report.notes.push(format!(
        "C_n / (2^(2n) / sqrt(pi n^3)) approaches about 1/4 with C_1 = C_2 = 1 indexing (measured {:.5} at n = {})",
        c_ratios.last().copied().unwrap_or(f64::NAN),
        samples.last().copied().unwrap_or(0)
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        for s in ["oracle", "parity", "series", "asymptotics", "all"] {
            assert_eq!(s.parse::<Suite>().unwrap().name(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn small_runs_pass() {
        let e = SeqEngine::new();
        let caps = Caps::default();
        assert!(oracle_suite(5, 7, &caps, &e).unwrap().passed());
        assert!(parity_suite(256, 64, &e).unwrap().passed());
        assert!(series_suite(16, &e).unwrap().passed());
    }

    #[test]
    fn report_lines() {
        let e = SeqEngine::new();
        let report = series_suite(8, &e).unwrap();
        let text = report.to_string();
        assert!(text.lines().all(|l| l.starts_with("PASS") || l.contains("checks")));
        assert!(text.ends_with("4 checks, 0 failed\n"));
    }
}
