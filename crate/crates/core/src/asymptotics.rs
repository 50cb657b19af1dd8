//! Floating-point asymptotic estimates and growth diagnostics.
//!
//! Exact values are converted to `f64` through their natural logarithm,
//! computed from the bit length and the leading 64 bits, so values with
//! thousands of bits never overflow.

use std::f64::consts::{LN_2, PI};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::bigcount::BigCount;
use crate::error::{Error, Result};
use crate::seqcore::{SeqEngine, SeqKind};

/// Limit of `t_n / f_n`: `(3 + sqrt 3) / (3 - sqrt 3) = 2 + sqrt 3`.
pub fn t_over_f_limit() -> f64 {
    2.0 + 3f64.sqrt()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptoticEstimate {
    pub kind: SeqKind,
    pub n: usize,
    /// `exp(ln_estimate)`; infinite once the estimate leaves `f64` range.
    pub estimate: f64,
    pub ln_estimate: f64,
    /// Exact value divided by the estimate.
    pub exact_ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioDiagnostics {
    pub n: usize,
    pub growth_c: f64,
    pub growth_f: f64,
    pub growth_t: f64,
    pub t_over_f: f64,
}

/// Natural logarithm of a positive big integer.
pub fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return x.to_u64().map_or(f64::NAN, |v| (v as f64).ln());
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("64 leading bits fit in u64");
    (top as f64).ln() + shift as f64 * LN_2
}

/// `a / b` for positive big integers. Both are shifted by the same amount
/// until they fit in an `f64`, so the quotient keeps full precision.
pub fn big_ratio(a: &BigCount, b: &BigCount) -> f64 {
    let (a, b) = (a.as_biguint(), b.as_biguint());
    let shift = a.bits().max(b.bits()).saturating_sub(1000);
    let (x, y) = ((a >> shift).to_f64(), (b >> shift).to_f64());
    match (x, y) {
        (Some(x), Some(y)) if y > 0.0 => x / y,
        _ => (ln_big(a) - ln_big(b)).exp(),
    }
}

fn ln_sum_exp(x: f64, y: f64) -> f64 {
    let (hi, lo) = if x >= y { (x, y) } else { (y, x) };
    hi + (lo - hi).exp().ln_1p()
}

/// Logarithm of the asymptotic formula for `kind` at `n`.
///
/// - `C_n ~ 2^{2n} / sqrt(pi n^3)`
/// - `a_n ~ (2^{2n} + n^2 sqrt(pi n)) / sqrt(pi n^3)`
/// - `f_n ~ ((3 - sqrt 3)/6) 2^{3n-2} / sqrt(pi n^3)`
/// - `t_n ~ ((3 + sqrt 3)/6) 2^{3n-2} / sqrt(pi n^3)`
pub fn ln_formula(kind: SeqKind, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain {
            what: "asymptotic estimate",
            n,
            requirement: "n >= 1",
        });
    }
    let nf = n as f64;
    let ln_root = 0.5 * (PI * nf.powi(3)).ln();
    let ln_catalan = 2.0 * nf * LN_2 - ln_root;
    let ln_rows = (3.0 * nf - 2.0) * LN_2 - ln_root;
    let sqrt3 = 3f64.sqrt();
    match kind {
        SeqKind::C => Ok(ln_catalan),
        // n^2 sqrt(pi n) / sqrt(pi n^3) = n
        SeqKind::A => Ok(ln_sum_exp(ln_catalan, nf.ln())),
        SeqKind::F => Ok(((3.0 - sqrt3) / 6.0).ln() + ln_rows),
        SeqKind::T => Ok(((3.0 + sqrt3) / 6.0).ln() + ln_rows),
        other => Err(Error::UnsupportedKind(other)),
    }
}

pub fn estimate(kind: SeqKind, n: usize, engine: &SeqEngine) -> Result<AsymptoticEstimate> {
    let ln_estimate = ln_formula(kind, n)?;
    let exact = engine.value(kind, n);
    Ok(AsymptoticEstimate {
        kind,
        n,
        estimate: ln_estimate.exp(),
        ln_estimate,
        exact_ratio: (ln_big(exact.as_biguint()) - ln_estimate).exp(),
    })
}

/// Successive growth ratios and `t_n / f_n`.
pub fn ratio_diagnostics(n: usize, engine: &SeqEngine) -> Result<RatioDiagnostics> {
    if n < 2 {
        return Err(Error::Domain {
            what: "ratio_diagnostics",
            n,
            requirement: "n >= 2",
        });
    }
    let growth = |kind| big_ratio(&engine.value(kind, n), &engine.value(kind, n - 1));
    Ok(RatioDiagnostics {
        n,
        growth_c: growth(SeqKind::C),
        growth_f: growth(SeqKind::F),
        growth_t: growth(SeqKind::T),
        t_over_f: big_ratio(&engine.t_true(n), &engine.f_false(n)),
    })
}
