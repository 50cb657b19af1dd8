//! Exact, memoized evaluation of the Catalan-derived sequences.
//!
//! Catalan numbers use the shifted convention `C_0 = 0, C_1 = C_2 = 1,
//! C_3 = 2, ...`, so `C_n` counts the bracketings of an implication chain on
//! `n` variables. On top of those:
//!
//! - `g_n = 2^n C_n`, the number of truth-table rows over all bracketings;
//! - `f_n = sum_{i=1}^{n-1} (2^i C_i - f_i) f_{n-i}`, `f_1 = 1`, the rows
//!   evaluating to false;
//! - `t_n = g_n - f_n`, the rows evaluating to true;
//! - `a_n = C_n + n` for `n > 1` (`a_0 = 0`, `a_1 = 1`), the component count
//!   of the Catalan tree;
//! - `a_n(f_n)`, `a_n(t_n)`, component counts of the fruitful trees.
//!
//! `f_0` and `t_0` are taken to be zero.

use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bigcount::BigCount;
use crate::error::{Error, Result};

/// Selects one of the seven sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeqKind {
    /// Catalan numbers `C_n`.
    C,
    /// Total truth-table rows `g_n`.
    G,
    /// False rows `f_n`.
    F,
    /// True rows `t_n`.
    T,
    /// Catalan tree components `a_n`.
    A,
    /// Fruitful tree components with fruit sequence `f`.
    AF,
    /// Fruitful tree components with fruit sequence `t`.
    AT,
}

impl SeqKind {
    pub const ALL: [SeqKind; 7] = [
        SeqKind::C,
        SeqKind::G,
        SeqKind::F,
        SeqKind::T,
        SeqKind::A,
        SeqKind::AF,
        SeqKind::AT,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            SeqKind::C => "c",
            SeqKind::G => "g",
            SeqKind::F => "f",
            SeqKind::T => "t",
            SeqKind::A => "a",
            SeqKind::AF => "af",
            SeqKind::AT => "at",
        }
    }
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SeqKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        SeqKind::ALL
            .into_iter()
            .find(|k| k.tag() == lower)
            .ok_or_else(|| Error::Parse {
                what: "sequence kind",
                input: s.to_owned(),
            })
    }
}

/// Which fruit sequence decorates a fruitful tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Fruit {
    F,
    T,
}

impl Fruit {
    pub fn seq_kind(self) -> SeqKind {
        match self {
            Fruit::F => SeqKind::AF,
            Fruit::T => SeqKind::AT,
        }
    }
}

/// The additive decomposition of `f_n` into its summands `T(n, i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleRow {
    pub n: usize,
    /// `terms[i - 1] = T(n, i)` for `i = 1..n-1`.
    pub terms: Vec<BigCount>,
}

impl TriangleRow {
    pub fn sum(&self) -> BigCount {
        self.terms.iter().sum()
    }
}

#[derive(Debug)]
struct Memo {
    /// `catalan[n] = C_n`, always at least `[0, 1]`.
    catalan: Vec<BigUint>,
    /// `falses[n] = f_n` with `f_0 = 0`.
    falses: Vec<BigUint>,
    /// `trues[n] = t_n` with `t_0 = 0`; kept alongside `falses` since every
    /// triangle term is `t_i * f_{n-i}`.
    trues: Vec<BigUint>,
}

impl Memo {
    fn new() -> Self {
        Memo {
            catalan: vec![BigUint::zero(), BigUint::one()],
            falses: vec![BigUint::zero(), BigUint::one()],
            trues: vec![BigUint::zero(), BigUint::one()],
        }
    }

    fn extend_catalan(&mut self, n: usize) {
        while self.catalan.len() <= n {
            let m = self.catalan.len();
            let c = &self.catalan;
            let value = (1..m).fold(BigUint::zero(), |acc, i| acc + &c[i] * &c[m - i]);
            self.catalan.push(value);
        }
    }

    fn extend_falses(&mut self, n: usize) {
        self.extend_catalan(n);
        while self.falses.len() <= n {
            let m = self.falses.len();
            let value = (1..m).fold(BigUint::zero(), |acc, i| {
                acc + &self.trues[i] * &self.falses[m - i]
            });
            let total = &self.catalan[m] << m;
            let trues = total - &value;
            self.falses.push(value);
            self.trues.push(trues);
        }
    }
}

/// Memoized evaluator for every sequence.
///
/// The memo is insert-only and guarded by a mutex, so one engine may be
/// shared across threads. Values are computed once per engine.
#[derive(Debug)]
pub struct SeqEngine {
    memo: Mutex<Memo>,
}

impl Default for SeqEngine {
    fn default() -> Self {
        SeqEngine::new()
    }
}

impl SeqEngine {
    pub fn new() -> Self {
        SeqEngine {
            memo: Mutex::new(Memo::new()),
        }
    }

    fn with_memo<R>(&self, f: impl FnOnce(&mut Memo) -> R) -> R {
        // A panic while holding the lock cannot leave a half-written entry:
        // each push happens after its value is fully computed.
        let mut memo = self.memo.lock().unwrap_or_else(|e| e.into_inner());
        f(&mut memo)
    }

    /// `C_n`, with `C_0 = 0` and `C_1 = 1`.
    pub fn catalan(&self, n: usize) -> BigCount {
        self.with_memo(|m| {
            m.extend_catalan(n);
            BigCount::from(m.catalan[n].clone())
        })
    }

    /// `C_n = binom(2n-2, n-1) / n`, independently of the recurrence.
    pub fn catalan_explicit(&self, n: usize) -> Result<BigCount> {
        if n == 0 {
            return Err(Error::Domain {
                what: "catalan_explicit",
                n,
                requirement: "n >= 1",
            });
        }
        Ok(BigCount::from(explicit_catalan(n)))
    }

    /// `g_n = 2^n C_n`.
    pub fn g_total(&self, n: usize) -> BigCount {
        BigCount::from(self.catalan(n).into_inner() << n)
    }

    /// `f_n`; `f_0` is defined as 0.
    pub fn f_false(&self, n: usize) -> BigCount {
        self.with_memo(|m| {
            m.extend_falses(n);
            BigCount::from(m.falses[n].clone())
        })
    }

    /// `t_n = g_n - f_n`, with `t_0 = 0`.
    pub fn t_true(&self, n: usize) -> BigCount {
        self.with_memo(|m| {
            m.extend_falses(n);
            BigCount::from(m.trues[n].clone())
        })
    }

    /// `a_n = C_n + n` for `n > 1`; `a_0 = 0`, `a_1 = 1`.
    pub fn a_total(&self, n: usize) -> BigCount {
        match n {
            0 => BigCount::zero(),
            1 => BigCount::from(1u64),
            _ => self.catalan(n) + BigCount::from(n),
        }
    }

    /// `a_n = binom(2n-2, n-1) / n + n`, for `n > 1` only.
    pub fn a_explicit(&self, n: usize) -> Result<BigCount> {
        if n <= 1 {
            return Err(Error::Domain {
                what: "a_explicit",
                n,
                requirement: "n > 1",
            });
        }
        Ok(BigCount::from(explicit_catalan(n) + n))
    }

    /// `a_n(mu_n) = mu_n + C_n + n` for `n > 1`.
    ///
    /// The published table lists `a_1(.) = 2` and `a_0(.) = 0`; those values
    /// are returned as-is even though the formula would give 3 at `n = 1`.
    pub fn fruitful_total(&self, n: usize, fruit: Fruit) -> BigCount {
        match n {
            0 => BigCount::zero(),
            1 => BigCount::from(2u64),
            _ => {
                let mu = match fruit {
                    Fruit::F => self.f_false(n),
                    Fruit::T => self.t_true(n),
                };
                mu + &self.catalan(n) + BigCount::from(n)
            }
        }
    }

    /// `T(n, i) = (2^i C_i - f_i) f_{n-i} = t_i f_{n-i}` for `1 <= i <= n-1`.
    pub fn triangle_term(&self, n: usize, i: usize) -> Result<BigCount> {
        if i == 0 || i >= n {
            return Err(Error::SplitOutOfRange {
                n,
                i,
                max: n.saturating_sub(1),
            });
        }
        Ok(self.with_memo(|m| {
            m.extend_falses(n);
            BigCount::from(&m.trues[i] * &m.falses[n - i])
        }))
    }

    /// All summands of `f_n`, `i` ascending.
    pub fn triangle_row(&self, n: usize) -> Result<TriangleRow> {
        if n < 2 {
            return Err(Error::Domain {
                what: "triangle_row",
                n,
                requirement: "n >= 2",
            });
        }
        let terms = self.with_memo(|m| {
            m.extend_falses(n);
            (1..n)
                .map(|i| BigCount::from(&m.trues[i] * &m.falses[n - i]))
                .collect()
        });
        Ok(TriangleRow { n, terms })
    }

    pub fn value(&self, kind: SeqKind, n: usize) -> BigCount {
        match kind {
            SeqKind::C => self.catalan(n),
            SeqKind::G => self.g_total(n),
            SeqKind::F => self.f_false(n),
            SeqKind::T => self.t_true(n),
            SeqKind::A => self.a_total(n),
            SeqKind::AF => self.fruitful_total(n, Fruit::F),
            SeqKind::AT => self.fruitful_total(n, Fruit::T),
        }
    }

    /// `(n, value)` pairs for the inclusive range `from..=to`.
    pub fn table(&self, kind: SeqKind, from: usize, to: usize) -> Result<Vec<(usize, BigCount)>> {
        if from > to {
            return Err(Error::InvalidRange { from, to });
        }
        // Warm the memo once so the per-index lookups below are cheap.
        match kind {
            SeqKind::F | SeqKind::T | SeqKind::AF | SeqKind::AT => {
                self.f_false(to);
            }
            _ => {
                self.catalan(to);
            }
        }
        Ok((from..=to).map(|n| (n, self.value(kind, n))).collect())
    }
}

/// `binom(2n-2, n-1) / n` by the multiplicative binomial formula.
fn explicit_catalan(n: usize) -> BigUint {
    debug_assert!(n >= 1);
    let top = 2 * n - 2;
    let k = n - 1;
    // After step j the accumulator holds binom(top - k + j, j), an integer.
    let binom = (1..=k).fold(BigUint::one(), |acc, j| acc * (top - k + j) / j);
    let (quotient, remainder) = (
        &binom / BigUint::from(n),
        &binom % BigUint::from(n),
    );
    debug_assert!(remainder.is_zero());
    quotient
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(s: &str) -> BigCount {
        s.parse().unwrap()
    }

    #[test]
    fn catalan_values() {
        let e = SeqEngine::new();
        assert_eq!(e.catalan(0), BigCount::zero());
        assert_eq!(e.catalan(4), big("5"));
        assert_eq!(e.catalan(10), big("4862"));
    }

    #[test]
    fn catalan_explicit_values() {
        let e = SeqEngine::new();
        assert_eq!(e.catalan_explicit(1).unwrap(), big("1"));
        assert_eq!(e.catalan_explicit(5).unwrap(), big("14"));
        assert_eq!(e.catalan_explicit(30).unwrap(), big("1002242216651368"));
        assert_eq!(e.catalan(30), big("1002242216651368"));
        assert!(matches!(e.catalan_explicit(0), Err(Error::Domain { .. })));
    }

    #[test]
    fn g_values() {
        let e = SeqEngine::new();
        assert_eq!(e.g_total(0), BigCount::zero());
        assert_eq!(e.g_total(1), big("2"));
        assert_eq!(e.g_total(4), big("80"));
        assert_eq!(e.g_total(5), big("448"));
    }

    #[test]
    fn f_and_t_values() {
        let e = SeqEngine::new();
        assert_eq!(e.f_false(0), BigCount::zero());
        assert_eq!(e.f_false(1), big("1"));
        assert_eq!(e.f_false(5), big("104"));
        assert_eq!(e.f_false(7), big("3816"));
        assert_eq!(e.t_true(0), BigCount::zero());
        assert_eq!(e.t_true(4), big("61"));
        assert_eq!(e.t_true(5), big("344"));
    }

    #[test]
    fn a_values() {
        let e = SeqEngine::new();
        assert_eq!(e.a_total(0), BigCount::zero());
        assert_eq!(e.a_total(1), big("1"));
        assert_eq!(e.a_total(5), big("19"));
        assert_eq!(e.a_total(10), big("4872"));
        assert_eq!(e.a_explicit(2).unwrap(), big("3"));
        assert_eq!(e.a_explicit(8).unwrap(), big("437"));
        assert_eq!(e.a_explicit(20).unwrap(), big("1767263210"));
        assert_eq!(e.a_total(20), big("1767263210"));
        assert!(e.a_explicit(1).is_err());
        assert!(e.a_explicit(0).is_err());
    }

    #[test]
    fn fruitful_values() {
        let e = SeqEngine::new();
        assert_eq!(e.fruitful_total(5, Fruit::F), big("123"));
        assert_eq!(e.fruitful_total(10, Fruit::T), big("3881638"));
        assert_eq!(e.fruitful_total(1, Fruit::F), big("2"));
        assert_eq!(e.fruitful_total(1, Fruit::T), big("2"));
        assert_eq!(e.fruitful_total(0, Fruit::T), BigCount::zero());
    }

    #[test]
    fn triangle_terms() {
        let e = SeqEngine::new();
        assert_eq!(e.triangle_term(6, 2).unwrap(), big("57"));
        assert_eq!(e.triangle_term(5, 4).unwrap(), big("61"));
        for n in 2..20 {
            assert_eq!(e.triangle_term(n, 1).unwrap(), e.f_false(n - 1));
        }
        assert!(matches!(
            e.triangle_term(5, 0),
            Err(Error::SplitOutOfRange { .. })
        ));
        assert!(e.triangle_term(5, 5).is_err());
        assert!(e.triangle_term(1, 1).is_err());
    }

    #[test]
    fn triangle_rows() {
        let e = SeqEngine::new();
        let row = |n| -> Vec<u64> {
            e.triangle_row(n)
                .unwrap()
                .terms
                .iter()
                .map(|t| t.to_u64().unwrap())
                .collect()
        };
        assert_eq!(row(2), vec![1]);
        assert_eq!(row(4), vec![4, 3, 12]);
        assert_eq!(row(6), vec![104, 57, 48, 61, 344]);
        assert!(e.triangle_row(1).is_err());
        assert!(e.triangle_row(0).is_err());
    }

    #[test]
    fn tables() {
        let e = SeqEngine::new();
        let vals = |kind, from, to| -> Vec<u64> {
            e.table(kind, from, to)
                .unwrap()
                .into_iter()
                .map(|(_, v)| v.to_u64().unwrap())
                .collect()
        };
        assert_eq!(vals(SeqKind::A, 0, 4), vec![0, 1, 3, 5, 9]);
        assert_eq!(vals(SeqKind::AF, 0, 3), vec![0, 2, 4, 9]);
        assert_eq!(vals(SeqKind::C, 0, 0), vec![0]);
        assert_eq!(
            e.table(SeqKind::C, 3, 2),
            Err(Error::InvalidRange { from: 3, to: 2 })
        );
    }

    #[test]
    fn kind_tags_round_trip() {
        for kind in SeqKind::ALL {
            assert_eq!(kind.tag().parse::<SeqKind>().unwrap(), kind);
            assert_eq!(
                serde_json::to_string(&kind).unwrap(),
                format!("\"{}\"", kind.tag())
            );
        }
        assert_eq!("AF".parse::<SeqKind>().unwrap(), SeqKind::AF);
        assert!("x".parse::<SeqKind>().is_err());
    }

    #[test]
    fn engine_is_shareable_across_threads() {
        let e = SeqEngine::new();
        let expected = SeqEngine::new().f_false(60);
        std::thread::scope(|s| {
            for n in [60usize, 30, 45, 60] {
                let e = &e;
                s.spawn(move || e.f_false(n));
            }
        });
        assert_eq!(e.f_false(60), expected);
    }
}
