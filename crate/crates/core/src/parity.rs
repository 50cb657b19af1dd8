//! Parity predictions for every sequence and a mod-2 engine that checks them.
//!
//! The predictions, for `n >= 1`:
//!
//! | kind        | odd iff                     |
//! |-------------|-----------------------------|
//! | `c, f, t`   | `n = 1` or `n = 2^i, i >= 1` |
//! | `a`         | `n` odd or `n = 2^i`         |
//! | `g`         | never                       |
//! | `af, at`    | `n` odd (`n >= 2` only)      |
//!
//! The fruitful totals are excluded at `n = 1`: the tabulated value there is 2,
//! which is even although 1 is odd.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seqcore::{SeqEngine, SeqKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Self {
        if bit & 1 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    fn from_bool(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityVerdict {
    pub n: usize,
    pub kind: SeqKind,
    pub observed: Parity,
    pub predicted: Parity,
    pub agrees: bool,
}

/// `n = 2^i` for some `i >= 1`. In particular 1 is not a power of two here.
pub fn is_power_of_two(n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::Domain {
            what: "is_power_of_two",
            n,
            requirement: "n >= 1",
        });
    }
    Ok(n > 1 && n.is_power_of_two())
}

/// The parity each theorem predicts for `kind` at index `n`.
pub fn predicted_parity(kind: SeqKind, n: usize) -> Result<Parity> {
    let pow2 = is_power_of_two(n)?;
    let odd_n = n % 2 == 1;
    let odd = match kind {
        SeqKind::C | SeqKind::F | SeqKind::T => n == 1 || pow2,
        SeqKind::A => odd_n || pow2,
        SeqKind::G => false,
        SeqKind::AF | SeqKind::AT => {
            if n < 2 {
                return Err(Error::Domain {
                    what: "fruitful-total parity prediction",
                    n,
                    requirement: "n >= 2",
                });
            }
            odd_n
        }
    };
    Ok(Parity::from_bool(odd))
}

/// Residues mod 2 of every sequence for `n = 0..=max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mod2Table {
    pub max_n: usize,
    pub c: Vec<u8>,
    pub g: Vec<u8>,
    pub f: Vec<u8>,
    pub t: Vec<u8>,
    pub a: Vec<u8>,
    pub af: Vec<u8>,
    pub at: Vec<u8>,
}

impl Mod2Table {
    pub fn bits(&self, kind: SeqKind) -> &[u8] {
        match kind {
            SeqKind::C => &self.c,
            SeqKind::G => &self.g,
            SeqKind::F => &self.f,
            SeqKind::T => &self.t,
            SeqKind::A => &self.a,
            SeqKind::AF => &self.af,
            SeqKind::AT => &self.at,
        }
    }

    pub fn parity(&self, kind: SeqKind, n: usize) -> Parity {
        Parity::from_bit(self.bits(kind)[n])
    }
}

/// Runs the Catalan and false-row recurrences in arithmetic mod 2.
///
/// Every product is an AND and every sum or difference an XOR, so the cost is
/// `O(max_n^2)` bit operations and no big integers are involved.
pub fn mod2_engine(max_n: usize) -> Result<Mod2Table> {
    if max_n == 0 {
        return Err(Error::Domain {
            what: "mod2_engine",
            n: max_n,
            requirement: "max_n >= 1",
        });
    }
    let len = max_n + 1;
    let two_pow_mod2 = |i: usize| u8::from(i == 0);
    let n_mod2 = |n: usize| (n & 1) as u8;

    let mut c = vec![0u8; len];
    c[1] = 1;
    for n in 2..len {
        c[n] = (1..n).fold(0, |acc, i| acc ^ (c[i] & c[n - i]));
    }

    let mut g = vec![0u8; len];
    let mut f = vec![0u8; len];
    let mut t = vec![0u8; len];
    for n in 1..len {
        g[n] = two_pow_mod2(n) & c[n];
        f[n] = if n == 1 {
            1
        } else {
            (1..n).fold(0, |acc, i| acc ^ (t[i] & f[n - i]))
        };
        // 2^n C_n - f_n
        t[n] = g[n] ^ f[n];
    }

    let mut a = vec![0u8; len];
    let mut af = vec![0u8; len];
    let mut at = vec![0u8; len];
    a[1] = 1;
    // a_1(.) is tabulated as 2.
    for n in 2..len {
        a[n] = c[n] ^ n_mod2(n);
        af[n] = f[n] ^ a[n];
        at[n] = t[n] ^ a[n];
    }

    Ok(Mod2Table {
        max_n,
        c,
        g,
        f,
        t,
        a,
        af,
        at,
    })
}

/// First index at which `kind` has a parity prediction.
pub fn first_checked_index(kind: SeqKind) -> usize {
    match kind {
        SeqKind::AF | SeqKind::AT => 2,
        _ => 1,
    }
}

/// Compares predictions against the mod-2 engine for every valid `n <= max_n`.
pub fn verify_parity(kind: SeqKind, max_n: usize) -> Result<Vec<ParityVerdict>> {
    let table = mod2_engine(max_n)?;
    verify_against(&table, kind)
}

/// Like [`verify_parity`] but reuses an existing table.
pub fn verify_against(table: &Mod2Table, kind: SeqKind) -> Result<Vec<ParityVerdict>> {
    (first_checked_index(kind)..=table.max_n)
        .map(|n| {
            let observed = table.parity(kind, n);
            let predicted = predicted_parity(kind, n)?;
            Ok(ParityVerdict {
                n,
                kind,
                observed,
                predicted,
                agrees: observed == predicted,
            })
        })
        .collect()
}

/// Indices `n <= max_n` where the mod-2 table disagrees with the full
/// big-integer value of `kind`.
pub fn residue_mismatches(table: &Mod2Table, engine: &SeqEngine, kind: SeqKind, max_n: usize) -> Vec<usize> {
    let upto = max_n.min(table.max_n);
    (0..=upto)
        .filter(|&n| u8::from(engine.value(kind, n).is_odd()) != table.bits(kind)[n])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_of_two_excludes_one() {
        assert!(is_power_of_two(8).unwrap());
        assert!(!is_power_of_two(1).unwrap());
        assert!(!is_power_of_two(6).unwrap());
        assert!(is_power_of_two(2).unwrap());
        assert!(is_power_of_two(0).is_err());
    }

    #[test]
    fn predictions() {
        assert_eq!(predicted_parity(SeqKind::C, 8).unwrap(), Parity::Odd);
        assert_eq!(predicted_parity(SeqKind::C, 1).unwrap(), Parity::Odd);
        assert_eq!(predicted_parity(SeqKind::F, 3).unwrap(), Parity::Even);
        assert_eq!(predicted_parity(SeqKind::AF, 7).unwrap(), Parity::Odd);
        assert_eq!(predicted_parity(SeqKind::A, 6).unwrap(), Parity::Even);
        assert_eq!(predicted_parity(SeqKind::A, 8).unwrap(), Parity::Odd);
        assert_eq!(predicted_parity(SeqKind::G, 1).unwrap(), Parity::Even);
        assert!(predicted_parity(SeqKind::AF, 1).is_err());
        assert!(predicted_parity(SeqKind::AT, 1).is_err());
        assert!(predicted_parity(SeqKind::C, 0).is_err());
    }

    #[test]
    fn engine_small_tables() {
        let t = mod2_engine(10).unwrap();
        assert_eq!(&t.f[1..], &[1, 1, 0, 1, 0, 0, 0, 1, 0, 0]);
        let t = mod2_engine(4).unwrap();
        assert_eq!(&t.c[1..], &[1, 1, 0, 1]);
        let t = mod2_engine(2).unwrap();
        assert_eq!(&t.a[1..], &[1, 1]);
        assert!(mod2_engine(0).is_err());
    }

    #[test]
    fn f_verdicts_to_eight() {
        let v = verify_parity(SeqKind::F, 8).unwrap();
        assert_eq!(v.len(), 8);
        assert!(v.iter().all(|v| v.agrees));
        let odd: Vec<usize> = v
            .iter()
            .filter(|v| v.observed == Parity::Odd)
            .map(|v| v.n)
            .collect();
        assert_eq!(odd, vec![1, 2, 4, 8]);
    }

    #[test]
    fn g_always_even() {
        let v = verify_parity(SeqKind::G, 100).unwrap();
        assert_eq!(v.len(), 100);
        assert!(v.iter().all(|v| v.agrees && v.observed == Parity::Even));
    }

    #[test]
    fn at_odd_at_odd_indices() {
        let v = verify_parity(SeqKind::AT, 10).unwrap();
        assert_eq!(v.first().unwrap().n, 2);
        let odd: Vec<usize> = v
            .iter()
            .filter(|v| v.observed == Parity::Odd)
            .map(|v| v.n)
            .collect();
        assert_eq!(odd, vec![3, 5, 7, 9]);
        assert!(v.iter().all(|v| v.agrees));
    }

    #[test]
    fn residues_match_full_values() {
        let table = mod2_engine(64).unwrap();
        let engine = SeqEngine::new();
        for kind in SeqKind::ALL {
            assert!(residue_mismatches(&table, &engine, kind, 64).is_empty(), "{kind}");
        }
    }
}
