use thiserror::Error;

use crate::seqcore::SeqKind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index {n} is outside the domain of {what} (requires {requirement})")]
    Domain {
        what: &'static str,
        n: usize,
        requirement: &'static str,
    },

    #[error("split index {i} is outside 1..={max} for row n = {n}")]
    SplitOutOfRange { n: usize, i: usize, max: usize },

    #[error("invalid range: from ({from}) exceeds to ({to})")]
    InvalidRange { from: usize, to: usize },

    #[error("n = {n} exceeds the {mode} enumeration cap of {cap}")]
    CapExceeded {
        mode: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("series truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },

    #[error("division by a series with zero constant term")]
    ZeroConstantTerm,

    #[error("coefficient of x^{k} is not an integer: {value}")]
    NonIntegral { k: usize, value: String },

    #[error("fruit group {group} has {found} values but the sub-branch group has {expected}")]
    FruitShape {
        group: usize,
        expected: usize,
        found: usize,
    },

    #[error("sequence kind {0} is not supported by this operation")]
    UnsupportedKind(SeqKind),

    #[error("cannot parse {input:?} as {what}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
