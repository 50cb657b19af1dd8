//! Exact Catalan-derived sequences and the machinery that cross-checks them.
//!
//! - [`seqcore`]: memoized big-integer sequences (`C`, `g`, `f`, `t`, `a`,
//!   fruitful totals) and the triangle of summands of `f_n`.
//! - [`parity`]: parity predictions and a mod-2 engine.
//! - [`series`]: exact truncated power series and the closed form for the
//!   Catalan-tree component counts.
//! - [`logic_oracle`]: brute-force census of bracketed implication chains.
//! - [`tree_model`]: Catalan trees and fruitful trees, symbolic and DOT output.
//! - [`asymptotics`]: floating-point estimates and growth diagnostics.
//! - [`verify`]: the verification suites.

pub mod asymptotics;
pub mod bigcount;
pub mod error;
pub mod logic_oracle;
pub mod parity;
pub mod seqcore;
pub mod series;
pub mod tree_model;
pub mod verify;

pub use bigcount::BigCount;
pub use error::{Error, Result};
pub use seqcore::{Fruit, SeqEngine, SeqKind, TriangleRow};
