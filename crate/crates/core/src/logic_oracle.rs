//! Brute-force census of bracketed implication chains.
//!
//! Every full parenthesization of `p1 -> p2 -> ... -> pn` is generated and
//! its truth table counted, either by evaluating all `2^n` assignments or by
//! the product rule `false(L -> R) = true(L) * false(R)`. Neither path uses
//! the sequence recurrences, so the census is an independent referee for
//! them.

use std::fmt;
use std::io;
use std::sync::Arc;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::bigcount::BigCount;
use crate::error::{Error, Result};

/// Largest `n` whose `2^n`-row truth tables will ever be enumerated.
pub const TRUTH_TABLE_HARD_CAP: usize = 20;
pub const DEFAULT_TRUTH_TABLE_CAP: usize = 10;
/// `C_14 = 742900` trees.
pub const DEFAULT_PRODUCT_CAP: usize = 14;
/// Raises both enumeration caps when set to a positive integer.
pub const MAX_N_ENV: &str = "CATALAN_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub truth_table: usize,
    pub product: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            truth_table: DEFAULT_TRUTH_TABLE_CAP,
            product: DEFAULT_PRODUCT_CAP,
        }
    }
}

impl Caps {
    /// Defaults, raised by `CATALAN_MAX_N` if it is set. The truth-table cap
    /// never exceeds [`TRUTH_TABLE_HARD_CAP`].
    pub fn from_env() -> Self {
        let raised = std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok());
        Caps::default().raised_to(raised)
    }

    pub fn raised_to(self, limit: Option<usize>) -> Self {
        match limit {
            Some(limit) => Caps {
                truth_table: self.truth_table.max(limit).min(TRUTH_TABLE_HARD_CAP),
                product: self.product.max(limit),
            },
            None => self,
        }
    }

    pub fn limit(&self, mode: CountMode) -> usize {
        match mode {
            CountMode::TruthTable => self.truth_table,
            CountMode::Product => self.product,
        }
    }

    fn check(&self, mode: CountMode, n: usize) -> Result<()> {
        let cap = self.limit(mode);
        if n > cap {
            return Err(Error::CapExceeded {
                mode: mode.name(),
                n,
                cap,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountMode {
    TruthTable,
    Product,
}

impl CountMode {
    pub fn name(self) -> &'static str {
        match self {
            CountMode::TruthTable => "truth_table",
            CountMode::Product => "product",
        }
    }
}

/// One bracketing of a contiguous stretch `p_lo .. p_hi` of the chain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ImplTree {
    /// Variable `p_i`, 1-based.
    Leaf(usize),
    Node {
        left: Arc<ImplTree>,
        right: Arc<ImplTree>,
    },
}

impl ImplTree {
    pub fn node(left: Arc<ImplTree>, right: Arc<ImplTree>) -> Self {
        ImplTree::Node { left, right }
    }

    pub fn first_var(&self) -> usize {
        match self {
            ImplTree::Leaf(v) => *v,
            ImplTree::Node { left, .. } => left.first_var(),
        }
    }

    pub fn last_var(&self) -> usize {
        match self {
            ImplTree::Leaf(v) => *v,
            ImplTree::Node { right, .. } => right.last_var(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.last_var() + 1 - self.first_var()
    }

    /// Number of variables left of the outermost implication; 0 for a leaf.
    pub fn root_split(&self) -> usize {
        match self {
            ImplTree::Leaf(_) => 0,
            ImplTree::Node { left, .. } => left.num_vars(),
        }
    }

    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            ImplTree::Leaf(v) => out.push(*v),
            ImplTree::Node { left, right } => {
                left.collect_leaves(out);
                right.collect_leaves(out);
            }
        }
    }

    /// Evaluates under the assignment `row` over the span `first..=last`,
    /// with `p_first` as the most significant bit.
    fn eval(&self, row: u64, last: usize) -> bool {
        match self {
            ImplTree::Leaf(v) => (row >> (last - v)) & 1 == 1,
            ImplTree::Node { left, right } => !left.eval(row, last) || right.eval(row, last),
        }
    }
}

impl fmt::Display for ImplTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn side(t: &ImplTree, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match t {
                ImplTree::Leaf(_) => write!(f, "{t}"),
                ImplTree::Node { .. } => write!(f, "({t})"),
            }
        }
        match self {
            ImplTree::Leaf(v) => write!(f, "p{v}"),
            ImplTree::Node { left, right } => {
                side(left, f)?;
                f.write_str("->")?;
                side(right, f)
            }
        }
    }
}

impl Serialize for ImplTree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

type TreeList = Arc<Vec<Arc<ImplTree>>>;

/// All bracketings of every proper sub-span of `1..=n`, indexed
/// `[first variable][span length]`.
struct SpanTrees {
    lists: Vec<Vec<TreeList>>,
}

impl SpanTrees {
    fn build(n: usize) -> Self {
        let mut lists: Vec<Vec<TreeList>> = vec![vec![Arc::new(Vec::new()); n + 1]; n + 2];
        for len in 1..n.max(1) {
            for lo in 1..=n + 1 - len {
                let trees = if len == 1 {
                    vec![Arc::new(ImplTree::Leaf(lo))]
                } else {
                    let mut trees = Vec::new();
                    for i in 1..len {
                        let left = &lists[lo][i];
                        let right = &lists[lo + i][len - i];
                        for l in left.iter() {
                            for r in right.iter() {
                                trees.push(Arc::new(ImplTree::node(l.clone(), r.clone())));
                            }
                        }
                    }
                    trees
                };
                lists[lo][len] = Arc::new(trees);
            }
        }
        SpanTrees { lists }
    }

    fn get(&self, lo: usize, len: usize) -> TreeList {
        self.lists[lo][len].clone()
    }
}

/// Every bracketing of `p1 -> ... -> pn`, in canonical order: root split `i`
/// ascending, then left subtree, with the right subtree varying fastest.
///
/// Sub-spans are materialized once and shared; the top level is streamed.
pub fn enumerate_trees(n: usize, caps: &Caps) -> Result<impl Iterator<Item = ImplTree>> {
    if n == 0 {
        return Err(Error::Domain {
            what: "enumerate_trees",
            n,
            requirement: "n >= 1",
        });
    }
    caps.check(CountMode::Product, n)?;
    let spans = Arc::new(SpanTrees::build(n));
    let single = (n == 1).then_some(ImplTree::Leaf(1));
    let splits = (1..n).flat_map(move |i| {
        let left = spans.get(1, i);
        let right = spans.get(i + 1, n - i);
        (0..left.len()).flat_map(move |a| {
            let l = left[a].clone();
            let right = right.clone();
            (0..right.len()).map(move |b| ImplTree::node(l.clone(), right[b].clone()))
        })
    });
    Ok(single.into_iter().chain(splits))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeCount {
    pub tree: ImplTree,
    pub false_rows: BigCount,
    pub true_rows: BigCount,
}

/// Counts false and true rows by evaluating all `2^n` assignments.
pub fn truth_table_counts(tree: &ImplTree, caps: &Caps) -> Result<TreeCount> {
    let n = tree.num_vars();
    caps.check(CountMode::TruthTable, n)?;
    let last = tree.last_var();
    let rows = 1u64 << n;
    let falses = (0..rows).filter(|&row| !tree.eval(row, last)).count() as u64;
    Ok(TreeCount {
        tree: tree.clone(),
        false_rows: BigCount::from(falses),
        true_rows: BigCount::from(rows - falses),
    })
}

/// Counts false and true rows by the product rule; polynomial in tree size.
pub fn product_counts(tree: &ImplTree) -> TreeCount {
    let (falses, n) = product_false_rows(tree);
    let total = BigUint::from(1u8) << n;
    TreeCount {
        tree: tree.clone(),
        true_rows: BigCount::from(total - &falses),
        false_rows: BigCount::from(falses),
    }
}

/// `(false rows, variable count)`.
fn product_false_rows(tree: &ImplTree) -> (BigUint, usize) {
    match tree {
        ImplTree::Leaf(_) => (BigUint::from(1u8), 1),
        ImplTree::Node { left, right } => {
            let (left_false, left_n) = product_false_rows(left);
            let (right_false, right_n) = product_false_rows(right);
            let left_true = (BigUint::from(1u8) << left_n) - left_false;
            (left_true * right_false, left_n + right_n)
        }
    }
}

/// Trees whose root splits after variable `split`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitGroup {
    pub split: usize,
    pub trees: Vec<TreeCount>,
}

impl SplitGroup {
    pub fn false_sum(&self) -> BigCount {
        self.trees.iter().map(|t| &t.false_rows).sum()
    }

    pub fn true_sum(&self) -> BigCount {
        self.trees.iter().map(|t| &t.true_rows).sum()
    }

    /// False-row counts sorted ascending.
    pub fn false_multiset(&self) -> Vec<BigCount> {
        let mut v: Vec<BigCount> = self.trees.iter().map(|t| t.false_rows.clone()).collect();
        v.sort();
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusTotals {
    pub f: BigCount,
    pub t: BigCount,
    pub g: BigCount,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub n: usize,
    pub mode: CountMode,
    /// One group per split `i = 1..n-1`; a single group with split 0 for `n = 1`.
    pub groups: Vec<SplitGroup>,
    pub totals: CensusTotals,
}

impl Census {
    /// Trees in canonical order.
    pub fn trees(&self) -> impl Iterator<Item = &TreeCount> {
        self.groups.iter().flat_map(|g| g.trees.iter())
    }

    pub fn tree_count(&self) -> usize {
        self.groups.iter().map(|g| g.trees.len()).sum()
    }

    /// CSV with header `n,split_i,tree_index,false_rows,true_rows`;
    /// `tree_index` is the 0-based position in canonical order.
    pub fn write_csv<W: io::Write>(&self, writer: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(["n", "split_i", "tree_index", "false_rows", "true_rows"])?;
        let mut index = 0usize;
        for group in &self.groups {
            for tree in &group.trees {
                w.write_record([
                    self.n.to_string(),
                    group.split.to_string(),
                    index.to_string(),
                    tree.false_rows.to_string(),
                    tree.true_rows.to_string(),
                ])?;
                index += 1;
            }
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }
}

/// Enumerates every tree on `n` variables, counts its rows in `mode`, and
/// groups the counts by root split.
pub fn census(n: usize, mode: CountMode, caps: &Caps) -> Result<Census> {
    caps.check(mode, n)?;
    let group_count = n.saturating_sub(1).max(1);
    let mut groups: Vec<SplitGroup> = (0..group_count)
        .map(|g| SplitGroup {
            split: if n == 1 { 0 } else { g + 1 },
            trees: Vec::new(),
        })
        .collect();
    for tree in enumerate_trees(n, caps)? {
        let count = match mode {
            CountMode::TruthTable => truth_table_counts(&tree, caps)?,
            CountMode::Product => product_counts(&tree),
        };
        let slot = tree.root_split().saturating_sub(1);
        groups[slot].trees.push(count);
    }
    let f: BigCount = groups.iter().map(SplitGroup::false_sum).sum();
    let t: BigCount = groups.iter().map(SplitGroup::true_sum).sum();
    let g = f.clone() + &t;
    Ok(Census {
        n,
        mode,
        groups,
        totals: CensusTotals { f, t, g },
    })
}
