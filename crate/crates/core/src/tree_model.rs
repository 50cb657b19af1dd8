//! Catalan trees and fruitful trees as explicit objects.
//!
//! The Catalan tree `A_n` has one root, `n - 1` main branches, and `C_n`
//! sub-branches; main branch `i` carries `C_i * C_{n-i}` of them. A fruitful
//! tree hangs a fruit value on every sub-branch. For the `f` and `t` fruit
//! sequences the value on a sub-branch is the false (or true) row count of
//! the matching bracketing, taken from the oracle census in canonical order.

use std::fmt::Write as _;

use serde::Serialize;

use crate::bigcount::BigCount;
use crate::error::{Error, Result};
use crate::logic_oracle::{census, Caps, CountMode};
use crate::seqcore::{Fruit, SeqEngine};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalanTreeShape {
    pub n: usize,
    pub main_branches: usize,
    /// `C_i * C_{n-i}` for `i = 1..n-1`.
    pub sub_branch_group_sizes: Vec<BigCount>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FruitKind {
    F,
    T,
    Custom,
}

impl From<Fruit> for FruitKind {
    fn from(f: Fruit) -> Self {
        match f {
            Fruit::F => FruitKind::F,
            Fruit::T => FruitKind::T,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FruitfulTree {
    pub shape: CatalanTreeShape,
    pub fruit_kind: FruitKind,
    /// One value per sub-branch, grouped by main branch.
    pub fruit_groups: Vec<Vec<BigCount>>,
}

pub fn build_shape(n: usize, engine: &SeqEngine) -> Result<CatalanTreeShape> {
    if n == 0 {
        return Err(Error::Domain {
            what: "build_shape",
            n,
            requirement: "n >= 1",
        });
    }
    let sub_branch_group_sizes = (1..n)
        .map(|i| &engine.catalan(i) * &engine.catalan(n - i))
        .collect();
    Ok(CatalanTreeShape {
        n,
        main_branches: n - 1,
        sub_branch_group_sizes,
    })
}

impl CatalanTreeShape {
    pub fn sub_branch_total(&self) -> BigCount {
        self.sub_branch_group_sizes.iter().sum()
    }

    /// Root plus main branches plus sub-branches.
    pub fn component_count(&self) -> BigCount {
        BigCount::from(1 + self.main_branches) + &self.sub_branch_total()
    }

    fn group_len(&self, i: usize) -> usize {
        self.sub_branch_group_sizes[i]
            .to_u64()
            .and_then(|v| usize::try_from(v).ok())
            .expect("sub-branch group too large to materialize")
    }

    /// Rows from the top: sub-branch partition, main branches, root.
    fn shape_rows(&self) -> Vec<String> {
        let mut rows = Vec::new();
        if self.n > 1 {
            rows.push(paren_list(self.sub_branch_group_sizes.iter()));
            rows.push(paren_list(std::iter::repeat_n("1", self.main_branches)));
        }
        rows.push("(1)".to_owned());
        rows
    }

    /// Four-row notation without fruit: partition, main branches, root.
    pub fn symbolic_repr(&self) -> String {
        self.shape_rows().join("\n")
    }

    pub fn to_dot(&self) -> String {
        dot(self, None)
    }
}

pub fn component_count(shape: &CatalanTreeShape) -> BigCount {
    shape.component_count()
}

/// Attaches the `f` or `t` fruit to every sub-branch.
///
/// Fruits come from a product-mode census, so `n` is limited by the
/// product cap.
pub fn decorate(shape: &CatalanTreeShape, fruit: Fruit, caps: &Caps) -> Result<FruitfulTree> {
    let fruit_groups = if shape.n == 1 {
        Vec::new()
    } else {
        let census = census(shape.n, CountMode::Product, caps)?;
        census
            .groups
            .into_iter()
            .map(|g| {
                g.trees
                    .into_iter()
                    .map(|tc| match fruit {
                        Fruit::F => tc.false_rows,
                        Fruit::T => tc.true_rows,
                    })
                    .collect()
            })
            .collect()
    };
    Ok(FruitfulTree {
        shape: shape.clone(),
        fruit_kind: fruit.into(),
        fruit_groups,
    })
}

/// Attaches caller-supplied fruit; each group must match its sub-branch count.
pub fn decorate_custom(shape: &CatalanTreeShape, fruit_groups: Vec<Vec<BigCount>>) -> Result<FruitfulTree> {
    if fruit_groups.len() != shape.sub_branch_group_sizes.len() {
        return Err(Error::FruitShape {
            group: fruit_groups.len(),
            expected: shape.sub_branch_group_sizes.len(),
            found: fruit_groups.len(),
        });
    }
    for (i, group) in fruit_groups.iter().enumerate() {
        let expected = shape.group_len(i);
        if group.len() != expected {
            return Err(Error::FruitShape {
                group: i + 1,
                expected,
                found: group.len(),
            });
        }
    }
    Ok(FruitfulTree {
        shape: shape.clone(),
        fruit_kind: FruitKind::Custom,
        fruit_groups,
    })
}

impl FruitfulTree {
    pub fn group_sums(&self) -> Vec<BigCount> {
        self.fruit_groups.iter().map(|g| g.iter().sum()).collect()
    }

    /// Sum of all fruit values.
    pub fn total_fruit(&self) -> BigCount {
        self.fruit_groups.iter().flatten().sum()
    }

    /// Shape components plus every fruit.
    pub fn component_count(&self) -> BigCount {
        self.shape.component_count() + &self.total_fruit()
    }

    pub fn symbolic_repr(&self) -> String {
        let mut rows = Vec::new();
        if !self.fruit_groups.is_empty() {
            let groups: Vec<String> = self.fruit_groups.iter().map(|g| paren_list(g.iter())).collect();
            rows.push(format!("({})", groups.join(",")));
        }
        rows.extend(self.shape.shape_rows());
        rows.join("\n")
    }

    pub fn to_dot(&self) -> String {
        dot(&self.shape, Some(&self.fruit_groups))
    }
}

fn paren_list<T: ToString>(items: impl Iterator<Item = T>) -> String {
    let parts: Vec<String> = items.map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Node names: `root`, `m<i>`, `s<i>_<j>`, `fruit<i>_<j>`. Fruit nodes are
/// labelled with their value, so shape nodes plus the sum of fruit labels
/// equals the fruitful component count.
fn dot(shape: &CatalanTreeShape, fruit: Option<&Vec<Vec<BigCount>>>) -> String {
    let mut out = String::new();
    let name = match fruit {
        Some(_) => "fruitful_catalan_tree",
        None => "catalan_tree",
    };
    let _ = writeln!(out, "digraph {name} {{");
    let _ = writeln!(out, "  graph [label=\"A_{}\"];", shape.n);
    let _ = writeln!(out, "  root [label=\"1\"];");
    for i in 1..=shape.main_branches {
        let size = &shape.sub_branch_group_sizes[i - 1];
        let _ = writeln!(out, "  m{i} [label=\"C{i}*C{}={size}\"];", shape.n - i);
        let _ = writeln!(out, "  root -> m{i};");
        for j in 1..=shape.group_len(i - 1) {
            let _ = writeln!(out, "  s{i}_{j} [shape=point];");
            let _ = writeln!(out, "  m{i} -> s{i}_{j};");
            if let Some(value) = fruit.and_then(|groups| groups.get(i - 1)).and_then(|g| g.get(j - 1)) {
                let _ = writeln!(out, "  fruit{i}_{j} [shape=box, label=\"{value}\"];");
                let _ = writeln!(out, "  s{i}_{j} -> fruit{i}_{j};");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nums(v: &[BigCount]) -> Vec<u64> {
        v.iter().map(|x| x.to_u64().unwrap()).collect()
    }

    #[test]
    fn shapes() {
        let e = SeqEngine::new();
        assert_eq!(nums(&build_shape(4, &e).unwrap().sub_branch_group_sizes), vec![2, 1, 2]);
        assert_eq!(nums(&build_shape(5, &e).unwrap().sub_branch_group_sizes), vec![5, 2, 2, 5]);
        let one = build_shape(1, &e).unwrap();
        assert_eq!(one.main_branches, 0);
        assert_eq!(one.component_count().to_u64(), Some(1));
        assert!(build_shape(0, &e).is_err());
    }

    #[test]
    fn component_counts() {
        let e = SeqEngine::new();
        for (n, a) in [(4, 9), (2, 3), (9, 1439)] {
            assert_eq!(component_count(&build_shape(n, &e).unwrap()).to_u64(), Some(a));
        }
    }

    #[test]
    fn decorate_five() {
        let e = SeqEngine::new();
        let shape = build_shape(5, &e).unwrap();
        let f = decorate(&shape, Fruit::F, &Caps::default()).unwrap();
        assert_eq!(nums(&f.group_sums()), vec![19, 12, 12, 61]);
        assert_eq!(f.total_fruit().to_u64(), Some(104));
        assert_eq!(f.component_count().to_u64(), Some(123));
        let t = decorate(&shape, Fruit::T, &Caps::default()).unwrap();
        assert_eq!(t.total_fruit().to_u64(), Some(344));
        assert_eq!(t.component_count().to_u64(), Some(363));
    }

    #[test]
    fn decorate_two_and_one() {
        let e = SeqEngine::new();
        let two = decorate(&build_shape(2, &e).unwrap(), Fruit::F, &Caps::default()).unwrap();
        assert_eq!(two.fruit_groups, vec![vec![BigCount::from(1u64)]]);
        let one = decorate(&build_shape(1, &e).unwrap(), Fruit::F, &Caps::default()).unwrap();
        assert!(one.fruit_groups.is_empty());
        assert_eq!(one.symbolic_repr(), "(1)");
    }

    #[test]
    fn decorate_respects_cap() {
        let e = SeqEngine::new();
        let caps = Caps {
            truth_table: 10,
            product: 4,
        };
        assert!(matches!(
            decorate(&build_shape(5, &e).unwrap(), Fruit::F, &caps),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn custom_fruit() {
        let e = SeqEngine::new();
        let shape = build_shape(3, &e).unwrap();
        let one = BigCount::from(1u64);
        let tree = decorate_custom(&shape, vec![vec![one.clone()], vec![one.clone()]]).unwrap();
        assert_eq!(tree.fruit_kind, FruitKind::Custom);
        assert_eq!(tree.component_count().to_u64(), Some(7));
        assert!(matches!(
            decorate_custom(&shape, vec![vec![one.clone(), one.clone()], vec![one.clone()]]),
            Err(Error::FruitShape { group: 1, expected: 1, found: 2 })
        ));
        assert!(decorate_custom(&shape, vec![vec![one]]).is_err());
    }

    #[test]
    fn symbolic_rows() {
        let e = SeqEngine::new();
        assert_eq!(build_shape(4, &e).unwrap().symbolic_repr(), "(2,1,2)\n(1,1,1)\n(1)");
        assert_eq!(build_shape(1, &e).unwrap().symbolic_repr(), "(1)");
        let f = decorate(&build_shape(5, &e).unwrap(), Fruit::F, &Caps::default()).unwrap();
        // Canonical enumeration order; group 1 as a multiset is {1,3,3,5,7}.
        assert_eq!(
            f.symbolic_repr(),
            "((1,3,3,7,5),(3,9),(7,5),(15,13,13,9,11))\n(5,2,2,5)\n(1,1,1,1)\n(1)"
        );
    }

    #[test]
    fn dot_single_node() {
        let e = SeqEngine::new();
        let dot = build_shape(1, &e).unwrap().to_dot();
        assert!(dot.contains("root [label=\"1\"];"));
        assert!(!dot.contains("->"));
    }
}
