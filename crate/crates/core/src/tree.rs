//! Iterating the core/quotient map gives a labelled binary tree: each node
//! stores a core index and, unless its quotient is empty, has the trees of
//! `μ` and `ν` as ordered children.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abacus::{combine, two_quotient, CoreQuotient};
use crate::error::{AbacusError, Result};
use crate::partition::Partition;

/// JSON shape: `{"label": m}` for a leaf, `{"label": m, "children": [l, r]}` otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuotientTree {
    pub label: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub children: Option<Box<[QuotientTree; 2]>>,
}

impl QuotientTree {
    pub fn leaf(label: usize) -> Self {
        Self { label, children: None }
    }

    pub fn node(label: usize, left: QuotientTree, right: QuotientTree) -> Self {
        Self { label, children: Some(Box::new([left, right])) }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_none()
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.as_ref().map_or(0, |c| c[0].node_count() + c[1].node_count())
    }

    pub fn depth(&self) -> usize {
        self.children.as_ref().map_or(0, |c| 1 + c[0].depth().max(c[1].depth()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tree serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| AbacusError::MalformedInput(format!("tree JSON: {e}")))
    }
}

impl fmt::Display for QuotientTree {
    /// Bracket notation, e.g. `[2 -> [0 -> 0, 1], 2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.children {
            None => write!(f, "{}", self.label),
            Some(c) => write!(f, "[{} -> {}, {}]", self.label, c[0], c[1]),
        }
    }
}

pub fn tree_encode(lambda: &Partition) -> QuotientTree {
    let cq = two_quotient(lambda);
    if cq.has_empty_quotient() {
        QuotientTree::leaf(cq.core_index)
    } else {
        QuotientTree::node(cq.core_index, tree_encode(&cq.mu), tree_encode(&cq.nu))
    }
}

pub fn tree_decode(tree: &QuotientTree) -> Result<Partition> {
    match &tree.children {
        None => Ok(Partition::staircase(tree.label)),
        Some(children) => {
            let mu = tree_decode(&children[0])?;
            let nu = tree_decode(&children[1])?;
            if mu.is_empty() && nu.is_empty() {
                return Err(AbacusError::InvalidTree(format!(
                    "node labelled {} has two children labelled 0",
                    tree.label
                )));
            }
            Ok(combine(&CoreQuotient::new(tree.label, mu, nu)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn worked_example() -> QuotientTree {
        QuotientTree::node(
            2,
            QuotientTree::node(0, QuotientTree::leaf(0), QuotientTree::leaf(1)),
            QuotientTree::leaf(2),
        )
    }

    #[test]
    fn encode_examples() {
        let t = tree_encode(&p(&[6, 3, 3, 1]));
        assert_eq!(t, worked_example());
        assert_eq!(t.to_string(), "[2 -> [0 -> 0, 1], 2]");
        assert_eq!(tree_encode(&Partition::empty()), QuotientTree::leaf(0));
        assert_eq!(tree_encode(&p(&[2, 1])), QuotientTree::leaf(2));
    }

    #[test]
    fn decode_examples() {
        assert_eq!(tree_decode(&worked_example()).unwrap(), p(&[6, 3, 3, 1]));
        assert_eq!(tree_decode(&QuotientTree::leaf(4)).unwrap(), p(&[4, 3, 2, 1]));
        let bad = QuotientTree::node(0, QuotientTree::leaf(0), QuotientTree::leaf(0));
        assert!(matches!(tree_decode(&bad), Err(AbacusError::InvalidTree(_))));
        let nested_bad = QuotientTree::node(1, QuotientTree::leaf(2), bad);
        assert!(matches!(tree_decode(&nested_bad), Err(AbacusError::InvalidTree(_))));
    }

    #[test]
    fn json_shape() {
        let json = worked_example().to_json();
        assert_eq!(json, r#"{"label":2,"children":[{"label":0,"children":[{"label":0},{"label":1}]},{"label":2}]}"#);
        assert_eq!(QuotientTree::from_json(&json).unwrap(), worked_example());
        assert!(QuotientTree::from_json(r#"{"label":1,"children":[{"label":0}]}"#).is_err());
        assert!(QuotientTree::from_json(r#"{"label":-1}"#).is_err());
        assert!(QuotientTree::from_json("not json").is_err());
    }

    #[test]
    fn shape_metrics() {
        let t = worked_example();
        assert_eq!(t.node_count(), 5);
        assert_eq!(t.depth(), 2);
    }
}
