//! Exhaustive generation of all non-isomorphic trees of a given order, plus
//! an independent labeled-tree oracle via Prüfer decoding.

use crate::canon::{canonical_code, centroids, CanonicalCode};
use crate::error::ParamError;
use crate::graph::Graph;
use crate::invariants::profile;

/// Largest order accepted by [`free_trees`].
pub const MAX_FREE_TREE_ORDER: usize = 18;

/// Largest order accepted by [`labeled_trees_prufer`] (`n^(n-2)` growth).
pub const MAX_PRUFER_ORDER: usize = 9;

/// Canonical level sequences of rooted trees, in the classic successor
/// order: start from the path `[1, 2, ..., n]`, repeatedly shallow the last
/// vertex deeper than level 2 and recopy the pattern of its parent's block.
struct LevelSequences {
    current: Option<Vec<u8>>,
}

impl LevelSequences {
    fn new(n: usize) -> Self {
        LevelSequences {
            current: Some((1..=n as u8).collect()),
        }
    }
}

impl Iterator for LevelSequences {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        let out = self.current.take()?;
        let levels = &out;
        if let Some(p) = levels.iter().rposition(|&l| l > 2) {
            let q = levels[..p].iter().rposition(|&l| l == levels[p] - 1).unwrap();
            let mut next = levels.clone();
            for i in p..next.len() {
                next[i] = next[i - (p - q)];
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Vertex 0 is the root; the parent of vertex `i` is the most recent vertex
/// one level shallower.
fn graph_from_levels(levels: &[u8]) -> Graph {
    let n = levels.len();
    let mut last_at_level = vec![usize::MAX; n + 2];
    last_at_level[1] = 0;
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for (i, &l) in levels.iter().enumerate().skip(1) {
        edges.push((last_at_level[l as usize - 1], i));
        last_at_level[l as usize] = i;
    }
    Graph::from_edges(n, edges).expect("level sequence describes a tree")
}

/// A deterministic stream of trees, one per isomorphism class, in ascending
/// canonical-code order.
#[derive(Debug)]
pub struct TreeStream {
    trees: std::vec::IntoIter<Graph>,
}

impl Iterator for TreeStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.trees.next()
    }
}

impl ExactSizeIterator for TreeStream {
    fn len(&self) -> usize {
        self.trees.len()
    }
}

/// Every non-isomorphic tree on `n` vertices exactly once.
///
/// Rooted trees are generated by canonical level sequences; candidates whose
/// root is not a centroid are dropped, the rest are keyed by free canonical
/// code, sorted and deduplicated (a two-centroid tree can surface twice).
pub fn free_trees(n: usize) -> Result<TreeStream, ParamError> {
    if !(1..=MAX_FREE_TREE_ORDER).contains(&n) {
        return Err(ParamError::new(
            "free_trees",
            format!("requires 1 <= n <= {MAX_FREE_TREE_ORDER}, got n={n}"),
        ));
    }
    let mut keyed: Vec<(CanonicalCode, Graph)> = Vec::new();
    for levels in LevelSequences::new(n) {
        let g = graph_from_levels(&levels);
        if !centroids(&g).expect("generated graphs are trees").contains(&0) {
            continue;
        }
        let code = canonical_code(&g).unwrap();
        keyed.push((code, g));
    }
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    Ok(TreeStream {
        trees: keyed
            .into_iter()
            .map(|(_, g)| g)
            .collect::<Vec<_>>()
            .into_iter(),
    })
}

/// The subset of [`free_trees`] whose profile matches the given diameter
/// and/or peripheral-vertex count. Unsatisfiable filters yield an empty
/// stream, not an error.
pub fn free_trees_filtered(
    n: usize,
    diameter: Option<usize>,
    peripheral: Option<usize>,
) -> Result<TreeStream, ParamError> {
    let trees: Vec<Graph> = free_trees(n)?
        .filter(|t| {
            let p = profile(t).expect("trees are connected");
            diameter.is_none_or(|d| p.diameter as usize == d)
                && peripheral.is_none_or(|k| p.periphery.len() == k)
        })
        .collect();
    Ok(TreeStream {
        trees: trees.into_iter(),
    })
}

/// All `n^(n-2)` labeled trees on `n` vertices via Prüfer decoding, each
/// exactly once. Independent of the free-tree generator by construction.
pub struct LabeledTrees {
    n: usize,
    // next Prüfer sequence, counting in mixed radix; None when exhausted
    seq: Option<Vec<usize>>,
}

impl Iterator for LabeledTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let seq = self.seq.take()?;
        let g = decode_prufer(self.n, &seq);
        let mut next = seq;
        for digit in next.iter_mut().rev() {
            if *digit + 1 < self.n {
                *digit += 1;
                self.seq = Some(next);
                return Some(g);
            }
            *digit = 0;
        }
        if next.is_empty() {
            // orders 1 and 2 have a single tree
            self.seq = None;
        }
        Some(g)
    }
}

/// Decodes a Prüfer sequence of length `n - 2` into its labeled tree.
pub fn decode_prufer(n: usize, seq: &[usize]) -> Graph {
    assert!(n >= 1 && (n <= 2 && seq.is_empty() || seq.len() == n - 2));
    if n == 1 {
        return Graph::from_edges(1, []).unwrap();
    }
    let mut degree = vec![1u32; n];
    for &a in seq {
        degree[a] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // pointer/leaf scan: always take the smallest current leaf
    let mut ptr = 0;
    let mut leaf = {
        while degree[ptr] != 1 {
            ptr += 1;
        }
        ptr
    };
    for &a in seq {
        edges.push((leaf, a));
        degree[a] -= 1;
        if degree[a] == 1 && a < ptr {
            leaf = a;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::from_edges(n, edges).expect("Prüfer decoding yields a tree")
}

pub fn labeled_trees_prufer(n: usize) -> Result<LabeledTrees, ParamError> {
    if !(1..=MAX_PRUFER_ORDER).contains(&n) {
        return Err(ParamError::new(
            "labeled_trees_prufer",
            format!("requires 1 <= n <= {MAX_PRUFER_ORDER}, got n={n}"),
        ));
    }
    Ok(LabeledTrees {
        n,
        seq: Some(vec![0; n.saturating_sub(2)]),
    })
}
