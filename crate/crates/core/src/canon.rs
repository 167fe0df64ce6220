use std::fmt;

use serde::Serialize;

use crate::error::GraphError;
use crate::graph::Graph;

/// Isomorphism-invariant encoding of a tree: two trees get equal codes
/// exactly when they are isomorphic, and codes order deterministically.
///
/// The encoding is a nested-parenthesis string rooted at the centroid. A
/// one-centroid tree is `(...)`; a two-centroid tree is encoded over a
/// virtual root joining the two halves and wrapped in `[...]`, so the two
/// shapes can never collide.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The one or two vertices minimizing the largest component of `t - v`.
pub fn centroids(t: &Graph) -> Result<Vec<usize>, GraphError> {
    if !t.is_tree() {
        return Err(GraphError::NotATree);
    }
    let n = t.order();
    if n == 1 {
        return Ok(vec![0]);
    }
    // subtree sizes from a DFS order rooted at 0
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0usize];
    parent[0] = 0;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &v in t.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                stack.push(v);
            }
        }
    }
    let mut size = vec![1usize; n];
    let mut heaviest = vec![0usize; n]; // largest child subtree
    for &u in order.iter().rev().take(n - 1) {
        let p = parent[u];
        size[p] += size[u];
        heaviest[p] = heaviest[p].max(size[u]);
    }
    let comp = |v: usize| heaviest[v].max(n - size[v]);
    let best = (0..n).map(comp).min().unwrap();
    Ok((0..n).filter(|&v| comp(v) == best).collect())
}

/// Canonical code of a tree, via centroid-rooted recursive sorted encoding.
pub fn canonical_code(t: &Graph) -> Result<CanonicalCode, GraphError> {
    let cs = centroids(t)?;
    let code = match cs.as_slice() {
        [c] => rooted_code(t, *c, usize::MAX),
        [c1, c2] => {
            let mut halves = [rooted_code(t, *c1, *c2), rooted_code(t, *c2, *c1)];
            halves.sort();
            format!("[{}{}]", halves[0], halves[1])
        }
        _ => unreachable!("a tree has one or two centroids"),
    };
    Ok(CanonicalCode(code))
}

fn rooted_code(t: &Graph, v: usize, parent: usize) -> String {
    let mut children: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| rooted_code(t, u, v))
        .collect();
    children.sort();
    let mut out = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
    out.push('(');
    for c in &children {
        out.push_str(c);
    }
    out.push(')');
    out
}
