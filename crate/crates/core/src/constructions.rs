//! Deterministic generators for the named tree families and the bundled
//! fixture graphs.
//!
//! Vertex numbering is fixed per family so serialized output is reproducible
//! byte for byte: main path (or spine) first, then any attached comet spine,
//! then pendant vertices, always in increasing order of attachment.

use std::str::FromStr;

use crate::error::ParamError;
use crate::graph::Graph;

fn param_err(context: &'static str, reason: impl Into<String>) -> ParamError {
    ParamError::new(context, reason)
}

/// Path on `n >= 1` vertices, `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Result<Graph, ParamError> {
    if n < 1 {
        return Err(param_err("path", "requires n >= 1"));
    }
    Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?)
}

/// Star on `n >= 2` vertices with center 0.
pub fn star(n: usize) -> Result<Graph, ParamError> {
    if n < 2 {
        return Err(param_err("star", "requires n >= 2"));
    }
    Ok(Graph::from_edges(n, (1..n).map(|v| (0, v)))?)
}

/// Comet: path on `r` vertices (`0..r`, head 0) with `n - r` pendants at
/// vertex `r - 1`. Requires `1 <= r <= n - 1`.
pub fn comet(n: usize, r: usize) -> Result<Graph, ParamError> {
    if r < 1 || r + 1 > n {
        return Err(param_err("comet", format!("requires 1 <= r <= n-1, got n={n} r={r}")));
    }
    let mut edges: Vec<(usize, usize)> = (1..r).map(|i| (i - 1, i)).collect();
    edges.extend((r..n).map(|v| (r - 1, v)));
    Ok(Graph::from_edges(n, edges)?)
}

/// Dumbbell: spine `0..m` (m = n-a-b), `a` pendants at vertex 0
/// (`m..m+a`), `b` pendants at vertex `m - 1` (`m+a..n`).
pub fn dumbbell(n: usize, a: usize, b: usize) -> Result<Graph, ParamError> {
    if a < 1 || b < 1 || a + b + 1 > n {
        return Err(param_err(
            "dumbbell",
            format!("requires a,b >= 1 and n-a-b >= 1, got n={n} a={a} b={b}"),
        ));
    }
    let m = n - a - b;
    let mut edges: Vec<(usize, usize)> = (1..m).map(|i| (i - 1, i)).collect();
    edges.extend((m..m + a).map(|v| (0, v)));
    edges.extend((m + a..n).map(|v| (m - 1, v)));
    Ok(Graph::from_edges(n, edges)?)
}

/// `k >= 2` paths of `len >= 1` edges joined at a common end (vertex 0).
/// Branch `i` occupies vertices `1 + i*len ..= (i+1)*len`, inner to leaf.
pub fn balanced_starlike(k: usize, len: usize) -> Result<Graph, ParamError> {
    if k < 2 || len < 1 {
        return Err(param_err(
            "balanced_starlike",
            format!("requires k >= 2 and branch length >= 1, got k={k} len={len}"),
        ));
    }
    let n = k * len + 1;
    let mut edges = Vec::with_capacity(n - 1);
    for i in 0..k {
        let base = 1 + i * len;
        edges.push((0, base));
        edges.extend((base + 1..base + len).map(|v| (v - 1, v)));
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// Attaches a comet with `extra` vertices beyond its head onto `head`, using
/// spine size `r` counted including the head. `r <= 1` degenerates to plain
/// pendants at the head.
fn attach_comet(edges: &mut Vec<(usize, usize)>, head: usize, mut next: usize, extra: usize, r: usize) {
    if extra == 0 {
        return;
    }
    if r <= 1 {
        edges.extend((next..next + extra).map(|v| (head, v)));
        return;
    }
    let mut prev = head;
    for _ in 0..r - 1 {
        edges.push((prev, next));
        prev = next;
        next += 1;
    }
    edges.extend((next..next + (extra - (r - 1))).map(|v| (prev, v)));
}

/// Maximizer of the normality sum among trees with order `n` and diameter
/// `d`: a path `0..=d` with a comet on `n - d` vertices head-identified at
/// vertex `d/2`, spine `min(d/2 - 1, n-d-1)`. For `d` in `{2, 3}` the comet
/// degenerates to pendants at the middle vertex (star and dumbbell shapes).
pub fn t_hat(n: usize, d: usize) -> Result<Graph, ParamError> {
    if d < 2 || d + 1 > n {
        return Err(param_err("t_hat", format!("requires 2 <= d <= n-1, got n={n} d={d}")));
    }
    let mut edges: Vec<(usize, usize)> = (1..=d).map(|i| (i - 1, i)).collect();
    let extra = n - d - 1;
    let r = (d / 2 - 1).min(extra);
    attach_comet(&mut edges, d / 2, d + 1, extra, r);
    Ok(Graph::from_edges(n, edges)?)
}

/// True when `t_hat(n, d)` falls outside the literal comet definition
/// (no positive spine is possible) and the pendant interpretation is used.
pub fn t_hat_is_degenerate(n: usize, d: usize) -> bool {
    d <= 3 && n > d + 1
}

/// Maximizer of the normality sum among trees with order `n`, diameter `d`
/// and `k` peripheral vertices: a dumbbell on `k + d - 1` vertices with
/// pendant groups `a`, `b` (`a + b = k`), plus a comet on `n - k - d + 2`
/// vertices head-identified at the middle of the spine.
///
/// Numbering: spine `0..d-1`, `a` pendants, `b` pendants, then the comet.
pub fn t_tilde(n: usize, k: usize, d: usize, a: usize, b: usize) -> Result<Graph, ParamError> {
    if k < 2 || a < 1 || b < 1 || a + b != k || d < 3 || n + 1 < k + d {
        return Err(param_err(
            "t_tilde",
            format!("requires k >= 2, a,b >= 1, a+b = k, d >= 3, n >= k+d-1; got n={n} k={k} d={d} a={a} b={b}"),
        ));
    }
    let s = d - 1; // spine vertices
    let mut edges: Vec<(usize, usize)> = (1..s).map(|i| (i - 1, i)).collect();
    edges.extend((s..s + a).map(|v| (0, v)));
    edges.extend((s + a..s + k).map(|v| (s - 1, v)));
    let extra = n - (k + d - 1);
    let r = (d / 2 - 1).min(extra);
    // middle of the diametral path (pendant, spine..., pendant) is v_{d/2},
    // which sits at spine index d/2 - 1
    attach_comet(&mut edges, d / 2 - 1, s + k, extra, r);
    Ok(Graph::from_edges(n, edges)?)
}

/// Minimizer of the normality sum among trees with `k` peripheral vertices:
/// a balanced starlike tree with branch length 3 plus `n - 3k - 1` pendants
/// on the center-neighbor of branch 0 (a normality-2 vertex).
pub fn s_tilde(n: usize, k: usize) -> Result<Graph, ParamError> {
    if k < 2 || n < 3 * k + 1 {
        return Err(param_err(
            "s_tilde",
            format!("requires k >= 2 and n >= 3k+1, got n={n} k={k}"),
        ));
    }
    let base = balanced_starlike(k, 3)?;
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    edges.extend((3 * k + 1..n).map(|v| (1, v)));
    Ok(Graph::from_edges(n, edges)?)
}

/// Minimizer of the lambda-span sum: a path on 5 vertices (`0..=4`) with
/// `n - 5` pendants at the middle vertex 2.
pub fn s_hat(n: usize) -> Result<Graph, ParamError> {
    if n < 5 {
        return Err(param_err("s_hat", format!("requires n >= 5, got n={n}")));
    }
    let mut edges: Vec<(usize, usize)> = (1..=4).map(|i| (i - 1, i)).collect();
    edges.extend((5..n).map(|v| (2, v)));
    Ok(Graph::from_edges(n, edges)?)
}

/// Identifiers for the bundled fixture graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureId {
    /// 7-vertex connected non-tree where vertex 2 has eccentricity 3 but is
    /// within distance 2 of every peripheral vertex.
    Fig1,
    /// 5-vertex tree whose normality sum increases when edge (0,4) is added.
    Fig2Tree,
    /// The previous tree plus edge (0,4).
    Fig2PlusEdge,
    /// 12-vertex tree whose normality center {4,5,6,7} is disconnected and
    /// disjoint from the center {8,9}. Mapping from the source labels:
    /// v1..v10 -> 0..9, the two unlabeled spine ends -> 10 (left, adjacent
    /// to 0, 1, 8) and 11 (right, adjacent to 2, 3, 9).
    Fig3,
}

impl FromStr for FixtureId {
    type Err = ParamError;
    fn from_str(s: &str) -> Result<Self, ParamError> {
        match s {
            "fig1" => Ok(FixtureId::Fig1),
            "fig2_tree" => Ok(FixtureId::Fig2Tree),
            "fig2_plus_edge" => Ok(FixtureId::Fig2PlusEdge),
            "fig3" => Ok(FixtureId::Fig3),
            other => Err(param_err(
                "fixture",
                format!("unknown id {other:?}; expected fig1, fig2_tree, fig2_plus_edge or fig3"),
            )),
        }
    }
}

/// Returns the fixture graph for `id`. Source labels v1, v2, ... map to
/// 0-based vertices by subtracting one.
pub fn fixture(id: FixtureId) -> Result<Graph, ParamError> {
    let g = match id {
        FixtureId::Fig1 => Graph::from_edges(
            7,
            [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (5, 6), (6, 4)],
        ),
        FixtureId::Fig2Tree => Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4)]),
        FixtureId::Fig2PlusEdge => {
            Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4), (0, 4)])
        }
        FixtureId::Fig3 => Graph::from_edges(
            12,
            [
                (8, 9),
                (8, 10),
                (9, 11),
                (0, 10),
                (1, 10),
                (4, 8),
                (5, 8),
                (6, 9),
                (7, 9),
                (2, 11),
                (3, 11),
            ],
        ),
    };
    Ok(g?)
}

/// The tree families exposed through the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Star,
    Comet,
    Dumbbell,
    BalancedStarlike,
    THat,
    TTilde,
    STilde,
    SHat,
    Fixture,
}

impl FromStr for Family {
    type Err = ParamError;
    fn from_str(s: &str) -> Result<Self, ParamError> {
        match s {
            "path" => Ok(Family::Path),
            "star" => Ok(Family::Star),
            "comet" => Ok(Family::Comet),
            "dumbbell" => Ok(Family::Dumbbell),
            "balanced_starlike" => Ok(Family::BalancedStarlike),
            "t_hat" => Ok(Family::THat),
            "t_tilde" => Ok(Family::TTilde),
            "s_tilde" => Ok(Family::STilde),
            "s_hat" => Ok(Family::SHat),
            "fixture" => Ok(Family::Fixture),
            other => Err(param_err("family", format!("unknown family {other:?}"))),
        }
    }
}

/// A family name plus its integer parameters; checked when built.
#[derive(Debug, Clone, Default)]
pub struct FamilySpec {
    pub family: Option<Family>,
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub k: Option<usize>,
    pub r: Option<usize>,
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub id: Option<FixtureId>,
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, ParamError> {
        let family = self
            .family
            .ok_or_else(|| param_err("construct", "missing family"))?;
        let need = |p: Option<usize>, name: &str| {
            p.ok_or_else(|| param_err("construct", format!("family requires --{name}")))
        };
        match family {
            Family::Path => path(need(self.n, "n")?),
            Family::Star => star(need(self.n, "n")?),
            Family::Comet => comet(need(self.n, "n")?, need(self.r, "r")?),
            Family::Dumbbell => dumbbell(need(self.n, "n")?, need(self.a, "a")?, need(self.b, "b")?),
            // --d is the per-branch path length here
            Family::BalancedStarlike => balanced_starlike(need(self.k, "k")?, need(self.d, "d")?),
            Family::THat => t_hat(need(self.n, "n")?, need(self.d, "d")?),
            Family::TTilde => t_tilde(
                need(self.n, "n")?,
                need(self.k, "k")?,
                need(self.d, "d")?,
                need(self.a, "a")?,
                need(self.b, "b")?,
            ),
            Family::STilde => s_tilde(need(self.n, "n")?, need(self.k, "k")?),
            Family::SHat => s_hat(need(self.n, "n")?),
            Family::Fixture => {
                let id = self.id.ok_or_else(|| param_err("construct", "fixture requires --id"))?;
                fixture(id)
            }
        }
    }
}
