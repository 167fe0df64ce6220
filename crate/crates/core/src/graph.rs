use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{GraphError, ParseError};

/// Distance reported by [`Graph::bfs_distances`] for vertices that cannot be
/// reached from the source.
pub const UNREACHABLE: u32 = u32::MAX;

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept strictly increasing; construction rejects
/// self-loops and duplicate edges. All operations are pure, so values can be
/// shared freely across threads.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an explicit vertex count and edge list.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::ZeroOrder);
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            if adj[u].contains(&v) {
                return Err(GraphError::EdgePresent { u, v });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, adj })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Returns a new graph with the edge `(u, v)` added; `self` is unchanged.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        if self.has_edge(u, v) {
            return Err(GraphError::EdgePresent { u, v });
        }
        let mut adj = self.adj.clone();
        let iu = adj[u].binary_search(&v).unwrap_err();
        adj[u].insert(iu, v);
        let iv = adj[v].binary_search(&u).unwrap_err();
        adj[v].insert(iv, u);
        Ok(Graph { n: self.n, adj })
    }

    /// Hop distances from `source` to every vertex; unreachable vertices get
    /// [`UNREACHABLE`].
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<u32>, GraphError> {
        if source >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: source,
                order: self.n,
            });
        }
        let mut dist = vec![UNREACHABLE; self.n];
        dist[source] = 0;
        let mut queue = VecDeque::with_capacity(self.n);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == UNREACHABLE {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0)
            .map(|d| d.iter().all(|&x| x != UNREACHABLE))
            .unwrap_or(false)
    }

    /// Connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.size() == self.n - 1 && self.is_connected()
    }

    /// Parses the edge-list text format: optional `#` comment lines, a
    /// vertex-count header, then one `u v` pair per line.
    pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
        let mut n: Option<usize> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match n {
                None => {
                    let parsed = line.parse::<usize>().ok().filter(|&v| v > 0);
                    match parsed {
                        Some(v) => n = Some(v),
                        None => {
                            return Err(ParseError::BadHeader {
                                line: lineno,
                                content: line.to_string(),
                            })
                        }
                    }
                }
                Some(order) => {
                    let mut it = line.split_ascii_whitespace();
                    let (u, v) = match (it.next(), it.next(), it.next()) {
                        (Some(a), Some(b), None) => match (a.parse(), b.parse()) {
                            (Ok(u), Ok(v)) => (u, v),
                            _ => {
                                return Err(ParseError::BadLine {
                                    line: lineno,
                                    content: line.to_string(),
                                })
                            }
                        },
                        _ => {
                            return Err(ParseError::BadLine {
                                line: lineno,
                                content: line.to_string(),
                            })
                        }
                    };
                    for w in [u, v] {
                        if w >= order {
                            return Err(ParseError::VertexOutOfRange {
                                line: lineno,
                                vertex: w,
                                order,
                            });
                        }
                    }
                    if u == v {
                        return Err(ParseError::SelfLoop {
                            line: lineno,
                            vertex: u,
                        });
                    }
                    if edges
                        .iter()
                        .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
                    {
                        return Err(ParseError::DuplicateEdge {
                            line: lineno,
                            u,
                            v,
                        });
                    }
                    edges.push((u, v));
                }
            }
        }
        match n {
            Some(order) => Ok(Graph::from_edges(order, edges).expect("validated above")),
            None => Err(ParseError::MissingHeader),
        }
    }

    /// Serializes to the canonical edge-list text: header line, then edges
    /// with `u < v` in lexicographic order, LF line endings.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.n).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "{} {}", u, v).unwrap();
        }
        out
    }
}

/// All-pairs hop distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// Runs one BFS per source. Fails on disconnected input: every statement
    /// downstream assumes finite distances.
    pub fn of(g: &Graph) -> Result<DistanceMatrix, GraphError> {
        let n = g.order();
        let mut d = Vec::with_capacity(n * n);
        for s in 0..n {
            let row = g.bfs_distances(s)?;
            if row.contains(&UNREACHABLE) {
                return Err(GraphError::Disconnected);
            }
            d.extend_from_slice(&row);
        }
        Ok(DistanceMatrix { n, d })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, v: usize) -> &[u32] {
        &self.d[v * self.n..(v + 1) * self.n]
    }
}
