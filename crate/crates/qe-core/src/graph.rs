//! Finite simple connected graphs, shortest-path distance matrices,
//! named graph families, and star products.
//!
//! A star product glues rooted graphs at their distinguished vertices:
//! the glued vertex becomes vertex 0 of the product and every distance
//! across factors passes through it.

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

/// Errors from graph construction and graph-level queries.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    /// An edge joins a vertex to itself.
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    /// The same undirected edge was given twice (in either orientation).
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    /// A vertex index is not in `0..vertex_count`.
    #[error("vertex {vertex} out of range for a graph on {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    /// The edge set does not connect all vertices.
    #[error("graph is disconnected: vertex {unreached} not reachable from vertex 0")]
    Disconnected { unreached: usize },
    /// A named family was requested below its minimum size.
    #[error("{kind} graph needs at least {min} vertices, got {got}")]
    FamilyTooSmall {
        kind: GraphKind,
        min: usize,
        got: usize,
    },
    /// A graph with no vertices was requested.
    #[error("graph must have at least one vertex")]
    Empty,
    /// A star-product factor must have at least two vertices.
    #[error("star factor {index} has fewer than 2 vertices")]
    FactorTooSmall { index: usize },
    /// A star product needs at least one factor.
    #[error("star product needs at least one factor")]
    NoFactors,
    /// An embedding map has the wrong number of entries.
    #[error("embedding has {got} entries, subgraph has {expected} vertices")]
    EmbeddingSizeMismatch { got: usize, expected: usize },
    /// An embedding map repeats a target vertex.
    #[error("embedding is not injective: vertex {target} hit twice")]
    EmbeddingNotInjective { target: usize },
    /// An embedding map sends an edge to a non-edge.
    #[error("embedding does not preserve edge {{{0}, {1}}}")]
    EmbeddingNotEdgePreserving(usize, usize),
    /// An edge-list file failed to parse.
    #[error("edge list parse error at line {line}: {message}")]
    EdgeListSyntax { line: usize, message: String },
}

/// Named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    /// Complete graph `K_n`.
    Complete,
    /// Path graph `P_n`, vertices `0..n` with edges `{i, i+1}`.
    Path,
    /// Cycle graph `C_n`.
    Cycle,
    /// Star graph `K_{1,n-1}` with center 0.
    Star,
}

impl std::fmt::Display for GraphKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            GraphKind::Complete => "complete",
            GraphKind::Path => "path",
            GraphKind::Cycle => "cycle",
            GraphKind::Star => "star",
        };
        f.write_str(name)
    }
}

/// A finite simple connected undirected graph.
///
/// Immutable after construction; connectivity, simplicity, and symmetric
/// adjacency are enforced by every constructor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    /// Sorted neighbor lists, one per vertex.
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Whether `{u, v}` is an edge.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` pairs with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs.iter().filter(|&&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Sorted degree sequence. Handy for comparing graphs up to isomorphism
    /// in tests without an isomorphism algorithm.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        degs.sort_unstable();
        degs
    }

    /// Whether the graph is a tree (connected is an invariant, so this is
    /// just the edge count check `|E| = |V| - 1`).
    pub fn is_tree(&self) -> bool {
        self.edge_count() == self.vertex_count - 1
    }
}

/// Builds a graph from an explicit edge list.
///
/// Rejects self-loops, duplicate edges (in either orientation),
/// out-of-range endpoints, and disconnected edge sets, each with a
/// distinct error.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let mut adjacency = vec![Vec::new(); n];
    let mut seen = std::collections::HashSet::new();
    for &(u, v) in edges {
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    count: n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(GraphError::DuplicateEdge(key.0, key.1));
        }
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    for nbrs in &mut adjacency {
        nbrs.sort_unstable();
    }
    let g = Graph {
        vertex_count: n,
        adjacency,
    };
    if let Some(unreached) = first_unreached(&g) {
        return Err(GraphError::Disconnected { unreached });
    }
    Ok(g)
}

/// Lowest-index vertex not reachable from vertex 0, if any.
fn first_unreached(g: &Graph) -> Option<usize> {
    let dist = bfs(g, 0);
    dist.iter().position(|d| d.is_none())
}

/// Builds a member of a named family.
///
/// `n` is the number of vertices; cycles need `n >= 3`, the other kinds
/// accept any `n >= 1` (size-1 cases degenerate to the single vertex).
pub fn named_graph(kind: GraphKind, n: usize) -> Result<Graph, GraphError> {
    let min = match kind {
        GraphKind::Cycle => 3,
        _ => 1,
    };
    if n < min {
        return Err(GraphError::FamilyTooSmall { kind, min, got: n });
    }
    let edges: Vec<(usize, usize)> = match kind {
        GraphKind::Complete => (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect(),
        GraphKind::Path => (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
        GraphKind::Cycle => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        GraphKind::Star => (1..n).map(|v| (0, v)).collect(),
    };
    build_graph(n, &edges)
}

/// Symmetric matrix of shortest-path lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    /// Row-major entries.
    entries: Vec<u32>,
}

impl DistanceMatrix {
    /// Matrix dimension (= vertex count).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance between vertices `i` and `j`.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    /// Row-major copy of the entries as `f64`, for spectral work.
    pub fn to_f64_rows(&self) -> Vec<f64> {
        self.entries.iter().map(|&e| f64::from(e)).collect()
    }
}

fn bfs(g: &Graph, start: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.vertex_count];
    dist[start] = Some(0);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices have distances");
        for &v in g.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// All-pairs shortest path lengths by BFS from every vertex.
///
/// Connectivity is a `Graph` invariant, so every entry is finite.
pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count;
    let mut entries = vec![0u32; n * n];
    for start in 0..n {
        let dist = bfs(g, start);
        for (v, d) in dist.iter().enumerate() {
            entries[start * n + v] = d.expect("graph is connected");
        }
    }
    DistanceMatrix { n, entries }
}

/// A star-product specification: rooted factors to glue at their roots.
#[derive(Debug, Clone)]
pub struct StarSpec {
    factors: Vec<(Graph, usize)>,
}

impl StarSpec {
    /// Validates the factor list: at least one factor, every factor on
    /// at least two vertices, every root in range.
    pub fn new(factors: Vec<(Graph, usize)>) -> Result<Self, GraphError> {
        if factors.is_empty() {
            return Err(GraphError::NoFactors);
        }
        for (index, (g, root)) in factors.iter().enumerate() {
            if g.vertex_count() < 2 {
                return Err(GraphError::FactorTooSmall { index });
            }
            if *root >= g.vertex_count() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: *root,
                    count: g.vertex_count(),
                });
            }
        }
        Ok(StarSpec { factors })
    }

    /// The rooted factors.
    pub fn factors(&self) -> &[(Graph, usize)] {
        &self.factors
    }
}

/// Glues the factors at their roots.
///
/// Vertex 0 of the product is the glued vertex; the non-root vertices of
/// factor `j` occupy the next contiguous index block, in factor order and
/// increasing original index. Returns the product together with one
/// vertex map per factor (`maps[j][v]` = product index of factor-`j`
/// vertex `v`; each root maps to 0).
pub fn star_product(spec: &StarSpec) -> (Graph, Vec<Vec<usize>>) {
    let mut maps = Vec::with_capacity(spec.factors.len());
    let mut next = 1usize;
    for (g, root) in &spec.factors {
        let mut map = vec![0usize; g.vertex_count()];
        for (v, slot) in map.iter_mut().enumerate() {
            if v != *root {
                *slot = next;
                next += 1;
            }
        }
        maps.push(map);
    }
    let total = next;
    let mut edges = Vec::new();
    for ((g, _), map) in spec.factors.iter().zip(&maps) {
        for (u, v) in g.edges() {
            edges.push((map[u], map[v]));
        }
    }
    let product = build_graph(total, &edges).expect("star product of connected factors is valid");
    (product, maps)
}

/// Whether `embedding` realizes `h` as an isometrically embedded subgraph
/// of `g`: distances between mapped vertices agree with distances in `h`.
///
/// The map must be injective and edge-preserving; violations are errors,
/// not a `false` answer.
pub fn is_isometric_subgraph(
    g: &Graph,
    h: &Graph,
    embedding: &[usize],
) -> Result<bool, GraphError> {
    if embedding.len() != h.vertex_count() {
        return Err(GraphError::EmbeddingSizeMismatch {
            got: embedding.len(),
            expected: h.vertex_count(),
        });
    }
    let mut hit = vec![false; g.vertex_count()];
    for &target in embedding {
        if target >= g.vertex_count() {
            return Err(GraphError::VertexOutOfRange {
                vertex: target,
                count: g.vertex_count(),
            });
        }
        if hit[target] {
            return Err(GraphError::EmbeddingNotInjective { target });
        }
        hit[target] = true;
    }
    for (u, v) in h.edges() {
        if !g.has_edge(embedding[u], embedding[v]) {
            return Err(GraphError::EmbeddingNotEdgePreserving(u, v));
        }
    }
    let dg = distance_matrix(g);
    let dh = distance_matrix(h);
    for u in 0..h.vertex_count() {
        for v in (u + 1)..h.vertex_count() {
            if dh.get(u, v) != dg.get(embedding[u], embedding[v]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Parses the edge-list file format.
///
/// UTF-8 text; `#` starts a comment; the first non-comment line is
/// `n <vertex_count>`; every following line is `u v` with 0-based
/// whitespace-separated endpoints. Duplicate and reversed edges are
/// rejected.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        match n {
            None => {
                if tokens.next() != Some("n") {
                    return Err(GraphError::EdgeListSyntax {
                        line,
                        message: "expected header `n <vertex_count>`".into(),
                    });
                }
                let count = tokens
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| GraphError::EdgeListSyntax {
                        line,
                        message: "expected a vertex count after `n`".into(),
                    })?;
                if tokens.next().is_some() {
                    return Err(GraphError::EdgeListSyntax {
                        line,
                        message: "trailing tokens after header".into(),
                    });
                }
                n = Some(count);
            }
            Some(_) => {
                let parse = |t: Option<&str>| t.and_then(|t| t.parse::<usize>().ok());
                let (u, v) = match (parse(tokens.next()), parse(tokens.next())) {
                    (Some(u), Some(v)) => (u, v),
                    _ => {
                        return Err(GraphError::EdgeListSyntax {
                            line,
                            message: "expected an edge line `u v`".into(),
                        })
                    }
                };
                if tokens.next().is_some() {
                    return Err(GraphError::EdgeListSyntax {
                        line,
                        message: "trailing tokens after edge".into(),
                    });
                }
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or(GraphError::EdgeListSyntax {
        line: 0,
        message: "missing header `n <vertex_count>`".into(),
    })?;
    build_graph(n, &edges)
}

/// Formats a graph in the edge-list file format accepted by
/// [`parse_edge_list`].
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n {}", g.vertex_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
