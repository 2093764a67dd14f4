//! Finite directed graphs and their finite paths.
//!
//! Vertices and edges are interned: ids are indices into the lexicographically
//! sorted name lists, so the derived order on ids is the name order.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("invalid identifier `{0}`")]
    InvalidIdentifier(String),
    #[error("duplicate identifier `{0}`")]
    DuplicateId(String),
    #[error("edge `{edge}` refers to undeclared vertex `{vertex}`")]
    DanglingEndpoint { edge: String, vertex: String },
    #[error("edges `{0}` and `{1}` are not composable")]
    NotComposable(String, String),
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub(crate) u32);

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(pub(crate) u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Returns true for `[A-Za-z][A-Za-z0-9_]*`.
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A finite directed graph `E = (E⁰, E¹, r, s)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    vertex_names: Vec<String>,
    edge_names: Vec<String>,
    source: Vec<VertexId>,
    range: Vec<VertexId>,
    out: Vec<Vec<EdgeId>>,
    incoming: Vec<Vec<EdgeId>>,
    fingerprint: u64,
}

impl Graph {
    /// Builds a graph from vertex names and `(edge, source, range)` triples.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (String, String, String)>,
    {
        let mut vertex_names: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut raw_edges: Vec<(String, String, String)> = edges.into_iter().collect();
        if vertex_names.is_empty() {
            return Err(GraphError::NoVertices);
        }
        for name in vertex_names.iter().chain(raw_edges.iter().map(|e| &e.0)) {
            if !is_identifier(name) {
                return Err(GraphError::InvalidIdentifier(name.clone()));
            }
        }
        vertex_names.sort();
        raw_edges.sort();
        let mut all: Vec<&String> = vertex_names.iter().chain(raw_edges.iter().map(|e| &e.0)).collect();
        all.sort();
        if let Some(w) = all.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateId(w[0].clone()));
        }

        let lookup = |edge: &str, name: &str| -> Result<VertexId, GraphError> {
            vertex_names
                .binary_search_by(|v| v.as_str().cmp(name))
                .map(|i| VertexId(i as u32))
                .map_err(|_| GraphError::DanglingEndpoint { edge: edge.to_string(), vertex: name.to_string() })
        };
        let mut source = Vec::with_capacity(raw_edges.len());
        let mut range = Vec::with_capacity(raw_edges.len());
        for (e, s, r) in &raw_edges {
            source.push(lookup(e, s)?);
            range.push(lookup(e, r)?);
        }

        let mut out = vec![Vec::new(); vertex_names.len()];
        let mut incoming = vec![Vec::new(); vertex_names.len()];
        for i in 0..raw_edges.len() {
            out[source[i].index()].push(EdgeId(i as u32));
            incoming[range[i].index()].push(EdgeId(i as u32));
        }
        let edge_names: Vec<String> = raw_edges.into_iter().map(|e| e.0).collect();

        let mut g = Graph { vertex_names, edge_names, source, range, out, incoming, fingerprint: 0 };
        g.fingerprint = g.compute_fingerprint();
        Ok(g)
    }

    // FNV-1a over names and incidence; identifies "the same graph" for ring elements.
    fn compute_fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut feed = |bytes: &[u8]| {
            for b in bytes {
                h ^= *b as u64;
                h = h.wrapping_mul(0x0000_0100_0000_01b3);
            }
            h ^= 0xff;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        };
        for v in &self.vertex_names {
            feed(v.as_bytes());
        }
        feed(b"|");
        for (i, e) in self.edge_names.iter().enumerate() {
            feed(e.as_bytes());
            feed(&self.source[i].0.to_le_bytes());
            feed(&self.range[i].0.to_le_bytes());
        }
        h
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_names.len()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + Clone {
        (0..self.vertex_names.len() as u32).map(VertexId)
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = EdgeId> + Clone {
        (0..self.edge_names.len() as u32).map(EdgeId)
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.vertex_names.binary_search_by(|v| v.as_str().cmp(name)).ok().map(|i| VertexId(i as u32))
    }

    pub fn edge(&self, name: &str) -> Option<EdgeId> {
        self.edge_names.binary_search_by(|v| v.as_str().cmp(name)).ok().map(|i| EdgeId(i as u32))
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v.index()]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edge_names[e.index()]
    }

    pub fn source(&self, e: EdgeId) -> VertexId {
        self.source[e.index()]
    }

    pub fn range(&self, e: EdgeId) -> VertexId {
        self.range[e.index()]
    }

    /// Edges emitted by `v`, sorted by id.
    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out[v.index()]
    }

    /// Edges received by `v`, sorted by id.
    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.incoming[v.index()]
    }

    pub fn is_sink(&self, v: VertexId) -> bool {
        self.out[v.index()].is_empty()
    }

    /// Vertices emitting no edge.
    pub fn sinks(&self) -> Vec<VertexId> {
        self.vertices().filter(|&v| self.is_sink(v)).collect()
    }

    /// All paths of length `0..=max_len`, ordered by length and then
    /// lexicographically by edge ids (vertices by id at length zero).
    pub fn enumerate_paths(&self, max_len: usize) -> Vec<Path> {
        let mut all: Vec<Path> = self.vertices().map(Path::vertex).collect();
        let mut frontier = all.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &frontier {
                for &e in self.out_edges(p.end(self)) {
                    next.push(p.extended(e));
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort();
            all.extend(next.iter().cloned());
            frontier = next;
        }
        all
    }

    /// Paths of length `0..=max_len` starting at `v`, in the same order as
    /// [`Graph::enumerate_paths`].
    pub fn paths_from(&self, v: VertexId, max_len: usize) -> Vec<Path> {
        let mut all = vec![Path::vertex(v)];
        let mut frontier = all.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &frontier {
                for &e in self.out_edges(p.end(self)) {
                    next.push(p.extended(e));
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort();
            all.extend(next.iter().cloned());
            frontier = next;
        }
        all
    }

    /// Every simple closed cycle, as an edge sequence starting at its least
    /// vertex. Parallel edges give distinct cycles.
    pub fn simple_cycles(&self) -> Vec<Vec<EdgeId>> {
        let mut cycles = Vec::new();
        let mut on_path = vec![false; self.vertex_count()];
        let mut stack: Vec<EdgeId> = Vec::new();
        for start in self.vertices() {
            on_path[start.index()] = true;
            self.cycle_dfs(start, start, &mut on_path, &mut stack, &mut cycles);
            on_path[start.index()] = false;
        }
        cycles
    }

    fn cycle_dfs(
        &self,
        start: VertexId,
        at: VertexId,
        on_path: &mut [bool],
        stack: &mut Vec<EdgeId>,
        cycles: &mut Vec<Vec<EdgeId>>,
    ) {
        for &e in self.out_edges(at) {
            let next = self.range(e);
            if next == start {
                stack.push(e);
                cycles.push(stack.clone());
                stack.pop();
            } else if next > start && !on_path[next.index()] {
                on_path[next.index()] = true;
                stack.push(e);
                self.cycle_dfs(start, next, on_path, stack, cycles);
                stack.pop();
                on_path[next.index()] = false;
            }
        }
    }

    /// Some vertex of the cycle emits an edge that is not on the cycle.
    pub fn cycle_has_exit(&self, cycle: &[EdgeId]) -> bool {
        cycle.iter().any(|&e| self.out_edges(self.source(e)).iter().any(|f| !cycle.contains(f)))
    }

    /// Condition (L): every closed cycle has an exit. Vacuous on acyclic graphs.
    pub fn condition_l(&self) -> bool {
        self.simple_cycles().iter().all(|c| self.cycle_has_exit(c))
    }

    /// A closed cycle without exit, if one exists.
    pub fn cycle_without_exit(&self) -> Option<Vec<EdgeId>> {
        self.simple_cycles().into_iter().find(|c| !self.cycle_has_exit(c))
    }

    pub fn is_acyclic(&self) -> bool {
        self.longest_path_len().is_some()
    }

    /// Length of the longest path, or `None` when the graph has a cycle.
    pub fn longest_path_len(&self) -> Option<usize> {
        // Kahn's algorithm on out-degrees, peeling sinks first.
        let n = self.vertex_count();
        let mut remaining: Vec<usize> = self.vertices().map(|v| self.out_edges(v).len()).collect();
        let mut height = vec![0usize; n];
        let mut ready: Vec<VertexId> = self.sinks();
        let mut done = 0;
        while let Some(v) = ready.pop() {
            done += 1;
            for &e in self.in_edges(v) {
                let u = self.source(e);
                height[u.index()] = height[u.index()].max(height[v.index()] + 1);
                remaining[u.index()] -= 1;
                if remaining[u.index()] == 0 {
                    ready.push(u);
                }
            }
        }
        (done == n).then(|| height.into_iter().max().unwrap_or(0))
    }

    pub fn display_path<'a>(&'a self, path: &'a Path) -> PathDisplay<'a> {
        PathDisplay { graph: self, path }
    }
}

/// A finite path. Length zero paths are vertices (`s = r = anchor`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Path {
    start: VertexId,
    edges: Vec<EdgeId>,
}

impl Path {
    pub fn vertex(v: VertexId) -> Self {
        Path { start: v, edges: Vec::new() }
    }

    pub fn edge(graph: &Graph, e: EdgeId) -> Self {
        Path { start: graph.source(e), edges: vec![e] }
    }

    /// Checks `r(ξᵢ) = s(ξᵢ₊₁)` and, for nonempty `edges`, that `start` is the
    /// source of the first edge.
    pub fn new(graph: &Graph, start: VertexId, edges: Vec<EdgeId>) -> Result<Self, GraphError> {
        if let Some(&first) = edges.first() {
            if graph.source(first) != start {
                return Err(GraphError::NotComposable(
                    graph.vertex_name(start).to_string(),
                    graph.edge_name(first).to_string(),
                ));
            }
        }
        for w in edges.windows(2) {
            if graph.range(w[0]) != graph.source(w[1]) {
                return Err(GraphError::NotComposable(
                    graph.edge_name(w[0]).to_string(),
                    graph.edge_name(w[1]).to_string(),
                ));
            }
        }
        Ok(Path { start, edges })
    }

    /// Nonempty composable edge sequence; the start vertex is inferred.
    pub fn from_edges(graph: &Graph, edges: &[EdgeId]) -> Result<Self, GraphError> {
        let start = graph.source(*edges.first().ok_or(GraphError::NoVertices)?);
        Path::new(graph, start, edges.to_vec())
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn end(&self, graph: &Graph) -> VertexId {
        match self.edges.last() {
            Some(&e) => graph.range(e),
            None => self.start,
        }
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    /// Whether `self` is an initial subpath of `other`.
    pub fn is_prefix_of(&self, other: &Path) -> bool {
        self.start == other.start && other.edges.starts_with(&self.edges)
    }

    /// The path `t` with `prefix · t = self`.
    pub fn strip_prefix(&self, graph: &Graph, prefix: &Path) -> Option<Path> {
        if !prefix.is_prefix_of(self) {
            return None;
        }
        Some(Path { start: prefix.end(graph), edges: self.edges[prefix.len()..].to_vec() })
    }

    /// Concatenation; `other` must start where `self` ends.
    pub fn concat(&self, graph: &Graph, other: &Path) -> Path {
        debug_assert_eq!(self.end(graph), other.start);
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Path { start: self.start, edges }
    }

    /// Appends one edge (the caller guarantees composability).
    pub fn extended(&self, e: EdgeId) -> Path {
        let mut edges = Vec::with_capacity(self.edges.len() + 1);
        edges.extend_from_slice(&self.edges);
        edges.push(e);
        Path { start: self.start, edges }
    }

    /// Drops the last edge; `None` for vertices.
    pub fn parent(&self) -> Option<Path> {
        if self.edges.is_empty() {
            return None;
        }
        Some(Path { start: self.start, edges: self.edges[..self.edges.len() - 1].to_vec() })
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.edges
            .len()
            .cmp(&other.edges.len())
            .then_with(|| self.edges.cmp(&other.edges))
            .then_with(|| self.start.cmp(&other.start))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct PathDisplay<'a> {
    graph: &'a Graph,
    path: &'a Path,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_vertex() {
            return f.write_str(self.graph.vertex_name(self.path.start));
        }
        for (i, &e) in self.path.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.graph.edge_name(e))?;
        }
        Ok(())
    }
}
