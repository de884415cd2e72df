//! Simple undirected graphs, the complete multipartite generator and the
//! line-graph operator.
//!
//! Edges are always stored in lexicographic order on `(min, max)`, so the
//! edge index of a graph doubles as the stable vertex id of its line graph.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::{Error, Result};

/// An undirected edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Returns `None` for a self-loop.
    pub fn new(a: usize, b: usize) -> Option<Self> {
        match a.cmp(&b) {
            core::cmp::Ordering::Less => Some(Edge { u: a, v: b }),
            core::cmp::Ordering::Greater => Some(Edge { u: b, v: a }),
            core::cmp::Ordering::Equal => None,
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`, if `x` is an endpoint.
    pub fn other(&self, x: usize) -> Option<usize> {
        if self.u == x {
            Some(self.v)
        } else if self.v == x {
            Some(self.u)
        } else {
            None
        }
    }
}

/// Part sizes `(n_1, ..., n_k)` of a complete multipartite graph.
///
/// The complete graph `K_n` is the spec with `n` parts of size one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultipartiteSpec {
    parts: Vec<usize>,
}

impl MultipartiteSpec {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidSpec("no colour classes"));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidSpec("colour class of size zero"));
        }
        Ok(MultipartiteSpec { parts })
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    /// `K_{c,...,c}` with `k` classes.
    pub fn regular(c: usize, k: usize) -> Result<Self> {
        Self::new(vec![c; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of colour classes.
    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_complete(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// `K_{1,m}` in either part order.
    pub fn is_star(&self) -> bool {
        self.parts.len() == 2 && self.parts.contains(&1)
    }

    pub fn is_regular(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// The common class size `c` of a regular spec.
    pub fn common_part_size(&self) -> Option<usize> {
        self.is_regular().then(|| self.parts[0])
    }

    /// `Σ_{i<j} n_i n_j`, the edge count of the generated graph.
    pub fn cross_pairs(&self) -> usize {
        let n = self.n();
        let squares: usize = self.parts.iter().map(|p| p * p).sum();
        (n * n - squares) / 2
    }

    /// Vertex index range occupied by colour class `class`.
    pub fn class_range(&self, class: usize) -> Range<usize> {
        let start: usize = self.parts[..class].iter().sum();
        start..start + self.parts[class]
    }

    /// Colour class of vertex `x`, or `None` when out of range.
    pub fn class_of(&self, x: usize) -> Option<usize> {
        let mut end = 0;
        for (i, &p) in self.parts.iter().enumerate() {
            end += p;
            if x < end {
                return Some(i);
            }
        }
        None
    }

    /// Index of the first colour class of maximum size.
    pub fn largest_class(&self) -> usize {
        let max = self.parts.iter().copied().max().unwrap_or(0);
        self.parts.iter().position(|&p| p == max).unwrap_or(0)
    }

    /// First vertex of [`Self::largest_class`].
    pub fn default_vertex(&self) -> usize {
        self.class_range(self.largest_class()).start
    }
}

/// A finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
    colour_of: Option<Vec<usize>>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from unordered pairs. The edge list is sorted into
    /// canonical order; self-loops, duplicates and out-of-range endpoints are
    /// rejected.
    pub fn new(vertex_count: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut edges = Vec::new();
        for (a, b) in pairs {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::InvalidGraph("edge endpoint out of range"));
            }
            edges.push(Edge::new(a, b).ok_or(Error::InvalidGraph("self-loop"))?);
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph("duplicate edge"));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for e in &edges {
            adjacency[e.u].push(e.v);
            adjacency[e.v].push(e.u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            vertex_count,
            edges,
            colour_of: None,
            adjacency,
        })
    }

    /// Attaches a colouring and checks the complete multipartite property:
    /// `uv` is an edge iff `u` and `v` have different colours.
    pub fn with_colouring(mut self, colour_of: Vec<usize>) -> Result<Self> {
        if colour_of.len() != self.vertex_count {
            return Err(Error::InvalidGraph("colouring length differs from vertex count"));
        }
        for u in 0..self.vertex_count {
            for w in u + 1..self.vertex_count {
                if (colour_of[u] != colour_of[w]) != self.has_edge(u, w) {
                    return Err(Error::InvalidGraph("colouring is not complete multipartite"));
                }
            }
        }
        self.colour_of = Some(colour_of);
        Ok(self)
    }

    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            vertex_count,
            edges: Vec::new(),
            colour_of: None,
            adjacency: vec![Vec::new(); vertex_count],
        }
    }

    pub fn path(vertex_count: usize) -> Self {
        Self::new(vertex_count, (1..vertex_count).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn cycle(vertex_count: usize) -> Result<Self> {
        if vertex_count < 3 {
            return Err(Error::InvalidGraph("cycle needs at least three vertices"));
        }
        Self::new(vertex_count, (0..vertex_count).map(|i| (i, (i + 1) % vertex_count)))
    }

    pub fn complete(vertex_count: usize) -> Self {
        let pairs = (0..vertex_count).flat_map(|u| (u + 1..vertex_count).map(move |w| (u, w)));
        Self::new(vertex_count, pairs).expect("complete graph is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Option<Edge> {
        self.edges.get(index).copied()
    }

    /// Position of `{a, b}` in the canonical edge order.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let e = Edge::new(a, b)?;
        self.edges.binary_search(&e).ok()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_index(a, b).is_some()
    }

    pub fn colour_of(&self) -> Option<&[usize]> {
        self.colour_of.as_deref()
    }

    pub fn neighbours(&self, x: usize) -> &[usize] {
        &self.adjacency[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adjacency[x].len()
    }

    /// Adjacency as bitmasks, for graphs of at most 64 vertices.
    pub fn neighbour_masks(&self) -> Option<Vec<u64>> {
        if self.vertex_count > 64 {
            return None;
        }
        Some(
            self.adjacency
                .iter()
                .map(|list| list.iter().fold(0u64, |m, &w| m | 1 << w))
                .collect(),
        )
    }

    /// Component label of every vertex after deleting the edges whose indices
    /// are flagged in `removed`. Labels are assigned in order of the smallest
    /// vertex of each component.
    pub fn components_without(&self, removed: &[bool]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (i, e) in self.edges.iter().enumerate() {
            if removed.get(i).copied().unwrap_or(false) {
                continue;
            }
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut label = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        (0..self.vertex_count)
            .map(|x| {
                let root = find(&mut parent, x);
                if label[root] == usize::MAX {
                    label[root] = next;
                    next += 1;
                }
                label[root]
            })
            .collect()
    }
}

/// Generates `K_{n_1,...,n_k}`. Colour class `X_i` occupies a contiguous
/// block of vertex indices in spec order.
pub fn complete_multipartite(spec: &MultipartiteSpec) -> Graph {
    let n = spec.n();
    let colour: Vec<usize> = (0..spec.k())
        .flat_map(|i| core::iter::repeat_n(i, spec.parts()[i]))
        .collect();
    let mut edges = Vec::with_capacity(spec.cross_pairs());
    for u in 0..n {
        for w in u + 1..n {
            if colour[u] != colour[w] {
                edges.push(Edge { u, v: w });
            }
        }
    }
    // Pairs are emitted in lexicographic order already.
    let mut adjacency = vec![Vec::new(); n];
    for e in &edges {
        adjacency[e.u].push(e.v);
        adjacency[e.v].push(e.u);
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    Graph {
        vertex_count: n,
        edges,
        colour_of: Some(colour),
        adjacency,
    }
}

/// Bijection between the edges of `G` and the vertices of `L(G)`.
///
/// Line-graph vertex `i` is edge `i` of `G` in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeVertexMap {
    edges: Vec<Edge>,
}

impl EdgeVertexMap {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertex_of(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn edge_of(&self, vertex: usize) -> Option<Edge> {
        self.edges.get(vertex).copied()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }
}

/// `L(G)`: one vertex per edge of `g`, adjacent when the edges share an
/// endpoint.
pub fn line_graph(g: &Graph) -> (Graph, EdgeVertexMap) {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (i, e) in g.edges().iter().enumerate() {
        incident[e.u].push(i);
        incident[e.v].push(i);
    }
    // Two distinct edges of a simple graph share at most one endpoint, so
    // every pair below is produced exactly once.
    let pairs = incident.iter().flat_map(|list| {
        list.iter()
            .enumerate()
            .flat_map(move |(a, &x)| list[a + 1..].iter().map(move |&y| (x, y)))
    });
    let lg = Graph::new(g.edge_count(), pairs).expect("line graph of a simple graph is simple");
    (
        lg,
        EdgeVertexMap {
            edges: g.edges().to_vec(),
        },
    )
}
