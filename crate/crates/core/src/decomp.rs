//! Tree and path decompositions, the three-axiom validator and width.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Edge, Graph};
use crate::{Error, Result};

/// A tree decomposition: bags indexed by the nodes of a tree.
///
/// Bags are stored sorted and deduplicated. Tree edges are stored as
/// `(min, max)` pairs in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<usize>>,
    tree_edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Checks that `tree_edges` form a tree on `bags.len()` nodes. An empty
    /// decomposition (no bags, no edges) is accepted so that it can be
    /// reported by [`TreeDecomposition::width`].
    pub fn new(bags: Vec<Vec<usize>>, tree_edges: Vec<(usize, usize)>) -> Result<Self> {
        let nodes = bags.len();
        if nodes == 0 {
            if !tree_edges.is_empty() {
                return Err(Error::InvalidTree("edges without nodes"));
            }
            return Ok(TreeDecomposition { bags, tree_edges });
        }
        if tree_edges.len() != nodes - 1 {
            return Err(Error::InvalidTree("a tree on t nodes has t - 1 edges"));
        }
        let mut edges = Vec::with_capacity(tree_edges.len());
        for (a, b) in tree_edges {
            if a >= nodes || b >= nodes {
                return Err(Error::InvalidTree("edge references missing node"));
            }
            if a == b {
                return Err(Error::InvalidTree("self-loop"));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        // t - 1 edges and connected implies acyclic.
        let adjacency = adjacency(nodes, &edges);
        let mut seen = vec![false; nodes];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(x) = stack.pop() {
            for &y in &adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        if reached != nodes {
            return Err(Error::InvalidTree("tree is disconnected"));
        }
        let bags = bags.into_iter().map(normalize_bag).collect();
        Ok(TreeDecomposition {
            bags,
            tree_edges: edges,
        })
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn width(&self) -> Result<Width> {
        Width::from_max_bag(&self.bags)
    }

    /// Returns the decomposition as a path when its tree is the path
    /// `0 - 1 - ... - (t-1)` in node order.
    pub fn as_path(&self) -> Option<PathDecomposition> {
        let is_path = self
            .tree_edges
            .iter()
            .enumerate()
            .all(|(i, &(a, b))| a == i && b == i + 1);
        is_path.then(|| PathDecomposition {
            bags: self.bags.clone(),
        })
    }
}

/// A path decomposition: an ordered sequence of bags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathDecomposition {
    bags: Vec<Vec<usize>>,
}

impl PathDecomposition {
    pub fn new(bags: Vec<Vec<usize>>) -> Self {
        PathDecomposition {
            bags: bags.into_iter().map(normalize_bag).collect(),
        }
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn bag_sizes(&self) -> Vec<usize> {
        self.bags.iter().map(Vec::len).collect()
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn width(&self) -> Result<Width> {
        Width::from_max_bag(&self.bags)
    }

    pub fn to_tree(&self) -> TreeDecomposition {
        let edges = (1..self.bags.len()).map(|i| (i - 1, i)).collect();
        TreeDecomposition {
            bags: self.bags.clone(),
            tree_edges: edges,
        }
    }
}

fn normalize_bag(mut bag: Vec<usize>) -> Vec<usize> {
    bag.sort_unstable();
    bag.dedup();
    bag
}

fn adjacency(nodes: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); nodes];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

/// Width of a decomposition: largest bag size minus one.
///
/// A decomposition whose bags are all empty would have width `-1`; it is
/// reported as `value == 0` with `degenerate` set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Width {
    pub value: usize,
    pub degenerate: bool,
}

impl Width {
    fn from_max_bag(bags: &[Vec<usize>]) -> Result<Self> {
        if bags.is_empty() {
            return Err(Error::EmptyDecomposition);
        }
        let max = bags.iter().map(Vec::len).max().unwrap_or(0);
        Ok(Width {
            value: max.saturating_sub(1),
            degenerate: max == 0,
        })
    }
}

/// Outcome of [`validate`]. Each field holds the first witness of the
/// corresponding failed axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ValidationReport {
    /// A vertex of the graph that appears in no bag.
    pub uncovered_vertex: Option<usize>,
    /// A vertex whose bags do not induce a connected subtree.
    pub disconnected_vertex: Option<usize>,
    /// An edge whose endpoints never share a bag.
    pub uncovered_edge: Option<Edge>,
}

impl ValidationReport {
    pub fn vertex_coverage_ok(&self) -> bool {
        self.uncovered_vertex.is_none()
    }

    pub fn connectivity_ok(&self) -> bool {
        self.disconnected_vertex.is_none()
    }

    pub fn edge_coverage_ok(&self) -> bool {
        self.uncovered_edge.is_none()
    }

    pub fn is_valid(&self) -> bool {
        self.vertex_coverage_ok() && self.connectivity_ok() && self.edge_coverage_ok()
    }
}

/// Checks the three tree-decomposition axioms of `d` against `g`.
///
/// A bag naming a vertex outside `g` is a malformed input, reported as an
/// error rather than a failed axiom.
pub fn validate(g: &Graph, d: &TreeDecomposition) -> Result<ValidationReport> {
    let n = g.vertex_count();
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (node, bag) in d.bags.iter().enumerate() {
        for &x in bag {
            if x >= n {
                return Err(Error::MalformedDecomposition {
                    node,
                    vertex: x,
                    vertex_count: n,
                });
            }
            holders[x].push(node);
        }
    }

    let mut report = ValidationReport {
        uncovered_vertex: holders.iter().position(Vec::is_empty),
        ..ValidationReport::default()
    };

    let tree = adjacency(d.node_count(), &d.tree_edges);
    let mut contains = vec![false; d.node_count()];
    let mut seen = vec![false; d.node_count()];
    for (x, nodes) in holders.iter().enumerate() {
        if nodes.is_empty() {
            continue;
        }
        for &t in nodes {
            contains[t] = true;
        }
        // Traverse only nodes whose bag holds x.
        let mut stack = vec![nodes[0]];
        seen[nodes[0]] = true;
        let mut reached = 1;
        while let Some(t) = stack.pop() {
            for &s in &tree[t] {
                if contains[s] && !seen[s] {
                    seen[s] = true;
                    reached += 1;
                    stack.push(s);
                }
            }
        }
        for &t in nodes {
            contains[t] = false;
            seen[t] = false;
        }
        if reached != nodes.len() {
            report.disconnected_vertex = Some(x);
            break;
        }
    }

    report.uncovered_edge = g.edges().iter().copied().find(|e| {
        let (a, b) = (&holders[e.u], &holders[e.v]);
        // Both lists are ascending.
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => return false,
            }
        }
        true
    });

    Ok(report)
}

/// [`validate`] for a path decomposition.
pub fn validate_path(g: &Graph, d: &PathDecomposition) -> Result<ValidationReport> {
    validate(g, &d.to_tree())
}
