//! Canonical line-brambles and their hitting sets.
//!
//! For a vertex `v` of `G` with `n >= 3`, the canonical line-bramble holds
//! every connected subgraph on more than `n/2` vertices and every connected
//! subgraph on exactly `n/2` vertices containing `v`. An edge set `H` hits it
//! iff every component of `G - H` has at most `n/2` vertices and `v`'s
//! component does not have exactly `n/2`. Its order lower-bounds
//! `bn(L(G)) = tw(L(G)) + 1`.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, MultipartiteSpec};
use crate::{Error, Result};

/// Default vertex budget of [`min_canonical_hitting_set`].
pub const HITTING_SET_BUDGET: usize = 10;
/// Default vertex budget of [`enumerate_bramble`].
pub const BRAMBLE_BUDGET: usize = 8;

/// A set of edges of `G` (by canonical index) plus the bramble's vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingSet {
    edges: Vec<usize>,
    v: usize,
}

impl HittingSet {
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = usize>, v: usize) -> Result<Self> {
        let mut edges: Vec<usize> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        if edges.last().is_some_and(|&e| e >= g.edge_count()) {
            return Err(Error::InvalidGraph("hitting set names a missing edge"));
        }
        if v >= g.vertex_count() {
            return Err(Error::InvalidGraph("distinguished vertex out of range"));
        }
        Ok(HittingSet { edges, v })
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    fn removed_flags(&self, edge_count: usize) -> Vec<bool> {
        let mut flags = vec![false; edge_count];
        for &e in &self.edges {
            flags[e] = true;
        }
        flags
    }
}

/// Component-size characterization of hitting the canonical line-bramble
/// for `h.v()`.
pub fn is_canonical_hitting_set(g: &Graph, h: &HittingSet) -> Result<bool> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::UnsupportedShape(
            "canonical line-bramble needs at least three vertices",
        ));
    }
    if h.edges.last().is_some_and(|&e| e >= g.edge_count()) || h.v >= n {
        return Err(Error::InvalidGraph("hitting set does not belong to this graph"));
    }
    let labels = g.components_without(&h.removed_flags(g.edge_count()));
    let mut sizes = vec![0usize; n];
    for &l in &labels {
        sizes[l] += 1;
    }
    let too_big = sizes.iter().any(|&s| 2 * s > n);
    let v_at_half = n.is_multiple_of(2) && 2 * sizes[labels[h.v]] == n;
    Ok(!too_big && !v_at_half)
}

/// An optimal hitting set found by [`min_canonical_hitting_set`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinHittingSet {
    /// Order of the canonical line-bramble.
    pub size: usize,
    pub v: usize,
    /// Part label of each vertex, as a restricted growth string
    /// (vertex 0 in part 0, each new part numbered next).
    pub assignment: Vec<usize>,
    /// Crossing edges of the witness partition, by canonical edge index.
    pub edges: Vec<usize>,
}

impl MinHittingSet {
    /// Witness parts, each ascending.
    pub fn parts(&self) -> Vec<Vec<usize>> {
        let count = self.assignment.iter().copied().max().map_or(0, |m| m + 1);
        let mut parts = vec![Vec::new(); count];
        for (x, &p) in self.assignment.iter().enumerate() {
            parts[p].push(x);
        }
        parts
    }

    /// `size - 1`, a certified lower bound on `tw(L(G))`.
    pub fn treewidth_lower_bound(&self) -> usize {
        self.size.saturating_sub(1)
    }
}

/// Exact order of the canonical line-bramble of `K_{n_1,...,n_k}` for `v`,
/// by exhaustive search over vertex partitions into parts of at most
/// `floor(n/2)` vertices (and fewer than `n/2` for `v`'s part when `n` is
/// even), minimizing the number of crossing edges.
///
/// Restricting to partitions loses nothing: an optimal `H` never has both
/// endpoints of an edge in one component of `G - H`, so `H` is exactly the
/// crossing set of the component partition. Among optima the
/// lexicographically smallest assignment is returned.
pub fn min_canonical_hitting_set(spec: &MultipartiteSpec, v: usize, budget: usize) -> Result<MinHittingSet> {
    let n = spec.n();
    if n < 3 {
        return Err(Error::UnsupportedShape(
            "canonical line-bramble needs at least three vertices",
        ));
    }
    if n > budget {
        return Err(Error::BudgetExceeded { size: n, budget });
    }
    if v >= n {
        return Err(Error::Domain("distinguished vertex out of range"));
    }
    let colour: Vec<usize> = (0..n).map(|x| spec.class_of(x).expect("in range")).collect();
    let mut search = PartitionSearch {
        n,
        v,
        cap: n / 2,
        v_cap: if n.is_multiple_of(2) { n / 2 - 1 } else { n / 2 },
        k: spec.k(),
        edge_count: spec.cross_pairs(),
        colour,
        assignment: vec![0; n],
        sizes: Vec::new(),
        tallies: Vec::new(),
        best: usize::MAX,
        best_assignment: Vec::new(),
    };
    search.descend(0, 0);
    let g = crate::graph::complete_multipartite(spec);
    let edges = crate::constructions::crossing_edges(&g, &search.best_assignment)?;
    debug_assert_eq!(edges.len(), search.best);
    Ok(MinHittingSet {
        size: search.best,
        v,
        assignment: search.best_assignment,
        edges,
    })
}

/// [`min_canonical_hitting_set`] for the first vertex of a largest class.
pub fn min_canonical_hitting_set_default(spec: &MultipartiteSpec) -> Result<MinHittingSet> {
    min_canonical_hitting_set(spec, spec.default_vertex(), HITTING_SET_BUDGET)
}

struct PartitionSearch {
    n: usize,
    v: usize,
    cap: usize,
    v_cap: usize,
    k: usize,
    edge_count: usize,
    colour: Vec<usize>,
    assignment: Vec<usize>,
    sizes: Vec<usize>,
    /// `tallies[p * k + c]`: vertices of colour `c` in part `p`.
    tallies: Vec<usize>,
    best: usize,
    best_assignment: Vec<usize>,
}

impl PartitionSearch {
    /// Assigns vertex `x` onward; `internal` counts edges inside parts so far.
    fn descend(&mut self, x: usize, internal: usize) {
        if x == self.n {
            let crossing = self.edge_count - internal;
            if crossing < self.best {
                self.best = crossing;
                self.best_assignment = self.assignment.clone();
            }
            return;
        }
        // Every later vertex adds at most cap - 1 internal edges.
        let optimistic = internal + (self.n - x) * (self.cap.saturating_sub(1));
        if self.edge_count.saturating_sub(optimistic) >= self.best {
            return;
        }
        let c = self.colour[x];
        let v_part = if x > self.v {
            Some(self.assignment[self.v])
        } else {
            None
        };
        let parts = self.sizes.len();
        for p in 0..=parts {
            let size = if p < parts { self.sizes[p] } else { 0 };
            let limit = if x == self.v || v_part == Some(p) {
                self.v_cap
            } else {
                self.cap
            };
            if size + 1 > limit {
                continue;
            }
            if p == parts {
                self.sizes.push(0);
                self.tallies.extend(core::iter::repeat_n(0, self.k));
            }
            let gained = self.sizes[p] - self.tallies[p * self.k + c];
            self.sizes[p] += 1;
            self.tallies[p * self.k + c] += 1;
            self.assignment[x] = p;
            self.descend(x + 1, internal + gained);
            self.sizes[p] -= 1;
            self.tallies[p * self.k + c] -= 1;
            if p == parts {
                self.sizes.pop();
                self.tallies.truncate(parts * self.k);
            }
        }
    }
}

/// Vertex set of one element of the canonical line-bramble. Every connected
/// subgraph of `G` spanning these vertices belongs to the bramble.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrambleElement {
    mask: u64,
}

impl BrambleElement {
    pub fn vertices(&self) -> Vec<usize> {
        (0..64).filter(|&x| self.mask >> x & 1 == 1).collect()
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, x: usize) -> bool {
        x < 64 && self.mask >> x & 1 == 1
    }

    /// Edges of `G[S]`, i.e. the vertices of `L(G)` the element maps to.
    pub fn line_vertices(&self, g: &Graph) -> Vec<usize> {
        g.edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| self.contains(e.u) && self.contains(e.v))
            .map(|(i, _)| i)
            .collect()
    }

    /// True when `G[S] - h` is disconnected, i.e. every connected spanning
    /// subgraph of `G[S]` uses an edge of `h`.
    pub fn is_hit_by(&self, g: &Graph, h: &HittingSet) -> bool {
        let mut removed = vec![false; g.edge_count()];
        for &e in h.edges() {
            removed[e] = true;
        }
        let mut adj = vec![0u64; g.vertex_count()];
        for (i, e) in g.edges().iter().enumerate() {
            if !removed[i] && self.contains(e.u) && self.contains(e.v) {
                adj[e.u] |= 1 << e.v;
                adj[e.v] |= 1 << e.u;
            }
        }
        connected_within(&adj, self.mask) != self.mask
    }
}

/// Vertices reachable from the lowest vertex of `mask` inside `mask`.
fn connected_within(adj: &[u64], mask: u64) -> u64 {
    if mask == 0 {
        return 0;
    }
    let mut reach = mask & mask.wrapping_neg();
    loop {
        let mut next = reach;
        let mut bits = reach;
        while bits != 0 {
            let x = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= adj[x] & mask;
        }
        if next == reach {
            return reach;
        }
        reach = next;
    }
}

/// Every vertex set `S` of the canonical line-bramble for `v`: `G[S]`
/// connected and `|S| > n/2`, or `|S| = n/2` with `v ∈ S`. Sets are listed
/// by ascending bitmask.
pub fn enumerate_bramble(g: &Graph, v: usize, budget: usize) -> Result<Vec<BrambleElement>> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::UnsupportedShape(
            "canonical line-bramble needs at least three vertices",
        ));
    }
    if n > budget || n >= 64 {
        return Err(Error::BudgetExceeded { size: n, budget });
    }
    if v >= n {
        return Err(Error::Domain("distinguished vertex out of range"));
    }
    let adj = g.neighbour_masks().expect("n < 64");
    let out = (1u64..1 << n)
        .filter(|&mask| {
            let size = mask.count_ones() as usize;
            2 * size > n || (2 * size == n && mask >> v & 1 == 1)
        })
        .filter(|&mask| connected_within(&adj, mask) == mask)
        .map(|mask| BrambleElement { mask })
        .collect();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::crossing_edges;
    use crate::graph::complete_multipartite;

    fn spec(parts: &[usize]) -> MultipartiteSpec {
        MultipartiteSpec::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn all_edges_always_hit() {
        for parts in [&[1, 1, 1][..], &[2, 2], &[1, 2, 3]] {
            let g = complete_multipartite(&spec(parts));
            for v in 0..g.vertex_count() {
                let h = HittingSet::new(&g, 0..g.edge_count(), v).unwrap();
                assert!(is_canonical_hitting_set(&g, &h).unwrap());
            }
        }
    }

    #[test]
    fn empty_set_does_not_hit_k4() {
        let g = Graph::complete(4);
        let h = HittingSet::new(&g, [], 0).unwrap();
        assert!(!is_canonical_hitting_set(&g, &h).unwrap());
    }

    #[test]
    fn k5_tri_partition_hits() {
        let g = Graph::complete(5);
        let edges = crossing_edges(&g, &[0, 0, 1, 1, 2]).unwrap();
        let h = HittingSet::new(&g, edges, 0).unwrap();
        assert_eq!(h.len(), 8);
        assert!(is_canonical_hitting_set(&g, &h).unwrap());
    }

    #[test]
    fn v_may_not_sit_in_a_half_component() {
        // K_4 split {0,1} | {2} | {3}: fine for v = 2, not for v = 0.
        let g = Graph::complete(4);
        let edges = crossing_edges(&g, &[0, 0, 1, 2]).unwrap();
        assert!(is_canonical_hitting_set(&g, &HittingSet::new(&g, edges.clone(), 2).unwrap()).unwrap());
        assert!(!is_canonical_hitting_set(&g, &HittingSet::new(&g, edges, 0).unwrap()).unwrap());
    }

    #[test]
    fn small_graphs_are_rejected() {
        let g = Graph::complete(2);
        let h = HittingSet::new(&g, [0], 0).unwrap();
        assert!(is_canonical_hitting_set(&g, &h).is_err());
        assert!(enumerate_bramble(&g, 0, 8).is_err());
        assert!(min_canonical_hitting_set(&spec(&[1, 1]), 0, 10).is_err());
    }

    #[test]
    fn hitting_set_rejects_foreign_edges() {
        let g = Graph::complete(3);
        assert!(HittingSet::new(&g, [3], 0).is_err());
        assert!(HittingSet::new(&g, [0], 3).is_err());
    }

    #[test]
    fn min_orders_of_complete_graphs() {
        assert_eq!(min_canonical_hitting_set_default(&spec(&[1; 3])).unwrap().size, 3);
        assert_eq!(min_canonical_hitting_set_default(&spec(&[1; 4])).unwrap().size, 5);
        assert_eq!(min_canonical_hitting_set_default(&spec(&[1; 5])).unwrap().size, 8);
    }

    #[test]
    fn min_order_of_c4() {
        let m = min_canonical_hitting_set_default(&spec(&[2, 2])).unwrap();
        assert_eq!(m.size, 3);
        assert_eq!(m.edges.len(), 3);
        assert_eq!(m.treewidth_lower_bound(), 2);
    }

    #[test]
    fn witness_is_a_valid_hitting_set() {
        for parts in [&[2, 3][..], &[1, 2, 3], &[3, 3], &[2, 2, 2]] {
            let s = spec(parts);
            let g = complete_multipartite(&s);
            let m = min_canonical_hitting_set_default(&s).unwrap();
            let h = HittingSet::new(&g, m.edges.clone(), m.v).unwrap();
            assert!(is_canonical_hitting_set(&g, &h).unwrap(), "{parts:?}");
            assert_eq!(m.parts().iter().map(Vec::len).sum::<usize>(), s.n());
            assert_eq!(m.assignment[0], 0);
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(
            min_canonical_hitting_set(&spec(&[1; 11]), 0, 10),
            Err(Error::BudgetExceeded { size: 11, budget: 10 })
        );
        assert!(enumerate_bramble(&Graph::complete(9), 0, 8).is_err());
    }

    #[test]
    fn bramble_of_triangle() {
        let g = Graph::complete(3);
        for v in 0..3 {
            let b = enumerate_bramble(&g, v, 8).unwrap();
            let mut sizes: Vec<usize> = b.iter().map(BrambleElement::len).collect();
            sizes.sort();
            assert_eq!(sizes, vec![2, 2, 2, 3]);
        }
    }

    #[test]
    fn bramble_of_k4_for_vertex_0() {
        let b = enumerate_bramble(&Graph::complete(4), 0, 8).unwrap();
        // Independent count: pairs containing 0, plus all triples and the
        // whole set.
        let expected: Vec<u64> = (1u64..16)
            .filter(|m| m.count_ones() >= 3 || (m.count_ones() == 2 && m & 1 == 1))
            .collect();
        let got: Vec<u64> = b.iter().map(|e| e.mask).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn bramble_of_c4_for_vertex_0() {
        // Classes {0,1} and {2,3}; {0,1} is not connected.
        let g = complete_multipartite(&spec(&[2, 2]));
        let b = enumerate_bramble(&g, 0, 8).unwrap();
        let got: Vec<Vec<usize>> = b.iter().map(BrambleElement::vertices).collect();
        assert_eq!(
            got,
            vec![
                vec![0, 2],
                vec![0, 1, 2],
                vec![0, 3],
                vec![0, 1, 3],
                vec![0, 2, 3],
                vec![1, 2, 3],
                vec![0, 1, 2, 3],
            ]
        );
    }

    #[test]
    fn elements_map_to_a_bramble_of_the_line_graph() {
        let g = complete_multipartite(&spec(&[1, 2, 2]));
        let (lg, _) = crate::graph::line_graph(&g);
        let b = enumerate_bramble(&g, 1, 8).unwrap();
        let sets: Vec<Vec<usize>> = b.iter().map(|e| e.line_vertices(&g)).collect();
        for a in &sets {
            assert!(!a.is_empty());
            for c in &sets {
                let touch = a.iter().any(|x| c.contains(x) || c.iter().any(|&y| lg.has_edge(*x, y)));
                assert!(touch);
            }
        }
    }
}
