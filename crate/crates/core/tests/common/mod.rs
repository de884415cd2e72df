//! Brute-force reference implementations, written directly from the
//! definitions and sharing no code with the library.
#![allow(dead_code)]

use linetw_core::{Graph, MultipartiteSpec};
use proptest::prelude::*;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for e in g.edges() {
        adj[e.u][e.v] = true;
        adj[e.v][e.u] = true;
    }
    adj
}

/// Calls `f` on every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    f(&p);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Width of an elimination ordering on an explicit fill matrix.
pub fn elimination_width(g: &Graph, order: &[usize]) -> usize {
    let mut adj = adjacency(g);
    let n = order.len();
    let mut gone = vec![false; n];
    let mut width = 0;
    for &x in order {
        let nb: Vec<usize> = (0..n).filter(|&y| !gone[y] && adj[x][y]).collect();
        width = width.max(nb.len());
        for &a in &nb {
            for &b in &nb {
                if a != b {
                    adj[a][b] = true;
                }
            }
        }
        gone[x] = true;
    }
    width
}

pub fn separation(g: &Graph, layout: &[usize]) -> usize {
    let adj = adjacency(g);
    let n = layout.len();
    (0..n)
        .map(|i| {
            layout[..=i]
                .iter()
                .filter(|&&x| layout[i + 1..].iter().any(|&y| adj[x][y]))
                .count()
        })
        .max()
        .unwrap_or(0)
}

pub fn brute_treewidth(g: &Graph) -> usize {
    let mut best = usize::MAX;
    for_each_permutation(g.vertex_count(), |p| best = best.min(elimination_width(g, p)));
    if g.vertex_count() == 0 {
        0
    } else {
        best
    }
}

pub fn brute_pathwidth(g: &Graph) -> usize {
    let mut best = usize::MAX;
    for_each_permutation(g.vertex_count(), |p| best = best.min(separation(g, p)));
    if g.vertex_count() == 0 {
        0
    } else {
        best
    }
}

/// Component sizes of `g` minus the flagged edges, and the component of
/// each vertex, by repeated flooding.
pub fn components(g: &Graph, removed: &[bool]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for (i, e) in g.edges().iter().enumerate() {
                if removed[i] || !(e.u == x || e.v == x) {
                    continue;
                }
                let y = if e.u == x { e.v } else { e.u };
                if label[y] == usize::MAX {
                    label[y] = next;
                    stack.push(y);
                }
            }
        }
        next += 1;
    }
    label
}

/// Canonical hitting-set test straight from the component condition.
pub fn hits_canonical(g: &Graph, removed: &[bool], v: usize) -> bool {
    let n = g.vertex_count();
    let label = components(g, removed);
    let size = |l: usize| label.iter().filter(|&&m| m == l).count();
    label.iter().all(|&l| 2 * size(l) <= n) && !(n.is_multiple_of(2) && 2 * size(label[v]) == n)
}

/// Minimum canonical hitting set over all edge subsets.
pub fn brute_min_hitting_set(g: &Graph, v: usize) -> usize {
    let m = g.edge_count();
    (0u32..1 << m)
        .filter(|mask| {
            let removed: Vec<bool> = (0..m).map(|i| mask >> i & 1 == 1).collect();
            hits_canonical(g, &removed, v)
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .expect("removing every edge always hits")
}

/// Checks the three decomposition axioms directly.
pub fn brute_is_decomposition(g: &Graph, bags: &[Vec<usize>], tree: &[(usize, usize)]) -> bool {
    let n = g.vertex_count();
    let covered = |x: usize| bags.iter().any(|b| b.contains(&x));
    let edges_ok = g
        .edges()
        .iter()
        .all(|e| bags.iter().any(|b| b.contains(&e.u) && b.contains(&e.v)));
    let connected = |x: usize| {
        let nodes: Vec<usize> = (0..bags.len()).filter(|&i| bags[i].contains(&x)).collect();
        let mut seen = vec![nodes[0]];
        let mut grew = true;
        while grew {
            grew = false;
            for &(a, b) in tree {
                for (p, q) in [(a, b), (b, a)] {
                    if seen.contains(&p) && nodes.contains(&q) && !seen.contains(&q) {
                        seen.push(q);
                        grew = true;
                    }
                }
            }
        }
        seen.len() == nodes.len()
    };
    (0..n).all(covered) && edges_ok && (0..n).all(connected)
}

pub fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2),
            )
        })
        .prop_map(|(n, bits)| {
            let mut pairs = Vec::new();
            let mut it = bits.into_iter();
            for a in 0..n {
                for b in a + 1..n {
                    if it.next().unwrap() {
                        pairs.push((a, b));
                    }
                }
            }
            Graph::new(n, pairs).unwrap()
        })
}

/// Specs with `k` in `1..=max_k`, parts in `1..=max_part` and at most
/// `max_n` vertices.
pub fn spec_strategy(max_k: usize, max_part: usize, max_n: usize) -> impl Strategy<Value = MultipartiteSpec> {
    proptest::collection::vec(1..=max_part, 1..=max_k)
        .prop_filter("too many vertices", move |p| p.iter().sum::<usize>() <= max_n)
        .prop_map(|p| MultipartiteSpec::new(p).unwrap())
}

/// Every non-increasing part list with total at most `max_n`.
pub fn all_sorted_specs(max_n: usize) -> Vec<MultipartiteSpec> {
    fn go(left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for p in (1..=cap.min(left)).rev() {
            cur.push(p);
            go(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max_n, max_n, &mut Vec::new(), &mut out);
    out.into_iter().map(|p| MultipartiteSpec::new(p).unwrap()).collect()
}
