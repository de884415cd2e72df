//! Exact treewidth and pathwidth of small graphs by dynamic programming over
//! vertex subsets, with replayable witnesses.
//!
//! Treewidth uses elimination orderings: for a set `S` of already eliminated
//! vertices, eliminating `x` next costs `|Q(S, x)|`, the number of vertices
//! outside `S ∪ {x}` reachable from `x` through `S`. Pathwidth uses the
//! vertex separation number of linear layouts. Both tables hold `2^n` bytes.

use alloc::vec;
use alloc::vec::Vec;

use crate::decomp::{PathDecomposition, TreeDecomposition};
use crate::graph::Graph;
use crate::{Error, Result};

/// Default vertex budget of the oracles; covers `L(K_7)` (21 vertices).
pub const ORACLE_BUDGET: usize = 22;
/// Hard ceiling regardless of the requested budget (`2^28` byte tables).
pub const ORACLE_MAX_VERTICES: usize = 28;

const UNSET: u8 = u8::MAX;

/// An exact width together with the ordering that attains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub value: usize,
    /// Elimination ordering (treewidth) or linear layout (pathwidth).
    pub witness: Vec<usize>,
}

fn masks_within(g: &Graph, budget: usize) -> Result<Vec<u32>> {
    let n = g.vertex_count();
    let limit = budget.min(ORACLE_MAX_VERTICES);
    if n > limit {
        return Err(Error::BudgetExceeded { size: n, budget: limit });
    }
    Ok(g.neighbour_masks()
        .expect("n <= 28")
        .into_iter()
        .map(|m| m as u32)
        .collect())
}

/// Exact treewidth with the default budget.
pub fn exact_treewidth(g: &Graph) -> Result<OracleResult> {
    exact_treewidth_within(g, ORACLE_BUDGET)
}

/// Exact treewidth for graphs of at most `budget` vertices.
pub fn exact_treewidth_within(g: &Graph, budget: usize) -> Result<OracleResult> {
    let adj = masks_within(g, budget)?;
    let n = adj.len();
    if n == 0 {
        return Ok(OracleResult {
            value: 0,
            witness: Vec::new(),
        });
    }
    let (upper, heuristic) = min_degree_ordering(g);
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };

    // best[S]: least width of eliminating exactly S first, if below `upper`.
    let mut best = vec![UNSET; 1usize << n];
    best[0] = 0;
    let mut components: Vec<(u32, u32)> = Vec::with_capacity(n);
    for s in 0..full {
        let here = best[s as usize];
        if here == UNSET {
            continue;
        }
        components_of(&adj, s, &mut components);
        let mut rest = full & !s;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let q = elimination_neighbourhood(&adj, &components, s, x).count_ones() as u8;
            let cost = here.max(q);
            if (cost as usize) < upper {
                let t = (s | 1 << x) as usize;
                if cost < best[t] {
                    best[t] = cost;
                }
            }
        }
    }

    if best[full as usize] == UNSET {
        return Ok(OracleResult {
            value: upper,
            witness: heuristic,
        });
    }
    let value = best[full as usize];
    // Walk back from the full set, always taking the smallest feasible vertex.
    let mut witness = Vec::with_capacity(n);
    let mut t = full;
    while t != 0 {
        let mut bits = t;
        let mut chosen = None;
        while bits != 0 {
            let x = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let s = t & !(1 << x);
            if best[s as usize] == UNSET || best[s as usize] > value {
                continue;
            }
            components_of(&adj, s, &mut components);
            if elimination_neighbourhood(&adj, &components, s, x).count_ones() as u8 <= value {
                chosen = Some(x);
                break;
            }
        }
        let x = chosen.expect("table entry has a predecessor");
        witness.push(x);
        t &= !(1 << x);
    }
    witness.reverse();
    Ok(OracleResult {
        value: value as usize,
        witness,
    })
}

/// Components of `G[s]` as `(vertices, neighbourhood)` bitmask pairs.
fn components_of(adj: &[u32], s: u32, out: &mut Vec<(u32, u32)>) {
    out.clear();
    let mut left = s;
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        let mut frontier = comp;
        let mut nbr = 0u32;
        while frontier != 0 {
            let mut grown = 0u32;
            let mut bits = frontier;
            while bits != 0 {
                let x = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                grown |= adj[x];
            }
            nbr |= grown;
            frontier = grown & s & !comp;
            comp |= frontier;
        }
        out.push((comp, nbr & !s));
        left &= !comp;
    }
}

/// `Q(s, x)`: vertices outside `s ∪ {x}` reachable from `x` through `s`.
fn elimination_neighbourhood(adj: &[u32], components: &[(u32, u32)], s: u32, x: usize) -> u32 {
    let mut q = adj[x];
    for &(comp, nbr) in components {
        if comp & adj[x] != 0 {
            q |= nbr;
        }
    }
    q & !s & !(1 << x)
}

/// Greedy minimum-degree elimination: an upper bound and its ordering.
fn min_degree_ordering(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    let mut adj: Vec<Vec<bool>> = vec![vec![false; n]; n];
    for e in g.edges() {
        adj[e.u][e.v] = true;
        adj[e.v][e.u] = true;
    }
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    let mut width = 0;
    for _ in 0..n {
        let x = (0..n)
            .filter(|&x| alive[x])
            .min_by_key(|&x| ((0..n).filter(|&y| alive[y] && adj[x][y]).count(), x))
            .expect("a vertex is left");
        let nb: Vec<usize> = (0..n).filter(|&y| alive[y] && adj[x][y]).collect();
        width = width.max(nb.len());
        for &a in &nb {
            for &b in &nb {
                if a != b {
                    adj[a][b] = true;
                }
            }
        }
        alive[x] = false;
        order.push(x);
    }
    (width, order)
}

/// Exact pathwidth with the default budget.
pub fn exact_pathwidth(g: &Graph) -> Result<OracleResult> {
    exact_pathwidth_within(g, ORACLE_BUDGET)
}

/// Exact pathwidth (vertex separation number) for graphs of at most
/// `budget` vertices.
pub fn exact_pathwidth_within(g: &Graph, budget: usize) -> Result<OracleResult> {
    let adj = masks_within(g, budget)?;
    let n = adj.len();
    if n == 0 {
        return Ok(OracleResult {
            value: 0,
            witness: Vec::new(),
        });
    }
    let full: u32 = (1u32 << n) - 1;
    let boundary = |t: u32| -> u8 {
        let mut count = 0;
        let mut bits = t;
        while bits != 0 {
            let x = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if adj[x] & !t != 0 {
                count += 1;
            }
        }
        count
    };
    // sep[T]: least max boundary over layouts whose prefix set is T.
    let mut sep = vec![0u8; 1usize << n];
    for t in 1..=full {
        let mut inner = u8::MAX;
        let mut bits = t;
        while bits != 0 {
            let x = bits.trailing_zeros();
            bits &= bits - 1;
            inner = inner.min(sep[(t & !(1 << x)) as usize]);
        }
        sep[t as usize] = inner.max(boundary(t));
    }
    let value = sep[full as usize];
    let mut layout = Vec::with_capacity(n);
    let mut t = full;
    while t != 0 {
        let mut bits = t;
        let x = loop {
            let x = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if sep[(t & !(1 << x)) as usize] <= value {
                break x;
            }
        };
        layout.push(x);
        t &= !(1 << x);
    }
    layout.reverse();
    Ok(OracleResult {
        value: value as usize,
        witness: layout,
    })
}

fn check_permutation(n: usize, order: &[usize]) -> Result<()> {
    if order.len() != n {
        return Err(Error::NotAPermutation);
    }
    let mut seen = vec![false; n];
    for &x in order {
        if x >= n || core::mem::replace(&mut seen[x], true) {
            return Err(Error::NotAPermutation);
        }
    }
    Ok(())
}

/// Eliminates vertices in `order`, turning each vertex's not-yet-eliminated
/// neighbourhood into a clique, and returns the largest such neighbourhood.
pub fn width_of_elimination(g: &Graph, order: &[usize]) -> Result<usize> {
    Ok(elimination_bags(g, order)?
        .iter()
        .map(|bag| bag.len() - 1)
        .max()
        .unwrap_or(0))
}

/// For each position, the eliminated vertex followed by its higher
/// neighbours at elimination time.
fn elimination_bags(g: &Graph, order: &[usize]) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    check_permutation(n, order)?;
    let mut position = vec![0; n];
    for (i, &x) in order.iter().enumerate() {
        position[x] = i;
    }
    let mut higher: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in g.edges() {
        let (a, b) = if position[e.u] < position[e.v] {
            (e.u, e.v)
        } else {
            (e.v, e.u)
        };
        higher[a].push(b);
    }
    let mut bags = Vec::with_capacity(n);
    for &x in order {
        let mut nb = core::mem::take(&mut higher[x]);
        nb.sort_unstable_by_key(|&y| position[y]);
        nb.dedup();
        // Fill: the earliest higher neighbour inherits the others.
        if let Some((&first, rest)) = nb.split_first() {
            higher[first].extend(rest.iter().copied());
        }
        let mut bag = vec![x];
        bag.extend(nb);
        bags.push(bag);
    }
    Ok(bags)
}

/// Tree decomposition induced by an elimination ordering: one bag per
/// vertex, attached to the bag of its earliest higher neighbour.
pub fn elimination_decomposition(g: &Graph, order: &[usize]) -> Result<TreeDecomposition> {
    let bags = elimination_bags(g, order)?;
    let n = bags.len();
    if n == 0 {
        return TreeDecomposition::new(vec![Vec::new()], Vec::new());
    }
    let mut position = vec![0; n];
    for (i, &x) in order.iter().enumerate() {
        position[x] = i;
    }
    // Parentless bags (component roots) chain onto the next bag, which
    // keeps the tree connected without breaking any subtree.
    let edges = bags[..n - 1]
        .iter()
        .enumerate()
        .map(|(i, bag)| (i, bag.get(1).map_or(i + 1, |&y| position[y])))
        .collect();
    TreeDecomposition::new(bags, edges)
}

/// Vertex separation of a layout: the largest number of placed vertices
/// with a neighbour not yet placed, over all prefixes.
pub fn vertex_separation(g: &Graph, layout: &[usize]) -> Result<usize> {
    let n = g.vertex_count();
    check_permutation(n, layout)?;
    let mut position = vec![0; n];
    for (i, &x) in layout.iter().enumerate() {
        position[x] = i;
    }
    // Vertex x is on the boundary for prefixes ending at i in
    // [position[x], last neighbour position).
    let mut worst = 0;
    for i in 0..n {
        let count = (0..n)
            .filter(|&x| position[x] <= i && g.neighbours(x).iter().any(|&y| position[y] > i))
            .count();
        worst = worst.max(count);
    }
    Ok(worst)
}

/// Path decomposition of a layout: bag `i` holds `layout[i]` and every
/// earlier vertex with a neighbour at position `i` or later.
pub fn layout_decomposition(g: &Graph, layout: &[usize]) -> Result<PathDecomposition> {
    let n = g.vertex_count();
    check_permutation(n, layout)?;
    if n == 0 {
        return Ok(PathDecomposition::new(vec![Vec::new()]));
    }
    let mut position = vec![0; n];
    for (i, &x) in layout.iter().enumerate() {
        position[x] = i;
    }
    let bags = (0..n)
        .map(|i| {
            let mut bag: Vec<usize> = layout[..i]
                .iter()
                .copied()
                .filter(|&x| g.neighbours(x).iter().any(|&y| position[y] >= i))
                .collect();
            bag.push(layout[i]);
            bag
        })
        .collect();
    Ok(PathDecomposition::new(bags))
}
