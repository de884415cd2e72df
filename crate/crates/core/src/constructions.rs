//! Explicit path decompositions of `L(K_n)` and `L(K_{n_1,...,n_k})`.
//!
//! The multipartite construction splits `V(G)` into two large parts `Q1`,
//! `Q2` and a single vertex `z`. The crossing edges form the middle bag
//! `gamma`; bags `beta_|Q2|, ..., beta_1` sit to its left and
//! `alpha_1, ..., alpha_|Q1|` to its right. Which vertex of a part is
//! "first" is fixed by a [`VertexOrdering`].

use alloc::vec;
use alloc::vec::Vec;

use crate::decomp::PathDecomposition;
use crate::graph::{complete_multipartite, Graph, MultipartiteSpec};
use crate::{Error, Result};

/// Path decomposition of `L(K_n)` with bags
/// `A_i = {ij : j in V} ∪ {uw : u < i < w}`.
///
/// Line-graph vertices are edge indices of [`Graph::complete`]`(n)`. Edge
/// `uw` (with `u < w`) lies in exactly the bags `A_u, ..., A_w`.
pub fn kn_decomposition(n: usize) -> PathDecomposition {
    if n == 0 {
        return PathDecomposition::new(vec![Vec::new()]);
    }
    let g = Graph::complete(n);
    let bags = (0..n)
        .map(|i| {
            g.edges()
                .iter()
                .enumerate()
                .filter(|(_, e)| e.u <= i && i <= e.v)
                .map(|(idx, _)| idx)
                .collect()
        })
        .collect();
    PathDecomposition::new(bags)
}

/// Which of the three parts a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    Q1,
    Q2,
    Q3,
}

impl Part {
    pub fn index(self) -> usize {
        match self {
            Part::Q1 => 0,
            Part::Q2 => 1,
            Part::Q3 => 2,
        }
    }
}

/// How a colour class not containing `z` splits across `Q1` and `Q2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Skew {
    Balanced,
    Q1Skew,
    Q2Skew,
}

/// The `(Q1, Q2, {z})` partition of a good labelling, together with the
/// distinguished vertex `v` of the canonical line-bramble.
///
/// Construction through [`TriPartition::new`] enforces:
///
/// - the three parts cover `V(G)` and are disjoint;
/// - `|Q1| = |Q2| = (n-1)/2` for odd `n`, `|Q1| = n/2` and `|Q2| = n/2 - 1`
///   for even `n`;
/// - every class `X_i` has `ceil((n_i-2)/2) <= |Q_j ∩ X_i| <= floor((n_i+1)/2)`
///   for `j = 1, 2`;
/// - `z != v` implies `z` and `v` have different colours;
/// - `v` lies in a largest colour class, and not in `Q1` when `n` is even.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriPartition {
    q1: Vec<usize>,
    q2: Vec<usize>,
    z: usize,
    v: usize,
}

impl TriPartition {
    pub fn new(spec: &MultipartiteSpec, mut q1: Vec<usize>, mut q2: Vec<usize>, z: usize, v: usize) -> Result<Self> {
        let n = spec.n();
        q1.sort_unstable();
        q2.sort_unstable();
        let mut seen = vec![false; n];
        for &x in q1.iter().chain(q2.iter()).chain(core::iter::once(&z)) {
            if x >= n {
                return Err(Error::InvalidPartition("vertex out of range"));
            }
            if core::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPartition("parts overlap"));
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::InvalidPartition("parts do not cover the vertex set"));
        }
        if v >= n {
            return Err(Error::InvalidPartition("distinguished vertex out of range"));
        }
        let (want1, want2) = if n % 2 == 1 {
            ((n - 1) / 2, (n - 1) / 2)
        } else {
            (n / 2, n / 2 - 1)
        };
        if q1.len() != want1 || q2.len() != want2 {
            return Err(Error::InvalidPartition("part sizes do not match the parity of n"));
        }
        if q2.is_empty() {
            return Err(Error::InvalidPartition("Q2 is empty"));
        }
        let p = TriPartition { q1, q2, z, v };
        for class in 0..spec.k() {
            let size = spec.parts()[class];
            let lo = size.saturating_sub(1) / 2; // ceil((size - 2) / 2), clamped at 0
            let hi = size.div_ceil(2);
            let (a, b, _) = p.class_split(spec, class);
            if a < lo || a > hi || b < lo || b > hi {
                return Err(Error::InvalidPartition("colour class split outside the allowed range"));
            }
        }
        let class_v = spec.class_of(v);
        if z != v && spec.class_of(z) == class_v {
            return Err(Error::InvalidPartition("z shares the colour class of v"));
        }
        if class_v.map(|c| spec.parts()[c]) != spec.parts().iter().copied().max() {
            return Err(Error::InvalidPartition("v is not in a largest colour class"));
        }
        if n.is_multiple_of(2) && p.q1.binary_search(&v).is_ok() {
            return Err(Error::InvalidPartition("v lies in Q1 although n is even"));
        }
        Ok(p)
    }

    /// `Q1`, ascending.
    pub fn q1(&self) -> &[usize] {
        &self.q1
    }

    /// `Q2`, ascending.
    pub fn q2(&self) -> &[usize] {
        &self.q2
    }

    pub fn z(&self) -> usize {
        self.z
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn vertex_count(&self) -> usize {
        self.q1.len() + self.q2.len() + 1
    }

    pub fn part_of(&self, x: usize) -> Option<Part> {
        if x == self.z {
            Some(Part::Q3)
        } else if self.q1.binary_search(&x).is_ok() {
            Some(Part::Q1)
        } else if self.q2.binary_search(&x).is_ok() {
            Some(Part::Q2)
        } else {
            None
        }
    }

    /// Part index (0, 1, 2) of every vertex.
    pub fn assignment(&self) -> Vec<usize> {
        let mut out = vec![2; self.vertex_count()];
        for &x in &self.q1 {
            out[x] = 0;
        }
        for &x in &self.q2 {
            out[x] = 1;
        }
        out
    }

    /// `(|Q1 ∩ X|, |Q2 ∩ X|, |{z} ∩ X|)` for colour class `X = class`.
    pub fn class_split(&self, spec: &MultipartiteSpec, class: usize) -> (usize, usize, usize) {
        let range = spec.class_range(class);
        let a = self.q1.iter().filter(|x| range.contains(x)).count();
        let b = self.q2.iter().filter(|x| range.contains(x)).count();
        (a, b, usize::from(range.contains(&self.z)))
    }

    /// Skew of a class that does not contain `z`; `None` for `z`'s class.
    pub fn skew(&self, spec: &MultipartiteSpec, class: usize) -> Option<Skew> {
        let (a, b, c) = self.class_split(spec, class);
        if c == 1 {
            return None;
        }
        Some(match a.cmp(&b) {
            core::cmp::Ordering::Equal => Skew::Balanced,
            core::cmp::Ordering::Greater => Skew::Q1Skew,
            core::cmp::Ordering::Less => Skew::Q2Skew,
        })
    }
}

/// Deterministic good partition for a complete multipartite spec that is
/// neither complete nor a star.
///
/// Classes are visited in descending size (ties by index). `v` is the first
/// vertex of the first visited class and `z` the first vertex of the last.
/// Every class except `z`'s splits as evenly as possible; of the classes
/// left with an odd number of vertices, the first `a` visited lean towards
/// `Q1` and the rest towards `Q2`, with `a` chosen to hit the target
/// `|Q1| - |Q2|`. Inside a class lower indices go to `Q1` first, except that
/// `v` is placed in `Q2` when `n` is even.
///
/// For regular specs the resulting class splits are exactly those of an
/// optimal hitting set; for other specs they meet the per-class bounds but
/// the crossing set is not claimed minimal.
pub fn good_partition(spec: &MultipartiteSpec) -> Result<TriPartition> {
    if spec.k() < 2 {
        return Err(Error::UnsupportedShape("fewer than two colour classes"));
    }
    if spec.is_complete() {
        return Err(Error::UnsupportedShape("complete graph; use the K_n construction"));
    }
    if spec.is_star() {
        return Err(Error::UnsupportedShape("star; its line graph is a clique"));
    }
    let n = spec.n();
    let mut order: Vec<usize> = (0..spec.k()).collect();
    order.sort_by_key(|&c| (core::cmp::Reverse(spec.parts()[c]), c));
    let v_class = order[0];
    let z_class = order[order.len() - 1];
    let v = spec.class_range(v_class).start;
    let z = spec.class_range(z_class).start;

    let remaining = |c: usize| spec.parts()[c] - usize::from(c == z_class);
    let odd_classes = order.iter().filter(|&&c| remaining(c) % 2 == 1).count();
    // |Q1| - |Q2| must be 0 for odd n and 1 for even n; each odd class adds +1
    // or -1 to that difference.
    let target = 1 - n % 2;
    let lean_q1 = (odd_classes + target) / 2;

    let mut q1 = Vec::new();
    let mut q2 = Vec::new();
    let mut odd_seen = 0;
    for &c in &order {
        let members: Vec<usize> = spec.class_range(c).filter(|&x| x != z).collect();
        let r = members.len();
        let to_q1 = if r.is_multiple_of(2) {
            r / 2
        } else {
            odd_seen += 1;
            if odd_seen <= lean_q1 {
                r.div_ceil(2)
            } else {
                r / 2
            }
        };
        let mut members = members;
        if n.is_multiple_of(2) && c == v_class {
            // Move v behind its classmates so it lands in Q2.
            members.rotate_left(1);
        }
        q1.extend_from_slice(&members[..to_q1]);
        q2.extend_from_slice(&members[to_q1..]);
    }
    TriPartition::new(spec, q1, q2, z, v)
}

/// Indices of the edges of `g` whose endpoints carry different labels in
/// `assignment` (one label per vertex).
pub fn crossing_edges(g: &Graph, assignment: &[usize]) -> Result<Vec<usize>> {
    if assignment.len() != g.vertex_count() {
        return Err(Error::InvalidPartition("assignment length differs from vertex count"));
    }
    Ok(g.edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| assignment[e.u] != assignment[e.v])
        .map(|(i, _)| i)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderingFlavour {
    /// Non-decreasing colour-class size.
    Red,
    /// Type 1, then Type 2, then Type 3 (regular specs only).
    Blue,
}

/// Vertex types of the blue ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum VertexType {
    /// Member of a balanced class, or on the heavy side of a skew class.
    One,
    /// On the light side of a skew class.
    Two,
    /// Member of `z`'s colour class.
    Three,
}

impl VertexType {
    pub fn number(self) -> u8 {
        match self {
            VertexType::One => 1,
            VertexType::Two => 2,
            VertexType::Three => 3,
        }
    }
}

/// Orders `x_1, ..., x_|Q1|` over `Q1` and `y_1, ..., y_|Q2|` over `Q2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrdering {
    pub flavour: OrderingFlavour,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    /// Blue types per vertex; `None` for `z` and for red orderings.
    pub types: Vec<Option<VertexType>>,
}

pub fn make_ordering(spec: &MultipartiteSpec, p: &TriPartition, flavour: OrderingFlavour) -> Result<VertexOrdering> {
    let n = spec.n();
    if p.vertex_count() != n {
        return Err(Error::InvalidPartition("partition does not match the spec"));
    }
    let class = |x: usize| spec.class_of(x).expect("vertex in range");
    let mut x = p.q1.clone();
    let mut y = p.q2.clone();
    let mut types = vec![None; n];
    match flavour {
        OrderingFlavour::Red => {
            x.sort_by_key(|&u| (spec.parts()[class(u)], u));
            y.sort_by_key(|&u| (spec.parts()[class(u)], u));
        }
        OrderingFlavour::Blue => {
            if !spec.is_regular() {
                return Err(Error::UnsupportedShape("blue ordering needs a regular spec"));
            }
            for u in (0..n).filter(|&u| u != p.z) {
                let in_q1 = p.part_of(u) == Some(Part::Q1);
                types[u] = Some(match p.skew(spec, class(u)) {
                    None => VertexType::Three,
                    Some(Skew::Balanced) => VertexType::One,
                    Some(Skew::Q1Skew) if in_q1 => VertexType::One,
                    Some(Skew::Q1Skew) => VertexType::Two,
                    Some(Skew::Q2Skew) if in_q1 => VertexType::Two,
                    Some(Skew::Q2Skew) => VertexType::One,
                });
            }
            x.sort_by_key(|&u| (types[u], u));
            y.sort_by_key(|&u| (types[u], u));
        }
    }
    Ok(VertexOrdering { flavour, x, y, types })
}

/// The `beta_|Q2|, ..., beta_1, gamma, alpha_1, ..., alpha_|Q1|` path
/// decomposition of `L(g)` for a partition and vertex ordering. Bags hold
/// edge indices of `g`.
///
/// `alpha_i` holds every edge `x_l u` with `u ∈ Q1, l <= i` and every edge
/// `x_j w` with `w ∉ Q1, j >= i`; `beta_i` is the same over `Q2`.
pub fn partition_decomposition(g: &Graph, p: &TriPartition, ordering: &VertexOrdering) -> PathDecomposition {
    let n = g.vertex_count();
    let assignment = p.assignment();
    let side = |seq: &[usize], part: usize| -> Vec<Vec<usize>> {
        let mut rank = vec![usize::MAX; n];
        for (i, &u) in seq.iter().enumerate() {
            rank[u] = i;
        }
        (0..seq.len())
            .map(|i| {
                g.edges()
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| {
                        [(e.u, e.v), (e.v, e.u)].iter().any(|&(a, b)| {
                            assignment[a] == part
                                && if assignment[b] == part {
                                    rank[a] <= i
                                } else {
                                    rank[a] >= i
                                }
                        })
                    })
                    .map(|(idx, _)| idx)
                    .collect()
            })
            .collect()
    };
    let gamma: Vec<usize> = crossing_edges(g, &assignment).expect("assignment covers g");
    let alphas = side(&ordering.x, 0);
    let betas = side(&ordering.y, 1);
    let mut bags: Vec<Vec<usize>> = betas.into_iter().rev().collect();
    bags.push(gamma);
    bags.extend(alphas);
    PathDecomposition::new(bags)
}

/// Which construction [`construct`] dispatched to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionKind {
    /// All parts of size one: the `K_n` bags.
    Complete,
    /// `K_{1,m}`: `L(G)` is a clique, one bag.
    Star,
    /// The three-part construction.
    Partitioned,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub kind: ConstructionKind,
    pub decomposition: PathDecomposition,
    pub partition: Option<TriPartition>,
    pub ordering: Option<VertexOrdering>,
}

impl Construction {
    /// Position of the `gamma` bag in the path.
    pub fn gamma_position(&self) -> Option<usize> {
        self.partition.as_ref().map(|p| p.q2().len())
    }

    /// `|H|`, the size of the crossing-edge bag.
    pub fn hitting_set_size(&self) -> Option<usize> {
        self.gamma_position().map(|i| self.decomposition.bags()[i].len())
    }
}

/// Builds a path decomposition of `L(K_{n_1,...,n_k})`, dispatching complete
/// graphs to [`kn_decomposition`] and stars to a single clique bag.
pub fn construct(spec: &MultipartiteSpec, flavour: OrderingFlavour) -> Result<Construction> {
    if spec.k() < 2 && !spec.is_complete() {
        return Err(Error::UnsupportedShape("fewer than two colour classes"));
    }
    if spec.is_complete() {
        return Ok(Construction {
            kind: ConstructionKind::Complete,
            decomposition: kn_decomposition(spec.n()),
            partition: None,
            ordering: None,
        });
    }
    let g = complete_multipartite(spec);
    if spec.is_star() {
        return Ok(Construction {
            kind: ConstructionKind::Star,
            decomposition: PathDecomposition::new(vec![(0..g.edge_count()).collect()]),
            partition: None,
            ordering: None,
        });
    }
    let partition = good_partition(spec)?;
    let ordering = make_ordering(spec, &partition, flavour)?;
    let decomposition = partition_decomposition(&g, &partition, &ordering);
    Ok(Construction {
        kind: ConstructionKind::Partitioned,
        decomposition,
        partition: Some(partition),
        ordering: Some(ordering),
    })
}

/// [`construct`], keeping only the decomposition.
pub fn multipartite_decomposition(spec: &MultipartiteSpec, flavour: OrderingFlavour) -> Result<PathDecomposition> {
    construct(spec, flavour).map(|c| c.decomposition)
}
