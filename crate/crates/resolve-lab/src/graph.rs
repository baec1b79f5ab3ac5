//! Simple undirected graphs with bitset adjacency, BFS distances, labeled
//! enumeration, and an exact maximum-clique search.

use fixedbitset::FixedBitSet;
use std::fmt;
use thiserror::Error;

/// Errors from graph construction and enumeration.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge endpoint {endpoint} out of range for {n} vertices")]
    EndpointOutOfRange { endpoint: usize, n: usize },
    #[error("duplicate landmark vertex {0}")]
    DuplicateLandmark(usize),
    #[error("landmark vertex {vertex} out of range for {n} vertices")]
    LandmarkOutOfRange { vertex: usize, n: usize },
    #[error("labeled enumeration is limited to n <= {MAX_ENUMERATION_N} vertices (got {0})")]
    EnumerationTooLarge(usize),
}

/// Largest order accepted by [`enumerate_labeled_graphs`]: 2^21 graphs at n = 7.
pub const MAX_ENUMERATION_N: usize = 7;

/// A graph distance, possibly infinite for vertices in different components.
///
/// `Infinite` compares equal to itself and strictly greater than every
/// finite distance, so two unreachable coordinates never distinguish a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    /// Caps the distance at `cap`, mapping `Infinite` to `cap` as well.
    pub fn truncated(self, cap: u32) -> u32 {
        match self {
            Distance::Finite(d) => d.min(cap),
            Distance::Infinite => cap,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// An immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges, and out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::EndpointOutOfRange { endpoint: w, n });
                }
            }
            if g.adj[u].contains(v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    /// The path `P_n` with edges `{i, i+1}`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path edges are valid")
    }

    /// The cycle `C_n` (requires `n >= 3`).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, &edges).expect("cycle edges are valid")
    }

    /// Decodes an edge mask where bit `b` stands for the `b`-th vertex pair
    /// in lexicographic order `(0,1), (0,2), ..., (0,n-1), (1,2), ...`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let mut g = Graph::empty(n);
        let mut bit = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if mask >> bit & 1 == 1 {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
                bit += 1;
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].contains(v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones(..)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].ones()
    }

    /// The neighborhood `N(u)` as a bitset row.
    pub fn neighbors_bits(&self, u: usize) -> &FixedBitSet {
        &self.adj[u]
    }

    /// All edges `{u, v}` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].ones() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// BFS-exact all-pairs shortest paths, `Infinite` across components.
    pub fn distances(&self) -> DistanceMatrix {
        let n = self.n;
        let mut d = vec![Distance::Infinite; n * n];
        let mut frontier = FixedBitSet::with_capacity(n);
        let mut visited = FixedBitSet::with_capacity(n);
        let mut next = FixedBitSet::with_capacity(n);
        for s in 0..n {
            frontier.clear();
            visited.clear();
            frontier.insert(s);
            visited.insert(s);
            let mut depth = 0u32;
            while !frontier.is_clear() {
                for u in frontier.ones() {
                    d[s * n + u] = Distance::Finite(depth);
                }
                next.clear();
                for u in frontier.ones() {
                    next.union_with(&self.adj[u]);
                }
                next.difference_with(&visited);
                visited.union_with(&next);
                std::mem::swap(&mut frontier, &mut next);
                depth += 1;
            }
        }
        DistanceMatrix { n, d }
    }

    /// True when the graph has one connected component (vacuously for n <= 1).
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = FixedBitSet::with_capacity(self.n);
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = vec![s];
            seen.insert(s);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.adj[u].ones() {
                    if !seen.contains(v) {
                        seen.insert(v);
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Deletes the given vertices and re-indexes the rest densely.
    ///
    /// Returns the induced subgraph together with the relabeling map:
    /// `map[old]` is `Some(new)` for survivors and `None` for deleted
    /// vertices.
    pub fn induced_delete(&self, remove: &[usize]) -> (Graph, Vec<Option<usize>>) {
        let mut gone = FixedBitSet::with_capacity(self.n);
        for &v in remove {
            gone.insert(v);
        }
        let mut map = vec![None; self.n];
        let mut kept = 0;
        for v in 0..self.n {
            if !gone.contains(v) {
                map[v] = Some(kept);
                kept += 1;
            }
        }
        let mut g = Graph::empty(kept);
        for u in 0..self.n {
            let Some(nu) = map[u] else { continue };
            for v in self.adj[u].ones() {
                if let Some(nv) = map[v] {
                    if nu < nv {
                        g.adj[nu].insert(nv);
                        g.adj[nv].insert(nu);
                    }
                }
            }
        }
        (g, map)
    }

    /// Exact maximum clique size via branch and bound with a greedy-coloring
    /// upper bound on each candidate set.
    pub fn clique_number(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        // Degeneracy-style order: repeatedly take a minimum-degree vertex.
        let mut order = Vec::with_capacity(self.n);
        let mut alive = FixedBitSet::with_capacity(self.n);
        alive.insert_range(..);
        let mut deg: Vec<usize> = (0..self.n).map(|u| self.degree(u)).collect();
        for _ in 0..self.n {
            let u = alive
                .ones()
                .min_by_key(|&u| (deg[u], u))
                .expect("alive is nonempty");
            order.push(u);
            alive.remove(u);
            for v in self.adj[u].ones() {
                if alive.contains(v) {
                    deg[v] -= 1;
                }
            }
        }
        order.reverse();

        let mut best = 1;
        let mut candidates = FixedBitSet::with_capacity(self.n);
        for (i, &u) in order.iter().enumerate() {
            candidates.clear();
            for &v in &order[i + 1..] {
                if self.adj[u].contains(v) {
                    candidates.insert(v);
                }
            }
            self.clique_search(&candidates, 1, &mut best);
        }
        best
    }

    fn clique_search(&self, candidates: &FixedBitSet, size: usize, best: &mut usize) {
        if candidates.is_clear() {
            *best = (*best).max(size);
            return;
        }
        // Greedy coloring bound: a clique takes at most one vertex per
        // color class, so `size + classes <= best` prunes the branch.
        if size + self.color_class_count(candidates) <= *best {
            return;
        }
        let mut rest = candidates.clone();
        let order: Vec<usize> = rest.ones().collect();
        for v in order {
            if size + rest.count_ones(..) <= *best {
                return;
            }
            rest.remove(v);
            let mut next = rest.clone();
            next.intersect_with(&self.adj[v]);
            self.clique_search(&next, size + 1, best);
        }
    }

    fn color_class_count(&self, candidates: &FixedBitSet) -> usize {
        let mut uncolored = candidates.clone();
        let mut blocked = FixedBitSet::with_capacity(self.n);
        let mut classes = 0;
        while !uncolored.is_clear() {
            blocked.clear();
            for v in uncolored.clone().ones() {
                if !blocked.contains(v) {
                    uncolored.remove(v);
                    blocked.union_with(&self.adj[v]);
                    blocked.insert(v);
                }
            }
            classes += 1;
        }
        classes
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// All-pairs shortest-path distances for a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Distance {
        self.d[u * self.n + v]
    }
}

/// An ordered, duplicate-free list of landmark vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LandmarkSet {
    vertices: Vec<usize>,
}

impl LandmarkSet {
    /// Wraps an ordered vertex list, rejecting duplicates.
    pub fn new(vertices: Vec<usize>) -> Result<Self, GraphError> {
        let mut seen = std::collections::HashSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(GraphError::DuplicateLandmark(v));
            }
        }
        Ok(LandmarkSet { vertices })
    }

    pub fn empty() -> Self {
        LandmarkSet { vertices: Vec::new() }
    }

    /// Validates that every landmark exists in a graph of order `n`.
    pub fn check_range(&self, n: usize) -> Result<(), GraphError> {
        match self.vertices.iter().find(|&&v| v >= n) {
            Some(&vertex) => Err(GraphError::LandmarkOutOfRange { vertex, n }),
            None => Ok(()),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.vertices
    }

    /// The set with one landmark removed, preserving order.
    pub fn without(&self, v: usize) -> LandmarkSet {
        LandmarkSet {
            vertices: self.vertices.iter().copied().filter(|&x| x != v).collect(),
        }
    }
}

impl From<&[usize]> for LandmarkSet {
    fn from(vertices: &[usize]) -> Self {
        LandmarkSet::new(vertices.to_vec()).expect("duplicate landmark")
    }
}

impl<const N: usize> From<[usize; N]> for LandmarkSet {
    fn from(vertices: [usize; N]) -> Self {
        LandmarkSet::new(vertices.to_vec()).expect("duplicate landmark")
    }
}

/// Streams every labeled graph on `n` vertices exactly once, by edge mask.
pub fn enumerate_labeled_graphs(
    n: usize,
) -> Result<impl Iterator<Item = Graph>, GraphError> {
    if n > MAX_ENUMERATION_N {
        return Err(GraphError::EnumerationTooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    Ok((0u64..1 << bits).map(move |mask| Graph::from_edge_mask(n, mask)))
}

/// Number of labeled graphs on `n` vertices: `2^(n choose 2)`.
pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}
