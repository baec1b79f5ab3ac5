//! The unified resolving machinery: one code path serves the vertex-metric,
//! edge-metric, truncated, and local notions of resolution.
//!
//! Everything reduces to two views of the same data. The *vector view*
//! assigns each item (vertex or edge) its tuple of landmark distances; a set
//! resolves when all vectors are distinct. The *coverage view* records, for
//! each pair of items that must be told apart, which vertices can do it;
//! fault tolerance is exactly 2-coverage of every pair.

use crate::graph::{Distance, DistanceMatrix, Graph, LandmarkSet};
use fixedbitset::FixedBitSet;
use serde::Serialize;
use std::fmt;
use thiserror::Error;

/// Selects which resolving notion is in force.
///
/// `Truncated(1)` is the adjacency dimension; `VertexMetric` behaves as
/// `Truncated(k)` for any `k` at least the diameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    VertexMetric,
    EdgeMetric,
    /// Distances capped at `k + 1`.
    Truncated(u32),
    /// Only adjacent vertex pairs must be distinguished.
    Local,
}

impl Variant {
    /// The coordinate cap `k + 1`, when the variant truncates distances.
    fn cap(self) -> Option<u32> {
        match self {
            Variant::Truncated(k) => Some(k + 1),
            _ => None,
        }
    }

    pub fn uses_edge_items(self) -> bool {
        self == Variant::EdgeMetric
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::VertexMetric => write!(f, "metric"),
            Variant::EdgeMetric => write!(f, "edge"),
            Variant::Truncated(k) => write!(f, "trunc({k})"),
            Variant::Local => write!(f, "local"),
        }
    }
}

/// An item whose distance vector must be unique: a vertex, or (under the
/// edge-metric variant) an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Item {
    Vertex(usize),
    Edge(usize, usize),
}

impl Item {
    pub fn edge(u: usize, v: usize) -> Item {
        Item::Edge(u.min(v), u.max(v))
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Item::Vertex(v) => write!(f, "v{v}"),
            Item::Edge(u, v) => write!(f, "{{{u},{v}}}"),
        }
    }
}

/// A tuple of distances, one coordinate per landmark in set order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DistanceVector(pub Vec<Distance>);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ResolveError {
    #[error("item {item} is not valid under variant {variant}")]
    ItemVariantMismatch { variant: Variant, item: Item },
    #[error("fault tolerance requires a nonempty landmark set")]
    EmptyLandmarkSet,
    #[error("landmark set is not resolving under variant {variant}")]
    NotResolving { variant: Variant },
    #[error("no degree bound applies to the local variant")]
    NoDegreeBound,
}

/// The single-landmark coordinate of an item under a variant.
pub fn coordinate(dm: &DistanceMatrix, variant: Variant, item: Item, landmark: usize) -> Distance {
    match item {
        Item::Vertex(u) => {
            let d = dm.get(u, landmark);
            match variant.cap() {
                Some(cap) => Distance::Finite(d.truncated(cap)),
                None => d,
            }
        }
        // dist(e, w) = min over the endpoints of e; the edge variant is
        // never truncated.
        Item::Edge(u, v) => dm.get(u, landmark).min(dm.get(v, landmark)),
    }
}

fn item_valid(variant: Variant, item: Item) -> bool {
    matches!(item, Item::Edge(..)) == variant.uses_edge_items()
}

/// The distance vector of `item` with respect to `set`, coordinate order
/// matching the set order.
pub fn item_vector(
    dm: &DistanceMatrix,
    variant: Variant,
    item: Item,
    set: &LandmarkSet,
) -> Result<DistanceVector, ResolveError> {
    if !item_valid(variant, item) {
        return Err(ResolveError::ItemVariantMismatch { variant, item });
    }
    Ok(DistanceVector(
        set.iter().map(|s| coordinate(dm, variant, item, s)).collect(),
    ))
}

/// True when the single landmark separates the two items. Two `Infinite`
/// coordinates compare equal and do not distinguish.
pub fn distinguishes(
    dm: &DistanceMatrix,
    variant: Variant,
    landmark: usize,
    pair: (Item, Item),
) -> bool {
    coordinate(dm, variant, pair.0, landmark) != coordinate(dm, variant, pair.1, landmark)
}

/// The items a variant must resolve: all vertices, or all edges.
pub fn items(g: &Graph, variant: Variant) -> Vec<Item> {
    if variant.uses_edge_items() {
        g.edges().into_iter().map(|(u, v)| Item::Edge(u, v)).collect()
    } else {
        (0..g.n()).map(Item::Vertex).collect()
    }
}

/// The item pairs a variant must distinguish: all vertex pairs, all edge
/// pairs, or (locally) just the adjacent vertex pairs.
pub fn item_pairs(g: &Graph, variant: Variant) -> Vec<(Item, Item)> {
    match variant {
        Variant::Local => g
            .edges()
            .into_iter()
            .map(|(u, v)| (Item::Vertex(u), Item::Vertex(v)))
            .collect(),
        _ => {
            let items = items(g, variant);
            let mut out = Vec::with_capacity(items.len() * items.len().saturating_sub(1) / 2);
            for (i, &a) in items.iter().enumerate() {
                for &b in &items[i + 1..] {
                    out.push((a, b));
                }
            }
            out
        }
    }
}

/// The pair-coverage view of resolving: for every item pair needing
/// distinction, the set of vertices whose single coordinate separates it.
#[derive(Debug, Clone)]
pub struct DistinguishMatrix {
    n: usize,
    variant: Variant,
    pairs: Vec<(Item, Item)>,
    distinguishers: Vec<FixedBitSet>,
}

impl DistinguishMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(Item, Item)] {
        &self.pairs
    }

    pub fn distinguishers_of(&self, pair_index: usize) -> &FixedBitSet {
        &self.distinguishers[pair_index]
    }

    /// How many members of `set` distinguish the given pair.
    pub fn coverage(&self, pair_index: usize, set: &LandmarkSet) -> usize {
        set.iter()
            .filter(|&v| self.distinguishers[pair_index].contains(v))
            .count()
    }
}

/// Builds the complete pair/distinguisher incidence for a variant.
pub fn build_distinguish_matrix(g: &Graph, dm: &DistanceMatrix, variant: Variant) -> DistinguishMatrix {
    let pairs = item_pairs(g, variant);
    let distinguishers = pairs
        .iter()
        .map(|&(a, b)| {
            let mut bits = FixedBitSet::with_capacity(g.n());
            for w in 0..g.n() {
                if coordinate(dm, variant, a, w) != coordinate(dm, variant, b, w) {
                    bits.insert(w);
                }
            }
            bits
        })
        .collect();
    DistinguishMatrix {
        n: g.n(),
        variant,
        pairs,
        distinguishers,
    }
}

/// Outcome of a resolving or fault-tolerance check. Failures carry a
/// witness that can be re-verified by recomputation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Ok,
    /// Two items whose vectors collide.
    Unresolved { pair: (Item, Item) },
    /// A landmark whose removal leaves the pair unresolved.
    FaultUnresolved { removed: usize, pair: (Item, Item) },
}

impl Certificate {
    pub fn is_ok(&self) -> bool {
        matches!(self, Certificate::Ok)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Ok => write!(f, "ok"),
            Certificate::Unresolved { pair } => {
                write!(f, "unresolved pair ({}, {})", pair.0, pair.1)
            }
            Certificate::FaultUnresolved { removed, pair } => write!(
                f,
                "removing landmark {removed} leaves ({}, {}) unresolved",
                pair.0, pair.1
            ),
        }
    }
}

/// Checks whether `set` resolves the graph's items under `variant` by direct
/// vector comparison. The witness on failure is the first colliding pair in
/// item order.
pub fn is_resolving(
    g: &Graph,
    dm: &DistanceMatrix,
    variant: Variant,
    set: &LandmarkSet,
) -> Certificate {
    match variant {
        Variant::Local => {
            for (u, v) in g.edges() {
                let a = Item::Vertex(u);
                let b = Item::Vertex(v);
                if set.iter().all(|s| !distinguishes(dm, variant, s, (a, b))) {
                    return Certificate::Unresolved { pair: (a, b) };
                }
            }
            Certificate::Ok
        }
        _ => {
            let all = items(g, variant);
            let mut seen: Vec<(DistanceVector, Item)> = Vec::with_capacity(all.len());
            for &it in &all {
                let vec = item_vector(dm, variant, it, set).expect("items match variant");
                if let Some((_, other)) = seen.iter().find(|(v, _)| *v == vec) {
                    return Certificate::Unresolved { pair: (*other, it) };
                }
                seen.push((vec, it));
            }
            Certificate::Ok
        }
    }
}

/// Checks the fault-tolerance definition directly: `set - {s}` must resolve
/// for every `s` in `set`. Errors on an empty set, which the definition
/// excludes.
pub fn is_fault_tolerant(
    g: &Graph,
    dm: &DistanceMatrix,
    variant: Variant,
    set: &LandmarkSet,
) -> Result<Certificate, ResolveError> {
    if set.is_empty() {
        return Err(ResolveError::EmptyLandmarkSet);
    }
    for s in set.iter() {
        if let Certificate::Unresolved { pair } = is_resolving(g, dm, variant, &set.without(s)) {
            return Ok(Certificate::FaultUnresolved { removed: s, pair });
        }
    }
    Ok(Certificate::Ok)
}

/// Counts the vertices `u != v` with `dist(u, v) <= j`.
pub fn count_within_distance(dm: &DistanceMatrix, v: usize, j: u32) -> usize {
    (0..dm.n())
        .filter(|&u| u != v)
        .filter(|&u| match dm.get(u, v) {
            Distance::Finite(d) => d <= j,
            Distance::Infinite => false,
        })
        .count()
}

/// One row of [`landmark_degree_report`].
#[derive(Debug, Clone, Serialize)]
pub struct LandmarkDegree {
    pub landmark: usize,
    pub degree: usize,
    pub bound: u64,
    pub ok: bool,
}

/// The sharp per-landmark degree bound for a resolving set of size `k`:
/// `3^(k-1)` for the vertex metric and `Truncated(k >= 2)`, `2^(k-1)` for
/// the edge metric, and `2^(k-1) + k - 1` for `Truncated(1)`.
pub fn landmark_degree_bound(variant: Variant, set_size: usize) -> Result<u64, ResolveError> {
    let k = set_size as u32;
    match variant {
        Variant::VertexMetric => Ok(3u64.pow(k.saturating_sub(1))),
        Variant::Truncated(1) => Ok(2u64.pow(k.saturating_sub(1)) + u64::from(k) - 1),
        Variant::Truncated(_) => Ok(3u64.pow(k.saturating_sub(1))),
        Variant::EdgeMetric => Ok(2u64.pow(k.saturating_sub(1))),
        Variant::Local => Err(ResolveError::NoDegreeBound),
    }
}

/// Compares each landmark's degree against the variant bound. Requires the
/// given set to resolve the graph; the bounds are theorems about resolving
/// sets only.
pub fn landmark_degree_report(
    g: &Graph,
    variant: Variant,
    set: &LandmarkSet,
) -> Result<Vec<LandmarkDegree>, ResolveError> {
    let dm = g.distances();
    if !is_resolving(g, &dm, variant, set).is_ok() {
        return Err(ResolveError::NotResolving { variant });
    }
    let bound = landmark_degree_bound(variant, set.len())?;
    Ok(set
        .iter()
        .map(|landmark| {
            let degree = g.degree(landmark);
            LandmarkDegree {
                landmark,
                degree,
                bound,
                ok: degree as u64 <= bound,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn own_coordinate_is_zero() {
        let g = Graph::path(4);
        let dm = g.distances();
        let s = LandmarkSet::from([2, 0]);
        let vec = item_vector(&dm, Variant::VertexMetric, Item::Vertex(2), &s).unwrap();
        assert_eq!(vec.0[0], Distance::Finite(0));
        assert_eq!(vec.0[1], Distance::Finite(2));
    }

    #[test]
    fn truncated_coordinate_caps() {
        // endpoint vs far endpoint of P4 under Truncated(1): min(2, 3) = 2
        let g = Graph::path(4);
        let dm = g.distances();
        let s = LandmarkSet::from([0]);
        let vec = item_vector(&dm, Variant::Truncated(1), Item::Vertex(3), &s).unwrap();
        assert_eq!(vec.0, vec![Distance::Finite(2)]);
    }

    #[test]
    fn edge_item_under_vertex_variant_is_an_error() {
        let g = Graph::path(3);
        let dm = g.distances();
        let s = LandmarkSet::from([0]);
        assert!(matches!(
            item_vector(&dm, Variant::VertexMetric, Item::edge(0, 1), &s),
            Err(ResolveError::ItemVariantMismatch { .. })
        ));
        assert!(matches!(
            item_vector(&dm, Variant::EdgeMetric, Item::Vertex(0), &s),
            Err(ResolveError::ItemVariantMismatch { .. })
        ));
    }

    #[test]
    fn endpoint_distinguishes_its_own_pair() {
        let g = Graph::path(4);
        let dm = g.distances();
        assert!(distinguishes(
            &dm,
            Variant::VertexMetric,
            0,
            (Item::Vertex(0), Item::Vertex(1))
        ));
    }

    #[test]
    fn infinite_coordinates_do_not_distinguish() {
        // two singletons plus an edge elsewhere: landmark in the edge component
        let g = Graph::new(4, &[(2, 3)]).unwrap();
        let dm = g.distances();
        assert!(!distinguishes(
            &dm,
            Variant::VertexMetric,
            2,
            (Item::Vertex(0), Item::Vertex(1))
        ));
    }

    #[test]
    fn k3_matrix_under_vertex_metric() {
        let g = Graph::complete(3);
        let dm = g.distances();
        let m = build_distinguish_matrix(&g, &dm, Variant::VertexMetric);
        assert_eq!(m.pair_count(), 3);
        for (i, &(a, b)) in m.pairs().iter().enumerate() {
            let (Item::Vertex(u), Item::Vertex(v)) = (a, b) else {
                panic!("vertex items expected")
            };
            let ds: Vec<usize> = m.distinguishers_of(i).ones().collect();
            assert_eq!(ds, vec![u, v]);
        }
    }

    #[test]
    fn edgeless_graph_has_no_local_pairs() {
        let g = Graph::empty(3);
        let dm = g.distances();
        let m = build_distinguish_matrix(&g, &dm, Variant::Local);
        assert_eq!(m.pair_count(), 0);
    }

    #[test]
    fn p4_endpoint_resolves() {
        let g = Graph::path(4);
        let dm = g.distances();
        assert!(is_resolving(&g, &dm, Variant::VertexMetric, &LandmarkSet::from([0])).is_ok());
    }

    #[test]
    fn k4_pairs_witness_the_omitted_vertices() {
        let g = Graph::complete(4);
        let dm = g.distances();
        let cert = is_resolving(&g, &dm, Variant::VertexMetric, &LandmarkSet::from([0, 1]));
        assert_eq!(
            cert,
            Certificate::Unresolved {
                pair: (Item::Vertex(2), Item::Vertex(3))
            }
        );
    }

    #[test]
    fn empty_set_resolves_single_vertex() {
        let g = Graph::empty(1);
        let dm = g.distances();
        assert!(is_resolving(&g, &dm, Variant::VertexMetric, &LandmarkSet::empty()).is_ok());
    }

    #[test]
    fn p5_endpoints_are_fault_tolerant() {
        let g = Graph::path(5);
        let dm = g.distances();
        let cert =
            is_fault_tolerant(&g, &dm, Variant::VertexMetric, &LandmarkSet::from([0, 4])).unwrap();
        assert!(cert.is_ok());
    }

    #[test]
    fn singleton_set_is_never_fault_tolerant_beyond_order_one() {
        let g = Graph::path(2);
        let dm = g.distances();
        let cert =
            is_fault_tolerant(&g, &dm, Variant::VertexMetric, &LandmarkSet::from([0])).unwrap();
        assert!(matches!(cert, Certificate::FaultUnresolved { removed: 0, .. }));
    }

    #[test]
    fn whole_vertex_set_of_complete_graph_is_fault_tolerant() {
        let g = Graph::complete(4);
        let dm = g.distances();
        let all = LandmarkSet::from([0, 1, 2, 3]);
        assert!(is_fault_tolerant(&g, &dm, Variant::VertexMetric, &all)
            .unwrap()
            .is_ok());
    }

    #[test]
    fn empty_set_fault_tolerance_is_a_usage_error() {
        let g = Graph::path(2);
        let dm = g.distances();
        assert_eq!(
            is_fault_tolerant(&g, &dm, Variant::VertexMetric, &LandmarkSet::empty()),
            Err(ResolveError::EmptyLandmarkSet)
        );
    }

    #[test]
    fn count_within_distance_zero_is_zero() {
        let g = Graph::complete(4);
        let dm = g.distances();
        assert_eq!(count_within_distance(&dm, 0, 0), 0);
        assert_eq!(count_within_distance(&dm, 0, 1), 3);
    }

    #[test]
    fn degree_report_requires_resolving_set() {
        let g = Graph::complete(4);
        assert!(matches!(
            landmark_degree_report(&g, Variant::VertexMetric, &LandmarkSet::from([0])),
            Err(ResolveError::NotResolving { .. })
        ));
    }

    #[test]
    fn degree_report_on_path_endpoint() {
        let g = Graph::path(4);
        let rows = landmark_degree_report(&g, Variant::VertexMetric, &LandmarkSet::from([0])).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].degree, 1);
        assert_eq!(rows[0].bound, 1);
        assert!(rows[0].ok);
    }
}
