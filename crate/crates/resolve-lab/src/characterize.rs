//! Structural predicates for the boundary characterizations (dimension 1,
//! dimension `n - 1`, fault-tolerant dimension `n`) and exhaustive suites
//! comparing them against the exact solver on every labeled graph of small
//! order.

use crate::formats::graph_to_graph6;
use crate::graph::{Graph, GraphError};
use crate::resolve::Variant;
use crate::solver::{min_fault_tolerant, min_resolving};
use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CompShape {
    Singleton,
    Path,
    Other,
}

fn component_shape(g: &Graph, comp: &[usize]) -> CompShape {
    if comp.len() == 1 {
        return CompShape::Singleton;
    }
    let internal_edges: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
    let max_degree = comp.iter().map(|&v| g.degree(v)).max().unwrap_or(0);
    if internal_edges == comp.len() - 1 && max_degree <= 2 {
        CompShape::Path
    } else {
        CompShape::Other
    }
}

fn component_edge_count(g: &Graph, comp: &[usize]) -> usize {
    comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2
}

fn is_bipartite_component(g: &Graph, comp: &[usize]) -> bool {
    let n = g.n();
    let mut color = vec![None::<bool>; n];
    let start = comp[0];
    color[start] = Some(false);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        let cu = color[u].expect("popped vertices are colored");
        for v in g.neighbors(u) {
            match color[v] {
                None => {
                    color[v] = Some(!cu);
                    stack.push(v);
                }
                Some(cv) if cv == cu => return false,
                Some(_) => {}
            }
        }
    }
    true
}

/// Dimension 1 under the vertex metric: order at least 2, at most 2
/// components, at most 1 component of size at least 2, and every component
/// a singleton or a path.
pub fn predicate_dim1(g: &Graph) -> bool {
    if g.n() < 2 {
        return false;
    }
    let comps = g.components();
    comps.len() <= 2
        && comps.iter().filter(|c| c.len() >= 2).count() <= 1
        && comps
            .iter()
            .all(|c| component_shape(g, c) != CompShape::Other)
}

/// Edge dimension 1: at least 2 edges, every component a singleton or a
/// path, at most 2 components with an edge, and at most one component with
/// more than one edge.
pub fn predicate_edim1(g: &Graph) -> bool {
    if g.edge_count() < 2 {
        return false;
    }
    let comps = g.components();
    comps
        .iter()
        .all(|c| component_shape(g, c) != CompShape::Other)
        && comps
            .iter()
            .filter(|c| component_edge_count(g, c) >= 1)
            .count()
            <= 2
        && comps
            .iter()
            .filter(|c| component_edge_count(g, c) > 1)
            .count()
            <= 1
}

/// Adjacency dimension 1: order 2, or order 3 with at least one edge and
/// not complete.
pub fn predicate_adim1(g: &Graph) -> bool {
    match g.n() {
        2 => true,
        3 => (1..=2).contains(&g.edge_count()),
        _ => false,
    }
}

/// `k`-truncated dimension 1: the path `P_i` for some `2 <= i <= k + 2`, or
/// the union of `P_j` and a singleton for some `1 <= j <= k + 1`.
pub fn predicate_dimk1(g: &Graph, k: u32) -> bool {
    let comps = g.components();
    match comps.as_slice() {
        [c] => {
            component_shape(g, c) == CompShape::Path && c.len() <= k as usize + 2
        }
        [a, b] => {
            let (single, rest) = if a.len() == 1 { (a, b) } else { (b, a) };
            single.len() == 1
                && component_shape(g, rest) != CompShape::Other
                && rest.len() <= k as usize + 1
        }
        _ => false,
    }
}

/// Local dimension 1: the union of one connected bipartite component with
/// at least one edge and any number of singletons.
pub fn predicate_ldim1(g: &Graph) -> bool {
    let comps = g.components();
    let edged: Vec<&Vec<usize>> = comps
        .iter()
        .filter(|c| component_edge_count(g, c) >= 1)
        .collect();
    edged.len() == 1 && is_bipartite_component(g, edged[0])
}

fn neighborhoods_match_without(g: &Graph, u: usize, v: usize) -> bool {
    let mut nu: FixedBitSet = g.neighbors_bits(u).clone();
    let mut nv: FixedBitSet = g.neighbors_bits(v).clone();
    nu.remove(v);
    nv.remove(u);
    nu == nv
}

/// The obstruction that forces `ftxdim(G) = n`: every vertex `v` has a
/// variant-appropriate twin `u` with `N(u) - {v} = N(v) - {u}`. The vertex
/// metric and the truncated variants accept any twin, the edge metric needs
/// a twin sharing a neighbor, and the local variant an adjacent twin.
pub fn twin_condition(g: &Graph, variant: Variant) -> bool {
    let n = g.n();
    (0..n).all(|v| {
        (0..n).any(|u| {
            if u == v {
                return false;
            }
            let related = match variant {
                Variant::EdgeMetric => {
                    let mut shared = g.neighbors_bits(u).clone();
                    shared.intersect_with(g.neighbors_bits(v));
                    !shared.is_clear()
                }
                Variant::Local => g.has_edge(u, v),
                Variant::VertexMetric | Variant::Truncated(_) => true,
            };
            related && neighborhoods_match_without(g, u, v)
        })
    })
}

/// Which solver/structure equivalence a suite run checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteCheck {
    /// `xdim(G) = 1 <=> ftxdim(G) = 2 <=>` the structural dimension-1 shape.
    Dim1Ft2,
    /// `ftxdim(G) = n <=>` the twin condition (orders 2 and up; on a single
    /// vertex the twin condition is vacuously false while ftxdim is 1).
    FtEqualsN,
}

impl fmt::Display for SuiteCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuiteCheck::Dim1Ft2 => write!(f, "dim1-ft2"),
            SuiteCheck::FtEqualsN => write!(f, "ft-equals-n"),
        }
    }
}

/// An order-extremal characterization: dimension `n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderExtremalCheck {
    /// `dim(G) = n - 1 <=> G` complete or edgeless.
    VertexDimNMinus1,
    /// `ldim(G) = n - 1 <=> G` complete.
    LocalDimNMinus1,
}

impl fmt::Display for OrderExtremalCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderExtremalCheck::VertexDimNMinus1 => write!(f, "dim-n-minus-1"),
            OrderExtremalCheck::LocalDimNMinus1 => write!(f, "ldim-n-minus-1"),
        }
    }
}

/// A graph where the structural predicate and the exact solver disagree.
#[derive(Debug, Clone, Serialize)]
pub struct Mismatch {
    pub graph6: String,
    pub structural: String,
    pub solver: String,
}

/// Outcome of an exhaustive suite run; the theorem holds over the tested
/// range exactly when `mismatches` is empty.
#[derive(Debug, Clone, Serialize)]
pub struct CharacterizationReport {
    pub variant: String,
    pub check: String,
    pub n_max: usize,
    pub graphs_checked: u64,
    pub mismatches: Vec<Mismatch>,
}

impl CharacterizationReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn structural_dim1(g: &Graph, variant: Variant) -> bool {
    match variant {
        Variant::VertexMetric => predicate_dim1(g),
        Variant::EdgeMetric => predicate_edim1(g),
        Variant::Truncated(k) => predicate_dimk1(g, k),
        Variant::Local => predicate_ldim1(g),
    }
}

/// Runs one equivalence check over every labeled graph of order `1..=n_max`
/// (order 2 and up for [`SuiteCheck::FtEqualsN`]), comparing the structural
/// predicate with the exact solver. Workers split the enumeration stream;
/// mismatches merge in graph order.
pub fn run_equivalence_suite(
    n_max: usize,
    variant: Variant,
    which: SuiteCheck,
) -> Result<CharacterizationReport, GraphError> {
    if n_max > crate::graph::MAX_ENUMERATION_N {
        return Err(GraphError::EnumerationTooLarge(n_max));
    }
    let mut mismatches = Vec::new();
    let mut graphs_checked = 0u64;
    let n_min = match which {
        SuiteCheck::Dim1Ft2 => 1,
        SuiteCheck::FtEqualsN => 2,
    };
    for n in n_min..=n_max {
        let bits = n * (n - 1) / 2;
        let mut found: Vec<Mismatch> = (0u64..1 << bits)
            .into_par_iter()
            .filter_map(|mask| {
                let g = Graph::from_edge_mask(n, mask);
                check_one(&g, variant, which)
            })
            .collect();
        graphs_checked += 1 << bits;
        mismatches.append(&mut found);
    }
    Ok(CharacterizationReport {
        variant: variant.to_string(),
        check: which.to_string(),
        n_max,
        graphs_checked,
        mismatches,
    })
}

fn check_one(g: &Graph, variant: Variant, which: SuiteCheck) -> Option<Mismatch> {
    match which {
        SuiteCheck::Dim1Ft2 => {
            let structural = structural_dim1(g, variant);
            let dim = min_resolving(g, variant).dimension;
            let ft = min_fault_tolerant(g, variant).dimension;
            let agree = structural == (dim == 1) && (dim == 1) == (ft == 2);
            (!agree).then(|| Mismatch {
                graph6: graph_to_graph6(g).expect("suite graphs are small"),
                structural: format!("predicate={structural}"),
                solver: format!("dim={dim}, ftdim={ft}"),
            })
        }
        SuiteCheck::FtEqualsN => {
            let structural = twin_condition(g, variant);
            let ft = min_fault_tolerant(g, variant).dimension;
            let agree = structural == (ft == g.n());
            (!agree).then(|| Mismatch {
                graph6: graph_to_graph6(g).expect("suite graphs are small"),
                structural: format!("twin-condition={structural}"),
                solver: format!("ftdim={ft} of n={}", g.n()),
            })
        }
    }
}

/// Runs a dimension-`n-1` characterization over every labeled graph of
/// order `1..=n_max`.
pub fn run_order_extremal_suite(
    n_max: usize,
    which: OrderExtremalCheck,
) -> Result<CharacterizationReport, GraphError> {
    if n_max > crate::graph::MAX_ENUMERATION_N {
        return Err(GraphError::EnumerationTooLarge(n_max));
    }
    let mut mismatches = Vec::new();
    let mut graphs_checked = 0u64;
    for n in 1..=n_max {
        let bits = n * (n - 1) / 2;
        let complete_edges = n * (n - 1) / 2;
        let mut found: Vec<Mismatch> = (0u64..1 << bits)
            .into_par_iter()
            .filter_map(|mask| {
                let g = Graph::from_edge_mask(n, mask);
                let (structural, variant) = match which {
                    OrderExtremalCheck::VertexDimNMinus1 => (
                        g.edge_count() == complete_edges || g.edge_count() == 0,
                        Variant::VertexMetric,
                    ),
                    OrderExtremalCheck::LocalDimNMinus1 => {
                        (g.edge_count() == complete_edges, Variant::Local)
                    }
                };
                let dim = min_resolving(&g, variant).dimension;
                let agree = structural == (dim == n - 1);
                (!agree).then(|| Mismatch {
                    graph6: graph_to_graph6(&g).expect("suite graphs are small"),
                    structural: format!("structural={structural}"),
                    solver: format!("dim={dim} of n={n}"),
                })
            })
            .collect();
        graphs_checked += 1 << bits;
        mismatches.append(&mut found);
    }
    Ok(CharacterizationReport {
        variant: which.to_string(),
        check: "dim-n-minus-1".into(),
        n_max,
        graphs_checked,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_labeled_graphs;

    fn union(parts: &[Graph]) -> Graph {
        let n: usize = parts.iter().map(Graph::n).sum();
        let mut edges = Vec::new();
        let mut base = 0;
        for p in parts {
            edges.extend(p.edges().into_iter().map(|(u, v)| (base + u, base + v)));
            base += p.n();
        }
        Graph::new(n, &edges).expect("disjoint union")
    }

    #[test]
    fn dim1_shapes() {
        assert!(predicate_dim1(&Graph::path(5)));
        assert!(predicate_dim1(&union(&[Graph::path(3), Graph::empty(1)])));
        assert!(!predicate_dim1(&union(&[Graph::path(3), Graph::path(3)])));
        assert!(!predicate_dim1(&Graph::empty(1)));
        assert!(!predicate_dim1(&Graph::cycle(4)));
    }

    #[test]
    fn edim1_shapes() {
        assert!(predicate_edim1(&Graph::path(4)));
        assert!(!predicate_edim1(&union(&[
            Graph::path(2),
            Graph::path(2),
            Graph::path(2)
        ])));
        assert!(!predicate_edim1(&Graph::path(2)));
        assert!(predicate_edim1(&union(&[Graph::path(3), Graph::path(2)])));
        assert!(!predicate_edim1(&union(&[Graph::path(3), Graph::path(3)])));
    }

    #[test]
    fn adim1_shapes() {
        assert!(predicate_adim1(&Graph::path(3)));
        assert!(predicate_adim1(&union(&[Graph::path(2), Graph::empty(1)])));
        assert!(predicate_adim1(&Graph::empty(2)));
        assert!(!predicate_adim1(&Graph::complete(3)));
        assert!(!predicate_adim1(&Graph::empty(3)));
        assert!(!predicate_adim1(&Graph::path(4)));
    }

    #[test]
    fn dimk1_path_length_window() {
        assert!(predicate_dimk1(&Graph::path(5), 3)); // P5 with k=3: 5 <= k+2
        assert!(!predicate_dimk1(&Graph::path(6), 3)); // P6 exceeds k+2
        assert!(predicate_dimk1(&Graph::empty(2), 1)); // P1 plus a singleton
        assert!(!predicate_dimk1(&Graph::empty(3), 1));
        assert!(predicate_dimk1(&union(&[Graph::path(2), Graph::empty(1)]), 1));
        assert!(!predicate_dimk1(&union(&[Graph::path(3), Graph::empty(1)]), 1));
    }

    #[test]
    fn adim1_agrees_with_dimk1_at_k1() {
        for n in 1..=5 {
            for g in enumerate_labeled_graphs(n).unwrap() {
                assert_eq!(predicate_adim1(&g), predicate_dimk1(&g, 1), "{g:?}");
            }
        }
    }

    #[test]
    fn ldim1_shapes() {
        assert!(!predicate_ldim1(&Graph::cycle(5)));
        assert!(predicate_ldim1(&Graph::cycle(6)));
        assert!(predicate_ldim1(&union(&[Graph::path(2), Graph::empty(3)])));
        assert!(!predicate_ldim1(&Graph::empty(4)));
        assert!(!predicate_ldim1(&union(&[Graph::path(2), Graph::path(2)])));
    }

    #[test]
    fn twin_conditions() {
        for v in [Variant::VertexMetric, Variant::EdgeMetric, Variant::Local] {
            assert!(twin_condition(&Graph::complete(4), v), "{v}");
        }
        // K_{2,2}
        let k22 = Graph::new(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(twin_condition(&k22, Variant::VertexMetric));
        // a path endpoint has no twin
        assert!(!twin_condition(&Graph::path(3), Variant::VertexMetric));
    }

    #[test]
    fn small_equivalence_suites_are_clean() {
        let rep =
            run_equivalence_suite(4, Variant::VertexMetric, SuiteCheck::Dim1Ft2).unwrap();
        assert!(rep.ok(), "{:?}", rep.mismatches);
        assert_eq!(rep.graphs_checked, 1 + 2 + 8 + 64);
        let rep = run_equivalence_suite(4, Variant::Local, SuiteCheck::FtEqualsN).unwrap();
        assert!(rep.ok(), "{:?}", rep.mismatches);
    }

    #[test]
    fn order_extremal_suites_are_clean() {
        let rep = run_order_extremal_suite(4, OrderExtremalCheck::VertexDimNMinus1).unwrap();
        assert!(rep.ok(), "{:?}", rep.mismatches);
        let rep = run_order_extremal_suite(4, OrderExtremalCheck::LocalDimNMinus1).unwrap();
        assert!(rep.ok(), "{:?}", rep.mismatches);
    }
}
