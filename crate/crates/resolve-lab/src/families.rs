//! Generators for the extremal families (`J_k`, `H_k`, `A_k`, king-lattice
//! boxes, `I_k(q)`) and the constructive procedures that turn a resolving
//! set into a fault-tolerant one.

use crate::graph::{Distance, Graph, LandmarkSet};
use crate::resolve::{is_fault_tolerant, is_resolving, item_vector, Item, Variant};
use std::collections::HashSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("input set is not resolving under variant {variant}")]
    NotResolving { variant: Variant },
    #[error("the construction needs a graph of order greater than 1")]
    OrderTooSmall,
    #[error("the construction needs a nonempty resolving set")]
    EmptyLandmarkSet,
    #[error("construction claim violated: {0}")]
    ClaimViolation(String),
    #[error(
        "lattice construction failed verification: vertex {point:?} has distance {found} to \
         landmark {landmark}, expected coordinate {expected}"
    )]
    CoordinateMismatch {
        point: Vec<u32>,
        landmark: usize,
        expected: u32,
        found: Distance,
    },
}

/// Role tag attached to each vertex of a generated family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Role {
    Center,
    /// A star leaf labeled by its digit string.
    Leaf(String),
    /// The landmark `s_i` (1-based).
    S(usize),
    /// The helper vertex `r_i` (1-based).
    R(usize),
    /// The landmark `u_i` (1-based).
    U(usize),
    /// A lattice point with its coordinates.
    Lattice(Vec<u32>),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Center => write!(f, "center"),
            Role::Leaf(s) => write!(f, "leaf:{s}"),
            Role::S(i) => write!(f, "s{i}"),
            Role::R(i) => write!(f, "r{i}"),
            Role::U(i) => write!(f, "u{i}"),
            Role::Lattice(c) => {
                write!(f, "lattice:")?;
                for (i, x) in c.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }
    }
}

/// A generated graph with designated landmarks and per-vertex role tags.
#[derive(Debug, Clone)]
pub struct LabeledFamily {
    pub graph: Graph,
    pub landmarks: LandmarkSet,
    pub labels: Vec<Role>,
    /// The variant under which the designated landmarks resolve.
    pub variant: Variant,
}

impl LabeledFamily {
    /// Finds the vertex carrying a role tag.
    pub fn find(&self, role: &Role) -> Option<usize> {
        self.labels.iter().position(|r| r == role)
    }

    /// The label side file: one `index<TAB>label` line per vertex.
    pub fn label_file(&self) -> String {
        let mut out = String::new();
        for (i, role) in self.labels.iter().enumerate() {
            out.push_str(&format!("{i}\t{role}\n"));
        }
        out
    }
}

fn digit_strings(base: u32, k: u32) -> Vec<String> {
    let total = (base as u64).pow(k);
    (0..total)
        .map(|mut x| {
            let mut digits = vec![b'0'; k as usize];
            for d in digits.iter_mut().rev() {
                *d = b'0' + (x % base as u64) as u8;
                x /= base as u64;
            }
            String::from_utf8(digits).expect("ASCII digits")
        })
        .collect()
}

/// The graph `J_k`: a star on the surviving ternary-string leaves, wired to
/// landmark pairs `s_i, r_i` so that `dist(leaf, s_i)` is one more than the
/// leaf's `i`-th digit.
///
/// The all-ones leaf and the `k` leaves with exactly one `0` and `k - 1`
/// ones are omitted, giving order `3^k + k`. The designated landmarks are
/// `s_1..s_k` under the vertex metric.
pub fn build_j(k: u32) -> LabeledFamily {
    assert!(k >= 1, "J_k needs k >= 1");
    let leaves: Vec<String> = digit_strings(3, k)
        .into_iter()
        .filter(|t| {
            let zeros = t.bytes().filter(|&b| b == b'0').count() as u32;
            let ones = t.bytes().filter(|&b| b == b'1').count() as u32;
            !(ones == k || (zeros == 1 && ones == k - 1))
        })
        .collect();

    let mut labels = vec![Role::Center];
    labels.extend(leaves.iter().map(|t| Role::Leaf(t.clone())));
    let s_base = labels.len();
    labels.extend((1..=k as usize).map(Role::S));
    let r_base = labels.len();
    labels.extend((1..=k as usize).map(Role::R));

    let mut edges = Vec::new();
    for (j, t) in leaves.iter().enumerate() {
        let leaf = 1 + j;
        edges.push((0, leaf));
        for (i, b) in t.bytes().enumerate() {
            match b {
                b'0' => {
                    edges.push((s_base + i, leaf));
                    edges.push((r_base + i, leaf));
                }
                b'1' => edges.push((r_base + i, leaf)),
                _ => {}
            }
        }
    }
    for i in 0..k as usize {
        edges.push((r_base + i, s_base + i));
    }

    let graph = Graph::new(labels.len(), &edges).expect("J_k edges are valid");
    let landmarks = LandmarkSet::new((s_base..s_base + k as usize).collect())
        .expect("landmark indices are distinct");
    LabeledFamily {
        graph,
        landmarks,
        labels,
        variant: Variant::VertexMetric,
    }
}

/// The graph `H_k`: a star `K_{1,2^k}` with binary-string leaves plus
/// landmarks `u_1..u_k`, each adjacent to the `2^(k-1)` leaves whose `i`-th
/// digit is `0`. Order `1 + 2^k + k`; the landmarks edge-resolve.
pub fn build_h(k: u32) -> LabeledFamily {
    assert!(k >= 1, "H_k needs k >= 1");
    let leaves = digit_strings(2, k);
    let mut labels = vec![Role::Center];
    labels.extend(leaves.iter().map(|t| Role::Leaf(t.clone())));
    let u_base = labels.len();
    labels.extend((1..=k as usize).map(Role::U));

    let mut edges = Vec::new();
    for (j, t) in leaves.iter().enumerate() {
        let leaf = 1 + j;
        edges.push((0, leaf));
        for (i, b) in t.bytes().enumerate() {
            if b == b'0' {
                edges.push((u_base + i, leaf));
            }
        }
    }
    let graph = Graph::new(labels.len(), &edges).expect("H_k edges are valid");
    let landmarks = LandmarkSet::new((u_base..u_base + k as usize).collect())
        .expect("landmark indices are distinct");
    LabeledFamily {
        graph,
        landmarks,
        labels,
        variant: Variant::EdgeMetric,
    }
}

/// The graph `A_k`: `H_k` with a clique added on `u_1..u_k`, then every
/// non-center vertex whose adjacency vector matches the center's deleted.
/// Exactly the all-ones leaf goes, leaving order `k + 2^k`; the landmarks
/// form an adjacency resolving set.
pub fn build_a(k: u32) -> LabeledFamily {
    assert!(k >= 1, "A_k needs k >= 1");
    let h = build_h(k);
    let mut edges = h.graph.edges();
    let us: Vec<usize> = h.landmarks.iter().collect();
    for (i, &a) in us.iter().enumerate() {
        for &b in &us[i + 1..] {
            edges.push((a, b));
        }
    }
    let with_clique = Graph::new(h.graph.n(), &edges).expect("clique edges are new");

    let dm = with_clique.distances();
    let center = 0;
    let center_vec = item_vector(&dm, Variant::Truncated(1), Item::Vertex(center), &h.landmarks)
        .expect("vertex item");
    let doomed: Vec<usize> = (0..with_clique.n())
        .filter(|&v| v != center)
        .filter(|&v| {
            item_vector(&dm, Variant::Truncated(1), Item::Vertex(v), &h.landmarks)
                .expect("vertex item")
                == center_vec
        })
        .collect();
    let all_ones = h
        .find(&Role::Leaf("1".repeat(k as usize)))
        .expect("H_k has an all-ones leaf");
    assert_eq!(
        doomed,
        vec![all_ones],
        "only the all-ones leaf shares the center's adjacency vector"
    );

    let (graph, map) = with_clique.induced_delete(&doomed);
    let labels: Vec<Role> = h
        .labels
        .iter()
        .enumerate()
        .filter(|(v, _)| map[*v].is_some())
        .map(|(_, role)| role.clone())
        .collect();
    let landmarks = LandmarkSet::new(
        h.landmarks
            .iter()
            .map(|u| map[u].expect("landmarks are never deleted"))
            .collect(),
    )
    .expect("landmark indices are distinct");
    LabeledFamily {
        graph,
        landmarks,
        labels,
        variant: Variant::Truncated(1),
    }
}

fn chebyshev_adjacent(a: &[u32], b: &[u32]) -> bool {
    a != b && a.iter().zip(b).all(|(&x, &y)| x.abs_diff(y) <= 1)
}

fn lattice_graph(points: Vec<Vec<u32>>) -> (Graph, Vec<Role>) {
    let n = points.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if chebyshev_adjacent(&points[i], &points[j]) {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::new(n, &edges).expect("lattice edges are valid");
    let labels = points.into_iter().map(Role::Lattice).collect();
    (graph, labels)
}

/// The induced subgraph of the king-move lattice `D_k` on the integer box
/// `[lo, hi]` (coordinatewise). Vertices are tagged with their coordinates;
/// there are no designated landmarks.
pub fn build_d_box(k: u32, lo: &[u32], hi: &[u32]) -> LabeledFamily {
    assert_eq!(lo.len(), k as usize);
    assert_eq!(hi.len(), k as usize);
    assert!(lo.iter().zip(hi).all(|(a, b)| a <= b), "box needs lo <= hi");
    let mut points = vec![vec![]];
    for i in 0..k as usize {
        points = points
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (lo[i]..=hi[i]).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    let (graph, labels) = lattice_graph(points);
    LabeledFamily {
        graph,
        landmarks: LandmarkSet::empty(),
        labels,
        variant: Variant::VertexMetric,
    }
}

/// The graph `I_k(q)`: the box `[q, 3q]^k` of the king-move lattice plus,
/// for each coordinate, a spike of layer sets walking a landmark down to
/// coordinate 0. Landmark `i` sits at the point with `0` in coordinate `i`
/// and `2q` elsewhere, and every vertex's distance vector to the landmarks
/// equals its coordinates — verified here by BFS, so a wrong layer rule
/// cannot produce a silently wrong graph.
pub fn build_i(k: u32, q: u32) -> Result<LabeledFamily, ConstructionError> {
    assert!(k >= 1 && q >= 1, "I_k(q) needs k >= 1 and q >= 1");
    let kk = k as usize;
    let mut all: HashSet<Vec<u32>> = HashSet::new();

    // the box [q, 3q]^k
    let mut box_points = vec![vec![]];
    for _ in 0..kk {
        box_points = box_points
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (q..=3 * q).map(move |x| {
                    let mut r = p.clone();
                    r.push(x);
                    r
                })
            })
            .collect();
    }
    all.extend(box_points);

    // landmark layer M_0 and the walk toward the box
    let mut landmarks_points: Vec<Vec<u32>> = (0..kk)
        .map(|i| {
            let mut p = vec![2 * q; kk];
            p[i] = 0;
            p
        })
        .collect();
    let mut layer: HashSet<Vec<u32>> = landmarks_points.iter().cloned().collect();
    all.extend(layer.iter().cloned());
    for target in 1..q {
        let mut next: HashSet<Vec<u32>> = HashSet::new();
        for p in &layer {
            for nb in lattice_neighbors(p) {
                if nb.contains(&target) {
                    next.insert(nb);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }

    let mut points: Vec<Vec<u32>> = all.into_iter().collect();
    points.sort();
    let (graph, labels) = lattice_graph(points.clone());
    let index_of = |p: &Vec<u32>| points.binary_search(p).expect("point is present");
    let landmark_indices: Vec<usize> = landmarks_points.drain(..).map(|p| index_of(&p)).collect();
    let landmarks = LandmarkSet::new(landmark_indices).expect("landmarks are distinct");

    // coordinate = distance check
    let dm = graph.distances();
    for (v, p) in points.iter().enumerate() {
        for (i, s) in landmarks.iter().enumerate() {
            let expected = p[i];
            if dm.get(v, s) != Distance::Finite(expected) {
                return Err(ConstructionError::CoordinateMismatch {
                    point: p.clone(),
                    landmark: i,
                    expected,
                    found: dm.get(v, s),
                });
            }
        }
    }

    Ok(LabeledFamily {
        graph,
        landmarks,
        labels,
        variant: Variant::VertexMetric,
    })
}

fn lattice_neighbors(p: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &x in p {
        out = out
            .into_iter()
            .flat_map(|q: Vec<u32>| {
                let lo = x.saturating_sub(1);
                (lo..=x + 1).map(move |y| {
                    let mut r = q.clone();
                    r.push(y);
                    r
                })
            })
            .collect();
    }
    out.retain(|q| q != p);
    out
}

fn closed_neighborhood(g: &Graph, set: &LandmarkSet) -> Vec<usize> {
    let mut out: HashSet<usize> = set.iter().collect();
    for s in set.iter() {
        out.extend(g.neighbors(s));
    }
    let mut out: Vec<usize> = out.into_iter().collect();
    out.sort_unstable();
    out
}

fn ft_construct_vertex_variant(
    g: &Graph,
    variant: Variant,
    set: &LandmarkSet,
) -> Result<LandmarkSet, ConstructionError> {
    if g.n() <= 1 {
        return Err(ConstructionError::OrderTooSmall);
    }
    if set.is_empty() {
        return Err(ConstructionError::EmptyLandmarkSet);
    }
    let dm = g.distances();
    if !is_resolving(g, &dm, variant, set).is_ok() {
        return Err(ConstructionError::NotResolving { variant });
    }

    let sprime = closed_neighborhood(g, set);
    let mut extended: Vec<usize> = sprime.clone();
    for s in set.iter() {
        let t = LandmarkSet::new(sprime.iter().copied().filter(|&v| v != s).collect())
            .expect("closed neighborhood is duplicate-free");
        let s_vec = item_vector(&dm, variant, Item::Vertex(s), &t).expect("vertex item");
        let colliders: Vec<usize> = (0..g.n())
            .filter(|&u| u != s)
            .filter(|&u| {
                item_vector(&dm, variant, Item::Vertex(u), &t).expect("vertex item") == s_vec
            })
            .collect();
        match colliders.as_slice() {
            [] => {}
            [u] => extended.push(*u),
            more => {
                return Err(ConstructionError::ClaimViolation(format!(
                    "removing landmark {s} leaves {} vertices unresolved from it: {more:?}",
                    more.len()
                )))
            }
        }
    }
    extended.sort_unstable();
    extended.dedup();
    let result = LandmarkSet::new(extended).expect("deduplicated");
    match is_fault_tolerant(g, &dm, variant, &result) {
        Ok(cert) if cert.is_ok() => Ok(result),
        Ok(cert) => Err(ConstructionError::ClaimViolation(format!(
            "constructed set is not fault tolerant: {cert}"
        ))),
        Err(_) => Err(ConstructionError::ClaimViolation(
            "constructed set is empty".into(),
        )),
    }
}

/// Grows a resolving set into a fault-tolerant one: close the neighborhood,
/// then for each landmark add the single vertex (when one exists) that its
/// removal leaves unresolved from it. Output size is at most
/// `|S| * (2 + 3^(|S|-1))` and is verified fault tolerant before returning.
pub fn ft_construct_metric(g: &Graph, set: &LandmarkSet) -> Result<LandmarkSet, ConstructionError> {
    ft_construct_vertex_variant(g, Variant::VertexMetric, set)
}

/// The truncated analogue of [`ft_construct_metric`], for a `k`-resolving
/// input set; the bound `|S| * (2 + 3^(|S|-1))` is unchanged.
pub fn ft_construct_truncated(
    g: &Graph,
    k: u32,
    set: &LandmarkSet,
) -> Result<LandmarkSet, ConstructionError> {
    ft_construct_vertex_variant(g, Variant::Truncated(k), set)
}

/// The edge-metric construction: close the neighborhood, then for each
/// landmark `s` and neighbor `u`, add the vertex `w` (when one exists) for
/// which the pencil edge `{s,u}` stays confused with `{u,w}`. Output size is
/// at most `|S| * (1 + 2^|S|)` and is verified fault tolerant.
pub fn ft_construct_edge(g: &Graph, set: &LandmarkSet) -> Result<LandmarkSet, ConstructionError> {
    if g.n() <= 1 {
        return Err(ConstructionError::OrderTooSmall);
    }
    if set.is_empty() {
        return Err(ConstructionError::EmptyLandmarkSet);
    }
    let dm = g.distances();
    let variant = Variant::EdgeMetric;
    if !is_resolving(g, &dm, variant, set).is_ok() {
        return Err(ConstructionError::NotResolving { variant });
    }

    let sprime = closed_neighborhood(g, set);
    let edges = g.edges();
    let mut extended: Vec<usize> = sprime.clone();
    for s in set.iter() {
        let t = LandmarkSet::new(sprime.iter().copied().filter(|&v| v != s).collect())
            .expect("closed neighborhood is duplicate-free");
        for u in g.neighbors(s) {
            let pencil = Item::edge(s, u);
            let pencil_vec = item_vector(&dm, variant, pencil, &t).expect("edge item");
            let colliders: Vec<(usize, usize)> = edges
                .iter()
                .copied()
                .filter(|&(a, b)| Item::edge(a, b) != pencil)
                .filter(|&(a, b)| {
                    item_vector(&dm, variant, Item::edge(a, b), &t).expect("edge item")
                        == pencil_vec
                })
                .collect();
            match colliders.as_slice() {
                [] => {}
                &[(a, b)] => {
                    if a != u && b != u {
                        return Err(ConstructionError::ClaimViolation(format!(
                            "edge {{{s},{u}}} collides with {{{a},{b}}}, which avoids {u}"
                        )));
                    }
                    extended.push(if a == u { b } else { a });
                }
                more => {
                    return Err(ConstructionError::ClaimViolation(format!(
                        "edge {{{s},{u}}} collides with {} edges: {more:?}",
                        more.len()
                    )))
                }
            }
        }
    }
    extended.sort_unstable();
    extended.dedup();
    let result = LandmarkSet::new(extended).expect("deduplicated");
    match is_fault_tolerant(g, &dm, variant, &result) {
        Ok(cert) if cert.is_ok() => Ok(result),
        Ok(cert) => Err(ConstructionError::ClaimViolation(format!(
            "constructed set is not fault tolerant: {cert}"
        ))),
        Err(_) => Err(ConstructionError::ClaimViolation(
            "constructed set is empty".into(),
        )),
    }
}

/// Attaches `r` pendant vertices to `v`. For connected graphs with an edge
/// this preserves the local metric dimension while pushing the maximum
/// degree to at least `r`.
pub fn pendant_extend(g: &Graph, v: usize, r: usize) -> Graph {
    assert!(v < g.n(), "pendant host out of range");
    let n = g.n();
    let mut edges = g.edges();
    edges.extend((0..r).map(|i| (v, n + i)));
    Graph::new(n + r, &edges).expect("pendant edges are new")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{min_fault_tolerant, min_resolving};

    #[test]
    fn j2_shape_and_distances() {
        let j2 = build_j(2);
        assert_eq!(j2.graph.n(), 11); // 1 + (9 - 3) + 4
        let dm = j2.graph.distances();
        let leaf02 = j2.find(&Role::Leaf("02".into())).unwrap();
        let s1 = j2.find(&Role::S(1)).unwrap();
        let s2 = j2.find(&Role::S(2)).unwrap();
        assert_eq!(dm.get(leaf02, s1), Distance::Finite(1));
        assert_eq!(dm.get(leaf02, s2), Distance::Finite(3));

        let leaf21 = j2.find(&Role::Leaf("21".into())).unwrap();
        let vec = item_vector(&dm, Variant::VertexMetric, Item::Vertex(leaf21), &j2.landmarks)
            .unwrap();
        assert_eq!(vec.0, vec![Distance::Finite(3), Distance::Finite(2)]);
    }

    #[test]
    fn j_family_dimension_is_k() {
        for k in [1, 2, 3] {
            let fam = build_j(k);
            assert_eq!(fam.graph.n(), 3usize.pow(k) + k as usize);
            if k >= 2 {
                let dm = fam.graph.distances();
                assert!(is_resolving(&fam.graph, &dm, fam.variant, &fam.landmarks).is_ok());
                assert_eq!(min_resolving(&fam.graph, fam.variant).dimension, k as usize);
            }
        }
    }

    #[test]
    fn j2_sibling_pair_distinguishers() {
        // leaves 02 and 12 differ only in the first digit (0 vs 1); the only
        // distinguishing vertices are the two leaves and s_1.
        let j2 = build_j(2);
        let dm = j2.graph.distances();
        let v = j2.find(&Role::Leaf("02".into())).unwrap();
        let w = j2.find(&Role::Leaf("12".into())).unwrap();
        let s1 = j2.find(&Role::S(1)).unwrap();
        let c = j2.find(&Role::Center).unwrap();
        let pair = (Item::Vertex(v), Item::Vertex(w));
        let who: Vec<usize> = (0..j2.graph.n())
            .filter(|&x| crate::resolve::distinguishes(&dm, Variant::VertexMetric, x, pair))
            .collect();
        let mut expected = vec![v, w, s1];
        expected.sort_unstable();
        assert_eq!(who, expected);
        assert!(!crate::resolve::distinguishes(&dm, Variant::VertexMetric, c, pair));
    }

    #[test]
    fn h_family_shape_and_dimension() {
        let h2 = build_h(2);
        assert_eq!(h2.graph.n(), 7);
        for u in h2.landmarks.iter() {
            assert_eq!(h2.graph.degree(u), 2);
        }
        assert_eq!(min_resolving(&h2.graph, Variant::EdgeMetric).dimension, 2);

        let h1 = build_h(1);
        assert_eq!(h1.graph.n(), 4);
        assert_eq!(h1.graph.edge_count(), 3); // the path u_1 - leaf0 - c - leaf1
    }

    #[test]
    fn h2_sibling_edge_pair_distinguishers() {
        let h2 = build_h(2);
        let dm = h2.graph.distances();
        let v = h2.find(&Role::Leaf("00".into())).unwrap();
        let w = h2.find(&Role::Leaf("10".into())).unwrap();
        let c = h2.find(&Role::Center).unwrap();
        let u1 = h2.find(&Role::U(1)).unwrap();
        let pair = (Item::edge(v, c), Item::edge(w, c));
        let who: Vec<usize> = (0..h2.graph.n())
            .filter(|&x| crate::resolve::distinguishes(&dm, Variant::EdgeMetric, x, pair))
            .collect();
        let mut expected = vec![v, w, u1];
        expected.sort_unstable();
        assert_eq!(who, expected);
    }

    #[test]
    fn a_family_shape_degrees_and_dimension() {
        let a3 = build_a(3);
        assert_eq!(a3.graph.n(), 11); // k + 2^k
        for u in a3.landmarks.iter() {
            assert_eq!(a3.graph.degree(u), 6); // 2^(k-1) + k - 1
        }
        assert_eq!(min_resolving(&a3.graph, Variant::Truncated(1)).dimension, 3);

        let a2 = build_a(2);
        assert_eq!(a2.graph.n(), 6);
        assert_eq!(min_resolving(&a2.graph, Variant::Truncated(1)).dimension, 2);
    }

    #[test]
    fn d_box_king_grid() {
        let fam = build_d_box(2, &[0, 0], &[2, 2]);
        assert_eq!(fam.graph.n(), 9);
        let center = fam.find(&Role::Lattice(vec![1, 1])).unwrap();
        assert_eq!(fam.graph.degree(center), 8);

        let path = build_d_box(1, &[0], &[3]);
        assert_eq!(path.graph.n(), 4);
        assert_eq!(path.graph.edge_count(), 3);
        assert_eq!(path.graph.max_degree(), 2);
    }

    #[test]
    fn i_family_verifies_and_has_sharp_landmark_degree() {
        let fam = build_i(2, 1).unwrap();
        assert_eq!(fam.graph.n(), 11); // 3x3 box plus two landmarks
        for s in fam.landmarks.iter() {
            assert_eq!(fam.graph.degree(s), 3); // 3^(k-1)
        }
        assert_eq!(min_resolving(&fam.graph, Variant::VertexMetric).dimension, 2);

        let fam = build_i(2, 2).unwrap();
        assert_eq!(min_resolving(&fam.graph, Variant::VertexMetric).dimension, 2);
    }

    #[test]
    fn i_2_3_layer_counts() {
        let fam = build_i(2, 3).unwrap();
        let dm = fam.graph.distances();
        for s in fam.landmarks.iter() {
            for j in [1u32, 2] {
                let at_j = (0..fam.graph.n())
                    .filter(|&u| u != s)
                    .filter(|&u| dm.get(u, s) == Distance::Finite(j))
                    .count();
                assert_eq!(at_j, (2 * j as usize + 1).pow(1)); // (2j+1)^(k-1)
            }
        }
    }

    #[test]
    fn ft_metric_on_p4_matches_the_hand_trace() {
        let g = Graph::path(4);
        let s = LandmarkSet::from([0]);
        let built = ft_construct_metric(&g, &s).unwrap();
        assert_eq!(built.as_slice(), &[0, 1, 2]);
    }

    #[test]
    fn ft_metric_on_k2() {
        let g = Graph::complete(2);
        let built = ft_construct_metric(&g, &LandmarkSet::from([0])).unwrap();
        assert_eq!(built.as_slice(), &[0, 1]);
    }

    #[test]
    fn ft_metric_on_j2_respects_bound() {
        let j2 = build_j(2);
        let built = ft_construct_metric(&j2.graph, &j2.landmarks).unwrap();
        let dm = j2.graph.distances();
        assert!(is_fault_tolerant(&j2.graph, &dm, Variant::VertexMetric, &built)
            .unwrap()
            .is_ok());
        assert!(built.len() <= 2 * (2 + 3)); // |S|(2 + 3^(|S|-1))
    }

    #[test]
    fn ft_metric_rejects_non_resolving_input() {
        let g = Graph::complete(4);
        assert_eq!(
            ft_construct_metric(&g, &LandmarkSet::from([0, 1])),
            Err(ConstructionError::NotResolving {
                variant: Variant::VertexMetric
            })
        );
    }

    #[test]
    fn ft_edge_small_cases() {
        let p3 = Graph::path(3);
        let built = ft_construct_edge(&p3, &LandmarkSet::from([0])).unwrap();
        assert!(built.len() <= 3);
        let dm = p3.distances();
        assert!(is_fault_tolerant(&p3, &dm, Variant::EdgeMetric, &built)
            .unwrap()
            .is_ok());

        let k2 = Graph::complete(2);
        let built = ft_construct_edge(&k2, &LandmarkSet::from([0])).unwrap();
        assert_eq!(built.as_slice(), &[0, 1]);
    }

    #[test]
    fn ft_edge_on_h2_respects_bound() {
        let h2 = build_h(2);
        let built = ft_construct_edge(&h2.graph, &h2.landmarks).unwrap();
        assert!(built.len() <= 2 * (1 + 4)); // |S|(1 + 2^|S|)
        let dm = h2.graph.distances();
        assert!(is_fault_tolerant(&h2.graph, &dm, Variant::EdgeMetric, &built)
            .unwrap()
            .is_ok());
    }

    #[test]
    fn ft_truncated_matches_metric_when_cap_exceeds_diameter() {
        let g = Graph::path(4);
        let s = LandmarkSet::from([0]);
        assert_eq!(
            ft_construct_truncated(&g, 3, &s).unwrap(),
            ft_construct_metric(&g, &s).unwrap()
        );
    }

    #[test]
    fn ft_truncated_rejects_insufficient_cap() {
        // The middle of P3 does not 1-resolve: both endpoints sit at
        // truncated distance 1.
        let g = Graph::path(3);
        assert_eq!(
            ft_construct_truncated(&g, 1, &LandmarkSet::from([1])),
            Err(ConstructionError::NotResolving {
                variant: Variant::Truncated(1)
            })
        );
    }

    #[test]
    fn ft_truncated_on_j2() {
        let j2 = build_j(2);
        let built = ft_construct_truncated(&j2.graph, 2, &j2.landmarks).unwrap();
        let dm = j2.graph.distances();
        assert!(is_fault_tolerant(&j2.graph, &dm, Variant::Truncated(2), &built)
            .unwrap()
            .is_ok());
        assert!(built.len() <= 2 * (2 + 3));
    }

    #[test]
    fn pendant_extension_preserves_local_dimension() {
        let k3 = Graph::complete(3);
        assert_eq!(min_resolving(&k3, Variant::Local).dimension, 2);
        let extended = pendant_extend(&k3, 0, 5);
        assert_eq!(extended.n(), 8);
        assert!(extended.max_degree() >= 5);
        assert_eq!(min_resolving(&extended, Variant::Local).dimension, 2);

        let c4 = Graph::cycle(4);
        assert_eq!(min_resolving(&c4, Variant::Local).dimension, 1);
        let extended = pendant_extend(&c4, 1, 3);
        assert_eq!(min_resolving(&extended, Variant::Local).dimension, 1);

        let before = Graph::path(3);
        let after = pendant_extend(&before, 1, 1);
        assert_eq!(after.n(), before.n() + 1);
        assert_eq!(after.edge_count(), before.edge_count() + 1);
    }

    #[test]
    fn family_lower_bounds_j2() {
        // exact values computed by this crate's solver and cross-checked by
        // the naive subset oracle in the integration tests
        let j2 = build_j(2);
        assert_eq!(min_fault_tolerant(&j2.graph, Variant::VertexMetric).dimension, 6);
    }

    #[test]
    fn label_file_format() {
        let h1 = build_h(1);
        let text = h1.label_file();
        assert!(text.starts_with("0\tcenter\n"));
        assert!(text.contains("\tleaf:0\n"));
        assert!(text.contains("\tu1\n"));
    }
}
