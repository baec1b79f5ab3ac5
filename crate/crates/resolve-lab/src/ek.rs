//! Union-distinct set families and their equivalence with cliques in graphs
//! of bounded edge metric dimension.
//!
//! A family of subsets of `{1..k}` is *union-distinct* when the unions over
//! unordered pairs of distinct members are pairwise distinct; `ek(k)` is the
//! maximum size of such a family. The maximum clique number over graphs of
//! edge metric dimension at most `k`, `mc(k)`, equals `ek(k)`, and both
//! directions of that equivalence are constructive: a family becomes a
//! graph whose clique realizes it, and a clique plus an edge resolving set
//! projects back onto a family.

use crate::formats::graph_to_graph6;
use crate::graph::{Distance, Graph, GraphError, LandmarkSet};
use crate::resolve::{is_resolving, Variant};
use crate::solver::min_resolving;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EkError {
    #[error("ground set size must be between 1 and {MAX_EK_GROUND}, got {0}")]
    GroundOutOfRange(u32),
    #[error("member {member:#b} is not a subset of the ground set of size {ground_k}")]
    MemberOutOfGround { member: u32, ground_k: u32 },
    #[error("duplicate family member {0:#b}")]
    DuplicateMember(u32),
    #[error("the family is not union-distinct: members {pair_a:?} and {pair_b:?} share the union {shared_union:#b}")]
    NotUnionDistinct {
        pair_a: (usize, usize),
        pair_b: (usize, usize),
        shared_union: u32,
    },
    #[error("exact search is limited to ground sets of size {MAX_EK_SEARCH}, got {0}")]
    SearchTooLarge(u32),
    #[error("the given vertices do not form a clique: {0} and {1} are not adjacent")]
    NotAClique(usize, usize),
    #[error("duplicate clique vertex {0}")]
    DuplicateCliqueVertex(usize),
    #[error("the given landmarks do not edge-resolve the graph")]
    NotEdgeResolving,
    #[error("family line {line}: cannot parse {found:?}")]
    MalformedFamilyLine { line: usize, found: String },
    #[error("family line {line}: element {element} outside 1..={ground_k}")]
    FamilyElementOutOfRange { line: usize, element: u32, ground_k: u32 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Largest supported ground set for family representation.
pub const MAX_EK_GROUND: u32 = 16;
/// Largest ground set the exact `ek` search accepts; the branch and bound
/// is still exhaustive but the family space is `2^(2^k)`.
pub const MAX_EK_SEARCH: u32 = 6;

/// How to read "all pairwise unions are distinct".
///
/// The default compares unions over unordered pairs of *distinct* members
/// only, which is exactly what the clique construction needs: a union may
/// still coincide with a single member. `Strict` additionally counts each
/// member as the union of the pair `(A, A)`, which forbids both duplicate
/// unions and a union landing on a member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UnionRule {
    #[default]
    DistinctPairs,
    Strict,
}

/// A collision witness: two unordered index pairs with the same union. In
/// strict mode a pair may be degenerate, standing for the member itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UnionCollision {
    pub pair_a: (usize, usize),
    pub pair_b: (usize, usize),
    pub shared_union: u32,
}

/// A duplicate-free family of subsets of `{1..ground_k}`, each member a
/// bitmask with bit `i - 1` standing for element `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetFamily {
    ground_k: u32,
    members: Vec<u32>,
}

impl SubsetFamily {
    pub fn new(ground_k: u32, members: Vec<u32>) -> Result<Self, EkError> {
        if ground_k == 0 || ground_k > MAX_EK_GROUND {
            return Err(EkError::GroundOutOfRange(ground_k));
        }
        let ground_mask = (1u32 << ground_k) - 1;
        let mut seen = std::collections::HashSet::new();
        for &m in &members {
            if m & !ground_mask != 0 {
                return Err(EkError::MemberOutOfGround { member: m, ground_k });
            }
            if !seen.insert(m) {
                return Err(EkError::DuplicateMember(m));
            }
        }
        Ok(SubsetFamily { ground_k, members })
    }

    pub fn ground_k(&self) -> u32 {
        self.ground_k
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    /// Finds two pairs with the same union, if any.
    pub fn union_collision(&self, rule: UnionRule) -> Option<UnionCollision> {
        let mut seen: std::collections::HashMap<u32, (usize, usize)> =
            std::collections::HashMap::new();
        let m = self.members.len();
        if rule == UnionRule::Strict {
            for (i, &a) in self.members.iter().enumerate() {
                if let Some(&prev) = seen.get(&a) {
                    return Some(UnionCollision {
                        pair_a: prev,
                        pair_b: (i, i),
                        shared_union: a,
                    });
                }
                seen.insert(a, (i, i));
            }
        }
        for i in 0..m {
            for j in (i + 1)..m {
                let u = self.members[i] | self.members[j];
                if let Some(&prev) = seen.get(&u) {
                    return Some(UnionCollision {
                        pair_a: prev,
                        pair_b: (i, j),
                        shared_union: u,
                    });
                }
                seen.insert(u, (i, j));
            }
        }
        None
    }

    pub fn is_union_distinct(&self, rule: UnionRule) -> bool {
        self.union_collision(rule).is_none()
    }

    /// Serializes in the family file format: one member per line, `-` for
    /// the empty set, otherwise comma-separated 1-based elements.
    pub fn to_file_format(&self) -> String {
        let mut out = String::new();
        for &m in &self.members {
            if m == 0 {
                out.push('-');
            } else {
                let elems: Vec<String> = (0..self.ground_k)
                    .filter(|&b| m >> b & 1 == 1)
                    .map(|b| (b + 1).to_string())
                    .collect();
                out.push_str(&elems.join(","));
            }
            out.push('\n');
        }
        out
    }

    /// Parses the family file format over a ground set of size `ground_k`.
    pub fn from_file_format(text: &str, ground_k: u32) -> Result<Self, EkError> {
        let mut members = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            if body == "-" {
                members.push(0);
                continue;
            }
            let mut mask = 0u32;
            for part in body.split(',') {
                let element: u32 = part.trim().parse().map_err(|_| {
                    EkError::MalformedFamilyLine {
                        line,
                        found: body.to_string(),
                    }
                })?;
                if element == 0 || element > ground_k {
                    return Err(EkError::FamilyElementOutOfRange {
                        line,
                        element,
                        ground_k,
                    });
                }
                mask |= 1 << (element - 1);
            }
            members.push(mask);
        }
        SubsetFamily::new(ground_k, members)
    }
}

/// Result of the exact `ek` search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EkResult {
    pub value: usize,
    /// The lexicographically least maximum family (members as sorted masks).
    pub witness: SubsetFamily,
}

/// The exact maximum size of a union-distinct family of subsets of
/// `{1..k}`, by depth-first search over families in lexicographic mask
/// order with capacity pruning. The first maximum found is the
/// lexicographically least one.
pub fn ek_bruteforce(k: u32, rule: UnionRule) -> Result<EkResult, EkError> {
    if k == 0 || k > MAX_EK_SEARCH {
        return Err(EkError::SearchTooLarge(k));
    }
    let masks: u32 = 1 << k;
    let mut best: Vec<u32> = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    // `used` marks unions already present; in strict mode members count too.
    let mut used = vec![false; masks as usize];
    dfs(k, rule, 0, masks, &mut current, &mut used, &mut best);
    let witness = SubsetFamily::new(k, best).expect("search output is valid");
    Ok(EkResult {
        value: witness.len(),
        witness,
    })
}

fn dfs(
    k: u32,
    rule: UnionRule,
    next: u32,
    masks: u32,
    current: &mut Vec<u32>,
    used: &mut [bool],
    best: &mut Vec<u32>,
) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    // count the candidates that are individually compatible; prune when even
    // taking all of them cannot beat the best
    let mut compatible = Vec::new();
    for m in next..masks {
        if can_add(rule, current, used, m) {
            compatible.push(m);
        }
    }
    if current.len() + compatible.len() <= best.len() {
        return;
    }
    for (i, &m) in compatible.iter().enumerate() {
        if current.len() + (compatible.len() - i) <= best.len() {
            return;
        }
        let added = add_member(rule, current, used, m);
        dfs(k, rule, m + 1, masks, current, used, best);
        undo_member(rule, current, used, &added);
    }
}

fn can_add(rule: UnionRule, current: &[u32], used: &[bool], m: u32) -> bool {
    if rule == UnionRule::Strict && used[m as usize] {
        return false;
    }
    let mut fresh = std::collections::HashSet::new();
    for &a in current {
        let u = (a | m) as usize;
        if used[u] || !fresh.insert(u) {
            return false;
        }
        if rule == UnionRule::Strict && u == m as usize {
            // the new member equals a union involving itself
            return false;
        }
    }
    true
}

fn add_member(rule: UnionRule, current: &mut Vec<u32>, used: &mut [bool], m: u32) -> Vec<usize> {
    let mut marked = Vec::new();
    for &a in current.iter() {
        let u = (a | m) as usize;
        used[u] = true;
        marked.push(u);
    }
    if rule == UnionRule::Strict {
        used[m as usize] = true;
        marked.push(m as usize);
    }
    current.push(m);
    marked
}

fn undo_member(_rule: UnionRule, current: &mut Vec<u32>, used: &mut [bool], marked: &[usize]) {
    current.pop();
    for &u in marked {
        used[u] = false;
    }
}

/// The graph realizing a union-distinct family: vertices `u_1..u_k` and a
/// clique `v_1..v_m`, with `u_i` adjacent to `v_j` exactly when `i` lies in
/// the `j`-th member.
#[derive(Debug, Clone)]
pub struct FamilyGraph {
    pub graph: Graph,
    /// `u_1..u_k`, an edge resolving set by construction.
    pub landmarks: LandmarkSet,
    /// `v_1..v_m`, one clique vertex per family member.
    pub clique: Vec<usize>,
}

/// Builds the clique construction from a union-distinct family.
pub fn family_to_graph(family: &SubsetFamily) -> Result<FamilyGraph, EkError> {
    if let Some(c) = family.union_collision(UnionRule::DistinctPairs) {
        return Err(EkError::NotUnionDistinct {
            pair_a: c.pair_a,
            pair_b: c.pair_b,
            shared_union: c.shared_union,
        });
    }
    let k = family.ground_k() as usize;
    let m = family.len();
    let mut edges = Vec::new();
    for a in 0..m {
        for b in (a + 1)..m {
            edges.push((k + a, k + b));
        }
    }
    for (j, &member) in family.members().iter().enumerate() {
        for i in 0..k {
            if member >> i & 1 == 1 {
                edges.push((i, k + j));
            }
        }
    }
    let graph = Graph::new(k + m, &edges)?;
    let landmarks = LandmarkSet::new((0..k).collect()).expect("distinct");
    Ok(FamilyGraph {
        graph,
        landmarks,
        clique: (k..k + m).collect(),
    })
}

/// Projects a clique back onto a subset family: with `p_i` the least
/// distance from the clique to landmark `i`, member `j` collects the
/// landmarks at distance exactly `p_i` from clique vertex `j`. The output is
/// union-distinct whenever the landmarks edge-resolve; that is verified and
/// a failure is reported as a violated claim rather than papered over.
pub fn clique_to_family(
    g: &Graph,
    clique: &[usize],
    landmarks: &LandmarkSet,
) -> Result<SubsetFamily, EkError> {
    let mut seen = std::collections::HashSet::new();
    for &v in clique {
        if !seen.insert(v) {
            return Err(EkError::DuplicateCliqueVertex(v));
        }
    }
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            if !g.has_edge(u, v) {
                return Err(EkError::NotAClique(u, v));
            }
        }
    }
    let dm = g.distances();
    if !is_resolving(g, &dm, Variant::EdgeMetric, landmarks).is_ok() {
        return Err(EkError::NotEdgeResolving);
    }

    let least: Vec<Distance> = landmarks
        .iter()
        .map(|u| {
            clique
                .iter()
                .map(|&v| dm.get(v, u))
                .min()
                .expect("clique is nonempty")
        })
        .collect();
    let members: Vec<u32> = clique
        .iter()
        .map(|&v| {
            let mut mask = 0u32;
            for (i, u) in landmarks.iter().enumerate() {
                if dm.get(v, u) == least[i] {
                    mask |= 1 << i;
                }
            }
            mask
        })
        .collect();
    let family = SubsetFamily::new(landmarks.len() as u32, members)?;
    if let Some(c) = family.union_collision(UnionRule::DistinctPairs) {
        return Err(EkError::NotUnionDistinct {
            pair_a: c.pair_a,
            pair_b: c.pair_b,
            shared_union: c.shared_union,
        });
    }
    Ok(family)
}

/// Outcome of the two-direction equivalence check between `ek(k)` and the
/// maximum clique number over graphs of edge dimension at most `k`.
#[derive(Debug, Clone, Serialize)]
pub struct McEkReport {
    pub k: u32,
    pub n_max: usize,
    pub ek_value: usize,
    /// Construction direction: the witness family's graph.
    pub construction_edim: usize,
    pub construction_clique: usize,
    pub construction_ok: bool,
    /// Scan direction: graphs with `edim <= k` but clique `> ek(k)`.
    pub graphs_scanned: u64,
    pub counterexamples: Vec<String>,
}

impl McEkReport {
    pub fn ok(&self) -> bool {
        self.construction_ok && self.counterexamples.is_empty()
    }
}

/// Checks both directions of `mc(k) = ek(k)` at desk scale: the witness
/// family's graph must have edge dimension at most `k` and clique number at
/// least `ek(k)`, and no graph of order at most `n_max` may beat `ek(k)`
/// with edge dimension at most `k`.
pub fn verify_mc_ek(k: u32, n_max: usize) -> Result<McEkReport, EkError> {
    if n_max > crate::graph::MAX_ENUMERATION_N {
        return Err(EkError::Graph(GraphError::EnumerationTooLarge(n_max)));
    }
    let ek = ek_bruteforce(k, UnionRule::DistinctPairs)?;
    let built = family_to_graph(&ek.witness)?;
    let construction_edim = min_resolving(&built.graph, Variant::EdgeMetric).dimension;
    let construction_clique = built.graph.clique_number();
    let construction_ok =
        construction_edim <= k as usize && construction_clique >= ek.value;

    let mut graphs_scanned = 0u64;
    let mut counterexamples = Vec::new();
    for n in 1..=n_max {
        let bits = n * (n - 1) / 2;
        let mut found: Vec<String> = (0u64..1 << bits)
            .into_par_iter()
            .filter_map(|mask| {
                let g = Graph::from_edge_mask(n, mask);
                if g.clique_number() <= ek.value {
                    return None;
                }
                let edim = min_resolving(&g, Variant::EdgeMetric).dimension;
                (edim <= k as usize)
                    .then(|| graph_to_graph6(&g).expect("scan graphs are small"))
            })
            .collect();
        graphs_scanned += 1 << bits;
        counterexamples.append(&mut found);
    }
    Ok(McEkReport {
        k,
        n_max,
        ek_value: ek.value,
        construction_edim,
        construction_clique,
        construction_ok,
        graphs_scanned,
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(k: u32, members: &[u32]) -> SubsetFamily {
        SubsetFamily::new(k, members.to_vec()).unwrap()
    }

    #[test]
    fn union_distinct_basics() {
        // {∅, {1}, {2}} over ground 2: unions {1}, {2}, {1,2} are distinct
        assert!(family(2, &[0b00, 0b01, 0b10]).is_union_distinct(UnionRule::DistinctPairs));
        // adding {1,2} collides: {1} ∪ {2} = ∅ ∪ {1,2}
        let f = family(2, &[0b00, 0b01, 0b10, 0b11]);
        let c = f.union_collision(UnionRule::DistinctPairs).unwrap();
        assert_eq!(c.shared_union, 0b11);
        // families of size <= 1 are trivially union-distinct
        assert!(family(2, &[0b01]).is_union_distinct(UnionRule::DistinctPairs));
        assert!(family(2, &[]).is_union_distinct(UnionRule::DistinctPairs));
    }

    #[test]
    fn strict_rule_forbids_member_unions() {
        // {1} ∪ {2} = {1,2}, which is a member: fine by default, not strictly
        let f = family(2, &[0b01, 0b10, 0b11]);
        assert!(!f.is_union_distinct(UnionRule::DistinctPairs)); // {1}∪{12} = {2}∪{12}
        let f = family(3, &[0b001, 0b010, 0b011]);
        assert!(f.is_union_distinct(UnionRule::DistinctPairs));
        assert!(!f.is_union_distinct(UnionRule::Strict));
    }

    #[test]
    fn family_validation() {
        assert!(matches!(
            SubsetFamily::new(2, vec![0b100]),
            Err(EkError::MemberOutOfGround { .. })
        ));
        assert!(matches!(
            SubsetFamily::new(2, vec![1, 1]),
            Err(EkError::DuplicateMember(1))
        ));
        assert!(matches!(
            SubsetFamily::new(0, vec![]),
            Err(EkError::GroundOutOfRange(0))
        ));
    }

    #[test]
    fn ek_small_values() {
        // frozen from exhaustive enumeration over all 2^(2^k) families,
        // reproduced independently in the integration suite
        assert_eq!(ek_bruteforce(1, UnionRule::DistinctPairs).unwrap().value, 2);
        let e2 = ek_bruteforce(2, UnionRule::DistinctPairs).unwrap();
        assert_eq!(e2.value, 3);
        assert_eq!(e2.witness.members(), &[0b00, 0b01, 0b10]);
        assert_eq!(ek_bruteforce(3, UnionRule::DistinctPairs).unwrap().value, 4);
        assert_eq!(ek_bruteforce(4, UnionRule::DistinctPairs).unwrap().value, 5);
    }

    #[test]
    fn ek_strict_small_values() {
        assert_eq!(ek_bruteforce(1, UnionRule::Strict).unwrap().value, 1);
        assert_eq!(ek_bruteforce(2, UnionRule::Strict).unwrap().value, 2);
        assert_eq!(ek_bruteforce(3, UnionRule::Strict).unwrap().value, 3);
        assert_eq!(ek_bruteforce(4, UnionRule::Strict).unwrap().value, 4);
    }

    #[test]
    fn ek_rejects_out_of_range() {
        assert!(matches!(
            ek_bruteforce(7, UnionRule::DistinctPairs),
            Err(EkError::SearchTooLarge(7))
        ));
        assert!(matches!(
            ek_bruteforce(0, UnionRule::DistinctPairs),
            Err(EkError::SearchTooLarge(0))
        ));
    }

    #[test]
    fn family_graph_construction() {
        let f = family(2, &[0b00, 0b01, 0b10]);
        let built = family_to_graph(&f).unwrap();
        assert_eq!(built.graph.n(), 5);
        // triangle on the v's, u_1-v_2, u_2-v_3
        assert!(built.graph.has_edge(2, 3));
        assert!(built.graph.has_edge(2, 4));
        assert!(built.graph.has_edge(3, 4));
        assert!(built.graph.has_edge(0, 3));
        assert!(built.graph.has_edge(1, 4));
        assert_eq!(built.graph.edge_count(), 5);
        assert!(min_resolving(&built.graph, Variant::EdgeMetric).dimension <= 2);
        assert_eq!(built.graph.clique_number(), 3);

        let single = family_to_graph(&family(2, &[0b00])).unwrap();
        assert_eq!(single.graph.n(), 3);
        assert_eq!(single.graph.edge_count(), 0);
    }

    #[test]
    fn family_graph_rejects_collisions() {
        let f = family(2, &[0b00, 0b01, 0b10, 0b11]);
        assert!(matches!(
            family_to_graph(&f),
            Err(EkError::NotUnionDistinct { .. })
        ));
    }

    #[test]
    fn clique_round_trip() {
        let f = family(2, &[0b00, 0b01, 0b10]);
        let built = family_to_graph(&f).unwrap();
        let back = clique_to_family(&built.graph, &built.clique, &built.landmarks).unwrap();
        assert_eq!(back.len(), f.len());
        assert!(back.is_union_distinct(UnionRule::DistinctPairs));
    }

    #[test]
    fn clique_to_family_on_a_path() {
        // K_2 clique inside P3 with an endpoint landmark
        let g = Graph::path(3);
        let f = clique_to_family(&g, &[0, 1], &LandmarkSet::from([0])).unwrap();
        assert_eq!(f.len(), 2);
        // singleton cliques are trivially fine
        let f = clique_to_family(&g, &[2], &LandmarkSet::from([0])).unwrap();
        assert_eq!(f.len(), 1);
    }

    #[test]
    fn clique_to_family_validates_inputs() {
        let g = Graph::path(3);
        assert!(matches!(
            clique_to_family(&g, &[0, 2], &LandmarkSet::from([0])),
            Err(EkError::NotAClique(0, 2))
        ));
        assert!(matches!(
            clique_to_family(&g, &[0, 0], &LandmarkSet::from([0])),
            Err(EkError::DuplicateCliqueVertex(0))
        ));
        assert!(matches!(
            clique_to_family(&g, &[0, 1], &LandmarkSet::from([1])),
            Err(EkError::NotEdgeResolving)
        ));
    }

    #[test]
    fn file_format_round_trip() {
        let f = family(3, &[0b000, 0b101, 0b010]);
        let text = f.to_file_format();
        assert_eq!(text, "-\n1,3\n2\n");
        assert_eq!(SubsetFamily::from_file_format(&text, 3).unwrap(), f);
    }

    #[test]
    fn file_format_errors() {
        assert!(matches!(
            SubsetFamily::from_file_format("1,x", 3),
            Err(EkError::MalformedFamilyLine { line: 1, .. })
        ));
        assert!(matches!(
            SubsetFamily::from_file_format("4", 3),
            Err(EkError::FamilyElementOutOfRange { line: 1, element: 4, .. })
        ));
    }

    #[test]
    fn mc_ek_tiny() {
        let rep = verify_mc_ek(1, 4).unwrap();
        assert_eq!(rep.ek_value, 2);
        assert!(rep.ok(), "{rep:?}");
    }
}
