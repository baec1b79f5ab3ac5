//! Exact minimum set multicover over a [`DistinguishMatrix`], and the
//! dimension solvers built on it.
//!
//! A landmark set resolves iff it covers every pair at least once, and is
//! fault tolerant iff it covers every pair at least twice, so both exact
//! dimensions are minimum multicover instances. The search branches on the
//! pair with the fewest remaining candidate distinguishers, seeded with a
//! greedy incumbent; candidates are tried in ascending vertex order and
//! excluded on backtrack, which makes the search deterministic and
//! duplicate-free.

use crate::graph::{Graph, LandmarkSet};
use crate::resolve::{build_distinguish_matrix, DistinguishMatrix, Item, Variant};
use fixedbitset::FixedBitSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error(
        "infeasible: pair ({}, {}) has only {available} distinguishers in the whole graph, {required} required",
        pair.0, pair.1
    )]
    Infeasible {
        pair: (Item, Item),
        available: usize,
        required: usize,
    },
}

/// A minimum-cardinality vertex set covering every pair of `matrix` at least
/// `t` times.
///
/// With no pairs to cover the empty set is optimal; `forbid_empty` then
/// substitutes the single lowest-indexed vertex (or stays empty on the
/// 0-vertex graph, where no nonempty set exists).
pub fn min_multicover(
    matrix: &DistinguishMatrix,
    t: usize,
    forbid_empty: bool,
) -> Result<LandmarkSet, SolveError> {
    if t == 0 {
        return Err(SolveError::ZeroMultiplicity);
    }
    // Deduplicate identical distinguisher sets; coverage constraints are
    // identical for identical sets.
    let mut sets: Vec<&FixedBitSet> = Vec::with_capacity(matrix.pair_count());
    let mut set_pair: Vec<usize> = Vec::with_capacity(matrix.pair_count());
    for i in 0..matrix.pair_count() {
        let s = matrix.distinguishers_of(i);
        if !sets.contains(&s) {
            sets.push(s);
            set_pair.push(i);
        }
    }

    for (s, &pair_index) in sets.iter().zip(&set_pair) {
        let available = s.count_ones(..);
        if available < t {
            return Err(SolveError::Infeasible {
                pair: matrix.pairs()[pair_index],
                available,
                required: t,
            });
        }
    }

    if sets.is_empty() {
        let vertices = if forbid_empty && matrix.n() > 0 { vec![0] } else { vec![] };
        return Ok(LandmarkSet::new(vertices).expect("no duplicates"));
    }

    let mut search = Search {
        n: matrix.n(),
        sets,
        t,
        best: greedy_cover(matrix.n(), matrix, t),
    };
    let coverage = vec![0usize; search.sets.len()];
    let chosen = FixedBitSet::with_capacity(search.n);
    let excluded = FixedBitSet::with_capacity(search.n);
    search.descend(&chosen, &excluded, &coverage, 0);
    let mut vertices: Vec<usize> = search.best;
    vertices.sort_unstable();
    Ok(LandmarkSet::new(vertices).expect("solver output has no duplicates"))
}

/// Greedy incumbent: repeatedly take the vertex covering the most deficient
/// pairs, lowest index on ties.
fn greedy_cover(n: usize, matrix: &DistinguishMatrix, t: usize) -> Vec<usize> {
    let mut need: Vec<usize> = vec![t; matrix.pair_count()];
    let mut chosen = Vec::new();
    let mut in_set = FixedBitSet::with_capacity(n);
    while need.iter().any(|&d| d > 0) {
        let v = (0..n)
            .filter(|&v| !in_set.contains(v))
            .max_by_key(|&v| {
                let gain = (0..matrix.pair_count())
                    .filter(|&i| need[i] > 0 && matrix.distinguishers_of(i).contains(v))
                    .count();
                (gain, std::cmp::Reverse(v))
            })
            .expect("feasibility checked before greedy");
        chosen.push(v);
        in_set.insert(v);
        for i in 0..matrix.pair_count() {
            if need[i] > 0 && matrix.distinguishers_of(i).contains(v) {
                need[i] -= 1;
            }
        }
    }
    chosen.sort_unstable();
    chosen
}

struct Search<'a> {
    n: usize,
    sets: Vec<&'a FixedBitSet>,
    t: usize,
    best: Vec<usize>,
}

impl Search<'_> {
    fn descend(
        &mut self,
        chosen: &FixedBitSet,
        excluded: &FixedBitSet,
        coverage: &[usize],
        chosen_count: usize,
    ) {
        if chosen_count + 1 >= self.best.len() {
            // Even one more vertex cannot beat the incumbent, and every
            // deficient branch below adds at least one.
            if chosen_count < self.best.len() && coverage.iter().all(|&c| c >= self.t) {
                self.best = chosen.ones().collect();
            }
            return;
        }

        // Branch on the deficient set with the fewest remaining candidates.
        let mut branch: Option<(usize, usize)> = None; // (candidate count, set index)
        let mut max_deficiency = 0;
        for (i, s) in self.sets.iter().enumerate() {
            let deficiency = self.t.saturating_sub(coverage[i]);
            if deficiency == 0 {
                continue;
            }
            max_deficiency = max_deficiency.max(deficiency);
            let mut candidates = (*s).clone();
            candidates.difference_with(chosen);
            candidates.difference_with(excluded);
            let available = candidates.count_ones(..);
            if available < deficiency {
                return; // exclusions made this branch infeasible
            }
            if branch.map_or(true, |(count, _)| available < count) {
                branch = Some((available, i));
            }
        }

        let Some((_, pick)) = branch else {
            // Fully covered.
            if chosen_count < self.best.len() {
                self.best = chosen.ones().collect();
            }
            return;
        };

        if chosen_count + max_deficiency >= self.best.len() {
            return;
        }

        let mut candidates = self.sets[pick].clone();
        candidates.difference_with(chosen);
        candidates.difference_with(excluded);
        let mut excluded = excluded.clone();
        for v in candidates.ones().collect::<Vec<_>>() {
            let mut chosen = chosen.clone();
            chosen.insert(v);
            let mut coverage = coverage.to_vec();
            for (i, s) in self.sets.iter().enumerate() {
                if s.contains(v) {
                    coverage[i] += 1;
                }
            }
            self.descend(&chosen, &excluded, &coverage, chosen_count + 1);
            excluded.insert(v);
        }
    }
}

/// Result of an exact dimension computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    pub dimension: usize,
    pub witness: LandmarkSet,
}

/// Result of an exact fault-tolerant dimension computation.
///
/// `no_nonempty_set` flags the 0-vertex graph, where the definition's
/// required nonempty set does not exist and the dimension is reported as 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FtResolution {
    pub dimension: usize,
    pub witness: LandmarkSet,
    pub no_nonempty_set: bool,
}

/// The exact dimension of `g` under `variant`, with a minimum witness.
///
/// Dimension 0 with an empty witness means the empty set already resolves.
pub fn min_resolving(g: &Graph, variant: Variant) -> Resolution {
    let dm = g.distances();
    let matrix = build_distinguish_matrix(g, &dm, variant);
    min_resolving_from(&matrix)
}

/// As [`min_resolving`], reusing a prebuilt matrix.
pub fn min_resolving_from(matrix: &DistinguishMatrix) -> Resolution {
    // Every vertex pair is distinguished by either of its two vertices, and
    // every edge pair by an endpoint the other edge does not contain, so
    // multiplicities 1 and 2 are always feasible.
    let witness = min_multicover(matrix, 1, false).expect("single cover is always feasible");
    Resolution {
        dimension: witness.len(),
        witness,
    }
}

/// The exact fault-tolerant dimension of `g` under `variant`: minimum
/// multicover with multiplicity 2 over nonempty sets.
pub fn min_fault_tolerant(g: &Graph, variant: Variant) -> FtResolution {
    let dm = g.distances();
    let matrix = build_distinguish_matrix(g, &dm, variant);
    min_fault_tolerant_from(&matrix)
}

/// As [`min_fault_tolerant`], reusing a prebuilt matrix.
pub fn min_fault_tolerant_from(matrix: &DistinguishMatrix) -> FtResolution {
    let witness = min_multicover(matrix, 2, true).expect("double cover is always feasible");
    FtResolution {
        dimension: witness.len(),
        witness,
        no_nonempty_set: matrix.n() == 0,
    }
}
