//! Breadth-first exploration of the mutation class of a seed.
//!
//! Seeds are deduplicated exactly — two seeds coincide when both their
//! cluster tuples and their quivers agree — so the result is the labeled
//! exchange graph of the class, finite pieces of which can be explored under
//! explicit seed-count and depth limits with an honest report of truncation.

use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::seed::{MutationWord, Seed};
use std::collections::{BTreeSet, HashMap, VecDeque};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExploreLimits {
    pub max_seeds: usize,
    pub max_depth: usize,
}

impl Default for ExploreLimits {
    fn default() -> Self {
        ExploreLimits { max_seeds: 20_000, max_depth: 64 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Truncation {
    /// The seed cap was reached before the class was exhausted.
    SeedCap,
    /// Some seed at the depth limit was left unexpanded.
    DepthCap,
}

#[derive(Debug, Clone)]
pub struct MutationClassGraph {
    seeds: Vec<Seed>,
    /// `adjacency[id][k]` is the seed reached from `id` by mutating at `k`,
    /// when that step has been computed.
    adjacency: Vec<Vec<Option<usize>>>,
    parents: Vec<Option<(usize, usize)>>,
    depths: Vec<usize>,
    truncation: Option<Truncation>,
}

/// Explores the mutation class of `start` breadth-first, mutating in every
/// direction in ascending order, until the class is exhausted or a limit
/// trips. Seed ids are assigned in discovery order, so the numbering is
/// deterministic for a given start seed.
pub fn explore(start: &Seed, limits: &ExploreLimits) -> Result<MutationClassGraph, Error> {
    let n = start.n();
    let mut seeds = vec![start.clone()];
    let mut index: HashMap<Seed, usize> = HashMap::new();
    index.insert(start.clone(), 0);
    let mut adjacency = vec![vec![None; n]];
    let mut parents: Vec<Option<(usize, usize)>> = vec![None];
    let mut depths = vec![0usize];
    let mut queue: VecDeque<usize> = VecDeque::new();
    queue.push_back(0);
    let mut truncation = None;

    'bfs: while let Some(id) = queue.pop_front() {
        if depths[id] >= limits.max_depth {
            if adjacency[id].iter().any(|slot| slot.is_none()) {
                truncation = Some(Truncation::DepthCap);
            }
            continue;
        }
        for k in 0..n {
            if adjacency[id][k].is_some() {
                continue;
            }
            let neighbor = seeds[id].mutate(k)?;
            let nid = match index.get(&neighbor) {
                Some(&nid) => nid,
                None => {
                    if seeds.len() >= limits.max_seeds {
                        truncation = Some(Truncation::SeedCap);
                        break 'bfs;
                    }
                    let nid = seeds.len();
                    seeds.push(neighbor.clone());
                    index.insert(neighbor, nid);
                    adjacency.push(vec![None; n]);
                    parents.push(Some((id, k)));
                    depths.push(depths[id] + 1);
                    queue.push_back(nid);
                    nid
                }
            };
            adjacency[id][k] = Some(nid);
            // Mutation is an involution, so the step back is known too.
            adjacency[nid][k] = Some(id);
        }
    }

    Ok(MutationClassGraph { seeds, adjacency, parents, depths, truncation })
}

impl MutationClassGraph {
    pub fn len(&self) -> usize {
        self.seeds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seeds.is_empty()
    }

    pub fn seeds(&self) -> &[Seed] {
        &self.seeds
    }

    pub fn seed(&self, id: usize) -> &Seed {
        &self.seeds[id]
    }

    pub fn rank(&self) -> usize {
        self.seeds[0].n()
    }

    pub fn depth(&self, id: usize) -> usize {
        self.depths[id]
    }

    pub fn complete(&self) -> bool {
        self.truncation.is_none()
    }

    pub fn truncation(&self) -> Option<Truncation> {
        self.truncation
    }

    pub fn neighbor(&self, id: usize, direction: usize) -> Option<usize> {
        self.adjacency[id][direction]
    }

    /// Every computed mutation step as `(seed, direction, neighbor)`.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(id, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(k, slot)| slot.map(|nid| (id, k, nid)))
        })
    }

    /// A shortest mutation word from the start seed to `id`, read left to
    /// right.
    pub fn word_to(&self, id: usize) -> MutationWord {
        let mut letters = Vec::new();
        let mut cursor = id;
        while let Some((parent, k)) = self.parents[cursor] {
            letters.push(k);
            cursor = parent;
        }
        letters.reverse();
        MutationWord(letters)
    }

    /// The distinct unordered clusters seen so far.
    pub fn cluster_count(&self) -> usize {
        let sets: BTreeSet<BTreeSet<&LaurentPoly>> = self
            .seeds
            .iter()
            .map(|s| s.cluster().iter().collect())
            .collect();
        sets.len()
    }

    /// The distinct cluster variables seen so far.
    pub fn variables(&self) -> BTreeSet<&LaurentPoly> {
        self.seeds.iter().flat_map(|s| s.cluster().iter()).collect()
    }

    pub fn variable_count(&self) -> usize {
        self.variables().len()
    }

    /// True when every cluster variable seen is a Laurent polynomial with
    /// positive coefficients.
    pub fn all_variables_positive(&self) -> bool {
        self.variables().iter().all(|v| v.has_positive_coefficients())
    }

    /// Checks that seeds with equal cluster tuples carry equal quivers, i.e.
    /// the cluster alone pins down the rest of the seed.
    pub fn cluster_determines_quiver(&self) -> bool {
        let mut seen: HashMap<&[LaurentPoly], usize> = HashMap::new();
        for (id, seed) in self.seeds.iter().enumerate() {
            match seen.get(seed.cluster()) {
                None => {
                    seen.insert(seed.cluster(), id);
                }
                Some(&other) => {
                    if self.seeds[other].quiver() != seed.quiver() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::ValuedQuiver;
    use num_bigint::BigInt;
    use std::collections::BTreeMap;

    fn two_vertex_quiver(v: i64, w: i64) -> ValuedQuiver {
        let mut arrows = BTreeMap::new();
        arrows.insert((0, 1), (BigInt::from(v), BigInt::from(w)));
        ValuedQuiver::from_arrows(2, arrows).unwrap()
    }

    fn path_quiver_a3() -> ValuedQuiver {
        let mut arrows = BTreeMap::new();
        arrows.insert((0, 1), (BigInt::from(1), BigInt::from(1)));
        arrows.insert((1, 2), (BigInt::from(1), BigInt::from(1)));
        ValuedQuiver::from_arrows(3, arrows).unwrap()
    }

    #[test]
    fn rank_two_single_arrow_class_counts() {
        // (v, w) arrow valuations against (labeled seeds, clusters, variables).
        let cases = [
            ((1, 1), (10, 5, 5)),
            ((2, 1), (6, 6, 6)),
            ((3, 1), (8, 8, 8)),
        ];
        for ((v, w), (labeled, clusters, variables)) in cases {
            let g = explore(
                &Seed::initial(two_vertex_quiver(v, w)),
                &ExploreLimits::default(),
            )
            .unwrap();
            assert!(g.complete(), "({v},{w}) should be finite");
            assert_eq!(g.len(), labeled, "labeled seeds for ({v},{w})");
            assert_eq!(g.cluster_count(), clusters, "clusters for ({v},{w})");
            assert_eq!(g.variable_count(), variables, "variables for ({v},{w})");
            assert!(g.all_variables_positive());
            assert!(g.cluster_determines_quiver());
        }
    }

    #[test]
    fn path_of_three_vertices_has_fourteen_clusters_and_nine_variables() {
        let g = explore(&Seed::initial(path_quiver_a3()), &ExploreLimits::default()).unwrap();
        assert!(g.complete());
        assert_eq!(g.cluster_count(), 14);
        assert_eq!(g.variable_count(), 9);
        assert!(g.all_variables_positive());
        assert!(g.cluster_determines_quiver());
    }

    #[test]
    fn seed_cap_reports_truncation() {
        let mut arrows = BTreeMap::new();
        arrows.insert((0, 1), (BigInt::from(2), BigInt::from(2)));
        arrows.insert((1, 2), (BigInt::from(2), BigInt::from(2)));
        arrows.insert((2, 0), (BigInt::from(2), BigInt::from(2)));
        let cyclic = ValuedQuiver::from_arrows(3, arrows).unwrap();
        let g = explore(
            &Seed::initial(cyclic),
            &ExploreLimits { max_seeds: 50, max_depth: 64 },
        )
        .unwrap();
        assert!(!g.complete());
        assert_eq!(g.truncation(), Some(Truncation::SeedCap));
        assert!(g.len() <= 50);
    }

    #[test]
    fn depth_cap_reports_truncation() {
        let g = explore(
            &Seed::initial(two_vertex_quiver(1, 1)),
            &ExploreLimits { max_seeds: 20_000, max_depth: 2 },
        )
        .unwrap();
        assert!(!g.complete());
        assert_eq!(g.truncation(), Some(Truncation::DepthCap));
        assert_eq!(g.len(), 5, "root, two at depth one, two at depth two");
    }

    #[test]
    fn words_lead_back_to_their_seeds() {
        let start = Seed::initial(path_quiver_a3());
        let g = explore(&start, &ExploreLimits::default()).unwrap();
        for id in 0..g.len() {
            let word = g.word_to(id);
            assert_eq!(&start.apply_word(&word).unwrap(), g.seed(id), "word {word}");
            assert_eq!(word.len(), g.depth(id), "shortest word has the seed's depth");
        }
    }

    #[test]
    fn steps_are_mutation_involutions() {
        let g = explore(
            &Seed::initial(two_vertex_quiver(2, 1)),
            &ExploreLimits::default(),
        )
        .unwrap();
        for (id, k, nid) in g.steps() {
            assert_eq!(g.neighbor(nid, k), Some(id));
            assert_eq!(&g.seed(id).mutate(k).unwrap(), g.seed(nid));
        }
    }
}
