//! Exchange maps: field maps sending the cluster of one labeled seed onto the
//! cluster of another along a permutation, `x_i -> y_{sigma(i)}`.
//!
//! Whether such a map respects the whole mutation structure is decidable two
//! independent ways: a local criterion (transport each single-step exchange
//! relation and compare) and a global brute-force one (explore both mutation
//! classes and check that clusters map onto clusters bijectively). The two
//! must agree, which the verification suites exercise heavily.

use crate::error::Error;
use crate::explore::{explore, ExploreLimits};
use crate::laurent::LaurentPoly;
use crate::perm::Permutation;
use crate::seed::{exchange_binomial_of, MutationWord, Seed};
use std::collections::BTreeSet;

#[derive(Debug, Clone)]
pub struct ExchangeMap {
    source: Seed,
    target: Seed,
    sigma: Permutation,
}

/// Outcome of the brute-force cluster-bijection check.
#[derive(Debug, Clone)]
pub struct BijectionReport {
    pub holds: bool,
    pub source_clusters: usize,
    pub target_clusters: usize,
    /// A seed of the source class whose mapped cluster is not a cluster of
    /// the target class, with a mutation word reaching it from the source
    /// seed.
    pub failing_seed: Option<usize>,
    pub failing_word: Option<MutationWord>,
}

impl ExchangeMap {
    pub fn new(source: Seed, target: Seed, sigma: Permutation) -> Result<Self, Error> {
        if source.n() != target.n() {
            return Err(Error::SizeMismatch { left: source.n(), right: target.n() });
        }
        if sigma.n() != source.n() {
            return Err(Error::SizeMismatch { left: sigma.n(), right: source.n() });
        }
        Ok(ExchangeMap { source, target, sigma })
    }

    pub fn source(&self) -> &Seed {
        &self.source
    }

    pub fn target(&self) -> &Seed {
        &self.target
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    /// The images of the source cluster entries: entry `i` goes to target
    /// entry `sigma(i)`.
    pub fn images(&self) -> Vec<LaurentPoly> {
        (0..self.source.n())
            .map(|i| self.target.cluster()[self.sigma.apply(i)].clone())
            .collect()
    }

    /// Applies the map to an expression written in the source cluster
    /// coordinates (variable `i` stands for source entry `i`). The result is
    /// written in whatever coordinates the target cluster uses. `Ok(None)`
    /// means the image is not a Laurent polynomial there.
    pub fn apply(&self, f: &LaurentPoly) -> Result<Option<LaurentPoly>, Error> {
        f.substitute(&self.images())
    }

    /// The local criterion: for every direction `k`, transporting the
    /// mutated source variable through the map must equal the variable
    /// produced by mutating the target at `sigma(k)`. Holds exactly when the
    /// two exchange matrices are similar along `sigma`.
    pub fn commutes_with_single_mutations(&self) -> Result<bool, Error> {
        let n = self.source.n();
        let images = self.images();
        let source_matrix = self.source.matrix();
        for k in 0..n {
            // The mutated source variable, formally: f_k / x_k.
            let binom = exchange_binomial_of(&source_matrix, k)?;
            let mut inv_exps = vec![0i64; n];
            inv_exps[k] = -1;
            let formal = binom.mul(&LaurentPoly::from_terms(
                n,
                [(inv_exps, num_bigint::BigInt::from(1))],
            )?)?;
            let lhs = formal.substitute(&images)?;
            let sk = self.sigma.apply(k);
            let rhs = self.target.mutate(sk)?.cluster()[sk].clone();
            if lhs.as_ref() != Some(&rhs) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The matrix criterion: the map is a cluster isomorphism exactly when
    /// the two exchange matrices are similar along `sigma`. Constant-time in
    /// the class size; `verify_isomorphism_bruteforce` checks the same
    /// property the long way.
    pub fn is_cluster_isomorphism(&self) -> Result<bool, Error> {
        Ok(crate::similarity::similarity_sign(
            &self.source.matrix(),
            &self.target.matrix(),
            &self.sigma,
        )?
        .is_some())
    }

    /// The global criterion, checked by brute force: explore both mutation
    /// classes completely and test that the map carries the source clusters
    /// bijectively onto the target clusters.
    ///
    /// The property depends only on the two quivers and `sigma`, so the
    /// computation runs on freshly rooted copies of both seeds (cluster
    /// entries replaced by plain variables), which keeps every expression a
    /// Laurent polynomial over the respective roots. Both explorations must
    /// finish; otherwise `IncompleteGraph` is returned rather than a guess.
    pub fn verify_isomorphism_bruteforce(
        &self,
        limits: &ExploreLimits,
    ) -> Result<BijectionReport, Error> {
        let source_root = Seed::initial(self.source.quiver().clone());
        let target_root = Seed::initial(self.target.quiver().clone());
        let source_graph = explore(&source_root, limits)?;
        let target_graph = explore(&target_root, limits)?;
        if !source_graph.complete() || !target_graph.complete() {
            return Err(Error::IncompleteGraph);
        }
        let target_clusters: BTreeSet<BTreeSet<LaurentPoly>> = target_graph
            .seeds()
            .iter()
            .map(|s| s.cluster().iter().cloned().collect())
            .collect();
        let mut source_clusters: BTreeSet<BTreeSet<LaurentPoly>> = BTreeSet::new();
        for (id, seed) in source_graph.seeds().iter().enumerate() {
            // On the rooted copies the map is the variable relabeling
            // x_i -> x_{sigma(i)} into the target's root coordinates.
            let mapped: BTreeSet<LaurentPoly> = seed
                .cluster()
                .iter()
                .map(|v| v.permute_vars(&self.sigma))
                .collect::<Result<_, _>>()?;
            let source_cluster: BTreeSet<LaurentPoly> =
                seed.cluster().iter().cloned().collect();
            source_clusters.insert(source_cluster);
            if !target_clusters.contains(&mapped) {
                return Ok(BijectionReport {
                    holds: false,
                    source_clusters: source_graph.cluster_count(),
                    target_clusters: target_clusters.len(),
                    failing_seed: Some(id),
                    failing_word: Some(source_graph.word_to(id)),
                });
            }
        }
        // Distinct clusters stay distinct under a field map, so covering all
        // of them is a matter of counting.
        let holds = source_clusters.len() == target_clusters.len();
        Ok(BijectionReport {
            holds,
            source_clusters: source_clusters.len(),
            target_clusters: target_clusters.len(),
            failing_seed: None,
            failing_word: None,
        })
    }

    /// Whether every cluster variable of the source class lands on a cluster
    /// variable of the target class (no bijectivity demanded). Computed on
    /// rooted copies like `verify_isomorphism_bruteforce`.
    pub fn is_variable_preserver(&self, limits: &ExploreLimits) -> Result<bool, Error> {
        let source_graph = explore(&Seed::initial(self.source.quiver().clone()), limits)?;
        let target_graph = explore(&Seed::initial(self.target.quiver().clone()), limits)?;
        if !source_graph.complete() || !target_graph.complete() {
            return Err(Error::IncompleteGraph);
        }
        let target_variables: BTreeSet<&LaurentPoly> = target_graph.variables();
        for v in source_graph.variables() {
            let image = v.permute_vars(&self.sigma)?;
            if !target_variables.contains(&image) {
                return Ok(false);
            }
        }
        Ok(true)
    }

}

/// Convenience: the exchange map between the initial seeds of two quivers.
pub fn between_roots(
    source: &crate::quiver::ValuedQuiver,
    target: &crate::quiver::ValuedQuiver,
    sigma: Permutation,
) -> Result<ExchangeMap, Error> {
    ExchangeMap::new(
        Seed::initial(source.clone()),
        Seed::initial(target.clone()),
        sigma,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::ValuedQuiver;
    use num_bigint::BigInt;
    use std::collections::BTreeMap;

    fn quiver(n: usize, arrows: &[(usize, usize, i64, i64)]) -> ValuedQuiver {
        let map: BTreeMap<(usize, usize), (BigInt, BigInt)> = arrows
            .iter()
            .map(|&(i, j, v, w)| ((i, j), (BigInt::from(v), BigInt::from(w))))
            .collect();
        ValuedQuiver::from_arrows(n, map).unwrap()
    }

    #[test]
    fn relabeled_roots_commute_and_are_cluster_isomorphic() {
        let q = quiver(2, &[(0, 1, 2, 1)]);
        let swap = Permutation::transposition(2, 0, 1).unwrap();
        let relabeled = q.relabeled(&swap).unwrap();
        let map = between_roots(&q, &relabeled, swap).unwrap();
        assert!(map.is_cluster_isomorphism().unwrap());
        assert!(map.commutes_with_single_mutations().unwrap());
        let report = map.verify_isomorphism_bruteforce(&ExploreLimits::default()).unwrap();
        assert!(report.holds);
        assert_eq!(report.source_clusters, report.target_clusters);
        assert!(map.is_variable_preserver(&ExploreLimits::default()).unwrap());
    }

    #[test]
    fn mismatched_permutation_fails_both_criteria() {
        let q = quiver(2, &[(0, 1, 2, 1)]);
        // Swapping the vertices of an asymmetric quiver without relabeling
        // the target is not a similarity.
        let swap = Permutation::transposition(2, 0, 1).unwrap();
        let map = between_roots(&q, &q, swap).unwrap();
        assert!(!map.is_cluster_isomorphism().unwrap());
        assert!(!map.commutes_with_single_mutations().unwrap());
        assert!(!map
            .verify_isomorphism_bruteforce(&ExploreLimits::default())
            .unwrap()
            .holds);
        assert!(!map.is_variable_preserver(&ExploreLimits::default()).unwrap());
    }

    #[test]
    fn identity_on_the_same_root_is_an_automorphism() {
        let q = quiver(2, &[(0, 1, 2, 1)]);
        let map = between_roots(&q, &q, Permutation::identity(2)).unwrap();
        assert!(map.is_cluster_isomorphism().unwrap());
        assert!(map.commutes_with_single_mutations().unwrap());
        assert!(map
            .verify_isomorphism_bruteforce(&ExploreLimits::default())
            .unwrap()
            .holds);
    }

    #[test]
    fn opposite_quiver_under_identity_is_similar_with_a_sign() {
        let q = quiver(2, &[(0, 1, 1, 1)]);
        let map = between_roots(&q, &q.opposite(), Permutation::identity(2)).unwrap();
        assert!(map.is_cluster_isomorphism().unwrap());
        assert!(map.commutes_with_single_mutations().unwrap());
        assert!(map
            .verify_isomorphism_bruteforce(&ExploreLimits::default())
            .unwrap()
            .holds);
    }

    #[test]
    fn failing_maps_come_with_a_witness_word() {
        let q = quiver(2, &[(0, 1, 2, 1)]);
        let swap = Permutation::transposition(2, 0, 1).unwrap();
        let map = between_roots(&q, &q, swap).unwrap();
        let report = map.verify_isomorphism_bruteforce(&ExploreLimits::default()).unwrap();
        assert!(!report.holds);
        let (seed_id, word) = (report.failing_seed.unwrap(), report.failing_word.unwrap());
        let source_graph =
            explore(&Seed::initial(q.clone()), &ExploreLimits::default()).unwrap();
        assert_eq!(
            &Seed::initial(q).apply_word(&word).unwrap(),
            source_graph.seed(seed_id),
            "the witness word reaches the failing seed"
        );
    }

    #[test]
    fn truncated_classes_refuse_to_answer() {
        let markov = quiver(3, &[(0, 1, 2, 2), (1, 2, 2, 2), (2, 0, 2, 2)]);
        let map = between_roots(&markov, &markov, Permutation::identity(3)).unwrap();
        let tight = ExploreLimits { max_seeds: 10, max_depth: 64 };
        assert!(matches!(
            map.verify_isomorphism_bruteforce(&tight),
            Err(Error::IncompleteGraph)
        ));
    }
}
