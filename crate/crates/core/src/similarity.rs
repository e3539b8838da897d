//! Similarity of exchange matrices under vertex relabeling.
//!
//! Two matrices `B` and `B'` of the same rank are *similar* when some
//! permutation `sigma` and sign `eps` satisfy `B' = eps * sigma(B)`, where
//! `sigma(B)` relocates entries: `sigma(B)[i][j] = B[sigma⁻¹(i)][sigma⁻¹(j)]`.
//! This is an equivalence relation, and it is exactly the relation preserved
//! by transporting mutations along `sigma`.

use crate::error::Error;
use crate::matrix::ExchangeMatrix;
use crate::perm::Permutation;
use std::fmt;

/// Largest rank accepted by the brute-force searches in this module; they
/// enumerate all `n!` permutations.
pub const MAX_SEARCH_RANK: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn apply(&self, m: &ExchangeMatrix) -> ExchangeMatrix {
        match self {
            Sign::Plus => m.clone(),
            Sign::Minus => m.negated(),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// One way of exhibiting `target = sign * sigma(source)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimilarityWitness {
    pub sigma: Permutation,
    pub sign: Sign,
}

impl fmt::Display for SimilarityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sigma={} sign={}", self.sigma, self.sign)
    }
}

/// Checks whether `target = eps * sigma(source)` for some sign, returning the
/// sign that works. When both signs work (only possible for the zero matrix)
/// the positive sign is reported.
pub fn similarity_sign(
    source: &ExchangeMatrix,
    target: &ExchangeMatrix,
    sigma: &Permutation,
) -> Result<Option<Sign>, Error> {
    if source.n() != target.n() {
        return Err(Error::SizeMismatch { left: source.n(), right: target.n() });
    }
    let relocated = source.permuted(sigma)?;
    if relocated == *target {
        Ok(Some(Sign::Plus))
    } else if relocated.negated() == *target {
        Ok(Some(Sign::Minus))
    } else {
        Ok(None)
    }
}

/// All witnesses `(sigma, eps)` with `target = eps * sigma(source)`, with
/// permutations in lexicographic order. Rank is capped because the search is
/// exhaustive over all permutations.
pub fn find_similarities(
    source: &ExchangeMatrix,
    target: &ExchangeMatrix,
) -> Result<Vec<SimilarityWitness>, Error> {
    if source.n() != target.n() {
        return Err(Error::SizeMismatch { left: source.n(), right: target.n() });
    }
    let n = source.n();
    if n > MAX_SEARCH_RANK {
        return Err(Error::RankTooLarge { rank: n, max: MAX_SEARCH_RANK });
    }
    let mut out = Vec::new();
    for sigma in Permutation::all(n) {
        if let Some(sign) = similarity_sign(source, target, &sigma)? {
            out.push(SimilarityWitness { sigma, sign });
        }
    }
    Ok(out)
}

pub fn are_similar(source: &ExchangeMatrix, target: &ExchangeMatrix) -> Result<bool, Error> {
    Ok(!find_similarities(source, target)?.is_empty())
}

/// The permutations fixing the matrix exactly (`sigma(B) = B`, positive sign
/// only). These are the digraph automorphisms of the underlying valued quiver.
pub fn quiver_automorphisms(m: &ExchangeMatrix) -> Result<Vec<Permutation>, Error> {
    let n = m.n();
    if n > MAX_SEARCH_RANK {
        return Err(Error::RankTooLarge { rank: n, max: MAX_SEARCH_RANK });
    }
    let mut out = Vec::new();
    for sigma in Permutation::all(n) {
        if m.permuted(&sigma)? == *m {
            out.push(sigma);
        }
    }
    Ok(out)
}

/// The lexicographically least matrix of the form `eps * sigma(B)`. Two
/// matrices are similar exactly when their canonical forms coincide, so this
/// is usable as a partition key.
pub fn canonical_form(m: &ExchangeMatrix) -> Result<ExchangeMatrix, Error> {
    let n = m.n();
    if n > MAX_SEARCH_RANK {
        return Err(Error::RankTooLarge { rank: n, max: MAX_SEARCH_RANK });
    }
    let mut best: Option<ExchangeMatrix> = None;
    for sigma in Permutation::all(n) {
        let relocated = m.permuted(&sigma)?;
        for candidate in [relocated.negated(), relocated] {
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
    }
    Ok(best.expect("at least the identity permutation"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExchangeMatrix {
        ExchangeMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn swapping_two_vertices_witnesses_a_known_pair() {
        let source = m(&[&[0, 2, 0], &[-2, 0, 1], &[0, -1, 0]]);
        let target = m(&[&[0, -2, 1], &[2, 0, 0], &[-1, 0, 0]]);
        let witnesses = find_similarities(&source, &target).unwrap();
        let swap = Permutation::transposition(3, 0, 1).unwrap();
        assert!(witnesses
            .iter()
            .any(|w| w.sigma == swap && w.sign == Sign::Plus));
    }

    #[test]
    fn three_cycle_witness_has_positive_sign() {
        let source = m(&[&[0, 2, 4], &[-1, 0, -2], &[-1, 1, 0]]);
        let target = m(&[&[0, -1, 1], &[4, 0, 2], &[-2, -1, 0]]);
        let sigma = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        assert_eq!(similarity_sign(&source, &target, &sigma).unwrap(), Some(Sign::Plus));
    }

    #[test]
    fn witness_direction_matters_for_non_involutive_permutations() {
        // With a 3-cycle the reverse reading needs the inverse permutation.
        let source = m(&[&[0, 2, 4], &[-1, 0, -2], &[-1, 1, 0]]);
        let target = m(&[&[0, -1, 1], &[4, 0, 2], &[-2, -1, 0]]);
        let sigma = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        assert_eq!(similarity_sign(&target, &source, &sigma).unwrap(), None);
        assert_eq!(
            similarity_sign(&target, &source, &sigma.inverse()).unwrap(),
            Some(Sign::Plus)
        );
    }

    #[test]
    fn opposite_matrix_is_similar_with_negative_sign_under_identity() {
        let source = m(&[&[0, 2], &[-1, 0]]);
        let id = Permutation::identity(2);
        assert_eq!(
            similarity_sign(&source, &source.negated(), &id).unwrap(),
            Some(Sign::Minus)
        );
    }

    #[test]
    fn zero_matrix_reports_positive_sign() {
        let z = m(&[&[0, 0], &[0, 0]]);
        for w in find_similarities(&z, &z).unwrap() {
            assert_eq!(w.sign, Sign::Plus, "ties resolve to the positive sign");
        }
    }

    #[test]
    fn cyclic_matrix_has_exactly_the_three_rotations_as_automorphisms() {
        let markov = m(&[&[0, 2, -2], &[-2, 0, 2], &[2, -2, 0]]);
        let autos = quiver_automorphisms(&markov).unwrap();
        assert_eq!(autos.len(), 3);
        let rot = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        assert!(autos.contains(&Permutation::identity(3)));
        assert!(autos.contains(&rot));
        assert!(autos.contains(&rot.inverse()));
    }

    #[test]
    fn canonical_form_agrees_exactly_on_similar_pairs() {
        let source = m(&[&[0, 2, 0], &[-2, 0, 1], &[0, -1, 0]]);
        let target = m(&[&[0, -2, 1], &[2, 0, 0], &[-1, 0, 0]]);
        let unrelated = m(&[&[0, 1, 0], &[-1, 0, 1], &[0, -1, 0]]);
        assert_eq!(canonical_form(&source).unwrap(), canonical_form(&target).unwrap());
        assert_ne!(canonical_form(&source).unwrap(), canonical_form(&unrelated).unwrap());
    }

    #[test]
    fn rank_guard_rejects_oversized_searches() {
        let rows = vec![vec![num_bigint::BigInt::from(0); 11]; 11];
        let big = ExchangeMatrix::from_rows(rows).unwrap();
        assert!(matches!(
            find_similarities(&big, &big),
            Err(Error::RankTooLarge { rank: 11, max: MAX_SEARCH_RANK })
        ));
    }
}
