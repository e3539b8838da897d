//! Permutations of `0..n` and their composition.

use crate::error::Error;
use std::fmt;

/// A bijection of `0..n`, stored as its image table: `images[i] = sigma(i)`.
///
/// Composition follows function application: `(sigma.compose(&tau))(i) =
/// sigma(tau(i))`, so `sigma.compose(&tau)` means "apply `tau` first".
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Builds a permutation from its image table, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n {
                return Err(Error::IndexOutOfRange { index: img, rank: n });
            }
            if seen[img] {
                return Err(Error::Parse(format!("duplicate image {img} in permutation")));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `0..n` from disjoint cycles, e.g.
    /// `from_cycles(3, &[&[0, 1, 2]])` sends 0→1, 1→2, 2→0.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, Error> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for window in 0..cycle.len() {
                let a = cycle[window];
                let b = cycle[(window + 1) % cycle.len()];
                if a >= n || b >= n {
                    return Err(Error::IndexOutOfRange { index: a.max(b), rank: n });
                }
                if touched[a] {
                    return Err(Error::Parse(format!("vertex {a} appears in two cycles")));
                }
                touched[a] = true;
                images[a] = b;
            }
        }
        Ok(Permutation { images })
    }

    /// The transposition of `i` and `j` inside `0..n`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self, Error> {
        if i >= n || j >= n {
            return Err(Error::IndexOutOfRange { index: i.max(j), rank: n });
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Ok(Permutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// The image `sigma(i)`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img] = i;
        }
        Permutation { images: inv }
    }

    /// Function composition: `self.compose(&tau)` applies `tau` first,
    /// then `self`.
    pub fn compose(&self, tau: &Permutation) -> Result<Self, Error> {
        if self.n() != tau.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: tau.n() });
        }
        Ok(Permutation { images: tau.images.iter().map(|&i| self.images[i]).collect() })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// All permutations of `0..n` in lexicographic order of their image tables.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        use itertools::Itertools;
        (0..n).permutations(n).map(|images| Permutation { images })
    }
}

impl fmt::Display for Permutation {
    /// One-line image notation, 1-based: `[2 3 1]` sends 1→2, 2→3, 3→1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (pos, img) in self.images.iter().enumerate() {
            if pos > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", img + 1)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_constructor_matches_image_table() {
        let sigma = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        assert_eq!(sigma.images(), &[1, 2, 0]);
        assert_eq!(sigma.inverse().images(), &[2, 0, 1]);
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let sigma = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let tau = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        // (sigma ∘ tau)(1) = sigma(tau(1)) = sigma(2) = 2.
        let st = sigma.compose(&tau).unwrap();
        assert_eq!(st.apply(0), 1);
        assert_eq!(st.apply(1), 2);
        assert_eq!(st.apply(2), 0);
    }

    #[test]
    fn inverse_composes_to_identity() {
        let sigma = Permutation::from_images(vec![3, 0, 2, 1]).unwrap();
        assert!(sigma.compose(&sigma.inverse()).unwrap().is_identity());
        assert!(sigma.inverse().compose(&sigma).unwrap().is_identity());
    }

    #[test]
    fn all_permutations_are_lexicographic_and_complete() {
        let perms: Vec<_> = Permutation::all(3).collect();
        assert_eq!(perms.len(), 6);
        assert_eq!(perms[0].images(), &[0, 1, 2]);
        assert_eq!(perms[5].images(), &[2, 1, 0]);
        let mut sorted = perms.clone();
        sorted.sort();
        assert_eq!(perms, sorted);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3]).is_err());
    }
}
