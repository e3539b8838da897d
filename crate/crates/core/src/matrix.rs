//! Exchange matrices: square integer matrices with a positive symmetrizer.
//!
//! A matrix `B` qualifies when some positive integer diagonal `D` makes `DB`
//! skew-symmetric, i.e. `d_i b_ij = -d_j b_ji` for all `i, j`. Entries are
//! arbitrary-precision, since mutation can grow them without bound.

use crate::error::Error;
use crate::perm::Permutation;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExchangeMatrix {
    n: usize,
    entries: Vec<BigInt>, // row-major
}

impl ExchangeMatrix {
    /// Builds a matrix from rows, verifying that it is skew-symmetrizable.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, Error> {
        let n = rows.len();
        for row in &rows {
            if row.len() != n {
                return Err(Error::SizeMismatch { left: n, right: row.len() });
            }
        }
        let m = ExchangeMatrix { n, entries: rows.into_iter().flatten().collect() };
        if m.find_symmetrizer().is_none() {
            return Err(Error::NotSkewSymmetrizable);
        }
        Ok(m)
    }

    /// Convenience constructor for small literals.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, Error> {
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        )
    }

    /// Internal constructor for entries already known to be valid (mutation
    /// and relabeling both preserve skew-symmetrizability).
    pub(crate) fn from_entries_unchecked(n: usize, entries: Vec<BigInt>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        ExchangeMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.n).map(|c| c.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn negated(&self) -> Self {
        ExchangeMatrix { n: self.n, entries: self.entries.iter().map(|e| -e).collect() }
    }

    /// The minimal positive symmetrizer, or `None` when no positive diagonal
    /// `D` makes `DB` skew-symmetric.
    ///
    /// The symmetrizer is determined per connected component of the nonzero
    /// pattern: ratios `d_j / d_i = -b_ij / b_ji` are propagated along a
    /// spanning tree as exact rationals, every remaining constraint is checked,
    /// and each component is scaled to the least positive integers. Isolated
    /// vertices get `d_i = 1`.
    pub fn find_symmetrizer(&self) -> Option<Vec<BigInt>> {
        let n = self.n;
        for i in 0..n {
            if !self.entry(i, i).is_zero() {
                return None;
            }
            for j in 0..n {
                let a = self.entry(i, j);
                let b = self.entry(j, i);
                if a.is_zero() != b.is_zero() {
                    return None;
                }
                if !a.is_zero() && a.sign() == b.sign() {
                    return None;
                }
            }
        }

        let mut ratio: Vec<Option<BigRational>> = vec![None; n];
        for root in 0..n {
            if ratio[root].is_some() {
                continue;
            }
            ratio[root] = Some(BigRational::one());
            let mut stack = vec![root];
            let mut component = vec![root];
            while let Some(i) = stack.pop() {
                for j in 0..n {
                    if self.entry(i, j).is_zero() || ratio[j].is_some() {
                        continue;
                    }
                    // d_i b_ij = -d_j b_ji  =>  d_j = d_i * b_ij / (-b_ji)
                    let step =
                        BigRational::new(self.entry(i, j).clone(), -self.entry(j, i).clone());
                    ratio[j] = Some(ratio[i].as_ref().unwrap() * step);
                    stack.push(j);
                    component.push(j);
                }
            }
            // Scale this component to the least positive integer vector.
            let lcm_den = component
                .iter()
                .map(|&i| ratio[i].as_ref().unwrap().denom().clone())
                .fold(BigInt::one(), |acc, d| acc.lcm(&d));
            let scaled: Vec<BigInt> = component
                .iter()
                .map(|&i| (ratio[i].as_ref().unwrap() * &lcm_den).to_integer())
                .collect();
            let gcd = scaled.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
            for (&i, value) in component.iter().zip(scaled) {
                ratio[i] = Some(BigRational::from_integer(value / &gcd));
            }
        }

        let d: Vec<BigInt> = ratio.into_iter().map(|r| r.unwrap().to_integer()).collect();
        // Every constraint must hold, not just the spanning-tree ones.
        for i in 0..n {
            for j in 0..n {
                if &d[i] * self.entry(i, j) + &d[j] * self.entry(j, i) != BigInt::zero() {
                    return None;
                }
            }
        }
        Some(d)
    }

    /// Checks that `d` is a valid (not necessarily minimal) symmetrizer.
    pub fn admits_symmetrizer(&self, d: &[BigInt]) -> bool {
        d.len() == self.n
            && d.iter().all(|x| x.is_positive())
            && (0..self.n).all(|i| {
                (0..self.n)
                    .all(|j| &d[i] * self.entry(i, j) + &d[j] * self.entry(j, i) == BigInt::zero())
            })
    }

    /// Matrix mutation in direction `k`:
    /// entries in row or column `k` flip sign, every other entry becomes
    /// `b_ij + sign(b_ik) * max(0, b_ik * b_kj)` (with `sign(0) = 0`).
    /// Involutive, and preserves every symmetrizer.
    pub fn mutate(&self, k: usize) -> Result<Self, Error> {
        if k >= self.n {
            return Err(Error::IndexOutOfRange { index: k, rank: self.n });
        }
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let b = self.entry(i, j);
                if i == k || j == k {
                    out.push(-b);
                } else {
                    let prod = self.entry(i, k) * self.entry(k, j);
                    if prod.is_positive() {
                        // sign(b_ik) * b_ik * b_kj = |b_ik| * b_kj, but writing
                        // it through the sign keeps the formula literal.
                        let signed = match self.entry(i, k).sign() {
                            num_bigint::Sign::Plus => prod,
                            num_bigint::Sign::Minus => -prod,
                            num_bigint::Sign::NoSign => BigInt::zero(),
                        };
                        out.push(b + signed);
                    } else {
                        out.push(b.clone());
                    }
                }
            }
        }
        Ok(ExchangeMatrix { n, entries: out })
    }

    /// Applies a mutation word left to right: `[k1, k2]` mutates at `k1` first.
    pub fn mutate_word(&self, word: &[usize]) -> Result<Self, Error> {
        let mut m = self.clone();
        for &k in word {
            m = m.mutate(k)?;
        }
        Ok(m)
    }

    /// Relabels indices by `sigma`: the result has `out_ij = b_{sigma⁻¹(i), sigma⁻¹(j)}`,
    /// so the data at vertex `v` moves to vertex `sigma(v)`.
    pub fn permuted(&self, sigma: &Permutation) -> Result<Self, Error> {
        if sigma.n() != self.n {
            return Err(Error::SizeMismatch { left: sigma.n(), right: self.n });
        }
        let inv = sigma.inverse();
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                out.push(self.entry(inv.apply(i), inv.apply(j)).clone());
            }
        }
        Ok(ExchangeMatrix { n, entries: out })
    }
}

/// Relocates a vector along `sigma`: `out_i = d_{sigma⁻¹(i)}`.
pub fn permute_vector<T: Clone>(sigma: &Permutation, d: &[T]) -> Result<Vec<T>, Error> {
    if sigma.n() != d.len() {
        return Err(Error::SizeMismatch { left: sigma.n(), right: d.len() });
    }
    let inv = sigma.inverse();
    Ok((0..d.len()).map(|i| d[inv.apply(i)].clone()).collect())
}

impl std::fmt::Display for ExchangeMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_vertex_path_matrix() -> ExchangeMatrix {
        // 1 --(2,2)--> 2 --(1,1)--> 3 as a matrix.
        ExchangeMatrix::from_i64_rows(&[&[0, 2, 0], &[-2, 0, 1], &[0, -1, 0]]).unwrap()
    }

    #[test]
    fn mutation_at_middle_vertex_creates_even_corner_entry() {
        let b = three_vertex_path_matrix();
        let m2 = b.mutate(1).unwrap();
        let expected =
            ExchangeMatrix::from_i64_rows(&[&[0, -2, 2], &[2, 0, -1], &[-2, 1, 0]]).unwrap();
        assert_eq!(m2, expected);
        // The (1,3) entry picked up the even increment.
        assert_eq!(m2.entry(0, 2), &BigInt::from(2));
    }

    #[test]
    fn mutation_at_last_vertex_keeps_first_row_even() {
        let b = three_vertex_path_matrix();
        let m3 = b.mutate(2).unwrap();
        assert_eq!(m3.entry(0, 1), &BigInt::from(2));
    }

    #[test]
    fn mutation_is_an_involution() {
        let b = three_vertex_path_matrix();
        for k in 0..3 {
            assert_eq!(b.mutate(k).unwrap().mutate(k).unwrap(), b);
        }
    }

    #[test]
    fn mutation_preserves_the_symmetrizer() {
        let b = ExchangeMatrix::from_i64_rows(&[&[0, 2, 4], &[-1, 0, -2], &[-1, 1, 0]]).unwrap();
        let d = b.find_symmetrizer().unwrap();
        for k in 0..3 {
            assert!(b.mutate(k).unwrap().admits_symmetrizer(&d));
        }
    }

    #[test]
    fn minimal_symmetrizer_of_mixed_valuation_quiver() {
        // Matrix of the three-vertex quiver with valuations (2,1), (4,1), (1,2).
        let b = ExchangeMatrix::from_i64_rows(&[&[0, 2, 4], &[-1, 0, -2], &[-1, 1, 0]]).unwrap();
        let d = b.find_symmetrizer().unwrap();
        assert_eq!(d, vec![BigInt::from(1), BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn symmetrizer_is_minimal_per_component_and_one_on_isolated_vertices() {
        // Block diagonal: a (2,1)-pair on {1,2}, vertex 3 isolated.
        let b = ExchangeMatrix::from_i64_rows(&[&[0, 2, 0], &[-1, 0, 0], &[0, 0, 0]]).unwrap();
        assert_eq!(
            b.find_symmetrizer().unwrap(),
            vec![BigInt::from(1), BigInt::from(2), BigInt::from(1)]
        );
    }

    #[test]
    fn sign_pattern_violations_are_rejected() {
        assert!(matches!(
            ExchangeMatrix::from_i64_rows(&[&[0, 2], &[1, 0]]),
            Err(Error::NotSkewSymmetrizable)
        ));
        assert!(matches!(
            ExchangeMatrix::from_i64_rows(&[&[0, 2], &[0, 0]]),
            Err(Error::NotSkewSymmetrizable)
        ));
        assert!(matches!(
            ExchangeMatrix::from_i64_rows(&[&[1, 1], &[-1, 0]]),
            Err(Error::NotSkewSymmetrizable)
        ));
    }

    #[test]
    fn inconsistent_cycle_ratios_are_rejected() {
        // A 3-cycle whose tree ratios conflict on the closing edge.
        assert!(matches!(
            ExchangeMatrix::from_i64_rows(&[&[0, 1, -1], &[-2, 0, 1], &[1, -1, 0]]),
            Err(Error::NotSkewSymmetrizable)
        ));
    }

    #[test]
    fn permutation_relocates_entries() {
        let b = three_vertex_path_matrix();
        let sigma = Permutation::transposition(3, 0, 1).unwrap();
        let permuted = b.permuted(&sigma).unwrap();
        let expected =
            ExchangeMatrix::from_i64_rows(&[&[0, -2, 1], &[2, 0, 0], &[-1, 0, 0]]).unwrap();
        assert_eq!(permuted, expected);
    }

    #[test]
    fn permutation_action_respects_composition() {
        let b = ExchangeMatrix::from_i64_rows(&[&[0, 2, 4], &[-1, 0, -2], &[-1, 1, 0]]).unwrap();
        let sigma = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let tau = Permutation::transposition(3, 1, 2).unwrap();
        let composed = sigma.compose(&tau).unwrap();
        assert_eq!(
            b.permuted(&composed).unwrap(),
            b.permuted(&tau).unwrap().permuted(&sigma).unwrap()
        );
    }

    #[test]
    fn permuted_vector_relocates_entries() {
        let sigma = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let d = vec![1, 2, 4];
        assert_eq!(permute_vector(&sigma, &d).unwrap(), vec![4, 1, 2]);
    }
}
