//! Valued quivers: finite directed graphs without loops or 2-cycles, where an
//! arrow from `i` to `j` carries a pair of positive integers `(v_ij, v_ji)`
//! tied to a positive vertex weighting `d` by `d_i * v_ij = v_ji * d_j`.
//!
//! A valued quiver and its exchange matrix carry the same information:
//! `b_ij = v_ij` when the arrow runs `i -> j`, `b_ij = -v_ij` when it runs
//! `j -> i`, and `0` otherwise. The matrix form is canonical here; the quiver
//! form adds the weighting `d`, which mutation never touches.

use crate::error::Error;
use crate::matrix::{permute_vector, ExchangeMatrix};
use crate::perm::Permutation;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Arrow map: `(i, j) -> (v_ij, v_ji)`, one entry per arrow `i -> j`.
pub type ArrowMap = BTreeMap<(usize, usize), (BigInt, BigInt)>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ValuedQuiver {
    n: usize,
    arrows: ArrowMap,
    d: Vec<BigInt>,
}

impl ValuedQuiver {
    /// Builds a quiver with an explicit weighting, validating every invariant:
    /// indices in range, no loops, no 2-cycles, positive valuations, positive
    /// `d`, and `d_i * v_ij = v_ji * d_j` on every arrow.
    pub fn new(n: usize, arrows: ArrowMap, d: Vec<BigInt>) -> Result<Self, Error> {
        if d.len() != n {
            return Err(Error::SizeMismatch { left: n, right: d.len() });
        }
        if let Some(bad) = d.iter().find(|x| !x.is_positive()) {
            return Err(Error::InvalidQuiver(format!("non-positive weight {bad}")));
        }
        for (&(i, j), (v, w)) in &arrows {
            if i >= n || j >= n {
                return Err(Error::IndexOutOfRange { index: i.max(j), rank: n });
            }
            if i == j {
                return Err(Error::InvalidQuiver(format!("loop at vertex {}", i + 1)));
            }
            if arrows.contains_key(&(j, i)) {
                return Err(Error::InvalidQuiver(format!(
                    "2-cycle between vertices {} and {}",
                    i + 1,
                    j + 1
                )));
            }
            if !v.is_positive() || !w.is_positive() {
                return Err(Error::InvalidQuiver(format!(
                    "arrow {}->{} has non-positive valuation ({v},{w})",
                    i + 1,
                    j + 1
                )));
            }
            if &d[i] * v != w * &d[j] {
                return Err(Error::InvalidQuiver(format!(
                    "arrow {}->{} valuation ({v},{w}) violates d_i*v_ij = v_ji*d_j for d=({})",
                    i + 1,
                    j + 1,
                    d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                )));
            }
        }
        Ok(ValuedQuiver { n, arrows, d })
    }

    /// Builds a quiver from arrows alone, deriving the minimal weighting.
    pub fn from_arrows(n: usize, arrows: ArrowMap) -> Result<Self, Error> {
        // Route through the matrix so the weighting logic lives in one place.
        let probe = ValuedQuiver { n, arrows, d: vec![BigInt::one(); n] };
        let m = probe.structure_matrix()?;
        let d = m.find_symmetrizer().ok_or(Error::NotSkewSymmetrizable)?;
        ValuedQuiver::new(n, probe.arrows, d)
    }

    /// The matrix encoding of the arrows, ignoring `d` (used internally before
    /// `d` is known).
    fn structure_matrix(&self) -> Result<ExchangeMatrix, Error> {
        let n = self.n;
        let mut entries = vec![BigInt::zero(); n * n];
        for (&(i, j), (v, w)) in &self.arrows {
            if i >= n || j >= n {
                return Err(Error::IndexOutOfRange { index: i.max(j), rank: n });
            }
            if i == j || self.arrows.contains_key(&(j, i)) {
                return Err(Error::InvalidQuiver("loop or 2-cycle".into()));
            }
            entries[i * n + j] = v.clone();
            entries[j * n + i] = -w.clone();
        }
        Ok(ExchangeMatrix::from_entries_unchecked(n, entries))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &ArrowMap {
        &self.arrows
    }

    pub fn weights(&self) -> &[BigInt] {
        &self.d
    }

    /// The exchange matrix of this quiver.
    pub fn matrix(&self) -> ExchangeMatrix {
        self.structure_matrix().expect("validated on construction")
    }

    /// Reads a quiver off a skew-symmetrizable matrix, attaching the minimal
    /// symmetrizer as the weighting.
    pub fn from_matrix(m: &ExchangeMatrix) -> Result<Self, Error> {
        let d = m.find_symmetrizer().ok_or(Error::NotSkewSymmetrizable)?;
        let mut arrows = ArrowMap::new();
        for i in 0..m.n() {
            for j in 0..m.n() {
                let b = m.entry(i, j);
                if b.is_positive() {
                    arrows.insert((i, j), (b.clone(), -m.entry(j, i)));
                }
            }
        }
        Ok(ValuedQuiver { n: m.n(), arrows, d })
    }

    /// Quiver mutation at vertex `k`, operating on arrows directly:
    ///
    /// 1. every arrow through `k` is reversed with its valuation swapped;
    /// 2. every path `i -> k -> j` adds `(v_ik*v_kj, v_ki*v_jk)` onto the
    ///    arrow `i -> j`, creating it if absent;
    /// 3. if instead `j -> i` exists (a 3-cycle through `k`), the two effects
    ///    cancel entrywise: the arrow shrinks, flips, or disappears depending
    ///    on how `v_ik*v_kj` compares to `v_ij`.
    ///
    /// Satisfies `mutate(k).matrix() == matrix().mutate(k)` and leaves the
    /// weighting untouched.
    pub fn mutate(&self, k: usize) -> Result<Self, Error> {
        if k >= self.n {
            return Err(Error::IndexOutOfRange { index: k, rank: self.n });
        }
        let mut out = ArrowMap::new();
        for (&(i, j), val) in &self.arrows {
            if i == k || j == k {
                out.insert((j, i), (val.1.clone(), val.0.clone()));
            } else {
                out.insert((i, j), val.clone());
            }
        }

        let into_k: Vec<(usize, (BigInt, BigInt))> = self
            .arrows
            .iter()
            .filter(|(&(_, j), _)| j == k)
            .map(|(&(i, _), v)| (i, v.clone()))
            .collect();
        let from_k: Vec<(usize, (BigInt, BigInt))> = self
            .arrows
            .iter()
            .filter(|(&(i, _), _)| i == k)
            .map(|(&(_, j), v)| (j, v.clone()))
            .collect();

        for (i, (v_ik, v_ki)) in &into_k {
            for (j, (v_kj, v_jk)) in &from_k {
                debug_assert_ne!(i, j, "2-cycle through the mutation vertex");
                let add_fwd = v_ik * v_kj; // contribution to v_ij
                let add_bwd = v_ki * v_jk; // contribution to v_ji
                if let Some((v_ij, v_ji)) = out.remove(&(*i, *j)) {
                    out.insert((*i, *j), (v_ij + &add_fwd, v_ji + &add_bwd));
                } else if let Some((v_ji, v_ij)) = out.remove(&(*j, *i)) {
                    // 3-cycle i -> k -> j -> i: compare the path against the
                    // closing arrow.
                    if add_fwd < v_ij {
                        out.insert((*j, *i), (v_ji - &add_bwd, v_ij - &add_fwd));
                    } else if add_fwd > v_ij {
                        // The weighting forces the reverse component positive
                        // here; if it is not, `new` rejects the result.
                        out.insert((*i, *j), (&add_fwd - v_ij, &add_bwd - &v_ji));
                    }
                    // add_fwd == v_ij: arrows cancel, nothing to insert.
                } else {
                    out.insert((*i, *j), (add_fwd, add_bwd));
                }
            }
        }

        ValuedQuiver::new(self.n, out, self.d.clone())
    }

    /// Every arrow reversed with its valuation components swapped; the matrix
    /// negates and the weighting survives.
    pub fn opposite(&self) -> Self {
        let arrows = self
            .arrows
            .iter()
            .map(|(&(i, j), (v, w))| ((j, i), (w.clone(), v.clone())))
            .collect();
        ValuedQuiver { n: self.n, arrows, d: self.d.clone() }
    }

    /// Relabels vertices along `sigma`: the arrow `i -> j` becomes
    /// `sigma(i) -> sigma(j)` with its valuation carried along, and the
    /// weighting relocates to `d'_i = d_{sigma⁻¹(i)}`.
    pub fn relabeled(&self, sigma: &Permutation) -> Result<Self, Error> {
        if sigma.n() != self.n {
            return Err(Error::SizeMismatch { left: sigma.n(), right: self.n });
        }
        let arrows = self
            .arrows
            .iter()
            .map(|(&(i, j), v)| ((sigma.apply(i), sigma.apply(j)), v.clone()))
            .collect();
        Ok(ValuedQuiver { n: self.n, arrows, d: permute_vector(sigma, &self.d)? })
    }
}
