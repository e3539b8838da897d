//! Labeled seeds: a cluster of field elements paired with a valued quiver.
//!
//! Cluster entries are Laurent polynomials in the variables of some fixed
//! initial seed. Mutation at `k` replaces entry `k` by the exchange relation
//!
//! ```text
//! x_k' = ( prod_{b_ik > 0} x_i^{b_ik}  +  prod_{b_ik < 0} x_i^{-b_ik} ) / x_k
//! ```
//!
//! evaluated exactly; the division always succeeds on clusters reachable from
//! an initial seed, and a failure is reported rather than patched up.

use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::matrix::ExchangeMatrix;
use crate::perm::Permutation;
use crate::quiver::ValuedQuiver;
use num_bigint::BigInt;
use num_traits::Signed;
use std::fmt;

/// A sequence of mutation directions, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MutationWord(pub Vec<usize>);

impl MutationWord {
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Parses 1-based directions separated by whitespace or commas.
    pub fn parse_one_based(s: &str) -> Result<Self, Error> {
        let mut out = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let k: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("invalid mutation direction {tok:?}")))?;
            if k == 0 {
                return Err(Error::Parse("mutation directions are 1-based".into()));
            }
            out.push(k - 1);
        }
        Ok(MutationWord(out))
    }

    /// The letterwise image under `sigma`: direction `k` becomes `sigma(k)`.
    pub fn transported(&self, sigma: &Permutation) -> Self {
        MutationWord(self.0.iter().map(|&k| sigma.apply(k)).collect())
    }
}

impl fmt::Display for MutationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.0.iter().map(|k| (k + 1).to_string()).collect();
        f.write_str(&words.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seed {
    cluster: Vec<LaurentPoly>,
    quiver: ValuedQuiver,
}

impl Seed {
    /// The initial seed of a quiver: cluster entry `i` is the plain variable
    /// `x_{i+1}`.
    pub fn initial(quiver: ValuedQuiver) -> Self {
        let n = quiver.n();
        let cluster = (0..n)
            .map(|i| LaurentPoly::variable(n, i).expect("index in range"))
            .collect();
        Seed { cluster, quiver }
    }

    /// Builds a seed from explicit parts; entries must all have the rank of
    /// the quiver and be nonzero.
    pub fn new(cluster: Vec<LaurentPoly>, quiver: ValuedQuiver) -> Result<Self, Error> {
        if cluster.len() != quiver.n() {
            return Err(Error::SizeMismatch { left: quiver.n(), right: cluster.len() });
        }
        for entry in &cluster {
            if entry.n() != quiver.n() {
                return Err(Error::SizeMismatch { left: quiver.n(), right: entry.n() });
            }
            if entry.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
        }
        Ok(Seed { cluster, quiver })
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    pub fn cluster(&self) -> &[LaurentPoly] {
        &self.cluster
    }

    pub fn quiver(&self) -> &ValuedQuiver {
        &self.quiver
    }

    pub fn matrix(&self) -> ExchangeMatrix {
        self.quiver.matrix()
    }

    /// The exchange binomial at `k` in formal variables: substituting the
    /// cluster entries for `x_1..x_n` and dividing by entry `k` performs one
    /// mutation step.
    pub fn exchange_binomial(&self, k: usize) -> Result<LaurentPoly, Error> {
        exchange_binomial_of(&self.matrix(), k)
    }

    /// Mutation at direction `k`.
    pub fn mutate(&self, k: usize) -> Result<Seed, Error> {
        let n = self.n();
        if k >= n {
            return Err(Error::IndexOutOfRange { index: k, rank: n });
        }
        let b = self.matrix();
        let mut plus = LaurentPoly::one(n);
        let mut minus = LaurentPoly::one(n);
        for i in 0..n {
            let e = b.entry(i, k);
            if e.is_positive() {
                plus = plus.mul(&self.cluster[i].pow(to_pow(e)))?;
            } else if e.is_negative() {
                minus = minus.mul(&self.cluster[i].pow(to_pow(&-e)))?;
            }
        }
        let numerator = plus.add(&minus)?;
        let new_entry = numerator
            .exact_div(&self.cluster[k])?
            .ok_or(Error::LaurentPhenomenonViolation)?;
        let mut cluster = self.cluster.clone();
        cluster[k] = new_entry;
        Ok(Seed { cluster, quiver: self.quiver.mutate(k)? })
    }

    /// Applies a word left to right: `apply_word([a, b])` is "mutate at `a`,
    /// then at `b`".
    pub fn apply_word(&self, word: &MutationWord) -> Result<Seed, Error> {
        let mut seed = self.clone();
        for &k in &word.0 {
            seed = seed.mutate(k)?;
        }
        Ok(seed)
    }

    /// The action of a vertex relabeling on a seed: every cluster entry gets
    /// its variables renamed by `x_i -> x_{sigma(i)}` (entries keep their
    /// positions), and the quiver is relabeled along `sigma`.
    pub fn apply_automorphism(&self, sigma: &Permutation) -> Result<Seed, Error> {
        let cluster = self
            .cluster
            .iter()
            .map(|y| y.permute_vars(sigma))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Seed { cluster, quiver: self.quiver.relabeled(sigma)? })
    }
}

/// The exchange binomial of a matrix at column `k`, in formal variables:
/// `prod_{b_ik > 0} x_i^{b_ik} + prod_{b_ik < 0} x_i^{-b_ik}`.
pub fn exchange_binomial_of(b: &ExchangeMatrix, k: usize) -> Result<LaurentPoly, Error> {
    let n = b.n();
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, rank: n });
    }
    let mut plus = vec![0i64; n];
    let mut minus = vec![0i64; n];
    for i in 0..n {
        let e = b.entry(i, k);
        if e.is_positive() {
            plus[i] = i64::try_from(e).expect("exchange exponent fits in i64");
        } else if e.is_negative() {
            minus[i] = i64::try_from(&-e).expect("exchange exponent fits in i64");
        }
    }
    LaurentPoly::from_terms(
        n,
        [(plus, BigInt::from(1)), (minus, BigInt::from(1))],
    )
}

fn to_pow(e: &BigInt) -> u32 {
    u32::try_from(e).expect("exchange exponent fits in u32")
}
