//! Parity patterns: entrywise mod-2 invariants of matrix mutation.
//!
//! Mutation at `k` negates row and column `k` (parity preserved) and adds
//! `sign(b_ik) * max(0, b_ik * b_kj)` elsewhere — an increment that is
//! guaranteed even when `b_ik` or `b_kj` is even, and otherwise depends on
//! signs. A pattern in which every such increment is forced even is *closed*:
//! every mutation of every matching matrix matches it again. A closed pattern
//! satisfied by a start matrix but violated by a target is a finite,
//! independently checkable proof that no mutation sequence connects them.

use crate::error::Error;
use crate::explore::ExploreLimits;
use crate::matrix::ExchangeMatrix;
use crate::seed::MutationWord;
use num_integer::Integer;
use std::collections::{HashMap, VecDeque};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityPattern {
    n: usize,
    grid: Vec<Parity>,
}

/// Why the `(k, i, j)` increment is forced even.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleReason {
    /// `pattern(i, k)` is even.
    IkEven,
    /// `pattern(k, j)` is even.
    KjEven,
}

/// One row of a closure proof: mutating at `k` cannot change the parity of
/// entry `(i, j)`, for the stated reason. Indices are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripleJustification {
    pub k: usize,
    pub i: usize,
    pub j: usize,
    pub reason: TripleReason,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureVerdict {
    /// Every off-`k` increment is forced even; the full justification table
    /// is attached, one row per ordered triple.
    Closed { justifications: Vec<TripleJustification> },
    /// The first ordered triple whose increment parity is not forced.
    Open { k: usize, i: usize, j: usize },
}

impl ClosureVerdict {
    pub fn is_closed(&self) -> bool {
        matches!(self, ClosureVerdict::Closed { .. })
    }
}

impl ParityPattern {
    pub fn of(m: &ExchangeMatrix) -> Self {
        let n = m.n();
        let grid = (0..n * n)
            .map(|idx| {
                if m.entry(idx / n, idx % n).is_even() {
                    Parity::Even
                } else {
                    Parity::Odd
                }
            })
            .collect();
        ParityPattern { n, grid }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> Parity {
        self.grid[i * self.n + j]
    }

    pub fn matches(&self, m: &ExchangeMatrix) -> bool {
        m.n() == self.n && *self == ParityPattern::of(m)
    }

    /// The entries where `m` disagrees with the pattern, row-major.
    pub fn violations(&self, m: &ExchangeMatrix) -> Vec<(usize, usize)> {
        let other = ParityPattern::of(m);
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.entry(i, j) != other.entry(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Decides closure. Triples run in lexicographic order over `k`, then
    /// `i`, then `j`, skipping `i = k`, `j = k`, and `i = j` (diagonal
    /// entries stay zero under mutation, so they need no justification).
    pub fn closure(&self) -> ClosureVerdict {
        let mut justifications = Vec::new();
        for k in 0..self.n {
            for i in 0..self.n {
                if i == k {
                    continue;
                }
                for j in 0..self.n {
                    if j == k || j == i {
                        continue;
                    }
                    let reason = if self.entry(i, k) == Parity::Even {
                        TripleReason::IkEven
                    } else if self.entry(k, j) == Parity::Even {
                        TripleReason::KjEven
                    } else {
                        return ClosureVerdict::Open { k, i, j };
                    };
                    justifications.push(TripleJustification { k, i, j, reason });
                }
            }
        }
        ClosureVerdict::Closed { justifications }
    }

    pub fn is_closed(&self) -> bool {
        self.closure().is_closed()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnreachabilityCertificate {
    pub pattern: ParityPattern,
    pub start: ExchangeMatrix,
    pub target: ExchangeMatrix,
    pub justifications: Vec<TripleJustification>,
    /// Entries where the target's parity differs from the pattern, row-major.
    pub violations: Vec<(usize, usize)>,
}

impl UnreachabilityCertificate {
    /// Re-derives every claim of the certificate from scratch: the pattern is
    /// the start's parity, it is closed with exactly the stated
    /// justifications, and the target differs at exactly the stated entries
    /// (at least one).
    pub fn verify(&self) -> bool {
        if ParityPattern::of(&self.start) != self.pattern {
            return false;
        }
        match self.pattern.closure() {
            ClosureVerdict::Closed { justifications } => {
                if justifications != self.justifications {
                    return false;
                }
            }
            ClosureVerdict::Open { .. } => return false,
        }
        let violations = self.pattern.violations(&self.target);
        !violations.is_empty() && violations == self.violations
    }
}

/// Attempts to certify that no sequence of mutations carries `start` to
/// `target`: succeeds when the start's parity pattern is closed and the
/// target violates it somewhere.
pub fn certify_unreachable(
    start: &ExchangeMatrix,
    target: &ExchangeMatrix,
) -> Result<Option<UnreachabilityCertificate>, Error> {
    if start.n() != target.n() {
        return Err(Error::SizeMismatch { left: start.n(), right: target.n() });
    }
    let pattern = ParityPattern::of(start);
    let ClosureVerdict::Closed { justifications } = pattern.closure() else {
        return Ok(None);
    };
    let violations = pattern.violations(target);
    if violations.is_empty() {
        return Ok(None);
    }
    Ok(Some(UnreachabilityCertificate {
        pattern,
        start: start.clone(),
        target: target.clone(),
        justifications,
        violations,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reachability {
    /// A mutation word carrying the start matrix to the target.
    Reached(MutationWord),
    /// The target did not appear. `exhausted` is true only when the whole
    /// mutation class was enumerated within the limits, making this a proof;
    /// otherwise the search was truncated and the answer is open.
    NotFoundWithinLimits { explored: usize, exhausted: bool },
}

/// Breadth-first search over matrices for a mutation word from `start` to
/// `target`, bounded by `limits` (`max_seeds` caps stored matrices,
/// `max_depth` caps word length).
pub fn bounded_reachability(
    start: &ExchangeMatrix,
    target: &ExchangeMatrix,
    limits: &ExploreLimits,
) -> Result<Reachability, Error> {
    if start.n() != target.n() {
        return Err(Error::SizeMismatch { left: start.n(), right: target.n() });
    }
    if start == target {
        return Ok(Reachability::Reached(MutationWord::default()));
    }
    let n = start.n();
    let mut states = vec![start.clone()];
    let mut index: HashMap<ExchangeMatrix, usize> = HashMap::new();
    index.insert(start.clone(), 0);
    let mut parents: Vec<Option<(usize, usize)>> = vec![None];
    let mut depths = vec![0usize];
    let mut queue = VecDeque::from([0usize]);
    let mut truncated = false;

    while let Some(id) = queue.pop_front() {
        if depths[id] >= limits.max_depth {
            truncated = true;
            continue;
        }
        for k in 0..n {
            let next = states[id].mutate(k)?;
            if index.contains_key(&next) {
                continue;
            }
            if states.len() >= limits.max_seeds {
                truncated = true;
                continue;
            }
            let nid = states.len();
            let reached = next == *target;
            states.push(next.clone());
            index.insert(next, nid);
            parents.push(Some((id, k)));
            depths.push(depths[id] + 1);
            if reached {
                let mut letters = Vec::new();
                let mut cursor = nid;
                while let Some((parent, dir)) = parents[cursor] {
                    letters.push(dir);
                    cursor = parent;
                }
                letters.reverse();
                return Ok(Reachability::Reached(MutationWord(letters)));
            }
            queue.push_back(nid);
        }
    }

    Ok(Reachability::NotFoundWithinLimits { explored: states.len(), exhausted: !truncated })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExchangeMatrix {
        ExchangeMatrix::from_i64_rows(rows).unwrap()
    }

    fn golden_start() -> ExchangeMatrix {
        m(&[&[0, 2, 0], &[-2, 0, 1], &[0, -1, 0]])
    }

    fn golden_target() -> ExchangeMatrix {
        m(&[&[0, -2, 1], &[2, 0, 0], &[-1, 0, 0]])
    }

    #[test]
    fn golden_pair_is_certified_unreachable() {
        let cert = certify_unreachable(&golden_start(), &golden_target())
            .unwrap()
            .expect("the pattern is closed and the target violates it");
        assert!(cert.verify());
        assert!(
            cert.violations.contains(&(1, 2)),
            "the (2,3) entry flips from odd to even"
        );
        assert_eq!(cert.pattern.entry(1, 2), Parity::Odd);
    }

    #[test]
    fn certificates_survive_mutating_the_start() {
        // Every matrix mutation-reachable from the start matches the closed
        // pattern, so certifying from a mutated start also works.
        let start = golden_start().mutate_word(&[0, 1, 2, 1]).unwrap();
        let cert = certify_unreachable(&start, &golden_target()).unwrap();
        assert!(cert.is_some_and(|c| c.verify()));
    }

    #[test]
    fn negation_pairs_have_identical_patterns() {
        let b = m(&[&[0, 2], &[-1, 0]]);
        assert!(certify_unreachable(&b, &b.negated()).unwrap().is_none());
    }

    #[test]
    fn all_odd_rank_three_pattern_is_open_at_the_first_triple() {
        let b = m(&[&[0, 1, 1], &[-1, 0, 1], &[-1, -1, 0]]);
        let verdict = ParityPattern::of(&b).closure();
        assert_eq!(verdict, ClosureVerdict::Open { k: 0, i: 1, j: 2 });
    }

    #[test]
    fn closed_pattern_justifies_every_triple() {
        let pattern = ParityPattern::of(&golden_start());
        let ClosureVerdict::Closed { justifications } = pattern.closure() else {
            panic!("pattern of the golden start is closed");
        };
        // n(n-1)(n-2) ordered triples for n = 3.
        assert_eq!(justifications.len(), 6);
        for tj in &justifications {
            let holds = match tj.reason {
                TripleReason::IkEven => pattern.entry(tj.i, tj.k) == Parity::Even,
                TripleReason::KjEven => pattern.entry(tj.k, tj.j) == Parity::Even,
            };
            assert!(holds, "justification for ({},{},{})", tj.k, tj.i, tj.j);
        }
    }

    #[test]
    fn mutation_preserves_closed_patterns_along_deep_walks() {
        let pattern = ParityPattern::of(&golden_start());
        let mut b = golden_start();
        for step in 0..60 {
            b = b.mutate(step % 3).unwrap();
            assert!(pattern.matches(&b), "pattern broken after step {step}");
        }
    }

    #[test]
    fn row_and_column_of_the_mutated_index_keep_parity() {
        let b = m(&[&[0, 1, 1], &[-1, 0, 1], &[-1, -1, 0]]);
        for k in 0..3 {
            let before = ParityPattern::of(&b);
            let after = ParityPattern::of(&b.mutate(k).unwrap());
            for t in 0..3 {
                assert_eq!(before.entry(k, t), after.entry(k, t));
                assert_eq!(before.entry(t, k), after.entry(t, k));
            }
        }
    }

    #[test]
    fn tampered_certificates_fail_verification() {
        let mut cert = certify_unreachable(&golden_start(), &golden_target())
            .unwrap()
            .unwrap();
        cert.violations.clear();
        assert!(!cert.verify(), "empty violation list is not a certificate");
        let mut cert2 = certify_unreachable(&golden_start(), &golden_target())
            .unwrap()
            .unwrap();
        cert2.start = golden_target();
        assert!(!cert2.verify(), "pattern must be the start's own parity");
    }

    #[test]
    fn rank_two_negation_is_reachable_in_one_step() {
        let b = m(&[&[0, 2], &[-1, 0]]);
        let out = bounded_reachability(&b, &b.negated(), &ExploreLimits::default()).unwrap();
        assert_eq!(out, Reachability::Reached(MutationWord(vec![0])));
    }

    #[test]
    fn golden_pair_bfs_never_reaches_the_target() {
        let limits = ExploreLimits { max_seeds: 20_000, max_depth: 8 };
        match bounded_reachability(&golden_start(), &golden_target(), &limits).unwrap() {
            Reachability::Reached(word) => panic!("impossible word {word} found"),
            Reachability::NotFoundWithinLimits { explored, .. } => {
                assert!(explored > 1, "the search actually ran");
            }
        }
    }

    #[test]
    fn exhaustive_search_is_reported_as_a_proof() {
        // Rank-2 classes are tiny; searching for an unrelated matrix drains
        // the class completely.
        let b = m(&[&[0, 1], &[-1, 0]]);
        let foreign = m(&[&[0, 3], &[-1, 0]]);
        match bounded_reachability(&b, &foreign, &ExploreLimits::default()).unwrap() {
            Reachability::NotFoundWithinLimits { explored, exhausted } => {
                assert!(exhausted);
                assert_eq!(explored, 2, "a rank-2 class holds only B and -B");
            }
            other => panic!("unexpected outcome {other:?}"),
        }
    }
}
