//! Built-in verification suites. Each suite exercises one of the engine's
//! core guarantees on randomized or exhaustively enumerated inputs, is
//! deterministic for a fixed RNG seed, and reports a line per failed check.
//!
//! Available suites:
//! - `relabeling`: relabeling commutes with mutation on random matrices
//! - `laurent`: finite classes have the expected counts and positive variables
//! - `isomorphism`: the matrix similarity test agrees with the brute-force
//!   cluster bijection on an exhaustively enumerated class
//! - `preserver`: variable preservation, similarity, and isomorphism coincide
//! - `transport`: cluster isomorphisms carry mutated clusters entrywise to
//!   the relabeled mutation word
//! - `parity`: closed parity patterns are mutation invariants
//! - `similarity`: finite rank-2 classes and the (2,2)-triangle each fall in
//!   a single similarity class
//! - `groups`: automorphism groups of small classes have the known dihedral
//!   shape

use crate::autgroup::{automorphism_group, similarity_classes};
use crate::error::Error;
use crate::exchange::between_roots;
use crate::explore::{explore, ExploreLimits};
use crate::matrix::ExchangeMatrix;
use crate::parity::{certify_unreachable, ParityPattern};
use crate::perm::Permutation;
use crate::quiver::ValuedQuiver;
use crate::seed::{MutationWord, Seed};
use num_bigint::BigInt;
use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_RNG_SEED: u64 = 24150;

pub const SUITE_NAMES: &[&str] = &[
    "relabeling",
    "laurent",
    "isomorphism",
    "preserver",
    "transport",
    "parity",
    "similarity",
    "groups",
];

/// Outcome of one suite: how many checks ran, which failed, and any
/// informational notes worth printing.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &'static str) -> Self {
        SuiteReport { suite, checks: 0, failures: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(label());
        }
    }

    fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary_line(&self) -> String {
        format!(
            "suite={} checks={} failures={} {}",
            self.suite,
            self.checks,
            self.failures.len(),
            if self.passed() { "ok" } else { "FAILED" }
        )
    }
}

/// Runs the named suite, or all of them for `"all"`. Each suite draws from
/// its own stream derived from `rng_seed`, so results do not depend on which
/// other suites run alongside.
pub fn run_suites(name: &str, rng_seed: u64) -> Result<Vec<SuiteReport>, Error> {
    let selected: Vec<&'static str> = if name == "all" {
        SUITE_NAMES.to_vec()
    } else {
        match SUITE_NAMES.iter().find(|s| **s == name) {
            Some(s) => vec![*s],
            None => {
                return Err(Error::Parse(format!(
                    "unknown suite {name:?}; expected one of {} or \"all\"",
                    SUITE_NAMES.join(", ")
                )))
            }
        }
    };
    let mut reports = Vec::new();
    for suite in selected {
        let index = SUITE_NAMES.iter().position(|s| *s == suite).unwrap() as u64;
        let mut rng =
            ChaCha8Rng::seed_from_u64(rng_seed.wrapping_add(index.wrapping_mul(0x9E3779B97F4A7C15)));
        reports.push(match suite {
            "relabeling" => relabeling_suite(&mut rng)?,
            "laurent" => laurent_suite()?,
            "isomorphism" => isomorphism_suite()?,
            "preserver" => preserver_suite()?,
            "transport" => transport_suite(&mut rng)?,
            "parity" => parity_suite(&mut rng)?,
            "similarity" => similarity_suite()?,
            "groups" => groups_suite()?,
            _ => unreachable!(),
        });
    }
    Ok(reports)
}

/// A random skew-symmetrizable matrix: weights are drawn from {1, 2, 3} and
/// each unordered pair gets an arrow with probability ~0.55, oriented at
/// random, with valuations scaled off the weights so the symmetrizer law
/// holds exactly.
pub fn random_matrix(rng: &mut impl Rng, n: usize, max_scale: i64) -> ExchangeMatrix {
    let d: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
    let mut rows = vec![vec![BigInt::from(0); n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(0.45) {
                continue;
            }
            let m = rng.gen_range(1..=max_scale);
            let g = d[i].gcd(&d[j]);
            let v = m * d[j] / g;
            let w = m * d[i] / g;
            if rng.gen_bool(0.5) {
                rows[i][j] = BigInt::from(v);
                rows[j][i] = BigInt::from(-w);
            } else {
                rows[i][j] = BigInt::from(-v);
                rows[j][i] = BigInt::from(w);
            }
        }
    }
    ExchangeMatrix::from_rows(rows).expect("construction satisfies the symmetrizer law")
}

fn random_permutation(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).expect("shuffled identity is a bijection")
}

fn type_a(n: usize) -> ExchangeMatrix {
    let mut rows = vec![vec![BigInt::from(0); n]; n];
    for i in 0..n - 1 {
        rows[i][i + 1] = BigInt::from(1);
        rows[i + 1][i] = BigInt::from(-1);
    }
    ExchangeMatrix::from_rows(rows).expect("path orientation is skew-symmetric")
}

fn rank2(v: i64, w: i64) -> ExchangeMatrix {
    ExchangeMatrix::from_i64_rows(&[&[0, v], &[-w, 0]]).expect("rank-2 valued pair")
}

fn relabeling_suite(rng: &mut ChaCha8Rng) -> Result<SuiteReport, Error> {
    let mut report = SuiteReport::new("relabeling");
    for trial in 0..1000 {
        let n = rng.gen_range(2..=5);
        let b = random_matrix(rng, n, 2);
        let sigma = random_permutation(rng, n);
        for k in 0..n {
            let lhs = b.mutate(k)?.permuted(&sigma)?;
            let rhs = b.permuted(&sigma)?.mutate(sigma.apply(k))?;
            report.check(lhs == rhs, || {
                format!("trial {trial}: relabeling {sigma} does not commute with mutation at {k} on {b}")
            });
        }
    }
    report.note("1000 random matrices of rank 2..=5, every direction checked");
    Ok(report)
}

fn laurent_suite() -> Result<SuiteReport, Error> {
    let mut report = SuiteReport::new("laurent");
    let limits = ExploreLimits::default();
    // (name, matrix, labeled seeds, clusters, variables); labeled count None
    // where it is left as a recorded observation.
    let cases: Vec<(&str, ExchangeMatrix, Option<usize>, usize, usize)> = vec![
        ("A2", rank2(1, 1), Some(10), 5, 5),
        ("B2", rank2(2, 1), Some(6), 6, 6),
        ("G2", rank2(3, 1), Some(8), 8, 8),
        ("A3", type_a(3), None, 14, 9),
    ];
    for (name, matrix, labeled, clusters, variables) in cases {
        let quiver = ValuedQuiver::from_matrix(&matrix)?;
        let graph = explore(&Seed::initial(quiver), &limits)?;
        report.check(graph.complete(), || format!("{name}: exploration truncated"));
        if let Some(expected) = labeled {
            report.check(graph.len() == expected, || {
                format!("{name}: {} labeled seeds, expected {expected}", graph.len())
            });
        } else {
            report.note(format!("{name}: {} labeled seeds", graph.len()));
        }
        report.check(graph.cluster_count() == clusters, || {
            format!("{name}: {} clusters, expected {clusters}", graph.cluster_count())
        });
        report.check(graph.variable_count() == variables, || {
            format!("{name}: {} variables, expected {variables}", graph.variable_count())
        });
        report.check(graph.all_variables_positive(), || {
            format!("{name}: found a cluster variable with a negative coefficient")
        });
        report.check(graph.cluster_determines_quiver(), || {
            format!("{name}: two seeds share a cluster but differ in quiver")
        });
    }
    Ok(report)
}

fn isomorphism_suite() -> Result<SuiteReport, Error> {
    let mut report = SuiteReport::new("isomorphism");
    let limits = ExploreLimits::default();
    let quiver = ValuedQuiver::from_matrix(&rank2(2, 1))?;
    let graph = explore(&Seed::initial(quiver), &limits)?;
    for (i, source) in graph.seeds().iter().enumerate() {
        for (j, target) in graph.seeds().iter().enumerate() {
            for sigma in Permutation::all(2) {
                let map = crate::exchange::ExchangeMap::new(
                    source.clone(),
                    target.clone(),
                    sigma.clone(),
                )?;
                let by_matrix = map.is_cluster_isomorphism()?;
                let by_bijection = map.verify_isomorphism_bruteforce(&limits)?.holds;
                let by_commutation = map.commutes_with_single_mutations()?;
                report.check(by_matrix == by_bijection, || {
                    format!(
                        "seeds ({},{}) sigma {sigma}: matrix test {by_matrix} vs bijection {by_bijection}",
                        i + 1, j + 1
                    )
                });
                report.check(by_matrix == by_commutation, || {
                    format!(
                        "seeds ({},{}) sigma {sigma}: matrix test {by_matrix} vs exchange transport {by_commutation}",
                        i + 1, j + 1
                    )
                });
            }
        }
    }
    report.note("all 36 labeled seed pairs of the (2,1) class, both permutations");
    Ok(report)
}

fn preserver_suite() -> Result<SuiteReport, Error> {
    let mut report = SuiteReport::new("preserver");
    let limits = ExploreLimits::default();
    // The three properties depend only on the two quivers and sigma, so
    // distinct matrices of each class suffice.
    let families = [rank2(1, 1), rank2(2, 1)];
    let mut quivers = Vec::new();
    for matrix in &families {
        let graph = explore(&Seed::initial(ValuedQuiver::from_matrix(matrix)?), &limits)?;
        let mut seen = std::collections::BTreeSet::new();
        for seed in graph.seeds() {
            if seen.insert(seed.matrix()) {
                quivers.push(seed.quiver().clone());
            }
        }
    }
    for source in &quivers {
        for target in &quivers {
            for sigma in Permutation::all(2) {
                let map = between_roots(source, target, sigma.clone())?;
                let preserver = map.is_variable_preserver(&limits)?;
                let similar = map.is_cluster_isomorphism()?;
                let bijection = map.verify_isomorphism_bruteforce(&limits)?.holds;
                report.check(preserver == similar && similar == bijection, || {
                    format!(
                        "{} vs {} sigma {sigma}: preserver={preserver} similar={similar} bijection={bijection}",
                        source.matrix(), target.matrix()
                    )
                });
            }
        }
    }
    report.note(format!(
        "{} distinct quivers across the (1,1) and (2,1) classes, all pairs, both permutations",
        quivers.len()
    ));
    Ok(report)
}

fn transport_suite(rng: &mut ChaCha8Rng) -> Result<SuiteReport, Error> {
    let mut report = SuiteReport::new("transport");
    for trial in 0..200 {
        let n = rng.gen_range(2..=4);
        let matrix = random_matrix(rng, n, 1);
        let source = ValuedQuiver::from_matrix(&matrix)?;
        let sigma = random_permutation(rng, n);
        let negate = rng.gen_bool(0.5);
        let target = if negate {
            source.relabeled(&sigma)?.opposite()
        } else {
            source.relabeled(&sigma)?
        };
        let map = between_roots(&source, &target, sigma.clone())?;
        report.check(map.is_cluster_isomorphism()?, || {
            format!("trial {trial}: constructed relabeling is not similar (negate={negate})")
        });
        let len = rng.gen_range(0..=6);
        let word = MutationWord((0..len).map(|_| rng.gen_range(0..n)).collect());
        let mutated = Seed::initial(source.clone()).apply_word(&word)?;
        let transported = Seed::initial(target.clone()).apply_word(&word.transported(&sigma))?;
        for i in 0..n {
            let image = map.apply(&mutated.cluster()[i])?;
            report.check(
                image.as_ref() == Some(&transported.cluster()[sigma.apply(i)]),
                || {
                    format!(
                        "trial {trial}: entry {} of word {word} does not land on entry {} of the transported word",
                        i + 1,
                        sigma.apply(i) + 1
                    )
                },
            );
        }
    }
    report.note("200 random similar pairs (both signs), words of length <= 6");
    Ok(report)
}

fn parity_suite(rng: &mut ChaCha8Rng) -> Result<SuiteReport, Error> {
    let mut report = SuiteReport::new("parity");

    // Closed patterns are mutation invariants: walk randomly and re-test.
    let mut closed_trials = 0;
    while closed_trials < 2000 {
        let n = rng.gen_range(3..=4);
        let mut b = random_matrix(rng, n, 2);
        if rng.gen_bool(0.5) {
            // Doubling every entry keeps the symmetrizer and forces an
            // all-even (hence closed) pattern, enriching the sample.
            let doubled: Vec<Vec<BigInt>> =
                b.rows().iter().map(|row| row.iter().map(|x| x * 2).collect()).collect();
            b = ExchangeMatrix::from_rows(doubled)?;
        }
        let pattern = ParityPattern::of(&b);
        if !pattern.is_closed() {
            continue;
        }
        closed_trials += 1;
        let mut current = b.clone();
        for _ in 0..8 {
            current = current.mutate(rng.gen_range(0..n))?;
        }
        report.check(pattern.matches(&current), || {
            format!("closed pattern of {b} violated after a random walk, reached {current}")
        });
    }
    report.note("2000 random closed patterns of rank 3..=4, walks of length 8");

    // Row and column parities through the mutated direction never change,
    // whatever the pattern does elsewhere.
    for _ in 0..500 {
        let n = rng.gen_range(2..=4);
        let b = random_matrix(rng, n, 2);
        let k = rng.gen_range(0..n);
        let before = ParityPattern::of(&b);
        let after = ParityPattern::of(&b.mutate(k)?);
        let mut ok = true;
        for i in 0..n {
            ok &= before.entry(i, k) == after.entry(i, k);
            ok &= before.entry(k, i) == after.entry(k, i);
        }
        report.check(ok, || format!("mutation at {} changed a parity in its own row or column of {b}", k + 1));
    }

    // The worked example: a certified pair, re-verified from scratch.
    let start = ExchangeMatrix::from_i64_rows(&[&[0, 2, 0], &[-2, 0, 1], &[0, -1, 0]])?;
    let target = ExchangeMatrix::from_i64_rows(&[&[0, -2, 1], &[2, 0, 0], &[-1, 0, 0]])?;
    let cert = certify_unreachable(&start, &target)?;
    report.check(cert.as_ref().is_some_and(|c| c.verify()), || {
        "the rank-3 worked example did not produce a verifiable certificate".to_string()
    });

    // All-odd rank-3 patterns are not closed, so no certificate can issue
    // from them.
    let all_odd = ExchangeMatrix::from_i64_rows(&[&[0, 1, -1], &[-1, 0, 1], &[1, -1, 0]])?;
    report.check(!ParityPattern::of(&all_odd).is_closed(), || {
        "the all-odd rank-3 pattern was wrongly declared closed".to_string()
    });

    // Negative control: a mutation-reachable pair must never be certified.
    let b2 = rank2(2, 1);
    report.check(certify_unreachable(&b2, &b2.negated())?.is_none(), || {
        "certified a pair that one mutation connects".to_string()
    });
    Ok(report)
}

fn similarity_suite() -> Result<SuiteReport, Error> {
    let mut report = SuiteReport::new("similarity");
    let limits = ExploreLimits::default();
    let finite: Vec<(&str, ExchangeMatrix)> = vec![
        ("zero", rank2(0, 0)),
        ("(1,1)", rank2(1, 1)),
        ("(2,1)", rank2(2, 1)),
        ("(1,2)", rank2(1, 2)),
        ("(3,1)", rank2(3, 1)),
        ("(1,3)", rank2(1, 3)),
    ];
    for (name, matrix) in finite {
        let graph = explore(&Seed::initial(ValuedQuiver::from_matrix(&matrix)?), &limits)?;
        report.check(graph.complete(), || format!("{name}: exploration truncated"));
        let classes = similarity_classes(&graph)?;
        report.check(classes.len() == 1, || {
            format!("{name}: {} similarity classes, expected one", classes.len())
        });
        report.check(classes.iter().map(|c| c.len()).sum::<usize>() == graph.len(), || {
            format!("{name}: classes do not partition the seeds")
        });
    }
    // The (2,2)-triangle has an infinite class; the first 500 seeds are
    // bounded evidence, not a proof.
    let markov =
        ExchangeMatrix::from_i64_rows(&[&[0, 2, -2], &[-2, 0, 2], &[2, -2, 0]])?;
    let capped = ExploreLimits { max_seeds: 500, max_depth: 10_000 };
    let graph = explore(&Seed::initial(ValuedQuiver::from_matrix(&markov)?), &capped)?;
    report.check(!graph.complete(), || {
        "the (2,2)-triangle class was unexpectedly finite".to_string()
    });
    let classes = similarity_classes(&graph)?;
    report.check(classes.len() == 1, || {
        format!(
            "(2,2)-triangle: {} similarity classes among the first {} seeds",
            classes.len(),
            graph.len()
        )
    });
    report.note(format!(
        "(2,2)-triangle: single class across the first {} seeds (bounded evidence only)",
        graph.len()
    ));
    Ok(report)
}

fn groups_suite() -> Result<SuiteReport, Error> {
    let mut report = SuiteReport::new("groups");
    let limits = ExploreLimits::default();
    let cases: Vec<(&str, ExchangeMatrix, usize, Option<usize>)> = vec![
        ("rank-1", ExchangeMatrix::from_i64_rows(&[&[0]])?, 2, None),
        ("(1,1)", rank2(1, 1), 10, Some(5)),
        ("(2,1)", rank2(2, 1), 6, Some(3)),
        ("(3,1)", rank2(3, 1), 8, Some(4)),
    ];
    for (name, matrix, order, dihedral_m) in cases {
        let table = automorphism_group(&ValuedQuiver::from_matrix(&matrix)?, &limits)?;
        report.check(table.order() == order, || {
            format!("{name}: group order {} expected {order}", table.order())
        });
        match dihedral_m {
            Some(m) => {
                let found = table.dihedral_presentation();
                report.check(found.map(|(_, _, got)| got) == Some(m), || {
                    format!("{name}: dihedral presentation {:?}, expected product order {m}", found)
                });
            }
            None => {
                report.check(table.element_orders.iter().all(|&o| o <= 2), || {
                    format!("{name}: expected an elementary abelian group")
                });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_with_the_default_seed() {
        // The CLI exposes these; they must be green before it does.
        for report in run_suites("all", DEFAULT_RNG_SEED).unwrap() {
            assert!(
                report.passed(),
                "suite {} failed: {:?}",
                report.suite,
                report.failures
            );
            assert!(report.checks > 0, "suite {} ran no checks", report.suite);
        }
    }

    #[test]
    fn suites_are_deterministic_for_a_fixed_seed() {
        let a = run_suites("relabeling", 7).unwrap();
        let b = run_suites("relabeling", 7).unwrap();
        assert_eq!(a[0].checks, b[0].checks);
        assert_eq!(a[0].failures, b[0].failures);
    }

    #[test]
    fn unknown_suite_names_are_parse_errors() {
        assert!(matches!(
            run_suites("nonsense", 0),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn random_matrices_always_admit_a_symmetrizer() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(1..=5);
            let m = random_matrix(&mut rng, n, 2);
            assert!(m.find_symmetrizer().is_some(), "generator broke the law: {m}");
        }
    }
}
