//! Cluster automorphism groups of finite mutation classes.
//!
//! An automorphism here is a field map fixing the class setwise and carrying
//! clusters to clusters. Every such map sends the initial cluster to some
//! labeled seed of the class along a permutation, and that pair is admissible
//! exactly when the two exchange matrices are similar along the permutation —
//! so for a completely explored class the whole group can be enumerated,
//! deduplicated by the image tuple, and multiplied out into a finite table.

use crate::error::Error;
use crate::explore::{explore, ExploreLimits, MutationClassGraph};
use crate::laurent::LaurentPoly;
use crate::perm::Permutation;
use crate::quiver::ValuedQuiver;
use crate::seed::Seed;
use crate::similarity::{canonical_form, similarity_sign, Sign};
use std::collections::BTreeMap;

/// Largest rank for which the group search runs; the enumeration walks all
/// `n!` permutations against every seed of the class.
pub const MAX_GROUP_RANK: usize = 6;

#[derive(Debug, Clone)]
pub struct AutGroupElement {
    /// Images of the initial variables: the map sends `x_i` to `images[i]`.
    pub images: Vec<LaurentPoly>,
    /// A seed of the class whose cluster realizes the images.
    pub seed: usize,
    pub sigma: Permutation,
    pub sign: Sign,
}

#[derive(Debug, Clone)]
pub struct GroupTable {
    pub elements: Vec<AutGroupElement>,
    /// `multiplication[a][b]` is the element acting as "apply `b`, then `a`".
    pub multiplication: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverses: Vec<usize>,
    pub element_orders: Vec<usize>,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Searches for two involutions generating the whole group with
    /// `(ab)^m = 1` and `2m` equal to the group order — the shape every
    /// dihedral group takes. Returns `(a, b, m)` indices on success.
    pub fn dihedral_presentation(&self) -> Option<(usize, usize, usize)> {
        let n = self.order();
        if n % 2 != 0 || n < 2 {
            return None;
        }
        let m = n / 2;
        for a in 0..n {
            if self.element_orders[a] != 2 {
                continue;
            }
            for b in 0..n {
                if b == a || self.element_orders[b] != 2 {
                    continue;
                }
                let ab = self.multiplication[a][b];
                if self.element_orders[ab] == m && self.generates(&[a, b]) {
                    return Some((a, b, m));
                }
            }
        }
        None
    }

    /// Whether the listed elements generate the whole group.
    pub fn generates(&self, generators: &[usize]) -> bool {
        let mut reached = vec![false; self.order()];
        reached[self.identity] = true;
        let mut frontier = vec![self.identity];
        while let Some(g) = frontier.pop() {
            for &h in generators {
                let gh = self.multiplication[g][h];
                if !reached[gh] {
                    reached[gh] = true;
                    frontier.push(gh);
                }
            }
        }
        reached.iter().all(|&r| r)
    }
}

/// Computes the cluster automorphism group of the class of `quiver`, rooted
/// at its initial seed. The class must be finite within `limits`; a truncated
/// exploration is refused rather than reported as a smaller group.
pub fn automorphism_group(
    quiver: &ValuedQuiver,
    limits: &ExploreLimits,
) -> Result<GroupTable, Error> {
    let n = quiver.n();
    if n > MAX_GROUP_RANK {
        return Err(Error::RankTooLarge { rank: n, max: MAX_GROUP_RANK });
    }
    let root = Seed::initial(quiver.clone());
    let graph = explore(&root, limits)?;
    if !graph.complete() {
        return Err(Error::InfiniteOrTruncatedClass);
    }
    group_from_graph(&graph)
}

/// The same computation on an already-explored class. The graph must be
/// complete and rooted at an initial seed (plain variables), which is how
/// `automorphism_group` builds it.
pub fn group_from_graph(graph: &MutationClassGraph) -> Result<GroupTable, Error> {
    if !graph.complete() {
        return Err(Error::InfiniteOrTruncatedClass);
    }
    let root_matrix = graph.seed(0).matrix();
    let n = graph.rank();
    if n > MAX_GROUP_RANK {
        return Err(Error::RankTooLarge { rank: n, max: MAX_GROUP_RANK });
    }
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    // Deduplicate by image tuple: distinct (seed, sigma) pairs can induce the
    // same field map when the class contains relabelings of its own seeds.
    let mut by_images: BTreeMap<Vec<LaurentPoly>, AutGroupElement> = BTreeMap::new();
    for (id, seed) in graph.seeds().iter().enumerate() {
        let m = seed.matrix();
        for sigma in &perms {
            let Some(sign) = similarity_sign(&root_matrix, &m, sigma)? else {
                continue;
            };
            let images: Vec<LaurentPoly> = (0..n)
                .map(|i| seed.cluster()[sigma.apply(i)].clone())
                .collect();
            by_images.entry(images.clone()).or_insert(AutGroupElement {
                images,
                seed: id,
                sigma: sigma.clone(),
                sign,
            });
        }
    }
    let elements: Vec<AutGroupElement> = by_images.into_values().collect();
    let index: BTreeMap<&[LaurentPoly], usize> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.images.as_slice(), i))
        .collect();

    let order = elements.len();
    let mut multiplication = vec![vec![0usize; order]; order];
    for (a, ea) in elements.iter().enumerate() {
        for (b, eb) in elements.iter().enumerate() {
            // (a ∘ b)(x_i) = a(b(x_i)): push b's images through a.
            let mut composed = Vec::with_capacity(eb.images.len());
            for bi in &eb.images {
                let image = bi
                    .substitute(&ea.images)?
                    .ok_or(Error::LaurentPhenomenonViolation)?;
                composed.push(image);
            }
            let idx = *index
                .get(composed.as_slice())
                .expect("automorphism composition stays inside the group");
            multiplication[a][b] = idx;
        }
    }

    let formal: Vec<LaurentPoly> = (0..n)
        .map(|i| LaurentPoly::variable(n, i).expect("index in range"))
        .collect();
    let identity = *index
        .get(formal.as_slice())
        .expect("the identity map is always present");
    let mut inverses = vec![0usize; order];
    for a in 0..order {
        let inv = (0..order)
            .find(|&b| multiplication[a][b] == identity)
            .expect("finite groups have inverses");
        inverses[a] = inv;
    }
    let mut element_orders = vec![0usize; order];
    for a in 0..order {
        let mut power = a;
        let mut ord = 1;
        while power != identity {
            power = multiplication[power][a];
            ord += 1;
        }
        element_orders[a] = ord;
    }

    Ok(GroupTable { elements, multiplication, identity, inverses, element_orders })
}

/// Partitions the seeds of an explored class by similarity of their exchange
/// matrices. Classes are ordered by their canonical representative and each
/// class lists seed ids ascending.
pub fn similarity_classes(graph: &MutationClassGraph) -> Result<Vec<Vec<usize>>, Error> {
    let mut buckets: BTreeMap<_, Vec<usize>> = BTreeMap::new();
    for (id, seed) in graph.seeds().iter().enumerate() {
        buckets
            .entry(canonical_form(&seed.matrix())?)
            .or_default()
            .push(id);
    }
    Ok(buckets.into_values().collect())
}
