//! Valued quivers and their exchange matrices: construction, the symmetrizer,
//! mutation, and the matrix encoding.

use std::collections::BTreeMap;
use valquiver::ValuedQuiver;

fn main() -> Result<(), valquiver::Error> {
    // A rank-3 quiver with arrows 1 -> 2, 1 -> 3, 3 -> 2 and non-trivial
    // valuations. Vertices are 0-based in the API.
    let mut arrows = BTreeMap::new();
    arrows.insert((0, 1), (2.into(), 1.into()));
    arrows.insert((0, 2), (4.into(), 1.into()));
    arrows.insert((2, 1), (1.into(), 2.into()));
    let q = ValuedQuiver::from_arrows(3, arrows)?;

    // from_arrows derives the minimal positive symmetrizer: d_i * v_ij = v_ji * d_j.
    println!("weights d = {:?}", q.weights());

    let b = q.matrix();
    println!("exchange matrix B = {b}");
    assert_eq!(q, ValuedQuiver::from_matrix(&b)?, "matrix encoding is faithful");

    // Mutation at vertex 2 (0-based index 1) rewrites arrows in place.
    let mutated = q.mutate(1)?;
    println!("after mutating at vertex 2:");
    for (&(i, j), (v, w)) in mutated.arrows() {
        println!("  {} -> {} with valuation ({v},{w})", i + 1, j + 1);
    }

    // Mutation is an involution and commutes with the matrix encoding.
    assert_eq!(mutated.mutate(1)?, q);
    assert_eq!(mutated.matrix(), b.mutate(1)?);

    // Valuations that violate the symmetrizer law are rejected outright.
    let mut bad = BTreeMap::new();
    bad.insert((0, 1), (2.into(), 2.into()));
    let err = ValuedQuiver::new(2, bad, vec![1.into(), 2.into()]).unwrap_err();
    println!("invalid valuation rejected: {err}");

    Ok(())
}
