//! Similarity of exchange matrices up to simultaneous relabeling and a global
//! sign: finding witnesses and canonical forms.

use valquiver::similarity::{canonical_form, find_similarities, quiver_automorphisms};
use valquiver::ExchangeMatrix;

fn main() -> Result<(), valquiver::Error> {
    // Two rank-3 matrices that look different but describe the same quiver up
    // to swapping the first two vertices and flipping every arrow.
    let left = ExchangeMatrix::from_i64_rows(&[&[0, 2, 0], &[-2, 0, 1], &[0, -1, 0]])?;
    let right = ExchangeMatrix::from_i64_rows(&[&[0, -2, 1], &[2, 0, 0], &[-1, 0, 0]])?;

    let witnesses = find_similarities(&left, &right)?;
    println!("witnesses carrying {left} to {right}:");
    for w in &witnesses {
        println!("  sigma = {} with sign {}", w.sigma, w.sign);
    }
    assert!(!witnesses.is_empty());

    // Similarity classes have a canonical representative: the
    // lexicographically smallest relocation over all permutations and signs.
    let canon_left = canonical_form(&left)?;
    let canon_right = canonical_form(&right)?;
    assert_eq!(canon_left, canon_right, "similar matrices share a canonical form");
    println!("shared canonical form: {canon_left}");

    // The (2,2)-valued triangle is fixed by all three rotations.
    let markov = ExchangeMatrix::from_i64_rows(&[&[0, 2, -2], &[-2, 0, 2], &[2, -2, 0]])?;
    let autos = quiver_automorphisms(&markov)?;
    println!("{markov} is fixed by {} relabelings:", autos.len());
    for sigma in &autos {
        println!("  {sigma}");
    }

    Ok(())
}
