//! Cluster automorphism groups of finite mutation classes, computed by
//! closing the similarity witnesses of every seed into a multiplication table.

use valquiver::autgroup::automorphism_group;
use valquiver::explore::ExploreLimits;
use valquiver::{ExchangeMatrix, ValuedQuiver};

fn main() -> Result<(), valquiver::Error> {
    let limits = ExploreLimits::default();

    for (name, rows) in [
        ("(2,1)", [[0i64, 2], [-1, 0]]),
        ("(3,1)", [[0, 3], [-1, 0]]),
        ("(1,1)", [[0, 1], [-1, 0]]),
    ] {
        let b = ExchangeMatrix::from_i64_rows(&[&rows[0], &rows[1]])?;
        let table = automorphism_group(&ValuedQuiver::from_matrix(&b)?, &limits)?;
        println!("class {name}: group of order {}", table.order());
        println!(
            "  element orders: {:?}",
            table.element_orders
        );
        if let Some((a, b, m)) = table.dihedral_presentation() {
            println!(
                "  dihedral: T1^2 = T2^2 = (T1 T2)^{m} = 1, generators g{} and g{}",
                a + 1,
                b + 1
            );
        }
        // The table is a genuine group: every element has an inverse and the
        // composition stays inside.
        for (g, &inv) in table.inverses.iter().enumerate() {
            assert_eq!(table.multiplication[g][inv], table.identity);
        }
    }

    // An infinite class is refused rather than silently truncated.
    let markov = ExchangeMatrix::from_i64_rows(&[&[0, 2, -2], &[-2, 0, 2], &[2, -2, 0]])?;
    let err = automorphism_group(
        &ValuedQuiver::from_matrix(&markov)?,
        &ExploreLimits { max_seeds: 100, max_depth: 1_000 },
    )
    .unwrap_err();
    println!("(2,2)-triangle: {err}");

    Ok(())
}
