//! Breadth-first enumeration of a mutation class: seeds, clusters, cluster
//! variables, and what happens when a class is infinite.

use valquiver::explore::{explore, ExploreLimits};
use valquiver::{ExchangeMatrix, Seed, ValuedQuiver};

fn main() -> Result<(), valquiver::Error> {
    // The rank-2 class with valuation pair (2,1): six seeds in a cycle.
    let b = ExchangeMatrix::from_i64_rows(&[&[0, 2], &[-1, 0]])?;
    let root = Seed::initial(ValuedQuiver::from_matrix(&b)?);
    let graph = explore(&root, &ExploreLimits::default())?;

    println!(
        "(2,1) class: labeled={} clusters={} variables={} complete={}",
        graph.len(),
        graph.cluster_count(),
        graph.variable_count(),
        graph.complete()
    );
    println!("every cluster variable, as a Laurent polynomial in the root cluster:");
    for v in graph.variables() {
        println!("  {v}");
    }

    // Each seed remembers the shortest mutation word that reaches it.
    for id in 0..graph.len() {
        println!("seed {} reached by word [{}]", id + 1, graph.word_to(id));
    }

    // An infinite class: the (2,2)-valued triangle. The cap makes the search
    // stop and the graph reports itself incomplete.
    let markov = ExchangeMatrix::from_i64_rows(&[&[0, 2, -2], &[-2, 0, 2], &[2, -2, 0]])?;
    let capped = ExploreLimits { max_seeds: 40, max_depth: 1_000 };
    let truncated = explore(&Seed::initial(ValuedQuiver::from_matrix(&markov)?), &capped)?;
    println!(
        "(2,2)-triangle with a 40-seed cap: labeled={} complete={}",
        truncated.len(),
        truncated.complete()
    );

    Ok(())
}
