//! Exporting a mutation class: DOT for graph viewers, JSON for everything
//! else. Both formats are deterministic byte-for-byte.

use valquiver::explore::{explore, ExploreLimits};
use valquiver::io::{graph_summary_line, graph_to_dot, graph_to_json};
use valquiver::{ExchangeMatrix, Seed, ValuedQuiver};

fn main() -> Result<(), valquiver::Error> {
    let b = ExchangeMatrix::from_i64_rows(&[&[0, 1], &[-1, 0]])?;
    let graph = explore(
        &Seed::initial(ValuedQuiver::from_matrix(&b)?),
        &ExploreLimits::default(),
    )?;
    println!("{}", graph_summary_line(&graph));

    // DOT: one node per labeled seed, one undirected edge per mutation,
    // labeled by its direction. Pipe into `dot -Tsvg` to draw the decagon.
    println!("{}", graph_to_dot(&graph, false));

    // JSON carries the complete picture: every seed with its cluster and
    // quiver, every edge, and the summary block.
    let value = graph_to_json(&graph);
    println!(
        "json: {} seeds, {} edge records, summary {}",
        value["seeds"].as_array().map_or(0, Vec::len),
        value["edges"].as_array().map_or(0, Vec::len),
        value["summary"]
    );

    // The full document round-trips through serde_json losslessly.
    let text = serde_json::to_string_pretty(&value).expect("valid JSON");
    let reparsed: serde_json::Value = serde_json::from_str(&text).expect("parses back");
    assert_eq!(reparsed, value);

    Ok(())
}
