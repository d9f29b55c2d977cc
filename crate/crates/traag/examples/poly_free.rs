//! Source elimination: towers for cycle-free graphs.
//!
//! A vertex is a source when every oriented edge at it points away.
//! Killing a source is a retraction onto the subgroup generated by the
//! remaining vertices, and its kernel is free; peeling sources one at a
//! time therefore exhibits the group as poly-free, which implies it is
//! left-orderable. The peeling gets stuck exactly when an oriented cycle
//! blocks it.
//!
//! Run with:
//!
//! ```bash
//! cargo run --example poly_free
//! ```

use traag::{check_retraction, parse_graph, project_kill_source, SourceElimination, Word};

fn main() {
    let chain = parse_graph("vertex a\nvertex b\nvertex c\narrow a b\narrow b c\n").unwrap();
    let triangle =
        parse_graph("vertex a\nvertex b\nvertex c\narrow a b\narrow b c\narrow c a\n").unwrap();

    match chain.source_elimination_order() {
        SourceElimination::Tower(tower) => {
            let names: Vec<&str> = tower.iter().map(|v| v.as_str()).collect();
            println!("a -> b -> c peels as: {}", names.join(", "));
        }
        SourceElimination::Cycle(_) => unreachable!("the chain is cycle-free"),
    }

    match triangle.source_elimination_order() {
        SourceElimination::Tower(_) => unreachable!("the triangle has a cycle"),
        SourceElimination::Cycle(cycle) => {
            println!("the triangle blocks at the cycle: {cycle}");
            cycle.revalidate(&triangle).unwrap();
        }
    }

    // The retraction that kills a source maps every relator to the identity
    // of the smaller group and fixes everything that avoids the source.
    println!();
    for v in ["a", "b", "c"] {
        let report = check_retraction(&chain, v).unwrap();
        println!("kill {v} in the chain: {report}");
    }

    // Watch the projection act on a word: killing the source a of the chain.
    let w: Word = "a b a^-1 b".parse().unwrap();
    let image = project_kill_source(&chain, "a", &w).unwrap();
    println!("\nkilling a sends {w} to {image}");

    // Killing a non-source is rejected: some arrow points at it, so the
    // would-be homomorphism is not well defined.
    let err = project_kill_source(&triangle, "a", &w).unwrap_err();
    println!("killing a in the triangle fails: {err}");
}
