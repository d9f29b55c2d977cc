//! Certificates: every verdict comes with checkable evidence.
//!
//! A negative left-orderability verdict is explained by a contradiction
//! chain: each oriented edge `[x,y>` spans a Klein-bottle subgroup, and in
//! any left-order its convexity inequality forces
//! `max(x, x^-1) < max(y, y^-1)`; around a cycle that strict increase bites
//! its own tail. Torsion verdicts carry an explicit element and its order.
//! All certificates revalidate mechanically and serialize to stable JSON.
//!
//! Run with:
//!
//! ```bash
//! cargo run --example certificates
//! ```

use traag::{
    certify_not_left_orderable, classification_json, classify, parse_graph, render_chain,
    torsion_witness, Certificate, TorsionWitness,
};

fn main() {
    let cycle4 = parse_graph(
        "vertex a\nvertex b\nvertex c\nvertex d\narrow a b\narrow b c\narrow c d\narrow d a\n",
    )
    .unwrap();
    let triangle =
        parse_graph("vertex a\nvertex b\nvertex c\narrow a b\narrow b c\narrow c a\n").unwrap();

    // The chordless 4-cycle: torsion-free, yet not left-orderable.
    let chain = certify_not_left_orderable(&cycle4).unwrap();
    println!("4-cycle contradiction chain:\n{}", render_chain(&chain));
    chain.revalidate(&cycle4).unwrap();

    // The triangle additionally has torsion, witnessed explicitly.
    match torsion_witness(&triangle, 16) {
        Some(TorsionWitness::Found { word, order }) => {
            println!("triangle torsion witness: ({word})^{order} = 1");
        }
        Some(TorsionWitness::ProbeExhausted { word, k_max }) => {
            println!("triangle: ({word})^k nontrivial for k <= {k_max}");
        }
        None => println!("triangle: torsion-free by the graph criterion"),
    }
    // The 4-cycle has no clique-supported cycle, so no torsion to witness.
    assert!(torsion_witness(&cycle4, 16).is_none());

    // Certificates attached by classify, revalidated one by one.
    let classification = classify(&triangle);
    println!("\ntriangle certificates:");
    for cert in &classification.certificates {
        cert.revalidate(&triangle).unwrap();
        let label = match cert {
            Certificate::CliqueCycle { .. } => "clique-supported cycle + torsion witness",
            Certificate::OrientedCycle(_) => "oriented cycle",
            Certificate::NonOrderabilityChain(_) => "non-orderability chain",
            Certificate::PolyFreeTower { .. } => "poly-free tower",
            Certificate::OrientedEdge(_) => "oriented edge",
        };
        println!("  - {label} (revalidated)");
    }

    // Stable JSON: fixed key order, words as text, no floating point.
    println!("\nJSON report:\n{}", classification_json(&classification));
}
