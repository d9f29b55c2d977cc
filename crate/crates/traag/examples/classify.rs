//! Classifying groups from their graphs.
//!
//! The three verdicts are pure graph conditions:
//!
//! - torsion-free      iff no oriented cycle is supported on a complete subgraph
//! - left-orderable    iff no oriented cycle
//! - bi-orderable      iff no oriented edge
//!
//! Every verdict ships with a certificate, and every certificate can be
//! revalidated against the graph it was issued for.
//!
//! Run with:
//!
//! ```bash
//! cargo run --example classify
//! ```

use traag::{classify, parse_graph, render_classification};

fn main() {
    let corpus = [
        ("klein bottle (arrow b a)", "vertex a\nvertex b\narrow b a\n"),
        (
            "oriented triangle",
            "vertex a\nvertex b\nvertex c\narrow a b\narrow b c\narrow c a\n",
        ),
        (
            "chordless oriented 4-cycle",
            "vertex a\nvertex b\nvertex c\nvertex d\n\
             arrow a b\narrow b c\narrow c d\narrow d a\n",
        ),
        ("plain path a-b-c", "vertex a\nvertex b\nvertex c\nedge a b\nedge b c\n"),
        ("free group of rank 3", "vertex x\nvertex y\nvertex z\n"),
    ];

    for (name, text) in corpus {
        let g = parse_graph(text).expect("corpus graphs parse");
        let classification = classify(&g);
        println!("== {name} ==");
        print!("{}", render_classification(&classification));
        for cert in &classification.certificates {
            cert.revalidate(&g).expect("issued certificates revalidate");
        }
        println!("   ({} certificates, all revalidated)\n", classification.certificates.len());
    }

    // The triangle is the smallest graph whose group has torsion: the cycle
    // word squares to the identity.
    let g = parse_graph("vertex a\nvertex b\nvertex c\narrow a b\narrow b c\narrow c a\n").unwrap();
    let w: traag::Word = "a b c a b c".parse().unwrap();
    println!("sanity: (a b c)^2 reduces to `{}`", traag::reduce(&g, &w).unwrap());
}
