//! The graph text format and what each edge kind means.
//!
//! A group is declared by a mixed graph: `vertex` lines name the
//! generators, `edge u v` makes `u` and `v` commute, and `arrow u v` imposes
//! the Klein-bottle relation `v u v^-1 = u^-1` (the target `v` dominates the
//! origin `u`).
//!
//! Run with:
//!
//! ```bash
//! cargo run --example graph_dsl
//! ```

use traag::{format_graph, parse_graph, Edge};

fn main() {
    let text = "\
# one commuting pair, one twisted pair
vertex a
vertex b
vertex c
edge a b
arrow c b   # b c b^-1 = c^-1
";
    println!("input:\n{text}");

    let g = parse_graph(text).expect("the example graph parses");
    println!("vertices: {:?}", g.vertices().iter().map(|v| v.as_str()).collect::<Vec<_>>());
    for edge in g.edges() {
        match edge {
            Edge::Plain(u, v) => println!("plain edge {u} -- {v}"),
            Edge::Oriented(e) => {
                println!("oriented edge {} -> {} (target {} dominates)", e.origin, e.target, e.target)
            }
        }
    }

    println!("\none relator per edge:");
    for relator in g.relators() {
        println!("  {relator} = 1");
    }

    println!("\nstars:");
    for v in g.vertices() {
        let star = g.star(v.as_str()).unwrap();
        let names: Vec<&str> = star.iter().map(|u| u.as_str()).collect();
        println!("  st({v}) = {{{}}}", names.join(", "));
    }

    // Errors carry the line and column of the offending token.
    let bad = "vertex a\nedge a oops\n";
    let err = parse_graph(bad).unwrap_err();
    println!("\nerror demo: {err}");

    // Formatting round-trips: parse(format(g)) == g.
    print!("\nround-trip:\n{}", format_graph(&g));
}
