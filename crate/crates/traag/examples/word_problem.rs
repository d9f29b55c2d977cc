//! Solving the word problem with the reduced-word normal form.
//!
//! A word is reduced when no two syllables of the same generator can be
//! brought together by shuffling across their common star. The engine
//! rewrites any word to a reduced one; a word is the identity exactly when
//! its reduced form is empty, so equality of `u` and `v` is decided by
//! reducing `u v^-1`.
//!
//! Run with:
//!
//! ```bash
//! cargo run --example word_problem
//! ```

use traag::{
    abelianize, canonical_form, eq, is_identity, parse_graph, pull_generator_front, reduce,
    torsion_probe, Word,
};

fn w(s: &str) -> Word {
    s.parse().expect("example words parse")
}

fn main() {
    let klein = parse_graph("vertex a\nvertex b\narrow b a\n").unwrap();
    let triangle =
        parse_graph("vertex a\nvertex b\nvertex c\narrow a b\narrow b c\narrow c a\n").unwrap();

    // In the Klein-bottle group, a b a^-1 = b^-1, so a b a^-1 b collapses.
    println!("reduce(a b a^-1 b)   = {}", reduce(&klein, &w("a b a^-1 b")).unwrap());
    println!("reduce(b a)          = {}  (already reduced)", reduce(&klein, &w("b a")).unwrap());
    println!("eq(b a, a b^-1)      = {}", eq(&klein, &w("b a"), &w("a b^-1")).unwrap());

    // Exchange rules flip the dominated exponent across odd powers of the
    // dominator: b^3 a = a b^-3.
    println!("reduce(b^3 a a^-1 b) = {}", reduce(&klein, &w("b^3 a a^-1 b")).unwrap());

    // The triangle's cycle word is an involution.
    let abc = w("a b c");
    println!("\ntriangle: is_identity(a b c)          = {}", is_identity(&triangle, &abc).unwrap());
    println!("triangle: is_identity((a b c)^2)      = {}", is_identity(&triangle, &abc.concat(&abc)).unwrap());
    println!("triangle: torsion_probe(a b c, 16)    = {:?}", torsion_probe(&triangle, &abc, 16).unwrap());
    println!("triangle: abelianize(a b c)           = {}", abelianize(&triangle, &abc).unwrap());

    // The abelianization is a sound but incomplete identity test: b^2 has
    // zero image (b originates an oriented edge, so its coordinate is mod 2)
    // yet is nontrivial.
    let bb = w("b b");
    println!("\nklein: abelianize(b^2) = {} but is_identity = {}",
        abelianize(&klein, &bb).unwrap(),
        is_identity(&klein, &bb).unwrap());

    // Factoring over a star: w = a^k * rest with rest free of a.
    let (k, rest) = pull_generator_front(&klein, &w("b a b a^-1 b"), "a").unwrap();
    println!("\npull a to the front of b a b a^-1 b: k = {k}, rest = {rest}");

    // A deterministic representative for printing and caching. Equality
    // still goes through eq, never through comparing these forms.
    println!("canonical_form(b a)  = {}", canonical_form(&klein, &w("b a")).unwrap());
}
