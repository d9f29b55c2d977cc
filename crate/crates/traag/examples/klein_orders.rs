//! The four left-orders of a Klein-bottle subgroup.
//!
//! Every element of `<a, b | a b a^-1 = b^-1>` is `a^n b^m` for unique
//! integers. The four sign choices `(epsilon, mu)` give four positive
//! cones and hence four left-orders. In each of them the whole `<b>` axis
//! lies below the positive `a`-direction: `b^m < a^epsilon` for every `m`.
//! That convexity inequality is what makes oriented cycles incompatible
//! with left-orders.
//!
//! Run with:
//!
//! ```bash
//! cargo run --example klein_orders
//! ```

use std::cmp::Ordering;

use traag::{
    cone_contains, klein_compare, klein_coords, parse_graph, verify_cone_axioms, Cone,
    KleinContext, KleinCoords, Word,
};

fn main() {
    let g = parse_graph("vertex a\nvertex b\narrow b a\n").unwrap();
    let ctx = KleinContext::from_edge(&g, "b", "a").unwrap();
    println!("dominator: {}   dominated: {}", ctx.dominator(), ctx.dominated());

    // Words over {a, b} collapse to coordinates.
    for text in ["b a", "a^2 b^3 a^-1", "b a b a^-1", "1"] {
        let word: Word = text.parse().unwrap();
        let coords = klein_coords(&g, &ctx, &word).unwrap();
        println!("  {text:12} = {coords}");
    }

    // Coordinate arithmetic mirrors the group law.
    let x = KleinCoords::new(0, 1);
    let y = KleinCoords::new(1, 0);
    println!("\n(b) * (a) = {}   (the twist: b a = a b^-1)", x.multiply(&y).unwrap());
    println!("(a^2 b^3)^-1 = {}", KleinCoords::new(2, 3).inverse().unwrap());

    // The four cones, verified exhaustively on a box.
    println!();
    for cone in Cone::ALL {
        let report = verify_cone_axioms(cone, 25);
        println!("{report}");
    }

    // Sample comparisons under each order.
    let samples = [
        (KleinCoords::new(0, 0), KleinCoords::new(0, 1)),
        (KleinCoords::new(0, 1_000_000), KleinCoords::new(1, 0)),
        (KleinCoords::new(-1, 0), KleinCoords::new(0, 5)),
    ];
    println!();
    for cone in Cone::ALL {
        for (x, y) in samples {
            let sym = match klein_compare(cone, x, y) {
                Ordering::Less => "<",
                Ordering::Equal => "=",
                Ordering::Greater => ">",
            };
            print!("  [{cone}] {x} {sym} {y}    ");
        }
        println!();
    }

    // Convexity: b^m stays below the positive a-direction, however large m.
    println!();
    for cone in Cone::ALL {
        let top = KleinCoords::new(cone.epsilon.value(), 0);
        let below = (-1_000_000..=1_000_000).step_by(250_000).all(|m| {
            klein_compare(cone, KleinCoords::new(0, m), top) == Ordering::Less
        });
        println!("cone {cone}: b^m < a^({}) for sampled |m| <= 10^6: {below}", cone.epsilon);
        assert!(cone_contains(cone, top));
    }
}
