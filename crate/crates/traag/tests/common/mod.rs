//! Shared fixtures for the integration suites: the small graph corpus,
//! seeded random generators, and independent oracles (free reduction,
//! exponent vectors, subset brute force, a reducedness scanner) used to
//! cross-check the library. Oracles only read the public vertex/edge lists;
//! they never call the code paths they are checking.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use traag::{build_graph, Decl, Edge, MixedGraph, Word};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// The named graph corpus
// ---------------------------------------------------------------------------

fn decls(spec: &str) -> Vec<Decl> {
    spec.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| {
            let mut p = l.split_whitespace();
            match (p.next(), p.next(), p.next()) {
                (Some("vertex"), Some(v), None) => Decl::Vertex(v.into()),
                (Some("edge"), Some(u), Some(v)) => Decl::Edge(u.into(), v.into()),
                (Some("arrow"), Some(o), Some(t)) => Decl::Arrow { origin: o.into(), target: t.into() },
                _ => panic!("bad fixture line: {l}"),
            }
        })
        .collect()
}

pub fn graph(spec: &str) -> MixedGraph {
    build_graph(&decls(spec)).unwrap()
}

/// `<a, b | a b a^-1 = b^-1>`: one oriented edge.
pub fn klein() -> MixedGraph {
    graph("vertex a\nvertex b\narrow b a")
}

/// Oriented triangle: a clique-supported cycle, hence torsion.
pub fn triangle() -> MixedGraph {
    graph("vertex a\nvertex b\nvertex c\narrow a b\narrow b c\narrow c a")
}

/// Chordless oriented 4-cycle: a cycle but no clique-supported one.
pub fn cycle4() -> MixedGraph {
    graph(
        "vertex a\nvertex b\nvertex c\nvertex d\narrow a b\narrow b c\narrow c d\narrow d a",
    )
}

/// Plain path a - b - c: an ordinary right-angled Artin group.
pub fn path3() -> MixedGraph {
    graph("vertex a\nvertex b\nvertex c\nedge a b\nedge b c")
}

/// Oriented path a -> b -> c.
pub fn chain3() -> MixedGraph {
    graph("vertex a\nvertex b\nvertex c\narrow a b\narrow b c")
}

pub fn edgeless(n: usize) -> MixedGraph {
    let d: Vec<Decl> = (0..n).map(|i| Decl::Vertex(format!("v{i}"))).collect();
    build_graph(&d).unwrap()
}

pub fn complete_plain(n: usize) -> MixedGraph {
    let mut d: Vec<Decl> = (0..n).map(|i| Decl::Vertex(format!("v{i}"))).collect();
    for i in 0..n {
        for j in i + 1..n {
            d.push(Decl::Edge(format!("v{i}"), format!("v{j}")));
        }
    }
    build_graph(&d).unwrap()
}

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

/// A random mixed graph with 1..=max_vertices vertices and random edge
/// kinds per pair (roughly: 45% none, 20% plain, 35% oriented).
pub fn random_graph(rng: &mut ChaCha8Rng, max_vertices: usize) -> MixedGraph {
    let n = rng.random_range(1..=max_vertices);
    let mut d: Vec<Decl> = (0..n).map(|i| Decl::Vertex(format!("v{i}"))).collect();
    for i in 0..n {
        for j in i + 1..n {
            let (u, v) = (format!("v{i}"), format!("v{j}"));
            match rng.random_range(0..100) {
                0..=44 => {}
                45..=64 => d.push(Decl::Edge(u, v)),
                65..=81 => d.push(Decl::Arrow { origin: u, target: v }),
                _ => d.push(Decl::Arrow { origin: v, target: u }),
            }
        }
    }
    build_graph(&d).unwrap()
}

fn nonzero_exponent(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let e = rng.random_range(-bound..=bound);
        if e != 0 {
            return e;
        }
    }
}

/// A random raw word of up to `max_len` syllables over the given names,
/// with exponents in `[-3, 3] \ {0}`.
pub fn random_word_over(rng: &mut ChaCha8Rng, names: &[&str], max_len: usize) -> Word {
    let len = rng.random_range(0..=max_len);
    let pairs: Vec<(&str, i64)> = (0..len)
        .map(|_| (names[rng.random_range(0..names.len())], nonzero_exponent(rng, 3)))
        .collect();
    Word::from_pairs(pairs).unwrap()
}

pub fn random_word(rng: &mut ChaCha8Rng, g: &MixedGraph, max_len: usize) -> Word {
    let names: Vec<&str> = g.vertices().iter().map(|v| v.as_str()).collect();
    random_word_over(rng, &names, max_len)
}

/// Applies `ops` element-preserving edits to `base`: inserting cancelling
/// pairs, inserting relators or their inverses, and splitting syllables.
/// The result represents the same group element as `base`.
pub fn equivalent_scramble(
    rng: &mut ChaCha8Rng,
    g: &MixedGraph,
    base: &Word,
    ops: usize,
) -> Word {
    let mut pairs: Vec<(String, i64)> = base
        .syllables()
        .iter()
        .map(|s| (s.generator().as_str().to_owned(), s.exponent()))
        .collect();
    let relators = g.relators();
    for _ in 0..ops {
        match rng.random_range(0..4) {
            0 => {
                let v = g.vertices()[rng.random_range(0..g.vertices().len())].as_str().to_owned();
                let e = nonzero_exponent(rng, 2);
                let at = rng.random_range(0..=pairs.len());
                pairs.splice(at..at, [(v.clone(), e), (v, -e)]);
            }
            1 | 2 if !relators.is_empty() => {
                let r = &relators[rng.random_range(0..relators.len())];
                let r = if rng.random_bool(0.5) { r.clone() } else { r.inverse() };
                let at = rng.random_range(0..=pairs.len());
                let ins: Vec<(String, i64)> = r
                    .syllables()
                    .iter()
                    .map(|s| (s.generator().as_str().to_owned(), s.exponent()))
                    .collect();
                pairs.splice(at..at, ins);
            }
            _ => {
                if pairs.is_empty() {
                    continue;
                }
                let at = rng.random_range(0..pairs.len());
                let (v, e) = pairs[at].clone();
                if e.abs() < 2 {
                    continue;
                }
                let d = e.signum();
                pairs[at] = (v.clone(), e - d);
                pairs.insert(at + 1, (v, d));
            }
        }
    }
    Word::from_pairs(pairs.iter().map(|(v, e)| (v.as_str(), *e))).unwrap()
}

/// A random word representing the identity, built by scrambling the empty
/// word.
pub fn random_identity_word(rng: &mut ChaCha8Rng, g: &MixedGraph, ops: usize) -> Word {
    equivalent_scramble(rng, g, &Word::empty(), ops)
}

// ---------------------------------------------------------------------------
// Independent oracles
// ---------------------------------------------------------------------------

/// Stack-based free reduction of a syllable word: merges adjacent equal
/// generators and drops cancelled syllables. Exact for edgeless graphs.
pub fn free_reduce_oracle(w: &Word) -> Vec<(String, i64)> {
    let mut stack: Vec<(String, i64)> = Vec::new();
    for syl in w.syllables() {
        let name = syl.generator().as_str();
        if let Some(top) = stack.last_mut() {
            if top.0 == name {
                top.1 += syl.exponent();
                if top.1 == 0 {
                    stack.pop();
                }
                continue;
            }
        }
        stack.push((name.to_owned(), syl.exponent()));
    }
    stack
}

/// Plain exponent-sum vector. Decides equality in free abelian groups.
pub fn exponent_vector(w: &Word) -> BTreeMap<String, i64> {
    let mut out = BTreeMap::new();
    for syl in w.syllables() {
        let entry = out.entry(syl.generator().as_str().to_owned()).or_insert(0i64);
        *entry += syl.exponent();
        if *entry == 0 {
            out.remove(syl.generator().as_str());
        }
    }
    out
}

/// Adjacency and arrow lists rebuilt from the public edge list alone.
pub struct RawGraph {
    pub n: usize,
    pub adjacent: Vec<Vec<bool>>,
    /// (origin, target) index pairs.
    pub arrows: Vec<(usize, usize)>,
}

pub fn raw_graph(g: &MixedGraph) -> RawGraph {
    let n = g.vertices().len();
    let idx = |name: &str| g.vertices().iter().position(|v| v.as_str() == name).unwrap();
    let mut adjacent = vec![vec![false; n]; n];
    let mut arrows = Vec::new();
    for e in g.edges() {
        let (u, v) = e.endpoints();
        let (ui, vi) = (idx(u.as_str()), idx(v.as_str()));
        adjacent[ui][vi] = true;
        adjacent[vi][ui] = true;
        if let Edge::Oriented(oe) = e {
            arrows.push((idx(oe.origin.as_str()), idx(oe.target.as_str())));
        }
    }
    RawGraph { n, adjacent, arrows }
}

/// Cycle detection by repeated source removal (Kahn): if peeling vertices
/// with no surviving incoming arrow gets stuck, a directed cycle remains.
pub fn has_directed_cycle_in(raw: &RawGraph, mask: &[bool]) -> bool {
    let mut alive: Vec<bool> = mask.to_vec();
    loop {
        let next = (0..raw.n).find(|&v| {
            alive[v] && raw.arrows.iter().all(|&(o, t)| t != v || !alive[o])
        });
        match next {
            Some(v) => alive[v] = false,
            None => return alive.iter().any(|&a| a),
        }
    }
}

pub fn oriented_cycle_exists_bruteforce(g: &MixedGraph) -> bool {
    let raw = raw_graph(g);
    has_directed_cycle_in(&raw, &vec![true; raw.n])
}

/// Exhaustive subset check: some pairwise-adjacent vertex set carries a
/// directed cycle.
pub fn clique_cycle_exists_bruteforce(g: &MixedGraph) -> bool {
    let raw = raw_graph(g);
    for mask_bits in 1u32..(1 << raw.n) {
        let mask: Vec<bool> = (0..raw.n).map(|v| mask_bits & (1 << v) != 0).collect();
        let members: Vec<usize> = (0..raw.n).filter(|&v| mask[v]).collect();
        let is_clique = members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| raw.adjacent[u][v]));
        if is_clique && has_directed_cycle_in(&raw, &mask) {
            return true;
        }
    }
    false
}

/// All maximal cliques by subset enumeration (exponential; small graphs
/// only). Names are returned sorted by declaration order per clique, and
/// the clique list is sorted for comparison.
pub fn maximal_cliques_bruteforce(g: &MixedGraph) -> Vec<Vec<String>> {
    let raw = raw_graph(g);
    let clique_masks: Vec<u32> = (1u32..(1 << raw.n))
        .filter(|&bits| {
            let members: Vec<usize> = (0..raw.n).filter(|&v| bits & (1 << v) != 0).collect();
            members
                .iter()
                .enumerate()
                .all(|(i, &u)| members[i + 1..].iter().all(|&v| raw.adjacent[u][v]))
        })
        .collect();
    let mut out: Vec<Vec<String>> = clique_masks
        .iter()
        .filter(|&&bits| !clique_masks.iter().any(|&other| other != bits && other & bits == bits))
        .map(|&bits| {
            (0..raw.n)
                .filter(|&v| bits & (1 << v) != 0)
                .map(|v| g.vertices()[v].as_str().to_owned())
                .collect()
        })
        .collect();
    out.sort();
    out
}

/// The reduced-word predicate, checked directly from the definition: no two
/// equal-generator syllables with every generator strictly between them
/// adjacent to (or equal to) that generator.
pub fn is_reduced_scanner(g: &MixedGraph, w: &Word) -> bool {
    let raw = raw_graph(g);
    let idx = |name: &str| g.vertices().iter().position(|v| v.as_str() == name).unwrap();
    let syl: Vec<(usize, i64)> = w
        .syllables()
        .iter()
        .map(|s| (idx(s.generator().as_str()), s.exponent()))
        .collect();
    if syl.iter().any(|&(_, e)| e == 0) {
        return false;
    }
    for i in 0..syl.len() {
        for j in i + 1..syl.len() {
            if syl[j].0 != syl[i].0 {
                continue;
            }
            let in_star = (i + 1..j).all(|k| {
                let u = syl[k].0;
                u == syl[i].0 || raw.adjacent[syl[i].0][u]
            });
            if in_star {
                return false;
            }
        }
    }
    true
}
