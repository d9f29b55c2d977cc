//! The reduced-word rewriting engine.
//!
//! A syllable word is *reduced* when no two syllables share a generator with
//! every syllable between them lying in that generator's star. Every group
//! element is represented by a reduced word, and a reduced word represents
//! the identity exactly when it is empty — that theorem is what turns the
//! merging loop below into a decision procedure for the word problem.
//!
//! Adjacent syllables exchange by the rules the edge relators dictate. For a
//! plain edge `[u,v]` the syllables commute. For an oriented edge `[u,v>`
//! the target dominates the origin (`v u v^-1 = u^-1`), giving
//! `v^m u^n = u^((-1)^m n) v^m` and `u^m v^n = v^n u^((-1)^n m)`: whenever a
//! dominated syllable crosses an odd power of its dominator, its exponent
//! flips sign.

use std::fmt;

use thiserror::Error;

use crate::graph::{MixedGraph, PairRel, VertexId};
use crate::word::{Syllable, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("unknown vertex `{name}`")]
    UnknownVertex { name: String },
    #[error("syllable exponent overflowed 64-bit range")]
    ExponentOverflow,
    #[error("generator `{offending}` lies outside the star of `{vertex}`")]
    NotInStar { vertex: String, offending: String },
    #[error("`{vertex}` is not a source: it is the target of [{origin},{vertex}>")]
    NotASource { vertex: String, origin: String },
}

/// Indexed syllables: (vertex index, exponent).
type Syllables = Vec<(usize, i64)>;

fn compile(g: &MixedGraph, w: &Word) -> Result<Syllables, RewriteError> {
    w.syllables()
        .iter()
        .map(|s| {
            let idx = g
                .vertex_index(s.generator().as_str())
                .map_err(|_| RewriteError::UnknownVertex { name: s.generator().as_str().to_owned() })?;
            Ok((idx, s.exponent()))
        })
        .collect()
}

fn decompile(g: &MixedGraph, syllables: &[(usize, i64)]) -> Word {
    Word::from_syllables(
        syllables
            .iter()
            .map(|&(v, e)| Syllable::new(g.vertex_at(v).clone(), e).expect("nonzero exponent"))
            .collect(),
    )
}

fn flip(e: i64) -> Result<i64, RewriteError> {
    e.checked_neg().ok_or(RewriteError::ExponentOverflow)
}

/// Swaps the adjacent syllables `w[k-1], w[k]`, applying the exchange rule
/// for the edge joining their generators.
fn exchange(g: &MixedGraph, w: &mut Syllables, k: usize) -> Result<(), RewriteError> {
    let (x, e) = w[k - 1];
    let (y, f) = w[k];
    let (new_left, new_right) = match g.rel_idx(x, y) {
        PairRel::Plain => ((y, f), (x, e)),
        // x dominates y: y's exponent flips when it crosses an odd power of x.
        PairRel::Dominates => ((y, if e & 1 != 0 { flip(f)? } else { f }), (x, e)),
        // y dominates x: x's exponent flips when an odd power of y crosses it.
        PairRel::DominatedBy => ((y, f), (x, if f & 1 != 0 { flip(e)? } else { e })),
        PairRel::None => unreachable!("exchange requires adjacent generators"),
    };
    w[k - 1] = new_left;
    w[k] = new_right;
    Ok(())
}

/// Finds the leftmost pair `(i, j)` of equal-generator syllables with every
/// syllable strictly between them in the star of that generator.
fn find_mergeable_pair(g: &MixedGraph, w: &[(usize, i64)]) -> Option<(usize, usize)> {
    for i in 0..w.len() {
        let vi = w[i].0;
        for (j, &(vj, _)) in w.iter().enumerate().skip(i + 1) {
            if vj == vi {
                return Some((i, j));
            }
            if !g.adjacent_idx(vi, vj) {
                // The in-between set has escaped st(v_i) for good.
                break;
            }
        }
    }
    None
}

fn reduce_in_place(g: &MixedGraph, w: &mut Syllables) -> Result<(), RewriteError> {
    while let Some((i, j)) = find_mergeable_pair(g, w) {
        // Shuffle syllable j leftwards until it sits next to syllable i.
        for k in (i + 2..=j).rev() {
            exchange(g, w, k)?;
        }
        let merged = w[i]
            .1
            .checked_add(w[i + 1].1)
            .ok_or(RewriteError::ExponentOverflow)?;
        if merged == 0 {
            w.drain(i..=i + 1);
        } else {
            w[i].1 = merged;
            w.remove(i + 1);
        }
    }
    Ok(())
}

/// Rewrites `w` into a reduced word representing the same group element.
///
/// Repeatedly finds the leftmost mergeable pair, shuffles the right syllable
/// leftwards with the exchange rules, and combines exponents (dropping the
/// syllable when they cancel). Each merge removes at least one syllable, so
/// the loop terminates.
pub fn reduce(g: &MixedGraph, w: &Word) -> Result<Word, RewriteError> {
    let mut syl = compile(g, w)?;
    reduce_in_place(g, &mut syl)?;
    Ok(decompile(g, &syl))
}

/// The word problem: `w` represents the identity iff its reduced form is
/// empty.
pub fn is_identity(g: &MixedGraph, w: &Word) -> Result<bool, RewriteError> {
    let mut syl = compile(g, w)?;
    reduce_in_place(g, &mut syl)?;
    Ok(syl.is_empty())
}

/// Element equality via `w1 w2^-1 = 1`.
///
/// Reduced forms are never compared directly; equality always goes through
/// the empty-word criterion.
pub fn eq(g: &MixedGraph, w1: &Word, w2: &Word) -> Result<bool, RewriteError> {
    is_identity(g, &w1.concat(&w2.inverse()))
}

/// Image of a word in the abelianization.
///
/// Plain relators abelianize to zero; the twisted relator `o t o t^-1` forces
/// `2·o = 0`, so the coordinate of every vertex that originates an oriented
/// edge lives in Z/2 and is stored as 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianImage {
    entries: Vec<(VertexId, i64)>,
}

impl AbelianImage {
    /// Coordinates in vertex declaration order, one per vertex.
    pub fn entries(&self) -> &[(VertexId, i64)] {
        &self.entries
    }

    pub fn coord(&self, name: &str) -> Option<i64> {
        self.entries
            .iter()
            .find(|(v, _)| v.as_str() == name)
            .map(|&(_, c)| c)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&(_, c)| c == 0)
    }
}

impl fmt::Display for AbelianImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, (v, c)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}:{c}")?;
        }
        f.write_str(")")
    }
}

/// Exponent-sum vector of `w`, with origin coordinates reduced mod 2.
pub fn abelianize(g: &MixedGraph, w: &Word) -> Result<AbelianImage, RewriteError> {
    let syl = compile(g, w)?;
    let mut sums = vec![0i64; g.vertex_count()];
    for (v, e) in syl {
        sums[v] = sums[v].checked_add(e).ok_or(RewriteError::ExponentOverflow)?;
    }
    let entries = g
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let c = if g.is_origin_idx(i) { sums[i].rem_euclid(2) } else { sums[i] };
            (v.clone(), c)
        })
        .collect();
    Ok(AbelianImage { entries })
}

/// Factors `w` over `st(v)` as `v^k · remainder` with the remainder free of
/// `v`, by shuffling every `v`-syllable to the front.
pub fn pull_generator_front(
    g: &MixedGraph,
    w: &Word,
    v: &str,
) -> Result<(i64, Word), RewriteError> {
    let vi = g
        .vertex_index(v)
        .map_err(|_| RewriteError::UnknownVertex { name: v.to_owned() })?;
    let syl = compile(g, w)?;
    for &(u, _) in &syl {
        if u != vi && !g.adjacent_idx(u, vi) {
            return Err(RewriteError::NotInStar {
                vertex: v.to_owned(),
                offending: g.vertex_at(u).as_str().to_owned(),
            });
        }
    }
    let mut front: i64 = 0;
    let mut rest: Syllables = Vec::with_capacity(syl.len());
    for (u, mut e) in syl {
        if u == vi {
            // Walk v^e left across the residue collected so far.
            for t in rest.iter_mut().rev() {
                match g.rel_idx(t.0, vi) {
                    PairRel::Plain => {}
                    // t dominates v: v's exponent flips per odd power of t.
                    PairRel::Dominates => {
                        if t.1 & 1 != 0 {
                            e = flip(e)?;
                        }
                    }
                    // v dominates t: t's exponent flips per odd power of v.
                    PairRel::DominatedBy => {
                        if e & 1 != 0 {
                            t.1 = flip(t.1)?;
                        }
                    }
                    PairRel::None => unreachable!("star precondition was checked"),
                }
            }
            front = front.checked_add(e).ok_or(RewriteError::ExponentOverflow)?;
        } else {
            rest.push((u, e));
        }
    }
    reduce_in_place(g, &mut rest)?;
    Ok((front, decompile(g, &rest)))
}

/// Probes `w^k` for `k = 2..=k_max`, returning the smallest power that
/// collapses to the identity.
///
/// Returns `None` straight away when `w` itself is the identity, and `None`
/// when the bound is exhausted. Powers are built by concatenating the
/// reduced base and re-reducing, keeping intermediate words short.
pub fn torsion_probe(g: &MixedGraph, w: &Word, k_max: u32) -> Result<Option<u32>, RewriteError> {
    let mut base = compile(g, w)?;
    reduce_in_place(g, &mut base)?;
    if base.is_empty() {
        return Ok(None);
    }
    let mut power = base.clone();
    for k in 2..=k_max {
        power.extend_from_slice(&base);
        reduce_in_place(g, &mut power)?;
        if power.is_empty() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Applies the retraction that kills the source `v` and fixes every other
/// generator: all `v`-syllables are deleted, nothing else changes.
///
/// The result is a word over `V - {v}`, to be interpreted in the full
/// subgraph on those vertices. Requires `v` to be a source — if some
/// oriented edge points at `v`, killing it is not a well-defined
/// homomorphism and `NotASource` is returned.
pub fn project_kill_source(g: &MixedGraph, v: &str, w: &Word) -> Result<Word, RewriteError> {
    let vi = g
        .vertex_index(v)
        .map_err(|_| RewriteError::UnknownVertex { name: v.to_owned() })?;
    if let Some(origin) = g.incoming_origin_idx(vi) {
        return Err(RewriteError::NotASource {
            vertex: v.to_owned(),
            origin: g.vertex_at(origin).as_str().to_owned(),
        });
    }
    let syl = compile(g, w)?;
    let kept: Syllables = syl.into_iter().filter(|&(u, _)| u != vi).collect();
    Ok(decompile(g, &kept))
}

/// A deterministic reduced representative of `w`'s element.
///
/// Starting from the reduced form, repeatedly moves to the front the
/// least-named generator whose leading syllable can be shuffled there, then
/// recurses on the rest. Equal elements are conjectured (and extensively
/// tested, not proven) to share this form; library code never relies on
/// that — equality always goes through [`eq`].
pub fn canonical_form(g: &MixedGraph, w: &Word) -> Result<Word, RewriteError> {
    let mut work = compile(g, w)?;
    reduce_in_place(g, &mut work)?;
    let mut out: Syllables = Vec::with_capacity(work.len());
    while !work.is_empty() {
        let mut best: Option<usize> = None;
        'candidates: for p in 0..work.len() {
            let v = work[p].0;
            for &(u, _) in &work[..p] {
                if !g.adjacent_idx(u, v) {
                    continue 'candidates;
                }
            }
            best = match best {
                None => Some(p),
                Some(b) if g.vertex_at(v).as_str() < g.vertex_at(work[b].0).as_str() => Some(p),
                keep => keep,
            };
        }
        let p = best.expect("position 0 is always shuffleable to the front");
        for k in (1..=p).rev() {
            exchange(g, &mut work, k)?;
        }
        out.push(work.remove(0));
    }
    Ok(decompile(g, &out))
}
