//! The graph-level classification: torsion-freeness, left-orderability and
//! bi-orderability of the group, each decided by a graph predicate and each
//! verdict backed by a checkable certificate.
//!
//! - torsion-free  iff  no oriented cycle is supported on a complete subgraph
//! - left-orderableiff  no oriented cycle at all
//! - bi-orderable  iff  no oriented edge at all
//!
//! A negative orderability verdict is certified by a contradiction chain: in
//! every left-order, each oriented edge `[x,y>` forces
//! `max(x, x^-1) < max(y, y^-1)` (the Klein-bottle convexity inequality), so
//! following a cycle yields `max(x, x^-1) < max(x, x^-1)`. A positive
//! left-orderability verdict is certified by a poly-free tower: an ordering
//! peeling off a source at every stage.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{
    CertificateError, CliqueCycleCert, MixedGraph, OrientedCycleCert, OrientedEdge,
    SourceElimination, VertexId,
};
use crate::rewrite::{eq, is_identity, project_kill_source, reduce, torsion_probe};
use crate::word::Word;

/// Probe bound used by [`classify`] when hunting for explicit torsion
/// witnesses.
pub const DEFAULT_TORSION_PROBE_BOUND: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecideError {
    #[error("the graph contains no oriented cycle")]
    NoOrientedCycle,
}

/// An explicit torsion element, or the admission that bounded probing did
/// not find one.
///
/// The classification verdict itself always comes from the graph criterion;
/// the witness is extra, checkable evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum TorsionWitness {
    Found { word: Word, order: u32 },
    ProbeExhausted { word: Word, k_max: u32 },
}

/// One link of the non-orderability contradiction chain, recording the
/// oriented edge `[origin, target>` and the relation it imposes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub index: usize,
    pub origin: VertexId,
    pub target: VertexId,
    pub relation: String,
}

/// The full contradiction chain around an oriented cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonOrderabilityChain {
    pub steps: Vec<ChainStep>,
}

impl NonOrderabilityChain {
    pub fn revalidate(&self, g: &MixedGraph) -> Result<(), CertificateError> {
        if self.steps.is_empty() {
            return Err(CertificateError::EmptyCertificate);
        }
        for (i, step) in self.steps.iter().enumerate() {
            if !g.has_arrow(step.origin.as_str(), step.target.as_str()) {
                return Err(CertificateError::EdgeNotInGraph {
                    origin: step.origin.clone(),
                    target: step.target.clone(),
                });
            }
            if step.relation != relation_text(&step.origin, &step.target) {
                return Err(CertificateError::BadChainStep { at: i });
            }
            let next = &self.steps[(i + 1) % self.steps.len()];
            if step.target != next.origin {
                return Err(CertificateError::BrokenChain { at: i });
            }
        }
        Ok(())
    }
}

fn relation_text(origin: &VertexId, target: &VertexId) -> String {
    format!("{target} {origin} {target}^-1 = {origin}^-1")
}

/// Evidence attached to a classification verdict. Every variant can be
/// revalidated against the graph it was issued for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    /// Torsion: an oriented cycle supported on a complete subgraph, with the
    /// outcome of probing its cycle word for a finite order.
    CliqueCycle {
        #[serde(flatten)]
        cert: CliqueCycleCert,
        witness: TorsionWitness,
    },
    /// Non-left-orderability: an oriented cycle.
    OrientedCycle(OrientedCycleCert),
    /// Non-left-orderability, spelled out: the chained convexity
    /// inequalities closing into a contradiction.
    NonOrderabilityChain(NonOrderabilityChain),
    /// Left-orderability: a source-elimination ordering of the vertices.
    PolyFreeTower { vertices: Vec<VertexId> },
    /// Non-bi-orderability: a single oriented edge.
    OrientedEdge(OrientedEdge),
}

impl Certificate {
    /// Checks the certificate against `g`: edges exist, chains connect,
    /// tower vertices are sources of their residual graphs, and torsion
    /// witnesses have the order they claim.
    pub fn revalidate(&self, g: &MixedGraph) -> Result<(), CertificateError> {
        match self {
            Certificate::CliqueCycle { cert, witness } => {
                cert.revalidate(g)?;
                if let TorsionWitness::Found { word, order } = witness {
                    let ok = *order >= 2
                        && !is_identity(g, word).unwrap_or(true)
                        && torsion_probe(g, word, *order).ok().flatten() == Some(*order);
                    if !ok {
                        return Err(CertificateError::BadChainStep { at: 0 });
                    }
                }
                Ok(())
            }
            Certificate::OrientedCycle(cert) => cert.revalidate(g),
            Certificate::NonOrderabilityChain(chain) => chain.revalidate(g),
            Certificate::PolyFreeTower { vertices } => revalidate_tower(g, vertices),
            Certificate::OrientedEdge(e) => {
                if g.has_arrow(e.origin.as_str(), e.target.as_str()) {
                    Ok(())
                } else {
                    Err(CertificateError::EdgeNotInGraph {
                        origin: e.origin.clone(),
                        target: e.target.clone(),
                    })
                }
            }
        }
    }
}

/// Checks that `vertices` lists every vertex exactly once and that each one
/// is a source of the graph induced on it and its successors.
pub fn revalidate_tower(g: &MixedGraph, vertices: &[VertexId]) -> Result<(), CertificateError> {
    let mut sorted: Vec<&str> = vertices.iter().map(VertexId::as_str).collect();
    sorted.sort_unstable();
    sorted.dedup();
    let mut expected: Vec<&str> = g.vertices().iter().map(VertexId::as_str).collect();
    expected.sort_unstable();
    if sorted != expected {
        return Err(CertificateError::TowerNotPermutation);
    }
    for (i, v) in vertices.iter().enumerate() {
        let residual = &vertices[i..];
        for e in g.oriented_edges() {
            if &e.target == v && residual.contains(&e.origin) {
                return Err(CertificateError::TowerVertexNotSource { vertex: v.clone() });
            }
        }
    }
    Ok(())
}

/// The decision for one graph: three booleans plus the certificates backing
/// them.
///
/// The implications bi-orderable => left-orderable => torsion-free hold by
/// construction: no oriented edge means no oriented cycle means no supported
/// cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub torsion_free: bool,
    pub left_orderable: bool,
    pub bi_orderable: bool,
    pub certificates: Vec<Certificate>,
}

/// Classifies `g` with the default torsion probe bound.
pub fn classify(g: &MixedGraph) -> Classification {
    classify_with(g, DEFAULT_TORSION_PROBE_BOUND)
}

/// Classifies `g`, probing torsion witnesses up to `torsion_k_max`.
///
/// Certificates are always attached eagerly so reports are self-contained:
/// a supported cycle with its torsion probe for torsion, cycle plus
/// contradiction chain for non-left-orderability, a tower for
/// left-orderability, and an oriented edge for non-bi-orderability.
pub fn classify_with(g: &MixedGraph, torsion_k_max: u32) -> Classification {
    let clique_cycle = g.find_clique_supported_cycle();
    let oriented_cycle = g.find_oriented_cycle();
    let oriented_edge = g.first_oriented_edge().cloned();

    let torsion_free = clique_cycle.is_none();
    let left_orderable = oriented_cycle.is_none();
    let bi_orderable = oriented_edge.is_none();

    let mut certificates = Vec::new();
    if let Some(cert) = clique_cycle {
        let witness = probe_cycle_word(g, &cert.cycle, torsion_k_max);
        certificates.push(Certificate::CliqueCycle { cert, witness });
    }
    match oriented_cycle {
        Some(cycle) => {
            certificates.push(Certificate::NonOrderabilityChain(chain_from_cycle(&cycle)));
            certificates.push(Certificate::OrientedCycle(cycle));
        }
        None => match g.source_elimination_order() {
            SourceElimination::Tower(vertices) => {
                certificates.push(Certificate::PolyFreeTower { vertices });
            }
            SourceElimination::Cycle(_) => {
                unreachable!("cycle-free graphs always admit a full tower")
            }
        },
    }
    if let Some(e) = oriented_edge {
        certificates.push(Certificate::OrientedEdge(e));
    }

    Classification { torsion_free, left_orderable, bi_orderable, certificates }
}

fn cycle_word(cycle: &OrientedCycleCert) -> Word {
    Word::from_pairs(cycle.vertices().iter().map(|v| (v.as_str(), 1i64)))
        .expect("cycle vertices are valid identifiers")
}

fn probe_cycle_word(g: &MixedGraph, cycle: &OrientedCycleCert, k_max: u32) -> TorsionWitness {
    let word = cycle_word(cycle);
    // The cycle word uses pairwise distinct generators, so it is already
    // reduced and nonempty, hence not the identity.
    debug_assert!(!reduce(g, &word).expect("cycle word is well formed").is_empty());
    match torsion_probe(g, &word, k_max).expect("cycle word powers stay in range") {
        Some(order) => TorsionWitness::Found { word, order },
        None => TorsionWitness::ProbeExhausted { word, k_max },
    }
}

fn chain_from_cycle(cycle: &OrientedCycleCert) -> NonOrderabilityChain {
    let steps = cycle
        .edges
        .iter()
        .enumerate()
        .map(|(index, e)| ChainStep {
            index,
            origin: e.origin.clone(),
            target: e.target.clone(),
            relation: relation_text(&e.origin, &e.target),
        })
        .collect();
    NonOrderabilityChain { steps }
}

/// Builds the contradiction chain certifying that the group admits no
/// left-order. Requires an oriented cycle.
pub fn certify_not_left_orderable(g: &MixedGraph) -> Result<NonOrderabilityChain, DecideError> {
    match g.find_oriented_cycle() {
        Some(cycle) => Ok(chain_from_cycle(&cycle)),
        None => Err(DecideError::NoOrientedCycle),
    }
}

/// Probes for an explicit torsion element when the graph criterion says one
/// exists.
///
/// Returns `None` when the graph is torsion-free by the criterion; otherwise
/// the probed cycle word, either with its verified order or flagged as
/// exhausted at `k_max`.
pub fn torsion_witness(g: &MixedGraph, k_max: u32) -> Option<TorsionWitness> {
    g.find_clique_supported_cycle()
        .map(|cert| probe_cycle_word(g, &cert.cycle, k_max))
}

/// Outcome of checking that killing `v` really is a retraction onto the
/// subgroup generated by the remaining vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RetractionReport {
    Pass { relators_checked: usize, words_checked: usize },
    RelatorNotKilled { relator: Word, image: Word },
    NotASource { vertex: VertexId, origin: VertexId },
}

impl RetractionReport {
    pub fn passed(&self) -> bool {
        matches!(self, RetractionReport::Pass { .. })
    }
}

impl fmt::Display for RetractionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RetractionReport::Pass { relators_checked, words_checked } => write!(
                f,
                "pass: {relators_checked} relators killed, {words_checked} words fixed"
            ),
            RetractionReport::RelatorNotKilled { relator, image } => {
                write!(f, "fail: relator {relator} maps to {image}, not the identity")
            }
            RetractionReport::NotASource { vertex, origin } => {
                write!(f, "not a source: [{origin},{vertex}> points at {vertex}")
            }
        }
    }
}

/// Constructively checks the source retraction at `v`.
///
/// When `v` is a source: (a) every relator of the graph, with `v` deleted,
/// reduces to the identity in the subgraph on the remaining vertices, and
/// (b) the retraction fixes a deterministic sample of words that avoid `v`.
/// When `v` is not a source the report says so instead.
pub fn check_retraction(
    g: &MixedGraph,
    v: &str,
) -> Result<RetractionReport, crate::graph::GraphError> {
    let vi = g.vertex_index(v)?;
    if let Some(origin) = g.incoming_origin_idx(vi) {
        return Ok(RetractionReport::NotASource {
            vertex: g.vertex_at(vi).clone(),
            origin: g.vertex_at(origin).clone(),
        });
    }
    let rest: Vec<&str> = g
        .vertices()
        .iter()
        .map(VertexId::as_str)
        .filter(|&u| u != v)
        .collect();
    if rest.is_empty() {
        // Killing the only generator retracts onto the trivial group.
        return Ok(RetractionReport::Pass { relators_checked: g.relators().len(), words_checked: 0 });
    }
    let sub = g.full_subgraph(rest.iter().copied())?;

    let relators = g.relators();
    for relator in &relators {
        let image = project_kill_source(g, v, relator).expect("v is a source");
        if !is_identity(&sub, &image).expect("image avoids v") {
            return Ok(RetractionReport::RelatorNotKilled { relator: relator.clone(), image });
        }
    }

    // Sample of v-free words: generators, their inverses, ordered products
    // of two generators, and the subgraph's own relators.
    let mut samples: Vec<Word> = Vec::new();
    for &u in &rest {
        samples.push(Word::from_pairs([(u, 1)]).expect("valid name"));
        samples.push(Word::from_pairs([(u, -1)]).expect("valid name"));
    }
    for &u in rest.iter().take(8) {
        for &t in rest.iter().take(8) {
            if u != t {
                samples.push(Word::from_pairs([(u, 1), (t, -1)]).expect("valid names"));
            }
        }
    }
    samples.extend(sub.relators());
    let words_checked = samples.len();
    for sample in samples {
        let image = project_kill_source(g, v, &sample).expect("v is a source");
        if image != sample || !eq(&sub, &image, &sample).expect("sample avoids v") {
            return Ok(RetractionReport::RelatorNotKilled { relator: sample, image });
        }
    }
    Ok(RetractionReport::Pass { relators_checked: relators.len(), words_checked })
}
