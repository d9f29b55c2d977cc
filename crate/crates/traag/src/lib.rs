//! Decision procedures for twisted right-angled Artin groups.
//!
//! A twisted right-angled Artin group is presented by a *mixed graph*:
//! vertices generate, a plain edge `[u,v]` makes its endpoints commute, and
//! an oriented edge `[u,v>` imposes the Klein-bottle relation
//! `v u v^-1 = u^-1`. This crate decides, directly from the graph,
//!
//! - **torsion-freeness** — no oriented cycle supported on a complete
//!   subgraph,
//! - **left-orderability** — no oriented cycle,
//! - **bi-orderability** — no oriented edge,
//!
//! and backs every verdict with a machine-checkable certificate: the
//! offending cycle or edge, an explicit torsion element with its order, a
//! contradiction chain of Klein-bottle convexity inequalities, or a
//! poly-free tower obtained by source elimination.
//!
//! The word problem is solved by rewriting to the reduced-word normal form
//! ([`rewrite::reduce`]); a word represents the identity exactly when its
//! reduced form is empty. Klein-bottle subgroups additionally get exact
//! coordinate arithmetic and the four positive-cone left-orders
//! ([`klein`]).
//!
//! Start with the runnable examples (`cargo run --example classify`) or the
//! `traag` binary (`traag analyze graph.tg`).

pub mod cli;
pub mod decide;
pub mod dsl;
pub mod graph;
pub mod klein;
pub mod report;
pub mod rewrite;
pub mod word;

pub use decide::{
    certify_not_left_orderable, check_retraction, classify, classify_with, revalidate_tower,
    torsion_witness, Certificate, ChainStep, Classification, DecideError, NonOrderabilityChain,
    RetractionReport, TorsionWitness, DEFAULT_TORSION_PROBE_BOUND,
};
pub use dsl::{format_graph, parse_graph, GraphParseError};
pub use graph::{
    build_graph, CertificateError, CliqueCycleCert, Decl, Edge, GraphBuilder, GraphError,
    MixedGraph, OrientedCycleCert, OrientedEdge, SourceElimination, VertexId,
};
pub use klein::{
    cone_contains, klein_compare, klein_coords, verify_cone_axioms, Cone, ConeAxiomReport,
    ConeViolation, KleinContext, KleinCoords, KleinError, Sign,
};
pub use report::{classification_json, render_chain, render_classification};
pub use rewrite::{
    abelianize, canonical_form, eq, is_identity, project_kill_source, pull_generator_front,
    reduce, torsion_probe, AbelianImage, RewriteError,
};
pub use word::{Syllable, Word, WordError, WordParseError};
