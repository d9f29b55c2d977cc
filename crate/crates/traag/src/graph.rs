//! Mixed graphs: simplicial graphs in which a subset of the edges carries an
//! orientation.
//!
//! A mixed graph is the defining datum of a twisted right-angled Artin group:
//! vertices are generators, a plain edge `[u,v]` imposes the commutator
//! relator `u v u^-1 v^-1`, and an oriented edge `[u,v>` (origin `u`, target
//! `v`) imposes the twisted relator `u v u v^-1`, equivalently
//! `v u v^-1 = u^-1` (the target conjugates the origin to its inverse).
//!
//! All graph-level predicates needed by the orderability classification live
//! here: oriented-cycle search, clique-supported-cycle search via maximal
//! cliques, and the greedy source-elimination order underpinning poly-free
//! towers.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::word::{Syllable, Word};

/// Errors raised while building or querying a [`MixedGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("bad identifier `{name}`: vertex names match [A-Za-z_][A-Za-z0-9_]*")]
    BadIdentifier { name: String },
    #[error("duplicate vertex `{name}`")]
    DuplicateVertex { name: String },
    #[error("unknown vertex `{name}`")]
    UnknownVertex { name: String },
    #[error("self-loop at `{name}`: edges join distinct vertices")]
    SelfLoop { name: String },
    #[error("duplicate edge between `{u}` and `{v}`")]
    DuplicateEdge { u: String, v: String },
    #[error("empty graph: at least one vertex is required")]
    EmptyGraph,
}

/// A validated vertex name.
///
/// Names are ASCII identifiers (`[A-Za-z_][A-Za-z0-9_]*`) and unique within a
/// graph. Vertices keep their declaration order everywhere, so every search
/// result below is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(name: impl Into<String>) -> Result<Self, GraphError> {
        let name = name.into();
        if is_identifier(&name) {
            Ok(VertexId(name))
        } else {
            Err(GraphError::BadIdentifier { name })
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for VertexId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// An oriented edge `[origin, target>`.
///
/// The relator it imposes is `origin target origin target^-1`, i.e. the
/// target conjugates the origin to its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientedEdge {
    pub origin: VertexId,
    pub target: VertexId,
}

impl fmt::Display for OrientedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}>", self.origin, self.target)
    }
}

/// An edge of a mixed graph: plain (commuting) or oriented (twisted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Edge {
    /// `[u,v]`, stored in declaration order.
    Plain(VertexId, VertexId),
    /// `[origin, target>`.
    Oriented(OrientedEdge),
}

impl Edge {
    pub fn endpoints(&self) -> (&VertexId, &VertexId) {
        match self {
            Edge::Plain(u, v) => (u, v),
            Edge::Oriented(e) => (&e.origin, &e.target),
        }
    }

    pub fn is_oriented(&self) -> bool {
        matches!(self, Edge::Oriented(_))
    }

    pub fn as_oriented(&self) -> Option<&OrientedEdge> {
        match self {
            Edge::Plain(..) => None,
            Edge::Oriented(e) => Some(e),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Edge::Plain(u, v) => write!(f, "[{u},{v}]"),
            Edge::Oriented(e) => e.fmt(f),
        }
    }
}

/// A single graph declaration, mirroring one line of the text format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decl {
    Vertex(String),
    Edge(String, String),
    Arrow { origin: String, target: String },
}

/// How one vertex relates to another, from the row vertex's point of view.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum PairRel {
    None,
    Plain,
    /// Row vertex is the target of an oriented edge from the column vertex.
    Dominates,
    /// Row vertex is the origin of an oriented edge to the column vertex.
    DominatedBy,
}

/// A finite mixed graph, immutable after construction.
///
/// At most one edge joins any vertex pair, self-loops are rejected, and the
/// vertex set is non-empty. Adjacency queries and deterministic iteration
/// orders are precomputed, so all operations are pure reads and the value is
/// safe to share across threads.
#[derive(Debug, Clone)]
pub struct MixedGraph {
    vertices: Vec<VertexId>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
    /// Dense |V| x |V| relation matrix, row-major.
    rel: Vec<PairRel>,
    /// Undirected neighbours per vertex, ascending by declaration index.
    und_adj: Vec<Vec<usize>>,
    /// Targets of oriented edges out of each vertex, in edge order.
    out_adj: Vec<Vec<usize>>,
    /// Origins of oriented edges into each vertex, in edge order.
    in_adj: Vec<Vec<usize>>,
}

impl PartialEq for MixedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for MixedGraph {}

/// Incremental constructor enforcing the [`MixedGraph`] invariants.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    vertices: Vec<VertexId>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
    pairs: HashMap<(usize, usize), ()>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, name: &str) -> Result<(), GraphError> {
        let id = VertexId::new(name)?;
        if self.index.contains_key(name) {
            return Err(GraphError::DuplicateVertex { name: name.to_owned() });
        }
        self.index.insert(name.to_owned(), self.vertices.len());
        self.vertices.push(id);
        Ok(())
    }

    fn lookup(&self, name: &str) -> Result<usize, GraphError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex { name: name.to_owned() })
    }

    fn claim_pair(&mut self, u: &str, v: &str) -> Result<(usize, usize), GraphError> {
        let ui = self.lookup(u)?;
        let vi = self.lookup(v)?;
        if ui == vi {
            return Err(GraphError::SelfLoop { name: u.to_owned() });
        }
        let key = (ui.min(vi), ui.max(vi));
        if self.pairs.contains_key(&key) {
            return Err(GraphError::DuplicateEdge { u: u.to_owned(), v: v.to_owned() });
        }
        self.pairs.insert(key, ());
        Ok((ui, vi))
    }

    pub fn plain_edge(&mut self, u: &str, v: &str) -> Result<(), GraphError> {
        let (ui, vi) = self.claim_pair(u, v)?;
        let edge = Edge::Plain(self.vertices[ui].clone(), self.vertices[vi].clone());
        self.edges.push(edge);
        Ok(())
    }

    pub fn arrow(&mut self, origin: &str, target: &str) -> Result<(), GraphError> {
        let (oi, ti) = self.claim_pair(origin, target)?;
        let edge = Edge::Oriented(OrientedEdge {
            origin: self.vertices[oi].clone(),
            target: self.vertices[ti].clone(),
        });
        self.edges.push(edge);
        Ok(())
    }

    pub fn apply(&mut self, decl: &Decl) -> Result<(), GraphError> {
        match decl {
            Decl::Vertex(name) => self.vertex(name),
            Decl::Edge(u, v) => self.plain_edge(u, v),
            Decl::Arrow { origin, target } => self.arrow(origin, target),
        }
    }

    pub fn finish(self) -> Result<MixedGraph, GraphError> {
        if self.vertices.is_empty() {
            return Err(GraphError::EmptyGraph);
        }
        let n = self.vertices.len();
        let mut rel = vec![PairRel::None; n * n];
        let mut und_adj = vec![Vec::new(); n];
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for edge in &self.edges {
            let (u, v) = edge.endpoints();
            let ui = self.index[u.as_str()];
            let vi = self.index[v.as_str()];
            match edge {
                Edge::Plain(..) => {
                    rel[ui * n + vi] = PairRel::Plain;
                    rel[vi * n + ui] = PairRel::Plain;
                }
                Edge::Oriented(_) => {
                    // ui is the origin, vi the target.
                    rel[ui * n + vi] = PairRel::DominatedBy;
                    rel[vi * n + ui] = PairRel::Dominates;
                    out_adj[ui].push(vi);
                    in_adj[vi].push(ui);
                }
            }
            und_adj[ui].push(vi);
            und_adj[vi].push(ui);
        }
        for adj in &mut und_adj {
            adj.sort_unstable();
        }
        Ok(MixedGraph {
            vertices: self.vertices,
            index: self.index,
            edges: self.edges,
            rel,
            und_adj,
            out_adj,
            in_adj,
        })
    }
}

/// Builds a validated graph from a declaration list.
pub fn build_graph(decls: &[Decl]) -> Result<MixedGraph, GraphError> {
    let mut b = GraphBuilder::new();
    for decl in decls {
        b.apply(decl)?;
    }
    b.finish()
}

/// Witness that the oriented edges contain a directed cycle.
///
/// Edges chain head to tail: `target(e_i) = origin(e_{i+1})`, cyclically, and
/// the visited vertices are pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientedCycleCert {
    pub edges: Vec<OrientedEdge>,
}

impl OrientedCycleCert {
    /// The cycle's vertices, one per edge, in traversal order (each edge's
    /// origin).
    pub fn vertices(&self) -> Vec<VertexId> {
        self.edges.iter().map(|e| e.origin.clone()).collect()
    }

    /// Checks the certificate against `g`: every edge is an oriented edge of
    /// the graph, consecutive edges chain cyclically, and the support is a
    /// set of distinct vertices.
    pub fn revalidate(&self, g: &MixedGraph) -> Result<(), CertificateError> {
        if self.edges.is_empty() {
            return Err(CertificateError::EmptyCertificate);
        }
        for e in &self.edges {
            if !g.has_arrow(e.origin.as_str(), e.target.as_str()) {
                return Err(CertificateError::EdgeNotInGraph {
                    origin: e.origin.clone(),
                    target: e.target.clone(),
                });
            }
        }
        for (i, e) in self.edges.iter().enumerate() {
            let next = &self.edges[(i + 1) % self.edges.len()];
            if e.target != next.origin {
                return Err(CertificateError::BrokenChain { at: i });
            }
        }
        let mut seen = Vec::new();
        for e in &self.edges {
            if seen.contains(&e.origin) {
                return Err(CertificateError::RepeatedVertex { vertex: e.origin.clone() });
            }
            seen.push(e.origin.clone());
        }
        Ok(())
    }
}

impl fmt::Display for OrientedCycleCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.edges {
            write!(f, "{} -> ", e.origin)?;
        }
        match self.edges.first() {
            Some(e) => write!(f, "{}", e.origin),
            None => Ok(()),
        }
    }
}

/// An oriented cycle whose support is pairwise adjacent (a clique).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueCycleCert {
    pub cycle: OrientedCycleCert,
    /// Support of the cycle, ascending by declaration order.
    pub support: Vec<VertexId>,
}

impl CliqueCycleCert {
    pub fn revalidate(&self, g: &MixedGraph) -> Result<(), CertificateError> {
        self.cycle.revalidate(g)?;
        let mut support = self.cycle.vertices();
        support.sort_by_key(|v| g.index.get(v.as_str()).copied());
        if support != self.support {
            return Err(CertificateError::SupportMismatch);
        }
        for (i, u) in self.support.iter().enumerate() {
            for v in &self.support[i + 1..] {
                if !g.adjacent(u.as_str(), v.as_str()) {
                    return Err(CertificateError::SupportNotClique {
                        u: u.clone(),
                        v: v.clone(),
                    });
                }
            }
        }
        Ok(())
    }
}

/// Why a certificate failed to check out against a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("certificate is empty")]
    EmptyCertificate,
    #[error("edge [{origin},{target}> is not an oriented edge of the graph")]
    EdgeNotInGraph { origin: VertexId, target: VertexId },
    #[error("cycle breaks at step {at}: target does not meet the next origin")]
    BrokenChain { at: usize },
    #[error("vertex {vertex} repeats in a simple cycle")]
    RepeatedVertex { vertex: VertexId },
    #[error("declared support does not match the cycle's vertices")]
    SupportMismatch,
    #[error("support vertices {u} and {v} are not adjacent")]
    SupportNotClique { u: VertexId, v: VertexId },
    #[error("tower is not a permutation of the vertex set")]
    TowerNotPermutation,
    #[error("tower vertex {vertex} is not a source of its residual graph")]
    TowerVertexNotSource { vertex: VertexId },
    #[error("chain step {at} does not assert the expected relation")]
    BadChainStep { at: usize },
}

/// Result of greedy source elimination: either every vertex was peeled off in
/// order (each one a source of what remained), or the process got stuck and
/// an oriented cycle explains why.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SourceElimination {
    Tower(Vec<VertexId>),
    Cycle(OrientedCycleCert),
}

impl MixedGraph {
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains_vertex(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub(crate) fn vertex_index(&self, name: &str) -> Result<usize, GraphError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex { name: name.to_owned() })
    }

    pub(crate) fn vertex_at(&self, idx: usize) -> &VertexId {
        &self.vertices[idx]
    }

    pub(crate) fn rel_idx(&self, u: usize, v: usize) -> PairRel {
        self.rel[u * self.vertices.len() + v]
    }

    pub(crate) fn adjacent_idx(&self, u: usize, v: usize) -> bool {
        self.rel_idx(u, v) != PairRel::None
    }

    /// True when the vertex at `v` is the origin of at least one oriented
    /// edge.
    pub(crate) fn is_origin_idx(&self, v: usize) -> bool {
        !self.out_adj[v].is_empty()
    }

    /// Origin of the first oriented edge pointing at `v`, if any.
    pub(crate) fn incoming_origin_idx(&self, v: usize) -> Option<usize> {
        self.in_adj[v].first().copied()
    }

    /// True when `u` and `v` are joined by an edge of either kind.
    pub fn adjacent(&self, u: &str, v: &str) -> bool {
        match (self.index.get(u), self.index.get(v)) {
            (Some(&ui), Some(&vi)) => ui != vi && self.adjacent_idx(ui, vi),
            _ => false,
        }
    }

    /// True when `[origin, target>` is an oriented edge of the graph.
    pub fn has_arrow(&self, origin: &str, target: &str) -> bool {
        match (self.index.get(origin), self.index.get(target)) {
            (Some(&oi), Some(&ti)) => self.rel_idx(oi, ti) == PairRel::DominatedBy,
            _ => false,
        }
    }

    /// The link of `v`: all vertices joined to `v` by an edge of any kind,
    /// in declaration order.
    pub fn link(&self, v: &str) -> Result<Vec<VertexId>, GraphError> {
        let vi = self.vertex_index(v)?;
        Ok(self.und_adj[vi].iter().map(|&u| self.vertices[u].clone()).collect())
    }

    /// The star of `v`: its link together with `v` itself, in declaration
    /// order.
    pub fn star(&self, v: &str) -> Result<Vec<VertexId>, GraphError> {
        let vi = self.vertex_index(v)?;
        let mut idxs = self.und_adj[vi].clone();
        idxs.push(vi);
        idxs.sort_unstable();
        Ok(idxs.into_iter().map(|u| self.vertices[u].clone()).collect())
    }

    /// One relator per edge, in edge declaration order: `u v u^-1 v^-1` for a
    /// plain edge `[u,v]` and `o t o t^-1` for an oriented edge `[o,t>`.
    pub fn relators(&self) -> Vec<Word> {
        self.edges
            .iter()
            .map(|edge| {
                let syl = |v: &VertexId, e: i64| Syllable::new(v.clone(), e).expect("nonzero");
                match edge {
                    Edge::Plain(u, v) => Word::from_syllables(vec![
                        syl(u, 1),
                        syl(v, 1),
                        syl(u, -1),
                        syl(v, -1),
                    ]),
                    Edge::Oriented(e) => Word::from_syllables(vec![
                        syl(&e.origin, 1),
                        syl(&e.target, 1),
                        syl(&e.origin, 1),
                        syl(&e.target, -1),
                    ]),
                }
            })
            .collect()
    }

    /// First oriented edge in declaration order, if any.
    pub fn first_oriented_edge(&self) -> Option<&OrientedEdge> {
        self.edges.iter().find_map(|e| e.as_oriented())
    }

    pub fn oriented_edges(&self) -> impl Iterator<Item = &OrientedEdge> {
        self.edges.iter().filter_map(|e| e.as_oriented())
    }

    /// Searches the oriented edges for a simple directed cycle.
    ///
    /// Depth-first search from each vertex in declaration order, exploring
    /// out-edges in declaration order, so the returned cycle is a
    /// deterministic function of the graph.
    pub fn find_oriented_cycle(&self) -> Option<OrientedCycleCert> {
        self.cycle_among(&vec![true; self.vertices.len()])
    }

    /// Directed-cycle search restricted to `allowed` vertices.
    fn cycle_among(&self, allowed: &[bool]) -> Option<OrientedCycleCert> {
        const WHITE: u8 = 0;
        const GRAY: u8 = 1;
        const BLACK: u8 = 2;
        let n = self.vertices.len();
        let mut color = vec![WHITE; n];
        let mut path: Vec<usize> = Vec::new();

        fn dfs(
            g: &MixedGraph,
            allowed: &[bool],
            color: &mut [u8],
            path: &mut Vec<usize>,
            v: usize,
        ) -> Option<usize> {
            color[v] = GRAY;
            path.push(v);
            for &w in &g.out_adj[v] {
                if !allowed[w] {
                    continue;
                }
                match color[w] {
                    GRAY => return Some(w),
                    WHITE => {
                        if let Some(hit) = dfs(g, allowed, color, path, w) {
                            return Some(hit);
                        }
                    }
                    _ => {}
                }
            }
            color[v] = BLACK;
            path.pop();
            None
        }

        for start in 0..n {
            if allowed[start] && color[start] == WHITE {
                if let Some(hit) = dfs(self, allowed, &mut color, &mut path, start) {
                    let from = path.iter().position(|&v| v == hit).expect("hit on path");
                    let cycle: Vec<usize> = path[from..].to_vec();
                    let edges = cycle
                        .iter()
                        .enumerate()
                        .map(|(i, &o)| OrientedEdge {
                            origin: self.vertices[o].clone(),
                            target: self.vertices[cycle[(i + 1) % cycle.len()]].clone(),
                        })
                        .collect();
                    return Some(OrientedCycleCert { edges });
                }
            }
        }
        None
    }

    /// All maximal cliques of the underlying undirected graph, by
    /// Bron–Kerbosch over vertices in declaration order.
    ///
    /// Every returned set is pairwise adjacent and cannot be extended;
    /// isolated vertices come back as singleton cliques.
    pub fn maximal_cliques(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        let mut r = Vec::new();
        let p: Vec<usize> = (0..n).collect();
        self.bron_kerbosch(&mut r, p, Vec::new(), &mut out);
        out.into_iter()
            .map(|c| c.into_iter().map(|i| self.vertices[i].clone()).collect())
            .collect()
    }

    fn bron_kerbosch(
        &self,
        r: &mut Vec<usize>,
        p: Vec<usize>,
        x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        let mut p = p;
        let mut x = x;
        while let Some(&v) = p.first() {
            p.remove(0);
            let next_p: Vec<usize> = p.iter().copied().filter(|&u| self.adjacent_idx(v, u)).collect();
            let next_x: Vec<usize> = x.iter().copied().filter(|&u| self.adjacent_idx(v, u)).collect();
            r.push(v);
            self.bron_kerbosch(r, next_p, next_x, out);
            r.pop();
            x.push(v);
        }
    }

    /// Searches for an oriented cycle supported on a complete subgraph.
    ///
    /// Any such cycle lies inside some maximal clique of the underlying
    /// undirected graph, so it suffices to run the directed-cycle search in
    /// each maximal clique's induced oriented subgraph.
    pub fn find_clique_supported_cycle(&self) -> Option<CliqueCycleCert> {
        let n = self.vertices.len();
        let mut cliques = Vec::new();
        let mut r = Vec::new();
        self.bron_kerbosch(&mut r, (0..n).collect(), Vec::new(), &mut cliques);
        for clique in cliques {
            let mut allowed = vec![false; n];
            for &v in &clique {
                allowed[v] = true;
            }
            if let Some(cycle) = self.cycle_among(&allowed) {
                let mut support = cycle.vertices();
                support.sort_by_key(|v| self.index[v.as_str()]);
                return Some(CliqueCycleCert { cycle, support });
            }
        }
        None
    }

    /// True when every oriented edge at `v` has `v` as its origin.
    pub fn is_source(&self, v: &str) -> Result<bool, GraphError> {
        let vi = self.vertex_index(v)?;
        Ok(self.in_adj[vi].is_empty())
    }

    fn is_source_among(&self, v: usize, alive: &[bool]) -> bool {
        self.in_adj[v].iter().all(|&u| !alive[u])
    }

    /// Greedily peels off sources (ties broken by declaration order).
    ///
    /// If the whole vertex set is consumed this yields a tower ordering
    /// `v_1, ..., v_k` with each `v_i` a source of the graph induced on
    /// `{v_i, ..., v_k}`. Otherwise every remaining vertex has an incoming
    /// oriented edge; following those backwards until a vertex repeats
    /// produces an oriented cycle, which is returned instead.
    pub fn source_elimination_order(&self) -> SourceElimination {
        let n = self.vertices.len();
        let mut alive = vec![true; n];
        let mut tower = Vec::with_capacity(n);
        while tower.len() < n {
            let next = (0..n).find(|&v| alive[v] && self.is_source_among(v, &alive));
            match next {
                Some(v) => {
                    alive[v] = false;
                    tower.push(self.vertices[v].clone());
                }
                None => {
                    return SourceElimination::Cycle(self.cycle_by_backtracking(&alive));
                }
            }
        }
        SourceElimination::Tower(tower)
    }

    /// Walks incoming oriented edges backwards from the first live vertex
    /// until a vertex repeats; the repeated segment, reversed, is an
    /// oriented cycle.
    fn cycle_by_backtracking(&self, alive: &[bool]) -> OrientedCycleCert {
        let n = self.vertices.len();
        let start = (0..n).find(|&v| alive[v]).expect("a live vertex");
        let mut walk = vec![start];
        let mut seen_at = vec![usize::MAX; n];
        seen_at[start] = 0;
        loop {
            let cur = *walk.last().expect("nonempty walk");
            let pred = *self.in_adj[cur]
                .iter()
                .find(|&&u| alive[u])
                .expect("no live vertex is a source here");
            if seen_at[pred] != usize::MAX {
                // walk[seen_at[pred]..] reversed is a forward cycle from pred.
                let segment: Vec<usize> = walk[seen_at[pred]..].iter().rev().copied().collect();
                let edges = segment
                    .iter()
                    .enumerate()
                    .map(|(i, &o)| OrientedEdge {
                        origin: self.vertices[o].clone(),
                        target: self.vertices[segment[(i + 1) % segment.len()]].clone(),
                    })
                    .collect();
                return OrientedCycleCert { edges };
            }
            seen_at[pred] = walk.len();
            walk.push(pred);
        }
    }

    /// The full (induced) subgraph spanned by `keep`: those vertices in their
    /// original declaration order, with every edge of the graph joining two
    /// of them.
    pub fn full_subgraph<'a, I>(&self, keep: I) -> Result<MixedGraph, GraphError>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut mask = vec![false; self.vertices.len()];
        for name in keep {
            mask[self.vertex_index(name)?] = true;
        }
        let mut b = GraphBuilder::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if mask[i] {
                b.vertex(v.as_str())?;
            }
        }
        for edge in &self.edges {
            let (u, v) = edge.endpoints();
            let ui = self.index[u.as_str()];
            let vi = self.index[v.as_str()];
            if mask[ui] && mask[vi] {
                match edge {
                    Edge::Plain(..) => b.plain_edge(u.as_str(), v.as_str())?,
                    Edge::Oriented(e) => b.arrow(e.origin.as_str(), e.target.as_str())?,
                }
            }
        }
        b.finish()
    }
}
