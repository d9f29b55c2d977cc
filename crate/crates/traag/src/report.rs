//! Deterministic rendering of classification results.
//!
//! The same input always produces byte-identical output: certificate order
//! is fixed by the classifier, vertex order by declaration, and the JSON
//! form has a fixed key order and no floating point.

use std::fmt::Write as _;

use crate::decide::{Certificate, Classification, NonOrderabilityChain, TorsionWitness};
use crate::graph::VertexId;

fn names(vs: &[VertexId]) -> String {
    vs.iter().map(VertexId::as_str).collect::<Vec<_>>().join(", ")
}

/// Human-readable classification report.
pub fn render_classification(c: &Classification) -> String {
    let mut out = String::new();

    let torsion_detail = c.certificates.iter().find_map(|cert| match cert {
        Certificate::CliqueCycle { cert, witness } => Some(match witness {
            TorsionWitness::Found { word, order } => format!(
                "torsion witness: ({word})^{order} = 1 on clique {{{}}}",
                names(&cert.support)
            ),
            TorsionWitness::ProbeExhausted { word, k_max } => format!(
                "clique-supported cycle on {{{}}}; ({word})^k nontrivial for k <= {k_max}",
                names(&cert.support)
            ),
        }),
        _ => None,
    });
    match torsion_detail {
        None => out.push_str("torsion-free: yes\n"),
        Some(detail) => {
            let _ = writeln!(out, "torsion-free: no ({detail})");
        }
    }

    if c.left_orderable {
        let tower = c.certificates.iter().find_map(|cert| match cert {
            Certificate::PolyFreeTower { vertices } => Some(names(vertices)),
            _ => None,
        });
        match tower {
            Some(t) => {
                let _ = writeln!(out, "left-orderable: yes (tower: {t})");
            }
            None => out.push_str("left-orderable: yes\n"),
        }
    } else {
        let cycle = c.certificates.iter().find_map(|cert| match cert {
            Certificate::OrientedCycle(cycle) => Some(cycle.to_string()),
            _ => None,
        });
        match cycle {
            Some(cy) => {
                let _ = writeln!(out, "left-orderable: no (oriented cycle: {cy})");
            }
            None => out.push_str("left-orderable: no\n"),
        }
    }

    if c.bi_orderable {
        out.push_str("bi-orderable: yes\n");
    } else {
        let edge = c.certificates.iter().find_map(|cert| match cert {
            Certificate::OrientedEdge(e) => Some(format!("{} -> {}", e.origin, e.target)),
            _ => None,
        });
        match edge {
            Some(e) => {
                let _ = writeln!(out, "bi-orderable: no (oriented edge: {e})");
            }
            None => out.push_str("bi-orderable: no\n"),
        }
    }

    if let Some(chain) = c.certificates.iter().find_map(|cert| match cert {
        Certificate::NonOrderabilityChain(chain) => Some(chain),
        _ => None,
    }) {
        out.push_str("non-orderability chain:\n");
        out.push_str(&render_chain_steps(chain));
    }

    out
}

fn render_chain_steps(chain: &NonOrderabilityChain) -> String {
    let mut out = String::new();
    for step in &chain.steps {
        let o = &step.origin;
        let t = &step.target;
        let _ = writeln!(
            out,
            "  step {}: {}, so max({o}, {o}^-1) < max({t}, {t}^-1)",
            step.index, step.relation
        );
    }
    if let Some(first) = chain.steps.first() {
        let x = &first.origin;
        let _ = writeln!(out, "  contradiction: max({x}, {x}^-1) < max({x}, {x}^-1)");
    }
    out
}

/// The chain on its own, as printed by `certify nonorderable`.
pub fn render_chain(chain: &NonOrderabilityChain) -> String {
    let mut out = String::new();
    for step in &chain.steps {
        let o = &step.origin;
        let t = &step.target;
        let _ = writeln!(
            out,
            "step {}: {}, so max({o}, {o}^-1) < max({t}, {t}^-1)",
            step.index, step.relation
        );
    }
    if let Some(first) = chain.steps.first() {
        let x = &first.origin;
        let _ = writeln!(out, "contradiction: max({x}, {x}^-1) < max({x}, {x}^-1)");
    }
    out
}

/// Compact JSON with fixed key order:
/// `torsion_free`, `left_orderable`, `bi_orderable`, `certificates`.
pub fn classification_json(c: &Classification) -> String {
    serde_json::to_string(c).expect("classification serializes")
}
