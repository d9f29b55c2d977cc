//! Exact arithmetic and left-orders in Klein-bottle subgroups.
//!
//! Every oriented edge `[b,a>` spans a subgroup isomorphic to
//! `K = <a, b | a b a^-1 = b^-1>`, and every element of `K` is `a^n b^m` for
//! unique integers `(n, m)`. The four sign choices `(epsilon, mu)` give the
//! four positive cones
//! `P = { a^(eps n) b^(mu m) : n >= 1 } u { b^(mu m) : m >= 1 }`,
//! and each cone induces a left-order by `x < y iff x^-1 y in P`. In all
//! four orders the `b`-axis sits below every positive power of the
//! dominating generator, which is the inequality the non-orderability
//! certificates lean on.
//!
//! Comparisons never materialize words: they stay in coordinates, using
//! 128-bit intermediates so they are exact for every 64-bit input.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{MixedGraph, VertexId};
use crate::rewrite::{pull_generator_front, RewriteError};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KleinError {
    #[error("no oriented edge [{origin},{target}> in the graph")]
    NotAnOrientedEdge { origin: String, target: String },
    #[error("generator `{name}` is not one of the context's two vertices")]
    ForeignGenerator { name: String },
    #[error("coordinate arithmetic overflowed 64-bit range")]
    ExponentOverflow,
}

/// A sign, `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => f.write_str("+1"),
            Sign::Minus => f.write_str("-1"),
        }
    }
}

/// Malformed cone syntax; the accepted form is `+1,+1` (signs optional on
/// `1`).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad cone `{text}`: expected `+1,+1`, `+1,-1`, `-1,+1`, or `-1,-1`")]
pub struct ConeParseError {
    pub text: String,
}

/// Parameters `(epsilon, mu)` selecting one of the four positive cones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cone {
    pub epsilon: Sign,
    pub mu: Sign,
}

impl Cone {
    pub const ALL: [Cone; 4] = [
        Cone { epsilon: Sign::Plus, mu: Sign::Plus },
        Cone { epsilon: Sign::Plus, mu: Sign::Minus },
        Cone { epsilon: Sign::Minus, mu: Sign::Plus },
        Cone { epsilon: Sign::Minus, mu: Sign::Minus },
    ];
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.epsilon, self.mu)
    }
}

impl FromStr for Cone {
    type Err = ConeParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ConeParseError { text: s.to_owned() };
        let (e, m) = s.split_once(',').ok_or_else(err)?;
        let sign = |t: &str| match t.trim() {
            "+1" | "1" => Ok(Sign::Plus),
            "-1" => Ok(Sign::Minus),
            _ => Err(err()),
        };
        Ok(Cone { epsilon: sign(e)?, mu: sign(m)? })
    }
}

/// Coordinates `(n, m)` of the element `a^n b^m`; `(0, 0)` is the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KleinCoords {
    pub n: i64,
    pub m: i64,
}

impl KleinCoords {
    pub fn new(n: i64, m: i64) -> Self {
        KleinCoords { n, m }
    }

    pub fn identity() -> Self {
        KleinCoords { n: 0, m: 0 }
    }

    pub fn is_identity(&self) -> bool {
        self.n == 0 && self.m == 0
    }

    /// Group multiplication: `(n1, m1) * (n2, m2) = (n1 + n2, (-1)^n2 m1 + m2)`,
    /// from shuffling `b^m1` across `a^n2`.
    pub fn multiply(&self, rhs: &KleinCoords) -> Result<KleinCoords, KleinError> {
        let overflow = KleinError::ExponentOverflow;
        let n = self.n.checked_add(rhs.n).ok_or(overflow.clone())?;
        let carried = if rhs.n & 1 != 0 {
            self.m.checked_neg().ok_or(overflow.clone())?
        } else {
            self.m
        };
        let m = carried.checked_add(rhs.m).ok_or(overflow)?;
        Ok(KleinCoords { n, m })
    }

    /// Group inverse: `(n, m)^-1 = (-n, (-1)^(n+1) m)`.
    pub fn inverse(&self) -> Result<KleinCoords, KleinError> {
        let overflow = KleinError::ExponentOverflow;
        let n = self.n.checked_neg().ok_or(overflow.clone())?;
        let m = if self.n & 1 != 0 {
            self.m
        } else {
            self.m.checked_neg().ok_or(overflow)?
        };
        Ok(KleinCoords { n, m })
    }
}

impl fmt::Display for KleinCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a^{} b^{}", self.n, self.m)
    }
}

/// A Klein-bottle subgroup inside an ambient graph, anchored at one oriented
/// edge. The edge's target plays `a` (the dominator) and its origin plays
/// `b`; the roles are fixed by the orientation and cannot be overridden.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KleinContext {
    dominator: VertexId,
    dominated: VertexId,
}

impl KleinContext {
    /// Anchors a context at the oriented edge `[origin, target>`.
    pub fn from_edge(g: &MixedGraph, origin: &str, target: &str) -> Result<Self, KleinError> {
        if !g.has_arrow(origin, target) {
            return Err(KleinError::NotAnOrientedEdge {
                origin: origin.to_owned(),
                target: target.to_owned(),
            });
        }
        Ok(KleinContext {
            dominator: VertexId::new(target).expect("graph vertices are valid"),
            dominated: VertexId::new(origin).expect("graph vertices are valid"),
        })
    }

    /// The generator playing `a` (the edge's target).
    pub fn dominator(&self) -> &VertexId {
        &self.dominator
    }

    /// The generator playing `b` (the edge's origin).
    pub fn dominated(&self) -> &VertexId {
        &self.dominated
    }
}

/// Coordinates of a word over the context's two generators: the unique
/// `(n, m)` with `w = a^n b^m`, computed by pulling the dominator to the
/// front.
pub fn klein_coords(
    g: &MixedGraph,
    ctx: &KleinContext,
    w: &Word,
) -> Result<KleinCoords, KleinError> {
    for syl in w.syllables() {
        let name = syl.generator().as_str();
        if name != ctx.dominator.as_str() && name != ctx.dominated.as_str() {
            return Err(KleinError::ForeignGenerator { name: name.to_owned() });
        }
    }
    let (n, rest) = pull_generator_front(g, w, ctx.dominator.as_str()).map_err(|e| match e {
        RewriteError::ExponentOverflow => KleinError::ExponentOverflow,
        other => unreachable!("generators were validated: {other}"),
    })?;
    let m = match rest.syllables() {
        [] => 0,
        [syl] => syl.exponent(),
        _ => unreachable!("a reduced one-generator word has at most one syllable"),
    };
    Ok(KleinCoords { n, m })
}

fn contains_wide(cone: Cone, n: i128, m: i128) -> bool {
    let eps = cone.epsilon.value() as i128;
    let mu = cone.mu.value() as i128;
    eps * n >= 1 || (n == 0 && mu * m >= 1)
}

/// Membership of `a^n b^m` in the cone `P_(epsilon, mu)`: positive
/// `epsilon`-direction in `a`, or zero `a`-part and positive `mu`-direction
/// in `b`.
pub fn cone_contains(cone: Cone, x: KleinCoords) -> bool {
    contains_wide(cone, x.n as i128, x.m as i128)
}

/// The left-order induced by the cone: `x < y iff x^-1 y` lies in the cone.
///
/// Exact for all 64-bit coordinates; the difference is computed in 128 bits.
pub fn klein_compare(cone: Cone, x: KleinCoords, y: KleinCoords) -> Ordering {
    if x == y {
        return Ordering::Equal;
    }
    // x^-1 = (-n, (-1)^(n+1) m), then multiply by y, all in 128-bit.
    let inv_m: i128 = if x.n & 1 != 0 { x.m as i128 } else { -(x.m as i128) };
    let n = y.n as i128 - x.n as i128;
    let m = if y.n & 1 != 0 { -inv_m } else { inv_m } + y.m as i128;
    if contains_wide(cone, n, m) {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// First counterexample found while verifying the positive-cone axioms, if
/// any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeViolation {
    /// A nonzero point where membership of `x` and `x^-1` is not exclusive.
    Trichotomy { point: KleinCoords },
    /// Two members whose product stayed in the box but left the cone.
    Closure { x: KleinCoords, y: KleinCoords },
}

/// Outcome of the exhaustive cone-axiom check over a coordinate box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeAxiomReport {
    pub cone: Cone,
    pub bound: i64,
    pub trichotomy_checks: u64,
    pub closure_checks: u64,
    pub violation: Option<ConeViolation>,
}

impl ConeAxiomReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

impl fmt::Display for ConeAxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(
                f,
                "cone {}: pass ({} trichotomy checks, {} closure checks, bound {})",
                self.cone, self.trichotomy_checks, self.closure_checks, self.bound
            ),
            Some(ConeViolation::Trichotomy { point }) => {
                write!(f, "cone {}: trichotomy fails at {point}", self.cone)
            }
            Some(ConeViolation::Closure { x, y }) => {
                write!(f, "cone {}: closure fails at {x} * {y}", self.cone)
            }
        }
    }
}

/// Exhaustively checks, over all coordinates with `|n|, |m| <= bound`, that
/// exactly one of `x`, `x^-1` is in the cone (for `x != 1`), and that the
/// product of two members staying inside the box remains a member. Stops at
/// the first counterexample.
pub fn verify_cone_axioms(cone: Cone, bound: i64) -> ConeAxiomReport {
    let mut report = ConeAxiomReport {
        cone,
        bound,
        trichotomy_checks: 0,
        closure_checks: 0,
        violation: None,
    };
    let mut members = Vec::new();
    for n in -bound..=bound {
        for m in -bound..=bound {
            let x = KleinCoords { n, m };
            let inside = cone_contains(cone, x);
            if inside {
                members.push(x);
            }
            if x.is_identity() {
                continue;
            }
            report.trichotomy_checks += 1;
            let inv = x.inverse().expect("box coordinates are small");
            if inside == cone_contains(cone, inv) {
                report.violation = Some(ConeViolation::Trichotomy { point: x });
                return report;
            }
        }
    }
    for &x in &members {
        for &y in &members {
            let prod = x.multiply(&y).expect("box coordinates are small");
            if prod.n.abs() <= bound && prod.m.abs() <= bound {
                report.closure_checks += 1;
                if !cone_contains(cone, prod) {
                    report.violation = Some(ConeViolation::Closure { x, y });
                    return report;
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, Decl};

    fn klein_graph() -> MixedGraph {
        build_graph(&[
            Decl::Vertex("a".into()),
            Decl::Vertex("b".into()),
            Decl::Arrow { origin: "b".into(), target: "a".into() },
        ])
        .unwrap()
    }

    fn ctx(g: &MixedGraph) -> KleinContext {
        KleinContext::from_edge(g, "b", "a").unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    const PP: Cone = Cone { epsilon: Sign::Plus, mu: Sign::Plus };
    const MM: Cone = Cone { epsilon: Sign::Minus, mu: Sign::Minus };
    const MP: Cone = Cone { epsilon: Sign::Minus, mu: Sign::Plus };

    #[test]
    fn context_requires_the_oriented_edge() {
        let g = klein_graph();
        let c = ctx(&g);
        assert_eq!(c.dominator().as_str(), "a");
        assert_eq!(c.dominated().as_str(), "b");
        assert!(matches!(
            KleinContext::from_edge(&g, "a", "b"),
            Err(KleinError::NotAnOrientedEdge { .. })
        ));
    }

    #[test]
    fn coords_from_words() {
        let g = klein_graph();
        let c = ctx(&g);
        assert_eq!(klein_coords(&g, &c, &w("b a")).unwrap(), KleinCoords::new(1, -1));
        assert_eq!(
            klein_coords(&g, &c, &w("a^2 b^3 a^-1")).unwrap(),
            KleinCoords::new(1, -3)
        );
        assert_eq!(klein_coords(&g, &c, &w("1")).unwrap(), KleinCoords::identity());
        let g2 = build_graph(&[
            Decl::Vertex("a".into()),
            Decl::Vertex("b".into()),
            Decl::Vertex("c".into()),
            Decl::Arrow { origin: "b".into(), target: "a".into() },
        ])
        .unwrap();
        let c2 = KleinContext::from_edge(&g2, "b", "a").unwrap();
        assert_eq!(
            klein_coords(&g2, &c2, &w("c")).unwrap_err(),
            KleinError::ForeignGenerator { name: "c".into() }
        );
    }

    #[test]
    fn multiplication_and_inverse_formulas() {
        let mul = |x: (i64, i64), y: (i64, i64)| {
            KleinCoords::new(x.0, x.1)
                .multiply(&KleinCoords::new(y.0, y.1))
                .unwrap()
        };
        assert_eq!(mul((0, 1), (0, 1)), KleinCoords::new(0, 2));
        assert_eq!(mul((0, 1), (1, 0)), KleinCoords::new(1, -1));
        assert_eq!(mul((2, 3), (-2, -3)), KleinCoords::identity());

        assert_eq!(KleinCoords::new(0, 5).inverse().unwrap(), KleinCoords::new(0, -5));
        assert_eq!(KleinCoords::new(1, -1).inverse().unwrap(), KleinCoords::new(-1, -1));
        let x = KleinCoords::new(2, 3);
        assert_eq!(x.inverse().unwrap(), KleinCoords::new(-2, -3));
        assert_eq!(x.multiply(&x.inverse().unwrap()).unwrap(), KleinCoords::identity());
    }

    #[test]
    fn cone_membership_cases() {
        assert!(cone_contains(PP, KleinCoords::new(1, -3)));
        assert!(!cone_contains(PP, KleinCoords::new(0, -2)));
        assert!(cone_contains(MP, KleinCoords::new(-2, 7)));
    }

    #[test]
    fn comparator_on_the_fiber_and_across() {
        assert_eq!(
            klein_compare(PP, KleinCoords::identity(), KleinCoords::new(0, 1)),
            Ordering::Less
        );
        assert_eq!(
            klein_compare(PP, KleinCoords::new(0, 1_000_000), KleinCoords::new(1, 0)),
            Ordering::Less
        );
        assert_eq!(
            klein_compare(MM, KleinCoords::new(1, 5), KleinCoords::new(1, 5)),
            Ordering::Equal
        );
    }

    #[test]
    fn axiom_sweeps_pass() {
        assert!(verify_cone_axioms(PP, 20).passed());
        assert!(verify_cone_axioms(MM, 20).passed());
        let degenerate = verify_cone_axioms(PP, 1);
        assert!(degenerate.passed());
        assert_eq!(degenerate.trichotomy_checks, 8);
    }

    #[test]
    fn the_four_cones_are_distinct() {
        let box2: Vec<KleinCoords> = (-2..=2)
            .flat_map(|n| (-2..=2).map(move |m| KleinCoords::new(n, m)))
            .collect();
        for (i, &c1) in Cone::ALL.iter().enumerate() {
            for &c2 in &Cone::ALL[i + 1..] {
                assert!(
                    box2.iter().any(|&x| cone_contains(c1, x) != cone_contains(c2, x)),
                    "{c1} and {c2} agree on the whole box"
                );
            }
        }
    }

    #[test]
    fn cone_parsing() {
        assert_eq!("+1,+1".parse::<Cone>().unwrap(), PP);
        assert_eq!("-1,-1".parse::<Cone>().unwrap(), MM);
        assert_eq!("1,1".parse::<Cone>().unwrap(), PP);
        assert!("2,1".parse::<Cone>().is_err());
        assert!("+1".parse::<Cone>().is_err());
        assert_eq!(PP.to_string(), "+1,+1");
    }
}
