//! Decision procedure for planarity of Cay(G(Γ)), Γ a graph product graph of
//! finite cyclic groups.
//!
//! The Cayley graph is planar exactly when
//!
//! * (I) Γ₌₂ is outerplanar,
//! * (II) Γ₍>₂₎ has no edges,
//! * (III) every vertex of order > 2 has a link that is empty, a single
//!   vertex, or two non-adjacent vertices,
//! * (IV) every induced cycle of Γ lies in Γ₌₂.
//!
//! All four conditions are always evaluated so the verdict carries the full
//! list of violations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph_model::{GraphCertificate, ProductGraph};
use crate::planarity::{outerplanar_obstruction, SimpleGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Condition {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A failed condition and the vertices that witness the failure:
///
/// * I: every vertex of a K4 or K2,3 subdivision in Γ₌₂ (also given as a
///   full `certificate`),
/// * II: the two ends of an edge of Γ₍>₂₎,
/// * III: the vertex followed by its link,
/// * IV: an induced cycle, starting at a vertex of order > 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionViolation {
    pub condition: Condition,
    pub locus: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<GraphCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub planar: bool,
    pub violations: Vec<ConditionViolation>,
}

impl Verdict {
    pub fn violation(&self, c: Condition) -> Option<&ConditionViolation> {
        self.violations.iter().find(|v| v.condition == c)
    }

    pub fn conditions(&self) -> Vec<Condition> {
        self.violations.iter().map(|v| v.condition).collect()
    }
}

/// The product graph as a plain index graph.
pub fn simple_graph(g: &ProductGraph) -> SimpleGraph {
    SimpleGraph::from_edges(g.len(), g.edges())
}

pub fn check_condition_i(g: &ProductGraph) -> Option<ConditionViolation> {
    let (two, _) = g.split_by_order();
    let cert = outerplanar_obstruction(&simple_graph(&two)).ok()?;
    let cert = cert.map(|&v| two.id(v).to_owned());
    let mut locus = cert.vertices();
    locus.sort();
    Some(ConditionViolation { condition: Condition::I, locus, certificate: Some(cert) })
}

pub fn check_condition_ii(g: &ProductGraph) -> Option<ConditionViolation> {
    let (u, w) = g.edges().find(|&(u, w)| g.order(u) > 2 && g.order(w) > 2)?;
    Some(ConditionViolation {
        condition: Condition::II,
        locus: vec![g.id(u).to_owned(), g.id(w).to_owned()],
        certificate: None,
    })
}

fn link_is_admissible(g: &ProductGraph, v: usize) -> bool {
    match g.neighbors(v) {
        [] | [_] => true,
        &[x, y] => !g.adjacent(x, y),
        _ => false,
    }
}

pub fn check_condition_iii(g: &ProductGraph) -> Option<ConditionViolation> {
    let v = (0..g.len()).find(|&v| g.order(v) > 2 && !link_is_admissible(g, v))?;
    let mut locus = vec![g.id(v).to_owned()];
    locus.extend(g.neighbors(v).iter().map(|&w| g.id(w).to_owned()));
    Some(ConditionViolation { condition: Condition::III, locus, certificate: None })
}

pub fn check_condition_iv(g: &ProductGraph) -> Option<ConditionViolation> {
    let cycle = (0..g.len()).filter(|&v| g.order(v) > 2).find_map(|v| g.induced_cycle_indices(v))?;
    Some(ConditionViolation {
        condition: Condition::IV,
        locus: cycle.into_iter().map(|v| g.id(v).to_owned()).collect(),
        certificate: None,
    })
}

pub fn decide(g: &ProductGraph) -> Verdict {
    let violations: Vec<ConditionViolation> =
        [check_condition_i(g), check_condition_ii(g), check_condition_iii(g), check_condition_iv(g)]
            .into_iter()
            .flatten()
            .collect();
    Verdict { planar: violations.is_empty(), violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planarity::verify_certificate;

    fn graph(vertices: &[(&str, u32)], edges: &[(&str, &str)]) -> ProductGraph {
        ProductGraph::new(vertices.iter().copied(), edges.iter().copied()).unwrap()
    }

    fn k4(orders: [u32; 4]) -> ProductGraph {
        let names = ["a", "b", "c", "d"];
        let vs: Vec<_> = names.iter().copied().zip(orders).collect();
        graph(&vs, &[("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")])
    }

    #[test]
    fn condition_i() {
        let v = check_condition_i(&k4([2; 4])).unwrap();
        assert_eq!(v.locus, ["a", "b", "c", "d"]);
        let cert = v.certificate.unwrap();
        let g = k4([2; 4]);
        let idx = cert.map(|id| g.index_of(id).unwrap());
        assert!(verify_certificate(&simple_graph(&g), &idx));

        let fan = graph(
            &[("h", 2), ("p", 2), ("q", 2), ("r", 2)],
            &[("h", "p"), ("h", "q"), ("h", "r"), ("p", "q"), ("q", "r")],
        );
        assert_eq!(check_condition_i(&fan), None);
        // the order-3 vertex is not part of Γ₌₂
        assert_eq!(check_condition_i(&k4([2, 2, 2, 3])), None);
    }

    #[test]
    fn condition_ii() {
        let e = graph(&[("u", 3), ("w", 3)], &[("u", "w")]);
        assert_eq!(check_condition_ii(&e).unwrap().locus, ["u", "w"]);
        assert_eq!(check_condition_ii(&graph(&[("u", 2), ("w", 17)], &[("u", "w")])), None);
        let g = graph(&[("u", 4), ("w", 4), ("x", 2)], &[("u", "w")]);
        assert_eq!(check_condition_ii(&g).unwrap().condition, Condition::II);
    }

    #[test]
    fn condition_iii() {
        let star = graph(&[("v", 3), ("a", 2), ("b", 2), ("c", 2)], &[("v", "a"), ("v", "b"), ("v", "c")]);
        assert_eq!(check_condition_iii(&star).unwrap().locus, ["v", "a", "b", "c"]);
        let tri = graph(&[("v", 3), ("a", 2), ("b", 2)], &[("v", "a"), ("v", "b"), ("a", "b")]);
        assert_eq!(check_condition_iii(&tri).unwrap().locus, ["v", "a", "b"]);
        let path = graph(&[("a", 2), ("v", 4), ("b", 2)], &[("a", "v"), ("v", "b")]);
        assert_eq!(check_condition_iii(&path), None);
    }

    #[test]
    fn condition_iv() {
        let c4 = graph(
            &[("v", 3), ("a", 2), ("b", 2), ("c", 2)],
            &[("v", "a"), ("a", "c"), ("c", "b"), ("b", "v")],
        );
        let viol = check_condition_iv(&c4).unwrap();
        assert_eq!(viol.locus.len(), 4);
        assert!(c4.is_induced_cycle(&viol.locus));
        let c5 = graph(
            &[("a", 2), ("b", 2), ("c", 2), ("d", 2), ("e", 2)],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")],
        );
        assert_eq!(check_condition_iv(&c5), None);
        let tree = graph(&[("a", 5), ("b", 2), ("c", 7), ("d", 2)], &[("a", "b"), ("b", "c"), ("c", "d")]);
        assert_eq!(check_condition_iv(&tree), None);
    }

    #[test]
    fn decide_examples() {
        let e = graph(&[("u", 3), ("w", 3)], &[("u", "w")]);
        let v = decide(&e);
        assert!(!v.planar);
        assert_eq!(v.conditions(), [Condition::II]);

        let path = graph(&[("a", 2), ("v", 4), ("b", 2)], &[("a", "v"), ("v", "b")]);
        assert!(decide(&path).planar);

        // triangle (3,2,2) fails both III and IV
        let tri = graph(&[("v", 3), ("a", 2), ("b", 2)], &[("v", "a"), ("v", "b"), ("a", "b")]);
        assert_eq!(decide(&tri).conditions(), [Condition::III, Condition::IV]);
    }

    #[test]
    fn verdict_json_shape() {
        let star = graph(&[("v", 3), ("a", 2), ("b", 2), ("c", 2)], &[("v", "a"), ("v", "b"), ("v", "c")]);
        let json = serde_json::to_value(decide(&star)).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"planar": false, "violations": [{"condition": "III", "locus": ["v", "a", "b", "c"]}]})
        );
    }
}
