//! Decomposition of a planar instance into base pieces glued by free products
//! and amalgams over Z₂.
//!
//! Start from the components of Γ₌₂ and attach the vertices of order > 2 one
//! at a time in ascending id order. A new vertex v has a link that is empty,
//! a single vertex v₁, or two non-adjacent vertices v₁ < v₂ in different
//! components, and accordingly becomes a free factor, an amalgam along v₁, or
//! a spoke path amalgamated along both v₁ and v₂.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decider::{decide, simple_graph, Verdict};
use crate::graph_model::ProductGraph;
use crate::planarity::is_outerplanar;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PlanNode {
    FreeProduct { children: Vec<PlanNode> },
    AmalgamOverZ2 { vertex: String, left: Box<PlanNode>, right: Box<PlanNode> },
    OuterplanarZ2Graph { vertices: Vec<String> },
    IsolatedVertex { vertex: String },
    SpokePath { hub: String, spokes: Vec<String> },
}

impl PlanNode {
    /// Every vertex id mentioned in the subtree.
    pub fn vertex_set(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut BTreeSet<String>) {
        match self {
            PlanNode::FreeProduct { children } => children.iter().for_each(|c| c.collect(out)),
            PlanNode::AmalgamOverZ2 { left, right, .. } => {
                left.collect(out);
                right.collect(out);
            }
            PlanNode::OuterplanarZ2Graph { vertices } => out.extend(vertices.iter().cloned()),
            PlanNode::IsolatedVertex { vertex } => {
                out.insert(vertex.clone());
            }
            PlanNode::SpokePath { hub, spokes } => {
                out.insert(hub.clone());
                out.extend(spokes.iter().cloned());
            }
        }
    }

    pub fn leaves(&self) -> Vec<&PlanNode> {
        match self {
            PlanNode::FreeProduct { children } => children.iter().flat_map(PlanNode::leaves).collect(),
            PlanNode::AmalgamOverZ2 { left, right, .. } => {
                let mut l = left.leaves();
                l.extend(right.leaves());
                l
            }
            leaf => vec![leaf],
        }
    }

    fn outline(&self, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        match self {
            PlanNode::FreeProduct { children } => {
                let _ = writeln!(out, "{pad}free product");
                children.iter().for_each(|c| c.outline(depth + 1, out));
            }
            PlanNode::AmalgamOverZ2 { vertex, left, right } => {
                let _ = writeln!(out, "{pad}amalgam over Z2 at {vertex}");
                left.outline(depth + 1, out);
                right.outline(depth + 1, out);
            }
            PlanNode::OuterplanarZ2Graph { vertices } => {
                let _ = writeln!(out, "{pad}outerplanar Z2 graph {{{}}}", vertices.join(", "));
            }
            PlanNode::IsolatedVertex { vertex } => {
                let _ = writeln!(out, "{pad}isolated vertex {vertex}");
            }
            PlanNode::SpokePath { hub, spokes } => {
                let _ = writeln!(out, "{pad}spoke path {hub}: {}", spokes.join(", "));
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DecompositionPlan {
    pub root: PlanNode,
}

impl DecompositionPlan {
    pub fn leaf_count(&self) -> usize {
        self.root.leaves().len()
    }

    /// The plan tree as a DOT graph, internal nodes boxed.
    pub fn to_dot(&self) -> String {
        fn walk(node: &PlanNode, next: &mut usize, out: &mut String) -> usize {
            let me = *next;
            *next += 1;
            let (label, shape, children): (String, &str, Vec<&PlanNode>) = match node {
                PlanNode::FreeProduct { children } => ("free product".into(), "box", children.iter().collect()),
                PlanNode::AmalgamOverZ2 { vertex, left, right } => {
                    (format!("amalgam at {vertex}"), "box", vec![&**left, &**right])
                }
                PlanNode::OuterplanarZ2Graph { vertices } => (format!("Z2 graph {{{}}}", vertices.join(", ")), "ellipse", vec![]),
                PlanNode::IsolatedVertex { vertex } => (format!("vertex {vertex}"), "ellipse", vec![]),
                PlanNode::SpokePath { hub, spokes } => (format!("spokes {hub}: {}", spokes.join(", ")), "ellipse", vec![]),
            };
            let _ = writeln!(out, "  n{me} [label=\"{label}\", shape={shape}];");
            for c in children {
                let k = walk(c, next, out);
                let _ = writeln!(out, "  n{me} -> n{k};");
            }
            me
        }
        let mut out = String::from("digraph plan {\n");
        walk(&self.root, &mut 0, &mut out);
        out.push_str("}\n");
        out
    }

    /// Indented text outline, one node per line.
    pub fn outline(&self) -> String {
        let mut out = String::new();
        self.root.outline(0, &mut out);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanError {
    #[error("the Cayley graph is not planar")]
    NonPlanar(Verdict),
    #[error("the graph has no vertices")]
    Empty,
    #[error("link vertices {0} and {1} share a component")]
    SharedComponent(String, String),
}

fn amalgam(x: &str, left: PlanNode, right: PlanNode) -> PlanNode {
    let trivial = |n: &PlanNode| matches!(n, PlanNode::IsolatedVertex { vertex } if vertex == x);
    if trivial(&left) {
        right
    } else if trivial(&right) {
        left
    } else {
        PlanNode::AmalgamOverZ2 { vertex: x.to_owned(), left: Box::new(left), right: Box::new(right) }
    }
}

pub fn plan(g: &ProductGraph) -> Result<DecompositionPlan, PlanError> {
    if g.is_empty() {
        return Err(PlanError::Empty);
    }
    let verdict = decide(g);
    if !verdict.planar {
        return Err(PlanError::NonPlanar(verdict));
    }
    let id = |v: usize| g.id(v).to_owned();
    // component slots: (smallest vertex index, plan), merged slots become None
    let mut slots: Vec<Option<(usize, PlanNode)>> = Vec::new();
    let mut slot_of = vec![usize::MAX; g.len()];
    let (two, _) = g.split_by_order();
    for comp in two.component_indices() {
        let members: Vec<usize> = comp.iter().map(|&i| g.index_of(two.id(i)).unwrap()).collect();
        let node = if members.len() == 1 {
            PlanNode::IsolatedVertex { vertex: id(members[0]) }
        } else {
            PlanNode::OuterplanarZ2Graph { vertices: members.iter().map(|&v| id(v)).collect() }
        };
        for &v in &members {
            slot_of[v] = slots.len();
        }
        slots.push(Some((*members.iter().min().unwrap(), node)));
    }
    for v in (0..g.len()).filter(|&v| g.order(v) > 2) {
        let take = |slots: &mut Vec<Option<(usize, PlanNode)>>, s: usize| slots[s].take().unwrap();
        let (min, node, absorbed) = match *g.neighbors(v) {
            [] => (v, PlanNode::IsolatedVertex { vertex: id(v) }, vec![]),
            [v1] => {
                let s = slot_of[v1];
                let (m, p) = take(&mut slots, s);
                let spoke = PlanNode::SpokePath { hub: id(v), spokes: vec![id(v1)] };
                (m.min(v), amalgam(g.id(v1), p, spoke), vec![s])
            }
            [v1, v2] => {
                let (s1, s2) = (slot_of[v1], slot_of[v2]);
                if s1 == s2 {
                    return Err(PlanError::SharedComponent(id(v1), id(v2)));
                }
                let (m1, p1) = take(&mut slots, s1);
                let (m2, p2) = take(&mut slots, s2);
                let spoke = PlanNode::SpokePath { hub: id(v), spokes: vec![id(v1), id(v2)] };
                let inner = amalgam(g.id(v2), spoke, p2);
                (m1.min(m2).min(v), amalgam(g.id(v1), p1, inner), vec![s1, s2])
            }
            _ => unreachable!("condition III holds"),
        };
        let s = slots.len();
        slots.push(Some((min, node)));
        slot_of[v] = s;
        for x in slot_of.iter_mut() {
            if absorbed.contains(x) {
                *x = s;
            }
        }
    }
    let mut parts: Vec<(usize, PlanNode)> = slots.into_iter().flatten().collect();
    parts.sort_by_key(|(m, _)| *m);
    let root = if parts.len() == 1 {
        parts.pop().unwrap().1
    } else {
        PlanNode::FreeProduct { children: parts.into_iter().map(|(_, p)| p).collect() }
    };
    Ok(DecompositionPlan { root })
}

fn index_set(g: &ProductGraph, ids: &BTreeSet<String>) -> Option<Vec<usize>> {
    ids.iter().map(|s| g.index_of(s)).collect()
}

fn no_edges_between(g: &ProductGraph, a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|&x| b.iter().all(|&y| x == y || !g.adjacent(x, y)))
}

fn node_is_valid(g: &ProductGraph, node: &PlanNode) -> bool {
    match node {
        PlanNode::FreeProduct { children } => {
            if children.is_empty() || !children.iter().all(|c| node_is_valid(g, c)) {
                return false;
            }
            let sets: Vec<Option<Vec<usize>>> = children.iter().map(|c| index_set(g, &c.vertex_set())).collect();
            let Some(sets) = sets.into_iter().collect::<Option<Vec<_>>>() else {
                return false;
            };
            for i in 0..sets.len() {
                for j in i + 1..sets.len() {
                    if sets[i].iter().any(|x| sets[j].contains(x)) || !no_edges_between(g, &sets[i], &sets[j]) {
                        return false;
                    }
                }
            }
            true
        }
        PlanNode::AmalgamOverZ2 { vertex, left, right } => {
            let Some(x) = g.index_of(vertex) else {
                return false;
            };
            let (l, r) = (left.vertex_set(), right.vertex_set());
            let shared: Vec<&String> = l.intersection(&r).collect();
            let (Some(mut li), Some(mut ri)) = (index_set(g, &l), index_set(g, &r)) else {
                return false;
            };
            li.retain(|&v| v != x);
            ri.retain(|&v| v != x);
            g.order(x) == 2
                && shared == [vertex]
                && no_edges_between(g, &li, &ri)
                && node_is_valid(g, left)
                && node_is_valid(g, right)
        }
        PlanNode::OuterplanarZ2Graph { vertices } => {
            let set: BTreeSet<String> = vertices.iter().cloned().collect();
            if set.is_empty() || set.len() != vertices.len() {
                return false;
            }
            let Some(idx) = index_set(g, &set) else {
                return false;
            };
            if idx.iter().any(|&v| g.order(v) != 2) {
                return false;
            }
            let (sub, _) = g.induced_by_indices(&idx);
            is_outerplanar(&simple_graph(&sub))
        }
        PlanNode::IsolatedVertex { vertex } => g.index_of(vertex).is_some(),
        PlanNode::SpokePath { hub, spokes } => {
            let Some(h) = g.index_of(hub) else {
                return false;
            };
            let Some(s) = spokes.iter().map(|x| g.index_of(x)).collect::<Option<Vec<usize>>>() else {
                return false;
            };
            let spokes_ok = s.iter().all(|&x| x != h && g.order(x) == 2 && g.adjacent(h, x));
            spokes_ok
                && match s[..] {
                    [_] => true,
                    [a, b] => a != b && !g.adjacent(a, b),
                    _ => false,
                }
        }
    }
}

/// Checks the plan against `g`: every leaf satisfies its base predicate,
/// free factors are disjoint and unlinked, amalgams overlap in exactly one
/// order-2 vertex, and the leaves cover every vertex and edge of `g`.
pub fn validate_plan(g: &ProductGraph, p: &DecompositionPlan) -> bool {
    if !node_is_valid(g, &p.root) {
        return false;
    }
    let all = p.root.vertex_set();
    if all.len() != g.len() || all.iter().any(|s| g.index_of(s).is_none()) {
        return false;
    }
    let leaf_sets: Vec<Vec<usize>> =
        p.root.leaves().iter().filter_map(|l| index_set(g, &l.vertex_set())).collect();
    g.edges().all(|(a, b)| leaf_sets.iter().any(|s| s.contains(&a) && s.contains(&b)))
}
